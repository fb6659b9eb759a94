"""Serializable report documents.

JSON keys are emitted in this fixed order::

    schema_version, space, n, betti, cup, zcl, cat, tc, ganea, witnesses, timing_ms

Mathematical fields are exact integers.  Only ``timing_ms`` varies between
runs on identical input.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, fields
from typing import Any

from .bounds import BoundsReport
from .presentation import format_monomial

SCHEMA_VERSION = "1.0"


@dataclass
class ReportDocument:
    schema_version: str
    space: dict[str, Any]
    n: int | None
    betti: list[int]
    cup: dict[str, Any]
    zcl: dict[str, Any]
    cat: dict[str, Any] | None
    tc: dict[str, Any] | None
    ganea: bool
    witnesses: dict[str, str]
    timing_ms: float

    @classmethod
    def from_report(cls, rep: BoundsReport) -> ReportDocument:
        A = rep.algebra
        space = {
            "name": rep.space.name,
            "mode": rep.mode,
            "generators": [f"{g.name}:{g.degree}" for g in rep.space.presentation.generators],
            "cw_dimension": rep.space.cw_dimension,
            "connectivity": rep.space.connectivity,
            "paracompact": rep.space.paracompact,
            "cap": A.cap,
            "cap_sound": A.cap_sound,
            "normalization": rep.normalization,
        }
        cat = tc = None
        if rep.cat_lower is not None:
            cat = {"lower": rep.cat_lower, "upper": rep.cat_upper, "exact": rep.cat_exact}
            tc = {"lower": rep.tc_lower, "upper": rep.tc_upper, "exact": rep.tc_exact}
        return cls(
            schema_version=SCHEMA_VERSION,
            space=space,
            n=rep.space.n,
            betti=list(rep.betti),
            cup={"value": rep.cup.cup_length, "qualifier": rep.cup.qualifier},
            zcl={"lower": rep.zcl.lower, "upper": rep.zcl.upper,
                 "exact": rep.zcl.exact, "qualifier": rep.zcl.qualifier},
            cat=cat,
            tc=tc,
            ganea=rep.ganea,
            witnesses={
                "cup": format_monomial(rep.cup.witness, A.names),
                # multiplicities of the generator zero-divisors 1(x)g - g(x)1
                "zcl": format_monomial(rep.zcl.witness, A.names),
            },
            timing_ms=round(rep.elapsed_ms, 3),
        )

    def to_dict(self) -> dict[str, Any]:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> ReportDocument:
        return cls(**{f.name: data[f.name] for f in fields(cls)})

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> ReportDocument:
        return cls.from_dict(json.loads(text))

    def math_fields(self) -> dict[str, Any]:
        """Everything that depends only on the ring and CW data."""
        d = self.to_dict()
        for key in ("schema_version", "space", "n", "timing_ms"):
            d.pop(key)
        return d


def _interval(d: dict[str, Any] | None) -> str:
    if d is None:
        return "n/a (no CW data)"
    if d["exact"] is not None:
        return f"{d['exact']} (exact)"
    upper = "?" if d["upper"] is None else d["upper"]
    return f"[{d['lower']}, {upper}]"


def render_table(doc: ReportDocument) -> str:
    s = doc.space
    zcl = doc.zcl
    zcl_upper = "?" if zcl["upper"] is None else zcl["upper"]
    rows = [
        ("space", s["name"]),
        ("mode", s["mode"] + ("" if s["cap_sound"] else f" (cap {s['cap']}, truncated)")),
        ("betti", " ".join(str(b) for b in doc.betti)),
        ("cup", f"{doc.cup['value']} ({doc.cup['qualifier']})"),
        ("zcl", f"{zcl['lower']}" if zcl["exact"]
         else f"[{zcl['lower']}, {zcl_upper}] ({zcl['qualifier']})"),
        ("cat", _interval(doc.cat)),
        ("TC", _interval(doc.tc)),
        ("ganea", str(doc.ganea).lower()),
        ("cup witness", doc.witnesses["cup"]),
        ("zcl witness", f"zero-divisor powers {doc.witnesses['zcl']}"),
        ("time", f"{doc.timing_ms:.1f} ms"),
    ]
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k:<{width}}  {v}" for k, v in rows)
