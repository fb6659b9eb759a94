"""Category and topological complexity intervals from algebraic invariants.

Normalization: a contractible space has cat = TC = 1.

* cat >= cup + 1
* cat <= floor(dim / (c + 1)) + 1 for a c-connected CW complex of dimension dim
* TC >= zcl + 1
* TC <= 2 cat - 1 for path-connected paracompact spaces
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .algebra import QuotientAlgebra, build
from .errors import InconsistentSpace, InvalidParameter
from .invariants import CupResult, ZclResult, cup_length, zcl
from .presentation import RingPresentation

NORMALIZATION = "unreduced: cat(point) = TC(point) = 1"


@dataclass(frozen=True)
class SpaceInfo:
    """A space known through its rational cohomology ring and CW data.

    ``cw_dimension`` and ``connectivity`` may be None for rings without
    geometric data; reports then cover the algebra only.
    """

    name: str
    presentation: RingPresentation
    cw_dimension: int | None = None
    connectivity: int | None = None
    paracompact: bool = True
    n: int | None = None
    family: str | None = None

    def __post_init__(self):
        if self.cw_dimension is not None and self.cw_dimension < 0:
            raise InvalidParameter("cw_dimension must be nonnegative")
        if self.connectivity is not None and self.connectivity < 0:
            raise InvalidParameter("connectivity must be nonnegative")

    @property
    def has_cw_data(self) -> bool:
        return self.cw_dimension is not None and self.connectivity is not None


@dataclass
class BoundsReport:
    space: SpaceInfo
    algebra: QuotientAlgebra = field(repr=False)
    betti: tuple[int, ...]
    cup: CupResult
    zcl: ZclResult
    cat_lower: int | None = None
    cat_upper: int | None = None
    tc_lower: int | None = None
    tc_upper: int | None = None
    elapsed_ms: float = 0.0
    normalization: str = NORMALIZATION

    @property
    def truncated(self) -> bool:
        return not self.algebra.cap_sound

    @property
    def mode(self) -> str:
        return "full" if self.space.has_cw_data else "algebra-only"

    @property
    def cat_exact(self) -> int | None:
        if self.cat_lower is not None and self.cat_lower == self.cat_upper:
            return self.cat_lower
        return None

    @property
    def tc_exact(self) -> int | None:
        if self.tc_lower is not None and self.tc_lower == self.tc_upper:
            return self.tc_lower
        return None

    @property
    def ganea(self) -> bool:
        return (not self.cup.truncated and self.cat_exact is not None
                and self.cat_exact == self.cup.cup_length + 1)


def cat_bounds(info: SpaceInfo, cup: CupResult) -> tuple[int, int]:
    if not info.has_cw_data:
        raise InvalidParameter(f"{info.name}: cat bounds need cw_dimension and connectivity")
    lower = cup.cup_length + 1
    upper = info.cw_dimension // (info.connectivity + 1) + 1
    return lower, upper


def tc_bounds(info: SpaceInfo, cat_upper: int, zcl_result: ZclResult) -> tuple[int, int | None]:
    lower = zcl_result.lower + 1
    upper = 2 * cat_upper - 1 if info.paracompact else None
    return lower, upper


def report(space: SpaceInfo, algebra: QuotientAlgebra | None = None) -> BoundsReport:
    """Build the algebra (unless given) and assemble every bound.

    Raises whatever ``build`` raises; no partial report is produced.
    """
    start = time.perf_counter()
    A = algebra if algebra is not None else build(space.presentation)
    if A.cap_sound and space.cw_dimension is not None and space.cw_dimension < A.top_degree():
        raise InconsistentSpace(
            f"{space.name}: cw_dimension {space.cw_dimension} is below the top "
            f"cohomological degree {A.top_degree()}")
    cup = cup_length(A)
    z = zcl(A)
    rep = BoundsReport(space, A, A.betti(), cup, z)
    if space.has_cw_data:
        rep.cat_lower, rep.cat_upper = cat_bounds(space, cup)
        rep.tc_lower, rep.tc_upper = tc_bounds(space, rep.cat_upper, z)
        if rep.cat_lower > rep.cat_upper or (rep.tc_upper is not None
                                             and rep.tc_lower > rep.tc_upper):
            raise InconsistentSpace(
                f"{space.name}: contradictory bounds cat [{rep.cat_lower}, {rep.cat_upper}], "
                f"TC [{rep.tc_lower}, {rep.tc_upper}]; check the CW data")
    rep.elapsed_ms = (time.perf_counter() - start) * 1000.0
    return rep
