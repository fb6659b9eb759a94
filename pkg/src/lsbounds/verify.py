"""Independent re-checks of the exact claims in a report (``--verify``)."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .bounds import BoundsReport
from .invariants import _vectors, nilpotency_order, zcl_product
from .spaces import betti_closed_form, kunneth_betti
from .tensor import TensorElement, t_multiply, tensor_one


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


def binomial_zero_divisor_power(A, index: int, k: int) -> TensorElement:
    """Closed form of (1 (x) g - g (x) 1)^k = sum_j (-1)^j C(k, j) g^j (x) g^(k-j)."""
    raw = {}
    for j in range(k + 1):
        left = tuple(j if i == index else 0 for i in range(A.ngens))
        right = tuple(k - j if i == index else 0 for i in range(A.ngens))
        raw[(left, right)] = (-1) ** j * comb(k, j)
    return TensorElement.from_raw(A, raw)


def top_product_coefficient(n: int) -> int:
    """2 p^2 with p = (-1)^(n-1) C(2n-1, n-1)."""
    p = (-1) ** (n - 1) * comb(2 * n - 1, n - 1)
    return 2 * p * p


def verify_report(rep: BoundsReport) -> list[Check]:
    A = rep.algebra
    checks = []

    w = rep.cup.witness
    length = rep.cup.cup_length
    checks.append(Check("cup witness nonzero",
                        sum(w) == length and (length == 0 or bool(_gen_product(A, w))),
                        A.format_monomial(w)))
    if A.cap_sound:
        bounds = tuple(nilpotency_order(A, i) - 1 for i in range(A.ngens))
        longer = [v for v in _vectors(length + 1, bounds) if _gen_product(A, v)]
        checks.append(Check("no longer nonzero monomial", not longer,
                            ", ".join(A.format_monomial(v) for v in longer[:3])))

    if rep.zcl.lower:
        closed = tensor_one(A)
        for i, k in enumerate(rep.zcl.witness):
            if k:
                closed = t_multiply(A, closed, binomial_zero_divisor_power(A, i, k))
        repeated = zcl_product(A, rep.zcl.witness)
        checks.append(Check("zcl witness: binomial expansion agrees with repeated product",
                            closed == repeated and not closed.is_zero()))

    fam, n = rep.space.family, rep.space.n
    if fam == "fcpn":
        t = (n - 1, n)
        product = zcl_product(A, (2 * n - 1, 2 * n - 1))
        expected = top_product_coefficient(n)
        checks.append(Check("top zero-divisor product equals 2p^2 (x) top class",
                            product.terms == {(t, t): expected},
                            f"2p^2 = {expected}"))
        closed = tuple(betti_closed_form(n, q) for q in range(4 * n - 1))
        checks.append(Check("betti: closed form = Kunneth = ring dimensions",
                            closed == kunneth_betti(n) == rep.betti))
        checks.append(Check("cat = 2n", rep.cat_exact == 2 * n, str(rep.cat_exact)))
        checks.append(Check("TC = 4n-1", rep.tc_exact == 4 * n - 1, str(rep.tc_exact)))
    elif fam == "cpn_square":
        checks.append(Check("TC = 4n+1", rep.tc_exact == 4 * n + 1, str(rep.tc_exact)))
    elif fam == "cpn":
        checks.append(Check("TC = 2n+1", rep.tc_exact == 2 * n + 1, str(rep.tc_exact)))

    if rep.cat_lower is not None:
        checks.append(Check("cat interval consistent", rep.cat_lower <= rep.cat_upper))
    if rep.tc_upper is not None:
        checks.append(Check("TC interval consistent", rep.tc_lower <= rep.tc_upper))
    return checks


def _gen_product(A, exps):
    # product of generator elements through multiply(), not a table lookup
    result = A.one()
    for name, k in zip(A.names, exps):
        for _ in range(k):
            result = A.multiply(result, A.gen(name))
    return result
