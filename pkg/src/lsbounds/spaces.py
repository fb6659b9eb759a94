"""Built-in spaces and closed-form Betti data for F(CP^n, 2).

The fibration F(CP^n, 2) -> CP^n with fibre CP^(n-1) has a Serre spectral
sequence concentrated in even bidegrees, so it collapses at E2 and the
Betti numbers are the convolution of the base and fibre sequences.
"""

from __future__ import annotations

from collections.abc import Sequence

from .bounds import SpaceInfo
from .errors import InvalidParameter
from .presentation import cpn_presentation, fcpn_presentation, product_presentation


def _check_n(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidParameter(f"n must be a positive integer, got {n!r}")


def fcpn_space(n: int) -> SpaceInfo:
    """F(CP^n, 2): simply connected, homotopy equivalent to a (4n-2)-dim CW complex."""
    _check_n(n)
    return SpaceInfo(f"F(CP^{n},2)", fcpn_presentation(n), 4 * n - 2, 1, n=n, family="fcpn")


def cpn_space(n: int) -> SpaceInfo:
    _check_n(n)
    return SpaceInfo(f"CP^{n}", cpn_presentation(n), 2 * n, 1, n=n, family="cpn")


def product_space(s1: SpaceInfo, s2: SpaceInfo) -> SpaceInfo:
    def add(a, b):
        return None if a is None or b is None else a + b

    connectivity = None
    if s1.connectivity is not None and s2.connectivity is not None:
        connectivity = min(s1.connectivity, s2.connectivity)
    n = s1.n if s1.n == s2.n else None
    family = "cpn_square" if s1.family == s2.family == "cpn" and n is not None else None
    return SpaceInfo(
        f"{s1.name} x {s2.name}",
        product_presentation(s1.presentation, s2.presentation),
        add(s1.cw_dimension, s2.cw_dimension),
        connectivity,
        s1.paracompact and s2.paracompact,
        n=n,
        family=family,
    )


def betti_closed_form(n: int, q: int) -> int:
    """Rank of H_q(F(CP^n, 2)) from the three-branch case formula."""
    _check_n(n)
    if q < 0 or q % 2:
        return 0
    if q <= 2 * (n - 1):
        return q // 2 + 1
    if 2 * n <= q <= 2 * n + 2 * (n - 1):
        return 2 * n - q // 2
    return 0


def convolve(base: Sequence[int], fibre: Sequence[int]) -> tuple[int, ...]:
    """Betti numbers of a total space whose spectral sequence collapses at E2.

    Collapse is forced when both sequences live in even degrees only; that
    precondition is checked.
    """
    if any(base[d] for d in range(1, len(base), 2)) or any(fibre[d] for d in range(1, len(fibre), 2)):
        raise InvalidParameter("collapse not forced: odd-degree classes present")
    out = [0] * (len(base) + len(fibre) - 1)
    for p, x in enumerate(base):
        for q, y in enumerate(fibre):
            out[p + q] += x * y
    return tuple(out)


def cpn_betti(n: int) -> tuple[int, ...]:
    """(1, 0, 1, 0, ..., 1) over degrees 0..2n; CP^0 is a point."""
    return tuple(1 if d % 2 == 0 else 0 for d in range(2 * n + 1))


def kunneth_betti(n: int) -> tuple[int, ...]:
    """Convolution of the Betti sequences of CP^n and CP^(n-1), degrees 0..4n-2."""
    _check_n(n)
    return convolve(cpn_betti(n), cpn_betti(n - 1))


def cw_cell_counts(n: int, j: int) -> int:
    """Number of 2j-cells in the minimal CW model of F(CP^n, 2)."""
    _check_n(n)
    if 0 <= j <= n - 1:
        return j + 1
    if n <= j <= 2 * n - 1:
        return 2 * n - j
    return 0
