"""Cup-length and zero-divisor cup-length of a built algebra.

Every product of L positive-degree elements expands into generator
monomials of word length >= L, and every length-L generator monomial is
such a product, so the cup-length equals the longest generator monomial
with nonzero normal form.  The zero-divisor search is restricted to products
of the generator zero-divisors ``1 (x) g - g (x) 1``; it yields a lower
bound, reported as exact only when it meets the degree-counting upper bound
``floor(2 * top / min generator degree)``.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

from .algebra import Monomial, QuotientAlgebra
from .tensor import TensorElement, t_multiply, tensor_one, zero_divisor

TRUNCATED = "lower bound (truncated)"


@dataclass(frozen=True)
class CupResult:
    cup_length: int
    witness: Monomial
    truncated: bool = False

    @property
    def qualifier(self) -> str:
        return TRUNCATED if self.truncated else "exact"


@dataclass(frozen=True)
class ZclResult:
    lower: int
    upper: int | None
    witness: tuple[int, ...]
    truncated: bool = False

    @property
    def exact(self) -> bool:
        return self.upper is not None and self.lower == self.upper

    @property
    def qualifier(self) -> str:
        if self.truncated:
            return TRUNCATED
        return "exact" if self.exact else "interval"


def nilpotency_order(A: QuotientAlgebra, index: int) -> int | None:
    """Smallest k >= 1 with g^k = 0, or None if not visible below an unsound cap."""
    deg = A.degrees[index]
    k = 1
    while True:
        if k * deg > A.cap:
            return k if A.cap_sound else None
        m = tuple(k if j == index else 0 for j in range(A.ngens))
        if not A.reduce_monomial(m):
            return k
        k += 1


def _vectors(total: int, bounds: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Vectors with the given sum and entrywise bounds, lexicographically ascending."""
    if not bounds:
        if total == 0:
            yield ()
        return
    rest_cap = sum(bounds[1:])
    for e in range(max(0, total - rest_cap), min(bounds[0], total) + 1):
        for tail in _vectors(total - e, bounds[1:]):
            yield (e,) + tail


def _exponent_bounds(A: QuotientAlgebra) -> tuple[int, ...]:
    bounds = []
    for i, deg in enumerate(A.degrees):
        nil = nilpotency_order(A, i)
        bounds.append(nil - 1 if nil is not None else A.cap // deg)
    return tuple(bounds)


def cup_length(A: QuotientAlgebra) -> CupResult:
    """Longest generator monomial with nonzero normal form.

    Ties are broken by the lexicographically smallest exponent vector.
    """
    bounds = _exponent_bounds(A)
    for length in range(sum(bounds), 0, -1):
        for exps in _vectors(length, bounds):
            if A.degree(exps) > A.cap:
                continue
            if A.reduce_monomial(exps):
                return CupResult(length, exps, truncated=not A.cap_sound)
    return CupResult(0, (0,) * A.ngens, truncated=not A.cap_sound)


def _balance_key(v: tuple[int, ...]):
    return (sorted(v, reverse=True), v)


class _ZeroDivisorPowers:
    def __init__(self, A: QuotientAlgebra):
        self.A = A
        self.powers = [[tensor_one(A)] for _ in A.names]
        self.base = [zero_divisor(A, name) for name in A.names]

    def get(self, i: int, k: int) -> TensorElement:
        cache = self.powers[i]
        while len(cache) <= k:
            cache.append(t_multiply(self.A, cache[-1], self.base[i]))
        return cache[k]

    def product(self, exps: tuple[int, ...]) -> TensorElement:
        result = tensor_one(self.A)
        for i, k in enumerate(exps):
            if k:
                result = t_multiply(self.A, result, self.get(i, k))
                if not result:
                    break
        return result


def zcl_product(A: QuotientAlgebra, exps: tuple[int, ...]) -> TensorElement:
    """The product of generator zero-divisors with multiplicities ``exps``."""
    return _ZeroDivisorPowers(A).product(exps)


def zcl(A: QuotientAlgebra) -> ZclResult:
    """Zero-divisor cup-length bounds from generator zero-divisors.

    Among equal-length nonzero witnesses the most balanced multiplicity
    vector wins (smallest largest entry, then lexicographically smallest).
    """
    if A.cap_sound:
        top = A.top_degree()
        upper = 2 * top // min(A.degrees) if A.degrees else 0
        bounds = []
        for i, deg in enumerate(A.degrees):
            nil = nilpotency_order(A, i)
            # (1 (x) g - g (x) 1)^k vanishes once k > 2 (nil - 1)
            bounds.append(min(2 * top // deg, 2 * (nil - 1)))
        bounds = tuple(bounds)
    else:
        upper = None
        bounds = tuple(A.cap // deg for deg in A.degrees)

    powers = _ZeroDivisorPowers(A)
    start = sum(bounds) if upper is None else min(upper, sum(bounds))
    for length in range(start, 0, -1):
        candidates = [v for v in _vectors(length, bounds)
                      if A.cap_sound or A.degree(v) <= A.cap]
        for exps in sorted(candidates, key=_balance_key):
            if powers.product(exps):
                return ZclResult(length, upper, exps, truncated=not A.cap_sound)
    return ZclResult(0, upper, (0,) * A.ngens, truncated=not A.cap_sound)
