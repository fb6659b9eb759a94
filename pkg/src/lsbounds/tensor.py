"""Arithmetic in the tensor square H (x) H of a quotient algebra.

All generators have even degree, so the tensor product is plainly
commutative and ``(x1 (x) x2)(y1 (x) y2) = x1 y1 (x) x2 y2`` without signs.
"""

from __future__ import annotations

from collections.abc import Mapping
from fractions import Fraction

from .algebra import AlgebraElement, Monomial, QuotientAlgebra
from .errors import InvalidParameter
from .presentation import format_monomial

Pair = tuple[Monomial, Monomial]


class TensorElement:
    """Sparse combination of ``basis (x) basis`` pairs with rational coefficients."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: QuotientAlgebra, terms: Mapping[Pair, Fraction]):
        self.algebra = algebra
        self.terms = {k: Fraction(c) for k, c in terms.items() if c}

    @classmethod
    def from_raw(cls, algebra: QuotientAlgebra, raw: Mapping[Pair, int | Fraction]) -> TensorElement:
        """Normal-form both components of a raw ``{(m1, m2): c}`` map."""
        acc: dict[Pair, Fraction] = {}
        for (m1, m2), c in raw.items():
            left = algebra.reduce_monomial(tuple(m1))
            if not left or not c:
                continue
            right = algebra.reduce_monomial(tuple(m2))
            for a, ca in left.items():
                for b, cb in right.items():
                    acc[(a, b)] = acc.get((a, b), 0) + c * ca * cb
        return cls(algebra, acc)

    def _check(self, other: TensorElement) -> None:
        if other.algebra is not self.algebra:
            raise InvalidParameter("tensor elements over different algebras")

    def __add__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        self._check(other)
        acc = dict(self.terms)
        for k, c in other.terms.items():
            acc[k] = acc.get(k, 0) + c
        return TensorElement(self.algebra, acc)

    def __neg__(self):
        return TensorElement(self.algebra, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TensorElement(self.algebra, {k: c * other for k, c in self.terms.items()})
        if isinstance(other, TensorElement):
            return t_multiply(self.algebra, self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return t_power(self.algebra, self, k)

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.algebra is other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, left: Monomial, right: Monomial) -> Fraction:
        return self.terms.get((tuple(left), tuple(right)), Fraction(0))

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.algebra.names
        parts = []
        for (a, b), c in sorted(self.terms.items(), reverse=True):
            body = f"{format_monomial(a, names)} (x) {format_monomial(b, names)}"
            parts.append(f"{c}*({body})")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"TensorElement({self})"


def tensor(x: AlgebraElement, y: AlgebraElement) -> TensorElement:
    """The pure tensor ``x (x) y``."""
    if x.algebra is not y.algebra:
        raise InvalidParameter("factors belong to different algebras")
    return TensorElement(x.algebra, {(a, b): ca * cb
                                     for a, ca in x.terms.items() for b, cb in y.terms.items()})


def tensor_one(algebra: QuotientAlgebra) -> TensorElement:
    unit = (0,) * algebra.ngens
    return TensorElement(algebra, {(unit, unit): 1})


def zero_divisor(algebra: QuotientAlgebra, name: str) -> TensorElement:
    """``1 (x) g - g (x) 1`` for the generator called ``name``."""
    g = algebra.gen(name)
    one = algebra.one()
    return tensor(one, g) - tensor(g, one)


def t_multiply(algebra: QuotientAlgebra, x: TensorElement, y: TensorElement) -> TensorElement:
    if x.algebra is not algebra or y.algebra is not algebra:
        raise InvalidParameter("tensor elements over different algebras")
    # pairs whose components exceed the top degree vanish; reduce_monomial
    # returns {} for them under a sound cap
    acc: dict[Pair, Fraction] = {}
    for (a1, b1), c1 in x.terms.items():
        for (a2, b2), c2 in y.terms.items():
            left = algebra.monomial_product(a1, a2)
            if not left:
                continue
            right = algebra.monomial_product(b1, b2)
            if not right:
                continue
            c = c1 * c2
            for a, ca in left.items():
                cca = c * ca
                for b, cb in right.items():
                    key = (a, b)
                    acc[key] = acc.get(key, 0) + cca * cb
    return TensorElement(algebra, acc)


def t_power(algebra: QuotientAlgebra, x: TensorElement, k: int) -> TensorElement:
    if k < 0:
        raise InvalidParameter("exponent must be nonnegative")
    result = tensor_one(algebra)
    for _ in range(k):
        result = t_multiply(algebra, result, x)
        if not result:
            break
    return result


def is_zero(x: TensorElement) -> bool:
    return x.is_zero()
