"""Finite-dimensional graded quotient algebras over the rationals.

The quotient Q[g_1..g_k] / I is materialized one degree at a time.  In
degree d every product ``m * r`` (m a monomial, r a relation, total degree
d) becomes a row of a matrix whose columns are the degree-d monomials in
descending lexicographic order.  Reduced row echelon form then splits the
monomials into pivots (reducible, each with a reduction row) and
non-pivots (the basis of the degree-d piece).
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Mapping
from fractions import Fraction
from functools import lru_cache

from .errors import InvalidParameter, Truncated, UnboundedAlgebra
from .presentation import RingPresentation, format_monomial, format_polynomial, parse_expression

Monomial = tuple[int, ...]
Coeff = Fraction
Row = dict[Monomial, Fraction]


@lru_cache(maxsize=None)
def monomials_of_degree(degrees: tuple[int, ...], d: int) -> tuple[Monomial, ...]:
    """All exponent vectors of total degree ``d``, descending lexicographic order."""
    if not degrees:
        return ((),) if d == 0 else ()
    head, tail = degrees[0], degrees[1:]
    out = []
    for e in range(d // head, -1, -1):
        for rest in monomials_of_degree(tail, d - e * head):
            out.append((e,) + rest)
    return tuple(out)


def mono_degree(m: Monomial, degrees: tuple[int, ...]) -> int:
    return sum(e * g for e, g in zip(m, degrees))


def _mono_add(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def reduce_degree(presentation: RingPresentation, d: int) -> tuple[tuple[Monomial, ...], dict[Monomial, Row]]:
    """Row-reduce the relation multiples in degree ``d``.

    Returns the basis monomials and a reduction row for every pivot
    monomial (pivot = combination of basis monomials).
    """
    degrees = presentation.degrees
    columns = monomials_of_degree(degrees, d)
    col_of = {m: i for i, m in enumerate(columns)}

    pivots: dict[int, dict[int, Fraction]] = {}
    for rel in presentation.relations:
        rd = rel.degree(degrees)
        if rd > d:
            continue
        for mult in monomials_of_degree(degrees, d - rd):
            row = {col_of[_mono_add(mult, e)]: Fraction(c) for e, c in rel.terms}
            _insert_row(pivots, row)

    basis = tuple(m for i, m in enumerate(columns) if i not in pivots)
    table: dict[Monomial, Row] = {}
    for p, row in pivots.items():
        table[columns[p]] = {columns[c]: -v for c, v in row.items() if c != p}
    return basis, table


def _insert_row(pivots: dict[int, dict[int, Fraction]], row: dict[int, Fraction]) -> None:
    # pivot rows are kept fully reduced: each contains exactly one pivot column
    for p in [c for c in row if c in pivots]:
        factor = row.get(p)
        if not factor:
            continue
        for c, v in pivots[p].items():
            nv = row.get(c, 0) - factor * v
            if nv:
                row[c] = nv
            else:
                row.pop(c, None)
    if not row:
        return
    lead = min(row)
    inv = 1 / row[lead]
    row = {c: v * inv for c, v in row.items()}
    for other in pivots.values():
        factor = other.get(lead)
        if factor:
            for c, v in row.items():
                nv = other.get(c, 0) - factor * v
                if nv:
                    other[c] = nv
                else:
                    other.pop(c, None)
    pivots[lead] = row


def _nilpotency_cap(presentation: RingPresentation, pieces: dict) -> int | None:
    """Sound degree cap from vanishing generator powers, or None."""
    degrees = presentation.degrees
    max_rel = max((r.degree(degrees) for r in presentation.relations), default=0)
    cap = 0
    for i, g in enumerate(degrees):
        limit = 2 * (1 + math.ceil(max_rel / g))
        for k in range(1, limit + 1):
            d = k * g
            if d not in pieces:
                pieces[d] = reduce_degree(presentation, d)
            basis, table = pieces[d]
            power = tuple(k if j == i else 0 for j in range(len(degrees)))
            if power in table and not table[power]:
                cap += (k - 1) * g
                break
        else:
            return None
    return cap


def build(presentation: RingPresentation) -> QuotientAlgebra:
    """Materialize the quotient algebra of ``presentation``.

    The degree cap comes from nilpotency detection when every generator has
    a vanishing power within the probe limit (``cap_sound``); otherwise the
    presentation's ``max_degree`` is used and the cap is marked unsound.
    """
    pieces: dict[int, tuple] = {}
    cap = _nilpotency_cap(presentation, pieces)
    sound = cap is not None
    if cap is None:
        if presentation.max_degree is None:
            raise UnboundedAlgebra(
                "could not prove every generator nilpotent; supply a max degree")
        cap = presentation.max_degree
    for d in range(cap + 1):
        if d not in pieces:
            pieces[d] = reduce_degree(presentation, d)
    return QuotientAlgebra(presentation, cap, sound,
                           {d: pieces[d] for d in range(cap + 1)})


class QuotientAlgebra:
    """Graded quotient algebra materialized up to degree ``cap``.

    Immutable after construction.  When ``cap_sound`` is true every
    monomial above the cap is zero; otherwise queries above it raise
    :class:`Truncated`.
    """

    def __init__(self, presentation: RingPresentation, cap: int, cap_sound: bool,
                 pieces: Mapping[int, tuple[tuple[Monomial, ...], dict[Monomial, Row]]]):
        self.presentation = presentation
        self.cap = cap
        self.cap_sound = cap_sound
        self.names = presentation.names
        self.degrees = presentation.degrees
        self._basis: dict[int, tuple[Monomial, ...]] = {}
        self._table: dict[Monomial, Row] = {}
        for d, (basis, table) in pieces.items():
            self._basis[d] = basis
            self._table.update(table)
            for m in basis:
                self._table[m] = {m: Fraction(1)}
        self._products: dict[tuple[Monomial, Monomial], Row] = {}
        self._top: int | None = None

    def __repr__(self):
        return (f"QuotientAlgebra(names={self.names}, cap={self.cap}, "
                f"cap_sound={self.cap_sound})")

    @property
    def ngens(self) -> int:
        return len(self.names)

    def degree(self, m: Monomial) -> int:
        return mono_degree(m, self.degrees)

    def _check_degree(self, d: int) -> bool:
        """True when degree ``d`` is materialized; False when it is provably zero."""
        if d <= self.cap:
            return True
        if self.cap_sound:
            return False
        raise Truncated(f"degree {d} exceeds the user-supplied cap {self.cap}")

    def basis(self, d: int) -> tuple[Monomial, ...]:
        if d < 0 or not self._check_degree(d):
            return ()
        return self._basis[d]

    def reduce_monomial(self, m: Monomial) -> Row:
        """Normal form of a single monomial (an empty row means zero)."""
        if not self._check_degree(self.degree(m)):
            return {}
        return self._table[m]

    def is_reducible(self, m: Monomial) -> bool:
        return self.reduce_monomial(m) != {m: 1}

    def monomial_product(self, a: Monomial, b: Monomial) -> Row:
        key = (a, b)
        row = self._products.get(key)
        if row is None:
            row = self.reduce_monomial(_mono_add(a, b))
            self._products[key] = row
        return row

    # -- elements -------------------------------------------------------------

    def normal_form(self, raw: Mapping[Monomial, int | Fraction] | Iterable) -> AlgebraElement:
        """Reduce a raw polynomial ``{exponents: coefficient}`` to normal form."""
        if isinstance(raw, AlgebraElement):
            raw = raw.terms
        items = raw.items() if isinstance(raw, Mapping) else raw
        acc: dict[Monomial, Fraction] = {}
        for m, c in items:
            m = tuple(m)
            if len(m) != self.ngens:
                raise InvalidParameter(f"monomial {m} has the wrong number of exponents")
            if not c:
                continue
            for b, v in self.reduce_monomial(m).items():
                acc[b] = acc.get(b, 0) + c * v
        return AlgebraElement(self, acc)

    def parse(self, text: str) -> AlgebraElement:
        """Normal form of an expression such as ``"a1^2*a2 - 3*a2^3"``."""
        return self.normal_form(parse_expression(text, self.names))

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self, {})

    def one(self) -> AlgebraElement:
        return self.monomial((0,) * self.ngens)

    def monomial(self, exps: Iterable[int]) -> AlgebraElement:
        return self.normal_form({tuple(exps): 1})

    def gen(self, name: str) -> AlgebraElement:
        i = self.presentation.index(name)
        return self.monomial(tuple(int(j == i) for j in range(self.ngens)))

    def multiply(self, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
        if x.algebra is not self or y.algebra is not self:
            raise InvalidParameter("elements belong to a different algebra")
        acc: dict[Monomial, Fraction] = {}
        for a, ca in x.terms.items():
            for b, cb in y.terms.items():
                for m, v in self.monomial_product(a, b).items():
                    acc[m] = acc.get(m, 0) + ca * cb * v
        return AlgebraElement(self, acc)

    def power(self, x: AlgebraElement, k: int) -> AlgebraElement:
        if k < 0:
            raise InvalidParameter("exponent must be nonnegative")
        result = self.one()
        for _ in range(k):
            result = self.multiply(result, x)
            if not result:
                break
        return result

    # -- dimensions -----------------------------------------------------------

    def graded_dimension(self, d: int) -> int:
        return len(self.basis(d))

    def top_degree(self) -> int:
        if not self.cap_sound:
            raise Truncated("top degree unknown: the cap was user-supplied")
        if self._top is None:
            self._top = max(d for d, b in self._basis.items() if b)
        return self._top

    def total_dimension(self) -> int:
        return sum(self.graded_dimension(d) for d in range(self.top_degree() + 1))

    def betti(self) -> tuple[int, ...]:
        """Graded dimensions in degrees 0..top (0..cap when the cap is unsound)."""
        top = self.top_degree() if self.cap_sound else self.cap
        return tuple(self.graded_dimension(d) for d in range(top + 1))

    def format_monomial(self, m: Monomial) -> str:
        return format_monomial(m, self.names)


class AlgebraElement:
    """Rational linear combination of basis monomials, always in normal form."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: QuotientAlgebra, terms: Mapping[Monomial, Fraction]):
        self.algebra = algebra
        self.terms = {m: Fraction(c) for m, c in terms.items() if c}

    @property
    def homogeneous_degree(self) -> int | None:
        degs = {self.algebra.degree(m) for m in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def _coerce(self, other) -> AlgebraElement | None:
        if isinstance(other, AlgebraElement):
            if other.algebra is not self.algebra:
                raise InvalidParameter("elements belong to a different algebra")
            return other
        if isinstance(other, (int, Fraction)):
            return self.algebra.one() * other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc = dict(self.terms)
        for m, c in other.terms.items():
            acc[m] = acc.get(m, 0) + c
        return AlgebraElement(self.algebra, acc)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.algebra, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return AlgebraElement(self.algebra, {m: c * other for m, c in self.terms.items()})
        if isinstance(other, AlgebraElement):
            return self.algebra.multiply(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return self.algebra.power(self, k)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._coerce(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra is other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        return format_polynomial(sorted(self.terms.items(), reverse=True), self.algebra.names)

    def __repr__(self):
        return f"AlgebraElement({self})"
