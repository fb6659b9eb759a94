"""Ring presentations: generators of even degree plus homogeneous integer relations.

A presentation document is line oriented::

    # cohomology of F(CP^2, 2)
    gen a1 2
    gen a2 2
    rel a1^2 + a1*a2 + a2^2
    rel a1^3
    rel a2^3
    maxdeg 12          # optional

Relation expressions follow::

    expr   := term (('+' | '-') term)*
    term   := [integer ['*']] factor ('*' factor)*
    factor := name ['^' positive-integer]

with an optional leading '-' on the first term.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DuplicateGenerator,
    InhomogeneousRelation,
    InvalidParameter,
    OddDegree,
    PresentationSyntaxError,
    UnknownGenerator,
)

Exponents = tuple[int, ...]

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class GeneratorSpec:
    name: str
    degree: int

    def __post_init__(self):
        if not _NAME_RE.match(self.name):
            raise PresentationSyntaxError(f"invalid generator name {self.name!r}")
        if isinstance(self.degree, bool) or not isinstance(self.degree, int) \
                or self.degree < 2 or self.degree % 2:
            raise OddDegree(f"generator {self.name!r} has degree {self.degree}; "
                            "degrees must be even and positive")


@dataclass(frozen=True)
class RelationPoly:
    """Integer polynomial stored as ``((exponents, coeff), ...)``.

    Terms are kept in descending lexicographic order of exponent vectors,
    with zero coefficients removed.
    """

    terms: tuple[tuple[Exponents, int], ...]

    def __post_init__(self):
        canonical = _canonical_terms(self.terms)
        object.__setattr__(self, "terms", canonical)

    @classmethod
    def from_dict(cls, mapping: Mapping[Exponents, int]) -> RelationPoly:
        return cls(tuple(mapping.items()))

    def as_dict(self) -> dict[Exponents, int]:
        return dict(self.terms)

    @property
    def nvars(self) -> int | None:
        return len(self.terms[0][0]) if self.terms else None

    def term_degrees(self, degrees: Sequence[int]) -> list[int]:
        return [sum(e * d for e, d in zip(exps, degrees)) for exps, _ in self.terms]

    def degree(self, degrees: Sequence[int]) -> int:
        """Total degree; assumes the relation is homogeneous and nonzero."""
        return self.term_degrees(degrees)[0]

    def lift(self, offset: int, width: int) -> RelationPoly:
        """Embed into ``width`` variables, placing the current ones at ``offset``."""
        out = {}
        for exps, c in self.terms:
            new = [0] * width
            new[offset:offset + len(exps)] = exps
            out[tuple(new)] = c
        return RelationPoly.from_dict(out)

    def format(self, names: Sequence[str]) -> str:
        return format_polynomial(self.terms, names)


def _canonical_terms(terms) -> tuple[tuple[Exponents, int], ...]:
    acc: dict[Exponents, int] = {}
    for exps, c in terms:
        exps = tuple(int(e) for e in exps)
        if any(e < 0 for e in exps):
            raise InvalidParameter(f"negative exponent in {exps}")
        acc[exps] = acc.get(exps, 0) + int(c)
    return tuple(sorted(((e, c) for e, c in acc.items() if c), reverse=True))


@dataclass(frozen=True)
class RingPresentation:
    generators: tuple[GeneratorSpec, ...]
    relations: tuple[RelationPoly, ...] = ()
    max_degree: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        # zero relations carry no information
        object.__setattr__(self, "relations", tuple(r for r in self.relations if r.terms))
        seen = set()
        for g in self.generators:
            if g.name in seen:
                raise DuplicateGenerator(f"generator {g.name!r} declared twice")
            seen.add(g.name)
        if self.max_degree is not None and self.max_degree < 0:
            raise InvalidParameter("max_degree must be nonnegative")
        degrees = self.degrees
        for rel in self.relations:
            if rel.nvars != len(degrees):
                raise InvalidParameter(
                    f"relation has {rel.nvars} exponents but there are {len(degrees)} generators")
            _check_homogeneous(rel, degrees, self.names)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(g.name for g in self.generators)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(g.degree for g in self.generators)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownGenerator(f"unknown generator {name!r}") from None

    def to_text(self) -> str:
        lines = [f"gen {g.name} {g.degree}" for g in self.generators]
        lines += [f"rel {r.format(self.names)}" for r in self.relations]
        if self.max_degree is not None:
            lines.append(f"maxdeg {self.max_degree}")
        return "\n".join(lines) + "\n"


def _check_homogeneous(rel: RelationPoly, degrees, names, line=None, column=None):
    term_degrees = rel.term_degrees(degrees)
    for d in term_degrees[1:]:
        if d != term_degrees[0]:
            raise InhomogeneousRelation(rel.format(names), term_degrees[0], d, line, column)


# -- formatting ---------------------------------------------------------------

def format_monomial(exps: Exponents, names: Sequence[str]) -> str:
    parts = []
    for e, name in zip(exps, names):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) or "1"


def format_polynomial(terms: Iterable[tuple[Exponents, int | Fraction]],
                      names: Sequence[str]) -> str:
    out = []
    for exps, c in terms:
        mono = format_monomial(exps, names)
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if mono == "1":
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f"{sign} {body}")
    return " ".join(out) or "0"


# -- parsing ------------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*^])|(?P<bad>\S))")


class _ExprParser:
    """Recursive descent over a single relation expression."""

    def __init__(self, text: str, names: Sequence[str], line: int, offset: int):
        self.line = line
        self.index = {name: i for i, name in enumerate(names)}
        self.nvars = len(names)
        self.tokens: list[tuple[str, str, int]] = []
        for m in _TOKEN_RE.finditer(text):
            kind = m.lastgroup
            if kind is None:
                continue
            col = offset + m.start(kind) + 1
            if kind == "bad":
                raise PresentationSyntaxError(f"unexpected character {m.group(kind)!r}", line, col)
            self.tokens.append((kind, m.group(kind), col))
        self.end_col = offset + len(text.rstrip()) + 1
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else ("eof", "", self.end_col)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def fail(self, expected: str):
        kind, value, col = self.peek()
        got = "end of line" if kind == "eof" else repr(value)
        raise PresentationSyntaxError(f"expected {expected}, got {got}", self.line, col)

    def parse(self) -> tuple[dict[Exponents, int], int]:
        start_col = self.peek()[2]
        terms: dict[Exponents, int] = {}
        sign = 1
        if self.peek()[:2] == ("op", "-"):
            self.take()
            sign = -1
        while True:
            exps, coeff = self.term()
            terms[exps] = terms.get(exps, 0) + sign * coeff
            kind, value, _ = self.peek()
            if kind == "eof":
                break
            if kind == "op" and value in "+-":
                self.take()
                sign = 1 if value == "+" else -1
                continue
            self.fail("'+', '-' or end of line")
        return {e: c for e, c in terms.items() if c}, start_col

    def term(self) -> tuple[Exponents, int]:
        coeff = 1
        kind, value, _ = self.peek()
        if kind == "int":
            self.take()
            coeff = int(value)
            if self.peek()[:2] == ("op", "*"):
                self.take()
        exps = [0] * self.nvars
        self.factor(exps)
        while self.peek()[:2] == ("op", "*"):
            self.take()
            self.factor(exps)
        return tuple(exps), coeff

    def factor(self, exps: list[int]) -> None:
        kind, value, col = self.peek()
        if kind != "name":
            self.fail("generator name")
        self.take()
        if value not in self.index:
            raise UnknownGenerator(f"unknown generator {value!r}", self.line, col)
        power = 1
        if self.peek()[:2] == ("op", "^"):
            self.take()
            kind, num, ncol = self.peek()
            if kind != "int":
                self.fail("positive integer exponent")
            self.take()
            power = int(num)
            if power < 1:
                raise PresentationSyntaxError("exponent must be a positive integer", self.line, ncol)
        exps[self.index[value]] += power


def parse_expression(text: str, names: Sequence[str], line: int = 1, offset: int = 0
                     ) -> dict[Exponents, int]:
    """Parse one relation expression into ``{exponents: coefficient}``."""
    terms, _ = _ExprParser(text, names, line, offset).parse()
    return terms


def parse_presentation(text: str) -> RingPresentation:
    generators: list[GeneratorSpec] = []
    relations: list[RelationPoly] = []
    max_degree = None
    seen_rel = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        stripped = line.strip()
        if not stripped:
            continue
        indent = len(line) - len(line.lstrip())
        keyword = stripped.split(None, 1)[0]
        rest_offset = indent + len(keyword)
        rest = line[rest_offset:]
        args = rest.split()
        rest_col = rest_offset + (len(rest) - len(rest.lstrip())) + 1

        if keyword == "gen":
            if seen_rel:
                raise PresentationSyntaxError("'gen' declarations must precede relations",
                                              lineno, indent + 1)
            if len(args) != 2:
                raise PresentationSyntaxError("expected 'gen <name> <degree>'", lineno, indent + 1)
            name, deg = args
            if not _NAME_RE.match(name):
                raise PresentationSyntaxError(f"invalid generator name {name!r}", lineno, rest_col)
            if not re.fullmatch(r"-?\d+", deg):
                raise PresentationSyntaxError(f"degree must be an integer, got {deg!r}",
                                              lineno, line.rindex(deg) + 1)
            if name in (g.name for g in generators):
                raise DuplicateGenerator(f"generator {name!r} declared twice", lineno, rest_col)
            degree = int(deg)
            if degree < 2 or degree % 2:
                raise OddDegree(f"generator {name!r} has degree {degree}; "
                                "degrees must be even and positive", lineno, line.rindex(deg) + 1)
            generators.append(GeneratorSpec(name, degree))
        elif keyword == "rel":
            seen_rel = True
            names = [g.name for g in generators]
            terms, col = _ExprParser(rest, names, lineno, rest_offset).parse()
            rel = RelationPoly.from_dict(terms)
            _check_homogeneous(rel, [g.degree for g in generators], names, lineno, col)
            relations.append(rel)
        elif keyword == "maxdeg":
            if len(args) != 1 or not args[0].isdigit():
                raise PresentationSyntaxError("expected 'maxdeg <nonnegative integer>'",
                                              lineno, rest_col)
            max_degree = int(args[0])
        else:
            raise PresentationSyntaxError(f"unknown directive {keyword!r}", lineno, indent + 1)

    return RingPresentation(tuple(generators), tuple(relations), max_degree)


# -- constructors -------------------------------------------------------------

def _check_n(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidParameter(f"n must be a positive integer, got {n!r}")


def fcpn_presentation(n: int) -> RingPresentation:
    """Cohomology ring of the ordered two-point configuration space of CP^n.

    Generators a1, a2 in degree 2 modulo r_n(a1, a2) = sum_i a1^(n-i) a2^i,
    a1^(n+1) and a2^(n+1).
    """
    _check_n(n)
    gens = (GeneratorSpec("a1", 2), GeneratorSpec("a2", 2))
    r_n = RelationPoly.from_dict({(n - i, i): 1 for i in range(n + 1)})
    return RingPresentation(
        gens,
        (r_n, RelationPoly.from_dict({(n + 1, 0): 1}), RelationPoly.from_dict({(0, n + 1): 1})),
    )


def cpn_presentation(n: int) -> RingPresentation:
    """Truncated polynomial ring Q[a]/(a^(n+1)) with deg a = 2."""
    _check_n(n)
    return RingPresentation((GeneratorSpec("a", 2),), (RelationPoly.from_dict({(n + 1,): 1}),))


def product_presentation(p1: RingPresentation, p2: RingPresentation) -> RingPresentation:
    """Presentation of the tensor product ring.

    Colliding generator names get an ``_L`` suffix on the left and ``_R``
    on the right.
    """
    clash = set(p1.names) & set(p2.names)
    left = tuple(GeneratorSpec(g.name + "_L" if g.name in clash else g.name, g.degree)
                 for g in p1.generators)
    right = tuple(GeneratorSpec(g.name + "_R" if g.name in clash else g.name, g.degree)
                  for g in p2.generators)
    width = len(left) + len(right)
    relations = tuple(r.lift(0, width) for r in p1.relations) + \
        tuple(r.lift(len(left), width) for r in p2.relations)
    max_degree = None
    if p1.max_degree is not None and p2.max_degree is not None:
        max_degree = p1.max_degree + p2.max_degree
    return RingPresentation(left + right, relations, max_degree)
