from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lsbounds import (
    InvalidParameter,
    Truncated,
    UnboundedAlgebra,
    build,
    cpn_presentation,
    fcpn_presentation,
    parse_presentation,
    product_presentation,
)
from lsbounds.algebra import monomials_of_degree, reduce_degree


@pytest.fixture(scope="module")
def fcpn2():
    return build(fcpn_presentation(2))


@pytest.fixture(scope="module")
def fcpn1():
    return build(fcpn_presentation(1))


def test_fcpn2_degree6_row_reduction(fcpn2):
    # hand reduction: rows a1^3, a2^3, a1*r2, a2*r2 over (a1^3, a1^2a2, a1a2^2, a2^3)
    assert monomials_of_degree((2, 2), 6) == ((3, 0), (2, 1), (1, 2), (0, 3))
    basis, table = reduce_degree(fcpn_presentation(2), 6)
    assert basis == ((1, 2),)
    assert table == {(3, 0): {}, (2, 1): {(1, 2): -1}, (0, 3): {}}
    assert fcpn2.graded_dimension(6) == 1


def test_fcpn1_structure(fcpn1):
    assert fcpn1.basis(2) == ((0, 1),)
    assert fcpn1.gen("a1").terms == {(0, 1): -1}
    assert fcpn1.graded_dimension(4) == 0


def test_unbounded_without_relations():
    with pytest.raises(UnboundedAlgebra):
        build(parse_presentation("gen x 2\n"))


def test_normal_forms(fcpn2):
    assert fcpn2.parse("a1^2*a2").terms == {(1, 2): -1}
    assert fcpn2.normal_form({}) == fcpn2.zero()
    assert fcpn2.parse("a1^2").terms == {(1, 1): -1, (0, 2): -1}


@pytest.mark.parametrize("n", range(1, 9))
def test_lemma_facts(n):
    A = build(fcpn_presentation(n))
    assert not A.monomial((n, n))
    top = A.monomial((n - 1, n))
    assert top
    assert A.top_degree() == 4 * n - 2
    assert A.basis(4 * n - 2) == ((n - 1, n),)
    assert A.multiply(A.gen("a1") ** (n - 1), A.gen("a2") ** n) == top
    assert A.power(A.gen("a1"), n + 1) == A.zero()


def test_multiply_examples(fcpn2):
    assert fcpn2.monomial((1, 2)) * fcpn2.gen("a1") == 0
    x = fcpn2.parse("a1 - 3*a2")
    assert fcpn2.one() * x == x
    assert x ** 1 == x
    assert x ** 0 == fcpn2.one()


def test_power_in_cpn2():
    A = build(cpn_presentation(2))
    assert A.power(A.gen("a"), 2).terms == {(2,): 1}


@pytest.mark.parametrize("n", range(1, 9))
def test_graded_dimensions(n):
    A = build(fcpn_presentation(n))
    for d in range(0, 4 * n + 6):
        j, odd = divmod(d, 2)
        if odd:
            expected = 0
        elif j <= n - 1:
            expected = j + 1
        elif j <= 2 * n - 1:
            expected = 2 * n - j
        else:
            expected = 0
        assert A.graded_dimension(d) == expected, d
        if d <= 4 * n - 2:
            assert A.graded_dimension(d) == A.graded_dimension(4 * n - 2 - d)
    assert A.total_dimension() == n * (n + 1)


def test_dimension_examples(fcpn2):
    assert fcpn2.graded_dimension(4) == 2
    assert fcpn2.graded_dimension(3) == 0
    assert fcpn2.graded_dimension(0) == 1
    assert build(fcpn_presentation(3)).top_degree() == 10
    assert build(cpn_presentation(2)).top_degree() == 4
    assert build(product_presentation(cpn_presentation(2), cpn_presentation(2))).top_degree() == 8
    assert fcpn2.total_dimension() == 6
    assert build(fcpn_presentation(1)).total_dimension() == 2
    assert build(cpn_presentation(4)).total_dimension() == 5


@pytest.mark.parametrize("p", [fcpn_presentation(3), product_presentation(fcpn_presentation(2), cpn_presentation(2))])
def test_basis_plus_pivots_is_all_monomials(p):
    A = build(p)
    for d in range(A.cap + 1):
        monos = monomials_of_degree(p.degrees, d)
        pivots = [m for m in monos if A.is_reducible(m)]
        assert len(A.basis(d)) + len(pivots) == len(monos)
        for m in A.basis(d):
            assert A.reduce_monomial(m) == {m: 1}


def test_unit_basis(fcpn2):
    assert fcpn2.basis(0) == ((0, 0),)


def test_above_sound_cap_is_zero(fcpn2):
    assert fcpn2.graded_dimension(100) == 0
    assert not fcpn2.monomial((20, 20))


def test_truncated_cap():
    A = build(parse_presentation("gen x 2\ngen y 4\nrel x^2*y - y^2\nmaxdeg 8\n"))
    assert not A.cap_sound
    # x^4, x^2y, y^2 modulo one relation
    assert A.graded_dimension(8) == 2
    with pytest.raises(Truncated):
        A.graded_dimension(10)
    with pytest.raises(Truncated):
        A.top_degree()
    with pytest.raises(Truncated):
        A.gen("x") ** 5
    assert A.betti() == (1, 0, 1, 0, 2, 0, 2, 0, 2)


def test_detected_cap_wins_over_user_cap():
    A = build(parse_presentation("gen a 2\nrel a^3\nmaxdeg 40\n"))
    assert A.cap_sound and A.cap == 4


def test_mixed_degrees():
    A = build(parse_presentation("gen x 2\ngen y 4\nrel x^3\nrel y^2\nrel x^2*y\n"))
    assert A.betti() == (1, 0, 1, 0, 2, 0, 1)
    assert A.parse("x^2 * y") == 0


def test_cross_algebra_mixing_rejected(fcpn1, fcpn2):
    with pytest.raises(InvalidParameter):
        fcpn1.gen("a1") * fcpn2.gen("a1")


def test_element_str(fcpn2):
    assert str(fcpn2.parse("a1^2")) == "-a1*a2 - a2^2"
    assert str(fcpn2.zero()) == "0"
    assert str(fcpn2.parse("2*a1") * Fraction(1, 3)) == "2/3*a1"


def test_normal_form_idempotent(fcpn2):
    x = fcpn2.parse("a1^2 + 7*a1*a2")
    assert fcpn2.normal_form(x) == x


# -- axioms on random homogeneous elements ------------------------------------

RINGS = {
    "fcpn1": build(fcpn_presentation(1)),
    "fcpn2": build(fcpn_presentation(2)),
    "fcpn3": build(fcpn_presentation(3)),
    "cpn3": build(cpn_presentation(3)),
    "cpn2xcpn2": build(product_presentation(cpn_presentation(2), cpn_presentation(2))),
}

coeffs = st.fractions(min_value=-20, max_value=20, max_denominator=7)


@st.composite
def homogeneous(draw, A, degree=None):
    degrees = [d for d in range(A.top_degree() + 1) if A.graded_dimension(d)]
    d = draw(st.sampled_from(degrees)) if degree is None else degree
    basis = A.basis(d)
    cs = draw(st.lists(coeffs, min_size=len(basis), max_size=len(basis)))
    return A.normal_form(dict(zip(basis, cs)))


@st.composite
def triples(draw):
    name = draw(st.sampled_from(sorted(RINGS)))
    A = RINGS[name]
    x = draw(homogeneous(A))
    y = draw(homogeneous(A))
    z = draw(homogeneous(A))
    d = draw(st.sampled_from([d for d in range(A.top_degree() + 1) if A.graded_dimension(d)]))
    w = draw(homogeneous(A, d))
    v = draw(homogeneous(A, d))
    return A, x, y, z, w, v


@settings(max_examples=300, deadline=None)
@given(triples())
def test_ring_axioms(t):
    A, x, y, z, w, v = t
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert x * (w + v) == x * w + x * v
    assert A.normal_form(x * y) == x * y
    if x.homogeneous_degree is not None and y.homogeneous_degree is not None and x * y:
        assert (x * y).homogeneous_degree == x.homogeneous_degree + y.homogeneous_degree
