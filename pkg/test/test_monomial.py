import pytest, pickle
from hypothesis import given, settings, strategies as st
from SlyMultiplicity import *

xy = AmbientRing.of('x', 'y')

def test_minimal_generators():
    A = xy.ideal((2, 0), (1, 1), (3, 0), (2, 1))

    assert set(A.gens) == {(2, 0), (1, 1)}
    assert A == xy.ideal((1, 1), (2, 0))
    assert str(xy.zero_ideal()) == '(0)'
    assert str(xy.ideal((0, 0), (1, 0))) == '(1)'

def test_monomials():
    x, y = xy.variable(0), xy.variable(1)

    assert xy.monomial(x=2, y=1) == x * x * y
    assert xy.format(x * x * y) == 'x^2*y'
    assert xy.format(xy.one()) == '1'
    assert (x * y).lcm(x * x) == xy.monomial(x=2, y=1)
    assert (x * y).gcd(x * x) == x
    assert x.divides(x * y) and not y.divides(x * x)
    with pytest.raises(ArityMismatch):
        x * AmbientRing.of('x').variable(0)
    with pytest.raises(ValueError):
        xy.monomial(z=1)

def test_arithmetic():
    m = xy.maximal_ideal()

    assert m ** 2 == xy.ideal((2, 0), (1, 1), (0, 2))
    assert m.power(2, modulo=xy.ideal((0, 1))) == xy.ideal((2, 0), (0, 1))
    assert m.power(0) == xy.unit_ideal()
    assert xy.ideal((1, 0)) & xy.ideal((0, 1)) == xy.ideal((1, 1))
    assert xy.ideal((1, 0)) + xy.ideal((0, 1)) == m
    assert xy.ideal((1, 0)) * xy.zero_ideal() == xy.zero_ideal()
    with pytest.raises(ValueError):
        m.power(-1)

def test_colon():
    A = xy.ideal((2, 0), (1, 1))

    assert A.colon(xy.ideal((1, 0))) == xy.maximal_ideal()
    assert A.colon(xy.ideal((2, 0))) == xy.unit_ideal()
    assert xy.ideal((2, 0), (0, 2)).colon(xy.maximal_ideal()) == xy.ideal((2, 0), (1, 1), (0, 2))
    with pytest.raises(ZeroColon):
        A.colon(xy.zero_ideal())

def test_primary_structure():
    assert xy.ideal((2, 1), (0, 3)).radical() == xy.ideal((0, 1))
    assert xy.ideal((2, 0), (1, 1), (0, 3)).is_m_primary()
    assert xy.ideal((2, 0), (1, 1)).missing_pure_power() == 'y'
    assert not xy.unit_ideal().is_m_primary()
    assert xy.ideal((2, 0), (0, 3)).box_bounds() == [2, 3]
    with pytest.raises(NotArtinian) as e:
        xy.ideal((2, 0)).box_bounds()
    assert e.value.missing_variable == 'y'

def test_mixed_rings():
    with pytest.raises(ArityMismatch):
        xy.maximal_ideal() + AmbientRing.of('x').maximal_ideal()
    with pytest.raises(ValueError):
        AmbientRing.of('x', 'x')

def test_pickle():
    A = xy.ideal((2, 0), (1, 1))
    assert pickle.loads(pickle.dumps(A)) == A

@st.composite
def ideals(draw, allow_zero: bool = True):
    gens = draw(st.lists(
        st.tuples(st.integers(0, 3), st.integers(0, 3)),
        min_size=0 if allow_zero else 1, max_size=4))
    return xy.ideal(*gens)

@settings(max_examples=150, deadline=None)
@given(ideals(), ideals())
def test_lattice_laws(A: MonomialIdeal, B: MonomialIdeal):
    assert A & B <= A
    assert A <= A + B
    assert A * B <= A & B
    assert A + B == B + A
    assert A & B == B & A

@settings(max_examples=150, deadline=None)
@given(ideals(), ideals(allow_zero=False))
def test_colon_laws(A: MonomialIdeal, B: MonomialIdeal):
    C = A.colon(B)
    assert C * B <= A
    assert A <= C
    for u in C.gens:
        assert xy.ideal(u) * B <= A

def test_membership_and_minimalize():
    A = xy.ideal((2, 0), (1, 1))

    assert minimalize(xy, [(2, 0), (2, 1), (0, 1)]) == xy.ideal((2, 0), (0, 1))
    assert minimalize(xy, []).is_zero()
    assert minimalize(xy, [(0, 0), (1, 0)]).is_unit()
    assert (3, 2) in A
    assert (0, 5) not in A
    assert xy.one() in xy.unit_ideal()

def test_intersection_and_colon_by_unit():
    A = xy.ideal((2, 0), (0, 1))

    assert A & xy.ideal((1, 0)) == xy.ideal((2, 0), (1, 1))
    assert A & xy.unit_ideal() == A
    assert A.colon(xy.unit_ideal()) == A
    assert xy.ideal((3, 0), (0, 2)).colon(xy.maximal_ideal()) == xy.ideal((3, 0), (2, 1), (0, 2))

@settings(max_examples=150, deadline=None)
@given(ideals(), st.integers(0, 3), st.integers(0, 3))
def test_power_adds_exponents(A: MonomialIdeal, a: int, b: int):
    assert A.power(a + b) == A.power(a) * A.power(b)

@settings(max_examples=300, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)), max_size=4),
    st.tuples(st.integers(0, 5), st.integers(0, 5)))
def test_contains_matches_divisors(gens: list[Exponents], u: Exponents):
    by_divisor = any(all(g_i <= u_i for g_i, u_i in zip(g, u)) for g in gens)
    assert xy.ideal(*gens).contains(u) == by_divisor

@settings(max_examples=150, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)), max_size=5), st.randoms())
def test_minimalize_canonical(gens: list[Exponents], rng):
    A = minimalize(xy, gens)
    shuffled = list(gens)
    rng.shuffle(shuffled)

    assert minimalize(xy, A.gens).gens == A.gens
    assert minimalize(xy, shuffled).gens == A.gens

@settings(max_examples=150, deadline=None)
@given(ideals(), ideals(), ideals())
def test_sum_and_intersection_associate(A: MonomialIdeal, B: MonomialIdeal, C: MonomialIdeal):
    assert (A + B) + C == A + (B + C)
    assert (A & B) & C == A & (B & C)
    assert A + A == A and A & A == A
