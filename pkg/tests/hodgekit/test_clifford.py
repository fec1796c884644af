from random import Random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import QQ

from kslimit.forge import conjugate_example, example, random_congruence
from kslimit.hodgekit.clifford import (
    CliffordAlgebra,
    bivector_to_so,
    so_to_bivector,
    spin_exp,
    wedge,
)
from kslimit.hodgekit.error import AlgebraMismatch, NotInOrthogonalAlgebra, NotInvertible
from kslimit.hodgekit.linalg import apply, gaussian, mat_equal, matrix
from kslimit.hodgekit.quadratic import QuadSpace

SPACE = QuadSpace.diagonal([2, 2, -2])
ALGEBRA = CliffordAlgebra(SPACE)

# A form that is not diagonal in the standard basis
SKEW_SPACE = QuadSpace.from_rows([[2, 1, 0], [1, 2, 0], [0, 0, -2]])

# Type III monodromy logarithm on diag(2, -2, 2)
TYPE_III_SPACE = QuadSpace.diagonal([2, -2, 2])
TYPE_III_N = matrix([[0, 0, 1], [0, 0, 1], [-1, 1, 0]], QQ)

vectors = st.lists(st.integers(min_value=-3, max_value=3), min_size=3, max_size=3)


def test_dimension() -> None:
    assert ALGEBRA.dimension == 8
    assert len(list(ALGEBRA.blades())) == 8


@pytest.mark.parametrize("space", [SPACE, SKEW_SPACE])
@given(v=vectors)
@settings(max_examples=30, deadline=None)
def test_defining_relation(space: QuadSpace, v) -> None:
    """v·v = q(v, v) for every vector."""
    algebra = CliffordAlgebra(space)
    x = algebra.embed_vector(v)
    assert x * x == algebra.scalar(space.norm(v))


@given(v=vectors, w=vectors)
@settings(max_examples=30, deadline=None)
def test_anticommutator_is_twice_the_form(v, w) -> None:
    """vw + wv = 2q(v, w)."""
    algebra = CliffordAlgebra(SKEW_SPACE)
    x = algebra.embed_vector(v)
    y = algebra.embed_vector(w)
    assert x * y + y * x == algebra.scalar(2 * SKEW_SPACE.inner(v, w))


def test_vector_round_trip() -> None:
    """Degree-one elements recover their standard coordinates."""
    algebra = CliffordAlgebra(SKEW_SPACE)
    v = (1, -2, 3)
    assert algebra.vector_of(algebra.embed_vector(v)) == (1, -2, 3)
    assert algebra.vector_of(algebra.unit()) is None


def test_involutions() -> None:
    """Conjugation is parity composed with reversal and reverses products."""
    a = ALGEBRA.basis_vector(0) + ALGEBRA.blade(0b011, 3) + ALGEBRA.blade(0b111, -1)
    b = ALGEBRA.basis_vector(2) * ALGEBRA.basis_vector(1) + ALGEBRA.scalar(2)
    assert a.conjugate() == a.parity().reversal()
    assert (a * b).conjugate() == b.conjugate() * a.conjugate()
    assert (a * b).reversal() == b.reversal() * a.reversal()


def test_trace_of_left_multiplication() -> None:
    """Tr(a) is the trace of x ↦ a·x."""
    a = ALGEBRA.scalar(3) + ALGEBRA.blade(0b101, 2)
    assert a.trace() == 24
    M = ALGEBRA.left_mul_matrix(a)
    assert sum(M[i, i].element for i in range(ALGEBRA.dimension)) == 24


def test_inverse() -> None:
    x = ALGEBRA.basis_vector(0)
    assert x * x.inverse() == ALGEBRA.unit()
    isotropic = ALGEBRA.embed_vector((1, 0, 1))
    with pytest.raises(NotInvertible):
        isotropic.inverse()


def test_elements_of_different_algebras_do_not_mix() -> None:
    other = CliffordAlgebra(SPACE)
    with pytest.raises(AlgebraMismatch):
        ALGEBRA.unit() + other.unit()


def test_right_ideal_of_isotropic_vector_is_half() -> None:
    """v·Cl has dimension d/2 for isotropic v, real or complex."""
    assert ALGEBRA.right_ideal((1, 0, 1)).dim == 4
    assert ALGEBRA.right_ideal((1, gaussian(0, 1), 0)).dim == 4


def test_ideal_of_elements() -> None:
    """a·Cl is everything for invertible a and half for an isotropic vector."""
    assert ALGEBRA.ideal_of(ALGEBRA.basis_vector(0)).dim == 8
    isotropic = ALGEBRA.embed_vector((1, 0, 1))
    assert ALGEBRA.ideal_of(isotropic) == ALGEBRA.right_ideal((1, 0, 1))
    assert ALGEBRA.ideal_of(ALGEBRA.zero()).dim == 0


def test_bivector_transfer() -> None:
    """so(V,q) and Λ²V correspond through v∧w ↦ q(w,-)v - q(v,-)w."""
    bivector = so_to_bivector(TYPE_III_SPACE, TYPE_III_N)
    assert mat_equal(bivector_to_so(TYPE_III_SPACE, bivector), TYPE_III_N)
    with pytest.raises(NotInOrthogonalAlgebra):
        so_to_bivector(SPACE, matrix([[1, 0, 0], [0, 0, 0], [0, 0, 0]], QQ))


@given(v=vectors)
@settings(max_examples=25, deadline=None)
def test_eta_bracket(v) -> None:
    """[η(N), v] = N·v."""
    algebra = CliffordAlgebra(TYPE_III_SPACE)
    eta = algebra.eta(TYPE_III_N)
    x = algebra.embed_vector(v)
    assert eta * x - x * eta == algebra.embed_vector(apply(TYPE_III_N, v))


def test_spin_exponential_of_nilpotent_bivector() -> None:
    """exp of the image of an isotropic wedge is a spin element acting as exp(N)."""
    u = (1, 0, 1)
    w = (0, 1, 0)
    g = spin_exp(ALGEBRA.eta_prime(wedge(u, w)))
    assert ALGEBRA.is_spin(g)
    assert g.clifford_norm() == ALGEBRA.unit()
    assert g.reversal() == g.inverse()


def test_string() -> None:
    assert str(ALGEBRA.zero()) == "0"
    assert str(ALGEBRA.blade(0b11, QQ(1, 2))) == "1/2*f1f2"


@given(st.tuples(*(st.integers(min_value=0, max_value=7) for _ in range(3))))
@settings(max_examples=40, deadline=None)
def test_blade_products_associate(masks) -> None:
    """(ab)c = a(bc) on random blade triples of a non-diagonal form."""
    algebra = CliffordAlgebra(SKEW_SPACE)
    a, b, c = (algebra.blade(mask) + algebra.basis_vector(i) for i, mask in enumerate(masks))
    assert (a * b) * c == a * (b * c)


coefficients = st.lists(st.integers(min_value=-2, max_value=2), min_size=8, max_size=8)


@given(a=coefficients, b=coefficients)
@settings(max_examples=30, deadline=None)
def test_trace_is_symmetric(a, b) -> None:
    """Tr(ab) = Tr(ba)."""
    algebra = CliffordAlgebra(SKEW_SPACE)
    x = algebra.from_coordinates(a)
    y = algebra.from_coordinates(b)
    assert (x * y).trace() == (y * x).trace()


def _so_element(space: QuadSpace, u, w):
    return bivector_to_so(space, wedge(u, w))


@given(u1=vectors, w1=vectors, u2=vectors, w2=vectors)
@settings(max_examples=25, deadline=None)
def test_eta_is_a_lie_homomorphism(u1, w1, u2, w2) -> None:
    """η([M₁, M₂]) = [η(M₁), η(M₂)] on so(V,q)."""
    algebra = CliffordAlgebra(SKEW_SPACE)
    M1 = _so_element(SKEW_SPACE, u1, w1)
    M2 = _so_element(SKEW_SPACE, u2, w2)
    a, b = algebra.eta(M1), algebra.eta(M2)
    assert algebra.eta(M1 * M2 - M2 * M1) == a * b - b * a


@pytest.mark.parametrize("name", ["EX-I.3", "EX-II.4", "EX-III.3", "EX-III.4"])
@given(seed=st.integers(min_value=0, max_value=10**6))
@settings(max_examples=5, deadline=None)
def test_eta_of_monodromy_squares_to_zero(name: str, seed: int) -> None:
    """η(N)² = 0 for the built-in examples and their conjugates."""
    m = example(name)
    for structure in (m, conjugate_example(m, random_congruence(Random(seed), m.rank))):
        algebra = CliffordAlgebra(structure.space)
        eta = algebra.eta(structure.monodromy)
        assert eta * eta == algebra.zero()
