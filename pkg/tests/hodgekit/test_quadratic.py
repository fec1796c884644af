from random import Random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import QQ

from kslimit.forge import random_congruence
from kslimit.hodgekit.error import DegenerateForm, NotIsotropic, ZeroVector
from kslimit.hodgekit.linalg import apply, gaussian, is_zero_vector, matrix, vector
from kslimit.hodgekit.quadratic import QuadSpace, find_isotropic, hermitian_norm

K3_LIKE = QuadSpace.diagonal([2, 2, -2, -2])


def test_rejects_degenerate_forms() -> None:
    """Singular and non-symmetric Gram matrices are refused."""
    with pytest.raises(DegenerateForm):
        QuadSpace.from_rows([[1, 1], [1, 1]])
    with pytest.raises(DegenerateForm):
        QuadSpace.from_rows([[1, 2], [0, 1]])


def test_signature() -> None:
    """Signature counts positive and negative frame norms."""
    assert K3_LIKE.signature() == (2, 2)
    assert K3_LIKE.is_k3_type
    assert not QuadSpace.diagonal([2, -2, -2]).is_k3_type


def test_hyperbolic_plane_diagonalizes() -> None:
    """A form with zero diagonal is still diagonalized."""
    space = QuadSpace.from_rows([[0, 1], [1, 0]])
    P, diagonal = space.lagrange_diagonalize()
    assert space.signature() == (1, 1)
    D = P.transpose() * space.gram * P
    assert D.to_list() == [[diagonal[0], QQ(0)], [QQ(0), diagonal[1]]]


def test_hyperbolic_extension() -> None:
    """x and y have norms ±2, are orthogonal and average to v."""
    v = (1, 0, 1, 0)
    x, y = K3_LIKE.hyperbolic_extension(v)
    assert K3_LIKE.norm(x) == 2
    assert K3_LIKE.norm(y) == -2
    assert K3_LIKE.inner(x, y) == 0
    assert tuple(a + b for a, b in zip(x, y)) == (2, 0, 2, 0)


def test_hyperbolic_extension_of_the_hyperbolic_plane() -> None:
    """z is the first basis vector pairing with v, so x = e₁ + e₂ and y = e₁ - e₂."""
    space = QuadSpace.from_rows([[0, 1], [1, 0]])
    x, y = space.hyperbolic_extension((1, 0))
    assert x == vector((1, 1))
    assert y == vector((1, -1))
    assert space.norm(x) == 2
    assert space.norm(y) == -2


def test_hyperbolic_extension_of_a_diagonal_plane() -> None:
    space = QuadSpace.diagonal([2, -2])
    x, y = space.hyperbolic_extension((1, 1))
    assert space.norm(x) == 2
    assert space.norm(y) == -2
    assert space.inner(x, y) == 0
    assert tuple(a + b for a, b in zip(x, y)) == (2, 2)


def test_hyperbolic_extension_errors() -> None:
    with pytest.raises(ZeroVector):
        K3_LIKE.hyperbolic_extension((0, 0, 0, 0))
    with pytest.raises(NotIsotropic):
        K3_LIKE.hyperbolic_extension((1, 0, 0, 0))


def test_hermitian_norm_of_period() -> None:
    """q(v, conj v) of e₁ + i·e₂ is the sum of both norms."""
    v = (1, gaussian(0, 1), 0, 0)
    assert not K3_LIKE.norm(v)
    assert hermitian_norm(K3_LIKE, v) == 4


def test_orthogonal_operator() -> None:
    """Rotations in a definite plane preserve the form, shears do not."""
    rotation = matrix([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]])
    shear = matrix([[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]])
    assert K3_LIKE.is_orthogonal_operator(rotation)
    assert not K3_LIKE.is_orthogonal_operator(shear)


def test_find_isotropic() -> None:
    v = find_isotropic(QuadSpace.diagonal([2, -8]))
    assert v is not None
    assert not is_zero_vector(v)
    assert QuadSpace.diagonal([2, -8]).norm(v) == 0
    assert find_isotropic(QuadSpace.diagonal([1, 1])) is None


def test_orthogonal_complement() -> None:
    complement = K3_LIKE.orthogonal_complement([(1, 0, 1, 0)])
    assert complement.dim == 3
    assert (1, 0, 1, 0) in complement


@given(
    st.lists(
        st.lists(st.integers(min_value=-2, max_value=2), min_size=4, max_size=4),
        min_size=4,
        max_size=4,
    )
)
@settings(max_examples=25, deadline=None)
def test_congruence_preserves_signature(rows) -> None:
    """PᵀGP has the signature of G for invertible P."""
    P = matrix(rows, QQ)
    if not P.det():
        return
    moved = K3_LIKE.congruent(P)
    assert moved.signature() == (2, 2)
    x = (1, 2, 0, -1)
    assert moved.norm(x) == K3_LIKE.norm(apply(P, x))


@given(
    rank=st.integers(min_value=3, max_value=6),
    seed=st.integers(min_value=0, max_value=10**6),
    norms=st.lists(st.sampled_from([-3, -2, -1, 1, 2, 3]), min_size=4, max_size=4),
)
@settings(max_examples=100, deadline=None)
def test_hyperbolic_extension_in_random_spaces(rank, seed, norms) -> None:
    """Every isotropic vector extends, in spaces written in a random basis."""
    base = QuadSpace.diagonal([1, -1] + norms[: rank - 2])
    P = random_congruence(Random(seed), rank)
    space = base.congruent(P)
    # P⁻¹(e₁ + e₂) is isotropic for PᵀGP
    v = apply(P.inv(), (1, 1) + (0,) * (rank - 2))
    assert not space.norm(v)
    x, y = space.hyperbolic_extension(v)
    assert space.norm(x) == 2
    assert space.norm(y) == -2
    assert space.inner(x, y) == 0
    assert tuple(a + b for a, b in zip(x, y)) == tuple(2 * c for c in v)
