import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import QQ, QQ_I

from kslimit.hodgekit.error import DimensionMismatch, NotNilpotent
from kslimit.hodgekit.linalg import (
    Subspace,
    apply,
    definiteness,
    exp_nilpotent,
    field_of,
    format_scalar,
    gaussian,
    identity,
    image,
    intersect,
    is_zero_matrix,
    kernel,
    mat_equal,
    matrix,
    preimage,
    quotient_basis,
    rank,
    rational,
    rref,
    span_sum,
    vconj,
    vector,
)

small = st.integers(min_value=-3, max_value=3)


def square(n: int):
    return st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)


def test_rational_parses_fractions() -> None:
    """Rationals parse from strings and ints."""
    assert rational("3/6") == QQ(1, 2)
    assert rational(-4) == QQ(-4)
    assert format_scalar(rational("-7/3")) == "-7/3"


def test_gaussian_formatting() -> None:
    """Gaussian rationals print with an explicit I."""
    assert format_scalar(gaussian(1, -2)) == "1-2*I"
    assert format_scalar(gaussian(QQ(1, 2), 0)) == "1/2"


def test_field_of_downcasts_real_gaussians() -> None:
    """A vector whose Gaussian entries are all real lives over Q."""
    assert field_of([gaussian(1, 0), QQ(2)]) == QQ
    assert field_of([gaussian(1, 1)]) == QQ_I
    assert vector([gaussian(2, 0), 1]) == (QQ(2), QQ(1))


def test_subspace_is_canonical() -> None:
    """Different spanning sets of the same space compare equal."""
    a = Subspace(3, [[1, 1, 0], [0, 1, 1]])
    b = Subspace(3, [[1, 2, 1], [2, 3, 1], [0, 0, 0]])
    assert a == b
    assert a.dim == 2
    assert hash(a) == hash(b)


def test_subspace_conjugation() -> None:
    """A complex line and its conjugate are different subspaces over Q(i)."""
    line = Subspace(2, [[1, gaussian(0, 1)]])
    assert line.field == QQ_I
    assert line != line.conj()
    assert span_sum(line, line.conj()) == Subspace.full(2)
    assert intersect(line, line.conj()).is_zero


def test_subspace_dimension_check() -> None:
    """Vectors must match the ambient dimension."""
    with pytest.raises(DimensionMismatch):
        Subspace(3, [[1, 2]])


def test_kernel_and_image_of_nilpotent() -> None:
    """A single Jordan block has a one-dimensional kernel."""
    N = matrix([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    assert kernel(N) == Subspace(3, [[1, 0, 0]])
    assert image(N) == Subspace(3, [[1, 0, 0], [0, 1, 0]])
    assert preimage(N, Subspace(3, [[1, 0, 0]])) == Subspace(3, [[1, 0, 0], [0, 1, 0]])


def test_quotient_basis_completes_the_smaller_space() -> None:
    """Representatives complete T to a basis of S."""
    S = Subspace.full(3)
    T = Subspace(3, [[1, 1, 1]])
    reps = quotient_basis(S, T)
    assert len(reps) == 2
    assert span_sum(T, Subspace(3, reps)) == S


def test_exp_nilpotent_is_a_finite_sum() -> None:
    """exp of a Jordan block is upper unitriangular."""
    N = matrix([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    T = exp_nilpotent(N)
    assert T.to_list() == [
        [QQ(1), QQ(1), QQ(1, 2)],
        [QQ(0), QQ(1), QQ(1)],
        [QQ(0), QQ(0), QQ(1)],
    ]
    assert mat_equal(exp_nilpotent(N, -1) * T, identity(3))


def test_exp_rejects_non_nilpotent() -> None:
    """exp is only computed for nilpotent matrices."""
    with pytest.raises(NotNilpotent):
        exp_nilpotent(identity(2))


def test_definiteness() -> None:
    """Leading minors decide the sign of a Hermitian form."""
    assert definiteness(matrix([[2, 0], [0, 3]])) == 1
    assert definiteness(matrix([[-2, 1], [1, -3]])) == -1
    assert definiteness(matrix([[1, 0], [0, -1]])) == 0
    i = gaussian(0, 1)
    assert definiteness(matrix([[2, i], [-i, 2]], QQ_I)) == 1


@given(square(3))
@settings(max_examples=40, deadline=None)
def test_rank_nullity(rows) -> None:
    """dim ker M + rank M = n."""
    M = matrix(rows, QQ)
    assert kernel(M).dim + rank(M) == 3
    for v in kernel(M):
        assert all(not c for c in apply(M, v))


@given(square(3), square(3))
@settings(max_examples=30, deadline=None)
def test_intersection_dimension_formula(a, b) -> None:
    """dim(A + B) + dim(A ∩ B) = dim A + dim B."""
    A = Subspace(3, a)
    B = Subspace(3, b)
    assert span_sum(A, B).dim + intersect(A, B).dim == A.dim + B.dim
    assert intersect(A, B) <= A
    assert intersect(A, B) <= B


@given(st.lists(small, min_size=3, max_size=3), st.lists(small, min_size=3, max_size=3))
@settings(max_examples=30, deadline=None)
def test_conjugation_is_an_involution(re, im) -> None:
    """Conjugating a complex line twice gives it back."""
    v = tuple(gaussian(a, b) for a, b in zip(re, im))
    line = Subspace(3, [v])
    assert line.conj().conj() == line
    assert vector(vconj(vconj(v))) == vector(v)


def test_zero_matrix() -> None:
    assert is_zero_matrix(matrix([[0, 0], [0, 0]]))
    assert not is_zero_matrix(identity(2))


rationals = st.builds(lambda p, q: QQ(p, q), small, st.integers(min_value=1, max_value=5))
gaussians = st.builds(lambda a, b: gaussian(a, b), rationals, rationals)


@pytest.mark.parametrize(
    "scalars,one", [(rationals, QQ.one), (gaussians, QQ_I.one)], ids=["QQ", "QQ_I"]
)
@given(data=st.data())
@settings(max_examples=40, deadline=None)
def test_field_axioms(scalars, one, data) -> None:
    """Both coefficient fields are associative, distributive and have inverses."""
    a, b, c = (data.draw(scalars) for _ in range(3))
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == a - a
    assert not (a - a)
    if a:
        assert a * (1 / a) == one
        assert (a * b) / a == b


@pytest.mark.parametrize("field", [QQ, QQ_I])
@given(rows=square(3), imaginary=square(3))
@settings(max_examples=30, deadline=None)
def test_rref_is_idempotent(field, rows, imaginary) -> None:
    if field == QQ_I:
        rows = [[gaussian(a, b) for a, b in zip(r, s)] for r, s in zip(rows, imaginary)]
    form, pivots = rref(matrix(rows, field))
    again, pivots_again = rref(form)
    assert mat_equal(again, form)
    assert pivots_again == pivots
