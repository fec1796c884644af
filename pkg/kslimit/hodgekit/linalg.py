"""Exact linear algebra over Q and Q(i)."""

from itertools import chain
from logging import getLogger
from typing import Any, Iterable, Iterator, Sequence

from sympy import QQ, QQ_I, Rational
from sympy.polys.domains.domain import Domain
from sympy.polys.domains.gaussiandomains import GaussianElement
from sympy.polys.matrices import DomainMatrix

from .error import DimensionMismatch, NotNilpotent

_LOGGER = getLogger(__name__)

# Elements of QQ or QQ_I
Scalar = Any
Vector = tuple[Scalar, ...]
Mat = DomainMatrix


def is_gaussian(value: Scalar) -> bool:
    return isinstance(value, GaussianElement)


def field_of(values: Iterable[Scalar]) -> Domain:
    """Return the smaller of Q and Q(i) containing every value."""
    for value in values:
        if is_gaussian(value) and value.y:
            return QQ_I
    return QQ


def join_fields(*fields: Domain) -> Domain:
    return QQ_I if any(f == QQ_I for f in fields) else QQ


def to_field(value: Scalar, field: Domain = QQ) -> Scalar:
    """Convert an int, rational or Gaussian rational into an element of field."""
    if is_gaussian(value):
        if field == QQ_I:
            return value
        if value.y:
            raise ValueError(f"{value} is not rational")
        return value.x
    if field == QQ_I:
        return QQ_I(value)
    return QQ.convert(value)


def rational(text: str | int) -> Scalar:
    """Parse "p/q" or "p" into an element of QQ."""
    return QQ.from_sympy(Rational(text))


def gaussian(re: Scalar, im: Scalar = 0) -> Scalar:
    return QQ_I(to_field(re), to_field(im))


def conj(value: Scalar) -> Scalar:
    if is_gaussian(value):
        return QQ_I(value.x, -value.y)
    return value


def real_part(value: Scalar) -> Scalar:
    return value.x if is_gaussian(value) else to_field(value)


def imag_part(value: Scalar) -> Scalar:
    return value.y if is_gaussian(value) else QQ.zero


def is_real(value: Scalar) -> bool:
    return not imag_part(value)


def format_rational(value: Scalar) -> str:
    """Render a rational as "p/q" or "p"."""
    return str(QQ.to_sympy(to_field(value)))


def format_scalar(value: Scalar) -> str:
    if is_real(value):
        return format_rational(real_part(value))
    sign = "+" if value.y > 0 else "-"
    return f"{format_rational(value.x)}{sign}{format_rational(abs(value.y))}*I"


# Vectors are plain tuples of domain elements


def vector(values: Iterable[Scalar], field: Domain | None = None) -> Vector:
    items = list(values)
    field = field or field_of(items)
    return tuple(to_field(v, field) for v in items)


def standard_basis(n: int, field: Domain = QQ) -> list[Vector]:
    return [tuple(field.one if i == j else field.zero for j in range(n)) for i in range(n)]


def vconj(v: Vector) -> Vector:
    return tuple(conj(x) for x in v)


def vadd(v: Vector, w: Vector) -> Vector:
    _check_dim(len(v), len(w))
    return vector(a + b for a, b in zip(v, w))


def vsub(v: Vector, w: Vector) -> Vector:
    _check_dim(len(v), len(w))
    return vector(a - b for a, b in zip(v, w))


def vscale(c: Scalar, v: Vector) -> Vector:
    return vector(c * x for x in v)


def dot(v: Sequence[Scalar], w: Sequence[Scalar]) -> Scalar:
    """Bilinear dot product, no conjugation."""
    _check_dim(len(v), len(w))
    field = join_fields(field_of(v), field_of(w))
    total = field.zero
    for a, b in zip(v, w):
        if a and b:
            total += to_field(a, field) * to_field(b, field)
    return total


def is_zero_vector(v: Iterable[Scalar]) -> bool:
    return not any(bool(x) for x in v)


def real_vector(v: Vector) -> Vector:
    return vector((real_part(x) for x in v), QQ)


def imag_vector(v: Vector) -> Vector:
    return vector((imag_part(x) for x in v), QQ)


def complex_vector(re: Sequence[Scalar], im: Sequence[Scalar]) -> Vector:
    """Combine real and imaginary parts, staying over Q when im vanishes."""
    _check_dim(len(re), len(im))
    if is_zero_vector(im):
        return vector(re, QQ)
    return tuple(gaussian(a, b) for a, b in zip(re, im))


# Matrices


def matrix(rows: Sequence[Sequence[Scalar]], field: Domain | None = None) -> Mat:
    """Build a dense DomainMatrix from nested rows of scalars."""
    items = [list(row) for row in rows]
    ncols = len(items[0]) if items else 0
    for row in items:
        _check_dim(ncols, len(row))
    field = field or field_of(chain.from_iterable(items))
    return DomainMatrix(
        [[to_field(e, field) for e in row] for row in items], (len(items), ncols), field
    )


def identity(n: int, field: Domain = QQ) -> Mat:
    return matrix(standard_basis(n, field), field)


def zero_matrix(rows: int, cols: int, field: Domain = QQ) -> Mat:
    return matrix([[field.zero] * cols for _ in range(rows)], field)


def columns_to_matrix(columns: Sequence[Vector], field: Domain | None = None) -> Mat:
    """Matrix whose columns are the given vectors."""
    if not columns:
        raise ValueError("Need at least one column")
    return matrix([list(row) for row in zip(*columns)], field)


def entries(M: Mat) -> list[list[Scalar]]:
    return M.to_list()


def column(M: Mat, j: int) -> Vector:
    return tuple(row[j] for row in M.to_list())


def convert(M: Mat, field: Domain) -> Mat:
    return M if M.domain == field else M.convert_to(field)


def mat_equal(A: Mat, B: Mat) -> bool:
    if A.shape != B.shape:
        return False
    field = join_fields(A.domain, B.domain)
    return convert(A, field).to_list() == convert(B, field).to_list()


def is_zero_matrix(M: Mat) -> bool:
    return all(not bool(e) for e in M.to_list_flat())


def mat_conj(M: Mat) -> Mat:
    if M.domain != QQ_I:
        return M
    return matrix([[conj(e) for e in row] for row in M.to_list()], QQ_I)


def apply(M: Mat, v: Sequence[Scalar]) -> Vector:
    """Return M·v for a column vector v."""
    rows, cols = M.shape
    _check_dim(cols, len(v))
    field = join_fields(M.domain, field_of(v))
    result = convert(M, field) * matrix([[x] for x in v], field)
    return tuple(row[0] for row in result.to_list())


def is_symmetric(M: Mat) -> bool:
    return mat_equal(M, M.transpose())


def rref(M: Mat) -> tuple[Mat, tuple[int, ...]]:
    """Reduced row-echelon form and pivot columns; rank is the pivot count."""
    rows, cols = M.shape
    if rows == 0 or cols == 0 or is_zero_matrix(M):
        return M, ()
    form, pivots = M.to_field().rref()
    return form, tuple(pivots)


def rank(M: Mat) -> int:
    return len(rref(M)[1])


def exp_nilpotent(M: Mat, scale: Scalar = 1) -> Mat:
    """Return exp(scale·M) as a finite sum; M must be nilpotent."""
    n = M.shape[0]
    field = join_fields(M.domain, field_of([scale]))
    step = convert(M, field) * to_field(scale, field)
    total = identity(n, field)
    term = identity(n, field)
    for k in range(1, n + 1):
        term = term * step * to_field(QQ(1, k), field)
        if is_zero_matrix(term):
            return total
        total = total + term
    raise NotNilpotent(n)


def _check_dim(expected: int, actual: int) -> None:
    if expected != actual:
        raise DimensionMismatch(expected, actual)


class Subspace:
    """A linear subspace of K^n, K one of Q and Q(i).

    The basis is kept as the reduced row-echelon form with zero rows dropped, over
    Q whenever every entry is rational. Equal subspaces therefore have identical
    stored bases.
    """

    def __init__(self, ambient: int, rows: Sequence[Sequence[Scalar]] = ()):
        self._ambient = ambient
        for row in rows:
            _check_dim(ambient, len(row))
        nonzero = [list(row) for row in rows if not is_zero_vector(row)]
        if not nonzero:
            self._rows: tuple[Vector, ...] = ()
            self._pivots: tuple[int, ...] = ()
            self._field: Domain = QQ
            return

        form, pivots = rref(matrix(nonzero))
        reduced = form.to_list()[: len(pivots)]
        field = field_of(chain.from_iterable(reduced))
        self._rows = tuple(vector(row, field) for row in reduced)
        self._pivots = pivots
        self._field = field

    @classmethod
    def zero(cls, ambient: int) -> "Subspace":
        return cls(ambient)

    @classmethod
    def full(cls, ambient: int) -> "Subspace":
        return cls(ambient, standard_basis(ambient))

    @property
    def ambient(self) -> int:
        return self._ambient

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def field(self) -> Domain:
        return self._field

    @property
    def rows(self) -> tuple[Vector, ...]:
        return self._rows

    @property
    def pivots(self) -> tuple[int, ...]:
        return self._pivots

    @property
    def is_zero(self) -> bool:
        return not self._rows

    @property
    def is_full(self) -> bool:
        return self.dim == self._ambient

    def basis_matrix(self) -> Mat:
        return matrix(self._rows, self._field)

    def conj(self) -> "Subspace":
        return Subspace(self._ambient, [vconj(row) for row in self._rows])

    def contains(self, v: Sequence[Scalar]) -> bool:
        _check_dim(self._ambient, len(v))
        if is_zero_vector(v):
            return True
        return Subspace(self._ambient, [*self._rows, v]).dim == self.dim

    def __contains__(self, v: Sequence[Scalar]) -> bool:
        return self.contains(v)

    def __le__(self, other: "Subspace") -> bool:
        _check_dim(self._ambient, other.ambient)
        return all(other.contains(row) for row in self._rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self._ambient == other.ambient
            and self._field == other.field
            and self._rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self._ambient, self._rows))

    def __iter__(self) -> Iterator[Vector]:
        return iter(self._rows)

    def __str__(self) -> str:
        return f'<Subspace ambient="{self._ambient}" dim="{self.dim}" field="{self._field}">'

    __repr__ = __str__


def kernel(M: Mat) -> Subspace:
    rows, cols = M.shape
    if rows == 0 or is_zero_matrix(M):
        return Subspace.full(cols)
    if rank(M) == cols:
        return Subspace.zero(cols)
    return Subspace(cols, M.to_field().nullspace().to_list())


def image(M: Mat) -> Subspace:
    rows, cols = M.shape
    return Subspace(rows, M.transpose().to_list() if cols else ())


def span_sum(A: Subspace, B: Subspace) -> Subspace:
    _check_dim(A.ambient, B.ambient)
    return Subspace(A.ambient, [*A.rows, *B.rows])


def annihilator(S: Subspace) -> Subspace:
    """Vectors x with row·x = 0 for every basis row (bilinear pairing)."""
    if S.is_zero:
        return Subspace.full(S.ambient)
    return kernel(S.basis_matrix())


def intersect(A: Subspace, B: Subspace) -> Subspace:
    _check_dim(A.ambient, B.ambient)
    if A.is_zero or B.is_zero:
        return Subspace.zero(A.ambient)
    constraints = [*annihilator(A).rows, *annihilator(B).rows]
    if not constraints:
        return Subspace.full(A.ambient)
    return kernel(matrix(constraints))


def preimage(M: Mat, S: Subspace) -> Subspace:
    """Return {x : M·x ∈ S}."""
    rows, cols = M.shape
    _check_dim(rows, S.ambient)
    constraints = annihilator(S)
    if constraints.is_zero:
        return Subspace.full(cols)
    return kernel(constraints.basis_matrix() * M)


def map_subspace(M: Mat, S: Subspace) -> Subspace:
    """Return the image M(S)."""
    rows, cols = M.shape
    _check_dim(cols, S.ambient)
    return Subspace(rows, [apply(M, row) for row in S.rows])


def quotient_basis(S: Subspace, T: Subspace) -> list[Vector]:
    """Rows of S's echelon basis completing a basis of T ∩ S to one of S.

    When T ⊆ S this is a basis of the quotient S/T, listed as representatives.
    """
    current = intersect(S, T)
    chosen: list[Vector] = []
    for row in S.rows:
        extended = span_sum(current, Subspace(S.ambient, [row]))
        if extended.dim > current.dim:
            chosen.append(row)
            current = extended
    return chosen


def leading_minors(H: Mat) -> list[Scalar]:
    """Leading principal minors of a square matrix."""
    n = H.shape[0]
    return [H.extract(list(range(k)), list(range(k))).det() for k in range(1, n + 1)]


def definiteness(H: Mat) -> int:
    """Return 1 or -1 for a positive or negative definite Hermitian matrix, else 0.

    Leading principal minors of a Hermitian matrix are real. The empty matrix
    counts as neither.
    """
    if H.shape[0] == 0:
        return 0
    raw = leading_minors(H)
    if not all(is_real(m) for m in raw):
        return 0
    minors = [real_part(m) for m in raw]
    if all(m > 0 for m in minors):
        return 1
    if all((m > 0) if k % 2 else (m < 0) for k, m in enumerate(minors)):
        return -1
    return 0


def is_hermitian(H: Mat) -> bool:
    return mat_equal(H, mat_conj(H).transpose())
