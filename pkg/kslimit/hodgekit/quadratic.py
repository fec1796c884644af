"""Rational quadratic spaces."""

from itertools import product
from logging import getLogger
from typing import Sequence

from sympy import QQ, integer_nthroot

from .error import DegenerateForm, DimensionMismatch, NotIsotropic, ZeroVector
from .linalg import (
    Mat,
    Scalar,
    Subspace,
    Vector,
    apply,
    columns_to_matrix,
    dot,
    is_symmetric,
    is_zero_vector,
    kernel,
    mat_equal,
    matrix,
    real_part,
    standard_basis,
    vadd,
    vconj,
    vector,
    vscale,
    vsub,
)

_LOGGER = getLogger(__name__)


class QuadSpace:
    """A non-degenerate rational quadratic space (V, q) given by its Gram matrix."""

    def __init__(self, gram: Mat):
        rows, cols = gram.shape
        if rows != cols:
            raise DimensionMismatch(rows, cols)
        if gram.domain != QQ:
            raise DegenerateForm("Gram matrix must be rational")
        if not is_symmetric(gram):
            raise DegenerateForm("Gram matrix is not symmetric")
        if not gram.det():
            raise DegenerateForm("Gram matrix is singular")
        self._gram = gram
        self._entries = tuple(tuple(row) for row in gram.to_list())
        self._diagonalization: tuple[Mat, tuple[Scalar, ...]] | None = None

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]]) -> "QuadSpace":
        return cls(matrix(rows, QQ))

    @classmethod
    def diagonal(cls, values: Sequence[Scalar]) -> "QuadSpace":
        n = len(values)
        return cls.from_rows(
            [[values[i] if i == j else 0 for j in range(n)] for i in range(n)]
        )

    @property
    def rank(self) -> int:
        return len(self._entries)

    @property
    def gram(self) -> Mat:
        return self._gram

    @property
    def entries(self) -> tuple[tuple[Scalar, ...], ...]:
        return self._entries

    def inner(self, v: Sequence[Scalar], w: Sequence[Scalar]) -> Scalar:
        """Return vᵀGw, bilinear in both arguments."""
        self._check(v)
        self._check(w)
        return dot(v, apply(self._gram, w))

    def norm(self, v: Sequence[Scalar]) -> Scalar:
        return self.inner(v, v)

    def hermitian(self, v: Sequence[Scalar], w: Sequence[Scalar]) -> Scalar:
        """Return q(v, conj w)."""
        return self.inner(v, vconj(vector(w)))

    def covector(self, v: Sequence[Scalar]) -> Vector:
        """The linear form q(v, -) as a row of coefficients."""
        self._check(v)
        return apply(self._gram.transpose(), v)

    def orthogonal_complement(self, vectors: Sequence[Sequence[Scalar]]) -> Subspace:
        """Return {x : q(v, x) = 0 for all given v}."""
        forms = [self.covector(v) for v in vectors if not is_zero_vector(v)]
        if not forms:
            return Subspace.full(self.rank)
        return kernel(matrix(forms))

    def is_orthogonal_operator(self, N: Mat) -> bool:
        """Whether NᵀG + GN = 0, i.e. N ∈ so(V,q)."""
        if N.shape != (self.rank, self.rank):
            return False
        G = self._gram
        return mat_equal(N.transpose() * G + G * N, matrix([[0] * self.rank] * self.rank))

    def lagrange_diagonalize(self) -> tuple[Mat, tuple[Scalar, ...]]:
        """Return (P, D) with PᵀGP = diag(D), columns of P an orthogonal frame."""
        if self._diagonalization is None:
            self._diagonalization = self._diagonalize()
        return self._diagonalization

    def signature(self) -> tuple[int, int]:
        _, diagonal = self.lagrange_diagonalize()
        positive = sum(1 for d in diagonal if d > 0)
        return positive, len(diagonal) - positive

    @property
    def is_k3_type(self) -> bool:
        """Whether the signature is (2, r - 2)."""
        return self.signature() == (2, self.rank - 2)

    def hyperbolic_extension(self, v: Sequence[Scalar]) -> tuple[Vector, Vector]:
        """Complete an isotropic v to x, y with q(x,x)=2, q(y,y)=-2, q(x,y)=0, x+y=2v."""
        v = vector(v)
        self._check(v)
        if is_zero_vector(v):
            raise ZeroVector("Cannot extend the zero vector")
        norm = self.norm(v)
        if norm:
            raise NotIsotropic(norm)

        pairing = self.covector(v)
        index = next((i for i, c in enumerate(pairing) if c), None)
        if index is None:
            raise DegenerateForm("No vector pairs nontrivially with v")

        z = vscale(1 / pairing[index], standard_basis(self.rank)[index])
        w = vsub(z, vscale(QQ(1, 2) * self.norm(z), v))
        x = vadd(v, w)
        y = vsub(v, w)
        _LOGGER.debug("Hyperbolic extension of %s via e%d: x=%s y=%s", v, index, x, y)
        return x, y

    def congruent(self, P: Mat) -> "QuadSpace":
        """The same form written in the basis given by the columns of P."""
        return QuadSpace(P.transpose() * self._gram * P)

    def direct_sum(self, other: "QuadSpace") -> "QuadSpace":
        n, m = self.rank, other.rank
        rows = [list(row) + [0] * m for row in self._entries]
        rows += [[0] * n + list(row) for row in other.entries]
        return QuadSpace.from_rows(rows)

    def _diagonalize(self) -> tuple[Mat, tuple[Scalar, ...]]:
        remaining: list[Vector] = standard_basis(self.rank)
        frame: list[Vector] = []
        diagonal: list[Scalar] = []

        while remaining:
            pick = next((i for i, u in enumerate(remaining) if self.norm(u)), None)
            if pick is None:
                pair = next(
                    (
                        (i, j)
                        for i in range(len(remaining))
                        for j in range(i + 1, len(remaining))
                        if self.inner(remaining[i], remaining[j])
                    ),
                    None,
                )
                if pair is None:
                    raise DegenerateForm("Form is degenerate")
                i, j = pair
                remaining[i] = vadd(remaining[i], remaining[j])
                pick = i

            pivot = remaining.pop(pick)
            d = self.norm(pivot)
            remaining = [vsub(u, vscale(self.inner(u, pivot) / d, pivot)) for u in remaining]
            frame.append(pivot)
            diagonal.append(d)

        return columns_to_matrix(frame, QQ), tuple(diagonal)

    def _check(self, v: Sequence[Scalar]) -> None:
        if len(v) != self.rank:
            raise DimensionMismatch(self.rank, len(v))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuadSpace):
            return NotImplemented
        return self._entries == other.entries

    def __hash__(self) -> int:
        return hash(self._entries)

    def __str__(self) -> str:
        p, n = self.signature()
        return f'<QuadSpace rank="{self.rank}" signature="({p},{n})">'


def find_isotropic(space: QuadSpace, max_height: int = 2) -> Vector | None:
    """Search for a nonzero rational isotropic vector.

    Integer vectors are enumerated by increasing height up to max_height; after
    that two frame vectors of opposite norm are combined when the ratio of their
    norms is minus a rational square. Returns None when neither finds one.
    """
    r = space.rank
    for height in range(1, max_height + 1):
        for coords in product(range(-height, height + 1), repeat=r):
            if max(abs(c) for c in coords) != height:
                continue
            candidate = vector(coords, QQ)
            if not space.norm(candidate):
                return candidate

    P, diagonal = space.lagrange_diagonalize()
    frame = [tuple(row[j] for row in P.to_list()) for j in range(r)]
    for i in range(r):
        for j in range(i + 1, r):
            if diagonal[i] * diagonal[j] > 0:
                continue
            root = _rational_sqrt(-diagonal[j] / diagonal[i])
            if root is not None:
                return vadd(vscale(root, frame[i]), frame[j])
    return None


def _rational_sqrt(value: Scalar) -> Scalar | None:
    value = real_part(value)
    if value < 0:
        return None
    num, num_exact = integer_nthroot(int(QQ.numer(value)), 2)
    den, den_exact = integer_nthroot(int(QQ.denom(value)), 2)
    if num_exact and den_exact:
        return QQ(num, den)
    return None


def hermitian_norm(space: QuadSpace, v: Sequence[Scalar]) -> Scalar:
    """q(v, conj v), always rational for the symmetric real form q."""
    return real_part(space.hermitian(v, v))


