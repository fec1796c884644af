"""Clifford algebras Cl(V,q) over Q and Q(i).

Elements are stored on the blade basis of an orthogonal frame f_1, ..., f_r
obtained by Lagrange diagonalization, so that f_i² = d_i and f_i f_j = -f_j f_i.
A blade is the ordered product of the frame vectors whose indices are the set
bits of its mask; mask 0 is the unit.
"""

from logging import getLogger
from types import MappingProxyType
from typing import Iterator, Mapping, Sequence

from sympy import QQ
from sympy.polys.domains.domain import Domain

from .error import (
    AlgebraMismatch,
    DimensionMismatch,
    NotInOrthogonalAlgebra,
    NotInvertible,
    NotNilpotent,
    ZeroVector,
)
from .linalg import (
    Mat,
    Scalar,
    Subspace,
    Vector,
    apply,
    field_of,
    format_scalar,
    image,
    is_zero_matrix,
    is_zero_vector,
    mat_equal,
    matrix,
    rref,
    to_field,
    vector,
)
from .quadratic import QuadSpace

_LOGGER = getLogger(__name__)

# Coefficients of x∧y on e_i∧e_j (i < j) in the standard basis of V
Bivector = Mapping[tuple[int, int], Scalar]


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def grade(mask: int) -> int:
    return popcount(mask)


def blade_name(mask: int) -> str:
    if not mask:
        return "1"
    return "".join(f"f{i + 1}" for i in range(mask.bit_length()) if mask >> i & 1)


class CliffordAlgebra:
    """The Clifford algebra of a quadratic space, of dimension d = 2^r."""

    def __init__(self, space: QuadSpace):
        frame, diagonal = space.lagrange_diagonalize()
        self._space = space
        self._frame = frame
        self._frame_inverse = frame.inv()
        self._diagonal = diagonal
        self._products: dict[tuple[int, int], tuple[Scalar, int]] = {}
        _LOGGER.debug("Clifford algebra of rank %d, frame norms %s", space.rank, diagonal)

    @property
    def space(self) -> QuadSpace:
        return self._space

    @property
    def rank(self) -> int:
        return self._space.rank

    @property
    def dimension(self) -> int:
        return 1 << self._space.rank

    @property
    def frame(self) -> Mat:
        return self._frame

    @property
    def diagonal(self) -> tuple[Scalar, ...]:
        return self._diagonal

    def blade_product(self, a: int, b: int) -> tuple[Scalar, int]:
        """Return (c, a ^ b) with blade(a)·blade(b) = c·blade(a ^ b)."""
        cached = self._products.get((a, b))
        if cached is not None:
            return cached

        swaps = 0
        shifted = a >> 1
        while shifted:
            swaps += popcount(shifted & b)
            shifted >>= 1
        coefficient = QQ(-1) if swaps % 2 else QQ(1)
        common = a & b
        for i in range(self.rank):
            if common >> i & 1:
                coefficient *= self._diagonal[i]

        cached = (coefficient, a ^ b)
        self._products[(a, b)] = cached
        return cached

    def zero(self) -> "CliffordElement":
        return CliffordElement(self, {})

    def unit(self) -> "CliffordElement":
        return CliffordElement(self, {0: QQ.one})

    def scalar(self, value: Scalar) -> "CliffordElement":
        return CliffordElement(self, {0: value})

    def blade(self, mask: int, coefficient: Scalar = 1) -> "CliffordElement":
        if not 0 <= mask < self.dimension:
            raise DimensionMismatch(self.dimension, mask)
        return CliffordElement(self, {mask: coefficient})

    def blades(self) -> Iterator["CliffordElement"]:
        for mask in range(self.dimension):
            yield self.blade(mask)

    def embed_vector(self, v: Sequence[Scalar]) -> "CliffordElement":
        """The degree-one element of a vector given in the standard basis of V."""
        if len(v) != self.rank:
            raise DimensionMismatch(self.rank, len(v))
        coords = apply(self._frame_inverse, vector(v))
        return CliffordElement(self, {1 << i: c for i, c in enumerate(coords)})

    def basis_vector(self, i: int) -> "CliffordElement":
        v = [0] * self.rank
        v[i] = 1
        return self.embed_vector(v)

    def vector_of(self, a: "CliffordElement") -> Vector | None:
        """Standard coordinates of a degree-one element, None for other elements."""
        self._check(a)
        if any(grade(mask) != 1 for mask in a.terms):
            return None
        coords = [a.coefficient(1 << i) for i in range(self.rank)]
        return apply(self._frame, vector(coords))

    def coordinates(self, a: "CliffordElement") -> Vector:
        self._check(a)
        return tuple(a.coefficient(mask) for mask in range(self.dimension))

    def from_coordinates(self, coords: Sequence[Scalar]) -> "CliffordElement":
        if len(coords) != self.dimension:
            raise DimensionMismatch(self.dimension, len(coords))
        return CliffordElement(self, dict(enumerate(coords)))

    def left_mul_matrix(self, a: "CliffordElement") -> Mat:
        """Matrix of x ↦ a·x on the blade basis."""
        self._check(a)
        d = self.dimension
        field = a.field
        rows = [[field.zero] * d for _ in range(d)]
        for mask, c in a.terms.items():
            for j in range(d):
                sign, k = self.blade_product(mask, j)
                rows[k][j] += c * sign
        return matrix(rows, field)

    def right_ideal(self, v: Sequence[Scalar]) -> Subspace:
        """The right ideal v·Cl, i.e. the image of left multiplication by v."""
        if is_zero_vector(v):
            raise ZeroVector("Right ideal of the zero vector")
        return self.ideal_of(self.embed_vector(v))

    def ideal_of(self, a: "CliffordElement") -> Subspace:
        """The right ideal a·Cl."""
        return image(self.left_mul_matrix(a))

    def eta_prime(self, bivector: Bivector) -> "CliffordElement":
        """Image of Σ λ_ij e_i∧e_j under x∧y ↦ ¼(xy - yx)."""
        total = self.zero()
        for (i, j), coefficient in bivector.items():
            x = self.basis_vector(i)
            y = self.basis_vector(j)
            total = total + (x * y - y * x) * (QQ(1, 4) * coefficient)
        return total

    def eta(self, N: Mat) -> "CliffordElement":
        """The spin Lie algebra element of N ∈ so(V,q)."""
        return self.eta_prime(so_to_bivector(self._space, N))

    def vector_action(self, g: "CliffordElement") -> Mat:
        """The r×r matrix of v ↦ g·v·g⁻¹, when that preserves V."""
        inverse = g.inverse()
        columns: list[Vector] = []
        for i in range(self.rank):
            image_vector = self.vector_of(g * self.basis_vector(i) * inverse)
            if image_vector is None:
                raise NotInOrthogonalAlgebra("Conjugation does not preserve V")
            columns.append(image_vector)
        return matrix([list(row) for row in zip(*columns)])

    def is_spin(self, g: "CliffordElement") -> bool:
        """Even, of norm one, and conjugation preserves V."""
        if not g.is_even or g * g.reversal() != self.unit():
            return False
        try:
            self.vector_action(g)
        except NotInOrthogonalAlgebra:
            return False
        return True

    def _check(self, a: "CliffordElement") -> None:
        if a.algebra is not self:
            raise AlgebraMismatch("Element belongs to another algebra")

    def __str__(self) -> str:
        return f'<CliffordAlgebra rank="{self.rank}" dimension="{self.dimension}">'


class CliffordElement:
    """An element of a Clifford algebra, as sparse blade coefficients."""

    def __init__(self, algebra: CliffordAlgebra, terms: Mapping[int, Scalar]):
        nonzero = {mask: c for mask, c in terms.items() if c}
        field = field_of(nonzero.values())
        self._algebra = algebra
        self._field = field
        self._terms = MappingProxyType(
            {mask: to_field(nonzero[mask], field) for mask in sorted(nonzero)}
        )

    @property
    def algebra(self) -> CliffordAlgebra:
        return self._algebra

    @property
    def field(self) -> Domain:
        return self._field

    @property
    def terms(self) -> Mapping[int, Scalar]:
        return self._terms

    def coefficient(self, mask: int) -> Scalar:
        return self._terms.get(mask, self._field.zero)

    @property
    def is_even(self) -> bool:
        return all(grade(mask) % 2 == 0 for mask in self._terms)

    def scale(self, value: Scalar) -> "CliffordElement":
        return CliffordElement(self._algebra, {m: c * value for m, c in self._terms.items()})

    def parity(self) -> "CliffordElement":
        """The main automorphism: negate odd blades."""
        return self._signed(lambda k: -1 if k % 2 else 1)

    def reversal(self) -> "CliffordElement":
        """Reverse the factors of every blade."""
        return self._signed(lambda k: -1 if (k * (k - 1) // 2) % 2 else 1)

    def conjugate(self) -> "CliffordElement":
        """Clifford conjugate, parity composed with reversal."""
        return self._signed(lambda k: -1 if (k * (k + 1) // 2) % 2 else 1)

    def clifford_norm(self) -> "CliffordElement":
        return self * self.conjugate()

    def trace(self) -> Scalar:
        """Trace of left multiplication: d times the unit coefficient."""
        return self.coefficient(0) * self._algebra.dimension

    def inverse(self) -> "CliffordElement":
        matrix_ = self._algebra.left_mul_matrix(self)
        if not matrix_.det():
            raise NotInvertible(f"{self} is not invertible")
        unit = self._algebra.coordinates(self._algebra.unit())
        return self._algebra.from_coordinates(apply(matrix_.inv(), unit))

    def _signed(self, sign) -> "CliffordElement":
        return CliffordElement(
            self._algebra, {m: c * sign(grade(m)) for m, c in self._terms.items()}
        )

    def _same_algebra(self, other: "CliffordElement") -> None:
        if other.algebra is not self._algebra:
            raise AlgebraMismatch("Elements belong to different algebras")

    def __add__(self, other: "CliffordElement") -> "CliffordElement":
        self._same_algebra(other)
        terms = dict(self._terms)
        for mask, c in other.terms.items():
            terms[mask] = terms[mask] + c if mask in terms else c
        return CliffordElement(self._algebra, terms)

    def __neg__(self) -> "CliffordElement":
        return self.scale(-1)

    def __sub__(self, other: "CliffordElement") -> "CliffordElement":
        return self + (-other)

    def __mul__(self, other: "CliffordElement | Scalar") -> "CliffordElement":
        if not isinstance(other, CliffordElement):
            return self.scale(other)
        self._same_algebra(other)
        terms: dict[int, Scalar] = {}
        for a, x in self._terms.items():
            for b, y in other.terms.items():
                sign, mask = self._algebra.blade_product(a, b)
                value = x * y * sign
                terms[mask] = terms[mask] + value if mask in terms else value
        return CliffordElement(self._algebra, terms)

    def __rmul__(self, other: Scalar) -> "CliffordElement":
        return self.scale(other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CliffordElement):
            return NotImplemented
        return other.algebra is self._algebra and dict(self._terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[tuple[int, Scalar]]:
        return iter(self._terms.items())

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(
            f"{format_scalar(c)}*{blade_name(mask)}" for mask, c in self._terms.items()
        )

    __repr__ = __str__


def spin_exp(a: CliffordElement, scale: Scalar = 1) -> CliffordElement:
    """exp(scale·a) for nilpotent a, as a finite sum."""
    algebra = a.algebra
    step = a * scale
    total = algebra.unit()
    term = algebra.unit()
    for k in range(1, algebra.dimension + 2):
        term = term * step * QQ(1, k)
        if not term:
            return total
        total = total + term
    raise NotNilpotent(algebra.dimension + 1)


def wedge(x: Sequence[Scalar], y: Sequence[Scalar]) -> dict[tuple[int, int], Scalar]:
    """Coefficients of x∧y on e_i∧e_j, i < j."""
    if len(x) != len(y):
        raise DimensionMismatch(len(x), len(y))
    result: dict[tuple[int, int], Scalar] = {}
    for i in range(len(x)):
        for j in range(i + 1, len(x)):
            value = x[i] * y[j] - x[j] * y[i]
            if value:
                result[(i, j)] = value
    return result


def bivector_to_so(space: QuadSpace, bivector: Bivector) -> Mat:
    """The operator of λ under v∧w ↦ q(w,-)v - q(v,-)w."""
    r = space.rank
    G = space.entries
    rows = [[QQ.zero] * r for _ in range(r)]
    for (i, j), c in bivector.items():
        for b in range(r):
            rows[i][b] += c * G[j][b]
            rows[j][b] -= c * G[i][b]
    return matrix(rows)


def so_to_bivector(space: QuadSpace, N: Mat) -> dict[tuple[int, int], Scalar]:
    """The unique bivector whose operator is N ∈ so(V,q)."""
    if not space.is_orthogonal_operator(N):
        raise NotInOrthogonalAlgebra("Operator is not in so(V,q)")
    r = space.rank
    if is_zero_matrix(N):
        return {}

    pairs = [(i, j) for i in range(r) for j in range(i + 1, r)]
    columns = [bivector_to_so(space, {pair: 1}).to_list_flat() for pair in pairs]
    target = N.to_list_flat()
    system = matrix([[*(col[k] for col in columns), target[k]] for k in range(r * r)])
    form, pivots = rref(system)
    unknowns = len(pairs)
    if unknowns in pivots or len(pivots) < unknowns:
        raise NotInOrthogonalAlgebra("Singular bivector transfer system")

    rows = form.to_list()
    solution = {pairs[p]: rows[k][unknowns] for k, p in enumerate(pivots) if rows[k][unknowns]}
    if not mat_equal(bivector_to_so(space, solution), N):
        raise NotInOrthogonalAlgebra("Bivector does not reproduce the operator")
    return solution

