"""The Kuga–Satake construction for limit mixed Hodge structures.

The weight-one limit structure on H = Cl(V,q) has F¹ the right ideal generated
by the period vector and nilpotent logarithm left multiplication by η(N).
Everything here works over the full Clifford algebra, not its even part.
"""

from logging import getLogger
from typing import Sequence

from sympy import QQ, QQ_I

from .clifford import CliffordAlgebra, CliffordElement, spin_exp
from .const import ENDO_HODGE_RANGE, ENDO_WEIGHT_RANGE, WEIGHT_RANGE_AB
from .error import (
    DimensionMismatch,
    FiltrationError,
    NotIsotropic,
    NotPositive,
    PolarizationError,
    ZeroVector,
)
from .hodge import (
    HodgeFiltration,
    K3LimitMHS,
    WeightFiltration,
    diamond_of,
    is_pure,
    monodromy_matrix,
    nilpotent_orbit_point,
    require_valid,
)
from .linalg import (
    Mat,
    Scalar,
    Subspace,
    Vector,
    apply,
    convert,
    definiteness,
    identity,
    imag_vector,
    image,
    is_hermitian,
    is_zero_matrix,
    is_zero_vector,
    kernel,
    map_subspace,
    mat_conj,
    mat_equal,
    matrix,
    real_part,
    real_vector,
    to_field,
    vector,
)
from .quadratic import QuadSpace, hermitian_norm
from .types import EndomorphismClass, HodgeDiamond, OrbitCheck, OrbitSample

_LOGGER = getLogger(__name__)


class AbLimitMHS:
    """A limit mixed Hodge structure of weight one on the Clifford algebra."""

    def __init__(self, algebra: CliffordAlgebra, hodge: Subspace, nilpotent: CliffordElement):
        d = algebra.dimension
        if hodge.ambient != d:
            raise DimensionMismatch(d, hodge.ambient)
        self._algebra = algebra
        self._hodge = hodge
        self._nilpotent = nilpotent
        self._nilpotent_matrix = algebra.left_mul_matrix(nilpotent)
        self._w0 = image(self._nilpotent_matrix)
        self._w1 = kernel(self._nilpotent_matrix)

    @property
    def algebra(self) -> CliffordAlgebra:
        return self._algebra

    @property
    def dimension(self) -> int:
        return self._algebra.dimension

    @property
    def f1(self) -> Subspace:
        return self._hodge

    @property
    def nilpotent(self) -> CliffordElement:
        """N' = η(N) as an element of the algebra."""
        return self._nilpotent

    @property
    def nilpotent_matrix(self) -> Mat:
        return self._nilpotent_matrix

    @property
    def w0(self) -> Subspace:
        return self._w0

    @property
    def w1(self) -> Subspace:
        return self._w1

    @property
    def weight_filtration(self) -> WeightFiltration:
        return WeightFiltration(
            self.dimension, {0: self._w0, 1: self._w1, 2: Subspace.full(self.dimension)}
        )

    @property
    def hodge_filtration(self) -> HodgeFiltration:
        return HodgeFiltration(self.dimension, {0: Subspace.full(self.dimension), 1: self._hodge})

    def __str__(self) -> str:
        return (
            f'<AbLimitMHS d="{self.dimension}" F1="{self._hodge.dim}"'
            f' W0="{self._w0.dim}" W1="{self._w1.dim}">'
        )


def kappa(algebra: CliffordAlgebra, v: Sequence[Scalar]) -> Subspace:
    """The right ideal v·Cl of an isotropic vector, a point of the half-dimensional subspaces."""
    v = vector(v, QQ_I)
    if is_zero_vector(v):
        raise ZeroVector("κ is undefined at the zero vector")
    norm = algebra.space.norm(v)
    if norm:
        raise NotIsotropic(norm)
    return algebra.right_ideal(v)


def _bivector_element(algebra: CliffordAlgebra, f1: Vector, f2: Vector) -> CliffordElement:
    x = algebra.embed_vector(f1)
    y = algebra.embed_vector(f2)
    return (x * y - y * x) * QQ(1, 2)


def _proportional(a: CliffordElement, b: CliffordElement) -> bool:
    """Whether a = c·b for a nonzero scalar c."""
    if not a or not b:
        return False
    mask = next(iter(b.terms))
    ratio = a.coefficient(mask) / b.coefficient(mask)
    return bool(ratio) and a == b * ratio


def ks_lim(m: K3LimitMHS) -> AbLimitMHS:
    require_valid(m)
    algebra = CliffordAlgebra(m.space)
    hodge = kappa(algebra, m.period)
    nilpotent = algebra.eta(m.monodromy)

    if not is_zero_matrix(m.monodromy):
        f1, f2 = image(m.monodromy).rows[:2]
        expected = _bivector_element(algebra, f1, f2)
        if not _proportional(nilpotent, expected):
            raise FiltrationError("η(N) is not proportional to the bivector of im N")

    result = AbLimitMHS(algebra, hodge, nilpotent)
    if not result.w0 <= result.w1:
        raise FiltrationError("W₀ is not contained in W₁")
    _LOGGER.debug("Kuga–Satake structure %s", result)
    return result


def hodge_diamond_ab(a: AbLimitMHS) -> HodgeDiamond:
    if not a.w0 <= a.w1:
        raise FiltrationError("W₀ is not contained in W₁")
    W = a.weight_filtration
    F = a.hodge_filtration
    impure = [k for k in WEIGHT_RANGE_AB if not is_pure(W, F, k)]
    if impure:
        raise FiltrationError(f"Graded pieces {impure} are not pure")
    return diamond_of(W, F, WEIGHT_RANGE_AB)


def i_v_operator(algebra: CliffordAlgebra, v: Sequence[Scalar]) -> CliffordElement:
    """The complex structure I_v of a pure period v, rescaled so that q(v, conj v) = 2."""
    v = vector(v, QQ_I)
    norm = algebra.space.norm(v)
    if norm:
        raise NotIsotropic(norm)
    scale = hermitian_norm(algebra.space, v)
    if scale <= 0:
        raise NotPositive(f"q(v, conj v) = {scale} is not positive")
    re = algebra.embed_vector(real_vector(v))
    im = algebra.embed_vector(imag_vector(v))
    return re * im * (2 / scale)


def eigenspace(algebra: CliffordAlgebra, a: CliffordElement, value: Scalar) -> Subspace:
    """Eigenspace of left multiplication by a for the eigenvalue value."""
    M = convert(algebra.left_mul_matrix(a), QQ_I)
    shift = identity(algebra.dimension, QQ_I) * to_field(value, QQ_I)
    return kernel(M - shift)


def endomorphism_hodge_level(a: AbLimitMHS, M: Mat) -> int:
    """Largest p in {-1, 0, 1} with M(F^j) ⊆ F^{j+p} for every j."""
    F = a.hodge_filtration
    for p in reversed(ENDO_HODGE_RANGE):
        if all(map_subspace(M, F[j]) <= F[j + p] for j in range(-1, 2)):
            return p
    return ENDO_HODGE_RANGE[0]


def endomorphism_weight(a: AbLimitMHS, M: Mat) -> int | None:
    if is_zero_matrix(M):
        return None
    W = a.weight_filtration
    for m in ENDO_WEIGHT_RANGE:
        if W.shifts_by(M, m):
            return m
    return None


def endomorphism_class(a: AbLimitMHS, M: Mat) -> EndomorphismClass:
    return EndomorphismClass(M, endomorphism_hodge_level(a, M), endomorphism_weight(a, M))


def ks_embedding(a: AbLimitMHS, v: Sequence[Scalar]) -> EndomorphismClass:
    """f_v = (w ↦ v·w) with its position in the filtrations of End(H)."""
    algebra = a.algebra
    return endomorphism_class(a, algebra.left_mul_matrix(algebra.embed_vector(v)))


def _check_polarization_pair(space: QuadSpace, a1: Sequence[Scalar], a2: Sequence[Scalar]) -> None:
    if space.norm(a1) <= 0 or space.norm(a2) <= 0:
        raise NotPositive("Polarization vectors must have positive norm")
    if space.inner(a1, a2):
        raise PolarizationError("Polarization vectors must be orthogonal")


def omega_matrix(algebra: CliffordAlgebra, a: CliffordElement) -> Mat:
    """ω(x, y) = Tr(x·a·conj y) on the blade basis."""
    d = algebra.dimension
    signs = [algebra.blade(mask).conjugate().coefficient(mask) for mask in range(d)]
    rows = []
    for x in range(d):
        product = algebra.blade(x) * a
        row = []
        for y in range(d):
            square, _ = algebra.blade_product(y, y)
            row.append(product.coefficient(y) * square * signs[y] * d)
        rows.append(row)
    return matrix(rows)


def polarization_sign(omega: Mat, hodge: Subspace) -> int:
    """The sign s with i·s·ω(h, conj h) > 0 on nonzero h ∈ F¹."""
    basis = convert(hodge.basis_matrix(), QQ_I)
    form = basis * convert(omega, QQ_I) * mat_conj(basis).transpose() * QQ_I(0, 1)
    if not is_hermitian(form):
        raise PolarizationError("i·ω(h, conj h) is not Hermitian on F¹")
    sign = definiteness(form)
    if not sign:
        raise PolarizationError("Neither ω nor -ω polarizes F¹")
    return sign


def polarization_form(
    algebra: CliffordAlgebra,
    a1: Sequence[Scalar],
    a2: Sequence[Scalar],
    hodge: Subspace,
) -> tuple[Mat, int]:
    """The form ω of a = a₁a₂ and the sign that makes it polarize the structure F¹."""
    _check_polarization_pair(algebra.space, a1, a2)
    a = algebra.embed_vector(a1) * algebra.embed_vector(a2)
    omega = omega_matrix(algebra, a)
    sign = polarization_sign(omega, hodge)
    _LOGGER.debug("ω polarizes with sign %d", sign)
    return omega, sign


def is_invariant_form(omega: Mat, M: Mat) -> bool:
    """Whether ω(Mx, My) = ω(x, y)."""
    return mat_equal(M.transpose() * omega * M, omega)


def orbit_commutativity_check(
    m: K3LimitMHS, samples: Sequence[Scalar] | None = None
) -> OrbitCheck:
    """Compare κ(exp(zN)·v) with exp(z·η(N))·κ(v) at each sample z.

    Both sides are polynomial in z of degree below 2d, so the default 2d + 1
    integer samples certify the identity.
    """
    a = ks_lim(m)
    algebra = a.algebra
    if samples is None:
        samples = range(2 * algebra.dimension + 1)
    nilpotent = a.nilpotent
    results = []
    for z in samples:
        point = nilpotent_orbit_point(m, z)
        positive = real_part(m.space.hermitian(point, point)) > 0
        moved = algebra.left_mul_matrix(spin_exp(nilpotent, z))
        equal = kappa(algebra, point) == map_subspace(moved, a.f1)
        if not equal:
            _LOGGER.warning("Orbit mismatch at z = %s", z)
        results.append(OrbitSample(z, positive, equal))
    return OrbitCheck(results)


def monodromy_lifts(m: K3LimitMHS) -> tuple[Mat, CliffordElement, CliffordElement]:
    """T = exp(N) and its two lifts ±spin_exp(η(N)); only the first is unipotent."""
    algebra = CliffordAlgebra(m.space)
    lift = spin_exp(algebra.eta(m.monodromy))
    return monodromy_matrix(m), lift, -lift


def is_unipotent_of_index_two(M: Mat) -> bool:
    shifted = M - identity(M.shape[0], M.domain)
    return is_zero_matrix(shifted * shifted)


def naive_monodromy_matrix(algebra: CliffordAlgebra, T: Mat) -> Mat:
    """The algebra automorphism of Cl induced by T, blade by blade."""
    r = algebra.rank
    frame = algebra.frame
    images = [algebra.embed_vector(apply(T, [row[i] for row in frame.to_list()])) for i in range(r)]
    columns = []
    for mask in range(algebra.dimension):
        product = algebra.unit()
        for i in range(r):
            if mask >> i & 1:
                product = product * images[i]
        columns.append(algebra.coordinates(product))
    return matrix([list(row) for row in zip(*columns)])


def check_ks_naturality(m: K3LimitMHS) -> bool:
    """f_{Tv} = T'·f_v·T'⁻¹ for every basis vector v."""
    T, lift, _ = monodromy_lifts(m)
    algebra = lift.algebra
    inverse = lift.inverse()
    for i in range(m.rank):
        v = algebra.basis_vector(i)
        moved = algebra.embed_vector(apply(T, [int(i == j) for j in range(m.rank)]))
        if moved != lift * v * inverse:
            return False
    return True


def check_ks_bracket(m: K3LimitMHS) -> bool:
    """[η(N), f_v] = f_{Nv} for every basis vector v."""
    algebra = CliffordAlgebra(m.space)
    eta = algebra.eta(m.monodromy)
    for i in range(m.rank):
        e = [int(i == j) for j in range(m.rank)]
        v = algebra.embed_vector(e)
        if eta * v - v * eta != algebra.embed_vector(apply(m.monodromy, e)):
            return False
    return True
