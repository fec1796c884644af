"""Limit mixed Hodge structures of K3 type."""

from logging import getLogger
from typing import Iterator, Mapping, Sequence

from sympy import QQ, QQ_I

from .const import STRUCTURAL_AXIOMS, WEIGHT_RANGE_K3, Axiom, KsType
from .error import DimensionMismatch, InvalidStructure, NotInOrthogonalAlgebra, NotNilpotent
from .linalg import (
    Mat,
    Scalar,
    Subspace,
    Vector,
    apply,
    convert,
    definiteness,
    exp_nilpotent,
    format_scalar,
    identity,
    image,
    intersect,
    is_hermitian,
    is_zero_matrix,
    is_zero_vector,
    map_subspace,
    matrix,
    preimage,
    quotient_basis,
    rank,
    real_part,
    span_sum,
    vconj,
    vector,
)
from .quadratic import QuadSpace
from .types import AxiomResult, HodgeDiamond, ValidationReport

_LOGGER = getLogger(__name__)

# i^k for k mod 4
_I_POWERS = (QQ_I(1, 0), QQ_I(0, 1), QQ_I(-1, 0), QQ_I(0, -1))


class K3LimitMHS:
    """A limit mixed Hodge structure of K3 type (V, q, F², N).

    The limit Hodge filtration is given by the period vector v spanning F²V_C;
    F¹ is its q-orthogonal complement. Nothing is validated on construction
    beyond shapes, see validate_pmhs_k3.
    """

    def __init__(self, space: QuadSpace, monodromy: Mat, period: Sequence[Scalar]):
        r = space.rank
        if monodromy.shape != (r, r):
            raise DimensionMismatch(r, monodromy.shape[0])
        if len(period) != r:
            raise DimensionMismatch(r, len(period))
        if monodromy.domain != QQ:
            raise ValueError("Monodromy logarithm must be rational")
        self._space = space
        self._monodromy = monodromy
        self._period = vector(period, QQ_I)

    @property
    def space(self) -> QuadSpace:
        return self._space

    @property
    def rank(self) -> int:
        return self._space.rank

    @property
    def monodromy(self) -> Mat:
        """The nilpotent logarithm N of the monodromy."""
        return self._monodromy

    @property
    def period(self) -> Vector:
        return self._period

    def with_monodromy(self, monodromy: Mat) -> "K3LimitMHS":
        return K3LimitMHS(self._space, monodromy, self._period)

    def with_period(self, period: Sequence[Scalar]) -> "K3LimitMHS":
        return K3LimitMHS(self._space, self._monodromy, period)

    def congruent(self, P: Mat) -> "K3LimitMHS":
        """The same structure in the basis given by the columns of P."""
        inverse = P.inv()
        return K3LimitMHS(
            self._space.congruent(P),
            inverse * self._monodromy * P,
            apply(inverse, self._period),
        )

    def padded(self, count: int, norm: int = -2) -> "K3LimitMHS":
        """Orthogonal sum with count lines of the given norm, N extended by zero."""
        if count <= 0:
            return self
        r = self.rank
        space = self._space.direct_sum(QuadSpace.diagonal([norm] * count))
        rows = [list(row) + [0] * count for row in self._monodromy.to_list()]
        rows += [[0] * (r + count) for _ in range(count)]
        return K3LimitMHS(space, matrix(rows, QQ), [*self._period, *([0] * count)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, K3LimitMHS):
            return NotImplemented
        return (
            self._space == other.space
            and self._monodromy.to_list() == other.monodromy.to_list()
            and self._period == other.period
        )

    def __hash__(self) -> int:
        return hash((self._space, self._period))

    def __str__(self) -> str:
        period = ", ".join(format_scalar(c) for c in self._period)
        return f'<K3LimitMHS rank="{self.rank}" period="({period})">'


class _Filtration:
    def __init__(self, ambient: int, steps: Mapping[int, Subspace]):
        if not steps:
            raise ValueError("A filtration needs at least one step")
        self._ambient = ambient
        self._steps = dict(sorted(steps.items()))

    @property
    def ambient(self) -> int:
        return self._ambient

    @property
    def steps(self) -> dict[int, Subspace]:
        return dict(self._steps)

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(s.dim for s in self._steps.values())

    def __iter__(self) -> Iterator[tuple[int, Subspace]]:
        return iter(self._steps.items())


class WeightFiltration(_Filtration):
    """Increasing filtration W_k; zero below the first step, everything above the last."""

    def __getitem__(self, k: int) -> Subspace:
        if k in self._steps:
            return self._steps[k]
        if k < min(self._steps):
            return Subspace.zero(self._ambient)
        return Subspace.full(self._ambient)

    def graded_dim(self, k: int) -> int:
        return self[k].dim - self[k - 1].dim

    def is_increasing(self) -> bool:
        values = list(self._steps.values())
        return all(a <= b for a, b in zip(values, values[1:]))

    def shifts_by(self, operator: Mat, amount: int) -> bool:
        """Whether operator(W_k) ⊆ W_{k+amount} for every k."""
        return all(map_subspace(operator, step) <= self[k + amount] for k, step in self)

    def __str__(self) -> str:
        return f'<WeightFiltration dims="{self.dims}">'


class HodgeFiltration(_Filtration):
    """Decreasing filtration F^p; everything below the first step, zero above the last."""

    def __getitem__(self, p: int) -> Subspace:
        if p in self._steps:
            return self._steps[p]
        if p < min(self._steps):
            return Subspace.full(self._ambient)
        return Subspace.zero(self._ambient)

    @property
    def top(self) -> int:
        return max(self._steps)

    def __str__(self) -> str:
        return f'<HodgeFiltration dims="{self.dims}">'


def classify_type(N: Mat) -> KsType:
    square = N * N
    if not is_zero_matrix(square * N):
        raise NotNilpotent(3)
    if is_zero_matrix(N):
        return KsType.I
    if is_zero_matrix(square):
        return KsType.II
    return KsType.III


def weight_filtration_k3(space: QuadSpace, N: Mat) -> WeightFiltration:
    """W₀ = im N², W₁ = N(W₃), W₂ = N⁻¹(W₀), W₃ = ker N², W₄ = V."""
    classify_type(N)
    if not space.is_orthogonal_operator(N):
        raise NotInOrthogonalAlgebra("Monodromy logarithm is not in so(V,q)")
    r = space.rank
    square = N * N
    w0 = image(square)
    w3 = preimage(square, Subspace.zero(r))
    w1 = map_subspace(N, w3)
    w2 = preimage(N, w0)
    filtration = WeightFiltration(r, {0: w0, 1: w1, 2: w2, 3: w3, 4: Subspace.full(r)})
    _LOGGER.debug("K3 weight filtration dims %s", filtration.dims)
    return filtration


def hodge_filtration_k3(m: K3LimitMHS) -> HodgeFiltration:
    """F² = ⟨v⟩ and F¹ = F²^⊥ over Q(i)."""
    r = m.rank
    f2 = Subspace(r, [m.period])
    f1 = m.space.orthogonal_complement([m.period])
    return HodgeFiltration(r, {0: Subspace.full(r), 1: f1, 2: f2})


def graded_pieces(
    W: WeightFiltration, F: HodgeFiltration, k: int
) -> list[tuple[int, Subspace]]:
    """Lifts of F^p gr_k ∩ conj F^{k-p} gr_k, each containing W_{k-1}.

    p runs over every index with p and k - p at most the top of F.
    """
    lower, upper = W[k - 1], W[k]
    top = F.top
    pieces: list[tuple[int, Subspace]] = []
    for p in range(k - top, top + 1):
        ours = span_sum(intersect(F[p], upper), lower)
        theirs = span_sum(intersect(F[k - p].conj(), upper), lower)
        pieces.append((p, intersect(ours, theirs)))
    return pieces


def is_pure(W: WeightFiltration, F: HodgeFiltration, k: int) -> bool:
    """Whether gr_k is the direct sum of its (p, k-p) pieces."""
    lower, upper = W[k - 1], W[k]
    graded = upper.dim - lower.dim
    if not graded:
        return True
    pieces = graded_pieces(W, F, k)
    if sum(piece.dim - lower.dim for _, piece in pieces) != graded:
        return False
    total = lower
    for _, piece in pieces:
        total = span_sum(total, piece)
    return total.dim == upper.dim


def diamond_of(W: WeightFiltration, F: HodgeFiltration, weights: range) -> HodgeDiamond:
    counts: dict[tuple[int, int], int] = {}
    for k in weights:
        lower = W[k - 1]
        for p, piece in graded_pieces(W, F, k):
            if p >= 0 and k - p >= 0 and piece.dim > lower.dim:
                counts[(p, k - p)] = piece.dim - lower.dim
    return HodgeDiamond(counts)


def primitive_parts(m: K3LimitMHS, W: WeightFiltration | None = None) -> dict[int, Subspace]:
    """Lifts of P_{2+i} = ker(N^{i+1}: gr_{2+i} → gr_{-i}), i = 0, 1, 2."""
    N = m.monodromy
    W = W or weight_filtration_k3(m.space, N)
    parts: dict[int, Subspace] = {}
    power = N
    for i in range(3):
        k = 2 + i
        parts[k] = intersect(W[k], preimage(power, W[-i - 1]))
        power = power * N
    return parts


def _primitive_form(m: K3LimitMHS, representatives: list[Vector], i: int, p: int, q: int) -> Mat:
    """h(x, y) = i^{p-q} q(x, N^i conj y) on the given representatives."""
    power = identity(m.rank)
    for _ in range(i):
        power = power * m.monodromy
    factor = _I_POWERS[(p - q) % 4]
    images = [apply(power, vconj(y)) for y in representatives]
    rows = [[factor * m.space.inner(x, y) for y in images] for x in representatives]
    return matrix(rows, QQ_I)


def _check_polarization(
    m: K3LimitMHS, W: WeightFiltration, F: HodgeFiltration
) -> tuple[bool, int | None, str]:
    sign: int | None = None
    for k, part in primitive_parts(m, W).items():
        i = k - 2
        lower = W[k - 1]
        for p, piece in graded_pieces(W, F, k):
            representatives = quotient_basis(intersect(part, piece), lower)
            if not representatives:
                continue
            q = k - p
            form = _primitive_form(m, representatives, i, p, q)
            if not is_hermitian(form):
                return False, sign, f"form on P{k}^({p},{q}) is not Hermitian"
            found = definiteness(form)
            if not found:
                return False, sign, f"form on P{k}^({p},{q}) is indefinite"
            if sign is None:
                sign = found
            elif sign != found:
                return False, sign, f"form on P{k}^({p},{q}) has the opposite sign"
    return True, sign, ""


def validate_pmhs_k3(m: K3LimitMHS) -> ValidationReport:
    space, N, v = m.space, m.monodromy, m.period
    results: list[AxiomResult] = []

    def record(axiom: Axiom, passed: bool, detail: str = "") -> None:
        results.append(AxiomResult(axiom, passed, detail))

    record(Axiom.SYMMETRIC_FORM, True)
    positive, negative = space.signature()
    record(Axiom.SIGNATURE, space.is_k3_type, f"signature ({positive},{negative})")
    record(Axiom.NILPOTENT, is_zero_matrix(N * N * N))
    record(Axiom.ORTHOGONAL, space.is_orthogonal_operator(N))
    norm = space.norm(v)
    record(Axiom.ISOTROPIC_PERIOD, not norm, f"q(v,v) = {format_scalar(norm)}")
    hermitian = real_part(space.hermitian(v, v))
    record(Axiom.POSITIVE_PERIOD, hermitian > 0, f"q(v,conj v) = {format_scalar(hermitian)}")
    record(Axiom.PERIOD_LINE, not is_zero_vector(v))

    image_rank = rank(N)
    record(Axiom.IMAGE_RANK, image_rank in (0, 2), f"rank N = {image_rank}")

    sign = None
    if all(r.passed for r in results if r.axiom in STRUCTURAL_AXIOMS):
        W = weight_filtration_k3(space, N)
        F = hodge_filtration_k3(m)
        impure = [k for k in WEIGHT_RANGE_K3 if not is_pure(W, F, k)]
        record(Axiom.PURITY, not impure, f"impure weights {impure}" if impure else "")
        polarized, sign, detail = _check_polarization(m, W, F)
        record(Axiom.POLARIZATION, polarized, detail)
    else:
        record(Axiom.PURITY, False, "skipped, structural axioms failed")
        record(Axiom.POLARIZATION, False, "skipped, structural axioms failed")

    report = ValidationReport(results, sign)
    if report.passed:
        _LOGGER.debug("Validated %s, polarization sign %s", m, sign)
    else:
        _LOGGER.debug("Validation of %s failed: %s", m, report)
    return report


def require_valid(m: K3LimitMHS, *axioms: Axiom) -> ValidationReport:
    """Validate m, raising InvalidStructure unless the given axioms (default all) pass."""
    report = validate_pmhs_k3(m)
    ok = report.passes(*axioms) if axioms else report.passed
    if not ok:
        raise InvalidStructure(report)
    return report


def hodge_diamond_k3(m: K3LimitMHS) -> HodgeDiamond:
    require_valid(m, *STRUCTURAL_AXIOMS, Axiom.IMAGE_RANK, Axiom.PURITY)
    W = weight_filtration_k3(m.space, m.monodromy)
    return diamond_of(W, hodge_filtration_k3(m), WEIGHT_RANGE_K3)


def monodromy_matrix(m: K3LimitMHS) -> Mat:
    """T = exp(N) on V."""
    return exp_nilpotent(m.monodromy)


def nilpotent_orbit_point(m: K3LimitMHS, z: Scalar) -> Vector:
    """exp(zN)·v, the period of the nilpotent orbit at z."""
    return apply(exp_nilpotent(convert(m.monodromy, QQ_I), z), m.period)
