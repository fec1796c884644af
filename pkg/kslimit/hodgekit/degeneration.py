"""Invariants of the degeneration read off from the Kuga–Satake limit."""

from logging import getLogger
from math import comb

from .const import LABEL_ABELIAN, LABEL_BUNDLE, LABEL_RATIONAL, KsType
from .error import ClosedFormMismatch
from .hodge import K3LimitMHS, classify_type
from .kuga_satake import AbLimitMHS, hodge_diamond_ab, ks_lim
from .linalg import intersect, quotient_basis, span_sum
from .types import CentralFibreReport, HodgeDiamond, NeronData, ZetaCoefficient

_LOGGER = getLogger(__name__)


def _structure(m: K3LimitMHS, structure: AbLimitMHS | None) -> AbLimitMHS:
    return structure if structure is not None else ks_lim(m)


def expected_central_fibre(ks_type: KsType, rank: int) -> HodgeDiamond:
    """Closed-form Hodge numbers of H¹ of the central fibre."""
    if ks_type == KsType.I:
        half = 2 ** (rank - 1)
        return HodgeDiamond({(1, 0): half, (0, 1): half})
    if ks_type == KsType.II:
        quarter = 2 ** (rank - 2)
        return HodgeDiamond({(0, 0): quarter, (1, 0): quarter, (0, 1): quarter})
    return HodgeDiamond({(0, 0): 2 ** (rank - 1)})


def birational_label(torus_rank: int, abelian_dim: int) -> str:
    """Birational type of the components of the special fibre."""
    if not torus_rank:
        return LABEL_ABELIAN.format(dim=abelian_dim)
    if not abelian_dim:
        return LABEL_RATIONAL
    return LABEL_BUNDLE.format(fibre=torus_rank, dim=abelian_dim)


def central_fibre_h1(m: K3LimitMHS, structure: AbLimitMHS | None = None) -> CentralFibreReport:
    """H¹ of the central fibre as W₁ of the limit, checked against its closed form."""
    a = _structure(m, structure)
    ks_type = classify_type(m.monodromy)
    full = hodge_diamond_ab(a)
    diamond = HodgeDiamond({key: n for key, n in full if sum(key) <= 1})

    expected = expected_central_fibre(ks_type, m.rank)
    if diamond != expected:
        raise ClosedFormMismatch(f"H¹ of the type {ks_type} central fibre", expected, diamond)

    torus_rank = a.w0.dim
    abelian_dim = diamond.get(1, 0)
    return CentralFibreReport(
        ks_type, diamond, torus_rank, abelian_dim, birational_label(torus_rank, abelian_dim)
    )


def torus_rank(m: K3LimitMHS, structure: AbLimitMHS | None = None) -> int:
    """w = dim W₀ of the Kuga–Satake limit."""
    return _structure(m, structure).w0.dim


def dual_complex_cohomology(
    m: K3LimitMHS, k: int, structure: AbLimitMHS | None = None
) -> int:
    """The k-th Betti number of the dual complex, that of a real torus of dimension w."""
    if k < 0:
        raise ValueError("Cohomological degree must be non-negative")
    return comb(torus_rank(m, structure), k)


def dual_complex_betti(m: K3LimitMHS, structure: AbLimitMHS | None = None) -> list[int]:
    w = torus_rank(m, structure)
    return [comb(w, k) for k in range(w + 1)]


def component_lower_bound(m: K3LimitMHS, structure: AbLimitMHS | None = None) -> int:
    """Lower bound on the number of components of the central fibre."""
    ks_type = classify_type(m.monodromy)
    if ks_type == KsType.I:
        return 1
    bound = 2 ** (m.rank - 2) if ks_type == KsType.II else 2 ** (m.rank - 1)
    w = torus_rank(m, structure)
    if w != bound:
        raise ClosedFormMismatch("torus rank", bound, w)
    return bound


def neron_data(m: K3LimitMHS, structure: AbLimitMHS | None = None) -> NeronData:
    a = _structure(m, structure)
    w0, w1 = a.w0, a.w1
    gr1 = quotient_basis(w1, w0)
    hodge_part = quotient_basis(span_sum(intersect(a.f1, w1), w0), w0)
    abelian_dim = len(gr1) // 2
    if len(hodge_part) != abelian_dim:
        raise ClosedFormMismatch("F¹ part of gr₁", abelian_dim, len(hodge_part))
    _LOGGER.debug("Néron data w=%d dimB=%d", w0.dim, abelian_dim)
    return NeronData(w0.dim, abelian_dim, gr1, hodge_part, birational_label(w0.dim, abelian_dim))


def motivic_zeta(
    m: K3LimitMHS,
    terms: int,
    components: int | None = None,
    structure: AbLimitMHS | None = None,
) -> list[ZetaCoefficient]:
    """Coefficients N·[B]·(L-1)^w·d^w of T^d for d = 1..terms."""
    if terms < 1:
        raise ValueError("At least one zeta coefficient is required")
    if components is not None and components < 1:
        raise ValueError("The number of components must be positive")
    w = torus_rank(m, structure)
    return [ZetaCoefficient(d, w, components) for d in range(1, terms + 1)]
