"""Exact Kuga–Satake computations for limit mixed Hodge structures of K3 type."""

from .clifford import CliffordAlgebra, CliffordElement, spin_exp
from .const import Axiom, KsType
from .degeneration import (
    central_fibre_h1,
    component_lower_bound,
    dual_complex_betti,
    dual_complex_cohomology,
    motivic_zeta,
    neron_data,
)
from .error import InvalidStructure
from .hodge import (
    K3LimitMHS,
    classify_type,
    hodge_diamond_k3,
    hodge_filtration_k3,
    nilpotent_orbit_point,
    primitive_parts,
    validate_pmhs_k3,
    weight_filtration_k3,
)
from .kuga_satake import (
    AbLimitMHS,
    hodge_diamond_ab,
    i_v_operator,
    kappa,
    ks_embedding,
    ks_lim,
    monodromy_lifts,
    naive_monodromy_matrix,
    orbit_commutativity_check,
    polarization_form,
)
from .quadratic import QuadSpace
from .types import HodgeDiamond, ValidationReport, ZetaCoefficient

__all__ = [
    "AbLimitMHS",
    "Axiom",
    "CliffordAlgebra",
    "CliffordElement",
    "HodgeDiamond",
    "InvalidStructure",
    "K3LimitMHS",
    "KsType",
    "QuadSpace",
    "ValidationReport",
    "ZetaCoefficient",
    "central_fibre_h1",
    "classify_type",
    "component_lower_bound",
    "dual_complex_betti",
    "dual_complex_cohomology",
    "hodge_diamond_ab",
    "hodge_diamond_k3",
    "hodge_filtration_k3",
    "i_v_operator",
    "kappa",
    "ks_embedding",
    "ks_lim",
    "monodromy_lifts",
    "motivic_zeta",
    "naive_monodromy_matrix",
    "neron_data",
    "nilpotent_orbit_point",
    "orbit_commutativity_check",
    "polarization_form",
    "primitive_parts",
    "spin_exp",
    "validate_pmhs_k3",
    "weight_filtration_k3",
]
