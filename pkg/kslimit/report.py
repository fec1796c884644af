"""Full analysis of a problem and its report documents."""

from logging import getLogger
from typing import Any

import tomlkit

from .const import CHECK_FAIL, CHECK_PASS, OutputFormat, ReportSection
from .hodgekit.const import KsType
from .hodgekit.degeneration import (
    central_fibre_h1,
    component_lower_bound,
    dual_complex_betti,
    motivic_zeta,
    neron_data,
)
from .hodgekit.hodge import (
    K3LimitMHS,
    classify_type,
    hodge_diamond_k3,
    validate_pmhs_k3,
    weight_filtration_k3,
)
from .hodgekit.kuga_satake import (
    AbLimitMHS,
    check_ks_bracket,
    check_ks_naturality,
    hodge_diamond_ab,
    is_unipotent_of_index_two,
    ks_lim,
    monodromy_lifts,
)
from .hodgekit.types import (
    CentralFibreReport,
    HodgeDiamond,
    NeronData,
    ValidationReport,
    ZetaCoefficient,
)
from .problem import ProblemFile

_LOGGER = getLogger(__name__)

# Structural checks reported next to the validator's axioms
CHECK_KS_NATURALITY = "ks_naturality"
CHECK_KS_BRACKET = "ks_bracket"
CHECK_UNIPOTENT_LIFT = "unipotent_lift"


class Analysis:
    """Every invariant the pipeline derives from one problem."""

    def __init__(self, problem: ProblemFile):
        m = problem.structure()
        self._problem = problem
        self._structure = m
        self._validation: ValidationReport = validate_pmhs_k3(m)
        self._ks_type: KsType = classify_type(m.monodromy)
        self._k3_weights = weight_filtration_k3(m.space, m.monodromy).dims
        self._k3_diamond = hodge_diamond_k3(m)
        _LOGGER.info("Validated %s as type %s", problem, self._ks_type)

        ab = ks_lim(m)
        self._ab = ab
        self._ab_diamond = hodge_diamond_ab(ab)
        _LOGGER.info("Computed Kuga–Satake structure %s", ab)

        self._central_fibre = central_fibre_h1(m, ab)
        self._betti = dual_complex_betti(m, ab)
        self._component_bound = component_lower_bound(m, ab)
        self._neron = neron_data(m, ab)
        self._zeta = motivic_zeta(m, problem.zeta_terms, problem.neron_components, ab)
        self._checks = _structural_checks(m)

    @property
    def problem(self) -> ProblemFile:
        return self._problem

    @property
    def structure(self) -> K3LimitMHS:
        return self._structure

    @property
    def validation(self) -> ValidationReport:
        return self._validation

    @property
    def ks_type(self) -> KsType:
        return self._ks_type

    @property
    def k3_weight_dims(self) -> tuple[int, ...]:
        return self._k3_weights

    @property
    def k3_diamond(self) -> HodgeDiamond:
        return self._k3_diamond

    @property
    def ks_structure(self) -> AbLimitMHS:
        return self._ab

    @property
    def ab_diamond(self) -> HodgeDiamond:
        return self._ab_diamond

    @property
    def central_fibre(self) -> CentralFibreReport:
        return self._central_fibre

    @property
    def betti(self) -> list[int]:
        return self._betti

    @property
    def component_lower_bound(self) -> int:
        return self._component_bound

    @property
    def neron(self) -> NeronData:
        return self._neron

    @property
    def zeta(self) -> list[ZetaCoefficient]:
        return self._zeta

    @property
    def checks(self) -> dict[str, bool]:
        """Pass/fail per validator axiom and structural check."""
        results = {str(r.axiom): r.passed for r in self._validation}
        results.update(self._checks)
        return results

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def __str__(self) -> str:
        return f'<Analysis problem="{self._problem.name}" type="{self._ks_type}">'


def _structural_checks(m: K3LimitMHS) -> dict[str, bool]:
    _, lift, _ = monodromy_lifts(m)
    algebra = lift.algebra
    return {
        CHECK_KS_NATURALITY: check_ks_naturality(m),
        CHECK_KS_BRACKET: check_ks_bracket(m),
        CHECK_UNIPOTENT_LIFT: is_unipotent_of_index_two(algebra.left_mul_matrix(lift)),
    }


def _diamond_table(diamond: HodgeDiamond) -> dict[str, int]:
    return {f"h{p}{q}": count for (p, q), count in diamond}


def report_dict(analysis: Analysis) -> dict[str, Any]:
    """The report as nested plain data, sections in a fixed order."""
    ab = analysis.ks_structure
    fibre = analysis.central_fibre
    neron = analysis.neron
    return {
        ReportSection.INPUT: analysis.problem.to_dict(),
        ReportSection.STRUCTURE: {
            "type": str(analysis.ks_type),
            "polarization_sign": analysis.validation.polarization_sign or 0,
            "essential_image_checked": analysis.validation.essential_image_checked,
        },
        ReportSection.K3: {
            "weight_dims": list(analysis.k3_weight_dims),
            "diamond": _diamond_table(analysis.k3_diamond),
        },
        ReportSection.KUGA_SATAKE: {
            "d": ab.dimension,
            "f1": ab.f1.dim,
            "w0": ab.w0.dim,
            "w1": ab.w1.dim,
            "diamond": _diamond_table(analysis.ab_diamond),
        },
        ReportSection.CENTRAL_FIBRE: {
            "torus_rank": fibre.torus_rank,
            "abelian_dim": fibre.abelian_dim,
            "label": fibre.label,
            "diamond": _diamond_table(fibre.diamond),
        },
        ReportSection.DUAL_COMPLEX: {
            "betti": analysis.betti,
            "component_lower_bound": analysis.component_lower_bound,
        },
        ReportSection.NERON: {
            "torus_rank": neron.torus_rank,
            "abelian_dim": neron.abelian_dim,
            "gr1_dim": len(neron.gr1_basis),
            "label": neron.label,
        },
        ReportSection.ZETA: {"coefficients": [str(c) for c in analysis.zeta]},
        ReportSection.VERIFICATION: {
            name: CHECK_PASS if passed else CHECK_FAIL for name, passed in analysis.checks.items()
        },
    }


def render_toml(analysis: Analysis) -> str:
    doc = tomlkit.document()
    for section, values in report_dict(analysis).items():
        table = tomlkit.table()
        for key, value in values.items():
            table[key] = value
        doc[str(section)] = table
    return tomlkit.dumps(doc)


def render_text(analysis: Analysis) -> str:
    data = report_dict(analysis)
    name = analysis.problem.name or "problem"
    lines = [f"{name}: type {analysis.ks_type}, rank {analysis.structure.rank}"]
    for section, values in data.items():
        if section == ReportSection.INPUT:
            continue
        lines.append(f"[{section}]")
        for key, value in values.items():
            if isinstance(value, dict):
                value = " ".join(f"{k}={v}" for k, v in value.items())
            elif isinstance(value, list):
                value = ", ".join(str(v) for v in value)
            lines.append(f"  {key}: {value}")
    return "\n".join(lines) + "\n"


def render(analysis: Analysis, output_format: OutputFormat = OutputFormat.TOML) -> str:
    if output_format == OutputFormat.TEXT:
        return render_text(analysis)
    return render_toml(analysis)


def render_failure(report: ValidationReport, source: str | None = None) -> str:
    """A structured error report for a rejected problem."""
    doc = tomlkit.document()
    if source:
        doc["source"] = source
    doc["passed"] = False
    table = tomlkit.table()
    for result in report:
        entry = tomlkit.inline_table()
        entry["status"] = CHECK_PASS if result.passed else CHECK_FAIL
        entry["detail"] = result.detail
        table[str(result.axiom)] = entry
    doc["axioms"] = table
    return tomlkit.dumps(doc)
