from enum import StrEnum


class KsType(StrEnum):
    """Degeneration type of a K3 limit, read off the nilpotent logarithm N."""

    I = "I"  # noqa: E741
    II = "II"
    III = "III"


class Axiom(StrEnum):
    SYMMETRIC_FORM = "symmetric_form"
    SIGNATURE = "signature"
    NILPOTENT = "nilpotent"
    ORTHOGONAL = "orthogonal"
    ISOTROPIC_PERIOD = "isotropic_period"
    POSITIVE_PERIOD = "positive_period"
    PERIOD_LINE = "period_line"
    IMAGE_RANK = "image_rank"
    PURITY = "purity"
    POLARIZATION = "polarization"


# Axioms that must hold before filtrations can be computed at all
STRUCTURAL_AXIOMS = (
    Axiom.SYMMETRIC_FORM,
    Axiom.SIGNATURE,
    Axiom.NILPOTENT,
    Axiom.ORTHOGONAL,
    Axiom.ISOTROPIC_PERIOD,
    Axiom.POSITIVE_PERIOD,
    Axiom.PERIOD_LINE,
)

WEIGHT_RANGE_K3 = range(0, 5)
WEIGHT_RANGE_AB = range(0, 3)

ENDO_WEIGHT_RANGE = range(-2, 3)
ENDO_HODGE_RANGE = range(-1, 2)

MIN_RANK = {KsType.I: 3, KsType.II: 4, KsType.III: 3}

LABEL_ABELIAN = "abelian(dim {dim})"
LABEL_BUNDLE = "P^{fibre}-bundle over abelian({dim})"
LABEL_RATIONAL = "rational"

SYMBOL_COMPONENTS = "N"
SYMBOL_ABELIAN_CLASS = "[B]"
SYMBOL_LEFSCHETZ = "L"
