from typing import Any


class DimensionMismatch(Exception):
    """Error when operands live in spaces of different dimensions."""

    def __init__(self, expected: int, actual: int, **kwargs: Any):
        super().__init__(f"Expected dimension {expected}, got {actual}")


class DegenerateForm(Exception):
    """Error for a quadratic form that is not symmetric and non-degenerate."""


class ZeroVector(Exception):
    """Error for a zero vector where a nonzero one is required."""


class NotIsotropic(Exception):
    """Error for a vector that should be isotropic but is not."""

    def __init__(self, value: object, **kwargs: Any):
        super().__init__(f"Vector is not isotropic: q(v,v) = {value}")


class NotInOrthogonalAlgebra(Exception):
    """Error for an operator outside so(V,q)."""


class NotNilpotent(Exception):
    """Error for an operator or element that is not nilpotent as required."""

    def __init__(self, steps: int, **kwargs: Any):
        super().__init__(f"Not nilpotent within {steps} steps")


class AlgebraMismatch(Exception):
    """Error when combining elements of different Clifford algebras."""


class InvalidStructure(Exception):
    """Error for a limit mixed Hodge structure that fails validation."""

    def __init__(self, report: Any, **kwargs: Any):
        self.report = report
        failed = ", ".join(str(r.axiom) for r in report.failures)
        super().__init__(f"Invalid structure, failed axioms: {failed}")


class FiltrationError(Exception):
    """Error when computed filtrations are not mutually compatible."""


class ClosedFormMismatch(Exception):
    """Error when a computed invariant disagrees with its closed form."""

    def __init__(self, quantity: str, expected: object, actual: object, **kwargs: Any):
        super().__init__(f"{quantity}: expected {expected}, computed {actual}")


class PolarizationError(Exception):
    """Error when neither sign of a form polarizes a Hodge structure."""


class InvalidExampleSpec(Exception):
    """Error for an example request that cannot be constructed."""


class NotInvertible(Exception):
    """Error for an element without a two-sided inverse."""


class NotPositive(Exception):
    """Error for a vector or form that should be positive but is not."""
