from typing import Any, Sequence

from .hodgekit.types import ValidationReport


class KsLimitError(Exception):
    """Base class for all kslimit errors"""

    pass


class ProblemFileError(KsLimitError):
    """A problem file could not be read or does not match the schema"""

    def __init__(self, message: str, source: str | None = None, **kwargs: Any):
        self.source = source
        prefix = f"{source}: " if source else ""
        super().__init__(f"{prefix}{message}")


class ValidationFailed(KsLimitError):
    """A problem parsed but does not describe a valid limit structure"""

    def __init__(self, report: ValidationReport, source: str | None = None, **kwargs: Any):
        self.report = report
        self.source = source
        failed = ", ".join(str(r.axiom) for r in report.failures)
        prefix = f"{source}: " if source else ""
        super().__init__(f"{prefix}failed axioms: {failed}")


class UnknownExample(KsLimitError):
    """No built-in example has the requested name"""

    def __init__(self, name: str, available: Sequence[str], **kwargs: Any):
        self.name = name
        self.available = list(available)
        super().__init__(f"Unknown example {name}; available: {', '.join(self.available)}")
