"""Problem files: TOML descriptions of a limit mixed Hodge structure of K3 type."""

from logging import getLogger
from typing import Any

import tomlkit
import voluptuous as vol
from tomlkit.exceptions import TOMLKitError

from .const import (
    DEFAULT_ZETA_TERMS,
    P_CONF_GRAM,
    P_CONF_MONODROMY,
    P_CONF_NAME,
    P_CONF_NERON_COMPONENTS,
    P_CONF_PERIOD_IM,
    P_CONF_PERIOD_RE,
    P_CONF_RANK,
    P_CONF_ZETA_TERMS,
    RATIONAL_PATTERN,
)
from .error import ProblemFileError, ValidationFailed
from .hodgekit.const import Axiom
from .hodgekit.error import DegenerateForm, DimensionMismatch
from .hodgekit.hodge import K3LimitMHS, validate_pmhs_k3
from .hodgekit.linalg import Scalar, Vector, matrix
from .hodgekit.quadratic import QuadSpace
from .hodgekit.types import AxiomResult, ValidationReport
from .util import format_rows, join_period, parse_rational, parse_rows, split_period

_LOGGER = getLogger(__name__)


def _not_bool(value: Any) -> Any:
    # TOML booleans are ints to Python
    if isinstance(value, bool):
        raise vol.Invalid(f"expected a number, got {value!r}")
    return value


RATIONAL = vol.All(_not_bool, vol.Any(str, int), vol.Coerce(str), vol.Match(RATIONAL_PATTERN))
POSITIVE = vol.All(_not_bool, int, vol.Range(min=1))

PROBLEM_SCHEMA = vol.Schema(
    {
        vol.Optional(P_CONF_NAME): str,
        vol.Required(P_CONF_RANK): POSITIVE,
        vol.Required(P_CONF_GRAM): [[RATIONAL]],
        vol.Required(P_CONF_MONODROMY): [[RATIONAL]],
        vol.Required(P_CONF_PERIOD_RE): [RATIONAL],
        vol.Required(P_CONF_PERIOD_IM): [RATIONAL],
        vol.Optional(P_CONF_NERON_COMPONENTS): POSITIVE,
        vol.Optional(P_CONF_ZETA_TERMS, default=DEFAULT_ZETA_TERMS): POSITIVE,
    }
)


class ProblemFile:
    """The exact contents of a problem file."""

    def __init__(
        self,
        rank: int,
        gram: list[list[Scalar]],
        monodromy: list[list[Scalar]],
        period: Vector,
        name: str | None = None,
        neron_components: int | None = None,
        zeta_terms: int = DEFAULT_ZETA_TERMS,
    ):
        self._rank = rank
        self._gram = tuple(tuple(row) for row in gram)
        self._monodromy = tuple(tuple(row) for row in monodromy)
        self._period = tuple(period)
        self._name = name
        self._neron_components = neron_components
        self._zeta_terms = zeta_terms

    @classmethod
    def from_structure(
        cls,
        m: K3LimitMHS,
        name: str | None = None,
        neron_components: int | None = None,
        zeta_terms: int = DEFAULT_ZETA_TERMS,
    ) -> "ProblemFile":
        return cls(
            m.rank,
            [list(row) for row in m.space.entries],
            m.monodromy.to_list(),
            m.period,
            name,
            neron_components,
            zeta_terms,
        )

    @property
    def rank(self) -> int:
        return self._rank

    @property
    def gram(self) -> tuple[tuple[Scalar, ...], ...]:
        return self._gram

    @property
    def monodromy(self) -> tuple[tuple[Scalar, ...], ...]:
        return self._monodromy

    @property
    def period(self) -> Vector:
        return self._period

    @property
    def name(self) -> str | None:
        return self._name

    @property
    def neron_components(self) -> int | None:
        return self._neron_components

    @property
    def zeta_terms(self) -> int:
        return self._zeta_terms

    def with_options(
        self, neron_components: int | None = None, zeta_terms: int | None = None
    ) -> "ProblemFile":
        """Copy with command line overrides applied."""
        return ProblemFile(
            self._rank,
            [list(row) for row in self._gram],
            [list(row) for row in self._monodromy],
            self._period,
            self._name,
            neron_components if neron_components is not None else self._neron_components,
            zeta_terms if zeta_terms is not None else self._zeta_terms,
        )

    def structure(self) -> K3LimitMHS:
        """The limit structure described by the file, raising ValidationFailed if invalid."""
        try:
            space = QuadSpace(matrix(self._gram))
        except (DegenerateForm, DimensionMismatch) as e:
            report = ValidationReport([AxiomResult(Axiom.SYMMETRIC_FORM, False, str(e))])
            raise ValidationFailed(report, self._name) from e

        m = K3LimitMHS(space, matrix(self._monodromy), self._period)
        report = validate_pmhs_k3(m)
        if not report.passed:
            raise ValidationFailed(report, self._name)
        return m

    def to_dict(self) -> dict[str, Any]:
        re, im = split_period(self._period)
        data: dict[str, Any] = {}
        if self._name is not None:
            data[P_CONF_NAME] = self._name
        data[P_CONF_RANK] = self._rank
        data[P_CONF_GRAM] = format_rows(matrix(self._gram))
        data[P_CONF_MONODROMY] = format_rows(matrix(self._monodromy))
        data[P_CONF_PERIOD_RE] = re
        data[P_CONF_PERIOD_IM] = im
        if self._neron_components is not None:
            data[P_CONF_NERON_COMPONENTS] = self._neron_components
        data[P_CONF_ZETA_TERMS] = self._zeta_terms
        return data

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProblemFile):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __hash__(self) -> int:
        return hash(dumps_problem(self))

    def __str__(self) -> str:
        return f'<ProblemFile name="{self._name}" rank="{self._rank}">'


def _check_shape(data: dict[str, Any], source: str | None) -> None:
    r = data[P_CONF_RANK]
    for key in (P_CONF_GRAM, P_CONF_MONODROMY):
        rows = data[key]
        if len(rows) != r or any(len(row) != r for row in rows):
            raise ProblemFileError(f"{key} must be a {r}x{r} array", source)
    for key in (P_CONF_PERIOD_RE, P_CONF_PERIOD_IM):
        if len(data[key]) != r:
            raise ProblemFileError(f"{key} must have {r} entries", source)


def problem_from_dict(data: dict[str, Any], source: str | None = None) -> ProblemFile:
    try:
        data = PROBLEM_SCHEMA(data)
    except vol.Invalid as e:
        raise ProblemFileError(str(e), source) from e
    _check_shape(data, source)

    re = [parse_rational(x, source) for x in data[P_CONF_PERIOD_RE]]
    im = [parse_rational(x, source) for x in data[P_CONF_PERIOD_IM]]
    return ProblemFile(
        data[P_CONF_RANK],
        parse_rows(data[P_CONF_GRAM], source),
        parse_rows(data[P_CONF_MONODROMY], source),
        join_period(re, im),
        data.get(P_CONF_NAME),
        data.get(P_CONF_NERON_COMPONENTS),
        data[P_CONF_ZETA_TERMS],
    )


def parse_problem(text: str, source: str | None = None) -> ProblemFile:
    try:
        data = tomlkit.parse(text).unwrap()
    except TOMLKitError as e:
        raise ProblemFileError(f"Invalid TOML: {e}", source) from e
    return problem_from_dict(data, source)


def load_problem(path: str) -> ProblemFile:
    try:
        with open(path, encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise ProblemFileError(f"Cannot read problem file: {e.strerror}", path) from e
    problem = parse_problem(text, path)
    _LOGGER.debug("Loaded %s from %s", problem, path)
    return problem


def dumps_problem(problem: ProblemFile) -> str:
    doc = tomlkit.document()
    doc.add(tomlkit.comment("Limit mixed Hodge structure of K3 type"))
    for key, value in problem.to_dict().items():
        doc[key] = value
    return tomlkit.dumps(doc)
