"""Built-in limit mixed Hodge structures of each degeneration type."""

import re
from logging import getLogger
from random import Random

from sympy import QQ

from .const import DEFAULT_PADDING_NORM, EXAMPLE_PREFIX, MAX_EXAMPLE_RANK
from .error import UnknownExample
from .hodgekit.const import MIN_RANK, KsType
from .hodgekit.error import InvalidExampleSpec
from .hodgekit.hodge import K3LimitMHS, classify_type, validate_pmhs_k3
from .hodgekit.linalg import Mat, gaussian, matrix, vconj
from .hodgekit.quadratic import QuadSpace

_LOGGER = getLogger(__name__)

_LONG_NAME = re.compile(r"^EX-(I{1,3})\.(\d+)$")
_SHORT_NAME = re.compile(r"^(I{1,3}):(\d+)$")

_HALF = QQ(1, 2)


class ExampleSpec:
    """A request for a built-in example: degeneration type, rank and padding norm."""

    def __init__(self, ks_type: KsType, rank: int, padding_norm: int = DEFAULT_PADDING_NORM):
        if rank < MIN_RANK[ks_type]:
            raise InvalidExampleSpec(
                f"Type {ks_type} needs rank at least {MIN_RANK[ks_type]}, got {rank}"
            )
        if rank > MAX_EXAMPLE_RANK:
            raise InvalidExampleSpec(f"Rank {rank} exceeds {MAX_EXAMPLE_RANK}")
        if padding_norm >= 0:
            raise InvalidExampleSpec("Padding lines must have negative norm")
        self._ks_type = ks_type
        self._rank = rank
        self._padding_norm = padding_norm

    @property
    def ks_type(self) -> KsType:
        return self._ks_type

    @property
    def rank(self) -> int:
        return self._rank

    @property
    def padding_norm(self) -> int:
        return self._padding_norm

    @property
    def padding(self) -> int:
        return self._rank - MIN_RANK[self._ks_type]

    @property
    def name(self) -> str:
        return f"{EXAMPLE_PREFIX}{self._ks_type}.{self._rank}"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExampleSpec):
            return NotImplemented
        return (self._ks_type, self._rank, self._padding_norm) == (
            other.ks_type,
            other.rank,
            other.padding_norm,
        )

    def __hash__(self) -> int:
        return hash((self._ks_type, self._rank, self._padding_norm))

    def __str__(self) -> str:
        return f'<ExampleSpec name="{self.name}">'


def available_examples() -> list[str]:
    return sorted(
        ExampleSpec(t, r).name
        for t in KsType
        for r in range(MIN_RANK[t], MAX_EXAMPLE_RANK + 1)
    )


def parse_example_name(text: str) -> ExampleSpec:
    """Accepts "EX-II.4" as well as the short form "II:4"."""
    match = _LONG_NAME.match(text.strip()) or _SHORT_NAME.match(text.strip())
    if match is None:
        raise UnknownExample(text, available_examples())
    try:
        return ExampleSpec(KsType(match.group(1)), int(match.group(2)))
    except (InvalidExampleSpec, ValueError) as e:
        raise UnknownExample(text, available_examples()) from e


def _type_i() -> K3LimitMHS:
    space = QuadSpace.diagonal([2, 2, -2])
    return K3LimitMHS(space, matrix([[0] * 3] * 3, QQ), [1, gaussian(0, 1), 0])


def _type_ii() -> K3LimitMHS:
    # Ne₁ = -Ne₄ = ½(e₂ + e₃), Ne₃ = -Ne₂ = ½(e₁ + e₄)
    space = QuadSpace.diagonal([2, 2, -2, -2])
    N = matrix(
        [
            [0, -_HALF, _HALF, 0],
            [_HALF, 0, 0, -_HALF],
            [_HALF, 0, 0, -_HALF],
            [0, -_HALF, _HALF, 0],
        ],
        QQ,
    )
    return K3LimitMHS(space, N, [1, gaussian(0, 1), 0, 0])


def _type_iii() -> K3LimitMHS:
    # Ne₁ = -e₃, Ne₂ = e₃, Ne₃ = e₁ + e₂
    space = QuadSpace.diagonal([2, -2, 2])
    N = matrix([[0, 0, 1], [0, 0, 1], [-1, 1, 0]], QQ)
    return K3LimitMHS(space, N, [1, 0, gaussian(0, -1)])


_BASES = {KsType.I: _type_i, KsType.II: _type_ii, KsType.III: _type_iii}


def _variants(m: K3LimitMHS):
    for sign in (1, -1):
        monodromy = m.monodromy * QQ(sign)
        for period in (m.period, vconj(m.period)):
            yield m.with_monodromy(monodromy).with_period(period)


def make_example(spec: ExampleSpec) -> K3LimitMHS:
    """Build the example, keeping the first sign variant that validates."""
    base = _BASES[spec.ks_type]().padded(spec.padding, spec.padding_norm)
    for candidate in _variants(base):
        report = validate_pmhs_k3(candidate)
        if report.passed:
            if classify_type(candidate.monodromy) != spec.ks_type:
                raise InvalidExampleSpec(f"{spec.name} has the wrong degeneration type")
            _LOGGER.debug("Built %s with polarization sign %s", spec.name, report.polarization_sign)
            return candidate
        _LOGGER.debug("Rejected variant of %s: %s", spec.name, report)
    raise InvalidExampleSpec(f"No sign variant of {spec.name} validates")


def example(name: str) -> K3LimitMHS:
    return make_example(parse_example_name(name))


def conjugate_example(m: K3LimitMHS, P: Mat) -> K3LimitMHS:
    """(PᵀGP, P⁻¹NP, P⁻¹v), the same structure in another rational basis."""
    return m.congruent(P)


def random_congruence(rng: Random, rank: int, bound: int = 2) -> Mat:
    """A random invertible integer matrix with entries in [-bound, bound]."""
    while True:
        P = matrix([[rng.randint(-bound, bound) for _ in range(rank)] for _ in range(rank)], QQ)
        if P.det():
            return P
