from types import MappingProxyType
from typing import Iterator, Mapping, Sequence

from .const import SYMBOL_ABELIAN_CLASS, SYMBOL_COMPONENTS, SYMBOL_LEFSCHETZ, Axiom, KsType
from .linalg import Mat, Scalar, Vector, format_scalar


class HodgeDiamond:
    """Hodge numbers h^{p,q}, zero entries omitted."""

    def __init__(self, counts: Mapping[tuple[int, int], int]):
        self._counts = MappingProxyType(
            {key: counts[key] for key in sorted(counts) if counts[key]}
        )

    @property
    def counts(self) -> Mapping[tuple[int, int], int]:
        return self._counts

    def get(self, p: int, q: int) -> int:
        return self._counts.get((p, q), 0)

    @property
    def total(self) -> int:
        return sum(self._counts.values())

    def weights(self) -> dict[int, int]:
        """Total dimension in each weight p + q."""
        result: dict[int, int] = {}
        for (p, q), count in self._counts.items():
            result[p + q] = result.get(p + q, 0) + count
        return dict(sorted(result.items()))

    def is_symmetric(self) -> bool:
        return all(self.get(q, p) == count for (p, q), count in self._counts.items())

    def __iter__(self) -> Iterator[tuple[tuple[int, int], int]]:
        return iter(self._counts.items())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, HodgeDiamond):
            return dict(self._counts) == dict(other.counts)
        if isinstance(other, Mapping):
            return dict(self._counts) == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __str__(self) -> str:
        entries = " ".join(f'h{p}{q}="{c}"' for (p, q), c in self._counts.items())
        return f"<HodgeDiamond {entries}>"

    __repr__ = __str__


class AxiomResult:
    def __init__(self, axiom: Axiom, passed: bool, detail: str = ""):
        self._axiom = axiom
        self._passed = passed
        self._detail = detail

    @property
    def axiom(self) -> Axiom:
        return self._axiom

    @property
    def passed(self) -> bool:
        return self._passed

    @property
    def detail(self) -> str:
        return self._detail

    def __iter__(self):
        for key in "axiom", "passed", "detail":
            yield key, getattr(self, key)

    def __str__(self) -> str:
        status = "pass" if self._passed else "FAIL"
        return f'<AxiomResult axiom="{self._axiom}" status="{status}" detail="{self._detail}">'


class ValidationReport:
    """Outcome of checking the axioms of a limit mixed Hodge structure of K3 type."""

    def __init__(self, results: Sequence[AxiomResult], polarization_sign: int | None = None):
        self._results = tuple(results)
        self._polarization_sign = polarization_sign

    @property
    def results(self) -> tuple[AxiomResult, ...]:
        return self._results

    @property
    def failures(self) -> tuple[AxiomResult, ...]:
        return tuple(r for r in self._results if not r.passed)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def polarization_sign(self) -> int | None:
        """Common sign of the primitive Hermitian forms, when definite."""
        return self._polarization_sign

    @property
    def essential_image_checked(self) -> bool:
        return False

    def result(self, axiom: Axiom) -> AxiomResult | None:
        return next((r for r in self._results if r.axiom == axiom), None)

    def passes(self, *axioms: Axiom) -> bool:
        found = [self.result(a) for a in axioms]
        return all(r is not None and r.passed for r in found)

    def __iter__(self) -> Iterator[AxiomResult]:
        return iter(self._results)

    def __str__(self) -> str:
        failed = ",".join(str(r.axiom) for r in self.failures)
        return f'<ValidationReport passed="{self.passed}" failed="{failed}">'


class EndomorphismClass:
    """An endomorphism of H with its position in the filtrations of End(H)."""

    def __init__(self, matrix: Mat, hodge_level: int, weight: int | None):
        self._matrix = matrix
        self._hodge_level = hodge_level
        self._weight = weight

    @property
    def matrix(self) -> Mat:
        return self._matrix

    @property
    def hodge_level(self) -> int:
        """Largest p with the map in F^p End(H)."""
        return self._hodge_level

    @property
    def weight(self) -> int | None:
        """Least m with f(W_j) ⊆ W_{j+m} for all j; None for the zero map."""
        return self._weight

    @property
    def in_f0(self) -> bool:
        return self._hodge_level >= 0

    @property
    def in_f1(self) -> bool:
        return self._hodge_level >= 1

    def in_weight(self, m: int) -> bool:
        return self._weight is None or self._weight <= m

    def __str__(self) -> str:
        return (
            f'<EndomorphismClass size="{self._matrix.shape[0]}"'
            f' hodge_level="{self._hodge_level}" weight="{self._weight}">'
        )


class NeronData:
    """Shape of the identity component of the Néron special fibre."""

    def __init__(
        self,
        torus_rank: int,
        abelian_dim: int,
        gr1_basis: Sequence[Vector],
        gr1_hodge_basis: Sequence[Vector],
        label: str,
    ):
        self._torus_rank = torus_rank
        self._abelian_dim = abelian_dim
        self._gr1_basis = tuple(gr1_basis)
        self._gr1_hodge_basis = tuple(gr1_hodge_basis)
        self._label = label

    @property
    def torus_rank(self) -> int:
        return self._torus_rank

    @property
    def abelian_dim(self) -> int:
        return self._abelian_dim

    @property
    def gr1_basis(self) -> tuple[Vector, ...]:
        """Representatives of a basis of W₁/W₀."""
        return self._gr1_basis

    @property
    def gr1_hodge_basis(self) -> tuple[Vector, ...]:
        """Representatives of a basis of the F¹ part of W₁/W₀."""
        return self._gr1_hodge_basis

    @property
    def label(self) -> str:
        """Birational type of the components of the special fibre."""
        return self._label

    def __iter__(self):
        for key in "torus_rank", "abelian_dim", "label":
            yield key, getattr(self, key)

    def __str__(self) -> str:
        return (
            f'<NeronData torus_rank="{self._torus_rank}" abelian_dim="{self._abelian_dim}"'
            f' label="{self._label}">'
        )


class CentralFibreReport:
    def __init__(
        self,
        ks_type: KsType,
        diamond: HodgeDiamond,
        torus_rank: int,
        abelian_dim: int,
        label: str,
    ):
        self._ks_type = ks_type
        self._diamond = diamond
        self._torus_rank = torus_rank
        self._abelian_dim = abelian_dim
        self._label = label

    @property
    def ks_type(self) -> KsType:
        return self._ks_type

    @property
    def diamond(self) -> HodgeDiamond:
        """Hodge numbers of H¹ of the central fibre."""
        return self._diamond

    @property
    def torus_rank(self) -> int:
        return self._torus_rank

    @property
    def abelian_dim(self) -> int:
        return self._abelian_dim

    @property
    def label(self) -> str:
        return self._label

    @property
    def semi_abelian_dim(self) -> int:
        """Dimension of the semi-abelian identity component, torus plus abelian part."""
        return self._torus_rank + self._abelian_dim

    def __str__(self) -> str:
        return (
            f'<CentralFibreReport type="{self._ks_type}" w="{self._torus_rank}"'
            f' dimB="{self._abelian_dim}" label="{self._label}">'
        )


class ZetaCoefficient:
    """The coefficient N·[B]·(L-1)^w·d^w of T^d in the motivic zeta function."""

    def __init__(self, degree: int, torus_rank: int, components: int | None = None):
        if degree < 1:
            raise ValueError("Zeta coefficients start at degree 1")
        self._degree = degree
        self._torus_rank = torus_rank
        self._components = components

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def torus_rank(self) -> int:
        return self._torus_rank

    @property
    def components(self) -> int | None:
        return self._components

    @property
    def multiplier(self) -> int:
        return self._degree**self._torus_rank

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ZetaCoefficient):
            return NotImplemented
        return (self._degree, self._torus_rank, self._components) == (
            other.degree,
            other.torus_rank,
            other.components,
        )

    def __str__(self) -> str:
        components = SYMBOL_COMPONENTS if self._components is None else str(self._components)
        return (
            f"{components}*{SYMBOL_ABELIAN_CLASS}*({SYMBOL_LEFSCHETZ}-1)^{self._torus_rank}"
            f"*{self.multiplier}*T^{self._degree}"
        )

    __repr__ = __str__


class OrbitSample:
    def __init__(self, z: Scalar, positive: bool, equal: bool):
        self._z = z
        self._positive = positive
        self._equal = equal

    @property
    def z(self) -> Scalar:
        return self._z

    @property
    def positive(self) -> bool:
        """Whether q(v_z, conj v_z) > 0 at this point of the orbit."""
        return self._positive

    @property
    def equal(self) -> bool:
        return self._equal

    def __str__(self) -> str:
        return (
            f'<OrbitSample z="{format_scalar(self._z)}" positive="{self._positive}"'
            f' equal="{self._equal}">'
        )


class OrbitCheck:
    """Per-sample comparison of both sides of the Kuga–Satake equivariance identity."""

    def __init__(self, samples: Sequence[OrbitSample]):
        self._samples = tuple(samples)

    @property
    def samples(self) -> tuple[OrbitSample, ...]:
        return self._samples

    @property
    def passed(self) -> bool:
        return all(s.equal for s in self._samples)

    @property
    def mismatches(self) -> tuple[OrbitSample, ...]:
        return tuple(s for s in self._samples if not s.equal)

    def __len__(self) -> int:
        return len(self._samples)

    def __iter__(self) -> Iterator[OrbitSample]:
        return iter(self._samples)

    def __str__(self) -> str:
        return f'<OrbitCheck samples="{len(self._samples)}" passed="{self.passed}">'
