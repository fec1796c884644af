"""Invariant suite over the built-in examples, run concurrently."""

import asyncio
from logging import getLogger
from random import Random
from typing import Callable, Iterable

from sympy import QQ

from .const import (
    CONGRUENCE_ENTRY_BOUND,
    CONGRUENCE_SAMPLES,
    DEFAULT_VERIFY_SEED,
    IDEAL_RANKS,
    IDEAL_SAMPLES,
    VerifyScope,
)
from .forge import ExampleSpec, example, make_example, random_congruence
from .hodgekit.clifford import CliffordAlgebra, spin_exp, wedge
from .hodgekit.const import MIN_RANK, KsType
from .hodgekit.degeneration import (
    central_fibre_h1,
    component_lower_bound,
    dual_complex_betti,
    expected_central_fibre,
    motivic_zeta,
    neron_data,
)
from .hodgekit.hodge import K3LimitMHS, hodge_diamond_k3, weight_filtration_k3
from .hodgekit.kuga_satake import (
    check_ks_bracket,
    check_ks_naturality,
    eigenspace,
    hodge_diamond_ab,
    i_v_operator,
    is_invariant_form,
    is_unipotent_of_index_two,
    kappa,
    ks_embedding,
    ks_lim,
    monodromy_lifts,
    naive_monodromy_matrix,
    orbit_commutativity_check,
    polarization_form,
)
from .hodgekit.linalg import (
    Vector,
    apply,
    field_of,
    gaussian,
    mat_equal,
    standard_basis,
    to_field,
    vector,
    vscale,
    vsub,
)
from .hodgekit.quadratic import QuadSpace

_LOGGER = getLogger(__name__)

NONZERO_EXAMPLES = ("EX-II.4", "EX-III.3")
PURE_EXAMPLE = "EX-I.3"


class CheckResult:
    def __init__(self, name: str, scope: VerifyScope, passed: bool, detail: str = ""):
        self._name = name
        self._scope = scope
        self._passed = passed
        self._detail = detail

    @property
    def name(self) -> str:
        return self._name

    @property
    def scope(self) -> VerifyScope:
        return self._scope

    @property
    def passed(self) -> bool:
        return self._passed

    @property
    def detail(self) -> str:
        return self._detail

    def __str__(self) -> str:
        status = "pass" if self._passed else "FAIL"
        text = f"{status} {self._scope}/{self._name}"
        return f"{text}: {self._detail}" if self._detail else text


class SuiteResult:
    def __init__(self, results: Iterable[CheckResult]):
        self._results = tuple(results)

    @property
    def results(self) -> tuple[CheckResult, ...]:
        return self._results

    @property
    def failures(self) -> tuple[CheckResult, ...]:
        return tuple(r for r in self._results if not r.passed)

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        lines = [str(r) for r in self._results]
        passed = len(self._results) - len(self.failures)
        lines.append(f"{passed}/{len(self._results)} checks passed")
        return "\n".join(lines) + "\n"


# A check returns (passed, detail)
Check = Callable[[], tuple[bool, str]]


def _all(items: Iterable[tuple[str, bool]]) -> tuple[bool, str]:
    failed = [name for name, ok in items if not ok]
    return not failed, ", ".join(failed)


# clifford


def check_defining_relation(seed: int) -> tuple[bool, str]:
    """v·v = q(v,v) for basis and random vectors."""
    rng = Random(seed)
    results = []
    for name in (PURE_EXAMPLE, *NONZERO_EXAMPLES):
        space = example(name).space
        algebra = CliffordAlgebra(space)
        vectors = standard_basis(space.rank)
        vectors += [vector([rng.randint(-3, 3) for _ in range(space.rank)]) for _ in range(5)]
        for v in vectors:
            x = algebra.embed_vector(v)
            results.append((f"{name} {v}", x * x == algebra.scalar(space.norm(v))))
    return _all(results)


def check_eta_bracket() -> tuple[bool, str]:
    """[η(N), v] = N·v on the nonzero-monodromy examples."""
    return _all((name, check_ks_bracket(example(name))) for name in NONZERO_EXAMPLES)


def check_spin_membership() -> tuple[bool, str]:
    results = []
    for name in NONZERO_EXAMPLES:
        _, lift, _ = monodromy_lifts(example(name))
        algebra = lift.algebra
        results.append((name, algebra.is_spin(lift) and lift.clifford_norm() == algebra.unit()))
    return _all(results)


def _reflect(space: QuadSpace, x: Vector, w: Vector) -> Vector:
    """x reflected in the hyperplane orthogonal to the anisotropic w."""
    field = field_of(x)
    x = vector(x, field)
    scale = to_field(space.inner(x, w), field) * to_field(QQ(2) / space.norm(w), field)
    return vsub(x, vscale(scale, vector(w, field)))


def _random_isotropic(rng: Random, space: QuadSpace, reflections: int = 2) -> Vector:
    """A random isotropic vector of diag(2, 2, -2, ...), real or complex.

    A seed e_i ± e_j or e_1 + i·e_2 is moved by random reflections, which keep it isotropic.
    """
    r = space.rank
    e = standard_basis(r)
    if rng.random() < 0.25:
        v = vector([1, gaussian(0, 1)] + [0] * (r - 2))
    else:
        sign = rng.choice((1, -1))
        v = vector(a + sign * b for a, b in zip(e[rng.randrange(2)], e[rng.randrange(2, r)]))
    for _ in range(reflections):
        w = vector([rng.randint(-2, 2) for _ in range(r)])
        while not space.norm(w):
            w = vector([rng.randint(-2, 2) for _ in range(r)])
        v = _reflect(space, v, w)
    return v


def check_ideal_dimension(seed: int) -> tuple[bool, str]:
    """dim v·Cl = d/2 for random isotropic vectors in conjugated spaces of ranks 3 to 6."""
    rng = Random(seed)
    ranks = list(IDEAL_RANKS)
    results = []
    for trial in range(IDEAL_SAMPLES):
        r = ranks[trial % len(ranks)]
        base = QuadSpace.diagonal([2, 2] + [-2] * (r - 2))
        v = _random_isotropic(rng, base)
        P = random_congruence(rng, r, CONGRUENCE_ENTRY_BOUND)
        algebra = CliffordAlgebra(base.congruent(P))
        moved = apply(P.inv(), v)
        results.append((f"trial {trial}", kappa(algebra, moved).dim == algebra.dimension // 2))
    return _all(results)


def check_polarization() -> tuple[bool, str]:
    """ω is antisymmetric, Spin invariant and exactly one sign polarizes the pure example."""
    m = example(PURE_EXAMPLE)
    algebra = CliffordAlgebra(m.space)
    e = standard_basis(m.rank)
    omega, sign = polarization_form(algebra, e[0], e[1], kappa(algebra, m.period))
    results = [("antisymmetric", mat_equal(omega.transpose(), -omega)), ("sign", sign in (1, -1))]

    def plus(u, w):
        return tuple(a + b for a, b in zip(u, w))

    def minus(u, w):
        return tuple(a - b for a, b in zip(u, w))

    # (isotropic u) ∧ (w ⊥ u) has nilpotent spin image
    pairs = [(plus(e[0], e[2]), e[1]), (minus(e[0], e[2]), e[1]), (plus(e[1], e[2]), e[0])]
    for index, (u, w) in enumerate(pairs):
        g = spin_exp(algebra.eta_prime(wedge(u, w)))
        invariant = is_invariant_form(omega, algebra.left_mul_matrix(g))
        results.append((f"invariance {index}", invariant))
    return _all(results)


def check_i_v_operator() -> tuple[bool, str]:
    m = example(PURE_EXAMPLE)
    algebra = CliffordAlgebra(m.space)
    operator = i_v_operator(algebra, m.period)
    half = algebra.dimension // 2
    ideal = kappa(algebra, m.period)
    plus = eigenspace(algebra, operator, gaussian(0, 1))
    minus = eigenspace(algebra, operator, gaussian(0, -1))
    moved = algebra.vector_of(operator * algebra.embed_vector(m.period))
    return _all(
        [
            ("square", operator * operator == algebra.scalar(-1)),
            ("eigenvector", moved == tuple(gaussian(0, 1) * c for c in m.period)),
            ("eigenspaces", plus.dim == half and minus.dim == half),
            ("ideal", plus == ideal),
        ]
    )


# ks


def check_orbit(name: str) -> Check:
    def run() -> tuple[bool, str]:
        result = orbit_commutativity_check(example(name))
        bad = ", ".join(str(s.z) for s in result.mismatches)
        return result.passed, f"{len(result)} samples" + (f", mismatches at {bad}" if bad else "")

    return run


def check_naturality() -> tuple[bool, str]:
    return _all((name, check_ks_naturality(example(name))) for name in NONZERO_EXAMPLES)


def check_unipotent_lift() -> tuple[bool, str]:
    """(T' - 1)² = 0 while (T'' - 1)² ≠ 0."""
    results = []
    for name in NONZERO_EXAMPLES:
        _, lift, other = monodromy_lifts(example(name))
        algebra = lift.algebra
        results.append((f"{name} T'", is_unipotent_of_index_two(algebra.left_mul_matrix(lift))))
        other_unipotent = is_unipotent_of_index_two(algebra.left_mul_matrix(other))
        results.append((f"{name} T''", not other_unipotent))
    return _all(results)


def check_ks_filtrations() -> tuple[bool, str]:
    """f_v lies in F¹End for the period and in F⁰End for v ⊥ period."""
    results = []
    for name in (PURE_EXAMPLE, *NONZERO_EXAMPLES):
        m = example(name)
        ab = ks_lim(m)
        results.append((f"{name} period", ks_embedding(ab, m.period).in_f1))
        complement = m.space.orthogonal_complement([m.period])
        results.append(
            (f"{name} F1V", all(ks_embedding(ab, v).in_f0 for v in complement.rows))
        )
    return _all(results)


def check_naive_monodromy() -> tuple[bool, str]:
    """The algebra automorphism induced by T is not the monodromy lift."""
    m = example("EX-II.4")
    T, lift, _ = monodromy_lifts(m)
    algebra = lift.algebra
    naive = naive_monodromy_matrix(algebra, T)
    return _all(
        [
            ("differs", not mat_equal(naive, algebra.left_mul_matrix(lift))),
            ("not index two", not is_unipotent_of_index_two(naive)),
        ]
    )


# degeneration


def _invariants(m: K3LimitMHS) -> tuple:
    ab = ks_lim(m)
    return (
        weight_filtration_k3(m.space, m.monodromy).dims,
        hodge_diamond_k3(m),
        (ab.w0.dim, ab.w1.dim, ab.f1.dim),
        hodge_diamond_ab(ab),
        central_fibre_h1(m, ab).diamond,
        tuple(dual_complex_betti(m, ab)),
        tuple(dict(neron_data(m, ab)).items()),
        tuple(str(c) for c in motivic_zeta(m, 3, structure=ab)),
    )


def check_closed_forms() -> tuple[bool, str]:
    """Central fibre, Betti numbers and component bounds at minimal and padded ranks."""
    results = []
    for ks_type in KsType:
        for extra in (0, 1):
            spec = ExampleSpec(ks_type, MIN_RANK[ks_type] + extra)
            m = make_example(spec)
            ab = ks_lim(m)
            fibre = central_fibre_h1(m, ab)
            w = ab.w0.dim
            ok = (
                fibre.diamond == expected_central_fibre(ks_type, spec.rank)
                and dual_complex_betti(m, ab)[-1] == 1
                and len(dual_complex_betti(m, ab)) == w + 1
                and component_lower_bound(m, ab) >= 1
                and 2 * fibre.abelian_dim + w == ab.w1.dim
            )
            results.append((spec.name, ok))
    return _all(results)


def check_congruence_invariance(seed: int) -> tuple[bool, str]:
    rng = Random(seed)
    results = []
    references = {name: (example(name), _invariants(example(name))) for name in NONZERO_EXAMPLES}
    for trial in range(CONGRUENCE_SAMPLES):
        name = NONZERO_EXAMPLES[trial % len(NONZERO_EXAMPLES)]
        m, expected = references[name]
        P = random_congruence(rng, m.rank, CONGRUENCE_ENTRY_BOUND)
        results.append((f"{name} trial {trial}", _invariants(m.congruent(P)) == expected))
    return _all(results)


def build_checks(
    scope: VerifyScope, seed: int = DEFAULT_VERIFY_SEED, naive_monodromy: bool = False
) -> list[tuple[str, VerifyScope, Check]]:
    checks: list[tuple[str, VerifyScope, Check]] = [
        ("defining_relation", VerifyScope.CLIFFORD, lambda: check_defining_relation(seed)),
        ("eta_bracket", VerifyScope.CLIFFORD, check_eta_bracket),
        ("spin_membership", VerifyScope.CLIFFORD, check_spin_membership),
        ("ideal_dimension", VerifyScope.CLIFFORD, lambda: check_ideal_dimension(seed)),
        ("polarization", VerifyScope.KS, check_polarization),
        ("i_v_operator", VerifyScope.KS, check_i_v_operator),
        ("ks_naturality", VerifyScope.KS, check_naturality),
        ("ks_filtrations", VerifyScope.KS, check_ks_filtrations),
        ("unipotent_lift", VerifyScope.KS, check_unipotent_lift),
        *((f"orbit {name}", VerifyScope.KS, check_orbit(name)) for name in NONZERO_EXAMPLES),
        ("closed_forms", VerifyScope.DEGENERATION, check_closed_forms),
        (
            "congruence_invariance",
            VerifyScope.DEGENERATION,
            lambda: check_congruence_invariance(seed),
        ),
    ]
    if naive_monodromy:
        checks.append(("naive_monodromy", VerifyScope.KS, check_naive_monodromy))
    if scope == VerifyScope.ALL:
        return checks
    return [c for c in checks if c[1] == scope]


def _run_check(name: str, scope: VerifyScope, check: Check) -> CheckResult:
    try:
        passed, detail = check()
    except Exception as e:
        _LOGGER.exception("Check %s raised", name)
        return CheckResult(name, scope, False, f"{type(e).__name__}: {e}")
    if not passed:
        _LOGGER.warning("Check %s failed: %s", name, detail)
    return CheckResult(name, scope, passed, detail)


async def run_suite(
    scope: VerifyScope = VerifyScope.ALL,
    seed: int = DEFAULT_VERIFY_SEED,
    naive_monodromy: bool = False,
) -> SuiteResult:
    checks = build_checks(scope, seed, naive_monodromy)
    _LOGGER.info("Running %d checks in scope %s with seed %d", len(checks), scope, seed)
    results = await asyncio.gather(
        *(asyncio.to_thread(_run_check, name, s, check) for name, s, check in checks)
    )
    return SuiteResult(results)
