from random import Random
from unittest.mock import patch

import pytest

from kslimit.const import VerifyScope
from kslimit.hodgekit.linalg import is_real, is_zero_vector
from kslimit.hodgekit.quadratic import QuadSpace
from kslimit.verify import (
    CheckResult,
    SuiteResult,
    _random_isotropic,
    build_checks,
    check_closed_forms,
    check_defining_relation,
    check_eta_bracket,
    check_i_v_operator,
    check_ideal_dimension,
    check_naive_monodromy,
    check_naturality,
    check_polarization,
    check_spin_membership,
    check_unipotent_lift,
    run_suite,
)


@pytest.mark.parametrize(
    "check",
    [
        lambda: check_defining_relation(0),
        check_eta_bracket,
        check_spin_membership,
        check_polarization,
        check_i_v_operator,
        check_naturality,
        check_unipotent_lift,
        check_naive_monodromy,
        check_closed_forms,
    ],
)
def test_check_passes(check) -> None:
    passed, detail = check()
    assert passed, detail


def test_random_isotropic_vectors() -> None:
    """Sampled vectors are isotropic, nonzero and not all from one family."""
    rng = Random(5)
    space = QuadSpace.diagonal([2, 2, -2, -2, -2])
    samples = [_random_isotropic(rng, space) for _ in range(40)]
    for v in samples:
        assert not is_zero_vector(v)
        assert not space.norm(v)
    assert len({str(v) for v in samples}) > 10
    assert any(not all(is_real(c) for c in v) for v in samples)


def test_ideal_dimension_check_passes() -> None:
    passed, detail = check_ideal_dimension(0)
    assert passed, detail


def test_build_checks_by_scope() -> None:
    every = build_checks(VerifyScope.ALL)
    clifford = build_checks(VerifyScope.CLIFFORD)
    assert clifford
    assert all(scope == VerifyScope.CLIFFORD for _, scope, _ in clifford)
    assert len(clifford) < len(every)
    names = [name for name, _, _ in build_checks(VerifyScope.KS, naive_monodromy=True)]
    assert "naive_monodromy" in names
    assert "naive_monodromy" not in [name for name, _, _ in every]


def test_suite_summary() -> None:
    result = SuiteResult(
        [
            CheckResult("a", VerifyScope.KS, True),
            CheckResult("b", VerifyScope.KS, False, "broken"),
        ]
    )
    assert not result.passed
    assert result.summary() == "pass ks/a\nFAIL ks/b: broken\n1/2 checks passed\n"


@pytest.mark.asyncio
async def test_run_suite_collects_results() -> None:
    """Failing and raising checks are reported, not propagated."""

    def boom() -> tuple[bool, str]:
        raise ValueError("boom")

    checks = [
        ("ok", VerifyScope.KS, lambda: (True, "")),
        ("bad", VerifyScope.KS, lambda: (False, "nope")),
        ("boom", VerifyScope.KS, boom),
    ]
    with patch("kslimit.verify.build_checks", return_value=checks):
        result = await run_suite(VerifyScope.KS)

    assert [r.name for r in result.results] == ["ok", "bad", "boom"]
    assert [r.passed for r in result.results] == [True, False, False]
    assert result.results[2].detail == "ValueError: boom"


@pytest.mark.asyncio
async def test_run_suite_clifford_scope() -> None:
    checks = [c for c in build_checks(VerifyScope.CLIFFORD) if c[0] != "ideal_dimension"]
    with patch("kslimit.verify.build_checks", return_value=checks):
        result = await run_suite(VerifyScope.CLIFFORD, seed=1)
    assert result.passed, result.summary()
