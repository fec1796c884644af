import tomlkit

from kslimit.const import OutputFormat
from kslimit.error import ValidationFailed
from kslimit.forge import example
from kslimit.problem import ProblemFile
from kslimit.report import Analysis, render, render_failure, report_dict


def analysis_of(name: str, **kwargs) -> Analysis:
    return Analysis(ProblemFile.from_structure(example(name), name, **kwargs))


def test_analysis_can_serialize() -> None:
    """An analysis should be serializable."""
    assert f"{analysis_of('EX-II.4')}" == '<Analysis problem="EX-II.4" type="II">'


def test_type_ii_report() -> None:
    data = report_dict(analysis_of("EX-II.4"))
    assert list(data) == [
        "input",
        "structure",
        "k3",
        "kuga_satake",
        "central_fibre",
        "dual_complex",
        "neron",
        "zeta",
        "verification",
    ]
    assert data["structure"]["type"] == "II"
    assert data["k3"]["weight_dims"] == [0, 2, 2, 4, 4]
    assert data["kuga_satake"]["d"] == 16
    assert data["kuga_satake"]["w0"] == 4
    assert data["kuga_satake"]["w1"] == 12
    assert data["kuga_satake"]["diamond"] == {"h00": 4, "h01": 4, "h10": 4, "h11": 4}
    assert data["dual_complex"]["betti"] == [1, 4, 6, 4, 1]
    assert data["dual_complex"]["component_lower_bound"] == 4
    assert data["neron"]["gr1_dim"] == 8
    assert all(v == "pass" for v in data["verification"].values())


def test_type_iii_zeta() -> None:
    data = report_dict(analysis_of("EX-III.3", zeta_terms=3))
    assert data["kuga_satake"]["w0"] == 4
    assert data["kuga_satake"]["w1"] == 4
    assert data["k3"]["weight_dims"] == [1, 1, 2, 2, 3]
    assert data["zeta"]["coefficients"] == [
        "N*[B]*(L-1)^4*1*T^1",
        "N*[B]*(L-1)^4*16*T^2",
        "N*[B]*(L-1)^4*81*T^3",
    ]


def test_type_i_report() -> None:
    analysis = analysis_of("EX-I.3")
    assert analysis.passed
    fibre = report_dict(analysis)["central_fibre"]
    assert fibre["diamond"] == {"h01": 4, "h10": 4}
    assert fibre["torus_rank"] == 0


def test_toml_report_parses() -> None:
    text = render(analysis_of("EX-III.3"), OutputFormat.TOML)
    data = tomlkit.parse(text).unwrap()
    assert data["structure"]["type"] == "III"
    assert data["input"]["name"] == "EX-III.3"


def test_text_report() -> None:
    text = render(analysis_of("EX-III.3"), OutputFormat.TEXT)
    assert text.startswith("EX-III.3: type III, rank 3\n")
    assert "[zeta]" in text


def test_failure_report() -> None:
    m = example("EX-I.3").with_period([1, 0, 0])
    problem = ProblemFile.from_structure(m, "broken")
    try:
        Analysis(problem)
    except ValidationFailed as e:
        data = tomlkit.parse(render_failure(e.report, e.source)).unwrap()
    else:
        raise AssertionError("validation should fail")
    assert data["source"] == "broken"
    assert data["passed"] is False
    assert data["axioms"]["isotropic_period"]["status"] == "fail"
    assert data["axioms"]["signature"]["status"] == "pass"
