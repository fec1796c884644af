from typing import Sequence

from sympy.polys.polyerrors import CoercionFailed

from .error import ProblemFileError
from .hodgekit.linalg import (
    Mat,
    Scalar,
    Vector,
    complex_vector,
    format_rational,
    imag_vector,
    rational,
    real_vector,
)


def parse_rational(text: str | int, source: str | None = None) -> Scalar:
    try:
        return rational(text)
    except (CoercionFailed, TypeError, ValueError, ZeroDivisionError) as e:
        raise ProblemFileError(f"Not a rational number: {text!r}", source) from e


def parse_rows(
    rows: Sequence[Sequence[str | int]], source: str | None = None
) -> list[list[Scalar]]:
    return [[parse_rational(e, source) for e in row] for row in rows]


def format_rows(M: Mat) -> list[list[str]]:
    return [[format_rational(e) for e in row] for row in M.to_list()]


def format_vector(v: Sequence[Scalar]) -> list[str]:
    return [format_rational(e) for e in v]


def split_period(v: Vector) -> tuple[list[str], list[str]]:
    """Real and imaginary parts of a Gaussian vector as rational strings."""
    return format_vector(real_vector(v)), format_vector(imag_vector(v))


def join_period(re: Sequence[Scalar], im: Sequence[Scalar]) -> Vector:
    return complex_vector(re, im)

