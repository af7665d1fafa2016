"""Explicit eigenvalue bounds for right triangles, rhombi, and obtuse isosceles
triangles, all parameterized by the canonical leg ratio b or by h = sin(alpha).
"""

from __future__ import annotations

import math

PI2 = math.pi * math.pi


def _check_b(b: float):
    if not 0.0 < b <= 1.0:
        raise ValueError("b must lie in (0, 1]")


def bound_hooker_protter(b: float) -> float:
    """Lower bound pi^2 (1+b)^2 / (4 b^2) for the rhombus ground state."""
    _check_b(b)
    return PI2 * (1.0 + b) ** 2 / (4.0 * b * b)


def bound_isosceles_upper(b: float) -> float:
    """Upper bound for mu_2 of the right triangle with legs 1 and b.

    This is the exact Rayleigh quotient of the deformed square-mode test
    function; it reduces to pi^2 at b = 1.
    """
    _check_b(b)
    num = 3.0 * PI2 * ((b - 1.0) ** 2 + 2.0) * (b * b + 1.0) - 64.0 * (b - 1.0) ** 2 * (b + 1.0)
    den = 3.0 * b * b * ((b - 1.0) ** 2 + 4.0)
    return num / den


def gap_quadratic_factor(b: float) -> float:
    """Quadratic factor of the isobound-minus-rhombus-bound gap; negative on (0,1)."""
    return 9.0 * PI2 * b * b - (256.0 + 6.0 * PI2) * b + 21.0 * PI2 - 256.0


def gap_identity_residual(b: float) -> float:
    """Residual of the closed-form gap identity; zero up to roundoff."""
    _check_b(b)
    gap = (b - 1.0) ** 2 * gap_quadratic_factor(b) / (12.0 * b * b * ((b - 1.0) ** 2 + 4.0))
    return bound_isosceles_upper(b) - bound_hooker_protter(b) - gap


def bound_obtuse_upper(h: float) -> tuple[float, float]:
    """(test-function value, stated bound) for mu_2 of the obtuse isosceles triangle.

    Returns ((pi^2 + 16 h^2 - 8) / (4 h^2 (1-h^2)), pi^2 / (4 h^2 (1-h^2)));
    the first is at most the second, with equality exactly at h^2 = 1/2.
    """
    if not 0.0 < h <= 1.0 / math.sqrt(2.0):
        raise ValueError("h must lie in (0, 1/sqrt(2)]; larger h leaves the obtuse regime")
    den = 4.0 * h * h * (1.0 - h * h)
    return (PI2 + 16.0 * h * h - 8.0) / den, PI2 / den
