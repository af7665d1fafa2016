"""Reference spectra computable by lattice enumeration.

Right isosceles triangles inherit square modes, the equilateral triangle and
its half inherit the triangular-lattice modes, intervals are elementary.  The
enumeration keeps every index pair whose value is at most twice the largest
requested eigenvalue, so no smaller mode can be missed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

PI2 = math.pi * math.pi

SUPPORTED = {
    "right-isosceles": ("dirichlet", "neumann", "L"),
    "equilateral": ("dirichlet", "neumann"),
    "half-equilateral": ("dirichlet", "neumann", "M"),
    "interval": ("dirichlet", "neumann"),
}


@dataclass(frozen=True)
class ClosedFormSpectrum:
    domain: str
    bc: str
    values: tuple[float, ...]

    def __getitem__(self, i: int) -> float:
        return self.values[i]


def _square_pairs(base: float, bc: str, limit: float):
    n_max = int(math.isqrt(int(limit / base))) + 2
    for m in range(0, n_max + 1):
        for n in range(m, n_max + 1):
            v = base * (m * m + n * n)
            if v > limit:
                break
            if bc == "neumann":
                yield v, 1
            elif bc == "dirichlet":
                if 1 <= m < n:
                    yield v, 1
            elif bc == "L":
                if m < n:
                    yield v, 1


def _lattice_pairs(base: float, bc: str, limit: float):
    # symmetric + antisymmetric lattice modes: multiplicity 2 for m < n
    n_max = int(math.sqrt(limit / base)) + 2
    lo = 0 if bc == "neumann" else 1
    for m in range(lo, n_max + 1):
        for n in range(m, n_max + 1):
            v = base * (m * m + m * n + n * n)
            if v > limit:
                break
            yield v, (1 if m == n else 2)


def _interval_values(length: float, bc: str, limit: float):
    k = 0 if bc == "neumann" else 1
    while True:
        v = (k * math.pi / length) ** 2
        if v > limit:
            return
        yield v, 1
        k += 1


def _half_equilateral_pairs(base: float, bc: str, limit: float):
    # antisymmetric lattice modes for pure Dirichlet and for Dirichlet on M
    # (the altitude side); symmetric modes for pure Neumann
    n_max = int(math.sqrt(limit / base)) + 2
    for m in range(0, n_max + 1):
        for n in range(m, n_max + 1):
            v = base * (m * m + m * n + n * n)
            if v > limit:
                break
            if bc == "neumann":
                yield v, 1
            elif bc == "dirichlet":
                if 1 <= m < n:
                    yield v, 1
            elif bc == "M":
                if m < n:
                    yield v, 1


def closed_form(domain: str, bc: str, count: int, size: float = 1.0) -> ClosedFormSpectrum:
    """First `count` eigenvalues (with multiplicity) of a reference domain.

    domain: "right-isosceles" (legs `size`), "equilateral" (side `size`),
    "half-equilateral" (hypotenuse `size`), "interval" (length `size`).
    bc: "dirichlet", "neumann", or the reducible mixed cases "L"
    (right-isosceles, Dirichlet on the hypotenuse) and "M" (half-equilateral,
    Dirichlet on the altitude side).
    """
    if count < 1:
        raise ValueError("count must be positive")
    if size <= 0:
        raise ValueError("size must be positive")
    if domain not in SUPPORTED:
        raise ValueError(f"unsupported domain {domain!r}; choose from {sorted(SUPPORTED)}")
    if bc not in SUPPORTED[domain]:
        raise ValueError(
            f"no closed form for bc {bc!r} on {domain!r} (supported: {SUPPORTED[domain]}); "
            "mixed conditions that do not reduce to lattice modes, such as LS on the "
            "half-equilateral triangle, have no explicit eigenvalues")

    if domain == "right-isosceles":
        base, gen = PI2 / size**2, _square_pairs
    elif domain == "equilateral":
        base, gen = 16.0 * PI2 / (9.0 * size**2), _lattice_pairs
    elif domain == "half-equilateral":
        base, gen = 16.0 * PI2 / (9.0 * size**2), _half_equilateral_pairs
    else:
        base = None
        gen = None

    limit = max(base if base else (math.pi / size) ** 2, 1.0) * 4.0 * count
    while True:
        if domain == "interval":
            found = list(_interval_values(size, bc, limit))
        else:
            found = list(gen(base, bc, limit))
        values = sorted(v for v, mult in found for _ in range(mult))
        # cutoff is proven large enough once it exceeds twice the last value kept
        if len(values) >= count and 2.0 * values[count - 1] <= limit:
            return ClosedFormSpectrum(domain, bc, tuple(values[:count]))
        limit *= 2.0
