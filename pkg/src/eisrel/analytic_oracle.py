"""Floating-point lattice sums for E_k, used to sanity-check q-expansions.

    E_k(tau) ~ (2 pi i)^-k sum_{|m|<=M} sum_{|n|<=N, (m,n)!=(0,0)} (m tau + n)^-k

The inner sum over n is taken first, then the outer sum over m.  For k = 2
the double sum converges only conditionally and its value depends on this
order, so it must be requested explicitly.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .qseries import QSeries

__all__ = ["LatticeParams", "lattice_eisenstein", "evaluate_qseries", "default_tolerance"]


@dataclass(frozen=True)
class LatticeParams:
    M: int
    N: int
    tau: complex

    def __post_init__(self):
        if self.M < 1 or self.N < 1:
            raise DomainError(f"truncations must be >= 1, got M={self.M}, N={self.N}")
        if complex(self.tau).imag <= 0:
            raise DomainError(f"tau must lie in the upper half-plane, got {self.tau}")


def lattice_eisenstein(k: int, p: LatticeParams, eisenstein_summation: bool = False) -> complex:
    if k < 1 or (k <= 2 and not (k == 2 and eisenstein_summation)):
        raise DomainError(
            f"lattice sum needs k >= 3 (k = 2 only with eisenstein_summation), got k={k}"
        )
    tau = complex(p.tau)
    n = np.arange(-p.N, p.N + 1, dtype=np.float64)
    re_parts, im_parts = [], []
    for m in range(-p.M, p.M + 1):
        z = m * tau + n
        if m == 0:
            z = z[n != 0]
        row = np.sum(z ** (-k))
        re_parts.append(row.real)
        im_parts.append(row.imag)
    total = complex(math.fsum(re_parts), math.fsum(im_parts))
    return total / (2j * math.pi) ** k


def evaluate_qseries(f: QSeries, tau: complex) -> complex:
    """sum_{n < precision} a_n e^(2 pi i n tau), by Horner's rule."""
    tau = complex(tau)
    if tau.imag <= 0:
        raise DomainError(f"tau must lie in the upper half-plane, got {tau}")
    q = cmath.exp(2j * math.pi * tau)
    acc = 0j
    for c in reversed(f.coeffs):
        acc = acc * q + float(c)
    return acc


def default_tolerance(k: int) -> float:
    """Agreement expected at M = N = 400: 1e-3 for weight 4, 1e-6 above."""
    return 1e-3 if k <= 4 else 1e-6
