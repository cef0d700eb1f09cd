"""The basis {E_k} u {E_{2i} E_{k-2i}} of M_k and exact coordinates in it."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple

from .errors import DomainError, InsufficientPrecisionError, NotInSpanError, VerificationError
from .exact_arith import format_rational
from .linalg import rref, solve_square
from .qseries import QSeries, eisenstein

__all__ = [
    "BasisDescriptor",
    "Decomposition",
    "dim_mk",
    "basis_descriptor",
    "basis_series",
    "basis_matrix",
    "rref",
    "decompose",
    "reduce_product",
    "default_precision",
]


def _check_weight(k: int) -> None:
    if k < 4 or k % 2:
        raise DomainError(f"weight must be even and >= 4, got {k}")


def dim_mk(k: int) -> int:
    """floor(k/4) - floor((k-2)/6), valid for even k >= 4."""
    _check_weight(k)
    return k // 4 - (k - 2) // 6


def default_precision(k: int) -> int:
    return dim_mk(k) + 10


@dataclass(frozen=True)
class BasisDescriptor:
    """Element 0 is E_k; the rest are product pairs (a, b), a <= b, a + b = k."""

    k: int
    products: Tuple[Tuple[int, int], ...]

    def __len__(self):
        return 1 + len(self.products)

    @property
    def labels(self) -> List[str]:
        return [f"E{self.k}"] + [f"E{a}*E{b}" for a, b in self.products]


def basis_descriptor(k: int) -> BasisDescriptor:
    _check_weight(k)
    lo = (k - 2) // 6 + 2
    pairs = tuple((2 * i, k - 2 * i) for i in range(lo, k // 4 + 1))
    desc = BasisDescriptor(k, pairs)
    assert len(desc) == dim_mk(k)
    return desc


def basis_series(desc: BasisDescriptor, precision: int) -> List[QSeries]:
    out = [eisenstein(desc.k, precision)]
    out.extend(eisenstein(a, precision) * eisenstein(b, precision) for a, b in desc.products)
    return out


@lru_cache(maxsize=256)
def _basis_rows(k: int, precision: int) -> Tuple[Tuple[Fraction, ...], ...]:
    return tuple(f.coeffs for f in basis_series(basis_descriptor(k), precision))


def basis_matrix(k: int, precision: int) -> List[List[Fraction]]:
    """Row m holds the first ``precision`` q-coefficients of basis element m."""
    d = dim_mk(k)
    if precision < d:
        raise InsufficientPrecisionError(
            f"precision {precision} is below dim M_{k} = {d}"
        )
    return [list(row) for row in _basis_rows(k, precision)]


@dataclass(frozen=True)
class Decomposition:
    basis: BasisDescriptor
    coords: Tuple[Fraction, ...]
    verified_precision: int

    def reconstruct(self, precision: int | None = None) -> QSeries:
        precision = precision or self.verified_precision
        out = QSeries.zero(precision, self.basis.k)
        for c, f in zip(self.coords, basis_series(self.basis, precision)):
            out = out + f.scale(c)
        return out

    def dump(self) -> str:
        return "".join(
            f"{label} : {format_rational(c)}\n"
            for label, c in zip(self.basis.labels, self.coords)
        )

    def record(self) -> str:
        return " ".join(format_rational(c) for c in self.coords) + "\n"


def decompose(target: QSeries, k: int) -> Decomposition:
    """Coordinates of ``target`` in the weight-k basis.

    The first dim M_k coefficients determine the coordinates; every further
    available coefficient is then checked.  Raises NotInSpanError on the
    first mismatch.
    """
    desc = basis_descriptor(k)
    d = len(desc)
    n = target.precision
    if n < d + 1:
        raise InsufficientPrecisionError(
            f"target precision {n} must be at least dim M_{k} + 1 = {d + 1}"
        )
    rows = _basis_rows(k, n)
    square = [[rows[m][q] for m in range(d)] for q in range(d)]
    coords = solve_square(square, target.coeffs[:d])
    if coords is None:
        raise VerificationError(f"leading {d}x{d} block of the weight-{k} basis is singular")
    for q in range(d, n):
        if sum(c * rows[m][q] for m, c in enumerate(coords)) != target[q]:
            raise NotInSpanError(
                f"target is not in M_{k}: mismatch at coefficient q^{q}", index=q
            )
    return Decomposition(desc, tuple(coords), n)


def reduce_product(i: int, k: int, precision: int | None = None) -> Decomposition:
    """Coordinates of E_{2i} E_{k-2i}; failure here is a bug, not bad input."""
    _check_weight(k)
    if not 2 <= i <= k // 4:
        raise DomainError(f"i must lie in [2, {k // 4}] for k={k}, got {i}")
    precision = precision or default_precision(k)
    target = eisenstein(2 * i, precision) * eisenstein(k - 2 * i, precision)
    return decompose(target, k)
