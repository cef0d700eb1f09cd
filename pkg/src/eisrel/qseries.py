"""Truncated q-expansions with exact rational coefficients.

A :class:`QSeries` of precision ``N`` stores the coefficients of
``q^0 .. q^(N-1)``.  Anything beyond that is unknown, so binary operations
truncate to the smaller precision of their operands.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Optional

from .errors import DomainError
from .exact_arith import bernoulli, format_rational, parse_rational, sigma

__all__ = [
    "QSeries",
    "eisenstein",
    "theta_derivative",
    "product_P",
    "dump_series",
    "parse_series",
]

_ZERO = Fraction(0)


class QSeries:
    """Immutable truncated power series in q.

    ``weight`` is an advisory tag; it never affects equality or arithmetic
    results beyond being propagated where it is unambiguous.
    """

    __slots__ = ("_coeffs", "_weight")

    def __init__(self, coeffs: Iterable, weight: Optional[int] = None):
        cs = tuple(Fraction(c) for c in coeffs)
        if not cs:
            raise DomainError("a q-series needs precision >= 1")
        self._coeffs = cs
        self._weight = weight

    @classmethod
    def zero(cls, precision: int, weight: Optional[int] = None) -> "QSeries":
        if precision < 1:
            raise DomainError(f"precision must be >= 1, got {precision}")
        return cls((_ZERO,) * precision, weight)

    @classmethod
    def monomial(cls, n: int, precision: int, c=1) -> "QSeries":
        cs = [_ZERO] * precision
        if n < precision:
            cs[n] = Fraction(c)
        return cls(cs)

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def precision(self) -> int:
        return len(self._coeffs)

    @property
    def weight(self) -> Optional[int]:
        return self._weight

    def __len__(self):
        return len(self._coeffs)

    def __getitem__(self, n):
        return self._coeffs[n]

    def __iter__(self):
        return iter(self._coeffs)

    def __repr__(self):
        head = ", ".join(format_rational(c) for c in self._coeffs[:4])
        more = ", ..." if self.precision > 4 else ""
        return f"QSeries([{head}{more}], prec={self.precision}, weight={self._weight})"

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def first_nonzero(self) -> Optional[int]:
        for n, c in enumerate(self._coeffs):
            if c:
                return n
        return None

    def truncate(self, precision: int) -> "QSeries":
        if precision < 1 or precision > self.precision:
            raise DomainError(
                f"cannot truncate precision {self.precision} to {precision}"
            )
        return QSeries(self._coeffs[:precision], self._weight)

    def with_weight(self, weight: Optional[int]) -> "QSeries":
        return QSeries(self._coeffs, weight)

    def __add__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.precision, other.precision)
        w = self._weight if self._weight == other._weight else None
        a, b = self._coeffs, other._coeffs
        return QSeries([a[i] + b[i] for i in range(n)], w)

    def __neg__(self):
        return QSeries([-c for c in self._coeffs], self._weight)

    def __sub__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "QSeries":
        c = Fraction(c)
        return QSeries([c * a for a in self._coeffs], self._weight)

    def __mul__(self, other):
        if isinstance(other, QSeries):
            return _cauchy(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented


def _cauchy(f: QSeries, g: QSeries) -> QSeries:
    n = min(f.precision, g.precision)
    a, b = f.coeffs, g.coeffs
    # skip zero coefficients; cusp forms and sparse inputs are common
    nz_a = [(i, a[i]) for i in range(n) if a[i]]
    nz_b = [(j, b[j]) for j in range(n) if b[j]]
    out = [_ZERO] * n
    for i, ai in nz_a:
        for j, bj in nz_b:
            if i + j >= n:
                break
            out[i + j] += ai * bj
    w = None
    if f.weight is not None and g.weight is not None:
        w = f.weight + g.weight
    return QSeries(out, w)


def theta_derivative(f: QSeries) -> QSeries:
    """q d/dq: multiplies the coefficient of q^n by n."""
    return QSeries([n * c for n, c in enumerate(f.coeffs)], f.weight)


@lru_cache(maxsize=4096)
def eisenstein(k: int, precision: int) -> QSeries:
    """E_k = 2/(k-1)! * (-B_k/(2k) + sum sigma_{k-1}(n) q^n); zero for odd k."""
    if k < 1:
        raise DomainError(f"eisenstein requires k >= 1, got k={k}")
    if precision < 1:
        raise DomainError(f"precision must be >= 1, got {precision}")
    if k % 2:
        return QSeries.zero(precision, k)
    scale = Fraction(2, factorial(k - 1))
    coeffs = [-bernoulli(k) / factorial(k)]
    coeffs.extend(scale * sigma(k - 1, n) for n in range(1, precision))
    return QSeries(coeffs, k)


@lru_cache(maxsize=4096)
def product_P(r: int, s: int, precision: int) -> QSeries:
    """E_r E_s + [r=2] E_s'/s + [s=2] E_r'/r, where ' is q d/dq."""
    if r < 1 or s < 1:
        raise DomainError(f"product_P requires r, s >= 1, got ({r}, {s})")
    if r > s:
        return product_P(s, r, precision)
    er = eisenstein(r, precision)
    es = eisenstein(s, precision)
    out = er * es
    if r == 2:
        out = out + theta_derivative(es).scale(Fraction(1, s))
    if s == 2:
        out = out + theta_derivative(er).scale(Fraction(1, r))
    return out.with_weight(r + s)


def dump_series(f: QSeries) -> str:
    """Text form: ``prec=N weight=K|none`` then one ``n: p/q`` line per coefficient."""
    w = "none" if f.weight is None else str(f.weight)
    lines = [f"prec={f.precision} weight={w}"]
    lines.extend(f"{n}: {format_rational(c)}" for n, c in enumerate(f.coeffs))
    return "\n".join(lines) + "\n"


def parse_series(text: str) -> QSeries:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise DomainError("empty series text")
    header = dict(part.split("=", 1) for part in lines[0].split() if "=" in part)
    try:
        prec = int(header["prec"])
        wtext = header["weight"]
    except (KeyError, ValueError):
        raise DomainError(f"malformed series header: {lines[0]!r}") from None
    try:
        weight = None if wtext == "none" else int(wtext)
    except ValueError:
        raise DomainError(f"malformed weight tag: {wtext!r}") from None
    body = lines[1:]
    if len(body) != prec:
        raise DomainError(f"series header says prec={prec} but {len(body)} lines follow")
    coeffs = []
    for expected, ln in enumerate(body):
        idx, sep, val = ln.partition(":")
        if not sep or idx.strip() != str(expected):
            raise DomainError(f"expected coefficient index {expected}, got line {ln!r}")
        coeffs.append(parse_rational(val))
    return QSeries(coeffs, weight)

