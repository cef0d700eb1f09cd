"""Exact rational arithmetic and elementary number theory.

``Rational`` is :class:`fractions.Fraction`: it keeps numerator and
denominator coprime with a positive denominator after every operation and
represents zero as ``0/1``.  Division by zero raises ``ZeroDivisionError``.
"""

from __future__ import annotations

import re
import threading
from fractions import Fraction
from math import comb, isqrt

from .errors import DomainError

Rational = Fraction

__all__ = [
    "Rational",
    "bernoulli",
    "binomial",
    "sigma",
    "format_rational",
    "parse_rational",
]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def format_rational(x) -> str:
    """Render ``p/q`` with the sign on ``p``; integers render without ``/1``."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``p`` or ``p/q`` into a canonical fraction.

    Decimal and exponent notations are rejected; only exact integer
    ratios are accepted.
    """
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise DomainError(f"malformed rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise DomainError(f"zero denominator in rational: {text!r}")
    return Fraction(num, den)


def binomial(n: int, k: int) -> int:
    """C(n, k), extended by zero for k < 0 or k > n."""
    if n < 0:
        raise DomainError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def sigma(k: int, n: int) -> int:
    """Sum of the k-th powers of the positive divisors of n."""
    if k < 0:
        raise DomainError(f"sigma requires k >= 0, got k={k}")
    if n <= 0:
        raise DomainError(f"sigma requires n >= 1, got n={n}")
    total = 0
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            e = n // d
            total += d**k
            if e != d:
                total += e**k
    return total


_bernoulli_table = [Fraction(1)]
_bernoulli_lock = threading.Lock()


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n with B_1 = -1/2.

    Uses sum_{j=0}^{n} C(n+1, j) B_j = 0 (n >= 1), memoized.
    """
    if n < 0:
        raise DomainError(f"bernoulli requires n >= 0, got n={n}")
    table = _bernoulli_table
    if n < len(table):
        return table[n]
    with _bernoulli_lock:
        for m in range(len(table), n + 1):
            if m >= 3 and m % 2 == 1:
                table.append(Fraction(0))
                continue
            acc = Fraction(0)
            for j in range(m):
                if table[j]:
                    acc += comb(m + 1, j) * table[j]
            table.append(-acc / (m + 1))
        return table[n]
