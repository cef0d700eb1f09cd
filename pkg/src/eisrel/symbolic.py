"""Exact checks of the three-variable partial-fraction identity.

With x + y + z = 0 the Laurent combination

    sum_{i+j=k} C(i-1,t-1) C(j-1,s-1) (-1)^(i+r) x^-i y^-j
  + sum_{j+h=k} C(j-1,r-1) C(h-1,t-1) (-1)^(j+s) y^-j z^-h
  + sum_{h+i=k} C(h-1,s-1) C(i-1,r-1) (-1)^(h+t) z^-h x^-i

vanishes for k = r + s + t - 1.  It is the image of 1/(xy) + 1/(yz) + 1/(zx)
under D = (dx - dy)^(r-1) (dy - dz)^(s-1) (dz - dx)^(t-1), up to the factor
(r-1)!(s-1)!(t-1)!.

Zero tests are done on polynomials: y is replaced by -(x+z) and the result
is multiplied by (x z (x+z))^K for a K large enough to clear every pole.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from math import factorial
from typing import Dict, Tuple

from .errors import DomainError
from .exact_arith import binomial, format_rational
from .relations import Triple, _as_triple

__all__ = [
    "BivarPolynomial",
    "LaurentPoly3",
    "lemma3_laurent",
    "clear_denominators",
    "lemma3_residue",
    "pfd_residue",
    "d_operator",
    "apply_D",
    "d_closed_forms",
    "d_expansion_check",
]


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


class _SparsePoly:
    """Sparse map from exponent tuples to nonzero Fractions."""

    __slots__ = ("_terms",)
    nvars = 0

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != self.nvars:
                    raise DomainError(f"expected {self.nvars} exponents, got {e}")
                c = Fraction(c)
                if c:
                    clean[e] = c
        self._terms = clean

    @property
    def terms(self) -> Dict[tuple, Fraction]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return type(self)(out)

    def __neg__(self):
        return type(self)({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        return type(self)({e: c * v for e, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if type(other) is not type(self):
            return NotImplemented
        out = defaultdict(Fraction)
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return type(self)(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def max_abs_exponent(self) -> int:
        return max((abs(a) for e in self._terms for a in e), default=0)

    def dump(self) -> str:
        """One ``a b [c]: p/q`` line per term, exponents in lexicographic order."""
        return "".join(
            " ".join(map(str, e)) + f": {format_rational(c)}\n" for e, c in self.items()
        )

    def __repr__(self):
        return f"{type(self).__name__}({self.items()!r})"


class BivarPolynomial(_SparsePoly):
    """Polynomial in x and z; keys are (deg_x, deg_z), both >= 0."""

    nvars = 2

    def __init__(self, terms=None):
        super().__init__(terms)
        for a, b in self._terms:
            if a < 0 or b < 0:
                raise DomainError(f"negative exponent {(a, b)} in a polynomial")

    def degree(self) -> int:
        return max((a + b for a, b in self._terms), default=-1)


class LaurentPoly3(_SparsePoly):
    """Laurent polynomial in independent x, y, z; keys may be negative."""

    nvars = 3

    @classmethod
    def monomial(cls, a: int, b: int, c: int, coeff=1) -> "LaurentPoly3":
        return cls({(a, b, c): coeff})


def _x_plus_z_power(n: int) -> Dict[Tuple[int, int], int]:
    return {(m, n - m): binomial(n, m) for m in range(n + 1)}


def _cleared_monomial(a: int, w: int, c: int, K: int) -> Dict[Tuple[int, int], int]:
    """x^-a (x+z)^-w z^-c times (x z (x+z))^K, as integer-coefficient terms."""
    if max(a, w, c) > K:
        raise DomainError(f"clearing exponent {K} too small for pole orders {(a, w, c)}")
    dx, dz = K - a, K - c
    return {(m + dx, n + dz): coef for (m, n), coef in _x_plus_z_power(K - w).items()}


def clear_denominators(f: LaurentPoly3, K: int) -> BivarPolynomial:
    """Substitute y = -(x+z) into f and multiply by (x z (x+z))^K.

    Every term of ``f`` must have non-positive exponents bounded below by -K.
    """
    out = defaultdict(Fraction)
    for (a, b, c), coef in f.terms.items():
        if a > 0 or b > 0 or c > 0:
            raise DomainError(f"positive exponent {(a, b, c)} cannot be cleared")
        # y^b = (-1)^b (x+z)^b
        sgn = _sign(b)
        for e, v in _cleared_monomial(-a, -b, -c, K).items():
            out[e] += sgn * v * coef
    return BivarPolynomial(out)


def _three_sums(triple, scale=1):
    r, s, t = _as_triple(triple)
    k = r + s + t - 1
    xy, yz, zx = defaultdict(int), defaultdict(int), defaultdict(int)
    for i in range(1, k):
        j = k - i
        xy[(-i, -j, 0)] += scale * binomial(i - 1, t - 1) * binomial(j - 1, s - 1) * _sign(i + r)
    for j in range(1, k):
        h = k - j
        yz[(0, -j, -h)] += scale * binomial(j - 1, r - 1) * binomial(h - 1, t - 1) * _sign(j + s)
    for h in range(1, k):
        i = k - h
        zx[(-i, 0, -h)] += scale * binomial(h - 1, s - 1) * binomial(i - 1, r - 1) * _sign(h + t)
    return LaurentPoly3(xy), LaurentPoly3(yz), LaurentPoly3(zx)


def lemma3_laurent(triple) -> LaurentPoly3:
    """The three binomial sums as a Laurent polynomial in independent x, y, z."""
    xy, yz, zx = _three_sums(triple)
    return xy + yz + zx


def lemma3_residue(triple) -> BivarPolynomial:
    """Cleared numerator of the three-sum identity on x + y + z = 0.

    Zero exactly when the identity holds for this triple.
    """
    triple = _as_triple(triple)
    k = triple.k
    res = clear_denominators(lemma3_laurent(triple), k)
    assert res.max_abs_exponent() <= 3 * k
    return res


def pfd_residue(r: int, s: int) -> BivarPolynomial:
    """Cleared numerator of

    sum_{i+j=r+s} [C(i-1,s-1) (x+z)^-i x^-j + C(i-1,r-1) (x+z)^-i z^-j] - x^-r z^-s

    over (x z (x+z))^(r+s).
    """
    if r < 1 or s < 1:
        raise DomainError(f"r, s must be >= 1, got ({r}, {s})")
    K = r + s
    out = defaultdict(int)
    for i in range(1, K):
        j = K - i
        c1 = binomial(i - 1, s - 1)
        c2 = binomial(i - 1, r - 1)
        if c1:
            for e, v in _cleared_monomial(j, i, 0, K).items():
                out[e] += c1 * v
        if c2:
            for e, v in _cleared_monomial(0, i, j, K).items():
                out[e] += c2 * v
    for e, v in _cleared_monomial(r, 0, s, K).items():
        out[e] -= v
    res = BivarPolynomial(out)
    assert res.max_abs_exponent() <= 3 * K
    return res


def d_operator(triple) -> Dict[Tuple[int, int, int], int]:
    """Expand (dx - dy)^(r-1) (dy - dz)^(s-1) (dz - dx)^(t-1).

    Returns {(p, q, u): c} meaning sum c * dx^p dy^q dz^u.
    """
    r, s, t = _as_triple(triple)
    op = {(0, 0, 0): 1}

    def times(op, n, plus, minus):
        # multiply by (d_plus - d_minus)^n
        out = defaultdict(int)
        for m in range(n + 1):
            c = binomial(n, m) * _sign(n - m)
            for e, v in op.items():
                e2 = list(e)
                e2[plus] += m
                e2[minus] += n - m
                out[tuple(e2)] += c * v
        return {e: v for e, v in out.items() if v}

    op = times(op, r - 1, 0, 1)
    op = times(op, s - 1, 1, 2)
    op = times(op, t - 1, 2, 0)
    return op


def _falling(a: int, n: int) -> int:
    # d^n/dx^n x^a = a (a-1) ... (a-n+1) x^(a-n)
    out = 1
    for m in range(n):
        out *= a - m
    return out


def apply_D(triple, f: LaurentPoly3) -> LaurentPoly3:
    """Apply D_{r,s,t} to f, treating x, y, z as independent variables."""
    triple = _as_triple(triple)
    op = d_operator(triple)
    out = defaultdict(Fraction)
    for (a, b, c), coef in f.terms.items():
        for (p, q, u), v in op.items():
            w = _falling(a, p) * _falling(b, q) * _falling(c, u)
            if w:
                out[(a - p, b - q, c - u)] += v * w * coef
    res = LaurentPoly3(out)
    bound = max(3 * triple.k, f.max_abs_exponent() + triple.k)
    assert res.max_abs_exponent() <= bound
    return res


def d_closed_forms(triple) -> Tuple[LaurentPoly3, LaurentPoly3, LaurentPoly3]:
    """Closed forms of D applied to 1/(xy), 1/(yz), 1/(zx), in that order.

    D(1/(xy)) = (r-1)!(s-1)!(t-1)! sum_{I+J=k} C(I-1,t-1) C(J-1,s-1) (-1)^(J+r) x^-I y^-J,
    and cyclically for the other two.  Writing the sign as (-1)^(I+r) instead
    is only correct for even k; for odd k it flips every term.
    """
    r, s, t = _as_triple(triple)
    k = r + s + t - 1
    scale = factorial(r - 1) * factorial(s - 1) * factorial(t - 1) * _sign(k)
    return _three_sums(triple, scale)


_BASE_TERMS = (
    LaurentPoly3.monomial(-1, -1, 0),
    LaurentPoly3.monomial(0, -1, -1),
    LaurentPoly3.monomial(-1, 0, -1),
)


def d_expansion_check(triple) -> Tuple[bool, bool, bool]:
    """Compare apply_D on 1/(xy), 1/(yz), 1/(zx) with their closed forms."""
    closed = d_closed_forms(triple)
    return tuple(apply_D(triple, base) == cf for base, cf in zip(_BASE_TERMS, closed))
