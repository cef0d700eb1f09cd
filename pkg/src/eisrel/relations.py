"""Linear relations among E_k and the corrected products P_{i,j}.

For a triple (r, s, t) of positive integers with k = r + s + t - 1 >= 3,
the three cyclic binomial sums

    sum_{i+j=k} C(i-1,t-1) C(j-1,s-1) (-1)^(i+r) (P_{i,j} - (-1)^j E_k)
  + sum_{j+h=k} C(j-1,r-1) C(h-1,t-1) (-1)^(j+s) (P_{j,h} - (-1)^h E_k)
  + sum_{h+i=k} C(h-1,s-1) C(i-1,r-1) (-1)^(h+t) (P_{h,i} - (-1)^i E_k)

vanish identically.  :func:`relation_vector` collects this combination into
coordinates on the generators E_k, P_{2,k-2}, P_{4,k-4}, ...
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Tuple

from .errors import DomainError
from .exact_arith import binomial, format_rational, parse_rational
from .linalg import rref
from .qseries import QSeries, eisenstein, product_P

__all__ = [
    "Triple",
    "RelationVector",
    "p_pairs",
    "generator_labels",
    "relation_vector",
    "evaluate_relation",
    "t1_relation",
    "popa_constant",
    "corollary_triple",
    "triples_of_weight",
    "relation_matrix",
    "relation_rank",
    "restricted_relation_count",
    "dump_relation",
    "parse_relation",
    "dump_matrix",
]


@dataclass(frozen=True)
class Triple:
    """Positive integers (r, s, t); weight k = r + s + t - 1.

    The relation builders additionally require k >= 3.  (1, 1, 1) is allowed
    here because the partial-fraction identities hold for it as well.
    """

    r: int
    s: int
    t: int

    def __post_init__(self):
        if min(self.r, self.s, self.t) < 1:
            raise DomainError(f"triple entries must be >= 1, got {tuple(self)}")

    @property
    def k(self) -> int:
        return self.r + self.s + self.t - 1

    def __iter__(self):
        return iter((self.r, self.s, self.t))


def _as_triple(t) -> Triple:
    return t if isinstance(t, Triple) else Triple(*t)


def p_pairs(k: int) -> List[Tuple[int, int]]:
    """Canonical P-generator keys (2i, k-2i), 1 <= i <= k//4; empty for odd k."""
    if k % 2:
        return []
    return [(2 * i, k - 2 * i) for i in range(1, k // 4 + 1)]


def generator_labels(k: int) -> List[str]:
    return [f"E{k}"] + [f"P{i}_{j}" for i, j in p_pairs(k)]


@dataclass(frozen=True)
class RelationVector:
    """The statement coeff_E * E_k + sum coeff_P[(i, j)] * P_{i,j} = 0.

    Keys of ``coeff_P`` are (i, j) with i <= j, i + j = k, both even.  Zero
    entries are dropped on construction.
    """

    k: int
    coeff_E: Fraction = Fraction(0)
    coeff_P: Dict[Tuple[int, int], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (i, j), c in sorted(self.coeff_P.items()):
            if i > j or i + j != self.k or i % 2 or j % 2 or i < 2:
                raise DomainError(f"invalid P key {(i, j)} for weight {self.k}")
            c = Fraction(c)
            if c:
                clean[(i, j)] = c
        object.__setattr__(self, "coeff_E", Fraction(self.coeff_E))
        object.__setattr__(self, "coeff_P", clean)

    def is_zero(self) -> bool:
        return not self.coeff_E and not self.coeff_P

    def as_row(self) -> List[Fraction]:
        """Dense coordinates in generator order E_k, P_{2,k-2}, P_{4,k-4}, ..."""
        return [self.coeff_E] + [self.coeff_P.get(p, Fraction(0)) for p in p_pairs(self.k)]

    def coefficient(self, i: int, j: int) -> Fraction:
        return self.coeff_P.get((min(i, j), max(i, j)), Fraction(0))

    def scaled(self, c) -> "RelationVector":
        c = Fraction(c)
        return RelationVector(
            self.k, c * self.coeff_E, {key: c * v for key, v in self.coeff_P.items()}
        )

    def normalize(self) -> "RelationVector":
        """Divide by the first nonzero coefficient in generator order."""
        lead = next((c for c in self.as_row() if c), None)
        if lead is None:
            return self
        return self.scaled(1 / lead)

    def ratio_to(self, other: "RelationVector") -> Optional[Fraction]:
        """c with self == c * other, or None if no such c exists.

        Both zero gives 1; exactly one zero gives None.
        """
        if self.k != other.k:
            return None
        a, b = self.as_row(), other.as_row()
        if self.is_zero() and other.is_zero():
            return Fraction(1)
        if self.is_zero() or other.is_zero():
            return None
        idx = next(n for n, x in enumerate(b) if x)
        c = a[idx] / b[idx]
        if c and all(x == c * y for x, y in zip(a, b)):
            return c
        return None


def relation_vector(triple) -> RelationVector:
    triple = _as_triple(triple)
    if triple.k < 3:
        raise DomainError(f"relations need weight r+s+t-1 >= 3, got {triple.k}")
    r, s, t = triple
    k = triple.k
    if k % 2:
        return RelationVector(k)

    coeff_E = Fraction(0)
    coeff_P: Dict[Tuple[int, int], int] = {}

    def accumulate(a: int, b: int, c: int) -> None:
        # term c * (P_{a,b} - (-1)^b E_k); P_{a,b} = 0 unless a, b both even
        nonlocal coeff_E
        if not c:
            return
        if a % 2 == 0 and b % 2 == 0:
            key = (min(a, b), max(a, b))
            coeff_P[key] = coeff_P.get(key, 0) + c
        coeff_E -= c if b % 2 == 0 else -c

    for i in range(1, k):
        j = k - i
        accumulate(i, j, binomial(i - 1, t - 1) * binomial(j - 1, s - 1) * _sign(i + r))
    for j in range(1, k):
        h = k - j
        accumulate(j, h, binomial(j - 1, r - 1) * binomial(h - 1, t - 1) * _sign(j + s))
    for h in range(1, k):
        i = k - h
        accumulate(h, i, binomial(h - 1, s - 1) * binomial(i - 1, r - 1) * _sign(h + t))
    return RelationVector(k, coeff_E, coeff_P)


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


def evaluate_relation(v: RelationVector, precision: int) -> QSeries:
    if precision < 1:
        raise DomainError(f"precision must be >= 1, got {precision}")
    out = QSeries.zero(precision)
    if v.coeff_E:
        out = out + eisenstein(v.k, precision).scale(v.coeff_E)
    for (i, j), c in v.coeff_P.items():
        out = out + product_P(i, j, precision).scale(c)
    return out.with_weight(v.k)


def _check_t1_args(r: int, s: int) -> None:
    if r < 1 or s < 1:
        raise DomainError(f"r, s must be >= 1, got ({r}, {s})")
    if (r + s) % 2 or r + s < 4:
        raise DomainError(f"r + s must be even and >= 4, got {r + s}")


def t1_relation(r: int, s: int) -> RelationVector:
    """The t = 1 specialization, written directly:

    sum_{i+j=r+s} (C(i-1,r-1) + C(i-1,s-1)) (P_{i,j} - E_k) - P_{r,s} + (-1)^s E_k = 0.
    """
    _check_t1_args(r, s)
    k = r + s
    coeff_E = Fraction(_sign(s))
    coeff_P: Dict[Tuple[int, int], int] = {}
    for i in range(1, k):
        j = k - i
        c = binomial(i - 1, r - 1) + binomial(i - 1, s - 1)
        coeff_E -= c
        if i % 2 == 0 and j % 2 == 0:
            key = (min(i, j), max(i, j))
            coeff_P[key] = coeff_P.get(key, 0) + c
    if r % 2 == 0 and s % 2 == 0:
        key = (min(r, s), max(r, s))
        coeff_P[key] = coeff_P.get(key, 0) - 1
    return RelationVector(k, coeff_E, coeff_P)


def popa_constant(r: int, s: int) -> Fraction:
    """C(r+s, r) - (-1)^s."""
    _check_t1_args(r, s)
    return Fraction(binomial(r + s, r) - _sign(s))


def corollary_triple(i: int, k: int) -> Triple:
    """(2i-1, 2i-1, k-4i+3), the triple that eliminates E_{2i}E_{k-2i}."""
    if k < 4 or k % 2:
        raise DomainError(f"k must be even and >= 4, got {k}")
    top = (k - 2) // 6 + 1
    if not 2 <= i <= top:
        raise DomainError(f"i must lie in [2, {top}] for k={k}, got {i}")
    return Triple(2 * i - 1, 2 * i - 1, k - 4 * i + 3)


def triples_of_weight(k: int) -> Iterator[Triple]:
    """All (r, s, t) with r + s + t = k + 1, in lexicographic order."""
    for r in range(1, k):
        for s in range(1, k + 1 - r):
            yield Triple(r, s, k + 1 - r - s)


def _check_even_weight(k: int) -> None:
    if k < 4 or k % 2:
        raise DomainError(f"k must be even and >= 4, got {k}")


def relation_matrix(k: int) -> List[List[Fraction]]:
    """One row per triple of weight k, columns in :func:`generator_labels` order."""
    _check_even_weight(k)
    return [relation_vector(t).as_row() for t in triples_of_weight(k)]


def relation_rank(k: int) -> int:
    return rref(relation_matrix(k))[1]


def restricted_relation_count(k: int) -> int:
    """Dimension of the relations that do not involve P_{2,k-2}."""
    rows = relation_matrix(k)
    # move the P_{2,k-2} column first; a pivot there is one relation lost
    permuted = [[row[1], row[0]] + row[2:] for row in rows]
    _, rk, pivots = rref(permuted)
    return rk - (1 if pivots and pivots[0] == 0 else 0)


def dump_relation(v: RelationVector) -> str:
    lines = [f"k={v.k}", f"E: {format_rational(v.coeff_E)}"]
    for (i, j), c in v.coeff_P.items():
        lines.append(f"P {i} {j}: {format_rational(c)}")
    return "\n".join(lines) + "\n"


def parse_relation(text: str) -> RelationVector:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("k="):
        raise DomainError("relation text must start with 'k=<K>'")
    try:
        k = int(lines[0][2:])
    except ValueError:
        raise DomainError(f"malformed weight line: {lines[0]!r}") from None
    coeff_E = Fraction(0)
    coeff_P = {}
    for ln in lines[1:]:
        label, sep, val = ln.partition(":")
        if not sep:
            raise DomainError(f"malformed relation line: {ln!r}")
        parts = label.split()
        if parts == ["E"]:
            coeff_E = parse_rational(val)
        elif len(parts) == 3 and parts[0] == "P":
            try:
                key = (int(parts[1]), int(parts[2]))
            except ValueError:
                raise DomainError(f"malformed P key: {ln!r}") from None
            coeff_P[key] = parse_rational(val)
        else:
            raise DomainError(f"unknown relation label: {label!r}")
    return RelationVector(k, coeff_E, coeff_P)


def dump_matrix(labels: List[str], rows: List[List[Fraction]]) -> str:
    out = ["\t".join(labels)]
    out.extend("\t".join(format_rational(x) for x in row) for row in rows)
    return "\n".join(out) + "\n"
