"""Exact enumeration of avoidance classes and C-finite sequence machinery.

Counting is done with Python's arbitrary-precision integers throughout; the
level sets are built by one-point extensions (insert the new maximum), which
is sound because avoidance classes are downward closed.  The five-state
insertion machine is hard-wired to the quadruple basis {123, 3214, 2143,
15432} and is cross-validated against the generic enumerator in the tests.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence

from . import perm as P
from .errors import InvalidSequence, NeedMoreTerms, UseSeedVector
from .perm import Perm

QUAD_BASIS = tuple(Perm.from_text(t) for t in ("123", "3214", "2143", "15432"))
TRIPLE_BASIS = QUAD_BASIS[:3]
PAIR_BASIS = QUAD_BASIS[:2]


def enumerate_avoiders(basis: Iterable[Perm], n: int) -> set[Perm]:
    """All length-n permutations avoiding every basis element."""
    basis = sorted(set(basis))
    level: set[Perm] = {P.EMPTY}
    for m in range(1, n + 1):
        nxt: set[Perm] = set()
        for p in level:
            for pos in range(len(p) + 1):
                cand = Perm(p.values[:pos] + (m,) + p.values[pos:])
                if not any(P.contains(b, cand) for b in basis):
                    nxt.add(cand)
        level = nxt
        if not level:
            break
    return level if n >= 1 else set()


def count_avoiders(basis: Iterable[Perm], max_n: int) -> list[int]:
    """|S_n(basis)| for n = 1..max_n (index 0 holds n = 1)."""
    basis = sorted(set(basis))
    counts: list[int] = []
    level: set[Perm] = {P.EMPTY}
    for m in range(1, max_n + 1):
        nxt: set[Perm] = set()
        for p in level:
            for pos in range(len(p) + 1):
                cand = Perm(p.values[:pos] + (m,) + p.values[pos:])
                if not any(P.contains(b, cand) for b in basis):
                    nxt.add(cand)
        level = nxt
        counts.append(len(level))
    return counts


class StateVector(NamedTuple):
    a: int
    b: int
    c: int
    d: int
    e: int

    def total(self) -> int:
        return sum(self)


SEED = StateVector(0, 0, 0, 0, 1)  # n = 1 convention


def abcde_census(n: int) -> StateVector:
    """Classify the quadruple-basis avoiders of length n by their first one
    or two values (n >= 2; the n = 1 seed is the SEED constant)."""
    if n < 2:
        raise UseSeedVector("census defined for n >= 2; use SEED for n = 1")
    counts = [0, 0, 0, 0, 0]
    for p in enumerate_avoiders(QUAD_BASIS, n):
        first = p[0]
        if first == n - 1:
            counts[0] += 1
        elif first == n - 2:
            counts[1] += 1
        elif first <= n - 3:
            counts[2] += 1
        elif p[1] >= n - 3:
            counts[3] += 1
        else:
            counts[4] += 1
    return StateVector(*counts)


def abcde_step(v: StateVector) -> StateVector:
    """One insertion step of the five-state machine (the transfer matrix at
    x = 1)."""
    a, b, c, d, e = v
    return StateVector(2 * d + e, a, b, a + b + d + e, c)


def abcde_counts(max_n: int) -> list[int]:
    """Totals of the evolved state vector for n = 1..max_n."""
    v = SEED
    out = [v.total()]
    for _ in range(1, max_n):
        v = abcde_step(v)
        out.append(v.total())
    return out[:max_n]


@dataclass(frozen=True)
class LinearRecurrence:
    """u_n = c_1 u_{n-1} + ... + c_d u_{n-d} with given initial terms
    u_1..u_d."""

    coeffs: tuple[Fraction, ...]
    initial: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs)


def _as_int(x: Fraction):
    return int(x) if x.denominator == 1 else x


def eval_recurrence(r: LinearRecurrence, max_n: int) -> list:
    """Terms u_1..u_max_n, exact; integer-valued terms come back as ints."""
    vals = [Fraction(u) for u in r.initial[:max_n]]
    while len(vals) < max_n:
        vals.append(
            sum(c * vals[-i] for i, c in enumerate(r.coeffs, 1))
        )
    return [_as_int(v) for v in vals]


def _solve_consistent(
    rows: list[list[Fraction]],
) -> Optional[list[Fraction]]:
    """Gaussian elimination on an augmented system; returns a particular
    solution (free variables zero) or None if inconsistent."""
    if not rows:
        return None
    ncols = len(rows[0]) - 1
    mat = [row[:] for row in rows]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][col] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = mat[r][col]
        mat[r] = [x / inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col] != 0:
                factor = mat[i][col]
                mat[i] = [x - factor * y for x, y in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
    for i in range(r, len(mat)):
        if mat[i][-1] != 0:
            return None
    sol = [Fraction(0)] * ncols
    for i, col in enumerate(pivots):
        sol[col] = mat[i][-1]
    return sol


def fit_recurrence(
    seq: Sequence[int], max_order: int
) -> Optional[LinearRecurrence]:
    """Minimal-order constant-coefficient recurrence consistent with every
    provided term, or None if no order up to max_order fits.

    Requires at least 2*max_order + 2 terms so every candidate order is
    checked against at least two more equations than it has unknowns.
    """
    n_terms = len(seq)
    if n_terms < 2 * max_order + 2:
        raise NeedMoreTerms(
            f"need >= {2 * max_order + 2} terms for max order {max_order}, "
            f"got {n_terms}"
        )
    for d in range(1, max_order + 1):
        rows = [
            [Fraction(seq[n - 1 - i]) for i in range(1, d + 1)]
            + [Fraction(seq[n - 1])]
            for n in range(d + 1, n_terms + 1)
        ]
        sol = _solve_consistent(rows)
        if sol is not None:
            return LinearRecurrence(tuple(sol), tuple(seq[:d]))
    return None


@dataclass(frozen=True)
class RationalGF:
    """numerator / denominator as coefficient tuples in ascending degree;
    the denominator has nonzero constant term."""

    numerator: tuple[int, ...]
    denominator: tuple[int, ...]

    def series(self, n_terms: int) -> list[int]:
        """Power-series coefficients of x^1..x^n_terms."""
        num = list(self.numerator) + [0] * (
            max(0, n_terms + 1 - len(self.numerator))
        )
        den = self.denominator
        out: list[Fraction] = []
        for k in range(n_terms + 1):
            acc = Fraction(num[k])
            for i in range(1, min(k, len(den) - 1) + 1):
                acc -= den[i] * out[k - i]
            out.append(acc / den[0])
        return [_as_int(v) for v in out[1:]]


def gf_from_recurrence(r: LinearRecurrence) -> RationalGF:
    """Generating function sum_{n>=1} u_n x^n of the recurrence's sequence."""
    d = r.order
    den_frac = [Fraction(1)] + [-c for c in r.coeffs]
    scale = 1
    for c in den_frac:
        scale = scale * c.denominator // _gcd(scale, c.denominator)
    den = [int(c * scale) for c in den_frac]
    u = [0] + list(r.initial)  # u[0] = 0: series starts at x^1
    num = []
    for j in range(d + 1):
        num.append(sum(den[i] * u[j - i] for i in range(min(j, d) + 1)))
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return RationalGF(tuple(num), tuple(den))


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def to_bfile_lines(seq: Sequence[int]) -> list[str]:
    """OEIS b-file style lines, 1-indexed."""
    return [f"{n} {v}" for n, v in enumerate(seq, 1)]


def parse_sequence_text(text: str) -> list[int]:
    """Read a sequence from b-file lines, a JSON array, or comma/whitespace
    separated integers."""
    s = text.strip()
    if not s:
        raise InvalidSequence("empty sequence input")
    if s.startswith("["):
        vals = json.loads(s)
        return [int(v) for v in vals]
    lines = [ln for ln in s.splitlines() if ln.strip() and not ln.startswith("#")]
    if all(len(ln.split()) == 2 for ln in lines) and len(lines) > 1:
        pairs = [(int(a), int(b)) for a, b in (ln.split() for ln in lines)]
        if [a for a, _ in pairs] == list(range(pairs[0][0], pairs[0][0] + len(pairs))):
            return [b for _, b in pairs]
    tokens = s.replace(",", " ").split()
    return [int(t) for t in tokens]
