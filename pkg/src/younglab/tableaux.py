"""Semistandard and standard Young tableaux, Kostka numbers, and the
two-way counting recurrence with its explicit bijection.

A tableau is a tuple of row tuples.  A weight is a tuple of nonnegative
counts: weight[i] is the number of entries equal to i+1.  Weights are
compositions, not only partitions: removing one symbol occurrence from a
partition weight can leave a genuine composition, and those must be kept
distinct.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cache

from .errors import SizeMismatchError
from .partitions import (
    Partition,
    check_partition,
    predecessors,
    successors,
)

Tableau = tuple[tuple[int, ...], ...]
Weight = tuple[int, ...]


def tableau_shape(t: Tableau) -> Partition:
    return tuple(len(row) for row in t)


def tableau_weight(t: Tableau, nsymbols: int = 0) -> Weight:
    """Occurrence counts of the symbols 1..max (or 1..nsymbols if larger)."""
    top = max((max(row) for row in t if row), default=0)
    counts = [0] * max(top, nsymbols)
    for row in t:
        for x in row:
            counts[x - 1] += 1
    return tuple(counts)


def strip_weight(w: Weight) -> Weight:
    """Drop trailing zero counts."""
    end = len(w)
    while end and w[end - 1] == 0:
        end -= 1
    return w[:end]


def is_semistandard(t: Tableau) -> bool:
    shape = tableau_shape(t)
    if any(shape[i + 1] > shape[i] for i in range(len(shape) - 1)):
        return False
    for i, row in enumerate(t):
        for j, x in enumerate(row):
            if x < 1:
                return False
            if j and x < row[j - 1]:
                return False
            if i and j < len(t[i - 1]) and x <= t[i - 1][j]:
                return False
    return True


def reading_word(t: Tableau) -> tuple[int, ...]:
    """Row-reading word: rows concatenated top to bottom."""
    return tuple(x for row in t for x in row)


def parse_tableau(text: str) -> Tableau:
    """Parse the "1,1,1,2/2,3" text format (rows joined by "/")."""
    rows = []
    for chunk in text.split("/"):
        rows.append(tuple(int(s) for s in chunk.split(",") if s.strip()))
    return tuple(rows)


def format_tableau(t: Tableau) -> str:
    return "/".join(",".join(str(x) for x in row) for row in t)


def enumerate_ssyt(shape: Partition, weight: Weight) -> list[Tableau]:
    """All semistandard tableaux of the given shape and weight.

    Cells are filled in row-major order trying smaller symbols first, so
    the output comes in lexicographic order of the row-reading word.
    """
    shape = check_partition(shape)
    if any(c < 0 for c in weight):
        raise ValueError(f"weight counts must be nonnegative, got {weight}")
    if sum(shape) != sum(weight):
        raise SizeMismatchError(f"|{shape}| != |{weight}|")
    nsym = len(weight)
    cells = [(i, j) for i in range(len(shape)) for j in range(shape[i])]
    rows = [[0] * shape[i] for i in range(len(shape))]
    remaining = list(weight)
    out: list[Tableau] = []

    def fill(k: int) -> None:
        if k == len(cells):
            out.append(tuple(tuple(r) for r in rows))
            return
        i, j = cells[k]
        lo = rows[i][j - 1] if j else 1
        if i:
            lo = max(lo, rows[i - 1][j] + 1)
        for s in range(lo, nsym + 1):
            if not remaining[s - 1]:
                continue
            rows[i][j] = s
            remaining[s - 1] -= 1
            fill(k + 1)
            remaining[s - 1] += 1
        rows[i][j] = 0

    fill(0)
    return out


@cache
def kostka(mu: Partition, lam: Weight) -> int:
    """Kostka number: the count of semistandard tableaux of shape mu and
    weight lam.  The weight may be any composition; the count only depends
    on it up to reordering, but no normalization is applied here so that
    the invariance stays testable.
    """
    return len(enumerate_ssyt(mu, lam))


def eq2_check(lam: Partition, rho: Partition) -> tuple[int, int]:
    """Both sides of the Kostka recurrence for (lam, rho).

    left  = sum over covers mu of rho of K(mu, lam)
    right = sum over gamma covered by lam of c(lam, gamma) * K(rho, gamma)
    """
    _check_consecutive(lam, rho)
    left = sum(kostka(mu, lam) for mu in successors(rho))
    right = sum(c * kostka(rho, gamma) for gamma, c in predecessors(lam))
    return left, right


def _check_consecutive(lam: Partition, rho: Partition) -> None:
    if sum(lam) != sum(rho) + 1:
        raise SizeMismatchError(f"need |{lam}| = |{rho}| + 1")


def enumerate_standard(lam: Partition) -> list[Tableau]:
    """All standard tableaux of shape lam (weight all-ones)."""
    return enumerate_ssyt(lam, (1,) * sum(lam))


@dataclass(frozen=True)
class BijectionPair:
    mu_tableau: Tableau
    removed_symbol: int
    rho_tableau: Tableau
    gamma_weight: Weight
    canonical: bool


@dataclass(frozen=True)
class BijectionCertificate:
    """A verified pairing witnessing the two-way count for (lam, rho).

    The left side lists every semistandard tableau of weight lam whose shape
    covers rho; the right side lists every semistandard tableau of shape rho
    whose weight is lam with one symbol occurrence removed (weights kept as
    compositions).  `canonical` is True when every pair was produced by the
    per-item rule; otherwise some pairs come from the matching fallback.
    """

    lam: Partition
    rho: Partition
    pairs: tuple[BijectionPair, ...] = field(default_factory=tuple)
    canonical: bool = True

    @property
    def canonical_count(self) -> int:
        return sum(1 for p in self.pairs if p.canonical)

    def check(self) -> bool:
        """Re-verify that the pairing is a bijection between the two sides."""
        left = sorted(p.mu_tableau for p in self.pairs)
        right = sorted((p.gamma_weight, p.rho_tableau) for p in self.pairs)
        if left != sorted(_left_side(self.lam, self.rho)):
            return False
        if right != sorted(_right_side(self.lam, self.rho)):
            return False
        return len(set(left)) == len(left) and len(set(right)) == len(right)


def _left_side(lam: Partition, rho: Partition) -> list[Tableau]:
    return [t for mu in successors(rho) for t in enumerate_ssyt(mu, lam)]


def _right_side(lam: Partition, rho: Partition) -> list[tuple[Weight, Tableau]]:
    out = []
    for i in range(len(lam)):
        w = strip_weight(lam[:i] + (lam[i] - 1,) + lam[i + 1:])
        out.extend((w, s) for s in enumerate_ssyt(rho, w))
    return out


def _corner_row(mu: Partition, rho: Partition) -> int:
    """1-based row where mu exceeds rho by one cell."""
    padded = rho + (0,) * (len(mu) - len(rho))
    for i, (a, b) in enumerate(zip(mu, padded)):
        if a != b:
            return i + 1
    raise ValueError(f"{mu} does not cover {rho}")


def _canonical_image(t: Tableau, row: int) -> Tableau | None:
    """Delete the rightmost entry equal to `row` in row `row` and close it.

    Returns None when the symbol is absent or the result is not
    semistandard; the caller then falls back to matching.
    """
    r = row - 1
    cols = [j for j, x in enumerate(t[r]) if x == row]
    if not cols:
        return None
    j = cols[-1]
    new_row = t[r][:j] + t[r][j + 1:]
    rows = t[:r] + ((new_row,) if new_row else ()) + t[r + 1:]
    return rows if is_semistandard(rows) else None


def theorem4_bijection(lam: Partition, rho: Partition) -> BijectionCertificate:
    """Pair the two sides of the Kostka recurrence for (lam, rho).

    Per-item rule: a tableau whose shape covers rho in row r loses the
    rightmost symbol r of its r-th row, and the row closes up.  Whenever
    that is defined and injective it reproduces the worked small cases
    exactly; any leftover items (the rule can delete nothing when symbol r
    is missing from row r) are paired by a perfect matching that only joins
    items whose contents differ by one symbol occurrence.
    """
    _check_consecutive(lam, rho)
    left: list[tuple[Tableau, int]] = []  # (tableau, corner row)
    for mu in successors(rho):
        r = _corner_row(mu, rho)
        left.extend((t, r) for t in enumerate_ssyt(mu, lam))
    right = _right_side(lam, rho)

    taken = [False] * len(right)
    index = {item: i for i, item in enumerate(right)}
    assigned: list[tuple[int, Tableau, Weight, bool] | None] = [None] * len(left)
    for k, (t, r) in enumerate(left):
        s = _canonical_image(t, r)
        if s is None:
            continue
        w = strip_weight(lam[:r - 1] + (lam[r - 1] - 1,) + lam[r:])
        i = index.get((w, s))
        if i is not None and not taken[i]:
            taken[i] = True
            assigned[k] = (r, s, w, True)

    all_canonical = all(a is not None for a in assigned)
    if not all_canonical:
        # Any right item whose weight is lam minus one occurrence of some
        # symbol present in the left tableau is an admissible partner; the
        # groups by weight always admit a completion because the two sides
        # are equinumerous in total.
        free = [i for i, used in enumerate(taken) if not used]
        for k, (t, r) in enumerate(left):
            if assigned[k] is not None:
                continue
            for i in free:
                w, s = right[i]
                removed = _removed_symbol(lam, w)
                if lam[removed - 1] > 0:
                    assigned[k] = (removed, s, w, False)
                    free.remove(i)
                    break
        if any(a is None for a in assigned):
            raise AssertionError("two-way count sides are not equinumerous")

    pairs = tuple(
        BijectionPair(t, sym, s, w, canon)
        for (t, _), (sym, s, w, canon) in zip(left, assigned)
    )
    return BijectionCertificate(lam, rho, pairs, all_canonical)


def _removed_symbol(lam: Partition, w: Weight) -> int:
    """The symbol whose count drops from lam to w."""
    padded = w + (0,) * (len(lam) - len(w))
    for i, (a, b) in enumerate(zip(lam, padded)):
        if a != b:
            return i + 1
    raise ValueError(f"{w} is not {lam} minus one symbol")
