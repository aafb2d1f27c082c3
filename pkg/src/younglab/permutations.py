"""Small helpers for explicit symmetric-group elements.

Permutations are tuples p of length n with p[i] = image of i (0-based).
The class-function machinery never touches these; they exist for the
brute-force oracles (tabloid fixed points, induced-character sums) and for
the substitution action on forms.
"""

from __future__ import annotations

from itertools import permutations as _perms

from .partitions import Partition

Permutation = tuple[int, ...]


def identity(n: int) -> Permutation:
    return tuple(range(n))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """(p o q)(i) = p(q(i))."""
    return tuple(p[q[i]] for i in range(len(p)))


def inverse(p: Permutation) -> Permutation:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def all_permutations(n: int) -> list[Permutation]:
    return [tuple(p) for p in _perms(range(n))]


def cycles(p: Permutation) -> list[list[int]]:
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i]:
            continue
        cyc = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            seen[j] = True
            cyc.append(j)
            j = p[j]
        out.append(cyc)
    return out


def cycle_type(p: Permutation) -> Partition:
    return tuple(sorted((len(c) for c in cycles(p)), reverse=True))


def sign(p: Permutation) -> int:
    return -1 if (len(p) - len(cycles(p))) % 2 else 1


def from_cycle_type(rho: Partition) -> Permutation:
    """Canonical representative: consecutive cycles (1..r1)(r1+1..r1+r2)..."""
    n = sum(rho)
    p = list(range(n))
    start = 0
    for r in rho:
        for k in range(r):
            p[start + k] = start + (k + 1) % r
        start += r
    return tuple(p)
