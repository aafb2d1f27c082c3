"""Brute-force oracles used by the test suite only.

These recompute characters from explicit group elements and explicit
combinatorial objects, staying independent of the cycle-distribution
formula and of the orthogonalization in the library.
"""

from fractions import Fraction
from itertools import combinations, permutations as iperms

from younglab.characters import ClassFunction, class_types
from younglab.partitions import Partition
from younglab.permutations import (
    Permutation,
    all_permutations,
    compose,
    cycle_type,
    from_cycle_type,
    identity,
    inverse,
    sign,
)

Tabloid = tuple[frozenset, ...]


def tabloids(lam: Partition) -> list[Tabloid]:
    """All ordered set partitions of {0..n-1} with block sizes lam."""
    n = sum(lam)

    def rec(remaining: frozenset, i: int):
        if i == len(lam):
            yield ()
            return
        for block in combinations(sorted(remaining), lam[i]):
            fs = frozenset(block)
            for rest in rec(remaining - fs, i + 1):
                yield (fs,) + rest

    return list(rec(frozenset(range(n)), 0))


def perm_character_tabloid_oracle(lam: Partition) -> ClassFunction:
    """Permutation character by counting fixed tabloids directly."""
    n = sum(lam)
    tabs = tabloids(lam)
    values = []
    for rho in class_types(n):
        g = from_cycle_type(rho)
        fixed = sum(
            1
            for tab in tabs
            if all(frozenset(g[x] for x in block) == block for block in tab)
        )
        values.append(Fraction(fixed))
    return ClassFunction(n, tuple(values))


def column_group(lam: Partition) -> list[Permutation]:
    """All permutations preserving each column of the row-major filling."""
    n = sum(lam)
    starts = [0]
    for part in lam:
        starts.append(starts[-1] + part)
    ncols = lam[0] if lam else 0
    cols = [
        [starts[i] + j for i in range(len(lam)) if lam[i] > j]
        for j in range(ncols)
    ]
    group = [identity(n)]
    for col in cols:
        extended = []
        for arrangement in iperms(col):
            p = list(range(n))
            for src, dst in zip(col, arrangement):
                p[src] = dst
            extended.extend(compose(tuple(p), q) for q in group)
        group = extended
    return group


def ind_sgn_coset_oracle(lam: Partition) -> ClassFunction:
    """Character induced from the sign of the column group, summed over
    explicit group elements."""
    n = sum(lam)
    members = set(column_group(lam))
    order = len(members)
    values = []
    for rho in class_types(n):
        g = from_cycle_type(rho)
        total = 0
        for x in all_permutations(n):
            y = compose(inverse(x), compose(g, x))
            if y in members:
                total += sign(y)
        values.append(Fraction(total, order))
    return ClassFunction(n, tuple(values))


def class_size_oracle(rho: Partition) -> int:
    """Count permutations of the given cycle type by enumeration."""
    return sum(1 for p in all_permutations(sum(rho)) if cycle_type(p) == rho)
