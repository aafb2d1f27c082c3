"""Exact class functions on symmetric groups.

Values are exact rationals indexed by cycle type, one value per partition
of the degree in the frozen enumeration order.  Permutation characters of
row-stabilizer subgroups are computed by distributing cycles over blocks;
irreducible characters are recovered by orthogonalizing the permutation
characters along the dominance order, which keeps everything inside exact
arithmetic and leaves Kostka numbers (computed independently by tableau
enumeration) available as a cross-check rather than an ingredient.

All pairings are plain products without conjugation: every class function
built here is rational-valued, which `inner` asserts at run time.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import comb, factorial

from .errors import DegreeMismatchError, OrthogonalizationError, SizeMismatchError
from .partitions import (
    Partition,
    conjugate,
    enumerate_partitions,
    predecessors,
    standard_count,
    successors,
)

__all__ = [
    "ClassFunction",
    "MultiplicityTable",
    "class_size",
    "class_types",
    "conjugate_twist_check",
    "eq1_check",
    "ind_sgn_character",
    "inner",
    "irreducible_characters",
    "lemma1_check",
    "multiplicity_table",
    "perm_character",
    "restrict",
    "sign_character",
    "sign_twist",
    "sign_value",
    "theorem1_check",
    "theorem1_components",
    "trivial_character",
    "youngs_rule_check",
]


def class_types(n: int) -> tuple[Partition, ...]:
    """Cycle types of degree n, in the frozen partition order."""
    return enumerate_partitions(n)


@cache
def _type_index(n: int) -> dict[Partition, int]:
    return {rho: i for i, rho in enumerate(class_types(n))}


def class_size(rho: Partition) -> int:
    """Number of permutations with cycle type rho: n!/z_rho."""
    n = sum(rho)
    z = 1
    for length in set(rho):
        m = rho.count(length)
        z *= length ** m * factorial(m)
    return factorial(n) // z


@cache
def _class_sizes(n: int) -> tuple[int, ...]:
    return tuple(class_size(rho) for rho in class_types(n))


def sign_value(rho: Partition) -> int:
    """Sign of any permutation of cycle type rho."""
    return -1 if (sum(rho) - len(rho)) % 2 else 1


@dataclass(frozen=True)
class ClassFunction:
    """Exact rational function on the conjugacy classes of degree n."""

    n: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.values) != len(class_types(self.n)):
            raise DegreeMismatchError("one value per cycle type is required")

    def __call__(self, rho: Partition) -> Fraction:
        return self.values[_type_index(self.n)[rho]]

    @property
    def degree(self) -> Fraction:
        """Value at the identity class."""
        return self((1,) * self.n) if self.n else Fraction(1)

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        _same_degree(self, other)
        return ClassFunction(self.n, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        _same_degree(self, other)
        return ClassFunction(self.n, tuple(a - b for a, b in zip(self.values, other.values)))

    def scaled(self, c) -> "ClassFunction":
        c = Fraction(c)
        return ClassFunction(self.n, tuple(c * v for v in self.values))

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self.values)


def _same_degree(f: ClassFunction, g: ClassFunction) -> None:
    if f.n != g.n:
        raise DegreeMismatchError(f"degrees differ: {f.n} != {g.n}")


def trivial_character(n: int) -> ClassFunction:
    return ClassFunction(n, tuple(Fraction(1) for _ in class_types(n)))


def sign_character(n: int) -> ClassFunction:
    return ClassFunction(n, tuple(Fraction(sign_value(r)) for r in class_types(n)))


def _distribution_count(blocks: Partition, rho: Partition) -> int:
    """Ways to split the cycles of a permutation of type rho into ordered
    groups with prescribed sums.

    Cycles of equal length are distinguishable (they have distinct
    supports), hence the binomial factors.
    """
    lengths = sorted(set(rho), reverse=True)
    counts = tuple(rho.count(length) for length in lengths)

    @cache
    def fill(bi: int, avail: tuple[int, ...]) -> int:
        if bi == len(blocks):
            return 1 if not any(avail) else 0
        total = 0
        target = blocks[bi]

        def pick(li: int, remaining: int, ways: int, left: list[int]) -> None:
            nonlocal total
            if remaining == 0:
                total += ways * fill(bi + 1, tuple(left))
                return
            if li == len(lengths):
                return
            cap = min(left[li], remaining // lengths[li])
            for k in range(cap + 1):
                left[li] -= k
                pick(li + 1, remaining - k * lengths[li],
                     ways * comb(left[li] + k, k), left)
                left[li] += k

        pick(0, target, 1, list(avail))
        return total

    return fill(0, counts)


@cache
def perm_character(lam: Partition) -> ClassFunction:
    """Character of the permutation action on ordered set partitions with
    block sizes lam (the module induced from the trivial character of the
    row stabilizer)."""
    n = sum(lam)
    return ClassFunction(
        n,
        tuple(Fraction(_distribution_count(lam, rho)) for rho in class_types(n)),
    )


def sign_twist(f: ClassFunction) -> ClassFunction:
    """Pointwise product with the sign character; an involution."""
    return ClassFunction(
        f.n,
        tuple(sign_value(rho) * v for rho, v in zip(class_types(f.n), f.values)),
    )


@cache
def ind_sgn_character(lam: Partition) -> ClassFunction:
    """Character of the module induced from the sign character of the
    column stabilizer of lam; equals sign_twist of the row character of
    the conjugate shape."""
    return sign_twist(perm_character(conjugate(lam)))


def inner(f: ClassFunction, g: ClassFunction) -> Fraction:
    """Class-size-weighted pairing (1/n!) sum |C_rho| f(rho) g(rho)."""
    _same_degree(f, g)
    n = f.n
    total = sum(
        size * a * b
        for size, a, b in zip(_class_sizes(n), f.values, g.values)
    )
    return Fraction(total, factorial(n))


def theorem1_check(lam: Partition) -> Fraction:
    """Pairing of the two induced characters attached to lam; contract: 1."""
    return inner(perm_character(lam), ind_sgn_character(lam))


@cache
def irreducible_characters(n: int) -> dict[Partition, ClassFunction]:
    """All irreducible characters, keyed by partition in the frozen order.

    Walks the permutation characters in the frozen order (a linear
    extension of reverse dominance) and strips the previously found
    irreducibles.  Unit norm, integrality, and the branching dimension are
    enforced; a violation means the processing order is broken.
    """
    chis: dict[Partition, ClassFunction] = {}
    for lam in enumerate_partitions(n):
        psi = perm_character(lam)
        reduced = psi
        for mu, chi in chis.items():
            m = inner(psi, chi)
            if m:
                reduced = reduced - chi.scaled(m)
        if inner(reduced, reduced) != 1:
            raise OrthogonalizationError(f"non-unit norm at {lam}")
        if not reduced.is_integral():
            raise OrthogonalizationError(f"non-integer values at {lam}")
        if reduced.degree != standard_count(lam):
            raise OrthogonalizationError(f"wrong dimension at {lam}")
        chis[lam] = reduced
    return chis


@dataclass(frozen=True)
class MultiplicityTable:
    """Multiplicities of irreducibles inside the row-induced modules."""

    n: int
    entries: dict[tuple[Partition, Partition], int]

    def __call__(self, mu: Partition, lam: Partition) -> int:
        return self.entries[(mu, lam)]


@cache
def multiplicity_table(n: int) -> MultiplicityTable:
    """M(mu, lam) = pairing of the lam permutation character with the mu
    irreducible, for all pairs of partitions of n."""
    chis = irreducible_characters(n)
    entries: dict[tuple[Partition, Partition], int] = {}
    for lam in enumerate_partitions(n):
        psi = perm_character(lam)
        for mu, chi in chis.items():
            m = inner(psi, chi)
            if m.denominator != 1 or m < 0:
                raise OrthogonalizationError(f"bad multiplicity at ({mu}, {lam})")
            entries[(mu, lam)] = int(m)
    return MultiplicityTable(n, entries)


def youngs_rule_check(n: int) -> bool:
    """True iff every multiplicity equals the matching Kostka number."""
    from .tableaux import kostka

    table = multiplicity_table(n)
    return all(
        table(mu, lam) == kostka(mu, lam)
        for mu in enumerate_partitions(n)
        for lam in enumerate_partitions(n)
    )


def restrict(f: ClassFunction) -> ClassFunction:
    """Restriction to the previous symmetric group, evaluated by extending
    each cycle type of degree n-1 with a fixed point."""
    if f.n == 0:
        raise DegreeMismatchError("cannot restrict degree 0")
    values = []
    for tau in class_types(f.n - 1):
        extended = tuple(sorted(tau + (1,), reverse=True))
        values.append(f(extended))
    return ClassFunction(f.n - 1, tuple(values))


def lemma1_check(lam: Partition) -> bool:
    """Restriction of the lam row character decomposes over the covered
    shapes with the removal multiplicities."""
    if sum(lam) < 2:
        raise SizeMismatchError("need degree at least 2")
    lhs = restrict(perm_character(lam))
    n1 = lhs.n
    rhs = ClassFunction(n1, tuple(Fraction(0) for _ in class_types(n1)))
    for gamma, c in predecessors(lam):
        rhs = rhs + perm_character(gamma).scaled(c)
    return lhs == rhs


def eq1_check(lam: Partition, rho: Partition) -> tuple[int, int]:
    """Both sides of the multiplicity recurrence for (lam, rho)."""
    n = sum(lam)
    if sum(rho) != n - 1:
        raise SizeMismatchError(f"need |{lam}| = |{rho}| + 1")
    big = multiplicity_table(n)
    small = multiplicity_table(n - 1)
    left = sum(big(mu, lam) for mu in successors(rho))
    right = sum(c * small(rho, gamma) for gamma, c in predecessors(lam))
    return left, right


def conjugate_twist_check(n: int) -> bool:
    """Sign-twisting an irreducible gives the conjugate irreducible."""
    chis = irreducible_characters(n)
    return all(sign_twist(chis[mu]) == chis[conjugate(mu)] for mu in chis)


def theorem1_components(lam: Partition) -> list[tuple[Partition, int, int]]:
    """Irreducibles common to both induced modules of lam, with their
    multiplicities in each; the contract is the single entry (lam, 1, 1)."""
    n = sum(lam)
    chis = irreducible_characters(n)
    psi = perm_character(lam)
    phi = ind_sgn_character(lam)
    out = []
    for mu, chi in chis.items():
        a = inner(psi, chi)
        b = inner(phi, chi)
        if a and b:
            if a.denominator != 1 or b.denominator != 1:
                raise OrthogonalizationError(f"non-integer multiplicity at {mu}")
            out.append((mu, int(a), int(b)))
    return out
