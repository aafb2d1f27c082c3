"""Polylinear-form realizations of the row-induced modules and their
irreducible pieces.

The space attached to a shape lam is spanned by the monomials whose
exponent multiset puts i-1 on each variable assigned to row i; the
symmetric group acts by substituting variables.  Specht polynomials
(column Vandermonde products) live inside that space and span the
shift-invariant part, which is the kernel of the total derivative
D = sum of d/dx_i: over the rationals a form is invariant under adding a
common constant to all variables exactly when D kills it.

Coefficients are rationals throughout; every rank and equality here is a
statement over Q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, factorial

from .characters import ClassFunction, class_types, irreducible_characters, perm_character
from .errors import InvalidFillingError, LimitError, SizeMismatchError
from .exactla import (
    RationalMatrix,
    Subspace,
    intersect,
    kernel,
    rank_bareiss,
    restricted_trace,
)
from .partitions import Partition, standard_count
from .permutations import Permutation, all_permutations, from_cycle_type
from .tableaux import Tableau, enumerate_standard

Monomial = tuple[int, ...]

STATEMENT2_MAX_N = 6
THEOREM5_MAX_N = 5
TWO_ROW_MAX_N = 8


def monomial_sort_key(m: Monomial):
    """Frozen order: higher total degree first, then descending lex."""
    return (-sum(m), tuple(-x for x in m))


class Form:
    """Sparse multivariate polynomial with exact rational coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        clean: dict[Monomial, Fraction] = {}
        for m, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                if len(m) != n:
                    raise SizeMismatchError(f"monomial {m} is not in {n} variables")
                clean[tuple(m)] = c
        self.terms = clean

    @staticmethod
    def zero(n: int) -> "Form":
        return Form(n)

    @staticmethod
    def constant(n: int, c) -> "Form":
        return Form(n, {(0,) * n: Fraction(c)})

    @staticmethod
    def variable(n: int, i: int) -> "Form":
        """x_i, 1-based."""
        e = [0] * n
        e[i - 1] = 1
        return Form(n, {tuple(e): Fraction(1)})

    @staticmethod
    def monomial(n: int, m: Monomial, c=1) -> "Form":
        return Form(n, {tuple(m): Fraction(c)})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, Form) and self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def __add__(self, other: "Form") -> "Form":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return Form(self.n, out)

    def __neg__(self) -> "Form":
        return Form(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Form") -> "Form":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Form):
            if other.n != self.n:
                raise SizeMismatchError("forms live in different variable counts")
            out: dict[Monomial, Fraction] = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    key = tuple(a + b for a, b in zip(m1, m2))
                    out[key] = out.get(key, Fraction(0)) + c1 * c2
            return Form(self.n, out)
        return Form(self.n, {m: c * Fraction(other) for m, c in self.terms.items()})

    __rmul__ = __mul__

    def act(self, sigma: Permutation) -> "Form":
        """Substitute x_i -> x_{sigma(i)} (sigma 0-based on positions)."""
        out: dict[Monomial, Fraction] = {}
        for m, c in self.terms.items():
            img = [0] * self.n
            for i, e in enumerate(m):
                img[sigma[i]] = e
            key = tuple(img)
            out[key] = out.get(key, Fraction(0)) + c
        return Form(self.n, out)

    def derivative_sum(self) -> "Form":
        """Total derivative: the sum of all partial derivatives."""
        out: dict[Monomial, Fraction] = {}
        for m, c in self.terms.items():
            for i, e in enumerate(m):
                if e:
                    key = m[:i] + (e - 1,) + m[i + 1:]
                    out[key] = out.get(key, Fraction(0)) + c * e
        return Form(self.n, out)

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    def __repr__(self) -> str:
        return f"Form({format_form(self)})"


def act(sigma: Permutation, f: Form) -> Form:
    return f.act(sigma)


def format_form(f: Form) -> str:
    """Deterministic text rendering, terms in the frozen monomial order."""
    if not f.terms:
        return "0"
    chunks = []
    for m in sorted(f.terms, key=monomial_sort_key):
        c = f.terms[m]
        vars_part = "*".join(
            f"x{i + 1}^{e}" if e > 1 else f"x{i + 1}"
            for i, e in enumerate(m) if e
        ) or "1"
        if not chunks:
            sign = "-" if c < 0 else ""
        else:
            sign = " - " if c < 0 else " + "
        mag = abs(c)
        if vars_part == "1":
            chunks.append(f"{sign}{mag}")
        elif mag == 1:
            chunks.append(f"{sign}{vars_part}")
        else:
            chunks.append(f"{sign}{mag} * {vars_part}")
    return "".join(chunks)


def _multiset_permutations(items: list[int]) -> list[tuple[int, ...]]:
    """Distinct permutations of a multiset, generated recursively."""
    out: list[tuple[int, ...]] = []
    items = sorted(items)
    n = len(items)
    cur = [0] * n

    def rec(remaining: list[int], depth: int) -> None:
        if depth == n:
            out.append(tuple(cur))
            return
        prev = None
        for idx, value in enumerate(remaining):
            if value == prev:
                continue
            prev = value
            cur[depth] = value
            rec(remaining[:idx] + remaining[idx + 1:], depth + 1)

    rec(items, 0)
    return out


def x_monomials(lam: Partition, n: int) -> list[Monomial]:
    """Monomials with exponent i-1 on each variable assigned to row i.

    There are n!/prod(lam_i!) of them: equal rows carry different
    exponents, so all assignments stay distinct.  Returned in the frozen
    monomial order.
    """
    if sum(lam) != n:
        raise SizeMismatchError(f"|{lam}| != {n}")
    exponents: list[int] = []
    for i, part in enumerate(lam):
        exponents.extend([i] * part)
    monos = _multiset_permutations(exponents)
    expected = factorial(n)
    for part in lam:
        expected //= factorial(part)
    assert len(set(monos)) == expected
    return sorted(monos, key=monomial_sort_key)


def monomial_action_character(monomials: list[Monomial], n: int) -> ClassFunction:
    """Character of the substitution action on a set of monomials (the
    count of fixed monomials, one representative per cycle type)."""
    values = []
    for rho in class_types(n):
        sigma = from_cycle_type(rho)
        fixed = 0
        for m in monomials:
            img = [0] * n
            for i, e in enumerate(m):
                img[sigma[i]] = e
            if tuple(img) == m:
                fixed += 1
        values.append(Fraction(fixed))
    return ClassFunction(n, tuple(values))


def statement2_check(lam: Partition, n: int) -> bool:
    """The substitution action on the lam monomials has the same character
    as the row-induced module: the two are equivalent permutation modules."""
    if n > STATEMENT2_MAX_N:
        raise LimitError(f"n={n} exceeds the supported {STATEMENT2_MAX_N}")
    monos = x_monomials(lam, n)
    return monomial_action_character(monos, n) == perm_character(lam)


@dataclass(frozen=True)
class FormSpace:
    """A subspace of the span of an explicit ordered monomial basis."""

    ambient: tuple[Monomial, ...]
    subspace: Subspace

    @property
    def dim(self) -> int:
        return self.subspace.dim


def form_to_vector(f: Form, index: dict[Monomial, int], size: int):
    v = [Fraction(0)] * size
    for m, c in f.terms.items():
        if m not in index:
            raise SizeMismatchError(f"term {m} outside the ambient basis")
        v[index[m]] = c
    return v


def span_of_forms(forms: list[Form], ambient: list[Monomial]) -> FormSpace:
    index = {m: i for i, m in enumerate(ambient)}
    rows = [form_to_vector(f, index, len(ambient)) for f in forms]
    return FormSpace(tuple(ambient), Subspace(len(ambient), rows))


def action_matrix(sigma: Permutation, ambient: list[Monomial]) -> RationalMatrix:
    """Permutation matrix of the substitution action on the ambient basis."""
    index = {m: i for i, m in enumerate(ambient)}
    size = len(ambient)
    cols = []
    for m in ambient:
        img = [0] * len(sigma)
        for i, e in enumerate(m):
            img[sigma[i]] = e
        cols.append(index[tuple(img)])
    entries = [[0] * size for _ in range(size)]
    for j, i in enumerate(cols):
        entries[i][j] = 1
    return RationalMatrix(entries, cols=size)


def restricted_character(space: FormSpace, n: int) -> ClassFunction:
    """Character of the substitution action restricted to the subspace;
    raises NotInvariantError if the subspace is not actually invariant."""
    values = []
    for rho in class_types(n):
        matrix = action_matrix(from_cycle_type(rho), list(space.ambient))
        values.append(restricted_trace(matrix, space.subspace))
    return ClassFunction(n, tuple(values))


def specht_poly(t: Tableau, n: int) -> Form:
    """Product over columns of the Vandermonde determinant in the column's
    variables, expanded exactly."""
    seen: set[int] = set()
    for row in t:
        for x in row:
            if not (1 <= x <= n) or x in seen:
                raise InvalidFillingError(f"entries must be distinct in 1..{n}")
            seen.add(x)
    result = Form.constant(n, 1)
    ncols = len(t[0]) if t else 0
    for j in range(ncols):
        column = [row[j] for row in t if j < len(row)]
        for a in range(len(column)):
            for b in range(a + 1, len(column)):
                result = result * (
                    Form.variable(n, column[a]) - Form.variable(n, column[b])
                )
    return result


def specht_module(lam: Partition, n: int) -> FormSpace:
    """Span of the Specht polynomials of the standard tableaux of lam,
    inside the ambient monomial basis of the shape."""
    if sum(lam) != n:
        raise SizeMismatchError(f"|{lam}| != {n}")
    ambient = x_monomials(lam, n)
    forms = [specht_poly(t, n) for t in enumerate_standard(lam)]
    return span_of_forms(forms, ambient)


def _derivative_matrix(ambient: list[Monomial], n: int) -> RationalMatrix:
    """Matrix of the total derivative from the ambient span to the span of
    the image monomials."""
    images: dict[Monomial, int] = {}
    columns: list[dict[int, Fraction]] = []
    for m in ambient:
        col: dict[int, Fraction] = {}
        for i, e in enumerate(m):
            if e:
                key = m[:i] + (e - 1,) + m[i + 1:]
                if key not in images:
                    images[key] = len(images)
                idx = images[key]
                col[idx] = col.get(idx, Fraction(0)) + e
        columns.append(col)
    rows = len(images)
    entries = [[Fraction(0)] * len(ambient) for _ in range(max(rows, 1))]
    for j, col in enumerate(columns):
        for i, c in col.items():
            entries[i][j] = c
    return RationalMatrix(entries, cols=len(ambient))


def d_kernel_dim(ambient: list[Monomial], n: int) -> int:
    """Dimension of the shift-invariant part of the ambient span."""
    matrix = _derivative_matrix(ambient, n)
    return len(ambient) - rank_bareiss(matrix)


def d_kernel_space(ambient: list[Monomial], n: int) -> FormSpace:
    return FormSpace(tuple(ambient), kernel(_derivative_matrix(ambient, n)))


def theorem5_check(lam: Partition, n: int) -> dict:
    """Verify the Specht-module facts for one shape at degree n <= 5.

    (a) the standard Specht polynomials are independent, of rank equal to
        the standard-tableau count;
    (b) they are all killed by the total derivative and their span has the
        dimension of its kernel inside the shape's span, so the span is
        exactly the shift-invariant part;
    (c) the restricted action has the irreducible character of the shape.
    """
    if n > THEOREM5_MAX_N:
        raise LimitError(f"n={n} exceeds the supported {THEOREM5_MAX_N}")
    if sum(lam) != n:
        raise SizeMismatchError(f"|{lam}| != {n}")
    ambient = x_monomials(lam, n)
    tableaux = enumerate_standard(lam)
    polys = [specht_poly(t, n) for t in tableaux]
    space = span_of_forms(polys, ambient)
    expected_dim = standard_count(lam)

    annihilated = all(not p.derivative_sum() for p in polys)
    kernel_dim = d_kernel_dim(ambient, n)
    character = restricted_character(space, n)
    chi = irreducible_characters(n)[lam]
    return {
        "lam": lam,
        "rank": space.dim,
        "independent": space.dim == len(polys) == expected_dim,
        "d_annihilated": annihilated,
        "d_kernel_dim": kernel_dim,
        "kernel_matches": annihilated and space.dim == kernel_dim,
        "character_matches": character == chi,
    }


def elementary_symmetric(n: int, variables: list[int], p: int) -> Form:
    """Sum of all squarefree degree-p products of the given variables
    (1-based indices)."""
    if p == 0:
        return Form.constant(n, 1)
    out: dict[Monomial, Fraction] = {}
    for combo in combinations(sorted(variables), p):
        e = [0] * n
        for i in combo:
            e[i - 1] = 1
        out[tuple(e)] = Fraction(1)
    return Form(n, out)


def _pairings(indices: tuple[int, ...]) -> list[list[tuple[int, int]]]:
    """All perfect matchings of an even index set into ordered pairs."""
    if not indices:
        return [[]]
    first, rest = indices[0], indices[1:]
    out = []
    for i, partner in enumerate(rest):
        for sub in _pairings(rest[:i] + rest[i + 1:]):
            out.append([(first, partner)] + sub)
    return out


def squarefree_monomials(n: int, k: int) -> list[Monomial]:
    """All degree-k squarefree monomials in n variables, frozen order."""
    monos = []
    for combo in combinations(range(n), k):
        e = [0] * n
        for i in combo:
            e[i] = 1
        monos.append(tuple(e))
    return sorted(monos, key=monomial_sort_key)


def difference_product_generators(n: int, l: int, k: int) -> list[Form]:
    """Spanning set of the l-th component of the squarefree degree-k space:
    products of l differences of paired variables times the elementary
    symmetric polynomial of degree k-l in the unused variables.

    Sign flips and pair reorderings do not change the span, so only one
    representative per unordered pairing is produced.
    """
    out = []
    for support in combinations(range(1, n + 1), 2 * l):
        complement = [i for i in range(1, n + 1) if i not in support]
        tail = elementary_symmetric(n, complement, k - l)
        for pairing in _pairings(support):
            f = tail
            for a, b in pairing:
                f = f * (Form.variable(n, a) - Form.variable(n, b))
            out.append(f)
    return out


def two_row_partition(n: int, l: int) -> Partition:
    return (n - l, l) if l else (n,)


def two_row_decomposition(n: int, k: int) -> dict:
    """Decompose the squarefree degree-k space into its l-components.

    Checks: component dimensions equal the two-row standard-tableau
    counts, the components meet pairwise in zero and fill the whole space,
    each carries the matching irreducible character (multiplicity one),
    and for even n with k = n/2 the top component is exactly the
    shift-invariant part.
    """
    if n > TWO_ROW_MAX_N:
        raise LimitError(f"n={n} exceeds the supported {TWO_ROW_MAX_N}")
    if not 0 <= k <= n // 2:
        raise SizeMismatchError(f"need 0 <= k <= n/2, got k={k}, n={n}")
    ambient = squarefree_monomials(n, k)
    chis = irreducible_characters(n)
    components: list[FormSpace] = []
    dims_ok = True
    characters_ok = True
    for l in range(k + 1):
        space = span_of_forms(difference_product_generators(n, l, k), ambient)
        components.append(space)
        if space.dim != standard_count(two_row_partition(n, l)):
            dims_ok = False
        if restricted_character(space, n) != chis[two_row_partition(n, l)]:
            characters_ok = False

    total = sum(space.dim for space in components)
    stacked_rows = [
        row for space in components for row in space.subspace.basis.entries
    ]
    direct_sum = (
        total == comb(n, k)
        and Subspace(len(ambient), stacked_rows).dim == comb(n, k)
    )
    pairwise_zero = all(
        intersect(components[a].subspace, components[b].subspace).dim == 0
        for a in range(len(components))
        for b in range(a + 1, len(components))
    )
    report = {
        "n": n,
        "k": k,
        "dims": [space.dim for space in components],
        "dims_match": dims_ok,
        "direct_sum": direct_sum,
        "pairwise_zero": pairwise_zero,
        "characters_match": characters_ok,
        "top_is_shift_invariant": None,
    }
    if n % 2 == 0 and k == n // 2:
        report["top_is_shift_invariant"] = (
            components[k].subspace == d_kernel_space(ambient, n).subspace
        )
    return report


def _degree_swap(m: Monomial) -> Monomial:
    """Exchange the exponent-2 and exponent-1 positions of a monomial of
    the x_i^2 x_j shape."""
    i = m.index(2)
    j = m.index(1)
    e = [0] * len(m)
    e[i], e[j] = 1, 2
    return tuple(e)


def _span_invariant(space: FormSpace, forms: list[Form], n: int) -> bool:
    index = {m: i for i, m in enumerate(space.ambient)}
    for sigma in all_permutations(n):
        for f in forms:
            vec = form_to_vector(f.act(sigma), index, len(space.ambient))
            if space.subspace.coordinates(vec) is None:
                return False
    return True


def example4_check() -> dict:
    """Reproduce the full decomposition of the 12-dimensional space of
    x_i^2 x_j forms in four variables.

    Five explicitly given bases span invariant subspaces of dimensions
    1, 2, 3, 3, 3, summing directly to the whole space, with restricted
    characters given by the shapes (4), (2,2), (2,1,1), (3,1), (3,1); the
    degree-swap involution splits the space into 6-dimensional even and
    odd halves, and the third two-row-style product is a signed sum of the
    other two.
    """
    n = 4
    lam = (2, 1, 1)
    ambient = x_monomials(lam, n)
    x = [Form.variable(n, i) for i in range(1, 5)]
    total = x[0] + x[1] + x[2] + x[3]

    d_form = Form(n, {
        m: Fraction(1) for m in ambient
    })
    c1 = (x[0] - x[1]) * (x[2] - x[3]) * total
    c2 = (x[0] - x[2]) * (x[1] - x[3]) * total
    c3 = (x[0] - x[3]) * (x[1] - x[2]) * total
    sp1 = (x[0] - x[1]) * (x[0] - x[2]) * (x[1] - x[2])
    sp2 = (x[1] - x[2]) * (x[1] - x[3]) * (x[2] - x[3])
    sp3 = (x[0] - x[2]) * (x[0] - x[3]) * (x[2] - x[3])

    def a_form(kk: int) -> Form:
        out = Form.zero(n)
        for i in range(1, 5):
            for j in range(1, 5):
                if i == j:
                    continue
                eps = 1 if (i == kk or j == kk) else -1
                out = out + eps * (x[i - 1] * x[i - 1] * x[j - 1])
        return out

    def b_form(kk: int) -> Form:
        others = [i for i in range(1, 5) if i != kk]
        lin = sum((x[i - 1] for i in others), Form.zero(n))
        quad = sum((x[i - 1] * x[i - 1] for i in others), Form.zero(n))
        return x[kk - 1] * x[kk - 1] * lin - x[kk - 1] * quad

    groups = {
        "trivial": [d_form],
        "pair": [c1, c2],
        "specht": [sp1, sp2, sp3],
        "even_natural": [a_form(1), a_form(2), a_form(3)],
        "odd_natural": [b_form(1), b_form(2), b_form(3)],
    }
    expected_shapes = {
        "trivial": (4,),
        "pair": (2, 2),
        "specht": (2, 1, 1),
        "even_natural": (3, 1),
        "odd_natural": (3, 1),
    }
    chis = irreducible_characters(n)
    spaces = {name: span_of_forms(fs, ambient) for name, fs in groups.items()}

    dims = {name: space.dim for name, space in spaces.items()}
    invariant = {
        name: _span_invariant(spaces[name], groups[name], n) for name in groups
    }
    characters = {
        name: restricted_character(spaces[name], n) == chis[expected_shapes[name]]
        for name in groups
    }
    stacked = [
        row for space in spaces.values() for row in space.subspace.basis.entries
    ]
    direct_sum = (
        sum(dims.values()) == 12
        and Subspace(len(ambient), stacked).dim == 12
    )

    def swapped(f: Form) -> Form:
        return Form(n, {_degree_swap(m): c for m, c in f.terms.items()})

    even = {"trivial", "pair", "even_natural"}
    parity_ok = True
    for name, fs in groups.items():
        want_even = name in even
        for f in fs:
            image = swapped(f)
            if want_even and image != f:
                parity_ok = False
            if not want_even and image != -f:
                parity_ok = False

    index = {m: i for i, m in enumerate(ambient)}
    size = len(ambient)
    entries = [[0] * size for _ in range(size)]
    for m in ambient:
        entries[index[_degree_swap(m)]][index[m]] = 1
    swap = RationalMatrix(entries, cols=size)
    eye = RationalMatrix.identity(size)
    minus = RationalMatrix(
        [[swap.entries[i][j] - eye.entries[i][j] for j in range(size)] for i in range(size)]
    )
    plus = RationalMatrix(
        [[swap.entries[i][j] + eye.entries[i][j] for j in range(size)] for i in range(size)]
    )
    even_dim = kernel(minus).dim
    odd_dim = kernel(plus).dim

    return {
        "dims": dims,
        "invariant": invariant,
        "characters_match": characters,
        "direct_sum": direct_sum,
        "even_odd_dims": (even_dim, odd_dim),
        "parity_assignments": parity_ok,
        "c_relation": not (c1 - c2 + c3),
    }
