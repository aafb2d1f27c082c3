"""The homogeneous system on multiplicity deviations and the uniform-
distribution transport problem on consecutive levels of the Young graph.

The system attached to a shape lam has one equation per partition rho of
n-1 dominating bar(lam) and one unknown per partition mu of n dominating
lam, with a unit entry exactly when mu covers rho.  When mu -> bar(mu)
identifies unknowns with equations, the matrix is unitriangular along the
dominance order and the deviations must vanish.

The transport problem asks for a nonnegative kernel supported on covering
pairs that pushes the uniform distribution on level n-1 to the uniform
distribution on level n; it is decided exactly by integer max-flow on the
network scaled by p(n-1) * p(n).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exactla import RationalMatrix, kernel
from .partitions import (
    Partition,
    bar,
    dominance_upset,
    enumerate_partitions,
    predecessors,
    successors,
)
from .tableaux import kostka

__all__ = [
    "FlowInstance",
    "Statement1Report",
    "System3",
    "build_flow_instance",
    "build_system3",
    "eq3_residual_check",
    "polymorphism_feasibility",
    "statement1_check",
    "verify_witness",
]


@dataclass(frozen=True)
class System3:
    """0/1 system for one shape: rows rho over bar(lam), columns mu over lam."""

    lam: Partition
    row_index: tuple[Partition, ...]
    col_index: tuple[Partition, ...]
    matrix: RationalMatrix


def build_system3(lam: Partition) -> System3:
    if sum(lam) < 2:
        raise ValueError("need a partition of n >= 2")
    rows = tuple(dominance_upset(bar(lam)))
    cols = tuple(dominance_upset(lam))
    covers = {mu: {g for g, _ in predecessors(mu)} for mu in cols}
    entries = [
        [1 if rho in covers[mu] else 0 for mu in cols]
        for rho in rows
    ]
    return System3(lam, rows, cols, RationalMatrix(entries, cols=len(cols)))


@dataclass(frozen=True)
class Statement1Report:
    lam: Partition
    bar_bijective: bool
    square: bool
    kernel_dim: int
    unipotent: bool


def statement1_check(lam: Partition) -> Statement1Report:
    """Inspect the system of lam: is mu -> bar(mu) a bijection onto the row
    set, and is the matrix square, unitriangular under that identification,
    and of zero kernel?

    The contract (verified across the sweep tests) is one-directional:
    bijective implies the other three.  Shapes whose index sets differ in
    size are reported as-is; their kernel dimension is experimental output.
    """
    system = build_system3(lam)
    rows, cols = system.row_index, system.col_index
    images = [bar(mu) for mu in cols]
    bijective = len(set(images)) == len(images) and set(images) == set(rows)
    square = len(rows) == len(cols)
    kdim = kernel(system.matrix).dim

    unipotent = False
    if bijective:
        row_pos = {rho: i for i, rho in enumerate(rows)}
        # reorder columns so the column of mu sits at the row of bar(mu)
        perm = [0] * len(cols)
        for j, image in enumerate(images):
            perm[row_pos[image]] = j
        unipotent = True
        for i in range(len(rows)):
            for k in range(len(cols)):
                entry = system.matrix.entries[i][perm[k]]
                if k == i and entry != 1:
                    unipotent = False
                if k < i and entry != 0:
                    unipotent = False
    return Statement1Report(lam, bijective, square, kdim, unipotent)


def eq3_residual_check(n: int) -> bool:
    """With Y = multiplicities minus Kostka numbers, every row sum of the
    system vanishes; trivially true while the two agree, kept as a wiring
    test between the character and tableau routes."""
    from .characters import multiplicity_table

    table = multiplicity_table(n)
    for lam in enumerate_partitions(n):
        for rho in enumerate_partitions(n - 1):
            residual = sum(
                table(mu, lam) - kostka(mu, lam) for mu in successors(rho)
            )
            if residual != 0:
                return False
    return True


@dataclass(frozen=True)
class FlowInstance:
    """Transport instance between consecutive levels of the Young graph."""

    n: int
    left: tuple[Partition, ...]
    right: tuple[Partition, ...]
    edges: tuple[tuple[Partition, Partition], ...]
    supply: Fraction  # per left node
    demand: Fraction  # per right node


def build_flow_instance(n: int) -> FlowInstance:
    if n < 2:
        raise ValueError("need n >= 2")
    left = enumerate_partitions(n - 1)
    right = enumerate_partitions(n)
    edges = tuple(
        (gamma, mu) for gamma in left for mu in successors(gamma)
    )
    return FlowInstance(
        n, left, right, edges,
        Fraction(1, len(left)), Fraction(1, len(right)),
    )


class _Dinic:
    """Max flow with exact integer capacities."""

    def __init__(self, n: int):
        self.adj: list[list[list[int]]] = [[] for _ in range(n)]

    def add_edge(self, u: int, v: int, cap: int) -> None:
        self.adj[u].append([v, cap, len(self.adj[v])])
        self.adj[v].append([u, 0, len(self.adj[u]) - 1])

    def _levels(self, s: int, t: int) -> Optional[list[int]]:
        level = [-1] * len(self.adj)
        level[s] = 0
        queue = [s]
        for u in queue:
            for v, cap, _ in self.adj[u]:
                if cap and level[v] < 0:
                    level[v] = level[u] + 1
                    queue.append(v)
        return level if level[t] >= 0 else None

    def _push(self, u: int, t: int, limit: int, level, it) -> int:
        if u == t:
            return limit
        while it[u] < len(self.adj[u]):
            edge = self.adj[u][it[u]]
            v, cap, rev = edge
            if cap and level[v] == level[u] + 1:
                pushed = self._push(v, t, min(limit, cap), level, it)
                if pushed:
                    edge[1] -= pushed
                    self.adj[v][rev][1] += pushed
                    return pushed
            it[u] += 1
        return 0

    def max_flow(self, s: int, t: int) -> int:
        flow = 0
        while True:
            level = self._levels(s, t)
            if level is None:
                return flow
            it = [0] * len(self.adj)
            while True:
                pushed = self._push(s, t, 1 << 62, level, it)
                if not pushed:
                    break
                flow += pushed

    def reachable_in_residual(self, s: int) -> set[int]:
        seen = {s}
        queue = [s]
        for u in queue:
            for v, cap, _ in self.adj[u]:
                if cap and v not in seen:
                    seen.add(v)
                    queue.append(v)
        return seen


def polymorphism_feasibility(n: int) -> dict:
    """Decide whether the uniform distribution on level n-1 can be pushed
    to the uniform distribution on level n along covering pairs.

    Returns a report with an exact witness kernel when feasible, or an
    exact max-flow certificate (flow value plus a saturated cut) when not.
    The witness is re-verified against every constraint before returning.
    """
    instance = build_flow_instance(n)
    p1, p2 = len(instance.left), len(instance.right)
    scale = p1 * p2
    source = 0
    sink = 1 + p1 + p2
    left_id = {g: 1 + i for i, g in enumerate(instance.left)}
    right_id = {m: 1 + p1 + j for j, m in enumerate(instance.right)}

    net = _Dinic(sink + 1)
    for g in instance.left:
        net.add_edge(source, left_id[g], p2)
    edge_slots: dict[tuple[Partition, Partition], tuple[int, int]] = {}
    for g, m in instance.edges:
        u = left_id[g]
        edge_slots[(g, m)] = (u, len(net.adj[u]))
        net.add_edge(u, right_id[m], scale)
    for m in instance.right:
        net.add_edge(right_id[m], sink, p1)

    flow = net.max_flow(source, sink)
    report = {
        "n": n,
        "feasible": flow == scale,
        "max_flow": flow,
        "required": scale,
        "witness": None,
        "cut": None,
    }
    if flow == scale:
        witness = {}
        for (g, m), (u, idx) in edge_slots.items():
            used = scale - net.adj[u][idx][1]
            if used:
                witness[(g, m)] = Fraction(used, scale)
        assert verify_witness(instance, witness)
        report["witness"] = witness
    else:
        # source side of a minimum cut certifies the upper bound exactly
        side = net.reachable_in_residual(source)
        cut_value = 0
        cut_edges: list[tuple] = []
        for g in instance.left:
            if left_id[g] not in side:
                cut_value += p2
                cut_edges.append(("source", g))
        for (g, m) in instance.edges:
            if left_id[g] in side and right_id[m] not in side:
                cut_value += scale
                cut_edges.append((g, m))
        for m in instance.right:
            if right_id[m] in side:
                cut_value += p1
                cut_edges.append((m, "sink"))
        report["cut"] = {"value": cut_value, "edges": cut_edges}
        assert cut_value == flow
    return report


def verify_witness(instance: FlowInstance, witness: dict) -> bool:
    """Exact check of support, nonnegativity, and all row/column sums."""
    allowed = set(instance.edges)
    if any(key not in allowed or value < 0 for key, value in witness.items()):
        return False
    for g in instance.left:
        row = sum((v for (a, _), v in witness.items() if a == g), Fraction(0))
        if row != instance.supply:
            return False
    for m in instance.right:
        col = sum((v for (_, b), v in witness.items() if b == m), Fraction(0))
        if col != instance.demand:
            return False
    return True
