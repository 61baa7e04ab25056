"""Complementarity graph, maximal clique search, and the ent transformations.

The graph has one vertex per composite structure (canonical enumeration
order) and an edge for each complementary pair.  Adjacency can be computed
by the exact basis semantics or by the symbolic name calculus; the two must
agree, which is asserted in `build_graph(..., mode="both")`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .composites import (CompositeCS, entanglement_class,
                         enumerate_composites, is_complementary)
from .names import (Name, SYM_1, SYM_I, SYM_J, SYM_K, SYM_Z,
                    build_pass_table, name_of, name_str, pair_name)


@dataclass
class ComplementarityGraph:
    vertices: List[CompositeCS]
    adj: List[int]  # bitmask rows
    mode: str

    @property
    def n(self) -> int:
        return len(self.vertices)

    def neighbors(self, i: int) -> int:
        return self.adj[i]

    def has_edge(self, i: int, j: int) -> bool:
        return bool((self.adj[i] >> j) & 1)


def _semantic_adjacency(structs: Sequence[CompositeCS]) -> List[int]:
    n = len(structs)
    adj = [0] * n
    for i, j in combinations(range(n), 2):
        if is_complementary(structs[i], structs[j]):
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return adj


def _names_adjacency(structs: Sequence[CompositeCS], N: int) -> List[int]:
    table = build_pass_table(N)
    names = [name_of(cs) for cs in structs]
    n = len(structs)
    adj = [0] * n
    for i, j in combinations(range(n), 2):
        nm = tuple(tuple(a ^ b for a, b in zip(r1, r2))
                   for r1, r2 in zip(names[i], names[j]))
        if nm in table:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return adj


def build_graph(N: int, mode: str = "semantic") -> ComplementarityGraph:
    structs = enumerate_composites(N)
    if mode == "semantic":
        adj = _semantic_adjacency(structs)
    elif mode == "names":
        adj = _names_adjacency(structs, N)
    elif mode == "both":
        adj = _semantic_adjacency(structs)
        adj2 = _names_adjacency(structs, N)
        if adj != adj2:
            bad = [(i, j) for i in range(len(adj))
                   for j in range(i + 1, len(adj))
                   if ((adj[i] >> j) & 1) != ((adj2[i] >> j) & 1)]
            raise AssertionError(
                f"semantic and name pipelines disagree on {len(bad)} pairs, "
                f"first: {bad[:3]}")
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return ComplementarityGraph(structs, adj, mode)


def _degeneracy_order(adj: List[int]) -> List[int]:
    n = len(adj)
    deg = [bin(a).count("1") for a in adj]
    removed = [False] * n
    order = []
    for _ in range(n):
        v = min((i for i in range(n) if not removed[i]), key=lambda i: deg[i])
        order.append(v)
        removed[v] = True
        m = adj[v]
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            if not removed[u]:
                deg[u] -= 1
    return order


def maximal_cliques(g: ComplementarityGraph) -> List[Tuple[int, ...]]:
    """All maximal cliques (Bron–Kerbosch, pivoting, degeneracy outer order),
    canonically sorted."""
    adj = g.adj
    out: List[Tuple[int, ...]] = []

    def expand(R: List[int], P: int, X: int):
        if P == 0 and X == 0:
            out.append(tuple(sorted(R)))
            return
        # pivot: vertex of P|X with most neighbours in P
        pivot, best = -1, -1
        m = P | X
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            c = bin(adj[u] & P).count("1")
            if c > best:
                best, pivot = c, u
        cand = P & ~adj[pivot]
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            bit = 1 << v
            R.append(v)
            expand(R, P & adj[v], X & adj[v])
            R.pop()
            P &= ~bit
            X |= bit

    order = _degeneracy_order(adj)
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = 0
        m = adj[v]
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            if pos[u] > pos[v]:
                later |= 1 << u
        earlier = adj[v] & ~later
        expand([v], later, earlier)
    return sorted(out)


def classify_set(g: ComplementarityGraph,
                 clique: Sequence[int]) -> Tuple[int, int, int]:
    """(n_SC, n_BS, n_NS) over the clique's members."""
    counts = {"SC": 0, "BS": 0, "NS": 0}
    for v in clique:
        counts[entanglement_class(g.vertices[v])] += 1
    return (counts["SC"], counts["BS"], counts["NS"])


def clique_records(g: ComplementarityGraph,
                   cliques: Sequence[Sequence[int]]) -> List[dict]:
    recs = []
    for c in cliques:
        recs.append({"members": [name_str(name_of(g.vertices[v])) for v in c],
                     "config": list(classify_set(g, c))})
    return recs


# ---- the ent transformations --------------------------------------------

def _wire_symbol_masks(cz: bool, cw: bool) -> int:
    # symbol carried by a wire entry with (row-qubit-is-Z, col-qubit-is-Z)
    if not cz and not cw:
        return SYM_1
    if cz and cw:
        return SYM_I
    return SYM_J if cz else SYM_K


def apply_ent(name: Name, m: int) -> Name:
    """Toggle entanglement between qubits m and (m+2) mod 3 (0-indexed).

    Mirrors composing a CZ on the legs of that qubit pair: with no Z
    constituent on the pair the wire simply toggles; with one Z the wire to
    the third qubit moves between the Z qubit and its partner; with two Zs
    the pair's wire state trades against an X relabelling of the pair.
    """
    if len(name) != 4:
        raise ValueError("ent transformations are defined on 3-qubit names")
    if m not in (0, 1, 2):
        raise ValueError("m must be in {0,1,2}")
    p, q = m, (m + 2) % 3
    t = (m + 1) % 3
    first = list(name[0])
    grid = [list(row) for row in name[1:]]

    def is_z(col: int) -> bool:
        return bool(first[col] & SYM_Z)

    def toggle(a: int, b: int):
        grid[a][b] ^= _wire_symbol_masks(is_z(a), is_z(b))
        grid[b][a] ^= _wire_symbol_masks(is_z(b), is_z(a))

    def has_wire(a: int, b: int) -> bool:
        return bool(grid[a][b])

    zs = [c for c in (p, q) if is_z(c)]
    if not zs:
        toggle(p, q)
    elif len(zs) == 1:
        z = zs[0]
        w = q if z == p else p
        if has_wire(z, t):
            toggle(t, w)
    else:
        if has_wire(p, q):
            # the pair decoheres to X constituents, its wire disappears, and
            # each wire to the third qubit swaps over to the other pair member
            wired_t = [c for c in (p, q) if has_wire(c, t)]
            for c in (p, q):
                grid[c][t] = 0
                grid[t][c] = 0
            grid[p][q] = grid[q][p] = 0
            first[p] = first[q] = 0
            for c in wired_t:
                toggle(q if c == p else p, t)
    return (tuple(first),) + tuple(tuple(r) for r in grid)


def structure_by_name(N: int) -> Dict[Name, CompositeCS]:
    return {name_of(cs): cs for cs in enumerate_composites(N)}
