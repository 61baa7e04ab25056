"""Composite classical structures on N qubits.

A composite structure is a choice of constituent (X, Y or Z) per qubit plus a
set of connecting wires on qubit pairs.  Its underlying basis is obtained by
applying the leg network — one two-qubit gadget per wire — to the products of
constituent basis kets.  The gadget for a wired pair (c1, c2) is CZ conjugated
by the per-constituent local frames, which reproduces the CNOT anchor for
(X, Z) and makes all gadgets commute.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator, List, Optional, Sequence, Tuple

from .kernel import (ExactScalar, Tensor, ZERO, ONE, compose, dagger,
                     proportional, tensor_product)
from .constituents import (CONSTITUENTS, CZ, constituent_basis,
                           constituent_spider, embed, local_frame, pi_spider)

Wire = Tuple[int, int]


@dataclass(frozen=True, order=True)
class CompositeCS:
    constituents: Tuple[str, ...]
    wires: Tuple[Wire, ...]  # sorted (p, q) pairs, 1-indexed, p < q

    def __post_init__(self):
        n = len(self.constituents)
        object.__setattr__(self, "wires", tuple(sorted(
            (min(p, q), max(p, q)) for p, q in self.wires)))
        for p, q in self.wires:
            if not (1 <= p < q <= n):
                raise ValueError(f"bad wire ({p},{q}) for {n} qubits")
        if len(set(self.wires)) != len(self.wires):
            raise ValueError("duplicate wires")

    @property
    def n(self) -> int:
        return len(self.constituents)

    def to_json(self) -> str:
        return json.dumps({"n": self.n,
                           "constituents": list(self.constituents),
                           "wires": [list(w) for w in self.wires]})

    @staticmethod
    def from_json(text: str) -> "CompositeCS":
        rec = json.loads(text)
        cs = CompositeCS(tuple(rec["constituents"]),
                         tuple((p, q) for p, q in rec["wires"]))
        if cs.n != rec.get("n", cs.n):
            raise ValueError("inconsistent qubit count in record")
        return cs


@lru_cache(maxsize=None)
def wire_gadget(c1: str, c2: str) -> Tensor:
    """(T1+ (x) T2+) . CZ . (T1 (x) T2) with T the local frames."""
    t = tensor_product(local_frame(c1), local_frame(c2))
    return compose(dagger(t), compose(CZ, t))


def leg_network(cs: CompositeCS) -> Tensor:
    out = Tensor.identity(cs.n)
    for p, q in cs.wires:
        g = embed(wire_gadget(cs.constituents[p - 1], cs.constituents[q - 1]),
                  (p, q), cs.n)
        out = compose(g, out)
    return out


@lru_cache(maxsize=None)
def underlying_basis(cs: CompositeCS) -> Tuple[Tensor, ...]:
    """Basis kets indexed by bitstrings (qubit 1 = most significant bit)."""
    net = leg_network(cs)
    kets = []
    for s in range(1 << cs.n):
        prod = Tensor.ket([ONE])
        for j, c in enumerate(cs.constituents):
            bit = (s >> (cs.n - 1 - j)) & 1
            prod = tensor_product(prod, constituent_basis(c)[bit])
        kets.append(compose(net, prod))
    return tuple(kets)


def composite_spider(cs: CompositeCS, m: int, n: int) -> Tensor:
    """sum_s |v_s>^(x)n <v_s|^(x)m over the underlying basis."""
    if m + n < 1:
        raise ValueError("spider needs at least one leg")
    N = cs.n
    acc = Tensor.zero(m * N, n * N).entries.copy()
    for ket in underlying_basis(cs):
        out = Tensor.ket([ONE])
        for _ in range(n):
            out = tensor_product(out, ket)
        bra = Tensor.ket([ONE])
        for _ in range(m):
            bra = tensor_product(bra, ket)
        term = compose(out, dagger(bra))
        acc = acc + term.entries
    return Tensor.from_array(m * N, n * N, acc)


def entanglement_class(cs: CompositeCS) -> str:
    """SC (no wires), NS (wire graph connects all qubits), else BS."""
    if not cs.wires:
        return "SC"
    # union-find over qubits
    parent = list(range(cs.n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p, q in cs.wires:
        parent[find(p)] = find(q)
    roots = {find(j) for j in range(1, cs.n + 1)}
    return "NS" if len(roots) == 1 else "BS"


def _overlap(v: Tensor, w: Tensor) -> ExactScalar:
    acc = ZERO
    for i in range(v.entries.shape[0]):
        acc = acc + v.entries[i, 0].conj() * w.entries[i, 0]
    return acc


def is_complementary(a: CompositeCS, b: CompositeCS) -> bool:
    """Exact mutual unbiasedness: every overlap has |.|^2 = 1/2^N."""
    if a.n != b.n:
        raise ValueError("qubit count mismatch")
    target = ExactScalar(1, 0, 0, 0, a.n)
    for v in underlying_basis(a):
        for w in underlying_basis(b):
            if _overlap(v, w).abs2() != target:
                return False
    return True


def _antipode_layer(a: CompositeCS, b: CompositeCS) -> Tensor:
    """Per-qubit antipode of the complementarity diagram.

    On qubits where exactly one of the two constituents is Y, the antipode
    fuses to the phase-pi spider of the non-Y constituent; elsewhere it is
    the identity.
    """
    out = Tensor.ket([ONE])
    for ca, cb in zip(a.constituents, b.constituents):
        if (ca == "Y") != (cb == "Y"):
            out = tensor_product(out, pi_spider(cb if ca == "Y" else ca))
        else:
            out = tensor_product(out, Tensor.identity(1))
    return out


def cd_matrix(a: CompositeCS, b: CompositeCS) -> Tensor:
    """The complementarity diagram between a and b as an (N in, N out) map.

    Copy with b, twist one branch by the fused antipode, merge with a.
    Complementarity holds iff the result is proportional to a rank-1 map.
    """
    if a.n != b.n:
        raise ValueError("qubit count mismatch")
    anti = _antipode_layer(a, b)
    rows = [[ZERO] * (1 << a.n) for _ in range(1 << a.n)]
    for i, v in enumerate(underlying_basis(a)):
        tv = compose(dagger(anti), v)  # <v| A on the twisted branch
        for j, w in enumerate(underlying_basis(b)):
            rows[i][j] = _overlap(tv, w) * _overlap(v, w)
    # entry (i, j) = <v_i|A|w_j><v_i|w_j>, expressed in the two bases
    return Tensor(a.n, a.n, rows)


def is_rank_one_proportional(t: Tensor) -> bool:
    """True iff t = s * |x><y| for some nonzero s, x, y (cross-ratio test)."""
    ent = t.entries
    nz = [(r, c) for r in range(ent.shape[0]) for c in range(ent.shape[1])
          if not ent[r, c].is_zero()]
    if not nz:
        return False
    r0, c0 = nz[0]
    for r in range(ent.shape[0]):
        for c in range(ent.shape[1]):
            if not (ent[r, c] * ent[r0, c0] == ent[r, c0] * ent[r0, c]):
                return False
    return True


def compose_cz_on_legs(cs: CompositeCS, pair: Wire) -> Tuple[Tensor, ...]:
    """Basis of the structure with an extra CZ gadget on the (p, q) legs."""
    p, q = pair
    if not (1 <= p < q <= cs.n):
        raise ValueError(f"bad pair {pair}")
    gate = embed(CZ, (p, q), cs.n)
    return tuple(compose(gate, ket) for ket in underlying_basis(cs))


def metric_diagram(a: CompositeCS, b: CompositeCS) -> Tensor:
    """(1,2)-spider of a composed with the (2,1)-spider of b."""
    if a.n != b.n:
        raise ValueError("qubit count mismatch")
    return compose(composite_spider(b, 2, 1), composite_spider(a, 1, 2))


def all_wire_sets(n: int) -> List[Tuple[Wire, ...]]:
    pairs = list(combinations(range(1, n + 1), 2))
    out = []
    for mask in range(1 << len(pairs)):
        out.append(tuple(pairs[i] for i in range(len(pairs)) if (mask >> i) & 1))
    return out


def enumerate_composites(N: int) -> List[CompositeCS]:
    """All 3^N * 2^(N(N-1)/2) structures in canonical order."""
    if N not in (2, 3):
        raise ValueError("enumeration supports N in {2, 3}")
    out = []
    for cons in product(CONSTITUENTS, repeat=N):
        for wires in all_wire_sets(N):
            out.append(CompositeCS(cons, wires))
    return out


def basis_matches(b1: Sequence[Tensor], b2: Sequence[Tensor]) -> bool:
    """True iff the two bases agree as sets of rays (up to order and phase)."""
    used = set()
    for v in b1:
        hit = None
        for j, w in enumerate(b2):
            if j in used:
                continue
            s = proportional(v, w)
            if s is not None and s.abs2() == ExactScalar(1):
                hit = j
                break
        if hit is None:
            return False
        used.add(hit)
    return True
