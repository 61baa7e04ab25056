"""Symbolic name calculus for composite structures.

A structure on N qubits gets a name: an (N+1) x N grid of formal sums over
the symbols {1, Z, i, j, k}.  The first row records the constituents
(X -> 0, Y -> 1, Z -> Z); row p+1, column q records the wire {p, q}, with a
symbol determined by which ends of the wire carry a Z constituent.

Names combine by the star product (entrywise XOR of symbol sets), which is
the symbolic shadow of the complementarity diagram between two structures:
the pair is complementary exactly when its star name belongs to the accepted
table built by `build_pass_table`.  The table is constructed by quotienting
all pairs by the symmetry group (qubit permutations and per-qubit X<->Z
flips applied to both members) and deciding one witness pair per orbit with
the exact basis semantics.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Dict, FrozenSet, Iterable, List, Sequence, Set, Tuple

from .composites import CompositeCS, enumerate_composites, is_complementary

# symbol bitmasks; addition of names is XOR (symbols are self-inverse)
SYM_1, SYM_Z, SYM_I, SYM_J, SYM_K = 1, 2, 4, 8, 16
_SYMBOL_ORDER = (("1", SYM_1), ("Z", SYM_Z), ("i", SYM_I),
                 ("j", SYM_J), ("k", SYM_K))
_PARSE = {s: m for s, m in _SYMBOL_ORDER}

Name = Tuple[Tuple[int, ...], ...]  # (N+1) rows of N bitmask entries


def entry_str(mask: int) -> str:
    parts = [s for s, m in _SYMBOL_ORDER if mask & m]
    return "+".join(parts) if parts else "0"


def parse_entry(text: str) -> int:
    if text == "0":
        return 0
    mask = 0
    for part in text.split("+"):
        mask |= _PARSE[part]
    return mask


def name_str(name: Name) -> str:
    return ";".join(",".join(entry_str(e) for e in row) for row in name)


def parse_name(text: str) -> Name:
    return tuple(tuple(parse_entry(e) for e in row.split(","))
                 for row in text.split(";"))


def _wire_symbol(row_is_z: bool, col_is_z: bool) -> int:
    if not row_is_z and not col_is_z:
        return SYM_1
    if row_is_z and col_is_z:
        return SYM_I
    return SYM_J if row_is_z else SYM_K


def name_of(cs: CompositeCS) -> Name:
    n = cs.n
    first = tuple({"X": 0, "Y": SYM_1, "Z": SYM_Z}[c] for c in cs.constituents)
    grid = [[0] * n for _ in range(n)]
    for p, q in cs.wires:
        zp = cs.constituents[p - 1] == "Z"
        zq = cs.constituents[q - 1] == "Z"
        grid[p - 1][q - 1] = _wire_symbol(row_is_z=zp, col_is_z=zq)
        grid[q - 1][p - 1] = _wire_symbol(row_is_z=zq, col_is_z=zp)
    return (first,) + tuple(tuple(row) for row in grid)


def star(n1: Name, n2: Name) -> Name:
    if len(n1) != len(n2):
        raise ValueError("name shape mismatch")
    return tuple(tuple(a ^ b for a, b in zip(r1, r2))
                 for r1, r2 in zip(n1, n2))


def pair_name(a: CompositeCS, b: CompositeCS) -> Name:
    return star(name_of(a), name_of(b))


# ---- symmetry group on structures ---------------------------------------


def permute_structure(cs: CompositeCS, perm: Sequence[int]) -> CompositeCS:
    """Relabel qubits: new qubit j carries old qubit perm[j] (0-indexed)."""
    inv = [0] * cs.n
    for new, old in enumerate(perm):
        inv[old] = new
    cons = tuple(cs.constituents[perm[j]] for j in range(cs.n))
    wires = tuple((inv[p - 1] + 1, inv[q - 1] + 1) for p, q in cs.wires)
    return CompositeCS(cons, wires)


class StructureFamily:
    """All structures on N qubits with their projective-basis classes and the
    induced symmetry actions (qubit permutations and single-qubit Hadamards).

    Distinct structures can share the same basis up to phases and reordering;
    actions are therefore defined on basis classes.  The Hadamard action is
    computed semantically: H on one qubit maps each basis onto the basis of
    some other structure in the family, found by fingerprint lookup plus an
    exact ray-by-ray match.
    """

    def __init__(self, N: int):
        from .constituents import HADAMARD, embed
        from .kernel import compose as _compose
        from .composites import basis_matches, underlying_basis

        self.N = N
        self.structures = enumerate_composites(N)
        self.index = {cs: i for i, cs in enumerate(self.structures)}
        bases = [underlying_basis(cs) for cs in self.structures]

        def fingerprint(kets):
            rows = sorted(
                tuple(sorted(round(abs(k.entries[r, 0].to_complex()) ** 2, 9)
                             for r in range(1 << N)))
                for k in kets)
            return tuple(rows)

        fps = [fingerprint(b) for b in bases]
        buckets: Dict[tuple, List[int]] = {}
        for i, fp in enumerate(fps):
            buckets.setdefault(fp, []).append(i)

        # basis classes: exact projective equality within fingerprint buckets
        self.class_of = [-1] * len(self.structures)
        self.class_members: List[List[int]] = []
        for bucket in buckets.values():
            for i in bucket:
                if self.class_of[i] >= 0:
                    continue
                cid = len(self.class_members)
                self.class_members.append([i])
                self.class_of[i] = cid
                for j in bucket:
                    if j > i and self.class_of[j] < 0 and \
                            basis_matches(bases[i], bases[j]):
                        self.class_of[j] = cid
                        self.class_members[cid].append(j)
        self.n_classes = len(self.class_members)

        # Hadamard action on classes, one lookup per (class, qubit)
        self.h_map = [[-1] * self.n_classes for _ in range(N)]
        for q in range(N):
            Hq = embed(HADAMARD, (q + 1,), N)
            for cid, members in enumerate(self.class_members):
                image = [_compose(Hq, k) for k in bases[members[0]]]
                fp = fingerprint(image)
                hit = None
                for j in buckets.get(fp, []):
                    if basis_matches(image, bases[j]):
                        hit = self.class_of[j]
                        break
                if hit is None:
                    raise RuntimeError(
                        f"Hadamard on qubit {q + 1} leaves the family")
                self.h_map[q][cid] = hit

    def permute_class(self, cid: int, perm: Sequence[int]) -> int:
        rep = self.structures[self.class_members[cid][0]]
        return self.class_of[self.index[permute_structure(rep, perm)]]

    def pair_orbits(self) -> List[Set[Tuple[int, int]]]:
        """Orbits of unordered basis-class pairs under perms and Hadamards."""
        perms = list(permutations(range(self.N)))

        def canon(a, b):
            return (a, b) if a <= b else (b, a)

        all_pairs = [canon(a, b)
                     for a, b in combinations(range(self.n_classes), 2)]
        seen: Set[Tuple[int, int]] = set()
        orbits = []
        for start in all_pairs:
            if start in seen:
                continue
            orb = {start}
            frontier = [start]
            while frontier:
                a, b = frontier.pop()
                images = [canon(self.permute_class(a, p),
                                self.permute_class(b, p)) for p in perms]
                images += [canon(self.h_map[q][a], self.h_map[q][b])
                           for q in range(self.N)]
                for im in images:
                    if im not in orb:
                        orb.add(im)
                        frontier.append(im)
            seen |= orb
            orbits.append(orb)
        return orbits

    def is_complementary_classes(self, a: int, b: int) -> bool:
        return is_complementary(self.structures[self.class_members[a][0]],
                                self.structures[self.class_members[b][0]])

    def pair_names_of_class_pair(self, a: int, b: int) -> Set[Name]:
        out = set()
        for i in self.class_members[a]:
            for j in self.class_members[b]:
                out.add(pair_name(self.structures[i], self.structures[j]))
        return out


_FAMILIES: Dict[int, StructureFamily] = {}


def family(N: int) -> StructureFamily:
    if N not in _FAMILIES:
        _FAMILIES[N] = StructureFamily(N)
    return _FAMILIES[N]


def build_pass_table(N: int) -> FrozenSet[Name]:
    """Accepted star names: one semantic witness per class-pair orbit, then
    every name realised by a pair in a passing orbit."""
    fam = family(N)
    names: Set[Name] = set()
    for orb in fam.pair_orbits():
        wa, wb = next(iter(orb))
        if fam.is_complementary_classes(wa, wb):
            for a, b in orb:
                names |= fam.pair_names_of_class_pair(a, b)
    return frozenset(names)


def name_test(a: CompositeCS, b: CompositeCS, table: FrozenSet[Name]) -> bool:
    """Symbolic complementarity check against a precomputed pass table."""
    return pair_name(a, b) in table


# ---- tabulated equivalence maps on names ---------------------------------

# per-slice Hadamard: wire symbols in the slice's column and row remap as
# tabulated; the first-row entry is left untouched by this map (the
# constituent relabel below is generated separately)
_HAD_COL = {0: 0, SYM_1: SYM_K, SYM_I: SYM_J, SYM_J: SYM_I, SYM_K: SYM_1}
_HAD_ROW = {0: 0, SYM_1: SYM_J, SYM_I: SYM_K, SYM_J: SYM_1, SYM_K: SYM_I}


def _map_mask(mask: int, table: Dict[int, int]) -> int:
    out = 0
    for s in (SYM_1, SYM_I, SYM_J, SYM_K):
        if mask & s:
            out ^= table[s]
    return out


def hadamard_slice(name: Name, q: int) -> Name:
    """The tabulated Hadamard map on slice q (0-indexed)."""
    n = len(name) - 1
    grid = [list(row) for row in name[1:]]
    for r in range(n):
        if r != q:
            grid[q][r] = _map_mask(grid[q][r], _HAD_ROW)
            grid[r][q] = _map_mask(grid[r][q], _HAD_COL)
    return (name[0],) + tuple(tuple(row) for row in grid)


def relabel_slice(name: Name, q: int) -> Name:
    """First-row relabel Z <-> 1+Z on slice q (the tabulated relabel case)."""
    first = list(name[0])
    if first[q] in (SYM_Z, SYM_1 | SYM_Z):
        first[q] ^= SYM_1
    return (tuple(first),) + name[1:]


def equiv_orbit(name: Name, include_relabel: bool = True) -> FrozenSet[Name]:
    """Closure of a name under the tabulated equivalence maps.

    Generators: qubit permutations, the per-slice Hadamard map, the adjoint
    (a no-op, since the star sum is commutative) and, optionally, the
    per-slice Z <-> 1+Z first-row relabel.

    Note: closing under these purely tabular maps is *not* sound against the
    exact semantics (see table_closure_report); the orbit is provided for the
    tabulated examples and diagnostics only, and the pass table used by the
    symbolic pipeline is built semantically in build_pass_table.
    """
    n = len(name) - 1
    perms = list(permutations(range(n)))
    seen: Set[Name] = {name}
    frontier = [name]
    while frontier:
        x = frontier.pop()
        images = [permute_name(x, p) for p in perms]
        images += [hadamard_slice(x, q) for q in range(n)]
        if include_relabel:
            images += [relabel_slice(x, q) for q in range(n)]
        for im in images:
            if im not in seen:
                seen.add(im)
                frontier.append(im)
    return frozenset(seen)


# ---- name-level generator counting --------------------------------------

def permute_name(name: Name, perm: Sequence[int]) -> Name:
    """Apply a qubit relabelling (0-indexed: new j carries old perm[j])."""
    n = len(name) - 1
    inv = [0] * n
    for new, old in enumerate(perm):
        inv[old] = new
    first = tuple(name[0][perm[j]] for j in range(n))
    grid = [[0] * n for _ in range(n)]
    for r in range(n):
        for c in range(n):
            grid[inv[r]][inv[c]] = name[1 + r][c]
    return (first,) + tuple(tuple(row) for row in grid)


def name_perm_class(name: Name) -> Name:
    n = len(name) - 1
    return min(permute_name(name, perm) for perm in permutations(range(n)))


_PRUNE_OK = frozenset({SYM_I, SYM_K, SYM_1 | SYM_I, SYM_1 | SYM_K,
                       SYM_I | SYM_J, SYM_J | SYM_K})


def passes_column_filter(name: Name, allow_zero: bool = True) -> bool:
    """Reject names with a 1+Z column whose wire entries leave the legal set.

    A column headed 1+Z comes from a Y/Z (or Z/Y) constituent mismatch; the
    wire entries below it must then mix an i with the Y side's symbols.
    """
    n = len(name) - 1
    for c in range(n):
        if name[0][c] != SYM_1 | SYM_Z:
            continue
        for r in range(n):
            e = name[1 + r][c]
            if e == 0 and allow_zero:
                continue
            if e not in _PRUNE_OK:
                return False
    return True


def generator_classes(N: int) -> Dict[Name, bool]:
    """Pair-name orbit representatives mapped to their semantic verdict.

    Representatives are taken under the full pair symmetry group; the verdict
    is decided on a single witness pair per orbit.
    """
    fam = family(N)
    out: Dict[Name, bool] = {}
    for orb in fam.pair_orbits():
        wa, wb = next(iter(orb))
        rep = min(n for a, b in orb for n in fam.pair_names_of_class_pair(a, b))
        out[rep] = fam.is_complementary_classes(wa, wb)
    return out


def enumerate_generators(N: int) -> List[Tuple[CompositeCS, CompositeCS]]:
    """One representative pair per entangled generator diagram.

    Convention: both members of the pair are individually non-separable
    (wire graph connects every qubit) and diagrams are identified when their
    names agree up to a qubit permutation.  This yields 14 representatives
    at N=2 and 468 at N=3; the column filter (passes_column_filter) is the
    published pruning step and cuts the N=3 count to 336.  Alternative
    quotients move these counts substantially (see the project notes); the
    clique-level results are independent of the choice.
    """
    from .composites import entanglement_class
    if N not in (2, 3):
        raise ValueError("generator enumeration supports N in {2, 3}")
    structs = [cs for cs in enumerate_composites(N)
               if entanglement_class(cs) == "NS"]
    reps: Dict[Name, Tuple[CompositeCS, CompositeCS]] = {}
    for a, b in combinations(structs, 2):
        key = name_perm_class(pair_name(a, b))
        reps.setdefault(key, (a, b))
    return [reps[k] for k in sorted(reps)]


def build_test_set(N: int) -> FrozenSet[Name]:
    """The accepted-name table T_N used by the symbolic pipeline.

    Built by semantic orbit expansion (build_pass_table): the purely tabular
    equiv_orbit closure is unsound on real pairs — table_closure_report
    quantifies the damage — so membership is grounded in one exact witness
    per class-pair orbit instead.
    """
    return build_pass_table(N)


def table_closure_report(N: int) -> Dict[str, int]:
    """Compare the tabular-orbit closure of the pass set with the ground truth.

    Expands every semantically passing pair name through equiv_orbit (with
    and without the Z <-> 1+Z relabel) and counts, over all unordered
    structure pairs, how often membership in the closed set disagrees with
    the exact complementarity verdict.
    """
    structs = enumerate_composites(N)
    passing: Set[Name] = set()
    pairs = []
    for a, b in combinations(structs, 2):
        nm = pair_name(a, b)
        verdict = is_complementary(a, b)
        pairs.append((nm, verdict))
        if verdict:
            passing.add(nm)
    out = {"pairs": len(pairs)}
    for label, relabel in (("with_relabel", True), ("without_relabel", False)):
        closed: Set[Name] = set()
        for nm in passing:
            closed |= equiv_orbit(nm, include_relabel=relabel)
        out[f"closure_size_{label}"] = len(closed)
        out[f"disagreements_{label}"] = sum(
            1 for nm, verdict in pairs if (nm in closed) != verdict)
    out["semantic_table_size"] = len(build_pass_table(N))
    out["disagreements_semantic"] = sum(
        1 for nm, verdict in pairs
        if (nm in build_pass_table(N)) != verdict)
    return out


def complementary_pair_names(N: int) -> FrozenSet[Name]:
    """Distinct star names over all semantically complementary pairs."""
    structs = enumerate_composites(N)
    out: Set[Name] = set()
    for a, b in combinations(structs, 2):
        if is_complementary(a, b):
            out.add(pair_name(a, b))
            out.add(pair_name(b, a))
    return frozenset(out)
