"""Semantic verification of the two-colour spider rewrite rules.

Green spiders live in the Z basis, red spiders are defined independently in
the X basis, and every rule is checked as an exact proportionality of the
two sides' tensors (the calculus is used up to scalars throughout).  This is
a verification catalogue, not a rewriting engine.

Each catalogue entry supplies the two sides of the rule and, where the rule
has a spider to corrupt, a mutated left side with one extra pi phase; the
mutation oracle checks that the corrupted side no longer matches.
"""

from __future__ import annotations

from typing import Callable, Dict, List, Optional, Tuple

from .constituents import CZ, HADAMARD, constituent_spider, embed
from .kernel import (ExactScalar, Tensor, ZERO, ONE, HALF, compose, dagger,
                     phase_scalar, proportional, tensor_product)

PHASES = ("0", "pi/2", "pi", "-pi/2")


def green_spider(m: int, n: int, phase: str = "0") -> Tensor:
    """|0..0><0..0| + e^{i a} |1..1><1..1| with m inputs, n outputs."""
    rows = [[ZERO] * (1 << m) for _ in range(1 << n)]
    rows[0][0] = rows[0][0] + ONE
    r1 = (1 << n) - 1
    c1 = (1 << m) - 1
    rows[r1][c1] = rows[r1][c1] + phase_scalar(phase)
    return Tensor(m, n, rows)


def red_spider(m: int, n: int, phase: str = "0") -> Tensor:
    """The same shape built on the X basis: |+..+><+..+| + e^{i a}|-..-><-..-|."""
    from .constituents import constituent_basis

    plus, minus = constituent_basis("X")

    def power(ket: Tensor, k: int) -> Tensor:
        out = Tensor.ket([ONE])
        for _ in range(k):
            out = tensor_product(out, ket)
        return out

    t0 = compose(power(plus, n), dagger(power(plus, m)))
    t1 = compose(power(minus, n), dagger(power(minus, m)))
    return Tensor.from_array(m, n, t0.entries + phase_scalar(phase) * t1.entries)


SPIDERS = {"green": green_spider, "red": red_spider}


def wire_permutation(perm) -> Tensor:
    """Tensor routing input wire perm[i] to output wire i (0-indexed)."""
    n = len(perm)
    rows = [[ZERO] * (1 << n) for _ in range(1 << n)]
    for x in range(1 << n):
        y = 0
        for i in range(n):
            bit = (x >> (n - 1 - perm[i])) & 1
            y |= bit << (n - 1 - i)
        rows[y][x] = ONE
    return Tensor(n, n, rows)


def _add_phase(a: str, b: str) -> str:
    order = ["0", "pi/2", "pi", "-pi/2"]
    return order[(order.index(a) + order.index(b)) % 4]


# ---- rule builders -------------------------------------------------------
# each returns a list of (lhs, rhs) tensor pairs covering the tested arities


def _fusion(colour: str):
    sp = SPIDERS[colour]
    cases = []
    for a in PHASES:
        for b in PHASES:
            for (m1, n1, m2, n2) in [(1, 2, 1, 1), (2, 1, 1, 2), (0, 2, 1, 1),
                                     (1, 1, 1, 0), (2, 2, 1, 1)]:
                if n1 < 1:
                    continue
                # connect spider2's single input to spider1's last output
                lhs = compose(tensor_product(Tensor.identity(n1 - 1),
                                             sp(1, n2, b)), sp(m1, n1, a))
                rhs = sp(m1, n1 - 1 + n2, _add_phase(a, b))
                cases.append((lhs, rhs))
    return cases


def _loop(colour: str):
    sp = SPIDERS[colour]
    cap = sp(2, 0, "0")
    cases = []
    for a in PHASES:
        for (m, n) in [(1, 1), (2, 1), (0, 2)]:
            lhs = compose(tensor_product(Tensor.identity(n), cap),
                          sp(m, n + 2, a))
            cases.append((lhs, sp(m, n, a)))
    return cases


def _cups_agree():
    return [(green_spider(0, 2), red_spider(0, 2)),
            (green_spider(2, 0), red_spider(2, 0))]


def _pi_copy(colour: str):
    sp = SPIDERS[colour]
    other = SPIDERS["red" if colour == "green" else "green"]
    pi_dot = other(1, 1, "pi")
    cases = []
    for a in PHASES:
        lhs = compose(sp(1, 2, a), pi_dot)
        # the pi dot copies through and flips the phase
        neg = _add_phase(a, "pi") if a in ("pi/2", "-pi/2") else a
        rhs = compose(tensor_product(pi_dot, pi_dot), sp(1, 2, neg))
        cases.append((lhs, rhs))
    return cases


def _copy(colour: str):
    sp = SPIDERS[colour]
    other = SPIDERS["red" if colour == "green" else "green"]
    unit = other(0, 1, "0")
    lhs = compose(sp(1, 2), unit)
    rhs = tensor_product(unit, unit)
    return [(lhs, rhs)]


def _bialgebra():
    swap_mid = embed(wire_permutation((1, 0)), (2, 3), 4)
    lhs = compose(tensor_product(red_spider(2, 1), red_spider(2, 1)),
                  compose(swap_mid,
                          tensor_product(green_spider(1, 2), green_spider(1, 2))))
    rhs = compose(green_spider(1, 2), red_spider(2, 1))
    return [(lhs, rhs)]


def _colour_change():
    cases = []
    for a in PHASES:
        for (m, n) in [(1, 1), (1, 2), (2, 1), (0, 2), (2, 0), (1, 0), (0, 1)]:
            hn = Tensor.identity(0)
            for _ in range(n):
                hn = tensor_product(hn, HADAMARD)
            hm = Tensor.identity(0)
            for _ in range(m):
                hm = tensor_product(hm, HADAMARD)
            lhs = compose(hn, compose(green_spider(m, n, a), hm))
            cases.append((lhs, red_spider(m, n, a)))
    return cases


def _euler():
    g = green_spider(1, 1, "pi/2")
    r = red_spider(1, 1, "pi/2")
    return [(compose(g, compose(r, g)), HADAMARD)]


def _zero_scalar():
    # reconstructed: a pi green dot closed on the plain green unit vanishes
    lhs = compose(green_spider(1, 0, "pi"), green_spider(0, 1, "0"))
    return [(lhs, Tensor.scalar(ZERO))]


def _star_scalar():
    # reconstructed: green cap against red cup evaluates to 2
    lhs = compose(green_spider(2, 0), red_spider(0, 2))
    return [(lhs, Tensor.scalar(ExactScalar(2)))]


def _zero_absorbs():
    # reconstructed: the zero scalar annihilates any diagram
    z = compose(green_spider(1, 0, "pi"), green_spider(0, 1, "0"))
    lhs = tensor_product(z, HADAMARD)
    return [(lhs, Tensor.from_array(1, 1, Tensor.zero(1, 1).entries))]


def _hopf():
    lhs = compose(red_spider(2, 1), green_spider(1, 2))
    rhs = compose(red_spider(0, 1), green_spider(1, 0))
    return [(lhs, rhs)]


def _yanking():
    lhs = compose(tensor_product(green_spider(2, 0), Tensor.identity(1)),
                  tensor_product(Tensor.identity(1), green_spider(0, 2)))
    return [(lhs, Tensor.identity(1))]


def _identity_spiders():
    return [(green_spider(1, 1), Tensor.identity(1)),
            (red_spider(1, 1), Tensor.identity(1))]


def _star_inverse():
    lhs = Tensor.scalar(HALF * ExactScalar(2))
    return [(lhs, Tensor.scalar(ONE))]


def _h_squared():
    return [(compose(HADAMARD, HADAMARD), Tensor.identity(1))]


def _h_loop(colour: str):
    sp = SPIDERS[colour]
    cap = sp(2, 0, "0")
    cases = []
    for a in PHASES:
        for (m, n) in [(1, 1), (2, 1)]:
            lhs = compose(
                tensor_product(Tensor.identity(n),
                               compose(cap, tensor_product(Tensor.identity(1),
                                                           HADAMARD))),
                sp(m, n + 2, a))
            cases.append((lhs, sp(m, n, _add_phase(a, "pi"))))
    return cases


def _hopf_had():
    lhs = compose(green_spider(2, 1),
                  compose(tensor_product(HADAMARD, HADAMARD),
                          green_spider(1, 2)))
    rhs = compose(green_spider(0, 1), green_spider(1, 0))
    return [(lhs, rhs)]


def _gen_bialgebra(g: int, r: int):
    """Complete bipartite green/red composite against the single-wire form."""
    splits = Tensor.identity(0)
    for _ in range(r):
        splits = tensor_product(splits, green_spider(1, g))
    merges = Tensor.identity(0)
    for _ in range(g):
        merges = tensor_product(merges, red_spider(r, 1))
    # wire (i, j) of the splits goes to red spider j, input slot i
    perm = [i * g + j for j in range(g) for i in range(r)]
    lhs = compose(merges, compose(wire_permutation(perm), splits))
    rhs = compose(green_spider(1, g), red_spider(r, 1))
    return [(lhs, rhs)]


def _y_equivalence():
    from .constituents import y_spider_via_cz
    cases = []
    for m in range(0, 5):
        for n in range(0, 5 - m):
            if m + n < 1:
                continue
            cases.append((y_spider_via_cz(m, n), constituent_spider("Y", m, n)))
    return cases


def _cw_swap():
    from .composites import wire_gadget
    swap = wire_permutation((1, 0))
    cases = []
    for c1 in ("X", "Y", "Z"):
        for c2 in ("X", "Y", "Z"):
            lhs = compose(swap, compose(wire_gadget(c1, c2), swap))
            cases.append((lhs, wire_gadget(c2, c1)))
    return cases


def _cw_basis_pairs(before, after):
    """Proportionality of CZ-composed basis kets against a target basis."""
    from .composites import CompositeCS, compose_cz_on_legs, underlying_basis
    out = []
    src = CompositeCS(*before)
    dst = CompositeCS(*after)
    img = compose_cz_on_legs(src, (1, 2))
    for ket, target in zip(img, underlying_basis(dst)):
        out.append((ket, target))
    return out


def _cw_xy_delete():
    return _cw_basis_pairs((("X", "Y"), ((1, 2),)), (("X", "Y"), ()))


def _cw_xy_generate():
    return _cw_basis_pairs((("X", "Y"), ()), (("X", "Y"), ((1, 2),)))


def _cw_delete():
    return _cw_basis_pairs((("X", "X"), ((1, 2),)), (("X", "X"), ()))


def _cw_z_same():
    # CZ fixes the basis as a set of rays but may permute its members, so
    # each image ket is paired with whichever target ray it actually matches
    from .composites import CompositeCS, compose_cz_on_legs, underlying_basis
    cases = []
    for c in ("X", "Y"):
        for wires in ((), ((1, 2),)):
            cs = CompositeCS(("Z", c), wires)
            targets = underlying_basis(cs)
            for ket in compose_cz_on_legs(cs, (1, 2)):
                hit = next((t for t in targets
                            if proportional(ket, t) is not None),
                           Tensor.zero(0, 2))
                cases.append((ket, hit))
    return cases


# ---- catalogue -----------------------------------------------------------

Rule = Tuple[str, Callable[[], List[Tuple[Tensor, Tensor]]], bool]

RULES: Dict[str, Rule] = {
    "zx1": ("green spider fusion", lambda: _fusion("green"), False),
    "zx2": ("red spider fusion", lambda: _fusion("red"), False),
    "zx3": ("green self-loop contraction", lambda: _loop("green"), False),
    "zx4": ("red self-loop contraction", lambda: _loop("red"), False),
    "zx5": ("green and red cups agree", _cups_agree, False),
    "zx6": ("green and red caps agree",
            lambda: [(green_spider(2, 0), red_spider(2, 0))], False),
    "zx7": ("red pi dot copies through green", lambda: _pi_copy("green"), False),
    "zx8": ("green pi dot copies through red", lambda: _pi_copy("red"), False),
    "zx9": ("red unit copies through green", lambda: _copy("green"), False),
    "zx10": ("green unit copies through red", lambda: _copy("red"), False),
    "zx11": ("green/red bialgebra", _bialgebra, False),
    "zx12": ("Hadamard colour change", _colour_change, False),
    "zx13": ("Euler decomposition of the Hadamard", _euler, False),
    "zx14": ("zero scalar (reconstructed)", _zero_scalar, True),
    "zx15": ("star scalar evaluates to 2 (reconstructed)", _star_scalar, True),
    "zx16": ("zero scalar absorbs (reconstructed)", _zero_absorbs, True),
    "dzx1": ("Hopf law", _hopf, False),
    "dzx2": ("yanking", _yanking, False),
    "dzx3": ("phaseless (1,1) spiders are identities", _identity_spiders, False),
    "dzx4": ("star scalar inverse: 1/2 * 2 = 1", _star_inverse, False),
    "dzx5": ("Hadamard is an involution", _h_squared, False),
    "dzx6": ("green Hadamard self-loop adds a pi phase",
             lambda: _h_loop("green"), False),
    "dzx7": ("red Hadamard self-loop adds a pi phase",
             lambda: _h_loop("red"), False),
    "hopf-had": ("Hopf law across a pair of Hadamard edges", _hopf_had, False),
    "gen-bialg-2-2": ("generalized bialgebra, 2 green x 2 red",
                      lambda: _gen_bialgebra(2, 2), False),
    "gen-bialg-2-3": ("generalized bialgebra, 2 green x 3 red",
                      lambda: _gen_bialgebra(2, 3), False),
    "y-equiv": ("CZ-cascade Y spider matches the basis sum (m+n <= 4)",
                _y_equivalence, False),
    "cw-swap": ("wire gadget commutes with the qubit swap", _cw_swap, False),
    "cw-delete": ("CZ on wired X legs deletes the entanglement",
                  _cw_delete, False),
    "cw-xy-delete": ("CZ on wired X/Y legs deletes the entanglement",
                     _cw_xy_delete, False),
    "cw-xy-generate": ("CZ on bare X/Y legs generates the entanglement",
                       _cw_xy_generate, False),
    "cw-z-same": ("CZ on a Z-carrying pair fixes the basis rays",
                  _cw_z_same, False),
}

# rules whose left side contains a green or red spider we can corrupt with an
# extra pi phase; the oracle demands the corrupted side stop matching
_MUTATABLE = {
    "zx1": lambda: (compose(tensor_product(Tensor.identity(1),
                                           green_spider(1, 1, "pi")),
                            green_spider(1, 2, "0")),
                    green_spider(1, 2, "0")),
    "zx2": lambda: (compose(tensor_product(Tensor.identity(1),
                                           red_spider(1, 1, "pi")),
                            red_spider(1, 2, "0")),
                    red_spider(1, 2, "0")),
    "zx3": lambda: (compose(tensor_product(Tensor.identity(1),
                                           green_spider(2, 0)),
                            green_spider(1, 3, "pi")),
                    green_spider(1, 1, "0")),
    "zx5": lambda: (green_spider(0, 2, "pi"), red_spider(0, 2)),
    "zx7": lambda: (compose(green_spider(1, 2, "pi/2"), red_spider(1, 1, "pi")),
                    compose(tensor_product(red_spider(1, 1, "pi"),
                                           red_spider(1, 1, "pi")),
                            green_spider(1, 2, "pi/2"))),
    "zx9": lambda: (compose(green_spider(1, 2), red_spider(0, 1, "pi")),
                    tensor_product(red_spider(0, 1), red_spider(0, 1))),
    "zx11": lambda: (compose(green_spider(1, 2, "pi"), red_spider(2, 1)),
                     _bialgebra()[0][0]),
    "zx12": lambda: (compose(tensor_product(HADAMARD, Tensor.identity(0)),
                             compose(green_spider(1, 1, "pi"), HADAMARD)),
                     red_spider(1, 1, "0")),
    "zx13": lambda: (compose(green_spider(1, 1, "pi/2"),
                             compose(red_spider(1, 1, "pi"),
                                     green_spider(1, 1, "pi/2"))),
                     HADAMARD),
    "dzx1": lambda: (compose(red_spider(2, 1, "pi"), green_spider(1, 2)),
                     _hopf()[0][1]),
    "dzx3": lambda: (green_spider(1, 1, "pi"), Tensor.identity(1)),
    "dzx6": lambda: (_h_loop("green")[0][0], green_spider(1, 1, "0")),
    "hopf-had": lambda: (compose(green_spider(2, 1, "pi"),
                                 compose(tensor_product(HADAMARD, HADAMARD),
                                         green_spider(1, 2))),
                         _hopf_had()[0][1]),
}


def verify_rule(rule_id: str) -> dict:
    desc, builder, flagged = RULES[rule_id]
    holds = True
    n_cases = 0
    for lhs, rhs in builder():
        n_cases += 1
        if proportional(lhs, rhs) is None:
            holds = False
            break
    return {"id": rule_id, "description": desc, "holds": holds,
            "cases": n_cases, "reconstructed": flagged}


def verify_all() -> List[dict]:
    return [verify_rule(rid) for rid in RULES]


def mutation_oracle() -> List[dict]:
    """Corrupt one spider per mutatable rule and require the rule to break."""
    out = []
    for rid, mut in _MUTATABLE.items():
        lhs, rhs = mut()
        out.append({"id": rid,
                    "detected": proportional(lhs, rhs) is None})
    return out
