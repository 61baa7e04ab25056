"""Walk a complete set through the entanglement-toggling transforms.

apply_ent(name, m) mirrors composing a CZ on one qubit pair's legs: wires
toggle on non-Z pairs, migrate around a single Z, and decohere a doubly-Z
wired pair to X constituents.  Complete sets map to complete sets, changing
the entanglement configuration along the way.
"""

import json
import pathlib

from compcs.names import name_str, parse_name
from compcs.search import apply_ent, structure_by_name
from compcs.composites import entanglement_class, is_complementary

fixtures = pathlib.Path(__file__).resolve().parent.parent / "fixtures"
eg = json.loads((fixtures / "eg090_transforms.json").read_text())
by_name = structure_by_name(3)


def show(label, names):
    members = [by_name[parse_name(t)] for t in names]
    kinds = [entanglement_class(cs) for cs in members]
    cfg = (kinds.count("SC"), kinds.count("BS"), kinds.count("NS"))
    pairwise = all(is_complementary(a, b) for i, a in enumerate(members)
                   for b in members[i + 1:])
    print(f"{label}: configuration {cfg}, "
          f"mutually complementary: {pairwise}")
    for t in names:
        print("   ", t)
    print()


show("starting set (all biseparable)", eg["set"])

im1 = [name_str(apply_ent(parse_name(t), 1)) for t in eg["set"]]
assert im1 == eg["ent1"]
show("after toggling qubit pair {1,2}", im1)

im2 = [name_str(apply_ent(parse_name(t), 2)) for t in im1]
assert im2 == eg["ent2_ent1"]
show("after also toggling qubit pair {2,3}", im2)
