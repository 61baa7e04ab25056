import pytest

from compcs.kernel import Tensor, compose, proportional
from compcs.zxrules import (PHASES, RULES, green_spider, mutation_oracle,
                            red_spider, verify_all, verify_rule,
                            wire_permutation)


def test_spider_shapes():
    g = green_spider(2, 1)
    assert (g.in_qubits, g.out_qubits) == (2, 1)
    r = red_spider(0, 0, "pi")
    assert r.entries[0, 0].is_zero()  # 1 + e^{i pi} = 0


def test_green_red_related_by_hadamard():
    from compcs.constituents import HADAMARD
    lhs = compose(HADAMARD, compose(green_spider(1, 1, "pi/2"), HADAMARD))
    assert proportional(lhs, red_spider(1, 1, "pi/2")) is not None


def test_wire_permutation():
    swap = wire_permutation((1, 0))
    assert compose(swap, swap) == Tensor.identity(2)
    cyc = wire_permutation((1, 2, 0))
    assert compose(cyc, compose(cyc, cyc)) == Tensor.identity(3)


@pytest.mark.parametrize("rule_id", sorted(RULES))
def test_rule_holds(rule_id):
    rec = verify_rule(rule_id)
    assert rec["holds"], rec


def test_reconstructed_rules_are_flagged():
    flagged = {r["id"] for r in verify_all() if r["reconstructed"]}
    assert flagged == {"zx14", "zx15", "zx16"}


def test_mutation_oracle():
    results = mutation_oracle()
    detected = [r for r in results if r["detected"]]
    assert len(detected) >= 10
    assert all(r["detected"] for r in results), results
