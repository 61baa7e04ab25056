from itertools import product

import pytest

from compcs.constituents import (CONSTITUENTS, CZ, HADAMARD, S_DAG,
                                 constituent_basis, constituent_spider,
                                 cz_cascade, embed, local_frame, pi_spider,
                                 y_spider_via_cz)
from compcs.kernel import (ExactScalar, Tensor, ZERO, ONE, compose, dagger,
                           proportional, tensor_product)


def _overlap(v, w):
    acc = ZERO
    for i in range(v.entries.shape[0]):
        acc = acc + v.entries[i, 0].conj() * w.entries[i, 0]
    return acc


def test_bases_orthonormal():
    for c in CONSTITUENTS:
        b0, b1 = constituent_basis(c)
        assert _overlap(b0, b0) == ONE
        assert _overlap(b1, b1) == ONE
        assert _overlap(b0, b1).is_zero()


def test_bases_pairwise_unbiased():
    half = ExactScalar(1, 0, 0, 0, 1)
    for c1 in CONSTITUENTS:
        for c2 in CONSTITUENTS:
            if c1 == c2:
                continue
            for v in constituent_basis(c1):
                for w in constituent_basis(c2):
                    assert _overlap(v, w).abs2() == half


def test_local_frames_map_to_x_basis():
    x0, x1 = constituent_basis("X")
    for c in CONSTITUENTS:
        t = local_frame(c)
        for ket, target in zip(constituent_basis(c), (x0, x1)):
            s = proportional(compose(t, ket), target)
            assert s is not None and s.abs2() == ONE


def test_spider_fusion_samples():
    # composing spiders of one constituent along a leg fuses the legs
    for c in CONSTITUENTS:
        for (m1, n1, n2) in [(1, 1, 2), (2, 1, 1), (1, 2, 1), (0, 1, 3)]:
            lhs = compose(tensor_product(Tensor.identity(n1 - 1),
                                         constituent_spider(c, 1, n2)),
                          constituent_spider(c, m1, n1))
            rhs = constituent_spider(c, m1, n1 - 1 + n2)
            assert proportional(lhs, rhs) is not None


def test_identity_spider():
    for c in CONSTITUENTS:
        assert constituent_spider(c, 1, 1) == Tensor.identity(1)


def test_cup_identity():
    # the (0,2) spider is the conjugated-pair cup; the Y basis is not
    # self-conjugate, so there the cup picks up the pi-Z antipode twist
    for c in CONSTITUENTS:
        b = constituent_basis(c)
        acc = Tensor.zero(0, 2).entries.copy()
        for ket in b:
            conj = Tensor(0, 1, [[ket.entries[r, 0].conj()]
                                 for r in range(2)])
            acc = acc + tensor_product(ket, conj).entries
        cup = Tensor.from_array(0, 2, acc)
        if c == "Y":
            cup = compose(tensor_product(Tensor.identity(1), pi_spider("Z")),
                          cup)
        assert proportional(constituent_spider(c, 0, 2), cup) is not None


def test_pi_spider_squares_to_identity():
    for c in CONSTITUENTS:
        p = pi_spider(c)
        assert compose(p, p) == Tensor.identity(1)


def test_embed_matches_kron():
    import numpy as np
    g = CZ
    emb = embed(g, (1, 2), 3)
    ref = np.kron(g.to_numpy(), np.eye(2))
    assert np.max(np.abs(emb.to_numpy() - ref)) < 1e-12
    emb = embed(g, (2, 3), 3)
    ref = np.kron(np.eye(2), g.to_numpy())
    assert np.max(np.abs(emb.to_numpy() - ref)) < 1e-12


def test_embed_reordered_positions():
    import numpy as np
    # CNOT with control on qubit 2, target on qubit 1
    cnot = compose(tensor_product(Tensor.identity(1), HADAMARD),
                   compose(CZ, tensor_product(Tensor.identity(1), HADAMARD)))
    emb = embed(cnot, (2, 1), 2)
    ref = np.array([[1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0]])
    assert np.max(np.abs(emb.to_numpy() - ref)) < 1e-12


def test_cz_cascade_commutes():
    assert cz_cascade(0) == Tensor.identity(0)
    assert cz_cascade(2) == CZ
    assert compose(cz_cascade(3), cz_cascade(3)) == Tensor.identity(3)


@pytest.mark.parametrize("m,n", [(m, n) for m in range(5) for n in range(5)
                                 if 1 <= m + n <= 4])
def test_y_spider_via_cz_matches_basis_sum(m, n):
    assert proportional(y_spider_via_cz(m, n),
                        constituent_spider("Y", m, n)) is not None
