"""The three single-qubit classical structures X, Y, Z.

Each constituent is identified with its orthonormal eigenbasis:

    |j_X> = (|0> + (-1)^j |1>)/sqrt2
    |k_Y> = (|0> + (-1)^k i |1>)/sqrt2
    Z     = {|0>, |1>}

Spiders are defined as basis sums sum_s |v_s>^(x)n <v_s|^(x)m, which satisfies
the spider laws exactly; the CZ-cascade circuit construction of the Y spider
is provided independently and cross-checked against the basis sum.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Tuple

from .kernel import (ExactScalar, Tensor, ZERO, ONE, I_UNIT, INV_SQRT2,
                     compose, dagger, tensor_product)

CONSTITUENTS = ("X", "Y", "Z")

_MINUS_I = ExactScalar(0, -1)

# single-qubit gates
HADAMARD = Tensor(1, 1, [[INV_SQRT2, INV_SQRT2], [INV_SQRT2, -INV_SQRT2]])
S_DAG = Tensor(1, 1, [[ONE, ZERO], [ZERO, _MINUS_I]])  # diag(1, -i)
CZ = Tensor(2, 2, [[(-ONE if r == c == 3 else (ONE if r == c else ZERO))
                    for c in range(4)] for r in range(4)])


@lru_cache(maxsize=None)
def constituent_basis(c: str) -> Tuple[Tensor, Tensor]:
    if c == "Z":
        return (Tensor.ket([ONE, ZERO]), Tensor.ket([ZERO, ONE]))
    if c == "X":
        return (Tensor.ket([INV_SQRT2, INV_SQRT2]),
                Tensor.ket([INV_SQRT2, -INV_SQRT2]))
    if c == "Y":
        return (Tensor.ket([INV_SQRT2, INV_SQRT2 * I_UNIT]),
                Tensor.ket([INV_SQRT2, -(INV_SQRT2 * I_UNIT)]))
    raise ValueError(f"unknown constituent {c!r}")


def _ket_power(ket: Tensor, n: int) -> Tensor:
    out = Tensor.ket([ONE])  # empty register
    for _ in range(n):
        out = tensor_product(out, ket)
    return out


@lru_cache(maxsize=None)
def constituent_spider(c: str, m: int, n: int) -> Tensor:
    """sum_s |v_s>^(x)n <v_s|^(x)m  (m inputs, n outputs)."""
    if m + n < 1:
        raise ValueError("spider needs at least one leg")
    acc = Tensor.zero(m, n)
    ent = acc.entries.copy()
    for ket in constituent_basis(c):
        out = _ket_power(ket, n)
        bra = dagger(_ket_power(ket, m))
        term = compose(out, bra)
        ent = ent + term.entries
    return Tensor.from_array(m, n, ent)


@lru_cache(maxsize=None)
def pi_spider(c: str) -> Tensor:
    """The phase-pi 1,1-spider |0_c><0_c| - |1_c><1_c|."""
    b0, b1 = constituent_basis(c)
    p0 = compose(b0, dagger(b0)).entries
    p1 = compose(b1, dagger(b1)).entries
    return Tensor.from_array(1, 1, p0 - p1)


def local_frame(c: str) -> Tensor:
    """Unitary mapping the constituent basis to the X basis (up to phases)."""
    if c == "X":
        return Tensor.identity(1)
    if c == "Z":
        return HADAMARD
    if c == "Y":
        return S_DAG
    raise ValueError(f"unknown constituent {c!r}")


def embed(gate: Tensor, positions, n_qubits: int) -> Tensor:
    """Embed a k-qubit gate on the given 1-indexed qubit positions.

    Qubit 1 is the most significant bit of the register index.
    """
    k = gate.in_qubits
    if gate.out_qubits != k or len(positions) != k:
        raise ValueError("embed expects a square gate matching positions")
    shifts = [n_qubits - p for p in positions]  # bit shift of each position
    dim = 1 << n_qubits
    rows = [[ZERO] * dim for _ in range(dim)]
    for x in range(dim):
        cin = 0
        for j, sh in enumerate(shifts):
            cin = (cin << 1) | ((x >> sh) & 1)
        base = x
        for sh in shifts:
            base &= ~(1 << sh)
        for cout in range(1 << k):
            amp = gate.entries[cout, cin]
            if amp.is_zero():
                continue
            y = base
            for j, sh in enumerate(shifts):
                if (cout >> (k - 1 - j)) & 1:
                    y |= 1 << sh
            rows[y][x] = rows[y][x] + amp
    return Tensor(n_qubits, n_qubits, rows)


def cz_cascade(m: int) -> Tensor:
    """Product of controlled-Z over all pairs among m wires."""
    out = Tensor.identity(m)
    for p, q in combinations(range(1, m + 1), 2):
        out = compose(embed(CZ, (p, q), m), out)
    return out


def y_spider_via_cz(m: int, n: int) -> Tensor:
    """The Y spider built from the X spider and CZ cascades.

    The m,1 part counts |1>s via the cascade; the 1,n part is its mirror
    under the dagger.  Proportional to constituent_spider("Y", m, n).
    """
    if m + n < 1:
        raise ValueError("spider needs at least one leg")
    lower = compose(constituent_spider("X", m, 1), cz_cascade(m))
    upper = dagger(compose(constituent_spider("X", n, 1), cz_cascade(n)))
    return compose(upper, lower)
