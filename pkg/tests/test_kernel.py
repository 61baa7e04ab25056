import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from compcs.kernel import (ExactScalar, Tensor, ZERO, ONE, I_UNIT, INV_SQRT2,
                           HALF, _inverse_times, compose, dagger, phase_scalar,
                           proportional, tensor_product)

ints = st.integers(min_value=-12, max_value=12)
ks = st.integers(min_value=0, max_value=5)
scalars = st.builds(ExactScalar, ints, ints, ints, ints, ks)


@given(scalars, scalars)
def test_addition_commutes(x, y):
    assert x + y == y + x


@given(scalars, scalars, scalars)
def test_multiplication_distributes(x, y, z):
    assert x * (y + z) == x * y + x * z


@given(scalars, scalars, scalars)
def test_multiplication_associates(x, y, z):
    assert (x * y) * z == x * (y * z)


@given(scalars)
def test_canonical_form_is_stable(x):
    assert ExactScalar(x.a, x.b, x.c, x.d, x.k) == x
    assert not (x.k > 0 and x.a % 2 == 0 and x.b % 2 == 0
                and x.c % 2 == 0 and x.d % 2 == 0)


@given(scalars)
def test_conjugation_is_involutive(x):
    assert x.conj().conj() == x


@given(scalars)
def test_abs2_is_real_nonnegative(x):
    a2 = x.abs2()
    assert a2.is_real()
    assert a2.to_complex().real >= -1e-12


@given(scalars)
def test_div_sqrt2_roundtrip(x):
    assert x.div_sqrt2().div_sqrt2() + x.div_sqrt2().div_sqrt2() == x
    assert abs(x.div_sqrt2().to_complex() - x.to_complex() / 2 ** 0.5) < 1e-9


@given(scalars, scalars)
def test_float_shadow_tracks_ring_ops(x, y):
    assert abs((x + y).to_complex() - (x.to_complex() + y.to_complex())) < 1e-9
    assert abs((x * y).to_complex() - x.to_complex() * y.to_complex()) < 1e-9


@given(scalars, scalars)
def test_exact_division(x, y):
    q = _inverse_times(x, y)
    if y.is_zero():
        assert q is None
    elif q is not None:
        assert q * y == x


def test_constants():
    assert INV_SQRT2 * INV_SQRT2 == HALF
    assert I_UNIT * I_UNIT == -ONE
    assert phase_scalar("pi/2") == I_UNIT
    assert HALF + HALF == ONE


def _random_scalar(rng):
    return ExactScalar(rng.randint(-8, 8), rng.randint(-8, 8),
                       rng.randint(-8, 8), rng.randint(-8, 8),
                       rng.randint(0, 4))


def _random_tensor(rng, m, n):
    rows = [[_random_scalar(rng) for _ in range(1 << m)]
            for _ in range(1 << n)]
    return Tensor(m, n, rows)


def test_float_shadow_on_random_tensors():
    # 10^3 random tensors: the float shadow of every composite operation
    # agrees with numpy complex arithmetic to 1e-9
    rng = random.Random(20260823)
    for _ in range(250):
        a = _random_tensor(rng, 1, 1)
        b = _random_tensor(rng, 1, 1)
        c = _random_tensor(rng, 1, 1)
        d = _random_tensor(rng, 0, 1)
        assert np.max(np.abs(compose(a, b).to_numpy()
                             - a.to_numpy() @ b.to_numpy())) < 1e-9
        assert np.max(np.abs(tensor_product(a, c).to_numpy()
                             - np.kron(a.to_numpy(), c.to_numpy()))) < 1e-9
        assert np.max(np.abs(dagger(b).to_numpy()
                             - b.to_numpy().conj().T)) < 1e-9
        s = _random_scalar(rng)
        assert np.max(np.abs(d.scale(s).to_numpy()
                             - s.to_complex() * d.to_numpy())) < 1e-9


def test_proportional_examples():
    from compcs.constituents import HADAMARD
    x_gate = Tensor(1, 1, [[ZERO, ONE], [ONE, ZERO]])
    assert proportional(HADAMARD, x_gate) is None
    assert proportional(x_gate.scale(HALF), x_gate) == HALF
    z = Tensor.zero(1, 1)
    assert proportional(z, z) == ONE
    assert proportional(z, x_gate) is None


def test_tensor_immutability_and_hash():
    t = Tensor.identity(1)
    with pytest.raises(AttributeError):
        t.in_qubits = 2
    assert hash(t) == hash(Tensor.identity(1))
    assert t == Tensor.identity(1)
