"""A quick tour of the exact scalar ring and tensor kernel.

Every amplitude in this project is an element (a + b*i + (c + d*i)*sqrt2)/2^k,
so all downstream comparisons (orthogonality, unbiasedness, proportionality)
are decided exactly rather than to floating-point tolerance.
"""

from compcs.kernel import (ExactScalar, Tensor, HALF, INV_SQRT2, I_UNIT, ONE,
                           compose, dagger, proportional)

x = INV_SQRT2 + INV_SQRT2 * I_UNIT
print("1/sqrt2 + i/sqrt2      =", x)
print("its squared modulus    =", x.abs2())          # exactly 1
print("divided by sqrt2 twice =", x.div_sqrt2().div_sqrt2())

# the float shadow is only for display; equality is decided on canonical form
print("float shadow           =", x.to_complex())
assert x.abs2() == ONE

from compcs.constituents import HADAMARD

print("\nH . H == I:", compose(HADAMARD, HADAMARD) == Tensor.identity(1))
print("H is self-adjoint:", dagger(HADAMARD) == HADAMARD)
print("H proportional to X gate?",
      proportional(HADAMARD, Tensor(1, 1, [[ExactScalar(0), ONE],
                                           [ONE, ExactScalar(0)]])))
print("H scaled by 1/2 against H:",
      proportional(HADAMARD.scale(HALF), HADAMARD))
