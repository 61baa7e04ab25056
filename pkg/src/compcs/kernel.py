"""Exact scalar ring and dense tensor algebra over qubit registers.

Every number that appears downstream lives in the ring generated by i and
1/sqrt(2) over the dyadic rationals:

    value = (a + b*i + (c + d*i)*sqrt(2)) / 2**k

with integers a, b, c, d and a non-negative denominator exponent k.  The
ring is closed under addition, multiplication, conjugation and division by
sqrt(2), which covers all Clifford gates, the Pauli eigenbases, the +-pi/2
phases and the star scalar 1/2.  Equality is decided on canonical forms
(minimal k), so every comparison in the pipeline is exact.
"""

from __future__ import annotations

from typing import Optional, Sequence

import numpy as np

_SQRT2 = 2.0 ** 0.5


class ExactScalar:
    __slots__ = ("a", "b", "c", "d", "k")

    def __init__(self, a: int, b: int = 0, c: int = 0, d: int = 0, k: int = 0):
        if k < 0:
            raise ValueError("denominator exponent must be non-negative")
        # canonical form: k minimal; the reduction trades a factor of 2 in the
        # numerator against the denominator (sqrt2/2 = 1/sqrt2 keeps us closed)
        while k > 0 and a % 2 == 0 and b % 2 == 0 and c % 2 == 0 and d % 2 == 0:
            a //= 2
            b //= 2
            c //= 2
            d //= 2
            k -= 1
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "k", k)

    def __setattr__(self, *_):
        raise AttributeError("ExactScalar is immutable")

    # ---- ring operations -------------------------------------------------

    def __add__(self, other: "ExactScalar") -> "ExactScalar":
        if not isinstance(other, ExactScalar):
            return NotImplemented
        k = max(self.k, other.k)
        s1 = 1 << (k - self.k)
        s2 = 1 << (k - other.k)
        return ExactScalar(
            self.a * s1 + other.a * s2,
            self.b * s1 + other.b * s2,
            self.c * s1 + other.c * s2,
            self.d * s1 + other.d * s2,
            k,
        )

    def __neg__(self) -> "ExactScalar":
        return ExactScalar(-self.a, -self.b, -self.c, -self.d, self.k)

    def __sub__(self, other: "ExactScalar") -> "ExactScalar":
        return self + (-other)

    def __mul__(self, other) -> "ExactScalar":
        if isinstance(other, int):
            return ExactScalar(self.a * other, self.b * other,
                               self.c * other, self.d * other, self.k)
        if not isinstance(other, ExactScalar):
            return NotImplemented
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = other.a, other.b, other.c, other.d
        # (z1 + z2*sqrt2)(w1 + w2*sqrt2) = z1*w1 + 2*z2*w2 + (z1*w2 + z2*w1)*sqrt2
        return ExactScalar(
            a1 * a2 - b1 * b2 + 2 * (c1 * c2 - d1 * d2),
            a1 * b2 + b1 * a2 + 2 * (c1 * d2 + d1 * c2),
            a1 * c2 - b1 * d2 + c1 * a2 - d1 * b2,
            a1 * d2 + b1 * c2 + c1 * b2 + d1 * a2,
            self.k + other.k,
        )

    __rmul__ = __mul__

    def conj(self) -> "ExactScalar":
        return ExactScalar(self.a, -self.b, self.c, -self.d, self.k)

    def div_sqrt2(self) -> "ExactScalar":
        """Multiply by 1/sqrt(2) (stays in the ring: x/sqrt2 = x*sqrt2/2)."""
        return ExactScalar(2 * self.c, 2 * self.d, self.a, self.b, self.k + 1)

    def abs2(self) -> "ExactScalar":
        """Squared modulus; imaginary components are zero by construction."""
        return self * self.conj()

    # ---- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0 and self.c == 0 and self.d == 0

    def is_real(self) -> bool:
        return self.b == 0 and self.d == 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactScalar):
            return NotImplemented
        return (self.a, self.b, self.c, self.d, self.k) == \
               (other.a, other.b, other.c, other.d, other.k)

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d, self.k))

    # ---- conversions -----------------------------------------------------

    def to_complex(self) -> complex:
        return (self.a + 1j * self.b + (self.c + 1j * self.d) * _SQRT2) / (1 << self.k)

    def __repr__(self):
        parts = []
        if self.a or self.b:
            parts.append(f"{self.a}{self.b:+d}i" if self.b else str(self.a))
        if self.c or self.d:
            z2 = f"{self.c}{self.d:+d}i" if self.d else str(self.c)
            parts.append(f"({z2})*sqrt2")
        num = " + ".join(parts) if parts else "0"
        return num if self.k == 0 else f"({num})/2^{self.k}"


ZERO = ExactScalar(0)
ONE = ExactScalar(1)
I_UNIT = ExactScalar(0, 1)
INV_SQRT2 = ExactScalar(0, 0, 1, 0, 1)   # sqrt2/2 = 1/sqrt2
HALF = ExactScalar(1, 0, 0, 0, 1)


def phase_scalar(phase: str) -> ExactScalar:
    """e^{i*alpha} for the four Clifford phases."""
    return {"0": ONE, "pi": -ONE, "pi/2": I_UNIT, "-pi/2": -I_UNIT}[phase]


def _inverse_times(a: ExactScalar, b: ExactScalar) -> Optional[ExactScalar]:
    """a / b in the field Q(i, sqrt2), if the quotient lies in the ring."""
    # b = (z1 + z2*sqrt2)/2^kb; multiply by (z1 - z2*sqrt2) to clear sqrt2,
    # then by the Gaussian conjugate to clear i.
    tilde = ExactScalar(b.a, b.b, -b.c, -b.d, 0)
    # w = z1^2 - 2*z2^2 as a Gaussian integer
    wr = b.a * b.a - b.b * b.b - 2 * (b.c * b.c - b.d * b.d)
    wi = 2 * (b.a * b.b - 2 * b.c * b.d)
    wbar = ExactScalar(wr, -wi, 0, 0, 0)
    denom = wr * wr + wi * wi          # positive integer (b nonzero)
    if denom == 0:
        return None
    num = a * tilde * wbar             # numerator, with a's 2^k folded in
    # s = num * 2^{b.k} / denom; split denom into odd * 2^e
    e = 0
    while denom % 2 == 0:
        denom //= 2
        e += 1
    comps = [num.a, num.b, num.c, num.d]
    if denom != 1:
        if any(x % denom for x in comps):
            return None
        comps = [x // denom for x in comps]
    net = b.k - e
    k = num.k
    if net >= 0:
        comps = [x << net for x in comps]
    else:
        k += -net
    return ExactScalar(comps[0], comps[1], comps[2], comps[3], k)


class Tensor:
    """Dense linear map between qubit registers with exact entries.

    Row/column indices are big-endian bitstrings of the output/input
    register; qubit 1 is the most significant bit (leftmost wire).
    """

    __slots__ = ("in_qubits", "out_qubits", "entries")

    def __init__(self, in_qubits: int, out_qubits: int, entries):
        rows = 1 << out_qubits
        cols = 1 << in_qubits
        arr = np.empty((rows, cols), dtype=object)
        for r in range(rows):
            for c in range(cols):
                arr[r, c] = entries[r][c]
        arr.flags.writeable = False
        object.__setattr__(self, "in_qubits", in_qubits)
        object.__setattr__(self, "out_qubits", out_qubits)
        object.__setattr__(self, "entries", arr)

    def __setattr__(self, *_):
        raise AttributeError("Tensor is immutable")

    # ---- constructors ----------------------------------------------------

    @staticmethod
    def from_array(in_qubits: int, out_qubits: int, arr: np.ndarray) -> "Tensor":
        return Tensor(in_qubits, out_qubits, arr.tolist())

    @staticmethod
    def zero(in_qubits: int, out_qubits: int) -> "Tensor":
        rows = [[ZERO] * (1 << in_qubits) for _ in range(1 << out_qubits)]
        return Tensor(in_qubits, out_qubits, rows)

    @staticmethod
    def identity(n_qubits: int) -> "Tensor":
        dim = 1 << n_qubits
        rows = [[ONE if r == c else ZERO for c in range(dim)] for r in range(dim)]
        return Tensor(n_qubits, n_qubits, rows)

    @staticmethod
    def ket(amplitudes: Sequence[ExactScalar]) -> "Tensor":
        n = (len(amplitudes) - 1).bit_length()
        if len(amplitudes) != 1 << n:
            raise ValueError("amplitude count must be a power of two")
        return Tensor(0, n, [[a] for a in amplitudes])

    @staticmethod
    def scalar(s: ExactScalar) -> "Tensor":
        return Tensor(0, 0, [[s]])

    # ---- algebra ---------------------------------------------------------

    def scale(self, s: ExactScalar) -> "Tensor":
        return Tensor.from_array(self.in_qubits, self.out_qubits,
                                 np.vectorize(lambda x: s * x, otypes=[object])(self.entries))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tensor):
            return NotImplemented
        return (self.in_qubits == other.in_qubits
                and self.out_qubits == other.out_qubits
                and bool(np.all(self.entries == other.entries)))

    def __hash__(self):
        return hash((self.in_qubits, self.out_qubits,
                     tuple(self.entries.ravel().tolist())))

    def to_numpy(self) -> np.ndarray:
        """Floating-point shadow of the exact entries."""
        return np.vectorize(lambda x: x.to_complex(), otypes=[complex])(self.entries)

    def __repr__(self):
        return f"Tensor({self.in_qubits}->{self.out_qubits})"


Ket = Tensor  # a Ket is a Tensor with in_qubits = 0


def tensor_product(a: Tensor, b: Tensor) -> Tensor:
    """Parallel composition; qubit order a-then-b (a on the more significant bits)."""
    ent = np.kron(a.entries, b.entries)
    return Tensor.from_array(a.in_qubits + b.in_qubits,
                             a.out_qubits + b.out_qubits, ent)


def compose(second: Tensor, first: Tensor) -> Tensor:
    """Sequential composition second . first (first acts first)."""
    if first.out_qubits != second.in_qubits:
        raise ValueError(
            f"composition mismatch: first is {first.in_qubits}->{first.out_qubits}, "
            f"second is {second.in_qubits}->{second.out_qubits}")
    ent = np.dot(second.entries, first.entries)
    return Tensor.from_array(first.in_qubits, second.out_qubits, ent)


def dagger(t: Tensor) -> Tensor:
    ent = np.vectorize(lambda x: x.conj(), otypes=[object])(t.entries.T)
    return Tensor.from_array(t.out_qubits, t.in_qubits, ent)


def proportional(a: Tensor, b: Tensor) -> Optional[ExactScalar]:
    """The scalar s with a = s*b, if one exists; 1 for two zero tensors."""
    if (a.in_qubits, a.out_qubits) != (b.in_qubits, b.out_qubits):
        raise ValueError("proportional: shape mismatch")
    fa = a.entries.ravel()
    fb = b.entries.ravel()
    ref = next((i for i, x in enumerate(fb) if not x.is_zero()), None)
    if ref is None:
        # b = 0: proportional only if a = 0; convention s = 1
        return ONE if all(x.is_zero() for x in fa) else None
    if fa[ref].is_zero():
        # s would be 0, i.e. a = 0 identically ("nonzero s" required)
        return None
    # cross-multiplication decides proportionality exactly
    for i in range(len(fa)):
        if not (fa[i] * fb[ref] == fa[ref] * fb[i]):
            return None
    return _inverse_times(fa[ref], fb[ref])
