"""Mod-phase Pauli group arithmetic on packed X/Z bit masks.

An n-qubit Pauli operator, taken modulo the unobservable phases
{+1, -1, +i, -i}, is stored as two n-bit integers: bit ``a`` of ``x``
(resp. ``z``) is set when the operator acts as X (resp. Z) on qubit ``a``;
both bits set encode Y.  Multiplication is bitwise XOR, every element is
its own inverse, and whether two operators commute is the symplectic inner
product of the mask pairs, so the whole group is just the vector space
F_2^(2n).

Text form: one character per qubit from ``IXYZ``, qubit 0 leftmost.

Canonical integer encoding: qubit ``a`` contributes ``(x_a + 2*z_a) << 2a``,
i.e. interleaved (x, z) pairs with qubit 0 least significant.  This single
ordering drives map keys, enumeration order and tie-breaking everywhere
downstream, so decoders and oracles agree on ties.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

_CHAR_FOR_BITS = ("I", "X", "Z", "Y")  # index = x_bit + 2*z_bit
_BITS_FOR_CHAR = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}


@dataclass(frozen=True)
class Pauli:
    """A Pauli operator class modulo phase; immutable and hashable."""

    num_qubits: int
    x: int = 0
    z: int = 0

    def __post_init__(self) -> None:
        if self.num_qubits < 0:
            raise ValueError("num_qubits must be non-negative")
        mask = (1 << self.num_qubits) - 1
        if not (0 <= self.x <= mask) or not (0 <= self.z <= mask):
            raise ValueError("bit mask outside qubit range")

    @classmethod
    def identity(cls, num_qubits: int) -> "Pauli":
        return cls(num_qubits, 0, 0)

    @classmethod
    def single(cls, num_qubits: int, qubit: int, kind: str) -> "Pauli":
        """One non-identity factor ``kind`` in {X, Y, Z} at ``qubit``."""
        if not 0 <= qubit < num_qubits:
            raise IndexError(f"qubit {qubit} out of range")
        xb, zb = _BITS_FOR_CHAR[kind]
        return cls(num_qubits, xb << qubit, zb << qubit)

    @classmethod
    def from_string(cls, text: str) -> "Pauli":
        x = z = 0
        for a, ch in enumerate(text):
            try:
                xb, zb = _BITS_FOR_CHAR[ch]
            except KeyError:
                raise ValueError(f"invalid Pauli character {ch!r}") from None
            x |= xb << a
            z |= zb << a
        return cls(len(text), x, z)

    @classmethod
    def from_encoding(cls, num_qubits: int, enc: int) -> "Pauli":
        """Inverse of :meth:`encoding`."""
        x = z = 0
        for a in range(num_qubits):
            pair = (enc >> (2 * a)) & 3
            x |= (pair & 1) << a
            z |= (pair >> 1) << a
        return cls(num_qubits, x, z)

    def encoding(self) -> int:
        """Canonical integer encoding (interleaved x/z, qubit 0 lowest)."""
        enc = 0
        for a in range(self.num_qubits):
            enc |= (((self.x >> a) & 1) | (((self.z >> a) & 1) << 1)) << (2 * a)
        return enc

    def weight(self) -> int:
        """Number of non-identity tensor factors."""
        return (self.x | self.z).bit_count()

    def is_identity(self) -> bool:
        return self.x == 0 and self.z == 0

    def __mul__(self, other: "Pauli") -> "Pauli":
        if self.num_qubits != other.num_qubits:
            raise ValueError(
                f"size mismatch: {self.num_qubits} vs {other.num_qubits} qubits"
            )
        return Pauli(self.num_qubits, self.x ^ other.x, self.z ^ other.z)

    def __len__(self) -> int:
        return self.num_qubits

    def __getitem__(self, index: int | slice) -> "Pauli":
        """Contiguous sub-operator on a qubit range (step-1 slices only)."""
        if isinstance(index, slice):
            start, stop, step = index.indices(self.num_qubits)
            if step != 1:
                raise IndexError("only contiguous slices are supported")
            if stop < start:
                stop = start
            width = stop - start
            mask = (1 << width) - 1
            return Pauli(width, (self.x >> start) & mask, (self.z >> start) & mask)
        if not 0 <= index < self.num_qubits:
            raise IndexError(f"qubit {index} out of range")
        return Pauli(1, (self.x >> index) & 1, (self.z >> index) & 1)

    def __str__(self) -> str:
        return "".join(
            _CHAR_FOR_BITS[((self.x >> a) & 1) | (((self.z >> a) & 1) << 1)]
            for a in range(self.num_qubits)
        )

    def __repr__(self) -> str:
        return f"Pauli({str(self)!r})"


def anticommutes(a: Pauli, b: Pauli) -> int:
    """Symplectic inner product: 0 if a and b commute, 1 if they anti-commute."""
    if a.num_qubits != b.num_qubits:
        raise ValueError(f"size mismatch: {a.num_qubits} vs {b.num_qubits} qubits")
    return ((a.x & b.z).bit_count() + (a.z & b.x).bit_count()) & 1


def tensor(*operators: Pauli) -> Pauli:
    """Tensor product, first operator on the lowest-index qubits."""
    if not operators:
        raise ValueError("tensor of no operators")
    x = z = 0
    offset = 0
    for op in operators:
        x |= op.x << offset
        z |= op.z << offset
        offset += op.num_qubits
    return Pauli(offset, x, z)


def all_paulis(num_qubits: int) -> Iterator[Pauli]:
    """All 4**n Pauli classes in canonical encoding order."""
    for enc in range(4**num_qubits):
        yield Pauli.from_encoding(num_qubits, enc)
