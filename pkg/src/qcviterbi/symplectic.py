"""Phase-free Clifford transformations as binary symplectic maps.

Conjugation by a Clifford unitary sends Pauli operators to Pauli operators
and, once phases are dropped, acts linearly on the (x|z) bit representation.
A map is stored column-wise as the images of the 2n single-wire basis
Paulis X_a and Z_a, so applying it to an arbitrary operator is at most 2n
XOR accumulations.

Elementary generators (conjugation action):

* ``hadamard(a)``  swaps the x and z bits of wire a (X_a <-> Z_a);
* ``phase(a)``     maps X_a -> Y_a and fixes Z_a, i.e. z_a -> z_a XOR x_a;
* ``cnot(a, b)``   propagates X from control a to target b and Z from b
  back to a: x_b -> x_b XOR x_a, z_a -> z_a XOR z_b.

Random maps are produced by composing uniformly chosen elementary gates on
uniformly chosen wires, which is reproducible from an rng seed and always
yields a valid symplectic matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .pauli import Pauli, anticommutes

GateSpec = tuple  # ("hadamard", a) | ("phase", a) | ("cnot", a, b)


@dataclass(frozen=True)
class SymplecticMap:
    """Action of a Clifford unitary on Pauli classes (phases dropped)."""

    num_qubits: int
    x_images: tuple[Pauli, ...]
    z_images: tuple[Pauli, ...]

    def __post_init__(self) -> None:
        n = self.num_qubits
        if len(self.x_images) != n or len(self.z_images) != n:
            raise ValueError("need one image per basis Pauli")
        for img in self.x_images + self.z_images:
            if img.num_qubits != n:
                raise ValueError("image size mismatch")

    @classmethod
    def identity(cls, num_qubits: int) -> "SymplecticMap":
        return cls(
            num_qubits,
            tuple(Pauli(num_qubits, 1 << a, 0) for a in range(num_qubits)),
            tuple(Pauli(num_qubits, 0, 1 << a) for a in range(num_qubits)),
        )

    def apply(self, p: Pauli) -> Pauli:
        """Image class of U p U^dag."""
        if p.num_qubits != self.num_qubits:
            raise ValueError(
                f"size mismatch: map on {self.num_qubits}, operator on {p.num_qubits}"
            )
        x = z = 0
        bits = p.x
        while bits:
            a = (bits & -bits).bit_length() - 1
            bits &= bits - 1
            img = self.x_images[a]
            x ^= img.x
            z ^= img.z
        bits = p.z
        while bits:
            a = (bits & -bits).bit_length() - 1
            bits &= bits - 1
            img = self.z_images[a]
            x ^= img.x
            z ^= img.z
        return Pauli(self.num_qubits, x, z)

    def compose(self, other: "SymplecticMap") -> "SymplecticMap":
        """Map acting as self after other: (self.compose(other))(p) == self(other(p))."""
        if other.num_qubits != self.num_qubits:
            raise ValueError("size mismatch in compose")
        return SymplecticMap(
            self.num_qubits,
            tuple(self.apply(img) for img in other.x_images),
            tuple(self.apply(img) for img in other.z_images),
        )

    def inverse(self) -> "SymplecticMap":
        n = self.num_qubits
        inv_rows = _gf2_invert(self._matrix_rows(), 2 * n)
        return _map_from_rows(n, inv_rows)

    def _matrix_rows(self) -> list[int]:
        """Rows of the 2n x 2n matrix on (x|z) coordinate vectors, as bit ints.

        Coordinate j < n is x_j, coordinate n + j is z_j; column c holds the
        image of basis Pauli c.
        """
        n = self.num_qubits
        rows = [0] * (2 * n)
        for c in range(n):
            for name, img in ((c, self.x_images[c]), (n + c, self.z_images[c])):
                for i in range(n):
                    rows[i] |= ((img.x >> i) & 1) << name
                    rows[n + i] |= ((img.z >> i) & 1) << name
        return rows

    def to_matrix(self) -> np.ndarray:
        """Dense uint8 matrix form of :meth:`_matrix_rows` (for files and tests)."""
        n = self.num_qubits
        rows = self._matrix_rows()
        return np.array(
            [[(r >> c) & 1 for c in range(2 * n)] for r in rows], dtype=np.uint8
        )

    @classmethod
    def from_matrix(cls, matrix: np.ndarray) -> "SymplecticMap":
        matrix = np.asarray(matrix, dtype=np.uint8)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] % 2:
            raise ValueError("expected a 2n x 2n binary matrix")
        n = matrix.shape[0] // 2
        rows = [int("".join(str(b) for b in matrix[i, ::-1]), 2) for i in range(2 * n)]
        f = _map_from_rows(n, rows)
        if not preserves_symplectic_form(f):
            raise ValueError("matrix does not preserve the symplectic form")
        return f


def _map_from_rows(n: int, rows: list[int]) -> SymplecticMap:
    def column_image(c: int) -> Pauli:
        x = z = 0
        for i in range(n):
            x |= ((rows[i] >> c) & 1) << i
            z |= ((rows[n + i] >> c) & 1) << i
        return Pauli(n, x, z)

    return SymplecticMap(
        n,
        tuple(column_image(c) for c in range(n)),
        tuple(column_image(n + c) for c in range(n)),
    )


def _gf2_invert(rows: list[int], size: int) -> list[int]:
    """Invert a size x size GF(2) matrix given as row bit masks (Gauss-Jordan)."""
    work = rows[:]
    inv = [1 << i for i in range(size)]
    for col in range(size):
        pivot = next(
            (r for r in range(col, size) if (work[r] >> col) & 1),
            None,
        )
        if pivot is None:
            raise ValueError("matrix is singular over GF(2)")
        work[col], work[pivot] = work[pivot], work[col]
        inv[col], inv[pivot] = inv[pivot], inv[col]
        for r in range(size):
            if r != col and ((work[r] >> col) & 1):
                work[r] ^= work[col]
                inv[r] ^= inv[col]
    return inv


def preserves_symplectic_form(f: SymplecticMap) -> bool:
    """Check pairwise commutation of all basis-Pauli images against the originals."""
    n = f.num_qubits
    basis = [Pauli(n, 1 << a, 0) for a in range(n)] + [
        Pauli(n, 0, 1 << a) for a in range(n)
    ]
    images = list(f.x_images) + list(f.z_images)
    for i in range(2 * n):
        for j in range(i + 1, 2 * n):
            if anticommutes(basis[i], basis[j]) != anticommutes(images[i], images[j]):
                return False
    return True


def hadamard(num_qubits: int, a: int) -> SymplecticMap:
    _check_wire(num_qubits, a)
    f = SymplecticMap.identity(num_qubits)
    x_images = list(f.x_images)
    z_images = list(f.z_images)
    x_images[a], z_images[a] = z_images[a], x_images[a]
    return SymplecticMap(num_qubits, tuple(x_images), tuple(z_images))


def phase(num_qubits: int, a: int) -> SymplecticMap:
    _check_wire(num_qubits, a)
    f = SymplecticMap.identity(num_qubits)
    x_images = list(f.x_images)
    x_images[a] = Pauli(num_qubits, 1 << a, 1 << a)  # X -> Y
    return SymplecticMap(num_qubits, tuple(x_images), f.z_images)


def cnot(num_qubits: int, control: int, target: int) -> SymplecticMap:
    _check_wire(num_qubits, control)
    _check_wire(num_qubits, target)
    if control == target:
        raise ValueError("cnot control and target must differ")
    f = SymplecticMap.identity(num_qubits)
    x_images = list(f.x_images)
    z_images = list(f.z_images)
    x_images[control] = Pauli(num_qubits, (1 << control) | (1 << target), 0)
    z_images[target] = Pauli(num_qubits, 0, (1 << control) | (1 << target))
    return SymplecticMap(num_qubits, tuple(x_images), tuple(z_images))


def _check_wire(num_qubits: int, a: int) -> None:
    if not 0 <= a < num_qubits:
        raise ValueError(f"wire {a} out of range for {num_qubits} qubits")


def gate_map(num_qubits: int, gate: GateSpec) -> SymplecticMap:
    name = gate[0]
    if name == "hadamard":
        return hadamard(num_qubits, gate[1])
    if name == "phase":
        return phase(num_qubits, gate[1])
    if name == "cnot":
        return cnot(num_qubits, gate[1], gate[2])
    raise ValueError(f"unknown gate {name!r}")


def gates_to_map(num_qubits: int, gates: list[GateSpec] | tuple[GateSpec, ...]) -> SymplecticMap:
    """Compose a gate list applied in circuit order (first gate acts first)."""
    acc = SymplecticMap.identity(num_qubits)
    for gate in gates:
        acc = gate_map(num_qubits, gate).compose(acc)
    return acc


def default_depth(num_qubits: int) -> int:
    return 10 * num_qubits * num_qubits


def random_gate_list(
    num_qubits: int, rng: np.random.Generator, depth: int
) -> list[GateSpec]:
    """Uniform elementary gates on uniform wires; cnot needs two wires.

    A fair coin appends one extra gate (for depth >= 1): on one and two
    wires every elementary gate is an odd element of the symplectic group,
    so words of a fixed length would only ever reach an index-2 subgroup.
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")
    kinds = ("hadamard", "phase", "cnot") if num_qubits >= 2 else ("hadamard", "phase")
    count = depth
    if depth > 0 and int(rng.integers(2)):
        count += 1
    gates: list[GateSpec] = []
    for _ in range(count):
        kind = kinds[int(rng.integers(len(kinds)))]
        if kind == "cnot":
            a = int(rng.integers(num_qubits))
            b = int(rng.integers(num_qubits - 1))
            if b >= a:
                b += 1
            gates.append(("cnot", a, b))
        else:
            gates.append((kind, int(rng.integers(num_qubits))))
    return gates


def random_clifford(
    num_qubits: int, rng: np.random.Generator, depth: int
) -> SymplecticMap:
    """Random symplectic map from a depth-long elementary-gate circuit."""
    return gates_to_map(num_qubits, random_gate_list(num_qubits, rng, depth))
