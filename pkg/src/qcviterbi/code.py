"""Circuit-defined (n, k, m) quantum convolutional codes.

The seed transformation acts on n+m wires.  Fixed wire convention:

* inputs   [memory-in (m) | ancilla (s = n-k) | data (k)]
* outputs  [frame qubits (n) | memory-out (m)]

Chaining the seed across tau frames, with each frame's memory-out feeding
the next frame's memory-in, defines the block encoder.  The code is
terminated by padding: after the last frame the m memory-out wires are kept
as physical qubits, so a block has N = n*tau + m qubits.  The frame-0
memory wires are extra ancillas prepared in |0>; un-encoding reveals only
the X component of the operator left on them (the boundary bits), their Z
component being further degeneracy.

Un-encoding an N-qubit error frame by frame through the inverse seed splits
it into per-frame logical labels (data wires), syndrome bits (X components
on ancilla wires), boundary bits, and discarded stabilizer coordinates (Z
components on ancilla and frame-0 memory wires) -- the discarding is
exactly the degeneracy of the code.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, replace

import numpy as np

from .pauli import Pauli, tensor
from .symplectic import (
    GateSpec,
    SymplecticMap,
    default_depth,
    gates_to_map,
    preserves_symplectic_form,
    random_gate_list,
)


@dataclass(frozen=True)
class ConvolutionalCode:
    """An (n, k, m) convolutional code instantiated at block length tau."""

    n: int
    k: int
    m: int
    seed: SymplecticMap
    tau: int
    rng_seed: int | None = None
    gates: tuple[GateSpec, ...] = ()

    def __post_init__(self) -> None:
        if self.k < 1 or self.m < 1 or self.tau < 1:
            raise ValueError("need k >= 1, m >= 1, tau >= 1")
        if self.n - self.k < 1:
            raise ValueError("need s = n - k >= 1")
        if self.seed.num_qubits != self.n + self.m:
            raise ValueError(f"seed must act on n + m = {self.n + self.m} wires")

    @property
    def s(self) -> int:
        """Ancilla (syndrome) wires per frame."""
        return self.n - self.k

    @property
    def block_qubits(self) -> int:
        """N = n*tau + m physical qubits, final memory padded onto the block."""
        return self.n * self.tau + self.m

    def with_tau(self, tau: int) -> "ConvolutionalCode":
        return replace(self, tau=tau)

    def frame_segment(self, e: Pauli, t: int) -> Pauli:
        """Physical-error segment of frame t (1-based) of a block operator."""
        return e[(t - 1) * self.n : t * self.n]

    def padded_segment(self, e: Pauli) -> Pauli:
        """Final-memory segment of a block operator."""
        return e[self.n * self.tau :]


@dataclass(frozen=True)
class Decomposition:
    """Un-encoded coordinates of a block error.

    ``syndrome`` has one s-bit mask per frame (bit a is ancilla wire a);
    ``boundary_bits`` is the m-bit X pattern on the frame-0 memory wires;
    ``memory_trace`` lists the memory-wire operator after each frame,
    index t in 0..tau.
    """

    logical_labels: tuple[Pauli, ...]
    syndrome: tuple[int, ...]
    boundary_bits: int
    memory_trace: tuple[Pauli, ...]

    def syndrome_matrix(self, s: int) -> np.ndarray:
        """tau x s bit matrix view of the syndrome."""
        return np.array(
            [[(st >> a) & 1 for a in range(s)] for st in self.syndrome], dtype=np.uint8
        )


@dataclass(frozen=True)
class BlockGenerators:
    """Derived generators for a full block, all indexed frame-major.

    ``stabilizers[(t-1)*s + a]`` is the image of Z on ancilla wire a of
    frame t; ``pure_errors`` the images of X on the same wires, so
    generator b anti-commutes with stabilizer b and commutes with every
    other one.  The boundary lists come from the frame-0 memory wires; the
    boundary stabilizers extend the degeneracy group, the boundary pure
    errors realize prescribed boundary bits.
    """

    stabilizers: tuple[Pauli, ...]
    pure_errors: tuple[Pauli, ...]
    logicals_x: tuple[Pauli, ...]
    logicals_z: tuple[Pauli, ...]
    boundary_stabilizers: tuple[Pauli, ...]
    boundary_pure_errors: tuple[Pauli, ...]


def _encode_block(code: ConvolutionalCode, mem0: Pauli, frames: list[Pauli]) -> Pauli:
    """Conjugate an input-side Pauli through the chained seed circuit.

    ``mem0`` lives on the frame-0 memory wires, ``frames[t-1]`` on the
    (ancilla | data) input wires of frame t.  Returns the block operator on
    N qubits.
    """
    n, m = code.n, code.m
    mem = mem0
    x = z = 0
    for t, frame_in in enumerate(frames):
        out = code.seed.apply(tensor(mem, frame_in))
        phys = out[:n]
        mem = out[n:]
        x |= phys.x << (t * n)
        z |= phys.z << (t * n)
    x |= mem.x << (code.tau * n)
    z |= mem.z << (code.tau * n)
    return Pauli(code.block_qubits, x, z)


@functools.lru_cache(maxsize=None)
def derive_generators(code: ConvolutionalCode) -> BlockGenerators:
    """Block-level stabilizer, logical, and pure-error generators.

    Each generator is the image of a single-wire X or Z on the input side
    of the block encoder.
    """
    n, k, m, s, tau = code.n, code.k, code.m, code.s, code.tau
    frame_id = Pauli.identity(n)
    mem_id = Pauli.identity(m)

    def one_frame(t: int, wire: int, kind: str) -> Pauli:
        frames = [frame_id] * tau
        frames[t - 1] = Pauli.single(n, wire, kind)
        return _encode_block(code, mem_id, frames)

    def boundary(wire: int, kind: str) -> Pauli:
        return _encode_block(code, Pauli.single(m, wire, kind), [frame_id] * tau)

    stabilizers = []
    pure_errors = []
    logicals_x = []
    logicals_z = []
    for t in range(1, tau + 1):
        for a in range(s):
            stabilizers.append(one_frame(t, a, "Z"))
            pure_errors.append(one_frame(t, a, "X"))
        for a in range(k):
            logicals_x.append(one_frame(t, s + a, "X"))
            logicals_z.append(one_frame(t, s + a, "Z"))
    return BlockGenerators(
        stabilizers=tuple(stabilizers),
        pure_errors=tuple(pure_errors),
        logicals_x=tuple(logicals_x),
        logicals_z=tuple(logicals_z),
        boundary_stabilizers=tuple(boundary(a, "Z") for a in range(m)),
        boundary_pure_errors=tuple(boundary(a, "X") for a in range(m)),
    )


def decompose(code: ConvolutionalCode, e: Pauli) -> Decomposition:
    """Un-encode a block error into logical labels, syndrome, and boundary bits.

    Propagates backwards through the inverse seed, frame tau down to 1.  The
    Z components on ancilla wires and on the frame-0 memory wires are
    discarded: errors differing by stabilizer elements decompose
    identically.
    """
    n, k, m, s = code.n, code.k, code.m, code.s
    if e.num_qubits != code.block_qubits:
        raise ValueError(
            f"size mismatch: block has {code.block_qubits} qubits, got {e.num_qubits}"
        )
    seed_inv = _inverse_seed(code)
    mem = code.padded_segment(e)
    trace = [mem]
    labels: list[Pauli] = []
    syndrome: list[int] = []
    for t in range(code.tau, 0, -1):
        back = seed_inv.apply(tensor(code.frame_segment(e, t), mem))
        mem = back[:m]
        syndrome.append(back[m : m + s].x)
        labels.append(back[m + s : m + s + k])
        trace.append(mem)
    labels.reverse()
    syndrome.reverse()
    trace.reverse()
    return Decomposition(
        logical_labels=tuple(labels),
        syndrome=tuple(syndrome),
        boundary_bits=mem.x,
        memory_trace=tuple(trace),
    )


@functools.lru_cache(maxsize=None)
def _inverse_seed(code: ConvolutionalCode) -> SymplecticMap:
    return code.seed.inverse()


def pure_error_for(code: ConvolutionalCode, syndrome: tuple[int, ...], boundary_bits: int) -> Pauli:
    """Product of pure-error generators selected by the set syndrome and boundary bits.

    Decomposing the result reproduces the given syndrome and boundary with
    all-identity logical labels.
    """
    s, m = code.s, code.m
    if len(syndrome) != code.tau:
        raise ValueError(f"syndrome must have tau = {code.tau} frames")
    for st in syndrome:
        if not 0 <= st < (1 << s):
            raise ValueError(f"syndrome frame value {st} outside {s} bits")
    if not 0 <= boundary_bits < (1 << m):
        raise ValueError(f"boundary value {boundary_bits} outside {m} bits")
    gens = derive_generators(code)
    out = Pauli.identity(code.block_qubits)
    for t, st in enumerate(syndrome):
        for a in range(s):
            if (st >> a) & 1:
                out = out * gens.pure_errors[t * s + a]
    for a in range(m):
        if (boundary_bits >> a) & 1:
            out = out * gens.boundary_pure_errors[a]
    return out


def random_code(
    n: int,
    k: int,
    m: int,
    tau: int,
    seed: int,
    depth: int | None = None,
) -> ConvolutionalCode:
    """Code with a random elementary-gate seed transformation."""
    wires = n + m
    if depth is None:
        depth = default_depth(wires)
    rng = np.random.default_rng(seed)
    gates = tuple(random_gate_list(wires, rng, depth))
    return ConvolutionalCode(
        n=n, k=k, m=m, seed=gates_to_map(wires, gates), tau=tau,
        rng_seed=seed, gates=gates,
    )


def save_code(code: ConvolutionalCode, path: str) -> None:
    """Plain-text code file: header, seed matrix rows, then the gate list."""
    matrix = code.seed.to_matrix()
    lines = [
        f"{code.n} {code.k} {code.m} {code.tau} "
        f"{code.rng_seed if code.rng_seed is not None else '-'}"
    ]
    lines.extend("".join(str(b) for b in row) for row in matrix)
    lines.extend(" ".join(str(part) for part in gate) for gate in code.gates)
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def load_code(path: str) -> ConvolutionalCode:
    with open(path, encoding="ascii") as fh:
        lines = [line.strip() for line in fh if line.strip()]
    if not lines:
        raise ValueError(f"{path}: empty code file")
    header = lines[0].split()
    if len(header) != 5:
        raise ValueError(f"{path}: header must be 'n k m tau seed'")
    n, k, m, tau = (int(v) for v in header[:4])
    rng_seed = None if header[4] == "-" else int(header[4])
    wires = n + m
    rows = lines[1 : 1 + 2 * wires]
    if len(rows) != 2 * wires or any(len(r) != 2 * wires for r in rows):
        raise ValueError(f"{path}: expected {2 * wires} rows of {2 * wires} bits")
    matrix = np.array([[int(ch) for ch in row] for row in rows], dtype=np.uint8)
    seed_map = SymplecticMap.from_matrix(matrix)
    gates: list[GateSpec] = []
    for line in lines[1 + 2 * wires :]:
        parts = line.split()
        gates.append((parts[0], *(int(w) for w in parts[1:])))
    if gates:
        rebuilt = gates_to_map(wires, gates)
        if rebuilt != seed_map:
            raise ValueError(f"{path}: gate list does not reproduce the stored matrix")
    if not preserves_symplectic_form(seed_map):
        raise ValueError(f"{path}: stored matrix is not symplectic")
    return ConvolutionalCode(
        n=n, k=k, m=m, seed=seed_map, tau=tau, rng_seed=rng_seed, gates=tuple(gates)
    )
