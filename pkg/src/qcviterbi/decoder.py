"""Min-sum Viterbi decoding over the syndrome trellis.

The cumulative distance d(M_t) of a vertex is the length of the shortest
path from the block end to that vertex.  It is initialized on the padded
memory qubits as d(M_tau) = -ln P(M_tau) and relaxed frame by frame, tau
down to 1:

    d(M_{t-1}) = min over edges [ d(M_t) + w(M_{t-1}, M_t; label) ]

keeping one back-pointer per vertex.  At t = 0 the frame-0 memory wires
were |0> ancillas whose measurement reveals the X component of M_0, so only
vertices whose X bits equal the observed boundary bits survive; the answer
is back-traced from the surviving vertex with the smallest distance.

Ties are broken deterministically: during relaxation by the smallest
canonical encoding of (M_t, label), at the boundary by the smallest
encoding of M_0.  Distances are compared as exact doubles; no epsilons.

In non-degenerate mode the traced edge labels are the frame errors E_t,
which are reassembled (with M_tau as the padded segment) into the full
physical error estimate; its logical labels are obtained by un-encoding it,
since success is judged per equivalence class for both decoders.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .code import ConvolutionalCode, decompose
from .noise import IidPauliNoise
from .pauli import Pauli, tensor
from .trellis import DEGENERATE, NONDEGENERATE, SyndromeTrellis, TrellisBuilder


class UncorrectableSyndromeError(Exception):
    """No boundary-consistent memory state has finite distance."""


@dataclass(frozen=True)
class DecodeOutcome:
    mode: str
    logical_labels: tuple[Pauli, ...]
    path_weight: float
    memory_path: tuple[Pauli, ...]  # M_0 .. M_tau along the chosen path
    physical_error: Pauli | None = None  # non-degenerate mode only


def _boundary_candidates(m: int, boundary_bits: int) -> list[int]:
    """Encodings of all M_0 with the given X component, ascending."""
    out = []
    for z in range(1 << m):
        enc = 0
        for a in range(m):
            enc |= (((boundary_bits >> a) & 1) | (((z >> a) & 1) << 1)) << (2 * a)
        out.append(enc)
    return sorted(out)


def viterbi(
    trellis: SyndromeTrellis, noise: IidPauliNoise, boundary_bits: int
) -> DecodeOutcome:
    """Shortest-path decode of a built trellis."""
    code = trellis.code
    m = code.m
    if not 0 <= boundary_bits < (1 << m):
        raise ValueError(f"boundary value {boundary_bits} outside {m} bits")
    num_states = trellis.num_vertices
    d = np.array(
        [noise.log_prob(Pauli.from_encoding(m, v)) for v in range(num_states)]
    )
    back: list[np.ndarray] = []
    arange = np.arange(num_states)
    for frame in reversed(trellis.frames):  # t = tau .. 1
        to_idx, weights, _meta = frame.relax_tables(num_states)
        cand = d[to_idx] + weights
        j = np.argmin(cand, axis=1)  # first occurrence = documented tie rule
        d = cand[arange, j]
        back.append(j)
    back.reverse()

    best = None
    for enc in _boundary_candidates(m, boundary_bits):
        if d[enc] < np.inf and (best is None or d[enc] < d[best]):
            best = enc
    if best is None:
        raise UncorrectableSyndromeError(
            "no boundary-consistent memory state is reachable"
        )

    path_weight = float(d[best])
    vertex = best
    memory_path = [Pauli.from_encoding(m, best)]
    labels: list[Pauli] = []
    for t, frame in enumerate(trellis.frames, start=1):
        _to_idx, _weights, meta = frame.relax_tables(num_states)
        entry = meta[vertex][int(back[t - 1][vertex])]
        assert entry is not None
        to_enc, to_pauli, label = entry
        labels.append(label)
        memory_path.append(to_pauli)
        vertex = to_enc

    if trellis.mode == NONDEGENERATE:
        physical = tensor(*labels, memory_path[-1])
        return DecodeOutcome(
            mode=trellis.mode,
            logical_labels=decompose(code, physical).logical_labels,
            path_weight=path_weight,
            memory_path=tuple(memory_path),
            physical_error=physical,
        )
    return DecodeOutcome(
        mode=trellis.mode,
        logical_labels=tuple(labels),
        path_weight=path_weight,
        memory_path=tuple(memory_path),
    )


class Decoder:
    """Decodes many blocks of one (code, noise) pair, reusing per-frame work."""

    def __init__(self, code: ConvolutionalCode, noise: IidPauliNoise):
        self.builder = TrellisBuilder(code, noise)

    @property
    def code(self) -> ConvolutionalCode:
        return self.builder.code

    @property
    def noise(self) -> IidPauliNoise:
        return self.builder.noise

    def decode(
        self, syndrome: tuple[int, ...], boundary_bits: int, mode: str
    ) -> DecodeOutcome:
        trellis = self.builder.build(syndrome, mode)
        return viterbi(trellis, self.noise, boundary_bits)


def decode_degenerate(
    code: ConvolutionalCode,
    noise: IidPauliNoise,
    syndrome: tuple[int, ...],
    boundary_bits: int,
    decoder: Decoder | None = None,
) -> DecodeOutcome:
    """Most probable degenerate class, scored on the merged trellis."""
    decoder = decoder or Decoder(code, noise)
    return decoder.decode(syndrome, boundary_bits, DEGENERATE)


def decode_nondegenerate(
    code: ConvolutionalCode,
    noise: IidPauliNoise,
    syndrome: tuple[int, ...],
    boundary_bits: int,
    decoder: Decoder | None = None,
) -> DecodeOutcome:
    """Most probable single error, plus its equivalence-class labels."""
    decoder = decoder or Decoder(code, noise)
    return decoder.decode(syndrome, boundary_bits, NONDEGENERATE)
