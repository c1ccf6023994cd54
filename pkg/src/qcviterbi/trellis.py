"""Syndrome-conditioned trellis construction and degenerate edge merging.

For each frame t the trellis has one vertex per memory-wire Pauli class
(4**m of them).  Edges come from exhausting all tuples

    (M_prev in P_m, Z_t subset of ancilla-wire Z's, L_t in P_k)

and pushing M_prev (x) Z_t X(s_t) (x) L_t through the seed transformation,
where X(s_t) puts X on every ancilla wire whose syndrome bit is set.  The
image splits into a frame error E_t on the n frame wires and the next
memory operator M_t, giving an edge M_prev -> M_t.

Non-degenerate mode keeps one edge per tuple, labelled by E_t and weighted
-ln P(E_t).  Degenerate mode merges all edges sharing (M_prev, M_t, L_t)
into a single super edge labelled L_t whose weight is -ln of the *summed*
probability of the merged edges: paths through the merged trellis then
score whole bundles of errors that differ only by per-frame stabilizer
moves, which is what lets the decoder rank degenerate error classes
instead of individual errors.

Enumeration order is lexicographic in the canonical encodings of
(M_prev, Z_t, L_t), which fixes edge order, merge order, and therefore
every float in the output, for reproducibility.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple

import numpy as np

from .code import ConvolutionalCode
from .noise import IidPauliNoise
from .pauli import Pauli

NONDEGENERATE = "nondegenerate"
DEGENERATE = "degenerate"
MODES = (NONDEGENERATE, DEGENERATE)


class FrameTuple(NamedTuple):
    """One raw enumeration record shared by both trellis modes."""

    from_memory: Pauli
    z_mask: int
    logical: Pauli
    error: Pauli
    to_memory: Pauli


@dataclass(frozen=True)
class TrellisEdge:
    from_memory: Pauli
    to_memory: Pauli
    label: Pauli  # E_t in non-degenerate mode, L_t in degenerate mode
    weight: float


def super_edge_weight(member_weights: list[float] | tuple[float, ...]) -> float:
    """-ln of the summed probability mass, via max-shifted summation.

    The result never exceeds any member weight, and equals the minimum
    exactly when every other member carries zero mass.
    """
    if len(member_weights) == 0:
        raise ValueError("super edge needs at least one member")
    w_min = min(member_weights)
    if w_min == math.inf:
        return math.inf
    total = sum(math.exp(w_min - w) for w in member_weights)
    return w_min - math.log(total)


def enumerate_frame_tuples(
    code: ConvolutionalCode, s_t: int
) -> Iterator[FrameTuple]:
    """All 4**m * 2**s * 4**k raw tuples for one frame, in canonical order."""
    n, k, m, s = code.n, code.k, code.m, code.s
    if not 0 <= s_t < (1 << s):
        raise ValueError(f"syndrome value {s_t} outside {s} bits")
    wires = n + m
    apply = code.seed.apply
    x_base = s_t << m  # X(s_t) on the ancilla wires
    for enc_mem in range(4**m):
        mem = Pauli.from_encoding(m, enc_mem)
        for z_mask in range(1 << s):
            z_anc = z_mask << m
            for enc_l in range(4**k):
                logical = Pauli.from_encoding(k, enc_l)
                image = apply(
                    Pauli(
                        wires,
                        mem.x | x_base | (logical.x << (m + s)),
                        mem.z | z_anc | (logical.z << (m + s)),
                    )
                )
                yield FrameTuple(mem, z_mask, logical, image[:n], image[n:])


def build_frame(
    code: ConvolutionalCode, noise: IidPauliNoise, s_t: int, mode: str
) -> tuple[TrellisEdge, ...]:
    """Edge collection for one frame with syndrome bits ``s_t``."""
    if mode not in MODES:
        raise ValueError(f"unknown trellis mode {mode!r}")
    if mode == NONDEGENERATE:
        return tuple(
            TrellisEdge(rec.from_memory, rec.to_memory, rec.error,
                        noise.log_prob(rec.error))
            for rec in enumerate_frame_tuples(code, s_t)
        )
    groups: dict[tuple[Pauli, Pauli, Pauli], list[float]] = {}
    for rec in enumerate_frame_tuples(code, s_t):
        key = (rec.from_memory, rec.to_memory, rec.logical)
        groups.setdefault(key, []).append(noise.log_prob(rec.error))
    return tuple(
        TrellisEdge(frm, to, logical, super_edge_weight(weights))
        for (frm, to, logical), weights in groups.items()
    )


class FrameEdges:
    """Edges of one frame plus a lazily compiled relaxation table.

    The table groups edges by source vertex, prunes zero-probability
    members, and sorts each row by (to, label) encoding so that a
    first-occurrence argmin realizes the documented tie rule.  Every edge
    is kept: collapsing parallel edges early could pick a different one
    than the tie rule whenever distinct weights collide after a float add.
    """

    __slots__ = ("s_t", "mode", "edges", "_relax")

    def __init__(self, s_t: int, mode: str, edges: tuple[TrellisEdge, ...]):
        self.s_t = s_t
        self.mode = mode
        self.edges = edges
        self._relax = None

    def relax_tables(self, num_states: int):
        if self._relax is None:
            self._relax = _compile_relax(self.edges, num_states)
        return self._relax


def _compile_relax(edges: tuple[TrellisEdge, ...], num_states: int):
    rows: list[dict] = [dict() for _ in range(num_states)]
    for edge in edges:
        if edge.weight == math.inf:
            continue  # pruned from relaxation; kept in the edge list for mass checks
        frm = edge.from_memory.encoding()
        to_enc = edge.to_memory.encoding()
        label_enc = edge.label.encoding()
        # (to, label) pairs are unique per source: the seed map is a bijection
        rows[frm][(to_enc, label_enc)] = (
            edge.weight, to_enc, label_enc, edge.to_memory, edge.label,
        )
    sorted_rows = [
        sorted(row.values(), key=lambda e: (e[1], e[2])) for row in rows
    ]
    width = max(1, max(len(r) for r in sorted_rows))
    to_idx = np.zeros((num_states, width), dtype=np.int64)
    weights = np.full((num_states, width), math.inf)
    meta: list[list[tuple[int, Pauli, Pauli] | None]] = []
    for frm, row in enumerate(sorted_rows):
        meta_row: list[tuple[int, Pauli, Pauli] | None] = [None] * width
        for j, (w, to_enc, _label_enc, to_pauli, label) in enumerate(row):
            to_idx[frm, j] = to_enc
            weights[frm, j] = w
            meta_row[j] = (to_enc, to_pauli, label)
        meta.append(meta_row)
    return to_idx, weights, meta


class SyndromeTrellis:
    """Per-frame edge collections for one syndrome, in one mode."""

    def __init__(
        self,
        code: ConvolutionalCode,
        mode: str,
        syndrome: tuple[int, ...],
        frames: tuple[FrameEdges, ...],
    ):
        self.code = code
        self.mode = mode
        self.syndrome = syndrome
        self.frames = frames

    @property
    def num_vertices(self) -> int:
        return 4**self.code.m

    def dump_lines(self) -> Iterator[str]:
        """One line per (super-)edge: ``t from_memory to_memory label weight``."""
        for t, frame in enumerate(self.frames, start=1):
            for e in frame.edges:
                yield f"{t} {e.from_memory} {e.to_memory} {e.label} {e.weight!r}"


class TrellisBuilder:
    """Builds trellises for one (code, noise) pair, caching per-frame work.

    Frame content depends on the syndrome only through the s bits of the
    frame, so edge collections are cached per (s_t, mode); the raw tuple
    enumeration is shared between the two modes.
    """

    def __init__(self, code: ConvolutionalCode, noise: IidPauliNoise):
        self.code = code
        self.noise = noise
        self._frames: dict[tuple[int, str], FrameEdges] = {}

    def frame(self, s_t: int, mode: str) -> FrameEdges:
        key = (s_t, mode)
        cached = self._frames.get(key)
        if cached is None:
            cached = FrameEdges(s_t, mode, build_frame(self.code, self.noise, s_t, mode))
            self._frames[key] = cached
        return cached

    def build(self, syndrome: tuple[int, ...], mode: str) -> SyndromeTrellis:
        if len(syndrome) != self.code.tau:
            raise ValueError(f"syndrome must have tau = {self.code.tau} frames")
        return SyndromeTrellis(
            self.code,
            mode,
            tuple(syndrome),
            tuple(self.frame(s_t, mode) for s_t in syndrome),
        )
