"""I.i.d. Pauli noise: sampling and log-domain probability evaluation.

Each qubit independently suffers I, X, Y, Z with probabilities
(1 - p_x - p_y - p_z, p_x, p_y, p_z).  The depolarizing channel of rate p
is the symmetric choice p_x = p_y = p_z = p, hence total error probability
3p and p <= 1/3.

All probability arithmetic downstream is in the log domain (weights
-ln P), because path probabilities at block length 600 underflow doubles
by a wide margin.  Impossible events get the saturating weight +inf.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .pauli import Pauli


def _neg_log(p: float) -> float:
    return -math.log(p) if p > 0.0 else math.inf


@dataclass(frozen=True)
class IidPauliNoise:
    p_x: float
    p_y: float
    p_z: float
    _nll: tuple[float, float, float, float] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        for name, p in (("p_x", self.p_x), ("p_y", self.p_y), ("p_z", self.p_z)):
            if p < 0.0 or p > 1.0:
                raise ValueError(f"{name} must be in [0, 1]")
        if self.p_x + self.p_y + self.p_z > 1.0 + 1e-12:
            raise ValueError("p_x + p_y + p_z must not exceed 1")
        object.__setattr__(
            self,
            "_nll",
            (
                _neg_log(self.p_i),
                _neg_log(self.p_x),
                _neg_log(self.p_y),
                _neg_log(self.p_z),
            ),
        )

    @property
    def p_i(self) -> float:
        return max(0.0, 1.0 - self.p_x - self.p_y - self.p_z)

    def log_prob(self, p: Pauli) -> float:
        """Weight -ln P(p); +inf when some required component has probability 0."""
        n_y = (p.x & p.z).bit_count()
        n_x = p.x.bit_count() - n_y
        n_z = p.z.bit_count() - n_y
        n_i = p.num_qubits - n_x - n_y - n_z
        total = 0.0
        for count, w in zip((n_i, n_x, n_y, n_z), self._nll):
            if count:
                if w == math.inf:
                    return math.inf
                total += count * w
        return total

    def sample(self, num_qubits: int, rng: np.random.Generator) -> Pauli:
        """One i.i.d. draw; deterministic given the rng state."""
        u = rng.random(num_qubits)
        t_x = self.p_i
        t_y = t_x + self.p_x
        t_z = t_y + self.p_y
        is_x = (u >= t_x) & (u < t_y)
        is_y = (u >= t_y) & (u < t_z)
        is_z = u >= t_z
        return Pauli(num_qubits, _pack_bits(is_x | is_y), _pack_bits(is_y | is_z))


def _pack_bits(bits: np.ndarray) -> int:
    if bits.size == 0:
        return 0
    return int.from_bytes(
        np.packbits(bits, bitorder="little").tobytes(), byteorder="little"
    )


def depolarizing(p: float) -> IidPauliNoise:
    """Depolarizing channel: rate p for each of X, Y, Z."""
    if p < 0.0 or p > 1.0 / 3.0 + 1e-15:
        raise ValueError("depolarizing rate must satisfy 0 <= p <= 1/3")
    return IidPauliNoise(p, p, p)
