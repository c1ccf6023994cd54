"""Fast invariant batteries behind the ``selftest`` CLI subcommand.

Each check exercises one structural invariant on small randomized
instances with fixed seeds, so a pass/fail line per suite is printable
without pytest.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .code import decompose, derive_generators, random_code
from .decoder import Decoder
from .noise import IidPauliNoise, depolarizing
from .oracle import oracle_check
from .pauli import Pauli, all_paulis, anticommutes, tensor
from .symplectic import preserves_symplectic_form, random_clifford
from .trellis import DEGENERATE, NONDEGENERATE, TrellisBuilder


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str


def _random_pauli(rng: np.random.Generator, n: int) -> Pauli:
    return Pauli(n, int(rng.integers(1 << n)), int(rng.integers(1 << n)))


def check_pauli_algebra(seed: int = 0) -> CheckResult:
    rng = np.random.default_rng(seed)
    for _ in range(300):
        n = int(rng.integers(1, 9))
        a, b, c = (_random_pauli(rng, n) for _ in range(3))
        if anticommutes(a * c, b) != (anticommutes(a, b) ^ anticommutes(c, b)):
            return CheckResult("pauli-algebra", False, "commutation not bilinear")
        if Pauli.from_string(str(a)) != a:
            return CheckResult("pauli-algebra", False, "parse/format round trip")
        if tensor(a, b)[:n] != a or tensor(a, b)[n:] != b:
            return CheckResult("pauli-algebra", False, "tensor/slice round trip")
        if (a * a) != Pauli.identity(n):
            return CheckResult("pauli-algebra", False, "self-inverse")
    return CheckResult("pauli-algebra", True, "300 randomized cases")


def check_symplectic(seed: int = 1) -> CheckResult:
    rng = np.random.default_rng(seed)
    for _ in range(25):
        n = int(rng.integers(1, 6))
        f = random_clifford(n, rng, depth=30)
        if not preserves_symplectic_form(f):
            return CheckResult("symplectic", False, "form not preserved")
        g = random_clifford(n, rng, depth=30)
        p = _random_pauli(rng, n)
        if f.compose(g).apply(p) != f.apply(g.apply(p)):
            return CheckResult("symplectic", False, "compose broken")
        if f.inverse().apply(f.apply(p)) != p:
            return CheckResult("symplectic", False, "inverse broken")
        q = _random_pauli(rng, n)
        if f.apply(p * q) != f.apply(p) * f.apply(q):
            return CheckResult("symplectic", False, "not linear over products")
    return CheckResult("symplectic", True, "25 random maps")


def check_generator_relations(seed: int = 2) -> CheckResult:
    rng = np.random.default_rng(seed)
    for n, k, m in ((2, 1, 1), (3, 1, 2), (4, 2, 1)):
        code = random_code(n, k, m, tau=3, seed=int(rng.integers(2**32)))
        gens = derive_generators(code)
        stabs = gens.stabilizers + gens.boundary_stabilizers
        pures = gens.pure_errors + gens.boundary_pure_errors
        for i, si in enumerate(stabs):
            for j, sj in enumerate(stabs):
                if anticommutes(si, sj):
                    return CheckResult("generators", False, "stabilizers not abelian")
            for j, tj in enumerate(pures):
                if anticommutes(si, tj) != (1 if i == j else 0):
                    return CheckResult("generators", False, "pure-error pairing broken")
            for lg in gens.logicals_x + gens.logicals_z:
                if anticommutes(si, lg):
                    return CheckResult("generators", False, "logicals hit stabilizers")
    return CheckResult("generators", True, "3 random codes, full tables")


def check_decompose_degeneracy(seed: int = 3) -> CheckResult:
    rng = np.random.default_rng(seed)
    for _ in range(10):
        code = random_code(2, 1, 1, tau=3, seed=int(rng.integers(2**32)))
        gens = derive_generators(code)
        e = _random_pauli(rng, code.block_qubits)
        base = decompose(code, e)
        for s in gens.stabilizers + gens.boundary_stabilizers:
            shifted = decompose(code, e * s)
            if (shifted.logical_labels, shifted.syndrome, shifted.boundary_bits) != (
                base.logical_labels, base.syndrome, base.boundary_bits,
            ):
                return CheckResult("decompose-degeneracy", False, "stabilizer changed output")
    return CheckResult("decompose-degeneracy", True, "10 random errors x all generators")


def check_noise(seed: int = 4) -> CheckResult:
    for noise in (depolarizing(0.08), IidPauliNoise(0.2, 0.05, 0.1)):
        for n in (1, 2, 3):
            total = sum(math.exp(-noise.log_prob(p)) for p in all_paulis(n))
            if abs(total - 1.0) > 1e-12:
                return CheckResult("noise", False, f"normalization off by {total - 1.0}")
    rng = np.random.default_rng(seed)
    noise = depolarizing(0.1)
    a = noise.sample(50, np.random.default_rng(seed))
    b = noise.sample(50, np.random.default_rng(seed))
    if a != b:
        return CheckResult("noise", False, "sampling not seed-deterministic")
    p1, p2 = _random_pauli(rng, 4), _random_pauli(rng, 6)
    if not math.isclose(
        noise.log_prob(tensor(p1, p2)),
        noise.log_prob(p1) + noise.log_prob(p2),
        rel_tol=1e-12,
    ):
        return CheckResult("noise", False, "log_prob not additive under tensor")
    return CheckResult("noise", True, "normalization, determinism, additivity")


def check_trellis(seed: int = 5) -> CheckResult:
    rng = np.random.default_rng(seed)
    for _ in range(4):
        code = random_code(2, 1, 1, tau=2, seed=int(rng.integers(2**32)))
        noise = depolarizing(0.1)
        builder = TrellisBuilder(code, noise)
        for s_t in range(1 << code.s):
            raw = builder.frame(s_t, NONDEGENERATE).edges
            merged = builder.frame(s_t, DEGENERATE).edges
            if len(raw) != (4**code.m) * (2**code.s) * (4**code.k):
                return CheckResult("trellis", False, "raw edge count wrong")
            raw_mass = sum(math.exp(-e.weight) for e in raw)
            merged_mass = sum(math.exp(-e.weight) for e in merged)
            if abs(raw_mass - merged_mass) > 1e-12:
                return CheckResult("trellis", False, "mass not conserved by merging")
    return CheckResult("trellis", True, "counts and mass conservation")


def check_decoder_oracle(seed: int = 6) -> CheckResult:
    stats = oracle_check(n=2, k=1, m=1, tau=2, trials=6, seed=seed)
    if not stats.ok:
        return CheckResult("decoder-oracle", False, "; ".join(stats.mismatches[:3]))
    return CheckResult(
        "decoder-oracle",
        True,
        f"{stats.instances} instances, class-MAP agreement "
        f"{stats.class_map_agreements}/{stats.instances}",
    )


def check_weight_dominance(seed: int = 7) -> CheckResult:
    rng = np.random.default_rng(seed)
    code = random_code(2, 1, 1, tau=8, seed=11)
    noise = depolarizing(0.12)
    decoder = Decoder(code, noise)
    for _ in range(150):
        e = noise.sample(code.block_qubits, rng)
        truth = decompose(code, e)
        deg = decoder.decode(truth.syndrome, truth.boundary_bits, DEGENERATE)
        nd = decoder.decode(truth.syndrome, truth.boundary_bits, NONDEGENERATE)
        if not deg.path_weight <= nd.path_weight:
            return CheckResult("weight-dominance", False, "degenerate weight above")
    return CheckResult("weight-dominance", True, "150 random decodes")


ALL_CHECKS: tuple[Callable[[], CheckResult], ...] = (
    check_pauli_algebra,
    check_symplectic,
    check_generator_relations,
    check_decompose_degeneracy,
    check_noise,
    check_trellis,
    check_decoder_oracle,
    check_weight_dominance,
)


def run_all() -> list[CheckResult]:
    return [check() for check in ALL_CHECKS]
