import itertools
import math

import numpy as np
import pytest

from qcviterbi.code import decompose, random_code
from qcviterbi.decoder import Decoder
from qcviterbi.noise import IidPauliNoise, depolarizing
from qcviterbi.oracle import (
    OracleCapExceeded,
    enumerate_coset,
    exhaustive_path_optimum,
    oracle_check,
)
from qcviterbi.pauli import Pauli
from qcviterbi.trellis import DEGENERATE, NONDEGENERATE, TrellisBuilder


def test_class_table_partitions_coset_mass():
    code = random_code(2, 1, 1, tau=2, seed=1)
    noise = depolarizing(0.1)
    report = enumerate_coset(code, noise, (1, 0), 1)
    assert math.isclose(
        sum(report.class_table.values()), report.coset_mass, rel_tol=1e-10
    )
    # direct coset-size formula: 4^N / 2^(s*tau + m)
    assert report.coset_size == 4**code.block_qubits // 2 ** (
        code.s * code.tau + code.m
    )
    assert len(report.class_table) == 4 ** (code.k * code.tau)


def test_zero_syndrome_best_class_is_identity():
    code = random_code(2, 1, 1, tau=1, seed=3)
    report = enumerate_coset(code, depolarizing(0.02), (0,), 0)
    assert all(lab.is_identity() for lab in report.best_class_labels)


def test_best_single_probability_matches_weight():
    code = random_code(2, 1, 1, tau=2, seed=5)
    noise = depolarizing(0.12)
    decoder = Decoder(code, noise)
    for syndrome in itertools.product(range(2), repeat=2):
        for boundary in range(2):
            report = enumerate_coset(code, noise, syndrome, boundary)
            nd = decoder.decode(syndrome, boundary, NONDEGENERATE)
            assert math.isclose(
                report.best_single_probability,
                math.exp(-nd.path_weight),
                rel_tol=1e-10,
            )
            # the best single error really is a max of directly-evaluated P(E)
            assert math.isclose(
                report.best_single_probability,
                math.exp(-noise.log_prob(report.best_single_error)),
                rel_tol=1e-10,
            )


def test_class_mass_at_least_merged_path_mass():
    # a class sums over all memory traces, a path over just one
    code = random_code(3, 1, 1, tau=2, seed=8)
    noise = IidPauliNoise(0.09, 0.03, 0.06)
    for syndrome in itertools.product(range(4), repeat=2):
        report = enumerate_coset(code, noise, syndrome, 0)
        assert report.best_class_mass >= math.exp(-report.best_path_weight) * (1 - 1e-12)
        merged_labels_mass = report.class_table[report.best_path_labels]
        assert merged_labels_mass >= math.exp(-report.best_path_weight) * (1 - 1e-12)


def test_trace_groups_explain_path_weights():
    # mass of the (memory trace, labels) group == exp(-path weight), exactly
    # the quantity the merged trellis optimizes
    code = random_code(2, 1, 1, tau=3, seed=13)
    noise = depolarizing(0.11)
    rng = np.random.default_rng(2)
    e = noise.sample(code.block_qubits, rng)
    truth = decompose(code, e)
    report = enumerate_coset(
        code, noise, truth.syndrome, truth.boundary_bits, collect_trace_groups=True
    )
    group_key = (
        tuple(mt.encoding() for mt in report.best_path_memory),
        tuple(lab.encoding() for lab in report.best_path_labels),
    )
    assert math.isclose(
        report.trace_groups[group_key], math.exp(-report.best_path_weight), rel_tol=1e-9
    )
    assert math.isclose(
        max(report.trace_groups.values()),
        math.exp(-report.best_path_weight),
        rel_tol=1e-9,
    )


def test_exhaustive_path_optimum_on_nondegenerate_trellis():
    # exhaustive search over the raw trellis equals the non-degenerate decoder
    code = random_code(2, 1, 1, tau=2, seed=21)
    noise = depolarizing(0.07)
    decoder = Decoder(code, noise)
    builder = TrellisBuilder(code, noise)
    for syndrome in itertools.product(range(2), repeat=2):
        for boundary in range(2):
            labels, weight, memory = exhaustive_path_optimum(
                builder.build(syndrome, NONDEGENERATE), noise, boundary
            )
            nd = decoder.decode(syndrome, boundary, NONDEGENERATE)
            assert weight == nd.path_weight
            assert memory == nd.memory_path
            # labels of the raw trellis are the frame errors
            assert all(
                code.frame_segment(nd.physical_error, t + 1) == lab
                for t, lab in enumerate(labels)
            )


def test_cap_refusal():
    code = random_code(2, 1, 1, tau=3, seed=2)
    with pytest.raises(OracleCapExceeded):
        enumerate_coset(code, depolarizing(0.1), (0, 0, 0), 0, cap=100)


def test_oracle_check_clean_run():
    stats = oracle_check(n=2, k=1, m=1, tau=2, trials=8, seed=123)
    assert stats.ok
    assert stats.instances == 8
    assert stats.mismatches == []
    assert 0 <= stats.class_map_agreements <= 8
