import itertools

import numpy as np
import pytest

from qcviterbi.pauli import Pauli, anticommutes
from qcviterbi.symplectic import (
    SymplecticMap,
    cnot,
    gates_to_map,
    hadamard,
    phase,
    preserves_symplectic_form,
    random_clifford,
)

X = Pauli.from_string("X")
Y = Pauli.from_string("Y")
Z = Pauli.from_string("Z")


def random_pauli(rng, n):
    return Pauli(n, int(rng.integers(1 << n)), int(rng.integers(1 << n)))


def test_hadamard_action():
    h = hadamard(1, 0)
    assert h.apply(X) == Z
    assert h.apply(Z) == X
    assert h.apply(Y) == Y


def test_phase_action():
    r = phase(1, 0)
    assert r.apply(X) == Y
    assert r.apply(Z) == Z


def test_cnot_action():
    c = cnot(2, 0, 1)
    assert c.apply(Pauli.from_string("XI")) == Pauli.from_string("XX")
    assert c.apply(Pauli.from_string("ZI")) == Pauli.from_string("ZI")
    assert c.apply(Pauli.from_string("IZ")) == Pauli.from_string("ZZ")
    assert c.apply(Pauli.from_string("IX")) == Pauli.from_string("IX")


def test_identity_apply():
    rng = np.random.default_rng(0)
    f = SymplecticMap.identity(4)
    for _ in range(20):
        p = random_pauli(rng, 4)
        assert f.apply(p) == p


def test_apply_size_mismatch():
    with pytest.raises(ValueError):
        hadamard(1, 0).apply(Pauli.from_string("XX"))


def test_inverse_and_compose():
    rng = np.random.default_rng(1)
    for _ in range(20):
        n = int(rng.integers(1, 6))
        f = random_clifford(n, rng, depth=25)
        g = random_clifford(n, rng, depth=25)
        p = random_pauli(rng, n)
        assert f.compose(f.inverse()) == SymplecticMap.identity(n)
        assert f.compose(g).apply(p) == f.apply(g.apply(p))
        assert f.inverse().apply(f.apply(p)) == p


def test_hadamard_self_inverse_cnot_involution():
    h = hadamard(3, 1)
    assert h.inverse() == h
    c = cnot(2, 0, 1)
    assert c.compose(c) == SymplecticMap.identity(2)


def test_apply_distributes_over_multiply():
    rng = np.random.default_rng(2)
    for _ in range(40):
        n = int(rng.integers(1, 6))
        f = random_clifford(n, rng, depth=20)
        a, b = random_pauli(rng, n), random_pauli(rng, n)
        assert f.apply(a * b) == f.apply(a) * f.apply(b)


def test_random_clifford_preserves_form():
    rng = np.random.default_rng(3)
    for _ in range(20):
        n = int(rng.integers(1, 7))
        assert preserves_symplectic_form(random_clifford(n, rng, depth=40))


def test_random_clifford_depth_zero_is_identity():
    f = random_clifford(2, np.random.default_rng(42), depth=0)
    assert f == SymplecticMap.identity(2)


def test_random_clifford_deterministic():
    a = random_clifford(3, np.random.default_rng(9), depth=30)
    b = random_clifford(3, np.random.default_rng(9), depth=30)
    assert a == b


def _single_qubit_symplectic_group():
    """Brute-force the order-6 group of valid 1-qubit maps."""
    nonidentity = [Pauli.from_string(s) for s in ("X", "Y", "Z")]
    maps = set()
    for img_x, img_z in itertools.product(nonidentity, repeat=2):
        if anticommutes(img_x, img_z) == 1:
            maps.add(SymplecticMap(1, (img_x,), (img_z,)))
    return maps


def test_single_qubit_group_fully_reached():
    group = _single_qubit_symplectic_group()
    assert len(group) == 6
    seen = set()
    for seed in range(120):
        seen.add(random_clifford(1, np.random.default_rng(seed), depth=6))
    assert seen == group


def test_matrix_round_trip():
    rng = np.random.default_rng(4)
    for _ in range(10):
        n = int(rng.integers(1, 5))
        f = random_clifford(n, rng, depth=30)
        assert SymplecticMap.from_matrix(f.to_matrix()) == f


def test_from_matrix_rejects_non_symplectic():
    bad = np.eye(4, dtype=np.uint8)
    bad[0, 0] = 0  # singular
    with pytest.raises(ValueError):
        SymplecticMap.from_matrix(bad)


def test_gates_to_map_matches_manual_composition():
    gates = [("hadamard", 0), ("cnot", 0, 1), ("phase", 1)]
    f = gates_to_map(2, gates)
    manual = phase(2, 1).compose(cnot(2, 0, 1)).compose(hadamard(2, 0))
    assert f == manual


def test_cnot_wire_validation():
    with pytest.raises(ValueError):
        cnot(2, 1, 1)
    with pytest.raises(ValueError):
        hadamard(2, 5)
