import numpy as np
import pytest

from qcviterbi.pauli import Pauli, all_paulis, anticommutes, tensor

X = Pauli.from_string("X")
Y = Pauli.from_string("Y")
Z = Pauli.from_string("Z")
I = Pauli.from_string("I")


def random_pauli(rng, n):
    return Pauli(n, int(rng.integers(1 << n)), int(rng.integers(1 << n)))


def test_multiply_x_z_gives_y():
    assert X * Z == Y


def test_multiply_self_inverse():
    rng = np.random.default_rng(0)
    for _ in range(50):
        p = random_pauli(rng, int(rng.integers(1, 10)))
        assert p * p == Pauli.identity(p.num_qubits)


def test_multiply_disjoint_supports():
    assert Pauli.from_string("XI") * Pauli.from_string("IZ") == Pauli.from_string("XZ")


def test_multiply_size_mismatch():
    with pytest.raises(ValueError):
        X * Pauli.from_string("XX")


def test_anticommutes_examples():
    assert anticommutes(X, Z) == 1
    assert anticommutes(Pauli.from_string("XX"), Pauli.from_string("ZZ")) == 0
    rng = np.random.default_rng(1)
    for _ in range(30):
        p = random_pauli(rng, 5)
        assert anticommutes(p, p) == 0


def test_anticommutes_size_mismatch():
    with pytest.raises(ValueError):
        anticommutes(X, Pauli.from_string("XX"))


def test_commutation_bilinear():
    rng = np.random.default_rng(2)
    for _ in range(200):
        n = int(rng.integers(1, 8))
        a, b, c = (random_pauli(rng, n) for _ in range(3))
        assert anticommutes(a * c, b) == anticommutes(a, b) ^ anticommutes(c, b)


def test_tensor_and_slice():
    assert str(tensor(X, Z)) == "XZ"
    p = Pauli.from_string("XZY")
    assert str(p[1:3]) == "ZY"
    assert str(p[0]) == "X"


def test_tensor_slice_round_trip():
    rng = np.random.default_rng(3)
    for _ in range(50):
        na, nb = int(rng.integers(1, 6)), int(rng.integers(1, 6))
        a, b = random_pauli(rng, na), random_pauli(rng, nb)
        t = tensor(a, b)
        assert t[:na] == a
        assert t[na:] == b


def test_slice_out_of_range():
    p = Pauli.from_string("XZY")
    with pytest.raises(IndexError):
        p[5]
    with pytest.raises(IndexError):
        p[::2]


def test_weight():
    assert Pauli.from_string("XIYI").weight() == 2
    assert Pauli.identity(4).weight() == 0


def test_parse_format_round_trip():
    rng = np.random.default_rng(4)
    for _ in range(100):
        p = random_pauli(rng, int(rng.integers(1, 12)))
        assert Pauli.from_string(str(p)) == p


def test_parse_invalid_character():
    with pytest.raises(ValueError):
        Pauli.from_string("XQZ")


def test_canonical_encoding():
    # interleaved (x, z) pairs, qubit 0 least significant
    assert Pauli.from_string("X").encoding() == 1
    assert Pauli.from_string("Z").encoding() == 2
    assert Pauli.from_string("Y").encoding() == 3
    assert Pauli.from_string("XI").encoding() == 1
    assert Pauli.from_string("IX").encoding() == 4
    rng = np.random.default_rng(5)
    for _ in range(60):
        p = random_pauli(rng, int(rng.integers(1, 9)))
        assert Pauli.from_encoding(p.num_qubits, p.encoding()) == p


def test_all_paulis_order_and_count():
    seen = list(all_paulis(2))
    assert len(seen) == 16
    assert len(set(seen)) == 16
    assert [p.encoding() for p in seen] == list(range(16))


def test_mask_validation():
    with pytest.raises(ValueError):
        Pauli(1, 2, 0)
