import math

import numpy as np
import pytest

from qcviterbi.noise import IidPauliNoise, depolarizing
from qcviterbi.pauli import Pauli, all_paulis, tensor


def test_depolarizing_noiseless():
    noise = depolarizing(0.0)
    assert noise.p_i == 1.0
    assert noise.log_prob(Pauli.identity(5)) == 0.0


def test_depolarizing_rate_convention():
    # rate p is the per-component probability, so p_I = 1 - 3p
    noise = depolarizing(0.1)
    assert math.isclose(noise.p_i, 0.7, rel_tol=1e-15)
    assert noise.p_x == noise.p_y == noise.p_z == 0.1


def test_depolarizing_rejects_above_third():
    with pytest.raises(ValueError):
        depolarizing(0.34)


def test_noise_validation():
    with pytest.raises(ValueError):
        IidPauliNoise(-0.1, 0.0, 0.0)
    with pytest.raises(ValueError):
        IidPauliNoise(0.5, 0.4, 0.3)


def test_log_prob_identity():
    noise = depolarizing(0.05)
    n = 7
    assert math.isclose(
        noise.log_prob(Pauli.identity(n)), -n * math.log(1 - 0.15), rel_tol=1e-14
    )


def test_log_prob_single_x():
    # independent evaluation of -ln(p_x * p_I) at p = 0.1
    noise = depolarizing(0.1)
    expected = 2.659260036932778  # -ln(0.1 * 0.7)
    assert math.isclose(
        noise.log_prob(Pauli.from_string("XI")), expected, rel_tol=1e-12
    )


def test_log_prob_impossible_event():
    assert depolarizing(0.0).log_prob(Pauli.from_string("X")) == math.inf
    assert IidPauliNoise(0.1, 0.0, 0.1).log_prob(Pauli.from_string("Y")) == math.inf


@pytest.mark.parametrize(
    "noise",
    [depolarizing(0.1), depolarizing(1 / 3), IidPauliNoise(0.25, 0.0, 0.1)],
)
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_normalization(noise, n):
    total = sum(math.exp(-noise.log_prob(p)) for p in all_paulis(n))
    assert abs(total - 1.0) <= 1e-12


def test_log_prob_additive_under_tensor():
    rng = np.random.default_rng(0)
    noise = IidPauliNoise(0.1, 0.05, 0.2)
    for _ in range(50):
        na, nb = int(rng.integers(1, 7)), int(rng.integers(1, 7))
        a = Pauli(na, int(rng.integers(1 << na)), int(rng.integers(1 << na)))
        b = Pauli(nb, int(rng.integers(1 << nb)), int(rng.integers(1 << nb)))
        assert math.isclose(
            noise.log_prob(tensor(a, b)),
            noise.log_prob(a) + noise.log_prob(b),
            rel_tol=1e-12,
        )


def test_sample_noiseless_is_identity():
    assert depolarizing(0.0).sample(5, np.random.default_rng(0)) == Pauli.identity(5)


def test_sample_deterministic_given_seed():
    noise = depolarizing(0.1)
    a = noise.sample(200, np.random.default_rng(123))
    b = noise.sample(200, np.random.default_rng(123))
    assert a == b


def test_sample_x_frequency():
    # law of large numbers: 3 sigma band is 0.003 wide at 1e5 draws
    noise = depolarizing(0.1)
    draws = 100_000
    p = noise.sample(draws, np.random.default_rng(77))
    x_only = (p.x & ~p.z).bit_count()
    assert abs(x_only / draws - 0.1) <= 0.003


def test_sample_all_components_at_expected_rates():
    noise = IidPauliNoise(0.05, 0.1, 0.15)
    draws = 100_000
    p = noise.sample(draws, np.random.default_rng(5))
    n_y = (p.x & p.z).bit_count()
    n_x = p.x.bit_count() - n_y
    n_z = p.z.bit_count() - n_y
    assert abs(n_x / draws - 0.05) < 0.003
    assert abs(n_y / draws - 0.10) < 0.004
    assert abs(n_z / draws - 0.15) < 0.004
