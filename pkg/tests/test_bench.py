import math

import pytest

from qcviterbi.bench import BenchPoint, run_point, run_sweep, write_csv
from qcviterbi.code import random_code


def test_noiseless_point_has_zero_failures():
    # p = 0 is below the CLI's validity range but allowed here by design
    code = random_code(2, 1, 1, tau=4, seed=0)
    point = run_point(code, 4, 0.0, min_failures=5, max_trials=20, seed=1)
    assert point.failures_deg == 0
    assert point.failures_nondeg == 0
    assert point.trials == 20
    assert not point.resolved
    assert math.isnan(point.ratio)


def test_point_counts_and_rates():
    code = random_code(2, 1, 1, tau=8, seed=7)
    point = run_point(code, 8, 0.12, min_failures=10, max_trials=5000, seed=3)
    assert point.resolved
    assert point.failures_deg >= 10 and point.failures_nondeg >= 10
    assert point.failures_deg <= point.trials
    assert 0.0 <= point.ber_deg <= 1.0
    assert point.ber_deg <= point.ber_nondeg + 1e-12  # paired trials
    # relative error bound from the stopping rule
    assert point.stderr_deg / point.ber_deg <= 1.0 / math.sqrt(10) + 1e-9


def test_workers_do_not_change_results():
    code = random_code(2, 1, 1, tau=6, seed=9)
    kwargs = dict(min_failures=6, max_trials=400, seed=11)
    serial = run_point(code, 6, 0.1, workers=1, **kwargs)
    parallel = run_point(code, 6, 0.1, workers=2, **kwargs)
    assert serial == parallel


def test_sweep_rows_and_csv(tmp_path):
    code_a = random_code(2, 1, 1, tau=5, seed=1)
    code_b = random_code(2, 1, 1, tau=5, seed=2)
    points = run_sweep(
        [("a", code_a), ("b", code_b)],
        5,
        [0.08, 0.12],
        min_failures=3,
        max_trials=150,
        seed=5,
    )
    assert len(points) == 4  # |codes| x |p_grid|
    out = tmp_path / "points.csv"
    write_csv(points, str(out))
    lines = out.read_text().splitlines()
    assert len(lines) == 5
    assert lines[0].startswith("code_id,n,k,m,tau,p,seed,")
    assert lines[1].split(",")[0] == "a"
    # distinct per-point seeds, derived from the master seed
    assert [ln.split(",")[6] for ln in lines[1:]] == ["5", "6", "7", "8"]


def test_csv_reproducible_bytes(tmp_path):
    code = random_code(2, 1, 1, tau=5, seed=4)
    out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
    for out, workers in ((out1, 1), (out2, 2)):
        points = run_sweep(
            [("c", code)],
            5,
            [0.1],
            min_failures=4,
            max_trials=200,
            seed=17,
            workers=workers,
        )
        write_csv(points, str(out))
    assert out1.read_bytes() == out2.read_bytes()


def test_ratio_fields():
    point = BenchPoint(
        code_id="c", n=2, k=1, m=1, tau=3, p=0.1, seed=0,
        trials=100, failures_deg=10, failures_nondeg=20, resolved=True,
    )
    assert math.isclose(point.ratio, 2.0)
    assert math.isclose(point.ratio_db, 10 * math.log10(2.0))
    zero_nd = BenchPoint(
        code_id="c", n=2, k=1, m=1, tau=3, p=0.1, seed=0,
        trials=100, failures_deg=10, failures_nondeg=0, resolved=False,
    )
    assert zero_nd.ratio == 0.0
    assert zero_nd.ratio_db == -math.inf


def test_run_point_validation():
    code = random_code(2, 1, 1, tau=3, seed=0)
    with pytest.raises(ValueError):
        run_point(code, 3, 0.5, min_failures=1, max_trials=10, seed=0)
    with pytest.raises(ValueError):
        run_point(code, 3, 0.1, min_failures=1, max_trials=0, seed=0)


@pytest.mark.slow
def test_lower_rate_code_has_lower_block_error_rate():
    # rate-1/5 code vs rate-1/4 code at the same physical rate; trend check
    code_411 = random_code(4, 1, 1, tau=60, seed=2)
    code_513 = random_code(5, 1, 3, tau=60, seed=2)
    p = 0.08
    point_411 = run_point(
        code_411, 60, p, min_failures=40, max_trials=4000, seed=31, code_id="411"
    )
    point_513 = run_point(
        code_513, 60, p, min_failures=40, max_trials=4000, seed=31, code_id="513"
    )
    assert point_411.failures_deg >= 40
    assert point_513.ber_deg < point_411.ber_deg
