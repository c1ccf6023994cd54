"""Monte Carlo block-error-rate benchmark for the two decoders.

Per trial: sample an error on the whole block, un-encode it to get the true
label sequence plus the syndrome and boundary bits, run both decoders on
that same input, and count a failure for a decoder whenever its label
sequence differs from the truth -- i.e. success means landing anywhere in
the right equivalence class, for both decoders.  A point keeps sampling
until both failure counters reach ``min_failures`` (at 30, the relative
error of a rate is at most 1/sqrt(30)) or ``max_trials`` is hit, in which
case the point is flagged unresolved rather than dropped.

Trial i draws from an rng stream derived from (seed, i), and the stopping
trial is decided by scanning results in trial order, so the output is
byte-identical for any worker count.
"""

from __future__ import annotations

import csv
import math
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .code import ConvolutionalCode, decompose
from .decoder import Decoder
from .noise import depolarizing
from .trellis import DEGENERATE, NONDEGENERATE

_CHUNK = 64  # trials per dispatched task; fixed so results never depend on workers

CSV_COLUMNS = (
    "code_id,n,k,m,tau,p,seed,trials,failures_deg,failures_nondeg,"
    "ber_deg,ber_nondeg,ratio,ratio_db,resolved"
)


@dataclass(frozen=True)
class BenchPoint:
    code_id: str
    n: int
    k: int
    m: int
    tau: int
    p: float
    seed: int
    trials: int
    failures_deg: int
    failures_nondeg: int
    resolved: bool

    @property
    def ber_deg(self) -> float:
        return self.failures_deg / self.trials

    @property
    def ber_nondeg(self) -> float:
        return self.failures_nondeg / self.trials

    @property
    def stderr_deg(self) -> float:
        return math.sqrt(self.ber_deg * (1.0 - self.ber_deg) / self.trials)

    @property
    def stderr_nondeg(self) -> float:
        return math.sqrt(self.ber_nondeg * (1.0 - self.ber_nondeg) / self.trials)

    @property
    def ratio(self) -> float:
        if self.failures_deg == 0:
            return math.nan
        return self.ber_nondeg / self.ber_deg

    @property
    def ratio_db(self) -> float:
        r = self.ratio
        if math.isnan(r):
            return math.nan
        if r == 0.0:
            return -math.inf
        return 10.0 * math.log10(r)

    def csv_row(self) -> list[str]:
        return [
            self.code_id,
            str(self.n),
            str(self.k),
            str(self.m),
            str(self.tau),
            repr(self.p),
            str(self.seed),
            str(self.trials),
            str(self.failures_deg),
            str(self.failures_nondeg),
            repr(self.ber_deg),
            repr(self.ber_nondeg),
            repr(self.ratio),
            repr(self.ratio_db),
            "true" if self.resolved else "false",
        ]


_WORKER: dict = {}


def _init_worker(code: ConvolutionalCode, p: float, seed: int) -> None:
    _WORKER["code"] = code
    _WORKER["decoder"] = Decoder(code, depolarizing(p))
    _WORKER["seed"] = seed


def _run_trial(decoder: Decoder, code: ConvolutionalCode, seed: int, index: int) -> tuple[bool, bool]:
    rng = np.random.default_rng([seed, index])
    error = decoder.noise.sample(code.block_qubits, rng)
    truth = decompose(code, error)
    deg = decoder.decode(truth.syndrome, truth.boundary_bits, DEGENERATE)
    nd = decoder.decode(truth.syndrome, truth.boundary_bits, NONDEGENERATE)
    return (
        deg.logical_labels != truth.logical_labels,
        nd.logical_labels != truth.logical_labels,
    )


def _run_chunk(start: int, size: int) -> list[tuple[bool, bool]]:
    code = _WORKER["code"]
    decoder = _WORKER["decoder"]
    seed = _WORKER["seed"]
    return [_run_trial(decoder, code, seed, i) for i in range(start, start + size)]


def run_point(
    code: ConvolutionalCode,
    tau: int,
    p: float,
    *,
    min_failures: int = 30,
    max_trials: int,
    seed: int,
    workers: int = 1,
    code_id: str = "code",
) -> BenchPoint:
    """Estimate both block error rates at one depolarizing rate."""
    if max_trials < 1:
        raise ValueError("max_trials must be at least 1")
    if p < 0.0 or p > 1.0 / 3.0 + 1e-15:
        raise ValueError("p must satisfy 0 <= p <= 1/3")
    code = code.with_tau(tau)

    fails_deg = fails_nd = 0
    trials = 0

    def scan(results: Iterable[tuple[bool, bool]]) -> bool:
        nonlocal fails_deg, fails_nd, trials
        for fail_deg, fail_nd in results:
            trials += 1
            fails_deg += fail_deg
            fails_nd += fail_nd
            done = (fails_deg >= min_failures and fails_nd >= min_failures) or (
                trials >= max_trials
            )
            if done:
                return True
        return False

    if workers <= 1:
        decoder = Decoder(code, depolarizing(p))
        for i in range(max_trials):
            if scan([_run_trial(decoder, code, seed, i)]):
                break
    else:
        with ProcessPoolExecutor(
            max_workers=workers, initializer=_init_worker, initargs=(code, p, seed)
        ) as pool:
            pending: deque = deque()
            next_start = 0
            done = False
            while not done and (pending or next_start < max_trials):
                while len(pending) < workers + 2 and next_start < max_trials:
                    size = min(_CHUNK, max_trials - next_start)
                    pending.append(pool.submit(_run_chunk, next_start, size))
                    next_start += size
                done = scan(pending.popleft().result())
            for fut in pending:
                fut.cancel()

    return BenchPoint(
        code_id=code_id,
        n=code.n,
        k=code.k,
        m=code.m,
        tau=tau,
        p=p,
        seed=seed,
        trials=trials,
        failures_deg=fails_deg,
        failures_nondeg=fails_nd,
        resolved=fails_deg >= min_failures and fails_nd >= min_failures,
    )


def run_sweep(
    codes: Sequence[tuple[str, ConvolutionalCode]],
    tau: int,
    p_grid: Sequence[float],
    *,
    min_failures: int = 30,
    max_trials: int,
    seed: int,
    workers: int = 1,
    progress: bool = False,
) -> list[BenchPoint]:
    """Cartesian sweep; point index offsets the master seed (documented in README)."""
    if not codes or not p_grid:
        raise ValueError("need at least one code and one rate")
    points = []
    for ci, (code_id, code) in enumerate(codes):
        for pi, p in enumerate(p_grid):
            point = run_point(
                code,
                tau,
                p,
                min_failures=min_failures,
                max_trials=max_trials,
                seed=seed + ci * len(p_grid) + pi,
                workers=workers,
                code_id=code_id,
            )
            points.append(point)
            if progress:
                print(
                    f"{code_id} p={p}: trials={point.trials} "
                    f"ber_deg={point.ber_deg:.4g} ber_nondeg={point.ber_nondeg:.4g} "
                    f"ratio={point.ratio:.3g}"
                    + ("" if point.resolved else " [unresolved]")
                )
    return points


def write_csv(points: Sequence[BenchPoint], path: str) -> None:
    with open(path, "w", encoding="ascii", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_COLUMNS.split(","))
        for point in points:
            writer.writerow(point.csv_row())


def plot_points(points: Sequence[BenchPoint], path: str) -> None:
    """Log-log block error rates vs p, with the rate ratio as an inset."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(7.0, 5.0))
    by_code: dict[str, list[BenchPoint]] = {}
    for point in points:
        by_code.setdefault(point.code_id, []).append(point)
    for code_id, pts in by_code.items():
        pts = sorted(pts, key=lambda q: q.p)
        ps = [q.p for q in pts]
        ax.loglog(ps, [q.ber_deg for q in pts], "o-", label=f"{code_id} degenerate")
        ax.loglog(
            ps, [q.ber_nondeg for q in pts], "s--", label=f"{code_id} non-degenerate"
        )
    ax.set_xlabel("depolarizing rate p")
    ax.set_ylabel("block error rate")
    ax.legend(fontsize=8)
    ax.grid(True, which="both", alpha=0.3)

    inset = ax.inset_axes([0.55, 0.12, 0.4, 0.32])
    for code_id, pts in by_code.items():
        pts = sorted(pts, key=lambda q: q.p)
        inset.plot(
            [q.p for q in pts],
            [q.ratio for q in pts],
            "^-",
            label=code_id,
        )
    inset.axhline(1.0, color="gray", lw=0.8)
    inset.set_xlabel("p", fontsize=8)
    inset.set_ylabel("rate ratio", fontsize=8)
    inset.tick_params(labelsize=7)

    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
