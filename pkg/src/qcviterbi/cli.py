"""Command-line entry point: gencode, decode, bench, oracle-check, selftest."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bench as bench_mod
from .code import ConvolutionalCode, load_code, random_code, save_code
from .decoder import Decoder
from .noise import IidPauliNoise, depolarizing
from .oracle import oracle_check
from .selftest import run_all
from .trellis import DEGENERATE, NONDEGENERATE


class CliError(Exception):
    """Validation failure tied to a named flag; exits with status 1."""


def _echo_config(command: str, args: argparse.Namespace) -> None:
    items = sorted(
        (k, v) for k, v in vars(args).items() if k != "func" and not k.startswith("_")
    )
    print(f"config: command={command} " + " ".join(f"{k}={v}" for k, v in items))


def _noise_from_args(args: argparse.Namespace) -> IidPauliNoise:
    if args.p is not None:
        if args.px is not None or args.py is not None or args.pz is not None:
            raise CliError("--p cannot be combined with --px/--py/--pz")
        if not 0.0 <= args.p <= 1.0 / 3.0:
            raise CliError("--p must be in [0, 1/3]")
        return depolarizing(args.p)
    if args.px is None or args.py is None or args.pz is None:
        raise CliError("need either --p or all of --px --py --pz")
    try:
        return IidPauliNoise(args.px, args.py, args.pz)
    except ValueError as exc:
        raise CliError(f"--px/--py/--pz: {exc}") from None


def _load_code_arg(args: argparse.Namespace) -> ConvolutionalCode:
    path = Path(args.code)
    if not path.exists():
        raise CliError(f"--code: file {path} does not exist")
    try:
        code = load_code(str(path))
    except ValueError as exc:
        raise CliError(f"--code: {exc}") from None
    if getattr(args, "tau", None):
        if args.tau < 1:
            raise CliError("--tau must be at least 1")
        code = code.with_tau(args.tau)
    return code


def _cmd_gencode(args: argparse.Namespace) -> int:
    _echo_config("gencode", args)
    if args.n - args.k < 1 or args.k < 1 or args.m < 1:
        raise CliError("--n/--k/--m must satisfy k >= 1, m >= 1, n - k >= 1")
    if args.seed < 0:
        raise CliError("--seed must be non-negative")
    code = random_code(
        args.n, args.k, args.m, tau=args.tau_default, seed=args.seed, depth=args.depth
    )
    save_code(code, args.out)
    print(f"wrote ({args.n},{args.k},{args.m}) code to {args.out}")
    return 0


def _parse_syndrome(args: argparse.Namespace, code: ConvolutionalCode) -> tuple[tuple[int, ...], int]:
    if args.syndrome == "zeros":
        return tuple(0 for _ in range(code.tau)), 0
    path = Path(args.syndrome)
    if not path.exists():
        raise CliError(f"--syndrome: file {path} does not exist")
    lines = [ln.strip() for ln in path.read_text().splitlines() if ln.strip()]
    if len(lines) != code.tau + 1:
        raise CliError(
            f"--syndrome: expected tau = {code.tau} syndrome lines plus one boundary line"
        )
    try:
        syndrome = tuple(_bits_to_int(ln, code.s) for ln in lines[: code.tau])
        boundary = _bits_to_int(lines[code.tau], code.m)
    except ValueError as exc:
        raise CliError(f"--syndrome: {exc}") from None
    return syndrome, boundary


def _bits_to_int(line: str, width: int) -> int:
    if len(line) != width or any(ch not in "01" for ch in line):
        raise ValueError(f"expected {width} bits, got {line!r}")
    return sum(1 << a for a, ch in enumerate(line) if ch == "1")


def _cmd_decode(args: argparse.Namespace) -> int:
    _echo_config("decode", args)
    code = _load_code_arg(args)
    noise = _noise_from_args(args)
    syndrome, boundary = _parse_syndrome(args, code)
    decoder = Decoder(code, noise)
    modes = [DEGENERATE, NONDEGENERATE] if args.mode == "both" else [args.mode]
    for mode in modes:
        if args.dump_trellis:
            for line in decoder.builder.build(syndrome, mode).dump_lines():
                print(f"{mode} edge {line}")
        outcome = decoder.decode(syndrome, boundary, mode)
        labels = " ".join(str(lab) for lab in outcome.logical_labels)
        print(f"{mode} labels: {labels}")
        print(f"{mode} path weight: {outcome.path_weight!r}")
        if outcome.physical_error is not None:
            print(f"{mode} physical error: {outcome.physical_error}")
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    _echo_config("bench", args)
    code = _load_code_arg(args)
    if args.min_failures < 1:
        raise CliError("--min-failures must be at least 1")
    if args.max_trials < 1:
        raise CliError("--max-trials must be at least 1")
    if args.workers < 1:
        raise CliError("--workers must be at least 1")
    for p in args.p_list:
        if not 0.0 < p <= 1.0 / 3.0:
            raise CliError(f"--p-list: rate {p} outside (0, 1/3]")
    points = bench_mod.run_sweep(
        [(Path(args.code).stem, code)],
        args.tau or code.tau,
        args.p_list,
        min_failures=args.min_failures,
        max_trials=args.max_trials,
        seed=args.seed,
        workers=args.workers,
        progress=True,
    )
    bench_mod.write_csv(points, args.out)
    print(f"wrote {len(points)} points to {args.out}")
    if args.plot:
        bench_mod.plot_points(points, args.plot)
        print(f"wrote plot to {args.plot}")
    return 0


def _cmd_oracle_check(args: argparse.Namespace) -> int:
    _echo_config("oracle-check", args)
    if args.trials < 1:
        raise CliError("--trials must be at least 1")
    try:
        stats = oracle_check(
            args.n, args.k, args.m, args.tau, args.trials, args.seed, cap=args.cap
        )
    except ValueError as exc:
        raise CliError(str(exc)) from None
    print(
        f"instances={stats.instances} merged_matches={stats.merged_matches} "
        f"single_error_matches={stats.nondeg_matches} "
        f"class_map_agreements={stats.class_map_agreements}"
    )
    for line in stats.mismatches:
        print(f"MISMATCH {line}")
    return 0 if stats.ok else 1


def _cmd_selftest(args: argparse.Namespace) -> int:
    _echo_config("selftest", args)
    results = run_all()
    for res in results:
        print(f"selftest {res.name}: {'ok' if res.ok else 'FAIL'} ({res.detail})")
    return 0 if all(res.ok for res in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcviterbi",
        description=(
            "Degenerate and non-degenerate Viterbi decoding of circuit-defined "
            "quantum convolutional codes under i.i.d. Pauli noise."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gencode", help="generate a random code file")
    gen.add_argument("--n", type=int, required=True, help="qubits per frame")
    gen.add_argument("--k", type=int, required=True, help="data qubits per frame")
    gen.add_argument("--m", type=int, required=True, help="memory qubits")
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--depth", type=int, default=None, help="gate count of the seed circuit")
    gen.add_argument("--tau-default", type=int, default=600)
    gen.add_argument("--out", required=True)
    gen.set_defaults(func=_cmd_gencode)

    dec = sub.add_parser("decode", help="decode one syndrome from a file")
    dec.add_argument("--code", required=True)
    dec.add_argument("--tau", type=int, default=None)
    dec.add_argument("--p", type=float, default=None, help="depolarizing rate")
    dec.add_argument("--px", type=float, default=None)
    dec.add_argument("--py", type=float, default=None)
    dec.add_argument("--pz", type=float, default=None)
    dec.add_argument(
        "--syndrome",
        required=True,
        help="'zeros' or a file with tau lines of s bits plus one line of m boundary bits",
    )
    dec.add_argument(
        "--mode", choices=[DEGENERATE, NONDEGENERATE, "both"], default="both"
    )
    dec.add_argument("--dump-trellis", action="store_true")
    dec.set_defaults(func=_cmd_decode)

    ben = sub.add_parser("bench", help="Monte Carlo block-error-rate sweep")
    ben.add_argument("--code", required=True)
    ben.add_argument("--tau", type=int, default=None)
    ben.add_argument("--p-list", type=float, nargs="+", required=True)
    ben.add_argument("--min-failures", type=int, default=30)
    ben.add_argument("--max-trials", type=int, required=True)
    ben.add_argument("--seed", type=int, required=True)
    ben.add_argument("--workers", type=int, default=1)
    ben.add_argument("--out", required=True)
    ben.add_argument("--plot", default=None, help="optional SVG output path")
    ben.set_defaults(func=_cmd_bench)

    orc = sub.add_parser("oracle-check", help="decoders vs. brute-force oracle")
    orc.add_argument("--n", type=int, required=True)
    orc.add_argument("--k", type=int, required=True)
    orc.add_argument("--m", type=int, required=True)
    orc.add_argument("--tau", type=int, required=True)
    orc.add_argument("--trials", type=int, required=True)
    orc.add_argument("--seed", type=int, required=True)
    orc.add_argument("--cap", type=int, default=1 << 24)
    orc.set_defaults(func=_cmd_oracle_check)

    st = sub.add_parser("selftest", help="run the invariant suites")
    st.set_defaults(func=_cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # usage errors exit with status 2
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
