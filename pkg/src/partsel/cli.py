"""Command line interface.

Subcommands:

* ``run``          -- timed selection trials, CSV to stdout or --out
* ``verify-exact`` -- exhaustive small-n checks of the swap-count formulas
* ``verify-mc``    -- Monte Carlo z-test of the sampled-pivot formulas
* ``analyze``      -- print exact expectations for a given (n, s, p)
* ``gen``          -- emit one input sequence

Options may also be supplied through ``--config FILE`` holding
``key = value`` lines (command line flags win).  Exit status is 0 on
success and 1 when a verification fails.
"""

from __future__ import annotations

import argparse
import sys

from .analysis import (
    expected_swaps_given_rank,
    expected_swaps_sampled,
    max_expected_swaps,
    rank_moments,
    swap_rate_bound,
)
from .bench import (
    MCReport,
    TrialConfig,
    emit_csv,
    run_trials,
    scheme_by_name,
    verify_exhaustive,
    verify_montecarlo,
)
from .bipartition import BinarySchemeId, SamplePlan
from .pivot import PivotRule
from .seqgen import SequenceKind, generate

_SEQUENCES = {k.value: k for k in SequenceKind}
_PIVOTS = {p.value: p for p in PivotRule}


def _load_config(path: str) -> dict[str, str]:
    out: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise SystemExit(f"{path}:{line_no}: expected key = value")
            key, value = line.split("=", 1)
            out[key.strip().replace("-", "_")] = value.strip()
    return out


def _apply_config(args: argparse.Namespace) -> None:
    if not getattr(args, "config", None):
        return
    for key, value in _load_config(args.config).items():
        if getattr(args, key, None) is None:
            setattr(args, key, value)


def _require(args: argparse.Namespace, *names: str) -> None:
    for name in names:
        if getattr(args, name) is None:
            raise SystemExit(f"missing required option --{name.replace('_', '-')}")


def _add_config(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="file of key = value option defaults")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partsel", description="instrumented partitioning/selection lab"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="run selection trials, emit CSV")
    p.add_argument("--scheme", help="partitioning scheme id (e.g. sts, sbl)")
    p.add_argument("--pivot", choices=sorted(_PIVOTS), default=None)
    p.add_argument("--sequence", choices=sorted(_SEQUENCES), default=None)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int, help="rank to select (default median)")
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int, help="master seed (required)")
    p.add_argument("--m", type=int, default=None, help="modulus for modm")
    p.add_argument("--out", help="CSV output path (default stdout)")
    _add_config(p)

    p = sub.add_parser("verify-exact", help="exhaustive swap-count check")
    p.add_argument("--scheme", default=None, help="binary scheme id or 'all'")
    p.add_argument("--nmax", type=int, default=None, help="largest n (<= 10)")
    _add_config(p)

    p = sub.add_parser("verify-mc", help="Monte Carlo swap-count z-test")
    p.add_argument("--scheme", default=None)
    p.add_argument("--n", type=int)
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--s", type=int, help="sample size")
    p.add_argument("--p", type=int, help="pivot index within the sample")
    p.add_argument("--tuned", action="store_true")
    _add_config(p)

    p = sub.add_parser("analyze", help="print exact expectations")
    p.add_argument("--n", type=int)
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--p", type=int, default=None)
    _add_config(p)

    p = sub.add_parser("gen", help="emit one input sequence")
    p.add_argument("--sequence", choices=sorted(_SEQUENCES), default=None)
    p.add_argument("--n", type=int)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    _add_config(p)

    return parser


def _cmd_run(args: argparse.Namespace) -> int:
    _require(args, "scheme", "pivot", "sequence", "n", "trials", "seed")
    cfg = TrialConfig(
        scheme=scheme_by_name(args.scheme),
        pivot=_PIVOTS[args.pivot],
        sequence=_SEQUENCES[args.sequence],
        n=int(args.n),
        trials=int(args.trials),
        seed=int(args.seed),
        k=int(args.k) if args.k is not None else None,
        m=int(args.m) if args.m is not None else 2,
    )
    row = run_trials(cfg)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            emit_csv([row], fh)
    else:
        emit_csv([row], sys.stdout)
    return 0


def _cmd_verify_exact(args: argparse.Namespace) -> int:
    nmax = int(args.nmax) if args.nmax is not None else 8
    names = (
        [s.value for s in BinarySchemeId]
        if args.scheme in (None, "all")
        else [args.scheme]
    )
    failed = 0
    for name in names:
        scheme = scheme_by_name(name)
        if not isinstance(scheme, BinarySchemeId):
            raise SystemExit(f"{name} is not a binary scheme")
        for n, j, got, want, ok in verify_exhaustive(scheme, range(2, nmax + 1)):
            status = "ok" if ok else "FAIL"
            if not ok:
                failed += 1
            print(f"{name} n={n} j={j} measured={got} expected={want} {status}")
    print(f"verify-exact: {'PASS' if failed == 0 else f'{failed} FAILURES'}")
    return 0 if failed == 0 else 1


def _cmd_verify_mc(args: argparse.Namespace) -> int:
    _require(args, "scheme", "n", "trials", "seed", "s", "p")
    scheme = scheme_by_name(args.scheme)
    if not isinstance(scheme, BinarySchemeId):
        raise SystemExit(f"{args.scheme} is not a binary scheme")
    plan = SamplePlan(int(args.s), int(args.p))
    report: MCReport = verify_montecarlo(
        scheme,
        int(args.n),
        plan,
        int(args.trials),
        int(args.seed),
        tuned=bool(args.tuned),
    )
    print(
        f"{args.scheme} n={args.n} s={plan.s} p={plan.p}"
        f"{' tuned' if args.tuned else ''}: mean={report.mean:.6g}"
        f" expected={report.expected:.6g} z={report.z:+.3f}"
        f" {'ok' if report.ok else 'FAIL'}"
    )
    return 0 if report.ok else 1


def _cmd_analyze(args: argparse.Namespace) -> int:
    _require(args, "n")
    n = int(args.n)
    print(f"n = {n}")
    for scheme in BinarySchemeId:
        print(f"  max over ranks [{scheme.value}] = {max_expected_swaps(scheme, n)}")
    for scheme in BinarySchemeId:
        mid = (n - 1) // 2
        print(
            f"  rank {mid} [{scheme.value}] = "
            f"{expected_swaps_given_rank(scheme, n, mid)}"
        )
    if args.s is not None and args.p is not None:
        plan = SamplePlan(int(args.s), int(args.p))
        e, t = rank_moments(n, plan)
        print(f"  sampled rank moments (s={plan.s}, p={plan.p}): E={e} T={t}")
        for scheme in BinarySchemeId:
            print(
                f"  sampled loop swaps [{scheme.value}] = "
                f"{expected_swaps_sampled(scheme, n, plan)}"
            )
        print(f"  tuned swap-rate bound kappa({plan.s}) = {swap_rate_bound(plan.s)}")
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    _require(args, "sequence", "n")
    seq = generate(
        _SEQUENCES[args.sequence],
        int(args.n),
        int(args.seed) if args.seed is not None else 0,
        int(args.m) if args.m is not None else 2,
    )
    print(" ".join(str(int(v)) for v in seq))
    return 0


_COMMANDS = {
    "run": _cmd_run,
    "verify-exact": _cmd_verify_exact,
    "verify-mc": _cmd_verify_mc,
    "analyze": _cmd_analyze,
    "gen": _cmd_gen,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    _apply_config(args)
    return _COMMANDS[args.command](args)


if __name__ == "__main__":
    raise SystemExit(main())
