"""Command-line front end.

Every subcommand prints CSV to stdout (or to --out) so results pipe
directly into plotting or diffing tools. Exit codes: 0 on success, 2 on
a validation error, 3 when a numerical tolerance or cross-check fails,
4 on an I/O error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

import numpy as np

from .channel import MultipathConfig, gain_samples
from .distributions import ExponentialGain, PerceptualDistribution
from .errors import ConstraintViolation, DomainError, ToleranceNotMet
from .metrics import (DEFAULT_BUDGET, DEFAULT_TOL, LinkBudget, OutageSpec,
                      pop, pu_rate, pu_snr)
from .prospect import ValueParams, WeightParams, value, weight
from .sweep import (PRESET_NOTES, PRESETS, SweepRow, cross_check,
                    cross_check_csv, load_scenario, preset_scenario,
                    run_scenario, sweep_csv)

_QUANTILE_STEP = 0.05


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _value_params(args) -> ValueParams:
    return ValueParams(args.alpha, args.lambda_gain, args.lambda_loss,
                       mode=args.mode)


def _weight_params(args) -> WeightParams:
    return WeightParams(args.gamma, args.theta, mode=args.mode)


def _cmd_value(args) -> int:
    params = _value_params(args)
    rows = [SweepRow(x, float(value(x, args.ref, params)), 0.0, 1)
            for x in args.points]
    _emit(sweep_csv(rows), args.out)
    return 0


def _cmd_weight(args) -> int:
    params = _weight_params(args)
    rows = [SweepRow(p, float(weight(p, params)), 0.0, 1) for p in args.points]
    _emit(sweep_csv(rows), args.out)
    return 0


def _cmd_pcdf(args) -> int:
    pd = PerceptualDistribution(ExponentialGain(args.mu), _weight_params(args))
    rows = [SweepRow(s, float(pd.pcdf(s)), 0.0, 1) for s in args.points]
    _emit(sweep_csv(rows), args.out)
    return 0


def _cmd_ppdf(args) -> int:
    pd = PerceptualDistribution(ExponentialGain(args.mu), _weight_params(args))
    rows = [SweepRow(s, float(pd.ppdf(s)), 0.0, 1) for s in args.points]
    _emit(sweep_csv(rows), args.out)
    return 0


def _cmd_pu(args) -> int:
    link = LinkBudget(args.ptn0, ExponentialGain(args.mu))
    fn = pu_snr if args.command == "pu-snr" else pu_rate
    res = fn(link, args.ref, _value_params(args), _weight_params(args),
             tol=args.tol, budget=args.budget)
    rows = [SweepRow(args.ptn0, res.value, res.abs_error, res.evaluations)]
    _emit(sweep_csv(rows), args.out)
    return 0


def _cmd_pop(args) -> int:
    link = LinkBudget(args.ptn0, ExponentialGain(args.mu))
    p = pop(link, OutageSpec(args.epsilon), _weight_params(args))
    _emit(sweep_csv([SweepRow(args.ptn0, p, 0.0, 1)]), args.out)
    return 0


def _resolve_scenario(name: str):
    if name in PRESETS:
        return preset_scenario(name)
    try:
        return load_scenario(name)
    except FileNotFoundError as exc:
        raise FileNotFoundError(
            f"{name!r} is neither a built-in preset "
            f"({', '.join(sorted(PRESETS))}) nor a readable scenario file"
        ) from exc


def _cmd_sweep(args) -> int:
    rows = run_scenario(_resolve_scenario(args.scenario))
    _emit(sweep_csv(rows), args.out)
    return 0


def _cmd_cross_check(args) -> int:
    rows = cross_check(_resolve_scenario(args.scenario))
    _emit(cross_check_csv(rows), args.out)
    if all(r.passed for r in rows):
        return 0
    failed = sum(1 for r in rows if not r.passed)
    print(f"error: {failed} of {len(rows)} grid points disagree beyond "
          f"3 standard errors", file=sys.stderr)
    return 3


def _cmd_simulate_channel(args) -> int:
    config = MultipathConfig(args.k_paths, args.scale, args.seed)
    gains = np.sort(gain_samples(config, args.samples))
    n = gains.size
    mu = args.scale ** 2

    # Empirical CDF against the exponential limit law, at the law's own
    # quantiles (where the model CDF is the probability by construction).
    probs = np.arange(1, int(1.0 / _QUANTILE_STEP)) * _QUANTILE_STEP
    grid = -mu * np.log1p(-probs)
    empirical = np.searchsorted(gains, grid, side="right") / n
    lines = ["gain,empirical_cdf,model_cdf,abs_diff"]
    for g, e, m in zip(grid, empirical, probs):
        lines.append(f"{g:.12g},{e:.12g},{m:.12g},{abs(e - m):.12g}")
    _emit("\n".join(lines) + "\n", args.out)

    model = -np.expm1(-gains / mu)
    steps = np.arange(1, n + 1) / n
    ks = float(np.max(np.maximum(steps - model, model - (steps - 1.0 / n))))
    print(f"ks_statistic={ks:.6g} samples={n} k_paths={args.k_paths} "
          f"scale={args.scale:g}", file=sys.stderr)
    return 0


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mode", choices=("strict", "permissive"),
                   default="strict", help="parameter validation mode")
    p.add_argument("--out", metavar="PATH", default=None,
                   help="write CSV here instead of stdout")


def _add_value_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--alpha", type=float, default=0.5,
                   help="diminishing-sensitivity exponent (default 0.5)")
    p.add_argument("--lambda-gain", type=float, default=1.0,
                   dest="lambda_gain", help="gain-side scale (default 1)")
    p.add_argument("--lambda-loss", type=float, default=2.0,
                   dest="lambda_loss", help="loss-side scale (default 2)")


def _add_weight_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--gamma", type=float, default=1.0,
                   help="weighting distortion scale (default 1)")
    p.add_argument("--theta", type=float, default=0.8,
                   help="weighting curvature in (0,1) (default 0.8)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="percept",
        description="Perceptual QoS metrics for Rayleigh fading links.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("value", help="two-part value function at given points")
    p.add_argument("points", type=float, nargs="+", metavar="X")
    _add_value_flags(p)
    p.add_argument("--ref", type=float, default=4.0,
                   help="reference point (default 4)")
    _add_common(p)
    p.set_defaults(func=_cmd_value)

    p = sub.add_parser("weight", help="probability weighting at given points")
    p.add_argument("points", type=float, nargs="+", metavar="P")
    _add_weight_flags(p)
    _add_common(p)
    p.set_defaults(func=_cmd_weight)

    for name, helptext in (("pcdf", "perceived CDF of the channel gain"),
                           ("ppdf", "perceived density of the channel gain")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("points", type=float, nargs="+", metavar="S")
        _add_weight_flags(p)
        p.add_argument("--mu", type=float, default=1.0,
                       help="average channel gain (default 1)")
        _add_common(p)
        p.set_defaults(func=_cmd_pcdf if name == "pcdf" else _cmd_ppdf)

    for name, helptext in (
            ("pu-snr", "perceptual utility of the instantaneous SNR"),
            ("pu-rate", "perceptual utility of the transmission rate")):
        p = sub.add_parser(name, help=helptext)
        _add_value_flags(p)
        _add_weight_flags(p)
        p.add_argument("--ref", type=float, default=4.0,
                       help="reference point (default 4)")
        p.add_argument("--mu", type=float, default=1.0,
                       help="average channel gain (default 1)")
        p.add_argument("--ptn0", type=float, default=100.0,
                       help="transmit power to noise ratio (default 100)")
        p.add_argument("--tol", type=float, default=DEFAULT_TOL,
                       help="absolute quadrature tolerance")
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                       help="integrand evaluation budget")
        _add_common(p)
        p.set_defaults(func=_cmd_pu)

    p = sub.add_parser("pop", help="perceptual outage probability")
    _add_weight_flags(p)
    p.add_argument("--mu", type=float, default=1.0,
                   help="average channel gain (default 1)")
    p.add_argument("--ptn0", type=float, default=100.0,
                   help="transmit power to noise ratio (default 100)")
    p.add_argument("--epsilon", type=float, default=1.0,
                   help="rate threshold in bits/s/Hz (default 1)")
    _add_common(p)
    p.set_defaults(func=_cmd_pop)

    p = sub.add_parser(
        "sweep", help="run a sweep scenario (preset name or JSON file)",
        epilog="presets: " + "; ".join(
            f"{k}: {PRESET_NOTES[k]}" for k in sorted(PRESETS)))
    p.add_argument("scenario", help="preset name or scenario file path")
    p.add_argument("--out", metavar="PATH", default=None)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser(
        "cross-check",
        help="quadrature vs Monte Carlo on a PU scenario with mc config")
    p.add_argument("scenario", help="preset name or scenario file path")
    p.add_argument("--out", metavar="PATH", default=None)
    p.set_defaults(func=_cmd_cross_check)

    p = sub.add_parser(
        "simulate-channel",
        help="multipath gain samples vs the exponential limit law")
    p.add_argument("--k-paths", type=int, default=64, dest="k_paths",
                   help="number of propagation paths (default 64)")
    p.add_argument("--scale", type=float, default=1.0,
                   help="total amplitude scale; mean gain is scale**2")
    p.add_argument("--samples", type=int, default=100_000,
                   help="number of channel draws (default 100000)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", metavar="PATH", default=None)
    p.set_defaults(func=_cmd_simulate_channel)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except json.JSONDecodeError as exc:
        print(f"error: scenario is not valid JSON: {exc}", file=sys.stderr)
        return 2
    except (ConstraintViolation, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ToleranceNotMet as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
