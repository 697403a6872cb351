"""Command-line front end.

Subcommands: simulate, converge, dispersion, residuals.  Exit codes:
0 success, 2 configuration error, 3 integrator failure.
"""

import argparse
import sys

from .config import load_config
from .errors import ConfigError, IntegratorError
from .harness import run_converge, run_dispersion, run_residuals, run_simulate


def _parse_dts(text):
    try:
        dts = [float(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise ConfigError(f"--dts must be a comma-separated float list, got {text!r}")
    if len(dts) < 2:
        raise ConfigError("--dts needs at least two step sizes")
    return dts


def build_parser():
    ap = argparse.ArgumentParser(
        prog="npnls",
        description="Symplectic integration toolkit for the nonparaxial NLS equation")
    sub = ap.add_subparsers(dest="command", required=True)

    ps = sub.add_parser("simulate", help="midpoint run; writes timeseries.csv, final_state.json")
    ps.add_argument("config")
    ps.add_argument("--out", default=None, help="output directory")

    pc = sub.add_parser("converge", help="step-halving study; writes convergence.csv/.json")
    pc.add_argument("config")
    pc.add_argument("--dts", default="0.2,0.1,0.05,0.025",
                    help="comma-separated, halving step sizes")
    pc.add_argument("--out", default=None)

    pd = sub.add_parser("dispersion", help="numerical dispersion scan; writes dispersion.csv")
    pd.add_argument("config")
    pd.add_argument("--nonlinear", action="store_true",
                    help="include the g(|cos(omega_t/2)|) term")
    pd.add_argument("--out", default=None)

    pr = sub.add_parser("residuals", help="local conservation residuals; writes residuals.csv")
    pr.add_argument("config")
    pr.add_argument("--out", default=None)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        config = load_config(args.config)
        out_dir = args.out if args.out is not None else config.output_directory
        if args.command == "simulate":
            state, records = run_simulate(config, out_dir)
            print(f"simulate: {len(records)} samples to t={state.t}; wrote {out_dir}/timeseries.csv")
        elif args.command == "converge":
            report = run_converge(config, _parse_dts(args.dts), out_dir)
            orders = ", ".join(f"{o:.3f}" for o in report.observed_orders)
            print(f"converge: observed u-orders [{orders}]; wrote {out_dir}/convergence.csv")
        elif args.command == "dispersion":
            rows = run_dispersion(config, out_dir, nonlinear=args.nonlinear)
            nroots = sum(1 for r in rows if r[0] == "root")
            print(f"dispersion: {len(rows) - nroots} scan points, {nroots} roots; "
                  f"wrote {out_dir}/dispersion.csv")
        elif args.command == "residuals":
            rows = run_residuals(config, out_dir)
            print(f"residuals: {len(rows)} windows; wrote {out_dir}/residuals.csv")
    except ConfigError as e:
        print(f"config error: {e}", file=sys.stderr)
        return 2
    except IntegratorError as e:
        print(f"integrator failure: {e}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
