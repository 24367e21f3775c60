"""Command-line interface.

Subcommands::

    build           construct a code from a preset and report its bounds
    simulate        Monte Carlo block-error estimation for a concat preset
    exponent        emit the eps^3 exponent curves (CSV/JSON + figure)
    optimize        the (eta, rho) optimization and its value
    check-theorem1  walk the sufficient-condition chain for a failure model
    bz-bounds       degree lower bounds for the iterated-ML baseline
    probe           decode-cost scaling fits (CSV/JSON + figure)

Exit status: 0 success, 1 usage error, 2 runtime error.  With --out and CSV
format, report-style subcommands also render a matplotlib figure next to
the delimited output (suppress with --no-plot).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict
from pathlib import Path

from . import analysis
from .concat import theorem1_check
from .harness import TrialPlan, bz_decode_family, expander_decode_family, monte_carlo, scaling_probe
from .presets import load_concat, load_expander, load_preset_file


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _float_list(text: str) -> list[float]:
    return [float(tok) for tok in text.split(",") if tok.strip()]


def _int_list(text: str) -> list[int]:
    return [int(tok) for tok in text.split(",") if tok.strip()]


def _write_output(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json_text(payload: dict) -> str:
    return json.dumps({"schema_version": 1, **payload}, indent=2) + "\n"


def _figure_path(out: str) -> str:
    return str(Path(out).with_suffix(".png"))


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--out", help="write the report here instead of stdout")
    sub.add_argument("--format", choices=("csv", "json"), default="csv")
    sub.add_argument("--no-plot", action="store_true", help="skip figure rendering")


def build_parser() -> _Parser:
    parser = _Parser(prog="expcodes", description=__doc__.split("\n")[0])
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("build", parents=[], help="construct a code and report bounds")
    p.add_argument("--preset", required=True, help="expander preset JSON file")
    p.add_argument("--with-dimension", action="store_true",
                   help="also compute the exact dimension (O(N^3) elimination)")
    _add_common(p)

    p = subs.add_parser("simulate", help="Monte Carlo block-error estimate")
    p.add_argument("--preset", required=True, help="concat preset JSON file")
    p.add_argument("--p", type=float, default=0.0, help="BSC crossover probability")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)
    _add_common(p)

    p = subs.add_parser("exponent", help="emit the eps^3 exponent curves")
    p.add_argument("--C", type=float, default=0.8, dest="cap", help="channel capacity")
    p.add_argument("--t", type=_float_list, default=[1.0], help="comma list of t values")
    p.add_argument("--epsilon", type=_float_list, default=None,
                   help="comma list of rate gaps (default: a 60-point grid to 0.3)")
    _add_common(p)

    p = subs.add_parser("optimize", help="optimize the exponent constants")
    _add_common(p)

    p = subs.add_parser("check-theorem1", help="sufficient-condition inequality walk")
    p.add_argument("--epsilon", type=float, required=True)
    p.add_argument("--b", type=float, default=1.0)
    p.add_argument("--vartheta", type=float, default=0.125)
    p.add_argument("--h0", type=float, default=None,
                   help="default: b+5 for inverse-poly, 3 for exponential")
    p.add_argument("--model", choices=("inverse-poly", "exponential"), default="inverse-poly")
    p.add_argument("--poly-power", type=float, default=4.0,
                   help="inverse-poly gap power (failure ~ 1/(n eps^power))")
    _add_common(p)

    p = subs.add_parser("bz-bounds", help="degree bounds for the iterated-ML baseline")
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--epsilon", type=float, required=True)
    p.add_argument("--delta", type=int, default=None,
                   help="also evaluate the exponent term and positivity at this degree")
    _add_common(p)

    p = subs.add_parser("probe", help="decode-cost scaling fits")
    p.add_argument("--family", choices=("expander", "bz"), default="expander")
    p.add_argument("--sizes", type=_int_list, required=True,
                   help="per-side sizes (expander) or degrees (bz)")
    p.add_argument("--delta", type=int, default=4, help="expander graph degree")
    p.add_argument("--ell", type=int, default=2)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--rate", type=float, default=0.5, help="bz constituent rate")
    p.add_argument("--seed", type=int, default=7)
    _add_common(p)

    return parser


# -- subcommand bodies ---------------------------------------------------------


def _cmd_build(args) -> None:
    spec = load_preset_file(args.preset)
    code = load_expander(spec)
    report = {
        "n": code.n,
        "delta": code.delta,
        "num_edges": code.num_edges,
        "phi_bits": code.phi_bits,
        "lambda": code.spectral_info.lam,
        "gamma": code.gamma,
        "ramanujan": code.spectral_info.ramanujan,
        "rate_bound": code.rate_bound,
        "distance_bound": code.distance_bound,
        "beta": code.beta,
        "default_iterations": code.decode_iterations or code.default_iterations(),
    }
    if args.with_dimension:
        report["dimension"] = code.dimension
        report["rate_actual"] = code.rate_actual
    if args.format == "json":
        _write_output(_json_text(report), args.out)
    else:
        keys = list(report)
        _write_output(_csv_text(keys, [[report[k] for k in keys]]), args.out)


def _cmd_simulate(args) -> None:
    code = load_concat(load_preset_file(args.preset))
    plan = TrialPlan(code, args.p, args.trials, seed=args.seed, threads=args.threads)
    est = monte_carlo(plan).to_dict()
    if args.format == "json":
        est.pop("schema_version")
        _write_output(_json_text(est), args.out)
    else:
        keys = [k for k in est if k != "schema_version"]
        _write_output(_csv_text(keys, [[est[k] for k in keys]]), args.out)


def _default_eps_grid() -> list[float]:
    return [round(0.005 * i, 10) for i in range(1, 61)]


def _cmd_exponent(args) -> None:
    eps_values = args.epsilon or _default_eps_grid()
    rows = []
    for eps in eps_values:
        base = analysis.error_exponent(args.cap, eps, 1.0)
        for t in args.t:
            rows.append((eps, t, (2.0 * t - 1.0) * base))
    if args.format == "json":
        payload = {"C": args.cap, "rows": [list(r) for r in rows]}
        _write_output(_json_text(payload), args.out)
    else:
        _write_output(
            _csv_text(["epsilon", "t", "E"], [list(r) for r in rows]), args.out
        )
    if args.out and not args.no_plot:
        from .plots import exponent_figure

        exponent_figure(rows, _figure_path(args.out), args.cap)


def _cmd_optimize(args) -> None:
    eta, rho, upsilon = analysis.upsilon_optimize()
    report = {"eta": eta, "rho": rho, "upsilon": upsilon}
    if args.format == "json":
        _write_output(_json_text(report), args.out)
    else:
        _write_output(_csv_text(list(report), [list(report.values())]), args.out)


def _cmd_check_theorem1(args) -> None:
    if args.model == "inverse-poly":
        h0 = args.h0 if args.h0 is not None else args.b + 5.0
        power = args.poly_power
        prob_fn = lambda gap, n_in: 1.0 / (n_in * gap**power)
    else:
        import math

        h0 = args.h0 if args.h0 is not None else 3.0
        prob_fn = lambda gap, n_in: math.exp(-n_in * gap * gap)
    report = asdict(theorem1_check(args.epsilon, args.b, args.vartheta, h0, prob_fn))
    report["model"] = args.model
    if args.format == "json":
        _write_output(_json_text(report), args.out)
    else:
        keys = list(report)
        _write_output(_csv_text(keys, [[report[k] for k in keys]]), args.out)


def _cmd_bz_bounds(args) -> None:
    report = {
        "p": args.p,
        "epsilon": args.epsilon,
        "binary_delta_min": analysis.bz2_min_degree(args.epsilon, args.p, "binary"),
        "large_field_delta_min": analysis.bz2_min_degree(args.epsilon, args.p, "large-field"),
    }
    if args.delta is not None:
        cap = 1.0 - analysis.h2(args.p)
        rate = (1.0 - args.epsilon) * cap
        report["exponent_term_binary"] = analysis.bz2_exponent_term(
            rate, args.p, args.delta, "binary"
        )
        report["exponent_term_large_field"] = analysis.bz2_exponent_term(
            rate, args.p, args.delta, "large-field"
        )
        bz3 = analysis.bz3_positivity(args.delta, args.p, args.epsilon)
        report["bz3"] = asdict(bz3)
    if args.format == "json":
        _write_output(_json_text(report), args.out)
    else:
        flat = dict(report)
        bz3 = flat.pop("bz3", None)
        if bz3:
            flat.update({f"bz3_{k}": v for k, v in bz3.items()})
        _write_output(_csv_text(list(flat), [list(flat.values())]), args.out)


def _cmd_probe(args) -> None:
    if args.family == "expander":
        family = expander_decode_family(
            delta=args.delta, ell=args.ell, k=args.k, seed=args.seed
        )
        report = scaling_probe(family, args.sizes, model="linear")
    else:
        family = bz_decode_family(rate=args.rate, seed=args.seed)
        report = scaling_probe(family, args.sizes, model="exp2")
    payload = report.to_dict()
    if args.format == "json":
        payload.pop("schema_version")
        _write_output(_json_text(payload), args.out)
    else:
        rows = [[x, y] for x, y in report.points]
        text = _csv_text(["size", "ops"], rows)
        text += f"# model={report.model} slope={report.slope!r} r_squared={report.r_squared!r}\n"
        _write_output(text, args.out)
    if args.out and not args.no_plot:
        from .plots import probe_figure

        probe_figure(report, _figure_path(args.out))


_COMMANDS = {
    "build": _cmd_build,
    "simulate": _cmd_simulate,
    "exponent": _cmd_exponent,
    "optimize": _cmd_optimize,
    "check-theorem1": _cmd_check_theorem1,
    "bz-bounds": _cmd_bz_bounds,
    "probe": _cmd_probe,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _COMMANDS[args.command](args)
    except (ValueError, OSError, RuntimeError, KeyError) as exc:
        print(f"expcodes: error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
