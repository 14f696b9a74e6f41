"""Command-line front end.

Subcommands: analyze (covariance JSON file -> report), state (build a
resource and classify it), sweep (region grid to CSV/JSON), thresholds
(entanglement/QT onset table), oracle (closed form vs quadrature).

Exit codes: 0 ok, 2 unphysical input, 3 bad input, 4 grid too large,
5 I/O failure, 6 oracle disagreement.
"""

from __future__ import annotations

import argparse
import sys
import warnings

from . import core, criteria, oracle, resources, sweep
from .errors import GridSizeError, InvalidInput, QuadratureWarning

__all__ = ["main", "entry"]

EXIT_OK = 0
EXIT_UNPHYSICAL = 2
EXIT_BAD_INPUT = 3
EXIT_GRID_TOO_LARGE = 4
EXIT_IO = 5
EXIT_ORACLE_DISAGREEMENT = 6

ORACLE_AGREEMENT = 1e-5


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; route through exit code 3 instead
    def error(self, message):
        raise _UsageError(message)


def _b(v) -> str:
    return "true" if v else "false"


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _validity_json(rep: core.ValidityReport) -> str:
    return (
        f'{{"symmetric": {_b(rep.symmetric)}, "nu_minus": {core.fmt17(rep.nu_minus)}, '
        f'"nu_plus": {core.fmt17(rep.nu_plus)}, "physical": {_b(rep.physical)}}}'
    )


def _analysis_json(validity, report, label, params, verdict) -> str:
    lines = [f'  "validity": {_validity_json(validity)}']
    lines.append(f'  "classification": "{label.value}"')
    lines.append(f'  "report": {criteria.report_to_json(report)}')
    if params is not None:
        lines.append(
            '  "canonical": {'
            f'"eta": {core.fmt17(params.eta)}, "zeta": {core.fmt17(params.zeta)}, '
            f'"c1": {core.fmt17(params.c1)}, "c2": {core.fmt17(params.c2)}'
            "}"
        )
    else:
        lines.append('  "canonical": null')
    if verdict is not None:
        lines.append(
            '  "entanglement": {'
            f'"simon_lhs": {core.fmt17(verdict.simon_lhs)}, '
            f'"simon_entangled": {_b(verdict.simon_entangled)}, '
            f'"ppt_nu_minus": {core.fmt17(verdict.ppt_nu_minus)}, '
            f'"ppt_entangled": {_b(verdict.ppt_entangled)}'
            "}"
        )
    else:
        lines.append('  "entanglement": null')
    return "{\n" + ",\n".join(lines) + "\n}"


_ANALYSIS_CSV_HEADER = "delta_epr,f_epr,det_m,fidelity,entangled,epr,qt,class"


def _analysis_csv(report, label) -> str:
    return _ANALYSIS_CSV_HEADER + "\n" + (
        f"{core.fmt17(report.delta_epr)},{core.fmt17(report.f_epr)},"
        f"{core.fmt17(report.det_m)},{core.fmt17(report.fidelity)},"
        f"{int(report.entangled)},{int(report.epr_correlated)},{int(report.qt)},"
        f"{label.value}"
    )


def _print_analysis(V, args) -> int:
    validity = core.validate(V)
    report, label = criteria.classify(V)
    if not validity.physical:
        _emit(_analysis_json(validity, report, label, None, None), args.out)
        return EXIT_UNPHYSICAL
    if args.format == "csv":
        _emit(_analysis_csv(report, label), args.out)
        return EXIT_OK
    params, _ = core.to_canonical(V)
    verdict = core.simon_inseparable(V)
    _emit(_analysis_json(validity, report, label, params, verdict), args.out)
    return EXIT_OK


def _cmd_analyze(args) -> int:
    try:
        V = core.load_covmat(args.path)
    except OSError as exc:
        print(f"error: cannot read {args.path}: {exc}", file=sys.stderr)
        return EXIT_IO
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    try:
        return _print_analysis(V, args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


def _build_state(args):
    if args.family == "tmst":
        spec = resources.TmstSpec(r=args.r, k1=args.k1, k2=args.k2)
        return resources.tmst(spec)
    spec = resources.BsSpec(r=args.r, k=args.k, T=args.T)
    return resources.bs_resource(spec)


def _cmd_state(args) -> int:
    try:
        V = _build_state(args)
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    try:
        code = _print_analysis(V, args)
        if args.emit_cm:
            core.save_covmat(V, args.emit_cm)
        return code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


def _parse_axis(name: str, text: str) -> sweep.AxisSpec:
    parts = text.split(":")
    if len(parts) != 3:
        raise InvalidInput(f"axis {name!r} must be min:max:steps, got {text!r}")
    try:
        lo, hi, steps = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise InvalidInput(f"axis {name!r}: {exc}") from exc
    return sweep.AxisSpec(name=name, lo=lo, hi=hi, steps=steps)


def _cmd_sweep(args) -> int:
    try:
        if args.family == "tmst":
            axis1 = _parse_axis("k1", args.k1)
            axis2 = _parse_axis("k2", args.k2)
        else:
            axis1 = _parse_axis("k", args.k)
            axis2 = _parse_axis("T", args.T)
        config = sweep.SweepConfig(
            family=args.family,
            fixed={"r": args.r},
            axis1=axis1,
            axis2=axis2,
            output_path=args.out,
            format=args.format,
        )
    except GridSizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GRID_TOO_LARGE
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT

    grid = sweep.run_sweep(config)
    try:
        if args.out:
            grid.write(args.out, args.format)
        else:
            sys.stdout.write(grid.to_text(args.format))
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    if args.out and not args.quiet:
        print(f"wrote {grid.n_rows} rows to {args.out}")
    return EXIT_OK


def _cmd_thresholds(args) -> int:
    try:
        r_ent = resources.r_ent_threshold(args.k1, args.k2)
        r_qt = resources.r_qt_threshold(args.k1, args.k2)
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    diff = r_qt - r_ent
    if args.format == "csv":
        text = "k1,k2,r_ent,r_qt,difference\n" + (
            f"{core.fmt17(args.k1)},{core.fmt17(args.k2)},"
            f"{core.fmt17(r_ent)},{core.fmt17(r_qt)},{core.fmt17(diff)}"
        )
    else:
        text = (
            "{"
            f'"k1": {core.fmt17(args.k1)}, "k2": {core.fmt17(args.k2)}, '
            f'"r_ent": {core.fmt17(r_ent)}, "r_qt": {core.fmt17(r_qt)}, '
            f'"difference": {core.fmt17(diff)}'
            "}"
        )
    try:
        _emit(text, args.out)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def _cmd_oracle(args) -> int:
    try:
        V = _build_state(args)
        qspec = oracle.QuadratureSpec(
            radius=args.radius, points_per_axis=args.points, rule=args.rule
        )
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT

    closed = criteria.fidelity(V)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", QuadratureWarning)
        result = oracle.fidelity_by_quadrature(V, qspec)
    diff = abs(closed - result.value)
    if args.format == "csv":
        text = "closed_form,quadrature,abs_difference,est_error,warning\n" + (
            f"{core.fmt17(closed)},{core.fmt17(result.value)},"
            f"{core.fmt17(diff)},{core.fmt17(result.est_error)},{int(result.warn)}"
        )
    else:
        text = (
            "{"
            f'"closed_form": {core.fmt17(closed)}, '
            f'"quadrature": {core.fmt17(result.value)}, '
            f'"abs_difference": {core.fmt17(diff)}, '
            f'"est_error": {core.fmt17(result.est_error)}, '
            f'"warning": {_b(result.warn)}'
            "}"
        )
    try:
        _emit(text, args.out)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    if result.warn or diff >= ORACLE_AGREEMENT:
        return EXIT_ORACLE_DISAGREEMENT
    return EXIT_OK


def _add_common(p: argparse.ArgumentParser, default_format: str = "json") -> None:
    p.add_argument("--format", choices=("csv", "json"), default=default_format,
                   help="output format")
    p.add_argument("--out", default=None, metavar="PATH",
                   help="write output to PATH instead of stdout")
    p.add_argument("--quiet", action="store_true", help="suppress progress chatter")


def _add_tmst_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--r", type=float, required=True, help="two-mode squeeze parameter (>= 0)")
    p.add_argument("--k1", type=float, required=True, help="mode-a thermal parameter (>= 1/2)")
    p.add_argument("--k2", type=float, required=True, help="mode-b thermal parameter (>= 1/2)")


def _add_bs_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--r", type=float, required=True,
                   help="single-mode squeeze parameter (>= 0; x quadrature squeezed)")
    p.add_argument("--k", type=float, required=True, help="input thermal parameter (>= 1/2)")
    p.add_argument("--T", type=float, required=True, help="beam-splitter transmittance in (0, 1)")


def build_parser() -> _Parser:
    parser = _Parser(prog="gaussqt",
                     description="Two-mode Gaussian entanglement/EPR/teleportation analysis")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="classify a covariance matrix from a JSON file")
    p.add_argument("path", help="covariance JSON file (convention xpxp-vac-half)")
    _add_common(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("state", help="build a resource state and classify it")
    fam = p.add_subparsers(dest="family", required=True)
    pt = fam.add_parser("tmst", help="two-mode squeezed thermal state")
    _add_tmst_flags(pt)
    pb = fam.add_parser("bs", help="beam-splitter output of a squeezed thermal input")
    _add_bs_flags(pb)
    for q in (pt, pb):
        q.add_argument("--emit-cm", default=None, metavar="PATH",
                       help="also write the covariance matrix JSON to PATH")
        _add_common(q)
        q.set_defaults(func=_cmd_state)

    p = sub.add_parser("sweep", help="evaluate a region grid over two parameters")
    fam = p.add_subparsers(dest="family", required=True)
    pt = fam.add_parser("tmst", help="scan (k1, k2) at fixed r")
    pt.add_argument("--r", type=float, required=True)
    pt.add_argument("--k1", required=True, metavar="MIN:MAX:STEPS")
    pt.add_argument("--k2", required=True, metavar="MIN:MAX:STEPS")
    pb = fam.add_parser("bs", help="scan (k, T) at fixed r")
    pb.add_argument("--r", type=float, required=True)
    pb.add_argument("--k", required=True, metavar="MIN:MAX:STEPS")
    pb.add_argument("--T", required=True, metavar="MIN:MAX:STEPS")
    for q in (pt, pb):
        _add_common(q, default_format="csv")
        q.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("thresholds", help="entanglement and QT squeeze thresholds")
    p.add_argument("--k1", type=float, required=True)
    p.add_argument("--k2", type=float, required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_thresholds)

    p = sub.add_parser("oracle", help="closed-form fidelity vs quadrature cross-check")
    fam = p.add_subparsers(dest="family", required=True)
    pt = fam.add_parser("tmst")
    _add_tmst_flags(pt)
    pb = fam.add_parser("bs")
    _add_bs_flags(pb)
    for q in (pt, pb):
        q.add_argument("--radius", type=float, default=6.0,
                       help="integration truncation radius (default 6)")
        q.add_argument("--points", type=int, default=401,
                       help="grid points per axis (default 401)")
        q.add_argument("--rule", choices=("midpoint", "gauss-legendre"),
                       default="midpoint", help="quadrature rule")
        _add_common(q)
        q.set_defaults(func=_cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    return args.func(args)


def entry() -> None:
    sys.exit(main())
