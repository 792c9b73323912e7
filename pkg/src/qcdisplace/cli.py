"""Command-line front end.

    qcdisplace [global options] <command> [command options]

Commands: phi, k, map, beltrami, kra, gehring, verify.  Results go to stdout
(or --output) as JSON or CSV.  Exit status: 0 success, 1 usage or domain
error, 2 numeric non-convergence or a failed verification check.
"""
from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import math
import os
import re
import sys
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NumericError
from .specfun import agm_tolerance

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NUMERIC = 2

_DEFAULT_TOL = 1e-9


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    tolerance: float = _DEFAULT_TOL
    grid_n: int = 512
    fd_step: float = 1e-5
    output_format: str = "json"
    output_path: str | None = None

    def __post_init__(self):
        if not (self.tolerance > 0 and math.isfinite(self.tolerance)):
            raise DomainError(f"tolerance must be positive, got {self.tolerance!r}")
        if self.grid_n < 32:
            raise DomainError(f"grid size must be at least 32, got {self.grid_n!r}")
        if not self.fd_step > 0:
            raise DomainError(f"finite-difference step must be positive, got {self.fd_step!r}")
        if self.output_format not in ("json", "csv"):
            raise DomainError(f"output format must be json or csv, got {self.output_format!r}")


# ---------------------------------------------------------------- formatting

def _num(v) -> str:
    v = float(v)
    if not math.isfinite(v):
        return "null"
    if v == int(v) and abs(v) < 2**53:
        # keep integral reals recognisably real
        return format(v, ".1f")
    return format(v, ".17g")


def to_json(obj) -> str:
    """JSON with every real printed at 17 significant digits; key order preserved."""
    if isinstance(obj, dict):
        return "{" + ",".join(f"{json.dumps(k)}:{to_json(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(to_json(v) for v in obj) + "]"
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _num(obj)
    if obj is None:
        return "null"
    return json.dumps(str(obj))


def _cell(v):
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (float, np.floating)):
        return "" if not math.isfinite(v) else _num(v)
    return str(v)


def to_csv(rows) -> str:
    """RFC-4180 CSV (CRLF line endings) from a list of flat dicts sharing keys."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(list(rows[0]))
    for r in rows:
        w.writerow([_cell(v) for v in r.values()])
    return buf.getvalue()


# ---------------------------------------------------------------- parsing

class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let "-0.25,0" through as a value rather than an option
        self._negative_number_matcher = re.compile(r"^-\.?\d[\d.eE+\-,j ]*$")

    def error(self, message):
        self.print_help(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _complex_literal(text: str) -> complex:
    parts = text.split(",")
    try:
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
        if len(parts) == 1:
            return complex(text.replace(" ", ""))
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"malformed complex literal {text!r}; expected re,im")


def _positive_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return n


def _global_options(p, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    env_tol = os.environ.get("QCD_TOL")
    p.add_argument("--tol", type=float, default=d(float(env_tol) if env_tol else _DEFAULT_TOL),
                   help="solver tolerance (default 1e-9, or $QCD_TOL)")
    p.add_argument("--grid-n", type=int, default=d(512), help="Laplace oracle grid size (default 512)")
    p.add_argument("--fd-step", type=float, default=d(1e-5), help="finite-difference step (default 1e-5)")
    p.add_argument("--format", dest="output_format", choices=("json", "csv"), default=d("json"))
    p.add_argument("--output", dest="output_path", default=d(None), help="write to this file instead of stdout")
    p.add_argument("--agm-rtol", type=float, default=d(None), help="relative stopping threshold for the AGM")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qcdisplace", description="Extremal quasiconformal displacement of the unit disc.")
    _global_options(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
    sub.required = True

    def cmd(name, help_):
        p = sub.add_parser(name, help=help_, description=help_)
        _global_options(p, suppress=True)
        return p

    cmd("phi", "Grötzsch modulus function Φ(R)").add_argument("--R", type=float, required=True)
    cmd("k", "extremal dilatation K(x) for displacing 0 to -x").add_argument("--x", type=float, required=True)
    p = cmd("map", "evaluate the extremal shift on a polar lattice (CSV rows re_in,im_in,re_out,im_out)")
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--grid", type=_positive_int, required=True, help="lattice size n (n*n points)")
    p.add_argument("--svg", help="also draw the image of a polar grid to this SVG file")
    p = cmd("beltrami", "Beltrami coefficient of the shift at sample points")
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--samples", type=_positive_int, required=True)
    p = cmd("kra", "Kra distance between two disc points")
    p.add_argument("--z1", type=_complex_literal, required=True, metavar="RE,IM")
    p.add_argument("--z2", type=_complex_literal, required=True, metavar="RE,IM")
    cmd("gehring", "Gehring displacement h(K)").add_argument("--K", type=float, required=True)
    cmd("verify", "run the built-in numerical checks").add_argument(
        "--suite", choices=("all", "modulus", "shift", "metrics"), default="all")
    return parser


# ---------------------------------------------------------------- commands

def _cmd_phi(args, cfg):
    from .modulus import phi

    return [{"R": args.R, "phi": phi(args.R)}]


def _cmd_k(args, cfg):
    from .modulus import phi
    from .shift import shift_dilatation

    if not 0 < args.x < 1:
        raise DomainError(f"x must lie in (0, 1), got {args.x!r}")
    return [{"x": args.x, "phi": phi(1.0 / args.x), "K": shift_dilatation(args.x)}]


def polar_lattice(n: int):
    """n*n points r = (j+1)/n, theta = 2 pi k / n, j outer, k inner."""
    r = (np.arange(n) + 1.0) / n
    theta = 2.0 * math.pi * np.arange(n) / n
    return (r[:, None] * np.exp(1j * theta[None, :])).ravel()


def _cmd_map(args, cfg):
    from .shift import build_shift

    f = build_shift(args.x, cfg.tolerance)
    z = polar_lattice(args.grid)
    w = np.atleast_1d(f(z))
    if args.svg:
        with open(args.svg, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(shift_svg(f))
    return [{"re_in": a.real, "im_in": a.imag, "re_out": b.real, "im_out": b.imag} for a, b in zip(z, w)]


def shift_svg(f, rings: int = 8, rays: int = 24, size: int = 480) -> str:
    """SVG 1.1 drawing of the image of a polar grid (circles and rays) under ``f``."""
    t = np.linspace(0.0, 1.0, 201)
    half = size / 2.0
    scale = 0.45 * size

    def path(pts, colour):
        xy = " ".join(f"{half + scale * p.real:.4f},{half - scale * p.imag:.4f}" for p in pts)
        return f'<polyline fill="none" stroke="{colour}" stroke-width="1" points="{xy}"/>'

    lines = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    for j in range(1, rings + 1):
        lines.append(path(np.atleast_1d(f(j / rings * np.exp(2j * math.pi * t))), "#1f4e9c"))
    for k in range(rays):
        # stop just short of 0, where the map is only continuous
        lines.append(path(np.atleast_1d(f((1e-6 + (1 - 1e-6) * t) * np.exp(2j * math.pi * k / rays))), "#b03a2e"))
    lines.append(f'<circle cx="{half - scale * f.x:.4f}" cy="{half:.4f}" r="3" fill="black"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _cmd_beltrami(args, cfg):
    from .shift import beltrami_field, build_shift
    from .verify.dilatation import disc_samples

    f = build_shift(args.x, cfg.tolerance)
    z = disc_samples(4 * args.samples, r_max=0.95)
    seg = np.clip(z.real, -f.x, 0.0)
    z = z[np.abs(z - seg) > 0.02][: args.samples]
    mu, q = beltrami_field(f, z, cfg.fd_step)
    teich = mu * q / np.abs(q)
    return [{"re_z": a.real, "im_z": a.imag, "re_mu": m.real, "im_mu": m.imag, "abs_mu": abs(m),
             "re_q": b.real, "im_q": b.imag, "teichmuller_re": t.real, "teichmuller_im": t.imag, "k": f.k}
            for a, m, b, t in zip(z, mu, q, teich)]


def _beltrami_summary(rows):
    a = np.array([r["abs_mu"] for r in rows])
    t = np.array([complex(r["teichmuller_re"], r["teichmuller_im"]) for r in rows])
    k = rows[0]["k"]
    return {"samples": len(rows), "k": k, "abs_mu_min": float(a.min()), "abs_mu_max": float(a.max()),
            "teichmuller_max_deviation": float(np.max(np.abs(t - k)))}


def _cmd_kra(args, cfg):
    from .metrics import hyperbolic_distance, kra_distance, pseudo_hyperbolic

    z1, z2 = args.z1, args.z2
    return [{"re_z1": z1.real, "im_z1": z1.imag, "re_z2": z2.real, "im_z2": z2.imag,
             "rho": pseudo_hyperbolic(z1, z2), "hyperbolic": hyperbolic_distance(z1, z2),
             "kra": kra_distance(z1, z2)}]


def _cmd_gehring(args, cfg):
    from .metrics import gehring_h

    h = gehring_h(args.K, tol=min(cfg.tolerance, 1e-12))
    return [{"K": args.K, "h": h, "x": math.tanh(h / 2.0)}]


def _cmd_verify(args, cfg):
    from .checks import run_suite

    return run_suite(args.suite, cfg)


_COMMANDS = {
    "phi": _cmd_phi,
    "k": _cmd_k,
    "map": _cmd_map,
    "beltrami": _cmd_beltrami,
    "kra": _cmd_kra,
    "gehring": _cmd_gehring,
    "verify": _cmd_verify,
}


def _render(command, rows, fmt) -> str:
    if fmt == "csv":
        return to_csv(rows)
    if command == "map":
        return to_json(rows) + "\n"
    if command == "beltrami":
        return to_json(_beltrami_summary(rows)) + "\n"
    if command == "verify":
        report = {}
        for r in rows:
            report[r["check"] + "_passed"] = r["passed"]
            report[r["check"] + "_value"] = r["value"]
        report["all_passed"] = all(r["passed"] for r in rows)
        return to_json(report) + "\n"
    return to_json(rows[0]) + "\n"


def run_cli(argv=None) -> int:
    """Parse ``argv``, run the command, write its output; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = RunConfig(args.tol, args.grid_n, args.fd_step, args.output_format, args.output_path)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"qcdisplace: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)

    try:
        ctx = agm_tolerance(args.agm_rtol) if args.agm_rtol is not None else contextlib.nullcontext()
        with ctx:
            rows = _COMMANDS[args.command](args, cfg)
    except DomainError as exc:
        print(f"qcdisplace: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NumericError as exc:
        print(f"qcdisplace: numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC

    text = _render(args.command, rows, cfg.output_format)
    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.command == "verify" and not all(r["passed"] for r in rows):
        print("qcdisplace: verification failed", file=sys.stderr)
        return EXIT_NUMERIC
    return EXIT_OK


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
