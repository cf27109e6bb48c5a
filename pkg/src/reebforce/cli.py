"""Command-line front end.

Every subcommand prints one machine-readable document (JSON by default,
TSV with ``--format tsv``) and uses a fixed exit-code taxonomy:

    0   success
    2   input validation failure (bad surd syntax, resonant data, ...)
    3   numerical oracle failure
    64  usage error (unknown flags, missing arguments)

Output is deterministic: identical inputs give byte-identical documents.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Optional, Sequence

from . import __version__
from .errors import InputError, OracleError, ReebforceError
from .orbits import OrbitSpec, alpha_minus, alpha_plus, cz, parity, sft_good
from .intersection import delta_pair, omega_minus, omega_plus, PunctureDatum, POSITIVE
from .star_models import GammaProfile, classify_orbits, forcing_hopf
from .geodesic import CurvatureProfile, angenent_table, rho as geodesic_rho
from .openbook import MonodromyMatrix, growth_report
from .surd import Surd

USAGE_EXIT = 64


def _precision_bits() -> int:
    raw = os.environ.get("REEB_FORCING_PRECISION", "128")
    try:
        bits = int(raw)
    except ValueError:
        raise InputError(f"REEB_FORCING_PRECISION must be an integer: {raw!r}")
    if bits < 16:
        raise InputError("REEB_FORCING_PRECISION must be >= 16")
    return bits


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # noqa: A003 - argparse hook
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_EXIT)


def _build_parser() -> _Parser:
    top = _Parser(prog="reebforce", description=__doc__)
    top.add_argument("--format", choices=("json", "tsv"), default="json")
    top.add_argument("--config", default=None,
                     help="JSON file of option defaults; flags win")
    sub = top.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("cz", help="Conley-Zehnder index of an orbit cover")
    p.add_argument("--theta", default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k", type=int, default=1)

    p = sub.add_parser("intersect",
                       help="extremal winding pairings of two covers")
    p.add_argument("--theta", default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k1", type=int, required=True)
    p.add_argument("--k2", type=int, required=True)

    p = sub.add_parser("classify-star",
                       help="orbit tori of a star-shaped model surface")
    p.add_argument("--theta1", required=True)
    p.add_argument("--theta2", required=True)
    p.add_argument("--max-p", type=int, default=10)

    p = sub.add_parser("forcing", help="orbits forced by a Hopf link")
    fsub = p.add_subparsers(dest="target", required=True, parser_class=_Parser)
    ph = fsub.add_parser("hopf")
    ph.add_argument("--theta1", required=True)
    ph.add_argument("--theta2", required=True)
    ph.add_argument("--max-p", type=int, default=10)

    p = sub.add_parser("geodesic-rho",
                       help="rotation number of a closed geodesic")
    p.add_argument("--profile", required=True)
    p.add_argument("--horizon", type=float, required=True)
    p.add_argument("--step", type=float, default=None)

    p = sub.add_parser("angenent", help="implied satellite table")
    p.add_argument("--rho", required=True)
    p.add_argument("--max", dest="max_pq", type=int, default=10)

    p = sub.add_parser("openbook-growth",
                       help="periodic-orbit growth of a torus monodromy")
    p.add_argument("--k-max", type=int, default=12)
    p.add_argument("--matrix", default="2,1,1,1",
                   help="entries a,b,c,d of the monodromy")

    p = sub.add_parser("oracle", help="numerical cross-checks")
    osub = p.add_subparsers(dest="target", required=True, parser_class=_Parser)
    ov = osub.add_parser("verify")
    ov.add_argument("--profile", required=True,
                    help="JSON file with theta1, theta2 and curve samples")
    ov.add_argument("--duration", type=float, default=50.0)
    ol = osub.add_parser("linking")
    ol.add_argument("--k", type=int, default=1)

    return top


# -- subcommand payloads ------------------------------------------------


def _parse_surds(args, *names: str) -> None:
    # surd flags arrive as text; parse failures are input errors (exit 2),
    # not usage errors, so conversion happens here rather than in argparse
    for name in names:
        value = getattr(args, name)
        if isinstance(value, str):
            setattr(args, name, Surd.parse(value))


def _orbit_from_args(theta: Optional[Surd], n: Optional[int]) -> OrbitSpec:
    if (theta is None) == (n is None):
        raise InputError("give exactly one of --theta and --n")
    if theta is not None:
        return OrbitSpec.elliptic("orbit", theta)
    return OrbitSpec.hyperbolic("orbit", n)


def _payload_cz(args) -> dict:
    _parse_surds(args, "theta")
    orbit = _orbit_from_args(args.theta, args.n)
    return {
        "cz": cz(orbit, args.k),
        "alpha_minus": alpha_minus(orbit, args.k),
        "alpha_plus": alpha_plus(orbit, args.k),
        "parity": parity(orbit, args.k),
        "sft_good": sft_good(orbit, args.k),
    }


def _payload_intersect(args) -> dict:
    _parse_surds(args, "theta")
    orbit = _orbit_from_args(args.theta, args.n)
    z1 = PunctureDatum(POSITIVE, orbit, args.k1)
    z2 = PunctureDatum(POSITIVE, orbit, args.k2)
    return {
        "omega_plus": omega_plus(orbit, args.k1, args.k2),
        "omega_minus": omega_minus(orbit, args.k1, args.k2),
        "delta": delta_pair(z1, z2),
    }


def _payload_classify(args) -> dict:
    _parse_surds(args, "theta1", "theta2")
    profile = GammaProfile(args.theta1, args.theta2)
    fams = classify_orbits(profile, args.max_p)
    return {
        "families": [
            {"p": f.cls.p, "q": f.cls.q, "arc": f.arc,
             "gradings": list(f.gradings)}
            for f in fams
        ],
    }


def _payload_forcing(args) -> dict:
    _parse_surds(args, "theta1", "theta2")
    forced = forcing_hopf(args.theta1, args.theta2, args.max_p)
    return {
        "classes": [
            {"p": f.cls.p, "q": f.cls.q,
             "link_L1": f.link_L1, "link_L2": f.link_L2}
            for f in forced
        ],
    }


def _payload_geodesic_rho(args) -> dict:
    profile = CurvatureProfile.from_csv(args.profile)
    est = geodesic_rho(profile, args.horizon, args.step)
    return {
        "rho": est.rho,
        "error": est.error,
        "converged": est.converged,
        "zero_counts": [[h, c] for h, c in est.zero_counts],
    }


def _payload_angenent(args) -> dict:
    _parse_surds(args, "rho")
    rows = angenent_table(args.rho, args.max_pq)
    return {
        "rows": [
            {"p": r.p, "q": r.q, "link_gamma": r.link_gamma,
             "link_gamma_bar": r.link_gamma_bar}
            for r in rows
        ],
    }


def _payload_openbook(args) -> dict:
    try:
        a, b, c, d = (int(x) for x in args.matrix.split(","))
    except ValueError:
        raise InputError(f"bad --matrix value: {args.matrix!r}")
    A = MonodromyMatrix(a, b, c, d)
    rep = growth_report(A, args.k_max)
    return {
        "counts": list(rep.counts),
        "rate_estimate": rep.rate_estimate,
        "rate_exact": str(rep.rate_exact),
        "rate_exact_float": rep.rate_exact_float,
    }


def _payload_oracle(args) -> dict:
    from . import flow

    if args.target == "linking":
        k = args.k
        if k < 1:
            raise InputError("--k must be >= 1")
        est = flow.numeric_linking(flow.torus_curve(1.0, 0.0, k, 0),
                                   flow.torus_curve(0.0, 1.0, 0, 1))
        return {"k": k, "linking": est.value,
                "estimate": est.estimate, "confidence": est.confidence}

    with open(args.profile) as fh:
        doc = json.load(fh)
    profile = GammaProfile(
        Surd.parse(doc["theta1"]), Surd.parse(doc["theta2"]),
        tuple(tuple(row) for row in doc["samples"]),
    )
    ts = [row[0] for row in profile.samples]
    checks = []
    for frac in (0.25, 0.5, 0.75):
        t = ts[0] + frac * (ts[-1] - ts[0])
        traj = flow.integrate_model_flow(profile, t, (0.0, 0.0),
                                         args.duration)
        detected = flow.detect_closed_orbit(traj.slope_ratio, 50)
        checks.append({
            "torus_param": t,
            "r_drift": traj.r_drift,
            "surface_residual": traj.surface_residual,
            "slope_ratio": traj.slope_ratio,
            "closed_orbit": (
                [detected.numerator, detected.denominator]
                if detected is not None else None
            ),
        })
    ok = all(c["r_drift"] < 1e-9 and c["surface_residual"] < 1e-9
             for c in checks)
    return {"checks": checks, "ok": ok}


_PAYLOADS = {
    "cz": _payload_cz,
    "intersect": _payload_intersect,
    "classify-star": _payload_classify,
    "forcing": _payload_forcing,
    "geodesic-rho": _payload_geodesic_rho,
    "angenent": _payload_angenent,
    "openbook-growth": _payload_openbook,
    "oracle": _payload_oracle,
}


def _normalized_inputs(args) -> dict:
    out = {}
    for key, value in sorted(vars(args).items()):
        if key in ("format", "config", "command", "target") or value is None:
            continue
        out[key] = str(value) if isinstance(value, Surd) else value
    return out


def _render_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"),
                      allow_nan=False) + "\n"


def _flatten(prefix: str, value: Any, rows: list[tuple[str, str]]) -> None:
    if isinstance(value, dict):
        for k in sorted(value):
            _flatten(f"{prefix}.{k}" if prefix else str(k), value[k], rows)
    elif isinstance(value, (list, tuple)):
        for i, v in enumerate(value):
            _flatten(f"{prefix}[{i}]", v, rows)
    else:
        rows.append((prefix, json.dumps(value)))


def _render_tsv(doc: dict) -> str:
    rows: list[tuple[str, str]] = []
    _flatten("", doc["payload"], rows)
    return "".join(f"{k}\t{v}\n" for k, v in rows)


def _apply_config(args, argv: Sequence[str]) -> None:
    if not args.config:
        return
    with open(args.config) as fh:
        conf = json.load(fh)
    if not isinstance(conf, dict):
        raise InputError("config file must hold a JSON object")
    given = {tok.split("=", 1)[0] for tok in argv if tok.startswith("--")}
    for key, value in conf.items():
        dest = key.replace("-", "_")
        if not hasattr(args, dest):
            raise InputError(f"unknown config key: {key}")
        if f"--{key}" in given or f"--{dest.replace('_', '-')}" in given:
            continue  # flags win
        setattr(args, dest, value)


def run(argv: Sequence[str]) -> int:
    """Execute one command; returns the exit code, printing the document
    to standard output and diagnostics to standard error."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        _apply_config(args, argv)
        bits = _precision_bits()
        payload = _PAYLOADS[args.command](args)
        doc = {
            "command": args.command + (
                f" {args.target}" if getattr(args, "target", None) else ""
            ),
            "inputs": _normalized_inputs(args),
            "payload": payload,
            "provenance": {
                "version": __version__,
                "precision_bits": bits,
                "surface_tolerance": 1e-9,
            },
        }
        out = _render_json(doc) if args.format == "json" else _render_tsv(doc)
        sys.stdout.write(out)
        return 0
    except OracleError as exc:
        print(f"oracle failure: {exc}", file=sys.stderr)
        return 3
    except InputError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 2
    except ReebforceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    raise SystemExit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
