"""Command-line interface.

Every command reads JSON inputs, prints one JSON report to stdout, and
exits 0 on pass/success, 1 on a definite negative (not pure, distinct,
covariance failure, selftest failure), or 2 on an input or usage error.
Reports are byte-identical for a fixed seed and inputs.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import asdict, dataclass

import numpy as np

from . import connection, jordan, jsonio, quiver, selftest, weights
from .errors import ModulikitError
from .linalg import DEFAULT_TOL

SEED_ENV_VAR = "MODULIKIT_SEED"


@dataclass
class RunConfig:
    command: str
    inputs: list[str]
    tol: float
    max_len: int | None
    convention: str
    seed: int


def _resolve_seed(value: int | None) -> int:
    if value is not None:
        return int(value)
    env = os.environ.get(SEED_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise ValueError(f"{SEED_ENV_VAR} must be an integer, got {env!r}") from exc
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="modulikit",
        description="Weight gradings, covariant connection data, chain-quiver invariants, "
        "and Jordan triple spectral tools.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, n_inputs=1):
        p = sub.add_parser(name, help=help_text)
        if n_inputs:
            p.add_argument(
                "--input",
                action="append",
                required=True,
                metavar="PATH",
                help="JSON input path" + (" (repeat for each input)" if n_inputs > 1 else ""),
            )
        p.add_argument("--tol", type=float, default=DEFAULT_TOL, help="decision tolerance")
        p.add_argument("--max-len", type=int, default=None, help="cycle length bound")
        p.add_argument(
            "--convention",
            choices=quiver.MOMENT_CONVENTIONS,
            default="paper",
            help="moment map convention",
        )
        p.add_argument("--seed", type=int, default=None, help=f"PRNG seed (default {SEED_ENV_VAR} or 0)")
        return p

    add("decompose", "weight blocks and chains of integer weight data")
    add("validate", "structural and sampled covariance check of connection data")
    add("pure", "commutator purity of a frame tuple")
    add("involute", "apply the involution (A, B) -> (-B*, -A*)")
    add("hermitian", "test whether connection data is an involution fixed point")
    add("gauge", "conjugate connection data by a centralizer element (two --input: data, gauge)", 2)
    add("invariants", "cycle-word traces of a double-quiver representation")
    add("equiv", "compare trace invariants of two representations (two --input)", 2)
    add("moment", "moment map of a double-quiver representation")
    add("jordan-spectral", "ascending spectral decomposition of a rectangular matrix")
    add("selftest", "run the seeded property suite", 0)
    return parser


def _expect_inputs(cfg: RunConfig, n: int) -> None:
    if len(cfg.inputs) != n:
        raise ValueError(f"{cfg.command} needs exactly {n} --input path(s), got {len(cfg.inputs)}")


def _report_violations(report: connection.CheckReport) -> list[dict]:
    return [asdict(v) for v in report.violations]


def _cmd_decompose(cfg: RunConfig) -> tuple[int, dict]:
    _expect_inputs(cfg, 1)
    w = jsonio.weight_data_from_json(jsonio.loads_path(cfg.inputs[0]))
    d = weights.decompose(w)
    blocks = [{"weight": list(b.weight), "indices": list(b.indices)} for b in d.blocks]
    chain_rows = None
    if d.rank == 1:
        ch = weights.chains(d)
        chain_rows = [
            {
                "base_weight": c.base_weight,
                "dims": list(c.dims),
                "indices": [list(ix) for ix in c.indices],
            }
            for c in ch.chains
        ]
    return 0, {
        "command": "decompose",
        "result": {"rank": d.rank, "dim": d.dim, "blocks": blocks, "chains": chain_rows},
        "violations": [],
        "tolerances_used": {},
    }


def _cmd_validate(cfg: RunConfig) -> tuple[int, dict]:
    _expect_inputs(cfg, 1)
    c = jsonio.connection_from_json(jsonio.loads_path(cfg.inputs[0]))
    report = connection.validate_covariance(c, tol=cfg.tol, seed=cfg.seed)
    return (0 if report.ok else 1), {
        "command": "validate",
        "result": "pass" if report.ok else "fail",
        "worst": report.worst,
        "checks": report.checks,
        "violations": _report_violations(report),
        "tolerances_used": {"tol": cfg.tol},
    }


def _cmd_pure(cfg: RunConfig) -> tuple[int, dict]:
    _expect_inputs(cfg, 1)
    t = jsonio.frame_tuple_from_json(jsonio.loads_path(cfg.inputs[0]))
    result = connection.is_pure(t, tol=cfg.tol)
    return (0 if result.pure else 1), {
        "command": "pure",
        "result": bool(result.pure),
        "witness": asdict(result.witness) if result.witness else None,
        "violations": [],
        "tolerances_used": {"tol": cfg.tol},
    }


def _cmd_involute(cfg: RunConfig) -> tuple[int, dict]:
    _expect_inputs(cfg, 1)
    c = jsonio.connection_from_json(jsonio.loads_path(cfg.inputs[0]))
    return 0, {
        "command": "involute",
        "result": jsonio.connection_to_json(connection.involution(c)),
        "violations": [],
        "tolerances_used": {},
    }


def _cmd_hermitian(cfg: RunConfig) -> tuple[int, dict]:
    _expect_inputs(cfg, 1)
    c = jsonio.connection_from_json(jsonio.loads_path(cfg.inputs[0]))
    verdict = connection.is_hermitian(c, tol=cfg.tol)
    return (0 if verdict else 1), {
        "command": "hermitian",
        "result": bool(verdict),
        "violations": [],
        "tolerances_used": {"tol": cfg.tol},
    }


def _cmd_gauge(cfg: RunConfig) -> tuple[int, dict]:
    _expect_inputs(cfg, 2)
    c = jsonio.connection_from_json(jsonio.loads_path(cfg.inputs[0]))
    h = jsonio.matrix_from_json(jsonio.loads_path(cfg.inputs[1]))
    moved = connection.gauge(c, h, tol=cfg.tol)
    return 0, {
        "command": "gauge",
        "result": jsonio.connection_to_json(moved),
        "violations": [],
        "tolerances_used": {"tol": cfg.tol},
    }


def _cmd_invariants(cfg: RunConfig) -> tuple[int, dict]:
    _expect_inputs(cfg, 1)
    rep = jsonio.rep_from_json(jsonio.loads_path(cfg.inputs[0]))
    vec = quiver.invariants(rep, max_len=cfg.max_len)
    entries = {",".join(word): jsonio.complex_to_json(t) for word, t in vec.entries.items()}
    return 0, {
        "command": "invariants",
        "result": {"max_len": vec.max_len, "entries": entries},
        "violations": [],
        "tolerances_used": {},
    }


def _cmd_equiv(cfg: RunConfig) -> tuple[int, dict]:
    _expect_inputs(cfg, 2)
    r1 = jsonio.rep_from_json(jsonio.loads_path(cfg.inputs[0]))
    r2 = jsonio.rep_from_json(jsonio.loads_path(cfg.inputs[1]))
    cert = quiver.equivalence_certificate(r1, r2, max_len=cfg.max_len, tol=cfg.tol)
    payload = {"verdict": cert.verdict, "max_len": cert.max_len}
    if cert.distinct:
        payload["witness"] = ",".join(cert.witness)
        payload["left_trace"] = jsonio.complex_to_json(cert.left_trace)
        payload["right_trace"] = jsonio.complex_to_json(cert.right_trace)
    return (1 if cert.distinct else 0), {
        "command": "equiv",
        "result": payload,
        "violations": [],
        "tolerances_used": {"tol": cfg.tol},
    }


def _cmd_moment(cfg: RunConfig) -> tuple[int, dict]:
    _expect_inputs(cfg, 1)
    rep = jsonio.rep_from_json(jsonio.loads_path(cfg.inputs[0]))
    mus = quiver.moment_map(rep, convention=cfg.convention)
    worst = max((float(np.max(np.abs(mu))) for mu in mus if mu.size), default=0.0)
    return 0, {
        "command": "moment",
        "result": {
            "convention": cfg.convention,
            "vertices": [jsonio.matrix_to_json(mu) for mu in mus],
            "max_entry": worst,
        },
        "violations": [],
        "tolerances_used": {},
    }


def _cmd_jordan_spectral(cfg: RunConfig) -> tuple[int, dict]:
    _expect_inputs(cfg, 1)
    z = jsonio.matrix_from_json(jsonio.loads_path(cfg.inputs[0]))
    sd = jordan.spectral(z)
    return 0, {
        "command": "jordan-spectral",
        "result": {
            "t": [float(x) for x in sd.t],
            "u": jsonio.matrix_to_json(sd.u),
            "v": jsonio.matrix_to_json(sd.v),
        },
        "violations": [],
        "tolerances_used": {},
    }


def _cmd_selftest(cfg: RunConfig) -> tuple[int, dict]:
    report = selftest.run_properties(seed=cfg.seed)
    report["violations"] = report.pop("failed")
    report["tolerances_used"] = {"default": DEFAULT_TOL}
    return (0 if report["result"] == "pass" else 1), report


_HANDLERS = {
    "decompose": _cmd_decompose,
    "validate": _cmd_validate,
    "pure": _cmd_pure,
    "involute": _cmd_involute,
    "hermitian": _cmd_hermitian,
    "gauge": _cmd_gauge,
    "invariants": _cmd_invariants,
    "equiv": _cmd_equiv,
    "moment": _cmd_moment,
    "jordan-spectral": _cmd_jordan_spectral,
    "selftest": _cmd_selftest,
}


def run(cfg: RunConfig) -> tuple[int, dict]:
    """Dispatch a parsed configuration; returns (exit code, report)."""
    return _HANDLERS[cfg.command](cfg)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(
            command=args.command,
            inputs=list(getattr(args, "input", None) or []),
            tol=float(args.tol),
            max_len=args.max_len,
            convention=args.convention,
            seed=_resolve_seed(args.seed),
        )
        code, report = run(cfg)
    except (ModulikitError, ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(jsonio.dumps(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
