"""Command-line front end: one JSON document (or TSV) per invocation.

Exit status: 0 on success, 1 when an invariant check fails, 2 on usage or
input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from typing import Any, Sequence

from . import selfcheck
from .errors import InvariantViolation, SatcombError
from .minimal import classify, decompose, minimal_elements
from .paths import count_dominant_paths, enumerate_paths, iterated_tensor
from .root_datum import RootDatum, format_half, parse_datum
from .satake import (
    constant_term_predicted,
    euler_char_predicted,
    kostka_foulkes,
    stratum_dim,
    verify_kostka_weight_identity,
    whittaker_predicted,
)
from .weights import omega_set, weight_multiplicity, weyl_dimension
from .weyl import orbit

SCHEMA = "1"
DEFAULT_SELFCHECK_TYPES = "A1:sc,A1:adj,A2:adj,A2:sc,B2:sc,A3:sc"


class UsageError(Exception):
    pass


def parse_coweight(text: str, rank: int) -> tuple[int, ...]:
    try:
        v = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise UsageError(f"cannot parse coweight {text!r}") from exc
    if len(v) != rank:
        raise UsageError(f"coweight {text!r} has {len(v)} entries, rank is {rank}")
    return v


def parse_sequence(text: str, rank: int) -> list[tuple[int, ...]]:
    """``"1,0;0,1"`` or, without semicolons, a flat list chunked by rank."""
    if ";" in text:
        return [parse_coweight(part, rank) for part in text.split(";") if part.strip()]
    try:
        flat = [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(f"cannot parse sequence {text!r}") from exc
    if not flat or len(flat) % rank:
        raise UsageError(f"sequence {text!r} is not a multiple of rank {rank}")
    return [tuple(flat[i : i + rank]) for i in range(0, len(flat), rank)]


def thread_count() -> int:
    raw = os.environ.get("SATCOMB_THREADS")
    if raw is None or raw == "":
        return 1
    try:
        n = int(raw)
    except ValueError as exc:
        raise UsageError(f"SATCOMB_THREADS must be a positive integer, got {raw!r}") from exc
    if n < 1:
        raise UsageError(f"SATCOMB_THREADS must be a positive integer, got {raw!r}")
    return n


def _need(args, name: str) -> str:
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"--{name.replace('_', '-')} is required for {args.command}")
    return value


def _cw(args, d: RootDatum, name: str) -> tuple[int, ...]:
    return parse_coweight(_need(args, name), d.rank)


def _multiset(m: dict) -> list[dict]:
    return [{"coweight": list(k), "multiplicity": v} for k, v in m.items()]


def _signed(v, with_scalar: bool = True) -> dict:
    out = v.as_json(with_scalar)
    out["q_exponent"] = None if v.is_zero else format_half(v.half_exponent)
    return out


# --------------------------------------------------------------------------
# commands; each returns (inputs, result, ok)


def cmd_classify(args, d):
    mu = _cw(args, d, "coweight")
    return {"coweight": list(mu)}, classify(d, mu).as_json(), True


def cmd_minimal(args, d):
    return {}, [dict(coweight=list(mu), **cls.as_json()) for mu, cls in minimal_elements(d)], True


def cmd_omega(args, d):
    lam = _cw(args, d, "lambda_")
    return {"lambda": list(lam)}, [list(v) for v in omega_set(d, lam)], True


def cmd_orbit(args, d):
    nu = _cw(args, d, "coweight")
    return {"coweight": list(nu)}, [list(v) for v in orbit(d, nu)], True


def cmd_mult(args, d):
    lam, nu = _cw(args, d, "lambda_"), _cw(args, d, "nu")
    return {"lambda": list(lam), "nu": list(nu)}, {"multiplicity": weight_multiplicity(d, lam, nu)}, True


def cmd_dim(args, d):
    lam = _cw(args, d, "lambda_")
    return {"lambda": list(lam)}, {"dimension": weyl_dimension(d, lam)}, True


def cmd_tensor(args, d):
    seq = parse_sequence(_need(args, "mu"), d.rank)
    m = iterated_tensor(d, seq)
    return {"mu": [list(s) for s in seq]}, {"decomposition": _multiset(m)}, True


def cmd_paths(args, d):
    seq = parse_sequence(_need(args, "mu"), d.rank)
    nu = _cw(args, d, "nu")
    paths = enumerate_paths(d, seq, nu, dominant_only=not args.all)
    inputs = {"mu": [list(s) for s in seq], "nu": list(nu), "all": bool(args.all)}
    return inputs, {"count": len(paths), "paths": [p.as_json() for p in paths]}, True


def cmd_count(args, d):
    seq = parse_sequence(_need(args, "mu"), d.rank)
    nu = _cw(args, d, "nu")
    return {"mu": [list(s) for s in seq], "nu": list(nu)}, {"count": count_dominant_paths(d, seq, nu)}, True


def cmd_decompose(args, d):
    lam = _cw(args, d, "lambda_")
    dec = decompose(d, lam)
    result = {
        "mu": [list(m) for m in dec.mu_seq],
        "path": dec.path.as_json(),
        "norms": [str(n) for n in dec.norms],
    }
    return {"lambda": list(lam)}, result, True


def cmd_kostka(args, d):
    lam = _cw(args, d, "lambda_")
    mu = parse_coweight(_need(args, "mu"), d.rank)
    k = kostka_foulkes(d, lam, mu)
    result = {"coefficients": list(k.coefficients), "polynomial": str(k), "at_one": k(1)}
    return {"lambda": list(lam), "mu": list(mu)}, result, True


def cmd_verify_kostka(args, d):
    report = verify_kostka_weight_identity(d, args.shell)
    violations = [
        {"lambda": list(rec.lam), "mu": list(rec.mu), "kostka": str(rec.kostka), "multiplicity": rec.multiplicity, "problems": p}
        for rec, p in report["violations"]
    ]
    result = {"checked": report["checked"], "violations": violations}
    return {"shell": args.shell}, result, not violations


def cmd_euler(args, d):
    lam, nu = _cw(args, d, "lambda_"), _cw(args, d, "nu")
    return {"lambda": list(lam), "nu": list(nu)}, {"euler": euler_char_predicted(d, lam, nu)}, True


def cmd_stratum_dim(args, d):
    lam, nu = _cw(args, d, "lambda_"), _cw(args, d, "nu")
    return {"lambda": list(lam), "nu": list(nu)}, {"dimension": stratum_dim(d, lam, nu)}, True


def cmd_constant_term(args, d):
    lam, nu = _cw(args, d, "lambda_"), _cw(args, d, "nu")
    return {"lambda": list(lam), "nu": list(nu)}, _signed(constant_term_predicted(d, lam, nu)), True


def cmd_whittaker(args, d):
    lam, nu = _cw(args, d, "lambda_"), _cw(args, d, "nu")
    v = whittaker_predicted(d, lam, nu)
    return {"lambda": list(lam), "nu": list(nu)}, v.as_json(with_scalar=False), True


COMMANDS = {
    "classify": (cmd_classify, "classify a dominant coweight (minuscule / quasi-minuscule / not minimal)"),
    "minimal": (cmd_minimal, "list the minimal nonzero dominant coweights"),
    "omega": (cmd_omega, "weights of V(lambda)"),
    "orbit": (cmd_orbit, "Weyl group orbit of a coweight"),
    "mult": (cmd_mult, "weight multiplicity m_lambda(nu)"),
    "dim": (cmd_dim, "Weyl dimension of V(lambda)"),
    "tensor": (cmd_tensor, "decompose V(mu_1) x ... x V(mu_n) for mu_i minimal"),
    "paths": (cmd_paths, "enumerate mu-paths from 0 to nu"),
    "count": (cmd_count, "count dominant mu-paths from 0 to nu"),
    "decompose": (cmd_decompose, "write lambda as the end of a dominant path over minimal coweights"),
    "kostka": (cmd_kostka, "Kostka-Foulkes polynomial K_{lambda,mu}(q)"),
    "verify-kostka": (cmd_verify_kostka, "check K(1) = m on a dominant shell"),
    "euler": (cmd_euler, "predicted Euler characteristic"),
    "stratum-dim": (cmd_stratum_dim, "dimension <rho, lambda + nu>"),
    "constant-term": (cmd_constant_term, "predicted constant-term coefficient"),
    "whittaker": (cmd_whittaker, "predicted Whittaker coefficient"),
}


VALUE_OPTIONS = {"--coweight", "--lambda", "--nu", "--mu"}
_NEGATIVE = re.compile(r"^-\d")


def _join_negative_values(argv: Sequence[str]) -> list[str]:
    """Let ``--nu -1,0`` through: argparse would read ``-1,0`` as an option."""
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in VALUE_OPTIONS:
            nxt = next(it, None)
            if nxt is not None and _NEGATIVE.match(nxt):
                out.append(f"{tok}={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
            continue
        out.append(tok)
    return out


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="satcomb", description="Exact root-datum combinatorics for geometric Satake.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--type", required=True, help='root datum, e.g. "A2:adj" or "B2:lattice=1,0;0,2"')
        p.add_argument("--coweight")
        p.add_argument("--lambda", dest="lambda_")
        p.add_argument("--nu")
        p.add_argument("--mu", help='coweight or sequence ("1,0;0,1" or a flat list chunked by rank)')
        p.add_argument("--shell", type=int, default=4, help="bound on 2<rho, lambda>")
        p.add_argument("--all", action="store_true", help="paths: include non-dominant paths")
        p.add_argument("--tsv", action="store_true")
    p = sub.add_parser("selfcheck", help="run the invariant suite")
    p.add_argument("--types", default=DEFAULT_SELFCHECK_TYPES)
    p.add_argument("--shell", type=int, default=4)
    p.add_argument("--tsv", action="store_true")
    return parser


# --------------------------------------------------------------------------
# output


def _flatten(value: Any, prefix: str = "") -> list[tuple[str, str]]:
    if isinstance(value, dict):
        out = []
        for k in sorted(value):
            out += _flatten(value[k], f"{prefix}.{k}" if prefix else str(k))
        return out
    if isinstance(value, list) and any(isinstance(v, (dict, list)) for v in value):
        if all(isinstance(v, list) and not any(isinstance(x, (dict, list)) for x in v) for v in value):
            return [(prefix, ";".join(",".join(str(x) for x in v) for v in value))]
        out = []
        for i, v in enumerate(value):
            out += _flatten(v, f"{prefix}[{i}]")
        return out
    if isinstance(value, list):
        return [(prefix, ",".join(str(x) for x in value))]
    if value is None:
        return [(prefix, "")]
    if isinstance(value, bool):
        return [(prefix, "true" if value else "false")]
    return [(prefix, str(value))]


def render(record: dict, tsv: bool) -> str:
    if tsv:
        return "".join(f"{k}\t{v}\n" for k, v in _flatten(record))
    return json.dumps(record, sort_keys=True, ensure_ascii=False) + "\n"


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        argv = sys.argv[1:] if argv is None else argv
        args = build_parser().parse_args(_join_negative_values(argv))
        threads = thread_count()
        if args.command == "selfcheck":
            types = [t.strip() for t in args.types.split(",") if t.strip()]
            if not types:
                raise UsageError("--types is empty")
            for t in types:
                parse_datum(t)
            result = selfcheck.run(types, args.shell, threads)
            datum_name, inputs, ok = ",".join(types), {"types": types, "shell": args.shell}, result["ok"]
        else:
            d = parse_datum(args.type)
            handler = COMMANDS[args.command][0]
            inputs, result, ok = handler(args, d)
            datum_name = d.name
    except UsageError as exc:
        stderr.write(f"satcomb: usage error: {exc}\n")
        return 2
    except SatcombError as exc:
        stderr.write(f"satcomb: {type(exc).__name__}: {exc}\n")
        return 2
    except InvariantViolation as exc:
        stderr.write(f"satcomb: invariant violation: {exc}\n")
        return 1
    record = {"schema": SCHEMA, "command": args.command, "datum": datum_name, "inputs": inputs, "result": result}
    stdout.write(render(record, args.tsv))
    stdout.flush()
    return 0 if ok else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
