"""Command-line front end.

Exit codes: 0 success, 2 invalid parameters, 3 unreadable or malformed
input file, 4 input is not a positive-definite lattice.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .configproof import SUPPORTED_RANKS, solve_configuration
from .lattice import (
    GramParseError,
    NotPositiveDefinite,
    classify,
    design_test,
    enumerate_shell,
    inner_product_profile,
    load_gram,
    shell_count,
    shell_vector,
    span_shell,
)
from .modforms import extremal_theta, shell_size

EXIT_OK = 0
EXIT_PARAMS = 2
EXIT_PARSE = 3
EXIT_LATTICE = 4


class CommandError(Exception):
    def __init__(self, message, code=EXIT_PARAMS):
        super().__init__(message)
        self.code = code


def _coords(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise CommandError(f"bad coordinate list {text!r}") from None


def _norms(text: str) -> list[int]:
    vals = _coords(text)
    if not vals:
        raise CommandError("at least one norm is required")
    return vals


def cmd_theta(args):
    if args.terms < 1:
        raise CommandError("--terms must be at least 1")
    try:
        ell = args.rank // 24
        theta = extremal_theta(args.rank, max(args.terms, ell + 2))
    except ValueError as e:
        raise CommandError(str(e)) from None
    coeffs = theta.coeffs[: args.terms]
    payload = {"min_norm": theta.min_norm, "coefficients": [str(c) for c in coeffs]}
    text = [f"extremal theta series, rank {args.rank}, minimal norm {theta.min_norm}"]
    text += [f"  q^{k}: {c}" for k, c in enumerate(coeffs)]
    return {"rank": args.rank, "terms": args.terms}, payload, text


def cmd_shell_size(args):
    try:
        size = shell_size(args.rank, args.norm)
    except ValueError as e:
        raise CommandError(str(e)) from None
    payload = {"shell_size": str(size)}
    return {"rank": args.rank, "norm": args.norm}, payload, [str(size)]


def cmd_config(args):
    if args.rank not in SUPPORTED_RANKS:
        raise CommandError(f"rank must be one of {', '.join(map(str, SUPPORTED_RANKS))}")
    verdict = solve_configuration(args.rank)
    inst = verdict.system.instance
    payload = {
        "n": inst.n,
        "m0": inst.m0,
        "t": inst.t,
        "S": list(inst.S),
        "J": list(inst.J),
        "polynomials": [str(p) for p in verdict.system.polys],
        "matrix": [[str(x) for x in row] for row in verdict.system.matrix],
        "nullity": verdict.nullity,
        "solution": None if verdict.solution is None else [str(x) for x in verdict.solution],
        "outcome": verdict.outcome.value,
    }
    text = [
        f"rank {inst.n}: minimal norm {inst.m0}, design strength {inst.t}",
        f"degrees S = {list(inst.S)}, indices J = {list(inst.J)}",
    ]
    for s, p, row in zip(inst.S, verdict.system.polys, verdict.system.matrix):
        text.append(f"  s={s:<3} Q = {p}")
        text.append(f"        row {[str(x) for x in row]}")
    if verdict.solution is not None:
        text.append("N_j proportional to: " + ", ".join(f"N_{j}={v}" for j, v in zip(inst.J, verdict.solution)))
    text.append(f"outcome: {verdict.outcome.value}")
    return {"rank": args.rank}, payload, text


def _load(path):
    try:
        return load_gram(path)
    except GramParseError as e:
        raise CommandError(f"{path}: {e}", EXIT_PARSE) from None
    except NotPositiveDefinite as e:
        raise CommandError(f"{path}: not positive definite ({e})", EXIT_LATTICE) from None
    except OSError as e:
        raise CommandError(f"{path}: {e.strerror or e}", EXIT_PARSE) from None


def _vector(G, text, what):
    v = _coords(text)
    try:
        return shell_vector(G, v)
    except ValueError as e:
        raise CommandError(f"{what}: {e}") from None


def cmd_lattice(args):
    G = _load(args.gram)
    inputs = {"gram": args.gram}
    sub = args.lattice_command
    if sub == "check":
        c = classify(G)
        payload = {k: (str(v) if k == "det" else v) for k, v in c.asdict().items()}
        text = [f"{k}: {v}" for k, v in c.asdict().items()]
    elif sub == "shell":
        inputs["norm"] = args.norm
        if args.norm < 0:
            raise CommandError("--norm must be nonnegative")
        if args.count_only:
            n = shell_count(G, args.norm, args.threads)
            payload = {"count": str(n)}
            text = [str(n)]
        else:
            shell = enumerate_shell(G, args.norm, args.threads)
            payload = {"count": str(len(shell)), "vectors": [list(v) for v in shell]}
            text = [f"{len(shell)} vectors of norm {args.norm}"] + [" ".join(map(str, v)) for v in shell]
    elif sub == "span":
        norms = _norms(args.norms)
        inputs["norms"] = norms
        span = span_shell(G, norms, args.threads)
        index = "infinite" if span.index is None else str(span.index)
        payload = {"rank": span.rank, "index": index, "hnf": [[str(x) for x in row] for row in span.hnf_basis]}
        text = [f"span of norms {norms}: rank {span.rank}, index {index}"]
        text += ["  " + " ".join(map(str, row)) for row in span.hnf_basis]
    elif sub == "profile":
        x0 = _vector(G, args.x0, "--x0")
        inputs.update(norm=args.norm, x0=list(x0.coords))
        prof = inner_product_profile(G, x0, args.norm, args.threads)
        payload = {
            "x0_norm": x0.norm,
            "counts": {str(j): str(c) for j, c in prof.counts.items()},
            "shell_size": str(prof.shell_size),
        }
        text = [f"x0 norm {x0.norm}, shell norm {args.norm}, shell size {prof.shell_size}"]
        text += [f"  N_{j} = {c}" for j, c in prof.counts.items()]
    elif sub == "design":
        probe = _vector(G, args.probe, "--probe")
        inputs.update(norm=args.norm, degree=args.degree, probe=list(probe.coords))
        if probe.norm == 0:
            raise CommandError("--probe must be a nonzero vector")
        try:
            total = design_test(G, args.norm, args.degree, probe, args.threads)
        except ValueError as e:
            raise CommandError(str(e)) from None
        payload = {"sum": str(total), "vanishes": total == 0}
        text = [f"sum = {total} ({'vanishes' if total == 0 else 'does not vanish'})"]
    else:  # pragma: no cover - argparse enforces the choices
        raise CommandError(f"unknown lattice command {sub!r}")
    return inputs, payload, text


def _threads_default():
    env = os.environ.get("TYPEII_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="typeii",
        description="Extremal theta series, the inner-product count system, and lattice shell checks.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON result object")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("theta", parents=[common], help="coefficients of the extremal theta series")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--terms", type=int, default=None)
    p.set_defaults(func=cmd_theta, name="theta")

    p = sub.add_parser("shell-size", parents=[common], help="shell size of an extremal lattice")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--norm", type=int, required=True)
    p.set_defaults(func=cmd_shell_size, name="shell-size")

    p = sub.add_parser("config-system", parents=[common], help="build and solve the count system")
    p.add_argument("--rank", type=int, required=True)
    p.set_defaults(func=cmd_config, name="config-system")

    p = sub.add_parser("lattice", help="checks on an explicit lattice given by a Gram file")
    lsub = p.add_subparsers(dest="lattice_command", required=True)
    lcommon = argparse.ArgumentParser(add_help=False, parents=[common])
    lcommon.add_argument("gram", help="Gram matrix file (or the name of a bundled asset)")
    lcommon.add_argument("--threads", type=int, default=_threads_default())

    q = lsub.add_parser("check", parents=[lcommon], help="integral/even/unimodular/extremal")
    q = lsub.add_parser("shell", parents=[lcommon], help="enumerate the vectors of one norm")
    q.add_argument("--norm", type=int, required=True)
    q.add_argument("--count-only", action="store_true")
    q = lsub.add_parser("span", parents=[lcommon], help="HNF and index of the span of shells")
    q.add_argument("--norms", required=True, help="comma-separated list of norms")
    q = lsub.add_parser("profile", parents=[lcommon], help="inner-product counts against x0")
    q.add_argument("--norm", type=int, required=True)
    q.add_argument("--x0", required=True, help="comma-separated basis coordinates")
    q = lsub.add_parser("design", parents=[lcommon], help="zonal vanishing sum over a shell")
    q.add_argument("--norm", type=int, required=True)
    q.add_argument("--degree", type=int, required=True)
    q.add_argument("--probe", required=True, help="comma-separated basis coordinates")
    p.set_defaults(func=cmd_lattice, name="lattice")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "theta" and args.terms is None:
        args.terms = args.rank // 24 + 4 if args.rank > 0 else 1
    if getattr(args, "threads", 1) < 1:
        args.threads = 1
    name = args.name if args.command != "lattice" else f"lattice {args.lattice_command}"
    try:
        inputs, payload, text = args.func(args)
    except CommandError as e:
        if args.json:
            result = {"command": name, "status": "error", "message": str(e)}
            print(json.dumps(result, indent=2))
        else:
            print(f"error: {e}", file=sys.stderr)
        return e.code
    if args.json:
        result = {"command": name, "inputs": inputs, "payload": payload, "status": "ok"}
        print(json.dumps(result, indent=2))
    else:
        print("\n".join(text))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
