"""Command-line front end ``qzero``.

Exit codes: 0 success, 2 a bound or exact check failed, 3 invalid input,
4 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from fractions import Fraction

from . import constants, lemmas
from .errors import CapExceeded, DegenerateRestriction, InvalidInput, QZeroError
from .exact import ExactHeight
from .heights import H_O_vector, Hfin_O, Hinf_D, h_D, height_H, height_subspace_D, height_subspace_K
from .instances import Instance
from .orders import compare_orders, frakM, frakN, sqrt_abs_discriminant, standard_order
from .quaternion import Algebra, coord_map
from .serialize import (
    certificate_to_json,
    dumps,
    height_to_json,
    instance_from_json,
    load_json,
    order_from_json,
    verify_certificate,
)
from .solver import SolverConfig, solve
from .trace_form import build_trace_matrix, form_heights, subspace_image

EXIT_OK, EXIT_VIOLATED, EXIT_INVALID, EXIT_CAP = 0, 2, 3, 4

log = logging.getLogger("qzero")


def _emit(report: dict, args) -> None:
    text = dumps(report)
    if getattr(args, "json_out", None):
        if args.json_out == "-":
            sys.stdout.write(text)
        else:
            with open(args.json_out, "w", encoding="utf-8") as fh:
                fh.write(text)
    for line in _render(report):
        print(line)


def _render(report: dict, prefix: str = ""):
    for key, val in report.items():
        if isinstance(val, dict) and {"base", "root"} <= val.keys():
            yield f"{prefix}{key}: {_fmt_height(val)}"
        elif isinstance(val, dict) and {"lo", "hi"} <= val.keys():
            yield f"{prefix}{key}: [{float.fromhex(val['lo']):.12g}, {float.fromhex(val['hi']):.12g}]"
        elif isinstance(val, dict):
            yield f"{prefix}{key}:"
            yield from _render(val, prefix + "  ")
        else:
            yield f"{prefix}{key}: {val}"


def _fmt_height(d: dict) -> str:
    exact = d["base"] if d["root"] == 1 else f"({d['base']})^(1/{d['root']})"
    return f"{exact} ~ {d['approx']}"


def _load_instance(args) -> Instance:
    override = load_json(args.order_file) if getattr(args, "order_file", None) else None
    return instance_from_json(load_json(args.path), override)


# -- subcommands ------------------------------------------------------------


def cmd_solve(args) -> int:
    inst = _load_instance(args)
    cfg = SolverConfig(enumeration_cap=args.cap, seed=args.seed, workers=args.parallel)
    cert = solve(inst.F, inst.Z, inst.O, cfg)
    report = certificate_to_json(cert, inst, args.cap, args.seed)
    text = dumps(report)
    if args.json_out and args.json_out != "-":
        with open(args.json_out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    log.info("verdicts: %s", cert.verdicts)
    return EXIT_OK if cert.ok else EXIT_VIOLATED


def cmd_height(args) -> int:
    inst = _load_instance(args)
    O = inst.O
    out: dict = {}
    if args.target == "vector":
        if inst.vector is None:
            raise InvalidInput("instance has no 'vector' field")
        x = inst.vector
        out = {
            "Hinf": height_to_json(Hinf_D(x)),
            "h": height_to_json(h_D(x)),
            "H_O": height_to_json(H_O_vector(O, x)),
            "H([x])": height_to_json(height_H(coord_map(x))),
        }
        if all(O.contains(q) for q in x):
            out["Hfin_O"] = height_to_json(Hfin_O(O, x))
    elif args.target == "form":
        Qf = build_trace_matrix(inst.F)
        fh = form_heights(inst.F, Qf, O)
        out = {k: height_to_json(getattr(fh, k)) for k in ("H_Q", "Hinf_F", "Hfin_O_F", "H_O_F", "Hfin_B")}
    elif args.target == "subspace":
        Z = inst.Z
        out = {
            "dim": Z.dim,
            "H_O": height_to_json(height_subspace_D(O, Z)),
            "H_O_D": height_to_json(height_subspace_D(standard_order(Z.algebra), Z)),
            "H(V_Z)": height_to_json(height_subspace_K(subspace_image(Z))),
        }
    else:
        raise InvalidInput(f"unknown target {args.target!r}")
    _emit(out, args)
    return EXIT_OK


def cmd_bound(args) -> int:
    n = args.n if args.n is not None else args.pos_n
    L = args.l if args.l is not None else args.pos_l
    alpha = args.alpha if args.alpha is not None else args.pos_alpha
    beta = args.beta if args.beta is not None else args.pos_beta
    if None in (n, L, alpha, beta):
        raise InvalidInput("bound needs N, L, alpha and beta")
    A = Algebra(alpha, beta)
    O = order_from_json(load_json(args.order_file), A) if args.order_file else standard_order(A)
    s, t = constants.s_t_constants(A)
    out = {
        "N": n,
        "L": L,
        "alpha": alpha,
        "beta": beta,
        "disc": O.discriminant,
        "sqrt|disc|": height_to_json(sqrt_abs_discriminant(O)),
        "frakM": height_to_json(frakM(O)),
        "frakN": frakN(O),
        "M(O, O_D)": height_to_json(compare_orders(O, standard_order(A)).M_value),
        "s": height_to_json(s),
        "t": height_to_json(t),
        "C_Q(1)": constants.C_K(1).to_json(),
        "B_Q(4L)": constants.B_K(4 * L).to_json(),
        "A": constants.A_K(n, L, A, O).to_json(),
    }
    _emit(out, args)
    return EXIT_OK


def cmd_check(args) -> int:
    data = load_json(args.path)
    if isinstance(data, dict) and data.get("format") == "qzero-certificate":
        ok, problems = verify_certificate(data)
        _emit({"certificate": "reproduced" if ok else "FAILED", "problems": problems or "none"}, args)
        return EXIT_OK if ok else EXIT_VIOLATED
    override = load_json(args.order_file) if args.order_file else None
    inst = instance_from_json(data, override)
    res = lemmas.check_lemmas(inst)
    shown = {k: ("n/a" if v is None else ("pass" if v else "FAIL")) for k, v in res.items()}
    _emit(shown, args)
    return EXIT_VIOLATED if any(v is False for v in res.values()) else EXIT_OK


def cmd_remark42(args) -> int:
    rep = lemmas.twisted_pair(args.n)
    out = {
        "n": rep.n,
        "[O : O(i+nj)]": rep.ideal_index,
        "Hfin_O(F)": height_to_json(rep.Hfin_O_F),
        "Hfin_O(F) expected": height_to_json(ExactHeight(Fraction(1, 1 + rep.n**2), 2)),
        "Hfin(B)": height_to_json(rep.Hfin_B),
        "Hfin(B) expected": height_to_json(ExactHeight(Fraction(1, 2))),
        "Hfin(B) / Hfin_O(F)": height_to_json(rep.Hfin_B / rep.Hfin_O_F),
        "matches": rep.matches_closed_forms,
    }
    _emit(out, args)
    return EXIT_OK if rep.matches_closed_forms else EXIT_VIOLATED


def cmd_selftest(args) -> int:
    rep = lemmas.selftest(args.seed, args.iters)
    _emit({"seed": rep.seed, "iters": rep.iters, "checks": rep.counts, "failures": rep.failures or "none"}, args)
    return EXIT_OK if rep.ok else EXIT_VIOLATED


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=64, help="enumeration cap (default 64)")
    common.add_argument("--order-file", help="JSON file with an order basis or name, overriding the instance")
    common.add_argument("--json-out", help="write the JSON report here ('-' for stdout)")
    common.add_argument("--parallel", type=int, default=1, metavar="WORKERS", help="worker processes for enumeration")
    common.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(prog="qzero", description="Small zeros of hermitian forms over definite quaternion algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", parents=[common], help="basis of zeros with a certificate")
    s.add_argument("path")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("height", parents=[common], help="heights of a vector, form or subspace")
    s.add_argument("path")
    s.add_argument("--target", choices=["vector", "form", "subspace"], default="subspace")
    s.set_defaults(func=cmd_height)

    s = sub.add_parser("bound", parents=[common], help="constants of the small-zero bound")
    for name in ("n", "l", "alpha", "beta"):
        s.add_argument(f"pos_{name}", nargs="?", type=int, metavar=name.upper() if name in "nl" else name)
        s.add_argument(f"--{name}", type=int)
    s.set_defaults(func=cmd_bound)

    s = sub.add_parser("check", parents=[common], help="re-verify a certificate or run the lemma checks on an instance")
    s.add_argument("path")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("remark42", parents=[common], help="finite heights of the twisted pair form")
    s.add_argument("--n", type=int, default=2)
    s.set_defaults(func=cmd_remark42)

    s = sub.add_parser("selftest", parents=[common], help="randomised lemma checks")
    s.add_argument("--iters", type=int, default=100)
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=os.environ.get("QZERO_LOG", "WARNING").upper(), format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        if args.cap < 1 or args.parallel < 1:
            raise InvalidInput("--cap and --parallel must be positive")
        return args.func(args)
    except CapExceeded as e:
        print(f"cap exceeded: {e}", file=sys.stderr)
        return EXIT_CAP
    except DegenerateRestriction as e:
        print(f"invalid input: {e}; radical has dimension {len(e.radical)}", file=sys.stderr)
        return EXIT_INVALID
    except (InvalidInput, ValueError) as e:
        print(f"invalid input: {e}", file=sys.stderr)
        return EXIT_INVALID
    except QZeroError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_VIOLATED


if __name__ == "__main__":
    sys.exit(main())
