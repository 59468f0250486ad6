"""JSON instance and certificate files.

Rationals are strings such as ``"-3/2"``; quaternions are 4-element lists of
coordinates over ``1, i, j, k``; float enclosures use ``float.hex`` so files
are byte-for-byte reproducible.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .errors import InvalidInput
from .exact import ExactHeight
from .heights import SubspaceD
from .instances import Instance
from .orders import Order, hurwitz_order, make_order, standard_order
from .quaternion import Algebra, HermitianForm, Quat
from .solver import ZeroBasisCertificate, evaluate_certificate

FORMAT_VERSION = 1


def _frac(s) -> Fraction:
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise InvalidInput(f"expected a rational string, got {s!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as e:
        raise InvalidInput(f"bad rational {s!r}") from e


def _int(s) -> int:
    q = _frac(s)
    if q.denominator != 1:
        raise InvalidInput(f"expected an integer, got {s!r}")
    return int(q)


def quat_to_json(q: Quat) -> list[str]:
    return [str(c) for c in q.coords]


def quat_from_json(v, algebra: Algebra) -> Quat:
    if not isinstance(v, list) or len(v) != 4:
        raise InvalidInput(f"a quaternion is a list of 4 coordinates, got {v!r}")
    return algebra.quat(*(_frac(c) for c in v))


def vector_from_json(v, algebra: Algebra) -> tuple[Quat, ...]:
    if not isinstance(v, list) or not v:
        raise InvalidInput(f"expected a nonempty list of quaternions, got {v!r}")
    return tuple(quat_from_json(q, algebra) for q in v)


def height_to_json(h: ExactHeight) -> dict:
    return h.to_json()


# -- orders -----------------------------------------------------------------


def order_to_json(O: Order) -> dict:
    return {"basis": [quat_to_json(w) for w in O.basis]}


def order_from_json(d: Any, algebra: Algebra) -> Order:
    if d is None:
        return standard_order(algebra)
    if not isinstance(d, dict):
        raise InvalidInput("order must be an object")
    if "order" in d:
        d = d["order"]
    name = d.get("name")
    if name == "standard":
        return standard_order(algebra)
    if name == "hurwitz":
        return hurwitz_order(algebra)
    if name is not None:
        raise InvalidInput(f"unknown order name {name!r}")
    basis = d.get("basis")
    if not isinstance(basis, list) or len(basis) != 4:
        raise InvalidInput("order basis must list 4 quaternions")
    return make_order(algebra, [quat_from_json(w, algebra) for w in basis])


# -- instances --------------------------------------------------------------


def instance_from_json(d: Any, order_override: dict | None = None) -> Instance:
    if not isinstance(d, dict):
        raise InvalidInput("instance must be a JSON object")
    try:
        alg = d["algebra"]
        A = Algebra(_int(alg["alpha"]), _int(alg["beta"]))
        form = d["form"]
        n = _int(form["n"])
        rows = form["entries"]
    except (KeyError, TypeError) as e:
        raise InvalidInput(f"missing field {e}") from e
    if n < 1 or not isinstance(rows, list) or len(rows) != n or any(not isinstance(r, list) or len(r) != n for r in rows):
        raise InvalidInput(f"form entries must be an {n} x {n} array of quaternions")
    F = HermitianForm([[quat_from_json(q, A) for q in row] for row in rows], A)
    O = order_from_json(order_override if order_override is not None else d.get("order"), A)
    sub = d.get("subspace")
    if sub is None:
        Z = SubspaceD.full(A, n)
    else:
        cols = sub.get("basis_cols") if isinstance(sub, dict) else None
        if not isinstance(cols, list) or not cols:
            raise InvalidInput("subspace.basis_cols must be a nonempty list")
        vecs = [vector_from_json(c, A) for c in cols]
        if any(len(v) != n for v in vecs):
            raise InvalidInput(f"subspace vectors must have length {n}")
        Z = SubspaceD.from_basis(A, vecs)
    vec = d.get("vector")
    vector = vector_from_json(vec, A) if vec is not None else None
    if vector is not None and len(vector) != n:
        raise InvalidInput(f"vector must have length {n}")
    return Instance(F, Z, O, str(d.get("name", "")), vector)


def instance_to_json(inst: Instance) -> dict:
    A = inst.algebra
    out = {
        "algebra": {"alpha": str(A.alpha), "beta": str(A.beta)},
        "order": order_to_json(inst.O),
        "form": {"n": inst.F.n, "entries": [[quat_to_json(q) for q in row] for row in inst.F.matrix]},
        "subspace": {"basis_cols": [[quat_to_json(q) for q in v] for v in inst.Z.basis]},
    }
    if inst.name:
        out["name"] = inst.name
    if inst.vector is not None:
        out["vector"] = [quat_to_json(q) for q in inst.vector]
    return out


def load_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as e:
        raise InvalidInput(f"{path}: malformed JSON ({e})") from e
    except OSError as e:
        raise InvalidInput(f"{path}: {e.strerror}") from e


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


# -- certificates -----------------------------------------------------------


def certificate_to_json(cert: ZeroBasisCertificate, inst: Instance, cap: int, seed: int) -> dict:
    return {
        "format": "qzero-certificate",
        "version": FORMAT_VERSION,
        "instance": instance_to_json(inst),
        "solver": {"cap": cap, "seed": seed},
        "quadratic_side": {
            "trace_matrix": [[str(x) for x in row] for row in cert.trace_matrix.matrix],
            "V_basis": [[str(x) for x in v] for v in cert.V],
            "zeros": [[str(x) for x in v] for v in cert.xs],
            "selected": cert.selected,
        },
        "basis": [[quat_to_json(q) for q in y] for y in cert.ys],
        "heights": {
            "h_y": [height_to_json(h) for h in cert.h_y],
            "H_O_Z": height_to_json(cert.H_O_Z),
            "Hinf_F": height_to_json(cert.Hinf_F),
            "H_Q": height_to_json(cert.H_Q),
            "H_VZ": height_to_json(cert.H_VZ),
        },
        "bounds": {
            "A": cert.A.to_json(),
            "rhs_single": cert.rhs_single.to_json(),
            "rhs_product": cert.rhs_product.to_json(),
        },
        "exact_checks": cert.exact_checks,
        "verdicts": cert.verdicts,
        "vaaler_informational": cert.vaaler,
    }


def verify_certificate(d: dict) -> tuple[bool, list[str]]:
    """Recompute every verdict and height of a certificate from its instance and basis."""
    if not isinstance(d, dict) or d.get("format") != "qzero-certificate":
        raise InvalidInput("not a certificate file")
    inst = instance_from_json(d["instance"])
    A = inst.algebra
    ys = [vector_from_json(y, A) for y in d["basis"]]
    checks, verdicts, extra = evaluate_certificate(inst.F, inst.Z, inst.O, ys)
    problems = []
    if checks != d.get("exact_checks"):
        problems.append(f"exact checks differ: {checks} vs {d.get('exact_checks')}")
    if verdicts != d.get("verdicts"):
        problems.append(f"verdicts differ: {verdicts} vs {d.get('verdicts')}")
    h = d.get("heights", {})
    if [height_to_json(x) for x in extra["h_y"]] != h.get("h_y"):
        problems.append("heights of the basis differ")
    for key in ("H_O_Z", "Hinf_F"):
        if height_to_json(extra[key]) != h.get(key):
            problems.append(f"{key} differs")
    b = d.get("bounds", {})
    for key in ("A", "rhs_single", "rhs_product"):
        if extra[key].to_json() != b.get(key):
            problems.append(f"bound {key} differs")
    ok = not problems and all(checks.values()) and "violated" not in verdicts.values()
    return ok, problems
