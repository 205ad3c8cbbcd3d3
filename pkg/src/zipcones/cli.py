"""Batch command line front end.

Every verb prints a canonical JSON document (or CSV for ``slice``) and is
byte-for-byte deterministic for a fixed invocation.  Exit codes: 0 on
success, 1 on usage errors, 2 on guard errors, 3 on theorem-violation
errors.
"""

from __future__ import annotations

import argparse
import functools
import itertools
import json
import os
import sys
from fractions import Fraction

from .catalog import catalog_cone, catalog_names
from .cones import Weight, extreme_rays, monoid_membership
from .errors import (
    EmptyModuleError,
    GuardExceededError,
    TheoremViolationError,
    ZipconeError,
)
from .fpoly import RationalFunction
from .modules import build_module, intersection_dimension, invariants_finite_group, subspace_leq0
from .rootdata import SymplecticRootDatum
from .sections import catalog_section, gamma_matrix, h0_dimension
from . import sections

SCHEMA = "zipcone/1"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _emit(args, text):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json(doc):
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def _parse_weight(text):
    try:
        return Weight(int(x) for x in text.split(","))
    except ValueError:
        raise _UsageError("weight must be a comma-separated integer vector")


def _parse_box(text):
    try:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise _UsageError("box must look like -8..8")
    if lo > hi:
        raise _UsageError("empty box")
    return lo, hi


def _poly_json(poly):
    return poly.to_json_dict()


def _body_json(body):
    if isinstance(body, RationalFunction):
        return {"num": _poly_json(body.num),
                "den": {str(i + 1): e for i, e in enumerate(body.exps) if e}}
    return _poly_json(body)


def _cmd_cone(args):
    cone = catalog_cone(args.name, args.n, args.p)
    pres = cone.presentation(args.emit)
    doc = {"schema": SCHEMA, "name": cone.name}
    doc.update(pres.to_json_dict())
    _emit(args, _json(doc))


def _cmd_rootdata(args):
    d = SymplecticRootDatum(args.n)
    doc = {
        "schema": SCHEMA,
        "n": d.n,
        "simple_roots": [list(r) for r in d.simple_roots],
        "simple_coroots": [list(c) for c in d.simple_coroots],
        "levi_indices": list(d.levi_indices),
        "beta_index": d.beta_index,
        "positive_roots": [list(r) for r in d.positive_roots],
        "positive_coroots": [list(c) for c in d.positive_coroots],
    }
    _emit(args, _json(doc))


def _cmd_verify_section(args):
    s = catalog_section(args.name, args.n, args.p)
    doc = {"schema": SCHEMA, "name": s.name, "n": s.n, "p": s.p,
           "weight": list(s.weight), "verified": True,
           "body": _body_json(s.body)}
    _emit(args, _json(doc))


def _cmd_gamma(args):
    g = gamma_matrix(args.n, args.p)
    doc = {"schema": SCHEMA, "n": g.n, "p": g.p,
           "z": [[_body_json(e.reduce()) for e in row] for row in g.z],
           "gamma": [[_body_json(e) for e in row] for row in g.gamma]}
    _emit(args, _json(doc))


def _cmd_h0(args):
    lam = _parse_weight(args.weight)
    dim = h0_dimension(lam, args.n, args.p, monomial_cap=args.monomial_cap)
    doc = {"schema": SCHEMA, "n": args.n, "p": args.p,
           "weight": list(lam), "dim": dim}
    _emit(args, _json(doc))


def _cmd_vlambda(args):
    lam = _parse_weight(args.weight)
    try:
        module = build_module(lam, args.n, args.p)
    except EmptyModuleError:
        doc = {"schema": SCHEMA, "n": args.n, "p": args.p,
               "weight": list(lam), "dim": 0, "dim_leq0": 0,
               "dim_invariants": 0, "dim_intersection": 0}
        _emit(args, _json(doc))
        return
    doc = {"schema": SCHEMA, "n": args.n, "p": args.p, "weight": list(lam),
           "dim": module.dim,
           "dim_leq0": len(subspace_leq0(module)),
           "dim_invariants": len(invariants_finite_group(module)),
           "dim_intersection": intersection_dimension(module)}
    _emit(args, _json(doc))


def _member(cone, lam):
    if cone.name in ("ZipSp4", "Schubert"):
        try:
            return monoid_membership(cone.generated, lam) is not None
        except ZipconeError:
            return False
    pres = cone.halfspaces
    if pres is not None:
        return pres.contains(lam)
    from .cones import saturated_membership
    return saturated_membership(cone.generated, lam)


def _sweep_dim(task):
    lam, n, p, cap = task
    return h0_dimension(lam, n, p, monomial_cap=cap)


def _cmd_sweep(args):
    lo, hi = _parse_box(args.box)
    cone = catalog_cone(args.compare, args.n, args.p)
    if cone.rank != args.n:
        raise _UsageError("cone rank does not match --n")
    points = [Weight(pt) for pt in
              itertools.product(range(lo, hi + 1), repeat=args.n)]
    tasks = [(lam, args.n, args.p, args.monomial_cap) for lam in points]
    workers = int(os.environ.get("ZIPCONE_THREADS", "1"))
    if workers > 1:
        # per-weight tasks are independent; map preserves input order, so
        # the emitted document does not depend on scheduling
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=workers) as pool:
            dims = list(pool.map(_sweep_dim, tasks, chunksize=16))
    else:
        dims = [_sweep_dim(t) for t in tasks]
    rows = []
    for lam, dim in zip(points, dims):
        member = _member(cone, lam)
        rows.append({"weight": list(lam), "oracle_dim": dim,
                     "catalog_member": member,
                     "agree": (dim > 0) == member})
    doc = {"schema": SCHEMA, "n": args.n, "p": args.p, "box": [lo, hi],
           "compare": cone.name, "rows": rows}
    _emit(args, _json(doc))


def _fr(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else "%d/%d" % (
        x.numerator, x.denominator)


def _cmd_slice(args):
    cone = catalog_cone(args.cone, args.n, args.p)
    pres = cone.halfspaces
    if pres is None:
        from .cones import halfspaces_of
        pres = halfspaces_of(cone.generated)
    if pres.rank != 3:
        raise _UsageError("slice needs a rank-3 cone")
    center = Weight([1 - args.p] * 3)
    u = _parse_weight(args.frame_u)
    v = _parse_weight(args.frame_v)
    if center.dot(u) != 0 or center.dot(v) != 0:
        raise _UsageError("frame vectors must be orthogonal to the axis")
    rays = extreme_rays(pres)
    c2 = center.dot(center)
    verts = []
    for r in rays:
        rw = Weight(r)
        h = center.dot(rw)
        if h <= 0:
            raise _UsageError(
                "ray %s does not cross the slice plane" % (tuple(r),))
        scale = Fraction(c2, h)
        q = [scale * x - c for x, c in zip(rw, center)]
        uc = Fraction(sum(a * b for a, b in zip(q, u)), u.dot(u))
        vc = Fraction(sum(a * b for a, b in zip(q, v)), v.dot(v))
        verts.append((uc, vc, "(%s)" % ",".join(str(x) for x in rw)))

    def angle_cmp(a, b):
        # counter-clockwise order around the origin, exact
        (xa, ya, _), (xb, yb, _) = a, b
        qa = _quadrant(xa, ya)
        qb = _quadrant(xb, yb)
        if qa != qb:
            return -1 if qa < qb else 1
        cross = xa * yb - ya * xb
        if cross > 0:
            return -1
        if cross < 0:
            return 1
        return 0

    verts.sort(key=functools.cmp_to_key(angle_cmp))
    lines = ["u,v,label"]
    for uc, vc, label in verts:
        lines.append("%s,%s,%s" % (_fr(uc), _fr(vc), label))
    _emit(args, "\n".join(lines) + "\n")


def _quadrant(x, y):
    if x > 0 and y >= 0:
        return 0
    if x <= 0 and y > 0:
        return 1
    if x < 0 and y <= 0:
        return 2
    return 3


def build_parser():
    parser = _Parser(prog="zipcone", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn):
        p = sub.add_parser(name)
        p.set_defaults(fn=fn)
        p.add_argument("--out", default=None)
        return p

    p = add("cone", _cmd_cone)
    p.add_argument("--name", required=True,
                   help="one of: %s" % ", ".join(catalog_names()))
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--emit", choices=["generators", "halfspaces"],
                   default="generators")

    p = add("rootdata", _cmd_rootdata)
    p.add_argument("--n", type=int, required=True)

    p = add("verify-section", _cmd_verify_section)
    p.add_argument("--name", required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--p", type=int, required=True)

    p = add("gamma", _cmd_gamma)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)

    p = add("h0", _cmd_h0)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--weight", required=True)
    p.add_argument("--monomial-cap", type=int, default=sections.MONOMIAL_CAP)

    p = add("vlambda", _cmd_vlambda)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--weight", required=True)
    p.add_argument("--report", choices=["dims"], default="dims")

    p = add("sweep", _cmd_sweep)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--box", default="-8..8")
    p.add_argument("--compare", required=True)
    p.add_argument("--monomial-cap", type=int, default=sections.MONOMIAL_CAP)

    p = add("slice", _cmd_slice)
    p.add_argument("--cone", required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--frame-u", default="1,-1,0")
    p.add_argument("--frame-v", default="1,1,-2")

    return parser


_VALUE_FLAGS = ("--box", "--weight", "--frame-u", "--frame-v")


def _merge_negative_values(argv):
    """Let values like ``--box -8..8`` through argparse by joining them."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if (tok in _VALUE_FLAGS and i + 1 < len(argv)
                and argv[i + 1].startswith("-") and len(argv[i + 1]) > 1
                and argv[i + 1][1].isdigit()):
            out.append("%s=%s" % (tok, argv[i + 1]))
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None):
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    argv = _merge_negative_values(list(argv))
    try:
        args = parser.parse_args(argv)
        if getattr(args, "p", None) is not None and not _is_prime(args.p):
            raise _UsageError("p must be prime")
        args.fn(args)
        return 0
    except _UsageError as e:
        print("usage error: %s" % e, file=sys.stderr)
        return 1
    except GuardExceededError as e:
        print("guard error: %s" % e, file=sys.stderr)
        return 2
    except TheoremViolationError as e:
        print("theorem violation: %s" % e, file=sys.stderr)
        return 3
    except ZipconeError as e:
        print("error: %s" % e, file=sys.stderr)
        return 1


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


if __name__ == "__main__":
    sys.exit(main())
