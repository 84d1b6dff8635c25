"""Command-line entry point: ``efl <command> ...``.

Every report is JSON with sorted keys and embeds the parsed configuration,
so identical invocations produce byte-identical output.  Exit status is 0
when every asserted contract holds, 1 on a violated contract (with an error
JSON on stdout) and 2 on a usage error.
"""
import argparse
import csv
import json
import sys

import numpy as np

from . import BACKEND
from .characters import character_by_index, enumerate_characters, gauss_sum, is_primitive_by_criterion
from .explicit_formula import (TestFunction, both_sides_artin, both_sides_ef, both_sides_efchi,
                               both_sides_efk, required_prime_bound)
from .lefschetz import (abelian_characters, cyclic_character, load_model, proof_side,
                        regular_rep, sign_rep, standard_rep_s3, statement_side, trivial_rep)
from .lseries import dirichlet_completed, zeta_completed
from .moments import StripMultiset, compare
from .numberfield import dedekind_completed
from .zeros import find_zeros


class ContractError(RuntimeError):
    pass


def _dump(obj):
    return json.dumps(obj, sort_keys=True, indent=2, default=_default)


def _default(x):
    if isinstance(x, complex):
        return [x.real, x.imag]
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (np.floating,)):
        return float(x)
    if isinstance(x, (np.bool_,)):
        return bool(x)
    raise TypeError(f"not serializable: {type(x)}")


def _bump(text):
    try:
        c, w = (float(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("bump must be C,W") from None
    if w <= 0:
        raise argparse.ArgumentTypeError("bump width must be positive")
    return c, w


def _config(args):
    return {k: v for k, v in sorted(vars(args).items()) if k != "func"}


# -- sources ---------------------------------------------------------------------

def parse_source(text):
    parts = text.split(":")
    if parts[0] == "zeta" and len(parts) == 1:
        return zeta_completed()
    if parts[0] == "dirichlet" and len(parts) == 3:
        chi = character_by_index(int(parts[1]), int(parts[2]))
        if chi.is_trivial or not chi.is_primitive:
            raise ContractError(f"character {parts[2]} mod {parts[1]} is not primitive and nontrivial")
        return dirichlet_completed(chi)
    if parts[0] == "dedekind" and len(parts) == 2:
        return dedekind_completed(int(parts[1]))
    raise ContractError(f"unknown source {text!r}; use zeta, dirichlet:M:IDX or dedekind:M")


# -- commands ----------------------------------------------------------------------

def cmd_characters(args):
    rows = []
    for i, chi in enumerate(enumerate_characters(args.modulus)):
        row = chi.to_json()
        row["index"] = i
        if chi.is_primitive:
            row["gauss_sum"] = gauss_sum(chi)
        row["criterion_agrees"] = is_primitive_by_criterion(chi) == chi.is_primitive
        rows.append(row)
    ok = all(r["criterion_agrees"] for r in rows)
    return {"config": _config(args), "characters": rows}, ok


def cmd_zeros(args):
    L = parse_source(args.source)
    zl = find_zeros(L, args.height)
    csv_text = zl.to_csv()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(csv_text)
    else:
        sys.stdout.write(csv_text)
    summary = {"config": _config(args), "source": zl.source, "located": zl.total(),
               "verified_count": zl.verified_count, "height_bound": zl.height_bound,
               "positive_height_zeros": sum(k for z, k in zl.entries if z.imag > 0),
               "max_line_deviation": zl.max_line_deviation()}
    return summary, zl.total() == zl.verified_count


def cmd_verify(args):
    c, w = args.bump
    alpha = TestFunction(c, w)
    bound = args.prime_bound or required_prime_bound(alpha)
    f = args.formula
    if f == "ef":
        zeros = find_zeros(zeta_completed(), args.height)
        rep = both_sides_ef(zeros, alpha, bound)
    elif f in ("efchi", "artin"):
        chi = character_by_index(args.modulus, args.char_index)
        prim = chi.primitive() if f == "artin" else chi
        zeros = find_zeros(dirichlet_completed(prim), args.height)
        rep = (both_sides_efchi(chi, zeros, alpha, bound) if f == "efchi"
               else both_sides_artin(chi, zeros, alpha, bound))
    else:
        zeros = find_zeros(dedekind_completed(args.modulus), args.height)
        rep = both_sides_efk(args.modulus, zeros, alpha, bound)
    out = rep.to_json()
    out["config"] = _config(args)
    out["tolerance"] = args.tol
    out["passed"] = rep.residual <= args.tol
    return out, out["passed"]


def parse_rep(spec, group):
    """trivial | trivial:N | char:J | regular | sign | standard | abelian:K, joined with '+'."""
    reps = []
    for part in spec.split("+"):
        name, _, arg = part.partition(":")
        if name == "trivial":
            reps.append(trivial_rep(group, int(arg) if arg else 1))
        elif name == "char":
            if not group.label.startswith("cyclic:"):
                raise ContractError("char:J needs a cyclic group; use abelian:K")
            reps.append(cyclic_character(group, int(arg)))
        elif name == "abelian":
            reps.append(abelian_characters(group)[int(arg)])
        elif name == "regular":
            reps.append(regular_rep(group))
        elif name == "sign":
            reps.append(sign_rep(group))
        elif name == "standard":
            reps.append(standard_rep_s3(group))
        else:
            raise ContractError(f"unknown representation {part!r}")
    out = reps[0]
    for r in reps[1:]:
        out = out.direct_sum(r)
    return out


def cmd_lefschetz(args):
    model = load_model(args.model)
    rep = parse_rep(args.rep, model.group)
    alpha = TestFunction(*args.bump)
    st = statement_side(model, rep, alpha)
    pr = proof_side(model, rep, alpha)
    res = abs(st - pr)
    out = {"config": _config(args), "model": model.name, "statement": st, "proof": pr,
           "residual": res, "flags": model.flags}
    return out, res <= 1e-12


def _read_multiset(path):
    with open(path) as fh:
        text = fh.read()
    if text.lstrip().startswith(("[", "{")):
        data = json.loads(text)
        pts = data["points"] if isinstance(data, dict) else data
        items = [(complex(p[0], p[1]), int(p[2]) if len(p) > 2 else 1) for p in pts]
    else:
        rows = csv.DictReader(text.splitlines())
        items = [(complex(float(r["re"]), float(r["im"])), int(r.get("multiplicity") or 1)) for r in rows]
    return StripMultiset(tuple(items), path)


def cmd_moments(args):
    A, B = _read_multiset(args.a), _read_multiset(args.b)
    rep = compare(A, B, args.order, args.tol)
    rep["config"] = _config(args)
    return rep, not rep["inconsistent"]


def cmd_selftest(args):
    from .selftest import run_selftest
    results = run_selftest(args.seed, quick=not args.full)
    ok = all(r["passed"] for r in results)
    return {"config": _config(args), "backend": BACKEND, "checks": results}, ok


# -- parser ------------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="efl", description="Explicit-formula verification laboratory")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("characters", help="character table mod M")
    s.add_argument("--modulus", type=int, required=True)
    s.set_defaults(func=cmd_characters)

    s = sub.add_parser("zeros", help="certified zero list as CSV")
    s.add_argument("--source", required=True, help="zeta | dirichlet:M:IDX | dedekind:M")
    s.add_argument("--height", type=float, required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_zeros)

    s = sub.add_parser("verify", help="both sides of an explicit formula")
    s.add_argument("--formula", choices=["ef", "efchi", "efk", "artin"], required=True)
    s.add_argument("--modulus", type=int, default=4)
    s.add_argument("--char-index", type=int, default=1)
    s.add_argument("--bump", type=_bump, required=True)
    s.add_argument("--height", type=float, default=100.0)
    s.add_argument("--prime-bound", type=int, default=None)
    s.add_argument("--tol", type=float, default=1e-3)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("lefschetz", help="statement and proof sides on an orbit model")
    s.add_argument("--model", required=True, help="JSON file or bundled name (gauss_qi, jacob_ladder)")
    s.add_argument("--rep", default="trivial")
    s.add_argument("--bump", type=_bump, required=True)
    s.set_defaults(func=cmd_lefschetz)

    s = sub.add_parser("moments", help="compare two strip multisets")
    s.add_argument("--a", required=True)
    s.add_argument("--b", required=True)
    s.add_argument("--order", type=int, default=None)
    s.add_argument("--tol", type=float, default=1e-8)
    s.set_defaults(func=cmd_moments)

    s = sub.add_parser("selftest", help="randomized invariant suite")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--full", action="store_true", help="acceptance-size trial counts")
    s.set_defaults(func=cmd_selftest)
    return p


def run(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with status 2 on usage errors
    try:
        report, ok = args.func(args)
    except (ContractError, ValueError, ArithmeticError, RuntimeError) as exc:
        err = {"error": str(exc), "type": type(exc).__name__, "command": args.command}
        print(_dump(err))
        return 1
    print(_dump(report), file=sys.stderr if args.command == "zeros" and not args.out else sys.stdout)
    return 0 if ok else 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
