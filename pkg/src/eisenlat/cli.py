"""Command-line front end.

Subcommands: lattice, monodromy, f3, disc, hodge, verify.  Every subcommand
accepts --json for machine-readable output.  Exit codes: 0 success, 1 check
failure, 2 usage error, 3 input-format error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .eisenstein import E, OMEGA
from .hermitian import (
    HermGram,
    basis_vector,
    det_e,
    in_theta_dual,
    named_lattice,
    signature,
    theta_self_dual,
    z_realization,
)

EXIT_OK = 0
EXIT_CHECK_FAILURE = 1
EXIT_USAGE = 2
EXIT_INPUT = 3


class InputError(Exception):
    pass


def parse_lattice(spec: str) -> HermGram:
    """A named lattice ("lambda", "chain:7", ...) or a path to a JSON Gram."""
    try:
        return named_lattice(spec)
    except ValueError:
        pass
    try:
        with open(spec) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read lattice {spec!r}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {spec!r}: {exc}") from None
    try:
        return HermGram.from_json(data)
    except (KeyError, ValueError, TypeError) as exc:
        raise InputError(f"bad Gram matrix in {spec!r}: {exc}") from None


_WORD_TOKEN = re.compile(r"^a(\d+)(?:\^(\d+))?$")
_WORD_RANGE = re.compile(r"^a(\d+)\.\.a(\d+)$")


def parse_word(text: str):
    """Expand "a1..a10 a11^2 a10..a1" into a list of generator indices (1-based)."""
    out = []
    for tok in text.split():
        m = _WORD_RANGE.match(tok)
        if m:
            lo, hi = int(m.group(1)), int(m.group(2))
            step = 1 if hi >= lo else -1
            out.extend(range(lo, hi + step, step))
            continue
        m = _WORD_TOKEN.match(tok)
        if m:
            idx = int(m.group(1))
            rep = int(m.group(2) or 1)
            out.extend([idx] * rep)
            continue
        raise InputError(f"bad word token {tok!r}")
    return out


_CHAR_TOKENS = {
    "1": E(1),
    "-1": E(-1),
    "w": OMEGA,
    "-w": -OMEGA,
    "w2": OMEGA * OMEGA,
    "-w2": -(OMEGA * OMEGA),
    "wbar": OMEGA.conj(),
    "-wbar": -OMEGA.conj(),
}


def parse_char(text: str):
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok not in _CHAR_TOKENS:
            raise InputError(f"bad character token {tok!r} (use 1,-1,w,-w,w2,-w2,wbar,-wbar)")
        out.append(_CHAR_TOKENS[tok])
    return out


def _emit(args, payload, text_lines):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def cmd_lattice(args):
    if args.action == "make":
        G = parse_lattice(args.name)
        _emit(args, G.to_json(), [str(G)])
        return EXIT_OK
    if args.action == "invariants":
        G = parse_lattice(args.name)
        payload = {
            "rank": G.n,
            "det": str(det_e(G)),
            "signature": list(signature(G)),
            "in_theta_dual": in_theta_dual(G),
        }
        d = det_e(G)
        if d:
            payload["theta_self_dual"] = theta_self_dual(G)
        lines = [f"{k}: {v}" for k, v in payload.items()]
        _emit(args, payload, lines)
        return EXIT_OK
    if args.action == "z-realization":
        G = parse_lattice(args.name)
        Z = z_realization(G)
        _emit(args, Z.to_json(), [str(Z)])
        return EXIT_OK
    raise InputError(f"unknown lattice action {args.action!r}")


def cmd_monodromy(args):
    from . import monodromy as mono

    G = parse_lattice(args.lattice)
    if args.action == "word-order":
        if not args.word:
            print("error: word-order requires --word", file=sys.stderr)
            return EXIT_USAGE
        letters = parse_word(args.word)
        gens = {}
        factors = []
        for idx in letters:
            if not 1 <= idx <= G.n:
                raise InputError(f"generator a{idx} out of range for rank {G.n}")
            if idx not in gens:
                gens[idx] = mono.triflection(G, basis_vector(G.n, idx - 1))
            factors.append(gens[idx])
        w = mono.word_eval(factors)
        if args.projective:
            val = mono.projective_order(w, modulo_radical=args.mod_radical, cap=args.cap)
        else:
            val = mono.order(w, cap=args.cap)
        payload = {"word": args.word, "order": str(val), "projective": args.projective}
        _emit(args, payload, [f"order: {val}"])
        return EXIT_OK
    if args.action == "closure":
        import os

        cap = int(os.environ.get("EISENLAT_CLOSURE_CAP", mono.DEFAULT_CLOSURE_CAP))
        gens = [mono.triflection(G, basis_vector(G.n, i)) for i in range(G.n)]
        handle = mono.group_closure(gens, cap=cap)
        payload = {"order": handle.order}
        lines = [f"order: {handle.order}"]
        reports = (args.report or "").split(",") if args.report else []
        if "reflections" in reports:
            refl = mono.reflections_in(handle)
            payload["reflections"] = len(refl)
            payload["reflection_units"] = sorted({str(u) for _, u in refl})
            lines.append(f"reflections: {len(refl)}")
        if "free-action" in reports:
            ok = mono.free_action_check(handle)
            payload["free_action"] = ok
            lines.append(f"free action: {ok}")
        _emit(args, payload, lines)
        return EXIT_OK
    raise InputError(f"unknown monodromy action {args.action!r}")


def cmd_f3(args):
    from . import gluing

    if args.action == "disc-group":
        G = parse_lattice(args.lattice)
        S = gluing.disc_group(G)
        payload = {
            "dimension": S.k,
            "form": [list(r) for r in S.form],
            "diagonal": list(S.diagonal()),
        }
        _emit(args, payload, [f"dimension: {S.k}", f"diagonal: {S.diagonal()}"])
        return EXIT_OK
    if args.action == "norm-enum":
        diag_entries = [int(x) % 3 for x in args.form.split(",")]
        space = _diag_space(diag_entries)
        vecs = gluing.enumerate_norm(space, int(args.norm))
        payload = {"count": len(vecs), "vectors": [list(v) for v in vecs]}
        _emit(args, payload, [f"count: {len(vecs)}"] + [str(v) for v in vecs])
        return EXIT_OK
    if args.action == "orbit":
        G = parse_lattice(args.lattice)
        size, ngens = gluing.hyperplane_orbit(gluing.sp_generating_roots(), G)
        payload = {"orbit": size, "generators": ngens}
        lines = [f"orbit: {size} (generators used: {ngens})"]
        _emit(args, payload, lines)
        if args.expect is not None and size != args.expect:
            print(f"expected {args.expect}, got {size}", file=sys.stderr)
            return EXIT_CHECK_FAILURE
        return EXIT_OK
    raise InputError(f"unknown f3 action {args.action!r}")


def _diag_space(entries):
    """A stand-alone diagonal F_3 quadratic space (no ambient lattice)."""
    from .gluing import F3QuadSpace

    k = len(entries)
    form = tuple(
        tuple(entries[i] if i == j else 0 for j in range(k)) for i in range(k)
    )
    return F3QuadSpace(None, k, form, [None] * k, None)


def cmd_disc(args):
    from . import discpoly

    if args.action == "a11-coeff":
        m = discpoly.WeightedMonomial.parse(args.monomial)
        c = discpoly.a11_coeff(m)
        payload = {"monomial": str(m), "weight": m.weight, "coefficient": str(c)}
        _emit(args, payload, [f"{m} (weight {m.weight}): {c}"])
        return EXIT_OK
    if args.action == "check-rigidity-hypothesis":
        rows = []
        ok = True
        for m in discpoly.rigidity_monomials():
            c = discpoly.a11_coeff(m)
            rows.append({"monomial": str(m), "coefficient": str(c), "nonzero": c != 0})
            ok = ok and c != 0
        payload = {"monomials": rows, "all_nonzero": ok}
        lines = [f"{r['monomial']:>22}: {r['coefficient']}" for r in rows]
        lines.append(f"all nonzero: {ok}")
        _emit(args, payload, lines)
        return EXIT_OK if ok else EXIT_CHECK_FAILURE
    raise InputError(f"unknown disc action {args.action!r}")


def cmd_hodge(args):
    from . import residues

    weights = [int(x) for x in args.weights.split(",")]
    char = parse_char(args.char) if args.char else None
    if args.mode == "monomial":
        H = residues.WeightedHypersurface.diagonal(weights, args.degree, char=char)
    elif args.mode == "generic-ci":
        H = residues.WeightedHypersurface(
            weights, args.degree, residues.GENERIC_CI, char=char
        )
    else:
        raise InputError(f"unknown mode {args.mode!r}")
    rows = residues.full_report(H)
    payload = {
        "weights": weights,
        "degree": args.degree,
        "rows": [
            {
                "p": p,
                "q": q,
                "eigenvalue": str(residues.exp_unit(lam)),
                "dim": dim,
            }
            for p, q, lam, dim in rows
        ],
        "hodge_numbers": list(residues.hodge_vector(H)),
    }
    lines = [f"h^({p},{q})[{residues.exp_unit(lam)}] = {dim}" for p, q, lam, dim in rows]
    lines.append(f"hodge numbers: {residues.hodge_vector(H)}")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_verify(args):
    from .verify import run_verify

    report = run_verify(name_filter=args.filter)
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        for row in report["checks"]:
            mark = "PASS" if row["pass"] else "FAIL"
            print(f"[{mark}] {row['name']}")
            print(f"       claim:    {row['anchor']}")
            print(f"       expected: {row['expected']}")
            if not row["pass"]:
                print(f"       computed: {row['computed']}")
        s = report["summary"]
        print(f"{s['passed']}/{s['total']} checks passed")
    return EXIT_OK if report["summary"]["failed"] == 0 else EXIT_CHECK_FAILURE


def build_parser():
    p = argparse.ArgumentParser(
        prog="eisenlat",
        description="Exact Eisenstein-lattice, monodromy, discriminant and residue computations",
    )
    sub = p.add_subparsers(dest="command", required=True)

    pl = sub.add_parser("lattice", help="named lattices and their invariants")
    pl.add_argument("action", choices=["make", "invariants", "z-realization"])
    pl.add_argument("--name", required=True, help="lambda|lambda10|e8e|hyp|chain:N or a JSON file")
    pl.add_argument("--json", action="store_true")
    pl.set_defaults(fn=cmd_lattice)

    pm = sub.add_parser("monodromy", help="words in triflections and group closures")
    pm.add_argument("action", choices=["word-order", "closure"])
    pm.add_argument("--lattice", required=True)
    pm.add_argument("--word", help='e.g. "a1..a10 a11^2 a10..a1"')
    pm.add_argument("--projective", action="store_true")
    pm.add_argument("--mod-radical", action="store_true")
    pm.add_argument("--cap", type=int, default=10000)
    pm.add_argument("--report", help="comma list: reflections,free-action")
    pm.add_argument("--json", action="store_true")
    pm.set_defaults(fn=cmd_monodromy)

    pf = sub.add_parser("f3", help="discriminant groups, isotropic lines, orbits")
    pf.add_argument("action", choices=["disc-group", "norm-enum", "orbit"])
    pf.add_argument("--lattice")
    pf.add_argument("--form", help="comma list of diagonal entries, e.g. 1,-1,1")
    pf.add_argument("--norm", type=int, default=1)
    pf.add_argument("--expect", type=int)
    pf.add_argument("--json", action="store_true")
    pf.set_defaults(fn=cmd_f3)

    pd = sub.add_parser("disc", help="A_11 discriminant coefficients")
    pd.add_argument("action", choices=["a11-coeff", "check-rigidity-hypothesis"])
    pd.add_argument("--monomial", help='e.g. "u12^9 u11^2 u2"')
    pd.add_argument("--json", action="store_true")
    pd.set_defaults(fn=cmd_disc)

    ph = sub.add_parser("hodge", help="residue Hodge numbers of weighted hypersurfaces")
    ph.add_argument("action", choices=["report"])
    ph.add_argument("--weights", required=True, help="comma list, e.g. 3,3,3,2,1")
    ph.add_argument("--degree", type=int, required=True)
    ph.add_argument("--mode", default="monomial", help="monomial|generic-ci")
    ph.add_argument("--char", help="comma list, e.g. 1,1,1,w,1")
    ph.add_argument("--json", action="store_true")
    ph.set_defaults(fn=cmd_hodge)

    pv = sub.add_parser("verify", help="run the full verification suite")
    pv.add_argument("--filter", help="substring filter on check names")
    pv.add_argument("--json", action="store_true")
    pv.set_defaults(fn=cmd_verify)

    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
