"""Command-line front end.

All data goes to stdout, diagnostics to stderr.  Exit codes: 0 success,
1 domain error, 2 usage error.  Output is deterministic for a fixed
invocation: collections are sorted before printing and nothing is
timestamped.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import antichain as AC
from . import enumeration as EN
from . import growth as GR
from . import perm as P
from . import structure as ST
from .errors import InvalidIndex, InvalidSequence, PermclassError
from .perm import Perm


def _parse_perm(text: str) -> Perm:
    return Perm.from_text(text)


def _parse_perm_list(text: str, sep: str) -> list[Perm]:
    items = [t for t in text.split(sep) if t.strip()]
    if not items:
        raise InvalidSequence(f"empty permutation list: {text!r}")
    return [_parse_perm(t) for t in items]


def _parse_mu_range(text: str) -> list[int]:
    if ".." in text:
        lo_s, hi_s = text.split("..", 1)
        lo, hi = int(lo_s), int(hi_s)
    else:
        lo = hi = int(text)
    indices = [i for i in range(lo, hi + 1) if i % 2 == 1]
    if not indices or lo < 7:
        raise InvalidIndex(f"no valid odd indices >= 7 in {text!r}")
    return indices


def _emit(lines: list[str], output: str | None) -> None:
    text = "\n".join(lines) + "\n"
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render_counts(basis: list[Perm], counts: list[int], fmt: str) -> list[str]:
    if fmt == "json":
        return [
            json.dumps(
                {"basis": [str(b) for b in basis], "counts": counts}
            )
        ]
    if fmt == "csv":
        return ["n,count"] + [f"{n},{v}" for n, v in enumerate(counts, 1)]
    # table and bfile share the "n a(n)" line shape
    return EN.to_bfile_lines(counts)


def _cmd_count(args) -> int:
    basis = _parse_perm_list(args.avoid, args.sep)
    counts = EN.count_avoiders(basis, args.max_n)
    _emit(_render_counts(sorted(basis), counts, args.format), args.output)
    return 0


def _cmd_contains(args) -> int:
    pat = _parse_perm(args.pattern)
    host = _parse_perm(args.host)
    print("yes" if P.contains(pat, host) else "no")
    return 0


def _cmd_decompose(args) -> int:
    p = _parse_perm(args.perm)
    if args.k is not None:
        parts = ST.k_decomposition(p, args.k)
        print(" ".join(f"{a}-{b}" for a, b in parts))
        print(f"s_{args.k} = {len(parts)}")
        return 0
    up = ST.up_decomposition(p)
    down = ST.down_decomposition(p)
    print("up: " + " | ".join(str(b) for b in up.blocks))
    print("down: " + " | ".join(str(b) for b in down.blocks))
    return 0


def _cmd_stats(args) -> int:
    p = _parse_perm(args.perm)
    print(f"al {ST.al(p)}")
    print(f"h+ {ST.h_plus(p)}")
    print(f"h- {ST.h_minus(p)}")
    for k in (2, 3, 4):
        print(f"s{k} {ST.s_k(p, k)}")
    return 0


def _cmd_mu(args) -> int:
    for i in _parse_mu_range(args.index):
        print(f"{i} {AC.mu(i)}")
    return 0


def _cmd_antichain(args) -> int:
    perms: list[Perm] = []
    mu_indices: list[int] = []
    if args.mu:
        mu_indices = _parse_mu_range(args.mu)
        perms.extend(AC.mu(i) for i in mu_indices)
    if args.perms:
        perms.extend(_parse_perm_list(args.perms, args.sep))
    if args.with_short_basis:
        perms.extend(AC.SHORT_BASIS)
    if not perms:
        raise InvalidSequence("antichain needs --perms and/or --mu")
    distinct = sorted(set(perms))
    ok, witness = AC.is_antichain(distinct)
    pairs = len(distinct) * (len(distinct) - 1) // 2
    if ok:
        print(f"antichain: yes ({len(distinct)} permutations, {pairs} pairs checked)")
    else:
        pat, host = witness
        print(f"antichain: no (witness: {pat} contained in {host})")
    if args.graph_certify:
        for i in mu_indices:
            good = AC.tree_isomorphic(AC.perm_graph(AC.mu(i)), AC.double_fork(i))
            print(f"certificate mu_{i}: {'tree matches double fork' if good else 'MISMATCH'}")
    return 0


def _cmd_basis(args) -> int:
    gens = _parse_perm_list(args.closure_of, args.sep)
    basis = AC.basis_up_to(AC.ClosureOf(tuple(gens)), args.max_len)
    for p in sorted(basis):
        print(p)
    return 0


def _cmd_fit(args) -> int:
    if os.path.isfile(args.seq):
        with open(args.seq) as fh:
            seq = EN.parse_sequence_text(fh.read())
    else:
        seq = EN.parse_sequence_text(args.seq)
    rec = EN.fit_recurrence(seq, args.max_order)
    if rec is None:
        print(f"no fit up to order {args.max_order}")
    else:
        coeffs = ",".join(str(c) for c in rec.coeffs)
        print(f"order {rec.order}: {coeffs}")
    return 0


def _cmd_growth(args) -> int:
    if args.alpha is not None:
        est = GR.alpha(args.alpha, args.tol)
    else:
        coeffs = [int(t) for t in args.recurrence.split(",")]
        rec = EN.LinearRecurrence(
            tuple(Fraction(c) for c in coeffs), tuple([1] * len(coeffs))
        )
        est = GR.dominant_root(GR.char_poly(rec), args.tol)
    print(f"{est.value:.5f}")
    print(
        f"bracket [{float(est.bracket[0]):.12f}, {float(est.bracket[1]):.12f}], "
        f"tol {args.tol:g}",
        file=sys.stderr,
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permclass",
        description="Permutation classes: containment, antichains, enumeration, growth.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("count", help="count avoiders of a basis")
    pc.add_argument("--avoid", required=True, help="basis permutations, separated by --sep")
    pc.add_argument("--max-n", type=int, required=True, dest="max_n")
    pc.add_argument("--format", choices=("table", "json", "csv", "bfile"), default="table")
    pc.add_argument("--output", default=None)
    pc.add_argument("--sep", default=",")
    pc.set_defaults(func=_cmd_count)

    pk = sub.add_parser("contains", help="does host contain the pattern?")
    pk.add_argument("pattern")
    pk.add_argument("host")
    pk.set_defaults(func=_cmd_contains)

    pd = sub.add_parser("decompose", help="up/down or k-decomposition")
    pd.add_argument("perm")
    pd.add_argument("--k", type=int, default=None)
    pd.set_defaults(func=_cmd_decompose)

    ps = sub.add_parser("stats", help="al, h+, h-, s_k table")
    ps.add_argument("perm")
    ps.set_defaults(func=_cmd_stats)

    pm = sub.add_parser("mu", help="members of the infinite antichain")
    pm.add_argument("index", help="odd index i >= 7, or a range lo..hi")
    pm.set_defaults(func=_cmd_mu)

    pa = sub.add_parser("antichain", help="verify pairwise incomparability")
    pa.add_argument("--perms", default=None)
    pa.add_argument("--mu", default=None, help="range lo..hi of odd indices")
    pa.add_argument("--with-short-basis", action="store_true", dest="with_short_basis")
    pa.add_argument("--graph-certify", action="store_true", dest="graph_certify")
    pa.add_argument("--sep", default=",")
    pa.set_defaults(func=_cmd_antichain)

    pb = sub.add_parser("basis", help="minimal non-members of a closure class")
    pb.add_argument("--closure-of", required=True, dest="closure_of")
    pb.add_argument("--max-len", type=int, required=True, dest="max_len")
    pb.add_argument("--sep", default=",")
    pb.set_defaults(func=_cmd_basis)

    pf = sub.add_parser("fit", help="fit a linear recurrence to a sequence")
    pf.add_argument("--seq", required=True, help="file path or inline integers")
    pf.add_argument("--max-order", type=int, required=True, dest="max_order")
    pf.set_defaults(func=_cmd_fit)

    pg = sub.add_parser("growth", help="dominant root of a recurrence or alpha_i")
    group = pg.add_mutually_exclusive_group(required=True)
    group.add_argument("--recurrence", default=None, help="comma-separated coefficients")
    group.add_argument("--alpha", type=int, default=None)
    pg.add_argument("--tol", type=float, default=1e-9)
    pg.set_defaults(func=_cmd_growth)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except PermclassError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
