"""Command-line interface: ``skewdomino VERB [options]``.

Shapes are written ``outer/inner`` (``4,3,1/2,1``); a reversed shape uses
the same syntax with ``outer`` inside ``inner``. Tableaux are written as
partition chains ``base:step1:step2`` (``0:2:2,2``) or as the JSON that
``--format json`` prints. The F index given to ``fpoly --n`` is the
subscript itself, so ``--n 2`` means F_2, a sum over shapes of size 2.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import imbalance, schensted, shapes, tableaux, verify
from .growth import DOMINO, RS
from .tableaux import SDT, SYT, ChainTableau


class UsageError(ValueError):
    pass


# -- argument parsing helpers -------------------------------------------

def _partition(text: str) -> shapes.Partition:
    try:
        return shapes.parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _shape(text: str) -> shapes.SignedSkewShape:
    try:
        return shapes.SignedSkewShape.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def parse_tableau(text: str, kind: str) -> ChainTableau:
    """A chain ``base:step:...`` or a JSON tableau."""
    text = text.strip()
    if text.startswith("{"):
        T = ChainTableau.from_json(text)
        if T.kind != kind:
            raise UsageError(f"expected an {kind}, got an {T.kind}")
        return T
    parts = [shapes.parse_partition(p) for p in text.split(":")]
    return ChainTableau(kind, parts[0], tuple(parts[1:]))


def parse_matrix(text: str, zero_one: bool) -> schensted.PPM:
    cls = schensted.ZeroOneMatrix if zero_one else schensted.PPM
    return cls.parse(text)


def _tableau_text(T: ChainTableau) -> str:
    return f"{T.to_text() or '[]'} on {T.shape}"


# -- output ---------------------------------------------------------------

def _emit(args, text: str, payload) -> None:
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(text)


def _dump(args, diagram) -> None:
    if args.dump_diagram:
        Path(args.dump_diagram).write_text(diagram.to_json() + "\n")


# -- verbs ----------------------------------------------------------------

def cmd_core(args) -> int:
    core = shapes.two_core(args.partition)
    _emit(args, shapes.format_partition(core), {"partition": list(args.partition), "core": list(core)})
    return 0


def cmd_stats(args) -> int:
    st = shapes.shape_stats(args.shape)
    d = st._asdict()
    d["tileable"] = shapes.is_domino_tileable(args.shape)
    _emit(args, " ".join(f"{k}={v}" for k, v in d.items()), {"shape": str(args.shape), **d})
    return 0


def cmd_tableaux(args) -> int:
    kind = SDT if args.kind == "sdt" else SYT
    ts = tableaux.enumerate_tableaux(args.shape, kind)
    if args.format == "json":
        print(json.dumps([T.to_dict() for T in ts]))
    else:
        for T in ts:
            print(T.to_text())
        print(f"# {len(ts)} {kind}s of {args.shape}")
    return 0


def cmd_spin_poly(args) -> int:
    p = tableaux.spin_polynomial(args.shape)
    _emit(args, str(p), {"shape": str(args.shape), "f2": str(p)})
    return 0


def cmd_imbalance(args) -> int:
    val = imbalance.sign_imbalance(args.shape)
    _emit(args, str(val), {"shape": str(args.shape), "imbalance": val})
    return 0


def cmd_fpoly(args) -> int:
    p = imbalance.F_poly(args.alpha, args.n)
    _emit(args, str(p), {"alpha": list(args.alpha), "n": args.n, "F": str(p)})
    return 0


def cmd_wpoly(args) -> int:
    p = imbalance.weighted_sum_W(args.alpha, args.n)
    _emit(args, str(p), {"alpha": list(args.alpha), "n": args.n, "W": str(p)})
    return 0


def _pair_output(args, names, tabs) -> None:
    text = "\n".join(f"{n} = {_tableau_text(T)}" for n, T in zip(names, tabs))
    _emit(args, text, {n: T.to_dict() for n, T in zip(names, tabs)})


def _default_empty(text, kind, core) -> ChainTableau:
    return parse_tableau(text, kind) if text else ChainTableau.empty(kind, core)


def cmd_phi(args) -> int:
    M = parse_matrix(args.matrix, zero_one=False)
    U = _default_empty(args.u, SDT, args.core)
    V = _default_empty(args.v, SDT, args.core)
    G = schensted.phi_diagram(U, V, M, DOMINO)
    _dump(args, G)
    P, Q = schensted.phi(U, V, M)
    _pair_output(args, ("P", "Q"), (P, Q))
    return 0


def cmd_phi_sym(args) -> int:
    M = parse_matrix(args.matrix, zero_one=False)
    U = _default_empty(args.u, SDT, args.core)
    _dump(args, schensted.phi_diagram(U, U, M, DOMINO))
    D = schensted.phi_sym(U, M)
    _pair_output(args, ("D",), (D,))
    return 0


def cmd_rs_phi(args) -> int:
    if args.perm:
        images = [int(t) for t in args.perm.split()]
        n = len(images)
        M = schensted.ZeroOneMatrix(n, n, tuple((i + 1, c, 1) for i, c in enumerate(images)))
    elif args.matrix:
        M = parse_matrix(args.matrix, zero_one=True)
    else:
        raise UsageError("rs-phi needs --matrix or --perm")
    U = _default_empty(args.u, SYT, args.core)
    V = _default_empty(args.v, SYT, args.core)
    _dump(args, schensted.phi_diagram(U, V, M, RS))
    P, Q = schensted.rs_phi(U, V, M)
    _pair_output(args, ("P", "Q"), (P, Q))
    return 0


def cmd_inverse(args) -> int:
    from .growth import fill_from_corner

    kind = SDT if args.ruleset == DOMINO else SYT
    if args.d:
        if args.ruleset != DOMINO:
            raise UsageError("--d inverts the symmetric domino correspondence only")
        D = parse_tableau(args.d, SDT)
        _dump(args, fill_from_corner(D.chain, D.chain, DOMINO))
        U, M = schensted.phi_sym_inverse(D)
        _emit(args, f"U = {_tableau_text(U)}\nM = {M}", {"U": U.to_dict(), "M": str(M)})
        return 0
    if not (args.p and args.q):
        raise UsageError("inverse needs --p and --q, or --d")
    P = parse_tableau(args.p, kind)
    Q = parse_tableau(args.q, kind)
    _dump(args, fill_from_corner(P.chain, Q.chain, args.ruleset))
    if args.ruleset == DOMINO:
        U, V, M = schensted.phi_inverse(P, Q)
    else:
        U, V, M = schensted.rs_phi_inverse(P, Q)
    text = f"U = {_tableau_text(U)}\nV = {_tableau_text(V)}\nM = {M}"
    _emit(args, text, {"U": U.to_dict(), "V": V.to_dict(), "M": str(M)})
    return 0


_VERIFY_KEYS = ("n", "m", "k", "j", "alpha", "beta", "max_cells", "max_inner", "max_mu", "order")


def _report_out(args, report) -> None:
    _emit(args, str(report), report.to_dict())


def cmd_verify(args) -> int:
    if args.name not in verify.REGISTRY:
        raise UsageError(f"unknown identity {args.name!r}; known: {', '.join(verify.REGISTRY)}")
    entry = verify.REGISTRY[args.name]
    params = dict(entry.sweep[0]) if entry.sweep else {}
    for key in _VERIFY_KEYS:
        val = getattr(args, key, None)
        if val is not None:
            params[key] = val
    params = {k: v for k, v in params.items() if k in entry.limits}
    report = verify.verify_identity(args.name, params, args.bound_scale)
    _report_out(args, report)
    return 0 if report.equal else 1


def cmd_verify_all(args) -> int:
    failed = 0
    for report in verify.verify_all(args.bound_scale, names=args.names or None):
        if not report.equal or args.verbose:
            _report_out(args, report)
        failed += not report.equal
    if args.format != "json":
        print(f"# {'all identities hold' if not failed else f'{failed} failure(s)'}")
    return 1 if failed else 0


# -- parser ---------------------------------------------------------------

def _common(suppress: bool) -> argparse.ArgumentParser:
    def dflt(v):
        return argparse.SUPPRESS if suppress else v

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=dflt("text"))
    common.add_argument("--order", type=int, default=dflt(None), help="series truncation order")
    common.add_argument("--bound-scale", type=float, default=dflt(1.0), help="scale registry bounds")
    common.add_argument("--dump-diagram", metavar="PATH", default=dflt(None),
                        help="write the growth diagram as JSON")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="skewdomino", description=__doc__.splitlines()[0],
                                     parents=[_common(False)])
    # global flags may also follow the verb; SUPPRESS keeps a flag given
    # before the verb from being reset by the subparser default
    common = _common(True)
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    add("core", cmd_core, "2-core of a partition").add_argument("partition", type=_partition)
    add("stats", cmd_stats, "size, v, h, d of a shape").add_argument("shape", type=_shape)
    p = add("tableaux", cmd_tableaux, "enumerate SYTs or SDTs")
    p.add_argument("shape", type=_shape)
    p.add_argument("--kind", choices=("syt", "sdt"), default="syt")
    add("spin-poly", cmd_spin_poly, "f2(q), the spin generating polynomial").add_argument("shape", type=_shape)
    add("imbalance", cmd_imbalance, "sign-imbalance I of a shape").add_argument("shape", type=_shape)
    for name, func, what in (("fpoly", cmd_fpoly, "F_n^alpha (n is the subscript)"),
                             ("wpoly", cmd_wpoly, "W_n^alpha")):
        p = add(name, func, what)
        p.add_argument("--alpha", type=_partition, default=())
        p.add_argument("--n", type=int, required=True)
    for name, func, what in (("phi", cmd_phi, "skew domino Schensted correspondence"),
                             ("rs-phi", cmd_rs_phi, "skew RS correspondence")):
        p = add(name, func, what)
        p.add_argument("--u", default=None, help="top tableau (chain or JSON)")
        p.add_argument("--v", default=None, help="left tableau (chain or JSON)")
        p.add_argument("--core", type=_partition, default=(), help="base shape of empty U, V")
        p.add_argument("--matrix", required=(name == "phi"), help='rows split by ";", e.g. "0 1; -1 0"')
        if name == "rs-phi":
            p.add_argument("--perm", default=None, help='one-line permutation, e.g. "3 1 2"')
    p = add("phi-sym", cmd_phi_sym, "symmetric correspondence")
    p.add_argument("--u", default=None)
    p.add_argument("--core", type=_partition, default=())
    p.add_argument("--matrix", required=True)
    p = add("inverse", cmd_inverse, "inverse correspondence from (P, Q)")
    p.add_argument("--p", default=None, help="insertion tableau")
    p.add_argument("--q", default=None, help="recording tableau")
    p.add_argument("--d", default=None, help="single tableau of the symmetric correspondence")
    p.add_argument("--ruleset", choices=(DOMINO, RS), default=DOMINO)
    p = add("verify", cmd_verify, "check one identity")
    p.add_argument("name")
    for key in _VERIFY_KEYS:
        if key == "order":
            continue
        typ = _partition if key in ("alpha", "beta") else int
        p.add_argument("--" + key.replace("_", "-"), dest=key, type=typ, default=None)
    p = add("verify-all", cmd_verify_all, "run the whole registry")
    p.add_argument("names", nargs="*", help="restrict to these identities")
    p.add_argument("--verbose", action="store_true", help="print passing reports too")
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, KeyError) as exc:
        parser.print_usage(sys.stderr)
        print(f"skewdomino: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
