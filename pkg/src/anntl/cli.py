"""Command-line front end.

Subcommand tree: tl | annular | module | series | graph | ade.  All numeric
output is exact by default; --approx adds decimal previews.  Exit codes:
0 success, 1 a mathematical check failed (e.g. an obstruction was found
under --expect-pass), 2 input error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import ade, annular, graphs, modules, series, tl
from .scalars import Rat, cyclo, format_scalar, is_zero, two_cos_pi_over


class CheckFailure(Exception):
    pass


def parse_scalar(text: str, conductor: int | None = None):
    """Parse '3', '-1/2', '2cos(pi/12)', 'zeta(24)^5', 'i', '-i'."""
    text = text.strip().replace(" ", "")
    if text == "i":
        return cyclo(4, 1)
    if text == "-i":
        return cyclo(4, 3)
    m = re.fullmatch(r"(-?\d+)(?:/(\d+))?", text)
    if m:
        num, den = int(m.group(1)), int(m.group(2) or 1)
        return Rat(num, den)
    m = re.fullmatch(r"2cos\(pi/(\d+)\)", text)
    if m:
        val = two_cos_pi_over(int(m.group(1)))
        return val.promote(conductor) if conductor else val
    m = re.fullmatch(r"zeta\((\d+)\)(?:\^(-?\d+))?", text)
    if m:
        val = cyclo(int(m.group(1)), int(m.group(2) or 1))
        return val.promote(conductor) if conductor else val
    raise ValueError(f"cannot parse scalar {text!r}")


def render_scalar(x, approx: bool):
    out = format_scalar(x)
    if approx:
        out += f"  (~ {format_scalar(x, approx=True)})"
    return out


def emit(payload, args):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, default=str))
        return
    _emit_table(payload)


def _emit_table(payload, indent=""):
    if isinstance(payload, dict):
        for k in payload:
            v = payload[k]
            if isinstance(v, (dict, list)) and v and not _is_flat(v):
                print(f"{indent}{k}:")
                _emit_table(v, indent + "  ")
            else:
                print(f"{indent}{k}: {_flat(v)}")
    elif isinstance(payload, list):
        for v in payload:
            if isinstance(v, (dict, list)):
                _emit_table(v, indent)
                print()
            else:
                print(f"{indent}{_flat(v)}")
    else:
        print(f"{indent}{payload}")


def _is_flat(v):
    if isinstance(v, list):
        return all(not isinstance(x, (dict, list)) for x in v)
    return False


def _flat(v):
    if isinstance(v, list):
        return "[" + ", ".join(str(x) for x in v) + "]"
    return str(v)


def _graph_from_args(args) -> graphs.PointedBipartiteGraph:
    if args.builtin:
        return graphs.builtin_graph(args.builtin)
    if args.file:
        return graphs.PointedBipartiteGraph.from_file(args.file)
    raise ValueError("need --builtin NAME or --file PATH")


# -- tl ---------------------------------------------------------------------


def cmd_tl_basis(args):
    basis = tl.enumerate_tl_basis(args.n)
    emit({"n": args.n, "count": len(basis),
          "diagrams": [d.to_json() for d in basis]}, args)


def cmd_tl_jw(args):
    delta = parse_scalar(args.delta, args.conductor)
    p = tl.jones_wenzl(args.n, delta)
    terms = [{"diagram": d.to_json(), "coeff": format_scalar(c)}
             for d, c in sorted(p.terms.items(), key=lambda t: t[0].pairing)]
    emit({"n": args.n, "delta": format_scalar(delta), "terms": terms}, args)


def cmd_tl_dim(args):
    if args.root:
        val = tl.tl_dim_at_root(args.n, args.t, args.root)
    else:
        val = tl.tl_dim(args.n, args.t)
    emit({"n": args.n, "t": args.t, "dimension": val}, args)


def cmd_tl_chain(args):
    delta = parse_scalar(args.delta, args.conductor)
    val = tl.jw_chain_coefficient(args.n, args.r, delta)
    emit({"n": args.n, "r": args.r, "coefficient": render_scalar(val, args.approx)}, args)


# -- annular ------------------------------------------------------------------


def cmd_annular_basis(args):
    basis = annular.enumerate_annular(args.m, args.k, args.t)
    emit({"m": args.m, "k": args.k, "t": args.t, "count": len(basis),
          "diagrams": [d.to_json() for d in basis]}, args)


def cmd_annular_generator(args):
    d = annular.generator(args.kind, args.m, args.i)
    emit(d.to_json(), args)


# -- module -------------------------------------------------------------------


def _spec_from_args(args) -> modules.ModuleSpec:
    delta = parse_scalar(args.delta, args.conductor)
    if args.family == "low":
        omega = parse_scalar(args.omega, args.conductor) if args.omega else 1
        return modules.low_weight(args.k, omega, delta)
    if args.family == "mu":
        mu = parse_scalar(args.mu, args.conductor) if args.mu else Rat(1)
        return modules.mu_module(mu, delta)
    return modules.zero_module(args.sign != "-", delta)


def _parse_level(text):
    return text if text in ("+", "-") else int(text)


def cmd_module_gram(args):
    spec = _spec_from_args(args)
    g = modules.gram(spec, _parse_level(args.level))
    payload = {
        "module": spec.label(),
        "level": args.level,
        "dimension": g.dimension,
        "rank": g.rank,
        "corank": g.corank,
        "positive_definite": g.positive_definite,
        "positive_semidefinite": g.positive_semidefinite,
        "matrix": [[format_scalar(x) for x in row] for row in g.matrix],
    }
    if args.approx:
        payload["matrix_approx"] = [[format_scalar(x, approx=True) for x in row]
                                    for row in g.matrix]
    if g.corank:
        payload["kernel"] = [
            [{"diagram": d.to_json(), "coeff": format_scalar(c)}
             for d, c in sorted(v.terms.items(), key=lambda t: t[0].sort_key())]
            for v in g.kernel_vectors()
        ]
    emit(payload, args)


def cmd_module_basis(args):
    spec = _spec_from_args(args)
    basis = modules.module_basis(spec, _parse_level(args.level))
    emit({"module": spec.label(), "level": args.level, "count": len(basis),
          "diagrams": [d.to_json() for d in basis]}, args)


def cmd_module_positivity(args):
    spec = _spec_from_args(args)
    emit({"module": spec.label(),
          "profile": modules.positivity_profile(spec, args.max_level)}, args)


def cmd_module_table(args):
    emit(modules.dimension_table(), args)


# -- series -------------------------------------------------------------------


def _parse_dims(text):
    return [int(x) for x in text.split(",") if x.strip()]


def cmd_series_catalan(args):
    emit({"coefficients": series.catalan_series(args.order).ints()}, args)


def cmd_series_theta(args):
    dims = _parse_dims(args.dims)
    phi = series.poincare_series(dims, args.order)
    th = series.theta_transform(phi)
    emit({"dims": dims, "theta": th.ints()}, args)


def cmd_series_multiplicities(args):
    dims = _parse_dims(args.dims)
    a = series.annular_multiplicities(dims, args.max_r)
    first_neg = next((r for r, x in enumerate(a) if x < 0), None)
    emit({"dims": dims, "a": a, "first_negative": first_neg}, args)


# -- graph --------------------------------------------------------------------


def cmd_graph_screen(args):
    g = _graph_from_args(args)
    rep = graphs.screen_principal_graph(g, args.max_r)
    emit(rep, args)
    if args.expect_pass and rep["first_negative"] is not None:
        raise CheckFailure(rep["verdict"])


def cmd_graph_census(args):
    g = _graph_from_args(args)
    emit(graphs.rotation_census(g, args.k), args)


def cmd_graph_loops(args):
    g = _graph_from_args(args)
    emit({"basepoint": g.basepoint,
          "loop_counts": graphs.loop_counts(g, args.n),
          "all_starts": graphs.all_starts_dims(g, args.n)}, args)


def cmd_graph_spectral(args):
    g = _graph_from_args(args)
    s = graphs.spectral_data(g)
    lo, hi = s.norm_squared_bracket
    emit({"char_poly": s.char_poly_gram,
          "norm_squared_bracket": [str(lo), str(hi)],
          "norm_greater_than_two": s.norm_greater_than_two}, args)


# -- ade ----------------------------------------------------------------------


def _case_from_args(args) -> ade.AdeCase:
    branch = +1 if args.branch == "plus" else -1
    return ade.ade_case(args.case, branch)


def cmd_ade_nullvec(args):
    case = _case_from_args(args)
    s = ade.null_summary(case)
    vector = s.pop("vector")
    s["norm"] = "0 (exact)" if s["norm_is_zero"] else "nonzero"
    s["terms_detail"] = [
        {"diagram": d.to_json(), "coeff": format_scalar(c)}
        for d, c in sorted(vector.terms.items(), key=lambda t: t[0].sort_key())
    ]
    emit(s, args)
    if not (s["norm_is_zero"] and s["closed_form_is_zero"] and s["gram_annihilates"]):
        raise CheckFailure("null vector checks failed")


def cmd_ade_e7(args):
    rep = ade.e7_obstruction()
    payload = {}
    for key, val in rep.items():
        if isinstance(val, dict):
            payload[key] = {
                "dimension": val["dimension"],
                "rank": val["rank"],
                "determinant_zero": val["determinant_zero"],
                "determinant": render_scalar(val["determinant"], args.approx),
            }
        else:
            payload[key] = val
    emit(payload, args)
    if not rep["all_nonzero"]:
        raise CheckFailure("expected nondegenerate level-5 forms")


def cmd_ade_star_eq(args):
    omega = parse_scalar(args.omega, args.conductor)
    ok, z = ade.star_equation(args.n, args.k, args.r, omega)
    emit({"n": args.n, "k": args.k, "r": args.r,
          "solvable": ok,
          "z": render_scalar(z, args.approx) if ok else None}, args)


def cmd_ade_transfer(args):
    case = _case_from_args(args)
    A = ade.braid_value(case)
    res = ade.transfer_eigenvalue(case.d, case.omega, A)
    emit({"case": case.name, "k": case.d,
          "A": format_scalar(A),
          "z": render_scalar(res["z"], args.approx),
          "modulus_matches_delta": res["modulus_matches_delta"]}, args)
    if not res["modulus_matches_delta"]:
        raise CheckFailure("transfer eigenvalue modulus mismatch")


def cmd_ade_biunitary(args):
    case = _case_from_args(args)
    A = ade.braid_value(case)
    ok = ade.biunitary_check(A, case.delta)
    emit({"case": case.name, "A": format_scalar(A), "biunitary": ok}, args)
    if not ok:
        raise CheckFailure("biunitarity failed")


def cmd_ade_euler(args):
    if args.v is not None and args.f is not None:
        ok = ade.euler_counts(args.v, args.e, args.f, args.k)
        emit({"identity": "v - e + f = 1 - 2k", "holds": ok}, args)
    else:
        ok = ade.euler_bound(args.p, args.e, args.k)
        emit({"bound": "(2p-3)k >= 3p + (p-3)e", "holds": ok}, args)


def cmd_ade_psi2(args):
    p = ade.psi_square_coefficients(parse_scalar(args.tau1), parse_scalar(args.tau2))
    emit({"x_squared": str(p.x_squared), "y_squared": str(p.y_squared),
          "a_squared": str(p.a_squared), "b": str(p.b),
          "x": p.x, "y": p.y, "a": p.a,
          "verified": p.verify()}, args)


def cmd_ade_degdims(args):
    val = ade.degenerate_dims(args.k, args.first_level, args.conductor_n, args.level)
    emit({"k": args.k, "level": args.level, "dimension": val}, args)


def cmd_ade_audit(args):
    branch = +1 if args.branch == "plus" else -1
    emit(ade.skein_relation_audit(args.case, branch), args)


# -- wiring -------------------------------------------------------------------


def _add_common(parser, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", choices=("table", "json"), default=d("table"))
    parser.add_argument("--approx", action="store_true", default=d(False),
                        help="add decimal previews")
    parser.add_argument("--conductor", type=int, default=d(None),
                        help="promote parsed scalars to this cyclotomic conductor")
    parser.add_argument("--jobs", type=int, default=d(1),
                        help="accepted for symmetry; computations are single-process")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="anntl", description=__doc__)
    _add_common(top, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _add_common(common, suppress=True)
    top._anntl_common = common
    sub = top.add_subparsers(dest="group", required=True)

    def leaf(group, name, fn):
        p = group.add_parser(name, parents=[common])
        p.set_defaults(func=fn)
        return p

    g_tl = sub.add_parser("tl").add_subparsers(dest="cmd", required=True)
    p = leaf(g_tl, "basis", cmd_tl_basis)
    p.add_argument("--n", type=int, required=True)
    p = leaf(g_tl, "jw", cmd_tl_jw)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", required=True)
    p = leaf(g_tl, "dim", cmd_tl_dim)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--root", type=int, default=None)
    p = leaf(g_tl, "chain", cmd_tl_chain)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--delta", required=True)

    g_ann = sub.add_parser("annular").add_subparsers(dest="cmd", required=True)
    p = leaf(g_ann, "basis", cmd_annular_basis)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p = leaf(g_ann, "generator", cmd_annular_generator)
    p.add_argument("--kind", required=True, choices=sorted(annular._GENERATORS))
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--i", type=int, default=1)

    g_mod = sub.add_parser("module").add_subparsers(dest="cmd", required=True)
    for name, fn in (("gram", cmd_module_gram), ("basis", cmd_module_basis),
                     ("positivity", cmd_module_positivity)):
        p = leaf(g_mod, name, fn)
        p.add_argument("--family", choices=("low", "mu", "zero"), required=True)
        p.add_argument("--delta", required=True)
        p.add_argument("--k", type=int, default=1)
        p.add_argument("--omega", default=None)
        p.add_argument("--mu", default=None)
        p.add_argument("--sign", choices=("+", "-"), default="+")
        if name == "positivity":
            p.add_argument("--max-level", type=int, required=True)
        else:
            p.add_argument("--level", required=True)
    leaf(g_mod, "table", cmd_module_table)

    g_ser = sub.add_parser("series").add_subparsers(dest="cmd", required=True)
    p = leaf(g_ser, "catalan", cmd_series_catalan)
    p.add_argument("--order", type=int, default=16)
    p = leaf(g_ser, "theta", cmd_series_theta)
    p.add_argument("--dims", required=True)
    p.add_argument("--order", type=int, default=16)
    p = leaf(g_ser, "multiplicities", cmd_series_multiplicities)
    p.add_argument("--dims", required=True)
    p.add_argument("--max-r", type=int, default=8)

    g_gr = sub.add_parser("graph").add_subparsers(dest="cmd", required=True)
    for name, fn in (("screen", cmd_graph_screen), ("census", cmd_graph_census),
                     ("loops", cmd_graph_loops), ("spectral", cmd_graph_spectral)):
        p = leaf(g_gr, name, fn)
        p.add_argument("--builtin", default=None)
        p.add_argument("--file", default=None)
        if name == "screen":
            p.add_argument("--max-r", type=int, required=True)
            p.add_argument("--expect-pass", action="store_true")
        if name == "census":
            p.add_argument("--k", type=int, required=True)
        if name == "loops":
            p.add_argument("--n", type=int, required=True)

    g_ade = sub.add_parser("ade").add_subparsers(dest="cmd", required=True)
    case_names = ("e6", "e8", "E6", "E8")
    p = leaf(g_ade, "nullvec", cmd_ade_nullvec)
    p.add_argument("--case", choices=case_names, required=True)
    p.add_argument("--branch", choices=("plus", "minus"), default="plus")
    leaf(g_ade, "e7", cmd_ade_e7)
    p = leaf(g_ade, "star-eq", cmd_ade_star_eq)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--omega", required=True)
    p = leaf(g_ade, "transfer", cmd_ade_transfer)
    p.add_argument("--case", choices=case_names, required=True)
    p.add_argument("--branch", choices=("plus", "minus"), default="plus")
    p = leaf(g_ade, "biunitary", cmd_ade_biunitary)
    p.add_argument("--case", choices=case_names, required=True)
    p.add_argument("--branch", choices=("plus", "minus"), default="plus")
    p = leaf(g_ade, "euler", cmd_ade_euler)
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--v", type=int, default=None)
    p.add_argument("--f", type=int, default=None)
    p = leaf(g_ade, "psi2", cmd_ade_psi2)
    p.add_argument("--tau1", required=True)
    p.add_argument("--tau2", required=True)
    p = leaf(g_ade, "degdims", cmd_ade_degdims)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--first-level", type=int, required=True)
    p.add_argument("--conductor-n", type=int, required=True)
    p.add_argument("--level", type=int, required=True)
    p = leaf(g_ade, "audit", cmd_ade_audit)
    p.add_argument("--case", choices=case_names, default="E8")
    p.add_argument("--branch", choices=("plus", "minus"), default="plus")
    return top


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        args.func(args)
    except CheckFailure as e:
        print(f"check failed: {e}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
