"""Command line interface exposing every computation in the package.

Subcommands: classify, betti, rao, enumerate, table, invert, obstruction.
The default output is a human readable report; --json switches to a single
machine readable record whose integers are exact decimals and whose Betti
entries are an integer, "+" (known positive), or "?" (not determined).
Exit status is 0 exactly when the computation succeeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from .betti import BettiDiagram
from .resolution_high import (
    GAMMA_ON_MINIMAL_SECTION,
    betti_high,
    hilbert_numerator_check,
    np_report_high,
    rnc_obstruction_h1,
    secant_obstruction,
)
from .resolution_low import (
    betti_low,
    count_distinct_betti,
    enumerate_types,
    invert_from_resolution,
    low_invariants,
    n_nu_p_report,
    oracle_rao,
    rao_dimension,
    rao_profile,
)
from .scroll import scroll_model
from .series import (
    NOT_BASE_POINT_FREE,
    FactorizationType,
    ampleness_class,
    is_nonspecial,
    morphism_profile,
    require_very_ample,
    riemann_roch,
)


def to_json(record: dict) -> str:
    return json.dumps(record, sort_keys=True)


def _divisor(dc) -> dict:
    return {"a": dc.a, "c": dc.c}


def classify_record(g: int, m: int, b: int) -> dict:
    ft = FactorizationType(g, m, b)
    pair = riemann_roch(ft)
    cls = ampleness_class(ft)
    model = scroll_model(g, m, b)
    morphism = None
    if cls.tag != NOT_BASE_POINT_FREE:
        morphism = {k: v for k, v in asdict(morphism_profile(ft)).items() if v is not None}
    return {
        "command": "classify",
        "g": g,
        "m": m,
        "b": b,
        "d": ft.degree,
        "h0": pair.h0,
        "h1": pair.h1,
        "nonspecial": is_nonspecial(ft),
        "ampleness": {"tag": cls.tag, "case": cls.case},
        "morphism": morphism,
        "scroll": {
            "e": model.e,
            "g": model.g,
            "b": model.b,
            "curve_class": _divisor(model.curve_class),
            "hyperplane_class": _divisor(model.hyperplane_class),
        },
    }


def render_classify(rec: dict) -> str:
    lines = [
        f"factorization type (m, b) = ({rec['m']}, {rec['b']}), genus {rec['g']}, degree {rec['d']}"
    ]
    special = "" if rec["nonspecial"] else " (special)"
    lines.append(f"h0 = {rec['h0']}, h1 = {rec['h1']}{special}")
    cls = rec["ampleness"]
    if cls["tag"] == "very_ample":
        label = "very ample"
    elif cls["tag"] == "not_base_point_free":
        label = "not base point free"
    else:
        label = f"base point free only (case {cls['case']})"
    lines.append(f"classification: {label}")
    mp = rec["morphism"]
    if mp is None:
        lines.append("morphism: none (the complete series has base points)")
    elif mp["kind"] == "embedding":
        lines.append(f"morphism: embedding into P^{rec['d'] - rec['g']}")
    elif mp["kind"] == "double_cover_of_rnc":
        lines.append(
            f"morphism: double cover of a rational normal curve of degree {mp['degree']}"
        )
    elif mp["kind"] == "birational_collapsing_b":
        lines.append(
            f"morphism: birational onto its image in P^{mp['target_dim']},"
            f" collapsing {mp['points_collapsed']} points"
        )
    else:
        lines.append(f"morphism: {mp['fold']}-fold cover of the line")
    s = rec["scroll"]
    m_part = s["hyperplane_class"]["c"]
    hyper = f"C0 + {m_part}*f" if m_part >= 0 else f"C0 - {-m_part}*f"
    lines.append(
        f"scroll model: F_{s['e']}, curve class 2*C0 + {s['curve_class']['c']}*f,"
        f" hyperplane class {hyper}"
    )
    return "\n".join(lines)


def betti_record(g: int, m: int, b: int) -> dict:
    ft = FactorizationType(g, m, b)
    require_very_ample(ft)
    d = ft.degree
    rec = {"command": "betti", "g": g, "m": m, "b": b, "d": d, "r": d - g}
    if d >= 2 * g + 1:
        diagram = betti_high(g, d)
        holds, fails = np_report_high(g, d)
        rec.update(
            regime="high",
            p=d - 2 * g - 1,
            np={"holds": holds, "fails": fails},
            hilbert_numerator_check=hilbert_numerator_check(diagram, g, d - 2 * g - 1),
        )
    else:
        diagram = betti_low(ft)
        inv = low_invariants(ft)
        nu, p_holds, p_fails = n_nu_p_report(ft)
        rec.update(
            regime="low",
            nu=inv.nu,
            tau=inv.tau,
            p=inv.p,
            reg=inv.nu + 1,
            n_nu_p={"nu": nu, "holds": p_holds, "fails": p_fails},
        )
    rec["entries"] = [[i, j, v] for i, j, v in diagram.triples()]
    return rec


def render_betti(rec: dict) -> str:
    diagram = BettiDiagram(rec["r"])
    for i, j, v in rec["entries"]:
        diagram.set(i, j, v)
    lines = [
        f"Betti diagram for (m, b) = ({rec['m']}, {rec['b']}),"
        f" genus {rec['g']}, degree {rec['d']}, ambient P^{rec['r']}",
        diagram.pretty(),
    ]
    if rec["regime"] == "high":
        np_ = rec["np"]
        lines.append(f"syzygies: N_{np_['holds']} holds, N_{np_['fails']} fails")
        ok = "ok" if rec["hilbert_numerator_check"] else "MISMATCH"
        lines.append(f"hilbert numerator identity: {ok}")
    else:
        lines.append(
            f"nu = {rec['nu']}, tau = {rec['tau']}, p = {rec['p']}, regularity = {rec['reg']}"
        )
        n = rec["n_nu_p"]
        if n["holds"] is None:
            lines.append(f"syzygies: N_({n['nu']},1) fails")
        else:
            lines.append(
                f"syzygies: N_({n['nu']},{n['holds']}) holds, N_({n['nu']},{n['fails']}) fails"
            )
    return "\n".join(lines)


def rao_record(g: int, m: int, b: int, j_max: int) -> dict:
    ft = FactorizationType(g, m, b)
    profile = rao_profile(ft, j_max)
    inv = low_invariants(ft)
    agrees = all(rao_dimension(ft, j) == oracle_rao(ft, j) for j in range(2, j_max + 1))
    return {
        "command": "rao",
        "g": g,
        "m": m,
        "b": b,
        "d": ft.degree,
        "r": ft.degree - g,
        "j_max": j_max,
        "nu": inv.nu,
        "tau": inv.tau,
        "p": inv.p,
        "reg": inv.nu + 1,
        "gamma": [[j, v] for j, v in profile.gamma],
        "oracle_agrees": agrees,
    }


def render_rao(rec: dict) -> str:
    values = ", ".join(str(v) for _, v in rec["gamma"])
    return "\n".join(
        [
            f"(m, b) = ({rec['m']}, {rec['b']}), genus {rec['g']},"
            f" degree {rec['d']}, ambient P^{rec['r']}",
            f"nu = {rec['nu']}, tau = {rec['tau']}, p = {rec['p']}, regularity = {rec['reg']}",
            f"gamma_1..gamma_{rec['j_max']}: {values}",
            f"scroll oracle agreement: {'ok' if rec['oracle_agrees'] else 'MISMATCH'}",
        ]
    )


def enumerate_record(g: int, d: int) -> dict:
    types = enumerate_types(g, d)
    low = g + 3 <= d <= 2 * g
    items = []
    for ft in types:
        item = {"m": ft.m, "b": ft.b}
        if low:
            inv = low_invariants(ft)
            item.update(nu=inv.nu, tau=inv.tau, p=inv.p)
        items.append(item)
    return {
        "command": "enumerate",
        "g": g,
        "d": d,
        "count": len(types),
        "count_distinct_betti": count_distinct_betti(g, d) if low else None,
        "types": items,
    }


def render_enumerate(rec: dict) -> str:
    head = f"very ample types of degree {rec['d']}, genus {rec['g']}:"
    if not rec["types"]:
        return head + " none"
    lines = [head]
    for item in rec["types"]:
        line = f"  ({item['m']}, {item['b']})"
        if "nu" in item:
            line += f"   nu = {item['nu']}, tau = {item['tau']}, p = {item['p']}"
        lines.append(line)
    tail = f"count = {rec['count']}"
    if rec["count_distinct_betti"] is not None:
        tail += f", distinct Betti diagrams = {rec['count_distinct_betti']}"
    lines.append(tail)
    return "\n".join(lines)


def table_record(g: int, d_min: int, d_max: int, j_max: int = 7) -> dict:
    if g < 2:
        raise ValueError(f"genus must be at least 2, got {g}")
    if not g + 3 <= d_min <= d_max <= 2 * g:
        raise ValueError(
            f"table range requires g+3 <= d_min <= d_max <= 2g, got {d_min}..{d_max} at g={g}"
        )
    if j_max < 2:
        raise ValueError(f"j_max must be at least 2, got {j_max}")
    rows = []
    for d in range(d_min, d_max + 1):
        for ft in enumerate_types(g, d):
            inv = low_invariants(ft)
            rows.append(
                {
                    "d": d,
                    "m": ft.m,
                    "b": ft.b,
                    "nu": inv.nu,
                    "p": inv.p,
                    "tau": inv.tau,
                    "gamma": [rao_dimension(ft, j) for j in range(2, j_max + 1)],
                }
            )
    return {
        "command": "table",
        "g": g,
        "d_min": d_min,
        "d_max": d_max,
        "j_max": j_max,
        "rows": rows,
    }


def render_table(rec: dict) -> str:
    headers = ["d", "(m,b)", "nu", "p", "tau"] + [
        f"gamma{j}" for j in range(2, rec["j_max"] + 1)
    ]
    body = [
        [str(row["d"]), f"({row['m']},{row['b']})", str(row["nu"]), str(row["p"]), str(row["tau"])]
        + [str(v) for v in row["gamma"]]
        for row in rec["rows"]
    ]
    widths = [max(len(line[k]) for line in [headers] + body) for k in range(len(headers))]

    def fmt(line: list[str]) -> str:
        cells = [line[0].rjust(widths[0]), line[1].ljust(widths[1])]
        cells += [line[k].rjust(widths[k]) for k in range(2, len(headers))]
        return "  ".join(cells).rstrip()

    return "\n".join(fmt(line) for line in [headers] + body)


def invert_record(g: int, d: int, nu: int, p: int) -> dict:
    ft = invert_from_resolution(g, d, nu, p)
    return {"command": "invert", "g": g, "d": d, "nu": nu, "p": p, "m": ft.m, "b": ft.b}


def render_invert(rec: dict) -> str:
    return (
        f"recovered (m, b) = ({rec['m']}, {rec['b']}) for genus {rec['g']},"
        f" degree {rec['d']} (nu = {rec['nu']}, p = {rec['p']})"
    )


def obstruction_record(g: int, m: int, b: int) -> dict:
    ft = FactorizationType(g, m, b)
    ob = secant_obstruction(ft)
    p = ft.degree - 2 * g - 1
    certificate = None
    if ob.kind == GAMMA_ON_MINIMAL_SECTION:
        certificate = rnc_obstruction_h1(ob.plane_dim, ob.gamma_length, p + 1, 2)
    return {
        "command": "obstruction",
        "g": g,
        "m": m,
        "b": b,
        "d": ft.degree,
        "p": p,
        "kind": ob.kind,
        "secancy": ob.secancy,
        "plane_dim": ob.plane_dim,
        "gamma_length": ob.gamma_length,
        "note": ob.note,
        "certificate": certificate,
    }


def render_obstruction(rec: dict) -> str:
    lines = [
        f"(m, b) = ({rec['m']}, {rec['b']}), genus {rec['g']}, degree {rec['d']} (p = {rec['p']})",
        f"obstruction: {rec['note']}",
    ]
    if rec["certificate"] is None:
        lines.append("certificate: not applicable for this kind")
    else:
        lines.append(f"certificate count = {rec['certificate']} (positive)")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperell",
        description="exact invariants of complete linear series on hyperelliptic curves",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str, flags: list[str], j_max_default: int | None = None):
        p = sub.add_parser(name, help=help_text)
        for flag in flags:
            p.add_argument(f"--{flag}", dest=flag.replace("-", "_"), type=int, required=True)
        if j_max_default is not None:
            p.add_argument("--j-max", dest="j_max", type=int, default=j_max_default)
        p.add_argument("--json", action="store_true", help="emit one machine readable record")
        return p

    p = add("classify", "cohomology, ampleness and morphism profile", ["g", "m", "b"])
    p.set_defaults(fn=lambda a: classify_record(a.g, a.m, a.b), render=render_classify)

    p = add("betti", "graded Betti diagram of the embedding", ["g", "m", "b"])
    p.set_defaults(fn=lambda a: betti_record(a.g, a.m, a.b), render=render_betti)

    p = add("rao", "Hartshorne-Rao dimensions and regularity", ["g", "m", "b"], j_max_default=7)
    p.set_defaults(fn=lambda a: rao_record(a.g, a.m, a.b, a.j_max), render=render_rao)

    p = add("enumerate", "all very ample types of a given degree", ["g", "d"])
    p.set_defaults(fn=lambda a: enumerate_record(a.g, a.d), render=render_enumerate)

    p = add(
        "table",
        "tabulate (m,b), nu, p, tau and gamma columns over a degree range",
        ["g", "d-min", "d-max"],
        j_max_default=7,
    )
    p.set_defaults(
        fn=lambda a: table_record(a.g, a.d_min, a.d_max, a.j_max), render=render_table
    )

    p = add("invert", "recover (m,b) from resolution data", ["g", "d", "nu", "p"])
    p.set_defaults(fn=lambda a: invert_record(a.g, a.d, a.nu, a.p), render=render_invert)

    p = add("obstruction", "secant-plane witness for the first nonlinear syzygy", ["g", "m", "b"])
    p.set_defaults(fn=lambda a: obstruction_record(a.g, a.m, a.b), render=render_obstruction)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        record = args.fn(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(to_json(record) if args.json else args.render(record))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
