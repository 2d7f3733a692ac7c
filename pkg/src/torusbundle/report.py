"""JSON report sections and their text rendering.

Every section is a plain JSON-compatible dict. Integers that can grow
without bound (matrix entries, invariant factors, representatives) are
emitted as decimal strings; counts and ranks stay numbers. The text form
is computed from the JSON form alone.
"""

from __future__ import annotations

from .action import ActionData, torus_fixed_points
from .groups import (
    abelianization,
    commutator_rank_check,
    compute_r,
    conjugacy_classes,
    h1,
)
from .linalg import char_poly, determinant
from .ltheory import (
    Decoration,
    l_of_Z,
    l_of_Zn,
    l_of_Zp_decorated,
    ls_of_ZGamma,
    reduced_ls_of_ZP,
    whitehead,
)
from .oracles import run_all
from .structure import (
    ManifoldParams,
    detection_report,
    sgeo_of_M,
    sper_of_BGamma,
    sper_of_M,
)

SCHEMA = "torusbundle.report/1"


def _strs(xs) -> list[str]:
    return [str(x) for x in xs]


def input_section(a: ActionData, l: int | None) -> dict:
    return {"p": a.p, "rho": [_strs(r) for r in a.rho.tolist()], "l": l}


def validation_section(a: ActionData) -> dict:
    return {
        "valid": True,
        "n": a.n,
        "k": a.k,
        "det_rho": str(determinant(a.rho)),
        "det_rho_minus_id": str(determinant(a.rho_minus_id)),
        "snf_diagonal": _strs(a.snf_of_rho_minus_id.diagonal),
        "char_poly": str(char_poly(a.rho)),
    }


def invariants_section(a: ActionData) -> dict:
    reps = conjugacy_classes(a)
    return {
        "h1": h1(a).to_json(),
        "abelianization": abelianization(a).to_json(),
        "commutator_full_rank": commutator_rank_check(a),
        "weyl_group_of_finite_subgroups": "trivial",
        "conjugacy_class_count": len(reps),
        "conjugacy_class_reps": [{"label": c.label, "u": _strs(c.u)} for c in reps],
        "torus_fixed_points": [_strs(pt.coordinates) for pt in torus_fixed_points(a)],
        "r_vector": list(compute_r(a).values),
    }


def ltheory_section(a: ActionData, m_lo: int, m_hi: int) -> dict:
    r = compute_r(a)
    rows = []
    for m in range(m_lo, m_hi + 1):
        rows.append({
            "m": m,
            "L_Z": l_of_Z(m).to_json(),
            "L_Z_Zn": l_of_Zn(m, a.n).to_json(),
            "L_minus_infinity_Z_Zp": l_of_Zp_decorated(m, a.p, Decoration.MINUS_INFINITY).to_json(),
            "reduced_Ls_Z_Zp": reduced_ls_of_ZP(m, a.p).to_json(),
            "Ls_Z_Gamma": ls_of_ZGamma(a, m, r).to_json(),
        })
    return {
        "m_range": [m_lo, m_hi],
        "rows": rows,
        "whitehead": {str(m): whitehead(a, m).to_json() for m in (1, 0, -1)},
    }


def structure_section(mp: ManifoldParams) -> dict:
    a = mp.action
    r = compute_r(a)
    return {
        "l": mp.l,
        "dim_M": mp.dim,
        "sper_BGamma_odd": sper_of_BGamma(a, 1).to_json(),
        "sper_BGamma_even": sper_of_BGamma(a, 0).to_json(),
        "sper_M": sper_of_M(mp, r).to_json(),
        "sgeo_M": sgeo_of_M(mp, r).to_json(),
        "l_independent": True,
    }


def detection_section(mp: ManifoldParams) -> dict:
    rep = detection_report(mp)
    return {
        "l": mp.l,
        "d": mp.d,
        "rho_sign": mp.rho_sign,
        "structure_set": rep.structure_set.to_json(),
        "sigma_geo_codomain": rep.sigma_geo_codomain.to_json(),
        "free_rank_audit": rep.free_rank_audit,
        "splitting": [
            {"J": list(row.subset), "group": row.group.to_json(), "vacuous": row.vacuous}
            for row in rep.splitting_entries
        ],
        "nontrivial_splitting_count": len(rep.nontrivial_splitting),
        "rho_targets": [
            {"label": row.subgroup.label, "u": _strs(row.subgroup.u),
             "target": row.target.to_json()}
            for row in rep.rho_entries
        ],
        "note": "rho-invariant rows are the targets of the rho-invariant criterion; no invariant is evaluated",
    }


def oracle_section(a: ActionData) -> dict:
    outcomes = run_all(a)
    return {
        "outcomes": [o.to_json() for o in outcomes],
        "all_agree": all(o.agree for o in outcomes),
    }


def build_report(a: ActionData, l: int, m_lo: int = 0, m_hi: int = 3,
                 with_oracles: bool = False) -> dict:
    mp = ManifoldParams(a, l)
    doc = {
        "schema": SCHEMA,
        "input": input_section(a, l),
        "validation": validation_section(a),
        "invariants": invariants_section(a),
        "l_theory": ltheory_section(a, m_lo, m_hi),
        "structure_sets": structure_section(mp),
        "detection": detection_section(mp),
    }
    if with_oracles:
        doc["oracles"] = oracle_section(a)
    return doc


def _g(data: dict) -> str:
    return data["text"]


def render_text(doc: dict) -> str:
    """Human-readable rendering of any subset of report sections."""
    lines: list[str] = []
    if "input" in doc:
        inp = doc["input"]
        rho = "; ".join(" ".join(r) for r in inp["rho"])
        lines.append(f"p = {inp['p']}, rho = [{rho}]" + (f", l = {inp['l']}" if inp.get("l") else ""))
    if "validation" in doc:
        v = doc["validation"]
        lines.append(f"valid action: n = {v['n']}, k = {v['k']}, char poly = {v['char_poly']}")
        lines.append(f"det(rho - I) = {v['det_rho_minus_id']}, SNF diagonal = ({', '.join(v['snf_diagonal'])})")
    if "invariants" in doc:
        g = doc["invariants"]
        lines.append("")
        lines.append(f"H^1(Z/p; Z^n) = {_g(g['h1'])}")
        lines.append(f"Gamma_ab = {_g(g['abelianization'])}")
        lines.append(f"[Gamma, Gamma] = im(rho - I) of full rank: {g['commutator_full_rank']}")
        lines.append(f"Weyl groups of finite subgroups: {g['weyl_group_of_finite_subgroups']}")
        lines.append(f"{g['conjugacy_class_count']} conjugacy classes of order-p subgroups, reps u:")
        for c in g["conjugacy_class_reps"]:
            lines.append(f"  [{c['label']}] u = ({', '.join(c['u'])})")
        lines.append(f"{len(g['torus_fixed_points'])} fixed points on the torus:")
        for pt in g["torus_fixed_points"]:
            lines.append(f"  ({', '.join(pt)})")
        lines.append(f"r = ({', '.join(str(x) for x in g['r_vector'])})")
    if "l_theory" in doc:
        t = doc["l_theory"]
        lines.append("")
        lines.append(f"L-groups for m in {t['m_range'][0]}..{t['m_range'][1]}:")
        for row in t["rows"]:
            lines.append(f"  m = {row['m']}:")
            lines.append(f"    L_m(Z) = {_g(row['L_Z'])}")
            lines.append(f"    L_m(Z[Z^n]) = {_g(row['L_Z_Zn'])}")
            lines.append(f"    L^<-oo>_m(Z[Z/p]) = {_g(row['L_minus_infinity_Z_Zp'])}")
            lines.append(f"    reduced L^s_m(Z[Z/p]) = {_g(row['reduced_Ls_Z_Zp'])}")
            lines.append(f"    L^s_m(Z Gamma) = {_g(row['Ls_Z_Gamma'])}")
        for m, grp in t["whitehead"].items():
            lines.append(f"  Wh_{m}(Gamma) = {_g(grp)}")
    if "structure_sets" in doc:
        s = doc["structure_sets"]
        lines.append("")
        lines.append(f"S_per_m(B Gamma) = {_g(s['sper_BGamma_odd'])} (m odd), {_g(s['sper_BGamma_even'])} (m even)")
        lines.append(f"S_per(M) = {_g(s['sper_M'])}")
        lines.append(f"S_geo(M) = {_g(s['sgeo_M'])}")
        lines.append(f"(dim M = {s['dim_M']}; both formulas are independent of l)")
    if "detection" in doc:
        d = doc["detection"]
        n_split = d["nontrivial_splitting_count"]
        n_rho = len(d["rho_targets"])
        lines.append("")
        lines.append(f"S_geo(M) = {_g(d['structure_set'])}")
        lines.append(f"sigma_geo codomain = {_g(d['sigma_geo_codomain'])}")
        lines.append(f"{n_split} nontrivial splitting obstruction{'s' if n_split != 1 else ''}"
                     f" ({len(d['splitting'])} subtori T^J):")
        for row in d["splitting"]:
            if not row["vacuous"]:
                lines.append(f"  J = {{{', '.join(str(x) for x in row['J'])}}}: L_{len(row['J'])}(Z) = {_g(row['group'])}")
        lines.append(f"{n_rho} rho-invariant targets (d = {d['d']}, sign {d['rho_sign']:+d}):")
        for row in d["rho_targets"]:
            lines.append(f"  [{row['label']}] u = ({', '.join(row['u'])}): {_g(row['target'])}")
    if "oracles" in doc:
        o = doc["oracles"]
        lines.append("")
        lines.append("oracles:")
        for out in o["outcomes"]:
            mark = "ok" if out["agree"] else "MISMATCH"
            lines.append(f"  {mark:8} {out['name']}: expected {out['expected']}, got {out['actual']}")
        lines.append("all oracles agree" if o["all_agree"] else "ORACLE DISAGREEMENT")
    return "\n".join(lines) + "\n"

