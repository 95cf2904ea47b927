"""Full analysis report for one polytope, as a JSON-friendly dict."""

from __future__ import annotations

from .classification import (
    audit_bounds,
    genus_data,
    idp_check,
    is_castelnuovo,
    is_castelnuovo_direct,
    is_spanning,
    spanning_invariant_factors,
)
from .ehrhart import degree, hstar, normalized_volume
from .geometry import DEFAULT_BUDGET, Polytope
from .triangulation import betke_mcmullen_check, h_vector, is_unimodular, pulling_triangulation


def build_report(
    p: Polytope,
    name: str = "polytope",
    kmax: int | None = None,
    budget: int = DEFAULT_BUDGET,
) -> dict:
    h = hstar(p, budget)
    g = genus_data(h)
    idp = idp_check(p, kmax, budget)
    castel = is_castelnuovo(p, budget)
    direct = is_castelnuovo_direct(p, budget)
    tri = pulling_triangulation(p, budget)
    bm = betke_mcmullen_check(p, budget)
    report = {
        "name": name,
        "dim": p.dim,
        "vertex_count": len(p.vertices),
        "vertices": [list(v) for v in p.vertices],
        "nonvertex_input_points": [list(v) for v in p.discarded_points],
        "lattice_point_count": p.lattice_count(1, budget),
        "interior_lattice_point_count": p.interior_lattice_count(1, budget),
        "hstar": list(h.coeffs),
        "degree": degree(p, budget),
        "normalized_volume": normalized_volume(p, budget),
        "spanning": is_spanning(p, budget),
        "spanning_invariant_factors": list(spanning_invariant_factors(p, budget)),
        "smooth": p.is_smooth(),
        "idp": {
            "status": idp.status,
            "kmax_checked": idp.kmax_checked,
            "witness": None
            if idp.witness is None
            else {"k": idp.witness[0], "point": list(idp.witness[1])},
        },
        "genus": {
            "degree": g.s,
            "genus": g.genus,
            "delta": g.delta,
            "m": g.m,
            "bound": g.bound,
            "h0": g.h0,
            "volume": g.volume,
        },
        "castelnuovo": {
            "characterization": castel.as_dict(),
            "direct": direct.as_dict(),
            "routes_agree": castel.verdict == direct.verdict,
        },
        "bound_audits": audit_bounds(p, budget),
        "triangulation": {
            "points": len(tri.points),
            "maximal_simplices": len(tri.maximal_simplices),
            "unimodular": is_unimodular(tri),
            "h": list(h_vector(tri).h),
            "betke_mcmullen_consistent": bm["consistent"],
        },
    }
    return report


def render_text(report: dict) -> str:
    lines = []
    add = lines.append
    add(f"name:                {report['name']}")
    add(f"dimension:           {report['dim']}")
    add(f"vertices:            {report['vertex_count']}")
    if report["nonvertex_input_points"]:
        add(f"discarded inputs:    {len(report['nonvertex_input_points'])} non-vertex point(s)")
    add(f"lattice points:      {report['lattice_point_count']}"
        f" ({report['interior_lattice_point_count']} interior)")
    add(f"h*-vector:           {tuple(report['hstar'])}")
    add(f"degree:              {report['degree']}")
    add(f"normalized volume:   {report['normalized_volume']}")
    add(f"spanning:            {report['spanning']}"
        f" (invariant factors {tuple(report['spanning_invariant_factors'])})")
    add(f"smooth:              {report['smooth']}")
    idp = report["idp"]
    wit = idp["witness"]
    extra = "" if wit is None else f", witness {tuple(wit['point'])} at k={wit['k']}"
    add(f"idp:                 {idp['status']} (k <= {idp['kmax_checked']}{extra})")
    g = report["genus"]
    add(f"sectional genus:     g={g['genus']}, delta={g['delta']}, m={g['m']},"
        f" bound={g['bound']}, h0={g['h0']}, L^n={g['volume']}")
    c = report["castelnuovo"]
    if not c["routes_agree"]:
        add("*** ROUTE-MISMATCH: the two Castelnuovo routes disagree; this is a bug ***")
    add(f"castelnuovo:         {c['characterization']['verdict']}"
        f" via {c['characterization']['route']}")
    add(f"castelnuovo direct:  {c['direct']['verdict']} via {c['direct']['route']}")
    b = report["bound_audits"]

    def fmt_check(d):
        return "holds" if d["holds"] else ("VIOLATED" if d["holds"] is not None else "vacuous")

    add(f"interior lower bnd:  {fmt_check(b['hibi'])}")
    add(f"spanning lower bnd:  {fmt_check(b['hkn'])}")
    vol = b["volume"]
    if vol["applicable"]:
        eq = "equality" if vol["equality"] else "strict"
        flat = "flat" if vol["flat"] else "not flat"
        consistency = "consistent" if vol["equality_iff_flat"] else "INCONSISTENT"
        add(f"volume lower bnd:    {fmt_check(vol)} ({eq}, {flat}, {consistency})")
    else:
        add("volume lower bnd:    vacuous")
    t = report["triangulation"]
    add(f"triangulation:       {t['maximal_simplices']} simplices on {t['points']} points,"
        f" unimodular={t['unimodular']}")
    add(f"h-vector:            {tuple(t['h'])}"
        f" (h* criterion {'consistent' if t['betke_mcmullen_consistent'] else 'INCONSISTENT'})")
    return "\n".join(lines)
