"""Parameter sweeps over connection-set templates.

Rows come back in parameter order whatever the worker count, and every row
has the same columns; instances that cannot be run carry ``skipped`` and a
``reason`` instead of results.
"""

from __future__ import annotations

import csv
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import graphs as gr
from .autsearch import VERTEX_CAP, automorphism_group, cayley_is_normal
from .connset import ConnectionSet, reflections_set, thm52_set, validate
from .dihedral import refl, rot
from .errors import DihedralCayleyError, SizeCapExceeded
from .structure import predict, verify_structure
from .theorems import check_thm_5_2

COLUMNS = ["template", "n", "k", "elements", "case", "d", "components", "aut_order", "normal",
           "stabilizer_order", "aut_gs_order", "cross_check", "structure_verified",
           "oracle_order", "theorem", "verdict", "skipped", "reason"]

TEMPLATES = ("case3", "case4", "case5", "crown", "complete-bipartite", "rotations")


@dataclass(frozen=True)
class SweepPoint:
    template: str
    n: int
    k: int | None = None


def default_ks(template: str, n: int) -> list[int | None]:
    if template == "case3":
        return list(range(1, n))
    if template == "case4":
        return list(range(n))
    if template == "case5":
        return list(range(2, n))
    if template == "rotations":
        return list(range(2, n // 2 + 1))
    return [None]


def build_points(template: str, ns, ks=None) -> list[SweepPoint]:
    if template not in TEMPLATES:
        raise ValueError(f"unknown template {template!r}; choose from {', '.join(TEMPLATES)}")
    out = []
    for n in ns:
        for k in (default_ks(template, n) if ks is None else ks):
            if template == "case3" and k is not None and not 1 <= k < n:
                continue
            out.append(SweepPoint(template, n, k))
    return out


def connection_set_for(pt: SweepPoint) -> ConnectionSet:
    n, k = pt.n, pt.k
    if pt.template == "case3":
        return thm52_set(n, k)
    if pt.template == "crown":
        return reflections_set(n, range(n - 1))
    if pt.template == "complete-bipartite":
        return reflections_set(n, range(n))
    if pt.template == "rotations":
        return validate(n, sorted({rot(e, n) for e in (1, -1, k, -k)}))
    if n % 2:
        raise DihedralCayleyError(f"template {pt.template} needs n even, got {n}")
    h = n // 2
    if pt.template == "case4":
        return validate(n, [rot(1, n), rot(-1, n), rot(h, n), refl(k, n)])
    return validate(n, [rot(h, n), refl(0, n), refl(1, n), refl(k, n)])


def oracle_order(pt: SweepPoint) -> int | None:
    """Closed-form |Aut| where one is known independently of the search."""
    if pt.template == "crown":
        return 2 * math.factorial(pt.n)
    if pt.template == "complete-bipartite":
        return 2 * math.factorial(pt.n) ** 2
    return None


def _blank(pt: SweepPoint, reason: str) -> dict:
    row = dict.fromkeys(COLUMNS)
    row.update({"template": pt.template, "n": pt.n, "k": pt.k, "skipped": True, "reason": reason})
    return row


def run_point(pt: SweepPoint, cap: int | None = None) -> dict:
    cap = VERTEX_CAP if cap is None else cap
    if 2 * pt.n > cap:
        return _blank(pt, f"2n = {2 * pt.n} exceeds the vertex cap {cap}")
    try:
        cs = connection_set_for(pt)
        g = gr.cayley(cs)
        rep = verify_structure(predict(cs), g)
        aut = automorphism_group(g, cap)
        ev = cayley_is_normal(g, cs.n, aut)
    except SizeCapExceeded as err:
        return _blank(pt, str(err))
    except DihedralCayleyError as err:
        return _blank(pt, f"{type(err).__name__}: {err}")
    oracle = oracle_order(pt)
    theorem = verdict = None
    if pt.template == "case3":
        theorem, verdict = "5.2", check_thm_5_2(pt.n, pt.k, cap).verdict.value
    elif oracle is not None:
        theorem, verdict = "oracle", "verified" if oracle == aut.order else "refuted"
    row = dict.fromkeys(COLUMNS)
    row.update({
        "template": pt.template, "n": pt.n, "k": pt.k,
        "elements": ",".join(cs.element_strings()),
        "case": cs.kind.value, "d": cs.d,
        "components": len(gr.components(g)),
        "aut_order": str(aut.order), "normal": ev.normal,
        "stabilizer_order": str(ev.stabilizer_order), "aut_gs_order": str(ev.aut_gs_order),
        "cross_check": ev.cross_check_agrees, "structure_verified": rep.verified,
        "oracle_order": None if oracle is None else str(oracle),
        "theorem": theorem, "verdict": verdict, "skipped": False, "reason": None,
    })
    return row


def _run(args):
    return run_point(*args)


def run_sweep(points, workers: int = 1, cap: int | None = None) -> list[dict]:
    jobs = [(pt, cap) for pt in points]
    if workers <= 1 or len(jobs) <= 1:
        return [_run(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map yields in submission order, so rows stay in parameter order
        return list(pool.map(_run, jobs))


def write_csv(rows, fh):
    w = csv.DictWriter(fh, fieldnames=COLUMNS, lineterminator="\n")
    w.writeheader()
    for row in rows:
        w.writerow({k: ("" if row[k] is None else row[k]) for k in COLUMNS})
