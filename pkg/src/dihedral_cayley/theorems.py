"""Hypothesis-gated checkers for the automorphism-group statements.

Every checker computes the automorphism group by search, never taking a
claimed conclusion (normality included) for granted.  The reports carry three
kinds of information:

* ``hypotheses``: each stated assumption with the value that decided it;
* ``checks``: facts that hold for every Cayley graph whatever the verdict
  (R(G) <= Aut, Aut(G,S) fixes e, 2n |Aut(G,S)| divides |Aut|, and the
  stabilizer criterion agreeing with normality by conjugation);
* ``predicted`` versus ``observed``, which decide the verdict.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from math import gcd

from . import graphs as gr
from .autsearch import (affine_permutation, aut_group_set, automorphism_group, cayley_is_normal,
                        right_regular)
from .connset import (ConnectionSet, reflections_set, rotation_representatives, rotations_set,
                      symmetric_closure, thm52_set)
from .dihedral import AffineMap, is_prime, units
from .errors import OutOfScope, SizeCapExceeded
from .permgroup import PermGroup, cyclic_group, is_normal_in, is_two_transitive


class Verdict(str, Enum):
    VERIFIED = "verified"
    INAPPLICABLE = "inapplicable"
    REFUTED = "refuted"
    INCONCLUSIVE = "inconclusive"


@dataclass
class Hypothesis:
    name: str
    holds: bool
    value: object = None

    def to_json(self) -> dict:
        out = {"name": self.name, "holds": self.holds}
        if self.value is not None:
            out["value"] = self.value
        return out


@dataclass
class TheoremReport:
    theorem: str
    params: dict
    hypotheses: list[Hypothesis] = field(default_factory=list)
    predicted: dict = field(default_factory=dict)
    observed: dict = field(default_factory=dict)
    verdict: Verdict = Verdict.INCONCLUSIVE
    witness: dict | None = None
    checks: dict = field(default_factory=dict)
    reason: str | None = None

    @property
    def hypotheses_hold(self) -> bool:
        return all(h.holds for h in self.hypotheses)

    def failed_hypotheses(self) -> list[str]:
        return [h.name for h in self.hypotheses if not h.holds]

    def failed_checks(self) -> list[str]:
        return [name for name, ok in self.checks.items() if not ok]

    def to_json(self) -> dict:
        out = {
            "theorem": self.theorem,
            "params": self.params,
            "hypotheses": [h.to_json() for h in self.hypotheses],
            "predicted": _jsonable(self.predicted),
            "observed": _jsonable(self.observed),
            "verdict": self.verdict.value,
            "witness": _jsonable(self.witness),
            "checks": dict(self.checks),
        }
        if self.reason:
            out["reason"] = self.reason
        return out


def _jsonable(obj):
    """Big integers (group orders) become decimal strings."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj) if obj.bit_length() > 53 else obj
    if isinstance(obj, dict):
        return {k: (str(v) if k.endswith("order") and isinstance(v, int) and not isinstance(v, bool)
                    else _jsonable(v)) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    return obj


def _as_text(v):
    return str(v) if isinstance(v, int) and not isinstance(v, bool) else v


def _decide(rep: TheoremReport, keys=("aut_order", "normal")) -> TheoremReport:
    """Set the verdict from hypotheses, invariant checks and predicted vs observed."""
    bad = rep.failed_checks()
    if bad:
        # an unconditional fact failed: the engine itself is wrong
        rep.verdict = Verdict.REFUTED
        rep.witness = {"failed_checks": bad}
        return rep
    if not rep.hypotheses_hold:
        rep.verdict = Verdict.INAPPLICABLE
        rep.reason = "hypothesis fails: " + ", ".join(rep.failed_hypotheses())
        return rep
    diffs = {k: {"predicted": _as_text(rep.predicted[k]), "observed": _as_text(rep.observed.get(k))}
             for k in keys if k in rep.predicted and rep.predicted[k] != rep.observed.get(k)}
    if diffs:
        rep.verdict = Verdict.REFUTED
        rep.witness = dict(rep.witness or {}, mismatch=diffs)
    else:
        rep.verdict = Verdict.VERIFIED
        rep.witness = None
    return rep


def _inconclusive(rep: TheoremReport, err: SizeCapExceeded) -> TheoremReport:
    rep.verdict = Verdict.INCONCLUSIVE
    rep.reason = str(err)
    return rep


def _observe_cayley(cs: ConnectionSet, rep: TheoremReport, cap=None):
    """Aut(Cay(D_2n, S)) plus the unconditional checks; fills ``rep.observed``."""
    g = gr.cayley(cs)
    aut = automorphism_group(g, cap)
    ev = cayley_is_normal(g, cs.n, aut)
    R = right_regular(cs.n)
    rep.checks["regular_subgroup_in_aut"] = R.is_subgroup_of(aut)
    rep.checks["aut_gs_order_divides"] = aut.order % (2 * cs.n * ev.aut_gs_order) == 0
    rep.checks["normal_iff_stabilizer_is_aut_gs"] = ev.cross_check_agrees
    rep.observed.update({
        "aut_order": aut.order,
        "normal": ev.normal,
        "stabilizer_order": ev.stabilizer_order,
        "aut_gs_order": ev.aut_gs_order,
    })
    if ev.witness is not None:
        rep.witness = {"conjugation": ev.witness}
    return g, aut, ev


# -- cyclic groups of prime order --------------------------------------------------

def multiplier_stabilizer(p: int, T) -> list[int]:
    """H = {u in Z_p^* : uT = T}, by scanning every unit."""
    T = frozenset(t % p for t in T)
    return [u for u in units(p) if frozenset(u * t % p for t in T) == T]


def thm37_bound(reps) -> tuple[int, int]:
    """(M, Q) for the representative set {1, t_1, ..., t_(k-1)}."""
    reps = sorted(set(reps))
    if 1 not in reps:
        raise OutOfScope(f"representative set must contain 1, got {reps}")
    if len(reps) < 2:
        raise OutOfScope("k >= 2 required: give at least one t >= 2")
    M = max(reps)
    Q = max(a * b + M for a in reps for b in reps)
    return M, Q


def _require_prime(p: int):
    if not is_prime(p):
        raise OutOfScope(f"p must be prime, got {p}")


def _circulant_facts(p: int, T, rep: TheoremReport, cap=None):
    circ = gr.circulant(p, T)
    aut = automorphism_group(circ, cap)
    normal, witness = is_normal_in(cyclic_group(p), aut)
    two_trans = is_two_transitive(aut)
    H = multiplier_stabilizer(p, T)
    stab = aut.stabilizer(0)
    rep.observed.update({"circulant_aut_order": aut.order, "circulant_normal": normal,
                         "two_transitive": two_trans})
    # every multiplier in H is an automorphism fixing 0
    rep.checks["multipliers_fix_zero"] = all(
        stab.contains(tuple(u * x % p for x in range(p))) for u in H)
    return aut, normal, witness, two_trans, H


def check_lemma_3_2(p: int, T, cap=None) -> TheoremReport:
    _require_prime(p)
    T = symmetric_closure(T, p)
    rep = TheoremReport("3.2", {"p": p, "T": sorted(T)})
    try:
        aut, normal, witness, two_trans, H = _circulant_facts(p, T, rep, cap)
    except SizeCapExceeded as err:
        return _inconclusive(rep, err)
    rep.hypotheses = [
        Hypothesis("H proper in Z_p^*", len(H) < p - 1, {"H": H}),
        Hypothesis("T generates Z_p", gcd(p, *T) == 1),
        Hypothesis("Aut not 2-transitive", not two_trans),
    ]
    rep.predicted = {"aut_order": p * len(H), "normal": True}
    rep.observed.update({"aut_order": aut.order, "normal": normal,
                         "stabilizer_order": aut.stabilizer(0).order})
    if witness is not None:
        rep.witness = {"conjugation": witness}
    return _decide(rep)


def check_thm_3_6(p: int, T, cap=None, theorem="3.6", H=None) -> TheoremReport:
    """Aut(Cay(D_2p, S)) for S the rotations with exponents T.

    ``H`` defaults to the multiplier stabilizer of T; the 3.7 form passes {1, -1}.
    """
    _require_prime(p)
    T = symmetric_closure(T, p)
    rep = TheoremReport(theorem, {"p": p, "T": sorted(T)})
    try:
        caut, cnormal, _, two_trans, H_scan = _circulant_facts(p, T, rep, cap)
        H = H_scan if H is None else sorted(H)
        rep.hypotheses += [
            Hypothesis("H proper in Z_p^*", len(H) < p - 1, {"H": H}),
            Hypothesis("H is the full stabilizer of T", H == H_scan, {"stabilizer": H_scan}),
            Hypothesis("Circ(p, T) Aut not 2-transitive", not two_trans),
            Hypothesis("gcd(p, T) = 1", gcd(p, *T) == 1),
        ]
        cs = rotations_set(p, rotation_representatives(T, p))
        g, aut, ev = _observe_cayley(cs, rep, cap)
    except SizeCapExceeded as err:
        return _inconclusive(rep, err)
    comps = gr.components(g)
    other = set(comps[1]) if len(comps) > 1 else set()
    swaps = any(gen[0] in other for gen in aut.strong_generators)
    rep.predicted.update({"aut_order": (p * len(H)) ** 2 * 2, "components": 2,
                          "component_aut_order": p * len(H), "component_swap": True})
    rep.observed.update({"components": len(comps), "component_aut_order": caut.order,
                         "component_swap": swaps})
    # the normality of the dihedral graph is recorded, not predicted
    rep.witness = None
    return _decide(rep, keys=("aut_order", "components", "component_aut_order", "component_swap"))


def check_thm_3_7(p: int, reps, cap=None, theorem="3.7") -> TheoremReport:
    _require_prime(p)
    reps = sorted({1, *reps})
    M, Q = thm37_bound(reps)
    T = symmetric_closure(reps, p)
    H = sorted({1, p - 1})
    pre = [
        Hypothesis("t_i >= 2", all(t >= 2 for t in reps if t != 1), {"t": [t for t in reps if t != 1]}),
        Hypothesis("p > Q", p > Q, {"M": M, "Q": Q}),
    ]
    scan = multiplier_stabilizer(p, T)
    rep = check_thm_3_6(p, T, cap, theorem=theorem, H=H)
    rep.params = {"p": p, "reps": reps, "T": sorted(T)}
    # {1, -1} fixes every symmetric T; only the scan can rule out larger stabilizers
    rep.checks["plus_minus_one_fix_T"] = all(u in scan for u in H)
    rep.hypotheses = pre + rep.hypotheses
    rep.observed["multiplier_stabilizer"] = scan
    if rep.verdict != Verdict.INCONCLUSIVE:
        _decide(rep, keys=("aut_order", "components", "component_aut_order", "component_swap"))
        if rep.verdict == Verdict.INAPPLICABLE and all(h.holds for h in pre):
            # the conclusion claims these hold whenever p > Q; a failure refutes it
            rep.verdict = Verdict.REFUTED
            rep.witness = {"failed_consequences": rep.failed_hypotheses()}
    return rep


def check_cor_3_12(p: int, cap=None) -> TheoremReport:
    _require_prime(p)
    rep = check_thm_3_7(p, [1, 2], cap, theorem="3.12")
    rep.hypotheses.insert(0, Hypothesis("p > 5", p > 5))
    if p <= 5 and rep.verdict != Verdict.INCONCLUSIVE:
        rep.verdict, rep.witness = Verdict.INAPPLICABLE, None
        rep.reason = "hypothesis fails: " + ", ".join(rep.failed_hypotheses())
    return rep


# -- reflections only ----------------------------------------------------------------

def affine_stabilizer(n: int, A) -> list[tuple[int, int]]:
    """Pairs (u, w) with uA + w = A, u a unit mod n."""
    A = frozenset(a % n for a in A)
    return [(u, w) for u in units(n) for w in range(n)
            if frozenset((u * a + w) % n for a in A) == A]


def affine_kernel(n: int, A) -> list[int]:
    A = frozenset(a % n for a in A)
    return [w for w in range(n) if frozenset((a + w) % n for a in A) == A]


def difference_multipliers(n: int, A) -> list[int]:
    """U_0 = {u unit : u Delta = Delta}, Delta the nonzero differences of A."""
    A = sorted({a % n for a in A})
    delta = frozenset((a - b) % n for a in A for b in A if a != b)
    return [u for u in units(n) if frozenset(u * x % n for x in delta) == delta]


def _reflection_report(theorem: str, n: int, A, cap=None) -> tuple[TheoremReport, dict]:
    A = sorted(A)
    k = len(A)
    if len(set(a % n for a in A)) != k:
        raise OutOfScope(f"exponents must be distinct mod {n}: {A}")
    if not 4 <= k < n:
        raise OutOfScope(f"4 <= k < n required, got k = {k}, n = {n}")
    cs = reflections_set(n, A)
    rep = TheoremReport(theorem, {"n": n, "A": A, "k": k})
    stab = affine_stabilizer(n, A)
    kernel = affine_kernel(n, A)
    U0 = difference_multipliers(n, A)
    image = sorted({u for u, _ in stab})
    gs = aut_group_set(n, cs)
    rep.observed.update({"affine_stabilizer": [list(x) for x in stab], "kernel": kernel,
                         "U_0": U0, "pi_image": image})
    # the stabilizer of A and Aut(G,S) differ only by how a reflection is written
    rep.checks["affine_stabilizer_matches_aut_gs"] = len(stab) == len(gs)
    rep.checks["pi_image_in_U0"] = set(image) <= set(U0)
    rep.hypotheses = [Hypothesis("d = 1", cs.d == 1, {"d": cs.d})]
    data = {"cs": cs, "stab": stab, "kernel": kernel, "image": image}
    return rep, data


def _normality_gate(rep: TheoremReport, cs: ConnectionSet, cap=None) -> bool:
    try:
        _observe_cayley(cs, rep, cap)
    except SizeCapExceeded as err:
        _inconclusive(rep, err)
        return False
    rep.hypotheses.append(Hypothesis("Gamma normal (computed)", rep.observed["normal"],
                                     {"aut_order": rep.observed["aut_order"]}))
    return True


def check_lemma_4_6(n: int, A, cap=None) -> TheoremReport:
    rep, data = _reflection_report("4.6", n, A, cap)
    if not _normality_gate(rep, data["cs"], cap):
        return rep
    rep.predicted = {"aut_order": 2 * n * len(data["stab"])}
    return _decide(rep, keys=("aut_order",))


def check_thm_4_8(n: int, A, cap=None) -> TheoremReport:
    rep, data = _reflection_report("4.8", n, A, cap)
    k = len(data["cs"].A)
    rep.hypotheses.insert(0, Hypothesis("gcd(n, k) = 1", gcd(n, k) == 1, {"gcd": gcd(n, k)}))
    if gcd(n, k) == 1:
        # orbits of a translation fixing A have size dividing both n and k
        rep.checks["kernel_trivial"] = data["kernel"] == [0]
    if not _normality_gate(rep, data["cs"], cap):
        return rep
    rep.predicted = {"aut_order": 2 * n * len(data["image"]), "kernel": [0]}
    return _decide(rep, keys=("aut_order", "kernel"))


# -- two rotations r^{+-1}, two reflections ------------------------------------------

def check_thm_5_2(n: int, k: int, cap=None) -> TheoremReport:
    rep = TheoremReport("5.2", {"n": n, "k": k})
    rep.hypotheses = [
        Hypothesis("n >= 3", n >= 3),
        Hypothesis("1 <= k <= n-1", 1 <= k <= n - 1),
        Hypothesis("k != n/2", not (n % 2 == 0 and 2 * k == n)),
    ]
    rep.predicted = {"aut_order": 4 * n, "normal": True}
    if not (n >= 3 and 1 <= k <= n - 1):
        rep.verdict = Verdict.INAPPLICABLE
        rep.reason = "hypothesis fails: " + ", ".join(rep.failed_hypotheses())
        return rep
    cs = thm52_set(n, k)
    expected = sorted([(1, 0), ((-1) % n, (-k) % n)])
    scan = sorted(phi.as_pair() for phi in aut_group_set(n, cs))
    rep.observed["aut_gs"] = [list(x) for x in scan]
    if rep.hypotheses_hold:
        # with k = n/2 the scan is larger; only the admissible range is asserted
        rep.checks["aut_gs_scan_is_id_and_phi"] = scan == expected
    try:
        g, aut, ev = _observe_cayley(cs, rep, cap)
    except SizeCapExceeded as err:
        return _inconclusive(rep, err)
    perms = [affine_permutation(AffineMap(u, v, n)) for u, v in expected]
    rep.checks["aut_gs_maps_are_graph_automorphisms"] = all(g.is_automorphism(p) for p in perms)
    rep.checks["4n_divides_aut_order"] = aut.order % (4 * n) == 0
    return _decide(rep)


# -- permutation groups of prime degree ------------------------------------------------

def check_burnside_schur(G: PermGroup, p: int) -> TheoremReport:
    rep = TheoremReport("burnside-schur", {"p": p, "degree": G.degree})
    order = G.order
    rep.hypotheses = [
        Hypothesis("p prime", is_prime(p)),
        Hypothesis("degree = p", G.degree == p),
        Hypothesis("transitive", G.degree == p and G.is_transitive()),
        # by Cauchy an element of order p exists, and in degree p it is a p-cycle
        Hypothesis("contains a p-cycle", order % p == 0),
    ]
    rep.observed = {"order": order}
    if not rep.hypotheses_hold:
        rep.verdict = Verdict.INAPPLICABLE
        rep.reason = "hypothesis fails: " + ", ".join(rep.failed_hypotheses())
        return rep
    two = is_two_transitive(G)
    affine = (p * (p - 1)) % order == 0
    rep.observed.update({"two_transitive": two, "order_divides_p(p-1)": affine})
    if two:
        # a 2-transitive group has a point stabilizer transitive on the rest
        rep.checks["stabilizer_transitive_on_rest"] = len(G.stabilizer(0).orbit(1)) == p - 1
    rep.predicted = {"dichotomy": True}
    rep.observed["dichotomy"] = two or affine
    return _decide(rep, keys=("dichotomy",))
