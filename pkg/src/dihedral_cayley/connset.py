"""Connection sets S of D_2n: validation, case classification, derived parameters."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum

from .dihedral import DihedralElement, format_element, gcd_all, parse_elements, refl, rot
from .errors import DuplicateElement, IdentityInS, MalformedCase, ModulusMismatch, NotInverseClosed, NTooSmall


class Kind(str, Enum):
    CASE_I = "I"
    CASE_II = "II"
    CASE_III = "III"
    CASE_IV = "IV"
    CASE_V = "V"
    ROTATIONS = "rotations"
    REFLECTIONS = "reflections"


@dataclass(frozen=True)
class ConnectionSet:
    """A validated inverse-closed S inside D_2n minus the identity.

    ``T`` holds the rotation exponents (symmetric mod n), ``A`` the ascending
    exponents of the reflections ``s r^a``, ``delta`` the nonzero symmetric
    pairwise differences of ``A`` and ``d`` the connectivity gcd.
    """

    n: int
    elems: frozenset[DihedralElement]
    kind: Kind
    T: frozenset[int]
    A: tuple[int, ...]
    delta: frozenset[int]
    d: int

    @property
    def size(self) -> int:
        return len(self.elems)

    @property
    def k(self) -> int:
        """Number of reflections, or of +/- rotation pairs for rotation-only sets."""
        if self.kind in (Kind.ROTATIONS, Kind.CASE_I):
            return len(rotation_representatives(self.T, self.n))
        return len(self.A)

    def sorted_elements(self) -> list[DihedralElement]:
        return sorted(self.elems)

    def element_strings(self) -> list[str]:
        return [format_element(g) for g in self.sorted_elements()]

    def to_json(self) -> dict:
        derived = {
            "case": self.kind.value,
            "T": sorted(self.T),
            "A": list(self.A),
            "Delta": sorted(self.delta),
            "d": self.d,
        }
        return {"n": self.n, "elements": self.element_strings(), "derived": derived}


def rotation_representatives(T, n: int) -> list[int]:
    """One representative min(t, n - t) per +/- pair of T."""
    return sorted({min(t % n, (-t) % n) for t in T})


def symmetric_closure(reps, n: int) -> frozenset[int]:
    return frozenset(x % n for t in reps for x in (t, -t))


def validate(n: int, raw) -> ConnectionSet:
    if n < 3:
        raise NTooSmall(f"n must be at least 3, got {n}")
    raw = list(raw)
    for g in raw:
        if g.n != n:
            raise ModulusMismatch(f"element {g} belongs to D_{2 * g.n}, not D_{2 * n}")
    dup = [g for g, c in Counter(raw).items() if c > 1]
    if dup:
        raise DuplicateElement(f"element {dup[0]} is listed more than once")
    elems = frozenset(raw)
    for g in raw:
        if g.is_identity:
            raise IdentityInS("the identity e may not belong to a connection set")
    for g in sorted(raw):
        if g.inverse() not in elems:
            raise NotInverseClosed(format_element(g), format_element(g.inverse()))
    kind = _classify(n, elems)
    T, A, delta, d = _derive(n, elems, kind)
    return ConnectionSet(n, elems, kind, T, A, delta, d)


def parse_connection_set(n: int, text: str) -> ConnectionSet:
    return validate(n, parse_elements(text, n))


def classify(cs: ConnectionSet) -> Kind:
    return _classify(cs.n, cs.elems)


def derive_params(cs: ConnectionSet):
    return cs.T, cs.A, cs.delta, cs.d


def _classify(n: int, elems) -> Kind:
    rots = sorted(g.exp for g in elems if not g.reflect)
    refls = sorted(g.exp for g in elems if g.reflect)
    if len(elems) != 4:
        if not refls:
            return Kind.ROTATIONS
        if not rots:
            return Kind.REFLECTIONS
        raise MalformedCase(f"mixed connection sets are only classified at |S| = 4, got |S| = {len(elems)}")

    half = n // 2 if n % 2 == 0 else None
    if len(rots) == 4:
        if half is not None and half in rots:
            raise MalformedCase("four rotations cannot contain r^(n/2) under inverse-closure")
        return Kind.CASE_I
    if len(refls) == 4:
        return Kind.CASE_II
    if len(rots) == 2:
        if rots[1] != (-rots[0]) % n:
            raise MalformedCase(f"the two rotations must be a pair r^(+a), r^(-a) with a != 0, n/2; got {rots}")
        return Kind.CASE_III
    if len(rots) == 3:
        if half is None or half not in rots:
            raise MalformedCase("three rotations require n even and r^(n/2) in S")
        return Kind.CASE_IV
    if len(rots) == 1:
        if half is None or rots[0] != half:
            raise MalformedCase("a single rotation must be r^(n/2) with n even")
        return Kind.CASE_V
    raise MalformedCase(f"unclassifiable connection set with {len(rots)} rotations")


def _derive(n: int, elems, kind: Kind):
    T = frozenset(g.exp for g in elems if not g.reflect)
    A = tuple(sorted(g.exp for g in elems if g.reflect))
    diffs = [(a - b) % n for i, a in enumerate(A) for b in A[i + 1:]]
    delta = frozenset(x for t in diffs for x in (t, (-t) % n) if x)
    if kind in (Kind.CASE_I, Kind.ROTATIONS):
        d = gcd_all(n, T)
    elif kind in (Kind.CASE_II, Kind.REFLECTIONS):
        d = gcd_all(n, diffs)
    else:
        d = gcd_all(n, list(T) + diffs)
    return T, A, delta, d


# -- templates used by the CLI and the checkers -------------------------------

def rotations_set(n: int, reps) -> ConnectionSet:
    """S = {r^(+-t) : t in reps}."""
    return validate(n, [rot(x, n) for x in sorted(symmetric_closure(reps, n))])


def reflections_set(n: int, A) -> ConnectionSet:
    return validate(n, [refl(a, n) for a in A])


def thm52_set(n: int, k: int) -> ConnectionSet:
    """S = {r, r^-1, s, s r^k}."""
    return validate(n, [rot(1, n), rot(-1, n), refl(0, n), refl(k, n)])
