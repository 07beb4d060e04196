"""Exact arithmetic in Z_n, the dihedral group D_2n and its automorphisms.

Elements are kept in the normal form ``s^eps r^e`` with ``0 <= e < n``.  The
group is presented as ``<r, s | r^n = s^2 = e, s r s = r^-1>``, so the
product rule is::

    (s^a r^x)(s^b r^y) = s^(a xor b) r^(y + (-1)^b x)

Automorphisms of D_2n (n >= 3) are the affine maps ``psi_{u,v}``:
``r -> r^u``, ``s -> r^v s``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .errors import ElementParseError, ModulusMismatch, NotAUnit


@dataclass(frozen=True, order=True)
class DihedralElement:
    reflect: bool
    exp: int
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"modulus must be >= 1, got {self.n}")
        object.__setattr__(self, "reflect", bool(self.reflect))
        object.__setattr__(self, "exp", self.exp % self.n)

    @property
    def is_rotation(self) -> bool:
        return not self.reflect

    @property
    def is_identity(self) -> bool:
        return not self.reflect and self.exp == 0

    def __mul__(self, other: DihedralElement) -> DihedralElement:
        return dh_mul(self, other)

    def inverse(self) -> DihedralElement:
        return dh_inv(self)

    def order(self) -> int:
        return dh_order(self)

    def index(self) -> int:
        """Vertex index used by the graph layer: r^i -> i, s r^i -> n + i."""
        return self.n + self.exp if self.reflect else self.exp

    def __str__(self):
        return format_element(self)


def rot(e: int, n: int) -> DihedralElement:
    return DihedralElement(False, e, n)


def refl(e: int, n: int) -> DihedralElement:
    """The reflection ``s r^e``."""
    return DihedralElement(True, e, n)


def identity(n: int) -> DihedralElement:
    return DihedralElement(False, 0, n)


def element_from_index(i: int, n: int) -> DihedralElement:
    if not 0 <= i < 2 * n:
        raise ValueError(f"vertex index {i} out of range for D_{2 * n}")
    return refl(i - n, n) if i >= n else rot(i, n)


def all_elements(n: int) -> list[DihedralElement]:
    """Every element of D_2n, in vertex-index order."""
    return [element_from_index(i, n) for i in range(2 * n)]


def _check_same(*elems):
    mods = {g.n for g in elems}
    if len(mods) > 1:
        raise ModulusMismatch(f"elements live in different dihedral groups: moduli {sorted(mods)}")


def dh_mul(a: DihedralElement, b: DihedralElement) -> DihedralElement:
    _check_same(a, b)
    e = b.exp - a.exp if b.reflect else b.exp + a.exp
    return DihedralElement(a.reflect != b.reflect, e, a.n)


def dh_inv(a: DihedralElement) -> DihedralElement:
    if a.reflect:
        return a
    return DihedralElement(False, -a.exp, a.n)


def dh_order(a: DihedralElement) -> int:
    if a.reflect:
        return 2
    return a.n // math.gcd(a.n, a.exp)


def dh_pow(a: DihedralElement, k: int) -> DihedralElement:
    if a.reflect:
        return a if k % 2 else identity(a.n)
    return DihedralElement(False, a.exp * k, a.n)


# -- text syntax -------------------------------------------------------------

_EXP = r"(?:\^(-?\d+))?"
_ROT_RE = re.compile(rf"r{_EXP}")
_SR_RE = re.compile(rf"s(?:\*r{_EXP})?")
_RS_RE = re.compile(rf"r{_EXP}\*s")


def _exp(group: str | None) -> int:
    return 1 if group is None else int(group)


def parse_element(text: str, n: int) -> DihedralElement:
    """Parse ``e``, ``r^k``, ``s``, ``s*r^k`` or ``r^k*s`` (normalized to ``s*r^-k``)."""
    t = text.strip().replace(" ", "")
    if t == "e":
        return identity(n)
    if m := _ROT_RE.fullmatch(t):
        return rot(_exp(m.group(1)), n)
    if m := _SR_RE.fullmatch(t):
        return refl(0 if t == "s" else _exp(m.group(1)), n)
    if m := _RS_RE.fullmatch(t):
        return refl(-_exp(m.group(1)), n)
    raise ElementParseError(f"cannot parse dihedral element {text!r}")


def parse_elements(text: str, n: int) -> list[DihedralElement]:
    parts = [p for p in text.split(",") if p.strip()]
    return [parse_element(p, n) for p in parts]


def format_element(g: DihedralElement) -> str:
    if g.reflect:
        return f"s*r^{g.exp}"
    return "e" if g.exp == 0 else f"r^{g.exp}"


# -- Z_n ---------------------------------------------------------------------

def units(n: int) -> list[int]:
    return [k for k in range(1, n) if math.gcd(k, n) == 1]


def unit_subgroup(gens, n: int) -> frozenset[int]:
    """Multiplicative closure of ``gens`` inside (Z_n)^x."""
    gens = [g % n for g in gens]
    for g in gens:
        if math.gcd(g, n) != 1:
            raise NotAUnit(f"{g} is not a unit modulo {n}")
    seen = {1 % n}
    frontier = [1 % n]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = x * g % n
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return frozenset(seen)


def gcd_all(n: int, xs) -> int:
    d = n
    for x in xs:
        d = math.gcd(d, x % n)
    return d


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % q for q in range(2, math.isqrt(p) + 1))


# -- automorphisms -----------------------------------------------------------

@dataclass(frozen=True, order=True)
class AffineMap:
    """The automorphism psi_{u,v}: r -> r^u, s -> r^v s, i.e. x -> u x + v on Z_n."""

    u: int
    v: int
    n: int

    def __post_init__(self):
        object.__setattr__(self, "u", self.u % self.n)
        object.__setattr__(self, "v", self.v % self.n)
        if math.gcd(self.u, self.n) != 1:
            raise NotAUnit(f"{self.u} is not a unit modulo {self.n}")

    def __call__(self, g: DihedralElement) -> DihedralElement:
        return aff_apply(self, g)

    def inverse(self) -> AffineMap:
        w = pow(self.u, -1, self.n)
        return AffineMap(w, -w * self.v, self.n)

    def as_pair(self) -> tuple[int, int]:
        return (self.u, self.v)


def aff_identity(n: int) -> AffineMap:
    return AffineMap(1, 0, n)


def aff_apply(phi: AffineMap, g: DihedralElement) -> DihedralElement:
    if phi.n != g.n:
        raise ModulusMismatch(f"map is mod {phi.n} but element is in D_{2 * g.n}")
    if g.reflect:
        # psi(s r^e) = r^v s r^(ue) = s r^(ue - v)
        return refl(phi.u * g.exp - phi.v, g.n)
    return rot(phi.u * g.exp, g.n)


def aff_compose(phi1: AffineMap, phi2: AffineMap) -> AffineMap:
    """phi1 after phi2."""
    if phi1.n != phi2.n:
        raise ModulusMismatch(f"cannot compose maps mod {phi1.n} and mod {phi2.n}")
    return AffineMap(phi1.u * phi2.u, phi1.v + phi1.u * phi2.v, phi1.n)
