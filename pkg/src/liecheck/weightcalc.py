"""Weights of irreducible modules: dominance, subdominant sets, multiplicities.

Characteristic 0 uses Freudenthal's recursion. In positive characteristic
only modules whose weights are fixed by the stored tables are supported;
anything else raises :class:`UnsupportedCharacteristic` rather than falling
back to characteristic-0 data.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import InvalidInput, UnsupportedCharacteristic
from .rootsys import GroupType, RootSystem, Weight, _dominant, build_root_system, parse_weight
from .tables import ALL_MULT_ONE, NONZERO_MULT_ONE, table_lookup

__all__ = [
    "WeightSystem", "check_char", "dominance_leq", "subdominant_weights",
    "premet_weight_set", "freudenthal_multiplicity", "freudenthal_dominant",
    "weyl_dimension", "weight_system", "table_lookup",
]


def _is_prime(p):
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def check_char(p) -> int:
    """Validate a characteristic: 0 or a prime."""
    if not isinstance(p, int) or p < 0 or (p and not _is_prime(p)):
        raise InvalidInput(f"characteristic must be 0 or a prime, got {p!r}")
    return p


@dataclass
class WeightSystem:
    """Weight -> multiplicity table of a module (possibly a direct sum)."""

    group_type: GroupType
    p: int
    pieces: list = field(default_factory=list)
    table: dict = field(default_factory=dict)

    @property
    def dim(self):
        return sum(self.table.values())

    def weights(self):
        return sorted(self.table)

    def items(self):
        return [(w, self.table[w]) for w in sorted(self.table)]

    def mult(self, w: Weight) -> int:
        return self.table.get(w, 0)

    def __add__(self, other: "WeightSystem") -> "WeightSystem":
        if self.group_type != other.group_type:
            raise InvalidInput("direct sum of weight systems for different groups")
        table = dict(self.table)
        for w, m in other.table.items():
            table[w] = table.get(w, 0) + m
        return WeightSystem(self.group_type, self.p, self.pieces + other.pieces, table)

    def to_json(self):
        return {
            "group": str(self.group_type),
            "p": self.p,
            "pieces": [str(w) for w in self.pieces],
            "weights": [{"coeffs": list(w.coeffs), "mult": m} for w, m in self.items()],
        }

    @classmethod
    def from_json(cls, doc):
        t = GroupType.parse(doc["group"])
        pieces = [parse_weight(s, t.rank) for s in doc.get("pieces", [])]
        table = {}
        for entry in doc["weights"]:
            w = Weight(entry["coeffs"])
            if w.rank != t.rank or int(entry["mult"]) <= 0:
                raise InvalidInput(f"bad weight entry {entry!r}")
            table[w] = int(entry["mult"])
        return cls(t, int(doc["p"]), pieces, table)


def _require_dominant(lam: Weight, rs: RootSystem):
    if lam.rank != rs.rank:
        raise InvalidInput(f"weight {lam} has wrong rank for {rs.group_type}")
    if not lam.is_dominant():
        raise InvalidInput(f"{lam} is not dominant")


def dominance_leq(rs: RootSystem, mu: Weight, lam: Weight) -> bool:
    """True iff lam - mu is a nonnegative integer combination of simple roots."""
    coords = rs.to_simple_coords(lam - mu)
    return all(c.denominator == 1 and c >= 0 for c in coords)


def subdominant_weights(rs: RootSystem, lam: Weight):
    """All dominant mu with mu <= lam (lam included), sorted."""
    _require_dominant(lam, rs)
    return [Weight(c) for c in sorted(_subdominant(rs.group_type, lam.coeffs))]


@lru_cache(maxsize=None)
def _subdominant(t: GroupType, lam: tuple):
    # Every dominant mu < lam is reachable from lam through dominant weights
    # by subtracting one positive root at a time.
    rs = build_root_system(t)
    pos = [r.coeffs for r in rs.positive_roots]
    seen = {lam}
    queue = deque([lam])
    while queue:
        w = queue.popleft()
        for a in pos:
            v = tuple(x - y for x, y in zip(w, a))
            if v not in seen and all(c >= 0 for c in v):
                seen.add(v)
                queue.append(v)
    return frozenset(seen)


def premet_weight_set(rs: RootSystem, lam: Weight, p: int = 0):
    """Weights of V_lam as Weyl orbits of subdominant weights.

    Valid for p = 0 or p > e(G), and for (G2, p=2, w2) where the result is
    the roots together with 0.
    """
    check_char(p)
    _require_dominant(lam, rs)
    if p and any(c >= p for c in lam.coeffs):
        raise InvalidInput(f"{lam} is not {p}-restricted")
    special = (rs.group_type.family == "G" and p == 2 and lam.coeffs == (0, 1))
    if p and p <= rs.e_value and not special:
        raise UnsupportedCharacteristic(
            f"weight set of {rs.group_type} {lam} unknown for p={p} <= e(G)={rs.e_value}")
    out = set()
    for mu in _subdominant(rs.group_type, lam.coeffs):
        out |= set(_orbit_cached(rs.group_type, mu))
    return sorted(Weight(c) for c in out)


@lru_cache(maxsize=None)
def _orbit_cached(t: GroupType, mu: tuple):
    return tuple(w.coeffs for w in build_root_system(t).weyl_orbit(Weight(mu)))


def _depth(rs, lam, mu):
    return sum(rs.to_simple_coords(Weight(lam) - Weight(mu)))


@lru_cache(maxsize=None)
def _freudenthal(t: GroupType, lam: tuple):
    """Multiplicities of all dominant weights of the characteristic-0 module."""
    rs = build_root_system(t)
    cartan = rs.cartan_matrix
    dom = sorted(_subdominant(t, lam), key=lambda mu: (_depth(rs, lam, mu), mu))
    pos = [(a.coeffs, rs.iform(a.coeffs, a.coeffs)) for a in rs.positive_roots]
    rho = rs.rho.coeffs
    lr = tuple(x + y for x, y in zip(lam, rho))
    top = rs.iform(lr, lr)
    mult = {lam: 1}
    for mu in dom[1:]:
        mr = tuple(x + y for x, y in zip(mu, rho))
        denom = top - rs.iform(mr, mr)
        total = 0
        for a, _ in pos:
            k = 1
            while True:
                nu = tuple(x + k * y for x, y in zip(mu, a))
                m = mult.get(_dominant(cartan, nu))
                if not m:
                    break  # weight strings are unbroken
                total += rs.iform(nu, a) * m
                k += 1
        value = Fraction(2 * total, denom)
        if value.denominator != 1 or value < 0:
            raise ArithmeticError(f"non-integral multiplicity at {mu}")
        mult[mu] = int(value)
    return {mu: m for mu, m in mult.items() if m}


def freudenthal_dominant(rs: RootSystem, lam: Weight):
    """Dominant weight -> multiplicity for the characteristic-0 module V_lam."""
    _require_dominant(lam, rs)
    return {Weight(mu): m for mu, m in _freudenthal(rs.group_type, lam.coeffs).items()}


def freudenthal_multiplicity(rs: RootSystem, lam: Weight, mu: Weight) -> int:
    """Characteristic-0 multiplicity of mu in V_lam (0 if not a weight)."""
    _require_dominant(lam, rs)
    table = _freudenthal(rs.group_type, lam.coeffs)
    return table.get(rs.dominant_conjugate(mu).coeffs, 0)


def weyl_dimension(rs: RootSystem, lam: Weight) -> int:
    """Product over positive roots of (lam + rho, a) / (rho, a)."""
    _require_dominant(lam, rs)
    lr = (lam + rs.rho).coeffs
    num, den = 1, 1
    for a in rs.positive_roots:
        num *= rs.iform(lr, a.coeffs)
        den *= rs.iform(rs.rho.coeffs, a.coeffs)
    q = Fraction(num, den)
    assert q.denominator == 1
    return int(q)


def _orbit_union(rs, dominant_reps):
    table = {}
    for mu, m in dominant_reps:
        for w in rs.weyl_orbit(mu):
            table[w] = table.get(w, 0) + m
    return table


def _roots_of_length(rs, long: bool):
    sq = {rs.norm2(r) for r in rs.roots}
    target = max(sq) if long else min(sq)
    return [r for r in rs.roots if rs.norm2(r) == target]


def _small_char_table(rs: RootSystem, lam: Weight, p: int):
    """Weight tables for listed modules with p <= e(G).

    Returns None when the case is not covered.
    """
    t = rs.group_type
    f, n = t.family, t.rank
    fund = [i + 1 for i, c in enumerate(lam.coeffs) if c] if sum(lam.coeffs) == 1 else []
    i = fund[0] if fund else None
    zero = Weight.zero(n)
    if f == "B" and p == 2:
        if i == 1:
            return {w: 1 for w in rs.weyl_orbit(lam)}
        if i == 2:
            table = {w: 1 for w in rs.weyl_orbit(lam)}
            table[zero] = n - gcd(2, n)
            return table
    if f == "C" and p == 2:
        if i == n:
            return {w: 1 for w in rs.weyl_orbit(lam)}
        if i == 2 and n > 2:
            table = {w: 1 for w in rs.weyl_orbit(lam)}
            table[zero] = table_lookup(t, p, lam).zero_mult
            return table
    if f == "F" and p == 2 and i in (1, 4):
        table = {r: 1 for r in _roots_of_length(rs, long=(i == 1))}
        table[zero] = 2
        return table
    if f == "G":
        if p == 2 and i == 1:
            return {r: 1 for r in _roots_of_length(rs, long=False)}
        if p == 2 and i == 2:
            table = {r: 1 for r in rs.roots}
            table[zero] = 2
            return table
        if p == 3 and i in (1, 2):
            table = {r: 1 for r in _roots_of_length(rs, long=(i == 2))}
            table[zero] = 1
            return table
    return None


def _zero_mult(rs, lam, p, listed):
    # The listed B_n 2w1 value overcounts by one: S^2(natural) = V_2w1 + trivial
    # in characteristic 0 leaves n, and p | 2n+1 loses one more.
    t = rs.group_type
    if t.family == "B" and lam.coeffs == (2,) + (0,) * (t.rank - 1):
        return t.rank - 1 if (2 * t.rank + 1) % p == 0 else t.rank
    return listed


def _irreducible_table(rs: RootSystem, lam: Weight, p: int):
    _require_dominant(lam, rs)
    if lam.is_zero():
        return {lam: 1}
    if p == 0:
        return _orbit_union(rs, freudenthal_dominant(rs, lam).items())
    if any(c >= p for c in lam.coeffs):
        return _steinberg_table(rs, lam, p)
    if lam in rs.minuscule_weights:
        return {w: 1 for w in rs.weyl_orbit(lam)}
    entry = table_lookup(rs.group_type, p, lam)
    if entry.kind not in (ALL_MULT_ONE, NONZERO_MULT_ONE):
        raise UnsupportedCharacteristic(
            f"weights of {rs.group_type} V_{lam} at p={p} are not determined by the tables")
    if p > rs.e_value:
        table = {w: 1 for w in premet_weight_set(rs, lam, p)}
        if entry.kind == NONZERO_MULT_ONE:
            table[Weight.zero(rs.rank)] = _zero_mult(rs, lam, p, entry.zero_mult)
        return table
    table = _small_char_table(rs, lam, p)
    if table is None:
        raise UnsupportedCharacteristic(
            f"weights of {rs.group_type} V_{lam} at p={p} <= e(G) are not tabulated")
    return table


def _steinberg_table(rs: RootSystem, lam: Weight, p: int):
    # L(sum p^i lam_i) = tensor of L(lam_i)^[p^i]; weights add, multiplicities multiply
    table = {Weight.zero(rs.rank): 1}
    coeffs, scale = list(lam.coeffs), 1
    while any(coeffs):
        digit = Weight(tuple(c % p for c in coeffs))
        coeffs = [c // p for c in coeffs]
        if not digit.is_zero():
            part = _irreducible_table(rs, digit, p)
            merged = {}
            for w, m in table.items():
                for u, k in part.items():
                    key = w + u * scale
                    merged[key] = merged.get(key, 0) + m * k
            table = merged
        scale *= p
    return table


def weight_system(rs: RootSystem, lams, p: int = 0) -> WeightSystem:
    """Weight table of V_lam, or of a direct sum when ``lams`` is a list."""
    check_char(p)
    if isinstance(lams, Weight):
        lams = [lams]
    table = {}
    for lam in lams:
        for w, m in _irreducible_table(rs, lam, p).items():
            table[w] = table.get(w, 0) + m
    return WeightSystem(rs.group_type, p, list(lams), table)
