"""Root systems of the simple types in Bourbaki coordinates.

Weights are stored in the fundamental-weight basis as integer tuples; the
epsilon coordinates of the Bourbaki tables are a derived rational view.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import lcm

from . import _linalg
from .errors import InvalidInput

_RANK_BOUNDS = {"A": (1, None), "B": (3, None), "C": (2, None), "D": (4, None),
                "E": (6, 8), "F": (4, 4), "G": (2, 2)}


@dataclass(frozen=True, order=True)
class GroupType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _RANK_BOUNDS:
            raise InvalidInput(f"unknown family {self.family!r}")
        lo, hi = _RANK_BOUNDS[self.family]
        if not isinstance(self.rank, int) or self.rank < lo or (hi is not None and self.rank > hi):
            raise InvalidInput(f"rank {self.rank} out of bounds for type {self.family}")

    @classmethod
    def parse(cls, text: str) -> "GroupType":
        m = re.fullmatch(r"\s*([A-Ga-g])_?(\d+)\s*", text)
        if not m:
            raise InvalidInput(f"cannot parse group type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.family}{self.rank}"


@dataclass(frozen=True, order=True)
class Weight:
    """An element of the weight lattice, in fundamental-weight coordinates."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def zero(cls, rank):
        return cls((0,) * rank)

    @classmethod
    def fundamental(cls, rank, i):
        """The fundamental weight w_i (1-based)."""
        return cls(tuple(int(j == i - 1) for j in range(rank)))

    @property
    def rank(self):
        return len(self.coeffs)

    def __add__(self, other):
        return Weight(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        return Weight(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return Weight(tuple(-a for a in self.coeffs))

    def __mul__(self, k):
        return Weight(tuple(k * a for a in self.coeffs))

    __rmul__ = __mul__

    def is_zero(self):
        return not any(self.coeffs)

    def is_dominant(self):
        return all(c >= 0 for c in self.coeffs)

    def __str__(self):
        return format_weight(self)


_TERM = re.compile(r"([+-]?)\s*(?:(\d+)\s*\*?\s*)?w(\d+)")


def parse_weight(text: str, rank: int) -> Weight:
    """Parse ``"2*w1+w3"`` style text. ``"0"`` is the zero weight."""
    s = text.replace(" ", "")
    if s in ("0", ""):
        return Weight.zero(rank)
    coeffs = [0] * rank
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or (pos > 0 and not m.group(1)):
            raise InvalidInput(f"cannot parse weight {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        k = int(m.group(2)) if m.group(2) else 1
        i = int(m.group(3))
        if not 1 <= i <= rank:
            raise InvalidInput(f"w{i} out of range for rank {rank}")
        coeffs[i - 1] += sign * k
        pos = m.end()
    return Weight(tuple(coeffs))


def format_weight(w: Weight) -> str:
    parts = []
    for i, c in enumerate(w.coeffs, start=1):
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        term = f"w{i}" if mag == 1 else f"{mag}*w{i}"
        parts.append((sign, term))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, term in parts[1:]:
        out += sign + term
    return out


def _eps_simple_roots(family, n):
    """Simple roots as epsilon vectors, Bourbaki numbering."""
    half = Fraction(1, 2)

    def unit(dim, *pairs):
        v = [Fraction(0)] * dim
        for i, c in pairs:
            v[i - 1] += c
        return v

    if family == "A":
        return [unit(n + 1, (i, 1), (i + 1, -1)) for i in range(1, n + 1)]
    if family in "BCD":
        roots = [unit(n, (i, 1), (i + 1, -1)) for i in range(1, n)]
        if family == "B":
            roots.append(unit(n, (n, 1)))
        elif family == "C":
            roots.append(unit(n, (n, 2)))
        else:
            roots.append(unit(n, (n - 1, 1), (n, 1)))
        return roots
    if family == "G":
        return [unit(3, (1, 1), (2, -1)), unit(3, (1, -2), (2, 1), (3, 1))]
    if family == "F":
        return [unit(4, (2, 1), (3, -1)), unit(4, (3, 1), (4, -1)), unit(4, (4, 1)),
                unit(4, (1, half), (2, -half), (3, -half), (4, -half))]
    if family == "E":
        e8 = [unit(8, (1, half), (8, half), *[(j, -half) for j in range(2, 8)]),
              unit(8, (1, 1), (2, 1))]
        e8 += [unit(8, (j, 1), (j - 1, -1)) for j in range(2, 8)]
        return e8[:n]
    raise InvalidInput(family)


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


class RootSystem:
    """Roots, Cartan data and Weyl group machinery for one simple type.

    Instances are immutable after construction and are cached per type by
    :func:`build_root_system`.
    """

    def __init__(self, group_type: GroupType):
        self.group_type = group_type
        n = self.rank = group_type.rank
        simple_eps = _eps_simple_roots(group_type.family, n)
        self.eps_dim = len(simple_eps[0])
        self._simple_eps = simple_eps
        self.cartan_matrix = tuple(
            tuple(int(2 * _dot(a, b) / _dot(b, b)) for b in simple_eps) for a in simple_eps)
        inv = _linalg.inverse_q(self.cartan_matrix)
        self._cartan_inv = inv
        # fundamental weights = A^-1 (simple roots), as epsilon vectors
        self.fund_to_eps = tuple(
            tuple(sum(inv[i][k] * simple_eps[k][j] for k in range(n)) for j in range(self.eps_dim))
            for i in range(n))
        # invariant form on the omega basis, normalised so long roots have length 2
        long_sq = max(_dot(a, a) for a in simple_eps)
        gram = [[2 * _dot(u, v) / long_sq for v in self.fund_to_eps] for u in self.fund_to_eps]
        self.gram = tuple(tuple(row) for row in gram)
        scale = lcm(*(x.denominator for row in gram for x in row))
        self._form_scale = scale
        self._igram = tuple(tuple(int(x * scale) for x in row) for row in gram)

        self.simple_roots = tuple(Weight(row) for row in self.cartan_matrix)
        self.roots = tuple(sorted(set().union(*(self.weyl_orbit(a) for a in self.simple_roots))))
        self.positive_roots = tuple(r for r in self.roots if self.height(r) > 0)
        sq = {self.norm2(r) for r in self.roots}
        self.e_value = int(max(sq) / min(sq))
        self.highest_root = max((r for r in self.roots if r.is_dominant()), key=self.height)

    def __repr__(self):
        return f"RootSystem({self.group_type})"

    # -- coordinates -----------------------------------------------------

    def to_eps(self, w: Weight):
        return tuple(sum(c * f[j] for c, f in zip(w.coeffs, self.fund_to_eps))
                     for j in range(self.eps_dim))

    def from_eps(self, vec) -> Weight:
        """Weight whose epsilon view is ``vec`` (projected onto the root span).

        Raises InvalidInput if the projection is not in the weight lattice.
        """
        vec = [Fraction(x) for x in vec]
        coeffs = []
        for a in self._simple_eps:
            c = 2 * _dot(vec, a) / _dot(a, a)
            if c.denominator != 1:
                raise InvalidInput(f"epsilon vector {vec} is not an integral weight")
            coeffs.append(int(c))
        return Weight(tuple(coeffs))

    def eps_weight(self, i: int) -> Weight:
        """The weight eps_i (1-based), projected onto the root span when needed."""
        vec = [0] * self.eps_dim
        vec[i - 1] = 1
        return self.from_eps(vec)

    def to_simple_coords(self, w: Weight):
        inv = self._cartan_inv
        n = self.rank
        return tuple(sum(w.coeffs[i] * inv[i][j] for i in range(n)) for j in range(n))

    def height(self, w: Weight):
        return sum(self.to_simple_coords(w))

    # -- form ------------------------------------------------------------

    def iform(self, u, v):
        """Integer-scaled invariant form on raw coefficient tuples."""
        g = self._igram
        return sum(u[i] * g[i][j] * v[j] for i in range(len(u)) for j in range(len(v)) if u[i] and v[j])

    def form(self, u: Weight, v: Weight):
        return Fraction(self.iform(u.coeffs, v.coeffs), self._form_scale)

    def norm2(self, w: Weight):
        return self.form(w, w)

    def coroot_pairing(self, w: Weight, alpha: Weight):
        """<w, alpha^vee> = 2 (w, alpha) / (alpha, alpha)."""
        return 2 * self.form(w, alpha) / self.norm2(alpha)

    @cached_property
    def rho(self):
        return Weight((1,) * self.rank)

    # -- Weyl group --------------------------------------------------------

    def reflect(self, w: Weight, i: int) -> Weight:
        """Simple reflection s_i (0-based index)."""
        c = w.coeffs[i]
        if c == 0:
            return w
        a = self.cartan_matrix[i]
        return Weight(tuple(x - c * y for x, y in zip(w.coeffs, a)))

    def weyl_orbit(self, w: Weight):
        """Orbit of ``w`` under the Weyl group, sorted lexicographically."""
        return [Weight(c) for c in sorted(_orbit(self.cartan_matrix, w.coeffs))]

    def dominant_conjugate(self, w: Weight) -> Weight:
        return Weight(_dominant(self.cartan_matrix, w.coeffs))

    def is_radical(self, w: Weight) -> bool:
        return all(c.denominator == 1 for c in self.to_simple_coords(w))

    @cached_property
    def minuscule_weights(self):
        """Nonzero dominant weights whose module is a single Weyl orbit."""
        out = []
        for i in range(1, self.rank + 1):
            w = Weight.fundamental(self.rank, i)
            if all(abs(self.coroot_pairing(w, a)) <= 1 for a in self.roots):
                out.append(w)
        return tuple(out)


def _orbit(cartan, coeffs):
    seen = {coeffs}
    queue = deque([coeffs])
    n = len(coeffs)
    while queue:
        w = queue.popleft()
        for i in range(n):
            c = w[i]
            if c:
                row = cartan[i]
                r = tuple(x - c * y for x, y in zip(w, row))
                if r not in seen:
                    seen.add(r)
                    queue.append(r)
    return seen


def _dominant(cartan, coeffs):
    w = coeffs
    while True:
        for i, c in enumerate(w):
            if c < 0:
                w = tuple(x - c * y for x, y in zip(w, cartan[i]))
                break
        else:
            return w


def build_root_system(t) -> RootSystem:
    """Root system for a GroupType or its text form (``"C3"``)."""
    if isinstance(t, str):
        t = GroupType.parse(t)
    return _cached_root_system(t)


@lru_cache(maxsize=None)
def _cached_root_system(t: GroupType) -> RootSystem:
    return RootSystem(t)


def e_of(rs: RootSystem) -> int:
    return rs.e_value


def highest_root(rs: RootSystem) -> Weight:
    return rs.highest_root


def weyl_orbit(rs: RootSystem, w: Weight):
    return rs.weyl_orbit(w)


def is_radical(rs: RootSystem, w: Weight) -> bool:
    return rs.is_radical(w)
