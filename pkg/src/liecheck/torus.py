"""Torus elements with values in a formal abelian group, and their predicates.

A torus element of the simply connected group is a homomorphism from the
weight lattice into a :class:`ValueGroup`, a product of cyclic groups whose
generators stand for eigenvalue parameters. Order 0 marks an infinite-order
("generic") parameter and order m a primitive m-th root of unity. Equality is
exponent equality, so every predicate is exact.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd

from . import _linalg
from .errors import InconsistentConstraints, InvalidInput, NonLiftableConstraint
from .rootsys import GroupType, RootSystem, Weight, build_root_system, parse_weight

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


@dataclass(frozen=True)
class ValueGroup:
    """Finitely generated abelian group: one cyclic factor per named generator."""

    generators: tuple = ()

    def __post_init__(self):
        gens = tuple((str(n), int(o)) for n, o in self.generators)
        object.__setattr__(self, "generators", gens)
        names = [n for n, _ in gens]
        if len(set(names)) != len(names):
            raise InvalidInput(f"duplicate generator names in {names}")
        for n, o in gens:
            if not _NAME.fullmatch(n):
                raise InvalidInput(f"bad generator name {n!r}")
            if o < 0 or o == 1:
                raise InvalidInput(f"generator {n} has order {o}; use 0 (infinite) or >= 2")

    @classmethod
    def of(cls, **orders):
        """``ValueGroup.of(a=0, b=13)``; keyword order is generator order."""
        return cls(tuple(orders.items()))

    @property
    def names(self):
        return [n for n, _ in self.generators]

    @property
    def orders(self):
        return [o for _, o in self.generators]

    def __len__(self):
        return len(self.generators)

    def reduce(self, exps):
        return tuple(e % o if o else e for e, o in zip(exps, self.orders))

    def value(self, exps) -> "GroupValue":
        if len(exps) != len(self):
            raise InvalidInput("exponent vector length does not match value group")
        return GroupValue(self, self.reduce(tuple(int(e) for e in exps)))

    def identity(self) -> "GroupValue":
        return GroupValue(self, (0,) * len(self))

    def gen(self, name: str) -> "GroupValue":
        i = self.names.index(name)
        return GroupValue(self, tuple(int(j == i) for j in range(len(self))))

    def extend(self, extra) -> "ValueGroup":
        return ValueGroup(self.generators + tuple(extra))

    def embed(self, v: "GroupValue") -> "GroupValue":
        """Image of a value of a prefix subgroup (e.g. before ``extend``)."""
        if v.group.generators != self.generators[:len(v.group)]:
            raise InvalidInput("value group is not a prefix of the target")
        return GroupValue(self, v.exponents + (0,) * (len(self) - len(v.group)))

    def parse(self, text: str) -> "GroupValue":
        """Parse a monomial such as ``"a^2*b1^-1"``; ``"1"`` is the identity."""
        s = text.replace(" ", "")
        exps = [0] * len(self)
        if s in ("1", ""):
            return self.identity()
        for factor in s.split("*"):
            m = re.fullmatch(r"([A-Za-z_][A-Za-z0-9_]*)(?:\^(-?\d+))?", factor)
            if not m or m.group(1) not in self.names:
                raise InvalidInput(f"cannot parse monomial {text!r}")
            exps[self.names.index(m.group(1))] += int(m.group(2) or 1)
        return self.value(exps)

    def check_characteristic(self, p: int):
        """Semisimple elements have order prime to p."""
        if p:
            for n, o in self.generators:
                if o and o % p == 0:
                    raise InvalidInput(f"generator {n} has order {o}, divisible by p={p}")

    def to_json(self):
        return [{"name": n, "order": o} for n, o in self.generators]

    @classmethod
    def from_json(cls, params):
        if isinstance(params, dict):   # shorthand {"c": 4}
            return cls(tuple((k, int(v)) for k, v in params.items()))
        return cls(tuple((d["name"], d.get("order", 0)) for d in params))


@dataclass(frozen=True)
class GroupValue:
    group: ValueGroup
    exponents: tuple

    def __mul__(self, other):
        return self.group.value([a + b for a, b in zip(self.exponents, other.exponents)])

    def __truediv__(self, other):
        return self.group.value([a - b for a, b in zip(self.exponents, other.exponents)])

    def __pow__(self, k):
        return self.group.value([k * a for a in self.exponents])

    def inverse(self):
        return self ** -1

    def is_identity(self):
        return not any(self.exponents)

    def __str__(self):
        parts = []
        for name, e in zip(self.group.names, self.exponents):
            if e:
                parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class TorusElement:
    """Values of an element on the fundamental weights w_1..w_n."""

    group_type: GroupType
    value_group: ValueGroup
    basis_values: tuple

    def __post_init__(self):
        if len(self.basis_values) != self.group_type.rank:
            raise InvalidInput("need one basis value per fundamental weight")
        for v in self.basis_values:
            if v.group != self.value_group:
                raise InvalidInput("basis value lives in a different value group")

    @classmethod
    def from_exponents(cls, group_type, value_group, rows):
        return cls(group_type, value_group, tuple(value_group.value(r) for r in rows))

    def exponent_rows(self):
        return [v.exponents for v in self.basis_values]

    def to_json(self):
        return {
            "group": str(self.group_type),
            "params": self.value_group.to_json(),
            "values": {f"w{i}": str(v) for i, v in enumerate(self.basis_values, start=1)},
        }

    @classmethod
    def from_json(cls, doc):
        """Read ``values`` (per fundamental weight) or ``eps`` (solved) blocks."""
        try:
            t = GroupType.parse(doc["group"])
            vg = ValueGroup.from_json(doc.get("params", []))
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"malformed torus element: {exc}") from exc
        rs = build_root_system(t)
        if "values" in doc:
            vals = doc["values"]
            basis = []
            for i in range(1, t.rank + 1):
                basis.append(vg.parse(str(vals.get(f"w{i}", "1"))))
            extra = set(vals) - {f"w{i}" for i in range(1, t.rank + 1)}
            if extra:
                raise InvalidInput(f"unknown keys in values: {sorted(extra)}")
            return cls(t, vg, tuple(basis))
        if "eps" in doc:
            cons = []
            for key, text in doc["eps"].items():
                m = re.fullmatch(r"e(\d+)", key)
                if not m or not 1 <= int(m.group(1)) <= rs.eps_dim:
                    raise InvalidInput(f"bad eps key {key!r}")
                cons.append((rs.eps_weight(int(m.group(1))), vg.parse(str(text))))
            return solve_constraints(rs, vg, cons)
        if "weights" in doc:
            cons = [(parse_weight(k, t.rank), vg.parse(str(v))) for k, v in doc["weights"].items()]
            return solve_constraints(rs, vg, cons)
        raise InvalidInput("torus element needs a values, eps or weights block")


def identity_element(t: GroupType, vg: ValueGroup | None = None) -> TorusElement:
    vg = vg or ValueGroup()
    return TorusElement(t, vg, tuple(vg.identity() for _ in range(t.rank)))


def evaluate(s: TorusElement, w: Weight) -> GroupValue:
    """w(s), extended multiplicatively from the fundamental weights."""
    exps = [0] * len(s.value_group)
    for c, v in zip(w.coeffs, s.basis_values):
        if c:
            for j, e in enumerate(v.exponents):
                exps[j] += c * e
    return s.value_group.value(exps)


def _fresh_names(vg: ValueGroup, count: int):
    names, k = [], 1
    while len(names) < count:
        n = f"t{k}"
        if n not in vg.names:
            names.append(n)
        k += 1
    return names


def solve_constraints(rs: RootSystem, vg: ValueGroup, constraints) -> TorusElement:
    """Torus element with prescribed values on the given weights.

    Solves M x = v over the value group via the Smith normal form of the
    constraint matrix, one cyclic factor at a time. Directions left free by
    the constraints get fresh infinite-order generators ``t1, t2, ...``.
    Among several solutions (torsion ambiguity) the smallest exponents win.
    """
    constraints = list(constraints)
    n = rs.rank
    if not constraints:
        m_rows = [[0] * n]
        rhs = [vg.identity()]
    else:
        m_rows = [list(w.coeffs) for w, _ in constraints]
        rhs = [v for _, v in constraints]
    for w, v in constraints:
        if w.rank != n:
            raise InvalidInput(f"constraint weight {w} has wrong rank")
        if v.group != vg:
            raise InvalidInput("constraint value lives in a different value group")
    u, d, v_mat = _linalg.smith_normal_form(m_rows)
    m = len(m_rows)
    diag = [d[i][i] if i < min(m, n) else 0 for i in range(n)]
    free = [j for j in range(n) if not diag[j]]
    names = _fresh_names(vg, len(free))
    out_vg = vg.extend((nm, 0) for nm in names)
    # z[j] = exponent vector in out_vg
    z = [[0] * len(out_vg) for _ in range(n)]
    for g, order in enumerate(vg.orders):
        c = [sum(u[i][k] * rhs[k].exponents[g] for k in range(m)) for i in range(m)]
        for i in range(m):
            if i < n and diag[i]:
                y = _linalg.solve_linear_congruence(diag[i], c[i], order)
                if y is None:
                    raise NonLiftableConstraint(
                        f"need a {diag[i]}-th root of {vg.names[g]}^{c[i]} "
                        f"(order {order or 'infinite'})")
                z[i][g] = y
            elif (c[i] % order if order else c[i]) != 0:
                raise InconsistentConstraints(
                    f"constraints disagree on generator {vg.names[g]}")
    for k, j in enumerate(free):
        z[j][len(vg) + k] = 1
    x = [[sum(v_mat[i][j] * z[j][g] for j in range(n)) for g in range(len(out_vg))]
         for i in range(n)]
    s = TorusElement.from_exponents(rs.group_type, out_vg, x)
    for w, val in constraints:
        if evaluate(s, w) != out_vg.embed(val):
            raise InconsistentConstraints(f"solution check failed at {w}")  # pragma: no cover
    return s


# -- predicates ----------------------------------------------------------

def root_values(rs: RootSystem, s: TorusElement):
    return [(a, evaluate(s, a)) for a in rs.roots]


def is_regular(rs: RootSystem, s: TorusElement) -> bool:
    return all(not v.is_identity() for _, v in root_values(rs, s))


def root_collisions(rs: RootSystem, s: TorusElement):
    """Pairs of distinct roots (a, b), a < b, with a(s) = b(s)."""
    return _collisions(root_values(rs, s))


def _collisions(pairs):
    by_value = {}
    for w, v in pairs:
        by_value.setdefault(v.exponents, []).append(w)
    out = []
    for ws in by_value.values():
        ws = sorted(ws)
        out += [(ws[i], ws[j]) for i in range(len(ws)) for j in range(i + 1, len(ws))]
    return sorted(out)


def is_strongly_regular(rs: RootSystem, s: TorusElement) -> bool:
    seen = set()
    for _, v in root_values(rs, s):
        if v.exponents in seen:
            return False
        seen.add(v.exponents)
    return True


def is_central(rs: RootSystem, s: TorusElement) -> bool:
    return all(evaluate(s, a).is_identity() for a in rs.simple_roots)


def spectrum(ws, s: TorusElement):
    """Eigenvalues of s on a weight system, with summed multiplicities, sorted."""
    acc = {}
    for w, m in ws.table.items():
        v = evaluate(s, w)
        acc[v] = acc.get(v, 0) + m
    return sorted(acc.items(), key=lambda kv: kv[0].exponents)


def is_cyclic(ws, s: TorusElement) -> bool:
    return all(m == 1 for _, m in spectrum(ws, s))


def is_almost_cyclic(ws, s: TorusElement) -> bool:
    return sum(1 for _, m in spectrum(ws, s) if m > 1) <= 1


def weight_collisions(ws, s: TorusElement):
    """Pairs of distinct weights of ws taking the same value on s."""
    return _collisions((w, evaluate(s, w)) for w in ws.table)


def separates_weights(ws, s: TorusElement) -> bool:
    return len({evaluate(s, w) for w in ws.table}) == len(ws.table)


def fixed_multiplicity(ws, s: TorusElement) -> int:
    """Dimension of the 1-eigenspace of s."""
    return sum(m for v, m in spectrum(ws, s) if v.is_identity())


def element_order(s: TorusElement):
    """Order of s in the torus, or 0 if some infinite-order generator occurs."""
    out = 1
    for g, order in enumerate(s.value_group.orders):
        col = [row[g] for row in s.exponent_rows()]
        if not any(col):
            continue
        if order == 0:
            return 0
        k = order // gcd(order, gcd(*col))
        out = out * k // gcd(out, k)
    return out
