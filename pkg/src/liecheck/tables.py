"""Classification data: modules whose nonzero weights have multiplicity one.

``table_lookup`` transcribes the two multiplicity tables (all weights of
multiplicity one; nonzero weights of multiplicity one with a larger zero
weight). ``th1_exception`` and ``re1_exception`` hold the exceptional
highest weights of the two main classification theorems, and
``td4_exclusions`` the forbidden adjacent pairs for twisted tensor products.

Characteristic is an int: 0 or a prime. Conditions such as ``p > 3`` or
``p != 5`` impose nothing in characteristic 0; weights whose coefficients
involve ``p`` only exist for ``p > 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import InvalidInput
from .rootsys import GroupType, Weight

ALL_MULT_ONE = "AllMultOne"
NONZERO_MULT_ONE = "NonzeroMultOne"
NOT_LISTED = "NotListed"


@dataclass(frozen=True)
class TableEntry:
    group_type: GroupType
    p: int
    weight: Weight
    kind: str
    zero_mult: int | None = None
    row: str = ""

    def to_json(self):
        return {"group": str(self.group_type), "p": self.p, "lambda": str(self.weight),
                "class": self.kind, "zero_mult": self.zero_mult, "row": self.row}


def _divides(p, x):
    return p > 0 and x % p == 0


def _w(n, *pairs):
    """Weight sum(c * w_i) from (i, c) pairs."""
    coeffs = [0] * n
    for i, c in pairs:
        coeffs[i - 1] += c
    return tuple(coeffs)


def is_restricted(weight: Weight, p: int) -> bool:
    return weight.is_dominant() and (p == 0 or all(c < p for c in weight.coeffs))


def _table1_rows(t: GroupType, p: int):
    """(weight tuple, row description) for the all-multiplicity-one table."""
    f, n = t.family, t.rank
    rows = []
    if f == "A":
        rows.append(("a*w1", None))
        if n > 1:
            rows.append(("a*wn", None))
            rows += [(_w(n, (i, 1)), "w_i, 1<i<n") for i in range(2, n)]
            if p > 0:
                for i in range(1, n):
                    for c in range(p):
                        rows.append((_w(n, (i, c), (i + 1, p - 1 - c)), "c*w_i+(p-1-c)*w_{i+1}"))
    elif f == "B":
        rows += [(_w(n, (1, 1)), "B_n: w1"), (_w(n, (n, 1)), "B_n: wn")]
    elif f == "C":
        if p == 2:
            rows += [(_w(n, (1, 1)), "C_n, p=2: w1"), (_w(n, (n, 1)), "C_n, p=2: wn")]
        if n == 2 and p != 2:
            rows += [(_w(2, (1, 1)), "C2: w1"), (_w(2, (2, 1)), "C2: w2")]
            if p > 2:
                rows += [(_w(2, (1, 1), (2, (p - 3) // 2)), "C2: w1+(p-3)/2*w2"),
                         (_w(2, (2, (p - 1) // 2)), "C2: (p-1)/2*w2")]
        if n == 3:
            rows.append((_w(3, (3, 1)), "C3: w3"))
        if n > 2 and p != 2:
            rows.append((_w(n, (1, 1)), "C_n: w1"))
            if p > 2:
                rows += [(_w(n, (n - 1, 1), (n, (p - 3) // 2)), "C_n: w_{n-1}+(p-3)/2*wn"),
                         (_w(n, (n, (p - 1) // 2)), "C_n: (p-1)/2*wn")]
    elif f == "D":
        rows += [(_w(n, (i, 1)), "D_n: w1, w_{n-1}, wn") for i in (1, n - 1, n)]
    elif f == "E":
        if n == 6:
            rows += [(_w(6, (1, 1)), "E6: w1"), (_w(6, (6, 1)), "E6: w6")]
        elif n == 7:
            rows.append((_w(7, (7, 1)), "E7: w7"))
    elif f == "F":
        if p == 3:
            rows.append((_w(4, (4, 1)), "F4, p=3: w4"))
    elif f == "G":
        rows.append((_w(2, (1, 1)), "G2: w1"))
        if p == 3:
            rows.append((_w(2, (2, 1)), "G2, p=3: w2"))
    return rows


def _table1_match(t: GroupType, p: int, lam: tuple):
    n = t.rank
    for w, row in _table1_rows(t, p):
        if w == "a*w1":
            if lam[0] >= 1 and not any(lam[1:]):
                return f"{t.family}: a*w1, 1<=a<p"
        elif w == "a*wn":
            if lam[n - 1] >= 1 and not any(lam[:n - 1]):
                return "A_n: b*wn, 1<=b<p"
        elif w == lam:
            return row
    return None


def _table2_zero_mult(t: GroupType, p: int, lam: tuple):
    f, n = t.family, t.rank
    if f == "A" and n > 1:
        if lam == _w(n, (1, 1), (n, 1)) and (n, p) != (2, 3):
            return (n - 1 if _divides(p, n + 1) else n), "A_n: w1+wn"
        if n == 3 and lam == _w(3, (2, 2)) and (p == 0 or p > 3):
            return 2, "A3, p>3: 2*w2"
    elif f == "B":
        if lam == _w(n, (2, 1)):
            return (n if p != 2 else n - gcd(2, n)), "B_n: w2"
        if lam == _w(n, (1, 2)):
            return (n if _divides(p, 2 * n + 1) else n + 1), "B_n: 2*w1"
    elif f == "C":
        if lam == _w(n, (1, 2)):
            return n, "C_n: 2*w1"
        if n > 2 and lam == _w(n, (2, 1)) and (n, p) != (3, 3):
            return (n - 2 if _divides(p, n) else n - 1), "C_n: w2"
        if n == 2 and lam == _w(2, (2, 2)) and p != 5:
            return 2, "C2, p!=5: 2*w2"
        if n == 4 and lam == _w(4, (4, 1)) and p not in (2, 3):
            return 2, "C4, p!=2,3: w4"
    elif f == "D":
        if lam == _w(n, (1, 2)):
            return (n - 2 if _divides(p, n) else n - 1), "D_n: 2*w1"
        if lam == _w(n, (2, 1)):
            return (n if p != 2 else n - gcd(2, n)), "D_n: w2"
    elif f == "E":
        if n == 6 and lam == _w(6, (2, 1)):
            return (5 if p == 3 else 6), "E6: w2"
        if n == 7 and lam == _w(7, (1, 1)):
            return (6 if p == 2 else 7), "E7: w1"
        if n == 8 and lam == _w(8, (8, 1)):
            return 8, "E8: w8"
    elif f == "F":
        if lam == _w(4, (1, 1)):
            return (2 if p == 2 else 4), "F4: w1"
        if lam == _w(4, (4, 1)) and p != 3:
            return 2, "F4, p!=3: w4"
    elif f == "G":
        if lam == _w(2, (2, 1)) and p != 3:
            return 2, "G2, p!=3: w2"
    return None


def table_lookup(t: GroupType, p: int, weight: Weight) -> TableEntry:
    """Classify a restricted dominant weight against the two tables."""
    if not is_restricted(weight, p):
        raise InvalidInput(f"{weight} is not {p}-restricted dominant")
    lam = weight.coeffs
    if weight.is_zero():
        return TableEntry(t, p, weight, NOT_LISTED)
    row = _table1_match(t, p, lam)
    if row is not None:
        return TableEntry(t, p, weight, ALL_MULT_ONE, None, row)
    hit = _table2_zero_mult(t, p, lam)
    if hit is not None:
        return TableEntry(t, p, weight, NONZERO_MULT_ONE, hit[0], hit[1])
    return TableEntry(t, p, weight, NOT_LISTED)


def table_weights(t: GroupType, p: int, max_coeff: int = 3):
    """All listed restricted weights with coefficients <= max_coeff (and < p)."""
    from itertools import product
    bound = max_coeff if p == 0 else min(max_coeff, p - 1)
    out = []
    for lam in product(range(bound + 1), repeat=t.rank):
        w = Weight(lam)
        if w.is_zero():
            continue
        e = table_lookup(t, p, w)
        if e.kind != NOT_LISTED:
            out.append(e)
    return out


def th1_exception(t: GroupType, p: int, weight: Weight) -> bool:
    """Highest weights allowing a cyclic element that is not strongly regular."""
    f, n = t.family, t.rank
    lam = weight.coeffs
    fund = {i + 1 for i, c in enumerate(lam) if c == 1} if sum(lam) == 1 else set()
    if f == "A":
        return bool(fund) and not (n == 1 and p == 2)
    if f == "B":
        return bool(fund & {1, n})
    if f == "C":
        if p == 2:
            return bool(fund & {1, n})
        return (1 in fund or (n in (2, 3) and n in fund)
                or (n >= 3 and p == 3 and bool(fund & {n - 1, n})))
    if f == "D":
        return bool(fund & {1, n - 1, n})
    if f == "E":
        return (n == 6 and bool(fund & {1, 6})) or (n == 7 and fund == {7})
    if f == "F":
        return p == 3 and fund == {4}
    if f == "G":
        return fund == {1} or (p == 3 and fund == {2})
    return False


def re1_exception(t: GroupType, p: int, weight: Weight) -> bool:
    """Highest weights allowing a regular almost cyclic element that is not strongly regular."""
    if th1_exception(t, p, weight):
        return True
    f, n = t.family, t.rank
    lam = weight.coeffs
    if f == "A":
        # {2 w1, 2 wn}; for n = 1 these coincide
        if lam in (_w(n, (1, 2)), _w(n, (n, 2))):
            return True
        return (n, p) == (2, 3) and lam == (1, 1)
    if f == "B":
        return p == 2 and lam == _w(n, (2, 1))
    if f == "C":
        if n >= 3 and (n, p) != (3, 3) and lam == _w(n, (2, 1)):
            return True
        return n == 4 and p not in (2, 3) and lam == _w(4, (4, 1))
    if f == "F":
        return (p != 3 and lam == _w(4, (4, 1))) or (p == 2 and lam == _w(4, (1, 1)))
    return False


def td4_exclusions(t: GroupType, p: int):
    """Forbidden adjacent pairs (lambda_i, lambda_{i+1}) in a p-adic expansion."""
    n = t.rank
    if t.family == "C" and p == 2:
        return [(Weight(_w(n, (n, 1))), Weight(_w(n, (1, 1))))]
    if t.family == "G" and p == 2:
        return [(Weight(_w(2, (1, 1))), Weight(_w(2, (1, 1))))]
    if t.family == "G" and p == 3:
        return [(Weight(_w(2, (2, 1))), Weight(_w(2, (1, 1))))]
    return []
