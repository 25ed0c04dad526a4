from itertools import product

from hypothesis import given, settings
from hypothesis import strategies as st

from liecheck._linalg import inverse_q, matmul, smith_normal_form, solve_linear_congruence

matrices = st.integers(1, 4).flatmap(
    lambda m: st.integers(1, 4).flatmap(
        lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n),
                           min_size=m, max_size=m)))


def _det(m):
    if len(m) == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * _det([row[:j] + row[j + 1:] for row in m[1:]])
               for j in range(len(m)))


@settings(max_examples=300)
@given(matrices)
def test_smith_form_factorises_and_divides(a):
    u, d, v = smith_normal_form(a)
    assert matmul(matmul(u, a), v) == d
    assert abs(_det(u)) == 1 and abs(_det(v)) == 1
    diag = [d[i][i] for i in range(min(len(a), len(a[0])))]
    for i in range(len(d)):
        for j in range(len(d[0])):
            if i != j:
                assert d[i][j] == 0
    assert all(x >= 0 for x in diag)
    nonzero = [x for x in diag if x]
    assert diag[:len(nonzero)] == nonzero  # zeros trail
    assert all(b % a_ == 0 for a_, b in zip(nonzero, nonzero[1:]))


def test_inverse_q_of_cartan():
    inv = inverse_q([[2, -1], [-1, 2]])
    assert matmul([[2, -1], [-1, 2]], inv) == [[1, 0], [0, 1]]


@given(st.integers(-20, 20), st.integers(-30, 30), st.integers(2, 24))
def test_congruence_matches_brute_force(a, b, m):
    y = solve_linear_congruence(a, b, m)
    sols = [x for x in range(m) if (a * x - b) % m == 0]
    if sols:
        assert y is not None and (a * y - b) % m == 0
    else:
        assert y is None


def test_congruence_over_integers():
    assert solve_linear_congruence(3, 12, 0) == 4
    assert solve_linear_congruence(2, 3, 0) is None
