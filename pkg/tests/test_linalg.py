"""Exact linear algebra: examples with independent oracles, plus property tests."""

import random
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superkit.linalg import (
    Matrix,
    is_squarefree,
    kernel_basis,
    minimal_polynomial,
    poly_divmod,
    poly_eval_matrix,
    poly_gcd,
    poly_mul,
    rational_eigenspaces,
    rational_roots,
    rank,
    solve_linear,
    splits_semisimply_over_q,
)


def matvec_is_zero(m, v):
    return all(c == 0 for c in m.matvec(v))


# -- kernel_basis ---------------------------------------------------------------

def test_kernel_of_identity_is_empty():
    assert kernel_basis(Matrix.identity(2)) == []


def test_kernel_of_sum_functional():
    basis = kernel_basis(Matrix([[1, 1]]))
    assert len(basis) == 1
    v = basis[0]
    assert v[0] == -v[1] != 0


def oracle_rank(rows):
    # independent row-reduction rank, fraction arithmetic from scratch
    a = [[Q(x) for x in row] for row in rows]
    r = 0
    for c in range(len(a[0]) if a else 0):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r


def test_kernel_of_random_rank4_matrix():
    rng = random.Random(7)
    left = [[rng.randint(-3, 3) for _ in range(4)] for _ in range(6)]
    right = [[rng.randint(-3, 3) for _ in range(6)] for _ in range(4)]
    prod = [[sum(left[i][k] * right[k][j] for k in range(4)) for j in range(6)]
            for i in range(6)]
    while oracle_rank(prod) != 4:
        left = [[rng.randint(-3, 3) for _ in range(4)] for _ in range(6)]
        right = [[rng.randint(-3, 3) for _ in range(6)] for _ in range(4)]
        prod = [[sum(left[i][k] * right[k][j] for k in range(4)) for j in range(6)]
                for i in range(6)]
    m = Matrix(prod)
    basis = kernel_basis(m)
    assert len(basis) == 2
    for v in basis:
        assert matvec_is_zero(m, v)
    assert oracle_rank(prod) + len(basis) == 6


# -- solve_linear -----------------------------------------------------------------

def test_solve_identity():
    b = [Q(3), Q(-1, 2), Q(7)]
    assert solve_linear(Matrix.identity(3), b) == b


def test_solve_inconsistent():
    assert solve_linear(Matrix([[1, 1], [1, 1]]), [Q(1), Q(0)]) is None


def test_solve_invertible_4x4_multiply_back():
    m = Matrix([[2, 1, 0, 0], [1, 2, 1, 0], [0, 1, 2, 1], [0, 0, 1, 2]])
    b = [Q(1), Q(0), Q(2), Q(-3)]
    x = solve_linear(m, b)
    assert x is not None
    assert m.matvec(x) == b


def test_solve_checks_rhs_length():
    with pytest.raises(ValueError):
        solve_linear(Matrix.identity(2), [Q(1)])


# -- minimal polynomial -------------------------------------------------------------

def test_minpoly_zero_matrix():
    assert minimal_polynomial(Matrix.zeros(3, 3)) == [Q(0), Q(1)]


def test_minpoly_jordan_block():
    j = Matrix([[0, 1], [0, 0]])
    assert minimal_polynomial(j) == [Q(0), Q(0), Q(1)]


def test_minpoly_diag_1_1_2():
    m = Matrix([[1, 0, 0], [0, 1, 0], [0, 0, 2]])
    # oracle: evaluate candidate polynomials on m
    cand = poly_mul([Q(-1), Q(1)], [Q(-2), Q(1)])  # (x-1)(x-2)
    assert poly_eval_matrix(cand, m).is_zero()
    for lower in ([Q(-1), Q(1)], [Q(-2), Q(1)]):
        assert not poly_eval_matrix(lower, m).is_zero()
    assert minimal_polynomial(m) == cand


def test_minpoly_annihilates_and_is_minimal():
    rng = random.Random(11)
    for _ in range(10):
        d = rng.randint(1, 4)
        m = Matrix([[rng.randint(-2, 2) for _ in range(d)] for _ in range(d)])
        p = minimal_polynomial(m)
        assert p[-1] == 1
        assert poly_eval_matrix(p, m).is_zero()
        # no proper monic divisor annihilates
        for root in rational_roots(p):
            quo, rem = poly_divmod(p, [-root, Q(1)])
            assert rem == []
            assert not poly_eval_matrix(quo, m).is_zero()


# -- squarefree -----------------------------------------------------------------------

def test_squarefree_examples():
    assert not is_squarefree([Q(0), Q(0), Q(1)])          # x^2
    assert is_squarefree([Q(0), Q(-1), Q(1)])             # x(x-1)
    sq = poly_mul([Q(1), Q(0), Q(1)], [Q(1), Q(0), Q(1)])  # (x^2+1)^2
    # oracle: gcd with the derivative 4x^3 + 4x is the nonconstant x^2 + 1
    assert poly_gcd(sq, [Q(0), Q(4), Q(0), Q(4)]) == [Q(1), Q(0), Q(1)]
    assert not is_squarefree(sq)
    with pytest.raises(ValueError):
        is_squarefree([])


def test_squarefree_matches_diagonalizability():
    diag = Matrix([[1, 0], [0, 5]])
    assert is_squarefree(minimal_polynomial(diag))
    jordan = Matrix([[5, 1], [0, 5]])
    assert not is_squarefree(minimal_polynomial(jordan))


# -- rational eigenspaces ---------------------------------------------------------------

def test_eigenspaces_diagonal():
    m = Matrix([[0, 0, 0], [0, 0, 0], [0, 0, 3]])
    eig = dict((lam, len(basis)) for lam, basis in rational_eigenspaces(m))
    assert eig == {Q(0): 2, Q(3): 1}


def test_eigenspaces_irrational_spectrum_empty():
    rot = Matrix([[0, -1], [1, 0]])
    assert rational_eigenspaces(rot) == []
    assert not splits_semisimply_over_q(rot)


def test_eigenspaces_nilpotent_jordan():
    j = Matrix([[0, 1], [0, 0]])
    eig = rational_eigenspaces(j)
    assert len(eig) == 1 and eig[0][0] == 0 and len(eig[0][1]) == 1


def test_eigen_dimension_sum_iff_split_squarefree():
    split = Matrix([[1, 0], [0, 2]])
    assert sum(len(b) for _, b in rational_eigenspaces(split)) == 2
    assert splits_semisimply_over_q(split)
    jordan = Matrix([[1, 1], [0, 1]])
    assert sum(len(b) for _, b in rational_eigenspaces(jordan)) == 1


# -- property tests -------------------------------------------------------------------

small_entries = st.integers(min_value=-4, max_value=4)


@st.composite
def small_matrices(draw, square=False):
    rows = draw(st.integers(min_value=1, max_value=4))
    cols = rows if square else draw(st.integers(min_value=1, max_value=4))
    data = [[draw(small_entries) for _ in range(cols)] for _ in range(rows)]
    return Matrix(data)


@settings(max_examples=60, deadline=None)
@given(small_matrices())
def test_kernel_vectors_satisfy_equation(m):
    basis = kernel_basis(m)
    assert len(basis) == m.cols - rank(m)
    for v in basis:
        assert matvec_is_zero(m, v)


@settings(max_examples=60, deadline=None)
@given(small_matrices(), st.lists(small_entries, min_size=1, max_size=4))
def test_solve_result_is_exact(m, b):
    b = [Q(x) for x in b[:m.rows]] + [Q(0)] * max(0, m.rows - len(b))
    x = solve_linear(m, b)
    if x is not None:
        assert m.matvec(x) == b


@settings(max_examples=40, deadline=None)
@given(small_matrices(square=True))
def test_minimal_polynomial_annihilates(m):
    p = minimal_polynomial(m)
    assert p[-1] == 1
    assert poly_eval_matrix(p, m).is_zero()
    assert len(p) - 1 <= m.rows
