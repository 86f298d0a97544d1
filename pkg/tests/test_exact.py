from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from elliptic_weyl.exact import ExactMatrix, ExactVector, mat_apply, mat_eq, mat_mul, mat_pow
from elliptic_weyl.reflection import central_matrix, reflections
from elliptic_weyl.words import GroupKind

rationals = st.fractions(max_denominator=50).filter(lambda x: abs(x.numerator) < 10**6)


def small_matrices(dim):
    return st.lists(st.lists(st.integers(-4, 4), min_size=dim, max_size=dim),
                    min_size=dim, max_size=dim).map(ExactMatrix)


@given(rationals, rationals)
def test_rational_add_sub_roundtrip(x, y):
    assert (x + y) - y == x
    z = x * y
    assert z.denominator > 0


@given(rationals.filter(bool))
def test_rational_reciprocal(x):
    assert x * (1 / x) == 1


@settings(max_examples=60)
@given(st.integers(1, 6).flatmap(lambda d: st.tuples(small_matrices(d), small_matrices(d), small_matrices(d))))
def test_mat_mul_associative(abc):
    a, b, c = abc
    assert mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c))


def test_entries_canonical():
    m = ExactMatrix([[Fraction(2, 4), Fraction(-3, -6)], [0, 1]])
    assert m[0, 0] == Fraction(1, 2)
    assert m[0, 0].denominator == 2
    assert m[0, 1].denominator > 0


def test_identity_is_neutral():
    m = ExactMatrix([[1, 2, 0], [3, -1, 4], [0, 0, 2]])
    ident = ExactMatrix.identity(3)
    assert mat_mul(ident, m) == m
    assert mat_mul(m, ident) == m
    v = ExactVector([1, Fraction(1, 3), -2])
    assert mat_apply(ident, v) == v


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        mat_mul(ExactMatrix.identity(2), ExactMatrix.identity(3))
    with pytest.raises(ValueError):
        mat_apply(ExactMatrix.identity(2), ExactVector([1, 2, 3]))
    with pytest.raises(ValueError):
        ExactMatrix([[1, 2]])


def test_rejects_floats():
    with pytest.raises(TypeError):
        ExactVector([0.5])


@pytest.mark.parametrize("kind", list(GroupKind))
def test_reflections_are_involutions(kind):
    rs = reflections(kind)
    for r in rs.matrices.values():
        assert mat_mul(r, r) == ExactMatrix.identity(r.dim)


def test_mat_eq():
    r0 = reflections(GroupKind.A11STAR).matrices["0"]
    assert mat_eq(r0, r0)
    assert not mat_eq(ExactMatrix.identity(5), r0)
    assert not mat_eq(central_matrix(GroupKind.A11STAR), ExactMatrix.identity(5))


# sigma^2 and sigma computed independently with numpy from the pairing tables
SIGMA2_A11STAR = [
    [1, 0, 0, 0, 0],
    [0, 1, 0, 0, 0],
    [0, 0, 1, 0, 0],
    [0, -1, 0, 1, 0],
    [4, 2, 0, 0, 1],
]
SIGMA_A11 = [
    [1, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0],
    [0, -1, -1, 1, 0, 0],
    [0, -1, -1, 0, 1, 0],
    [2, 1, 1, 0, 0, 1],
]


def test_central_matrix_fixtures():
    assert central_matrix(GroupKind.A11STAR) == ExactMatrix(SIGMA2_A11STAR)
    assert central_matrix(GroupKind.A11) == ExactMatrix(SIGMA_A11)


def test_mat_pow_negative():
    c = ExactMatrix(SIGMA2_A11STAR)
    # unipotent with nilpotent part squaring to zero
    cinv = ExactMatrix.identity(5) - (c - ExactMatrix.identity(5))
    assert mat_mul(c, cinv) == ExactMatrix.identity(5)
    assert mat_mul(mat_pow(c, 3), mat_pow(c, -3, cinv)) == ExactMatrix.identity(5)
    with pytest.raises(ValueError):
        mat_pow(c, -1)


def test_to_int_rows_rejects_fractions():
    with pytest.raises(ValueError):
        ExactMatrix([[Fraction(1, 2)]]).to_int_rows()
