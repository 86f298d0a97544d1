"""Exit criteria. Every check is exact; runtime bounds are asserted where stated."""

import time

import pytest

from elliptic_weyl.cayley import bfs_lengths
from elliptic_weyl.group import sphere
from elliptic_weyl.oracles import infinite_dihedral_lengths, symmetric_group_lengths
from elliptic_weyl.reflection import check_center, center_failures
from elliptic_weyl.series import (
    DECOMPOSITION_NAMES,
    TruncatedSeries,
    affine_weyl_series,
    decomposition_closed_forms,
    elliptic_closed_form,
    expand,
    finite_weyl_polynomial,
    series_eq,
    six_term_decomposition,
)
from elliptic_weyl.verify import multiplication_law_suite, relation_suite, relations
from elliptic_weyl.words import GroupKind

STAR, A11 = GroupKind.A11STAR, GroupKind.A11
ORDER = 200


def _sphere_counts(kind, unit, limit_s):
    start = time.perf_counter()
    counts = [len(sphere(kind, n)) for n in range(ORDER + 1)]
    closed = expand(elliptic_closed_form(kind), ORDER)
    elapsed = time.perf_counter() - start
    assert counts[0] == 1
    assert all(counts[n] == unit * n for n in range(1, ORDER + 1))
    assert series_eq(TruncatedSeries(tuple(counts)), closed)
    assert elapsed < limit_s


@pytest.mark.criterion(1, "A1(1,1)* spheres have 3n elements, n <= 200, and match (1-q^3)/(1-q)^3")
def test_criterion_1_a11star_sphere_counts():
    _sphere_counts(STAR, 3, 5.0)


@pytest.mark.criterion(2, "A1(1,1) spheres have 4n elements, n <= 200, and match (1+q)^2/(1-q)^2")
def test_criterion_2_a11_sphere_counts():
    _sphere_counts(A11, 4, 5.0)


@pytest.mark.criterion(3, "BFS word lengths equal the closed-form lengths up to length 12")
def test_criterion_3_length_oracle():
    start = time.perf_counter()
    star = bfs_lengths(STAR, 12)
    a11 = bfs_lengths(A11, 12)
    elapsed = time.perf_counter() - start
    assert star.mismatches == []
    assert a11.mismatches == []
    assert star.num_states == 1 + sum(3 * n for n in range(1, 13)) == 235
    assert a11.num_states == 1 + sum(4 * n for n in range(1, 13)) == 313
    assert elapsed < 1.0


REQUIRED_LABELS = {
    STAR: ["r0^2 = 1", "(0 1 1')^2 = 1", "0 1 1' = reversed", "(0 1 1')^2 = (1' 1 0)^-2",
           "ab = ba", "(1 1')^-5 = a^5 b^-5", "(1' 1)^5 = a^5 b^-5"],
    A11: ["r0'^2 = 1", "0 0' 1 1' = 1", "0 0' = 1' 1", "0 1' = 0' 1", "1 = 0 a b", "0 1 = a b",
          "0' 1' = a^-1 b", "1' 0' = a b^-1", "(0 1)^-5 = a^-5 b^-5", "(1' 0')^5 = a^5 b^-5"],
}


@pytest.mark.criterion(4, "every presentation identity holds for normal forms and for matrices modulo the center")
@pytest.mark.parametrize("kind", [STAR, A11])
def test_criterion_4_presentation(kind):
    labels = {r.label for r in relations(kind)}
    assert set(REQUIRED_LABELS[kind]) <= labels
    res = relation_suite(kind)
    assert res.failures == []
    assert res.checked == len(labels)


@pytest.mark.criterion(5, "central elements act as prescribed and commute with all generators")
@pytest.mark.parametrize("kind", [STAR, A11])
def test_criterion_5_center(kind):
    assert center_failures(kind) == []
    assert check_center(kind)


@pytest.mark.criterion(6, "six lattice sums match their closed forms and sum to the A1(1,1)* series, through q^200")
def test_criterion_6_decomposition():
    terms = six_term_decomposition(ORDER)
    closed = decomposition_closed_forms()
    total = TruncatedSeries.zero(ORDER)
    for name, t in zip(DECOMPOSITION_NAMES, terms):
        assert series_eq(t, expand(closed[name], ORDER))
        total = total + t
    assert series_eq(total, expand(elliptic_closed_form(STAR), ORDER))


@pytest.mark.criterion(7, "normal-form equality agrees with matrix equality modulo the center on 200 word pairs")
@pytest.mark.parametrize("kind", [STAR, A11])
def test_criterion_7_multiplication_law(kind):
    res = multiplication_law_suite(kind, count=200, max_len=10)
    assert res.checked == 200
    assert res.failures == []
    # both directions of the equivalence are exercised
    assert 0 < res.details["equal_pairs"] < 200


@pytest.mark.criterion(8, "classical finite and affine formulas match brute-force oracles")
def test_criterion_8_classical():
    assert list(finite_weyl_polynomial([1, 2]).coeffs) == symmetric_group_lengths(3) == [1, 2, 2, 1]
    assert list(affine_weyl_series([1], 50).coeffs) == infinite_dihedral_lengths(50)
