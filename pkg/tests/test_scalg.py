import random
from fractions import Fraction

import numpy as np
import pytest

from algebra_io import load_algebra, load_bimodule
from scalg import (
    BaseMismatch,
    BimoduleSC,
    DimensionMismatch,
    IllDefinedAction,
    JordanSC,
    NoIdentityElement,
    NotAnIdeal,
    NotCommutative,
    SCAlgebra,
    Subspace,
    annihilator,
    as_vector,
    basis_vector,
    check_bimodule,
    check_gja_axioms,
    check_jordan,
    find_right_units,
    induced_bimodule,
    is_ideal,
    quotient,
    random_graded_associative,
    random_vector,
    regular_bimodule,
    split_extension,
    symmetric_matrix_jordan,
    truncated_free_algebra,
    unit_element,
    vec_str,
    zeros,
)


def _vec(*values):
    return np.array([Fraction(v) for v in values], dtype=object)


@pytest.fixture
def sym2():
    return symmetric_matrix_jordan(2)


@pytest.fixture
def split(sym2):
    return split_extension(sym2, regular_bimodule(sym2))


def test_sym2_table(sym2):
    assert sym2.labels == ["e11", "e12", "e22"]
    e11, e12, e22 = (sym2.basis(i) for i in range(3))
    assert list(sym2.mul(e12, e12)) == [1, 0, 1]
    assert list(sym2.mul(e11, e12)) == [0, Fraction(1, 2), 0]
    assert list(sym2.mul(e22, e11)) == [0, 0, 0]
    assert list(unit_element(sym2)) == [1, 0, 1]


def test_sym2_matches_data_file(sym2, data_dir):
    assert load_algebra(str(data_dir / "sym2.json"), jordan=True).same_table(sym2)


def test_symmetric_matrices_are_jordan():
    for n in (1, 2, 3):
        assert check_jordan(symmetric_matrix_jordan(n)).passed


def test_regular_bimodule_axioms(sym2):
    assert check_bimodule(regular_bimodule(sym2)).passed
    assert check_bimodule(regular_bimodule(sym2), mode="random", trials=20).passed


def test_jordan_sc_rejects_noncommutative_table(data_dir):
    A = load_algebra(str(data_dir / "noncommutative.json"))
    with pytest.raises(NotCommutative):
        JordanSC.from_algebra(A)


def test_split_extension_shape(split):
    assert split.dim == 6
    assert split.grading == [0, 0, 0, 1, 1, 1]
    assert split.respects_grading(odd_odd_zero=True)
    assert not split.is_commutative()


def test_split_extension_is_gja(split):
    assert check_gja_axioms(split, mode="multilinear").passed
    assert check_gja_axioms(split, mode="random", trials=30).passed


def test_split_extension_annihilator_is_the_module(split):
    ann = annihilator(split)
    assert ann.dim == 3
    assert ann.pivots == [3, 4, 5]
    assert is_ideal(split, ann)


def test_quotient_by_annihilator_gives_back_jordan(split, sym2):
    Q = quotient(split, annihilator(split))
    assert Q.dim == 3
    assert Q.same_table(sym2)
    assert Q.labels == ["e11", "e12", "e22"]
    assert Q.is_commutative()


def test_induced_bimodule_recovers_action(split, sym2):
    V = induced_bimodule(split)
    assert V.dim == 3
    assert V.base.same_table(sym2)
    assert np.all(V.action == sym2.table)
    assert V.report.passed
    assert check_bimodule(V).passed


def test_induced_bimodule_of_commutative_algebra_is_zero(sym2):
    V = induced_bimodule(sym2)
    assert V.dim == 0
    assert V.base.same_table(sym2)
    assert V.report.passed


def _trace_module(sym2):
    # v∙a = tr(a) v: satisfaz a identidade cúbica, mas não a quadrática
    return BimoduleSC(sym2, [[[1], [0], [1]]])


def test_induced_bimodule_reports_broken_axioms(sym2):
    A = split_extension(sym2, _trace_module(sym2))
    V = induced_bimodule(A)
    assert V.dim == 1
    assert not V.report.passed
    assert {f.identity for f in V.report.failures} == {"bimodule_quadratic"}
    assert not check_bimodule(V).passed
    with pytest.raises(IllDefinedAction):
        induced_bimodule(A, strict=True)
    assert induced_bimodule(A, verify=False).report is None


def test_right_units_of_split_extension(split):
    units = find_right_units(split)
    assert not units.empty
    assert list(units.particular) == [1, 0, 1, 0, 0, 0]
    assert units.homogeneous.same_as(annihilator(split))
    assert units.contains(_vec(1, 0, 1, 2, 0, -1))
    assert not units.contains(_vec(1, 0, 0, 0, 0, 0))
    with pytest.raises(NoIdentityElement):
        unit_element(split)


def test_split_extension_needs_same_base(sym2):
    other = regular_bimodule(symmetric_matrix_jordan(1))
    with pytest.raises(BaseMismatch):
        split_extension(sym2, other)


def test_split_with_zero_module(sym2):
    V = BimoduleSC(sym2, zeros(0, 3, 0))
    A = split_extension(sym2, V)
    assert A.same_table(sym2)
    assert annihilator(A).dim == 0


def test_one_dimensional_idempotent():
    A = SCAlgebra.from_products(1, {(0, 0): {0: 1}})
    assert check_gja_axioms(A, mode="multilinear").passed
    units = find_right_units(A)
    assert list(units.particular) == [1]
    assert units.homogeneous.dim == 0
    assert annihilator(A).dim == 0


def test_zero_algebra_has_no_right_unit():
    A = SCAlgebra(zeros(2, 2, 2))
    assert find_right_units(A).empty
    assert check_gja_axioms(A, mode="multilinear").passed


def test_noncommutative_file_fails_axioms(data_dir):
    A = load_algebra(str(data_dir / "noncommutative.json"))
    report = check_gja_axioms(A, mode="multilinear")
    assert not report.passed
    assert report.failures[0].identity == "right_commutativity"


def test_quotient_needs_an_ideal(sym2):
    with pytest.raises(NotAnIdeal):
        quotient(sym2, Subspace(3, [sym2.basis(0)]))


def test_random_graded_associative():
    A = random_graded_associative(seed=5)
    assert A.dim == 6
    assert A.respects_grading(odd_odd_zero=True)
    rng_basis = [A.basis(i) for i in range(A.dim)]
    for a in rng_basis:
        for b in rng_basis:
            for c in rng_basis:
                assert list(A.mul(A.mul(a, b), c)) == list(A.mul(a, A.mul(b, c)))


def test_truncated_bullet_algebra_annihilator_is_odd_part():
    A = truncated_free_algebra(1, 1, 2, "bullet")
    ann = annihilator(A)
    odd = Subspace(A.dim, [A.basis(i) for i, g in enumerate(A.grading) if g == 1])
    assert ann.dim == 3
    assert ann.same_as(odd)
    assert check_gja_axioms(A, mode="multilinear").passed


def test_subspace_operations():
    S = Subspace(3, [_vec(1, 1, 0), _vec(0, 1, 1)])
    assert S.dim == 2
    assert _vec(1, 2, 1) in S
    assert _vec(0, 0, 1) not in S
    assert S.complement_coords() == [2]
    assert list(S.coordinates(_vec(1, 2, 1))) == [1, 2]
    with pytest.raises(DimensionMismatch):
        S.add(_vec(1, 0))


def test_vector_helpers():
    assert vec_str(_vec(1, 0, Fraction(-1, 2))) == "e1 - 1/2*e3"
    assert vec_str(_vec(0, 0)) == "0"
    assert vec_str(_vec(-1, 2), ["a", "b"]) == "-a + 2*b"
    assert list(basis_vector(1, 3)) == [0, 1, 0]
    with pytest.raises(DimensionMismatch):
        as_vector([1, 2], 3)


def test_bimodule_loaded_from_file(sym2, data_dir):
    V = load_bimodule(str(data_dir / "sym2_regular.json"))
    assert V.base.same_table(sym2)
    assert check_bimodule(V).passed


def test_product_matches_double_loop(split):
    rng = random.Random(11)
    d = split.dim
    for _ in range(20):
        u, v = random_vector(rng, d), random_vector(rng, d)
        expected = [
            sum((u[i] * v[j] * split.table[i, j, k] for i in range(d) for j in range(d)), Fraction(0))
            for k in range(d)
        ]
        assert list(split.mul(u, v)) == expected


def test_action_matches_double_loop(sym2):
    V = regular_bimodule(sym2)
    rng = random.Random(12)
    for _ in range(20):
        v, a = random_vector(rng, V.dim), random_vector(rng, sym2.dim)
        expected = [
            sum((v[p] * a[b] * V.action[p, b, q] for p in range(V.dim) for b in range(sym2.dim)), Fraction(0))
            for q in range(V.dim)
        ]
        assert list(V.act(v, a)) == expected
