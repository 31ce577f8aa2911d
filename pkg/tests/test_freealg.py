import random
from fractions import Fraction

import numpy as np
import pytest

from freealg import (
    FreeAlgebraError,
    FreePoly,
    HomMap,
    OddImageViolation,
    UnassignedGenerator,
    all_words,
    brace,
    extend_hom,
    grade_component,
    involute,
    is_reversible,
    multiply,
    symbols,
    t,
    word,
    x,
)
from scalg import random_graded_associative

X1, X2, T1 = FreePoly.gen(x(1)), FreePoly.gen(x(2)), FreePoly.gen(t(1))


def test_two_odd_letters_vanish():
    assert word([t(1), x(1), t(1)]) == 0
    assert multiply(T1, T1) == 0
    assert multiply(T1 * X1, X2 * T1) == 0


def test_generator_order_puts_odd_first():
    assert str(X1 + T1) == "t1 + x1"
    assert str(word([x(1), t(1)]) + word([t(1), x(1)])) == "t1*x1 + x1*t1"


def test_canonical_printing():
    p = FreePoly.constant(Fraction(1, 2)) - X1 + word([x(2), x(1)]).scale(-3)
    assert str(p) == "1/2 - x1 - 3*x2*x1"
    assert str(FreePoly.zero()) == "0"
    assert str(-T1) == "-t1"


def test_arithmetic_basics():
    p = X1 + T1
    assert p - p == 0
    assert (p * 2) / 2 == p
    assert 1 + X1 - 1 == X1
    assert (X1 * X2).degree == 2
    assert FreePoly.zero().degree == -1


def test_brace_and_involution():
    assert brace([]) == 1
    assert brace([x(1), x(2)]) == brace([x(2), x(1)])
    assert str(brace([x(1), x(2)])) == "1/2*x1*x2 + 1/2*x2*x1"
    assert involute(X1 * X2) == X2 * X1
    assert is_reversible(brace(symbols("t1 x1 x2")))
    assert not is_reversible(X1 * X2)


def test_involution_reverses_products():
    rng = random.Random(3)
    words = list(all_words(2, 1, 2))
    for _ in range(30):
        p = word(rng.choice(words)) + word(rng.choice(words)).scale(2)
        q = word(rng.choice(words)) - word(rng.choice(words))
        assert involute(multiply(p, q)) == multiply(involute(q), involute(p))


def test_grade_components():
    p = X1 + T1 * X2 + 3
    assert grade_component(p, "even") == X1 + 3
    assert grade_component(p, "odd") == T1 * X2
    assert p.even_part + p.odd_part == p
    with pytest.raises(FreeAlgebraError):
        grade_component(p, "impar")


def test_multidegree_and_homogeneity():
    assert (X1 * X2 + X2 * X1).multidegree is not None
    assert (X1 + X2).multidegree is None
    assert (X1 + X2).is_homogeneous
    assert not (X1 + X1 * X2).is_homogeneous


def test_all_words_counts():
    words = list(all_words(2, 1, 2))
    # 1 + (2 + 1) + (4 + 4)
    assert len(words) == 12
    assert words[0] == ()
    assert all(len(a) <= len(b) for a, b in zip(words, words[1:]))


def _graded_vector(rng, A, parity):
    return np.array(
        [Fraction(rng.randint(-3, 3)) if g == parity else Fraction(0) for g in A.grading],
        dtype=object,
    )


def test_extend_hom_is_multiplicative():
    A = random_graded_associative(seed=11)
    rng = random.Random(5)
    phi = HomMap(
        {x(1): _graded_vector(rng, A, 0), x(2): _graded_vector(rng, A, 0), t(1): _graded_vector(rng, A, 1)},
        A,
    )
    words = list(all_words(2, 1, 3))
    for _ in range(100):
        p, q = word(rng.choice(words)), word(rng.choice(words))
        lhs = extend_hom(phi, multiply(p, q))
        rhs = A.mul(extend_hom(phi, p), extend_hom(phi, q))
        assert list(lhs) == list(rhs)


def test_extend_hom_sends_one_to_unit():
    A = random_graded_associative(seed=2)
    phi = HomMap({x(1): A.basis(0)}, A)
    assert list(extend_hom(phi, FreePoly.one())) == list(A.unit_element())


def test_extend_hom_errors():
    A = random_graded_associative(seed=2)
    even = [i for i, g in enumerate(A.grading) if g == 0][0]
    with pytest.raises(UnassignedGenerator):
        extend_hom(HomMap({x(1): A.basis(even)}, A), T1)
    with pytest.raises(OddImageViolation):
        extend_hom(HomMap({t(1): A.basis(even)}, A), T1)
