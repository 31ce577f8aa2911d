from fractions import Fraction

from echelon import Echelon, leftmost_pivot, solve_linear


def test_add_reports_new_directions_only():
    ech = Echelon()
    assert ech.add({0: 1, 1: 2}) == {0: Fraction(1, 2), 1: 1}
    assert ech.add({0: 2, 1: 4}) is None
    assert ech.add({0: 1}) == {0: 1}
    assert len(ech) == 2
    assert {5: 1} not in ech


def test_rows_stay_reduced():
    ech = Echelon(order_key=leftmost_pivot)
    ech.extend([{0: 1, 1: 1, 2: 1}, {1: 1, 2: 2}])
    # ordem crescente de order_key: -1 < 0
    assert ech.pivots == [1, 0]
    # coluna 1 é pivô, então some da linha 0
    assert ech.row(0) == {0: 1, 2: -1}
    assert ech.reduce({0: 1, 1: 1, 2: 1}) == {}


def test_solve_linear_unique():
    # x + y = 3, x - y = 1
    particular, kernel = solve_linear([{0: 1, 1: 1}, {0: 1, 1: -1}], [3, 1], 2)
    assert particular == [2, 1]
    assert kernel == []


def test_solve_linear_with_kernel():
    particular, kernel = solve_linear([{0: 1, 1: 1}], [1], 3)
    assert particular == [1, 0, 0]
    assert kernel == [[-1, 1, 0], [0, 0, 1]]


def test_solve_linear_inconsistent():
    particular, kernel = solve_linear([{0: 1}, {0: 2}], [1, 3], 1)
    assert particular is None
    assert kernel == []
