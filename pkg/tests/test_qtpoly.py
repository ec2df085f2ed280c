import json

import pytest

from qtcatalan import (
    COEFFICIENT_LIMIT,
    BadResidue,
    CoefficientOverflow,
    NotCoprime,
    QtPolynomial,
    catalan3_closed_form,
    catalan_bruteforce,
    count_paths,
    is_qt_symmetric,
)

CLASSICAL_C3 = QtPolynomial({(3, 0): 1, (2, 1): 1, (1, 2): 1, (0, 3): 1, (1, 1): 1})


def test_zero_coefficients_are_dropped():
    p = QtPolynomial({(1, 0): 0, (0, 1): 2})
    assert p.coefficient(1, 0) == 0
    assert p.coefficient(0, 1) == 2
    assert p.terms() == [(0, 1, 2)]


def test_negative_inputs_are_rejected():
    with pytest.raises(ValueError):
        QtPolynomial({(-1, 0): 1})
    with pytest.raises(ValueError):
        QtPolynomial({(0, 0): -1})


def test_addition_and_equality_are_exact():
    p = QtPolynomial({(1, 0): 1, (0, 1): 1})
    q = QtPolynomial({(0, 1): 2})
    assert p + q == QtPolynomial({(1, 0): 1, (0, 1): 3})
    assert p != q
    assert hash(p) == hash(QtPolynomial({(0, 1): 1, (1, 0): 1}))


def test_evaluate_is_exact():
    p = QtPolynomial({(2, 1): 3, (0, 0): 1})
    assert p.evaluate(2, 5) == 3 * 4 * 5 + 1
    assert p.evaluate(0, 0) == 1
    assert QtPolynomial().evaluate(7, 9) == 0


def test_render_golden_strings():
    assert QtPolynomial().render() == "0"
    assert QtPolynomial({(0, 0): 1}).render() == "1"
    assert QtPolynomial({(1, 2): 2, (0, 0): 3}).render() == "2 q t^2 + 3"
    assert CLASSICAL_C3.render() == "q^3 + q^2 t + q t^2 + t^3 + q t"
    assert (
        catalan3_closed_form(5).render()
        == "q^4 + q^3 t + q^2 t^2 + q t^3 + t^4 + q^2 t + q t^2"
    )


def test_json_terms_follow_render_order():
    terms = catalan3_closed_form(4).json_terms()
    assert terms == [
        {"q": 3, "t": 0, "c": 1},
        {"q": 2, "t": 1, "c": 1},
        {"q": 1, "t": 2, "c": 1},
        {"q": 0, "t": 3, "c": 1},
        {"q": 1, "t": 1, "c": 1},
    ]
    json.dumps(terms)  # serializable as-is


def test_bruteforce_single_column_is_constant_one():
    for n in (1, 4, 7):
        assert catalan_bruteforce(1, n) == QtPolynomial({(0, 0): 1})


def test_bruteforce_3_4_equals_the_classical_polynomial():
    assert catalan_bruteforce(3, 4) == CLASSICAL_C3


def test_bruteforce_rejects_non_coprime():
    with pytest.raises(NotCoprime):
        catalan_bruteforce(3, 6)


def test_specialization_at_one_one_counts_paths():
    assert catalan_bruteforce(3, 5).evaluate(1, 1) == 7
    for m, n in [(2, 5), (3, 7), (4, 5)]:
        assert catalan_bruteforce(m, n).evaluate(1, 1) == count_paths(m, n)


def test_closed_form_small_cases():
    assert catalan3_closed_form(4) == CLASSICAL_C3
    assert catalan3_closed_form(2) == QtPolynomial({(1, 0): 1, (0, 1): 1})
    assert catalan3_closed_form(5) == QtPolynomial(
        {(4, 0): 1, (3, 1): 1, (2, 2): 1, (1, 3): 1, (0, 4): 1, (2, 1): 1, (1, 2): 1}
    )


def test_closed_form_rejects_multiples_of_three():
    with pytest.raises(BadResidue):
        catalan3_closed_form(6)


def test_closed_form_equals_bruteforce():
    for n in range(1, 17):
        if n % 3 == 0:
            continue
        assert catalan_bruteforce(3, n) == catalan3_closed_form(n)


def test_three_column_terms_respect_the_degree_bound():
    # i + j <= n - 1, with equality exactly on the skips-free terms
    for n in (5, 8, 13):
        brute = catalan_bruteforce(3, n)
        for dq, dt, _ in brute.terms():
            assert dq + dt <= n - 1
        full = [(dq, dt) for dq, dt, _ in brute.terms() if dq + dt == n - 1]
        assert sorted(full) == [(i, n - 1 - i) for i in range(n)]


def test_qt_symmetry_predicate():
    assert is_qt_symmetric(catalan3_closed_form(5))
    assert not is_qt_symmetric(QtPolynomial({(2, 1): 1}))
    assert is_qt_symmetric(QtPolynomial())


def test_mn_symmetry_of_bruteforce():
    for m, n in [(2, 5), (3, 4), (3, 5), (4, 7)]:
        assert catalan_bruteforce(m, n) == catalan_bruteforce(n, m)


def test_coefficient_overflow_is_detected():
    big = QtPolynomial({(0, 0): COEFFICIENT_LIMIT})
    with pytest.raises(CoefficientOverflow):
        big + QtPolynomial({(0, 0): 1})
    with pytest.raises(CoefficientOverflow):
        QtPolynomial({(0, 0): COEFFICIENT_LIMIT + 1})
    with pytest.raises(CoefficientOverflow):
        QtPolynomial({(64, 0): 1}).evaluate(2, 1)
