import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from volkenborn.integrals import (
    Measure,
    alternating_power_sum,
    check_fermionic_shift,
    check_shift_equation,
    convergence_report,
    exact_integral,
    fermionic_exact,
    level_integral,
    power_sum,
    volkenborn_exact,
)
from volkenborn.polynomials import Polynomial, binom_poly, falling_poly
from volkenborn.sequences import changhee, daehee


def test_volkenborn_exact_examples():
    assert volkenborn_exact(binom_poly(3)) == Fraction(-1, 4)
    assert volkenborn_exact(Polynomial.one()) == 1
    assert volkenborn_exact(falling_poly(4)) == Fraction(24, 5)


def test_fermionic_exact_examples():
    assert fermionic_exact(binom_poly(2)) == Fraction(1, 4)
    assert fermionic_exact(Polynomial.one()) == 1
    assert fermionic_exact(falling_poly(3)) == Fraction(-3, 4)


@pytest.mark.parametrize("n", range(31))
def test_binomial_integral_closed_forms(n):
    assert volkenborn_exact(binom_poly(n)) == Fraction((-1) ** n, n + 1)
    assert fermionic_exact(binom_poly(n)) == Fraction((-1) ** n, 2**n)


@pytest.mark.parametrize("n", range(21))
def test_shifted_rising_factorial_integrals(n):
    # integrals of (x+n-1)(x+n-2)...(x) against both measures
    poly = falling_poly(n).shift(n - 1) if n else Polynomial.one()
    bos = volkenborn_exact(poly)
    fer = fermionic_exact(poly)
    from volkenborn.polynomials import binom_int

    expected_b = math.factorial(n) * sum(
        Fraction((-1) ** m, m + 1) * binom_int(n - 1, n - m) for m in range(n + 1)
    ) if n else Fraction(1)
    expected_f = math.factorial(n) * sum(
        Fraction((-1) ** m, 2**m) * binom_int(n - 1, n - m) for m in range(n + 1)
    ) if n else Fraction(1)
    assert bos == expected_b
    assert fer == expected_f


def test_falling_factorial_integrals_are_the_number_families():
    for n in range(15):
        assert volkenborn_exact(falling_poly(n)) == daehee(n)
        assert fermionic_exact(falling_poly(n)) == changhee(n)


coeffs = st.lists(
    st.fractions(min_value=-50, max_value=50, max_denominator=12), min_size=0, max_size=11
)


@settings(max_examples=40, deadline=None)
@given(coeffs, coeffs)
def test_exact_integrals_are_linear(a, b):
    f, g = Polynomial(a), Polynomial(b)
    assert volkenborn_exact(f + g) == volkenborn_exact(f) + volkenborn_exact(g)
    assert fermionic_exact(f + g) == fermionic_exact(f) + fermionic_exact(g)
    assert volkenborn_exact(f * 3) == 3 * volkenborn_exact(f)


# ---------------------------------------------------------------------------
# power sums


def test_power_sum_examples():
    assert power_sum(1, 9) == 36
    assert power_sum(2, 4) == 14
    assert power_sum(3, 100) == 24502500
    assert power_sum(0, 7) == 7  # 0^0 counts as 1
    assert power_sum(5, 0) == 0


def test_alternating_power_sum_examples():
    assert alternating_power_sum(0, 3) == 1
    assert alternating_power_sum(1, 4) == -2
    assert alternating_power_sum(2, 5) == 10
    assert alternating_power_sum(4, 0) == 0


def test_power_sums_match_direct_loops():
    for n in range(11):
        direct = 0
        alt = 0
        for m in range(501):
            assert power_sum(n, m) == direct
            assert alternating_power_sum(n, m) == alt
            term = m**n if (m or n == 0) else 0
            direct += term
            alt += term if m % 2 == 0 else -term


def test_power_sum_handles_huge_arguments():
    # closed form, so p^N-sized arguments cost nothing
    value = power_sum(2, 5**12)
    m = 5**12
    assert value == m * (m - 1) * (2 * m - 1) // 6


# ---------------------------------------------------------------------------
# level sums


def test_level_integral_examples():
    x = Polynomial.x()
    assert level_integral(x, Measure.bosonic(), 3, 2) == 4
    assert level_integral(Polynomial.one(), Measure.fermionic(), 3, 1) == 1
    assert level_integral(Polynomial.one(), Measure.bosonic(), 5, 3) == 1


def test_level_integral_matches_direct_summation():
    f = Polynomial([Fraction(1, 2), -2, 0, 1])
    for p, N in [(3, 2), (5, 1), (2, 3)]:
        m = p**N
        direct = sum(f(x) for x in range(m))
        assert level_integral(f, Measure.bosonic(), p, N) == direct / Fraction(m)
    for p, N in [(3, 2), (7, 1)]:
        m = p**N
        direct = sum((-1) ** x * f(x) for x in range(m))
        assert level_integral(f, Measure.fermionic(), p, N) == direct


def test_level_integral_preconditions():
    one = Polynomial.one()
    with pytest.raises(ValueError):
        level_integral(one, Measure.fermionic(), 2, 3)
    with pytest.raises(ValueError):
        level_integral(one, Measure.bosonic(), 4, 1)
    with pytest.raises(ValueError):
        level_integral(one, Measure.bosonic(), 3, 0)
    # v_p(1 - q) must be >= 1
    with pytest.raises(ValueError):
        level_integral(one, Measure.q_weighted(Fraction(1, 2)), 3, 1)
    # guard on the term-by-term q loop
    with pytest.raises(ValueError):
        level_integral(one, Measure.q_weighted(4), 3, 13)


def test_q_level_matches_direct_weighted_sum():
    f = Polynomial([0, 1])
    q = Fraction(4)
    for N in (1, 2, 3):
        m = 3**N
        direct = sum(Fraction(x) * q**x for x in range(m))
        bracket = (1 - q**m) / (1 - q)
        assert level_integral(f, Measure.q_weighted(q), 3, N) == direct / bracket


def test_q_measure_delegates_to_bosonic_at_one():
    f = Polynomial([1, 2, 3])
    assert level_integral(f, Measure.q_weighted(1), 3, 2) == level_integral(
        f, Measure.bosonic(), 3, 2
    )


def test_measure_validation():
    with pytest.raises(ValueError):
        Measure("nonsense")
    with pytest.raises(ValueError):
        Measure("q")
    with pytest.raises(ValueError):
        Measure("bosonic", Fraction(2))


# ---------------------------------------------------------------------------
# convergence reports


def test_convergence_witness_row():
    report = convergence_report(Polynomial.x(), Measure.bosonic(), 3, 2)
    assert report.exact == Fraction(-1, 2)
    row = report.rows[1]
    assert row.N == 2
    assert row.value == 4
    assert row.value - report.exact == Fraction(9, 2)
    assert row.err_valuation == 2


def test_convergence_constant_fermionic_is_exact_at_every_level():
    report = convergence_report(Polynomial.one(), Measure.fermionic(), 3, 4)
    assert all(r.value == 1 for r in report.rows)
    assert all(r.err_valuation == math.inf for r in report.rows)


def test_convergence_valuations_nondecreasing_small_sweep():
    for p in (3, 5, 7):
        for n in range(9):
            report = convergence_report(Polynomial.monomial(n), Measure.bosonic(), p, 4)
            vals = [r.err_valuation for r in report.rows]
            assert all(a <= b for a, b in zip(vals, vals[1:]))
            # from the second level on the error always carries a power of p
            assert all(v >= 1 for v in vals[1:])


def test_convergence_q_rows_have_no_reference():
    report = convergence_report(Polynomial.x(), Measure.q_weighted(4), 3, 3)
    assert report.exact is None
    assert all(r.err_valuation is None for r in report.rows)
    csv = report.to_csv()
    assert csv.splitlines()[0] == "N,value,err_valuation"
    assert csv.splitlines()[1].endswith(",")


def test_convergence_report_serialization():
    report = convergence_report(Polynomial.x(), Measure.bosonic(), 3, 2)
    assert report.to_csv() == "N,value,err_valuation\n1,1,1\n2,4,2\n"
    obj = report.to_json_obj()
    assert obj["rows"][1] == {"N": 2, "value": "4", "err_valuation": 2}


# ---------------------------------------------------------------------------
# shift equations


def test_shift_equation_simple_cases():
    assert check_shift_equation(Polynomial.monomial(2), 1)
    assert check_shift_equation(Polynomial([3, 0, Fraction(1, 2), 1]), 4)


@pytest.mark.parametrize("n", range(1, 13))
def test_shift_equation_on_binomials_reproduces_shifted_integral(n):
    # shifting C(x, n) by one lands on the (-1)^(n+1)/(n^2+n) closed form
    assert check_shift_equation(binom_poly(n), 1)
    assert volkenborn_exact(binom_poly(n).shift(1)) == Fraction((-1) ** (n + 1), n * n + n)


@settings(max_examples=40, deadline=None)
@given(coeffs, st.integers(min_value=1, max_value=4))
def test_shift_equation_random(c, m):
    assert check_shift_equation(Polynomial(c), m)


def test_fermionic_shift_simple_cases():
    assert check_fermionic_shift(Polynomial.x(), 1)
    assert check_fermionic_shift(Polynomial.monomial(3), 2)


@settings(max_examples=40, deadline=None)
@given(coeffs, st.integers(min_value=1, max_value=4))
def test_fermionic_shift_random(c, n):
    assert check_fermionic_shift(Polynomial(c), n)


def test_exact_integral_dispatch():
    f = Polynomial.x()
    assert exact_integral(f, Measure.bosonic()) == Fraction(-1, 2)
    assert exact_integral(f, Measure.fermionic()) == Fraction(-1, 2)
    assert exact_integral(f, Measure.q_weighted(4)) is None
