from fractions import Fraction

import pytest

import restricted_involutions as ri


def test_counts_are_exact_python_ints():
    assert ri.i_avoid(8, 0, "123") == 35
    assert ri.count_containing_once(8, 2, "321") == 40
    big = ri.i_avoid(80, 0, "123")
    assert isinstance(big, int) and big > 2**64


def test_formula_and_oracle_agree():
    for a in ("123", "132", "213", "231", "312", "321"):
        for n in range(8):
            for k in range(n + 1):
                assert ri.evaluate("avoid", a, n, k) == ri.evaluate("avoid", a, n, k, backend="oracle")
                assert ri.evaluate("once", a, n, k) == ri.evaluate("once", a, n, k, backend="oracle")


def test_worked_figures():
    assert ri.delta("3 4 1 2 5 7 6 8") == "UUDDUUDU"
    assert ri.delta_inv("UUDDUUDU") == (3, 4, 1, 2, 5, 7, 6, 8)
    assert ri.zeta([6, 8, 9, 7, 5, 1, 4, 2, 3]) == "UUUDDUDDU"
    assert ri.zeta_rows("689751423") == ((3, 1, 1), (2, 2, 0))
    assert ri.cycle_notation(ri.zeta_inv("UUUDDUDDU")) == "(1 6)(2 8)(3 9)(4 7)(5)"
    assert ri.mdp_to_partial("UUDU|UUDDUD") == "UUDUUUUDDU"
    assert ri.partial_to_mdp("UUDUUUUDDU") == "UUDU|UUDDUD"


def test_round_trips_small():
    for p in ri.involutions(6, 0):
        if ri.occurrences(p, "123") == 0:
            q = ri.big_gamma_involution(p)
            assert len(ri.fixed_points(q)) == 2
            assert ri.big_gamma_involution_inv(q) == p
            assert ri.gamma_involution(ri.gamma_involution(p)) == p


def test_tableaux():
    assert ri.tableau_of("34125768") == [[1, 2, 5, 6, 8], [3, 4, 7]]
    assert ri.involution_of([[1, 2, 5, 6, 8], [3, 4, 7]]) == (3, 4, 1, 2, 5, 7, 6, 8)
    assert ri.count_syt([3, 2]) == 5


def test_series_are_fractions():
    b = ri.series_B(2, 8)
    assert b[8] == 56 and isinstance(b[8], Fraction)
    assert ri.series_A(2, 8)[8] == 5


def test_table_and_verify():
    assert ri.table("avoid", "132", 2) == "1\n0 1\n1 0 1\n"
    passed, report = ri.verify(8)
    assert passed
    assert "S6 cycle table: 2^14^1 gives 20 vs 18" in report


def test_domain_errors_are_value_errors():
    with pytest.raises(ri.DomainError, match="not an involution"):
        ri.delta("2 3 1")
    with pytest.raises(ValueError):
        ri.zeta_inv("UDD")
    with pytest.raises(ValueError):
        ri.i_avoid(4, 2, "1234")
