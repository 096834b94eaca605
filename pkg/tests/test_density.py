import json
from fractions import Fraction

import pytest

from splitgamma import (
    DomainError,
    build_density_sequence,
    gamma,
    trace_rows,
    trace_to_json,
    verify_growth_bounds,
)
from splitgamma.density import DENSITY_CSV_HEADER

TARGETS = (Fraction(1, 4), Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(3, 4))


def test_degenerate_targets_close_forms():
    tr = build_density_sequence(1, 60)
    assert tr.terms == tuple(2**n for n in range(61))
    tr = build_density_sequence(0, 60)
    assert tr.terms == tuple(2**n + 1 for n in range(61))


def test_accepts_str_and_fraction_targets():
    assert build_density_sequence("1/2", 8) == build_density_sequence(Fraction(1, 2), 8)


def test_target_validation():
    with pytest.raises(DomainError):
        build_density_sequence(Fraction(3, 2), 10)
    with pytest.raises(DomainError):
        build_density_sequence(Fraction(-1, 2), 10)
    with pytest.raises(DomainError):
        build_density_sequence(Fraction(1, 2), 1)


def test_greedy_step_dichotomy():
    """Bit 0 exactly when the term was doubled, bit 1 when 2a - 1 was taken."""
    for p in TARGETS:
        tr = build_density_sequence(p, 80)
        terms, bits, ratios = tr.terms, tr.bits, tr.ratios
        for n in range(2, 81):
            doubled = ratios[n - 2] < p
            if doubled:
                assert terms[n] == 2 * terms[n - 1], (p, n)
                assert bits[n - 1] == 0, (p, n)
            else:
                assert terms[n] == 2 * terms[n - 1] - 1, (p, n)
                assert bits[n - 1] == 1, (p, n)


def test_bits_are_recomputed_gamma_values():
    for p in (Fraction(1, 3), Fraction(1, 2)):
        tr = build_density_sequence(p, 60)
        for n in range(60):
            assert tr.bits[n] == gamma(tr.terms[n], tr.terms[n + 1]), (p, n)


def test_ratio_bookkeeping():
    tr = build_density_sequence(Fraction(2, 3), 50)
    zeros = 0
    for n in range(1, 51):
        zeros += 1 - tr.bits[n - 1]
        assert tr.ratios[n - 1] == Fraction(zeros, n)


def test_ratio_steering():
    # the doubling branch pushes the ratio up, the other branch down
    for p in TARGETS:
        tr = build_density_sequence(p, 80)
        for n in range(2, 81):
            if tr.ratios[n - 2] < p:
                assert tr.ratios[n - 1] > tr.ratios[n - 2], (p, n)
            else:
                assert tr.ratios[n - 1] < tr.ratios[n - 2], (p, n)


def test_growth_bounds():
    for p in TARGETS:
        tr = build_density_sequence(p, 60)
        assert verify_growth_bounds(tr)
        for n in range(61):
            assert 2 ** (n - 1) < tr.terms[n] <= 2 ** (n + 1), (p, n)


def test_crossings_keep_happening():
    for p in (Fraction(1, 3), Fraction(1, 2), Fraction(3, 4)):
        tr = build_density_sequence(p, 500)
        assert tr.crossings
        assert tr.crossings[-1] > 250, p


def test_ratio_converges_at_desk_scale():
    for p in TARGETS:
        tr = build_density_sequence(p, 500)
        assert abs(tr.ratios[-1] - p) <= Fraction(2, 100), p


def test_trace_rows_layout():
    tr = build_density_sequence(Fraction(1, 2), 8)
    rows = trace_rows(tr)
    assert len(rows) == 9  # n = 0 .. n_max
    assert DENSITY_CSV_HEADER == ("n", "a_n", "gamma_bit", "ratio_num", "ratio_den")
    assert rows[0] == ("0", "1", "", "", "")
    assert rows[1] == ("1", "2", "0", "1", "1")
    for row in rows:
        assert all(isinstance(cell, str) for cell in row)


def test_trace_json_uses_decimal_strings():
    tr = build_density_sequence(Fraction(1, 3), 12)
    doc = trace_to_json(tr)
    text = json.dumps(doc)
    parsed = json.loads(text)
    assert parsed["p_num"] == "1" and parsed["p_den"] == "3"
    assert parsed["terms"] == [str(t) for t in tr.terms]
    assert all(isinstance(t, str) for t in parsed["terms"])
