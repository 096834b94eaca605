import json
import math
import random
from fractions import Fraction

import pytest

from splitgamma import (
    DomainError,
    ResourceLimitError,
    beiter_density,
    density_curve,
    gamma,
    nvar_classify,
    rs_solve,
    run_scan,
    scan_shard,
)
from splitgamma.explorer import (
    SCAN_CSV_HEADER,
    SCAN_METADATA,
    record_from_csv_row,
    record_from_json,
    record_to_csv_row,
    record_to_json,
)


def saturated_counts(coeffs, rhs, n_eq):
    """Count solutions of i + sum(a_j x_j) = rhs by plain nested search, capped at 2."""
    counts = []
    for i in range(n_eq):
        target = rhs - i
        found = 0
        if target >= 0:
            stack = [(0, target)]
            while stack and found < 2:
                idx, rem = stack.pop()
                if idx == len(coeffs) - 1:
                    if rem % coeffs[idx] == 0:
                        found += 1
                    continue
                for x in range(rem // coeffs[idx] + 1):
                    stack.append((idx + 1, rem - coeffs[idx] * x))
        counts.append(min(found, 2))
    return tuple(counts)


# ---------------- n-variable systems ----------------


def test_nvar_pair_matches_gamma():
    rep = nvar_classify((3, 5))
    assert rep.instance.rhs == 4
    assert rep.counts == (0, 1)
    assert rep.solvable == (1,)
    assert rep.exactly_one


def test_nvar_three_variable_example():
    rep = nvar_classify((3, 5, 7))
    assert rep.instance.rhs_numerator == 48
    assert rep.instance.rhs == 24
    assert rep.instance.setwise_coprime and rep.instance.pairwise_coprime
    assert rep.counts == (2, 2, 2)
    assert rep.solvable == (0, 1, 2)
    assert not rep.exactly_one


def test_nvar_non_integral_rhs():
    rep = nvar_classify((2, 4, 6))
    assert rep.instance.rhs_numerator == 15
    assert rep.instance.rhs is None
    assert rep.counts == (0, 0, 0)
    assert rep.solvable == ()
    assert not rep.exactly_one


def test_nvar_coprimality_flags():
    rep = nvar_classify((2, 3, 4))
    assert rep.instance.setwise_coprime
    assert not rep.instance.pairwise_coprime


def test_nvar_rejects_bad_input():
    with pytest.raises(DomainError):
        nvar_classify((5,))
    with pytest.raises(DomainError):
        nvar_classify((0, 3))


def test_nvar_cap():
    with pytest.raises(ResourceLimitError):
        nvar_classify((101, 103), cap=100)


def test_nvar_two_variable_consistency():
    """On coprime pairs the DP reproduces the exact solver's verdict."""
    for a in range(1, 101):
        for b in range(1, 101):
            if math.gcd(a, b) != 1:
                continue
            rep = nvar_classify((a, b))
            g = gamma(a, b)
            assert rep.exactly_one, (a, b)
            assert rep.counts[g] == 1, (a, b)
            assert rep.counts[1 - g] == 0, (a, b)


def test_nvar_dp_matches_nested_enumeration():
    rng = random.Random(20240817)
    done = 0
    while done < 25:
        n = rng.choice((2, 3))
        coeffs = tuple(rng.randint(2, 40) for _ in range(n))
        if all(c % 2 == 0 for c in coeffs):
            continue
        rhs_num = math.prod(c - 1 for c in coeffs)
        if rhs_num % 2 or rhs_num // 2 > 10_000:
            continue
        rep = nvar_classify(coeffs)
        assert rep.counts == saturated_counts(coeffs, rhs_num // 2, n), coeffs
        done += 1


# ---------------- shifted right-hand sides ----------------


def test_rs_trivial_shift_matches_gamma():
    for a in range(1, 26):
        for b in range(1, 26):
            if math.gcd(a, b) != 1:
                continue
            rec = rs_solve(a, b, 1, 1)
            assert rec.exactly_one, (a, b)
            assert rec.solvable_i0 == (gamma(a, b) == 0), (a, b)


def test_rs_shifted_example():
    rec = rs_solve(5, 7, 3, 3)
    assert rec.rhs == 4
    assert rec.integral
    assert not rec.solvable_i0 and not rec.solvable_i1
    assert not rec.exactly_one


def test_rs_non_integral_product():
    rec = rs_solve(4, 7, 1, 2)
    assert rec.rhs is None
    assert not rec.integral
    assert not rec.solvable_i0 and not rec.solvable_i1


def test_rs_negative_rhs_is_unsolvable_not_error():
    rec = rs_solve(3, 5, 5, 1)
    assert rec.rhs == -4
    assert rec.integral
    assert not rec.solvable_i0 and not rec.solvable_i1


def test_rs_rejects_common_factor():
    with pytest.raises(DomainError):
        rs_solve(6, 9, 1, 1)


def test_rs_counts_match_enumeration():
    for a in range(1, 16):
        for b in range(1, 16):
            if math.gcd(a, b) != 1:
                continue
            for r, s in ((1, 1), (2, 0), (0, 2), (3, 3), (1, 2)):
                rec = rs_solve(a, b, r, s)
                num = (a - r) * (b - s)
                if num % 2 or num < 0:
                    assert not rec.solvable_i0 and not rec.solvable_i1
                    continue
                counts = saturated_counts((a, b), num // 2, 2)
                assert rec.solvable_i0 == (counts[0] > 0), (a, b, r, s)
                assert rec.solvable_i1 == (counts[1] > 0), (a, b, r, s)
                assert rec.exactly_one == ((counts[0] > 0) != (counts[1] > 0))


# ---------------- densities ----------------


def test_beiter_density_tiny():
    # pairs (1,1), (1,2), (2,1)
    assert beiter_density(1, 1, 2) == Fraction(1)


def test_beiter_density_classic_is_one():
    assert beiter_density(1, 1, 40) == Fraction(1)


def test_beiter_density_swap_symmetry():
    for r, s in ((2, 0), (1, 3), (0, 2)):
        assert beiter_density(r, s, 30) == beiter_density(s, r, 30)


def test_density_curve():
    assert density_curve(1, 1, [10, 30]) == [(10, Fraction(1)), (30, Fraction(1))]
    assert density_curve(2, 0, [20]) == [(20, beiter_density(2, 0, 20))]


# ---------------- scan plumbing ----------------


def test_scan_shard_covers_coprime_column():
    recs = scan_shard(3, 1, 1, 6)
    assert [r.b for r in recs] == [1, 2, 4, 5]
    assert all(r.a == 3 for r in recs)


def test_record_round_trips():
    samples = [rs_solve(8, 13), rs_solve(4, 7, 1, 2), rs_solve(3, 5, 5, 1)]
    for rec in samples:
        row = record_to_csv_row(rec)
        assert len(row) == len(SCAN_CSV_HEADER)
        assert record_from_csv_row(row) == rec
        doc = record_to_json(rec)
        assert record_from_json(json.loads(json.dumps(doc))) == rec


def test_run_scan_all_formats_and_summary(tmp_path):
    out_csv = tmp_path / "scan.csv"
    summary = run_scan(2, 0, 14, out_csv)
    assert summary["x_max"] == 14
    assert summary["density"] == Fraction(summary["exactly_one"], summary["pairs"])
    assert summary["metadata"] == SCAN_METADATA
    lines = out_csv.read_text().splitlines()
    assert lines[0] == ",".join(SCAN_CSV_HEADER)
    assert len(lines) == summary["pairs"] + 1
    assert (tmp_path / "scan.csv.checkpoint").read_text() == "14\n"

    out_jsonl = tmp_path / "scan.jsonl"
    run_scan(2, 0, 14, out_jsonl, fmt="jsonl")
    json_recs = [record_from_json(json.loads(line)) for line in out_jsonl.read_text().splitlines()]
    csv_recs = [record_from_csv_row(line.split(",")) for line in lines[1:]]
    assert json_recs == csv_recs


def test_run_scan_shard_boundaries_do_not_matter(tmp_path):
    solo = tmp_path / "solo.csv"
    pooled = tmp_path / "pooled.csv"
    s1 = run_scan(1, 3, 20, solo, jobs=1)
    s2 = run_scan(1, 3, 20, pooled, jobs=3)
    assert solo.read_bytes() == pooled.read_bytes()
    assert s1 == s2


def test_run_scan_resume_from_checkpoint(tmp_path):
    full = tmp_path / "full.csv"
    expect = run_scan(2, 0, 12, full)

    prefix = tmp_path / "partial.csv"
    kept = [line for line in full.read_text().splitlines(keepends=True)
            if line.startswith(tuple(f"{a}," for a in range(1, 8))) or line.startswith("a,")]
    prefix.write_text("".join(kept))
    (tmp_path / "partial.csv.checkpoint").write_text("7\n")

    resumed = run_scan(2, 0, 12, prefix, resume=True)
    assert prefix.read_bytes() == full.read_bytes()
    assert resumed["pairs"] == expect["pairs"]
    assert resumed["exactly_one"] == expect["exactly_one"]
    assert resumed["density"] == expect["density"]


def test_run_scan_resume_on_complete_file_is_stable(tmp_path):
    out = tmp_path / "done.csv"
    first = run_scan(1, 1, 10, out)
    before = out.read_bytes()
    second = run_scan(1, 1, 10, out, resume=True)
    assert out.read_bytes() == before
    assert first["density"] == second["density"] == Fraction(1)
