"""Wider searches around the split equations.

Three generalizations: more variables (i + sum a_j x_j = prod (a_j - 1)/2 for
i = 0..n-1), shifted right-hand sides ((a-r)(b-s)/2 in place of (1,1)), and
aggregate statistics over coprime pairs.  Solution counting is a saturating
coin-style DP, deliberately independent of the modular-inverse route in the
core so the two can be played against each other.

Pair scans shard by the first coordinate, stream CSV or JSON lines, and
resume from a plain-text checkpoint holding the last completed shard id.
"""

from __future__ import annotations

import csv
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from pathlib import Path
from typing import Iterator

from .core import DomainError, ResourceLimitError

DEFAULT_RHS_CAP = 1_000_000

SCAN_CSV_HEADER = ("a", "b", "r", "s", "rhs", "integral", "solvable_i0", "solvable_i1", "exactly_one")

SCAN_METADATA = {
    "pair_order": "ordered pairs (a, b), both orientations counted",
    "includes_equal_pair": "yes, (1, 1) is the only coprime pair with a = b",
    "shard_key": "a",
}


@dataclass(frozen=True)
class NVarInstance:
    """Coefficients with the common right-hand side prod(a_j - 1)/2."""

    coeffs: tuple[int, ...]
    rhs_numerator: int
    rhs: int | None  # None when the numerator is odd
    setwise_coprime: bool
    pairwise_coprime: bool

    @classmethod
    def from_coeffs(cls, coeffs) -> "NVarInstance":
        coeffs = tuple(coeffs)
        if len(coeffs) < 2:
            raise DomainError(f"need at least two coefficients, got {len(coeffs)}")
        if any(a < 1 for a in coeffs):
            raise DomainError(f"coefficients must be positive, got {coeffs}")
        num = math.prod(a - 1 for a in coeffs)
        rhs = num // 2 if num % 2 == 0 else None
        setwise = math.gcd(*coeffs) == 1
        pairwise = all(
            math.gcd(coeffs[i], coeffs[j]) == 1
            for i in range(len(coeffs))
            for j in range(i + 1, len(coeffs))
        )
        return cls(coeffs, num, rhs, setwise, pairwise)


@dataclass(frozen=True)
class NVarReport:
    instance: NVarInstance
    counts: tuple[int, ...]  # per equation index, saturated at 2
    solvable: tuple[int, ...]
    exactly_one: bool


@dataclass(frozen=True)
class ScanRecord:
    """One pair-scan row; field set matches the CSV schema exactly."""

    a: int
    b: int
    r: int
    s: int
    rhs: int | None
    integral: bool
    solvable_i0: bool
    solvable_i1: bool
    exactly_one: bool


def _count_table(coins: tuple[int, ...], target: int) -> bytearray:
    # number of representations of each t <= target, saturated at 2
    dp = bytearray(target + 1)
    dp[0] = 1
    for c in coins:
        for t in range(c, target + 1):
            w = dp[t - c]
            if w:
                v = dp[t] + w
                dp[t] = v if v < 2 else 2
    return dp


def nvar_classify(coeffs, cap: int = DEFAULT_RHS_CAP) -> NVarReport:
    """Count solutions of every shifted equation for one coefficient tuple."""
    inst = NVarInstance.from_coeffs(coeffs)
    n = len(inst.coeffs)
    if inst.rhs is None:
        return NVarReport(inst, tuple([0] * n), (), False)
    if inst.rhs > cap:
        raise ResourceLimitError(f"rhs {inst.rhs} exceeds cap {cap}")
    dp = _count_table(inst.coeffs, inst.rhs)
    counts = tuple(int(dp[inst.rhs - i]) if inst.rhs - i >= 0 else 0 for i in range(n))
    solvable = tuple(i for i, c in enumerate(counts) if c)
    return NVarReport(inst, counts, solvable, len(solvable) == 1)


def rs_solve(a: int, b: int, r: int = 1, s: int = 1, cap: int = DEFAULT_RHS_CAP) -> ScanRecord:
    """Solvability of i + ax + by = (a-r)(b-s)/2 for i in {0, 1}.

    A non-integral or negative right-hand side is reported as unsolvable,
    not an error.  Needs gcd(a, b) = 1.
    """
    if a < 1 or b < 1:
        raise DomainError(f"need positive a, b, got ({a}, {b})")
    if math.gcd(a, b) != 1:
        raise DomainError(f"need gcd(a, b) = 1, got gcd = {math.gcd(a, b)}")
    num = (a - r) * (b - s)
    if num % 2:
        return ScanRecord(a, b, r, s, None, False, False, False, False)
    rhs = num // 2
    if rhs < 0:
        return ScanRecord(a, b, r, s, rhs, True, False, False, False)
    if rhs > cap:
        raise ResourceLimitError(f"rhs {rhs} exceeds cap {cap}")
    dp = _count_table((a, b), rhs)
    s0 = dp[rhs] > 0
    s1 = rhs >= 1 and dp[rhs - 1] > 0
    return ScanRecord(a, b, r, s, rhs, True, s0, s1, s0 != s1)


# ---------------- Aggregates ----------------


def scan_shard(a: int, r: int, s: int, x_max: int, cap: int = DEFAULT_RHS_CAP) -> list[ScanRecord]:
    """All records with first coordinate a and coprime second coordinate <= x_max."""
    return [rs_solve(a, b, r, s, cap) for b in range(1, x_max + 1) if math.gcd(a, b) == 1]


def beiter_density(r: int, s: int, x_max: int, cap: int = DEFAULT_RHS_CAP) -> Fraction:
    """Fraction of ordered coprime pairs in [1, x_max]^2 with exactly one solvable side."""
    if x_max < 1:
        raise DomainError(f"need x_max >= 1, got {x_max}")
    hits = total = 0
    for a in range(1, x_max + 1):
        for rec in scan_shard(a, r, s, x_max, cap):
            total += 1
            hits += rec.exactly_one
    return Fraction(hits, total)


def density_curve(r: int, s: int, x_values, cap: int = DEFAULT_RHS_CAP) -> list[tuple[int, Fraction]]:
    return [(x, beiter_density(r, s, x, cap)) for x in x_values]


# ---------------- Serialization ----------------


def record_to_csv_row(rec: ScanRecord) -> tuple[str, ...]:
    return (
        str(rec.a),
        str(rec.b),
        str(rec.r),
        str(rec.s),
        "" if rec.rhs is None else str(rec.rhs),
        "1" if rec.integral else "0",
        "1" if rec.solvable_i0 else "0",
        "1" if rec.solvable_i1 else "0",
        "1" if rec.exactly_one else "0",
    )


def record_from_csv_row(row) -> ScanRecord:
    a, b, r, s, rhs, integral, s0, s1, one = row
    return ScanRecord(
        int(a),
        int(b),
        int(r),
        int(s),
        None if rhs == "" else int(rhs),
        integral == "1",
        s0 == "1",
        s1 == "1",
        one == "1",
    )


def record_to_json(rec: ScanRecord) -> dict:
    return {
        "a": str(rec.a),
        "b": str(rec.b),
        "r": str(rec.r),
        "s": str(rec.s),
        "rhs": None if rec.rhs is None else str(rec.rhs),
        "integral": rec.integral,
        "solvable_i0": rec.solvable_i0,
        "solvable_i1": rec.solvable_i1,
        "exactly_one": rec.exactly_one,
    }


def record_from_json(obj: dict) -> ScanRecord:
    return ScanRecord(
        int(obj["a"]),
        int(obj["b"]),
        int(obj["r"]),
        int(obj["s"]),
        None if obj["rhs"] is None else int(obj["rhs"]),
        bool(obj["integral"]),
        bool(obj["solvable_i0"]),
        bool(obj["solvable_i1"]),
        bool(obj["exactly_one"]),
    )


# ---------------- Resumable scans ----------------


def _read_existing(out_path: Path, fmt: str) -> tuple[int, int]:
    # (pairs, exactly_one hits) already on disk
    pairs = hits = 0
    with out_path.open(newline="") as fh:
        if fmt == "csv":
            reader = csv.reader(fh)
            header = next(reader, None)
            if header is not None and tuple(header) != SCAN_CSV_HEADER:
                raise DomainError(f"unexpected header in {out_path}")
            for row in reader:
                rec = record_from_csv_row(row)
                pairs += 1
                hits += rec.exactly_one
        else:
            for line in fh:
                line = line.strip()
                if line:
                    rec = record_from_json(json.loads(line))
                    pairs += 1
                    hits += rec.exactly_one
    return pairs, hits


def run_scan(
    r: int,
    s: int,
    x_max: int,
    out_path: str | Path,
    fmt: str = "csv",
    resume: bool = False,
    jobs: int = 1,
    cap: int = DEFAULT_RHS_CAP,
) -> dict:
    """Stream all shards to out_path with checkpointing; returns a summary.

    The checkpoint sits next to the output file and holds the id of the last
    shard fully written.  Output bytes do not depend on jobs or on where a
    previous run stopped.
    """
    if x_max < 1:
        raise DomainError(f"need x_max >= 1, got {x_max}")
    if fmt not in ("csv", "jsonl"):
        raise DomainError(f"scan format must be csv or jsonl, got {fmt!r}")
    out_path = Path(out_path)
    ckpt_path = out_path.with_name(out_path.name + ".checkpoint")
    done = 0
    pairs = hits = 0
    if resume and ckpt_path.exists() and out_path.exists():
        done = min(int(ckpt_path.read_text().strip() or 0), x_max)
        pairs, hits = _read_existing(out_path, fmt)
    mode = "a" if done else "w"
    shard_ids = range(done + 1, x_max + 1)
    worker = partial(scan_shard, r=r, s=s, x_max=x_max, cap=cap)
    with out_path.open(mode, newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n") if fmt == "csv" else None
        if fmt == "csv" and not done:
            writer.writerow(SCAN_CSV_HEADER)

        def _consume(shards: Iterator[tuple[int, list[ScanRecord]]]) -> None:
            nonlocal pairs, hits
            for shard_id, records in shards:
                for rec in records:
                    pairs += 1
                    hits += rec.exactly_one
                    if writer is not None:
                        writer.writerow(record_to_csv_row(rec))
                    else:
                        fh.write(json.dumps(record_to_json(rec)) + "\n")
                fh.flush()
                ckpt_path.write_text(f"{shard_id}\n")

        if jobs > 1 and len(shard_ids) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                _consume(zip(shard_ids, pool.map(worker, shard_ids)))
        else:
            _consume((i, worker(i)) for i in shard_ids)
    return {
        "r": r,
        "s": s,
        "x_max": x_max,
        "pairs": pairs,
        "exactly_one": hits,
        "density": Fraction(hits, pairs) if pairs else None,
        "last_shard": x_max,
        "metadata": dict(SCAN_METADATA),
    }
