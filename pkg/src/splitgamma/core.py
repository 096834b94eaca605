"""Exact arithmetic core for the split equation pair.

For positive integers a, b with g = gcd(a, b), write a' = a/g, b' = b/g and
R = (a' - 1)(b' - 1)/2.  Exactly one of

    a'x + b'y = R          (delta = 0)
    1 + a'x + b'y = R      (delta = 1)

is solvable in nonnegative integers x, y, and the solution is unique.
``gamma`` computes the solvable delta from inverse parities alone,
``solve_split`` produces the witness through one modular inverse, and
``brute_force_split`` re-derives everything by plain enumeration so the fast
route can be audited against it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

__all__ = [
    "DomainError",
    "ResourceLimitError",
    "InvariantViolation",
    "gcd",
    "egcd",
    "mod_inverse",
    "theta",
    "gamma",
    "SplitInstance",
    "SplitSolution",
    "solve_split",
    "BruteForceReport",
    "brute_force_split",
    "DEFAULT_BRUTE_CAP",
]


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ResourceLimitError(RuntimeError):
    """A computation would exceed an explicit size or iteration cap."""


class InvariantViolation(RuntimeError):
    """An internal consistency check failed.  Seeing this means a bug."""


def _check_pair(a: int, b: int) -> None:
    if a < 1 or b < 1:
        raise DomainError(f"need positive integers, got a={a}, b={b}")


def gcd(a: int, b: int) -> int:
    """gcd of two nonnegative integers, rejecting the undefined (0, 0) case."""
    if a == 0 and b == 0:
        raise DomainError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid.  Returns (g, x, y) with a*x + b*y = g = gcd(a, b)."""
    r0, r1 = a, b
    s0, s1 = 1, 0
    t0, t1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return r0, s0, t0


def mod_inverse(a: int, m: int) -> int:
    """Inverse of a modulo m in [1, m-1], via the extended Euclidean algorithm."""
    if m < 2:
        raise DomainError(f"modulus must be >= 2, got {m}")
    a %= m
    g, x, _ = egcd(a, m)
    if g != 1:
        raise DomainError(f"{a} is not invertible modulo {m} (gcd = {g})")
    return x % m


def theta(a: int, b: int) -> int:
    """Inverse of a/gcd(a,b) modulo b/gcd(a,b), as an integer in [1, b/g - 1].

    Undefined when b/gcd(a,b) = 1, i.e. when b divides a.
    """
    _check_pair(a, b)
    g = math.gcd(a, b)
    b_red = b // g
    if b_red == 1:
        raise DomainError(f"theta({a}, {b}) undefined: b/gcd = 1")
    return mod_inverse(a // g, b_red)


def gamma(a: int, b: int) -> int:
    """Which delta in {0, 1} makes the split equation solvable for the pair (a, b).

    Divisibility either way forces 0.  Otherwise the answer is read off the
    parity of a single modular inverse: with a' = a/gcd(a,b), the value is 0
    exactly when theta(b, a) is odd (a' odd) or theta(a, b) is odd (a' even).
    """
    _check_pair(a, b)
    if b % a == 0 or a % b == 0:
        return 0
    g = math.gcd(a, b)
    if (a // g) % 2 == 1:
        return 0 if theta(b, a) % 2 == 1 else 1
    return 0 if theta(a, b) % 2 == 1 else 1


@dataclass(frozen=True)
class SplitInstance:
    """A pair (a, b) with its gcd-reduced form and common right-hand side."""

    a: int
    b: int
    g: int = field(init=False)
    a_red: int = field(init=False)
    b_red: int = field(init=False)
    rhs: int = field(init=False)

    def __post_init__(self) -> None:
        _check_pair(self.a, self.b)
        g = math.gcd(self.a, self.b)
        a_red = self.a // g
        b_red = self.b // g
        prod = (a_red - 1) * (b_red - 1)
        if prod % 2:
            raise InvariantViolation(f"odd product for reduced pair ({a_red}, {b_red})")
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "a_red", a_red)
        object.__setattr__(self, "b_red", b_red)
        object.__setattr__(self, "rhs", prod // 2)


@dataclass(frozen=True)
class SplitSolution:
    """A witness (delta, x, y) with delta + a'x + b'y = (a'-1)(b'-1)/2."""

    delta: int
    x: int
    y: int
    unique: bool = True


def solve_split(a: int, b: int) -> SplitSolution:
    """The unique nonnegative solution of the solvable equation for (a, b).

    Works on the gcd-reduced pair: x is the least nonnegative residue of
    (R - delta) / a' modulo b', and y follows by exact division.
    """
    inst = SplitInstance(a, b)
    if inst.a_red == 1 or inst.b_red == 1:
        return SplitSolution(0, 0, 0)
    delta = gamma(a, b)
    x = ((inst.rhs - delta) * mod_inverse(inst.a_red, inst.b_red)) % inst.b_red
    rem = inst.rhs - delta - inst.a_red * x
    if rem < 0 or rem % inst.b_red:
        raise InvariantViolation(f"no nonnegative witness for ({a}, {b}) at delta={delta}")
    return SplitSolution(delta, x, rem // inst.b_red)


@dataclass(frozen=True)
class BruteForceReport:
    """All enumerated solutions for both deltas, plus the per-delta counts."""

    solutions: tuple[SplitSolution, ...]
    counts: tuple[int, int]

    @property
    def solution(self) -> SplitSolution:
        if len(self.solutions) != 1:
            raise InvariantViolation(f"expected exactly one solution, found {len(self.solutions)}")
        return self.solutions[0]


DEFAULT_BRUTE_CAP = 10_000_000


def brute_force_split(a: int, b: int, max_iterations: int = DEFAULT_BRUTE_CAP) -> BruteForceReport:
    """Enumerate x for both deltas and report every solution of the pair.

    The iteration budget counts candidate x values across both equations and
    is checked up front, so oversized instances fail fast.
    """
    inst = SplitInstance(a, b)
    a_red, b_red, rhs = inst.a_red, inst.b_red, inst.rhs
    planned = sum((rhs - d) // a_red + 1 for d in (0, 1) if rhs - d >= 0)
    if planned > max_iterations:
        raise ResourceLimitError(f"enumeration needs {planned} iterations, cap is {max_iterations}")
    found: list[tuple[int, int, int]] = []
    counts = [0, 0]
    for delta in (0, 1):
        target = rhs - delta
        if target < 0:
            continue
        for x in range(target // a_red + 1):
            rem = target - a_red * x
            if rem % b_red == 0:
                counts[delta] += 1
                found.append((delta, x, rem // b_red))
    unique = len(found) == 1
    sols = tuple(SplitSolution(d, x, y, unique=unique) for d, x, y in found)
    return BruteForceReport(sols, (counts[0], counts[1]))
