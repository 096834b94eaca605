"""Integer sequence families fed to the split-equation classifier.

All sequences are 1-indexed.  Each family supports exact term generation and
modular term generation; the modular route exists because several families
(factorial powers, squared-lag recurrences) outgrow memory long before the
classifier runs out of questions to ask about them.

Also here: closed-form witnesses for consecutive Fibonacci pairs, squared and
cubed Fibonacci pairs, and general coprime-seeded Fibonacci-like pairs at
indices n with n mod 6 = 4.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

from .core import (
    DomainError,
    InvariantViolation,
    ResourceLimitError,
    SplitInstance,
    SplitSolution,
    mod_inverse,
)

FACTPOW_FULL_TERM_MAX = 6
MAX_TERM_BITS = 1_000_000


# ---------------- Fibonacci helpers ----------------


def fib_pair(n: int, mod: int | None = None) -> tuple[int, int]:
    """(F_n, F_{n+1}) with F_0 = 0, by fast doubling, optionally modulo mod."""
    if n < 0:
        raise DomainError(f"need n >= 0, got {n}")
    if mod is not None and mod < 1:
        raise DomainError(f"need mod >= 1, got {mod}")
    f, g = 0, 1
    for bit in bin(n)[2:]:
        c = f * (2 * g - f)
        d = f * f + g * g
        if bit == "1":
            f, g = d, c + d
        else:
            f, g = c, d
        if mod is not None:
            f %= mod
            g %= mod
    if mod is not None:
        return f % mod, g % mod
    return f, g


def fib(n: int) -> int:
    """F_n with F_1 = F_2 = 1."""
    return fib_pair(n)[0]


# ---------------- Sequence specs ----------------


@dataclass(frozen=True)
class FibonacciPower:
    """Terms F_n ** power."""

    power: int = 1

    def __post_init__(self) -> None:
        if self.power < 1:
            raise DomainError(f"power must be >= 1, got {self.power}")


@dataclass(frozen=True)
class FibonacciLike:
    """t_1 = t1, t_2 = t2 coprime, then t_n = t_{n-1} + t_{n-2}."""

    t1: int
    t2: int

    def __post_init__(self) -> None:
        if self.t1 < 1 or self.t2 < 1:
            raise DomainError(f"seeds must be positive, got ({self.t1}, {self.t2})")
        if math.gcd(self.t1, self.t2) != 1:
            raise DomainError(f"seeds must be coprime, got ({self.t1}, {self.t2})")


@dataclass(frozen=True)
class Balancing:
    """1, 6, 35, 204, ... with b_n = 6 b_{n-1} - b_{n-2}."""


@dataclass(frozen=True)
class LucasBalancing:
    """3, 17, 99, 577, ... same recurrence as Balancing."""


@dataclass(frozen=True)
class Naturals:
    """1, 2, 3, ..."""


@dataclass(frozen=True)
class Odds:
    """1, 3, 5, ..."""


@dataclass(frozen=True)
class Arithmetic:
    """a_n = p*n - r with p >= 1 and 0 <= r < p."""

    p: int
    r: int

    def __post_init__(self) -> None:
        if self.p < 1 or not 0 <= self.r < self.p:
            raise DomainError(f"need p >= 1 and 0 <= r < p, got (p={self.p}, r={self.r})")


@dataclass(frozen=True)
class KthPower:
    """a_n = n ** k."""

    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise DomainError(f"k must be >= 1, got {self.k}")


@dataclass(frozen=True)
class ShiftedGeometric:
    """a_n = a * r**(n-1) + 1 with r >= 2."""

    a: int
    r: int

    def __post_init__(self) -> None:
        if self.a < 1:
            raise DomainError(f"a must be >= 1, got {self.a}")
        if self.r < 2:
            raise DomainError(f"r must be >= 2, got {self.r}")


@dataclass(frozen=True)
class PowerRecurrence:
    """a_n = sum_i coeffs[i] * a_{n-1-i} ** powers[i], seeded by init."""

    coeffs: tuple[int, ...]
    powers: tuple[int, ...]
    init: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        object.__setattr__(self, "powers", tuple(self.powers))
        object.__setattr__(self, "init", tuple(self.init))
        s = len(self.coeffs)
        if s == 0 or len(self.powers) != s or len(self.init) != s:
            raise DomainError("coeffs, powers and init must be nonempty and equally long")
        if any(t < 0 for t in self.powers):
            raise DomainError("powers must be nonnegative")
        if any(a < 1 for a in self.init):
            raise DomainError("initial terms must be positive")

    @property
    def order(self) -> int:
        return len(self.coeffs)


@dataclass(frozen=True)
class FactorialPower:
    """a_n = (n!) ** (n!).  Full terms only up to n = 6; use term_mod beyond."""


@dataclass(frozen=True)
class Explicit:
    """A finite list of positive terms given verbatim."""

    terms: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", tuple(self.terms))
        if not self.terms or any(t < 1 for t in self.terms):
            raise DomainError("explicit terms must be a nonempty list of positive integers")


SequenceSpec = Union[
    FibonacciPower,
    FibonacciLike,
    Balancing,
    LucasBalancing,
    Naturals,
    Odds,
    Arithmetic,
    KthPower,
    ShiftedGeometric,
    PowerRecurrence,
    FactorialPower,
    Explicit,
]


def is_superlinear(spec: SequenceSpec) -> bool:
    """True when full terms grow too fast to materialize over a long window."""
    if isinstance(spec, FactorialPower):
        return True
    return isinstance(spec, PowerRecurrence) and max(spec.powers) >= 2


# ---------------- Term generation ----------------


def _powrec_next(spec: PowerRecurrence, window: tuple[int, ...]) -> int:
    # window holds (a_{n-s}, ..., a_{n-1}); lag i counts back from the end
    total = 0
    for i in range(spec.order):
        total += spec.coeffs[i] * window[-1 - i] ** spec.powers[i]
    return total


def iter_terms(spec: SequenceSpec, start: int, count: int) -> Iterator[int]:
    """Yield exact terms a_start, ..., a_{start+count-1}."""
    if start < 1 or count < 0:
        raise DomainError(f"need start >= 1 and count >= 0, got ({start}, {count})")
    end = start + count
    if isinstance(spec, FibonacciPower):
        f, g = fib_pair(start)
        for _ in range(count):
            yield f ** spec.power
            f, g = g, f + g
    elif isinstance(spec, (FibonacciLike, Balancing, LucasBalancing)):
        if isinstance(spec, FibonacciLike):
            x, y = spec.t1, spec.t2
            step = lambda x, y: (y, x + y)
        else:
            x, y = (1, 6) if isinstance(spec, Balancing) else (3, 17)
            step = lambda x, y: (y, 6 * y - x)
        for n in range(1, end):
            if n >= start:
                yield x
            x, y = step(x, y)
    elif isinstance(spec, (Naturals, Odds, Arithmetic, KthPower, ShiftedGeometric)):
        for n in range(start, end):
            yield term(spec, n)
    elif isinstance(spec, PowerRecurrence):
        window = list(spec.init)
        for n in range(1, end):
            if n <= len(window):
                t = window[n - 1]
            else:
                t = _powrec_next(spec, tuple(window[-spec.order:]))
                if t < 1:
                    raise DomainError(f"power recurrence produced a nonpositive term at n={n}")
                if t.bit_length() > MAX_TERM_BITS:
                    raise ResourceLimitError(
                        f"term at n={n} exceeds {MAX_TERM_BITS} bits; use term_mod instead"
                    )
                window.append(t)
                window = window[-spec.order:]
            if n >= start:
                yield t
    elif isinstance(spec, FactorialPower):
        for n in range(start, end):
            yield term(spec, n)
    elif isinstance(spec, Explicit):
        if end - 1 > len(spec.terms):
            raise DomainError(f"explicit sequence has {len(spec.terms)} terms, asked through {end - 1}")
        yield from spec.terms[start - 1 : end - 1]
    else:
        raise DomainError(f"unknown sequence spec {spec!r}")


def term(spec: SequenceSpec, n: int) -> int:
    """Exact value of a_n (1-indexed)."""
    if n < 1:
        raise DomainError(f"terms are 1-indexed, got n={n}")
    if isinstance(spec, FibonacciPower):
        return fib(n) ** spec.power
    if isinstance(spec, FibonacciLike):
        if n == 1:
            return spec.t1
        f, g = fib_pair(n - 2)
        return f * spec.t1 + g * spec.t2
    if isinstance(spec, Naturals):
        return n
    if isinstance(spec, Odds):
        return 2 * n - 1
    if isinstance(spec, Arithmetic):
        return spec.p * n - spec.r
    if isinstance(spec, KthPower):
        return n ** spec.k
    if isinstance(spec, ShiftedGeometric):
        return spec.a * spec.r ** (n - 1) + 1
    if isinstance(spec, FactorialPower):
        if n > FACTPOW_FULL_TERM_MAX:
            raise ResourceLimitError(
                f"full (n!)**(n!) terms stop at n = {FACTPOW_FULL_TERM_MAX}; use term_mod"
            )
        f = math.factorial(n)
        return f ** f
    for t in iter_terms(spec, n, 1):
        return t
    raise DomainError(f"unknown sequence spec {spec!r}")


# ---------------- Modular term generation ----------------


def _factorial_capped(n: int, cap: int) -> int:
    # min-effort n!: stop multiplying once the product clears cap
    f = 1
    for i in range(2, n + 1):
        f *= i
        if f > cap:
            break
    return f


def _factorial_mod(n: int, m: int) -> int:
    f = 1 % m
    for i in range(2, n + 1):
        f = f * i % m
    return f


def _factorize(m: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        out.append((m, 1))
    return out


def _factpow_mod_primepower(n: int, p: int, e: int) -> int:
    q = p**e
    v = 0
    pk = p
    while pk <= n:
        v += n // pk
        pk *= p
    if v:
        # p-valuation of (n!)^(n!) is v * n!; almost always saturates q
        if v * _factorial_capped(n, e) >= e:
            return 0
        f = math.factorial(n)
        return pow(f, f, q)
    phi = q // p * (p - 1)
    base = _factorial_mod(n, q)
    exp = _factorial_mod(n, phi) if phi > 1 else 0
    return pow(base, exp, q)


def _crt(pairs: list[tuple[int, int]]) -> int:
    r0, m0 = 0, 1
    for r, m in pairs:
        t = (r - r0) * mod_inverse(m0, m) % m if m > 1 else 0
        r0 = r0 + m0 * t
        m0 *= m
    return r0 % m0


def term_mod(spec: SequenceSpec, n: int, m: int) -> int:
    """a_n mod m without materializing the full term."""
    if n < 1:
        raise DomainError(f"terms are 1-indexed, got n={n}")
    if m < 1:
        raise DomainError(f"modulus must be >= 1, got {m}")
    if m == 1:
        return 0
    if isinstance(spec, FibonacciPower):
        return pow(fib_pair(n, m)[0], spec.power, m)
    if isinstance(spec, FibonacciLike):
        if n == 1:
            return spec.t1 % m
        f, g = fib_pair(n - 2, m)
        return (f * spec.t1 + g * spec.t2) % m
    if isinstance(spec, (Balancing, LucasBalancing)):
        x, y = (1, 6) if isinstance(spec, Balancing) else (3, 17)
        x, y = x % m, y % m
        for _ in range(n - 1):
            x, y = y, (6 * y - x) % m
        return x
    if isinstance(spec, Naturals):
        return n % m
    if isinstance(spec, Odds):
        return (2 * n - 1) % m
    if isinstance(spec, Arithmetic):
        return (spec.p * n - spec.r) % m
    if isinstance(spec, KthPower):
        return pow(n, spec.k, m)
    if isinstance(spec, ShiftedGeometric):
        return (spec.a * pow(spec.r, n - 1, m) + 1) % m
    if isinstance(spec, PowerRecurrence):
        window = [a % m for a in spec.init]
        if n <= len(window):
            return window[n - 1]
        for _ in range(len(window) + 1, n + 1):
            t = 0
            for i in range(spec.order):
                t += spec.coeffs[i] * pow(window[-1 - i], spec.powers[i], m)
            window.append(t % m)
            window = window[-spec.order:]
        return window[-1]
    if isinstance(spec, FactorialPower):
        if n == 1:
            return 1 % m
        return _crt([(_factpow_mod_primepower(n, p, e), p**e) for p, e in _factorize(m)])
    if isinstance(spec, Explicit):
        return term(spec, n) % m
    raise DomainError(f"unknown sequence spec {spec!r}")


# ---------------- Closed-form witnesses ----------------


@dataclass(frozen=True)
class OddrResult:
    """The unique odd r in [1, u] with v*r = sign mod (u odd ? u : 2u)."""

    r: int
    sign: int


def oddr(u: int, v: int) -> OddrResult:
    """Find the odd multiplier certifying which equation variant applies.

    For coprime u, v there is exactly one odd r in [1, u] with v*r = +-1
    modulo u (u odd) or modulo 2u (u even).  u = 1 returns (1, +1) by
    convention.
    """
    if u < 1 or v < 1:
        raise DomainError(f"need positive u, v, got ({u}, {v})")
    if math.gcd(u, v) != 1:
        raise DomainError(f"u and v must be coprime, got ({u}, {v})")
    if u == 1:
        return OddrResult(1, 1)
    modulus = u if u % 2 else 2 * u
    hits = []
    for r in range(1, u + 1, 2):
        p = v * r % modulus
        if p == 1:
            hits.append(OddrResult(r, 1))
        elif p == modulus - 1:
            hits.append(OddrResult(r, -1))
    if len(hits) != 1:
        raise InvariantViolation(f"expected one odd r for ({u}, {v}), found {len(hits)}")
    return hits[0]


def phi_psi(u: int, v: int, n: int, r: int, variant: int) -> tuple[Fraction, Fraction]:
    """Closed-form candidate (x, y) for the seed pair (u, v) at even index n.

    variant 1 uses the inner fractions ((u-r)v + 1)/u and (vr - 1)/u, variant 0
    flips both signs.  The inner fractions must be integers; the returned pair
    is exact and may be negative or half-integral, which callers validate.
    """
    if variant not in (0, 1):
        raise DomainError(f"variant must be 0 or 1, got {variant}")
    if u == 0:
        raise DomainError("u must be nonzero")
    if n < 2 or n % 2:
        raise DomainError(f"n must be even and >= 2, got {n}")
    s = 1 if variant == 1 else -1
    num_phi = (u - r) * v + s
    if num_phi % u:
        raise DomainError(f"((u-r)*v {'+' if s > 0 else '-'} 1)/u is not an integer for u={u}, v={v}, r={r}")
    num_psi = v * r - s
    if num_psi % u:
        raise DomainError(f"(v*r {'-' if s > 0 else '+'} 1)/u is not an integer for u={u}, v={v}, r={r}")
    f2, f1 = fib_pair(n - 2)  # (F_{n-2}, F_{n-1})
    f0 = f2 + f1  # F_n
    phi = Fraction((u - r) * f1 + (num_phi // u) * f0 - 1, 2)
    psi = Fraction(r * f2 + (num_psi // u) * f1 - 1, 2)
    return phi, psi


def fiblike_pair(u: int, v: int, n: int) -> tuple[int, int]:
    """(t_n, t_{n+1}) for the sequence seeded t_1 = u, t_2 = v."""
    if n < 2:
        if n == 1:
            return u, v
        raise DomainError(f"need n >= 1, got {n}")
    f2, f1 = fib_pair(n - 2)
    return f2 * u + f1 * v, f1 * u + (f2 + f1) * v


def closed_form_mod6_4(u: int, v: int, n: int) -> SplitSolution:
    """Solve the pair (t_n, t_{n+1}) in closed form when n mod 6 = 4.

    The sign attached to the odd multiplier from ``oddr`` picks the variant;
    the resulting witness is validated against the instance before returning.
    """
    if u < 1 or v < 1 or math.gcd(u, v) != 1:
        raise DomainError(f"seeds must be positive and coprime, got ({u}, {v})")
    if n < 4 or n % 6 != 4:
        raise DomainError(f"need n = 4 mod 6 and n >= 4, got {n}")
    sel = oddr(u, v)
    variant = 1 if sel.sign > 0 else 0
    phi, psi = phi_psi(u, v, n, sel.r, variant)
    if phi.denominator != 1 or psi.denominator != 1:
        raise InvariantViolation(f"half-integral witness for ({u}, {v}, {n}): {phi}, {psi}")
    x, y = int(phi), int(psi)
    if x < 0 or y < 0:
        raise InvariantViolation(f"negative witness for ({u}, {v}, {n}): ({x}, {y})")
    tn, tn1 = fiblike_pair(u, v, n)
    inst = SplitInstance(tn, tn1)
    if inst.g != 1:
        raise InvariantViolation(f"pair ({tn}, {tn1}) not coprime for seeds ({u}, {v})")
    if variant + tn * x + tn1 * y != inst.rhs:
        raise InvariantViolation(f"witness fails the equation for ({u}, {v}, {n})")
    return SplitSolution(variant, x, y)


def fib_identity_solution(n: int) -> SplitSolution:
    """Witness for the pair (F_n, F_{n+1}) when n mod 6 is 0 or 4."""
    if n < 6 or n % 6 not in (0, 4):
        raise DomainError(f"need n >= 6 with n mod 6 in {{0, 4}}, got {n}")
    if n % 6 == 0:
        x, rem = divmod(fib(n - 1) - 1, 2)
        delta = 0
        y = x
    else:
        x, rem = divmod(fib(n) - 1, 2)
        y, rem2 = divmod(fib(n - 2) - 1, 2)
        rem |= rem2
        delta = 1
    if rem:
        raise InvariantViolation(f"parity failure at n={n}")
    return SplitSolution(delta, x, y)


def fib_square_solution(n: int) -> SplitSolution:
    """Witness for (F_n^2, F_{n+1}^2); needs n mod 6 in {0, 2, 3, 5}."""
    if n < 2 or n % 6 not in (0, 2, 3, 5):
        raise DomainError(f"need n >= 2 with n mod 6 in {{0, 2, 3, 5}}, got {n}")
    f1, f0 = fib_pair(n - 1)  # (F_{n-1}, F_n)
    half, rem = divmod(f1 * f1 - 1, 2)
    if rem:
        raise InvariantViolation(f"F_{n - 1} is even at n={n}")
    return SplitSolution(0, f0 * f0 - half - 1, half)


def fib_cube_solution(m: int) -> SplitSolution:
    """Witness for (F_{2m-1}^3, F_{2m}^3), m >= 2."""
    if m < 2:
        raise DomainError(f"need m >= 2, got {m}")
    x = 0
    y = 0
    f, g = 1, 1  # F_1, F_2
    for k in range(1, 2 * m):
        c = f**3
        x = c - x  # running alternating sum, newest term positive
        if 2 <= k <= 2 * m - 2:
            y += c
        f, g = g, f + g
    return SplitSolution(0, x, y)


# ---------------- Text round-trip ----------------


def _ints(body: str, what: str) -> list[int]:
    try:
        return [int(p) for p in body.split(",")]
    except ValueError as exc:
        raise DomainError(f"bad {what} in sequence spec: {body!r}") from exc


def parse_spec(text: str) -> SequenceSpec:
    """Parse the compact CLI form, e.g. fib^2, fiblike:3,5, powrec:c=1,1;t=1,2;init=1,1."""
    t = text.strip()
    plain = {
        "fib": FibonacciPower(1),
        "nat": Naturals(),
        "odds": Odds(),
        "bal": Balancing(),
        "lucasbal": LucasBalancing(),
        "factpow": FactorialPower(),
    }
    if t in plain:
        return plain[t]
    try:
        if t.startswith("fib^"):
            return FibonacciPower(int(t[4:]))
        if t.startswith("n^"):
            return KthPower(int(t[2:]))
    except ValueError as exc:
        raise DomainError(f"bad exponent in sequence spec: {text!r}") from exc
    if t.startswith("fiblike:"):
        vals = _ints(t[8:], "seeds")
        if len(vals) != 2:
            raise DomainError(f"fiblike takes two seeds, got {text!r}")
        return FibonacciLike(*vals)
    if t.startswith("arith:"):
        vals = _ints(t[6:], "parameters")
        if len(vals) != 2:
            raise DomainError(f"arith takes p,r, got {text!r}")
        return Arithmetic(*vals)
    if t.startswith("geo:"):
        vals = _ints(t[4:], "parameters")
        if len(vals) != 2:
            raise DomainError(f"geo takes a,r, got {text!r}")
        return ShiftedGeometric(*vals)
    if t.startswith("explicit:"):
        return Explicit(tuple(_ints(t[9:], "terms")))
    if t.startswith("powrec:"):
        parts = dict()
        for piece in t[7:].split(";"):
            if "=" not in piece:
                raise DomainError(f"bad powrec field {piece!r} in {text!r}")
            key, _, body = piece.partition("=")
            parts[key.strip()] = _ints(body, f"powrec {key}")
        if set(parts) != {"c", "t", "init"}:
            raise DomainError(f"powrec needs c=, t= and init=, got {text!r}")
        return PowerRecurrence(tuple(parts["c"]), tuple(parts["t"]), tuple(parts["init"]))
    raise DomainError(f"unrecognized sequence spec: {text!r}")


def format_spec(spec: SequenceSpec) -> str:
    """Canonical text form; parse_spec(format_spec(s)) == s."""
    if isinstance(spec, FibonacciPower):
        return "fib" if spec.power == 1 else f"fib^{spec.power}"
    if isinstance(spec, FibonacciLike):
        return f"fiblike:{spec.t1},{spec.t2}"
    if isinstance(spec, Balancing):
        return "bal"
    if isinstance(spec, LucasBalancing):
        return "lucasbal"
    if isinstance(spec, Naturals):
        return "nat"
    if isinstance(spec, Odds):
        return "odds"
    if isinstance(spec, Arithmetic):
        return f"arith:{spec.p},{spec.r}"
    if isinstance(spec, KthPower):
        return f"n^{spec.k}"
    if isinstance(spec, ShiftedGeometric):
        return f"geo:{spec.a},{spec.r}"
    if isinstance(spec, PowerRecurrence):
        c = ",".join(map(str, spec.coeffs))
        t = ",".join(map(str, spec.powers))
        i = ",".join(map(str, spec.init))
        return f"powrec:c={c};t={t};init={i}"
    if isinstance(spec, FactorialPower):
        return "factpow"
    if isinstance(spec, Explicit):
        return "explicit:" + ",".join(map(str, spec.terms))
    raise DomainError(f"unknown sequence spec {spec!r}")
