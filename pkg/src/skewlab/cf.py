"""Exact continued-fraction arithmetic over arbitrary-precision integers.

An angle is a finite (extendable) list of partial quotients [a0; a1, a2, ...]
with a0 >= 0 and ak >= 1 for k >= 1.  All convergents are cached at
construction; every real-number question is answered through exact rational
enclosures built from consecutive convergents, never through floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence


class InsufficientDepthError(Exception):
    """The stored partial quotients cannot bracket the requested quantity."""


def _log_int(n: int) -> float:
    """Natural log of a positive big integer without float overflow."""
    if n <= 0:
        raise ValueError("log of non-positive integer")
    shift = max(0, n.bit_length() - 53)
    return math.log(n >> shift) + shift * math.log(2)


@dataclass(frozen=True)
class CFAngle:
    """An irrational angle represented by a truncated continued fraction.

    Invariants (checked at construction):
      * p[k+1] = a[k+1] p[k] + p[k-1], q[k+1] = a[k+1] q[k] + q[k-1]
        with seeds p[-1] = 1, p[0] = 0, q[-1] = 0, q[0] = 1;
      * gcd(p[k], q[k]) = 1 for all k;
      * q[k] strictly increasing for k >= 1 once q[k] > 1.
    """

    partial_quotients: tuple
    p: tuple = field(repr=False)
    q: tuple = field(repr=False)

    @property
    def depth(self) -> int:
        """Number of convergents beyond the 0-th (== index of the deepest)."""
        return len(self.partial_quotients) - 1

    def convergent(self, k: int) -> Fraction:
        return Fraction(self.p[k], self.q[k])

    def enclosure(self) -> tuple:
        """Exact rational interval (lo, hi) containing every extension.

        Consecutive convergents bracket the value of any infinite extension;
        the deepest two give the tightest stored bracket, of width
        1/(q[n-1] q[n]).
        """
        if self.depth < 1:
            raise InsufficientDepthError("need at least one partial quotient beyond a0")
        a = self.convergent(self.depth - 1)
        b = self.convergent(self.depth)
        return (a, b) if a <= b else (b, a)

    def enclosure_width(self) -> Fraction:
        lo, hi = self.enclosure()
        return hi - lo

    def value(self) -> Fraction:
        """Midpoint of the deepest enclosure (handy for display only)."""
        lo, hi = self.enclosure()
        return (lo + hi) / 2

    def serialize(self) -> str:
        return "cf: " + " ".join(str(a) for a in self.partial_quotients)


def cf_from_partial_quotients(aq: Sequence[int]) -> CFAngle:
    """Build a CFAngle, computing and verifying all convergents.

    Rejects malformed expansions: empty input, a0 < 0, or ak <= 0 for k >= 1.
    """
    aq = tuple(int(a) for a in aq)
    if not aq:
        raise ValueError("empty partial-quotient sequence")
    if aq[0] < 0:
        raise ValueError("a0 must be >= 0")
    for k, a in enumerate(aq[1:], start=1):
        if a <= 0:
            raise ValueError(f"partial quotient a{k} = {a} must be >= 1")
    p_prev, p_cur = 1, 0   # p[-1], p[0]
    q_prev, q_cur = 0, 1   # q[-1], q[0]
    ps = [p_cur]
    qs = [q_cur]
    for a in aq[1:]:
        p_prev, p_cur = p_cur, a * p_cur + p_prev
        q_prev, q_cur = q_cur, a * q_cur + q_prev
        ps.append(p_cur)
        qs.append(q_cur)
    angle = CFAngle(partial_quotients=aq, p=tuple(ps), q=tuple(qs))
    _verify_convergents(angle)
    return angle


def _verify_convergents(angle: CFAngle) -> None:
    a, p, q = angle.partial_quotients, angle.p, angle.q
    for k in range(len(a)):
        if math.gcd(p[k], q[k]) != 1:
            raise AssertionError(f"gcd(p{k}, q{k}) != 1")
        if k >= 1:
            # a[k+1] q[k] < q[k+1] <= (a[k+1]+1) q[k] with the convention q[-1]=0
            if k + 1 < len(a):
                ak1 = a[k + 1]
                if not (ak1 * q[k] < q[k + 1] <= (ak1 + 1) * q[k]):
                    raise AssertionError(f"recurrence bound violated at k={k}")


def extend(angle: CFAngle, more: Iterable[int]) -> CFAngle:
    return cf_from_partial_quotients(angle.partial_quotients + tuple(more))


def _fold_distance(x: Fraction) -> Fraction:
    """Distance of an exact rational to the nearest integer."""
    fl = math.floor(x)
    frac = x - fl
    return min(frac, 1 - frac)


def dist_to_int(angle: CFAngle, q: int, width: Fraction | None = None) -> tuple:
    """Exact rational enclosure [lo, hi] of ||q*alpha||.

    Uses the bracketing property of consecutive convergents.  The enclosure
    width is at most q/(q[n-1] q[n]) for the deepest stored n; if `width` is
    given and that cannot be met, raises InsufficientDepthError.
    """
    if q < 1:
        raise ValueError("q must be >= 1")
    lo, hi = angle.enclosure()
    a, b = q * lo, q * hi
    if b - a >= Fraction(1, 2):
        raise InsufficientDepthError(
            f"enclosure of {q}*alpha has width {float(b - a):.3g} >= 1/2"
        )
    if width is not None and b - a > width:
        raise InsufficientDepthError(
            f"requested width {width} unreachable; have {b - a}"
        )
    # nearest-integer distance over the interval [a, b] (width < 1/2)
    da, db = _fold_distance(a), _fold_distance(b)
    if math.floor(a) != math.floor(b) or math.ceil(a) != math.ceil(b):
        # an integer lies inside the interval
        return (Fraction(0), max(da, db))
    # does the half-integer maximum lie inside?
    half = Fraction(2 * math.floor(a) + 1, 2)
    if a <= half <= b:
        return (min(da, db), Fraction(1, 2))
    return (min(da, db), max(da, db))


def _fold_interval_num(r: int, w: int, D: int) -> tuple:
    """Enclosure of the distance-to-multiples-of-D over [r, r+w], r in [0, D).

    Requires 2w < D.  Returns integer numerators (lo, hi) on the D scale.
    """
    if r + w >= D:  # interval wraps a multiple of D
        return 0, max(D - r, r + w - D)
    f_a = min(r, D - r)
    f_b = min(r + w, D - (r + w))
    if 2 * r <= D <= 2 * (r + w):  # the half-way maximum lies inside
        return min(f_a, f_b), (D + 1) // 2
    return min(f_a, f_b), max(f_a, f_b)


def dist_to_int_exact_num(angle: CFAngle, q: int) -> tuple:
    """Integer-arithmetic enclosure of ||q*alpha|| as (lo_num, hi_num, den).

    Fast path used by exhaustive scans: any extension of alpha lies in
    [A/D, (A+1)/D] where D = q[n-1] q[n] and the bracket has unit numerator
    width, so q*alpha lies in [qA/D, (qA+q)/D].
    """
    n = angle.depth
    if n < 1:
        raise InsufficientDepthError("need depth >= 1")
    D = angle.q[n - 1] * angle.q[n]
    A = min(angle.p[n - 1] * angle.q[n], angle.p[n] * angle.q[n - 1])
    if 2 * q >= D:
        raise InsufficientDepthError("interval too wide for fold")
    lo, hi = _fold_interval_num((q * A) % D, q, D)
    return lo, hi, D


def type_estimate(angle: CFAngle, depth: int) -> float:
    """Finite-truncation proxy for the approximation type of the angle.

    Returns max over 1 <= n < depth of log q[n+1] / log q[n], skipping
    degenerate levels with q[n] = 1 (their ratio is undefined and the
    asymptotic quantity ignores finitely many terms).
    """
    if depth < 2:
        raise ValueError("depth must be >= 2")
    if depth > angle.depth:
        raise ValueError(f"depth {depth} exceeds available {angle.depth}")
    best = 1.0
    for n in range(1, depth):
        if angle.q[n] <= 1:
            continue
        ratio = _log_int(angle.q[n + 1]) / _log_int(angle.q[n])
        best = max(best, ratio)
    return best


def round_fraction(x: Fraction) -> int:
    """Round-half-up of an exact rational."""
    return math.floor(x + Fraction(1, 2))


def to_fixed_point(angle: CFAngle, bits: int) -> int:
    """round(alpha * 2^bits) computed from the exact enclosure.

    Requires the enclosure width to be below 2^-bits so the result is
    correct to within one unit in the last place.
    """
    if bits < 0:
        raise ValueError("bits must be >= 0")
    lo, hi = angle.enclosure()
    if hi - lo >= Fraction(1, 2 ** bits) and bits > 0:
        raise InsufficientDepthError(
            f"enclosure width {float(hi - lo):.3g} too wide for {bits} bits"
        )
    return round_fraction(((lo + hi) / 2) * 2 ** bits)


def best_approximation_violations(angle: CFAngle, q_max: int) -> list:
    """Exhaustively test the best-approximation property up to q_max.

    For every convergent denominator q_n <= q_max checks that the exact
    enclosure of ||q' alpha|| strictly exceeds that of ||q_n alpha|| for all
    1 <= q' < q_n (comparisons are made interval-strict where widths permit;
    incomparable pairs are skipped).  Returns the list of violations.
    """
    n = angle.depth
    D = angle.q[n - 1] * angle.q[n]
    A = min(angle.p[n - 1] * angle.q[n], angle.p[n] * angle.q[n - 1])

    def interval(qq: int) -> tuple:
        return _fold_interval_num((qq * A) % D, qq, D)

    violations = []
    for k in range(1, n + 1):
        qk = angle.q[k]
        if qk > q_max or qk == 1:
            continue
        _, hi_k = interval(qk)
        for qp in range(1, qk):
            lo_p, _ = interval(qp)
            if lo_p <= hi_k:  # not strictly larger -> violation (or too wide)
                violations.append((qk, qp))
    return violations


def parse_cf_line(line: str) -> CFAngle:
    """Parse the plain-text serialization `cf: a0 a1 a2 ...`."""
    line = line.strip()
    if not line.startswith("cf:"):
        raise ValueError("not a cf: line")
    return cf_from_partial_quotients([int(t) for t in line[3:].split()])


def serialize_fixed_point(value: int, bits: int) -> str:
    return f"0x{value:x} bits={bits}"


def parse_fixed_point(text: str) -> tuple:
    hex_part, bits_part = text.split()
    if not bits_part.startswith("bits="):
        raise ValueError("missing bits= annotation")
    return int(hex_part, 16), int(bits_part[5:])
