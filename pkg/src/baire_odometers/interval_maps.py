"""Interval realizations of the odometers, in exact rational arithmetic.

The piecewise maps (Gauss map, backward/Renyi map, the dyadic interval
translation) act on rationals; the corresponding odometers have closed forms:

* gauss_odometer: Moebius formula with Fibonacci coefficients on the branch
  x in [1/(n+1), 1/n); with these left-closed branches the formula agrees
  with the cyclic word action everywhere on (0, 1], including 1/M and the
  fixed point 1 (the n=0 row is the identity, using f(-1) = 1).
* renyi_odometer: x -> 1/(2*floor(1/(1-x)) + 1 - 1/(1-x)) on [0, 1).
* k_gauss_odometer: the same Moebius scheme over the two k-Fibonacci
  sequences b (0, 1, k, ...) and d (1, 1, k+1, ...), restricted to rationals
  whose continued-fraction digits are all >= k.  With m the first digit and
  j = m - k the coefficients are b_j - m*d_j, d_j and b_{j+1} - m*d_{j+1},
  d_{j+1}; this indexing reduces exactly to the k=1 formula.  The
  index-shifted variant k_gauss_odometer_shifted is kept for comparison; it
  fails the word-action oracle already at k=2 on [1/3, 1/2).

A generic countable-Markov-interval odometer (cmi_odometer) recodes a point
through any supplied branch system, applies the finite-word action, and maps
back through the inverse branches; the shipped Gauss/Renyi/restricted-Gauss
instances agree with the closed forms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable

from .codecs import cf_decode, cf_encode
from .word_actions import Policy, step as word_step
from .words import FiniteWord


def gauss(x: Fraction) -> Fraction:
    """Fractional part of 1/x, for x in (0, 1]."""
    if not 0 < x <= 1:
        raise ValueError(f"{x} outside (0, 1]")
    p, q = x.numerator, x.denominator
    return Fraction(q % p, p)


def renyi(x: Fraction) -> Fraction:
    """Fractional part of 1/(1-x), for x in [0, 1); fixes 0."""
    if not 0 <= x < 1:
        raise ValueError(f"{x} outside [0, 1)")
    p, q = x.numerator, x.denominator
    return Fraction(q % (q - p), q - p)


def dyadic_interval_step(x: Fraction) -> Fraction:
    """x + 3/2^n - 1 on the branch [1 - 2^(1-n), 1 - 2^(-n)); domain [0, 1)."""
    if not 0 <= x < 1:
        raise ValueError(f"{x} outside [0, 1)")
    n = 1
    while x >= 1 - Fraction(1, 1 << n):
        n += 1
    return x + Fraction(3, 1 << n) - 1


@dataclass(frozen=True)
class FibPair:
    """n-th values of the two k-Fibonacci sequences b and d.

    b(0)=0, b(1)=1 and d(0)=1, d(1)=1, both with the recurrence
    t(n+1) = k*t(n) + t(n-1); d(n) = b(n) + b(n-1) for n >= 1.
    """

    n: int
    b: int
    d: int


def fib(k: int, n: int) -> FibPair:
    if k < 1 or n < 0:
        raise ValueError("need k >= 1 and n >= 0")
    return FibPair(n, _b(k, n), _b(k, n) + _b(k, n - 1) if n >= 1 else 1)


def _b(k: int, n: int) -> int:
    # b(-1) = 1 and b(-2) = -k extend the recurrence below n = 0
    if n == -1:
        return 1
    if n == -2:
        return -k
    if n < -2:
        raise ValueError("index below -2")
    prev, cur = 1, 0
    for _ in range(n):
        prev, cur = cur, k * cur + prev
    return cur


def golden_mean_k(k: int, n: int) -> Fraction:
    """Exact convergent b(n)/b(n+1) of 1/phi_k, phi_k = (k + sqrt(k^2+4))/2."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Fraction(_b(k, n), _b(k, n + 1))


class Boundary(Enum):
    RIGHT = "right"
    LEFT = "left"


def _moebius(x: Fraction, k: int, m: int, j: int) -> Fraction:
    # (x*(b_j - m*d_j) + d_j) / (x*(b_{j+1} - m*d_{j+1}) + d_{j+1})
    b_prev, b_j, b_next = _b(k, j - 1), _b(k, j), _b(k, j + 1)
    d_j, d_next = b_j + b_prev, b_next + b_j
    return (x * (b_j - m * d_j) + d_j) / (x * (b_next - m * d_next) + d_next)


def gauss_odometer(x: Fraction, boundary: Boundary = Boundary.RIGHT) -> Fraction:
    """Odometer over the Gauss map, x in (0, 1].

    RIGHT (the default) takes the branch value continuous from the right;
    it coincides with the cyclic word action on continued-fraction digits.
    LEFT takes the left limit at the branch points 1/M, stepping to the
    shorter word (1, ..., 1) of M-1 ones; it is undefined at x = 1, where
    the left limit leaves the interval.
    """
    if not 0 < x <= 1:
        raise ValueError(f"{x} outside (0, 1]")
    p, q = x.numerator, x.denominator
    if boundary is Boundary.LEFT:
        if x == 1:
            raise ValueError("left-boundary value at x=1 escapes (0, 1]")
        n = q // p
    else:
        n = -(-q // p) - 1
    return _moebius(x, 1, n, n - 1)


def renyi_odometer(x: Fraction) -> Fraction:
    """Odometer over the backward map, x in [0, 1): 1/(2*floor(E) + 1 - E), E = 1/(1-x)."""
    if not 0 <= x < 1:
        raise ValueError(f"{x} outside [0, 1)")
    p, q = x.numerator, x.denominator
    m = q // (q - p)
    return 1 / (2 * m + 1 - Fraction(q, q - p))


def _k_digits(x: Fraction, k: int) -> FiniteWord:
    if not 0 < x <= Fraction(1, k):
        raise ValueError(f"{x} outside (0, 1/{k}]")
    w = cf_encode(x)
    if any(a < k for a in w.letters):
        raise ValueError(f"{x} has a continued-fraction digit below {k}")
    return w


def k_gauss_odometer(x: Fraction, k: int) -> Fraction:
    """Odometer over the Gauss map restricted to digits >= k.

    Single-digit points 1/M step cyclically to b(M-k+1)/b(M-k+2), fixing
    1/k; for longer expansions the Moebius closed form applies and equals
    the floor-k word action.
    """
    w = _k_digits(x, k)
    if len(w) == 1:
        i = w.letters[0] - k + 1
        return Fraction(_b(k, i), _b(k, i + 1))
    m = w.letters[0]
    return _moebius(x, k, m, m - k)


def k_gauss_odometer_shifted(x: Fraction, k: int) -> Fraction:
    """Index-shifted variant of the restricted closed form, for comparison.

    Uses multiplier n = m - k and the coefficient pairs (b_n, d_{n+1}) and
    (b_{n+1}, d_{n+2}); disagrees with the word-action oracle (already at
    k=2 on [1/3, 1/2), where it yields 1/(x+3) instead of (1-2x)/(1-x)).
    """
    if k < 1 or not 0 < x <= Fraction(1, k):
        raise ValueError(f"{x} outside (0, 1/{k}]")
    p, q = x.numerator, x.denominator
    m = -(-q // p) - 1
    n = m - k
    b_n, b_next, b_after = _b(k, n), _b(k, n + 1), _b(k, n + 2)
    d_next, d_after = b_next + b_n, b_after + b_next
    return (x * (b_n - n * d_next) + d_next) / (x * (b_next - n * d_after) + d_after)


@dataclass(frozen=True)
class CmiMap:
    """A countable family of monotone branches covering an interval.

    ``digit`` returns the branch index of a point (an integer >= floor) or
    None at the terminal point where coding stops; ``step`` is the forward
    map; ``branch_inverse(a, y)`` is the inverse of the branch with index a,
    so branch_inverse(digit(x), step(x)) = x away from the terminal point.
    ``policy`` fixes the length-1 convention of the induced word action.
    """

    floor: int
    policy: Policy
    step: Callable[[Fraction], Fraction]
    digit: Callable[[Fraction], int | None]
    branch_inverse: Callable[[int, Fraction], Fraction]
    terminal: Fraction = field(default_factory=lambda: Fraction(0))


def cmi_odometer(cmi: CmiMap, x: Fraction, depth_limit: int) -> Fraction:
    """Recode x through the branches, act on the digit word, decode back."""
    digits: list[int] = []
    y = x
    while (a := cmi.digit(y)) is not None:
        if len(digits) >= depth_limit:
            raise ValueError(f"point not identifiable within depth {depth_limit}")
        digits.append(a)
        y = cmi.step(y)
    if digits:
        succ = word_step(FiniteWord(cmi.floor, tuple(digits)), cmi.policy)
    elif cmi.policy is Policy.TOPDOWN:
        succ = FiniteWord(cmi.floor, (cmi.floor,))
    else:
        raise ValueError("terminal point has no successor under this policy")
    value = cmi.terminal
    for a in reversed(succ.letters):
        value = cmi.branch_inverse(a, value)
    return value


def _gauss_digit(y: Fraction) -> int | None:
    return None if y == 0 else y.denominator // y.numerator


def _gauss_branch_inverse(a: int, y: Fraction) -> Fraction:
    return 1 / (a + y)


def gauss_cmi() -> CmiMap:
    return CmiMap(1, Policy.CYCLIC, gauss, _gauss_digit, _gauss_branch_inverse)


def k_gauss_cmi(k: int) -> CmiMap:
    # same branches as the Gauss map; floor-k words reject stray digits
    return CmiMap(k, Policy.CYCLIC, gauss, _gauss_digit, _gauss_branch_inverse)


def _renyi_digit(y: Fraction) -> int | None:
    if y == 0:
        return None
    p, q = y.numerator, y.denominator
    a, r = divmod(q, q - p)
    return a if r == 0 else a + 1


def _renyi_branch_inverse(a: int, y: Fraction) -> Fraction:
    # the branch left endpoint is the preimage of the terminal point 0
    return 1 - Fraction(1, a) if y == 0 else 1 - 1 / (a - 1 + y)


def renyi_cmi() -> CmiMap:
    return CmiMap(2, Policy.TOPDOWN, renyi, _renyi_digit, _renyi_branch_inverse)


def question_mark(x: Fraction, precision_bits: int | None = None) -> Fraction:
    """Minkowski question-mark function, exact on rationals.

    Evaluated as the alternating series sum of (-1)^(i+1) * 2^(1-(a1+...+ai))
    over the continued-fraction digits.  With precision_bits set, the exact
    value is rounded to that many fractional bits (display use).
    """
    if not 0 <= x <= 1:
        raise ValueError(f"{x} outside [0, 1]")
    total = Fraction(0)
    if x > 0:
        s = 0
        for i, a in enumerate(cf_encode(x).letters):
            s += a
            term = Fraction(2) ** (1 - s)
            total += term if i % 2 == 0 else -term
    if precision_bits is not None:
        scale = 1 << precision_bits
        return Fraction(round(total * scale), scale)
    return total
