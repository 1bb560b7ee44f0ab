"""Independent oracles and statistics for the enumerations.

The enumeration routes built from word arithmetic are cross-checked here
against constructions that share no code with them: the Stern diatomic
sequence, direct breadth-first traversal of the rational son rules, duplicate
audits, and distributional probes (Minkowski question-mark statistics and
cylinder frequencies).
"""

from __future__ import annotations

from bisect import bisect_right
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .codecs import BCF_ZERO, bcf_encode, cf_decode, cf_encode, dyadic_decode, dyadic_encode
from .interval_maps import question_mark, renyi_odometer
from .odometers import baire_step
from .word_actions import Policy, orbit
from .words import FiniteWord, constant, total_index

SYSTEMS = ("cf", "bcf", "dyadic")


def stern(n: int) -> int:
    """Stern diatomic sequence: s(0)=0, s(1)=1, s(2n)=s(n), s(2n+1)=s(n)+s(n+1)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    a, b = 1, 0
    for bit in format(n, "b"):
        if bit == "1":
            b += a
        else:
            a += b
    return b


def enumerate_rationals(system: str, count: int, offset: str | None = None) -> Iterator[Fraction]:
    """The rationals of a system in enumeration order.

    dyadic and cf decode the subtree word orbits of (1) over floor 0 and (2)
    over floor 1; bcf iterates the closed-form backward odometer.  offset
    "zero" (bcf only, its default) starts at 0; "root" starts at 1/2.
    """
    if system not in SYSTEMS:
        raise ValueError(f"unknown system {system!r}")
    if offset is None:
        offset = "zero" if system == "bcf" else "root"
    if offset not in ("zero", "root"):
        raise ValueError(f"unknown offset {offset!r}")
    if offset == "zero" and system != "bcf":
        raise ValueError(f"offset 'zero' is only defined for bcf, not {system!r}")
    if system == "bcf":
        x = Fraction(0)
        if offset == "root":
            x = renyi_odometer(x)
        for _ in range(count):
            yield x
            x = renyi_odometer(x)
    elif system == "cf":
        for w in orbit(FiniteWord(1, (2,)), Policy.SUBTREE, count):
            yield cf_decode(w)
    else:
        for w in orbit(FiniteWord(0, (1,)), Policy.SUBTREE, count):
            yield dyadic_decode(w)


def bfs_oracle(system: str, count: int) -> Iterator[Fraction]:
    """Breadth-first values from the rational son rules alone (no words)."""
    if system not in SYSTEMS:
        raise ValueError(f"unknown system {system!r}")
    queue = deque([Fraction(1, 2)])
    for _ in range(count):
        x = queue.popleft()
        yield x
        p, q = x.numerator, x.denominator
        if system == "dyadic":
            queue.append(x / 2)
            queue.append((1 + x) / 2)
        elif system == "cf":
            queue.append(Fraction(q, p + q))
            queue.append(Fraction(p, p + q))
        else:
            queue.append(Fraction(p, p + q))
            queue.append(Fraction(q, 2 * q - p))


def stern_oracle(count: int) -> Iterator[Fraction]:
    """s(2m)/s(2m+1) for m = 0, 1, ...: the breadth-first values of the
    Calkin-Wilf tree that lie in [0, 1), i.e. the bcf enumeration from 0."""
    for m in range(count):
        yield Fraction(stern(2 * m), stern(2 * m + 1))


@dataclass(frozen=True)
class EnumerationReport:
    system: str
    count: int
    first_collision: int | None
    order_violation: int | None

    @property
    def ok(self) -> bool:
        return self.first_collision is None and self.order_violation is None


def audit_enumeration(system: str, count: int) -> EnumerationReport:
    """Scan an enumeration prefix for duplicate values and word-order breaks.

    Values are re-encoded through the codec (an independent route back to
    words); their total_index must be strictly increasing.
    """
    encode = {"cf": cf_encode, "bcf": bcf_encode, "dyadic": dyadic_encode}[system]
    seen: set[Fraction] = set()
    first_collision = None
    order_violation = None
    prev = None
    for n, x in enumerate(enumerate_rationals(system, count)):
        if first_collision is None and x in seen:
            first_collision = n
        seen.add(x)
        w = encode(x) if x else BCF_ZERO
        index = -1 if w is BCF_ZERO else total_index(w)
        if order_violation is None and prev is not None and index <= prev:
            order_violation = n
        prev = index
    return EnumerationReport(system, count, first_collision, order_violation)


@dataclass(frozen=True)
class MultiplicityReport:
    ok: bool
    count: int
    levels: int
    distinct: int
    detail: str = ""


def multiplicity_audit(count: int) -> MultiplicityReport:
    """Audit the top-down orbit of (2) over floor 1: each rational of a fully
    covered level appears at exactly two positions, 2^(s-2) apart (its twin
    words).  The base value 1/2 appears once; its twin word (1,1) precedes
    the base point (2).  count must cover whole levels: 2^L - 3."""
    levels = (count + 3).bit_length() - 1
    if count != (1 << levels) - 3:
        raise ValueError(f"count {count} does not cover whole levels (use 2^L - 3)")
    positions: dict[Fraction, list[int]] = {}
    for n, w in enumerate(orbit(FiniteWord(1, (2,)), Policy.TOPDOWN, count)):
        positions.setdefault(cf_decode(w), []).append(n)
    for x, at in positions.items():
        if x == Fraction(1, 2):
            if at != [0]:
                return MultiplicityReport(False, count, levels, len(positions),
                                          f"base value 1/2 at {at}")
            continue
        if len(at) != 2:
            return MultiplicityReport(False, count, levels, len(positions),
                                      f"{x} appears {len(at)} times")
        s = (at[0] + 3).bit_length()  # orbit position n sits at total_index n + 2
        if at[1] - at[0] != 1 << (s - 2):
            return MultiplicityReport(False, count, levels, len(positions),
                                      f"{x} at {at}, expected gap {1 << (s - 2)}")
    return MultiplicityReport(True, count, levels, len(positions))


def distribution_test(count: int, grid: int, reference: str = "minkowski") -> float:
    """Kolmogorov-Smirnov distance on a uniform grid between the empirical
    CDF of the first count cf-enumerated rationals and a reference CDF
    ("minkowski" = the question-mark function, "uniform" = the identity)."""
    if reference not in ("minkowski", "uniform"):
        raise ValueError(f"unknown reference {reference!r}")
    samples = sorted(enumerate_rationals("cf", count))
    worst = 0.0
    for i in range(grid + 1):
        g = Fraction(i, grid)
        empirical = bisect_right(samples, g) / count
        ref = question_mark(g) if reference == "minkowski" else g
        worst = max(worst, abs(empirical - float(ref)))
    return worst


def frequency_test(word_floor: int, steps: int) -> dict[int, float]:
    """First-letter frequencies along the odometer orbit of the constant
    word; the invariant measure gives the letter floor+r mass 2^(-r-1)."""
    counts: dict[int, int] = {}
    w = constant(word_floor, word_floor)
    for _ in range(steps):
        a = w.letter(1)
        counts[a] = counts.get(a, 0) + 1
        w = baire_step(w)
    return {a: c / steps for a, c in sorted(counts.items())}
