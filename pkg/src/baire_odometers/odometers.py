"""Odometer actions on eventually periodic infinite words.

The binary odometer adds 1 with carry: it flips the leading run of 1s to 0s
and sets the next 0 to 1 (all ones maps to all zeros).  Its block-recoded
conjugate acts on words over {k, k+1, ...} by

    (w1, w2, w3, ...)  ->  (k, ..., k, w2+1, w3, ...)      (w1-k copies of k)

and the shift drops the first letter.  fast_forward performs m binary steps
at once as arbitrary-precision addition, treating eventually constant binary
words as 2-adic integers (an all-ones tail is a two's-complement negative).
"""

from __future__ import annotations

from .words import TailWord, _require_binary, constant, drop_front


def dyadic_step(w: TailWord) -> TailWord:
    """Add 1 with carry on a binary word."""
    _require_binary(w)
    if w.period == (1,):
        if all(a == 1 for a in w.preperiod):
            return constant(0)
        head = w.preperiod
    else:
        head = w.preperiod + w.period  # guaranteed to contain a 0
    i = head.index(0)
    return TailWord(0, (0,) * i + (1,) + head[i + 1:], w.period)


def baire_step(w: TailWord) -> TailWord:
    """One odometer step on a word over {floor, floor+1, ...}."""
    k = w.floor
    w1, w2 = w.letter(1), w.letter(2)
    rest = drop_front(w, 2)
    return TailWord(k, (k,) * (w1 - k) + (w2 + 1,) + rest.preperiod, rest.period)


def shift(w: TailWord) -> TailWord:
    """Drop the first letter."""
    return drop_front(w, 1)


def fast_forward(w: TailWord, m: int) -> TailWord:
    """Apply dyadic_step m times, as one big-integer addition."""
    if m < 0:
        raise ValueError("m must be >= 0")
    _require_binary(w)
    if w.period == (1,):
        # value is N - 2^P with N the preperiod bits (LSB first)
        p = len(w.preperiod)
        v = _bits_value(w.preperiod) - (1 << p) + m
        if v >= 0:
            return _from_int(v)
        width = max(p, (-v).bit_length())
        return TailWord(0, _bit_tuple(v & ((1 << width) - 1), width), (1,))
    reps = 1
    while True:
        head = w.preperiod + w.period * reps
        v = _bits_value(head) + m
        if v < 1 << len(head):
            return TailWord(0, _bit_tuple(v, len(head)), w.period)
        reps *= 2  # w.period contains a 0, so enough expansion absorbs the carry


def renormalization_exponent(w: TailWord, m: int, n: int) -> int:
    """Exponent E = m * 2^n * 2^(w1+...+wn) in baire_step^m o shift^n = shift^n o baire_step^E."""
    if m < 0 or n < 0:
        raise ValueError("m and n must be >= 0")
    return m << (n + sum(w.prefix(n)))


def _bits_value(bits: tuple[int, ...]) -> int:
    # LSB-first binary digits to integer
    v = 0
    for b in reversed(bits):
        v = (v << 1) | b
    return v


def _bit_tuple(v: int, width: int) -> tuple[int, ...]:
    return tuple((v >> i) & 1 for i in range(width))


def _from_int(v: int) -> TailWord:
    return TailWord(0, _bit_tuple(v, v.bit_length()), (0,))
