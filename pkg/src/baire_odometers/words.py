"""Finite and eventually periodic words over integer alphabets {k, k+1, ...}.

Conventions used throughout the package:

* A finite word carries its alphabet ``floor`` k; letters are integers >= k.
* The digit sum of a word with j letters is ``sum(letters) - j*(floor - 1)``,
  which for floor 0 amounts to ``sum(letters) + j``.  Levels of the word tree
  are indexed by this sum.
* Positions inside a level come from the block code ``revblock(a) = 0 1^(a-1)``
  applied to the letters of the floor-1 form, last letter first; the resulting
  binary string (always starting with 0) is the position index.
* An eventually periodic infinite word is stored as preperiod + period in a
  canonical form (primitive period, shortest preperiod), so that two TailWords
  are equal as objects exactly when they are equal letter by letter.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


@dataclass(frozen=True)
class FiniteWord:
    """Nonempty tuple of integer letters, each >= floor."""

    floor: int
    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.floor < 0:
            raise ValueError("floor must be >= 0")
        if not self.letters:
            raise ValueError("letters must be nonempty")
        if any(a < self.floor for a in self.letters):
            raise ValueError(f"letters {self.letters} below floor {self.floor}")

    def __str__(self) -> str:
        return "(" + ",".join(str(a) for a in self.letters) + ")"

    def __len__(self) -> int:
        return len(self.letters)


def word(letters, floor: int = 1) -> FiniteWord:
    """Convenience constructor accepting any iterable of letters."""
    return FiniteWord(floor, tuple(letters))


@dataclass(frozen=True)
class TreeAddress:
    """Level >= 1 and position in [0, 2^(level-1)) within that level."""

    level: int
    position: int

    def __post_init__(self) -> None:
        if self.level < 1:
            raise ValueError("level must be >= 1")
        if not 0 <= self.position < 1 << (self.level - 1):
            raise ValueError(f"position {self.position} out of range for level {self.level}")


@dataclass(frozen=True)
class TailWord:
    """Eventually periodic infinite word: preperiod + repeating period.

    Instances are normalized on construction: the period is primitive (not a
    repetition of a shorter word) and the preperiod is as short as possible
    (its last letter differs from the period's last letter, rotating the
    period as needed).  Normalization makes structural equality coincide with
    letterwise equality of the represented sequences.
    """

    floor: int
    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.floor < 0:
            raise ValueError("floor must be >= 0")
        if not self.period:
            raise ValueError("period must be nonempty")
        if any(a < self.floor for a in self.preperiod + self.period):
            raise ValueError("letters below floor")
        pre, per = _normalize(self.preperiod, self.period)
        object.__setattr__(self, "preperiod", pre)
        object.__setattr__(self, "period", per)

    def letter(self, i: int) -> int:
        """1-based letter access; total for every i >= 1."""
        if i < 1:
            raise ValueError("letter index is 1-based")
        if i <= len(self.preperiod):
            return self.preperiod[i - 1]
        return self.period[(i - len(self.preperiod) - 1) % len(self.period)]

    def letters(self) -> Iterator[int]:
        """Infinite letter stream."""
        yield from self.preperiod
        while True:
            yield from self.period

    def prefix(self, n: int) -> tuple[int, ...]:
        p, q = self.preperiod, self.period
        if n <= len(p):
            return p[:n]
        m = n - len(p)
        reps, rem = divmod(m, len(q))
        return p + q * reps + q[:rem]

    def __str__(self) -> str:
        pre = ",".join(str(a) for a in self.preperiod)
        per = ",".join(str(a) for a in self.period)
        return f"{pre};{per}"


def _normalize(pre: tuple[int, ...], per: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    # primitive period: shortest divisor-length word whose repetition is per
    n = len(per)
    for d in range(1, n + 1):
        if n % d == 0 and per[:d] * (n // d) == per:
            per = per[:d]
            break
    # shortest preperiod: absorb trailing letters into a rotated period
    while pre and pre[-1] == per[-1]:
        per = per[-1:] + per[:-1]
        pre = pre[:-1]
    return pre, per


def tail(preperiod, period, floor: int = 0) -> TailWord:
    """Convenience constructor for TailWord."""
    return TailWord(floor, tuple(preperiod), tuple(period))


def constant(letter: int, floor: int = 0) -> TailWord:
    """The constant infinite word (letter, letter, ...)."""
    return TailWord(floor, (), (letter,))


def drop_front(w: TailWord, n: int) -> TailWord:
    """Remove the first n letters."""
    if n < 0:
        raise ValueError("n must be >= 0")
    pre, per = w.preperiod, w.period
    if n <= len(pre):
        return TailWord(w.floor, pre[n:], per)
    k = (n - len(pre)) % len(per)
    return TailWord(w.floor, (), per[k:] + per[:k])


def sum_k(w: FiniteWord) -> int:
    """Digit sum s(w): number of the tree level containing w."""
    return sum(w.letters) - len(w.letters) * (w.floor - 1)


def shift_alphabet(w: FiniteWord, to_floor: int) -> FiniteWord:
    """Shift every letter by (to_floor - floor); a bijection between alphabets."""
    if to_floor < 0:
        raise ValueError("to_floor must be >= 0")
    delta = to_floor - w.floor
    return FiniteWord(to_floor, tuple(a + delta for a in w.letters))


def position_index(w: FiniteWord) -> int:
    """Index of w inside its level, in [0, 2^(s-1)).

    Computed on the floor-1 form: letters are read last to first and each
    letter a contributes the block 0 1^(a-1) to the binary expansion.
    """
    delta = 1 - w.floor
    n = 0
    for a in reversed(w.letters):
        a += delta
        n = (n << a) | ((1 << (a - 1)) - 1)
    return n


def word_at(level: int, position: int, floor: int) -> FiniteWord:
    """Inverse of (sum_k, position_index) at a fixed level.

    The position is padded to level-1 bits and prefixed with 0; each maximal
    block 0 1^(a-1) of the result is one letter a of the floor-1 form, blocks
    read last letter first.
    """
    if level < 1:
        raise ValueError("level must be >= 1")
    if not 0 <= position < 1 << (level - 1):
        raise ValueError(f"position {position} out of range for level {level}")
    bits = "0" + format(position, f"0{level - 1}b") if level > 1 else "0"
    blocks = []
    run = 0
    for b in bits:
        if b == "0":
            if run:
                blocks.append(run)
            run = 1
        else:
            run += 1
    blocks.append(run)
    delta = floor - 1
    return FiniteWord(floor, tuple(a + delta for a in reversed(blocks)))


def compare_rlex(a: FiniteWord, b: FiniteWord) -> int:
    """Reverse-lexicographic order: by digit sum, then last letter backwards.

    Returns -1, 0, or 1.  Requires equal floors.
    """
    if a.floor != b.floor:
        raise ValueError("cannot compare words over different floors")
    sa, sb = sum_k(a), sum_k(b)
    if sa != sb:
        return -1 if sa < sb else 1
    for x, y in zip(reversed(a.letters), reversed(b.letters)):
        if x != y:
            return -1 if x < y else 1
    # equal sums forbid one word being a strict suffix of the other
    return 0


def total_index(w: FiniteWord) -> int:
    """Global enumeration index 2^(s-1) + position - 1, strictly rlex-monotone."""
    return (1 << (sum_k(w) - 1)) + position_index(w) - 1


def block_decode(v: TailWord) -> TailWord:
    """Expand each letter k into the binary block 1^k 0."""
    def expand(letters: tuple[int, ...]) -> tuple[int, ...]:
        out: list[int] = []
        for k in letters:
            out.extend([1] * k)
            out.append(0)
        return tuple(out)

    return TailWord(0, expand(v.preperiod), expand(v.period))


def block_encode(w: TailWord) -> TailWord:
    """Parse a binary word into blocks 1^k 0 and return the sequence of k's.

    Defined on binary words that are not eventually all ones (every tail must
    contain another 0 for the next block to close).
    """
    _require_binary(w)
    if w.period == (1,):
        raise ValueError("eventually-all-ones word has no block decomposition")
    pre_len, per_len = len(w.preperiod), len(w.period)

    def state(i: int) -> int:
        # structural position of absolute letter index i (0-based)
        return i if i < pre_len else pre_len + (i - pre_len) % per_len

    letters = w.letters()
    out: list[int] = []
    seen: dict[int, int] = {}
    i = 0
    while True:
        st = state(i)
        if st >= pre_len:
            if st in seen:
                return TailWord(0, tuple(out[: seen[st]]), tuple(out[seen[st]:]))
            seen[st] = len(out)
        run = 0
        for a in letters:
            i += 1
            if a == 0:
                break
            run += 1
        out.append(run)


def _require_binary(w: TailWord) -> None:
    if any(a not in (0, 1) for a in w.preperiod + w.period):
        raise ValueError("word is not binary")
