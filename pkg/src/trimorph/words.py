"""Exact words over the two-letter alphabet {a, b}.

Words are stored run-length encoded: a tuple of (letter, count) runs with
adjacent runs carrying distinct letters and every count >= 1.  The empty
word is the empty run tuple.  Run counts and word lengths are checked
against a 64-bit bound; arithmetic that would exceed it raises
CountOverflow instead of silently wrapping or degrading.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby
from typing import Iterable, Iterator

A = "a"
B = "b"
LETTERS = (A, B)

MAX_COUNT = 2**64 - 1

Run = tuple[str, int]


class CountOverflow(OverflowError):
    """A run count or word length left the 64-bit range."""


class NotAPrefix(ValueError):
    """strip_quotient was asked to remove a non-prefix."""


class ParseError(ValueError):
    """Malformed textual input."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


def checked_add(x: int, y: int) -> int:
    z = x + y
    if z > MAX_COUNT:
        raise CountOverflow(f"count {z} exceeds 64-bit bound")
    return z


def checked_mul(x: int, y: int) -> int:
    z = x * y
    if z > MAX_COUNT:
        raise CountOverflow(f"count {z} exceeds 64-bit bound")
    return z


def push_run(runs: list[Run], letter: str, count: int) -> None:
    """Append a run to a list kept in normal form, merging at the boundary."""
    if count == 0:
        return
    if runs and runs[-1][0] == letter:
        runs[-1] = (letter, checked_add(runs[-1][1], count))
    else:
        runs.append((letter, count))


@dataclass(frozen=True)
class Word:
    """An element of {a,b}* in run-length normal form.

    The constructor trusts its argument; use from_runs or parse for
    unnormalized input.
    """

    runs: tuple[Run, ...] = ()

    @staticmethod
    def from_runs(items: Iterable[Run]) -> "Word":
        out: list[Run] = []
        for letter, count in items:
            if letter not in LETTERS:
                raise ValueError(f"letter must be one of {LETTERS}, got {letter!r}")
            if count < 0:
                raise ValueError(f"run count must be nonnegative, got {count}")
            if count > MAX_COUNT:
                raise CountOverflow(f"count {count} exceeds 64-bit bound")
            push_run(out, letter, count)
        return Word(tuple(out))

    @staticmethod
    def single(letter: str, count: int) -> "Word":
        return Word.from_runs([(letter, count)])

    @staticmethod
    def parse(text: str) -> "Word":
        """Parse 'eps' or a nonempty string over {a,b}."""
        if text == "eps":
            return EMPTY
        if not text:
            raise ParseError("empty word text; write 'eps' for the empty word")
        for pos, ch in enumerate(text):
            if ch not in LETTERS:
                raise ParseError(f"unexpected character {ch!r}", pos)
        return Word(tuple((ch, len(list(grp))) for ch, grp in groupby(text)))

    def to_text(self) -> str:
        """Expanded textual form ('eps' for the empty word).

        Materializes the word letter by letter, so only call this on words
        of moderate length.
        """
        if not self.runs:
            return "eps"
        return "".join(letter * count for letter, count in self.runs)

    def length(self) -> int:
        total = 0
        for _, count in self.runs:
            total = checked_add(total, count)
        return total

    def occ(self, letter: str) -> int:
        total = 0
        for let, count in self.runs:
            if let == letter:
                total = checked_add(total, count)
        return total

    def is_empty(self) -> bool:
        return not self.runs

    def letters(self) -> Iterator[str]:
        for letter, count in self.runs:
            for _ in range(count):
                yield letter


EMPTY = Word()
WORD_A = Word(((A, 1),))
WORD_B = Word(((B, 1),))


def concat(u: Word, v: Word) -> Word:
    if not u.runs:
        return v
    if not v.runs:
        return u
    out = list(u.runs)
    push_run(out, *v.runs[0])
    out.extend(v.runs[1:])
    return Word(tuple(out))


def repeat(u: Word, k: int) -> Word:
    """The word u^k."""
    if k < 0:
        raise ValueError("exponent must be nonnegative")
    if k == 0 or not u.runs:
        return EMPTY
    if k == 1:
        return u
    if len(u.runs) == 1:
        letter, count = u.runs[0]
        return Word(((letter, checked_mul(count, k)),))
    out: list[Run] = []
    for _ in range(k):
        for letter, count in u.runs:
            push_run(out, letter, count)
    return Word(tuple(out))


def is_prefix(u: Word, w: Word) -> bool:
    if not u.runs:
        return True
    if len(u.runs) > len(w.runs):
        return False
    head = len(u.runs) - 1
    for i in range(head):
        if u.runs[i] != w.runs[i]:
            return False
    ul, uc = u.runs[head]
    wl, wc = w.runs[head]
    return ul == wl and uc <= wc


def strip_quotient(u: Word, w: Word) -> Word:
    """The word x with w = u x; raises NotAPrefix when u is not a prefix of w."""
    if not u.runs:
        return w
    if len(u.runs) > len(w.runs):
        raise NotAPrefix(f"{u!r} is not a prefix of {w!r}")
    head = len(u.runs) - 1
    for i in range(head):
        if u.runs[i] != w.runs[i]:
            raise NotAPrefix(f"{u!r} is not a prefix of {w!r}")
    ul, uc = u.runs[head]
    wl, wc = w.runs[head]
    if ul != wl or uc > wc:
        raise NotAPrefix(f"{u!r} is not a prefix of {w!r}")
    rest = w.runs[head + 1 :]
    if uc < wc:
        return Word(((wl, wc - uc),) + rest)
    return Word(rest)


def take_prefix(w: Word, n: int) -> Word:
    """The first n letters of w (all of w when n >= |w|)."""
    if n < 0:
        raise ValueError("prefix length must be nonnegative")
    out: list[Run] = []
    remaining = n
    for letter, count in w.runs:
        if remaining == 0:
            break
        take = count if count <= remaining else remaining
        out.append((letter, take))
        remaining -= take
    return Word(tuple(out))


def strip_leading(w: Word, letter: str) -> Word:
    """Drop the maximal leading run of the given letter."""
    if w.runs and w.runs[0][0] == letter:
        return Word(w.runs[1:])
    return w


def b_core(w: Word) -> tuple[int, Word, int]:
    """Split w as a^p (core) a^q with the core empty or starting and ending in b.

    Returns (p, core, q).  A b-free word is all leading padding:
    (|w|, eps, 0).
    """
    if w.occ(B) == 0:
        return w.length(), EMPTY, 0
    runs = w.runs
    lead = runs[0][1] if runs[0][0] == A else 0
    trail = runs[-1][1] if runs[-1][0] == A else 0
    start = 1 if lead else 0
    end = len(runs) - 1 if trail else len(runs)
    return lead, Word(runs[start:end]), trail


def words_commute(u: Word, v: Word) -> bool:
    """True iff uv = vu, i.e. both are powers of a common word."""
    return concat(u, v) == concat(v, u)
