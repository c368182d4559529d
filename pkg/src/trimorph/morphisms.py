"""Endomorphisms of {a,b}*, their occurrence matrices, and triangular shape.

A morphism is determined by the images of the two letters.  Composition
follows the convention that (g1 g2)(w) = g1(g2(w)): the right factor acts
first, so occurrence matrices multiply in the same order as morphisms.

A morphism is upper triangular when the image of a is a power of a (the
empty word counts, as a^0).  Upper triangular images of b decompose into
either a b-free word a^e or the padded block form

    a^gamma1 b a^alpha1 b ... b a^alpha(p-1) b a^gamma2

with p >= 1 occurrences of b.  TriangularForm captures that decomposition
exactly and reconstructs the morphism from it.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .words import (
    A,
    B,
    EMPTY,
    ParseError,
    Run,
    Word,
    WORD_A,
    WORD_B,
    checked_add,
    checked_mul,
    push_run,
)


class NotUpperTriangular(ValueError):
    """The image of a contains b, so no triangular decomposition exists."""


@dataclass(frozen=True)
class BinaryMorphism:
    image_a: Word
    image_b: Word

    def image(self, letter: str) -> Word:
        return self.image_a if letter == A else self.image_b


IDENTITY = BinaryMorphism(WORD_A, WORD_B)


def apply(g: BinaryMorphism, w: Word) -> Word:
    """The image g(w)."""
    out: list[Run] = []
    runs_a = g.image_a.runs
    runs_b = g.image_b.runs
    for letter, count in w.runs:
        img = runs_b if letter == B else runs_a
        if not img:
            continue
        if len(img) == 1:
            push_run(out, img[0][0], checked_mul(img[0][1], count))
            continue
        # Copies of a multi-run image only ever merge at the seam, so the
        # first run takes the boundary check and the rest append in bulk.
        first_let, first_cnt = img[0]
        rest = img[1:]
        for _ in range(count):
            if out and out[-1][0] == first_let:
                out[-1] = (first_let, checked_add(out[-1][1], first_cnt))
            else:
                out.append((first_let, first_cnt))
            out.extend(rest)
    return Word(tuple(out))


def compose(g1: BinaryMorphism, g2: BinaryMorphism) -> BinaryMorphism:
    """The product g1 g2, applying g2 first."""
    return BinaryMorphism(apply(g1, g2.image_a), apply(g1, g2.image_b))


def power(g: BinaryMorphism, n: int) -> BinaryMorphism:
    """The n-th compositional power; n = 0 gives the identity."""
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    result = IDENTITY
    for _ in range(n):
        result = compose(result, g)
    return result


@dataclass(frozen=True)
class MorphMatrix:
    """2x2 occurrence matrix: rows[i][j] counts letter i in the image of letter j."""

    rows: tuple[tuple[int, int], tuple[int, int]]

    def det(self) -> int:
        (aa, ab), (ba, bb) = self.rows
        return aa * bb - ab * ba

    def __matmul__(self, other: "MorphMatrix") -> "MorphMatrix":
        (aa, ab), (ba, bb) = self.rows
        (xa, xb), (ya, yb) = other.rows
        return MorphMatrix(
            (
                (checked_add(checked_mul(aa, xa), checked_mul(ab, ya)),
                 checked_add(checked_mul(aa, xb), checked_mul(ab, yb))),
                (checked_add(checked_mul(ba, xa), checked_mul(bb, ya)),
                 checked_add(checked_mul(ba, xb), checked_mul(bb, yb))),
            )
        )


def matrix(g: BinaryMorphism) -> MorphMatrix:
    return MorphMatrix(
        (
            (g.image_a.occ(A), g.image_b.occ(A)),
            (g.image_a.occ(B), g.image_b.occ(B)),
        )
    )


def is_nonsingular(g: BinaryMorphism) -> bool:
    """True iff the occurrence matrix of g is invertible over the rationals."""
    return matrix(g).det() != 0


@dataclass(frozen=True)
class BOnly:
    """A b-free image of b: the word a^e."""

    e: int


@dataclass(frozen=True)
class Core:
    """Image of b with p >= 1 occurrences of b.

    gamma1 and gamma2 count the a-padding before the first and after the
    last b; alphas lists the p - 1 interior a-gaps in order.
    """

    gamma1: int
    alphas: tuple[int, ...]
    gamma2: int

    @property
    def p(self) -> int:
        return len(self.alphas) + 1


def b_image_shape(w: Word) -> BOnly | Core:
    """Decompose a word as an upper triangular image of b."""
    if w.occ(B) == 0:
        return BOnly(w.length())
    gamma1 = 0
    gaps: list[int] = []
    pending = 0
    seen_b = False
    for letter, count in w.runs:
        if letter == A:
            pending += count
        else:
            if seen_b:
                gaps.append(pending)
            else:
                gamma1 = pending
                seen_b = True
            gaps.extend([0] * (count - 1))
            pending = 0
    return Core(gamma1, tuple(gaps), pending)


def shape_to_word(shape: BOnly | Core) -> Word:
    if isinstance(shape, BOnly):
        return Word.single(A, shape.e)
    out: list[Run] = []
    push_run(out, A, shape.gamma1)
    push_run(out, B, 1)
    for gap in shape.alphas:
        push_run(out, A, gap)
        push_run(out, B, 1)
    push_run(out, A, shape.gamma2)
    return Word(tuple(out))


@dataclass(frozen=True)
class TriangularForm:
    """Canonical data of an upper triangular morphism: a -> a^s plus the b-image shape."""

    s: int
    bpart: BOnly | Core

    @property
    def b_count(self) -> int:
        return self.bpart.p if isinstance(self.bpart, Core) else 0

    def is_nonsingular(self) -> bool:
        return self.s >= 1 and isinstance(self.bpart, Core)

    def image_b(self) -> Word:
        return shape_to_word(self.bpart)

    def to_morphism(self) -> BinaryMorphism:
        return BinaryMorphism(Word.single(A, self.s), self.image_b())


@lru_cache(maxsize=4096)
def to_triangular(g: BinaryMorphism) -> TriangularForm:
    """Decompose g, or raise NotUpperTriangular when the image of a contains b."""
    if g.image_a.occ(B) != 0:
        raise NotUpperTriangular(f"image of a is {g.image_a.to_text()!r}")
    return TriangularForm(g.image_a.length(), b_image_shape(g.image_b))


def is_special_pair(g1: BinaryMorphism, g2: BinaryMorphism) -> bool:
    """Both b-images lie in a* b a* and exactly one morphism fixes a."""
    for g in (g1, g2):
        if g.image_a.occ(B) != 0:
            raise NotUpperTriangular(f"image of a is {g.image_a.to_text()!r}")
    if g1.image_b.occ(B) != 1 or g2.image_b.occ(B) != 1:
        return False
    return (g1.image_a == WORD_A) != (g2.image_a == WORD_A)


_MORPHISM_RE = re.compile(r"^a=([ab]+|eps),b=([ab]+|eps)$")


def parse_morphism(text: str) -> BinaryMorphism:
    """Parse 'a=<word>,b=<word>' where each word is over {a,b} or 'eps'."""
    stripped = re.sub(r"\s+", "", text)
    m = _MORPHISM_RE.match(stripped)
    if m is None:
        # Point at the first structural divergence for the error message.
        expected = "a="
        for pos, ch in enumerate(stripped):
            if pos >= len(expected):
                break
            if ch != expected[pos]:
                raise ParseError(f"expected {expected!r} at the start", pos)
        raise ParseError(
            "morphism must look like 'a=<word>,b=<word>' with words over "
            "{a,b} or 'eps'"
        )
    return BinaryMorphism(Word.parse(m.group(1)), Word.parse(m.group(2)))


def format_morphism(g: BinaryMorphism) -> str:
    return f"a={g.image_a.to_text()},b={g.image_b.to_text()}"
