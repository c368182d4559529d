"""Relation search over composition sequences of a morphism pair.

A relation is a pair of distinct sequences over the indices {1, 2} whose
left-to-right compositions coincide as morphisms.  find_relation explores
all sequences of length 1..depth in breadth-first, lexicographic order and
reports the first collision, so the witness is canonical.

matrix_collision runs the same search on occurrence matrices only.  Taking
the matrix is a monoid homomorphism, so distinct sequences composing to the
same morphism force a matrix collision; a collision-free matrix search is a
sound certificate that no morphism relation exists at that depth, while a
matrix collision says nothing either way.  This makes it a cheap pre-filter
for bulk freeness checks.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .morphisms import BinaryMorphism, compose, matrix
from .words import CountOverflow


class SearchAborted(RuntimeError):
    """Composition overflowed the 64-bit word bound during the search."""

    def __init__(self, depth: int):
        self.depth = depth
        super().__init__(f"relation search aborted by overflow at depth {depth}")


@dataclass(frozen=True)
class Relation:
    """Sequences over {1, 2} with equal compositions; left was found first."""

    left: tuple[int, ...]
    right: tuple[int, ...]


DEFAULT_DEPTH = 6


def find_relation(
    g1: BinaryMorphism, g2: BinaryMorphism, depth: int = DEFAULT_DEPTH
) -> Relation | None:
    """First pair of distinct sequences of length <= depth composing equally."""
    if depth < 1:
        raise ValueError("depth must be positive")
    generators = (g1, g2)
    seen: dict[BinaryMorphism, tuple[int, ...]] = {}
    prefix_morphs: dict[tuple[int, ...], BinaryMorphism] = {}
    for length in range(1, depth + 1):
        next_prefixes: dict[tuple[int, ...], BinaryMorphism] = {}
        for seq in product((1, 2), repeat=length):
            head = seq[:-1]
            try:
                if head:
                    morph = compose(prefix_morphs[head], generators[seq[-1] - 1])
                else:
                    morph = generators[seq[-1] - 1]
            except CountOverflow as exc:
                raise SearchAborted(length) from exc
            next_prefixes[seq] = morph
            if morph in seen:
                return Relation(seen[morph], seq)
            seen[morph] = seq
        prefix_morphs = next_prefixes
    return None


def matrix_collision(g1: BinaryMorphism, g2: BinaryMorphism, depth: int) -> bool:
    """True iff two distinct sequences of length <= depth share a matrix product."""
    if depth < 1:
        raise ValueError("depth must be positive")
    mats = tuple(m.rows for m in (matrix(g1), matrix(g2)))

    def mul(x, y):
        (aa, ab), (ba, bb) = x
        (xa, xb), (ya, yb) = y
        return ((aa * xa + ab * ya, aa * xb + ab * yb), (ba * xa + bb * ya, ba * xb + bb * yb))

    seen: set = set()
    prefix: dict[tuple[int, ...], tuple] = {}
    for length in range(1, depth + 1):
        nxt: dict[tuple[int, ...], tuple] = {}
        for seq in product((1, 2), repeat=length):
            head = seq[:-1]
            m = mul(prefix[head], mats[seq[-1] - 1]) if head else mats[seq[-1] - 1]
            nxt[seq] = m
            if m in seen:
                return True
            seen.add(m)
        prefix = nxt
    return False


def verify_relation(g1: BinaryMorphism, g2: BinaryMorphism, rel: Relation) -> bool:
    """Recompose both sides of a relation and compare."""

    def build(seq: tuple[int, ...]) -> BinaryMorphism:
        gens = (g1, g2)
        morph = gens[seq[0] - 1]
        for k in seq[1:]:
            morph = compose(morph, gens[k - 1])
        return morph

    return build(rel.left) == build(rel.right)
