from __future__ import annotations

import hypothesis.strategies as st
from hypothesis import HealthCheck, settings

from trimorph.morphisms import BinaryMorphism, Core, TriangularForm
from trimorph.words import EMPTY, Word

settings.register_profile(
    "ci",
    settings(
        max_examples=80,
        deadline=None,
        derandomize=True,
        suppress_health_check=[HealthCheck.too_slow],
    ),
)
settings.load_profile("ci")


# --- independent oracle: morphisms on plain Python strings, no run-length
# representation anywhere.  Used to cross-check the exact implementation.

def napply(image_a: str, image_b: str, w: str) -> str:
    return "".join(image_a if ch == "a" else image_b for ch in w)


def ncompose(g1: tuple[str, str], g2: tuple[str, str]) -> tuple[str, str]:
    return napply(*g1, g2[0]), napply(*g1, g2[1])


def npower(g: tuple[str, str], n: int) -> tuple[str, str]:
    result = ("a", "b")
    for _ in range(n):
        result = ncompose(result, g)
    return result


def as_strings(g: BinaryMorphism) -> tuple[str, str]:
    return (
        "".join(g.image_a.letters()),
        "".join(g.image_b.letters()),
    )


# --- strategies

def word_texts(max_size: int = 16):
    return st.text(alphabet="ab", max_size=max_size)


def words(max_size: int = 16):
    return word_texts(max_size).map(lambda t: Word.parse(t) if t else EMPTY)


def morphisms(max_image: int = 8):
    return st.builds(BinaryMorphism, words(max_image), words(max_image))


def triangular_morphisms(max_s: int = 3, max_image: int = 10):
    return st.builds(
        BinaryMorphism,
        st.integers(0, max_s).map(lambda s: Word.parse("a" * s) if s else EMPTY),
        words(max_image),
    )


def gapped_forms(max_s: int = 3, max_p: int = 4, max_exp: int = 3):
    """Nonsingular forms with at least two b's in the image of b."""
    return st.builds(
        lambda s, g1, alphas, g2: TriangularForm(s, Core(g1, tuple(alphas), g2)),
        st.integers(1, max_s),
        st.integers(0, max_exp),
        st.lists(st.integers(0, max_exp), min_size=1, max_size=max_p - 1),
        st.integers(0, max_exp),
    )
