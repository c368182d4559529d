"""Structural commutation test for upper triangular morphism pairs.

classify() routes every ordered pair into exactly one case, evaluates that
case's full list of structural conditions without short-circuiting, and
predicts commutation as their disjunction.  direct_commute() is the
independent oracle: it composes both ways and compares images, with no
structural reasoning at all.  The two must agree on every upper triangular
pair; the sweep harness checks that exhaustively.

Cases, after normalizing roles (swapped records whether the inputs traded
places):

  SingularBImage   g1(b) is b-free; commutation reduces to one length identity.
  SingularAImage   g1(a) is empty while both b-images contain b.
  BothGapOne       both nonsingular, one b in each b-image.
  GapOneVsMany     both nonsingular, one b against p >= 2.
  MultIndependent  both nonsingular, b-counts p, q >= 2 with no common root.
  MultDependent    same, but p = r^m and q = r^n for a common root r.
"""
from __future__ import annotations

from dataclasses import dataclass

from .morphisms import (
    BinaryMorphism,
    BOnly,
    Core,
    IDENTITY,
    b_image_shape,
    compose,
    power,
    to_triangular,
)
from .numtheory import Dependent, mult_dependence
from .words import A, B, Word, b_core, words_commute

CASE_SINGULAR_B_IMAGE = "SingularBImage"
CASE_SINGULAR_A_IMAGE = "SingularAImage"
CASE_BOTH_GAP_ONE = "BothGapOne"
CASE_GAP_ONE_VS_MANY = "GapOneVsMany"
CASE_MULT_INDEPENDENT = "MultIndependent"
CASE_MULT_DEPENDENT = "MultDependent"

CASES = (
    CASE_SINGULAR_B_IMAGE,
    CASE_SINGULAR_A_IMAGE,
    CASE_BOTH_GAP_ONE,
    CASE_GAP_ONE_VS_MANY,
    CASE_MULT_INDEPENDENT,
    CASE_MULT_DEPENDENT,
)

SCHEMA_VERSION = 1


def direct_commute(g1: BinaryMorphism, g2: BinaryMorphism) -> bool:
    """Brute-force oracle: g1 g2 = g2 g1 as morphisms."""
    return compose(g1, g2) == compose(g2, g1)


def a_conjugates(u: Word, v: Word) -> bool:
    """True iff v is obtained from u by moving a's across the ends.

    Equivalently: equal b-cores and equal total a-count (for b-free words,
    equal length).
    """
    lead_u, core_u, trail_u = b_core(u)
    lead_v, core_v, trail_v = b_core(v)
    return core_u == core_v and lead_u + trail_u == lead_v + trail_v


@dataclass(frozen=True)
class CommutationReport:
    case: str
    swapped: bool
    conditions: dict[str, bool]
    witness: dict | None
    prediction: bool

    def to_record(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "kind": "classification",
            "case": self.case,
            "swapped": self.swapped,
            "conditions": dict(self.conditions),
            "witness": self.witness,
            "prediction": self.prediction,
        }


def _uniform_gap(shape: Core) -> int | None:
    """The shared interior gap of (b a^alpha)^(p-1) b, or None if not of that shape."""
    if shape.gamma1 or shape.gamma2:
        return None
    gaps = set(shape.alphas)
    if len(gaps) != 1:
        return None
    return shape.alphas[0]


def _match_block_powers(u: Word, v: Word) -> dict | None:
    """Match u = (a^alpha b a^beta)^i and v = (b a^(alpha+beta))^j b.

    Both words must contain b.  The block parameters are forced: alpha and
    beta are u's outer paddings, and every interior gap on either side must
    equal alpha + beta.  Returns the parameters, or None.
    """
    su = b_image_shape(u)
    sv = b_image_shape(v)
    assert isinstance(su, Core) and isinstance(sv, Core)
    alpha, beta = su.gamma1, su.gamma2
    if any(g != alpha + beta for g in su.alphas):
        return None
    if sv.gamma1 or sv.gamma2:
        return None
    if any(g != alpha + beta for g in sv.alphas):
        return None
    return {"alpha": alpha, "beta": beta, "i": su.p, "j": sv.p - 1}


def classify(g1: BinaryMorphism, g2: BinaryMorphism) -> CommutationReport:
    """Structural commutation report for an upper triangular pair.

    Raises NotUpperTriangular when either image of a contains b.
    """
    f1 = to_triangular(g1)
    f2 = to_triangular(g2)

    if isinstance(f1.bpart, BOnly) or isinstance(f2.bpart, BOnly):
        swapped = not isinstance(f1.bpart, BOnly)
        if swapped:
            g1, g2, f1, f2 = g2, g1, f2, f1
        lhs = g1.image_a.length() * g2.image_b.occ(A) + g1.image_b.length() * g2.image_b.occ(B)
        rhs = g2.image_a.length() * g1.image_b.length()
        conditions = {"length_identity": lhs == rhs}
        return CommutationReport(
            CASE_SINGULAR_B_IMAGE,
            swapped,
            conditions,
            {"composed_b_image_lengths": [lhs, rhs]},
            any(conditions.values()),
        )

    if f1.s == 0 or f2.s == 0:
        swapped = f1.s != 0
        if swapped:
            g1, g2, f1, f2 = g2, g1, f2, f1
        u, v = g1.image_b, g2.image_b
        t = f2.s
        block = _match_block_powers(u, v) if t == 1 else None
        conditions = {
            "equal_morphisms": g1 == g2,
            "partner_is_identity": g2 == IDENTITY,
            "erasing_pair_commutes": t == 0 and words_commute(u, v),
            "both_b_powers": u.occ(A) == 0 and v.occ(A) == 0,
            "block_shift_match": block is not None,
        }
        return CommutationReport(
            CASE_SINGULAR_A_IMAGE,
            swapped,
            conditions,
            block,
            any(conditions.values()),
        )

    # Both nonsingular from here on.
    assert isinstance(f1.bpart, Core) and isinstance(f2.bpart, Core)
    swapped = f1.bpart.p > f2.bpart.p
    if swapped:
        g1, g2, f1, f2 = g2, g1, f2, f1
    c1, c2 = f1.bpart, f2.bpart
    p, q = c1.p, c2.p
    s, t = f1.s, f2.s

    if p == 1 and q == 1:
        conditions = {
            "padding_balance": (s - 1) * c2.gamma1 == (t - 1) * c1.gamma1
            and (s - 1) * c2.gamma2 == (t - 1) * c1.gamma2
        }
        return CommutationReport(
            CASE_BOTH_GAP_ONE, swapped, conditions, None, any(conditions.values())
        )

    if p == 1:
        conditions = {
            "g1_is_identity": g1 == IDENTITY,
            "both_b_powers": g1.image_b.occ(A) == 0 and g2.image_b.occ(A) == 0,
        }
        return CommutationReport(
            CASE_GAP_ONE_VS_MANY, swapped, conditions, None, any(conditions.values())
        )

    dep = mult_dependence(p, q)
    if not isinstance(dep, Dependent):
        gap1 = _uniform_gap(c1)
        gap2 = _uniform_gap(c2)
        uniform = (
            s == 1 and t == 1 and gap1 is not None and gap1 == gap2
        )
        conditions = {
            "both_b_powers": g1.image_b.occ(A) == 0 and g2.image_b.occ(A) == 0,
            "uniform_blocks_same_gap": uniform,
        }
        witness = {"alpha": gap1} if uniform else None
        return CommutationReport(
            CASE_MULT_INDEPENDENT, swapped, conditions, witness, any(conditions.values())
        )

    h1 = power(g1, dep.n)
    h2 = power(g2, dep.m)
    conjugate = s == 1 and t == 1 and a_conjugates(h1.image_b, h2.image_b)
    conditions = {
        "equal_powers": h1 == h2,
        "both_b_powers": g1.image_b.occ(A) == 0 and g2.image_b.occ(A) == 0,
        "power_images_a_conjugate": conjugate,
    }
    witness: dict = {"r": dep.r, "m": dep.m, "n": dep.n}
    if conjugate:
        _, core_word, _ = b_core(h1.image_b)
        if core_word.length() <= 80:
            witness["conjugate_core"] = core_word.to_text()
    return CommutationReport(
        CASE_MULT_DEPENDENT, swapped, conditions, witness, any(conditions.values())
    )
