"""Exhaustive oracle sweep over a bounded space of triangular morphisms.

The sweep enumerates every upper triangular morphism inside explicit
structural bounds (including singular ones), then walks all ordered pairs
comparing classify()'s structural prediction against the brute-force
composition oracle.  Any disagreement is a mismatch record; the expected
count is zero.  Enumeration order is fixed, so results are reproducible
and independent of the worker count.
"""
from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product

from .classifier import SCHEMA_VERSION, classify, direct_commute
from .morphisms import BinaryMorphism, Core, format_morphism, shape_to_word
from .words import A, Word


@dataclass(frozen=True)
class SweepConfig:
    """Structural bounds: images of a up to a^max_s, b-counts up to max_p,
    a-paddings and interior gaps up to max_exp, b-free images up to
    a^max_bonly_exp."""

    max_s: int = 3
    max_p: int = 3
    max_exp: int = 2
    max_bonly_exp: int = 3
    parallel: int = 1

    def bounds(self) -> tuple[int, int, int, int]:
        return (self.max_s, self.max_p, self.max_exp, self.max_bonly_exp)


def enumerate_b_images(max_p: int, max_exp: int, max_bonly_exp: int) -> list[Word]:
    images = [Word.single(A, e) for e in range(max_bonly_exp + 1)]
    for p in range(1, max_p + 1):
        for gamma1 in range(max_exp + 1):
            for alphas in product(range(max_exp + 1), repeat=p - 1):
                for gamma2 in range(max_exp + 1):
                    images.append(shape_to_word(Core(gamma1, alphas, gamma2)))
    return images


def enumerate_morphisms(config: SweepConfig) -> list[BinaryMorphism]:
    """All in-bounds triangular morphisms, in a fixed documented order:
    image of a ascending, then b-free images ascending, then b-images by
    (b-count, leading padding, interior gaps, trailing padding)."""
    b_images = enumerate_b_images(config.max_p, config.max_exp, config.max_bonly_exp)
    return [
        BinaryMorphism(Word.single(A, s), image_b)
        for s in range(config.max_s + 1)
        for image_b in b_images
    ]


@dataclass
class SweepResult:
    config: SweepConfig
    morphisms: int
    pairs: int
    commuting: int
    cases: Counter = field(default_factory=Counter)
    conditions: Counter = field(default_factory=Counter)
    mismatches: list[dict] = field(default_factory=list)

    def summary_record(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "kind": "sweep_summary",
            "bounds": {
                "max_s": self.config.max_s,
                "max_p": self.config.max_p,
                "max_exp": self.config.max_exp,
                "max_bonly_exp": self.config.max_bonly_exp,
            },
            "morphisms": self.morphisms,
            "pairs": self.pairs,
            "commuting": self.commuting,
            "cases": {k: self.cases[k] for k in sorted(self.cases)},
            "conditions": {k: self.conditions[k] for k in sorted(self.conditions)},
            "mismatches": len(self.mismatches),
        }


def _mismatch_record(index: int, g1: BinaryMorphism, g2: BinaryMorphism, report, actual: bool) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "kind": "sweep_mismatch",
        "index": index,
        "g1": format_morphism(g1),
        "g2": format_morphism(g2),
        "case": report.case,
        "swapped": report.swapped,
        "conditions": dict(report.conditions),
        "predicted": report.prediction,
        "actual": actual,
    }


def sweep_range(
    morphisms: list[BinaryMorphism], start: int, end: int
) -> tuple[int, Counter, Counter, list[dict]]:
    """Evaluate ordered pair indices [start, end) against the oracle."""
    n = len(morphisms)
    commuting = 0
    cases: Counter = Counter()
    conditions: Counter = Counter()
    mismatches: list[dict] = []
    for k in range(start, end):
        i, j = divmod(k, n)
        g1, g2 = morphisms[i], morphisms[j]
        report = classify(g1, g2)
        actual = direct_commute(g1, g2)
        cases[report.case] += 1
        if actual:
            commuting += 1
        for name, value in report.conditions.items():
            if value:
                conditions[f"{report.case}.{name}"] += 1
        if report.prediction != actual:
            mismatches.append(_mismatch_record(k, g1, g2, report, actual))
    return commuting, cases, conditions, mismatches


_WORKER_CACHE: dict[tuple[int, int, int, int], list[BinaryMorphism]] = {}


def _worker(args: tuple[tuple[int, int, int, int], int, int]):
    bounds, start, end = args
    morphisms = _WORKER_CACHE.get(bounds)
    if morphisms is None:
        morphisms = enumerate_morphisms(SweepConfig(*bounds))
        _WORKER_CACHE[bounds] = morphisms
    return sweep_range(morphisms, start, end)


def run_sweep(config: SweepConfig) -> SweepResult:
    morphisms = enumerate_morphisms(config)
    n = len(morphisms)
    pairs = n * n
    result = SweepResult(config=config, morphisms=n, pairs=pairs, commuting=0)
    workers = max(1, config.parallel)
    if workers == 1:
        chunks = [sweep_range(morphisms, 0, pairs)]
    else:
        step = -(-pairs // (workers * 4))
        ranges = [(config.bounds(), lo, min(lo + step, pairs)) for lo in range(0, pairs, step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_worker, ranges))
    for commuting, cases, conditions, mismatches in chunks:
        result.commuting += commuting
        result.cases.update(cases)
        result.conditions.update(conditions)
        result.mismatches.extend(mismatches)
    return result
