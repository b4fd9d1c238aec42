"""Exhaustive grid sweeps that cross-check the classification routes."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from ..filters import KINDS, FilterKind, check_filter_theorems, render_subset
from ..fuzzy import HALF, FuzzySet, render_rational
from ..taxonomy import (
    EQ_VQ,
    OVERLINE,
    level_form_check,
    point_form_check,
    threshold_check,
    threshold_profile,
)

BATTERY = (
    (Fraction(0), Fraction(1)),
    (Fraction(0), HALF),
    (HALF, Fraction(1)),
    (Fraction(2, 5), Fraction(3, 5)),
    (Fraction(3, 10), Fraction(9, 10)),
)

MAX_KEPT = 10


@dataclass(frozen=True)
class GridSpec:
    denominator: int = 2

    def __post_init__(self):
        if self.denominator < 1:
            raise ValueError("grid denominator must be at least 1")

    @property
    def values(self):
        d = self.denominator
        return tuple(Fraction(k, d) for k in range(d + 1))


def enumerate_fuzzy_sets(alg, grid):
    """Every assignment of grid values to the carrier, lexicographically."""
    if isinstance(grid, int):
        grid = GridSpec(grid)
    vals = grid.values
    for combo in itertools.product(vals, repeat=alg.n):
        yield FuzzySet(alg, combo)


@dataclass
class CheckResult:
    name: str
    instances: int = 0
    failures: int = 0
    counterexamples: list = field(default_factory=list)  # (FuzzySet or None, detail)

    @property
    def passed(self):
        return self.failures == 0

    def record(self, ok, fuzzy_set=None, detail=""):
        self.instances += 1
        if not ok:
            self.failures += 1
            if len(self.counterexamples) < MAX_KEPT:
                self.counterexamples.append((fuzzy_set, detail))


@dataclass
class EquivalenceReport:
    algebra: str
    results: dict = field(default_factory=dict)

    def check(self, name):
        if name not in self.results:
            self.results[name] = CheckResult(name)
        return self.results[name]

    @property
    def passed(self):
        return all(r.passed for r in self.results.values())

    @property
    def instances(self):
        return sum(r.instances for r in self.results.values())

    def merge(self, other):
        for name, r in other.results.items():
            mine = self.check(name)
            mine.instances += r.instances
            mine.failures += r.failures
            room = MAX_KEPT - len(mine.counterexamples)
            mine.counterexamples.extend(r.counterexamples[:room])
        return self

    def lines(self, prefix="check"):
        out = []
        for name in sorted(self.results):
            r = self.results[name]
            out.append(
                f"{prefix}.{name} = {'pass' if r.passed else 'fail'}"
                f" instances={r.instances} counterexamples={r.failures}"
            )
            for fs, detail in r.counterexamples:
                shown = repr(fs) if fs is not None else ""
                out.append(f"{prefix}.{name}.counterexample = {shown} {detail}".rstrip())
        return out


def _pair_label(a, b):
    return f"({render_rational(a)},{render_rational(b)}]"


def verify_equivalences(alg, grid=GridSpec(2), battery=BATTERY):
    """Inequality form vs level-set form vs threshold profile for every
    kind and threshold pair, and point form vs inequality / level form for
    the plain overline and eq_vq classes, over the whole grid."""
    report = EquivalenceReport(alg.name)
    for F in enumerate_fuzzy_sets(alg, grid):
        for kind in KINDS:
            profile = threshold_profile(F, kind)
            for a, b in battery:
                label = f"{kind.value}.{_pair_label(a, b)}"
                ineq = threshold_check(F, a, b, kind)
                level = level_form_check(F, a, b, kind)
                report.check(f"threshold_vs_level.{label}").record(
                    ineq == level, F, f"inequality={ineq} level={level}"
                )
                cov = profile.covers(a, b)
                report.check(f"threshold_vs_profile.{label}").record(
                    ineq == cov, F, f"inequality={ineq} profile={profile}"
                )
        over_pt = point_form_check(F, OVERLINE)
        over_in = threshold_check(F, HALF, 1, FilterKind.PLAIN)
        report.check("point_vs_threshold.overline").record(
            over_pt == over_in, F, f"point={over_pt} inequality={over_in}"
        )
        eq_pt = point_form_check(F, EQ_VQ)
        eq_lv = level_form_check(F, 0, HALF, FilterKind.PLAIN)
        report.check("point_vs_level.eq_vq").record(
            eq_pt == eq_lv, F, f"point={eq_pt} level={eq_lv}"
        )
    return report


def verify_implicative_decomposition(alg, grid=GridSpec(2)):
    """Overline implicative == overline positive implicative and overline
    fantastic, on every grid fuzzy set, plus the crisp inclusions."""
    report = EquivalenceReport(alg.name)
    crisp = check_filter_theorems(alg)
    for c in crisp.checks:
        detail = "" if c.passed else f"subset={render_subset(alg, c.counterexample)}"
        report.check(f"crisp.{c.name}").record(c.passed, None, detail)
    for F in enumerate_fuzzy_sets(alg, grid):
        imp = threshold_check(F, HALF, 1, FilterKind.IMPLICATIVE)
        pi = threshold_check(F, HALF, 1, FilterKind.POSITIVE_IMPLICATIVE)
        fan = threshold_check(F, HALF, 1, FilterKind.FANTASTIC)
        report.check("overline.implicative_equals_positive_implicative_and_fantastic").record(
            imp == (pi and fan), F, f"implicative={imp} positive_implicative={pi} fantastic={fan}"
        )
    return report
