"""
Classification of fuzzy sets into generalized fuzzy filter classes.

Every variant is a threshold pair (alpha, beta): ordinary is (0, 1],
``eq_vq`` is (0, 1/2] and ``overline`` is (1/2, 1]. A fuzzy set F passes
the threshold check for a kind when, for every instance of the kind's
rules, ``max{F(conclusion), alpha} >= min{F(premises...), beta}``.

The same verdict is also reachable through level sets (every non-empty
``U(F;t)`` with ``alpha < t <= beta`` is a crisp filter of that kind) and,
for the plain overline / eq_vq classes, through fuzzy-point quantifiers.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InconsistencyError
from .filters import KINDS, FilterKind, filter_masks, from_mask
from .fuzzy import HALF, ONE, ZERO, level_mask, render_rational, unit_rational


@dataclass(frozen=True)
class Variant:
    token: str
    alpha: Fraction
    beta: Fraction

    @property
    def label(self):
        if self.token == "thresholds":
            return f"thresholds({render_rational(self.alpha)},{render_rational(self.beta)})"
        return self.token


ORDINARY = Variant("ordinary", ZERO, ONE)
EQ_VQ = Variant("eq_vq", ZERO, HALF)
OVERLINE = Variant("overline", HALF, ONE)
NAMED_VARIANTS = (ORDINARY, EQ_VQ, OVERLINE)


def thresholds(alpha, beta):
    alpha, beta = _check_pair(alpha, beta)
    return Variant("thresholds", alpha, beta)


def parse_variant(tokens):
    """``["overline"]`` or ``["thresholds", "2/5", "3/5"]`` -> Variant."""
    head = tokens[0]
    for v in NAMED_VARIANTS:
        if head == v.token:
            if len(tokens) != 1:
                raise ValueError(f"variant {head!r} takes no arguments")
            return v
    if head == "thresholds":
        if len(tokens) != 3:
            raise ValueError("'thresholds' needs alpha and beta")
        return thresholds(tokens[1], tokens[2])
    raise ValueError(f"unknown variant {head!r}")


def _check_pair(alpha, beta):
    alpha, beta = unit_rational(alpha), unit_rational(beta)
    if not alpha < beta:
        raise ValueError(f"need alpha < beta, got ({alpha}, {beta}]")
    return alpha, beta


@dataclass(frozen=True)
class Violation:
    """First failing instance: ``lhs < rhs`` for the named condition."""

    condition: str
    elements: tuple
    lhs: Fraction
    rhs: Fraction

    def render(self):
        names = "xyzw"
        args = " ".join(f"{names[i]}={e}" for i, e in enumerate(self.elements))
        return (
            f"{self.condition} {args} max={render_rational(self.lhs)}"
            f" min={render_rational(self.rhs)}"
        )


# ------------------------------------------------------- compiled rules



def _rules(alg, kind):
    """Deduplicated rule instances ``(condition, witness, conclusion, premises)``.

    Scan order is product pairs, then monotone pairs, then the kind's
    triples, each lexicographic; keeping the first occurrence of every
    distinct (conclusion, premises) means the first failing rule is the
    first failing tuple in scan order.
    """
    key = ("rules", kind)
    cached = alg._cache.get(key)
    if cached is not None:
        return cached
    n, mul, res, le = alg.n, alg.mul, alg.res, alg.le
    rules, seen = [], set()

    def add(cond, wit, concl, prem):
        k = (concl, tuple(sorted(set(prem))))
        if k not in seen:
            seen.add(k)
            rules.append((cond, wit, concl, k[1]))

    for x, y in itertools.product(range(n), repeat=2):
        add("product", (x, y), mul[x][y], (x, y))
    for x, y in itertools.product(range(n), repeat=2):
        if le[x][y]:
            add("monotone", (x, y), y, (x,))
    if kind is not FilterKind.PLAIN:
        for x, y, z in itertools.product(range(n), repeat=3):
            if kind is FilterKind.IMPLICATIVE:
                add(kind.value, (x, y, z), res[x][z],
                    (res[x][res[alg.negation(z)][y]], res[y][z]))
            elif kind is FilterKind.POSITIVE_IMPLICATIVE:
                add(kind.value, (x, y, z), res[x][z], (res[x][res[y][z]], res[x][y]))
            else:
                add(kind.value, (x, y, z), res[res[res[x][y]][y]][x], (res[z][res[y][x]], z))
    rules = tuple(rules)
    alg._cache[key] = rules
    return rules


def _scaled(values, *extra):
    d = math.lcm(*(q.denominator for q in (*values, *extra)))
    return d, [q.numerator * (d // q.denominator) for q in values], [
        q.numerator * (d // q.denominator) for q in extra
    ]


def threshold_violation(F, alpha, beta, kind):
    """First violated inequality for thresholds (alpha, beta], or None."""
    alpha, beta = _check_pair(alpha, beta)
    kind = FilterKind(kind)
    alg = F.algebra
    d, vals, (a, b) = _scaled(F.values, alpha, beta)
    for cond, wit, concl, prem in _rules(alg, kind):
        lhs = vals[concl] if vals[concl] > a else a
        rhs = b
        for p in prem:
            if vals[p] < rhs:
                rhs = vals[p]
        if lhs < rhs:
            return Violation(
                cond, tuple(alg.elements[i] for i in wit), Fraction(lhs, d), Fraction(rhs, d)
            )
    return None


def threshold_check(F, alpha, beta, kind=FilterKind.PLAIN):
    return threshold_violation(F, alpha, beta, kind) is None


# ------------------------------------------------------------ point form


def point_grid(F):
    """Values of t at which some point relation of F can change.

    Every relation used by the point conditions is constant on the pieces
    (b_i, b_{i+1}] cut out by these values, so the right endpoints are
    sufficient representatives.
    """
    pts = {HALF, ONE}
    for v in F.values:
        pts.add(v)
        pts.add(ONE - v)
    return sorted(p for p in pts if p > 0)


def point_form_violation(F, variant, grid=None):
    """Evaluate the fuzzy-point definition of the plain eq_vq / overline
    filter over ``grid`` (default :func:`point_grid`). Returns the first
    failing ``(condition, elements, t, r)`` or None."""
    if variant not in (EQ_VQ, OVERLINE):
        raise ValueError(f"no point-form definition for {variant.label}")
    alg = F.algebra
    n, mul, le = alg.n, alg.mul, alg.le
    ts = sorted(set(unit_rational(t) for t in (point_grid(F) if grid is None else grid)))
    ts = [t for t in ts if t > 0]
    d, vals, tvals = _scaled(F.values, *ts)
    full = d  # the scaled value of 1
    names = alg.elements

    def belongs(i, t):
        return vals[i] >= t

    def quasi(i, t):
        return vals[i] + t > full

    if variant == OVERLINE:
        # points where "not-belongs or not-quasi" fails, i.e. belongs and quasi
        strong = [[t for t in tvals if belongs(i, t) and quasi(i, t)] for i in range(n)]
        for x, y in itertools.product(range(n), repeat=2):
            for t in strong[x]:
                for r in strong[y]:
                    if not belongs(mul[x][y], min(t, r)):
                        return ("product", (names[x], names[y]), Fraction(t, d), Fraction(r, d))
        for x, y in itertools.product(range(n), repeat=2):
            if le[x][y]:
                for r in strong[x]:
                    if not belongs(y, r):
                        return ("monotone", (names[x], names[y]), Fraction(r, d), Fraction(r, d))
        return None

    for x, y in itertools.product(range(n), repeat=2):
        for t in tvals:
            if not belongs(x, t):
                continue
            for r in tvals:
                if belongs(y, r):
                    m, c = min(t, r), mul[x][y]
                    if not (belongs(c, m) or quasi(c, m)):
                        return ("product", (names[x], names[y]), Fraction(t, d), Fraction(r, d))
    for x, y in itertools.product(range(n), repeat=2):
        if le[x][y]:
            for r in tvals:
                if belongs(x, r) and not (belongs(y, r) or quasi(y, r)):
                    return ("monotone", (names[x], names[y]), Fraction(r, d), Fraction(r, d))
    return None


def point_form_check(F, variant, grid=None):
    return point_form_violation(F, variant, grid) is None


# ------------------------------------------------------------ level form


def level_form_failure(F, lo, hi, kind):
    """First t in (lo, hi] whose non-empty level set is not a kind filter.

    Returns ``(t, subset)`` or None. Level sets are constant between
    consecutive image values, so the image values inside (lo, hi] plus
    ``hi`` itself cover every piece.
    """
    lo, hi = _check_pair(lo, hi)
    table = filter_masks(F.algebra, FilterKind(kind))
    reps = sorted({v for v in F.values if lo < v <= hi} | {hi})
    for t in reps:
        m = level_mask(F, t)
        if m and not table[m]:
            return t, from_mask(F.algebra, m)
    return None


def level_form_check(F, lo, hi, kind=FilterKind.PLAIN):
    return level_form_failure(F, lo, hi, kind) is None


# --------------------------------------------------------- interval sets


@dataclass(frozen=True)
class IntervalSet:
    """Disjoint, sorted, non-adjacent half-open intervals (lo, hi] in (0,1]."""

    intervals: tuple = ()

    @classmethod
    def of(cls, pairs):
        cleaned = []
        for lo, hi in sorted((Fraction(lo), Fraction(hi)) for lo, hi in pairs):
            if not 0 <= lo < hi <= 1:
                raise ValueError(f"bad interval ({lo},{hi}]")
            if cleaned and lo <= cleaned[-1][1]:
                cleaned[-1] = (cleaned[-1][0], max(cleaned[-1][1], hi))
            else:
                cleaned.append((lo, hi))
        return cls(tuple(cleaned))

    def __contains__(self, t):
        return any(lo < t <= hi for lo, hi in self.intervals)

    def covers(self, lo, hi):
        """(lo, hi] is a subset of this set."""
        return any(a <= lo and hi <= b for a, b in self.intervals)

    def __str__(self):
        if not self.intervals:
            return "empty"
        return " ".join(
            f"({render_rational(lo)},{render_rational(hi)}]" for lo, hi in self.intervals
        )


def threshold_profile(F, kind=FilterKind.PLAIN):
    """The set of t in (0,1] whose level set is empty or a kind filter."""
    table = filter_masks(F.algebra, FilterKind(kind))
    cuts = sorted({ZERO, ONE, *F.values})
    good = []
    for lo, hi in zip(cuts, cuts[1:]):
        m = level_mask(F, hi)
        if m == 0 or table[m]:
            good.append((lo, hi))
    return IntervalSet.of(good)


# -------------------------------------------------------- classification


@dataclass(frozen=True)
class TaxonomyRecord:
    verdicts: dict = field(default_factory=dict)  # (variant token, kind) -> bool
    witnesses: dict = field(default_factory=dict)  # (label, kind) -> Violation
    profiles: dict = field(default_factory=dict)  # kind -> IntervalSet
    custom: dict = field(default_factory=dict)  # (Variant, kind) -> bool

    def verdict(self, variant, kind):
        kind = FilterKind(kind)
        token = variant.token if isinstance(variant, Variant) else variant
        if token == "thresholds":
            return self.custom[(variant, kind)]
        return self.verdicts[(token, kind)]

    def witness(self, variant, kind):
        label = variant.label if isinstance(variant, Variant) else variant
        return self.witnesses.get((label, FilterKind(kind)))

    def lines(self):
        out = []
        for v in NAMED_VARIANTS:
            for k in KINDS:
                out.append(f"{v.token}.{k.value} = {str(self.verdicts[(v.token, k)]).lower()}")
                w = self.witnesses.get((v.label, k))
                if w is not None:
                    out.append(f"{v.token}.{k.value}.witness = {w.render()}")
        for (v, k), ok in self.custom.items():
            out.append(f"{v.label}.{k.value} = {str(ok).lower()}")
            w = self.witnesses.get((v.label, k))
            if w is not None:
                out.append(f"{v.label}.{k.value}.witness = {w.render()}")
        for k in KINDS:
            out.append(f"profile.{k.value} = {self.profiles[k]}")
        return out


def classify(F, extra=()):
    """Fill all variant x kind verdicts plus profiles.

    ``extra`` is an iterable of threshold Variants to evaluate as well.
    Verdicts come from the inequalities and are re-derived from level sets
    and from the profile; any disagreement raises InconsistencyError.
    """
    verdicts, witnesses, profiles, custom = {}, {}, {}, {}
    for k in KINDS:
        profiles[k] = threshold_profile(F, k)
    variants = list(NAMED_VARIANTS) + list(extra)
    for v in variants:
        for k in KINDS:
            w = threshold_violation(F, v.alpha, v.beta, k)
            ok = w is None
            if ok != level_form_check(F, v.alpha, v.beta, k):
                raise InconsistencyError(
                    f"inequality and level-set routes disagree on {v.label}.{k.value} for {F!r}"
                )
            if ok != profiles[k].covers(v.alpha, v.beta):
                raise InconsistencyError(
                    f"profile disagrees on {v.label}.{k.value} for {F!r}"
                )
            if w is not None:
                witnesses[(v.label, k)] = w
            if v.token == "thresholds":
                custom[(v, k)] = ok
            else:
                verdicts[(v.token, k)] = ok
    return TaxonomyRecord(verdicts, witnesses, profiles, custom)
