"""
Crisp filters of a finite BL-algebra and their implicative, positive
implicative and fantastic refinements.

Two independent deciders are provided: :func:`is_filter` follows the
defining closure conditions (modus ponens plus a triple condition per kind),
:func:`filter_via_characterization` uses the product/upward closure form and
the two-variable characterizations. They must agree on every subset.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

from .errors import AlgebraError


class FilterKind(enum.Enum):
    PLAIN = "plain"
    IMPLICATIVE = "implicative"
    POSITIVE_IMPLICATIVE = "positive_implicative"
    FANTASTIC = "fantastic"

    @property
    def token(self):
        return self.value

    @classmethod
    def parse(cls, token):
        try:
            return cls(token)
        except ValueError:
            choices = ", ".join(k.value for k in cls)
            raise ValueError(f"unknown filter kind {token!r} (expected one of {choices})") from None


KINDS = tuple(FilterKind)


def _kind(kind):
    return kind if isinstance(kind, FilterKind) else FilterKind.parse(kind)


def to_mask(alg, subset):
    mask = 0
    for x in subset:
        mask |= 1 << alg.idx(x)
    return mask


def from_mask(alg, mask):
    return frozenset(alg.elements[i] for i in range(alg.n) if mask >> i & 1)


def render_subset(alg, subset):
    """``{0,a,b,1}`` in declared element order."""
    members = set(subset)
    return "{" + ",".join(e for e in alg.elements if e in members) + "}"


def subset_order_key(alg, subset):
    """Deterministic subset order: by size, then by declared positions."""
    pos = sorted(alg.idx(x) for x in subset)
    return (len(pos), pos)


# -------------------------------------------------- definitional decider


def _mask_is_filter(alg, mask, kind):
    n, res, one = alg.n, alg.res, alg.one

    def inside(i):
        return mask >> i & 1

    if not inside(one):
        return False
    for x in range(n):
        if inside(x):
            for y in range(n):
                if inside(res[x][y]) and not inside(y):
                    return False
    if kind is FilterKind.PLAIN:
        return True
    for x, y, z in itertools.product(range(n), repeat=3):
        if kind is FilterKind.IMPLICATIVE:
            ok = not (
                inside(res[x][res[alg.negation(z)][y]]) and inside(res[y][z])
            ) or inside(res[x][z])
        elif kind is FilterKind.POSITIVE_IMPLICATIVE:
            ok = not (inside(res[x][res[y][z]]) and inside(res[x][y])) or inside(res[x][z])
        else:
            ok = not (inside(res[z][res[y][x]]) and inside(z)) or inside(
                res[res[res[x][y]][y]][x]
            )
        if not ok:
            return False
    return True


def is_filter(alg, subset, kind=FilterKind.PLAIN):
    """Decide whether ``subset`` is a filter of the given kind."""
    subset = frozenset(subset)
    if not subset:
        raise ValueError("filters are non-empty by definition")
    return _mask_is_filter(alg, to_mask(alg, subset), _kind(kind))


# -------------------------------------------------- characterization form


def _mask_closure_form(alg, mask, kind):
    n, mul, res, le = alg.n, alg.mul, alg.res, alg.le

    def inside(i):
        return mask >> i & 1

    members = [x for x in range(n) if inside(x)]
    for x in members:
        for y in members:
            if not inside(mul[x][y]):
                return False
        for y in range(n):
            if le[x][y] and not inside(y):
                return False
    if kind is FilterKind.PLAIN:
        return True
    for x, y in itertools.product(range(n), repeat=2):
        if kind is FilterKind.IMPLICATIVE:
            ok = not inside(res[res[x][y]][x]) or inside(x)
        elif kind is FilterKind.POSITIVE_IMPLICATIVE:
            ok = not inside(res[x][res[x][y]]) or inside(res[x][y])
        else:
            ok = not inside(res[y][x]) or inside(res[res[res[x][y]][y]][x])
        if not ok:
            return False
    return True


def filter_via_characterization(alg, subset, kind=FilterKind.PLAIN):
    """Same question as :func:`is_filter`, answered through the closure
    form (product-closed and upward closed) and the two-variable criteria."""
    subset = frozenset(subset)
    if not subset:
        raise ValueError("filters are non-empty by definition")
    return _mask_closure_form(alg, to_mask(alg, subset), _kind(kind))


# ----------------------------------------------------------- enumeration


def filter_masks(alg, kind):
    """Bitmask -> bool table over all 2^n subsets (entry 0 is False).

    Cached on the algebra; level-set checks go through this table.
    """
    kind = _kind(kind)
    key = ("filter_masks", kind)
    table = alg._cache.get(key)
    if table is None:
        table = tuple(
            m != 0 and _mask_is_filter(alg, m, kind) for m in range(1 << alg.n)
        )
        alg._cache[key] = table
    return table


def enumerate_filters(alg, kind=FilterKind.PLAIN):
    if alg.n > 12:
        raise AlgebraError("filter enumeration supports at most 12 elements")
    table = filter_masks(alg, kind)
    found = [from_mask(alg, m) for m in range(1, 1 << alg.n) if table[m]]
    return sorted(found, key=lambda s: subset_order_key(alg, s))


@dataclass(frozen=True)
class TheoremCheck:
    name: str
    passed: bool
    counterexample: frozenset | None = None


@dataclass(frozen=True)
class TheoremReport:
    checks: tuple

    @property
    def passed(self):
        return all(c.passed for c in self.checks)


def check_filter_theorems(alg):
    """Inclusions between the crisp filter kinds.

    implicative <= positive implicative, implicative <= fantastic, and
    implicative == positive implicative & fantastic.
    """
    fams = {k: {frozenset(s) for s in enumerate_filters(alg, k)} for k in KINDS}
    imp = fams[FilterKind.IMPLICATIVE]
    pi = fams[FilterKind.POSITIVE_IMPLICATIVE]
    fan = fams[FilterKind.FANTASTIC]

    def first(sets):
        if not sets:
            return None
        return min(sets, key=lambda s: subset_order_key(alg, s))

    checks = []
    for name, bad in (
        ("implicative_within_positive_implicative", imp - pi),
        ("implicative_within_fantastic", imp - fan),
        ("implicative_equals_positive_implicative_and_fantastic", imp ^ (pi & fan)),
    ):
        cx = first(bad)
        checks.append(TheoremCheck(name, cx is None, cx))
    return TheoremReport(tuple(checks))
