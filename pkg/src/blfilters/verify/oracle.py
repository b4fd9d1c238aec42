"""
Brute-force reference for the fuzzy filter classes.

Deliberately self-contained: it reads the element names and the two
operation tables off the algebra and evaluates each defining inequality
literally with Fraction arithmetic, one variant at a time. Nothing here is
shared with the taxonomy module, so agreement between the two is evidence
rather than tautology.
"""

from fractions import Fraction
from itertools import product

_HALF = Fraction(1, 2)


class _Tables:
    def __init__(self, alg):
        els = list(alg.elements)
        self.els = els
        self.zero = alg.elements[alg.zero]
        self.one = alg.elements[alg.one]
        self.dot = {}
        self.imp = {}
        for i, x in enumerate(els):
            for j, y in enumerate(els):
                self.dot[x, y] = els[alg.mul[i][j]]
                self.imp[x, y] = els[alg.res[i][j]]

    def le(self, x, y):
        return self.imp[x, y] == self.one

    def neg(self, x):
        return self.imp[x, self.zero]


def _pairs(T):
    return product(T.els, repeat=2)


def _triples(T):
    return product(T.els, repeat=3)


def _kind_terms(T, kind, x, y, z):
    """(conclusion, premise, premise) element names for one triple."""
    i = T.imp
    if kind == "implicative":
        return i[x, z], i[x, i[T.neg(z), y]], i[y, z]
    if kind == "positive_implicative":
        return i[x, z], i[x, i[y, z]], i[x, y]
    if kind == "fantastic":
        return i[i[i[x, y], y], x], i[z, i[y, x]], z
    raise ValueError(kind)


def ordinary(T, F, kind):
    if any(F[T.dot[x, y]] < min(F[x], F[y]) for x, y in _pairs(T)):
        return False
    if any(T.le(x, y) and F[x] > F[y] for x, y in _pairs(T)):
        return False
    if kind == "plain":
        return True
    for x, y, z in _triples(T):
        c, p, q = _kind_terms(T, kind, x, y, z)
        if F[c] < min(F[p], F[q]):
            return False
    return True


def eq_vq(T, F, kind):
    if any(F[T.dot[x, y]] < min(F[x], F[y], _HALF) for x, y in _pairs(T)):
        return False
    if any(T.le(x, y) and F[y] < min(F[x], _HALF) for x, y in _pairs(T)):
        return False
    if kind == "plain":
        return True
    for x, y, z in _triples(T):
        c, p, q = _kind_terms(T, kind, x, y, z)
        if F[c] < min(F[p], F[q], _HALF):
            return False
    return True


def overline(T, F, kind):
    if any(max(F[T.dot[x, y]], _HALF) < min(F[x], F[y]) for x, y in _pairs(T)):
        return False
    if any(T.le(x, y) and max(F[y], _HALF) < F[x] for x, y in _pairs(T)):
        return False
    if kind == "plain":
        return True
    for x, y, z in _triples(T):
        c, p, q = _kind_terms(T, kind, x, y, z)
        if max(F[c], _HALF) < min(F[p], F[q]):
            return False
    return True


def with_thresholds(T, F, kind, alpha, beta):
    if any(max(F[T.dot[x, y]], alpha) < min(F[x], F[y], beta) for x, y in _pairs(T)):
        return False
    if any(T.le(x, y) and max(F[y], alpha) < min(F[x], beta) for x, y in _pairs(T)):
        return False
    if kind == "plain":
        return True
    for x, y, z in _triples(T):
        c, p, q = _kind_terms(T, kind, x, y, z)
        if max(F[c], alpha) < min(F[p], F[q], beta):
            return False
    return True


def oracle_verdict(alg, degrees, variant, kind, alpha=None, beta=None):
    """Decide one class membership.

    ``degrees`` maps element names to Fractions; ``variant`` is one of
    ``ordinary``, ``eq_vq``, ``overline``, ``thresholds``; ``kind`` is a
    kind token such as ``"fantastic"``.
    """
    T = _Tables(alg)
    F = {e: Fraction(degrees[e]) for e in T.els}
    if variant == "ordinary":
        return ordinary(T, F, kind)
    if variant == "eq_vq":
        return eq_vq(T, F, kind)
    if variant == "overline":
        return overline(T, F, kind)
    if variant == "thresholds":
        return with_thresholds(T, F, kind, Fraction(alpha), Fraction(beta))
    raise ValueError(f"unknown variant {variant!r}")
