"""Exact-rational fuzzy sets, fuzzy points and level sets."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import AlgebraError, ParseError

ZERO = Fraction(0)
HALF = Fraction(1, 2)
ONE = Fraction(1)

_LITERAL = re.compile(r"^(\d+/\d+|\d+(\.\d*)?|\.\d+)$")


def unit_rational(value):
    """Coerce to a :class:`Fraction` in [0, 1].

    Strings may be ``p/q``, integers or decimals; decimals are converted
    exactly (``"0.2"`` is 1/5). Floats are refused because they are not the
    decimals they print as.
    """
    if isinstance(value, float):
        raise TypeError("use a string or Fraction, not a float")
    if isinstance(value, str):
        text = value.strip()
        if not _LITERAL.match(text):
            raise ValueError(f"not a rational literal: {value!r}")
        if text.endswith("/0"):
            raise ValueError(f"zero denominator in {value!r}")
        value = Fraction(text)
    else:
        value = Fraction(value)
    if not ZERO <= value <= ONE:
        raise ValueError(f"{value} is outside [0,1]")
    return value


def render_rational(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class FuzzySet:
    """Total map from the carrier of ``algebra`` to exact rationals in [0,1]."""

    __slots__ = ("algebra", "values", "name")

    def __init__(self, algebra, membership, name=None):
        self.algebra = algebra
        self.name = name
        if isinstance(membership, dict):
            missing = [e for e in algebra.elements if e not in membership]
            extra = [k for k in membership if k not in algebra.index]
            if missing:
                raise AlgebraError(f"no membership degree for {', '.join(missing)}")
            if extra:
                raise AlgebraError(f"unknown element(s) {', '.join(map(str, extra))}")
            vals = [membership[e] for e in algebra.elements]
        else:
            vals = list(membership)
            if len(vals) != algebra.n:
                raise AlgebraError(f"expected {algebra.n} degrees, got {len(vals)}")
        self.values = tuple(unit_rational(v) for v in vals)

    def __call__(self, x):
        return self.values[self.algebra.idx(x)]

    @property
    def membership(self):
        return dict(zip(self.algebra.elements, self.values))

    def __eq__(self, other):
        if not isinstance(other, FuzzySet):
            return NotImplemented
        return self.algebra == other.algebra and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        body = ", ".join(
            f"{e}={render_rational(v)}" for e, v in zip(self.algebra.elements, self.values)
        )
        return f"FuzzySet({body})"


@dataclass(frozen=True)
class FuzzyPoint:
    support: str
    value: Fraction

    def __post_init__(self):
        v = unit_rational(self.value)
        if v == 0:
            raise ValueError("a fuzzy point needs a positive value")
        object.__setattr__(self, "value", v)


class PointRelation(enum.Enum):
    BELONGS = "belongs"
    QUASI = "quasi"
    BELONGS_OR_QUASI = "belongs_or_quasi"
    NOT_BELONGS = "not_belongs"
    NOT_QUASI = "not_quasi"
    NOT_BELONGS_OR_NOT_QUASI = "not_belongs_or_not_quasi"


def point_relation(F, p, rel):
    fx = F(p.support)
    t = p.value
    belongs = fx >= t
    quasi = fx + t > 1
    if rel is PointRelation.BELONGS:
        return belongs
    if rel is PointRelation.QUASI:
        return quasi
    if rel is PointRelation.BELONGS_OR_QUASI:
        return belongs or quasi
    if rel is PointRelation.NOT_BELONGS:
        return not belongs
    if rel is PointRelation.NOT_QUASI:
        return not quasi
    return (not belongs) or (not quasi)


def level_mask(F, t):
    mask = 0
    for i, v in enumerate(F.values):
        if v >= t:
            mask |= 1 << i
    return mask


def level_set(F, t):
    """Elements whose degree is at least ``t``; ``t`` must lie in (0,1]."""
    t = unit_rational(t)
    if t == 0:
        raise ValueError("level sets are taken for t in (0,1]")
    return frozenset(e for e, v in zip(F.algebra.elements, F.values) if v >= t)


def critical_values(F):
    return sorted(set(F.values))


# ------------------------------------------------------------------ files


def parse_fuzzy_set(text, algebra):
    """Read the ``fuzzyset <name> over <algebra>`` format against ``algebra``."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            rows.append((lineno, raw.find(body) + 1, body))
    if not rows:
        raise ParseError("empty fuzzy set source", 1)
    lineno, col, head = rows[0]
    parts = head.split()
    if len(parts) != 4 or parts[0] != "fuzzyset" or parts[2] != "over":
        raise ParseError("expected 'fuzzyset <name> over <algebra>'", lineno, col)
    name, over = parts[1], parts[3]
    if over != algebra.name:
        raise ParseError(
            f"fuzzy set is over '{over}' but algebra is '{algebra.name}'", lineno, col
        )
    degrees = {}
    ended = False
    for lineno, col, body in rows[1:]:
        if ended:
            raise ParseError("content after 'end'", lineno, col)
        if body == "end":
            ended = True
            continue
        elem, sep, lit = body.partition("=")
        elem, lit = elem.strip(), lit.strip()
        if not sep or not elem or not lit or len(elem.split()) != 1:
            raise ParseError("expected '<element> = <degree>'", lineno, col)
        if elem not in algebra.index:
            raise ParseError(f"unknown element '{elem}'", lineno, col)
        if elem in degrees:
            raise ParseError(f"degree for '{elem}' given twice", lineno, col)
        try:
            degrees[elem] = unit_rational(lit)
        except ValueError as exc:
            raise ParseError(str(exc), lineno, _literal_col(body, lit, col)) from None
    if not ended:
        raise ParseError("missing 'end'", rows[-1][0])
    missing = [e for e in algebra.elements if e not in degrees]
    if missing:
        raise ParseError(f"no degree for {', '.join(missing)}", rows[0][0])
    return FuzzySet(algebra, degrees, name=name)


def _literal_col(body, lit, col):
    return col + body.rfind(lit)


def format_fuzzy_set(F, name=None):
    name = name or F.name or "F"
    out = [f"fuzzyset {name} over {F.algebra.name}"]
    out += [f"{e} = {render_rational(v)}" for e, v in zip(F.algebra.elements, F.values)]
    out.append("end")
    return "\n".join(out) + "\n"
