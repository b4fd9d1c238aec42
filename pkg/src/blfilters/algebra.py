"""
Finite BL-algebras given by their multiplication and residuum tables.

Elements are referred to by name in the public API. Internally every
element is an index into ``elements`` and the tables are tuples of
tuples of indices, which is what the filter and taxonomy code loops over.
The order is never declared: it is read off the residuum table
(x <= y iff x -> y is the top element) and meet/join are derived from it.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field

from .errors import AlgebraError, ParseError


class FiniteBLAlgebra:
    """Immutable finite algebra (L, odot, ->, 0, 1) with derived lattice.

    ``meet_t``/``join_t`` hold ``None`` for pairs without a unique
    greatest lower / least upper bound, so that a malformed table can still
    be loaded and reported on by :func:`validate_bl`.
    """

    def __init__(self, name, elements, bottom, top, odot, imp):
        elements = tuple(str(e) for e in elements)
        if len(elements) < 2:
            raise AlgebraError("an algebra needs at least two elements")
        if len(set(elements)) != len(elements):
            raise AlgebraError("duplicate element names")
        index = {e: i for i, e in enumerate(elements)}
        n = len(elements)

        def lookup(x):
            if isinstance(x, int) and not isinstance(x, bool):
                if not 0 <= x < n:
                    raise AlgebraError(f"element index {x} out of range")
                return x
            try:
                return index[str(x)]
            except KeyError:
                raise AlgebraError(f"unknown element {x!r}") from None

        def table(rows, label):
            rows = [list(r) for r in rows]
            if len(rows) != n or any(len(r) != n for r in rows):
                raise AlgebraError(f"{label} table must be {n}x{n}")
            return tuple(tuple(lookup(c) for c in r) for r in rows)

        self.name = str(name)
        self.elements = elements
        self.index = index
        self.n = n
        self.zero = lookup(bottom)
        self.one = lookup(top)
        self.mul = table(odot, "odot")
        self.res = table(imp, "imp")
        self.le = tuple(
            tuple(self.res[x][y] == self.one for y in range(n)) for x in range(n)
        )
        self.meet_t = tuple(
            tuple(_bound(self.le, x, y, lower=True) for y in range(n)) for x in range(n)
        )
        self.join_t = tuple(
            tuple(_bound(self.le, x, y, lower=False) for y in range(n)) for x in range(n)
        )
        # memo space for derived data (filter masks, compiled rules)
        self._cache = {}

    @classmethod
    def from_indices(cls, name, elements, odot, imp, bottom=0, top=None):
        if top is None:
            top = len(elements) - 1
        return cls(name, elements, bottom, top, odot, imp)

    @property
    def bottom(self):
        return self.elements[self.zero]

    @property
    def top(self):
        return self.elements[self.one]

    @property
    def odot(self):
        return tuple(tuple(self.elements[c] for c in row) for row in self.mul)

    @property
    def imp(self):
        return tuple(tuple(self.elements[c] for c in row) for row in self.res)

    @property
    def leq_table(self):
        return self.le

    def idx(self, x):
        """Index of an element given by name or by integer position."""
        if isinstance(x, int) and not isinstance(x, bool) and 0 <= x < self.n:
            return x
        try:
            return self.index[x]
        except KeyError:
            raise AlgebraError(f"unknown element {x!r} in algebra {self.name}") from None

    def name_of(self, i):
        return self.elements[i]

    def negation(self, i):
        return self.res[i][self.zero]

    def _key(self):
        return (self.elements, self.zero, self.one, self.mul, self.res)

    def __eq__(self, other):
        if not isinstance(other, FiniteBLAlgebra):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"FiniteBLAlgebra({self.name!r}, n={self.n})"


def _bound(le, x, y, lower):
    n = len(le)
    if lower:
        cands = [z for z in range(n) if le[z][x] and le[z][y]]
        best = [z for z in cands if all(le[w][z] for w in cands)]
    else:
        cands = [z for z in range(n) if le[x][z] and le[y][z]]
        best = [z for z in cands if all(le[z][w] for w in cands)]
    return best[0] if len(best) == 1 else None


def leq(alg, x, y):
    """x <= y, i.e. x -> y equals the top element."""
    return alg.res[alg.idx(x)][alg.idx(y)] == alg.one


def neg(alg, x):
    """The negation x' = x -> 0."""
    return alg.elements[alg.res[alg.idx(x)][alg.zero]]


# ---------------------------------------------------------------- parsing

_TOKEN = re.compile(r"\S+")


def _lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        toks = [(m.start() + 1, m.group()) for m in _TOKEN.finditer(body)]
        if toks:
            yield lineno, toks


def parse_algebra(text):
    """Parse the line-oriented algebra format into a :class:`FiniteBLAlgebra`.

    No axiom is checked here; see :func:`validate_bl`.
    """
    lines = list(_lines(text))
    pos = 0
    last_line = lines[-1][0] if lines else 1

    def take(keyword, nargs=None):
        nonlocal pos
        if pos >= len(lines):
            raise ParseError(f"expected '{keyword}', got end of input", last_line)
        lineno, toks = lines[pos]
        col, head = toks[0]
        if head != keyword:
            if keyword in ("bottom", "top") and head in ("top", "bottom", "odot:", "imp:"):
                raise ParseError(f"missing '{keyword}' declaration", lineno, col)
            raise ParseError(f"expected '{keyword}', got '{head}'", lineno, col)
        args = toks[1:]
        if nargs is not None and len(args) != nargs:
            c = args[nargs][0] if len(args) > nargs else col + len(head)
            raise ParseError(f"'{keyword}' takes {nargs} argument(s)", lineno, c)
        pos += 1
        return lineno, args

    _, args = take("algebra", 1)
    name = args[0][1]
    lineno, args = take("elements")
    if len(args) < 2:
        raise ParseError("need at least two elements", lineno)
    elements = []
    for col, tok in args:
        if tok in elements:
            raise ParseError(f"duplicate element name '{tok}'", lineno, col)
        elements.append(tok)
    n = len(elements)

    def element(tok, lineno, col):
        if tok not in elements:
            raise ParseError(f"unknown element '{tok}'", lineno, col)
        return tok

    lineno, args = take("bottom", 1)
    bottom = element(args[0][1], lineno, args[0][0])
    lineno, args = take("top", 1)
    top = element(args[0][1], lineno, args[0][0])

    def read_table(label):
        nonlocal pos
        take(label + ":", 0)
        rows = []
        while len(rows) < n:
            if pos >= len(lines):
                raise ParseError(f"{label} table has {len(rows)} rows, expected {n}", last_line)
            lineno, toks = lines[pos]
            if toks[0][1] in ("imp:", "end"):
                raise ParseError(
                    f"{label} table has {len(rows)} rows, expected {n}", lineno, toks[0][0]
                )
            if len(toks) != n:
                col = toks[n][0] if len(toks) > n else toks[-1][0]
                raise ParseError(
                    f"{label} row has {len(toks)} entries, expected {n}", lineno, col
                )
            rows.append([element(tok, lineno, col) for col, tok in toks])
            pos += 1
        return rows

    odot = read_table("odot")
    imp = read_table("imp")
    take("end", 0)
    if pos != len(lines):
        lineno, toks = lines[pos]
        raise ParseError(f"unexpected '{toks[0][1]}' after 'end'", lineno, toks[0][0])
    return FiniteBLAlgebra(name, elements, bottom, top, odot, imp)


def format_algebra(alg):
    """Serialize in the same format :func:`parse_algebra` reads."""
    width = max(len(e) for e in alg.elements)

    def rows(t):
        return [" ".join(alg.elements[c].ljust(width) for c in row).rstrip() for row in t]

    out = [
        f"algebra {alg.name}",
        "elements " + " ".join(alg.elements),
        f"bottom {alg.bottom}",
        f"top {alg.top}",
        "odot:",
        *rows(alg.mul),
        "imp:",
        *rows(alg.res),
        "end",
    ]
    return "\n".join(out) + "\n"


# ------------------------------------------------------------- validation


@dataclass(frozen=True)
class AxiomReport:
    violations: tuple = ()

    @property
    def valid(self):
        return not self.violations

    def __bool__(self):
        return self.valid


def _first(n, arity, pred):
    for t in itertools.product(range(n), repeat=arity):
        if not pred(*t):
            return t
    return None


def validate_bl(alg):
    """Check the bounded-lattice shape and the four BL axioms.

    Each violated axiom contributes one ``(axiom, witness)`` pair whose
    witness is the lexicographically first failing tuple of element names.
    Divisibility and prelinearity are skipped when meet/join are undefined.
    """
    n, le, mul, res = alg.n, alg.le, alg.mul, alg.res
    meet, join = alg.meet_t, alg.join_t
    zero, one = alg.zero, alg.one
    checks = [
        ("reflexive", 1, lambda x: le[x][x]),
        ("antisymmetric", 2, lambda x, y: x == y or not (le[x][y] and le[y][x])),
        ("transitive", 3, lambda x, y, z: not (le[x][y] and le[y][z]) or le[x][z]),
        ("bounds", 1, lambda x: le[zero][x] and le[x][one]),
        ("meet", 2, lambda x, y: meet[x][y] is not None),
        ("join", 2, lambda x, y: join[x][y] is not None),
        ("commutative", 2, lambda x, y: mul[x][y] == mul[y][x]),
        ("associative", 3, lambda x, y, z: mul[mul[x][y]][z] == mul[x][mul[y][z]]),
        ("identity", 1, lambda x: mul[one][x] == x and mul[x][one] == x),
        ("adjointness", 3, lambda x, y, z: le[z][res[x][y]] == le[mul[x][z]][y]),
    ]
    violations = []
    for axiom, arity, pred in checks:
        w = _first(n, arity, pred)
        if w is not None:
            violations.append((axiom, tuple(alg.elements[i] for i in w)))
    lattice_ok = not any(v[0] in ("meet", "join") for v in violations)
    if lattice_ok:
        for axiom, pred in (
            ("divisibility", lambda x, y: meet[x][y] == mul[x][res[x][y]]),
            ("prelinearity", lambda x, y: join[res[x][y]][res[y][x]] == one),
        ):
            w = _first(n, 2, pred)
            if w is not None:
                violations.append((axiom, tuple(alg.elements[i] for i in w)))
    return AxiomReport(tuple(violations))


@dataclass(frozen=True)
class PropertyReport:
    results: tuple = field(default_factory=tuple)  # (name, witness or None)

    @property
    def passed(self):
        return all(w is None for _, w in self.results)

    def failures(self):
        return [(name, w) for name, w in self.results if w is not None]


# Arithmetic laws every BL-algebra satisfies, each as (name, arity, predicate
# factory). The factories close over the index tables of one algebra.
def _arithmetic_laws(alg):
    le, mul, res = alg.le, alg.mul, alg.res
    meet, join = alg.meet_t, alg.join_t
    zero, one = alg.zero, alg.one

    def nv(x):
        return res[x][zero]

    return [
        ("order_residuum", 2, lambda x, y: (res[x][y] == one) == (meet[x][y] == x)),
        (
            "exchange",
            3,
            lambda x, y, z: res[x][res[y][z]] == res[mul[x][y]][z] == res[y][res[x][z]],
        ),
        ("product_below_meet", 2, lambda x, y: le[mul[x][y]][meet[x][y]]),
        (
            "residuum_monotone",
            3,
            lambda x, y, z: le[res[x][y]][res[res[z][x]][res[z][y]]]
            and le[res[x][y]][res[res[y][z]][res[x][z]]],
        ),
        # x -> x' == x'' -> x'; with a bare x on the right it fails at x = 1
        ("negation_swap", 1, lambda x: res[x][nv(x)] == res[nv(nv(x))][nv(x)]),
        (
            "complement_meet",
            1,
            lambda x: join[x][nv(x)] != one or meet[x][nv(x)] == zero,
        ),
        (
            "join_formula",
            2,
            lambda x, y: join[x][y] == meet[res[res[x][y]][y]][res[res[y][x]][x]],
        ),
    ]


ARITHMETIC_LAWS = (
    "order_residuum",
    "exchange",
    "product_below_meet",
    "residuum_monotone",
    "negation_swap",
    "complement_meet",
    "join_formula",
)


def check_arithmetic_properties(alg):
    """Evaluate the seven standard BL arithmetic laws over all tuples."""
    report = validate_bl(alg)
    if not report.valid:
        axiom, witness = report.violations[0]
        raise AlgebraError(
            f"{alg.name} is not a BL-algebra ({axiom} fails at {witness})"
        )
    results = []
    for name, arity, pred in _arithmetic_laws(alg):
        w = _first(alg.n, arity, pred)
        results.append((name, None if w is None else tuple(alg.elements[i] for i in w)))
    return PropertyReport(tuple(results))


# ------------------------------------------------------------ isomorphism


def canonical_form(alg):
    """Least (odot, imp) index-table pair over relabelings fixing 0 and 1.

    Bottom is relabeled 0, top n-1, the remaining elements 1..n-2 in every
    possible order. Two algebras are isomorphic iff their canonical forms
    are equal.
    """
    n = alg.n
    inner = [i for i in range(n) if i not in (alg.zero, alg.one)]
    best = None
    for perm in itertools.permutations(inner):
        old = (alg.zero, *perm, alg.one)  # new label -> old index
        new = {o: k for k, o in enumerate(old)}
        key = (
            tuple(new[alg.mul[old[i]][old[j]]] for i in range(n) for j in range(n)),
            tuple(new[alg.res[old[i]][old[j]]] for i in range(n) for j in range(n)),
        )
        if best is None or key < best:
            best = key
    return (n, *best)


def is_isomorphic(a, b):
    return a.n == b.n and canonical_form(a) == canonical_form(b)


def from_canonical(key, name=None):
    """Rebuild an algebra from :func:`canonical_form` output."""
    n, mul_flat, res_flat = key
    mul = [mul_flat[i * n:(i + 1) * n] for i in range(n)]
    res = [res_flat[i * n:(i + 1) * n] for i in range(n)]
    return FiniteBLAlgebra.from_indices(name or f"bl{n}", default_names(n), mul, res)


def default_names(n):
    letters = "abcdefghijklmnopqrstuvwxyz"
    return ("0", *letters[: n - 2], "1")
