"""
Enumeration of all BL-algebras of a given small size, up to isomorphism.

:func:`generate_bl_algebras` walks bounded lattices first and searches
monotone commutative multiplications on each; :func:`generate_bl_algebras_naive`
tries every commutative multiplication with a top identity and lets
:func:`validate_bl` decide. The two share nothing but the validator and the
canonical form, and must produce the same set.
"""

from __future__ import annotations

import itertools

from ..algebra import (
    FiniteBLAlgebra,
    canonical_form,
    default_names,
    from_canonical,
    validate_bl,
)
from ..errors import AlgebraError

MIN_SIZE, MAX_SIZE = 2, 6


def _lattice_orders(n):
    """Bounded lattice orders on 0..n-1 (0 bottom, n-1 top), up to isomorphism.

    Inner elements are naturally labeled (i < j whenever i is strictly below
    j), which every finite poset admits.
    """
    top = n - 1
    inner = list(range(1, top))
    pairs = [(i, j) for i in inner for j in inner if i < j]
    seen, out = set(), []
    for bits in itertools.product((False, True), repeat=len(pairs)):
        le = [[i == j or i == 0 or j == top for j in range(n)] for i in range(n)]
        for (i, j), b in zip(pairs, bits):
            le[i][j] = b
        if any(
            le[i][j] and le[j][k] and not le[i][k]
            for i in range(n) for j in range(n) for k in range(n)
        ):
            continue
        if not _is_lattice(le):
            continue
        key = _canonical_order(le)
        if key not in seen:
            seen.add(key)
            out.append(tuple(tuple(r) for r in le))
    return out


def _is_lattice(le):
    n = len(le)
    for x in range(n):
        for y in range(x + 1, n):
            lows = [z for z in range(n) if le[z][x] and le[z][y]]
            if sum(all(le[w][z] for w in lows) for z in lows) != 1:
                return False
            ups = [z for z in range(n) if le[x][z] and le[y][z]]
            if sum(all(le[z][w] for w in ups) for z in ups) != 1:
                return False
    return True


def _canonical_order(le):
    n = len(le)
    best = None
    for perm in itertools.permutations(range(1, n - 1)):
        old = (0, *perm, n - 1)
        key = tuple(le[old[i]][old[j]] for i in range(n) for j in range(n))
        if best is None or key < best:
            best = key
    return best


def _meet_table(le):
    n = len(le)
    t = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            lows = [z for z in range(n) if le[z][x] and le[z][y]]
            t[x][y] = next(z for z in lows if all(le[w][z] for w in lows))
    return t


def _residuum(le, mul):
    """x -> y as the greatest z with x*z <= y, or None if some max is missing."""
    n = len(le)
    res = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            s = [z for z in range(n) if le[mul[x][z]][y]]
            tops = [z for z in s if all(le[w][z] for w in s)]
            if len(tops) != 1:
                return None
            res[x][y] = tops[0]
    return res


def _multiplications(le):
    """Commutative, monotone tables with 1 as identity, 0 absorbing and
    x*y <= x meet y. Associativity is checked once a table is complete."""
    n = len(le)
    top = n - 1
    meet = _meet_table(le)
    inner = list(range(1, top))
    cells = [(i, j) for i in inner for j in inner if i <= j]
    mul = [[0] * n for _ in range(n)]
    done = [[x in (0, top) or y in (0, top) for y in range(n)] for x in range(n)]
    for x in range(n):
        mul[x][top] = mul[top][x] = x

    def monotone_ok(i, j):
        v = mul[i][j]
        for a in range(n):
            for b in range(n):
                if not done[a][b]:
                    continue
                if le[a][i] and le[b][j] and not le[mul[a][b]][v]:
                    return False
                if le[i][a] and le[j][b] and not le[v][mul[a][b]]:
                    return False
        return True

    def rec(k):
        if k == len(cells):
            if all(
                mul[mul[x][y]][z] == mul[x][mul[y][z]]
                for x in inner for y in inner for z in inner
            ):
                yield [row[:] for row in mul]
            return
        i, j = cells[k]
        done[i][j] = done[j][i] = True
        for v in range(n):
            if not le[v][meet[i][j]]:
                continue
            mul[i][j] = mul[j][i] = v
            if monotone_ok(i, j):
                yield from rec(k + 1)
        done[i][j] = done[j][i] = False
        mul[i][j] = mul[j][i] = 0

    yield from rec(0)


def _check_size(n):
    if not MIN_SIZE <= n <= MAX_SIZE:
        raise AlgebraError(f"generation supports sizes {MIN_SIZE}..{MAX_SIZE}, got {n}")


def _name_all(keys, n, tag):
    return [from_canonical(k, f"{tag}{n}_{i}") for i, k in enumerate(sorted(keys))]


def generate_bl_algebras(n):
    """All BL-algebras with n elements up to isomorphism, in canonical order."""
    _check_size(n)
    names = default_names(n)
    keys = set()
    for le in _lattice_orders(n):
        for mul in _multiplications(le):
            res = _residuum(le, mul)
            if res is None:
                continue
            alg = FiniteBLAlgebra.from_indices("candidate", names, mul, res)
            if alg.le != le:
                continue
            if validate_bl(alg).valid:
                keys.add(canonical_form(alg))
    return _name_all(keys, n, "bl")


def generate_bl_algebras_naive(n):
    """Reference enumerator for n <= 4: every commutative table with top as
    identity, order read off as divisibility (x <= y iff x = y*z for some z),
    residuum as the greatest solution, full validation at the end."""
    if not MIN_SIZE <= n <= 4:
        raise AlgebraError("the naive enumerator is limited to n <= 4")
    names = default_names(n)
    top = n - 1
    cells = [(i, j) for i in range(top) for j in range(top) if i <= j]
    keys = set()
    for values in itertools.product(range(n), repeat=len(cells)):
        mul = [[0] * n for _ in range(n)]
        for x in range(n):
            mul[x][top] = mul[top][x] = x
        for (i, j), v in zip(cells, values):
            mul[i][j] = mul[j][i] = v
        le = [[any(mul[y][z] == x for z in range(n)) for y in range(n)] for x in range(n)]
        res = [[None] * n for _ in range(n)]
        ok = True
        for x in range(n):
            for y in range(n):
                sols = [z for z in range(n) if le[mul[x][z]][y]]
                best = [z for z in sols if all(le[w][z] for w in sols)]
                if len(best) != 1:
                    ok = False
                    break
                res[x][y] = best[0]
            if not ok:
                break
        if not ok:
            continue
        alg = FiniteBLAlgebra.from_indices("candidate", names, mul, res)
        if validate_bl(alg).valid:
            keys.add(canonical_form(alg))
    return _name_all(keys, n, "naive")
