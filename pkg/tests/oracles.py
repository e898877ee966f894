"""
Brute-force reference implementations used only by the tests.

Nothing here imports the algorithms under test; they work directly on the
Cayley table as nested lists.
"""

import itertools


def rows(g):
    return g.table.tolist()


def brute_subgroups(g):
    """All subsets containing 0 that are closed under the product (2^(n-1) candidates)."""
    t = rows(g)
    n = len(t)
    found = []
    others = list(range(1, n))
    for bits in range(1 << (n - 1)):
        s = {0} | {others[i] for i in range(n - 1) if bits >> i & 1}
        if all(t[x][y] in s for x in s for y in s):
            found.append(frozenset(s))
    return found


def brute_centralizer(g, h):
    t = rows(g)
    return frozenset(x for x in range(len(t)) if all(t[x][y] == t[y][x] for y in h))


def brute_order(g, x):
    t = rows(g)
    k, y = 1, x
    while y != 0:
        y = t[y][x]
        k += 1
    return k


def brute_is_group(t):
    n = len(t)
    r = range(n)
    if any(not 0 <= t[i][j] < n for i in r for j in r):
        return False
    if any(t[0][j] != j or t[j][0] != j for j in r):
        return False
    if any(sum(t[i][j] == 0 for j in r) != 1 for i in r):
        return False
    return all(t[t[i][j]][k] == t[i][t[j][k]] for i in r for j in r for k in r)


def find_isomorphism(g, h):
    """Bijection f with f(xy) = f(x)f(y), searched over all permutations fixing 0."""
    a, b = rows(g), rows(h)
    n = len(a)
    if n != len(b):
        return None
    for perm in itertools.permutations(range(1, n)):
        f = (0,) + perm
        if all(f[a[x][y]] == b[f[x]][f[y]] for x in range(n) for y in range(n)):
            return f
    return None


def perm_group_table(perms):
    """Cayley table of a list of permutations (tuples), composed as (p*q)(x) = p(q(x))."""
    pos = {p: i for i, p in enumerate(perms)}
    return [[pos[tuple(p[q[x]] for x in range(len(p)))] for q in perms] for p in perms]


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]
