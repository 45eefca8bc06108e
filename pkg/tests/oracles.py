"""Brute-force references that avoid the library's action matrices.

Group elements are permutations of the full root set; length is the
breadth-first distance from the identity in the Cayley graph.
"""
from collections import deque
from functools import lru_cache
from itertools import product

from bsdh_fano.rootsys import cartan_matrix, positive_roots, reflect


@lru_cache(maxsize=None)
def root_perm_data(t):
    c = cartan_matrix(t)
    pos = sorted(positive_roots(t), key=lambda r: r.coeffs)
    roots = pos + [-r for r in pos]
    index = {r: k for k, r in enumerate(roots)}
    gens = [tuple(index[reflect(c, i, r)] for r in roots) for i in range(1, t.rank + 1)]
    return roots, gens


def perm_of_word(t, letters):
    roots, gens = root_perm_data(t)
    p = tuple(range(len(roots)))
    for x in letters:
        g = gens[x - 1]
        p = tuple(p[g[k]] for k in range(len(p)))
    return p


@lru_cache(maxsize=None)
def cayley_distances(t):
    roots, gens = root_perm_data(t)
    start = tuple(range(len(roots)))
    dist = {start: 0}
    queue = deque([start])
    while queue:
        p = queue.popleft()
        for g in gens:
            q = tuple(p[g[k]] for k in range(len(p)))
            if q not in dist:
                dist[q] = dist[p] + 1
                queue.append(q)
    return dist


def group_order(t):
    return len(cayley_distances(t))


def bfs_length(t, letters):
    return cayley_distances(t)[perm_of_word(t, letters)]


def reduced_by_filter(t, max_len):
    """Every word of length <= max_len whose length equals its Cayley distance."""
    out = []
    for L in range(max_len + 1):
        for w in product(range(1, t.rank + 1), repeat=L):
            if bfs_length(t, w) == L:
                out.append(w)
    return out


def cartan_by_formula(family, rank):
    """Cartan integers 2(a_j, a_i)/(a_i, a_i) from explicit Gram matrices.

    Orientation matches the library: B_n short root last, C_n long root last,
    F4 short roots 3 and 4, G2 long root first.
    """
    from fractions import Fraction

    n = rank
    g = [[Fraction(0)] * n for _ in range(n)]
    sq = [Fraction(2)] * n
    bonds = []
    if family in "ABC":
        bonds = [(k, k + 1) for k in range(n - 1)]
    elif family == "D":
        bonds = [(k, k + 1) for k in range(n - 2)] + [(n - 3, n - 1)]
    elif family == "E":
        bonds = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(k, k + 1) for k in range(4, n - 1)]
    elif family == "F":
        bonds = [(0, 1), (1, 2), (2, 3)]
        sq = [Fraction(2), Fraction(2), Fraction(1), Fraction(1)]
    elif family == "G":
        bonds = [(0, 1)]
        sq = [Fraction(6), Fraction(2)]
    if family == "B":
        sq[-1] = Fraction(1)
    if family == "C":
        sq[-1] = Fraction(4)
    for k in range(n):
        g[k][k] = sq[k]
    for a, b in bonds:
        # for every bond in these diagrams (a, b) = -max(|a|^2, |b|^2) / 2
        g[a][b] = g[b][a] = -max(sq[a], sq[b]) / 2
    return [[int(2 * g[j][i] / g[i][i]) for j in range(n)] for i in range(n)]
