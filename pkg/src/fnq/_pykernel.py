"""Pure-Python permutation kernel; reference twin of ``_kernel.pyx``.

Permutations are tuples of 0-based images.  Products act left to right:
``(p*q)[k] == q[p[k]]``.
"""

from __future__ import annotations

from array import array
from math import gcd


def _mul(p, q):
    return tuple([q[i] for i in p])


def _inv(p):
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def perm_closure(gens, degree, cap):
    """Breadth-first closure from the identity.

    Returns ``(perms, parents, gen_index, complete)``; element ``k > 0`` equals
    ``perms[parents[k]] * gens[gen_index[k]]``.  When the cap is hit the
    partial enumeration is returned with ``complete=False``.
    """
    ident = tuple(range(degree))
    perms = [ident]
    parents = [-1]
    gen_index = [-1]
    seen = {ident: 0}
    i = 0
    while i < len(perms):
        p = perms[i]
        for g_idx, g in enumerate(gens):
            q = tuple([g[k] for k in p])
            if q not in seen:
                if len(perms) >= cap:
                    return perms, parents, gen_index, False
                seen[q] = len(perms)
                perms.append(q)
                parents.append(i)
                gen_index.append(g_idx)
        i += 1
    return perms, parents, gen_index, True


def class_labels(perms, gens):
    """Label each element by its conjugacy class (classes numbered by first occurrence)."""
    index = {p: i for i, p in enumerate(perms)}
    pairs = [(g, _inv(g)) for g in gens]
    labels = [-1] * len(perms)
    n_classes = 0
    for start in range(len(perms)):
        if labels[start] != -1:
            continue
        labels[start] = n_classes
        stack = [start]
        while stack:
            x = perms[stack.pop()]
            for g, gi in pairs:
                # y = g^-1 x g
                y = tuple([g[x[k]] for k in gi])
                j = index[y]
                if labels[j] == -1:
                    labels[j] = n_classes
                    stack.append(j)
        n_classes += 1
    return labels


def perm_orders(perms):
    out = []
    for p in perms:
        seen = [False] * len(p)
        order = 1
        for s in range(len(p)):
            if seen[s]:
                continue
            length = 0
            k = s
            while not seen[k]:
                seen[k] = True
                k = p[k]
                length += 1
            order = order * length // gcd(order, length)
        out.append(order)
    return out


def count_commuting(perms, members, x):
    px = perms[x]
    total = 0
    for m in members:
        py = perms[m]
        if all(py[px[k]] == px[py[k]] for k in range(len(px))):
            total += 1
    return total


def multiplication_table(perms):
    """Flat ``N*N`` table with ``table[i*N + j] = index(perms[i] * perms[j])``."""
    index = {p: i for i, p in enumerate(perms)}
    n = len(perms)
    table = array("i", bytes(4 * n * n))
    for i, p in enumerate(perms):
        row = i * n
        for j, q in enumerate(perms):
            table[row + j] = index[tuple([q[k] for k in p])]
    return table


def table_join(table, n, gens):
    """Subgroup generated by element indices ``gens`` as an ``n``-byte 0/1 mask."""
    mask = bytearray(n)
    mask[0] = 1
    frontier = [0]
    gens = [g for g in gens if g != 0]
    while frontier:
        nxt = []
        for x in frontier:
            row = x * n
            for g in gens:
                y = table[row + g]
                if not mask[y]:
                    mask[y] = 1
                    nxt.append(y)
        frontier = nxt
    return bytes(mask)
