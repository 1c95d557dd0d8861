"""Simultaneous eigenspaces ``E_I`` of the ``ε_iε_j`` action on a D'_n-module.

For ``I ⊆ {1..n}`` the space ``E_I`` consists of the vectors on which every
``ε_iε_j`` acts by ``(-1)^(χ_I(i) + χ_I(j))``.  ``I`` and its complement give
the same signs, so each pair is stored once under a canonical subset.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping, Sequence

Matrix = Sequence[Sequence[int]]


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    m = [[x % p for x in r] for r in rows]
    rank = 0
    width = len(m[0]) if m else 0
    for c in range(width):
        piv = next((r for r in range(rank, len(m)) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], -1, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][c]:
                f = m[r][c]
                m[r] = [(x - f * y) % p for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


def _matmul(a: Matrix, b: Matrix, p: int) -> list[list[int]]:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(r, c)) % p for c in cols] for r in a]


def _is_identity(m: Matrix, p: int) -> bool:
    return all((m[i][j] - (i == j)) % p == 0 for i in range(len(m)) for j in range(len(m)))


def canonical_subset(subset, n: int) -> tuple[int, ...]:
    """Representative of ``{I, N∖I}``: the smaller one, ties broken lexicographically."""
    s = tuple(sorted(subset))
    comp = tuple(i for i in range(1, n + 1) if i not in s)
    return min((len(s), s), (len(comp), comp))[1]


def canonical_subsets(n: int) -> list[tuple[int, ...]]:
    out = []
    for k in range(n // 2 + 1):
        for s in itertools.combinations(range(1, n + 1), k):
            if canonical_subset(s, n) == s:
                out.append(s)
    return out


@dataclass
class ModuleDecomposition:
    n: int
    p: int
    dims: dict[tuple[int, ...], int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.dims.values())

    def nonzero(self) -> dict[tuple[int, ...], int]:
        return {k: v for k, v in self.dims.items() if v}


def decompose(images: Mapping[tuple[int, int], Matrix], p: int, n: int | None = None) -> ModuleDecomposition:
    """Dimensions of every ``E_I`` for the given images of ``ε_iε_j`` (``i < j``).

    Matrices act on row vectors.  Raises ``ValueError`` unless ``p`` is odd
    and the inputs are pairwise commuting involutions of one size.
    """
    if p % 2 == 0:
        raise ValueError("decomposition needs an odd prime")
    if n is None:
        n = max(max(k) for k in images)
    mats = {tuple(sorted(k)): [list(map(int, r)) for r in m] for k, m in images.items()}
    dims = {len(m) for m in mats.values()}
    if len(dims) != 1:
        raise ValueError("matrices of different sizes")
    d = dims.pop()
    keys = sorted(mats)
    for k in keys:
        if not _is_identity(_matmul(mats[k], mats[k], p), p):
            raise ValueError(f"image of eps{k[0]}eps{k[1]} is not an involution")
    for a, b in itertools.combinations(keys, 2):
        if _matmul(mats[a], mats[b], p) != _matmul(mats[b], mats[a], p):
            raise ValueError(f"images of {a} and {b} do not commute")

    out = ModuleDecomposition(n, p)
    for subset in canonical_subsets(n):
        chi = {i: int(i in subset) for i in range(1, n + 1)}
        # v(M - sI) = 0 for all pairs: left null space of the concatenation
        blocks = []
        for i, j in keys:
            s = -1 if (chi[i] + chi[j]) % 2 else 1
            m = mats[(i, j)]
            blocks.append([[(m[r][c] - s * (r == c)) % p for c in range(d)] for r in range(d)])
        wide = [[x for blk in blocks for x in blk[r]] for r in range(d)]
        out.dims[subset] = d - rank_mod_p(wide, p) if keys else d
    return out


def standard_module(n: int, p: int) -> dict[tuple[int, int], list[list[int]]]:
    """``ε_iε_j`` as the diagonal matrix with ``-1`` in slots ``i`` and ``j``."""
    out = {}
    for i, j in itertools.combinations(range(1, n + 1), 2):
        out[(i, j)] = [[(-1 if r + 1 in (i, j) else 1) % p if r == c else 0 for c in range(n)] for r in range(n)]
    return out


def direct_sum(a: Mapping, b: Mapping, p: int) -> dict:
    out = {}
    for k in a:
        x, y = a[k], b[k]
        dx, dy = len(x), len(y)
        out[k] = [list(r) + [0] * dy for r in x] + [[0] * dx + list(r) for r in y]
    return out


def trivial_module(n: int, dim: int) -> dict:
    ident = [[int(r == c) for c in range(dim)] for r in range(dim)]
    return {k: ident for k in itertools.combinations(range(1, n + 1), 2)}


def change_basis(images: Mapping, P: Matrix, p: int) -> dict:
    """Conjugate every image by the invertible matrix ``P``: ``P^-1 M P``."""
    Pinv = _inverse(P, p)
    return {k: _matmul(_matmul(Pinv, m, p), P, p) for k, m in images.items()}


def _inverse(m: Matrix, p: int) -> list[list[int]]:
    n = len(m)
    a = [[x % p for x in r] + [int(i == j) for j in range(n)] for i, r in enumerate(m)]
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[c], a[piv] = a[piv], a[c]
        inv = pow(a[c][c], -1, p)
        a[c] = [x * inv % p for x in a[c]]
        for r in range(n):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [(x - f * y) % p for x, y in zip(a[r], a[c])]
    return [r[n:] for r in a]
