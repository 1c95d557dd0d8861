"""Subgroup lattices of small groups and minimal faithful permutation degree."""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from fnq import kernel
from fnq.groups.core import FiniteGroup

DEFAULT_ORDER_CAP = 200
_DIGITS = bytes.maketrans(b"\x00\x01", b"01")


class OrderCapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class Subgroup:
    mask: int  # bit k set iff element k belongs
    gens: tuple[int, ...]
    order: int


def _to_int(mask: bytes) -> int:
    # byte-per-element 0/1 mask to a bitmask
    return int(bytes(reversed(mask)).translate(_DIGITS) or b"0", 2)


def _bit_list(mask: int) -> list[int]:
    out = []
    k = 0
    while mask:
        if mask & 1:
            out.append(k)
        mask >>= 1
        k += 1
    return out


def enumerate_subgroups(G: FiniteGroup, cap_order: int = DEFAULT_ORDER_CAP) -> list[Subgroup]:
    """Every subgroup of ``G``, by repeated cyclic extension.

    Starts from the cyclic subgroups and joins each known subgroup with each
    cyclic subgroup it does not already contain until nothing new appears.
    """
    n = G.order
    if n > cap_order:
        raise OrderCapExceeded(f"group order {n} exceeds subgroup-enumeration cap {cap_order}")
    table = kernel.multiplication_table(G.perms)

    cyclic: dict[int, int] = {}
    for g in range(n):
        m = _to_int(kernel.table_join(table, n, [g]))
        cyclic.setdefault(m, g)
    cyclic_items = sorted(cyclic.items(), key=lambda kv: kv[1])

    found: dict[int, tuple[int, ...]] = {}
    for m, g in cyclic_items:
        found[m] = (g,) if g else ()
    frontier = list(found)
    while frontier:
        nxt = []
        for h in frontier:
            gens = found[h]
            for c, g in cyclic_items:
                if c & ~h == 0:
                    continue
                m = _to_int(kernel.table_join(table, n, list(gens) + [g]))
                if m not in found:
                    found[m] = gens + (g,)
                    nxt.append(m)
        frontier = nxt
    subs = [Subgroup(m, gens, bin(m).count("1")) for m, gens in found.items()]
    subs.sort(key=lambda s: (s.order, _bit_list(s.mask)))
    return subs


def core_mask(G: FiniteGroup, mask: int) -> int:
    """Largest normal subgroup inside ``mask``: the union of classes it contains."""
    out = 0
    for cls in G.classes():
        if all(mask >> k & 1 for k in cls.members):
            for k in cls.members:
                out |= 1 << k
    return out


def minimal_faithful_family(G: FiniteGroup, cap_order: int = DEFAULT_ORDER_CAP) -> tuple[int, list[Subgroup]]:
    """Least ``Σ [G:H_i]`` over subgroup families whose cores meet trivially.

    Shortest path over normal subgroups: from ``G``, each step intersects the
    current normal subgroup with a core and pays that subgroup's index.
    Returns the degree and one optimal family.
    """
    n = G.order
    if n == 1:
        return 1, []
    subs = enumerate_subgroups(G, cap_order)
    # per core keep the cheapest subgroup
    best: dict[int, Subgroup] = {}
    for s in subs:
        c = core_mask(G, s.mask)
        if c not in best or s.order > best[c].order:
            best[c] = s
    full, trivial = (1 << n) - 1, 1
    best.pop(full, None)

    dist = {full: 0}
    prev: dict[int, tuple[int, Subgroup]] = {}
    heap = [(0, full)]
    while heap:
        d, state = heapq.heappop(heap)
        if state == trivial:
            family = []
            while state != full:
                state, s = prev[state]
                family.append(s)
            return d, family[::-1]
        if d > dist.get(state, d):
            continue
        for c, s in best.items():
            nxt = state & c
            if nxt == state:
                continue
            nd = d + n // s.order
            if nd < dist.get(nxt, nd + 1):
                dist[nxt] = nd
                prev[nxt] = (state, s)
                heapq.heappush(heap, (nd, nxt))
    raise AssertionError("no faithful family found")


def minimal_faithful_degree(G: FiniteGroup, cap_order: int = DEFAULT_ORDER_CAP) -> int:
    return minimal_faithful_family(G, cap_order)[0]


def coset_action(G: FiniteGroup, mask: int) -> list[tuple[int, ...]]:
    """Images of every element of ``G`` acting on the right cosets of a subgroup.

    Entry ``k`` is the permutation of coset labels induced by element ``k``.
    """
    n = G.order
    table = kernel.multiplication_table(G.perms)
    members = _bit_list(mask)
    label = [-1] * n
    reps = []
    for g in range(n):
        if label[g] < 0:
            for h in members:
                label[table[h * n + g]] = len(reps)
            reps.append(g)
    return [tuple(label[table[r * n + x]] for r in reps) for x in range(n)]
