"""Fully enumerated finite groups and conjugacy-class queries.

A group is closed breadth-first from its generators.  Element kinds with a
point set are encoded as permutations and closed by the kernel; elements are
then materialized lazily from the BFS tree (``elem[k] = elem[parent[k]] *
gen[gen_index[k]]``).  Other kinds are closed in Python and fall back to the
right regular representation when permutation data is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from fnq import kernel

DEFAULT_CAP = 10**6
# right regular representation is N^2 integers; beyond this use an encodable kind
REGULAR_LIMIT = 4096


class ClosureCapExceeded(RuntimeError):
    def __init__(self, partial: int, cap: int):
        super().__init__(f"closure exceeded cap {cap} (enumerated {partial} elements)")
        self.partial = partial
        self.cap = cap


class NotInGroup(ValueError):
    pass


@dataclass(frozen=True)
class ConjugacyClass:
    label: int
    rep: int
    size: int
    order: int
    members: tuple[int, ...]


def _encodable(gens) -> bool:
    return all(hasattr(g, "points") and hasattr(g, "act") for g in gens)


class FiniteGroup:
    """Immutable container for an enumerated group.

    Elements are addressed by their index in the deterministic BFS order;
    index 0 is the identity.
    """

    def __init__(self, gens, identity, parents, gen_index, perms=None, points=None,
                 elements=None, name: str = ""):
        self.gens = tuple(gens)
        self.name = name
        self._identity = identity
        self._parents = parents
        self._gen_index = gen_index
        self._perms = perms
        self._points = points
        self._pt_index = {pt: i for i, pt in enumerate(points)} if points is not None else None
        self._elements = list(elements) if elements is not None else [identity] + [None] * (len(parents) - 1)
        self._lookup = None
        self._classes = None
        self._labels = None
        self._orders = None
        self._inv = None

    # -- basic access -------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self._parents)

    def __len__(self) -> int:
        return self.order

    @property
    def encoded(self) -> bool:
        return self._points is not None

    def element(self, k: int):
        elems = self._elements
        if elems[k] is None:
            chain = []
            j = k
            while elems[j] is None:
                chain.append(j)
                j = self._parents[j]
            for j in reversed(chain):
                elems[j] = elems[self._parents[j]] * self.gens[self._gen_index[j]]
        return elems[k]

    def elements(self) -> list:
        return [self.element(k) for k in range(self.order)]

    def encode(self, x) -> tuple[int, ...]:
        idx = self._pt_index
        return tuple(idx[x.act(pt)] for pt in self._points)

    def index(self, x) -> int:
        if self._lookup is None:
            if self.encoded:
                self._lookup = {p: i for i, p in enumerate(self._perms)}
            else:
                self._lookup = {e: i for i, e in enumerate(self._elements)}
        try:
            key = self.encode(x) if self.encoded else x
            return self._lookup[key]
        except (KeyError, TypeError, AttributeError):
            raise NotInGroup(f"{x!r} is not an element of the group") from None

    def __contains__(self, x) -> bool:
        try:
            self.index(x)
        except NotInGroup:
            return False
        return True

    # -- permutation data ---------------------------------------------------

    @property
    def perms(self) -> list[tuple[int, ...]]:
        if self._perms is None:
            n = self.order
            if n > REGULAR_LIMIT:
                raise ValueError(f"group of order {n} too large for the regular representation")
            self.index(self._identity)
            elems = self.elements()
            self._perms = [tuple(self._lookup[e * g] for e in elems) for g in elems]
        return self._perms

    @property
    def gen_perms(self) -> list[tuple[int, ...]]:
        if self.encoded:
            return [self.encode(g) for g in self.gens]
        perms = self.perms
        return [perms[self.index(g)] for g in self.gens]

    def _perm_index(self, p) -> int:
        if self.encoded:
            return self._lookup_perm(p)
        return self._regular_lookup()[p]

    def _lookup_perm(self, p) -> int:
        if self._lookup is None:
            self.index(self._identity)
        return self._lookup[p]

    def _regular_lookup(self):
        if not hasattr(self, "_reg"):
            self._reg = {p: i for i, p in enumerate(self.perms)}
        return self._reg

    def mul(self, i: int, j: int) -> int:
        p, q = self.perms[i], self.perms[j]
        return self._perm_index(tuple([q[k] for k in p]))

    def inverse_index(self, i: int) -> int:
        if self._inv is None:
            inv = [0] * self.order
            perms = self.perms
            for k, p in enumerate(perms):
                if inv[k]:
                    continue
                out = [0] * len(p)
                for a, b in enumerate(p):
                    out[b] = a
                j = self._perm_index(tuple(out))
                inv[k], inv[j] = j, k
            self._inv = inv
        return self._inv[i]

    def element_orders(self) -> list[int]:
        if self._orders is None:
            self._orders = kernel.perm_orders(self.perms)
        return self._orders

    # -- classes ------------------------------------------------------------

    def class_labels(self) -> list[int]:
        if self._labels is None:
            self._labels = kernel.class_labels(self.perms, self.gen_perms)
        return self._labels

    def classes(self) -> list[ConjugacyClass]:
        if self._classes is None:
            labels = self.class_labels()
            orders = self.element_orders()
            members: dict[int, list[int]] = {}
            for k, c in enumerate(labels):
                members.setdefault(c, []).append(k)
            self._classes = [
                ConjugacyClass(c, ms[0], len(ms), orders[ms[0]], tuple(ms))
                for c, ms in sorted(members.items())
            ]
        return self._classes

    def __repr__(self):
        return f"FiniteGroup({self.name or '?'}, order={self.order})"


def closure(generators: Sequence, cap: int = DEFAULT_CAP, name: str = "") -> FiniteGroup:
    """Enumerate the group generated by ``generators``.

    Raises :class:`ClosureCapExceeded` with the partial count if more than
    ``cap`` elements appear.
    """
    gens = list(generators)
    if not gens:
        raise ValueError("closure needs at least one generator")
    if cap < 1:
        raise ValueError("cap must be positive")
    identity = gens[0] * gens[0].inverse()
    if _encodable(gens):
        points = list(gens[0].points())
        pt_index = {pt: i for i, pt in enumerate(points)}
        gperms = [tuple(pt_index[g.act(pt)] for pt in points) for g in gens]
        perms, parents, gen_index, complete = kernel.perm_closure(gperms, len(points), cap)
        if not complete:
            raise ClosureCapExceeded(len(perms), cap)
        return FiniteGroup(gens, identity, parents, gen_index, perms=perms, points=points, name=name)

    elements = [identity]
    parents, gen_index = [-1], [-1]
    seen = {identity: 0}
    i = 0
    while i < len(elements):
        x = elements[i]
        for g_idx, g in enumerate(gens):
            y = x * g
            if y not in seen:
                if len(elements) >= cap:
                    raise ClosureCapExceeded(len(elements), cap)
                seen[y] = len(elements)
                elements.append(y)
                parents.append(i)
                gen_index.append(g_idx)
        i += 1
    return FiniteGroup(gens, identity, parents, gen_index, elements=elements, name=name)


def conjugacy_classes(G: FiniteGroup) -> list[ConjugacyClass]:
    return G.classes()


def class_of(G: FiniteGroup, x) -> ConjugacyClass:
    return G.classes()[G.class_labels()[G.index(x)]]


def centralizer_order(G: FiniteGroup, x) -> int:
    return G.order // class_of(G, x).size


def class_commuting_count(G: FiniteGroup, x) -> int:
    """``|x^G ∩ C_G(x)|``."""
    k = G.index(x)
    return kernel.count_commuting(G.perms, class_of(G, x).members, k)


def is_real(G: FiniteGroup, x) -> bool:
    k = G.index(x)
    labels = G.class_labels()
    return labels[G.inverse_index(k)] == labels[k]


def _commutes(p, q) -> bool:
    return all(q[p[k]] == p[q[k]] for k in range(len(p)))


def max_commuting_subset_in_class(G: FiniteGroup, x, cap: int = 2000) -> int:
    """Largest set of pairwise commuting elements inside the class of ``x``.

    Maximum clique of the commuting graph on the class (Bron–Kerbosch with
    pivoting); ``cap`` bounds the class size.
    """
    members = class_of(G, x).members
    if len(members) > cap:
        raise ClosureCapExceeded(len(members), cap)
    perms = [G.perms[m] for m in members]
    m = len(perms)
    adj = [0] * m
    for a in range(m):
        for b in range(a + 1, m):
            if _commutes(perms[a], perms[b]):
                adj[a] |= 1 << b
                adj[b] |= 1 << a
    best = 0

    def expand(size: int, cand: int, excl: int) -> None:
        nonlocal best
        if not cand and not excl:
            best = max(best, size)
            return
        if size + bin(cand).count("1") <= best:
            return
        pivot = max(_bits(cand | excl), key=lambda u: bin(cand & adj[u]).count("1"))
        for v in _bits(cand & ~adj[pivot]):
            expand(size + 1, cand & adj[v], excl & adj[v])
            cand &= ~(1 << v)
            excl |= 1 << v

    expand(0, (1 << m) - 1, 0)
    return best


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def central_quotient(G: FiniteGroup, Z: Iterable, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """``G / Z`` for a central subgroup given by generators or elements."""
    from fnq.groups.elements import CosetElement

    identity = G.element(0)
    zgens = list(Z) or [identity]
    for z in zgens:
        if z not in G:
            raise NotInGroup(f"{z!r} is not in the group")
        if any(z * g != g * z for g in G.gens):
            raise ValueError(f"{z!r} is not central")
    zgroup = closure(zgens, cap=cap)
    centre = tuple(zgroup.elements())
    gens = [CosetElement(g, centre) for g in G.gens]
    name = f"{G.name}/Z" if G.name else ""
    return closure(gens, cap=cap, name=name)
