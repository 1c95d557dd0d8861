"""Named automorphisms of F_n and their algebra.

Composition follows function composition: ``compose(f, g)`` applies ``g``
first, so ``apply(compose(f, g), w) == apply(f, apply(g, w))``.  Conjugation
is on the right, ``x^h = h^-1 x h``, and commutators are ``[g, h] = g h g^-1 h^-1``.
With these conventions the Steinberg relations and the epsilon/delta
conjugation identities hold exactly as automorphism equalities.

Every automorphism carries the images of the generators under its inverse;
there is no general inversion routine.
"""

from __future__ import annotations

import itertools
import re
from typing import NamedTuple, Sequence

from fnq.freegroup import RankError, Word, format_word

EXCEEDS_CAP = "exceeds cap"


def _substitute(images: Sequence[tuple[int, ...]], seq: tuple[int, ...]) -> tuple[int, ...]:
    stack: list[int] = []
    for x in seq:
        img = images[x - 1] if x > 0 else tuple(-y for y in reversed(images[-x - 1]))
        for y in img:
            if stack and stack[-1] == -y:
                stack.pop()
            else:
                stack.append(y)
    return tuple(stack)


class Automorphism:
    """Automorphism of F_n given by generator images and inverse images."""

    __slots__ = ("rank", "fwd", "inv", "label", "_hash")

    def __init__(self, rank: int, fwd: Sequence[tuple[int, ...]], inv: Sequence[tuple[int, ...]], label: str = ""):
        if rank < 1:
            raise ValueError("rank must be positive")
        if len(fwd) != rank or len(inv) != rank:
            raise RankError("need exactly one image per generator")
        self.rank = rank
        self.fwd = tuple(tuple(w) for w in fwd)
        self.inv = tuple(tuple(w) for w in inv)
        self.label = label
        self._hash = None

    @classmethod
    def from_words(cls, fwd: Sequence[Word], inv: Sequence[Word], label: str = "") -> "Automorphism":
        rank = len(fwd)
        for w in itertools.chain(fwd, inv):
            if w.rank != rank:
                raise RankError(f"image word of rank {w.rank} in a rank-{rank} automorphism")
        return cls(rank, [w.seq for w in fwd], [w.seq for w in inv], label)

    @classmethod
    def identity(cls, rank: int) -> "Automorphism":
        gens = [(i,) for i in range(1, rank + 1)]
        return cls(rank, gens, gens, "id")

    def images(self) -> list[Word]:
        return [Word(self.rank, w) for w in self.fwd]

    def inverse_images(self) -> list[Word]:
        return [Word(self.rank, w) for w in self.inv]

    def is_identity(self) -> bool:
        return all(w == (i,) for i, w in enumerate(self.fwd, 1))

    def round_trip_ok(self) -> bool:
        """Substituting the inverse images into the forward images gives the identity."""
        gens = [(i,) for i in range(1, self.rank + 1)]
        there = [_substitute(self.fwd, w) for w in self.inv]
        back = [_substitute(self.inv, w) for w in self.fwd]
        return there == gens and back == gens

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Automorphism):
            return NotImplemented
        return self.rank == other.rank and self.fwd == other.fwd

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rank, self.fwd))
        return self._hash

    def __mul__(self, other: "Automorphism") -> "Automorphism":
        return compose(self, other)

    def __repr__(self) -> str:
        tag = f" {self.label}" if self.label else ""
        return f"<Automorphism{tag} rank={self.rank}>"

    def describe(self) -> list[str]:
        return [f"a{i} -> {format_word(w)}" for i, w in enumerate(self.images(), 1)]


def _check(f: Automorphism, g: Automorphism) -> None:
    if f.rank != g.rank:
        raise RankError(f"rank mismatch: {f.rank} vs {g.rank}")


def apply(f: Automorphism, w: Word) -> Word:
    if w.rank != f.rank:
        raise RankError(f"rank mismatch: {f.rank} vs {w.rank}")
    return Word(f.rank, _substitute(f.fwd, w.seq))


def compose(f: Automorphism, g: Automorphism) -> Automorphism:
    _check(f, g)
    fwd = [_substitute(f.fwd, w) for w in g.fwd]
    inv = [_substitute(g.inv, w) for w in f.inv]
    return Automorphism(f.rank, fwd, inv)


def inverse(f: Automorphism) -> Automorphism:
    label = f"{f.label}^-1" if f.label else ""
    return Automorphism(f.rank, f.inv, f.fwd, label)


def product(*factors: Automorphism) -> Automorphism:
    out = factors[0]
    for f in factors[1:]:
        out = compose(out, f)
    return out


def conjugate(x: Automorphism, h: Automorphism) -> Automorphism:
    """Right conjugation ``x^h = h^-1 x h``."""
    _check(x, h)
    return product(inverse(h), x, h)


def commutator(g: Automorphism, h: Automorphism) -> Automorphism:
    _check(g, h)
    return product(g, h, inverse(g), inverse(h))


def power(f: Automorphism, k: int) -> Automorphism:
    base = f if k >= 0 else inverse(f)
    out = Automorphism.identity(f.rank)
    for _ in range(abs(k)):
        out = compose(out, base)
    return out


def order(f: Automorphism, cap: int):
    """Least k <= cap with f^k = id, or :data:`EXCEEDS_CAP`."""
    if cap < 1:
        raise ValueError("cap must be at least 1")
    cur = f
    for k in range(1, cap + 1):
        if cur.is_identity():
            return k
        cur = compose(cur, f)
    return EXCEEDS_CAP


# --- named generators ------------------------------------------------------

def _gens(rank: int) -> list[tuple[int, ...]]:
    return [(i,) for i in range(1, rank + 1)]


def _need(rank: int, *indices: int) -> None:
    if rank < 2:
        raise ValueError("named automorphisms need rank >= 2")
    for i in indices:
        if not 1 <= i <= rank:
            raise ValueError(f"index {i} out of range 1..{rank}")
    if len(set(indices)) != len(indices):
        raise ValueError(f"indices must be distinct, got {indices}")


def rho(rank: int, i: int, j: int) -> Automorphism:
    """Right transvection a_i -> a_i a_j."""
    _need(rank, i, j)
    fwd, inv = _gens(rank), _gens(rank)
    fwd[i - 1] = (i, j)
    inv[i - 1] = (i, -j)
    return Automorphism(rank, fwd, inv, f"rho({i},{j})")


def lam(rank: int, i: int, j: int) -> Automorphism:
    """Left transvection a_i -> a_j a_i."""
    _need(rank, i, j)
    fwd, inv = _gens(rank), _gens(rank)
    fwd[i - 1] = (j, i)
    inv[i - 1] = (-j, i)
    return Automorphism(rank, fwd, inv, f"lam({i},{j})")


def sig(rank: int, i: int, j: int) -> Automorphism:
    _need(rank, i, j)
    fwd = _gens(rank)
    fwd[i - 1], fwd[j - 1] = (j,), (i,)
    return Automorphism(rank, fwd, fwd, f"sig({i},{j})")


def sigbar(rank: int, i: int) -> Automorphism:
    """The involution sigma_{i,n+1}: a_i -> a_i^-1 and a_k -> a_k a_i^-1."""
    _need(rank, i)
    fwd = [(k, -i) for k in range(1, rank + 1)]
    fwd[i - 1] = (-i,)
    return Automorphism(rank, fwd, fwd, f"sigbar({i})")


def eps(rank: int, i: int) -> Automorphism:
    _need(rank, i)
    fwd = _gens(rank)
    fwd[i - 1] = (-i,)
    return Automorphism(rank, fwd, fwd, f"eps({i})")


def delta(rank: int) -> Automorphism:
    _need(rank)
    fwd = [(-i,) for i in range(1, rank + 1)]
    return Automorphism(rank, fwd, fwd, "delta")


def gamma(rank: int) -> Automorphism:
    """The order-3 element eps_{n-1} eps_n lam_{(n-1)n}^-1 rho_{n(n-1)}."""
    if rank < 3:
        raise ValueError("gamma needs rank >= 3")
    n = rank
    g = product(eps(n, n - 1), eps(n, n), inverse(lam(n, n - 1, n)), rho(n, n, n - 1))
    g.label = "gamma"
    return g


_NAMED = {"rho": (rho, 2), "lam": (lam, 2), "sig": (sig, 2), "sigbar": (sigbar, 1),
          "eps": (eps, 1), "delta": (delta, 0), "gamma": (gamma, 0)}


def named(kind: str, rank: int, *indices: int) -> Automorphism:
    try:
        ctor, arity = _NAMED[kind]
    except KeyError:
        raise ValueError(f"unknown automorphism kind {kind!r}") from None
    if len(indices) != arity:
        raise ValueError(f"{kind} takes {arity} indices, got {len(indices)}")
    return ctor(rank, *indices)


def permutation_automorphism(rank: int, images: Sequence[int]) -> Automorphism:
    """a_k -> a_{images[k-1]} (1-based)."""
    if sorted(images) != list(range(1, rank + 1)):
        raise ValueError("images must be a permutation of 1..rank")
    fwd = [(images[k],) for k in range(rank)]
    inv = [()] * rank
    for k, t in enumerate(images, 1):
        inv[t - 1] = (k,)
    return Automorphism(rank, fwd, inv)


class Transvection(NamedTuple):
    kind: str
    i: int
    j: int
    exponent: int

    def label(self) -> str:
        base = f"{self.kind}({self.i},{self.j})"
        return base if self.exponent == 1 else base + "^-1"

    def build(self, rank: int) -> Automorphism:
        f = named(self.kind, rank, self.i, self.j)
        return f if self.exponent == 1 else inverse(f)


def transvections(rank: int) -> list[Transvection]:
    return [Transvection(kind, i, j, e)
            for kind in ("rho", "lam")
            for i in range(1, rank + 1)
            for j in range(1, rank + 1) if i != j
            for e in (1, -1)]


def commuting_transvections(rank: int, f: Automorphism) -> list[Transvection]:
    """Transvections rho_ij^{+-1}, lam_ij^{+-1} that commute with ``f`` (brute force)."""
    out = []
    for t in transvections(rank):
        g = t.build(rank)
        if compose(f, g) == compose(g, f):
            out.append(t)
    return out


# --- expression syntax -------------------------------------------------------
# expr := term ('*' term)* ; term := atom ('^' (int | atom))* ;
# atom := name ['(' int {',' int} ')'] | '(' expr ')'

_TOKEN = re.compile(r"\s*(?:(?P<int>-?\d+)|(?P<name>[A-Za-z]+)|(?P<sym>[()*^,]))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"unexpected character at {pos}: {text[pos:]!r}")
        kind = m.lastgroup
        out.append((kind, m.group(kind)))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str, rank: int):
        self.toks = _tokenize(text)
        self.pos = 0
        self.rank = rank

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else (None, None)

    def take(self, value=None):
        tok = self.peek()
        if tok[0] is None or (value is not None and tok[1] != value):
            raise ValueError(f"expected {value or 'token'} at token {self.pos}, got {tok[1]!r}")
        self.pos += 1
        return tok

    def parse(self) -> Automorphism:
        f = self.expr()
        if self.pos != len(self.toks):
            raise ValueError(f"trailing input at token {self.pos}: {self.toks[self.pos][1]!r}")
        return f

    def expr(self) -> Automorphism:
        f = self.term()
        while self.peek()[1] == "*":
            self.take("*")
            f = compose(f, self.term())
        return f

    def term(self) -> Automorphism:
        f = self.atom()
        while self.peek()[1] == "^":
            self.take("^")
            kind, value = self.peek()
            if kind == "int":
                self.take()
                f = power(f, int(value))
            else:
                f = conjugate(f, self.atom())
        return f

    def atom(self) -> Automorphism:
        kind, value = self.peek()
        if value == "(":
            self.take("(")
            f = self.expr()
            self.take(")")
            return f
        if kind != "name":
            raise ValueError(f"expected a generator name, got {value!r}")
        self.take()
        if value == "id":
            return Automorphism.identity(self.rank)
        args: list[int] = []
        if self.peek()[1] == "(":
            self.take("(")
            while True:
                k, v = self.take()
                if k != "int":
                    raise ValueError(f"expected an index, got {v!r}")
                args.append(int(v))
                if self.peek()[1] == ",":
                    self.take(",")
                    continue
                self.take(")")
                break
        return named(value, self.rank, *args)


def parse_element(text: str, rank: int) -> Automorphism:
    """Parse e.g. ``rho(1,2)^(eps(1)*eps(2))`` or ``sig(1,2)*sigbar(3)^-1``."""
    return _Parser(text, rank).parse()
