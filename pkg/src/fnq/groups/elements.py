"""Element kinds for the finite-group engine.

Every kind multiplies left to right, ``x * y`` meaning "apply x, then y", so
that each element acts on the right of its point set.  Kinds that expose
``points()`` and ``act(pt)`` can be encoded as permutations and closed by the
compiled kernel; :class:`CosetElement` has no point set and takes the generic
path.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Sequence


class Perm:
    """Permutation of ``{0, ..., degree-1}``; printed 1-based in cycle notation."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        self.images = images

    @classmethod
    def from_cycles(cls, degree: int, *cycles: Sequence[int]) -> "Perm":
        img = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a - 1] = b - 1
        return cls(img)

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls(range(degree))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: "Perm") -> "Perm":
        o = other.images
        return Perm._trusted(tuple([o[k] for k in self.images]))

    @classmethod
    def _trusted(cls, images):
        obj = object.__new__(cls)
        obj.images = images
        return obj

    def inverse(self) -> "Perm":
        out = [0] * len(self.images)
        for i, j in enumerate(self.images):
            out[j] = i
        return Perm._trusted(tuple(out))

    def points(self):
        return range(len(self.images))

    def act(self, pt: int) -> int:
        return self.images[pt]

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for s in range(len(self.images)):
            if s in seen or self.images[s] == s:
                continue
            cyc, k = [], s
            while k not in seen:
                seen.add(k)
                cyc.append(k + 1)
                k = self.images[k]
            out.append(tuple(cyc))
        return out

    def key(self):
        return self.images

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        cyc = self.cycles()
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"


class SignedPerm:
    """Signed permutation ``a_i -> signs[i] * a_{perm[i]}`` (0-based internally).

    Encoded faithfully on the ``2n`` points ``+a_i`` (``2i``) and ``-a_i``
    (``2i+1``).
    """

    __slots__ = ("perm", "signs")

    def __init__(self, perm: Sequence[int], signs: Sequence[int]):
        self.perm = tuple(perm)
        self.signs = tuple(signs)
        if len(self.perm) != len(self.signs):
            raise ValueError("perm and signs differ in length")

    @classmethod
    def identity(cls, n: int) -> "SignedPerm":
        return cls(range(n), (1,) * n)

    @classmethod
    def from_automorphism(cls, f) -> "SignedPerm":
        """Image of a monomial automorphism (each generator goes to a letter).

        Composition reverses: ``from_automorphism(compose(f, g))`` equals
        ``from_automorphism(g) * from_automorphism(f)``.
        """
        perm, signs = [], []
        for img in f.fwd:
            if len(img) != 1:
                raise ValueError("automorphism is not monomial")
            perm.append(abs(img[0]) - 1)
            signs.append(1 if img[0] > 0 else -1)
        return cls(perm, signs)

    @property
    def rank(self) -> int:
        return len(self.perm)

    def __mul__(self, other: "SignedPerm") -> "SignedPerm":
        op, os_ = other.perm, other.signs
        return SignedPerm(
            tuple(op[j] for j in self.perm),
            tuple(s * os_[j] for s, j in zip(self.signs, self.perm)),
        )

    def inverse(self) -> "SignedPerm":
        n = len(self.perm)
        perm, signs = [0] * n, [1] * n
        for i, (j, s) in enumerate(zip(self.perm, self.signs)):
            perm[j] = i
            signs[j] = s
        return SignedPerm(perm, signs)

    def points(self):
        return range(2 * len(self.perm))

    def act(self, pt: int) -> int:
        i, neg = divmod(pt, 2)
        flip = self.signs[i] < 0
        return 2 * self.perm[i] + (neg ^ flip)

    def key(self):
        return (self.perm, self.signs)

    def __eq__(self, other):
        return isinstance(other, SignedPerm) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        body = ", ".join(("-" if s < 0 else "") + f"a{j + 1}" for j, s in zip(self.perm, self.signs))
        return f"SignedPerm[{body}]"


@lru_cache(maxsize=None)
def _check_prime(p: int) -> None:
    if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise ValueError(f"{p} is not prime")


@lru_cache(maxsize=None)
def _vectors(p: int, n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(v for v in itertools.product(range(p), repeat=n) if any(v))


@lru_cache(maxsize=None)
def _proj_points(p: int, n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(v for v in _vectors(p, n) if next(x for x in v if x) == 1)


def _normalize(v: Sequence[int], p: int) -> tuple[int, ...]:
    lead = next(x for x in v if x)
    inv = pow(lead, -1, p)
    return tuple(x * inv % p for x in v)


class FpMatrix:
    """Square matrix over GF(p), stored row-major; acts on row vectors."""

    __slots__ = ("p", "n", "entries")

    def __init__(self, p: int, n: int, entries: Iterable[int]):
        _check_prime(p)
        self.p = p
        self.n = n
        self.entries = tuple(int(x) % p for x in entries)
        if len(self.entries) != n * n:
            raise ValueError("wrong number of entries")

    @classmethod
    def from_rows(cls, p: int, rows: Sequence[Sequence[int]]) -> "FpMatrix":
        _check_prime(p)
        return cls(p, len(rows), [x for r in rows for x in r])

    @classmethod
    def identity(cls, p: int, n: int) -> "FpMatrix":
        return cls(p, n, [int(i == j) for i in range(n) for j in range(n)])

    def rows(self) -> list[list[int]]:
        n = self.n
        return [list(self.entries[i * n:(i + 1) * n]) for i in range(n)]

    def _prod(self, other: "FpMatrix") -> tuple[int, ...]:
        if self.p != other.p or self.n != other.n:
            raise ValueError("matrix shapes or fields differ")
        n, p, a, b = self.n, self.p, self.entries, other.entries
        return tuple(
            sum(a[i * n + k] * b[k * n + j] for k in range(n)) % p
            for i in range(n) for j in range(n)
        )

    def __mul__(self, other: "FpMatrix") -> "FpMatrix":
        return type(self)(self.p, self.n, self._prod(other))

    def det(self) -> int:
        p, n = self.p, self.n
        m = self.rows()
        det = 1
        for c in range(n):
            piv = next((r for r in range(c, n) if m[r][c]), None)
            if piv is None:
                return 0
            if piv != c:
                m[c], m[piv] = m[piv], m[c]
                det = -det
            det = det * m[c][c] % p
            inv = pow(m[c][c], -1, p)
            for r in range(c + 1, n):
                f = m[r][c] * inv % p
                if f:
                    m[r] = [(x - f * y) % p for x, y in zip(m[r], m[c])]
        return det % p

    def inverse(self) -> "FpMatrix":
        p, n = self.p, self.n
        m = [row + [int(i == j) for j in range(n)] for i, row in enumerate(self.rows())]
        for c in range(n):
            piv = next((r for r in range(c, n) if m[r][c]), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            m[c], m[piv] = m[piv], m[c]
            inv = pow(m[c][c], -1, p)
            m[c] = [x * inv % p for x in m[c]]
            for r in range(n):
                if r != c and m[r][c]:
                    f = m[r][c]
                    m[r] = [(x - f * y) % p for x, y in zip(m[r], m[c])]
        return type(self)(p, n, [x for row in m for x in row[n:]])

    def points(self):
        return _vectors(self.p, self.n)

    def act(self, v: Sequence[int]) -> tuple[int, ...]:
        n, p, e = self.n, self.p, self.entries
        return tuple(sum(v[k] * e[k * n + j] for k in range(n)) % p for j in range(n))

    def key(self):
        return self.entries

    def __eq__(self, other):
        return type(other) is type(self) and self.p == other.p and self.entries == other.entries

    def __hash__(self):
        return hash((self.p, self.entries))

    def __repr__(self):
        return f"{type(self).__name__}(p={self.p}, rows={self.rows()})"


class ProjFpMatrix(FpMatrix):
    """Matrix modulo scalars, stored as the least scalar multiple (lexicographic)."""

    __slots__ = ()

    def __init__(self, p: int, n: int, entries: Iterable[int]):
        entries = tuple(int(x) % p for x in entries)
        best = min(tuple(c * x % p for x in entries) for c in range(1, p))
        super().__init__(p, n, best)

    def points(self):
        return _proj_points(self.p, self.n)

    def act(self, v):
        return _normalize(FpMatrix.act(self, v), self.p)


class CosetElement:
    """Coset ``xZ`` of a central subgroup, carried by its least member under ``key()``."""

    __slots__ = ("rep", "centre")

    def __init__(self, x, centre: tuple):
        self.centre = centre
        self.rep = min((x * z for z in centre), key=lambda e: e.key())

    def __mul__(self, other: "CosetElement") -> "CosetElement":
        return CosetElement(self.rep * other.rep, self.centre)

    def inverse(self) -> "CosetElement":
        return CosetElement(self.rep.inverse(), self.centre)

    def key(self):
        return self.rep.key()

    def __eq__(self, other):
        return isinstance(other, CosetElement) and self.rep == other.rep

    def __hash__(self):
        return hash(self.rep)

    def __repr__(self):
        return f"Coset({self.rep!r})"
