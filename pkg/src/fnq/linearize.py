"""Abelianization of automorphisms and the natural maps to SL_n(Z) and L_n(p).

Row convention: row ``i`` of ``abelianize(f)`` is the exponent vector of
``f(a_i)``.  With it, ``abelianize(compose(f, g)) == matmul(abelianize(g),
abelianize(f))``; the order reversal is the price of keeping rows as images.
"""

from __future__ import annotations

from fnq import autf
from fnq.autf import Automorphism
from fnq.freegroup import exponent_sums
from fnq.groups.core import DEFAULT_CAP, FiniteGroup, closure
from fnq.groups.elements import FpMatrix, ProjFpMatrix, _check_prime

IntMatrix = tuple[tuple[int, ...], ...]


def identity_matrix(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def determinant(m: IntMatrix) -> int:
    """Exact integer determinant (fraction-free Bareiss elimination)."""
    a = [list(r) for r in m]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1] if n else 1


def abelianize(f: Automorphism) -> IntMatrix:
    return tuple(tuple(exponent_sums(w)) for w in f.images())


def det_sign(f: Automorphism) -> int:
    d = determinant(abelianize(f))
    if d not in (1, -1):
        raise ArithmeticError(f"abelianized determinant {d} is not a unit")
    return d


def mod_p(m: IntMatrix, p: int) -> FpMatrix:
    return FpMatrix.from_rows(p, m)


def saut_generators(n: int) -> list[Automorphism]:
    """Named generators lying in SAut(F_n): all ρ_ij, λ_ij and ε_iε_j."""
    gens = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                gens.append(autf.rho(n, i, j))
                gens.append(autf.lam(n, i, j))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            gens.append(autf.product(autf.eps(n, i), autf.eps(n, j)))
    return gens


def natural_image_group(n: int, p: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Image of SAut(F_n) in L_n(p), enumerated by closure.

    For odd ``p`` matrices are taken modulo scalars, which removes the centre.
    """
    if n < 2:
        raise ValueError("rank must be at least 2")
    _check_prime(p)
    kind = FpMatrix if p == 2 else ProjFpMatrix
    mats = []
    for f in saut_generators(n):
        m = mod_p(abelianize(f), p)
        g = kind(p, n, m.entries)
        if g not in mats:
            mats.append(g)
    return closure(mats, cap=cap, name=f"L{n}({p})")


def natural_image_order(n: int, p: int, cap: int = DEFAULT_CAP) -> int:
    return natural_image_group(n, p, cap).order


def to_json(m: IntMatrix | FpMatrix) -> list[list[int]]:
    if isinstance(m, FpMatrix):
        return m.rows()
    return [list(r) for r in m]
