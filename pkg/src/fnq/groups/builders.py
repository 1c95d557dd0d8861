"""Standard generating sets for the groups the checks need."""

from __future__ import annotations

from fnq.groups.core import DEFAULT_CAP, FiniteGroup, central_quotient, closure
from fnq.groups.elements import FpMatrix, Perm, ProjFpMatrix, SignedPerm, _check_prime


class BuildError(RuntimeError):
    """A builder produced a group whose order disagrees with the known formula."""


def _alt_gens(n: int) -> list[Perm]:
    if n < 3:
        return [Perm.identity(max(n, 1))]
    three = Perm.from_cycles(n, (1, 2, 3))
    if n == 3:
        return [three]
    long = tuple(range(1, n + 1)) if n % 2 else tuple(range(2, n + 1))
    return [three, Perm.from_cycles(n, long)]


def alt(n: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    return closure(_alt_gens(n), cap=cap, name=f"A{n}")


def sym(n: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    if n < 2:
        return closure([Perm.identity(max(n, 1))], cap=cap, name=f"S{n}")
    gens = [Perm.from_cycles(n, (1, 2)), Perm.from_cycles(n, tuple(range(1, n + 1)))]
    return closure(gens, cap=cap, name=f"S{n}")


def cyclic(n: int) -> FiniteGroup:
    return closure([Perm.from_cycles(n, tuple(range(1, n + 1)))], name=f"C{n}")


def dprime_gens(n: int) -> list[SignedPerm]:
    """``ε_1ε_2`` together with the even permutations of the strands."""
    if n < 2:
        raise ValueError("D'_n needs n >= 2")
    flip = SignedPerm(range(n), (-1, -1) + (1,) * (n - 2))
    perms = [SignedPerm(p.images, (1,) * n) for p in _alt_gens(n) if n >= 3]
    return [flip] + perms


def dprime(n: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    return closure(dprime_gens(n), cap=cap, name=f"D'{n}")


def delta_element(n: int) -> SignedPerm:
    return SignedPerm(range(n), (-1,) * n)


def dprime_mod_delta(n: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    if n % 2:
        raise ValueError("δ lies in D'_n only for even n")
    G = dprime(n, cap=cap)
    Q = central_quotient(G, [delta_element(n)], cap=cap)
    Q.name = f"D'{n}/<delta>"
    return Q


def _symplectic_form(m: int) -> list[list[int]]:
    n = 2 * m
    J = [[0] * n for _ in range(n)]
    for i in range(m):
        J[i][m + i] = 1
        J[m + i][i] = -1
    return J


def symplectic_transvection(q: int, v, lam: int = 1, cls=FpMatrix) -> FpMatrix:
    """Row-vector matrix of ``x -> x + lam*ω(x, v)*v`` for the standard form."""
    n = len(v)
    J = _symplectic_form(n // 2)
    jv = [sum(J[i][k] * v[k] for k in range(n)) for i in range(n)]
    rows = [[int(i == j) + lam * jv[i] * v[j] for j in range(n)] for i in range(n)]
    return cls(q, n, [x for r in rows for x in r])


# small transvection set that generates Sp_4(q) for odd prime q
_SP4_VECTORS = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (1, 1, 0, 0))


def sp4_order(q: int) -> int:
    return q**4 * (q**2 - 1) * (q**4 - 1)


def _sp4(q: int, cls, expected: int, cap: int, name: str) -> FiniteGroup:
    _check_prime(q)
    gens = [symplectic_transvection(q, v, cls=cls) for v in _SP4_VECTORS]
    G = closure(gens, cap=cap, name=name)
    if G.order != expected:
        raise BuildError(f"{name}: closure gave {G.order}, formula gives {expected}")
    return G


def sp4(q: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    return _sp4(q, FpMatrix, sp4_order(q), cap, f"Sp4({q})")


def psp4(q: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """``PSp_4(q)`` acting on the projective points of GF(q)^4."""
    centre = 2 if q % 2 else 1
    return _sp4(q, ProjFpMatrix, sp4_order(q) // centre, cap, f"PSp4({q})")
