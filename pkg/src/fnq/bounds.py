"""The action-size bound k(n) and the arithmetic behind its applications.

For ``n >= 7``, ``k(n)`` maximizes ``min{2^(n-r-p(n)), C(n, r)}`` over
admissible ``r``.  Two admissible ranges are offered:

``literal``
    ``1 <= r <= n/2 - 3``, as stated.  Empty at ``n = 7``, where ``k = 1``.
``proof``
    The literal range plus ``r = 2`` for ``n`` in {7, 8, 9}, which is what the
    argument actually uses; from ``n = 10`` the two ranges coincide.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from fnq.report import FLAGGED, PASS, CheckReport, verdict

K_TABLE = {3: 7, 4: 8, 5: 12, 6: 14}
MODES = ("literal", "proof")
PROOF_EXTRA_R2 = (7, 8, 9)


def p(n: int) -> int:
    return 0 if n % 2 else 1


def term(n: int, r: int) -> int:
    return min(2 ** (n - r - p(n)), math.comb(n, r))


def admissible(n: int, mode: str = "literal") -> list[int]:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    # integer r <= n/2 - 3  <=>  2r <= n - 6
    rs = [r for r in range(1, n) if 2 * r <= n - 6]
    if mode == "proof" and n in PROOF_EXTRA_R2 and 2 not in rs:
        rs = sorted(set(rs) | {1, 2})
    return rs


@dataclass(frozen=True)
class BoundResult:
    n: int
    k_value: int
    r_star: int | str | None
    mode: str
    terms: dict[int, int] = field(default_factory=dict)

    @property
    def empty_range(self) -> bool:
        return self.r_star is None


def k(n: int, mode: str = "literal") -> BoundResult:
    if n < 3:
        raise ValueError("k(n) is defined for n >= 3")
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if n in K_TABLE:
        return BoundResult(n, K_TABLE[n], "table", mode)
    terms = {r: term(n, r) for r in admissible(n, mode)}
    if not terms:
        # empty maximum: no constraint beyond the trivial one
        return BoundResult(n, 1, None, mode)
    r_star = max(terms, key=lambda r: (terms[r], -r))
    return BoundResult(n, terms[r_star], r_star, mode, terms)


def exp_lower_sweep(n_lo: int, n_hi: int, mode: str = "proof") -> CheckReport:
    """``k(n)^2 >= 2^n`` across a range, recording where it starts to hold."""
    if not 7 <= n_lo <= n_hi:
        raise ValueError("need 7 <= n_lo <= n_hi")
    failures = [n for n in range(n_lo, n_hi + 1) if k(n, mode).k_value ** 2 < 2**n]
    start = n_lo
    for n in failures:
        start = n + 1
    return CheckReport(
        "bounds", f"remark:exponential k(n)^2 >= 2^n for {n_lo} <= n <= {n_hi} ({mode} mode)",
        verdict(not failures),
        {"mode": mode, "n_lo": n_lo, "n_hi": n_hi, "failures": failures,
         "holds_from": start if start <= n_hi else None},
    )


def phd_dawid_precheck(n: int) -> CheckReport:
    """Exact check of ``2*C(n+1,2) < min{C(n,r), 2^(n-r-1)}``.

    ``r = 4`` for ``n >= 14``; at ``n = 12`` the ``r = 3`` variant decides and
    the ``r = 4`` values are only recorded.
    """
    if n % 2 or n < 12:
        raise ValueError("needs an even n >= 12")
    lhs = 2 * math.comb(n + 1, 2)
    ev = {"n": n, "lhs": lhs}
    if n >= 14:
        c4, p4 = math.comb(n, 4), 2 ** (n - 5)
        ev.update({"r": 4, "binom": c4, "power": p4})
        ok = lhs < c4 and lhs < p4
    else:
        c3, p3 = math.comb(n, 3), 2 ** (n - 4)
        ev.update({"r": 3, "binom": c3, "power": p3,
                   "r4_binom": math.comb(n, 4), "r4_power": 2 ** (n - 5),
                   "r4_power_exceeds_lhs": 2 ** (n - 5) > lhs})
        ok = lhs < c3 and lhs < p3
    return CheckReport("bounds", f"thm:phd-dawid 2*C(n+1,2) < min{{C(n,r), 2^(n-r-1)}} at n = {n}",
                       verdict(ok), ev)


def phd_identity_report(n: int) -> CheckReport:
    """The displayed sum ``C(n,2) + 2C(n+1,2) + C(n+2,2)`` against ``C(n,4)``.

    The sum is ``2n^2 + 2n + 1``, so the displayed equality fails; the chain's
    inequality ``2C(n+1,2) < C(n,4)`` is what the argument needs.
    """
    s = math.comb(n, 2) + 2 * math.comb(n + 1, 2) + math.comb(n + 2, 2)
    c4 = math.comb(n, 4)
    status = PASS if s == c4 else FLAGGED
    return CheckReport("bounds", f"thm:phd-dawid C(n,2) + 2C(n+1,2) + C(n+2,2) = C(n,4) at n = {n}", status,
                       {"n": n, "sum": s, "closed_form": 2 * n * n + 2 * n + 1, "binom": c4,
                        "inequality_holds": 2 * math.comb(n + 1, 2) < c4})


def bounds_reports(n_hi: int = 64, phd_max: int = 40) -> list[CheckReport]:
    out = []
    for n, value in K_TABLE.items():
        res = k(n)
        out.append(CheckReport("bounds", f"thm:main-thm-actions k({n}) = {value}", verdict(res.k_value == value),
                               {"n": n, "k": res.k_value}))
    for n, value in ((7, 21), (8, 28)):
        res = k(n, "proof")
        out.append(CheckReport("bounds", f"prop:actions-on-sets R = 2 and k({n}) = {value}",
                               verdict(res.k_value == value and res.r_star == 2),
                               {"n": n, "k": res.k_value, "r_star": res.r_star}))
    for n in (7, 8, 9):
        lit, prf = k(n, "literal"), k(n, "proof")
        out.append(CheckReport(
            "bounds", f"thm:main-thm-actions r <= n/2 - 3 versus R = 2 at n = {n}", FLAGGED,
            {"n": n, "literal_k": lit.k_value, "literal_r": lit.r_star, "literal_range": admissible(n),
             "proof_k": prf.k_value, "proof_r": prf.r_star},
        ))
    mismatch = [n for n in range(10, n_hi + 1) if k(n, "literal").k_value != k(n, "proof").k_value]
    out.append(CheckReport("bounds", f"thm:main-thm-actions literal and proof modes agree for 10 <= n <= {n_hi}",
                           verdict(not mismatch), {"mismatches": mismatch}))
    out.append(exp_lower_sweep(7, n_hi))
    out.extend(phd_dawid_precheck(n) for n in range(12, phd_max + 1, 2))
    out.append(phd_identity_report(14))
    return out
