"""Exact counting formulas and the inequality sweeps behind the orbit-size comparisons.

Everything here is integer or Fraction arithmetic; there is no floating point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, prod

from .gf import divisors


def gaussian_binomial(n: int, k: int, q: int) -> int:
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    num = prod(q ** (n - i) - 1 for i in range(k))
    den = prod(q ** (i + 1) - 1 for i in range(k))
    return num // den


def gl_order(m: int, Q: int) -> int:
    """|GL_m(Q)|."""
    return prod(Q**m - Q**i for i in range(m))


def normalizer_gl_order(n: int, t: int, q: int) -> int:
    """|N_{GL_n(q)}(GL_{n/t}(q^t))| = t |GL_{n/t}(q^t)|."""
    return t * gl_order(n // t, q**t)


def _product_term(q: int, n: int, r: int, s: int) -> Fraction:
    return prod((Fraction(q ** (n - i * s) - 1, q ** (r - i) - 1) for i in range(r)), start=Fraction(1))


def orbit_size_bound_exact(q: int, n: int, k: int, s: int, r: int) -> Fraction:
    """The right-hand side of the orbit-size bound as an exact rational."""
    if not 1 <= r <= k or r * s > n or k > n or s < 1:
        raise ValueError(f"inadmissible (q,n,k,s,r) = {(q, n, k, s, r)}")
    return Fraction(q ** (comb(r, 2) * (s - 1)), gaussian_binomial(k, r, q)) * _product_term(q, n, r, s)


def orbit_size_lower_bound(q: int, n: int, k: int, s: int, r: int) -> int:
    """Least integer >= the exact bound; orbit sizes are integers so this is still valid.

    For r = k it is the exact size of the GL_{n/s}(q^s)-orbit.
    """
    x = orbit_size_bound_exact(q, n, k, s, r)
    return -((-x.numerator) // x.denominator)


def q_normalizer(q: int, n: int, k: int, s: int) -> int:
    """(q-1)(q^n-q^s) - n(q^k-1)(q^k-q): positive means the r = 2 bound beats n(q^n-1)."""
    return (q - 1) * (q**n - q**s) - n * (q**k - 1) * (q**k - q)


@dataclass
class LemmaReport:
    checked: dict[str, int] = field(default_factory=dict)
    violations: dict[str, list[tuple]] = field(default_factory=dict)
    q_exceptions: list[tuple[int, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not any(self.violations.values())

    def lines(self) -> list[str]:
        out = []
        for name, count in self.checked.items():
            bad = self.violations.get(name, [])
            out.append(f"{name}: {count} tuples, {len(bad)} violations")
            out.extend(f"  violation {v}" for v in bad[:10])
        exc = ", ".join(str(t) for t in self.q_exceptions) or "none"
        out.append(f"Q<=0 at (q,n,k): {exc}")
        return out


def verify_inequality_lemmas(qs=(2, 3, 4, 5), n_max: int = 12, n_min: int = 4,
                             q_scan: tuple[tuple[int, int, int], ...] = ((2, 4, 15), (3, 4, 7)),
                             divisor_s_only: bool = False) -> LemmaReport:
    """Check the three product inequalities on every admissible tuple in range.

    ``q_scan`` lists (q, n_lo, n_hi) ranges over which the normalizer quantity
    Q(q,n,k,s) is scanned for k <= 3n/8 and divisors s <= n/2; tuples (q,n,k)
    with some Q <= 0 are collected as exceptions rather than violations.
    """
    rep = LemmaReport()
    for key in ("product>power", "main(r>=3)", "main(r=2)", "GL>normalizer"):
        rep.checked[key] = 0
        rep.violations[key] = []

    def record(key, ok, tup):
        rep.checked[key] += 1
        if not ok:
            rep.violations[key].append(tup)

    for q in qs:
        for n in range(n_min, n_max + 1):
            s_range = divisors(n)[:-1] if divisor_s_only else range(1, n)
            for s in s_range:
                for r in range(2, n // 2 + 1):
                    if r * s > n:
                        continue
                    P = _product_term(q, n, r, s)
                    record("product>power", P > q ** (r * (n - r) - (s - 1) * comb(r, 2)), (q, n, r, s))
                    lhs = q ** (comb(r, 2) * (s - 1)) * P
                    for k in range(r, n // 2 + 1):
                        rhs = gaussian_binomial(k, r, q) * Fraction(q**n - 1, q - 1)
                        if r >= 3:
                            record("main(r>=3)", lhs > n * rhs, (q, n, k, r, s))
                        else:
                            record("main(r=2)", lhs > rhs, (q, n, k, r, s))
            for s in divisors(n):
                for t in divisors(n):
                    if t != s and t % s == 0:
                        record("GL>normalizer",
                               gl_order(n // s, q**s) > normalizer_gl_order(n, t, q), (q, n, s, t))
    for q, lo, hi in q_scan:
        for n in range(lo, hi + 1):
            for k in range(2, 3 * n // 8 + 1):
                if any(q_normalizer(q, n, k, s) <= 0 for s in divisors(n) if 2 * s <= n):
                    rep.q_exceptions.append((q, n, k))
    return rep
