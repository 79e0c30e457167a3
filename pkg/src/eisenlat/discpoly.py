"""The discriminant of the A_11 family s^12 + u2 s^10 + u3 s^9 + ... + u12.

delta(u2, ..., u12) is the discriminant of the monic degree-12 polynomial with
zero root sum; it is quasihomogeneous of weight 132 for wt(u_i) = i.  Exact
evaluation goes through the Sylvester resultant of (f, f') with fraction-free
elimination; specific coefficients are recovered by exact interpolation after
setting all other variables to zero.
"""

from __future__ import annotations

import random
from fractions import Fraction

WEIGHTS = {i: i for i in range(2, 13)}
TOTAL_WEIGHT = 132


def poly_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def poly_deg(c):
    return len(c) - 1


def poly_derivative(c):
    return [i * c[i] for i in range(1, len(c))]


def poly_eval(c, x):
    out = 0
    for a in reversed(c):
        out = out * x + a
    return out


def sylvester_resultant(f, g):
    """Resultant of integer polynomials via Bareiss on the Sylvester matrix."""
    f, g = poly_trim(f), poly_trim(g)
    if not f or not g:
        return 0
    n, m = poly_deg(f), poly_deg(g)
    if n == 0:
        return f[0] ** m
    if m == 0:
        return g[0] ** n
    size = n + m
    mat = [[0] * size for _ in range(size)]
    for i in range(m):
        for j, a in enumerate(reversed(f)):
            mat[i][i + j] = a
    for i in range(n):
        for j, a in enumerate(reversed(g)):
            mat[m + i][i + j] = a
    return _bareiss(mat)


def _bareiss(a):
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def discriminant(f):
    """disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f), exact."""
    f = poly_trim(f)
    n = poly_deg(f)
    if n < 2:
        raise ValueError("discriminant needs degree >= 2")
    res = sylvester_resultant(f, poly_derivative(f))
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    val = sign * res
    lc = f[-1]
    if val % lc:
        raise AssertionError("resultant not divisible by leading coefficient")
    return val // lc


def a11_poly(u):
    """Coefficient list of s^12 + u2 s^10 + u3 s^9 + ... + u12 from {i: u_i}."""
    c = [0] * 13
    c[12] = 1
    for i, v in u.items():
        if not 2 <= i <= 12:
            raise ValueError(f"u_{i} is not a coordinate of the family")
        c[12 - i] = v
    return c


def a11_delta(u):
    """delta(u2..u12): discriminant of the A_11 family at the point u."""
    return discriminant(a11_poly(u))


class WeightedMonomial:
    """Monomial in u2..u12 with wt(u_i) = i."""

    def __init__(self, exponents):
        self.exponents = {int(i): int(e) for i, e in exponents.items() if e}
        for i in self.exponents:
            if not 2 <= i <= 12:
                raise ValueError(f"u_{i} is not a coordinate of the family")

    @property
    def weight(self):
        return sum(i * e for i, e in self.exponents.items())

    def __repr__(self):
        if not self.exponents:
            return "1"
        parts = []
        for i in sorted(self.exponents, reverse=True):
            e = self.exponents[i]
            parts.append(f"u{i}" + (f"^{e}" if e > 1 else ""))
        return " ".join(parts)

    @staticmethod
    def parse(text):
        """Parse "u12^9 u11^2 u2" style monomial text."""
        exps = {}
        for tok in text.replace("*", " ").split():
            if not tok.startswith("u"):
                raise ValueError(f"bad monomial factor {tok!r}")
            body = tok[1:]
            if "^" in body:
                var, e = body.split("^", 1)
            else:
                var, e = body, "1"
            i, e = int(var), int(e)
            exps[i] = exps.get(i, 0) + e
        return WeightedMonomial(exps)


def rigidity_monomials():
    """The 11 monomials whose nonvanishing drives the coordinate rigidity:
    u12^11 and u12^(11-i) u11^i u_i for i = 11, ..., 2."""
    out = [WeightedMonomial({12: 11})]
    for i in range(11, 1, -1):
        exps = {12: 11 - i, 11: i}
        exps[i] = exps.get(i, 0) + 1
        out.append(WeightedMonomial(exps))
    return out


def _weight_132_exponents(variables):
    """All exponent tuples over the given variables with weight exactly 132
    and total degree <= 22 (the degree of the discriminant)."""
    variables = sorted(variables)
    out = []

    def rec(idx, remaining, degree, acc):
        if idx == len(variables):
            if remaining == 0:
                out.append(tuple(acc))
            return
        v = variables[idx]
        maxe = min(remaining // v, 22 - degree)
        if idx == len(variables) - 1:
            if remaining % v == 0 and remaining // v <= maxe:
                out.append(tuple(acc + [remaining // v]))
            return
        for e in range(maxe + 1):
            rec(idx + 1, remaining - e * v, degree + e, acc + [e])

    rec(0, TOTAL_WEIGHT, 0, [])
    return out


_coeff_cache = {}


def a11_coeff(m: WeightedMonomial):
    """Exact coefficient of the monomial in delta(u2..u12).

    Zero immediately unless the weight is 132 (quasihomogeneity).  Otherwise
    all variables not in the monomial are set to zero and the coefficients of
    the restricted polynomial identity are recovered by solving an exact
    linear system against resultant evaluations.
    """
    if m.weight != TOTAL_WEIGHT:
        return 0
    variables = tuple(sorted(m.exponents))
    table = _restricted_coefficients(variables)
    target = tuple(m.exponents[v] for v in sorted(m.exponents))
    return table.get(target, 0)


def _restricted_coefficients(variables):
    if variables in _coeff_cache:
        return _coeff_cache[variables]
    exps = _weight_132_exponents(variables)
    k = len(exps)
    rng = random.Random(0xA11)
    while True:
        points = []
        seen = set()
        while len(points) < k:
            p = tuple(rng.randint(-9, 9) for _ in variables)
            if p not in seen:
                seen.add(p)
                points.append(p)
        rows = []
        rhs = []
        for p in points:
            rows.append(
                [
                    Fraction(_monomial_eval(e, p))
                    for e in exps
                ]
            )
            rhs.append(Fraction(a11_delta(dict(zip(variables, p)))))
        sol = _solve_exact(rows, rhs)
        if sol is None:
            continue
        table = {}
        for e, c in zip(exps, sol):
            if c.denominator != 1:
                table = None
                break
            if c:
                table[e] = int(c)
        if table is None:
            continue
        _coeff_cache[variables] = table
        return table


def _monomial_eval(exps, point):
    out = 1
    for e, x in zip(exps, point):
        out *= x**e
    return out


def _solve_exact(rows, rhs):
    n = len(rows)
    a = [rows[i][:] + [rhs[i]] for i in range(n)]
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            return None
        a[k], a[piv] = a[piv], a[k]
        d = a[k][k]
        a[k] = [x / d for x in a[k]]
        for i in range(n):
            if i != k and a[i][k]:
                c = a[i][k]
                a[i] = [x - c * y for x, y in zip(a[i], a[k])]
    return [a[i][n] for i in range(n)]


def reconstructed_delta_eval(variables, point):
    """Evaluate the interpolated restricted delta at a fresh point (oracle
    cross-check against the direct resultant evaluation)."""
    table = _restricted_coefficients(tuple(sorted(variables)))
    out = 0
    for e, c in table.items():
        out += c * _monomial_eval(e, point)
    return out


def quasihomogeneity_check(samples: int = 100, bound: int = 20, seed: int = 1932):
    """delta(lambda^2 u2, ..., lambda^12 u12) = lambda^132 delta(u), exactly."""
    rng = random.Random(seed)
    for _ in range(samples):
        u = {i: rng.randint(-bound, bound) for i in range(2, 13)}
        lam = 0
        while lam == 0:
            lam = rng.randint(-4, 4)
        base = a11_delta(u)
        scaled = a11_delta({i: lam**i * v for i, v in u.items()})
        if scaled != lam**TOTAL_WEIGHT * base:
            return False
    return True


def int_poly_gcd_nonconstant(f, g):
    """True iff gcd(f, g) over Q has positive degree (shared root)."""
    f = [Fraction(x) for x in poly_trim(f)]
    g = [Fraction(x) for x in poly_trim(g)]
    while g and poly_deg(g) >= 0 and any(g):
        if poly_deg(g) == 0:
            return False
        f, g = g, _poly_mod(f, g)
        g = _ftrim(g)
        if not g:
            return poly_deg(f) >= 1
    return poly_deg(f) >= 1


def _ftrim(c):
    c = list(c)
    while c and not c[-1]:
        c.pop()
    return c


def _poly_mod(f, g):
    f = list(f)
    dg = poly_deg(g)
    lg = g[-1]
    while len(f) - 1 >= dg and any(f):
        df = len(f) - 1
        c = f[-1] / lg
        for i in range(dg + 1):
            f[df - dg + i] -= c * g[i]
        f = _ftrim(f)
        if not f:
            break
    return f
