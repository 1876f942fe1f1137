"""Dense univariate polynomial helpers over the exact fields.

Only what the irreducibility certificates need: characteristic polynomials,
root extraction, and full factor detection up to degree four.  Coefficient
lists run from the constant term upward.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional

from .fields import Field, PrimeField, Rationals
from .linalg import Matrix


def poly_trim(field: Field, p: list) -> list:
    while p and field.is_zero(p[-1]):
        p.pop()
    return p


def poly_degree(p: list) -> int:
    return len(p) - 1


def poly_eval(field: Field, p: list, x):
    acc = field.zero()
    for c in reversed(p):
        acc = field.add(field.mul(acc, x), c)
    return acc


def poly_mul(field: Field, a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [field.zero()] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if field.is_zero(ca):
            continue
        for j, cb in enumerate(b):
            out[i + j] = field.add(out[i + j], field.mul(ca, cb))
    return out


def poly_divmod(field: Field, a: list, b: list) -> tuple[list, list]:
    a = list(a)
    b = poly_trim(field, list(b))
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    q = [field.zero()] * max(0, len(a) - len(b) + 1)
    inv_lead = field.inv(b[-1])
    while len(a) >= len(b) and poly_trim(field, list(a)):
        a = poly_trim(field, a)
        if len(a) < len(b):
            break
        shift = len(a) - len(b)
        coeff = field.mul(a[-1], inv_lead)
        q[shift] = coeff
        for i, cb in enumerate(b):
            a[shift + i] = field.sub(a[shift + i], field.mul(coeff, cb))
    return poly_trim(field, q), poly_trim(field, a)


def poly_at_matrix(field: Field, p: list, M: Matrix) -> Matrix:
    n = M.rows
    acc = Matrix.zero(field, n, n)
    power = Matrix.identity(field, n)
    for c in p:
        if not field.is_zero(c):
            acc = acc.add(power.scale(c))
        power = power.matmul(M)
    return acc


def charpoly(M: Matrix) -> list:
    """Monic characteristic polynomial of a square matrix, low degree first.

    Leverrier's trace recurrence when the characteristic allows dividing by
    1..n, otherwise the principal-minor expansion (small fields, desk scale).
    """
    F = M.field
    n = M.rows
    if n != M.cols:
        raise ValueError("characteristic polynomial needs a square matrix")
    if n == 0:
        return [F.one()]
    char = F.characteristic()
    if char == 0 or char > n:
        coeffs = [F.zero()] * (n + 1)
        coeffs[n] = F.one()
        Mk = M
        ck_list = []
        for k in range(1, n + 1):
            if k > 1:
                Mk = M.matmul(Mk.add(Matrix.identity(F, n).scale(ck_list[-1])))
            trace = Mk.trace()
            ck = F.neg(F.div(trace, F.coerce(k)))
            ck_list.append(ck)
            coeffs[n - k] = ck
        return coeffs
    return _charpoly_minors(M)


def _charpoly_minors(M: Matrix) -> list:
    # coefficient of t^(n-k) is (-1)^k * (sum of k x k principal minors)
    F = M.field
    n = M.rows
    from itertools import combinations

    coeffs = [F.zero()] * (n + 1)
    coeffs[n] = F.one()
    for k in range(1, n + 1):
        s = F.zero()
        for rows in combinations(range(n), k):
            s = F.add(s, _det(F, [[M.entries[i][j] for j in rows] for i in rows]))
        sign = F.one() if k % 2 == 0 else F.neg(F.one())
        coeffs[n - k] = F.mul(sign, s)
    return coeffs


def _det(field: Field, a: list) -> object:
    F = field
    a = [list(r) for r in a]
    n = len(a)
    det = F.one()
    for c in range(n):
        pr = next((i for i in range(c, n) if not F.is_zero(a[i][c])), None)
        if pr is None:
            return F.zero()
        if pr != c:
            a[c], a[pr] = a[pr], a[c]
            det = F.neg(det)
        det = F.mul(det, a[c][c])
        inv = F.inv(a[c][c])
        for i in range(c + 1, n):
            f = F.mul(a[i][c], inv)
            if not F.is_zero(f):
                a[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(a[i], a[c])]
    return det


def roots_in_field(field: Field, p: list) -> list:
    """All roots of p lying in the coefficient field, without multiplicity."""
    p = poly_trim(field, list(p))
    if not p or len(p) == 1:
        return []
    if isinstance(field, PrimeField):
        return [x for x in field.elements() if field.is_zero(poly_eval(field, p, x))]
    return _rational_roots(p)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _rational_roots(p: list) -> list[Fraction]:
    # clear denominators -> integer polynomial, then the rational root test
    den = math.lcm(*[Fraction(c).denominator for c in p])
    ip = [int(Fraction(c) * den) for c in p]
    roots = set()
    while ip and ip[0] == 0:
        roots.add(Fraction(0))
        ip = ip[1:]
    if not ip or len(ip) == 1:
        return sorted(roots)
    g = math.gcd(*[abs(c) for c in ip if c != 0])
    ip = [c // g for c in ip]
    for num in _divisors(ip[0]):
        for dq in _divisors(ip[-1]):
            for cand in (Fraction(num, dq), Fraction(-num, dq)):
                if sum(Fraction(c) * cand**i for i, c in enumerate(ip)) == 0:
                    roots.add(cand)
    return sorted(roots)


def _to_monic_integer(p: list) -> list[int]:
    """Substitute t -> t/k so a monic rational polynomial gets integer
    coefficients while staying monic."""
    n = len(p) - 1
    den = math.lcm(*[Fraction(c).denominator for c in p])
    k = den
    out = [int(Fraction(p[i]) * k ** (n - i)) for i in range(n + 1)]
    return out


def _is_square(n: int) -> Optional[int]:
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def _quartic_splits_into_quadratics(ip: list[int]) -> bool:
    # monic integer quartic t^4+a t^3+b t^2+c t+d as (t^2+pt+q)(t^2+rt+s);
    # callers strip rational roots first, so d != 0 and q s = d runs over
    # divisor pairs (Gauss: a monic integer split exists iff a rational does).
    d0, c, b, a, _ = ip
    assert d0 != 0
    qs_pairs = set()
    for q in _divisors(d0):
        for q_signed in (q, -q):
            qs_pairs.add((q_signed, d0 // q_signed))
    for q, s in qs_pairs:
        # p + r = a and p r = b - q - s force p, r as roots of t^2 - a t + m
        m = b - q - s
        root = _is_square(a * a - 4 * m)
        if root is None:
            continue
        for num in (a + root, a - root):
            if num % 2 != 0:
                continue
            pp = num // 2
            rr = a - pp
            if pp * s + q * rr == c:
                return True
    return False


def _quartic_splits_into_quadratics_gf(field: PrimeField, p: list) -> bool:
    F = field
    d0, c, b, a, _ = p
    for q in F.elements():
        for s in F.elements():
            if F.mul(q, s) != d0 % F.p:
                continue
            m = F.sub(b, F.add(q, s))
            # p + r = a, p r = m: p is a root of t^2 - a t + m
            for pp in F.elements():
                if F.add(F.mul(pp, pp), F.sub(m, F.mul(a, pp))) != 0:
                    continue
                rr = F.sub(a, pp)
                if F.add(F.mul(pp, s), F.mul(q, rr)) == c % F.p:
                    return True
    return False


def is_irreducible(field: Field, p: list) -> Optional[bool]:
    """Exact irreducibility over the coefficient field for degree <= 4.

    Returns None when the degree is beyond the implemented criteria.
    """
    p = poly_trim(field, list(p))
    deg = poly_degree(p)
    if deg <= 0:
        return False
    if deg == 1:
        return True
    if roots_in_field(field, p):
        return False
    if deg in (2, 3):
        return True
    if deg == 4:
        lead_inv = field.inv(p[-1])
        monic = [field.mul(lead_inv, c) for c in p]
        if isinstance(field, Rationals):
            ip = _to_monic_integer(monic)
            return not _quartic_splits_into_quadratics(ip)
        if isinstance(field, PrimeField):
            return not _quartic_splits_into_quadratics_gf(field, monic)
    return None


def linear_factors(field: Field, p: list) -> tuple[list, list]:
    """Strip all roots in the field; returns (roots with multiplicity, cofactor)."""
    p = poly_trim(field, list(p))
    roots = []
    progress = True
    while progress and poly_degree(p) >= 1:
        progress = False
        for r in roots_in_field(field, p):
            q, rem = poly_divmod(field, p, [field.neg(r), field.one()])
            assert not rem
            p = q
            roots.append(r)
            progress = True
            break
    return roots, p
