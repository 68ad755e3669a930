"""Jacobians of odd-degree hyperelliptic curves over F_q.

Mumford representation (u, v) with u monic, deg v < deg u, u | v^2 - F, and
deg u <= g for reduced divisors; odd-degree models have a unique reduced
representative per class, so reduced pairs enumerate the group.  Cantor
composition and reduction give the group law; everything else (group
enumeration, l-torsion counting, L-polynomials from point counts) is desk
scale by design.
"""

from fractions import Fraction

from .gf import gf, embed
from .poly import Poly


class JacobianError(ValueError):
    pass


class HyperellipticJacobian:
    """Jac of y^2 = F(x) over F_q, F monic squarefree of odd degree 2g+1."""

    def __init__(self, Fpoly):
        if Fpoly.lc() != 1:
            raise JacobianError("curve polynomial must be monic")
        if Fpoly.degree < 3 or Fpoly.degree % 2 == 0:
            raise JacobianError("need odd degree >= 3")
        if not Fpoly.is_squarefree():
            raise JacobianError("curve polynomial must be squarefree")
        self.F = Fpoly.F
        self.curve = Fpoly
        self.genus = (Fpoly.degree - 1) // 2

    # --- Mumford pairs as plain (u, v) tuples of Poly ---

    def identity(self):
        return (Poly.one(self.F), Poly.zero(self.F))

    def is_valid(self, D, reduced=True):
        u, v = D
        if u.is_zero() or u.lc() != 1 or (v.degree >= u.degree and not v.is_zero()):
            return False
        if reduced and u.degree > self.genus:
            return False
        return ((v * v - self.curve) % u).is_zero()

    def neg(self, D):
        u, v = D
        return (u, (-v) % u if u.degree > 0 else Poly.zero(self.F))

    def add(self, D1, D2):
        """Cantor composition followed by reduction."""
        u1, v1 = D1
        u2, v2 = D2
        Fc = self.curve
        d1, e1, e2 = u1.xgcd(u2)
        d, c1, c2 = d1.xgcd(v1 + v2)
        s1 = c1 * e1
        s2 = c1 * e2
        s3 = c2
        u = (u1 * u2).exact_div(d * d)
        num = s1 * u1 * v2 + s2 * u2 * v1 + s3 * (v1 * v2 + Fc)
        v = (num.exact_div(d)) % u
        # reduction
        g = self.genus
        while u.degree > g:
            u_next = (Fc - v * v).exact_div(u)
            u_next = u_next.monic()
            v = (-v) % u_next
            u = u_next
        return (u.monic(), v)

    def mul(self, n, D):
        if n < 0:
            return self.mul(-n, self.neg(D))
        R = self.identity()
        Q = D
        while n:
            if n & 1:
                R = self.add(R, Q)
            Q = self.add(Q, Q)
            n >>= 1
        return R

    def from_point(self, x0, y0):
        """Class of (x0, y0) - infinity."""
        u = Poly(self.F, [self.F.neg(x0), 1])
        v = Poly.const(self.F, y0)
        D = (u, v)
        if not self.is_valid(D):
            raise JacobianError("point is not on the curve")
        return D

    # --- enumeration and torsion ---

    def enumerate_group(self, max_size=2_000_000):
        """All reduced Mumford pairs; count equals the group order."""
        F = self.F
        g = self.genus
        est = sum(F.q ** (2 * k) for k in range(g + 1))
        if est > max_size:
            raise JacobianError(f"enumeration space ~{est} exceeds limit {max_size}")
        out = [self.identity()]
        for k in range(1, g + 1):
            for u_idx in range(F.q ** k):
                coeffs = []
                m = u_idx
                for _ in range(k):
                    coeffs.append(m % F.q)
                    m //= F.q
                u = Poly(F, coeffs + [1])
                rem = self.curve % u
                for v_idx in range(F.q ** k):
                    vc = []
                    m = v_idx
                    for _ in range(k):
                        vc.append(m % F.q)
                        m //= F.q
                    v = Poly(F, vc)
                    if ((v * v - rem) % u).is_zero():
                        out.append((u, v))
        return out

    def group_order(self, max_size=2_000_000):
        return len(self.enumerate_group(max_size))

    def torsion_count(self, ell, group=None, max_size=2_000_000):
        """#J(F_q)[ell] by enumeration; always a power of ell."""
        if ell == 1:
            return 1
        if group is None:
            group = self.enumerate_group(max_size)
        ident = self.identity()
        count = 0
        for D in group:
            if self.mul(ell, D) == ident:
                count += 1
        return count

    def two_torsion_from_factors(self):
        """|J(F_q)[2]| = 2^(omega - 1) from the factor-supported divisors."""
        omega = len(self.curve.factor())
        return 2 ** (omega - 1)

    # --- point counts and the L-polynomial ---

    def count_points_affine(self, ext_degree=1):
        """#X(F_{q^m}) including the point at infinity."""
        F = self.F
        if ext_degree == 1:
            big, emb = F, lambda a: a
        else:
            big = gf(F.p, F.r * ext_degree)
            emb = embed(F, big)
        coeffs = [emb(c) for c in self.curve.c]
        total = 1  # the unique point at infinity
        for x in range(big.q):
            acc = 0
            for c in reversed(coeffs):
                acc = big.add(big.mul(acc, x), c)
            if acc == 0:
                total += 1
            elif big.is_square(acc):
                total += 2
        return total

    def l_polynomial(self):
        """P(T) of degree 2g with P(1) = |J(F_q)|, from counts over F_{q^i}.

        Newton's identities on b_i = q^i + 1 - #X(F_{q^i}) give the first g
        coefficients; the functional equation c_{2g-k} = q^(g-k) c_k fills in
        the rest.
        """
        g = self.genus
        q = self.F.q
        b = [q ** i + 1 - self.count_points_affine(i) for i in range(1, g + 1)]
        e = [Fraction(1)]
        for k in range(1, g + 1):
            acc = Fraction(0)
            for i in range(1, k + 1):
                term = e[k - i] * b[i - 1]
                if (i - 1) % 2:
                    term = -term
                acc += term
            e.append(acc / k)
        c = [Fraction(1)] + [(-1) ** k * e[k] for k in range(1, g + 1)]
        for k in range(g - 1, -1, -1):
            c.append(Fraction(q) ** (g - k) * c[k])
        out = []
        for x in c:
            if x.denominator != 1:
                raise JacobianError("non-integral L-polynomial coefficient")
            out.append(int(x))
        return out

    def order_from_l_polynomial(self):
        return sum(self.l_polynomial())


def _sqrt_linear_power(q, g, sign):
    """(sqrt(q) + sign)^(2g) = ((q + 1) + sign*2 sqrt q)^g as (a, b): a + b sqrt q."""
    a, b = 1, 0
    base_a, base_b = q + 1, 2 * sign
    for _ in range(g):
        a, b = a * base_a + b * base_b * q, a * base_b + b * base_a
    return a, b


def _cmp_sqrt(n, a, b, q):
    """Sign of n - (a + b sqrt q), exactly."""
    lhs = n - a
    if b == 0:
        return (lhs > 0) - (lhs < 0)
    if b > 0:
        if lhs <= 0:
            return -1
        d = lhs * lhs - b * b * q
    else:
        if lhs >= 0:
            return 1
        d = b * b * q - lhs * lhs
    return (d > 0) - (d < 0)


def weil_bounds_check(q, g, n):
    """Exact test of (sqrt q - 1)^(2g) <= n <= (sqrt q + 1)^(2g)."""
    lo_a, lo_b = _sqrt_linear_power(q, g, -1)
    hi_a, hi_b = _sqrt_linear_power(q, g, +1)
    return _cmp_sqrt(n, lo_a, lo_b, q) >= 0 and _cmp_sqrt(n, hi_a, hi_b, q) <= 0


def weil_upper_bound_check(q, g, n):
    """Exact test of n <= (sqrt q + 1)^(2g)."""
    hi_a, hi_b = _sqrt_linear_power(q, g, +1)
    return _cmp_sqrt(n, hi_a, hi_b, q) <= 0
