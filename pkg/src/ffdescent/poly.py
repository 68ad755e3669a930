"""Dense univariate polynomials over F_q, and the factorization stack.

Coefficients are packed field elements (ints), lowest degree first, with no
trailing zeros; the zero polynomial has an empty coefficient list.  Degrees
at desk scale stay small, so all arithmetic is schoolbook.

Factorization is squarefree decomposition, then distinct-degree, then
Cantor-Zassenhaus equal-degree splitting driven by an explicit seeded rng,
so parallel runs are reproducible.
"""

import random

from .gf import GF


class Poly:
    __slots__ = ("F", "c")

    def __init__(self, F, coeffs):
        self.F = F
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.c = c

    # --- constructors ---

    @staticmethod
    def zero(F):
        return Poly(F, [])

    @staticmethod
    def one(F):
        return Poly(F, [1])

    @staticmethod
    def const(F, a):
        return Poly(F, [a % F.q if isinstance(a, int) else a])

    @staticmethod
    def x(F):
        return Poly(F, [0, 1])

    @staticmethod
    def monomial(F, n, coeff=1):
        return Poly(F, [0] * n + [coeff])

    @staticmethod
    def random(F, deg, rng, monic=False):
        c = [F.random(rng) for _ in range(deg + 1)]
        if monic:
            c[-1] = 1
        elif c[-1] == 0:
            c[-1] = F.random_nonzero(rng)
        return Poly(F, c)

    # --- basic structure ---

    @property
    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self.c) - 1

    def is_zero(self):
        return not self.c

    def is_one(self):
        return self.c == [1]

    def is_constant(self):
        return len(self.c) <= 1

    def lc(self):
        return self.c[-1] if self.c else 0

    def constant(self):
        return self.c[0] if self.c else 0

    def monic(self):
        if not self.c:
            raise ZeroDivisionError("monic of zero")
        if self.c[-1] == 1:
            return self
        inv = self.F.inv(self.c[-1])
        return Poly(self.F, [self.F.mul(a, inv) for a in self.c])

    def __getitem__(self, i):
        return self.c[i] if 0 <= i < len(self.c) else 0

    def __eq__(self, other):
        return isinstance(other, Poly) and self.F == other.F and self.c == other.c

    def __hash__(self):
        return hash((self.F, tuple(self.c)))

    def __bool__(self):
        return bool(self.c)

    # --- ring operations ---

    def __add__(self, other):
        F = self.F
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, bi in enumerate(b):
            out[i] = F.add(out[i], bi)
        return Poly(F, out)

    def __neg__(self):
        F = self.F
        return Poly(F, [F.neg(a) for a in self.c])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        F = self.F
        if isinstance(other, int):
            other = Poly.const(F, other % F.q)
        a, b = self.c, other.c
        if not a or not b:
            return Poly.zero(F)
        out = [0] * (len(a) + len(b) - 1)
        mul, add = F.mul, F.add
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = add(out[i + j], mul(ai, bj))
        return Poly(F, out)

    def scale(self, k):
        """Multiply by the field element k."""
        F = self.F
        return Poly(F, [F.mul(a, k) for a in self.c])

    def shift_up(self, n):
        """Multiply by x^n."""
        if not self.c:
            return self
        return Poly(self.F, [0] * n + self.c)

    def __pow__(self, e):
        res = Poly.one(self.F)
        base = self
        while e:
            if e & 1:
                res = res * base
            base = base * base
            e >>= 1
        return res

    def divmod(self, other):
        F = self.F
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        a = list(self.c)
        b = other.c
        db = len(b) - 1
        if len(a) - 1 < db:
            return Poly.zero(F), Poly(F, a)
        inv = F.inv(b[-1])
        q = [0] * (len(a) - db)
        for i in range(len(a) - 1, db - 1, -1):
            coeff = a[i]
            if coeff:
                coeff = F.mul(coeff, inv)
                q[i - db] = coeff
                for j in range(db + 1):
                    a[i - db + j] = F.sub(a[i - db + j], F.mul(coeff, b[j]))
        return Poly(F, q), Poly(F, a[:db])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def divides(self, other):
        return (other % self).is_zero()

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("not an exact division")
        return q

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        if a.is_zero():
            return a
        return a.monic()

    def xgcd(self, other):
        """(g, s, t) with g = s*self + t*other, g monic or zero."""
        F = self.F
        r0, r1 = self, other
        s0, s1 = Poly.one(F), Poly.zero(F)
        t0, t1 = Poly.zero(F), Poly.one(F)
        while not r1.is_zero():
            q, r = r0.divmod(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if r0.is_zero():
            return r0, s0, t0
        k = F.inv(r0.lc())
        return r0.scale(k), s0.scale(k), t0.scale(k)

    def inverse_mod(self, mod):
        g, s, _ = self.xgcd(mod)
        if not g.is_one():
            raise ZeroDivisionError("element not invertible modulo the given polynomial")
        return s % mod

    def powmod(self, e, mod):
        res = Poly.one(self.F)
        base = self % mod
        while e:
            if e & 1:
                res = (res * base) % mod
            base = (base * base) % mod
            e >>= 1
        return res

    # --- evaluation and composition ---

    def __call__(self, x):
        """Evaluate at a field element (Horner)."""
        F = self.F
        acc = 0
        for a in reversed(self.c):
            acc = F.add(F.mul(acc, x), a)
        return acc

    def eval_poly(self, other):
        """Compose: self(other(x))."""
        F = self.F
        acc = Poly.zero(F)
        for a in reversed(self.c):
            acc = acc * other + Poly.const(F, a)
        return acc

    def taylor_shift(self, a):
        """self(x + a)."""
        return self.eval_poly(Poly(self.F, [a, 1]))

    def reverse(self, n=None):
        """Coefficient reversal x^n * self(1/x); n defaults to deg."""
        if n is None:
            n = self.degree
        c = [0] * (n + 1)
        for i, a in enumerate(self.c):
            if n - i >= 0:
                c[n - i] = a
        return Poly(self.F, c)

    def derivative(self):
        F = self.F
        p = F.p
        out = []
        for i in range(1, len(self.c)):
            out.append(F.mul(self.c[i], i % p))
        return Poly(F, out)

    # --- p-th roots and polynomial square roots ---

    def pth_root(self):
        """The p-th root when self = g(x)^p, i.e. self in F_q[x^p]; else None.

        F_q is perfect, so c_i x^(pi) contributes c_i^(p^(r-1)) x^i.
        """
        F = self.F
        p = F.p
        for i, a in enumerate(self.c):
            if a and i % p:
                return None
        out = []
        k = F.p ** (F.r - 1)
        for i in range(0, len(self.c), p):
            out.append(F.pow(self.c[i], k))
        return Poly(F, out)

    def sqrt_exact(self):
        """g with g*g == self, or None.  Newton from the top coefficient."""
        F = self.F
        if self.is_zero():
            return self
        d = self.degree
        if d % 2:
            return None
        s = F.sqrt(self.lc())
        if s is None:
            return None
        h = d // 2
        # build g from the leading coefficient downward
        g = [0] * (h + 1)
        g[h] = s
        inv2s = F.inv(F.add(s, s))
        for i in range(h - 1, -1, -1):
            # coefficient of x^(i+h) in g^2 must match self
            acc = self[i + h]
            for j in range(i + 1, h):
                if i + h - j <= h:
                    acc = F.sub(acc, F.mul(g[j], g[i + h - j]))
            g[i] = F.mul(acc, inv2s)
        cand = Poly(F, g)
        if cand * cand == self:
            return cand
        return None

    # --- factorization ---

    def squarefree_decomposition(self):
        """Musser/Yun in characteristic p: list of (g, e), self = lc * prod g^e.

        Each irreducible of self appears in exactly one returned pair, with g
        monic squarefree.  Exponents divisible by p are peeled off through
        p-th roots (F_q is perfect).
        """
        F = self.F
        f = self.monic()
        out = []
        p = F.p
        e_mult = 1
        while f.degree > 0:
            d = f.derivative()
            if d.is_zero():
                f = f.pth_root()
                e_mult *= p
                continue
            a = f.gcd(d)
            w = f.exact_div(a)
            i = 1
            while not w.is_one():
                y = w.gcd(a)
                z = w.exact_div(y)
                if not z.is_one():
                    out.append((z, i * e_mult))
                w = y
                a = a.exact_div(y)
                i += 1
            # a now carries exactly the factors whose exponent is divisible by p
            f = a
        return out

    def is_squarefree(self):
        if self.is_zero():
            return False
        d = self.derivative()
        if d.is_zero():
            return self.is_constant()
        return self.gcd(d).is_one()

    def _ddf(self):
        """Distinct-degree: list of (product-of-irreducibles-of-degree-d, d)."""
        F = self.F
        f = self.monic()
        out = []
        x = Poly.x(F)
        h = x
        d = 0
        while f.degree > 2 * (d + 1) - 1:
            d += 1
            h = h.powmod(F.q, f)
            g = f.gcd(h - x)
            if not g.is_one():
                out.append((g, d))
                f = f.exact_div(g)
                h = h % f
        if f.degree > 0:
            out.append((f, f.degree))
        return out

    def _edf(self, d, rng):
        """Equal-degree splitting (Cantor-Zassenhaus), q odd."""
        F = self.F
        f = self.monic()
        n = f.degree
        if n == d:
            return [f]
        out = []
        stack = [f]
        exp = (F.q ** d - 1) // 2
        while stack:
            g = stack.pop()
            if g.degree == d:
                out.append(g)
                continue
            while True:
                a = Poly.random(F, rng.randrange(1, g.degree + 1), rng)
                h = a.powmod(exp, g) - Poly.one(F)
                u = g.gcd(h)
                if 0 < u.degree < g.degree:
                    stack.append(u)
                    stack.append(g.exact_div(u))
                    break
        return out

    def factor(self, rng=None):
        """Multiset of (monic irreducible, multiplicity); deterministic order.

        The output is sorted lexicographically on coefficient vectors, so the
        randomness of the splitting never leaks into results.
        """
        if self.is_zero():
            raise ValueError("cannot factor the zero polynomial")
        if rng is None:
            rng = random.Random(0xFFDE)
        out = []
        if self.degree < 1:
            return []
        for g, e in self.squarefree_decomposition():
            for h, d in g._ddf():
                if h.degree == d:
                    out.append((h, e))
                else:
                    for irr in h._edf(d, rng):
                        out.append((irr, e))
        out.sort(key=lambda t: (t[0].degree, t[0].c))
        return out

    def is_irreducible(self, rng=None):
        if self.degree < 1:
            return False
        if self.degree == 1:
            return True
        fac = self.factor(rng)
        return len(fac) == 1 and fac[0][1] == 1

    def roots(self):
        """Distinct roots in the coefficient field."""
        F = self.F
        if self.is_zero():
            raise ValueError("zero polynomial")
        if self.degree == 0:
            return []
        x = Poly.x(F)
        g = self.gcd(x.powmod(F.q, self) - x)
        out = []
        for irr, _ in g.factor():
            if irr.degree == 1:
                out.append(F.neg(irr.c[0]))
        out.sort()
        return out

    # --- resultants and discriminants ---

    def resultant(self, other):
        """Res(self, other) as a field element, via the Euclidean sequence."""
        F = self.F
        f, g = self, other
        if f.is_zero() and g.is_zero():
            raise ValueError("resultant of two zero polynomials")
        if f.is_zero() or g.is_zero():
            return 0
        res = 1
        while True:
            if g.degree == 0:
                res = F.mul(res, F.pow(g.c[0], f.degree))
                return res
            if f.degree < g.degree:
                if (f.degree * g.degree) % 2:
                    res = F.neg(res)
                f, g = g, f
                continue
            r = f % g
            if r.is_zero():
                return 0
            res = F.mul(res, F.pow(g.lc(), f.degree - r.degree))
            if (f.degree * g.degree) % 2:
                res = F.neg(res)
            f, g = g, r

    def content_free_discriminant(self):
        """disc(f) = (-1)^(d(d-1)/2) Res(f, f') / lc(f)."""
        F = self.F
        d = self.degree
        if d < 1:
            raise ValueError("degree must be >= 1")
        r = self.resultant(self.derivative())
        sign = F.neg(1) if (d * (d - 1) // 2) % 2 else 1
        return F.mul(sign, F.mul(r, F.inv(self.lc())))

    # --- misc ---

    def interpolate(F, points):
        """Lagrange interpolation through [(x_i, y_i)]."""
        out = Poly.zero(F)
        xs = [p[0] for p in points]
        for i, (xi, yi) in enumerate(points):
            num = Poly.one(F)
            den = 1
            for j, xj in enumerate(xs):
                if i != j:
                    num = num * Poly(F, [F.neg(xj), 1])
                    den = F.mul(den, F.sub(xi, xj))
            out = out + num.scale(F.div(yi, den))
        return out

    interpolate = staticmethod(interpolate)

    def coeff_ints(self):
        return list(self.c)

    def __repr__(self):
        if not self.c:
            return "0"
        terms = []
        for i, a in enumerate(self.c):
            if a:
                if i == 0:
                    terms.append(str(a))
                elif i == 1:
                    terms.append(f"{a}*t" if a != 1 else "t")
                else:
                    terms.append(f"{a}*t^{i}" if a != 1 else f"t^{i}")
        return " + ".join(reversed(terms))


def cube_adapted_decompose(B):
    """Split B = u * B1 * B2^2 * B3^3 with B1, B2 monic squarefree coprime.

    An irreducible with exponent e lands in B1 when e = 1 mod 3, in B2 when
    e = 2 mod 3, and contributes floor(e/3) to B3.  The curve x^3 + B only
    depends on B modulo cubes, and this choice minimizes deg B1 + deg B2.
    """
    if B.is_zero():
        raise ValueError("cannot decompose the zero polynomial")
    F = B.F
    B1 = Poly.one(F)
    B2 = Poly.one(F)
    B3 = Poly.one(F)
    for g, e in B.factor():
        if e % 3 == 1:
            B1 = B1 * g
        elif e % 3 == 2:
            B2 = B2 * g
        if e // 3:
            B3 = B3 * g ** (e // 3)
    return B1, B2, B3


def sqrt_in_extension(F, a, m):
    """Square root of a in F_{q^m}: (big_field, w) or (big_field, None).

    Non-squares are certified by a^((q^m - 1)/2) = -1 inside the extension.
    """
    from .gf import gf, embed
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    if m == 1:
        return F, F.sqrt(a)
    big = gf(F.p, F.r * m)
    img = embed(F, big)(a) if F.r > 1 else a
    return big, big.sqrt(img)


def poly_from_int_coeffs(F, coeffs):
    return Poly(F, [c % F.q if isinstance(c, int) else c for c in coeffs])
