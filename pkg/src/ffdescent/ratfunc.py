"""The rational function field F_q(t): elements, places, valuations, heights.

A RatFunc is a reduced fraction num/den with den monic.  A Place is either a
monic irreducible of F_q[t] or the place at infinity; v_oo(num/den) =
deg den - deg num, and the product formula sum_v deg(v) v(z) = 0 holds for
z != 0.

XPoly is a univariate polynomial in X with RatFunc coefficients, enough ring
theory for resultants, discriminants, quotient-algebra characteristic
polynomials, and the polynomial height of a monic X-polynomial.
"""

from fractions import Fraction

from .poly import Poly


class RatFunc:
    __slots__ = ("F", "num", "den")

    def __init__(self, num, den=None):
        F = num.F
        if den is None:
            den = Poly.one(F)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            num, den = Poly.zero(F), Poly.one(F)
        else:
            g = num.gcd(den)
            if not g.is_one():
                num, den = num.exact_div(g), den.exact_div(g)
            if den.lc() != 1:
                k = F.inv(den.lc())
                num, den = num.scale(k), den.scale(k)
        self.F = F
        self.num = num
        self.den = den

    @staticmethod
    def from_poly(p):
        return RatFunc(p)

    @staticmethod
    def zero(F):
        return RatFunc(Poly.zero(F))

    @staticmethod
    def one(F):
        return RatFunc(Poly.one(F))

    @staticmethod
    def const(F, a):
        return RatFunc(Poly.const(F, a))

    @staticmethod
    def t(F):
        return RatFunc(Poly.x(F))

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den.is_one()

    def is_constant(self):
        return self.num.is_constant() and self.den.is_one()

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        return (isinstance(other, RatFunc) and self.num == other.num
                and self.den == other.den)

    def __hash__(self):
        return hash((tuple(self.num.c), tuple(self.den.c)))

    def __add__(self, other):
        if isinstance(other, Poly):
            other = RatFunc(other)
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Poly):
            other = RatFunc(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if isinstance(other, Poly):
            other = RatFunc(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero")
        return RatFunc(self.num * other.den, self.den * other.num)

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num)

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        return RatFunc(self.num ** e, self.den ** e)

    def scale(self, k):
        return RatFunc(self.num.scale(k), self.den)

    def degree(self):
        """Degree as a map P^1 -> P^1; constants (including 0) have degree 0."""
        if self.is_zero():
            return 0
        return max(self.num.degree, self.den.degree)

    def __call__(self, a):
        """Evaluate at a field element; None when a is a pole."""
        dv = self.den(a)
        if dv == 0:
            return None
        return self.F.div(self.num(a), dv)

    def eval_in(self, big, emb, a):
        """Evaluate at a in an extension field via the embedding emb."""
        num_v = 0
        for c in reversed(self.num.c):
            num_v = big.add(big.mul(num_v, a), emb(c))
        den_v = 0
        for c in reversed(self.den.c):
            den_v = big.add(big.mul(den_v, a), emb(c))
        if den_v == 0:
            return None
        return big.div(num_v, den_v)

    def derivative(self):
        n = self.num.derivative() * self.den - self.num * self.den.derivative()
        return RatFunc(n, self.den * self.den)

    def pth_root(self):
        """w with w^p = self, or None."""
        rn = self.num.pth_root()
        rd = self.den.pth_root()
        if rn is None or rd is None:
            return None
        return RatFunc(rn, rd)

    def __repr__(self):
        if self.den.is_one():
            return repr(self.num)
        return f"({self.num!r})/({self.den!r})"


class Place:
    """A place of F_q(t): a monic irreducible pi, or infinity."""

    __slots__ = ("prime", "_hash")
    INFINITY = None  # set below

    def __init__(self, prime=None):
        # prime None means the infinite place
        if prime is not None:
            if prime.lc() != 1 or prime.degree < 1:
                raise ValueError("finite place needs a monic polynomial of degree >= 1")
        self.prime = prime
        self._hash = hash(tuple(prime.c) if prime is not None else ("oo",))

    @staticmethod
    def infinite():
        return Place(None)

    @staticmethod
    def finite(prime):
        return Place(prime)

    @property
    def is_infinite(self):
        return self.prime is None

    def degree(self):
        return 1 if self.prime is None else self.prime.degree

    def valuation(self, z):
        """The normalized valuation of the RatFunc (or Poly) z."""
        if isinstance(z, Poly):
            z = RatFunc(z)
        if z.is_zero():
            raise ValueError("valuation of zero")
        if self.prime is None:
            return z.den.degree - z.num.degree
        return _ord_at(z.num, self.prime) - _ord_at(z.den, self.prime)

    def __eq__(self, other):
        if not isinstance(other, Place):
            return NotImplemented
        if self.prime is None or other.prime is None:
            return self.prime is None and other.prime is None
        return self.prime == other.prime

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "Place(oo)" if self.prime is None else f"Place({self.prime!r})"


def _ord_at(p, prime):
    if p.is_zero():
        raise ValueError("ord of zero")
    n = 0
    q, r = p.divmod(prime)
    while r.is_zero():
        n += 1
        p = q
        if p.is_zero():
            break
        q, r = p.divmod(prime)
    return n


def finite_support(z):
    """Finite places where z has a zero or pole, with valuations."""
    out = {}
    for part, sign in ((z.num, 1), (z.den, -1)):
        if part.is_constant():
            continue
        for g, e in part.factor():
            pl = Place.finite(g)
            out[pl] = out.get(pl, 0) + sign * e
    return {pl: v for pl, v in out.items() if v != 0}


def divisor_of(z):
    """Full divisor {place: valuation}, infinity included; z != 0."""
    if z.is_zero():
        raise ValueError("divisor of zero")
    out = finite_support(z)
    vinf = z.den.degree - z.num.degree
    if vinf:
        out[Place.infinite()] = vinf
    return out


def insep_degree(z):
    """Largest p^s with z in F_q(t)^(p^s); z must be non-constant.

    Repeatedly tests dz/dt = 0 and extracts p-th roots; valid because F_q is
    perfect, so F_q(t)^p = F_q(t^p) up to coefficient roots.
    """
    if z.is_constant():
        raise ValueError("inseparable degree undefined for constants")
    rho = 1
    while z.derivative().is_zero():
        z = z.pth_root()
        rho *= z.F.p
    return rho


class XPoly:
    """Polynomial in X over F_q(t), dense list of RatFunc, lowest degree first."""

    __slots__ = ("F", "c")

    def __init__(self, F, coeffs):
        c = list(coeffs)
        while c and c[-1].is_zero():
            c.pop()
        self.F = F
        self.c = c

    @staticmethod
    def from_polys(F, polys):
        return XPoly(F, [RatFunc(p) for p in polys])

    @staticmethod
    def zero(F):
        return XPoly(F, [])

    @staticmethod
    def one(F):
        return XPoly(F, [RatFunc.one(F)])

    @staticmethod
    def const(F, a):
        return XPoly(F, [a if isinstance(a, RatFunc) else RatFunc.const(F, a)])

    @staticmethod
    def x(F):
        return XPoly(F, [RatFunc.zero(F), RatFunc.one(F)])

    @property
    def degree(self):
        return len(self.c) - 1

    def is_zero(self):
        return not self.c

    def is_monic(self):
        return bool(self.c) and self.c[-1] == RatFunc.one(self.F)

    def lc(self):
        if not self.c:
            return RatFunc.zero(self.F)
        return self.c[-1]

    def coeff(self, i):
        if 0 <= i < len(self.c):
            return self.c[i]
        return RatFunc.zero(self.F)

    def __eq__(self, other):
        return isinstance(other, XPoly) and self.c == other.c

    def __hash__(self):
        return hash(tuple(self.c))

    def __add__(self, other):
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, bi in enumerate(b):
            out[i] = out[i] + bi
        return XPoly(self.F, out)

    def __neg__(self):
        return XPoly(self.F, [-a for a in self.c])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, RatFunc):
            return XPoly(self.F, [a * other for a in self.c])
        if not self.c or not other.c:
            return XPoly.zero(self.F)
        out = [RatFunc.zero(self.F) for _ in range(len(self.c) + len(other.c) - 1)]
        for i, ai in enumerate(self.c):
            if not ai.is_zero():
                for j, bj in enumerate(other.c):
                    if not bj.is_zero():
                        out[i + j] = out[i + j] + ai * bj
        return XPoly(self.F, out)

    def __pow__(self, e):
        res = XPoly.one(self.F)
        base = self
        while e:
            if e & 1:
                res = res * base
            base = base * base
            e >>= 1
        return res

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError
        a = list(self.c)
        b = other.c
        db = len(b) - 1
        if len(a) - 1 < db:
            return XPoly.zero(self.F), XPoly(self.F, a)
        inv = b[-1].inverse()
        q = [RatFunc.zero(self.F)] * (len(a) - db)
        for i in range(len(a) - 1, db - 1, -1):
            coeff = a[i]
            if not coeff.is_zero():
                coeff = coeff * inv
                q[i - db] = coeff
                for j in range(db + 1):
                    a[i - db + j] = a[i - db + j] - coeff * b[j]
        return XPoly(self.F, q), XPoly(self.F, a[:db])

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("not exact")
        return q

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        if a.is_zero():
            return a
        return a * a.lc().inverse()

    def derivative(self):
        F = self.F
        p = F.p
        out = []
        for i in range(1, len(self.c)):
            out.append(self.c[i].scale(i % p))
        return XPoly(F, out)

    def evaluate(self, z):
        """Evaluate at a RatFunc."""
        acc = RatFunc.zero(self.F)
        for a in reversed(self.c):
            acc = acc * z + a
        return acc

    def resultant(self, other):
        """Res_X(self, other) in F_q(t), by the Euclidean remainder sequence."""
        F = self.F
        f, g = self, other
        if f.is_zero() and g.is_zero():
            raise ValueError("resultant of zeros")
        if f.is_zero() or g.is_zero():
            return RatFunc.zero(F)
        res = RatFunc.one(F)
        neg1 = RatFunc.const(F, F.neg(1))
        while True:
            if g.degree == 0:
                return res * (g.c[0] ** f.degree)
            if f.degree < g.degree:
                if (f.degree * g.degree) % 2:
                    res = res * neg1
                f, g = g, f
                continue
            r = f % g
            if r.is_zero():
                return RatFunc.zero(F)
            res = res * (g.lc() ** (f.degree - r.degree))
            if (f.degree * g.degree) % 2:
                res = res * neg1
            f, g = g, r

    def discriminant(self):
        """Disc_X(f) = (-1)^(d(d-1)/2) Res(f, f'), for monic f of degree >= 2."""
        if not self.is_monic():
            raise ValueError("discriminant requires a monic polynomial in X")
        d = self.degree
        if d < 2:
            raise ValueError("degree must be >= 2")
        r = self.resultant(self.derivative())
        if (d * (d - 1) // 2) % 2:
            return -r
        return r

    def has_polynomial_coeffs(self):
        return all(a.is_polynomial() for a in self.c)

    def __repr__(self):
        if not self.c:
            return "0"
        parts = []
        for i, a in enumerate(self.c):
            if not a.is_zero():
                parts.append(f"({a!r})*X^{i}" if i else f"({a!r})")
        return " + ".join(reversed(parts))


def poly_height(f):
    """Height of a monic X-polynomial over F_q(t).

    h(f) = -sum_v deg(v) min{0, v(a_0), ..., v(a_{d-1})}; equals the maximal
    coefficient degree when all coefficients are polynomials.
    """
    if not f.is_monic():
        raise ValueError("height is defined here for monic polynomials")
    coeffs = f.c[:-1]
    nonzero = [a for a in coeffs if not a.is_zero()]
    if not nonzero:
        return 0
    if all(a.is_polynomial() for a in nonzero):
        return max(a.num.degree for a in nonzero)
    h = 0
    primes = set()
    for a in nonzero:
        if not a.den.is_one():
            for g, _ in a.den.factor():
                primes.add(g)
    for g in primes:
        v = min(Place.finite(g).valuation(a) for a in nonzero)
        if v < 0:
            h -= g.degree * v
    vinf = min(Place.infinite().valuation(a) for a in nonzero)
    if vinf < 0:
        h -= vinf
    return h


def charpoly_in_quotient(f, z):
    """Characteristic polynomial of multiplication by z on F_q(t)[X]/(f).

    f monic of degree d, z an XPoly reduced mod f.  Returned as a list of
    RatFunc coefficients [c_0, ..., c_{d-1}, 1] via Newton's identities on
    the traces of powers; needs p > d to divide by k <= d.
    """
    F = f.F
    d = f.degree
    if F.p <= d:
        raise ValueError("charpoly via Newton identities needs p > d")
    a = [f.coeff(i) for i in range(d)]  # a[i] = coefficient of X^i in f
    # power sums of the roots of f: p_k = -k a_{d-k} - sum_{i<k} a_{d-i} p_{k-i}
    s = [RatFunc.const(F, d % F.p)]
    for k in range(1, d):
        acc = RatFunc.zero(F)
        for i in range(1, k):
            acc = acc + a[d - i] * s[k - i]
        acc = acc + a[d - k].scale(k % F.p)
        s.append(-acc)
    trace_xk = s  # tr of multiplication by x^k, k = 0..d-1
    zp = [XPoly.one(F)]
    for _ in range(d):
        zp.append((zp[-1] * z) % f)
    tr_zk = []
    for k in range(d + 1):
        acc = RatFunc.zero(F)
        for i, ci in enumerate(zp[k].c):
            acc = acc + ci * trace_xk[i]
        tr_zk.append(acc)
    # recover char poly of z from its power traces by the same recurrence
    b = [RatFunc.zero(F)] * d  # b[i] = coefficient of X^i in charpoly(z)
    for k in range(1, d + 1):
        acc = tr_zk[k]
        for i in range(1, k):
            acc = acc + b[d - i] * tr_zk[k - i]
        b[d - k] = -acc.scale(F.inv(k % F.p))
    return XPoly(F, b + [RatFunc.one(F)])


def norm_in_quotient(f, z):
    """Norm of z in F_q(t)[X]/(f): (-1)^d * charpoly(0)."""
    ch = charpoly_in_quotient(f, z)
    n = ch.coeff(0)
    if f.degree % 2:
        n = -n
    return n
