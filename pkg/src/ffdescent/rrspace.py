"""Riemann-Roch spaces L(m P_oo) on one-place-at-infinity plane models.

Two model kinds share the machinery: odd-degree hyperelliptic x^2 = F(t)
(writing x for the y-coordinate; pole orders w(t) = 2, w(x) = 2g+1) and
totally ramified trigonal x^3 + a2 x^2 + a1 x + a0 = 0 (w(t) = 3,
w(x) = w).  In both cases the affine coordinate ring F_q[t, x]/(G) is the
full ring of functions regular away from P_oo, monomials t^i x^j have
pairwise distinct pole orders filling the Weierstrass semigroup, and
L(m P_oo) is spanned by the monomials of pole order <= m.

Divisor classes are handled through explicit linear algebra: vanishing
conditions at closed points via local power-series expansions, descended to
the prime field.  Equivalence of effective divisors D ~ E is decided by the
auxiliary-denominator method: pick sigma in L(N P_oo) vanishing on E, let R
be the residual zero divisor of sigma, and search rho in L(N P_oo)
vanishing on D + R; any hit gives the witness phi = rho / sigma with
div(phi) = D - E exactly.

Only prime constant fields are supported in the linear algebra (r = 1);
the acceptance computations run over F_5 and F_7.
"""

from dataclasses import dataclass

from .gf import gf, embed
from .poly import Poly
from .ratfunc import RatFunc, XPoly


class RRError(ValueError):
    pass


# --------------------------------------------------------------------------
# closed points and effective divisors
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class ClosedPoint:
    """A closed point of the affine curve: Frobenius orbit of (tau, xi).

    deg is the orbit size; tau, xi live in gf(p, r*deg) and the stored
    representative is the orbit element with the smallest (tau, xi) pair.
    """
    degree: int
    tau: int
    xi: int

    def key(self):
        return (self.degree, self.tau, self.xi)


def canonical_point(curve, degree, tau, xi):
    big = curve.ext_field(degree)
    best = (tau, xi)
    a, b = tau, xi
    for _ in range(degree - 1):
        a = big.frobenius(a, curve.F.r)
        b = big.frobenius(b, curve.F.r)
        if (a, b) < best:
            best = (a, b)
    return ClosedPoint(degree, best[0], best[1])


class EffectiveDivisor:
    """Multiset of affine closed points plus a multiple of P_oo."""

    def __init__(self, points=None, inf_mult=0):
        self.points = dict(points or {})  # ClosedPoint -> multiplicity
        self.inf_mult = inf_mult

    def degree(self):
        return sum(p.degree * m for p, m in self.points.items()) + self.inf_mult

    def affine_degree(self):
        return sum(p.degree * m for p, m in self.points.items())

    def scale(self, n):
        return EffectiveDivisor({p: n * m for p, m in self.points.items()},
                                self.inf_mult * n)

    def add(self, other):
        pts = dict(self.points)
        for p, m in other.points.items():
            pts[p] = pts.get(p, 0) + m
        return EffectiveDivisor(pts, self.inf_mult + other.inf_mult)

    def key(self):
        return (tuple(sorted((p.key(), m) for p, m in self.points.items())),
                self.inf_mult)

    def __eq__(self, other):
        return isinstance(other, EffectiveDivisor) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"EffDiv({self.points}, oo^{self.inf_mult})"


# --------------------------------------------------------------------------
# the curve
# --------------------------------------------------------------------------

class OnePointCurve:
    """Plane model G(t, x) = 0, monic in x, with a single place at infinity."""

    def __init__(self, F, relation, wt, wx, genus, kind):
        self.F = F
        if F.r != 1:
            raise RRError("Riemann-Roch linear algebra implemented for prime fields")
        self.relation = relation      # list of Poly, index = x power; monic
        self.nx = len(relation) - 1
        self.wt = wt
        self.wx = wx
        self.genus = genus
        self.kind = kind
        # x^nx = -(lower part)
        self._xtop = [(-c) for c in relation[:-1]]
        self._ext_cache = {}

    # constructors -----------------------------------------------------

    @staticmethod
    def hyperelliptic(Fpoly):
        """x^2 = F(t), F monic squarefree of odd degree 2g+1."""
        if Fpoly.lc() != 1 or Fpoly.degree % 2 == 0 or Fpoly.degree < 3:
            raise RRError("need monic F of odd degree >= 3")
        if not Fpoly.is_squarefree():
            raise RRError("F must be squarefree")
        F = Fpoly.F
        g = (Fpoly.degree - 1) // 2
        relation = [-Fpoly, Poly.zero(F), Poly.one(F)]
        return OnePointCurve(F, relation, 2, Fpoly.degree, g, "hyperelliptic")

    @staticmethod
    def trigonal(F_cubic):
        """x^3 + a2 x^2 + a1 x + a0 = 0, totally ramified at infinity."""
        from .planecurve import trigonal_infinity_data
        data = trigonal_infinity_data(F_cubic)
        F = F_cubic.F
        relation = [F_cubic.coeff(i).num for i in range(4)]
        curve = OnePointCurve(F, relation, 3, data.w, data.genus, "trigonal")
        curve.trigonal_data = data
        return curve

    # field towers -----------------------------------------------------

    def ext_field(self, m):
        if m == 1:
            return self.F
        if m not in self._ext_cache:
            self._ext_cache[m] = gf(self.F.p, self.F.r * m)
        return self._ext_cache[m]

    def relation_over(self, big):
        if big is self.F:
            return self.relation
        return [Poly(big, list(c.c)) for c in self.relation]

    # elements of the coordinate ring -----------------------------------

    def zero_elem(self):
        return tuple(Poly.zero(self.F) for _ in range(self.nx))

    def monomial_elem(self, i, j, coeff=1):
        parts = [Poly.zero(self.F) for _ in range(self.nx)]
        parts[j] = Poly.monomial(self.F, i, coeff)
        return tuple(parts)

    def elem_add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def elem_scale(self, a, k):
        return tuple(x.scale(k) for x in a)

    def elem_neg(self, a):
        return tuple(-x for x in a)

    def elem_mul(self, a, b):
        nx = self.nx
        acc = [Poly.zero(self.F) for _ in range(2 * nx - 1)]
        for i, ai in enumerate(a):
            if not ai.is_zero():
                for j, bj in enumerate(b):
                    if not bj.is_zero():
                        acc[i + j] = acc[i + j] + ai * bj
        # reduce powers x^k, k >= nx
        for k in range(2 * nx - 2, nx - 1, -1):
            c = acc[k]
            if c.is_zero():
                continue
            acc[k] = Poly.zero(self.F)
            for j, r in enumerate(self._xtop):
                acc[k - nx + j] = acc[k - nx + j] + c * r
        return tuple(acc[:nx])

    def elem_is_zero(self, a):
        return all(c.is_zero() for c in a)

    def elem_eq(self, a, b):
        return all(x == y for x, y in zip(a, b))

    def pole_order(self, a):
        """Pole order at P_oo; None for the zero element."""
        best = None
        for j, cj in enumerate(a):
            if not cj.is_zero():
                v = self.wt * cj.degree + self.wx * j
                if best is None or v > best:
                    best = v
        return best

    # Riemann-Roch bases -------------------------------------------------

    def rr_monomials(self, m):
        """Monomials (i, j) with pole order w_t i + w_x j <= m."""
        if m < 0:
            return []
        out = []
        for j in range(self.nx):
            rem = m - self.wx * j
            if rem >= 0:
                out.extend((i, j) for i in range(rem // self.wt + 1))
        out.sort(key=lambda ij: (self.wt * ij[0] + self.wx * ij[1], ij[1]))
        return out

    def rr_dim(self, m):
        return len(self.rr_monomials(m))

    # local expansions ---------------------------------------------------

    def point_on_curve(self, degree, tau, xi):
        big = self.ext_field(degree)
        rel = self.relation_over(big)
        acc = 0
        for j, cj in enumerate(rel):
            acc = big.add(acc, big.mul(cj(tau), big.pow(xi, j)))
        return acc == 0

    def _expansions_at(self, point, prec):
        """Series data at an affine closed point: (big, t_series, x_series).

        Series are Poly in the local uniformizer u, truncated mod u^prec.
        """
        big = self.ext_field(point.degree)
        rel = self.relation_over(big)
        tau, xi = point.tau, point.xi
        Gx = _rel_dx(rel, big)
        Gt = _rel_dt(rel, big)
        gx_val = _rel_eval(Gx, big, tau, xi)
        if gx_val != 0:
            # unramified over t: u = t - tau, solve x(u) by Newton
            tser = Poly(big, [tau, 1])
            xser = Poly(big, [xi])
            k = 1
            while k < prec:
                k = min(2 * k, prec)
                fval = _rel_apply(rel, big, tser, xser, k)
                fder = _rel_apply(Gx, big, tser, xser, k)
                corr = _series_div(fval, fder, k, big)
                xser = Poly(big, (xser - corr).c[:k])
            return big, Poly(big, tser.c[:prec]), xser
        gt_val = _rel_eval(Gt, big, tau, xi)
        if gt_val == 0:
            raise RRError("singular point on the affine model")
        # ramified over t: u = x - xi, solve t(u)
        xser = Poly(big, [xi, 1])
        tser = Poly(big, [tau])
        k = 1
        while k < prec:
            k = min(2 * k, prec)
            fval = _rel_apply(rel, big, tser, xser, k)
            fder = _rel_apply(Gt, big, tser, xser, k)
            corr = _series_div(fval, fder, k, big)
            tser = Poly(big, (tser - corr).c[:k])
        return big, tser, Poly(big, xser.c[:prec])

    def expand_elem(self, a, point, prec):
        """The u-adic expansion of the element a at the point, mod u^prec."""
        big, tser, xser = self._expansions_at(point, prec)
        xpow = [Poly(big, [1])]
        for _ in range(self.nx - 1):
            xpow.append(Poly(big, (xpow[-1] * xser).c[:prec]))
        acc = Poly.zero(big)
        for j, cj in enumerate(a):
            if cj.is_zero():
                continue
            cser = Poly.zero(big)
            for k in range(cj.degree, -1, -1):
                cser = Poly(big, (cser * tser).c[:prec])
                cser = cser + Poly(big, [cj[k]])
            acc = acc + Poly(big, (cser * xpow[j]).c[:prec])
        return Poly(big, acc.c[:prec])

    def vanishing_order(self, a, point, cap=256):
        prec = 8
        while True:
            ser = self.expand_elem(a, point, prec)
            for i, c in enumerate(ser.c):
                if c:
                    return i
            if prec >= cap:
                raise RRError("vanishing order exceeds cap")
            prec = min(2 * prec, cap)

    # vanishing-constrained subspaces ------------------------------------

    def vanishing_solve(self, m, divisor):
        """Basis of {phi in L(m P_oo) : div(phi) >= affine part of divisor}.

        The infinity multiplicity of the divisor lowers m.
        """
        m_eff = m - divisor.inf_mult
        mons = self.rr_monomials(m_eff)
        if not mons:
            return []
        p = self.F.p
        rows = []
        for point, mult in divisor.points.items():
            if mult <= 0:
                continue
            big = self.ext_field(point.degree)
            cols = []
            for (i, j) in mons:
                ser = self.expand_elem(self.monomial_elem(i, j), point, mult)
                cols.append(ser)
            for order in range(mult):
                for slot in range(big.r):
                    row = []
                    for ser in cols:
                        coeff = ser[order] if order <= ser.degree else 0
                        row.append(big.coeff_vector(coeff)[slot] if coeff else 0)
                    rows.append(row)
        basis_vecs = _nullspace_mod_p(rows, len(mons), p)
        out = []
        for vec in basis_vecs:
            elem = self.zero_elem()
            for lam, (i, j) in zip(vec, mons):
                if lam:
                    elem = self.elem_add(elem, self.monomial_elem(i, j, lam))
            out.append(elem)
        return out

    # zero divisors and equivalence ---------------------------------------

    def divisor_of_zeros(self, a):
        """div_0(a) as an EffectiveDivisor; a must be a nonzero element."""
        if self.elem_is_zero(a):
            raise RRError("zero element")
        target = self.pole_order(a)
        norm = self._norm_poly(a)
        pts = {}
        total = 0
        if norm.is_zero():
            raise RRError("norm vanished: element not invertible in the function field")
        if norm.degree == 0:
            return EffectiveDivisor({}, 0)
        for prime, _e in norm.factor():
            mdeg = prime.degree
            big = self.ext_field(mdeg)
            if mdeg == 1:
                tau = self.F.neg(prime.c[0])
            else:
                primeb = Poly(big, list(prime.c))
                tau = min(primeb.roots())
            rel = self.relation_over(big)
            spec = Poly(big, [cj(tau) for cj in rel])
            aspec = Poly(big, [_poly_eval_in(cj, big, tau) for cj in a])
            gcd = spec.gcd(aspec) if not aspec.is_zero() else spec
            if gcd.degree < 1:
                continue
            for factor, _m in gcd.factor():
                fdeg = factor.degree
                pdeg = mdeg * fdeg
                if fdeg == 1:
                    ptau, pxi, pfield = tau, big.neg(factor.c[0]), big
                else:
                    pfield = self.ext_field(pdeg)
                    up = embed(big, pfield)
                    ptau = up(tau)
                    fb = Poly(pfield, [up(c) for c in factor.c])
                    pxi = min(fb.roots())
                cp = canonical_point(self, pdeg, ptau, pxi)
                if cp in pts:
                    continue
                v = self.vanishing_order(a, cp)
                if v > 0:
                    pts[cp] = v
                    total += v * pdeg
        if total != target:
            raise RRError(f"zero divisor degree {total} != pole order {target}")
        return EffectiveDivisor(pts, 0)

    def _norm_poly(self, a):
        """Norm of the element down to F_q[t], via resultant in x."""
        F = self.F
        rel_x = XPoly(F, [RatFunc(c) for c in self.relation])
        elem_x = XPoly(F, [RatFunc(c) for c in a])
        res = rel_x.resultant(elem_x)
        if res.is_zero():
            return Poly.zero(F)
        if not res.is_polynomial():
            raise RRError("norm not a polynomial")
        return res.num

    def divisor_equivalent(self, D, E):
        """(equivalent?, witness) for effective divisors of equal degree.

        The witness is a pair (rho, sigma) of ring elements with
        div(rho/sigma) = D - E when equivalent; sigma is chosen in
        L(N P_oo), N = deg E + 2g + 1, vanishing on E.
        """
        if D.degree() != E.degree():
            raise RRError("divisors must have equal degree")
        if D == E:
            one = self.monomial_elem(0, 0)
            return True, (one, one)
        g = self.genus
        N = E.degree() + 2 * g + 1
        sigma_space = self.vanishing_solve(N, EffectiveDivisor(E.points, 0))
        sigma = None
        for cand in sigma_space:
            if not self.elem_is_zero(cand):
                sigma = cand
                break
        if sigma is None:
            raise RRError("no auxiliary sigma found (unexpected)")
        zeros = self.divisor_of_zeros(sigma)
        # residual R = div_0(sigma) - affine part of E
        rpts = dict(zeros.points)
        for pt, mult in E.points.items():
            have = rpts.get(pt, 0)
            if have < mult:
                raise RRError("sigma does not vanish on E as required")
            if have == mult:
                del rpts[pt]
            else:
                rpts[pt] = have - mult
        # rho in L(M P_oo) vanishing on D_aff + R, M = ord(sigma) + inf(E) - inf(D)
        conditions = EffectiveDivisor(rpts, 0).add(EffectiveDivisor(D.points, 0))
        M = self.pole_order(sigma) + E.inf_mult - D.inf_mult
        for rho in self.vanishing_solve(M, conditions):
            if not self.elem_is_zero(rho):
                return True, (rho, sigma)
        return False, None

    # class enumeration helpers ------------------------------------------

    def affine_closed_points(self, max_degree):
        """All affine closed points of degree <= max_degree."""
        out = []
        for d in range(1, max_degree + 1):
            big = self.ext_field(d)
            rel = self.relation_over(big)
            seen = set()
            for tau in range(big.q):
                spec = Poly(big, [cj(tau) for cj in rel])
                if spec.is_zero():
                    continue
                for xi in spec.roots():
                    # orbit size must be exactly d
                    a, b = tau, xi
                    size = 1
                    while True:
                        a = big.frobenius(a, self.F.r)
                        b = big.frobenius(b, self.F.r)
                        if (a, b) == (tau, xi):
                            break
                        size += 1
                    if size != d:
                        continue
                    cp = canonical_point(self, d, tau, xi)
                    if cp.key() not in seen:
                        seen.add(cp.key())
                        out.append(cp)
        out.sort(key=lambda c: c.key())
        return out

    def effective_divisors_of_degree(self, degree):
        """All effective divisors of total degree exactly `degree`,
        allowing a multiple of P_oo."""
        points = self.affine_closed_points(degree)
        out = []

        def rec(idx, remaining, current):
            if idx == len(points):
                out.append(EffectiveDivisor(dict(current), remaining))
                return
            p = points[idx]
            maxm = remaining // p.degree
            for m in range(maxm + 1):
                if m:
                    current[p] = m
                rec(idx + 1, remaining - m * p.degree, current)
                if m:
                    del current[p]
        rec(0, degree, {})
        return out

    def class_is_trivial(self, D):
        """Whether [D - deg(D) P_oo] = 0."""
        a = D.affine_degree()
        if a == 0:
            return True
        sols = self.vanishing_solve(a, EffectiveDivisor(D.points, 0))
        return any(not self.elem_is_zero(s) for s in sols)

    def two_torsion_function(self, D):
        """phi with div(phi) = 2 D_aff - 2 deg(D_aff) P_oo, or None.

        Nonzero phi exists iff [D - deg(D) P_oo] is 2-torsion (or trivial).
        """
        a = D.affine_degree()
        if a == 0:
            return self.monomial_elem(0, 0)
        doubled = EffectiveDivisor({p: 2 * m for p, m in D.points.items()}, 0)
        sols = self.vanishing_solve(2 * a, doubled)
        for s in sols:
            if not self.elem_is_zero(s):
                return s
        return None

    def two_torsion_class_divisors(self, degree=None):
        """Representatives of the nonzero classes of J(F_q)[2], as divisors.

        Enumerates effective divisors of degree g and keeps those whose class
        is 2-torsion; partitions them into classes by explicit equivalence
        testing.  Returns (list of representative divisors, |J[2]| including
        the identity).
        """
        g = self.genus if degree is None else degree
        torsion = []
        for D in self.effective_divisors_of_degree(g):
            if D.affine_degree() == 0:
                continue
            if self.two_torsion_function(D) is None:
                continue
            if self.class_is_trivial(D):
                continue
            torsion.append(D)
        reps = []
        for D in torsion:
            matched = False
            for rep in reps:
                eq, _w = self.divisor_equivalent(D, rep)
                if eq:
                    matched = True
                    break
            if not matched:
                reps.append(D)
        return reps, len(reps) + 1


# --------------------------------------------------------------------------
# series and linear-algebra helpers (prime constant field)
# --------------------------------------------------------------------------

def _rel_dx(rel, big):
    out = []
    for j in range(1, len(rel)):
        out.append(rel[j].scale(j % big.p))
    return out


def _rel_dt(rel, big):
    return [c.derivative() for c in rel]


def _rel_eval(rel, big, tau, xi):
    acc = 0
    for j in range(len(rel) - 1, -1, -1):
        acc = big.add(big.mul(acc, xi), rel[j](tau))
    return acc


def _compose_trunc(poly, tser, prec, big):
    """poly(tser) mod u^prec, Horner."""
    acc = Poly.zero(big)
    for k in range(poly.degree, -1, -1):
        acc = Poly(big, (acc * tser).c[:prec])
        acc = acc + Poly(big, [poly[k]])
    return acc


def _rel_apply(rel, big, tser, xser, prec):
    """sum rel[j](tser) * xser^j mod u^prec."""
    acc = Poly.zero(big)
    for j in range(len(rel) - 1, -1, -1):
        acc = Poly(big, (acc * xser).c[:prec])
        acc = acc + _compose_trunc(rel[j], tser, prec, big)
    return acc


def _series_div(a, b, prec, big):
    """a / b mod u^prec; b must be a unit (b(0) != 0)."""
    b0 = b[0] if b.degree >= 0 else 0
    if b0 == 0:
        raise RRError("division by non-unit series")
    inv0 = big.inv(b0)
    out = [0] * prec
    ac = list(a.c[:prec]) + [0] * max(0, prec - len(a.c))
    bc = list(b.c[:prec]) + [0] * max(0, prec - len(b.c))
    for n in range(prec):
        s = ac[n]
        for k in range(1, n + 1):
            s = big.sub(s, big.mul(bc[k], out[n - k]))
        out[n] = big.mul(s, inv0)
    return Poly(big, out)


def _poly_eval_in(poly, big, tau):
    """Evaluate an F_p-coefficient Poly at tau in the extension big (r = 1)."""
    acc = 0
    for c in reversed(poly.c):
        acc = big.add(big.mul(acc, tau), c)
    return acc


def _nullspace_mod_p(rows, ncols, p):
    """Basis of the nullspace of the row system over F_p."""
    if not rows:
        basis = []
        for i in range(ncols):
            v = [0] * ncols
            v[i] = 1
            basis.append(v)
        return basis
    mat = [list(r) for r in rows]
    nrows = len(mat)
    pivots = []
    row = 0
    for col in range(ncols):
        sel = None
        for r in range(row, nrows):
            if mat[r][col] % p:
                sel = r
                break
        if sel is None:
            continue
        mat[row], mat[sel] = mat[sel], mat[row]
        inv = pow(mat[row][col], p - 2, p)
        mat[row] = [(x * inv) % p for x in mat[row]]
        for r in range(nrows):
            if r != row and mat[r][col] % p:
                factor = mat[r][col] % p
                mat[r] = [(x - factor * y) % p for x, y in zip(mat[r], mat[row])]
        pivots.append(col)
        row += 1
        if row == nrows:
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [0] * ncols
        v[fcol] = 1
        for i, pcol in enumerate(pivots):
            v[pcol] = (-mat[i][fcol]) % p
        basis.append(v)
    return basis