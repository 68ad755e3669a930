"""The plane curve C_f : f(x) = 0 over F_q, viewed as a cover of P^1_t.

Three pieces of machinery live here:

  * bivariate factorization of a monic f in X with F_q[t] coefficients
    (specialization at a good t-value, multifactor Hensel lift, subset
    recombination), plus the constant-field splitting that separates
    F_q(t)-irreducibility from geometric irreducibility;

  * tame ramification analysis of the degree-d map C_f -> P^1_t by Newton
    polygons with exact polynomial arithmetic: clusters are separated by
    translation, fractional edges by the substitution t = u^e,
    x = u^a (c + y), recursing only while residual polynomials stay
    inseparable.  Every place is returned as (ram index e, weight w) where
    w counts the conjugate places over the algebraic closure, which is all
    Riemann-Hurwitz needs;

  * the one-place-at-infinity trigonal inspection: pole order w of x,
    Weierstrass semigroup <3, w>, semigroup genus w - 1, and the Maroni
    invariant from lattice-point counts.
"""

from dataclasses import dataclass, field

from .gf import GF, gf, embed
from .poly import Poly
from .ratfunc import RatFunc, XPoly, poly_height


class WildRamificationError(ValueError):
    pass


class FactorizationError(ValueError):
    pass


# --------------------------------------------------------------------------
# bivariate polynomials as lists of Poly (t-coefficients), index = X power
# --------------------------------------------------------------------------

def _biv_from_xpoly(f):
    if not f.has_polynomial_coeffs():
        raise FactorizationError("coefficients must lie in F_q[t]")
    return [f.coeff(i).num for i in range(f.degree + 1)]


def _biv_to_xpoly(F, coeffs):
    return XPoly(F, [RatFunc(c) for c in coeffs])


def _biv_mul(a, b, F):
    out = [Poly.zero(F) for _ in range(len(a) + len(b) - 1)]
    for i, ai in enumerate(a):
        if not ai.is_zero():
            for j, bj in enumerate(b):
                if not bj.is_zero():
                    out[i + j] = out[i + j] + ai * bj
    return _biv_trim(out, F)


def _biv_trim(c, F):
    while len(c) > 1 and c[-1].is_zero():
        c.pop()
    return c


def _biv_mod_t(c, F):
    """Reduce mod t: the univariate polynomial in X over F_q."""
    return Poly(F, [ci.constant() for ci in c])


def _biv_truncate(c, N):
    return [Poly(ci.F, ci.c[:N]) for ci in c]


def _biv_eval_t(c, a, F):
    """Specialize t = a: univariate in X."""
    return Poly(F, [ci(a) for ci in c])


def _biv_shift_t(c, a):
    return [ci.taylor_shift(a) for ci in c]


def _biv_divmod_x(num, den, F):
    """Division in X over F_q(t); den must be monic in X here."""
    fn = _biv_to_xpoly(F, num)
    fd = _biv_to_xpoly(F, den)
    q, r = fn.divmod(fd)
    return q, r


# --------------------------------------------------------------------------
# multifactor Hensel lifting mod t^N
# --------------------------------------------------------------------------

def _hensel_pair(gbiv, U, V, N, F):
    """Lift g = U*V from mod t to mod t^N; Ubar, Vbar coprime, g monic in X."""
    Ubar = _biv_mod_t(U, F)
    Vbar = _biv_mod_t(V, F)
    gg, S, T = Ubar.xgcd(Vbar)
    if not gg.is_one():
        raise FactorizationError("factors not coprime mod t")
    U = [Poly(F, ci.c[:]) for ci in U]
    V = [Poly(F, ci.c[:]) for ci in V]
    for k in range(1, N):
        prod = _biv_mul(U, V, F)
        E = [Poly.zero(F) for _ in range(max(len(gbiv), len(prod)))]
        for i in range(len(E)):
            gi = gbiv[i] if i < len(gbiv) else Poly.zero(F)
            pi = prod[i] if i < len(prod) else Poly.zero(F)
            E[i] = gi - pi
        # error at level k
        Ebar = Poly(F, [ci[k] for ci in E])
        if Ebar.is_zero():
            continue
        dU = (T * Ebar) % Ubar
        carry = (T * Ebar) // Ubar
        dV = (S * Ebar + carry * Vbar)
        tk = Poly.monomial(F, k)
        for i in range(len(U)):
            if i <= dU.degree:
                U[i] = U[i] + tk.scale(dU[i])
        for i in range(len(V)):
            if i <= dV.degree:
                V[i] = V[i] + tk.scale(dV[i])
        U = _biv_truncate(U, N)
        V = _biv_truncate(V, N)
    return U, V


def _hensel_tree(gbiv, bars, N, F):
    """Lift the coprime univariate factorization bars of g mod t to mod t^N."""
    if len(bars) == 1:
        return [_biv_truncate(gbiv, N)]
    mid = len(bars) // 2
    Ubar = Poly.one(F)
    for b in bars[:mid]:
        Ubar = Ubar * b
    Vbar = Poly.one(F)
    for b in bars[mid:]:
        Vbar = Vbar * b
    U0 = [Poly.const(F, c) for c in Ubar.c]
    V0 = [Poly.const(F, c) for c in Vbar.c]
    U, V = _hensel_pair(gbiv, U0, V0, N, F)
    return _hensel_tree(U, bars[:mid], N, F) + _hensel_tree(V, bars[mid:], N, F)


def factor_bivariate(f, rng=None):
    """Irreducible monic factors over F_q(t) of a monic separable f in X.

    Coefficients must lie in F_q[t]; factors come out monic in X with
    polynomial coefficients (Gauss), sorted deterministically.
    """
    import itertools
    import random as _random
    F = f.F
    if rng is None:
        rng = _random.Random(0x5EED)
    if not f.is_monic():
        raise FactorizationError("f must be monic in X")
    d = f.degree
    if d == 1:
        return [f]
    biv = _biv_from_xpoly(f)
    disc = f.discriminant()
    if disc.is_zero():
        raise FactorizationError("f must be separable over F_q(t)")
    disc_poly = disc.num * disc.den  # nonvanishing test below works either way

    shift_a = None
    for a in range(F.q):
        if disc_poly(a) != 0:
            spec = _biv_eval_t(biv, a, F)
            if spec.degree == d and spec.is_squarefree():
                shift_a = a
                break
    if shift_a is None:
        return _factor_bivariate_via_extension(f, rng)

    g = _biv_shift_t(biv, shift_a)
    gbar = _biv_mod_t(g, F)
    bars = [h for h, _ in gbar.factor(rng)]
    if len(bars) == 1:
        return [f]
    h_f = poly_height(f)
    N = h_f + 2
    lifted = _hensel_tree(g, bars, N, F)

    # subset recombination
    result = []
    remaining = list(range(len(bars)))
    gcur = g
    fcur = _biv_to_xpoly(F, gcur)
    while remaining:
        found = None
        for size in range(1, len(remaining) + 1):
            for combo in itertools.combinations(remaining, size):
                cand = [Poly.one(F)]
                for idx in combo:
                    cand = _biv_trim(
                        [Poly(F, c.c[:N]) for c in _biv_mul(cand, lifted[idx], F)], F)
                if any(c.degree >= N - 1 for c in cand if not c.is_zero()):
                    continue
                cx = _biv_to_xpoly(F, cand)
                q, r = fcur.divmod(cx)
                if r.is_zero():
                    found = (combo, cx, q)
                    break
            if found:
                break
        if not found:
            raise FactorizationError("recombination failed")
        combo, cx, q = found
        result.append(cx)
        for idx in combo:
            remaining.remove(idx)
        fcur = q
        if fcur.degree == 0:
            break
    out = []
    for piece in result:
        shifted = XPoly(F, [RatFunc(c.num.taylor_shift(F.neg(shift_a)), c.den.taylor_shift(F.neg(shift_a)))
                            for c in piece.c])
        out.append(shifted)
    out.sort(key=lambda h: (h.degree, [tuple(c.num.c) for c in h.c]))
    return out


def _factor_bivariate_via_extension(f, rng):
    """Fallback when no good specialization point exists in F_q: factor over
    F_{q^2}(t) and merge Frobenius-conjugate factors."""
    F = f.F
    big = gf(F.p, F.r * 2)
    up = embed(F, big)
    fb = XPoly(big, [RatFunc(Poly(big, [up(c) for c in co.num.c]),
                             Poly(big, [up(c) for c in co.den.c])) for co in f.c])
    pieces = factor_bivariate(fb, rng)
    # group into Frobenius orbits
    def frob_x(h):
        return XPoly(big, [RatFunc(Poly(big, [big.frobenius(c, F.r) for c in co.num.c]),
                                   Poly(big, [big.frobenius(c, F.r) for c in co.den.c]))
                           for co in h.c])
    used = [False] * len(pieces)
    out = []
    down = {up(a): a for a in range(F.q)}
    for i, h in enumerate(pieces):
        if used[i]:
            continue
        used[i] = True
        fh = frob_x(h)
        prod = h
        if fh != h:
            for j, h2 in enumerate(pieces):
                if not used[j] and h2 == fh:
                    used[j] = True
                    prod = h * h2
                    break
        coeffs = []
        for co in prod.c:
            coeffs.append(RatFunc(Poly(F, [down[c] for c in co.num.c]),
                                  Poly(F, [down[c] for c in co.den.c])))
        out.append(XPoly(F, coeffs))
    out.sort(key=lambda h: (h.degree, [tuple(c.num.c) for c in h.c]))
    return out


def geometric_split(h, max_m=None, rng=None):
    """(number of geometric components, constant-field degree) of the
    F_q(t)-irreducible monic h."""
    F = h.F
    e = h.degree
    if max_m is None:
        max_m = e
    best = 1
    for m in range(2, e + 1):
        if e % m or m > max_m:
            continue
        big = gf(F.p, F.r * m)
        up = embed(F, big)
        hb = XPoly(big, [RatFunc(Poly(big, [up(c) for c in co.num.c]),
                                 Poly(big, [up(c) for c in co.den.c])) for co in h.c])
        pieces = factor_bivariate(hb, rng)
        if len(pieces) == m:
            best = max(best, m)
    return best


# --------------------------------------------------------------------------
# tame local ramification by Newton polygons, exact polynomial arithmetic
# --------------------------------------------------------------------------

def _ord_t(p):
    if p.is_zero():
        return None
    for i, c in enumerate(p.c):
        if c:
            return i
    return None


def _lower_hull(points):
    """Lower convex hull of (i, v) points, left to right."""
    pts = sorted(points)
    hull = []
    for p in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (x2 - x1) * (p[1] - y1) <= (p[0] - x1) * (y2 - y1):
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


class _Branch:
    __slots__ = ("e", "weight", "root_val")

    def __init__(self, e, weight, root_val):
        self.e = e
        self.weight = weight
        self.root_val = root_val  # v_t of the x-root on this branch (Fraction)


def local_places(biv, F, weight=1, depth=0):
    """Places of {H(t, x) = 0} over t = 0 as _Branch records.

    biv is the coefficient list (index = X power) of H, monic in X over
    F[t].  Weights count conjugate places over the algebraic closure.
    """
    from fractions import Fraction
    out = []
    hbar = _biv_mod_t(biv, F)
    if hbar.degree != len(biv) - 1:
        raise FactorizationError("top coefficient must be a unit at t = 0")
    for phi, mu in hbar.factor():
        m = phi.degree
        if mu == 1:
            out.append(_Branch(1, weight * m, Fraction(0)))
            continue
        if m == 1:
            xi = phi.F.neg(phi.c[0])
            shifted = _translate_x(biv, xi, F)
            out.extend(_cluster_places(shifted, F, weight, mu, depth))
        else:
            big = gf(F.p, F.r * m)
            up = embed(F, big)
            bb = [Poly(big, [up(c) for c in ci.c]) for ci in biv]
            phib = Poly(big, [up(c) for c in phi.c])
            roots = phib.roots()
            xi = min(roots)
            shifted = _translate_x(bb, xi, big)
            out.extend(_cluster_places(shifted, big, weight * m, mu, depth))
    return out


def _translate_x(biv, xi, F):
    """H(t, x + xi) by binomial expansion on the X powers."""
    d = len(biv) - 1
    out = [Poly.zero(F) for _ in range(d + 1)]
    binom = [[0] * (d + 1) for _ in range(d + 1)]
    for n in range(d + 1):
        binom[n][0] = 1
        for k in range(1, n + 1):
            binom[n][k] = binom[n - 1][k - 1] + (binom[n - 1][k] if k <= n - 1 else 0)
    pw = [1]
    for _ in range(d):
        pw.append(F.mul(pw[-1], xi))
    for n, cn in enumerate(biv):
        if cn.is_zero():
            continue
        for k in range(n + 1):
            coef = F.mul(binom[n][k] % F.p, pw[n - k])
            if coef:
                out[k] = out[k] + cn.scale(coef)
    return out


def _cluster_places(biv, F, weight, mu, depth):
    """Places for the roots with x -> 0 as t -> 0 (a cluster of size mu)."""
    from fractions import Fraction
    if depth > 40:
        raise FactorizationError("cluster recursion failed to terminate")
    pts = []
    for i, ci in enumerate(biv):
        v = _ord_t(ci)
        if v is not None:
            pts.append((i, v))
    hull = _lower_hull(pts)
    out = []
    covered = 0
    for (i0, v0), (i1, v1) in zip(hull, hull[1:]):
        if v0 <= v1:
            continue  # slope >= 0: roots with v(x) <= 0, not in this cluster
        rise = v0 - v1
        run = i1 - i0
        g = _gcd(rise, run)
        a, e = rise // g, run // g
        if e % F.p == 0:
            raise WildRamificationError("wild ramification: slope denominator divisible by p")
        covered += run
        # residual polynomial on this edge
        rho = []
        for j in range(g + 1):
            i = i0 + j * e
            v = v0 - j * a
            c = biv[i][v] if i < len(biv) else 0
            rho.append(c)
        rho = Poly(F, rho)
        lam = Fraction(a, e)
        for phi, nu in rho.factor():
            m = phi.degree
            if nu == 1:
                out.append(_Branch(e, weight * m, lam))
                continue
            # inseparable residual factor: refine via t = u^e, x = u^a (c + y)
            if m > 1:
                kprime = gf(F.p, F.r * m)
                upm = embed(F, kprime)
                bb = [Poly(kprime, [upm(c) for c in ci.c]) for ci in biv]
                phip = Poly(kprime, [upm(c) for c in phi.c])
                z0 = min(phip.roots())
                wfac = weight * m
            else:
                kprime, bb = F, biv
                z0 = kprime.neg(phi.c[0])
                wfac = weight
            c_root, kfin, bb2 = _eth_root_field(kprime, z0, e, bb)
            G = _edge_substitute(bb2, kfin, a, e)
            Gt = _translate_x(G, c_root, kfin)
            mubar = _ord_x_at_zero(_biv_mod_t(Gt, kfin))
            if mubar == 0:
                raise FactorizationError("refinement lost its cluster")
            for br in _cluster_places(Gt, kfin, wfac, mubar, depth + 1):
                out.append(_Branch(e * br.e, br.weight, lam))
    total = sum(br.e * br.weight for br in out)
    if total != mu * weight:
        raise FactorizationError(
            f"edge bookkeeping mismatch: covered {total}, expected {mu * weight}")
    return out


def _ord_x_at_zero(p):
    n = 0
    for c in p.c:
        if c == 0:
            n += 1
        else:
            break
    return n if p.c else 0


def _eth_root_field(k, z0, e, bb):
    """Find c with c^e = z0, extending k minimally; re-embed bb alongside."""
    if e == 1:
        return z0, k, bb
    ye = Poly(k, [k.neg(z0)] + [0] * (e - 1) + [1])
    facs = ye.factor()
    mdeg = min(h.degree for h, _ in facs)
    if mdeg == 1:
        for h, _ in facs:
            if h.degree == 1:
                return k.neg(h.c[0]), k, bb
    big = gf(k.p, k.r * mdeg)
    up = embed(k, big)
    yeb = Poly(big, [up(c) for c in ye.c])
    roots = yeb.roots()
    c = min(roots)
    bb2 = [Poly(big, [up(cc) for cc in ci.c]) for ci in bb]
    return c, big, bb2


def _edge_substitute(biv, F, a, e):
    """G(u, y) = H(u^e, u^a y) / u^E with E the minimal u-valuation."""
    d = len(biv) - 1
    # coefficient of y^i: c_i(u^e) * u^(a i)
    new = []
    for i, ci in enumerate(biv):
        coeffs = [0] * (e * max(ci.degree, 0) + a * i + 1)
        for j, cc in enumerate(ci.c):
            if cc:
                coeffs[e * j + a * i] = cc
        new.append(Poly(F, coeffs))
    E = None
    for ci in new:
        v = _ord_t(ci)
        if v is not None and (E is None or v < E):
            E = v
    out = []
    for ci in new:
        if ci.is_zero():
            out.append(ci)
        else:
            out.append(Poly(F, ci.c[E:]))
    return out


# --------------------------------------------------------------------------
# the full cover analysis: components, ramification, genus
# --------------------------------------------------------------------------

@dataclass
class ComponentData:
    poly: XPoly
    x_degree: int
    geometric_pieces: int
    genus: int = None
    ramification: dict = field(default_factory=dict)
    x_pole_degree: int = None


@dataclass
class PlaneCurveData:
    components: list
    omega_rational: int
    omega_geometric: int
    irreducible: bool
    genus_f: int
    two_torsion_dim: int


def _infinity_model(biv, F):
    """Rescale at t = 1/s so the cover over s = 0 is integral and monic.

    x = y / s^lam with lam = max ceil(deg c_i / (d - i)); returns the new
    coefficient list in (s, y) and lam.
    """
    d = len(biv) - 1
    lam = 0
    for i, ci in enumerate(biv[:-1]):
        if not ci.is_zero():
            need = -(-ci.degree // (d - i))
            lam = max(lam, need)
    out = []
    for i, ci in enumerate(biv):
        if ci.is_zero():
            out.append(ci)
            continue
        shift = lam * (d - i) - ci.degree
        out.append(ci.reverse(ci.degree).shift_up(shift))
    return out, lam


def ramification_profile(component, rng=None):
    """{place label: list of (e, weight, root_val)} over every critical place.

    Places of P^1 are taken over the algebraic closure: a critical value in
    an extension field is analyzed once with multiplicity equal to its
    degree over F_q.
    """
    F = component.F
    biv = _biv_from_xpoly(component)
    disc = component.discriminant()
    if disc.is_zero():
        raise FactorizationError("component must be separable")
    profiles = {}
    dn = disc.num * disc.den
    seen = set()
    for prime, _e in dn.factor():
        key = tuple(prime.c)
        if key in seen:
            continue
        seen.add(key)
        m = prime.degree
        if m == 1:
            tau = F.neg(prime.c[0])
            shifted = _biv_shift_t(biv, tau)
            branches = local_places(shifted, F, weight=1)
        else:
            big = gf(F.p, F.r * m)
            up = embed(F, big)
            bb = [Poly(big, [up(c) for c in ci.c]) for ci in biv]
            primeb = Poly(big, [up(c) for c in prime.c])
            tau = min(primeb.roots())
            shifted = _biv_shift_t(bb, tau)
            branches = local_places(shifted, big, weight=m)
        profiles[f"({prime!r})"] = [(b.e, b.weight, b.root_val) for b in branches]
    inf_biv, lam = _infinity_model(biv, F)
    branches = local_places(inf_biv, F, weight=1)
    profiles["oo"] = [(b.e, b.weight, b.root_val, lam) for b in branches]
    return profiles


def component_genus(component, rng=None):
    """Geometric genus by tame Riemann-Hurwitz; requires p > deg_X."""
    F = component.F
    d = component.degree
    if F.p <= d:
        raise WildRamificationError("genus computation requires p > d (tame)")
    profiles = ramification_profile(component, rng)
    ram_sum = 0
    for label, branches in profiles.items():
        for b in branches:
            e, w = b[0], b[1]
            ram_sum += (e - 1) * w
    two_g_minus_2 = -2 * d + ram_sum
    if two_g_minus_2 % 2:
        raise FactorizationError("Riemann-Hurwitz parity failure")
    g = (two_g_minus_2 + 2) // 2
    if g < 0:
        raise FactorizationError("negative genus: component not geometrically irreducible?")
    return g, profiles


def x_pole_degree(component, profiles=None):
    """Degree of the pole divisor of x on the component (eq of heights)."""
    from fractions import Fraction
    if profiles is None:
        profiles = ramification_profile(component)
    total = Fraction(0)
    for b in profiles.get("oo", []):
        e, w, rv, lam = b
        polord = lam * e - rv * e
        if polord > 0:
            total += w * polord
    if total.denominator != 1:
        raise FactorizationError("non-integral pole degree")
    return int(total)


def plane_curve_analyze(model, require_tame=True, rng=None, want_genus=True):
    """Components, geometric component count omega, and genus of C_f."""
    F = model.F
    f = model.f
    if not f.has_polynomial_coeffs():
        raise FactorizationError("plane curve analysis requires F_q[t] coefficients")
    factors = factor_bivariate(f, rng)
    omega_geo = 0
    comps = []
    for h in factors:
        pieces = geometric_split(h, rng=rng)
        omega_geo += pieces
        comps.append(ComponentData(h, h.degree, pieces))
    irreducible = (len(factors) == 1 and comps[0].geometric_pieces == 1)
    genus_f = None
    if want_genus and irreducible:
        if F.p <= model.d and require_tame:
            raise WildRamificationError("genus requested but p <= d")
        g, profiles = component_genus(comps[0].poly, rng)
        comps[0].genus = g
        comps[0].ramification = profiles
        comps[0].x_pole_degree = x_pole_degree(comps[0].poly, profiles)
        genus_f = g
    return PlaneCurveData(
        components=comps,
        omega_rational=len(factors),
        omega_geometric=omega_geo,
        irreducible=irreducible,
        genus_f=genus_f,
        two_torsion_dim=omega_geo - 1,
    )


# --------------------------------------------------------------------------
# trigonal one-place-at-infinity models
# --------------------------------------------------------------------------

@dataclass
class TrigonalData:
    w: int
    genus: int
    maroni: int
    semigroup: list


def h0_one_point_trigonal(w, n):
    """dim L(3n P_oo) on a <3, w> one-point curve: lattice points with
    3i + jw <= 3n, j in {0, 1, 2}, i >= 0."""
    count = 0
    for j in range(3):
        top = 3 * n - j * w
        if top >= 0:
            count += top // 3 + 1
    return count


def maroni_invariant(w):
    """min{n : h^0(n g^1_3) > n + 1} - 2 for the <3, w> semigroup."""
    n = 0
    while True:
        n += 1
        if h0_one_point_trigonal(w, n) > n + 1:
            return n - 2
        if n > 4 * w:
            raise RuntimeError("Maroni search runaway")


def trigonal_infinity_data(F_cubic, rng=None, check_irreducible=True):
    """Validate a one-place-at-infinity trigonal plane model and compute
    (w, genus, Maroni invariant, semigroup).

    F_cubic: monic X^3 + a2 X^2 + a1 X + a0 with F_q[t] coefficients.
    Requirements: a single Newton edge at infinity with gcd(w, 3) = 1 where
    w = deg a0; nonsingular affine model; irreducible.
    """
    F = F_cubic.F
    if F_cubic.degree != 3 or not F_cubic.is_monic():
        raise ValueError("trigonal model must be monic of degree 3 in X")
    if not F_cubic.has_polynomial_coeffs():
        raise ValueError("coefficients must lie in F_q[t]")
    a2, a1, a0 = (F_cubic.coeff(2).num, F_cubic.coeff(1).num, F_cubic.coeff(0).num)
    if a0.is_zero():
        raise ValueError("reducible: X divides the model")
    w = a0.degree
    if w % 3 == 0:
        raise ValueError("not totally ramified at infinity: 3 | deg a0")
    for i, ai in ((1, a1), (2, a2)):
        if not ai.is_zero() and 3 * ai.degree > (3 - i) * w:
            raise ValueError("not totally ramified: Newton polygon at infinity has several edges")
    if check_irreducible and len(factor_bivariate(F_cubic, rng)) != 1:
        raise ValueError("model is reducible over F_q(t)")
    _check_affine_smooth(F_cubic)
    genus = w - 1
    if genus <= 4:
        raise ValueError(f"genus {genus} <= 4: Maroni invariant not defined")
    m = maroni_invariant(w)
    lo2, hi2 = genus - 4, genus - 2  # bounds (g-4)/3 <= m <= (g-2)/2, scaled
    if not (lo2 <= 3 * m and 2 * m <= hi2):
        raise RuntimeError("Maroni invariant escaped its bounds")
    semigroup = sorted({3 * i + j * w for i in range(w) for j in range(3)
                        if 3 * i + j * w <= 2 * genus})
    return TrigonalData(w=w, genus=genus, maroni=m, semigroup=semigroup)


def _check_affine_smooth(F_cubic):
    """Reject singular affine models (F = F_x = F_t = 0 has a solution)."""
    F = F_cubic.F
    fx = F_cubic.derivative()
    r1 = F_cubic.resultant(fx)
    if r1.is_zero():
        raise ValueError("singular affine model (inseparable)")
    ft = XPoly(F, [RatFunc(c.num.derivative()) for c in F_cubic.c])
    if ft.is_zero():
        return
    r2 = F_cubic.resultant(ft)
    if r2.is_zero():
        raise ValueError("singular affine model")
    g = (r1.num * r1.den).gcd(r2.num * r2.den)
    if g.degree < 1:
        return
    # candidate singular t-values: roots of g over its splitting field
    for prime, _ in g.factor():
        m = prime.degree
        if m == 1:
            big, up = F, lambda a: a
            tau = F.neg(prime.c[0])
        else:
            big = gf(F.p, F.r * m)
            up = embed(F, big)
            primeb = Poly(big, [up(c) for c in prime.c])
            tau = min(primeb.roots())
        fx_spec = Poly(big, [up(c) for c in _biv_eval_t(_biv_from_xpoly(F_cubic), 0, F).c]) if False else None
        # specialize F, F_x, F_t at t = tau over big
        def spec(xp):
            cs = []
            for co in xp.c:
                acc = 0
                for cc in reversed(co.num.c):
                    acc = big.add(big.mul(acc, tau), up(cc))
                cs.append(acc)
            return Poly(big, cs)
        Fs = spec(F_cubic)
        Fxs = spec(fx)
        Fts = spec(ft)
        common = Fs.gcd(Fxs)
        if common.degree >= 1:
            for x0 in common.roots():
                if Fts(x0) == 0:
                    raise ValueError("singular affine model")
