"""Exact polynomial GCD via primitive pseudo-remainder sequences.

The engine works on a recursive dense representation (a level-k polynomial is
a descending coefficient list of level-(k-1) polynomials, level 0 being field
scalars) and recurses on variables with content / primitive-part splitting.

Homogeneity is exploited before the engine runs: a homogeneous form in
x, y, z is its monomial content times a z-primitive part, and gcds of
z-primitive homogeneous forms correspond exactly to gcds of their
dehomogenizations at z = 1.  That turns every trivariate gcd into a bivariate
one (and every binary-form gcd into a univariate one).
"""

from __future__ import annotations

from .errors import BothZero, CharacteristicTooSmall
from .forms import BinaryForm, Form, exact_div


# -- recursive dense representation ----------------------------------------
# level 0: a field scalar; level k: list of level-(k-1) polys, leading first.
# The zero polynomial at level k >= 1 is the empty list.


def _rzero(lev):
    # plain int 0 interoperates with both Fraction and mod-p scalars
    return 0 if lev == 0 else []


def _ris_zero(f, lev) -> bool:
    return not f


def _rstrip(f, lev):
    if lev == 0:
        return f
    i = 0
    while i < len(f) and _ris_zero(f[i], lev - 1):
        i += 1
    return f[i:]


def _rdegree(f) -> int:
    return len(f) - 1


def _rconst(value, lev):
    """Lift a scalar to a constant polynomial at the given level."""
    if lev == 0:
        return value
    return [_rconst(value, lev - 1)]


def _rneg(f, lev, K):
    if lev == 0:
        return K.neg(f)
    return [_rneg(c, lev - 1, K) for c in f]


def _radd(f, g, lev, K):
    if lev == 0:
        return K.add(f, g)
    df, dg = len(f), len(g)
    if df < dg:
        f, g, df, dg = g, f, dg, df
    pad = df - dg
    out = list(f[:pad])
    for a, b in zip(f[pad:], g):
        out.append(_radd(a, b, lev - 1, K))
    return _rstrip(out, lev)


def _rsub(f, g, lev, K):
    return _radd(f, _rneg(g, lev, K), lev, K)


def _rmul(f, g, lev, K):
    if lev == 0:
        return K.mul(f, g)
    if not f or not g:
        return []
    out = [_rzero(lev - 1) for _ in range(len(f) + len(g) - 1)]
    for i, a in enumerate(f):
        if _ris_zero(a, lev - 1):
            continue
        for j, b in enumerate(g):
            if _ris_zero(b, lev - 1):
                continue
            out[i + j] = _radd(out[i + j], _rmul(a, b, lev - 1, K),
                               lev - 1, K)
    return _rstrip(out, lev)


def _rmul_coeff(f, c, lev, K):
    """Multiply a level-lev polynomial by a level-(lev-1) coefficient."""
    if _ris_zero(c, lev - 1):
        return _rzero(lev)
    return _rstrip([_rmul(a, c, lev - 1, K) for a in f], lev)


def _rshift(f, n, lev):
    """Multiply by (main variable)^n."""
    if not f:
        return f
    return f + [_rzero(lev - 1) for _ in range(n)]


def _rdivexact(f, g, lev, K):
    """Exact quotient of same-level dense polynomials (g must divide f)."""
    if lev == 0:
        return K.div(f, g)
    if not f:
        return []
    if not g:
        raise ZeroDivisionError("recursive division by zero")
    df, dg = _rdegree(f), _rdegree(g)
    if df < dg:
        raise ArithmeticError("inexact recursive division")
    rem = list(f)
    out = [_rzero(lev - 1) for _ in range(df - dg + 1)]
    for pos in range(df - dg + 1):
        lead = rem[pos]
        if _ris_zero(lead, lev - 1):
            continue
        q = _rdivexact(lead, g[0], lev - 1, K)
        out[pos] = q
        for j in range(dg + 1):
            rem[pos + j] = _rsub(rem[pos + j], _rmul(g[j], q, lev - 1, K),
                                 lev - 1, K)
    if any(not _ris_zero(c, lev - 1) for c in rem):
        raise ArithmeticError("inexact recursive division")
    return _rstrip(out, lev)


def _rprem(f, g, lev, K):
    """Pseudo-remainder of f by g in the main variable."""
    df, dg = _rdegree(f), _rdegree(g)
    if df < dg:
        return f
    r = list(f)
    lc_g = g[0]
    n = df - dg + 1
    while r and _rdegree(r) >= dg:
        lc_r = r[0]
        j = _rdegree(r) - dg
        n -= 1
        r = _rmul_coeff(r, lc_g, lev, K)
        sub = _rmul_coeff(_rshift(g, j, lev), lc_r, lev, K)
        r = _rsub(r, sub, lev, K)
    for _ in range(n):
        r = _rmul_coeff(r, lc_g, lev, K)
    return r


def _ris_scalar_poly(f, lev) -> bool:
    """True when f is a nonzero constant all the way down."""
    while lev > 0:
        if len(f) != 1:
            return False
        f = f[0]
        lev -= 1
    return not _ris_zero(f, 0)


def _leaf_values(f, lev):
    if lev == 0:
        if f:
            yield f
        return
    for c in f:
        yield from _leaf_values(c, lev - 1)


def _rmap_leaves(f, lev, fn):
    if lev == 0:
        return fn(f) if f else f
    return [_rmap_leaves(c, lev - 1, fn) for c in f]


def _rscalar_reduce(f, lev, K):
    """Divide out the scalar content of every coefficient leaf.

    Over the rationals this is what keeps the pseudo-remainder sequence
    primitive in the integer sense; over GF(p) it just normalizes a unit.
    """
    if _ris_zero(f, lev):
        return f
    content = K.scalar_content(_leaf_values(f, lev))
    if content == K.one:
        return f
    inv = K.inv(content)
    return _rmap_leaves(f, lev, lambda v: K.mul(v, inv))


def _rcontent(f, lev, K):
    """GCD of the main-variable coefficients (a level-(lev-1) polynomial)."""
    content = _rzero(lev - 1)
    for c in f:
        if _ris_zero(c, lev - 1):
            continue
        content = _rgcd(content, c, lev - 1, K)
        if _ris_scalar_poly(content, lev - 1):
            break
    return content


def _rprimitive(f, lev, K):
    if _ris_zero(f, lev):
        return _rconst(K.one, lev - 1), f
    content = _rcontent(f, lev, K)
    if _ris_scalar_poly(content, lev - 1):
        return content, _rscalar_reduce(f, lev, K)
    pp = [_rdivexact(c, content, lev - 1, K) if not _ris_zero(c, lev - 1)
          else c for c in f]
    return content, _rscalar_reduce(pp, lev, K)


def _rgcd(f, g, lev, K):
    """GCD at the given level; the result is defined up to a scalar."""
    if lev == 0:
        both_zero = _ris_zero(f, 0) and _ris_zero(g, 0)
        return K.zero if both_zero else K.one
    if _ris_zero(f, lev):
        return g
    if _ris_zero(g, lev):
        return f
    cf, pf = _rprimitive(f, lev, K)
    cg, pg = _rprimitive(g, lev, K)
    c = _rgcd(cf, cg, lev - 1, K)
    if _rdegree(pf) < _rdegree(pg):
        pf, pg = pg, pf
    while not _ris_zero(pg, lev):
        r = _rstrip(_rprem(pf, pg, lev, K), lev)
        r = _rscalar_reduce(r, lev, K)
        pf, pg = pg, _rprimitive(r, lev, K)[1]
    if _rdegree(pf) == 0:
        return [c]
    _, pf = _rprimitive(pf, lev, K)
    return _rmul_coeff(pf, c, lev, K)


# -- bivariate gcd by evaluation / interpolation -----------------------------
# Evaluate y at field points, take univariate gcds in x, and interpolate the
# result scaled by gamma = gcd of the leading coefficients (Brown's scheme).
# A single degree-0 evaluation certifies coprimality, which is the hot path
# in the square-free machinery; trial division certifies every other answer.


def _univ_eval(desc, value, K):
    acc = K.zero
    for c in desc:
        acc = K.add(K.mul(acc, value), c)
    return acc


def _univ_monic(desc, K):
    inv = K.inv(desc[0])
    return [K.mul(c, inv) for c in desc]


def _eval_points(K):
    if K.characteristic == 0:
        yield 0
        k = 1
        while True:
            yield k
            yield -k
            k += 1
    else:
        for k in range(K.characteristic):
            yield k


def _newton_interpolate(xs, ys, K):
    """Ascending coefficient list of the polynomial through (xs, ys)."""
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = K.div(K.sub(coef[i], coef[i - 1]),
                            K.sub(xs[i], xs[i - j]))
    poly = [coef[n - 1]]
    for i in range(n - 2, -1, -1):
        new = [K.zero] * (len(poly) + 1)
        for k, pk in enumerate(poly):
            new[k + 1] = K.add(new[k + 1], pk)
            new[k] = K.sub(new[k], K.mul(pk, xs[i]))
        new[0] = K.add(new[0], coef[i])
        poly = new
    return poly


def _x_slices(terms):
    """{(i, j): c} -> {i: ascending y-coefficient list}."""
    out = {}
    for (i, j), c in terms.items():
        out.setdefault(i, {})[j] = c
    slices = {}
    for i, col in out.items():
        dy = max(col)
        slices[i] = [col.get(k, 0) for k in range(dy + 1)]
    return slices


def _bivariate_content_split(terms, K):
    """Split {(i,j): c} into (x-content as descending y-list, primitive dict)."""
    slices = _x_slices(terms)
    content = []
    for coeffs in slices.values():
        desc = _rstrip(list(reversed(coeffs)), 1)
        content = _rgcd(content, desc, 1, K) if content else desc
        if _rdegree(content) == 0:
            content = [K.one]
            break
    content = _rscalar_reduce(content, 1, K)
    if _rdegree(content) == 0 and content[0] == K.one:
        return content, dict(terms)
    pp = {}
    for i, coeffs in slices.items():
        desc = _rstrip(list(reversed(coeffs)), 1)
        q = _rdivexact(desc, content, 1, K)
        dq = _rdegree(q)
        for j, c in enumerate(q):
            if not _ris_zero(c, 0):
                pp[(i, dq - j)] = c
    return content, pp


def _bivariate_mul_by_univ(terms, univ_desc, K):
    """Multiply a bivariate dict by a univariate polynomial in y."""
    du = _rdegree(univ_desc)
    out = {}
    for (i, j), c in terms.items():
        for k, u in enumerate(univ_desc):
            if _ris_zero(u, 0):
                continue
            key = (i, j + du - k)
            acc = K.mul(c, u)
            if key in out:
                out[key] = K.add(out[key], acc)
                if not out[key]:
                    del out[key]
            else:
                out[key] = acc
    return out


def _dict_divides(h, f, K):
    """Exact bivariate divisibility test through sparse division."""
    if not h:
        return False
    rem = dict(f)
    h_lead = max(h)                      # (i, j) lexicographic
    h_lc = h[h_lead]
    while rem:
        f_lead = max(rem)
        qi = f_lead[0] - h_lead[0]
        qj = f_lead[1] - h_lead[1]
        if qi < 0 or qj < 0:
            return False
        qc = K.div(rem[f_lead], h_lc)
        for (i, j), c in h.items():
            key = (i + qi, j + qj)
            val = K.sub(rem.get(key, K.zero), K.mul(qc, c))
            if val:
                rem[key] = val
            else:
                rem.pop(key, None)
    return True


def _bivariate_pp_gcd(pf, pg, K):
    """GCD of x-primitive bivariate dicts (trivial y-content), as a dict."""
    dxf = max(i for i, _ in pf)
    dxg = max(i for i, _ in pg)
    if dxf == 0 or dxg == 0:
        return {(0, 0): K.one}
    slices_f = _x_slices(pf)
    slices_g = _x_slices(pg)
    lcf = _rstrip(list(reversed(slices_f[dxf])), 1)
    lcg = _rstrip(list(reversed(slices_g[dxg])), 1)
    gamma = _rscalar_reduce(_rgcd(lcf, lcg, 1, K), 1, K)
    dyf = max(j for _, j in pf)
    dyg = max(j for _, j in pg)
    desc_f = [_rstrip(list(reversed(slices_f.get(i, []))), 1)
              for i in range(dxf, -1, -1)]
    desc_g = [_rstrip(list(reversed(slices_g.get(i, []))), 1)
              for i in range(dxg, -1, -1)]
    needed = min(dyf, dyg) + _rdegree(gamma) + 1
    xs, samples = [], []
    best_deg = None
    budget = 8 * needed + 32
    for point in _eval_points(K):
        if budget <= 0:
            break
        budget -= 1
        yv = K.of(point)
        if not _univ_eval(lcf, yv, K) or not _univ_eval(lcg, yv, K):
            continue
        f_ev = _rstrip([_univ_eval(sl, yv, K) for sl in desc_f], 1)
        g_ev = _rstrip([_univ_eval(sl, yv, K) for sl in desc_g], 1)
        u = _rgcd(f_ev, g_ev, 1, K)
        d = _rdegree(u)
        if d == 0:
            return {(0, 0): K.one}
        if best_deg is None or d < best_deg:
            best_deg = d
            xs, samples = [], []
        if d == best_deg:
            scale = _univ_eval(gamma, yv, K)
            xs.append(yv)
            samples.append([K.mul(c, scale) for c in _univ_monic(u, K)])
            if len(samples) >= needed:
                cand = {}
                for i in range(best_deg + 1):
                    vals = [s[best_deg - i] for s in samples]
                    for j, c in enumerate(_newton_interpolate(xs, vals, K)):
                        if c:
                            cand[(i, j)] = c
                if cand:
                    _, cand = _bivariate_content_split(cand, K)
                    if _dict_divides(cand, pf, K) and _dict_divides(cand, pg, K):
                        return cand
                needed += 2
    # unlucky-point exhaustion (tiny fields): fall back to the PRS engine
    rd = _rgcd(_dict_to_rec2(pf, K), _dict_to_rec2(pg, K), 2, K)
    return _rec2_to_dict(rd)


# -- conversions -------------------------------------------------------------


def _dict_to_rec2(terms, K):
    """Bivariate dict {(i, j): c} -> dense K[y][x] (level 2), x leading."""
    if not terms:
        return []
    dx = max(i for i, _ in terms)
    by_x = [dict() for _ in range(dx + 1)]
    for (i, j), c in terms.items():
        by_x[i][j] = c
    out = []
    for i in range(dx, -1, -1):
        col = by_x[i]
        if not col:
            out.append([])
            continue
        dy = max(col)
        out.append([col.get(k, K.zero) for k in range(dy, -1, -1)])
    return out


def _rec2_to_dict(f):
    out = {}
    dx = _rdegree(f)
    for i, coeffs in enumerate(f):
        if not coeffs:
            continue
        dy = _rdegree(coeffs)
        for j, c in enumerate(coeffs):
            if c:
                out[(dx - i, dy - j)] = c
    return out


def form_gcd(f: Form, g: Form) -> Form:
    """Canonical GCD of two homogeneous forms.

    The graded-lex leading coefficient of the result is normalized to 1;
    gcd(f, 0) is the normalization of f.  Raises BothZero when both inputs
    vanish.
    """
    if f.is_zero and g.is_zero:
        raise BothZero("gcd(0, 0) is undefined")
    if f.is_zero:
        return g.monic()
    if g.is_zero:
        return f.monic()
    if f.field != g.field:
        raise ValueError("forms live over different coefficient fields")
    K = f.field
    mins_f = f.min_exponents()
    mins_g = g.min_exponents()
    common = tuple(min(a, b) for a, b in zip(mins_f, mins_g))

    def z_primitive_bivariate(h, mins):
        # strip the monomial content, then drop z; the stripped part is
        # z-primitive, so dehomogenization keeps the total degree
        return {(i - mins[0], j - mins[1]): c
                for (i, j, _k), c in h.terms.items()}

    tf = z_primitive_bivariate(f, mins_f)
    tg = z_primitive_bivariate(g, mins_g)
    cf, pf = _bivariate_content_split(tf, K)
    cg, pg = _bivariate_content_split(tg, K)
    c_univ = _rscalar_reduce(_rgcd(cf, cg, 1, K), 1, K)
    hpp = _bivariate_pp_gcd(pf, pg, K)
    d_terms = _bivariate_mul_by_univ(hpp, c_univ, K)
    total = max((i + j for (i, j) in d_terms), default=0)
    out = {}
    for (i, j), c in d_terms.items():
        out[(i + common[0], j + common[1], total - i - j + common[2])] = c
    return Form(K, out).monic()


def binary_gcd(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Canonical GCD of two binary forms (normalized leading coefficient)."""
    if f.is_zero and g.is_zero:
        raise BothZero("gcd(0, 0) is undefined")
    if f.is_zero:
        return g.monic()
    if g.is_zero:
        return f.monic()
    if f.field != g.field:
        raise ValueError("forms live over different coefficient fields")
    K = f.field
    cf, mf = f.dehomogenize()
    cg, mg = g.dehomogenize()
    m_common = min(mf, mg)
    rf = _rstrip(list(reversed(cf)), 1)
    rg = _rstrip(list(reversed(cg)), 1)
    rd = _rgcd(rf, rg, 1, K)
    asc = list(reversed(rd))
    deg = len(asc) - 1
    out = {}
    for i, c in enumerate(asc):
        if c:
            out[(i, deg - i + m_common)] = c
    return BinaryForm(K, out).monic()


def binary_is_squarefree(f: BinaryForm) -> bool:
    """True when the binary form has no repeated projective root."""
    if f.is_zero:
        return False
    if f.degree == 0:
        return True
    K = f.field
    if 0 < K.characteristic <= f.degree:
        raise CharacteristicTooSmall(
            f"characteristic {K.characteristic} is too small for a "
            f"derivative test on degree {f.degree}")
    coeffs, mult_inf = f.dehomogenize()
    if mult_inf > 1:
        return False
    rf = _rstrip(list(reversed(coeffs)), 1)
    if _rdegree(rf) == 0:
        return True
    d = _rdegree(rf)
    deriv = _rstrip([K.mul(c, K.of(d - i)) for i, c in enumerate(rf[:-1])], 1)
    g = _rgcd(rf, deriv, 1, K)
    return _rdegree(g) == 0


def remove_factor(f: Form, divisor: Form) -> Form:
    """Divide out every factor f shares with the divisor (for locus
    comparisons 'away from' an excluded divisor)."""
    if f.is_zero or divisor.is_zero or divisor.is_constant:
        return f
    out = f
    while True:
        g = form_gcd(out, divisor)
        if g.is_constant:
            return out
        out = exact_div(out, g)
