"""Sparse exact homogeneous polynomials in the plane coordinates x, y, z.

``Form`` is the universal carrier for every section in the library; a
``BinaryForm`` in the line parameters l, m is what restriction to a line
produces.  All values are immutable after construction and every operation is
a pure function, so everything here is safe to share across threads.

Monomials are ordered graded-lexicographically with x > y > z (for
homogeneous forms of one degree this is plain tuple comparison on the
exponent vectors).  The canonical normalization used throughout makes the
graded-lex leading coefficient 1.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .errors import DegreeMismatch, NotDivisible
from .fields import QQ


class _GradedPoly:
    """Shared arithmetic for sparse homogeneous polynomials.

    ``terms`` maps exponent tuples (one entry per variable) to nonzero
    scalars; the zero polynomial has no terms and degree ``None``.
    """

    NVARS: int = 0
    VAR_NAMES: tuple[str, ...] = ()

    __slots__ = ("field", "terms", "degree", "_hash")

    def __init__(self, field, terms):
        clean = {}
        degree = None
        for exp, coeff in terms.items():
            if not coeff:
                continue
            if len(exp) != self.NVARS or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent tuple {exp}")
            d = sum(exp)
            if degree is None:
                degree = d
            elif d != degree:
                raise ValueError(
                    f"terms of degree {degree} and {d} cannot share a form")
            clean[tuple(exp)] = coeff
        self.field = field
        self.terms = clean
        self.degree = degree
        self._hash = None

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, field):
        return cls(field, {})

    @classmethod
    def constant(cls, field, value):
        v = field.of(value)
        if not v:
            return cls(field, {})
        return cls(field, {(0,) * cls.NVARS: v})

    @classmethod
    def variable(cls, field, name):
        idx = cls.VAR_NAMES.index(name)
        exp = [0] * cls.NVARS
        exp[idx] = 1
        return cls(field, {tuple(exp): field.one})

    @classmethod
    def variables(cls, field):
        return tuple(cls.variable(field, n) for n in cls.VAR_NAMES)

    @classmethod
    def monomial(cls, field, exp, coeff=1):
        return cls(field, {tuple(exp): field.of(coeff)})

    # -- predicates ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return self.degree is None or self.degree == 0

    def __bool__(self):
        return bool(self.terms)

    # -- ring operations -------------------------------------------------

    def _check_partner(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with "
                            f"{type(other).__name__}")
        if other.field != self.field:
            raise ValueError("forms live over different coefficient fields")

    def __add__(self, other):
        self._check_partner(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.degree != other.degree:
            raise DegreeMismatch(
                f"cannot add forms of degree {self.degree} and {other.degree}")
        K = self.field
        out = dict(self.terms)
        for exp, c in other.terms.items():
            out[exp] = K.add(out.get(exp, K.zero), c)
        return type(self)(K, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        K = self.field
        return type(self)(K, {e: K.neg(c) for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check_partner(other)
        if self.is_zero or other.is_zero:
            return type(self).zero(self.field)
        K = self.field
        out = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                exp = tuple(i + j for i, j in zip(ea, eb))
                prod = K.mul(ca, cb)
                if exp in out:
                    out[exp] = K.add(out[exp], prod)
                else:
                    out[exp] = prod
        return type(self)(K, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, scalar):
        K = self.field
        s = K.of(scalar)
        if not s:
            return type(self).zero(K)
        return type(self)(K, {e: K.mul(c, s) for e, c in self.terms.items()})

    def __truediv__(self, scalar):
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return self.scale(Fraction(1, 1) / Fraction(scalar)
                          if self.field.characteristic == 0
                          else self.field.inv(self.field.of(scalar)))

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = type(self).constant(self.field, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- structure -------------------------------------------------------

    def leading_term(self):
        """(exponent, coefficient) of the graded-lex leading monomial."""
        if self.is_zero:
            raise ValueError("zero form has no leading term")
        exp = max(self.terms)
        return exp, self.terms[exp]

    @property
    def leading_coefficient(self):
        return self.leading_term()[1]

    def monic(self):
        """Scale so the graded-lex leading coefficient is 1."""
        if self.is_zero:
            return self
        K = self.field
        inv = K.inv(self.leading_coefficient)
        return type(self)(K, {e: K.mul(c, inv) for e, c in self.terms.items()})

    def coefficient(self, exp):
        return self.terms.get(tuple(exp), self.field.zero)

    def derivative(self, var):
        """Partial derivative with respect to a variable name or index."""
        idx = var if isinstance(var, int) else self.VAR_NAMES.index(var)
        K = self.field
        out = {}
        for exp, c in self.terms.items():
            k = exp[idx]
            if k == 0:
                continue
            new = list(exp)
            new[idx] = k - 1
            coeff = K.mul(c, K.of(k))
            if coeff:
                out[tuple(new)] = coeff
        return type(self)(K, out)

    def evaluate(self, point):
        """Exact value at a tuple of scalars."""
        if len(point) != self.NVARS:
            raise ValueError(f"need {self.NVARS} coordinates")
        K = self.field
        pt = [K.of(v) for v in point]
        total = K.zero
        for exp, c in self.terms.items():
            val = c
            for v, e in zip(pt, exp):
                for _ in range(e):
                    val = K.mul(val, v)
            total = K.add(total, val)
        return total

    def min_exponents(self):
        """Componentwise minimum exponent vector (the monomial content)."""
        if self.is_zero:
            raise ValueError("zero form")
        mins = [min(exp[i] for exp in self.terms) for i in range(self.NVARS)]
        return tuple(mins)

    # -- comparison ------------------------------------------------------

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.field == other.field and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, self.field,
                               frozenset(self.terms.items())))
        return self._hash

    def sort_key(self):
        """Deterministic ordering key (degree, then sorted terms)."""
        items = tuple(sorted(self.terms.items()))
        return (self.degree if self.degree is not None else -1, items)

    # -- printing ----------------------------------------------------------

    def __str__(self):
        if self.is_zero:
            return "0"
        K = self.field
        pieces = []
        for exp in sorted(self.terms, reverse=True):
            coeff = self.terms[exp]
            factors = []
            for name, e in zip(self.VAR_NAMES, exp):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors)
            cs = K.format(coeff)
            negative = cs.startswith("-")
            mag = cs[1:] if negative else cs
            if body and mag == "1":
                text = body
            elif body:
                text = f"{mag}*{body}"
            else:
                text = mag
            if not pieces:
                pieces.append(f"-{text}" if negative else text)
            else:
                pieces.append(f"- {text}" if negative else f"+ {text}")
        return " ".join(pieces)

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r}, field={self.field!r})"


class Form(_GradedPoly):
    """Homogeneous polynomial in the plane coordinates x, y, z."""

    NVARS = 3
    VAR_NAMES = ("x", "y", "z")

    def restrict_to_line(self, line: "LineP2") -> "BinaryForm":
        """Substitute the line parametrization l*P + m*Q.

        The result is homogeneous of the same degree, or zero when the form
        vanishes identically on the line.
        """
        K = self.field
        if line.field != K:
            raise ValueError("line and form live over different fields")
        if self.is_zero:
            return BinaryForm.zero(K)
        images = []
        for i in range(3):
            images.append(BinaryForm(K, {(1, 0): line.point_p[i],
                                         (0, 1): line.point_q[i]}))
        power_cache = [{0: BinaryForm.constant(K, 1)} for _ in range(3)]

        def img_power(i, e):
            cache = power_cache[i]
            if e not in cache:
                cache[e] = img_power(i, e - 1) * images[i]
            return cache[e]

        total = BinaryForm.zero(K)
        for exp, coeff in self.terms.items():
            term = BinaryForm.constant(K, 1).scale(coeff)
            for i, e in enumerate(exp):
                if e:
                    term = term * img_power(i, e)
            total = term if total.is_zero else (
                total + term if not term.is_zero else total)
        return total


class BinaryForm(_GradedPoly):
    """Homogeneous polynomial in the line parameters l, m."""

    NVARS = 2
    VAR_NAMES = ("l", "m")

    def dehomogenize(self):
        """Coefficient list [c_0, ..., c_d] of the polynomial in T = l at m = 1,
        together with the multiplicity of m (the root at l : m = 1 : 0)."""
        if self.is_zero:
            return [], 0
        d = self.degree
        mult_at_infinity = min(exp[1] for exp in self.terms)
        coeffs = [self.field.zero] * (d - mult_at_infinity + 1)
        for (i, j), c in self.terms.items():
            coeffs[i] = c
        return coeffs, mult_at_infinity


class LineP2:
    """A line in the projective plane: coefficients up to scale plus a fixed
    parametrization by two independent points."""

    __slots__ = ("field", "coefficients", "point_p", "point_q")

    def __init__(self, field, coefficients, point_p, point_q):
        K = field
        u = tuple(K.of(c) for c in coefficients)
        if not any(u):
            raise ValueError("line coefficients must be a nonzero triple")
        p = tuple(K.of(c) for c in point_p)
        q = tuple(K.of(c) for c in point_q)
        if any(_dot(K, u, pt) for pt in (p, q)):
            raise ValueError("parametrization points must lie on the line")
        if not any(_cross(K, p, q)):
            raise ValueError("parametrization points must be independent")
        self.field = K
        self.coefficients = _scale_first_nonzero(K, u)
        self.point_p = p
        self.point_q = q

    @classmethod
    def from_coefficients(cls, field, coefficients):
        """Build a line u1*x + u2*y + u3*z = 0 with a canonical parametrization."""
        K = field
        u = tuple(K.of(c) for c in coefficients)
        if not any(u):
            raise ValueError("line coefficients must be a nonzero triple")
        i = next(k for k in range(3) if u[k])
        points = []
        for j in range(3):
            if j == i:
                continue
            v = [K.zero, K.zero, K.zero]
            v[j] = u[i]
            v[i] = K.neg(u[j])
            points.append(tuple(v))
        return cls(field, u, points[0], points[1])

    @classmethod
    def through_points(cls, field, p, q):
        """The unique line through two independent points."""
        K = field
        pp = tuple(K.of(c) for c in p)
        qq = tuple(K.of(c) for c in q)
        u = _cross(K, pp, qq)
        if not any(u):
            raise ValueError("points are proportional; no unique line")
        return cls(field, u, pp, qq)

    def __eq__(self, other):
        return (isinstance(other, LineP2) and other.field == self.field
                and other.coefficients == self.coefficients)

    def __hash__(self):
        return hash((self.field, self.coefficients))

    def __repr__(self):
        u = ", ".join(self.field.format(c) for c in self.coefficients)
        return f"LineP2({u})"


def _dot(K, u, v):
    total = K.zero
    for a, b in zip(u, v):
        total = K.add(total, K.mul(a, b))
    return total


def _cross(K, p, q):
    return (K.sub(K.mul(p[1], q[2]), K.mul(p[2], q[1])),
            K.sub(K.mul(p[2], q[0]), K.mul(p[0], q[2])),
            K.sub(K.mul(p[0], q[1]), K.mul(p[1], q[0])))


def _scale_first_nonzero(K, u):
    lead = next(c for c in u if c)
    inv = K.inv(lead)
    return tuple(K.mul(c, inv) for c in u)


def exact_div(f: _GradedPoly, g: _GradedPoly):
    """Exact quotient q with q*g = f; raises NotDivisible otherwise."""
    if type(f) is not type(g):
        raise TypeError("mixed polynomial types in exact_div")
    if g.is_zero:
        raise ZeroDivisionError("division by the zero form")
    if f.is_zero:
        return type(f).zero(f.field)
    if f.degree < g.degree:
        raise NotDivisible(f"degree {f.degree} form is not divisible by "
                           f"degree {g.degree} form")
    K = f.field
    g_exp, g_lc = g.leading_term()
    rem = dict(f.terms)
    quot = {}
    while rem:
        f_exp = max(rem)
        q_exp = tuple(a - b for a, b in zip(f_exp, g_exp))
        if any(e < 0 for e in q_exp):
            raise NotDivisible("no exact quotient exists")
        q_c = K.div(rem[f_exp], g_lc)
        quot[q_exp] = q_c
        for e, c in g.terms.items():
            target = tuple(a + b for a, b in zip(q_exp, e))
            val = K.sub(rem.get(target, K.zero), K.mul(q_c, c))
            if val:
                rem[target] = val
            else:
                rem.pop(target, None)
    return type(f)(K, quot)


def monomials_of_degree(nvars: int, degree: int):
    """All exponent tuples of the given total degree, graded-lex descending."""
    if nvars == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(nvars - 1, degree - first):
            yield (first,) + rest


def random_form(field, degree: int, seed: int, coefficient_bound: int = 9) -> Form:
    """Deterministic pseudo-random nonzero homogeneous form.

    Coefficients are drawn uniformly from [-coefficient_bound,
    coefficient_bound]; the draw repeats with the same stream until the
    result is nonzero, so a fixed seed always gives the same form.
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    if coefficient_bound < 1:
        raise ValueError("coefficient bound must be positive")
    rng = random.Random(seed)
    exps = list(monomials_of_degree(3, degree))
    while True:
        terms = {}
        for exp in exps:
            c = field.of(rng.randint(-coefficient_bound, coefficient_bound))
            if c:
                terms[exp] = c
        if terms:
            return Form(field, terms)


def random_line(field, seed: int, coefficient_bound: int = 9) -> LineP2:
    """Deterministic pseudo-random line (nonzero coefficient triple)."""
    rng = random.Random(seed)
    while True:
        u = tuple(rng.randint(-coefficient_bound, coefficient_bound)
                  for _ in range(3))
        if any(field.of(c) for c in u):
            return LineP2.from_coefficients(field, u)


def line_stream(field, seed: int, coefficient_bound: int = 9):
    """Infinite deterministic stream of sample lines from one seed."""
    rng = random.Random(seed)
    while True:
        u = tuple(rng.randint(-coefficient_bound, coefficient_bound)
                  for _ in range(3))
        if any(field.of(c) for c in u):
            yield LineP2.from_coefficients(field, u)
