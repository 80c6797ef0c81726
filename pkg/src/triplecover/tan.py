"""Cover data in minimal-cubic shape: z^3 + s*z + t = 0.

A minimal equation admits a unique per-prime decomposition

    s = a1 * a2^2 * b1 * a0,      t = a1 * a2^2 * b1^2 * b0

with a1, a2, b1 square-free, (a1, a2) = 1 and every a-factor coprime to
every b-factor.  From it the abc data a = 4*a1*a2^2*a0^3, b = 27*b1*b0^2,
c = a + b = c1*c0^2 determines the full ramification picture: writing
capital letters for the divisors of the corresponding sections, the cover is
totally ramified over A1 + A2, simply ramified over B1 + C1, and the branch
divisor is 2*A1 + 2*A2 + B1 + C1.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .errors import (CharacteristicTooSmall, Degenerate, DegreeMismatch,
                     NoAssignment, NotMinimal)
from .factored import FactoredForm
from .forms import Form, exact_div
from .polygcd import form_gcd
from .squarefree import squarefree_split


class OddSimplePartWarning(UserWarning):
    """The simple-ramification part has odd degree, which cannot happen for
    geometric cover data."""


@dataclass(frozen=True)
class MinimalCubic:
    """Validated minimal cubic data: s of degree 2m, t of degree 3m."""

    m: int
    s: FactoredForm
    t: FactoredForm

    @property
    def field(self):
        return self.s.field


def new_minimal_cubic(s: FactoredForm, t: FactoredForm, m: int) -> MinimalCubic:
    """Validate degrees, nondegeneracy and minimality.

    Minimality means no prime p has ord_p(s) >= 2 and ord_p(t) >= 3 at once
    (such a p could be substituted out of the equation).
    """
    if s.is_zero or t.is_zero:
        raise Degenerate("s = 0 or t = 0: the cover is degenerate or cyclic")
    if m < 1:
        raise Degenerate(f"twist m must be a positive integer, got {m}")
    if s.degree != 2 * m:
        raise DegreeMismatch(f"s must have degree {2 * m}, got {s.degree}")
    if t.degree != 3 * m:
        raise DegreeMismatch(f"t must have degree {3 * m}, got {t.degree}")
    for base, sigma in s.factors:
        tau = t.multiplicity(base)
        if sigma >= 2 and tau >= 3:
            raise NotMinimal(
                f"base ({base}) divides s twice and t three times; "
                f"substituting it out would reduce the equation")
    return MinimalCubic(m=m, s=s, t=t)


def prime_pattern_assign(sigma: int, tau: int) -> tuple[int, int, int, int, int]:
    """Exponent pattern (e_a1, e_a2, e_b1, e_a0, e_b0) for one prime.

    The pattern is the unique solution of

        sigma = e_a1 + 2*e_a2 + e_b1 + e_a0
        tau   = e_a1 + 2*e_a2 + 2*e_b1 + e_b0

    subject to e_a1, e_a2, e_b1 in {0, 1}, e_a1*e_a2 = 0 and the a-side and
    b-side never both positive (uniqueness is exhaustively verified in the
    test suite).
    """
    if sigma < 0 or tau < 0:
        raise NoAssignment("multiplicities must be nonnegative")
    if (sigma, tau) == (0, 0):
        raise NoAssignment("prime divides neither s nor t")
    if sigma >= 2 and tau >= 3:
        raise NotMinimal(f"pattern ({sigma}, {tau}) violates minimality")
    if tau == 0:
        return (0, 0, 0, sigma, 0)
    if sigma == 0:
        return (0, 0, 0, 0, tau)
    if tau == 1:
        return (1, 0, 0, sigma - 1, 0)
    if tau == 2:
        if sigma == 1:
            return (0, 0, 1, 0, 0)
        return (0, 1, 0, sigma - 2, 0)
    # tau >= 3 forces sigma == 1 here
    return (0, 0, 1, 0, tau - 2)


@dataclass(frozen=True)
class TanData:
    """The five decomposition factors, with reconstruction units folded into
    a0 (for s) and b0 (for t) so that the products are exact."""

    a0: FactoredForm
    a1: FactoredForm
    a2: FactoredForm
    b0: FactoredForm
    b1: FactoredForm

    @property
    def field(self):
        return self.a0.field

    def s(self) -> FactoredForm:
        return self.a1 * self.a2 ** 2 * self.b1 * self.a0

    def t(self) -> FactoredForm:
        return self.a1 * self.a2 ** 2 * self.b1 ** 2 * self.b0


def tan_decomposition(mc: MinimalCubic) -> TanData:
    """Apply the per-prime pattern to every base of s and t.

    Bases are matched between s and t up to scalar (both carry monic bases
    after construction).  The units of s and t go to a0 and b0 respectively,
    which makes the reconstruction identities exact, not just up to unit.
    """
    K = mc.field
    bases: list[Form] = [b for b, _ in mc.s.factors]
    for b, _ in mc.t.factors:
        if mc.s.multiplicity(b) == 0:
            bases.append(b)
    groups: dict[str, list] = {"a1": [], "a2": [], "b1": [], "a0": [], "b0": []}
    names = ("a1", "a2", "b1", "a0", "b0")
    for base in bases:
        sigma = mc.s.multiplicity(base)
        tau = mc.t.multiplicity(base)
        pattern = prime_pattern_assign(sigma, tau)
        for name, e in zip(names, pattern):
            if e:
                groups[name].append((base, e))
    irr = mc.s.bases_irreducible and mc.t.bases_irreducible
    make = lambda name, unit: FactoredForm(K, unit, groups[name], irr)
    return TanData(
        a1=make("a1", 1),
        a2=make("a2", 1),
        b1=make("b1", 1),
        a0=make("a0", mc.s.unit),
        b0=make("b0", mc.t.unit),
    )


@dataclass(frozen=True)
class AbcData:
    """Expanded abc data with the square-free split of c and the adjoint
    sections g1 = (2/3)*a0*a2, g2 = b0, g3 = c0."""

    a: Form
    b: Form
    c: Form
    c0: Form
    c1: Form
    g1: Form
    g2: Form
    g3: Form


def abc_data(td: TanData) -> AbcData:
    """a = 4*a1*a2^2*a0^3, b = 27*b1*b0^2, c = a + b = unit*c1*c0^2.

    Requires characteristic 0 or > 3 (the formulas divide by 2 and 3); the
    gcd cross-check a = 4*s^3/gcd(s^3, t^2) is exercised in the tests.
    """
    K = td.field
    if K.characteristic in (2, 3):
        raise CharacteristicTooSmall("abc data needs characteristic not 2, 3")
    a = (td.a1 * td.a2 ** 2 * td.a0 ** 3).scale(4).expand()
    b = (td.b1 * td.b0 ** 2).scale(27).expand()
    c = a + b
    if c.is_zero:
        # 4*s^3 = -27*t^2 exactly; treat the split as trivial
        c1 = Form.zero(K)
        c0 = Form.constant(K, 1)
    else:
        c1, c0 = squarefree_split(c)
        # keep c = c1 * c0^2 exact: c0 stays monic, c1 absorbs the unit
        unit = exact_div(c, c1 * c0 ** 2)
        c1 = c1.scale(unit.coefficient((0, 0, 0)))
    g1 = td.a0.expand() * td.a2.expand() * Form.constant(K, K.div(K.of(2), K.of(3)))
    return AbcData(a=a, b=b, c=c, c0=c0, c1=c1, g1=g1,
                   g2=td.b0.expand(), g3=c0)


def abc_from_gcd(mc: MinimalCubic) -> tuple[Form, Form, Form]:
    """Independent route to (a, b, c) through gcd(s^3, t^2)."""
    s = mc.s.expand()
    t = mc.t.expand()
    s3 = s ** 3
    t2 = t ** 2
    g = form_gcd(s3, t2)
    a = exact_div(s3, g).scale(4)
    b = exact_div(t2, g).scale(27)
    return a, b, a + b


@dataclass(frozen=True)
class RamificationReport:
    """Divisors of the cover, as factored forms of the defining sections.

    S (index-2 ramification) is B1 + C1; T (index-3) is A1 + A2; the branch
    divisor S + 2*T has degree deg S + 2*deg T.
    """

    A0: FactoredForm
    A1: FactoredForm
    A2: FactoredForm
    B0: FactoredForm
    B1: FactoredForm
    C0: FactoredForm
    C1: FactoredForm
    totally_ramified: FactoredForm          # A1 + A2
    simple: FactoredForm                    # B1 + C1
    branch_locus: FactoredForm              # 2*A1 + 2*A2 + B1 + C1
    non_normal_image: FactoredForm          # A2 + B1 + C0
    S: FactoredForm
    T: FactoredForm
    barD_degree: int

    @property
    def simple_degree(self) -> int:
        return self.S.degree or 0

    @property
    def total_degree_part(self) -> int:
        return self.T.degree or 0


def _divisor_degree(ff: FactoredForm) -> int:
    return ff.degree or 0


def ramification_report(td: TanData, abc: AbcData) -> RamificationReport:
    """Assemble the divisor bookkeeping from the decomposition and abc data."""
    K = td.field
    div_c0 = FactoredForm.from_form_power(abc.c0, 1, bases_irreducible=False) \
        if not abc.c0.is_constant else FactoredForm.one(K)
    div_c1 = FactoredForm.from_form_power(abc.c1, 1, bases_irreducible=False) \
        if not abc.c1.is_constant else FactoredForm.one(K)
    norm = lambda ff: FactoredForm(K, 1, ff.factors, ff.bases_irreducible)
    A0, A1, A2 = norm(td.a0), norm(td.a1), norm(td.a2)
    B0, B1 = norm(td.b0), norm(td.b1)
    T = A1 * A2
    S = B1 * div_c1
    report = RamificationReport(
        A0=A0, A1=A1, A2=A2, B0=B0, B1=B1, C0=div_c0, C1=div_c1,
        totally_ramified=T,
        simple=S,
        branch_locus=A1 ** 2 * A2 ** 2 * B1 * div_c1,
        non_normal_image=A2 * B1 * div_c0,
        S=S, T=T,
        barD_degree=_divisor_degree(S) + 2 * _divisor_degree(T),
    )
    return report


def branch_divisor_degree(report: RamificationReport) -> int:
    """deg S + 2*deg T; warns when deg S is odd (non-geometric input)."""
    deg_s = _divisor_degree(report.S)
    if deg_s % 2:
        warnings.warn(
            f"simple-ramification part has odd degree {deg_s}; geometric "
            f"cover data always has an even one", OddSimplePartWarning,
            stacklevel=2)
    return report.barD_degree
