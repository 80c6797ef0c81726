"""Transformations from minimal-cubic data to split-style cover data on the
two standard charts, with exact discriminant compatibility checks.

Chart U1 is the complement of C0, chart U2 the complement of A0 + A2.  On
U1 the cover keeps its depressed cubic: the basis is {z, w} with
w = (z^2 + (2/3)s)/(a2*b1), giving

    a~ = 0,  b~ = a2*b1,  c~ = -a1*b0,  d~ = a0*a1*a2/3.

On U2 the working basis is {z, w2} with

    w2 = (z^2 - (3*b0*b1/(2*a0))*z + (2/3)s) / (b1*c0),

whose multiplication data is

    a~ = 3*b0*b1/(2*a0),  b~ = b1*c0,
    c~ = b0*c1/(8*a0^3),  d~ = c0*c1/(12*a0^2).

Both quadruples reproduce the intrinsic branch divisor: with e, f, g formed
the usual way, 27*(f^2 - 4*e*g)*W^2 = 4*s^3 + 27*t^2 holds identically with
W = a2*b1 on U1 and W = b1*c0 on U2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import CharacteristicTooSmall
from .factored import FactoredForm
from .forms import Form, exact_div
from .polygcd import form_gcd, remove_factor
from .squarefree import radical
from .tan import AbcData, TanData, abc_data


class RationalSection:
    """A section written as numerator / denominator of forms.

    Normalization (gcd cancellation, monic denominator) is lazy: chart
    formulas divide by powers of a0 and premature expansion is wasteful.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Form, den: Form):
        if den.is_zero:
            raise ZeroDivisionError("rational section with zero denominator")
        if num.field != den.field:
            raise ValueError("mixed coefficient fields")
        self.num = num
        self.den = den

    @classmethod
    def of_form(cls, f: Form):
        return cls(f, Form.constant(f.field, 1))

    @property
    def field(self):
        return self.num.field

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def degree(self) -> Optional[int]:
        """Degree as a rational section (numerator minus denominator)."""
        if self.num.is_zero:
            return None
        return self.num.degree - self.den.degree

    def __add__(self, other):
        if not isinstance(other, RationalSection):
            return NotImplemented
        return RationalSection(self.num * other.den + other.num * self.den,
                               self.den * other.den)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return RationalSection(-self.num, self.den)

    def __mul__(self, other):
        if isinstance(other, RationalSection):
            return RationalSection(self.num * other.num, self.den * other.den)
        if isinstance(other, Form):
            return RationalSection(self.num * other, self.den)
        return NotImplemented

    def scale(self, scalar):
        return RationalSection(self.num.scale(scalar), self.den)

    def normalized(self) -> "RationalSection":
        """Cancel the gcd and make the denominator monic."""
        if self.num.is_zero:
            return RationalSection(self.num, Form.constant(self.field, 1))
        g = form_gcd(self.num, self.den)
        num, den = self.num, self.den
        if not g.is_constant:
            num = exact_div(num, g)
            den = exact_div(den, g)
        lead = den.leading_coefficient
        K = self.field
        inv = K.inv(lead)
        return RationalSection(num.scale(inv), den.scale(inv))

    def equals(self, other: "RationalSection") -> bool:
        return (self.num * other.den) == (other.num * self.den)

    def __repr__(self):
        return f"({self.num}) / ({self.den})"


@dataclass(frozen=True)
class ChartMirandaData:
    """Split-style cover data valid on one chart.

    Denominators are constants on U1 and powers of a0 (times constants) on
    U2, so they vanish only inside the chart's excluded divisor.
    """

    chart: str                      # "U1" or "U2"
    a: RationalSection
    b: RationalSection
    c: RationalSection
    d: RationalSection
    excluded: Form                  # c0 on U1, a0*a2 on U2

    def derived_efg(self):
        # normalize each combination: denominators are powers of a0 and would
        # otherwise multiply up across the subtractions
        a, b, c, d = self.a, self.b, self.c, self.d
        e = (a * a - b * d).normalized()
        f = (a * d - b * c).normalized()
        g = (d * d - a * c).normalized()
        return (e, f, g)

    def discriminant(self) -> RationalSection:
        e, f, g = self.derived_efg()
        return (f * f - (e * g).scale(4)).normalized()


def to_miranda_u1(td: TanData, abc: Optional[AbcData] = None) -> ChartMirandaData:
    """Chart data away from C0: a~ = 0, b~ = a2*b1, c~ = -a1*b0,
    d~ = a0*a1*a2/3."""
    K = td.field
    if K.characteristic == 3:
        raise CharacteristicTooSmall("chart data divides by 3")
    if abc is None:
        abc = abc_data(td)
    third = K.div(K.one, K.of(3))
    a = RationalSection.of_form(Form.zero(K))
    b = RationalSection.of_form((td.a2 * td.b1).expand())
    c = RationalSection.of_form(-(td.a1 * td.b0).expand())
    d = RationalSection.of_form((td.a0 * td.a1 * td.a2).expand().scale(third))
    return ChartMirandaData(chart="U1", a=a, b=b, c=c, d=d, excluded=abc.c0)


def to_miranda_u2(td: TanData, abc: Optional[AbcData] = None) -> ChartMirandaData:
    """Chart data away from A0 + A2: a~ = 3*b0*b1/(2*a0), b~ = b1*c0,
    c~ = b0*c1/(8*a0^3), d~ = c0*c1/(12*a0^2)."""
    K = td.field
    if K.characteristic in (2, 3):
        raise CharacteristicTooSmall("chart data divides by 2 and 3")
    if abc is None:
        abc = abc_data(td)
    a0 = td.a0.expand()
    half3 = K.div(K.of(3), K.of(2))
    eighth = K.div(K.one, K.of(8))
    twelfth = K.div(K.one, K.of(12))
    a = RationalSection((td.b0 * td.b1).expand().scale(half3), a0)
    b = RationalSection.of_form((td.b1.expand() * abc.c0))
    c = RationalSection((td.b0.expand() * abc.c1).scale(eighth), a0 ** 3)
    d = RationalSection((abc.c0 * abc.c1).scale(twelfth), a0 ** 2)
    excluded = (td.a0 * td.a2).expand()
    return ChartMirandaData(chart="U2", a=a, b=b, c=c, d=d, excluded=excluded)


@dataclass(frozen=True)
class IdentityWitness:
    """Outcome of an exact discriminant identity check."""

    holds: bool
    lhs: Form                       # 4*s^3 + 27*t^2
    rhs_numerator: Form             # 27*(f^2-4eg)*W^2, over rhs_denominator
    rhs_denominator: Form
    square_factor: Form             # the W used
    mismatch: Form                  # lhs*den - num, zero iff the identity holds


def _four_s3_plus_27_t2(td: TanData) -> Form:
    s = td.s().expand()
    t = td.t().expand()
    return (s ** 3).scale(4) + (t ** 2).scale(27)


def _discriminant_identity(td: TanData, chart: ChartMirandaData,
                           square_factor: Form) -> IdentityWitness:
    lhs = _four_s3_plus_27_t2(td)
    D = chart.discriminant()
    rhs = (D * (square_factor * square_factor)).scale(27)
    mismatch = lhs * rhs.den - rhs.num
    return IdentityWitness(holds=mismatch.is_zero, lhs=lhs,
                           rhs_numerator=rhs.num, rhs_denominator=rhs.den,
                           square_factor=square_factor, mismatch=mismatch)


def verify_u1_discriminant_identity(
        td: TanData, chart: Optional[ChartMirandaData] = None) -> IdentityWitness:
    """Check 4*s^3 + 27*t^2 = 27*(f^2 - 4*e*g)*(a2*b1)^2 exactly."""
    if chart is None:
        chart = to_miranda_u1(td)
    w = (td.a2 * td.b1).expand()
    return _discriminant_identity(td, chart, w)


#: Square factor of the U2 identity, as exponents of (a0, a1, a2, b0, b1, c0, c1).
U2_SQUARE_FACTOR_EXPONENTS = {"b1": 1, "c0": 1}


def verify_u2_discriminant_identity(
        td: TanData, chart: Optional[ChartMirandaData] = None,
        abc: Optional[AbcData] = None) -> IdentityWitness:
    """Check 4*s^3 + 27*t^2 = 27*(f^2 - 4*e*g)*(b1*c0)^2 exactly.

    The square factor b1*c0 is pinned from a one-time symbolic derivation of
    the U2 basis change (its determinant against the U1 basis is
    a2/c0 * (a2*b1)^-1-worth of twisting, leaving b1*c0 as the square)."""
    if abc is None:
        abc = abc_data(td)
    if chart is None:
        chart = to_miranda_u2(td, abc)
    w = td.b1.expand() * abc.c0
    return _discriminant_identity(td, chart, w)


@dataclass(frozen=True)
class ChartCompatibilityReport:
    """Reduced chart discriminants against the branch locus, away from each
    chart's excluded divisor."""

    u1_reduced: Form
    u2_reduced: Form
    branch_reduced: Form
    u1_matches: bool
    u2_matches: bool

    @property
    def compatible(self) -> bool:
        return self.u1_matches and self.u2_matches


def chart_compatibility(td: TanData) -> ChartCompatibilityReport:
    """Compare the reduced zero loci of both chart discriminants with the
    reduced branch locus (divisibility tests on expanded forms).

    Factors supported on a chart's excluded divisor are removed from both
    sides before comparing.
    """
    abc = abc_data(td)
    u1 = to_miranda_u1(td, abc)
    u2 = to_miranda_u2(td, abc)

    branch = (td.a1 * td.a2 * td.b1).expand() * abc.c1
    branch_red = radical(branch) if not branch.is_constant \
        else Form.constant(td.field, 1)

    def reduced_discriminant(chart: ChartMirandaData) -> Form:
        D = chart.discriminant().normalized()
        if D.is_zero:
            return Form.zero(td.field)
        return radical(D.num) if not D.num.is_constant \
            else Form.constant(td.field, 1)

    def strip(f: Form, excluded: Form) -> Form:
        if excluded.is_constant:
            return f
        return remove_factor(f, radical(excluded))

    u1_red = reduced_discriminant(u1)
    u2_red = reduced_discriminant(u2)
    u1_expect = strip(branch_red, u1.excluded).monic() \
        if not branch_red.is_constant else branch_red
    u2_expect = strip(branch_red, u2.excluded)
    u1_have = strip(u1_red, u1.excluded) if not u1_red.is_zero else u1_red
    u2_have = strip(u2_red, u2.excluded) if not u2_red.is_zero else u2_red

    def matches(have: Form, want: Form) -> bool:
        if have.is_zero:
            return want.is_constant
        return have.monic() == want.monic() if not (have.is_constant and
                                                    want.is_constant) \
            else True

    return ChartCompatibilityReport(
        u1_reduced=u1_red, u2_reduced=u2_red, branch_reduced=branch_red,
        u1_matches=matches(u1_have, u1_expect),
        u2_matches=matches(u2_have, u2_expect),
    )
