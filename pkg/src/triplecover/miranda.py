"""Triple-cover data for split trace-free bundles O(t1) + O(t2).

A cover is encoded by four sections (a, b, c, d) of prescribed degrees; the
algebra multiplication on the basis {1, z, w} is determined by the derived
sections e = a^2 - b*d, f = a*d - b*c, g = d^2 - a*c, and the branch divisor
is cut out by the discriminant f^2 - 4*e*g.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadTwists, DegreeMismatch, NotIntegral
from .forms import BinaryForm, Form, LineP2


@dataclass(frozen=True)
class MirandaData:
    """Validated split-bundle cover data, canonicalized so t1 >= t2.

    Construct through :func:`new_miranda_data`.
    """

    t1: int
    t2: int
    a: Form
    b: Form
    c: Form
    d: Form

    @property
    def field(self):
        return self.b.field

    @property
    def section_degrees(self) -> tuple[int, int, int, int]:
        """(deg a, deg b, deg c, deg d) required by the twists."""
        t1, t2 = self.t1, self.t2
        return (-t1, -2 * t1 + t2, t1 - 2 * t2, -t2)


def new_miranda_data(t1: int, t2: int, a: Form, b: Form, c: Form,
                     d: Form) -> MirandaData:
    """Validate and canonicalize cover data.

    Swapping the two summands exchanges the roles of the basis sections, so
    twists are normalized to t1 >= t2 via (a, b, c, d) -> (d, c, b, a).
    Zero is allowed for a and d only; b = c = 0 would make the cover algebra
    non-integral.
    """
    if t1 < t2:
        t1, t2, a, b, c, d = t2, t1, d, c, b, a
    if not (2 * t1 <= t2 and 2 * t2 <= t1):
        raise BadTwists(
            f"twists ({t1}, {t2}) leave a required section with negative "
            f"degree: need 2*t1 <= t2 and 2*t2 <= t1")
    if b.is_zero or c.is_zero:
        raise NotIntegral("cover algebra needs b != 0 and c != 0")
    degrees = (-t1, -2 * t1 + t2, t1 - 2 * t2, -t2)
    names = ("a", "b", "c", "d")
    for form, want, name in zip((a, b, c, d), degrees, names):
        if form.is_zero:
            continue
        if form.degree != want:
            raise DegreeMismatch(
                f"section {name} must have degree {want} for twists "
                f"({t1}, {t2}), got {form.degree}")
    return MirandaData(t1, t2, a, b, c, d)


@dataclass(frozen=True)
class DerivedSections:
    e: Form
    f: Form
    g: Form


def derived_efg(data: MirandaData) -> DerivedSections:
    """e = a^2 - b*d, f = a*d - b*c, g = d^2 - a*c."""
    a, b, c, d = data.a, data.b, data.c, data.d
    return DerivedSections(e=a * a - b * d, f=a * d - b * c, g=d * d - a * c)


@dataclass(frozen=True)
class MultiplicationTable:
    """Images of z^2, z*w, w^2 in the basis (1, z, w)."""

    z2: tuple[Form, Form, Form]
    zw: tuple[Form, Form, Form]
    w2: tuple[Form, Form, Form]

    def multiply_by_z_matrix(self):
        """Matrix of multiplication by z on (1, z, w), columns = images."""
        K = self.z2[0].field
        one = Form.constant(K, 1)
        zero = Form.zero(K)
        col_1 = (zero, one, zero)            # z * 1 = z
        return _columns_to_rows(col_1, self.z2, self.zw)

    def multiply_by_w_matrix(self):
        K = self.z2[0].field
        one = Form.constant(K, 1)
        zero = Form.zero(K)
        col_1 = (zero, zero, one)            # w * 1 = w
        return _columns_to_rows(col_1, self.zw, self.w2)


def _columns_to_rows(*cols):
    return tuple(tuple(col[i] for col in cols) for i in range(3))


def matrix_trace(rows):
    total = rows[0][0]
    for i in (1, 2):
        total = total + rows[i][i]
    return total


def multiplication_table(data: MirandaData) -> MultiplicationTable:
    """The six structure constants of the cover algebra on {z^2, zw, w^2}."""
    a, b, c, d = data.a, data.b, data.c, data.d
    efg = derived_efg(data)
    two = 2
    return MultiplicationTable(
        z2=(two * efg.e, a, b),
        zw=(-efg.f, -d, -a),
        w2=(two * efg.g, c, d),
    )


def algebra_product(table: MultiplicationTable, u, v):
    """Product of two algebra elements given as coefficient triples on
    (1, z, w) with Form entries."""
    u0, uz, uw = u
    v0, vz, vw = v
    K = table.z2[1].field
    out = [Form.zero(K), Form.zero(K), Form.zero(K)]

    def add_scaled(target, triple, scale: Form):
        if scale.is_zero:
            return
        for i in range(3):
            if not triple[i].is_zero:
                target[i] = target[i] + scale * triple[i]

    one_triple = (Form.constant(K, 1), Form.zero(K), Form.zero(K))
    z_triple = (Form.zero(K), Form.constant(K, 1), Form.zero(K))
    w_triple = (Form.zero(K), Form.zero(K), Form.constant(K, 1))

    add_scaled(out, one_triple, u0 * v0)
    add_scaled(out, z_triple, u0 * vz + uz * v0)
    add_scaled(out, w_triple, u0 * vw + uw * v0)
    add_scaled(out, table.z2, uz * vz)
    add_scaled(out, table.zw, uz * vw + uw * vz)
    add_scaled(out, table.w2, uw * vw)
    return tuple(out)


@dataclass(frozen=True)
class BranchData:
    """Discriminant form and the divisor-class degree of the branch divisor."""

    discriminant: Form
    degree: int
    degenerate: bool


def discriminant(data: MirandaData) -> BranchData:
    """D = f^2 - 4*e*g; degree -2*(t1 + t2) when nonzero.

    A vanishing discriminant (everywhere-degenerate branch) is reported, not
    rejected.
    """
    efg = derived_efg(data)
    D = efg.f * efg.f - 4 * (efg.e * efg.g)
    return BranchData(discriminant=D, degree=-2 * (data.t1 + data.t2),
                      degenerate=D.is_zero)


def is_galois(data: MirandaData) -> bool:
    """The cover is Galois exactly when a = d = 0."""
    return data.a.is_zero and data.d.is_zero


def cubic_section_twist(t1: int, t2: int):
    """The positive m with {t1, t2} = {-m, -2m}, if one exists.

    Covers with these twists are cubic sections of the total space of the
    degree-m line bundle (m = 1: a cubic surface in P^3).
    """
    lo, hi = min(t1, t2), max(t1, t2)
    if hi < 0 and lo == 2 * hi:
        return -hi
    return None


@dataclass(frozen=True)
class RestrictedMirandaData:
    """The four sections restricted to a line, as binary forms."""

    t1: int
    t2: int
    a: BinaryForm
    b: BinaryForm
    c: BinaryForm
    d: BinaryForm
    line: LineP2

    @property
    def section_degrees(self) -> tuple[int, int, int, int]:
        t1, t2 = self.t1, self.t2
        return (-t1, -2 * t1 + t2, t1 - 2 * t2, -t2)


def restrict(data: MirandaData, line: LineP2) -> RestrictedMirandaData:
    """Restrict the section quadruple to a line; degrees are preserved for
    every section that does not vanish identically on it."""
    return RestrictedMirandaData(
        t1=data.t1, t2=data.t2,
        a=data.a.restrict_to_line(line),
        b=data.b.restrict_to_line(line),
        c=data.c.restrict_to_line(line),
        d=data.d.restrict_to_line(line),
        line=line,
    )
