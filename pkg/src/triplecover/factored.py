"""Forms kept in factored shape: a unit times powers of nonconstant bases.

The per-prime decomposition of cover data is defined factor by factor, so
the library never factorizes: callers supply bases and assert their
irreducibility.  Bases are normalized monic (units absorb the scale) and
merged when equal, which makes association checks trivial.
"""

from __future__ import annotations

from .forms import Form, line_stream
from .polygcd import binary_is_squarefree


class FactoredForm:
    """unit * prod(base_i ^ mult_i) with monic nonconstant bases.

    ``bases_irreducible`` is a caller assertion, not a verified fact; see
    ``sanity_check_bases`` for the probabilistic spot check.  The zero
    element is represented by unit 0 with no factors.
    """

    __slots__ = ("field", "unit", "factors", "bases_irreducible")

    def __init__(self, field, unit, factors, bases_irreducible=True):
        K = field
        u = K.of(unit)
        merged: dict = {}
        order: list[Form] = []
        if u:
            for base, mult in factors:
                if not isinstance(base, Form) or base.field != K:
                    raise ValueError("bases must be forms over the same field")
                if not isinstance(mult, int) or mult < 1:
                    raise ValueError("multiplicities must be positive integers")
                if base.is_zero:
                    raise ValueError("zero is not allowed as a base")
                if base.is_constant:
                    scale = base.coefficient((0, 0, 0))
                    for _ in range(mult):
                        u = K.mul(u, scale)
                    continue
                lead = base.leading_coefficient
                for _ in range(mult):
                    u = K.mul(u, lead)
                b = base.monic()
                if b in merged:
                    merged[b] += mult
                else:
                    merged[b] = mult
                    order.append(b)
        self.field = K
        self.unit = u
        self.factors = tuple(sorted(((b, merged[b]) for b in order),
                                    key=lambda pair: pair[0].sort_key())) \
            if u else ()
        self.bases_irreducible = bool(bases_irreducible)

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, field):
        return cls(field, 0, ())

    @classmethod
    def one(cls, field):
        return cls(field, 1, ())

    @classmethod
    def from_form_power(cls, base: Form, mult: int = 1,
                        bases_irreducible=True):
        return cls(base.field, 1, ((base, mult),), bases_irreducible)

    # -- predicates --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.unit

    @property
    def is_constant(self) -> bool:
        return not self.factors

    @property
    def degree(self):
        if self.is_zero:
            return None
        return sum(b.degree * m for b, m in self.factors)

    def multiplicity(self, base: Form) -> int:
        """Multiplicity of a base (matched up to scalar)."""
        b = base.monic()
        for fb, m in self.factors:
            if fb == b:
                return m
        return 0

    # -- algebra ------------------------------------------------------------

    def expand(self) -> Form:
        K = self.field
        out = Form.constant(K, self.unit)
        for base, mult in self.factors:
            out = out * base ** mult
        return out

    def __mul__(self, other):
        if isinstance(other, FactoredForm):
            if other.field != self.field:
                raise ValueError("mixed coefficient fields")
            if self.is_zero or other.is_zero:
                return FactoredForm.zero(self.field)
            return FactoredForm(
                self.field, self.field.mul(self.unit, other.unit),
                self.factors + other.factors,
                self.bases_irreducible and other.bases_irreducible)
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        if n == 0:
            return FactoredForm.one(self.field)
        if self.is_zero:
            return self
        K = self.field
        u = K.one
        for _ in range(n):
            u = K.mul(u, self.unit)
        return FactoredForm(K, u, tuple((b, m * n) for b, m in self.factors),
                            self.bases_irreducible)

    def scale(self, scalar):
        K = self.field
        return FactoredForm(K, K.mul(self.unit, K.of(scalar)), self.factors,
                            self.bases_irreducible)

    def __eq__(self, other):
        return (isinstance(other, FactoredForm)
                and other.field == self.field and other.unit == self.unit
                and other.factors == self.factors)

    def __hash__(self):
        return hash((self.field, self.unit, self.factors))

    def __str__(self):
        if self.is_zero:
            return "0"
        pieces = []
        if not self.factors or self.unit != self.field.one:
            pieces.append(self.field.format(self.unit))
        for base, mult in self.factors:
            text = f"({base})"
            if mult != 1:
                text += f"^{mult}"
            pieces.append(text)
        return "*".join(pieces)

    def __repr__(self):
        return f"FactoredForm({str(self)!r})"

    # -- sanity check --------------------------------------------------------

    def sanity_check_bases(self, seed: int = 101, trials: int = 3) -> bool:
        """Probabilistic spot check of the irreducibility assertion.

        Restricts the product of the distinct bases to a few random lines and
        demands a square-free image: a repeated base, a base sharing a factor
        with another, or a base that is itself a square would fail for almost
        every line.  Lines where a base vanishes identically are skipped.
        """
        if self.is_zero or not self.factors:
            return True
        K = self.field
        lines = line_stream(K, seed)
        checked = 0
        for line in lines:
            if checked >= trials:
                return True
            images = [b.restrict_to_line(line) for b, _ in self.factors]
            if any(img.is_zero for img in images):
                continue
            product = images[0]
            for img in images[1:]:
                product = product * img
            if not binary_is_squarefree(product):
                return False
            checked += 1
        return True
