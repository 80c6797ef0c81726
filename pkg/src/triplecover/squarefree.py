"""Square-free decomposition of homogeneous forms.

Yun's derivative-GCD scheme runs on the part of the form that is primitive
with respect to one variable; the variable content (a form in the remaining
coordinates) is decomposed recursively.  Parts of equal multiplicity from the
two groups are coprime, so merging them keeps every part square-free.

Valid in characteristic 0 and in characteristic p > deg f.
"""

from __future__ import annotations

from .errors import CharacteristicTooSmall
from .forms import Form, exact_div
from .polygcd import form_gcd


def _variable_content(f: Form, var: int) -> Form:
    """Content of f viewed as a polynomial in one variable: the gcd of its
    coefficient forms (which live in the other two coordinates)."""
    K = f.field
    slices: dict[int, dict] = {}
    for exp, c in f.terms.items():
        rest = list(exp)
        power = rest[var]
        rest[var] = 0
        slices.setdefault(power, {})[tuple(rest)] = c
    content = Form.zero(K)
    for terms in slices.values():
        piece = Form(K, terms)
        content = piece.monic() if content.is_zero else form_gcd(content, piece)
        if content.is_constant:
            break
    return content.monic()


def _yun(pp: Form, var: int) -> list[tuple[Form, int]]:
    """Yun's algorithm on a form primitive in the chosen variable."""
    if pp.is_constant:
        return []
    dp = pp.derivative(var)
    if dp.is_zero:
        return [(pp.monic(), 1)]
    parts = []
    g = form_gcd(pp, dp)
    c = exact_div(pp, g)
    d = exact_div(dp, g) - c.derivative(var)
    i = 1
    while not c.is_constant:
        a = form_gcd(c, d)
        if not a.is_constant:
            parts.append((a, i))
            c = exact_div(c, a)
            d = exact_div(d, a)
        d = d - c.derivative(var)
        i += 1
    return parts


def squarefree_decomposition(f: Form) -> list[tuple[Form, int]]:
    """Write f = unit * prod g_i^i with the g_i square-free, monic and
    pairwise coprime.

    Returns the list of (g_i, i) sorted by multiplicity then form; constant
    parts are omitted and the unit is recoverable by exact division.
    """
    if f.is_zero:
        raise ValueError("square-free decomposition of the zero form")
    K = f.field
    if 0 < K.characteristic <= (f.degree or 0):
        raise CharacteristicTooSmall(
            f"characteristic {K.characteristic} must exceed the degree "
            f"{f.degree}")
    by_mult: dict[int, Form] = {}
    rest = f
    for var in range(3):
        if rest.is_constant:
            break
        content = _variable_content(rest, var)
        pp = exact_div(rest, content)
        for part, mult in _yun(pp, var):
            by_mult[mult] = (by_mult[mult] * part
                             if mult in by_mult else part)
        rest = content
    return sorted(((g.monic(), i) for i, g in by_mult.items()),
                  key=lambda pair: (pair[1], pair[0].sort_key()))


def squarefree_unit(f: Form, parts):
    """The scalar unit with f = unit * prod g_i^i."""
    prod = Form.constant(f.field, 1)
    for g, i in parts:
        prod = prod * g ** i
    quotient = exact_div(f, prod)
    if not quotient.is_constant:
        raise ArithmeticError("square-free parts do not multiply back")
    return quotient.coefficient((0, 0, 0))


def squarefree_split(f: Form) -> tuple[Form, Form]:
    """Split f = unit * f1 * f0^2 with f1 square-free.

    f1 collects every odd-multiplicity prime once; f0 carries the rest.
    Returns monic (f1, f0).
    """
    if f.is_zero:
        raise ValueError("square-free split of the zero form")
    parts = squarefree_decomposition(f)
    K = f.field
    f1 = Form.constant(K, 1)
    f0 = Form.constant(K, 1)
    for g, i in parts:
        if i % 2:
            f1 = f1 * g
        f0 = f0 * g ** (i // 2)
    return f1.monic(), f0.monic()


def radical(f: Form) -> Form:
    """Product of the distinct square-free parts (the reduced form), monic."""
    if f.is_constant and not f.is_zero:
        return Form.constant(f.field, 1)
    parts = squarefree_decomposition(f)
    out = Form.constant(f.field, 1)
    for g, _ in parts:
        out = out * g
    return out.monic()


def is_squarefree(f: Form) -> bool:
    """True when no prime divides f twice (constants count as square-free)."""
    if f.is_zero:
        return False
    if f.is_constant:
        return True
    return all(i == 1 for _, i in squarefree_decomposition(f))
