"""Splitting types of rank-2 bundles on lines and jump-line detection.

Split bundles and cotangent twists restrict with known types; everything
else goes through a graded matrix presentation.  Restricting a presentation
to a line gives a matrix of binary forms, whose kernel module over the
line's coordinate ring is free; a minimal generating set is found by
degree-by-degree linear algebra, and the generator shifts are the splitting
type.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .errors import DegenerateOnLine, NotExpectedRank
from .fields import QQ
from .forms import BinaryForm, Form, LineP2, line_stream


@dataclass(frozen=True, order=True)
class SplittingType:
    """Ordered degree pair (a1 >= a2) with lexicographic comparison."""

    a1: int
    a2: int

    def __post_init__(self):
        if self.a1 < self.a2:
            raise ValueError("splitting type must be ordered a1 >= a2")

    @property
    def total(self) -> int:
        return self.a1 + self.a2

    def __str__(self):
        return f"({self.a1}, {self.a2})"


# -- exact linear algebra over the coefficient field ------------------------


def _rref(rows, K):
    """Reduced row echelon form in place; returns pivot column indices."""
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = K.inv(rows[r][col])
        rows[r] = [K.mul(v, inv) for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [K.sub(a, K.mul(factor, b))
                           for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return pivots


def _nullspace(matrix, ncols, K):
    """Basis of the right kernel of a scalar matrix (list of rows)."""
    rows = [list(row) for row in matrix if any(row)]
    if not rows:
        basis = []
        for j in range(ncols):
            v = [K.zero] * ncols
            v[j] = K.one
            basis.append(v)
        return basis
    pivots = _rref(rows, K)
    pivot_set = set(pivots)
    free = [j for j in range(ncols) if j not in pivot_set]
    basis = []
    for j in free:
        v = [K.zero] * ncols
        v[j] = K.one
        for i, pc in enumerate(pivots):
            v[pc] = K.neg(rows[i][j])
        basis.append(v)
    return basis


def _rank(matrix, K) -> int:
    rows = [list(row) for row in matrix if any(row)]
    if not rows:
        return 0
    return len(_rref(rows, K))


# -- symbolic matrix rank (fraction-free elimination) ------------------------


def _poly_matrix_rank(matrix) -> int:
    """Rank over the fraction field, by Bareiss-style elimination.

    Entries are Form or BinaryForm values sharing a field; exactness comes
    from the polynomial arithmetic itself.
    """
    rows = [list(r) for r in matrix]
    if not rows or not rows[0]:
        return 0
    rank = 0
    nrows, ncols = len(rows), len(rows[0])
    row = 0
    for col in range(ncols):
        if row >= nrows:
            break
        pivot = None
        for i in range(row, nrows):
            if not rows[i][col].is_zero:
                pivot = i
                break
        if pivot is None:
            continue
        rows[row], rows[pivot] = rows[pivot], rows[row]
        p = rows[row][col]
        for i in range(row + 1, nrows):
            if rows[i][col].is_zero:
                continue
            q = rows[i][col]
            rows[i] = [p * b - q * a if not (b.is_zero and a.is_zero)
                       else b
                       for a, b in zip(rows[row], rows[i])]
        rank += 1
        row += 1
    return rank


# -- bundle classes ----------------------------------------------------------


@dataclass(frozen=True)
class SplitBundle:
    """O(t1) + O(t2), canonicalized t1 >= t2."""

    t1: int
    t2: int

    def __post_init__(self):
        if self.t1 < self.t2:
            object.__setattr__(self, "t1", self.t2)
            object.__setattr__(self, "t2", self.t1)

    @property
    def c1(self) -> int:
        return self.t1 + self.t2

    def __str__(self):
        return f"O({self.t1})+O({self.t2})"


@dataclass(frozen=True)
class CotangentTwist:
    """The twisted cotangent bundle Omega(t), with c1 = 2t - 3."""

    t: int

    @property
    def c1(self) -> int:
        return 2 * self.t - 3

    def __str__(self):
        return f"Omega({self.t})"


@dataclass(frozen=True)
class Presentation:
    """Graded matrix presentation of a bundle.

    The matrix maps +O(col_twists[j]) to +O(row_twists[i]); entry (i, j) is
    homogeneous of degree row_twists[i] - col_twists[j] or zero.  For
    kind="kernel" the bundle is the kernel, for kind="cokernel" the
    cokernel.  The matrix must have full generic rank min(rows, cols).
    """

    kind: str
    matrix: tuple
    row_twists: tuple
    col_twists: tuple

    def __post_init__(self):
        if self.kind not in ("kernel", "cokernel"):
            raise ValueError("kind must be 'kernel' or 'cokernel'")
        matrix = tuple(tuple(row) for row in self.matrix)
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "row_twists", tuple(self.row_twists))
        object.__setattr__(self, "col_twists", tuple(self.col_twists))
        if len(matrix) != len(self.row_twists):
            raise ValueError("one row twist per matrix row required")
        for row in matrix:
            if len(row) != len(self.col_twists):
                raise ValueError("one column twist per matrix column required")
        for i, row in enumerate(matrix):
            for j, entry in enumerate(row):
                want = self.row_twists[i] - self.col_twists[j]
                if not entry.is_zero and entry.degree != want:
                    raise ValueError(
                        f"entry ({i}, {j}) must be homogeneous of degree "
                        f"{want}, got {entry.degree}")
        if _poly_matrix_rank(matrix) != min(len(matrix), len(matrix[0])):
            raise ValueError("presentation matrix is generically degenerate")

    @property
    def field(self):
        return self.matrix[0][0].field

    @property
    def generic_rank(self) -> int:
        return min(len(self.matrix), len(self.col_twists))

    @property
    def bundle_rank(self) -> int:
        if self.kind == "kernel":
            return len(self.col_twists) - self.generic_rank
        return len(self.row_twists) - self.generic_rank

    @property
    def c1(self) -> int:
        delta = sum(self.col_twists) - sum(self.row_twists)
        return delta if self.kind == "kernel" else -delta


@dataclass(frozen=True)
class PresentedBundle:
    presentation: Presentation

    @property
    def c1(self) -> int:
        return self.presentation.c1

    def __str__(self):
        return f"Presented({self.presentation.kind})"


BundleClass = Union[SplitBundle, CotangentTwist, PresentedBundle]


def euler_cotangent_presentation(t: int, field=QQ) -> Presentation:
    """Omega(t) as the kernel of (x y z): O(t-1)^3 -> O(t)."""
    x, y, z = Form.variables(field)
    return Presentation(kind="kernel", matrix=((x, y, z),),
                        row_twists=(t,), col_twists=(t - 1, t - 1, t - 1))


def split_presentation(t1: int, t2: int, field=QQ,
                       mixing: Optional[tuple] = None) -> Presentation:
    """A kernel presentation with kernel O(t1) + O(t2).

    The kernel of (f, g, 1): O(t1)+O(t2)+O(r) -> O(r) is free on
    (1, 0, -f) and (0, 1, -g) whenever deg f = r - t1 and deg g = r - t2;
    ``mixing`` supplies (f, g, r) to make the instance less trivial.
    """
    K = field
    if mixing is None:
        r = max(t1, t2)
        x, y, z = Form.variables(K)
        f = (x + y) ** (r - t1) if r - t1 > 0 else Form.constant(K, 1)
        g = (y + z) ** (r - t2) if r - t2 > 0 else Form.constant(K, 1)
    else:
        f, g, r = mixing
    one = Form.constant(K, 1)
    return Presentation(kind="kernel", matrix=((f, g, one),),
                        row_twists=(r,), col_twists=(t1, t2, r))


# -- restriction --------------------------------------------------------------


@dataclass(frozen=True)
class RestrictedPresentation:
    """A presentation matrix restricted to a line (binary-form entries)."""

    kind: str
    matrix: tuple
    row_twists: tuple
    col_twists: tuple
    line: LineP2

    @property
    def field(self):
        return self.line.field


def restrict_presentation(pres: Presentation,
                          line: LineP2) -> RestrictedPresentation:
    """Entrywise restriction; fails when the matrix drops rank on the line."""
    restricted = tuple(tuple(entry.restrict_to_line(line) for entry in row)
                       for row in pres.matrix)
    if _poly_matrix_rank(restricted) < pres.generic_rank:
        raise DegenerateOnLine(
            f"presentation drops rank on {line}")
    return RestrictedPresentation(kind=pres.kind, matrix=restricted,
                                  row_twists=pres.row_twists,
                                  col_twists=pres.col_twists, line=line)


# -- graded kernel bases ------------------------------------------------------


@dataclass(frozen=True)
class KernelGenerator:
    """A kernel column: components of degree col_twists[j] - shift."""

    shift: int
    column: tuple


def _binary_monomials(K, degree):
    return [BinaryForm.monomial(K, (degree - j, j)) for j in range(degree + 1)]


def _column_coordinates(column, col_twists, shift, K):
    """Flatten a candidate kernel column into scalar coordinates in the
    per-component monomial bases at the given shift."""
    coords = []
    for j, comp in enumerate(column):
        d = col_twists[j] - shift
        if d < 0:
            if not comp.is_zero:
                raise ValueError("component degree is negative but nonzero")
            continue
        for k in range(d + 1):
            coords.append(comp.coefficient((d - k, k)))
    return coords


def minimal_kernel_basis(rp: RestrictedPresentation) -> list[KernelGenerator]:
    """Minimal generating set of the kernel of a binary-form matrix.

    The matrix is viewed as a graded map of free modules over the line's
    coordinate ring; the kernel of such a map is free, and its generator
    twists are found by solving for syzygies degree by degree (new
    generators are taken modulo multiples of the earlier ones).
    """
    K = rp.field
    matrix = rp.matrix
    nrows = len(matrix)
    ncols = len(rp.col_twists)
    rank = _poly_matrix_rank(matrix)
    if rank < nrows:
        raise NotExpectedRank(
            "restricted matrix is not surjective onto a free image; "
            f"rank {rank} < {nrows} rows")
    expected = ncols - rank
    if expected <= 0:
        return []
    d_max = max(rp.col_twists)
    d_min = (sum(rp.col_twists) - sum(rp.row_twists)
             - (expected - 1) * d_max)
    generators: list[KernelGenerator] = []
    for shift in range(d_max, d_min - 1, -1):
        if len(generators) == expected:
            break
        # unknowns: coefficients of each component v_j of degree c_j - shift
        blocks = []
        total_unknowns = 0
        for j in range(ncols):
            d = rp.col_twists[j] - shift
            size = d + 1 if d >= 0 else 0
            blocks.append((total_unknowns, size, d))
            total_unknowns += size
        if total_unknowns == 0:
            continue
        # equations: coefficients of sum_j M[i][j] * v_j, degree r_i - shift
        eq_rows = []
        for i in range(nrows):
            out_deg = rp.row_twists[i] - shift
            if out_deg < 0:
                continue
            rows_for_i = [[K.zero] * total_unknowns
                          for _ in range(out_deg + 1)]
            for j in range(ncols):
                start, size, d = blocks[j]
                entry = matrix[i][j]
                if size == 0 or entry.is_zero:
                    continue
                for k in range(size):
                    mono = BinaryForm.monomial(K, (d - k, k))
                    prod = entry * mono
                    for (a, b), coeff in prod.terms.items():
                        rows_for_i[b][start + k] = K.add(
                            rows_for_i[b][start + k], coeff)
            eq_rows.extend(rows_for_i)
        null = _nullspace(eq_rows, total_unknowns, K)
        if not null:
            continue
        # span of earlier generators times monomials of the right degree
        pool = []
        for gen in generators:
            mono_deg = gen.shift - shift
            if mono_deg < 0:
                continue
            for mono in _binary_monomials(K, mono_deg):
                col = tuple(comp * mono for comp in gen.column)
                pool.append(_column_coordinates(col, rp.col_twists, shift, K))
        current_rank = _rank(pool, K) if pool else 0
        for vec in null:
            if len(generators) == expected:
                break
            new_rank = _rank(pool + [vec], K)
            if new_rank <= current_rank:
                continue
            pool.append(vec)
            current_rank = new_rank
            column = []
            for j in range(ncols):
                start, size, d = blocks[j]
                terms = {}
                for k in range(size):
                    c = vec[start + k]
                    if c:
                        terms[(d - k, k)] = c
                column.append(BinaryForm(K, terms))
            generators.append(KernelGenerator(shift=shift,
                                              column=tuple(column)))
    if len(generators) != expected:
        raise NotExpectedRank(
            f"found {len(generators)} kernel generators, expected {expected}")
    generators.sort(key=lambda g: -g.shift)
    return generators


def _splitting_from_kernel(rp: RestrictedPresentation) -> SplittingType:
    gens = minimal_kernel_basis(rp)
    if len(gens) != 2:
        raise NotExpectedRank(f"kernel has rank {len(gens)}, not 2")
    shifts = sorted((g.shift for g in gens), reverse=True)
    return SplittingType(shifts[0], shifts[1])


def _dualized(rp: RestrictedPresentation) -> RestrictedPresentation:
    transpose = tuple(tuple(rp.matrix[i][j] for i in range(len(rp.matrix)))
                      for j in range(len(rp.col_twists)))
    return RestrictedPresentation(
        kind="kernel", matrix=transpose,
        row_twists=tuple(-t for t in rp.col_twists),
        col_twists=tuple(-t for t in rp.row_twists), line=rp.line)


def splitting_type_presented(pres: Presentation, line: LineP2) -> SplittingType:
    """Splitting type of a rank-2 presented bundle on a line."""
    if pres.bundle_rank != 2:
        raise NotExpectedRank(
            f"presentation has bundle rank {pres.bundle_rank}, not 2")
    rp = restrict_presentation(pres, line)
    if pres.kind == "kernel":
        return _splitting_from_kernel(rp)
    dual = _splitting_from_kernel(_dualized(rp))
    return SplittingType(-dual.a2, -dual.a1)


def bundle_c1(bundle: BundleClass) -> int:
    return bundle.c1


def splitting_on_line(bundle, line: LineP2) -> SplittingType:
    """Splitting type of the bundle restricted to the line.

    Split bundles restrict by their twists on every line; a cotangent twist
    Omega(t) restricts to (t-1, t-2) on every line (checked against the
    kernel-basis engine in the tests); presented bundles are computed.
    """
    if isinstance(bundle, SplitBundle):
        return SplittingType(bundle.t1, bundle.t2)
    if isinstance(bundle, CotangentTwist):
        return SplittingType(bundle.t - 1, bundle.t - 2)
    if isinstance(bundle, PresentedBundle):
        return splitting_type_presented(bundle.presentation, line)
    if isinstance(bundle, Presentation):
        return splitting_type_presented(bundle, line)
    raise TypeError(f"not a bundle class: {bundle!r}")


@dataclass(frozen=True)
class JumpReport:
    """Scan outcome: the lexicographic minimum is the generic type and
    every deviation exceeds it."""

    generic_type: SplittingType
    samples: int
    deviations: tuple


def jump_line_scan(bundle, n_samples: int, seed: int,
                   field=QQ, coefficient_bound: int = 9) -> JumpReport:
    """Sample lines deterministically and report jump candidates.

    The generic type is the lexicographic minimum over the sampled lines;
    deviations are returned in sample order.
    """
    if n_samples < 1:
        raise ValueError("need at least one sample")
    if isinstance(bundle, Presentation):
        bundle = PresentedBundle(bundle)
    if isinstance(bundle, PresentedBundle):
        field = bundle.presentation.field
    stream = line_stream(field, seed, coefficient_bound)
    observed = []
    for _ in range(n_samples):
        line = next(stream)
        observed.append((line, splitting_on_line(bundle, line)))
    generic = min(t for _, t in observed)
    deviations = tuple((line, t) for line, t in observed if t > generic)
    return JumpReport(generic_type=generic, samples=n_samples,
                      deviations=deviations)
