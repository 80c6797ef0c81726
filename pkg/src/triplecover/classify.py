"""Uniformity classification of trace-free bundles by branch degree.

For branch degree 2k the admissible split types are the pairs t1 >= t2 with
t1 + t2 = -k and 2*t1 <= t2, 2*t2 <= t1; for odd k the twisted cotangent
bundle with first Chern number -k joins them.  The verdict engine encodes
the jump-line case analysis: a hypothetical jump of magnitude m forces the
four restricted sections into a rigid degree profile, and the sign of the
b-degree decides how the jump dies.

  deg b < 0:  b vanishes on the line.  Either the line divides a2 or c0,
              which forces the d-section to vanish against its nonnegative
              degree, or it divides b1, making the cover totally ramified
              over the line against the coprimality of the total-
              ramification factors.
  deg b = 0:  b is a nonzero constant on the whole plane, so a0, a2, b1, c0
              are constants and the abc relation collapses to
              a1 + b0^2 = c1; restricted to a general line its left side
              has even degree while the right side is odd (3 when the
              branch degree is 12), a contradiction.
  deg b > 0:  no contradiction arises; the degree stays inconclusive
              (branch degree 16 is the first such case).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .bundles import BundleClass, CotangentTwist, SplitBundle
from .errors import OddDegree, UnknownEntry
from .miranda import cubic_section_twist


def admissible_split_types(k: int) -> frozenset[SplitBundle]:
    """All split classes O(t1) + O(t2) with c1 = -k allowed by the section
    degree constraints 2*t1 <= t2 and 2*t2 <= t1."""
    if k < 1:
        raise ValueError("k must be positive")
    out = set()
    lo = -(2 * k) // 3 - 1
    for t1 in range(lo, 1):
        t2 = -k - t1
        if t1 >= t2 and 2 * t1 <= t2 and 2 * t2 <= t1:
            out.add(SplitBundle(t1, t2))
    return frozenset(out)


def cotangent_candidate(k: int) -> Optional[CotangentTwist]:
    """The twisted cotangent bundle with c1 = -k (odd k only)."""
    if k < 1:
        raise ValueError("k must be positive")
    if k % 2 == 0:
        return None
    return CotangentTwist((3 - k) // 2)


@dataclass(frozen=True)
class DegreeProfile:
    """Degrees of the restricted sections (a, b, c, d) on a hypothetical
    jump line of magnitude m for branch degree 2k."""

    k: int
    m: int
    t: int
    deg_a: int
    deg_b: int
    deg_c: int
    deg_d: int

    @property
    def restricted_twists(self) -> tuple[int, int]:
        if self.k % 2 == 0:
            return (-self.t + self.m, -self.t - self.m)
        return (-self.t + self.m + 1, -self.t - self.m)


def jump_section_degrees(k: int, m: int) -> DegreeProfile:
    """Degree profile of a magnitude-m jump for branch degree 2k."""
    if k < 1 or m < 1:
        raise ValueError("k and m must be positive")
    if k % 2 == 0:
        t = k // 2
        return DegreeProfile(k=k, m=m, t=t, deg_a=t - m, deg_b=t - 3 * m,
                             deg_c=t + 3 * m, deg_d=t + m)
    t = (k + 1) // 2
    return DegreeProfile(k=k, m=m, t=t, deg_a=t - 1 - m,
                         deg_b=t - 2 - 3 * m, deg_c=t + 3 * m + 1,
                         deg_d=t + m)


class EliminationReason(Enum):
    D_SECTION_VANISHES = "d-section vanishes"
    TOTAL_RAMIFICATION_NOT_COPRIME = "total ramification breaks coprimality"
    CONSTANT_B_DEGREE_MISMATCH = "constant-b degree mismatch"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class SubCase:
    reason: EliminationReason
    detail: str


@dataclass(frozen=True)
class Elimination:
    """Outcome of the jump-line analysis at one (k, m)."""

    k: int
    m: int
    profile: DegreeProfile
    eliminated: bool
    subcases: tuple

    @property
    def reason(self) -> EliminationReason:
        return self.subcases[0].reason


def eliminate_jump(k: int, m: int) -> Elimination:
    """Decide whether a magnitude-m jump dies for branch degree 2k."""
    profile = jump_section_degrees(k, m)
    if profile.deg_b < 0:
        sub = (
            SubCase(
                EliminationReason.D_SECTION_VANISHES,
                "the b-section vanishes on the line; if the line divides "
                "a2 or c0 the d-section is forced to vanish there too, "
                f"impossible for a section of degree {profile.deg_d} >= 0"),
            SubCase(
                EliminationReason.TOTAL_RAMIFICATION_NOT_COPRIME,
                "the b-section vanishes on the line; if the line divides "
                "b1 the cover is totally ramified over it, so the line "
                "divides a1*a2, breaking the coprimality of the "
                "decomposition factors"),
        )
        return Elimination(k=k, m=m, profile=profile, eliminated=True,
                           subcases=sub)
    if profile.deg_b == 0:
        right = "3" if k == 6 else "odd"
        sub = (SubCase(
            EliminationReason.CONSTANT_B_DEGREE_MISMATCH,
            "the b-section is a nonzero constant on the plane, so a0, a2, "
            "b1, c0 are constants and a1 + b0^2 = c1; restricted to a "
            "general line the left side has even degree deg(b0^2) while "
            f"the right side has degree {right}"),)
        return Elimination(k=k, m=m, profile=profile, eliminated=True,
                           subcases=sub)
    sub = (SubCase(
        EliminationReason.INCONCLUSIVE,
        f"the b-section has positive degree {profile.deg_b} on the line; "
        "no contradiction arises from the degree bookkeeping"),)
    return Elimination(k=k, m=m, profile=profile, eliminated=False,
                       subcases=sub)


class Status(Enum):
    UNIFORM = "uniform"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Verdict:
    k: int
    status: Status
    eliminations: tuple
    m_bound: int


def uniformity_verdict(k: int) -> Verdict:
    """Uniform exactly when every jump magnitude m >= 1 is eliminated.

    deg b is strictly decreasing in m, so only the finitely many m with
    deg b >= 0 need checking; beyond the bound the b-vanishing elimination
    applies automatically.
    """
    if k < 1:
        raise ValueError("k must be positive")
    eliminations = []
    m = 1
    while True:
        e = eliminate_jump(k, m)
        eliminations.append(e)
        if e.profile.deg_b < 0:
            break
        m += 1
    status = Status.UNIFORM if all(e.eliminated for e in eliminations) \
        else Status.INCONCLUSIVE
    return Verdict(k=k, status=status, eliminations=tuple(eliminations),
                   m_bound=len(eliminations))


def _theorem_table() -> dict[int, frozenset]:
    return {
        2: frozenset({CotangentTwist(1)}),
        4: frozenset({SplitBundle(-1, -1)}),
        6: frozenset({SplitBundle(-1, -2), CotangentTwist(0)}),
        8: frozenset({SplitBundle(-2, -2)}),
        10: frozenset({SplitBundle(-2, -3), CotangentTwist(-1)}),
        12: frozenset({SplitBundle(-3, -3), SplitBundle(-2, -4)}),
        14: frozenset({SplitBundle(-3, -4), CotangentTwist(-2)}),
        18: frozenset({SplitBundle(-4, -5), SplitBundle(-3, -6),
                       CotangentTwist(-3)}),
    }


#: Classified bundle sets for the uniform branch degrees.
CLASSIFICATION_TABLE = _theorem_table()


@dataclass(frozen=True)
class ClassificationEntry:
    branch_degree: int
    classes: frozenset
    status: Status
    verdict: Verdict


def classify_branch_degree(two_k: int) -> ClassificationEntry:
    """Candidate bundle classes and the uniformity status for one branch
    degree.

    For uniform degrees the enumerated set is cross-checked against the
    stored classification table; a mismatch would be an internal error, not
    a data error.
    """
    if two_k % 2:
        raise OddDegree(f"branch degree must be even, got {two_k}")
    if two_k < 2:
        raise OddDegree(f"branch degree must be at least 2, got {two_k}")
    k = two_k // 2
    verdict = uniformity_verdict(k)
    classes = set(admissible_split_types(k))
    cot = cotangent_candidate(k)
    if cot is not None:
        classes.add(cot)
    classes = frozenset(classes)
    if verdict.status is Status.UNIFORM:
        table = CLASSIFICATION_TABLE.get(two_k)
        if table is None or table != classes:
            raise AssertionError(
                f"enumerated classes disagree with the stored table at "
                f"branch degree {two_k}: {classes} vs {table}")
    return ClassificationEntry(branch_degree=two_k, classes=classes,
                               status=verdict.status, verdict=verdict)


@dataclass(frozen=True)
class GeometryNote:
    """Description of the covering surface and of the covering map."""

    surface: str
    covering_map: str


_GEOMETRY_NOTES = {
    (4, SplitBundle(-1, -1)): GeometryNote(
        surface="the Steiner cubic surface in P^4",
        covering_map="projection to the plane"),
    (6, SplitBundle(-1, -2)): GeometryNote(
        surface="a cubic hypersurface in P^3",
        covering_map=""),
    (6, CotangentTwist(0)): GeometryNote(
        surface="birationally B x P^1 for an elliptic curve B",
        covering_map=""),
    (8, SplitBundle(-2, -2)): GeometryNote(
        surface="the blow-up of P^1 x P^1 at nine points",
        covering_map="given by curves of bidegree (2, 3) through the nine "
                     "base points"),
    (10, SplitBundle(-2, -3)): GeometryNote(
        surface="a quartic surface blown up at one point",
        covering_map="projection from the point"),
    (10, CotangentTwist(-1)): GeometryNote(
        surface="the 13-fold blow-up of the plane",
        covering_map="given by quartics through 13 base points imposing "
                     "only 12 conditions"),
    (12, SplitBundle(-2, -4)): GeometryNote(
        surface="a surface of general type with p_g = K^2 = 3",
        covering_map="the canonical map"),
    (12, SplitBundle(-3, -3)): GeometryNote(
        surface="an elliptic surface over P^1 (elliptic structure given by "
                "the canonical map)",
        covering_map="defined by a linear system of genus-4 trisections of "
                     "the elliptic structure"),
    (14, SplitBundle(-3, -4)): GeometryNote(
        surface="a quintic surface in P^3 with one double point",
        covering_map="projection from the double point"),
    (14, CotangentTwist(-2)): GeometryNote(
        surface="a surface with q = 0, p_g = 3, K^2 = 2 and Euler "
                "number 46",
        covering_map=""),
}


def geometry_notes(two_k: int, bundle: BundleClass) -> Optional[GeometryNote]:
    """Geometric description of the covering surface for a classified pair.

    Returns None for classified pairs without a recorded description
    (branch degrees 2 and 18); raises UnknownEntry for pairs outside the
    classification.
    """
    entry = classify_branch_degree(two_k)
    if bundle not in entry.classes:
        raise UnknownEntry(
            f"{bundle} is not among the classes of branch degree {two_k}")
    return _GEOMETRY_NOTES.get((two_k, bundle))


def cubic_section_rows() -> list[tuple[int, SplitBundle, int]]:
    """All classified split rows that are cubic sections of a line bundle
    total space, with their twist m."""
    out = []
    for two_k, classes in sorted(CLASSIFICATION_TABLE.items()):
        for cls in classes:
            if isinstance(cls, SplitBundle):
                m = cubic_section_twist(cls.t1, cls.t2)
                if m is not None:
                    out.append((two_k, cls, m))
    return out
