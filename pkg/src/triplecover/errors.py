"""Exception hierarchy.

Two families matter for the CLI exit codes: ``InputError`` (malformed text,
exit code 2) and ``MathError`` (well-formed input rejected on mathematical
grounds, exit code 1).
"""


class TripleCoverError(Exception):
    """Base class for all library errors."""


class MathError(TripleCoverError):
    """Valid syntax, mathematically rejected."""


class InputError(TripleCoverError):
    """Malformed input text or unusable arguments."""


# -- exact algebra ----------------------------------------------------------

class DegreeMismatch(MathError):
    """Operands or supplied sections have incompatible degrees."""


class NotDivisible(MathError):
    """Exact polynomial division has a nonzero remainder."""


class BothZero(MathError):
    """gcd(0, 0) requested."""


class CharacteristicTooSmall(MathError):
    """The coefficient field characteristic divides a required denominator,
    or is too small for a derivative-based computation."""


# -- cover data -------------------------------------------------------------

class NotIntegral(MathError):
    """Cover algebra is not an integral domain (b = 0 or c = 0)."""


class BadTwists(MathError):
    """Twist pair leaves some required section with negative degree."""


class Degenerate(MathError):
    """Cubic cover data with s = 0 or t = 0 (degenerate or cyclic cover)."""


class NotMinimal(MathError):
    """Cubic equation admits a substitution z -> h*z reducing (s, t)."""


class NoAssignment(MathError):
    """No exponent pattern fits the given multiplicity pair."""


# -- bundles and classification --------------------------------------------

class DegenerateOnLine(MathError):
    """Presentation matrix drops rank after restriction to a line."""


class NotExpectedRank(MathError):
    """Kernel or cokernel does not have the rank the operation requires."""


class OddDegree(MathError):
    """Branch divisor degree must be even and at least 2."""


class UnknownEntry(MathError):
    """Queried (degree, bundle) pair is not part of the classification."""


# -- parsing ----------------------------------------------------------------

class ParseError(InputError):
    """Syntax error, with the offending position."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class NotHomogeneous(InputError):
    """Parsed expression mixes two total degrees."""

    def __init__(self, degree_a, degree_b, position=None):
        self.degrees = (degree_a, degree_b)
        self.position = position
        msg = f"expression is not homogeneous: degree {degree_a} meets degree {degree_b}"
        if position is not None:
            msg += f" (near position {position})"
        super().__init__(msg)


class CoverDefinitionError(InputError):
    """Malformed cover-definition file."""
