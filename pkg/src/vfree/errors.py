"""Exception hierarchy with stable one-line error codes.

Every error carries a ``code`` string that the CLI prints verbatim on
stderr, so scripts can match on it without parsing prose.
"""


class VfreeError(Exception):
    """Base class for all library errors."""

    code = "Error"

    def __init__(self, message: str = ""):
        super().__init__(message)
        self.message = message

    def __str__(self) -> str:
        return f"{self.code}: {self.message}" if self.message else self.code


# --- graph construction ---------------------------------------------------

class FixedPointInvolution(VfreeError):
    code = "FixedPointInvolution"


class BrokenInvolution(VfreeError):
    code = "BrokenInvolution"


class IncidenceMismatch(VfreeError):
    code = "IncidenceMismatch"


class DanglingVertexRef(VfreeError):
    code = "DanglingVertexRef"


# --- graph operations -----------------------------------------------------

class NotConnected(VfreeError):
    code = "NotConnected"


class UnknownRoot(VfreeError):
    code = "UnknownRoot"


class PartialConflict(VfreeError):
    code = "PartialConflict"


# --- graph-of-groups validation / parsing ---------------------------------

class GogSyntaxError(VfreeError):
    code = "SyntaxError"


class EdgeOrderNotSymmetric(VfreeError):
    code = "EdgeOrderNotSymmetric"


class DivisibilityViolation(VfreeError):
    code = "DivisibilityViolation"


class EmptyGraph(VfreeError):
    code = "Empty"


class NotNormalized(VfreeError):
    code = "NotNormalized"


# --- normalization --------------------------------------------------------

class NotTrivial(VfreeError):
    code = "NotTrivial"


class NotTreeEdge(VfreeError):
    code = "NotTreeEdge"


# --- invariants and counting ----------------------------------------------

class NonIntegralRank(VfreeError):
    code = "NonIntegralRank"


class NonIntegralCount(VfreeError):
    code = "NonIntegralCount"


class NonPositiveCount(VfreeError):
    code = "NonPositiveCount"


class NonIntegralTheta(VfreeError):
    code = "NonIntegralTheta"


class UnknownClass(VfreeError):
    code = "UnknownClass"


class MissingParam(VfreeError):
    code = "MissingParam"


class WrongRank(VfreeError):
    code = "WrongRank"


# --- classification --------------------------------------------------------

class UnclassifiableShape(VfreeError):
    code = "UnclassifiableShape"


# --- oracles ----------------------------------------------------------------

class DegreeTooLarge(VfreeError):
    code = "DegreeTooLarge"


class NonExactDivision(VfreeError):
    code = "NonExactDivision"


class TooLarge(VfreeError):
    code = "TooLarge"
