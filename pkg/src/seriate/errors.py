"""Exception types raised by the model kernel, checker, and notation layer."""


class SeriateError(Exception):
    """Base class for all library errors."""


class InvalidObject(SeriateError):
    """An object violates its own structural invariants."""


# ---------------------------------------------------------------- core model

class DimensionMismatch(SeriateError):
    pass


class StabilityViolation(SeriateError):
    """A sub-line with the E pair of an existing interval but different members."""


class ConsistencyViolation(SeriateError):
    """Asserting the object would contradict an existing object."""


class SharedInterior(SeriateError):
    pass


class NoSharedEndpoint(SeriateError):
    pass


class MultipleShared(SeriateError):
    pass


class NotInterior(SeriateError):
    pass


class DuplicateCut(SeriateError):
    pass


class NotMember(SeriateError):
    pass


class NotDistinct(SeriateError):
    pass


class EndpointMismatch(SeriateError):
    pass


# ---------------------------------------------------------------- dimension 2

class SameRow(SeriateError):
    pass


class PointNotSubsumed(SeriateError):
    pass


class SharedInteriorRow(SeriateError):
    pass


class NoSharedEndRow(SeriateError):
    pass


class NotInteriorRow(SeriateError):
    pass


class IndexOutOfRange(SeriateError):
    pass


class NotOnBoundary(SeriateError):
    pass


class NotDisjoint(SeriateError):
    pass


class CoverFailure(SeriateError):
    pass


class RangeMismatch(SeriateError):
    pass


class Entangled(SeriateError):
    pass


class ModeMismatch(SeriateError):
    pass


# ---------------------------------------------------------------- areas

class NotConnected(SeriateError):
    pass


class NotSimplyConnected(SeriateError):
    pass


class NoCommonLine(SeriateError):
    pass


class MultipleCommonLines(SeriateError):
    pass


class CellOverlap(SeriateError):
    pass


class ChordNotAnchored(SeriateError):
    pass


class ChordTouchesBoundary(SeriateError):
    pass


class NotSeparating(SeriateError):
    pass


class NotACycleInArea(SeriateError):
    pass


class EmptyInterior(SeriateError):
    pass


class NoInteriorWitness(SeriateError):
    pass


class NotInternallyDisjoint(SeriateError):
    pass


class DisconnectedCountry(SeriateError):
    pass


class EmptyCountry(SeriateError):
    pass


# ---------------------------------------------------------------- notation

class LexError(SeriateError):
    def __init__(self, message, pos):
        super().__init__(f"{message} (at {pos})")
        self.pos = pos


class ParseError(SeriateError):
    def __init__(self, message, pos):
        super().__init__(f"{message} (at {pos})")
        self.pos = pos


class NegatedMapTarget(ParseError):
    """A mapping arrow pointing into a negation is not a wellformed statement."""


class UnboundName(SeriateError):
    pass


class DimensionMix(SeriateError):
    pass


class BadDifference(SeriateError):
    """Subtraction where the second operand is not a referent subset of the first."""


# ---------------------------------------------------------------- checker / cli

class BoundsTooLarge(SeriateError):
    pass


class ModelLoadError(SeriateError):
    """A model file failed validation; the message names the violated invariant."""
