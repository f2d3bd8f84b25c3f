"""Exception hierarchy. Every error raised on bad input derives from RamseyError."""


class RamseyError(ValueError):
    """Base class. ``line`` is set when the error is tied to an input line."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


# coloring-core
class MissingEdge(RamseyError):
    pass


class DuplicateEdge(RamseyError):
    pass


class ColorOutOfRange(RamseyError):
    pass


class VertexOutOfRange(RamseyError):
    pass


class NotAPermutation(RamseyError):
    pass


class EmptySubset(RamseyError):
    pass


class DistanceClassesNotAPartition(RamseyError):
    pass


# constructions
class K1TooSmall(RamseyError):
    pass


class EmptyBase(RamseyError):
    pass


class TTooSmall(RamseyError):
    pass


class StretchedColorInvalid(RamseyError):
    pass


class TooFewBaseColors(RamseyError):
    pass


class BoundsInvalid(RamseyError):
    pass


# verifier
class LengthMismatch(RamseyError):
    pass


class InstanceTooLargeForOracle(RamseyError):
    pass


class BudgetExceeded(RamseyError):
    pass


# bounds engine
class ParseError(RamseyError):
    pass


class InvalidBound(RamseyError):
    pass


class TargetInvalid(RamseyError):
    pass


class NoBoundDerivable(RamseyError):
    pass


class MissingWitness(RamseyError):
    pass


# catalog io
class BadHeader(RamseyError):
    pass


class BadVersion(RamseyError):
    pass


class UnknownSeed(RamseyError):
    pass
