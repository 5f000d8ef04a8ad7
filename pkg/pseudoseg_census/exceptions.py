"""
Error types for the pseudoseg_census package.

Every domain failure raises a subclass of CensusError, which is a ValueError
so callers that only know about ValueError still catch it.
"""


class CensusError(ValueError):
    """Base class for all domain errors."""


class Degenerate(CensusError):
    """
    Two curves are not in generic position.

    Attributes:
        witness (dict): Labels, segment indices and x-coordinate of the contact.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness or {}


class InvalidThroughs(CensusError):
    """Through-curves cross each other or fail to span the strip."""


class BadParams(CensusError):
    """Construction parameters outside their admissible range."""


class ChoiceMismatch(CensusError):
    """A detour choice does not match the incidences of its grid."""


class RealizationFailure(CensusError):
    """A geometric realization failed its own postcondition check."""


class SizeMismatch(CensusError):
    """Two subsets live on ground sets of different size."""


class BudgetExceeded(CensusError):
    """An exact exponential search would exceed the configured work budget."""


class MalformedStream(CensusError):
    """A codec bitstream cannot be decoded."""


class ShatterHypothesisFailed(CensusError):
    """
    A set family violates the primal shatter bound c*z^d.

    Attributes:
        z (int): The first failing z.
        value (int): The primal shatter value at z.
    """

    def __init__(self, z, value, bound):
        super().__init__(
            f"primal shatter function is {value} at z={z}, above the bound {bound}"
        )
        self.z = z
        self.value = value
        self.bound = bound


class SharedCrossingX(CensusError):
    """Two events of a sweep share an x-coordinate."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness or {}


class SharedEndpointX(CensusError):
    """Two interior endpoints share an x-coordinate."""


class NotDoubleGrounded(CensusError):
    """A curve does not start and end on the two grounds."""


class NotPseudoSegments(CensusError):
    """Some pair of curves crosses more than once."""


class TooLarge(CensusError):
    """An exhaustive enumeration was requested beyond its supported size."""


class UnknownWire(CensusError):
    """A wire label is not part of the wiring diagram."""


class RetryLimit(CensusError):
    """A Las Vegas loop ran out of attempts."""


class FormatError(CensusError):
    """An input file does not follow its documented format."""
