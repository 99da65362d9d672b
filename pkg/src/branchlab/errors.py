"""Exception hierarchy shared by all branchlab modules."""


class BranchlabError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(BranchlabError):
    """Malformed input document, scalar literal, or job description."""


class NotFiniteType(BranchlabError):
    """A Cartan matrix with a nonpositive principal minor."""


class NotIntegral(BranchlabError):
    """A weight that does not lie in the weight lattice."""


class NotDominant(BranchlabError):
    """A weight outside the dominant cone where dominance is required."""


class ResourceLimit(BranchlabError):
    """A computation exceeding the configured dimension cap."""


class NotInvolution(BranchlabError):
    """An involution candidate whose square is not the identity."""


class NotMaximallySplit(BranchlabError):
    """The split part of the Cartan subalgebra is not maximal."""


class InconsistentSigns(BranchlabError):
    """Sign data that cannot extend to an algebra automorphism."""


class NormalizationFailure(BranchlabError):
    """Root vectors cannot be rescaled to the required gauge."""


class StructureViolation(BranchlabError):
    """A structural identity of the real form failed; upstream bug."""


class IdentityViolation(BranchlabError):
    """An exact operator identity failed; construction bug."""


class CartanSearchFailure(BranchlabError):
    """No Cartan subalgebra of k found within the retry budget."""


class InvalidLabel(BranchlabError):
    """A character/weight label violating its integrality conditions."""
