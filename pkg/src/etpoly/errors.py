"""Exception hierarchy.

Every error raised by the library derives from :class:`EtError`; the CLI
reports the class name as the violated invariant.
"""


class EtError(Exception):
    """Base class for all library errors."""


# posets
class NotGraded(EtError):
    pass


class RankSkip(NotGraded):
    """A cover relation spans two or more ranks."""


class NoBoundedBottom(NotGraded):
    pass


class NoBoundedTop(NotGraded):
    pass


class NotComparable(EtError):
    pass


class NotEulerian(EtError):
    pass


class NotALattice(EtError):
    pass


class BadRankIndex(EtError):
    pass


class WrongDimension(EtError):
    pass


class BadT(EtError):
    pass


# geometry
class DimensionMismatch(EtError):
    pass


class VertexOutside(EtError):
    pass


class DanglingFacet(EtError):
    pass


class NotEulerianIncidence(EtError):
    pass


class CenterNotInterior(EtError):
    pass


class DegenerateFace(EtError):
    pass


# constructions
class BadParams(EtError):
    pass


class ApexNotBeyond(EtError):
    pass


class ApexNotBeneathOthers(ApexNotBeyond):
    """The apex is beyond some facet other than the target facet."""


class PlacementFailed(EtError):
    pass


class CutSearchFailed(EtError):
    pass


class CutInvariantViolated(EtError):
    pass


class NotTangent(EtError):
    pass


class FacetViolated(EtError):
    pass


# subdivision
class NotAChain(EtError):
    pass


class RankCollision(NotAChain):
    pass


class NoMiddleRankPath(EtError):
    pass


# formulas / io
class OutOfDomain(EtError):
    pass


class ParseError(EtError):
    pass
