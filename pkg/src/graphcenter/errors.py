"""Exception types raised across the package.

Every error derives from :class:`GraphCenterError`, which is a ``ValueError``
so callers that only care about "bad input" can catch that.
"""


class GraphCenterError(ValueError):
    pass


# graph construction
class VertexOutOfRange(GraphCenterError):
    pass


class SelfLoop(GraphCenterError):
    pass


class OrderTooLarge(GraphCenterError):
    pass


# metrics
class EmptyGraph(GraphCenterError):
    pass


class DisconnectedGraph(GraphCenterError):
    pass


# constructions
class PrescriptionOutOfRange(GraphCenterError):
    pass


class EmptyH(GraphCenterError):
    pass


class NotSingleCenter(GraphCenterError):
    pass


class RadiusTooSmall(GraphCenterError):
    pass


class NotSelfCentered(GraphCenterError):
    pass


class UniversalVertexInY(GraphCenterError):
    pass


# interchange formats
class FormatError(GraphCenterError):
    pass


class MalformedHeader(FormatError):
    pass


class BadCharacter(FormatError):
    pass


class TruncatedBitstream(FormatError):
    pass


class EdgeOutOfRange(FormatError):
    pass
