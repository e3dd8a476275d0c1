"""Exception hierarchy shared by every module of the package."""


class TopologyError(ValueError):
    """Base class for structural and geometric validation failures."""


# cell complexes
class DanglingReference(TopologyError):
    pass


class DuplicatePoint(TopologyError):
    pass


class DuplicateCell(TopologyError):
    pass


class DegenerateCell(TopologyError):
    pass


class MissingFace(TopologyError):
    pass


class EmptySubComplex(TopologyError):
    pass


class NotClosed(TopologyError):
    pass


# cycles
class MissingEdge(TopologyError):
    pass


class RepeatedVertex(TopologyError):
    pass


class SelfIntersecting(TopologyError):
    pass


class DegenerateArea(TopologyError):
    pass


class CycleMismatch(TopologyError):
    pass


class CollinearVertices(TopologyError):
    pass


# nerves and vortexes
class EmptyMemberList(TopologyError):
    pass


class NotStarShapedFromCentroid(TopologyError):
    pass


class NotNested(TopologyError):
    pass


class UnconnectedPair(TopologyError):
    pass


class InvalidBridge(TopologyError):
    pass


class ComplexMismatch(TopologyError):
    pass


# presentations
class WitnessNotOnCycle(TopologyError):
    pass


# convex bodies
class NotRectangle(TopologyError):
    pass


class NotConvex(TopologyError):
    pass


class SceneParseError(ValueError):
    """Input JSON is malformed (as opposed to well-formed but invalid)."""


# frame sequences
class InvalidFrames(TopologyError):
    pass
