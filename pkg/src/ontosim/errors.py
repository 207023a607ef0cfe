"""Exception types raised while loading ontologies and computing similarity."""


class OntologyError(ValueError):
    """Base class for every error this package raises on bad input."""


class FormatError(OntologyError):
    """Malformed ontology document or matrix file."""


class NoRoot(OntologyError):
    pass


class MultipleRoots(OntologyError):
    pass


class CycleDetected(OntologyError):
    pass


class UnreachableNode(OntologyError):
    pass


class DuplicateEdge(OntologyError):
    pass


class UnknownNodeInEdge(OntologyError):
    pass


class UnknownNode(OntologyError, KeyError):
    def __str__(self) -> str:
        return ValueError.__str__(self)


class NotAnArc(OntologyError):
    pass


class Unreachable(OntologyError):
    """The root cannot be reached from the start node."""


class DifferentRoots(OntologyError):
    pass


class DegOutOfRange(OntologyError):
    pass
