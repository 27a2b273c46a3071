"""Exception hierarchy shared by the solvers and the CLI."""


class GraphError(ValueError):
    """Malformed graph input (self-loop, duplicate edge, bad index)."""


class NotATreeError(GraphError):
    pass


class DisconnectedGraphError(GraphError):
    pass


class CompleteGraphError(GraphError):
    """Raised where a block-cutpoint tree is requested for a complete graph."""


class NotBlockGraphError(GraphError):
    """Some biconnected component is not a clique.

    ``witness`` holds a non-adjacent pair ``(u, v)`` lying in the same block.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class AssignmentError(ValueError):
    """Assignment has the wrong domain, bad labels, or fails a required check."""


class OracleSizeError(ValueError):
    """Instance exceeds the brute-force size limit."""
