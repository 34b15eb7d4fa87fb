"""Exception types shared across the package."""


class SelfLoopError(ValueError):
    """An edge was given with both endpoints equal."""


class UnknownVertexError(KeyError):
    """A vertex id was queried that the graph or index has never seen."""


class UnknownCliqueError(KeyError):
    """A clique id was referenced that is not live in the index."""


class DuplicateCliqueError(ValueError):
    """An added clique has the same member set as a stored one."""


class FormatError(ValueError):
    """An input file does not follow its documented text format."""
