"""Exception hierarchy shared by every layer of the package."""


class ComblefError(Exception):
    pass


class MalformedSimplexError(ComblefError, ValueError):
    pass


class DomainMismatchError(ComblefError, ValueError):
    """Two cell sets (or a map and a cell set) live on different complexes."""


class SimplicialityError(ComblefError, ValueError):
    def __init__(self, simplex, image):
        self.simplex = simplex
        self.image = image
        super().__init__(
            f"vertex map is not simplicial: {simplex} maps onto {image}, "
            "which is not a simplex of the complex"
        )


class ParseError(ComblefError, ValueError):
    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = f"{path}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)


class PreconditionError(ComblefError):
    """A hypothesis needed for an identity or certificate does not hold.

    ``report`` carries the compatibility report when one was computed.
    """

    def __init__(self, message, report=None):
        self.report = report
        super().__init__(message)


class NotASubcomplexError(PreconditionError):
    pass


class FrontierFixedPointError(PreconditionError):
    pass


class NotIsolatedError(PreconditionError):
    pass
