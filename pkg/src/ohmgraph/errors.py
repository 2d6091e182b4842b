"""Exception types.  Every error raised on purpose by the library derives from
:class:`OhmgraphError`; the CLI maps :class:`CapExceeded` to exit code 3 and
the rest to exit code 2 unless a command treats them as a negative verdict."""


class OhmgraphError(Exception):
    pass


class CapExceeded(OhmgraphError):
    """An enumeration would exceed its configured size cap."""


class TooLarge(CapExceeded):
    pass


# netcore
class InteriorSingular(OhmgraphError):
    """An interior component is detached from every boundary node."""


class Disconnected(OhmgraphError):
    pass


class BadSite(OhmgraphError, ValueError):
    """The requested electrical transformation does not apply at this site."""


class NotEmbedded(OhmgraphError):
    pass


class NotPlanar(OhmgraphError):
    pass


# metrics / grassmann
class NotKalmanson(OhmgraphError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class InvalidResponse(OhmgraphError, ValueError):
    pass


class AllZero(OhmgraphError):
    pass


# reconstruct
class Degenerate(OhmgraphError):
    pass


class NotInvolution(OhmgraphError):
    pass


class ColoringFailure(OhmgraphError):
    pass


class NotTerminated(OhmgraphError):
    pass


class Inconsistent(OhmgraphError):
    pass


class NonPositiveWeight(OhmgraphError):
    pass


# io / cli
class FormatError(OhmgraphError, ValueError):
    """Malformed input file or configuration."""
