class MeanderKnotsError(Exception):
    """Base class; the CLI maps these to exit status 1."""


class MalformedInputError(MeanderKnotsError, ValueError):
    pass


class NotAMeanderError(MeanderKnotsError, ValueError):
    pass


class RealizabilityError(MeanderKnotsError):
    """The Gauss code has no planar realization."""


class DomainError(MeanderKnotsError, ValueError):
    pass


class ParityError(DomainError):
    pass


class CatalogLoadError(MeanderKnotsError):
    pass
