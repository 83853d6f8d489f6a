import warnings


class FracSliceError(Exception):
    """Base class for every error raised by fracslice."""


class DimensionMismatchError(FracSliceError, ValueError):
    pass


class SingularityError(FracSliceError, ZeroDivisionError):
    pass


class DomainError(FracSliceError, ValueError):
    pass


class StencilError(DomainError):
    """A finite-difference stencil does not fit inside the domain."""


class NonFiniteSampleError(FracSliceError, ValueError):
    pass


class ContourError(FracSliceError, ValueError):
    pass


class FitError(FracSliceError, ValueError):
    pass


class ConfigError(FracSliceError, ValueError):
    pass


class UnknownScenarioError(FracSliceError, KeyError):
    pass


class ErrorMessage(object):
    # Only print the fallback note one time per location.
    printed_fd_fallback = set()

    @classmethod
    def fd_fallback(cls, where=""):
        if where in cls.printed_fd_fallback:
            return
        cls.printed_fd_fallback.add(where)
        message = "No analytic partial derivatives given"
        if where != "":
            message = "{} for {}".format(message, where)
        warnings.warn(
            "{}; using finite differences. Results carry the extra "
            "discretization error.".format(message)
        )
