import os
import warnings


def custom_formatwarning(msg, category, *args, **kwargs):
    # ignore everything except the message
    return "{}: {}\n".format(category.__name__, msg)


warnings.formatwarning = custom_formatwarning


def get_execution_engine():
    # Sample sweeps are independent, so the engine only decides how they fan
    # out. Python is always available and is the default.
    if "FRACSLICE_ENGINE" in os.environ:
        # .title allows variants like ray, RAY, Ray
        engine = os.environ["FRACSLICE_ENGINE"].title()
    else:
        engine = "Python"
    if engine == "Ray":
        try:
            import ray  # noqa: F401
        except ImportError:
            raise ImportError(
                "Please `pip install fracslice[ray]` to run sweeps on Ray."
            )
    elif engine == "Dask":
        try:
            import dask  # noqa: F401
            import distributed  # noqa: F401
        except ImportError:
            raise ImportError(
                "Please `pip install fracslice[dask]` to run sweeps on Dask."
            )
    elif engine != "Python":
        raise ImportError("Unrecognized execution engine: {}.".format(engine))
    return engine


__version__ = "0.1.0"
__execution_engine__ = get_execution_engine()

# We don't want this used outside of this file.
del get_execution_engine
