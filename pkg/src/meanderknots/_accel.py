"""Backend switch for the hot kernels.

Every kernel exists twice: a numba ``@njit`` version and a plain numpy
version.  ``MEANDERKNOTS_NO_NUMBA=1`` (or a missing numba) selects numpy.
"""
import os

try:
    import numba
except ImportError:  # pragma: no cover
    numba = None

_env_off = os.environ.get("MEANDERKNOTS_NO_NUMBA", "").strip().lower() not in ("", "0", "false", "no")
_backend = "numpy" if (numba is None or _env_off) else "numba"


def njit(*args, **kwargs):
    kwargs.setdefault("cache", True)
    if numba is None:  # pragma: no cover
        def wrap(f):
            return f
        return wrap(args[0]) if args and callable(args[0]) else wrap
    return numba.njit(*args, **kwargs)


def backend():
    return _backend


def set_backend(name):
    """Switch kernels at runtime; returns the previous backend."""
    global _backend
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "numba" and numba is None:  # pragma: no cover
        raise RuntimeError("numba is not installed")
    old, _backend = _backend, name
    return old


def use_numba():
    return _backend == "numba"
