"""Kernel backend selection.

ENTROREDUCE_BACKEND picks the implementation of the hot loops:
  "numba" -- @njit-compiled kernels (error if numba is unavailable)
  "numpy" -- pure numpy/python fallback
  unset / "auto" -- numba when importable, else numpy
"""
import os

_ENV = "ENTROREDUCE_BACKEND"


def get_backend(name: str):
    """Return the backend module for an explicit name ('numba' or 'numpy')."""
    if name == "numba":
        from . import _numba

        return _numba
    if name == "numpy":
        from . import _numpy

        return _numpy
    raise ValueError(f"unknown backend {name!r}")


def _select():
    choice = os.environ.get(_ENV, "auto").strip().lower() or "auto"
    if choice not in ("auto", "numba", "numpy"):
        raise RuntimeError(f"{_ENV} must be 'numba' or 'numpy', got {choice!r}")
    if choice in ("auto", "numba"):
        try:
            return get_backend("numba")
        except ImportError:
            if choice == "numba":
                raise
    return get_backend("numpy")


_active = _select()

BACKEND = _active.BACKEND_NAME
huffman_merges = _active.huffman_merges
rgs_extremes = _active.rgs_extremes
coupling_vertex_min = _active.coupling_vertex_min
