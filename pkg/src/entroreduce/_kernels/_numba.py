"""numba backend: the shared kernel sources compiled with @njit."""
from numba import njit

from . import _impl

BACKEND_NAME = "numba"

huffman_merges = njit(cache=True)(_impl.huffman_merges)
rgs_extremes = njit(cache=True)(_impl.rgs_extremes)
coupling_vertex_min = njit(cache=True)(_impl.coupling_vertex_min)
