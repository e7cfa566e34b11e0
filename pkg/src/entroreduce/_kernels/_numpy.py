"""Pure-numpy backend for the hot kernels.

The merge reduction stays as the shared O(n) python loop (nothing to
vectorize); the two exhaustive scans are replaced by batched array passes:
partitions come from the cached assignment table, spanning trees from a
mixed-radix decode of all parent assignments with pointer-jumping cycle
detection.
"""
import numpy as np

from ..partitions import partition_assignments
from . import _impl

BACKEND_NAME = "numpy"

huffman_merges = _impl.huffman_merges

_CHUNK = 1 << 15


def _row_entropies(z):
    t = np.zeros_like(z)
    np.log2(z, out=t, where=z > 0.0)
    return -(z * t).sum(axis=1)


def rgs_extremes(p, m):
    """Vectorized scan over the cached partition table for (n, m)."""
    p = np.asarray(p, dtype=np.float64)
    n = p.shape[0]
    codes = partition_assignments(n, m)
    total = codes.shape[0]
    h_min = np.inf
    h_max = -np.inf
    code_min = None
    code_max = None
    for start in range(0, total, _CHUNK):
        chunk = codes[start : start + _CHUNK]
        rows = np.arange(chunk.shape[0])
        z = np.zeros((chunk.shape[0], m))
        for i in range(n):
            z[rows, chunk[:, i]] += p[i]
        h = _row_entropies(z)
        lo = int(np.argmin(h))
        hi = int(np.argmax(h))
        if h[lo] < h_min:
            h_min = float(h[lo])
            code_min = chunk[lo].astype(np.int64)
        if h[hi] > h_max:
            h_max = float(h[hi])
            code_max = chunk[hi].astype(np.int64)
    return h_min, code_min, h_max, code_max, total


def coupling_vertex_min(r, c, tol):
    """Batched spanning-tree scan; see _impl.coupling_vertex_min for the model."""
    r = np.asarray(r, dtype=np.float64)
    c = np.asarray(c, dtype=np.float64)
    m, n = r.shape[0], c.shape[0]
    nv = m + n
    # mixed radix: digits 0..m-2 are col picks (base n), digits m-1.. are row picks (base m)
    radix = np.array([n] * (m - 1) + [m] * n, dtype=np.int64)
    total = int(np.prod(radix))
    sign = np.concatenate([np.ones(m), -np.ones(n)])
    b_vec = np.concatenate([r, -c])
    jumps = max(1, int(np.ceil(np.log2(nv))))
    best = np.inf
    best_mat = None
    found = False
    for start in range(0, total, _CHUNK):
        ids = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        bsz = ids.shape[0]
        digits = np.empty((bsz, radix.shape[0]), dtype=np.int64)
        rem = ids.copy()
        for k in range(radix.shape[0] - 1, -1, -1):
            digits[:, k] = rem % radix[k]
            rem //= radix[k]
        par = np.zeros((bsz, nv), dtype=np.int64)  # root's parent is itself
        if m > 1:
            par[:, 1:m] = m + digits[:, : m - 1]
        par[:, m:] = digits[:, m - 1 :]
        # cycle detection: pointer-jump; acyclic walks all land on the root
        reach = par.copy()
        for _ in range(jumps):
            reach = np.take_along_axis(reach, reach, axis=1)
        acyclic = (reach == 0).all(axis=1)
        # depth of each vertex = number of hops to the root
        anc = np.broadcast_to(np.arange(nv), (bsz, nv)).copy()
        depth = np.zeros((bsz, nv), dtype=np.int64)
        for _ in range(nv):
            depth += anc != 0
            anc = np.take_along_axis(par, anc, axis=1)
        # subtree sums, children pushed into parents level by level
        tsum = np.broadcast_to(b_vec, (bsz, nv)).copy()
        for lev in range(nv, 0, -1):
            bi, vi = np.nonzero(depth == lev)
            if bi.size:
                np.add.at(tsum, (bi, par[bi, vi]), tsum[bi, vi])
        flow = tsum * sign
        flow[:, 0] = 0.0
        feasible = acyclic & (flow.min(axis=1) >= -tol)
        if not feasible.any():
            continue
        x = np.clip(flow[feasible], 0.0, None)
        h = _row_entropies(x)
        rows = np.nonzero(feasible)[0]
        near = h <= min(best, float(h.min())) + 1e-12
        for ri, hv in zip(rows[near], h[near]):
            mat = np.zeros((m, n))
            v = np.arange(1, nv)
            pv = par[ri, 1:]
            fr = np.where(v < m, v, pv)
            fc = np.where(v < m, pv - m, v - m)
            mat[fr, fc] = np.clip(flow[ri, 1:], 0.0, None)
            hv = float(hv)
            take = hv < best - 1e-12 or not found
            if not take and hv <= best + 1e-12:
                # entropy tie: lexicographic matrix order decides
                a = best_mat.ravel()
                bvals = mat.ravel()
                neq = np.nonzero(np.abs(bvals - a) > 1e-15)[0]
                take = bool(neq.size) and bvals[neq[0]] < a[neq[0]]
            if take:
                if hv < best:
                    best = hv
                best_mat = mat
                found = True
    return best, best_mat, found
