"""Hot-loop kernels, written as plain nopython-compatible functions.

The numba backend compiles these verbatim with @njit; the numpy backend reuses
the merge loop directly (it is O(n) and pointer-chasing, nothing to vectorize)
and substitutes vectorized replacements for the two exhaustive scans.
"""
import math

import numpy as np


def huffman_merges(masses, m):
    """Greedy pairwise merge of the two smallest masses down to m survivors.

    `masses` must be sorted ascending; among equal values the earlier position
    wins, and merged masses queue behind existing equal ones. Because the
    input is sorted and merged values are produced in non-decreasing order,
    two FIFO queues replace a heap and the whole reduction is O(n).

    Returns (a, b, v): at step t the nodes a[t] and b[t] were merged into a
    new node of mass v[t]. Node ids 0..n-1 are input positions; the node made
    by step t has id n + t.
    """
    n = masses.shape[0]
    k = n - m
    out_a = np.empty(k, dtype=np.int64)
    out_b = np.empty(k, dtype=np.int64)
    out_v = np.empty(k, dtype=np.float64)
    merged = np.empty(k, dtype=np.float64)
    oi = 0  # next unconsumed original
    mi = 0  # head of the merged FIFO
    mc = 0  # merged produced so far
    for t in range(k):
        if oi < n and (mi >= mc or masses[oi] <= merged[mi]):
            ia, va = oi, masses[oi]
            oi += 1
        else:
            ia, va = n + mi, merged[mi]
            mi += 1
        if oi < n and (mi >= mc or masses[oi] <= merged[mi]):
            ib, vb = oi, masses[oi]
            oi += 1
        else:
            ib, vb = n + mi, merged[mi]
            mi += 1
        v = va + vb
        merged[mc] = v
        mc += 1
        out_a[t] = ia
        out_b[t] = ib
        out_v[t] = v
    return out_a, out_b, out_v


def rgs_extremes(p, m):
    """Scan every partition of n sorted probabilities into exactly m blocks.

    Enumerates restricted growth strings in lexicographic order, skipping
    prefixes that cannot reach m blocks, and tracks the minimum- and
    maximum-entropy block-sum vectors. Ties keep the lexicographically first
    code. Returns (h_min, code_min, h_max, code_max, count).
    """
    n = p.shape[0]
    a = np.zeros(n, dtype=np.int64)  # current code
    b = np.zeros(n, dtype=np.int64)  # running max of a[0..i]
    z = np.zeros(m, dtype=np.float64)
    # lexicographically smallest completion from position 1
    cur = 0
    for j in range(1, n):
        if n - j == (m - 1) - cur and cur < m - 1:
            cur += 1
            a[j] = cur
        else:
            a[j] = 0
        b[j] = cur
    h_min = np.inf
    h_max = -np.inf
    code_min = np.zeros(n, dtype=np.int64)
    code_max = np.zeros(n, dtype=np.int64)
    count = 0
    while True:
        for c in range(m):
            z[c] = 0.0
        for i in range(n):
            z[a[i]] += p[i]
        h = 0.0
        for c in range(m):
            v = z[c]
            if v > 0.0:
                h -= v * math.log2(v)
        count += 1
        if h < h_min:
            h_min = h
            for i in range(n):
                code_min[i] = a[i]
        if h > h_max:
            h_max = h
            for i in range(n):
                code_max[i] = a[i]
        # advance to the next code: rightmost position that can grow
        j = n - 1
        while j >= 1:
            lim = b[j - 1] + 1
            if lim > m - 1:
                lim = m - 1
            if a[j] < lim:
                break
            j -= 1
        if j < 1:
            break
        a[j] += 1
        b[j] = a[j] if a[j] > b[j - 1] else b[j - 1]
        cur = b[j]
        for jj in range(j + 1, n):
            if n - jj == (m - 1) - cur and cur < m - 1:
                cur += 1
                a[jj] = cur
            else:
                a[jj] = 0
            b[jj] = cur
    return h_min, code_min, h_max, code_max, count


def coupling_vertex_min(r, c, tol):
    """Minimum joint entropy over the vertices of a transportation polytope.

    r: row marginal masses (length m, all > 0); c: column marginals (length
    n, all > 0). Every vertex is the basic solution of a spanning tree of the
    complete bipartite graph rows x columns, so all trees are enumerated via
    parent assignments rooted at row 0 (cyclic assignments are rejected), each
    tree's edge flows are solved by subtree sums, infeasible (negative-flow)
    trees are discarded, and the minimum-entropy feasible matrix is kept.
    Ties within 1e-12 keep the lexicographically smallest matrix (row-major).

    Returns (h_min, best_matrix, found).
    """
    m = r.shape[0]
    n = c.shape[0]
    nv = m + n  # vertices: rows 0..m-1, then cols m..m+n-1; root is row 0
    nd = (m - 1) + n  # parent digits: rows 1..m-1 pick a col, cols pick a row
    dig = np.zeros(nd, dtype=np.int64)
    par = np.empty(nv, dtype=np.int64)
    depth = np.empty(nv, dtype=np.int64)
    order = np.empty(nv, dtype=np.int64)
    tsum = np.empty(nv, dtype=np.float64)
    flow = np.empty(nv, dtype=np.float64)
    best = np.inf
    best_mat = np.zeros((m, n), dtype=np.float64)
    cand = np.zeros((m, n), dtype=np.float64)
    found = False
    while True:
        par[0] = -1
        for i in range(1, m):
            par[i] = m + dig[i - 1]
        for j in range(n):
            par[m + j] = dig[m - 1 + j]
        # depth of every vertex; walks longer than nv edges mean a cycle
        acyclic = True
        for v in range(nv):
            d = 0
            u = v
            while u != 0:
                u = par[u]
                d += 1
                if d > nv:
                    acyclic = False
                    break
            if not acyclic:
                break
            depth[v] = d
        if acyclic:
            # children before parents: sort vertices by depth, deepest first
            pos = 0
            for lev in range(nv, -1, -1):
                for v in range(nv):
                    if depth[v] == lev:
                        order[pos] = v
                        pos += 1
            for i in range(m):
                tsum[i] = r[i]
            for j in range(n):
                tsum[m + j] = -c[j]
            feasible = True
            for t in range(nv):
                v = order[t]
                if v == 0:
                    continue
                x = tsum[v] if v < m else -tsum[v]
                if x < -tol:
                    feasible = False
                    break
                flow[v] = x if x > 0.0 else 0.0
                tsum[par[v]] += tsum[v]
            if feasible:
                h = 0.0
                for t in range(nv):
                    v = order[t]
                    if v == 0:
                        continue
                    x = flow[v]
                    if x > 0.0:
                        h -= x * math.log2(x)
                if h < best + 1e-12:
                    for i in range(m):
                        for j in range(n):
                            cand[i, j] = 0.0
                    for v in range(1, nv):
                        if v < m:
                            cand[v, par[v] - m] = flow[v]
                        else:
                            cand[par[v], v - m] = flow[v]
                    if h < best - 1e-12 or not found:
                        take = True
                    else:
                        # entropy tie: lexicographic matrix order decides
                        cmp = 0
                        for i in range(m):
                            for j in range(n):
                                diff = cand[i, j] - best_mat[i, j]
                                if diff < -1e-15:
                                    cmp = -1
                                    break
                                if diff > 1e-15:
                                    cmp = 1
                                    break
                            if cmp != 0:
                                break
                        take = cmp == -1
                    if take:
                        if h < best:
                            best = h
                        for i in range(m):
                            for j in range(n):
                                best_mat[i, j] = cand[i, j]
                        found = True
        # odometer over the parent digits
        k = nd - 1
        while k >= 0:
            lim = n if k < m - 1 else m
            dig[k] += 1
            if dig[k] < lim:
                break
            dig[k] = 0
            k -= 1
        if k < 0:
            break
    return best, best_mat, found
