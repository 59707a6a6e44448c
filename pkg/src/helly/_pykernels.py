"""Pure numpy implementations of the hot kernels.

Every function here has a twin with the same signature and the same
output (bit for bit) in the compiled ``_kernels`` extension. Graphs are
passed in CSR form: ``indptr`` (int64, length n+1) and ``indices`` (int32).
"""

import numpy as np

NAME = "python"


def _gather_neighbors(indptr, indices, frontier):
    starts = indptr[frontier]
    lens = indptr[frontier + 1] - starts
    total = int(lens.sum())
    if total == 0:
        return np.empty(0, dtype=indices.dtype), lens
    offs = np.repeat(starts - np.cumsum(lens) + lens, lens) + np.arange(total)
    return indices[offs], lens


def bfs(indptr, indices, source):
    n = len(indptr) - 1
    dist = np.full(n, -1, dtype=np.int32)
    dist[source] = 0
    frontier = np.array([source], dtype=np.int64)
    d = 0
    while frontier.size:
        d += 1
        nbrs, _ = _gather_neighbors(indptr, indices, frontier)
        nbrs = nbrs[dist[nbrs] < 0]
        if not nbrs.size:
            break
        nbrs = np.unique(nbrs)
        dist[nbrs] = d
        frontier = nbrs.astype(np.int64)
    return dist


def intersect_balls(indptr, indices, sources, radius, mask):
    """AND ``mask`` with the ball of ``radius`` around every source.

    Returns the new mask and the number of BFS runs performed. Repeated
    sources are searched once; the loop stops once the mask is empty.
    """
    mask = np.array(mask, dtype=bool, copy=True)
    runs = 0
    seen = set()
    for s in sources:
        if not mask.any():
            break
        s = int(s)
        if s in seen:
            continue
        seen.add(s)
        dist = bfs(indptr, indices, s)
        runs += 1
        mask &= (dist >= 0) & (dist <= radius)
    return mask, runs


def _edge_arrays(indptr, indices):
    n = len(indptr) - 1
    rows = np.repeat(np.arange(n, dtype=np.int64), np.diff(indptr))
    return rows, indices.astype(np.int64)


def _subset(a, b):
    """Row-wise test that bit rows ``a`` are contained in bit rows ``b``."""
    return ~np.any(a & ~b, axis=1)


def _first_per_row(rows, ok):
    """Map row -> position of its first True entry (rows sorted ascending)."""
    hit = np.flatnonzero(ok)
    r, first = np.unique(rows[hit], return_index=True)
    return r, hit[first]


def gate_tables(indptr, indices, pivot, dist):
    """Gates and pseudo-gates for every vertex at distance >= 2 from ``pivot``.

    Returns ``(gate, pgate, gate_fallbacks, pgate_fallbacks, fail_vertex,
    fail_kind)`` where ``fail_kind`` is 0 on success, 1 when a gate is
    missing and 2 when a pseudo-gate is missing.
    """
    n = len(indptr) - 1
    dist = np.asarray(dist, dtype=np.int64)
    nbr_v = indices[indptr[pivot]:indptr[pivot + 1]].astype(np.int64)
    deg_v = nbr_v.size
    words = max(1, (deg_v + 63) // 64)
    pos = np.full(n, -1, dtype=np.int64)
    pos[nbr_v] = np.arange(deg_v)

    gate = np.full(n, -1, dtype=np.int32)
    pgate = np.full(n, -1, dtype=np.int32)
    maxd = int(dist.max()) if n else 0
    if maxd < 2:
        return gate, pgate, 0, 0, -1, 0

    trace = np.zeros((n, words), dtype=np.uint64)
    reach = np.zeros((n, words), dtype=np.uint64)
    one = np.uint64(1)
    trace[nbr_v, pos[nbr_v] // 64] = one << (pos[nbr_v] % 64).astype(np.uint64)

    rows, cols = _edge_arrays(indptr, indices)
    drow, dcol = dist[rows], dist[cols]
    # reach of a layer-1 vertex x: N[x] restricted to N(v)
    reach[nbr_v] = trace[nbr_v]
    sel = (drow == 1) & (dcol == 1)
    np.bitwise_or.at(reach, rows[sel], trace[cols[sel]])

    par = dcol == drow - 1
    same = dcol == drow
    layer_edges_par = [None] * (maxd + 1)
    layer_edges_same = [None] * (maxd + 1)
    for d in range(2, maxd + 1):
        at = drow == d
        layer_edges_par[d] = np.flatnonzero(at & par)
        layer_edges_same[d] = np.flatnonzero(at & same)

    for d in range(2, maxd + 1):
        e = layer_edges_par[d]
        np.bitwise_or.at(trace, rows[e], trace[cols[e]])
    for d in range(2, maxd + 1):
        layer = np.flatnonzero(dist == d)
        reach[layer] = trace[layer]
        e = layer_edges_par[d]
        np.bitwise_or.at(reach, rows[e], reach[cols[e]])
        e = layer_edges_same[d]
        np.bitwise_or.at(reach, rows[e], trace[cols[e]])

    gate_fb = 0
    pgate_fb = 0
    layer2 = np.flatnonzero(dist == 2)
    gate[layer2] = layer2
    for d in range(2, maxd + 1):
        e = layer_edges_par[d]
        er, ec = rows[e], cols[e]
        layer = np.flatnonzero(dist == d)
        if d >= 3:
            cand = gate[ec].astype(np.int64)
            ok = _subset(trace[er], trace[cand])
            r, idx = _first_per_row(er, ok)
            gate[r] = cand[idx]
            for w in layer[gate[layer] < 0]:
                z = _gate_search(indptr, indices, dist, trace, layer2, int(w), d)
                if z < 0:
                    return gate, pgate, gate_fb, pgate_fb, int(w), 1
                gate[w] = z
                gate_fb += 1
            cand = pgate[ec].astype(np.int64)
        else:
            cand = ec
        ok = _subset(reach[er], reach[cand])
        r, idx = _first_per_row(er, ok)
        pgate[r] = cand[idx]
        for w in layer[pgate[layer] < 0]:
            x = _pgate_search(trace, reach, nbr_v, int(w))
            if x < 0:
                return gate, pgate, gate_fb, pgate_fb, int(w), 2
            pgate[w] = x
            pgate_fb += 1
    return gate, pgate, gate_fb, pgate_fb, -1, 0


def _gate_search(indptr, indices, dist, trace, layer2, w, d):
    dw = bfs(indptr, indices, w)
    cand = layer2[dw[layer2] == d - 2]
    if not cand.size:
        return -1
    ok = _subset(np.broadcast_to(trace[w], (cand.size, trace.shape[1])), trace[cand])
    hit = np.flatnonzero(ok)
    return int(cand[hit[0]]) if hit.size else -1


def _pgate_search(trace, reach, nbr_v, w):
    bits = np.unpackbits(trace[w].view(np.uint8), bitorder="little")[: nbr_v.size]
    cand = nbr_v[np.flatnonzero(bits)]
    if not cand.size:
        return -1
    ok = _subset(np.broadcast_to(reach[w], (cand.size, reach.shape[1])), reach[cand])
    hit = np.flatnonzero(ok)
    return int(cand[hit[0]]) if hit.size else -1


def q_partial(indptr, indices, pivot, dist, gate, pgate, in_a, costs):
    """Per-neighbour ``q_minus`` and ``q_minus + q_eq`` for the pivot.

    Both arrays are aligned with the sorted neighbour list of ``pivot``.
    """
    n = len(indptr) - 1
    dist = np.asarray(dist)
    in_a = np.asarray(in_a, dtype=bool)
    wc = np.where(in_a, costs, 0).astype(np.int64)
    far = np.flatnonzero((dist >= 2) & in_a)
    alpha = np.zeros(n, dtype=np.int64)
    np.add.at(alpha, gate[far], wc[far])
    near = np.zeros(n, dtype=np.int64)
    np.add.at(near, pgate[far], wc[far])
    layer1 = dist == 1
    near[layer1] += wc[layer1]

    nbr_v = indices[indptr[pivot]:indptr[pivot + 1]].astype(np.int64)
    starts = indptr[nbr_v]
    lens = indptr[nbr_v + 1] - starts
    adj, _ = _gather_neighbors(indptr, indices, nbr_v)
    owner = np.repeat(np.arange(nbr_v.size), lens)
    q_minus = wc[nbr_v].copy()
    np.add.at(q_minus, owner, alpha[adj])
    q_le = near[nbr_v].copy()
    np.add.at(q_le, owner, near[adj])
    return q_minus, q_le


def apsp_reduce(indptr, indices, costs, rows):
    """Cost eccentricity, cost total distance and unit eccentricity per row."""
    rows = np.asarray(rows, dtype=np.int64)
    ecc_c = np.zeros(rows.size, dtype=np.int64)
    td_c = np.zeros(rows.size, dtype=np.int64)
    ecc_u = np.zeros(rows.size, dtype=np.int32)
    for i, s in enumerate(rows):
        d = bfs(indptr, indices, int(s)).astype(np.int64)
        w = costs * d
        ecc_c[i] = w.max()
        td_c[i] = w.sum()
        ecc_u[i] = d.max()
    return ecc_c, td_c, ecc_u


def distance_matrix(indptr, indices):
    n = len(indptr) - 1
    out = np.empty((n, n), dtype=np.int32)
    for s in range(n):
        out[s] = bfs(indptr, indices, s)
    return out
