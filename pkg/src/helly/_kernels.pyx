# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Same signatures and outputs as ``_pykernels``."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int32_t, int64_t, uint64_t
from libc.stdlib cimport malloc, free

cnp.import_array()

NAME = "cython"


cdef Py_ssize_t _bfs(const int64_t[::1] indptr, const int32_t[::1] indices,
                     Py_ssize_t source, int32_t[::1] dist, int32_t* queue,
                     int32_t limit) noexcept nogil:
    """Fill ``dist`` (pre-set to -1) up to depth ``limit``; return #visited."""
    cdef Py_ssize_t head = 0, tail = 1, j
    cdef int32_t u, x, du
    dist[source] = 0
    queue[0] = <int32_t>source
    while head < tail:
        u = queue[head]
        head += 1
        du = dist[u]
        if du >= limit:
            continue
        for j in range(indptr[u], indptr[u + 1]):
            x = indices[j]
            if dist[x] < 0:
                dist[x] = du + 1
                queue[tail] = x
                tail += 1
    return tail


def bfs(const int64_t[::1] indptr, const int32_t[::1] indices, Py_ssize_t source):
    cdef Py_ssize_t n = indptr.shape[0] - 1
    out = np.full(n, -1, dtype=np.int32)
    cdef int32_t[::1] dist = out
    cdef int32_t* queue = <int32_t*>malloc(max(n, 1) * sizeof(int32_t))
    if queue == NULL:
        raise MemoryError()
    with nogil:
        _bfs(indptr, indices, source, dist, queue, 2147483647)
    free(queue)
    return out


def intersect_balls(const int64_t[::1] indptr, const int32_t[::1] indices,
                    sources, int radius, mask):
    cdef Py_ssize_t n = indptr.shape[0] - 1
    out = np.array(mask, dtype=np.uint8, copy=True)
    cdef unsigned char[::1] m = out
    scratch = np.full(n, -1, dtype=np.int32)
    cdef int32_t[::1] dist = scratch
    cdef int64_t[::1] src = np.asarray(sources, dtype=np.int64)
    cdef int32_t* queue = <int32_t*>malloc(max(n, 1) * sizeof(int32_t))
    seen = np.zeros(n, dtype=np.uint8)
    cdef unsigned char[::1] done = seen
    cdef Py_ssize_t i, j, k, visited, alive = 0, runs = 0
    cdef int64_t s
    if queue == NULL:
        raise MemoryError()
    for i in range(n):
        alive += m[i] != 0
    with nogil:
        for i in range(src.shape[0]):
            if alive == 0:
                break
            s = src[i]
            if done[s]:
                continue
            done[s] = 1
            visited = _bfs(indptr, indices, s, dist, queue, radius)
            runs += 1
            # mark ball members with -2, clear everything else
            for j in range(visited):
                dist[queue[j]] = -2
            alive = 0
            for k in range(n):
                if m[k] and dist[k] != -2:
                    m[k] = 0
                alive += m[k]
            for j in range(visited):
                dist[queue[j]] = -1
    free(queue)
    return out.astype(bool), runs


cdef inline bint _subset(uint64_t* a, uint64_t* b, Py_ssize_t words) noexcept nogil:
    cdef Py_ssize_t t
    for t in range(words):
        if a[t] & ~b[t]:
            return 0
    return 1


cdef inline void _or_into(uint64_t* a, uint64_t* b, Py_ssize_t words) noexcept nogil:
    cdef Py_ssize_t t
    for t in range(words):
        a[t] |= b[t]


def gate_tables(const int64_t[::1] indptr, const int32_t[::1] indices,
                Py_ssize_t pivot, dist_in):
    cdef Py_ssize_t n = indptr.shape[0] - 1
    cdef int32_t[::1] dist = np.ascontiguousarray(dist_in, dtype=np.int32)
    gate_a = np.full(n, -1, dtype=np.int32)
    pgate_a = np.full(n, -1, dtype=np.int32)
    cdef int32_t[::1] gate = gate_a
    cdef int32_t[::1] pgate = pgate_a
    cdef Py_ssize_t deg_v = indptr[pivot + 1] - indptr[pivot]
    cdef Py_ssize_t words = max(1, (deg_v + 63) // 64)
    cdef Py_ssize_t i, j, w, p, x, z, d, maxd = 0, b, t
    cdef Py_ssize_t gate_fb = 0, pgate_fb = 0, fail_v = -1, fail_kind = 0
    cdef int32_t cand
    cdef bint found
    cdef uint64_t word

    for i in range(n):
        if dist[i] > maxd:
            maxd = dist[i]
    if maxd < 2:
        return gate_a, pgate_a, 0, 0, -1, 0

    trace_a = np.zeros((n, words), dtype=np.uint64)
    reach_a = np.zeros((n, words), dtype=np.uint64)
    cdef uint64_t[:, ::1] trace = trace_a
    cdef uint64_t[:, ::1] reach = reach_a
    # vertices bucketed by layer
    order_a = np.argsort(np.asarray(dist), kind="stable").astype(np.int32)
    cdef int32_t[::1] order = order_a
    start_a = np.searchsorted(np.asarray(dist)[order_a], np.arange(maxd + 2)).astype(np.int64)
    cdef int64_t[::1] start = start_a
    wdist_a = np.full(n, -1, dtype=np.int32)
    cdef int32_t[::1] wdist = wdist_a
    cdef int32_t* queue = <int32_t*>malloc(max(n, 1) * sizeof(int32_t))
    if queue == NULL:
        raise MemoryError()

    with nogil:
        for j in range(deg_v):
            x = indices[indptr[pivot] + j]
            trace[x, j >> 6] = (<uint64_t>1) << (j & 63)
        for i in range(start[1], start[2]):
            x = order[i]
            _or_into(&reach[x, 0], &trace[x, 0], words)
            for j in range(indptr[x], indptr[x + 1]):
                z = indices[j]
                if dist[z] == 1:
                    _or_into(&reach[x, 0], &trace[z, 0], words)
        for d in range(2, maxd + 1):
            for i in range(start[d], start[d + 1]):
                w = order[i]
                for j in range(indptr[w], indptr[w + 1]):
                    p = indices[j]
                    if dist[p] == d - 1:
                        _or_into(&trace[w, 0], &trace[p, 0], words)
        for d in range(2, maxd + 1):
            for i in range(start[d], start[d + 1]):
                w = order[i]
                _or_into(&reach[w, 0], &trace[w, 0], words)
                for j in range(indptr[w], indptr[w + 1]):
                    p = indices[j]
                    if dist[p] == d - 1:
                        _or_into(&reach[w, 0], &reach[p, 0], words)
                    elif dist[p] == d:
                        _or_into(&reach[w, 0], &trace[p, 0], words)

        for d in range(2, maxd + 1):
            for i in range(start[d], start[d + 1]):
                w = order[i]
                # gate
                if d == 2:
                    gate[w] = <int32_t>w
                else:
                    found = 0
                    for j in range(indptr[w], indptr[w + 1]):
                        p = indices[j]
                        if dist[p] == d - 1:
                            cand = gate[p]
                            if _subset(&trace[w, 0], &trace[cand, 0], words):
                                gate[w] = cand
                                found = 1
                                break
                    if not found:
                        _bfs(indptr, indices, w, wdist, queue, 2147483647)
                        for b in range(start[2], start[3]):
                            z = order[b]
                            if wdist[z] == d - 2 and _subset(&trace[w, 0], &trace[z, 0], words):
                                gate[w] = <int32_t>z
                                found = 1
                                break
                        for b in range(n):
                            wdist[b] = -1
                        if not found:
                            fail_v = w
                            fail_kind = 1
                            break
                        gate_fb += 1
            if fail_kind:
                break
            for i in range(start[d], start[d + 1]):
                w = order[i]
                found = 0
                for j in range(indptr[w], indptr[w + 1]):
                    p = indices[j]
                    if dist[p] == d - 1:
                        cand = <int32_t>p if d == 2 else pgate[p]
                        if _subset(&reach[w, 0], &reach[cand, 0], words):
                            pgate[w] = cand
                            found = 1
                            break
                if not found:
                    for t in range(words):
                        word = trace[w, t]
                        b = 0
                        while word and not found:
                            if word & 1:
                                x = indices[indptr[pivot] + t * 64 + b]
                                if _subset(&reach[w, 0], &reach[x, 0], words):
                                    pgate[w] = <int32_t>x
                                    found = 1
                            word >>= 1
                            b += 1
                        if found:
                            break
                    if not found:
                        fail_v = w
                        fail_kind = 2
                        break
                    pgate_fb += 1
            if fail_kind:
                break
    free(queue)
    return gate_a, pgate_a, gate_fb, pgate_fb, fail_v, fail_kind


def q_partial(const int64_t[::1] indptr, const int32_t[::1] indices,
              Py_ssize_t pivot, dist_in, gate_in, pgate_in, in_a_in, costs_in):
    cdef Py_ssize_t n = indptr.shape[0] - 1
    cdef const int32_t[::1] dist = np.ascontiguousarray(dist_in, dtype=np.int32)
    cdef const int32_t[::1] gate = np.ascontiguousarray(gate_in, dtype=np.int32)
    cdef const int32_t[::1] pgate = np.ascontiguousarray(pgate_in, dtype=np.int32)
    cdef const unsigned char[::1] in_a = np.ascontiguousarray(in_a_in, dtype=np.uint8)
    cdef const int64_t[::1] costs = np.ascontiguousarray(costs_in, dtype=np.int64)
    alpha_a = np.zeros(n, dtype=np.int64)
    near_a = np.zeros(n, dtype=np.int64)
    cdef int64_t[::1] alpha = alpha_a
    cdef int64_t[::1] near = near_a
    cdef Py_ssize_t deg_v = indptr[pivot + 1] - indptr[pivot]
    qm_a = np.zeros(deg_v, dtype=np.int64)
    qle_a = np.zeros(deg_v, dtype=np.int64)
    cdef int64_t[::1] qm = qm_a
    cdef int64_t[::1] qle = qle_a
    cdef Py_ssize_t w, i, j, u, z
    cdef int64_t cu
    with nogil:
        for w in range(n):
            if not in_a[w]:
                continue
            if dist[w] >= 2:
                alpha[gate[w]] += costs[w]
                near[pgate[w]] += costs[w]
            elif dist[w] == 1:
                near[w] += costs[w]
        for i in range(deg_v):
            u = indices[indptr[pivot] + i]
            cu = costs[u] if in_a[u] else 0
            qm[i] = cu
            qle[i] = near[u]
            for j in range(indptr[u], indptr[u + 1]):
                z = indices[j]
                qm[i] += alpha[z]
                qle[i] += near[z]
    return qm_a, qle_a


def apsp_reduce(const int64_t[::1] indptr, const int32_t[::1] indices, costs_in, rows_in):
    cdef Py_ssize_t n = indptr.shape[0] - 1
    cdef const int64_t[::1] costs = np.ascontiguousarray(costs_in, dtype=np.int64)
    cdef const int64_t[::1] rows = np.ascontiguousarray(rows_in, dtype=np.int64)
    cdef Py_ssize_t k = rows.shape[0], i, j
    ecc_c_a = np.zeros(k, dtype=np.int64)
    td_c_a = np.zeros(k, dtype=np.int64)
    ecc_u_a = np.zeros(k, dtype=np.int32)
    cdef int64_t[::1] ecc_c = ecc_c_a
    cdef int64_t[::1] td_c = td_c_a
    cdef int32_t[::1] ecc_u = ecc_u_a
    scratch = np.full(n, -1, dtype=np.int32)
    cdef int32_t[::1] dist = scratch
    cdef int32_t* queue = <int32_t*>malloc(max(n, 1) * sizeof(int32_t))
    cdef int64_t val, best, tot
    cdef int32_t far
    cdef Py_ssize_t visited
    if queue == NULL:
        raise MemoryError()
    with nogil:
        for i in range(k):
            visited = _bfs(indptr, indices, rows[i], dist, queue, 2147483647)
            best = 0
            tot = 0
            far = 0
            for j in range(visited):
                val = costs[queue[j]] * dist[queue[j]]
                tot += val
                if val > best:
                    best = val
            far = dist[queue[visited - 1]]
            ecc_c[i] = best
            td_c[i] = tot
            ecc_u[i] = far
            for j in range(visited):
                dist[queue[j]] = -1
    free(queue)
    return ecc_c_a, td_c_a, ecc_u_a


def distance_matrix(const int64_t[::1] indptr, const int32_t[::1] indices):
    cdef Py_ssize_t n = indptr.shape[0] - 1
    out_a = np.full((n, n), -1, dtype=np.int32)
    cdef int32_t[:, ::1] out = out_a
    cdef int32_t* queue = <int32_t*>malloc(max(n, 1) * sizeof(int32_t))
    cdef Py_ssize_t s
    if queue == NULL:
        raise MemoryError()
    with nogil:
        for s in range(n):
            _bfs(indptr, indices, s, out[s], queue, 2147483647)
    free(queue)
    return out_a
