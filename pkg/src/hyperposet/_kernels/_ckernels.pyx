# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same contracts as the pure-Python module."""

import itertools

import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free

cnp.import_array()

NAME = "cython"

cdef enum:
    MAXN = 64


cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_clzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil


cdef inline int _ctz(uint64_t x) nogil:
    return __builtin_ctzll(x)


cdef inline int _clz(uint64_t x) nogil:
    return __builtin_clzll(x)


cdef struct BTState:
    int m
    int n
    uint64_t *masks
    int *chosen
    uint64_t *reach   # (m + 1) * n


cdef void _extend(BTState *st, int level, list out):
    cdef int n = st.n
    cdef uint64_t *reach = st.reach + level * n
    cdef uint64_t *nxt = st.reach + (level + 1) * n
    cdef uint64_t e, rest, sbit, others, after, u_rest
    cdef int s, u, w
    cdef bint ok
    if level == st.m:
        out.append(tuple([st.chosen[i] for i in range(st.m)]))
        return
    e = st.masks[level]
    rest = e
    while rest:
        s = _ctz(rest)
        rest &= rest - 1
        sbit = (<uint64_t>1) << s
        others = e & ~sbit
        after = others
        ok = True
        u_rest = others
        while u_rest:
            u = _ctz(u_rest)
            u_rest &= u_rest - 1
            if reach[u] & sbit:
                ok = False
                break
            after |= reach[u]
        if not ok:
            continue
        for w in range(n):
            if w == s or (reach[w] & sbit):
                nxt[w] = reach[w] | after
            else:
                nxt[w] = reach[w]
        st.chosen[level] = s
        _extend(st, level + 1, out)


def backtrack_acyclic(masks, int n):
    cdef int m = len(masks)
    cdef BTState st
    cdef int i
    if n > MAXN:
        raise ValueError("compiled kernels support at most 64 vertices")
    st.m = m
    st.n = n
    st.masks = <uint64_t *> malloc(max(m, 1) * sizeof(uint64_t))
    st.chosen = <int *> malloc(max(m, 1) * sizeof(int))
    st.reach = <uint64_t *> malloc((m + 1) * max(n, 1) * sizeof(uint64_t))
    try:
        for i in range(m):
            st.masks[i] = <uint64_t> masks[i]
        for i in range(n):
            st.reach[i] = 0
        out = []
        _extend(&st, 0, out)
    finally:
        free(st.masks)
        free(st.chosen)
        free(st.reach)
    out.sort()
    return out


def permutation_image(masks, int n):
    cdef int m = len(masks)
    cdef int i, p, v
    cdef uint64_t *cm = <uint64_t *> malloc(max(m, 1) * sizeof(uint64_t))
    cdef int perm[MAXN]
    cdef list src
    found = set()
    if n > MAXN:
        raise ValueError("compiled kernels support at most 64 vertices")
    try:
        for i in range(m):
            cm[i] = <uint64_t> masks[i]
        for pt in itertools.permutations(range(n)):
            for p in range(n):
                perm[p] = pt[p]
            src = [0] * m
            for i in range(m):
                for p in range(n):
                    v = perm[p]
                    if (cm[i] >> v) & 1:
                        src[i] = v
                        break
            found.add(tuple(src))
    finally:
        free(cm)
    return sorted(found)


def up_rows(S):
    cdef cnp.ndarray[int64_t, ndim=2] A = np.ascontiguousarray(S, dtype=np.int64)
    cdef Py_ssize_t k = A.shape[0], m = A.shape[1]
    cdef Py_ssize_t W = (k + 63) // 64
    cdef cnp.ndarray[uint64_t, ndim=2] rows = np.zeros((k, W), dtype=np.uint64)
    cdef Py_ssize_t i, j, c
    cdef bint le
    for i in range(k):
        for j in range(k):
            le = True
            for c in range(m):
                if A[i, c] > A[j, c]:
                    le = False
                    break
            if le:
                rows[i, j >> 6] |= (<uint64_t>1) << (j & 63)
    return rows


cdef inline Py_ssize_t _bound(uint64_t *ra, uint64_t *rb, uint64_t *base,
                              Py_ssize_t W, bint highest) nogil:
    cdef Py_ssize_t w, c = -1
    cdef uint64_t u
    if highest:
        w = W - 1
        while w >= 0:
            u = ra[w] & rb[w]
            if u:
                c = w * 64 + 63 - _clz(u)
                break
            w -= 1
    else:
        for w in range(W):
            u = ra[w] & rb[w]
            if u:
                c = w * 64 + _ctz(u)
                break
    if c < 0:
        return -1
    cdef uint64_t *rc = base + c * W
    for w in range(W):
        if (ra[w] & rb[w]) & ~rc[w]:
            return -1
    return c


def first_missing_bound(rows, bint highest):
    cdef cnp.ndarray[uint64_t, ndim=2] R = np.ascontiguousarray(rows, dtype=np.uint64)
    cdef Py_ssize_t k = R.shape[0], W = R.shape[1]
    cdef uint64_t *base = <uint64_t *> R.data
    cdef Py_ssize_t a, b
    for a in range(k):
        for b in range(a + 1, k):
            if _bound(base + a * W, base + b * W, base, W, highest) < 0:
                return a, b
    return None


def bound_table(rows, bint highest):
    cdef cnp.ndarray[uint64_t, ndim=2] R = np.ascontiguousarray(rows, dtype=np.uint64)
    cdef Py_ssize_t k = R.shape[0], W = R.shape[1]
    cdef uint64_t *base = <uint64_t *> R.data
    cdef cnp.ndarray[int, ndim=2] out = np.full((k, k), -1, dtype=np.intc)
    cdef Py_ssize_t a, b, c
    for a in range(k):
        for b in range(a, k):
            c = _bound(base + a * W, base + b * W, base, W, highest)
            out[a, b] = c
            out[b, a] = c
    return out.astype(np.int32)


def cover_pairs(up, down):
    cdef cnp.ndarray[uint64_t, ndim=2] U = np.ascontiguousarray(up, dtype=np.uint64)
    cdef cnp.ndarray[uint64_t, ndim=2] D = np.ascontiguousarray(down, dtype=np.uint64)
    cdef Py_ssize_t k = U.shape[0], W = U.shape[1]
    cdef Py_ssize_t i, j, w, w2, cnt
    cdef uint64_t bits
    cdef uint64_t *strict = <uint64_t *> malloc(max(W, 1) * sizeof(uint64_t))
    out = []
    try:
        for i in range(k):
            for w in range(W):
                strict[w] = U[i, w]
            strict[i >> 6] &= ~((<uint64_t>1) << (i & 63))
            for w in range(W):
                bits = strict[w]
                while bits:
                    j = w * 64 + _ctz(bits)
                    bits &= bits - 1
                    cnt = 0
                    for w2 in range(W):
                        cnt += __builtin_popcountll(D[j, w2] & strict[w2])
                    if cnt == 1:
                        out.append((i, j))
    finally:
        free(strict)
    return out


cdef void _join_one(uint64_t *masks, int64_t *F, int64_t *out, int m, int n,
                    uint64_t *reach) nogil:
    cdef int h, e, ell, cand, best
    cdef int64_t t
    cdef uint64_t r, rest, x
    h = n - 1
    while h >= 0:
        r = (<uint64_t>1) << h
        for e in range(m):
            if (masks[e] >> h) & 1:
                t = F[e]
                if t > h:
                    r |= reach[t]
        reach[h] = r
        h -= 1
    for e in range(m):
        best = n
        rest = masks[e]
        while rest:
            ell = _ctz(rest)
            rest &= rest - 1
            if ell < F[e]:
                continue
            x = reach[ell] & masks[e]
            cand = 63 - _clz(x)
            if cand < best:
                best = cand
                if best == ell:
                    break
        out[e] = best


cdef void _meet_one(uint64_t *masks, int64_t *G, int64_t *out, int m, int n,
                    uint64_t *reach) nogil:
    cdef int h, e, ell, cand, best
    cdef int64_t t
    cdef uint64_t r, rest, x
    for h in range(n):
        r = (<uint64_t>1) << h
        for e in range(m):
            if (masks[e] >> h) & 1:
                t = G[e]
                if t < h:
                    r |= reach[t]
        reach[h] = r
    for e in range(m):
        best = -1
        rest = masks[e]
        while rest:
            ell = 63 - _clz(rest)
            rest &= ~((<uint64_t>1) << ell)
            if ell > G[e]:
                continue
            x = reach[ell] & masks[e]
            cand = _ctz(x)
            if cand > best:
                best = cand
                if best == ell:
                    break
        out[e] = best


def _batch(masks, F, int n, bint join):
    cdef cnp.ndarray[int64_t, ndim=2] A = np.ascontiguousarray(F, dtype=np.int64)
    cdef Py_ssize_t P = A.shape[0]
    cdef int m = A.shape[1]
    cdef cnp.ndarray[int64_t, ndim=2] out = np.empty((P, m), dtype=np.int64)
    cdef cnp.ndarray[uint64_t, ndim=1] cm = np.asarray(list(masks), dtype=np.uint64).reshape(-1)
    cdef uint64_t reach[MAXN]
    cdef Py_ssize_t p
    if n > MAXN:
        raise ValueError("compiled kernels support at most 64 vertices")
    if P == 0 or m == 0:
        return out
    with nogil:
        for p in range(P):
            if join:
                _join_one(<uint64_t *> cm.data, &A[p, 0], &out[p, 0], m, n, reach)
            else:
                _meet_one(<uint64_t *> cm.data, &A[p, 0], &out[p, 0], m, n, reach)
    return out


def pseudo_join_batch(masks, F, int n):
    return _batch(masks, F, n, True)


def pseudo_meet_batch(masks, G, int n):
    return _batch(masks, G, n, False)
