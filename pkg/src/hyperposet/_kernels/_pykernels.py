"""Pure-Python kernels (numpy where it vectorizes cleanly).

Every function works in local coordinates: vertices are ``0 .. n-1`` and an
edge is an int bitmask.  Order rows are ``(k, W)`` uint64 arrays where bit
``j`` of row ``i`` is set when element ``i`` relates to element ``j``.
"""

import itertools

import numpy as np

NAME = "python"


def _bits(mask):
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def backtrack_acyclic(masks, n):
    """Acyclic source choices, one edge at a time, pruning on the first cycle.

    ``reach[v]`` is the set of vertices strictly after ``v`` in the partial
    order forced so far; picking source ``s`` on edge ``e`` closes a cycle iff
    some other vertex of ``e`` already reaches ``s``.
    """
    masks = list(masks)
    m = len(masks)
    bits = [_bits(e) for e in masks]
    out = []
    chosen = [0] * m

    def extend(level, reach):
        if level == m:
            out.append(tuple(chosen))
            return
        e = masks[level]
        for s in bits[level]:
            sbit = 1 << s
            others = e & ~sbit
            after = others
            ok = True
            for u in bits[level]:
                if u != s:
                    if reach[u] & sbit:
                        ok = False
                        break
                    after |= reach[u]
            if not ok:
                continue
            nxt = list(reach)
            for w in range(n):
                if w == s or reach[w] & sbit:
                    nxt[w] = reach[w] | after
            chosen[level] = s
            extend(level + 1, nxt)

    extend(0, [0] * n)
    out.sort()
    return out


def permutation_image(masks, n, chunk=5040):
    """Distinct orientations ``O_pi`` over all permutations ``pi`` of ``0..n-1``."""
    masks = np.asarray(list(masks), dtype=np.int64)
    m = len(masks)
    if m == 0:
        return [()]
    found = set()
    perms_iter = itertools.permutations(range(n))
    while True:
        block = list(itertools.islice(perms_iter, chunk))
        if not block:
            break
        perms = np.asarray(block, dtype=np.int64)  # (P, n)
        member = (masks[:, None, None] >> perms[None, :, :]) & 1  # (m, P, n)
        first = member.argmax(axis=2)  # (m, P)
        sources = perms[np.arange(len(perms))[None, :], first]  # (m, P)
        found.update(map(tuple, sources.T.tolist()))
    return sorted(found)


def up_rows(S, chunk=512):
    """Row ``i`` marks every ``j`` with ``S[i] <= S[j]`` componentwise."""
    S = np.asarray(S)
    k = S.shape[0]
    W = (k + 63) // 64
    rows = np.zeros((k, W * 8), dtype=np.uint8)
    for start in range(0, k, chunk):
        block = S[start:start + chunk]
        leq = (block[:, None, :] <= S[None, :, :]).all(axis=2)
        packed = np.packbits(leq, axis=1, bitorder="little")
        rows[start:start + chunk, :packed.shape[1]] = packed
    return rows.view(np.uint64).reshape(k, W)


def rows_to_ints(rows):
    return [int.from_bytes(r.tobytes(), "little") for r in rows]


def _bound_of(U, row_ints, highest):
    m = U.bit_length() - 1 if highest else (U & -U).bit_length() - 1
    return m if not (U & ~row_ints[m]) else -1


def first_missing_bound(rows, highest):
    """First pair ``(a, b)``, ``a < b``, whose bound set lacks an extreme element.

    Elements must be indexed along a linear extension: the least upper bound
    (if any) is then the lowest set bit of the joint up-set, and the greatest
    lower bound the highest set bit of the joint down-set.
    """
    ints = rows_to_ints(rows)
    k = len(ints)
    for a in range(k):
        ra = ints[a]
        for b in range(a + 1, k):
            if _bound_of(ra & ints[b], ints, highest) < 0:
                return a, b
    return None


def bound_table(rows, highest):
    ints = rows_to_ints(rows)
    k = len(ints)
    out = np.full((k, k), -1, dtype=np.int32)
    for a in range(k):
        for b in range(a, k):
            out[a, b] = out[b, a] = _bound_of(ints[a] & ints[b], ints, highest)
    return out


def cover_pairs(up, down):
    """Pairs ``(i, j)`` with ``j`` covering ``i``."""
    ups = rows_to_ints(up)
    downs = rows_to_ints(down)
    out = []
    for i, u in enumerate(ups):
        strict = u & ~(1 << i)
        for j in _bits(strict):
            if downs[j] & strict == 1 << j:
                out.append((i, j))
    return out


def _top_bit(x, n):
    out = np.full(x.shape, -1, dtype=np.int64)
    for b in range(n):
        out = np.where((x >> b) & 1, b, out)
    return out


def _low_bit(x, n):
    out = np.full(x.shape, n, dtype=np.int64)
    for b in reversed(range(n)):
        out = np.where((x >> b) & 1, b, out)
    return out


def pseudo_join_batch(masks, F, n):
    """Pseudo-join sources for each row of per-edge family maxima ``F``.

    ``reach[:, h]`` is the set of values reachable from ``h`` by stepping to
    the family maximum of any edge containing the current value, when that
    maximum is larger.  Larger values are settled first.
    """
    F = np.asarray(F, dtype=np.int64)
    P, m = F.shape
    rows = np.arange(P)
    reach = np.zeros((P, n), dtype=np.int64)
    for h in reversed(range(n)):
        r = np.full(P, 1 << h, dtype=np.int64)
        for e in range(m):
            if (masks[e] >> h) & 1:
                t = F[:, e]
                step = t > h
                if step.any():
                    r |= np.where(step, reach[rows, np.minimum(t, n - 1)], 0)
        reach[:, h] = r
    out = np.empty((P, m), dtype=np.int64)
    for e in range(m):
        best = np.full(P, n, dtype=np.int64)
        for ell in _bits(masks[e]):
            ok = ell >= F[:, e]
            cand = _top_bit(reach[:, ell] & masks[e], n)
            best = np.where(ok & (cand < best), cand, best)
        out[:, e] = best
    return out


def pseudo_meet_batch(masks, G, n):
    """Order dual of :func:`pseudo_join_batch` over per-edge family minima."""
    G = np.asarray(G, dtype=np.int64)
    P, m = G.shape
    rows = np.arange(P)
    reach = np.zeros((P, n), dtype=np.int64)
    for h in range(n):
        r = np.full(P, 1 << h, dtype=np.int64)
        for e in range(m):
            if (masks[e] >> h) & 1:
                t = G[:, e]
                step = t < h
                if step.any():
                    r |= np.where(step, reach[rows, np.maximum(t, 0)], 0)
        reach[:, h] = r
    out = np.empty((P, m), dtype=np.int64)
    for e in range(m):
        best = np.full(P, -1, dtype=np.int64)
        for ell in _bits(masks[e]):
            ok = ell <= G[:, e]
            cand = _low_bit(reach[:, ell] & masks[e], n)
            best = np.where(ok & (cand > best), cand, best)
        out[:, e] = best
    return out
