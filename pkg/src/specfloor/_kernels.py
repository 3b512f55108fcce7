"""Compiled inner loop for the exhaustive supergraph oracle.

Deliberately shares no code with :mod:`specfloor.parade`: graphs are held as
a dense ``n x n`` multiplicity array and path counts are propagated by a
level-synchronous sweep over vertex bitmasks.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _parade_number(mult, adj):
    n = mult.shape[0]
    best = 0
    cnt = np.empty(n, np.int64)
    for s in range(n):
        seen = np.int64(1) << s
        frontier = seen
        cnt[s] = 1
        level = 0
        while frontier:
            nxt = np.int64(0)
            for v in range(n):
                if (seen >> v) & 1:
                    continue
                back = adj[v] & frontier
                if back == 0:
                    continue
                c = 0
                for u in range(n):
                    if (back >> u) & 1:
                        c += cnt[u] * mult[u, v]
                cnt[v] = 2 if c > 2 else c
                nxt |= np.int64(1) << v
                if c == 1 and level + 1 > best:
                    best = level + 1
            seen |= nxt
            frontier = nxt
            level += 1
    return best + 1


@njit(cache=True)
def _set(mult, adj, u, v, m):
    mult[u, v] = m
    mult[v, u] = m
    if m > 0:
        adj[u] |= np.int64(1) << v
        adj[v] |= np.int64(1) << u
    else:
        adj[u] &= ~(np.int64(1) << v)
        adj[v] &= ~(np.int64(1) << u)


@njit(cache=True)
def min_spectator_over_raises(base, us, vs, lo, hi):
    """Minimum of ``n - usp`` over every assignment ``lo[i] <= mult(us[i], vs[i]) <= hi[i]``.

    Returns ``(best, index)`` where ``index`` is the mixed-radix position of
    the first assignment attaining ``best``.
    """
    n = base.shape[0]
    mult = base.copy()
    k = us.shape[0]
    digit = lo.copy()
    for i in range(k):
        mult[us[i], vs[i]] = digit[i]
        mult[vs[i], us[i]] = digit[i]
    adj = np.zeros(n, np.int64)
    for a in range(n):
        for b in range(n):
            if mult[a, b] > 0:
                adj[a] |= np.int64(1) << b
    best = n + 1
    best_index = -1
    index = 0
    while True:
        val = n - _parade_number(mult, adj)
        if val < best:
            best = val
            best_index = index
            if best == 0:
                break
        # odometer step
        i = 0
        while i < k:
            if digit[i] < hi[i]:
                digit[i] += 1
                _set(mult, adj, us[i], vs[i], digit[i])
                break
            digit[i] = lo[i]
            _set(mult, adj, us[i], vs[i], digit[i])
            i += 1
        if i == k:
            break
        index += 1
    return best, best_index
