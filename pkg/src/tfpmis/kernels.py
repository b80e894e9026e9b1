"""Hot inner loops: bag-table transitions and bitmask branch-and-bound.

Every kernel exists twice. The ``*_nb`` variants are numba-compiled loops; the
``*_np`` variants are vectorized numpy (or plain Python integers for the
branch-and-bound, which does not vectorize). The public names bound at the
bottom of this module pick one according to ``TFPMIS_NUMBA``.

Bag tables are int32 arrays indexed by a bitmask over the sorted bag; entry
``-1`` marks a subset that is not independent.
"""

import numpy as np

from ._accel import USE_NUMBA, njit

INVALID = -1


# ---------------------------------------------------------------------------
# bag-table transitions
# ---------------------------------------------------------------------------

@njit
def introduce_nb(table, pos, nbr):
    size = table.shape[0]
    out = np.empty(2 * size, np.int32)
    low = (1 << pos) - 1
    for m in range(2 * size):
        c = (m & low) | ((m >> (pos + 1)) << pos)
        val = table[c]
        if (m >> pos) & 1:
            if val < 0 or (m & nbr) != 0:
                out[m] = -1
            else:
                out[m] = val + 1
        else:
            out[m] = val
    return out


@njit
def forget_nb(table, pos):
    half = table.shape[0] // 2
    out = np.empty(half, np.int32)
    low = (1 << pos) - 1
    bit = 1 << pos
    for m in range(half):
        base = (m & low) | ((m >> pos) << (pos + 1))
        a = table[base]
        b = table[base | bit]
        out[m] = a if a >= b else b
    return out


@njit
def join_nb(t1, t2):
    size = t1.shape[0]
    out = np.empty(size, np.int32)
    for m in range(size):
        a = t1[m]
        b = t2[m]
        if a < 0 or b < 0:
            out[m] = -1
        else:
            pc = 0
            x = m
            while x:
                x &= x - 1
                pc += 1
            out[m] = a + b - pc
    return out


def introduce_np(table, pos, nbr):
    m = np.arange(2 * table.shape[0], dtype=np.int64)
    low = (1 << pos) - 1
    vals = table[(m & low) | ((m >> (pos + 1)) << pos)]
    has_v = ((m >> pos) & 1).astype(bool)
    blocked = (vals < 0) | ((m & nbr) != 0)
    out = np.where(has_v, np.where(blocked, INVALID, vals + 1), vals)
    return out.astype(np.int32)


def forget_np(table, pos):
    m = np.arange(table.shape[0] // 2, dtype=np.int64)
    low = (1 << pos) - 1
    base = (m & low) | ((m >> pos) << (pos + 1))
    return np.maximum(table[base], table[base | (1 << pos)]).astype(np.int32)


def join_np(t1, t2):
    m = np.arange(t1.shape[0], dtype=np.uint64)
    pc = np.bitwise_count(m).astype(np.int32)
    out = np.where((t1 < 0) | (t2 < 0), INVALID, t1 + t2 - pc)
    return out.astype(np.int32)


# ---------------------------------------------------------------------------
# maximum independent set by branch-and-bound on bitmasks (n <= 62)
# ---------------------------------------------------------------------------

@njit
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit
def _low_bit(x):
    i = 0
    while not (x >> i) & 1:
        i += 1
    return i


@njit
def _clique_cover(adj, cand):
    count = 0
    rem = cand
    while rem:
        v = _low_bit(rem)
        rem &= ~(1 << v)
        common = adj[v] & rem
        while common:
            u = _low_bit(common)
            rem &= ~(1 << u)
            common &= adj[u]
        count += 1
    return count


@njit
def mis_bnb_nb(adj, cand, node_limit):
    """Return ``(alpha, nodes, finished)`` for the subgraph induced by ``cand``."""
    n = adj.shape[0]
    cap = 2 * n + 4
    stack_p = np.empty(cap, np.int64)
    stack_c = np.empty(cap, np.int64)
    sp = 0
    stack_p[0] = cand
    stack_c[0] = 0
    sp = 1
    best = 0
    nodes = 0
    while sp > 0:
        sp -= 1
        p = stack_p[sp]
        cur = stack_c[sp]
        nodes += 1
        if nodes > node_limit:
            return best, nodes, False
        if p == 0:
            if cur > best:
                best = cur
            continue
        if cur + _popcount(p) <= best:
            continue
        if cur + _clique_cover(adj, p) <= best:
            continue
        pick = -1
        pick_deg = -1
        low_v = -1
        rest = p
        while rest:
            v = _low_bit(rest)
            rest &= ~(1 << v)
            d = _popcount(adj[v] & p)
            if d <= 1:
                low_v = v
                break
            if d > pick_deg:
                pick = v
                pick_deg = d
        if low_v >= 0:
            stack_p[sp] = p & ~(adj[low_v] | (1 << low_v))
            stack_c[sp] = cur + 1
            sp += 1
            continue
        stack_p[sp] = p & ~(1 << pick)
        stack_c[sp] = cur
        sp += 1
        stack_p[sp] = p & ~(adj[pick] | (1 << pick))
        stack_c[sp] = cur + 1
        sp += 1
    return best, nodes, True


def _clique_cover_py(adj, cand):
    count = 0
    rem = cand
    while rem:
        v = (rem & -rem).bit_length() - 1
        rem &= ~(1 << v)
        common = adj[v] & rem
        while common:
            u = (common & -common).bit_length() - 1
            rem &= ~(1 << u)
            common &= adj[u]
        count += 1
    return count


def mis_bnb_py(adj, cand, node_limit):
    adj = [int(a) for a in adj]
    stack = [(int(cand), 0)]
    best = 0
    nodes = 0
    while stack:
        p, cur = stack.pop()
        nodes += 1
        if nodes > node_limit:
            return best, nodes, False
        if p == 0:
            best = max(best, cur)
            continue
        if cur + p.bit_count() <= best or cur + _clique_cover_py(adj, p) <= best:
            continue
        pick, pick_deg, low_v = -1, -1, -1
        rest = p
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= ~(1 << v)
            d = (adj[v] & p).bit_count()
            if d <= 1:
                low_v = v
                break
            if d > pick_deg:
                pick, pick_deg = v, d
        if low_v >= 0:
            stack.append((p & ~(adj[low_v] | (1 << low_v)), cur + 1))
            continue
        stack.append((p & ~(1 << pick), cur))
        stack.append((p & ~(adj[pick] | (1 << pick)), cur + 1))
    return best, nodes, True


if USE_NUMBA:
    BACKEND = "numba"
    introduce, forget, join = introduce_nb, forget_nb, join_nb
    mis_bnb = mis_bnb_nb
else:
    BACKEND = "numpy"
    introduce, forget, join = introduce_np, forget_np, join_np
    mis_bnb = mis_bnb_py
