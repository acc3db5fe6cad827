"""Hot loops, each in a numba and a numpy flavour.

The public functions dispatch on ``_accel.backend()`` at call time so the
benchmark and the tests can exercise both paths in one process.
"""
import numpy as np

from . import _accel
from ._accel import njit

# ---------------------------------------------------------------- meanders


@njit
def _trace_pairs_nb(upper, lower, start, fill, out_pairs, out_perm):
    nu, n = upper.shape
    nl = lower.shape[0]
    count = 0
    scratch = np.empty(n, np.int8)
    for i in range(nu):
        for j in range(nl):
            pos = start[j]
            ok = True
            for step in range(n - 1):
                if step % 2 == 0:
                    nxt = upper[i, pos]
                else:
                    nxt = lower[j, pos]
                if nxt < 0:
                    ok = False
                    break
                scratch[step] = pos
                pos = nxt
            if ok:
                if fill:
                    scratch[n - 1] = pos
                    for k in range(n):
                        out_perm[count, k] = scratch[k]
                    out_pairs[count, 0] = i
                    out_pairs[count, 1] = j
                count += 1
    return count


def _trace_pairs_np(upper, lower, start, chunk=1 << 20):
    nu, n = upper.shape
    nl = lower.shape[0]
    pairs, perms = [], []
    rows = max(1, chunk // max(nl, 1))
    for i0 in range(0, nu, rows):
        ii = np.repeat(np.arange(i0, min(nu, i0 + rows)), nl)
        jj = np.tile(np.arange(nl), len(ii) // nl)
        pos = start[jj].copy()
        ok = np.ones(len(ii), dtype=bool)
        perm = np.empty((len(ii), n), dtype=np.int8)
        for step in range(n - 1):
            perm[:, step] = pos
            side = upper[ii, pos] if step % 2 == 0 else lower[jj, pos]
            ok &= side >= 0
            pos = np.where(ok, side, 0)
        perm[:, n - 1] = pos
        pairs.append(np.stack([ii[ok], jj[ok]], axis=1))
        perms.append(perm[ok])
    if not pairs:
        return np.zeros((0, 2), np.int64), np.zeros((0, n), np.int8)
    return np.concatenate(pairs), np.concatenate(perms)


def trace_meander_pairs(upper, lower, start):
    """Superpose every (upper, lower) partner array pair and keep the ones
    tracing a single open curve from ``start``.

    Returns (pairs, perms): indices into the inputs and 0-based
    permutations, in (upper, lower) order.
    """
    upper = np.ascontiguousarray(upper, dtype=np.int64)
    lower = np.ascontiguousarray(lower, dtype=np.int64)
    start = np.ascontiguousarray(start, dtype=np.int64)
    n = upper.shape[1]
    if not _accel.use_numba():
        return _trace_pairs_np(upper, lower, start)
    dummy_p = np.zeros((1, 2), np.int64)
    dummy_q = np.zeros((1, n), np.int8)
    k = _trace_pairs_nb(upper, lower, start, False, dummy_p, dummy_q)
    pairs = np.zeros((k, 2), np.int64)
    perms = np.zeros((k, n), np.int8)
    _trace_pairs_nb(upper, lower, start, True, pairs, perms)
    return pairs, perms


# ----------------------------------------------------------- state sums
# A diagram with m crossings is handed over as ``joins``: an (m, 2, 2, 2)
# array of edge ids, joins[c, s] holding the two edge pairs glued at c when
# its smoothing bit is s.  Loops are counted by union-find over edges.


@njit
def _state_loops_nb(joins, n_edges, out):
    m = joins.shape[0]
    parent = np.empty(n_edges, np.int64)
    for s in range(out.shape[0]):
        for e in range(n_edges):
            parent[e] = e
        comps = n_edges
        for c in range(m):
            bit = (s >> c) & 1
            for k in range(2):
                a = joins[c, bit, k, 0]
                b = joins[c, bit, k, 1]
                while parent[a] != a:
                    parent[a] = parent[parent[a]]
                    a = parent[a]
                while parent[b] != b:
                    parent[b] = parent[parent[b]]
                    b = parent[b]
                if a != b:
                    parent[a] = b
                    comps -= 1
        out[s] = comps


def _state_loops_np(joins, n_edges):
    m = joins.shape[0]
    states = np.arange(1 << m, dtype=np.int64)
    lab = np.tile(np.arange(n_edges, dtype=np.int64), (len(states), 1))
    # edges glued at a crossing share a label; propagate minima until stable
    bits = [(states >> c) & 1 for c in range(m)]
    rows = np.arange(len(states))
    while True:
        changed = False
        for c in range(m):
            for k in range(2):
                a = joins[c, bits[c], k, 0]
                b = joins[c, bits[c], k, 1]
                la, lb = lab[rows, a], lab[rows, b]
                lo = np.minimum(la, lb)
                if (la != lb).any():
                    changed = True
                    # relabel whole classes so merges propagate transitively
                    hi = np.maximum(la, lb)
                    lab = np.where(lab == hi[:, None], lo[:, None], lab)
        if not changed:
            break
    own = lab == np.arange(n_edges)[None, :]
    return own.sum(axis=1).astype(np.int16)


def state_loop_counts(joins, n_edges):
    """Loop count of every smoothing state s in [0, 2^m)."""
    joins = np.ascontiguousarray(joins, dtype=np.int64)
    m = joins.shape[0]
    if not _accel.use_numba():
        return _state_loops_np(joins, n_edges)
    out = np.zeros(1 << m, np.int16)
    _state_loops_nb(joins, n_edges, out)
    return out


def popcounts(m):
    pc = np.zeros(1 << m, np.int64)
    for c in range(m):
        pc[1 << c:2 << c] = pc[:1 << c] + 1
    return pc


# ------------------------------------------------ Walsh-Hadamard mod p


@njit
def _wht_nb(a, p):
    h = 1
    n = a.shape[0]
    while h < n:
        for i in range(0, n, 2 * h):
            for j in range(i, i + h):
                x = a[j]
                y = a[j + h]
                a[j] = (x + y) % p
                a[j + h] = (x - y) % p
        h *= 2


def _wht_np(a, p):
    n = a.shape[0]
    h = 1
    while h < n:
        v = a.reshape(-1, 2, h)
        x = v[:, 0, :].copy()
        y = v[:, 1, :]
        v[:, 0, :] = (x + y) % p
        v[:, 1, :] = (x - y) % p
        h *= 2


def wht_mod(a, p):
    """In-place unnormalised Walsh-Hadamard transform modulo p."""
    if _accel.use_numba():
        _wht_nb(a, p)
    else:
        _wht_np(a, p)
    return a


@njit
def _bracket_hist_nb(joins, n_edges, out):
    m = joins.shape[0]
    parent = np.empty(n_edges, np.int64)
    for s in range(1 << m):
        for e in range(n_edges):
            parent[e] = e
        comps = n_edges
        b = 0
        for c in range(m):
            bit = (s >> c) & 1
            b += bit
            for k in range(2):
                a = joins[c, bit, k, 0]
                d = joins[c, bit, k, 1]
                while parent[a] != a:
                    parent[a] = parent[parent[a]]
                    a = parent[a]
                while parent[d] != d:
                    parent[d] = parent[parent[d]]
                    d = parent[d]
                if a != d:
                    parent[a] = d
                    comps -= 1
        out[b, comps] += 1


def bracket_histogram(joins, n_edges):
    """hist[b, l] = number of states with b B-smoothings and l loops."""
    joins = np.ascontiguousarray(joins, dtype=np.int64)
    m = joins.shape[0]
    if not _accel.use_numba():
        loops = _state_loops_np(joins, n_edges).astype(np.int64)
        b = popcounts(m)
        hist = np.zeros((m + 1, n_edges + 1), np.int64)
        np.add.at(hist, (b, loops), 1)
        return hist
    hist = np.zeros((m + 1, n_edges + 1), np.int64)
    _bracket_hist_nb(joins, n_edges, hist)
    return hist


# ------------------------------------------------- canonical DT filter
# A knot DT code is a row of evens a[k] paired with the odd visit 2k+1.
# A row is canonical when no re-rooting or reversal of the visit order
# yields a lexicographically smaller row.


@njit
def _canonical_dt_nb(rows, out):
    count, n = rows.shape
    L = 2 * n
    partner = np.empty(L, np.int64)
    for r in range(count):
        for k in range(n):
            e = rows[r, k] - 1
            partner[2 * k] = e
            partner[e] = 2 * k
        keep = True
        for s in range(L):
            for rev in range(2):
                if s == 0 and rev == 0:
                    continue
                for k in range(n):
                    q = 2 * k
                    j = (q + s) % L if rev == 0 else (s - q) % L
                    pj = partner[j]
                    v = ((pj - s) % L if rev == 0 else (s - pj) % L) + 1
                    if v != rows[r, k]:
                        if v < rows[r, k]:
                            keep = False
                        break
                if not keep:
                    break
            if not keep:
                break
        out[r] = keep


def _canonical_dt_np(rows):
    count, n = rows.shape
    L = 2 * n
    partner = np.empty((count, L), np.int64)
    idx = np.arange(count)[:, None]
    partner[idx, 2 * np.arange(n)[None, :]] = rows - 1
    partner[idx, rows - 1] = 2 * np.arange(n)[None, :]
    keep = np.ones(count, bool)
    q = 2 * np.arange(n)
    for s in range(L):
        for rev in (0, 1):
            if s == 0 and rev == 0:
                continue
            j = (q + s) % L if rev == 0 else (s - q) % L
            pj = partner[:, j]
            v = ((pj - s) % L if rev == 0 else (s - pj) % L) + 1
            diff = v != rows
            first = np.where(diff.any(axis=1), diff.argmax(axis=1), n)
            hit = first < n
            smaller = np.zeros(count, bool)
            smaller[hit] = v[hit, first[hit]] < rows[hit, first[hit]]
            keep &= ~smaller
    return keep


def canonical_dt_mask(rows):
    """Boolean mask of the DT rows that are least among their re-rootings
    and reversals."""
    rows = np.ascontiguousarray(rows, dtype=np.int64)
    if not _accel.use_numba():
        return _canonical_dt_np(rows)
    out = np.zeros(rows.shape[0], np.bool_)
    _canonical_dt_nb(rows, out)
    return out
