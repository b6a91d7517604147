"""Vietoris-Rips persistent homology over Z2 for dimensions 0 and 1.

The filtration assigns every simplex the maximum pairwise distance of its
vertices and runs to the full diameter of the cloud, where the complex is a
single simplex and all one-dimensional classes have died.

Dimension 0 is computed by union-find over edges in filtration order: every
vertex is born at 0, each component-merging edge kills one class, and
exactly one essential class survives with death = infinity.

Dimension 1 is computed by Z2 column reduction of the triangle boundary
matrix.  Triangles are enumerated grouped by their maximal edge (so no
global triangle sort is needed) and processed in a valid refinement of the
filtration order; union-find plays the role of the clearing step by
separating creator from destroyer edges up front, so no edge column is ever
reduced.  Two exact shortcuts keep the reduction tractable:

* the first triangle of a group claims its maximal edge immediately (its
  column is already reduced), and
* a triangle (u, v, k) in the group of edge e = (u, v) whose apex k is
  joined by an earlier edge to any apex k' already handled in this group is
  skipped: its boundary is the sum of the boundaries of (u, v, k'),
  (u, k, k'), (v, k, k'), all of which lie in the span of columns processed
  earlier (for skipped k' this holds inductively), so the column reduces to
  zero and can never claim a pivot.  Skippable apexes are absorbed in bulk
  with bitset operations, so only one apex per connected component of the
  group's apex graph is ever reduced explicitly.

Neither shortcut changes the diagram; equality with a naive full
boundary-matrix reduction is enforced by the test suite.

Zero-length bars are kept.  Points with identical distance rows (duplicate
points) are collapsed before the reduction and their bars, all of length
zero, are reconstructed by counting afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from mazelab.errors import MatrixError

__all__ = ["PersistenceDiagram", "rips_persistence"]

# Lowest-set-bit index via de Bruijn multiplication.
_LSB_MUL = np.uint64(0x03F79D71B4CB0A89)
_LSB_TABLE = np.zeros(64, dtype=np.int64)
for _i in range(64):
    _LSB_TABLE[(((1 << _i) * 0x03F79D71B4CB0A89) & 0xFFFFFFFFFFFFFFFF) >> 58] = _i


@dataclass(frozen=True)
class PersistenceDiagram:
    """Birth/death pairs of the Rips filtration, one row per class.

    ``deaths`` is ``inf`` for essential classes.  Rows are sorted by
    (dimension, birth, death); zero-length bars are included.
    """

    dims: np.ndarray
    births: np.ndarray
    deaths: np.ndarray

    def __len__(self) -> int:
        return len(self.dims)

    def bars(self, dim: int) -> tuple[np.ndarray, np.ndarray]:
        """Return (births, deaths) of all classes in dimension ``dim``."""
        mask = self.dims == dim
        return self.births[mask], self.deaths[mask]

    def persistent_bars(self, dim: int, thresh: float = 0.0) -> tuple[np.ndarray, np.ndarray]:
        """Return bars in ``dim`` whose persistence strictly exceeds ``thresh``."""
        births, deaths = self.bars(dim)
        keep = (deaths - births) > thresh
        return births[keep], deaths[keep]

    def triples(self) -> list[tuple[int, float, float]]:
        """Diagram as a sorted list of (dim, birth, death) triples."""
        return [
            (int(d), float(b), float(e))
            for d, b, e in zip(self.dims, self.births, self.deaths)
        ]


def _sorted_diagram(dims, births, deaths) -> PersistenceDiagram:
    dims = np.asarray(dims, dtype=np.int64)
    births = np.asarray(births, dtype=np.float64)
    deaths = np.asarray(deaths, dtype=np.float64)
    order = np.lexsort((deaths, births, dims))
    return PersistenceDiagram(dims[order], births[order], deaths[order])


def _validate(dmat: np.ndarray) -> np.ndarray:
    d = np.asarray(dmat, dtype=np.float64)
    if d.ndim != 2 or d.shape[0] != d.shape[1]:
        raise MatrixError(f"distance matrix must be square, got shape {d.shape}")
    if d.shape[0] == 0:
        raise MatrixError("distance matrix must contain at least one point")
    if not np.all(np.isfinite(d)):
        raise MatrixError("distance matrix contains non-finite entries")
    if np.any(d < 0):
        raise MatrixError("distance matrix contains negative entries")
    if np.any(np.diagonal(d) != 0):
        raise MatrixError("distance matrix diagonal must be zero")
    if not np.array_equal(d, d.T):
        raise MatrixError("distance matrix is not symmetric")
    return d


def _dedupe(d: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Collapse points with identical distance rows.

    Identical rows imply pairwise distance zero (the diagonal pins it), so
    collapsed points are genuine duplicates.  Returns the reduced matrix and
    per-kept-point multiplicities, preserving first-occurrence order.
    """
    m = d.shape[0]
    if m > 1:
        off_diag_min = np.min(d + np.diag(np.full(m, np.inf)))
        if off_diag_min > 0:
            return d, np.ones(m, dtype=np.int64)
    _, inverse, counts = np.unique(d, axis=0, return_inverse=True, return_counts=True)
    inverse = inverse.reshape(-1)
    if counts.shape[0] == d.shape[0]:
        return d, np.ones(d.shape[0], dtype=np.int64)
    _, first = np.unique(inverse, return_index=True)
    order = np.argsort(first)
    keep = first[order]
    mult = counts[order].astype(np.int64)
    return d[np.ix_(keep, keep)], mult


@njit(cache=True, nogil=True)
def _uf_find(parent, x):
    root = x
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:  # path compression
        nxt = parent[x]
        parent[x] = root
        x = nxt
    return root


@njit(cache=True, nogil=True)
def _reduce(m, eu, ev, ew, eid, do_h1, lsb_table):
    """Union-find H0 plus grouped-triangle Z2 reduction for H1.

    Edges must be pre-sorted by (weight, u, v); ``eid[u, v]`` maps a vertex
    pair to its sorted edge index.  The working column is a bitset over
    edge ids, so adding a stored column scatters a few word XORs and the
    pivot scan walks monotonically downward.  Returns H0 merge deaths, H1
    bars, and a status code (0 ok, nonzero for internal pairing failures).
    """
    n_edges = eu.shape[0]
    words = (m + 63) // 64
    adj = np.zeros((m, words), dtype=np.uint64)

    parent = np.empty(m, dtype=np.int32)
    for i in range(m):
        parent[i] = i

    h0_deaths = np.empty(m, dtype=np.float64)
    n0 = 0

    cap1 = n_edges if do_h1 else 1
    h1_births = np.empty(cap1, dtype=np.float64)
    h1_deaths = np.empty(cap1, dtype=np.float64)
    n1 = 0

    # Claimed (fully reduced) columns: 3-entry columns, the common case,
    # are stored inline per pivot (pivot_col = -2); longer ones go to the
    # arena (pivot_col = column id).
    pivot_col = np.full(n_edges, -1, dtype=np.int32)
    a3 = np.empty(cap1, dtype=np.int32)
    b3 = np.empty(cap1, dtype=np.int32)
    col_start = np.empty(cap1, dtype=np.int64)
    col_len = np.empty(cap1, dtype=np.int32)
    n_cols = 0
    arena = np.empty(max(cap1 // 4, 1024), dtype=np.int32)
    arena_top = 0

    # Working column as a bitset over edge ids.
    wwords = (n_edges + 63) // 64 if do_h1 else 1
    wc = np.zeros(wwords, dtype=np.uint64)

    cbits = np.zeros(words, dtype=np.uint64)
    seen = np.zeros(words, dtype=np.uint64)

    status = 0
    n_merges = 0
    one = np.uint64(1)
    zero = np.uint64(0)
    shift58 = np.uint64(58)
    for e in range(n_edges):
        u = eu[e]
        v = ev[e]
        w = ew[e]

        if do_h1:
            adj_u = adj[u]
            adj_v = adj[v]
            nonempty = False
            for wd in range(words):
                c = adj_u[wd] & adj_v[wd]
                cbits[wd] = c
                if c != zero:
                    nonempty = True
            if nonempty:
                # First apex: the triangle is already reduced and claims e
                # with a zero-length bar.
                k0 = -1
                for wd in range(words):
                    if cbits[wd] != zero:
                        low = cbits[wd] & (zero - cbits[wd])
                        k0 = (wd << 6) + lsb_table[(low * _LSB_MUL) >> shift58]
                        break
                a = eid[u, k0]
                b = eid[v, k0]
                if a > b:
                    a, b = b, a
                a3[e] = a
                b3[e] = b
                pivot_col[e] = -2
                h1_births[n1] = w
                h1_deaths[n1] = w
                n1 += 1

                # Apexes joined by an earlier edge to a handled apex are
                # absorbed wholesale; only component heads are reduced.
                adj_k = adj[k0]
                for wd in range(words):
                    seen[wd] = cbits[wd] & adj_k[wd]
                seen[k0 >> 6] |= one << np.uint64(k0 & 63)
                while True:
                    r = -1
                    for wd in range(words):
                        rm = cbits[wd] & ~seen[wd]
                        if rm != zero:
                            low = rm & (zero - rm)
                            r = (wd << 6) + lsb_table[(low * _LSB_MUL) >> shift58]
                            break
                    if r < 0:
                        break
                    a = eid[u, r]
                    b = eid[v, r]
                    if a > b:
                        a, b = b, a
                    # Load {a, b, e} into the bitset working column.
                    wc[a >> 6] |= one << np.uint64(a & 63)
                    wc[b >> 6] |= one << np.uint64(b & 63)
                    wc[e >> 6] |= one << np.uint64(e & 63)
                    lo_word = a >> 6
                    piv = e
                    while True:
                        owner = pivot_col[piv]
                        if owner == -1:
                            # New pivot: extract, claim, record the bar.
                            ln = 0
                            hi_word = piv >> 6
                            for wd in range(lo_word, hi_word + 1):
                                bits = wc[wd]
                                base = wd << 6
                                while bits != zero:
                                    low = bits & (zero - bits)
                                    bits ^= low
                                    if arena_top + ln + 1 > arena.shape[0]:
                                        size = arena.shape[0]
                                        while size < arena_top + ln + 1:
                                            size = 2 * size + 4
                                        grown = np.empty(size, dtype=np.int32)
                                        grown[:arena_top] = arena[:arena_top]
                                        arena = grown
                                    arena[arena_top + ln] = base + lsb_table[
                                        (low * _LSB_MUL) >> shift58
                                    ]
                                    ln += 1
                                wc[wd] = zero
                            if ln == 3:
                                a3[piv] = arena[arena_top]
                                b3[piv] = arena[arena_top + 1]
                                pivot_col[piv] = -2
                            else:
                                col_start[n_cols] = arena_top
                                col_len[n_cols] = ln
                                arena_top += ln
                                pivot_col[piv] = n_cols
                                n_cols += 1
                            h1_births[n1] = ew[piv]
                            h1_deaths[n1] = w
                            n1 += 1
                            break
                        # Scatter-XOR the owner column; its top entry is piv
                        # and every other entry lies strictly below.
                        wc[piv >> 6] ^= one << np.uint64(piv & 63)
                        if owner == -2:
                            x = a3[piv]
                            xw = x >> 6
                            wc[xw] ^= one << np.uint64(x & 63)
                            if xw < lo_word:
                                lo_word = xw
                            x = b3[piv]
                            xw = x >> 6
                            wc[xw] ^= one << np.uint64(x & 63)
                            if xw < lo_word:
                                lo_word = xw
                        else:
                            s = col_start[owner]
                            ln = col_len[owner]
                            for t in range(s, s + ln - 1):
                                x = arena[t]
                                xw = x >> 6
                                wc[xw] ^= one << np.uint64(x & 63)
                                if xw < lo_word:
                                    lo_word = xw
                        # Monotone downward pivot rescan.
                        pw = piv >> 6
                        bits = wc[pw]
                        if piv & 63:
                            bits &= (one << np.uint64(piv & 63)) - one
                        else:
                            bits = zero
                        piv = -1
                        while True:
                            if bits != zero:
                                bb = bits
                                bb |= bb >> np.uint64(1)
                                bb |= bb >> np.uint64(2)
                                bb |= bb >> np.uint64(4)
                                bb |= bb >> np.uint64(8)
                                bb |= bb >> np.uint64(16)
                                bb |= bb >> np.uint64(32)
                                iso = bb - (bb >> np.uint64(1))
                                piv = (pw << 6) + lsb_table[(iso * _LSB_MUL) >> shift58]
                                break
                            pw -= 1
                            if pw < lo_word:
                                break
                            bits = wc[pw]
                        if piv < 0:
                            break  # column reduced to zero
                    adj_k = adj[r]
                    for wd in range(words):
                        seen[wd] |= cbits[wd] & adj_k[wd]
                    seen[r >> 6] |= one << np.uint64(r & 63)

        ru = _uf_find(parent, u)
        rv = _uf_find(parent, v)
        if ru != rv:
            parent[ru] = rv
            h0_deaths[n0] = w
            n0 += 1
            n_merges += 1

        adj[u, v >> 6] |= one << np.uint64(v & 63)
        adj[v, u >> 6] |= one << np.uint64(u & 63)

    if do_h1 and n1 != n_edges - n_merges:
        status = 1
    if n0 != m - 1:
        status = 2
    return h0_deaths[:n0], h1_births[:n1], h1_deaths[:n1], status


def rips_persistence(dmat: np.ndarray, max_dim: int = 1) -> PersistenceDiagram:
    """Persistence diagram of the Rips filtration of a distance matrix.

    ``max_dim`` selects the top homology dimension (0 or 1).  The returned
    diagram keeps zero-length bars and contains exactly one essential
    dimension-0 class.
    """
    if max_dim not in (0, 1):
        raise MatrixError(f"max_dim must be 0 or 1, got {max_dim}")
    d = _validate(dmat)
    m_orig = d.shape[0]

    d, mult = _dedupe(d)
    m = d.shape[0]

    dim_parts = [np.zeros(1, dtype=np.int64)]
    birth_parts = [np.zeros(1)]
    death_parts = [np.array([np.inf])]

    if m > 1:
        iu, jv = np.triu_indices(m, k=1)
        w = d[iu, jv]
        order = np.lexsort((jv, iu, w))
        eu = iu[order].astype(np.int32)
        ev = jv[order].astype(np.int32)
        ew = w[order]
        eid = np.empty((m, m), dtype=np.int32)
        idx = np.arange(len(ew), dtype=np.int32)
        eid[eu, ev] = idx
        eid[ev, eu] = idx

        # Beyond the enclosing radius min_i max_j D[i, j] the complex is a
        # cone: no class survives it, component merges are over, and every
        # remaining creator edge is killed at its own filtration value by a
        # cone triangle.  The reduction therefore only needs the prefix.
        cut = len(ew)
        if max_dim >= 1:
            enclosing = float(np.min(np.max(d, axis=1)))
            cut = int(np.searchsorted(ew, enclosing, side="right"))

        h0_deaths, h1_b, h1_d, status = _reduce(
            m, eu[:cut], ev[:cut], ew[:cut], eid, max_dim >= 1, _LSB_TABLE
        )
        if status != 0:
            raise MatrixError(f"internal reduction failure (status {status})")
        dim_parts.append(np.zeros(len(h0_deaths), dtype=np.int64))
        birth_parts.append(np.zeros(len(h0_deaths)))
        death_parts.append(h0_deaths)
        dim_parts.append(np.ones(len(h1_b), dtype=np.int64))
        birth_parts.append(h1_b)
        death_parts.append(h1_d)
        if max_dim >= 1 and cut < len(ew):
            tail = ew[cut:]
            dim_parts.append(np.ones(len(tail), dtype=np.int64))
            birth_parts.append(tail)
            death_parts.append(tail.copy())

    # Bars of collapsed duplicates, all zero length.
    dup_sites = np.nonzero(mult > 1)[0]
    for g in dup_sites:
        k = int(mult[g])
        n_extra = k - 1
        if max_dim >= 1:
            n_extra += k * (k - 1) // 2 - (k - 1)
        dims = np.zeros(n_extra, dtype=np.int64)
        dims[k - 1 :] = 1
        dim_parts.append(dims)
        birth_parts.append(np.zeros(n_extra))
        death_parts.append(np.zeros(n_extra))
    if max_dim >= 1:
        for g in dup_sites:
            kg = int(mult[g])
            for h in range(m):
                if h == g or (mult[h] > 1 and h < g):
                    continue
                extra = kg * int(mult[h]) - 1
                if extra > 0:
                    dgh = float(d[g, h])
                    dim_parts.append(np.ones(extra, dtype=np.int64))
                    birth_parts.append(np.full(extra, dgh))
                    death_parts.append(np.full(extra, dgh))

    dims = np.concatenate(dim_parts)
    assert len(dims) == _expected_bar_count(m_orig, max_dim)
    return _sorted_diagram(dims, np.concatenate(birth_parts), np.concatenate(death_parts))


def _expected_bar_count(m: int, max_dim: int) -> int:
    # Every vertex creates an H0 class; every non-merging edge creates an
    # H1 class and the full filtration kills all of them.
    n_edges = m * (m - 1) // 2
    return m + (n_edges - (m - 1) if max_dim >= 1 else 0)
