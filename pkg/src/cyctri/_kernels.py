"""Compiled hot loops (numba) with pure-Python fallbacks.

Two kernels live here:

* the depth-first counting walk over the enumeration search tree, a
  direct transliteration of the iterative machine in
  :mod:`cyctri.enumeration` that carries a 128-bit counter as a
  (lo, hi) pair of 64-bit words;
* the pairwise intersection-property scan used by triangulation
  validation.

Both are semantically identical to their pure counterparts; tests
compare the two paths.  If numba is unavailable the pure paths are used
throughout (correct, much slower).
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit, uint64

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

    def njit(*args, **kwargs):  # type: ignore
        def deco(fn):
            return fn

        return deco

    uint64 = np.uint64  # type: ignore


_JIT = dict(cache=True, nogil=True)


@njit(**_JIT)
def _msb(v):
    """Index of the highest set bit of a nonzero uint64."""
    r = 0
    if v >= uint64(0x100000000):
        v >>= uint64(32)
        r += 32
    if v >= uint64(0x10000):
        v >>= uint64(16)
        r += 16
    if v >= uint64(0x100):
        v >>= uint64(8)
        r += 8
    if v >= uint64(0x10):
        v >>= uint64(4)
        r += 4
    if v >= uint64(4):
        v >>= uint64(2)
        r += 2
    if v >= uint64(2):
        r += 1
    return r


@njit(**_JIT)
def _count_subtree(adj, n, k0, x0):
    """Count outputs of the enumeration subtree rooted at (adj, k0, x0).

    ``adj`` is a uint64 array indexed by vertex 1..n with bit (v-1)
    standing for vertex v; it is mutated during the walk and restored
    before returning.  Returns the 128-bit count as (lo, hi).
    """
    one = uint64(1)
    zero = uint64(0)
    lo = zero
    hi = zero
    cap = n * n + 8
    st_tag = np.empty(cap, np.uint8)
    st_k = np.empty(cap, np.int64)
    st_x = np.empty(cap, np.int64)
    st_y = np.empty(cap, np.int64)
    sp = 0
    k = k0
    x = x0
    y = 0
    undo = False
    mode = 0  # 0 = fresh call, 1 = candidate loop, 2 = return
    while True:
        if mode == 0:
            if x + 1 == k:
                if k == n:
                    lo += one
                    if lo == zero:
                        hi += one
                    mode = 2
                else:
                    k += 1
                    x = 1
                continue
            if adj[x] & (one << uint64(k - 1)) == zero:
                # branch on graphs without {x,k}: restart at the largest
                # neighbor of x, then add the edge and fall into the loop
                st_tag[sp] = 0
                st_k[sp] = k
                st_x[sp] = x
                st_y[sp] = 0
                sp += 1
                x = _msb(adj[x]) + 1
                continue
            y = x + 1
            undo = False
            mode = 1
            continue
        if mode == 1:
            while y < k and (adj[x] >> uint64(y - 1)) & one == zero:
                y += 1
            if y < k:
                adj[y] |= one << uint64(k - 1)
                adj[k] |= one << uint64(y - 1)
                st_tag[sp] = 2 if undo else 1
                st_k[sp] = k
                st_x[sp] = x
                st_y[sp] = y
                sp += 1
                x = y
                mode = 0
            else:
                if undo:
                    adj[x] &= ~(one << uint64(k - 1))
                    adj[k] &= ~(one << uint64(x - 1))
                mode = 2
            continue
        # mode == 2: return to the saved continuation
        if sp == 0:
            break
        sp -= 1
        tag = st_tag[sp]
        k = st_k[sp]
        x = st_x[sp]
        y = st_y[sp]
        if tag == 0:
            adj[x] |= one << uint64(k - 1)
            adj[k] |= one << uint64(x - 1)
            y = x + 1
            undo = True
        else:
            if y != k - 1:
                adj[y] &= ~(one << uint64(k - 1))
                adj[k] &= ~(one << uint64(y - 1))
            # the next candidate examined is exactly this neighbor
            y = _msb(adj[y]) + 1
            undo = tag == 2
        mode = 1
    return lo, hi


@njit(**_JIT)
def _interleaves(verts, a, b):
    """True if 3 vertices of row a are separated by 2 of row b."""
    a0 = verts[a, 0]
    a3 = verts[a, 3]
    for p in range(3):
        for q in range(p + 1, 4):
            b1 = verts[b, p]
            b2 = verts[b, q]
            if a0 < b1 and a3 > b2:
                for t in range(4):
                    v = verts[a, t]
                    if b1 < v < b2:
                        return True
    return False


@njit(**_JIT)
def _first_circuit(verts):
    """Packed index i*m+j of the first interleaving row pair, or -1."""
    m = verts.shape[0]
    for i in range(m):
        for j in range(i + 1, m):
            if _interleaves(verts, i, j) or _interleaves(verts, j, i):
                return i * m + j
    return -1


# -- python-facing wrappers ---------------------------------------------------


def kernel_available() -> bool:
    return HAVE_NUMBA


def count_subtree(adj: list[int], n: int, k: int, x: int) -> int | None:
    """Exact subtree count via the compiled walk, or None without numba.

    ``adj`` uses the package-wide convention (bit v = vertex v); it is
    converted, not mutated.
    """
    if not HAVE_NUMBA:
        return None
    arr = np.zeros(n + 1, dtype=np.uint64)
    for v in range(1, n + 1):
        arr[v] = adj[v] >> 1
    lo, hi = _count_subtree(arr, n, k, x)
    return (int(hi) << 64) | int(lo)


def _first_circuit_pure(verts) -> int:
    m = len(verts)
    for i in range(m):
        for j in range(i + 1, m):
            if _pure_interleaves(verts, i, j) or _pure_interleaves(verts, j, i):
                return i * m + j
    return -1


def _pure_interleaves(verts, a, b) -> bool:
    ra, rb = verts[a], verts[b]
    a0, a3 = ra[0], ra[3]
    for p in range(3):
        for q in range(p + 1, 4):
            b1, b2 = rb[p], rb[q]
            if a0 < b1 and a3 > b2:
                for v in ra:
                    if b1 < v < b2:
                        return True
    return False


def first_circuit(cells: tuple) -> int:
    """Packed index of the first interleaving cell pair, or -1.

    Pairs are scanned in sorted order (i < j) so the result is
    deterministic and identical between the compiled and pure paths.
    """
    m = len(cells)
    if m < 2:
        return -1
    if HAVE_NUMBA and m >= 8:
        arr = np.array(cells, dtype=np.int64)
        return int(_first_circuit(arr))
    return _first_circuit_pure(cells)
