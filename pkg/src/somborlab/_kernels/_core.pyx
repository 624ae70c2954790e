# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernels. Mirrors _pure.py statement for statement; that module is
the reference for the algorithm and the cross-backend contract. Keys, edge
lists and class sets must be bit-identical between the two backends
(tests/test_kernels.py enforces this)."""

from libc.string cimport memcmp, memcpy, memset

cdef extern from *:
    int __builtin_popcount(unsigned int) nogil

BACKEND = "cython"
MAX_VERTICES = 16

DEF NMAX = 16
DEF KEYBYTES = 15          # 120 bits >= n(n-1)/2 for n <= 16
DEF NPAIRS = 120           # 16*15/2


cdef struct Part:
    int verts[NMAX]
    int start[NMAX + 1]    # cell k is verts[start[k] .. start[k+1]-1]
    int ncells


cdef void _refine(unsigned int* adj, Part* p) nogil:
    cdef unsigned int masks[NMAX]
    cdef unsigned long long sigs[NMAX]
    cdef int members[NMAX]
    cdef Part q
    cdef int k, i, j, v, sz, pos, a
    cdef unsigned long long sig, key
    while True:
        for k in range(p.ncells):
            masks[k] = 0
            for i in range(p.start[k], p.start[k + 1]):
                masks[k] |= (<unsigned int>1) << p.verts[i]
        q.ncells = 0
        q.start[0] = 0
        pos = 0
        for k in range(p.ncells):
            sz = p.start[k + 1] - p.start[k]
            if sz == 1:
                q.verts[pos] = p.verts[p.start[k]]
                pos += 1
                q.ncells += 1
                q.start[q.ncells] = pos
                continue
            for i in range(sz):
                v = p.verts[p.start[k] + i]
                members[i] = v
                sig = 0
                for j in range(p.ncells):
                    sig |= (<unsigned long long>__builtin_popcount(adj[v] & masks[j])) << (4 * j)
                sigs[i] = sig
            # stable insertion sort by signature, ascending
            for i in range(1, sz):
                key = sigs[i]
                v = members[i]
                a = i - 1
                while a >= 0 and sigs[a] > key:
                    sigs[a + 1] = sigs[a]
                    members[a + 1] = members[a]
                    a -= 1
                sigs[a + 1] = key
                members[a + 1] = v
            for i in range(sz):
                q.verts[pos + i] = members[i]
            i = 0
            while i < sz:
                j = i
                while j < sz and sigs[j] == sigs[i]:
                    j += 1
                q.ncells += 1
                q.start[q.ncells] = pos + j
                i = j
            pos += sz
        if q.ncells == p.ncells:
            return
        p[0] = q


cdef void _pack(unsigned int* adj, int n, int* order, unsigned char* out) nogil:
    # big-endian 15-byte field equal to the pure backend's int.to_bytes(15)
    cdef int nbits = n * (n - 1) // 2
    cdef int p = 0, b, i, j, vj
    memset(out, 0, KEYBYTES)
    for j in range(1, n):
        vj = order[j]
        for i in range(j):
            if (adj[order[i]] >> vj) & 1:
                b = nbits - 1 - p
                out[KEYBYTES - 1 - (b >> 3)] |= (<unsigned char>1) << (b & 7)
            p += 1


cdef void _canon_search(unsigned int* adj, int n, Part* p,
                        unsigned char* best, int* have_best) nogil:
    cdef Part q = p[0]
    cdef Part child
    cdef unsigned char cand[KEYBYTES]
    cdef int target, k, i, pos, v, idx
    _refine(adj, &q)
    target = -1
    for k in range(q.ncells):
        if q.start[k + 1] - q.start[k] > 1:
            target = k
            break
    if target < 0:
        _pack(adj, n, q.verts, cand)
        if not have_best[0] or memcmp(cand, best, KEYBYTES) < 0:
            memcpy(best, cand, KEYBYTES)
            have_best[0] = 1
        return
    cdef int cc, w, jdx, twin
    for idx in range(q.start[target], q.start[target + 1]):
        v = q.verts[idx]
        # twin skip: if an earlier cellmate differs from v by a transposition
        # automorphism, that branch already produced this subtree's leaves
        twin = 0
        for jdx in range(q.start[target], idx):
            w = q.verts[jdx]
            if adj[v] == adj[w] or (adj[v] ^ adj[w]) == (
                    ((<unsigned int>1) << v) | ((<unsigned int>1) << w)):
                twin = 1
                break
        if twin:
            continue
        pos = 0
        cc = 0
        child.start[0] = 0
        for k in range(q.ncells):
            if k == target:
                child.verts[pos] = v
                pos += 1
                cc += 1
                child.start[cc] = pos
                for i in range(q.start[k], q.start[k + 1]):
                    if q.verts[i] != v:
                        child.verts[pos] = q.verts[i]
                        pos += 1
                cc += 1
                child.start[cc] = pos
            else:
                for i in range(q.start[k], q.start[k + 1]):
                    child.verts[pos] = q.verts[i]
                    pos += 1
                cc += 1
                child.start[cc] = pos
        child.ncells = cc
        _canon_search(adj, n, &child, best, have_best)


cdef void _initial_partition(unsigned int* adj, int n, Part* p) nogil:
    # cells grouped by degree, descending; members ascending within a cell
    cdef int degs[NMAX]
    cdef int v, d, pos
    for v in range(n):
        degs[v] = __builtin_popcount(adj[v])
    pos = 0
    p.ncells = 0
    p.start[0] = 0
    for d in range(n - 1, -1, -1):
        for v in range(n):
            if degs[v] == d:
                p.verts[pos] = v
                pos += 1
        if pos > p.start[p.ncells]:
            p.ncells += 1
            p.start[p.ncells] = pos


cdef int _canon_key(unsigned int* adj, int n, unsigned char* out) nogil:
    cdef Part p
    cdef int have = 0
    _initial_partition(adj, n, &p)
    _canon_search(adj, n, &p, out, &have)
    return have


cdef int _connected(unsigned int* adj, int n) nogil:
    cdef unsigned int seen = 1, frontier = 1, reach, f
    cdef int v
    while frontier:
        reach = 0
        f = frontier
        while f:
            v = 0
            while not (f >> v) & 1:
                v += 1
            f &= f - 1
            reach |= adj[v]
        frontier = reach & ~seen
        seen |= frontier
    return seen == ((<unsigned int>1) << n) - 1


cdef _key_to_int(unsigned char* key):
    cdef bytes raw = key[:KEYBYTES]
    return int.from_bytes(raw, "big")


def canon_bits(n, edges):
    """Packed upper-triangle bitstring of the canonical labeling (iso-invariant)."""
    if n < 1 or n > MAX_VERTICES:
        raise ValueError(f"kernel handles 1 <= n <= {MAX_VERTICES}, got {n}")
    cdef unsigned int adj[NMAX]
    cdef unsigned char key[KEYBYTES]
    cdef int cn = n, u, v
    memset(adj, 0, sizeof(adj))
    for e in edges:
        u = e[0]
        v = e[1]
        adj[u] |= (<unsigned int>1) << v
        adj[v] |= (<unsigned int>1) << u
    _canon_key(adj, cn, key)
    return _key_to_int(key)


def bits_to_edges(n, bits):
    """Inverse of the packing under the identity labeling."""
    edges = []
    k = n * (n - 1) // 2
    for j in range(1, n):
        for i in range(j):
            k -= 1
            if (bits >> k) & 1:
                edges.append((i, j))
    return tuple(edges)


def canon_edges(n, edges):
    """Edge list of the canonically relabeled graph (sorted, 0-based)."""
    return bits_to_edges(n, canon_bits(n, edges))


cdef void _enum_rec(int v, int n, int* res, unsigned int* adj, set reps):
    cdef unsigned char key[KEYBYTES]
    cdef int cands[NMAX]
    cdef int ncands = 0, j, r
    if v == n:
        if _connected(adj, n):
            _canon_key(adj, n, key)
            reps.add(_key_to_int(key))
        return
    r = res[v]
    if r == 0:
        _enum_rec(v + 1, n, res, adj, reps)
        return
    for j in range(v + 1, n):
        if res[j] > 0:
            cands[ncands] = j
            ncands += 1
    if ncands < r:
        return
    _choose_rec(v, n, res, adj, reps, cands, ncands, 0, r)


cdef void _choose_rec(int v, int n, int* res, unsigned int* adj, set reps,
                      int* cands, int ncands, int at, int need):
    cdef int i, j, k, limit, nopen, ok
    if need == 0:
        # residual feasibility: every open vertex needs enough open partners
        nopen = 0
        for j in range(v + 1, n):
            if res[j] > 0:
                nopen += 1
        limit = nopen - 1
        ok = 1
        for j in range(v + 1, n):
            if res[j] > 0 and res[j] > limit:
                ok = 0
                break
        if ok:
            _enum_rec(v + 1, n, res, adj, reps)
        return
    for i in range(at, ncands - need + 1):
        j = cands[i]
        res[j] -= 1
        adj[v] |= (<unsigned int>1) << j
        adj[j] |= (<unsigned int>1) << v
        _choose_rec(v, n, res, adj, reps, cands, ncands, i + 1, need - 1)
        res[j] += 1
        adj[v] &= ~((<unsigned int>1) << j)
        adj[j] &= ~((<unsigned int>1) << v)


def enumerate_classes(degrees):
    """All connected isomorphism classes realizing the degree sequence.

    Same contract as the pure backend: degrees non-increasing, vertex i pinned
    to degrees[i], canonical representatives sorted by packed bits.
    """
    degrees = list(degrees)
    n = len(degrees)
    if n < 1 or n > MAX_VERTICES:
        raise ValueError(f"kernel handles 1 <= n <= {MAX_VERTICES}, got {n}")
    if any(d < 1 or d > n - 1 for d in degrees) or sum(degrees) % 2:
        return []
    cdef int res[NMAX]
    cdef unsigned int adj[NMAX]
    cdef int i, cn = n
    memset(adj, 0, sizeof(adj))
    for i in range(cn):
        res[i] = degrees[i]
    reps = set()
    _enum_rec(0, cn, res, adj, reps)
    return [bits_to_edges(n, b) for b in sorted(reps)]


def classes_by_sequence(n, m):
    """Independent cross-check enumerator over all m-subsets of vertex pairs."""
    if n < 2 or n > MAX_VERTICES:
        raise ValueError(f"kernel handles 2 <= n <= {MAX_VERTICES}, got {n}")
    cdef int cn = n, cm = m
    cdef int pu[NPAIRS]
    cdef int pv[NPAIRS]
    cdef int npairs = 0, i, j, k
    for i in range(cn):
        for j in range(i + 1, cn):
            pu[npairs] = i
            pv[npairs] = j
            npairs += 1
    if cm < 0 or cm > npairs:
        return {}
    cdef int idx[NPAIRS]
    cdef unsigned int adj[NMAX]
    cdef unsigned char key[KEYBYTES]
    cdef int degs[NMAX]
    cdef int ok
    for k in range(cm):
        idx[k] = k
    out = {}
    while True:
        memset(adj, 0, sizeof(adj))
        for k in range(cm):
            adj[pu[idx[k]]] |= (<unsigned int>1) << pv[idx[k]]
            adj[pv[idx[k]]] |= (<unsigned int>1) << pu[idx[k]]
        ok = 1
        for i in range(cn):
            degs[i] = __builtin_popcount(adj[i])
            if degs[i] == 0:
                ok = 0
                break
        if ok and _connected(adj, cn):
            seq = tuple(sorted([degs[i] for i in range(cn)], reverse=True))
            _canon_key(adj, cn, key)
            bucket = out.get(seq)
            if bucket is None:
                bucket = set()
                out[seq] = bucket
            bucket.add(_key_to_int(key))
        # advance the combination odometer
        k = cm - 1
        while k >= 0 and idx[k] == npairs - cm + k:
            k -= 1
        if k < 0:
            break
        idx[k] += 1
        for i in range(k + 1, cm):
            idx[i] = idx[i - 1] + 1
    return {key_: frozenset(val) for key_, val in out.items()}
