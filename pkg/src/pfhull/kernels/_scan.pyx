# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled box scan. Same algorithm and contract as ``_scan_py``."""

cdef enum:
    MAXN = 32

cdef struct ScanState:
    int n
    long long lo, hi, level, first_lo, first_hi, full
    long long bounds[MAXN + 1]
    char checked[MAXN + 1]
    long long desc[MAXN + 1][MAXN]
    long long total


cdef void _rec(ScanState* st, int t, long long psum) noexcept nogil:
    cdef int n = st.n
    cdef int rest = n - t - 1
    cdef long long vmax = st.hi
    cdef long long vmin = st.lo
    cdef long long top = 0
    cdef long long cap, v
    cdef int k, j
    cdef long long* cur = st.desc[t]
    cdef long long* nxt

    cap = st.full - psum - rest * st.lo
    if cap < vmax:
        vmax = cap
    if st.level >= 0:
        cap = st.level - psum - rest * st.lo
        if cap < vmax:
            vmax = cap
        cap = st.level - psum - rest * st.hi
        if cap > vmin:
            vmin = cap
    if t == 0:
        if st.first_lo > vmin:
            vmin = st.first_lo
        if st.first_hi < vmax:
            vmax = st.first_hi
    for k in range(1, t + 1):
        if st.checked[k]:
            cap = st.bounds[k] - top
            if cap < vmax:
                vmax = cap
        top += cur[k - 1]
    if t + 1 < n and st.checked[t + 1]:
        cap = st.bounds[t + 1] - top
        if cap < vmax:
            vmax = cap
    if vmax < vmin:
        return
    if rest == 0:
        st.total += vmax - vmin + 1
        return
    nxt = st.desc[t + 1]
    v = vmin
    while v <= vmax:
        # insert v into the descending prefix
        j = 0
        while j < t and cur[j] >= v:
            nxt[j] = cur[j]
            j += 1
        nxt[j] = v
        while j < t:
            nxt[j + 1] = cur[j]
            j += 1
        _rec(st, t + 1, psum + v)
        v += 1


def count_points(int n, long long lo, long long hi, bounds, checked,
                 long long level=-1, first_lo=None, first_hi=None):
    """Count integer points of ``[lo, hi]^n`` meeting top-k-sum bounds."""
    cdef ScanState st
    cdef int k
    if n < 1 or lo > hi:
        return 0
    if n > MAXN:
        raise ValueError(f"compiled scan supports n <= {MAXN}")
    st.n = n
    st.lo = lo
    st.hi = hi
    st.level = level
    st.first_lo = lo if first_lo is None else first_lo
    st.first_hi = hi if first_hi is None else first_hi
    for k in range(MAXN + 1):
        st.bounds[k] = 0
        st.checked[k] = 0
    for k in range(1, n + 1):
        st.bounds[k] = bounds[k]
        st.checked[k] = 1 if checked[k] else 0
    st.full = st.bounds[n]
    st.total = 0
    with nogil:
        _rec(&st, 0, 0)
    return st.total
