# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Littlewood-Richardson expansion.

Same enumeration as ``thagomizer._lr_py``: letters of the content are added as
horizontal strips under the Yamanouchi constraint, with all state held in fixed
C arrays.
"""

cdef enum:
    MAXR = 64

cdef struct LRState:
    int nrows
    int nletters
    int shape[MAXR]
    int content[MAXR]
    int counts[MAXR][MAXR]
    int old_shape[MAXR][MAXR]


cdef void _emit(LRState* st, dict out):
    cdef int r
    cdef list parts = []
    for r in range(st.nrows):
        if st.shape[r] == 0:
            break
        parts.append(st.shape[r])
    key = tuple(parts)
    out[key] = out.get(key, 0) + 1


cdef void _start(LRState* st, int letter, dict out):
    cdef int r
    for r in range(st.nrows):
        st.old_shape[letter][r] = st.shape[r]
    _place(st, letter, 0, st.content[letter], 0, 0, out)


cdef void _place(LRState* st, int letter, int row, int remaining,
                 int cum_prev, int cum_cur, dict out):
    cdef int cap, a, prev_row
    cdef int* old = st.old_shape[letter]
    if remaining == 0:
        if letter + 1 == st.nletters:
            _emit(st, out)
        else:
            _start(st, letter + 1, out)
        return
    if row >= st.nrows:
        return
    if row == 0:
        cap = remaining
    else:
        if old[row - 1] == 0:
            return
        cap = old[row - 1] - old[row]
    if letter > 0:
        if cum_prev - cum_cur < cap:
            cap = cum_prev - cum_cur
        prev_row = st.counts[letter - 1][row]
    else:
        prev_row = 0
    if cap > remaining:
        cap = remaining
    a = cap
    while a >= 0:
        st.shape[row] += a
        st.counts[letter][row] = a
        _place(st, letter, row + 1, remaining - a, cum_prev + prev_row, cum_cur + a, out)
        st.shape[row] -= a
        st.counts[letter][row] = 0
        a -= 1


def lr_expand(lam, mu):
    """Return ``{nu: c}`` with ``s_lam * s_mu = sum c * s_nu``."""
    cdef LRState st
    cdef int i, j
    lam = tuple(lam)
    mu = tuple(mu)
    if not mu:
        return {lam: 1}
    if not lam:
        return {mu: 1}
    if len(lam) + len(mu) > MAXR:
        raise ValueError("partition too long for the compiled kernel")
    st.nrows = len(lam) + len(mu)
    st.nletters = len(mu)
    for i in range(MAXR):
        st.shape[i] = 0
        st.content[i] = 0
        for j in range(MAXR):
            st.counts[i][j] = 0
    for i in range(len(lam)):
        st.shape[i] = lam[i]
    for i in range(len(mu)):
        st.content[i] = mu[i]
    cdef dict out = {}
    _start(&st, 0, out)
    return out
