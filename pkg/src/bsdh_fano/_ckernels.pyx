# cython: language_level=3
"""Compiled kernels; a drop-in replacement for ``_pykernels``."""
from libc.stdlib cimport malloc, free


cdef int* _to_c(seq, Py_ssize_t size) except NULL:
    cdef int* buf = <int*> malloc((size if size > 0 else 1) * sizeof(int))
    cdef Py_ssize_t k
    if buf == NULL:
        raise MemoryError()
    for k in range(size):
        buf[k] = seq[k]
    return buf


cdef void _beta(const int* cartan, int n, const int* letters, int r, int* out) noexcept nogil:
    cdef int i, j, base
    for i in range(r * r):
        out[i] = 0
    for i in range(r):
        base = (letters[i] - 1) * n - 1
        for j in range(i + 1, r):
            out[i * r + j] = cartan[base + letters[j]]


cdef int _degree(const int* beta, int r, int i) noexcept nogil:
    cdef int total = 2, j, b
    for j in range(i + 1, r):
        b = beta[i * r + j]
        if b > 0:
            break
        total += b
    return total


cdef int _code(const int* beta, int r, int i) noexcept nogil:
    cdef int npos = 0, nwin = 0, w0 = 0, w1 = 0, j, b
    for j in range(i + 1, r):
        b = beta[i * r + j]
        if b > 0:
            npos += 1
        elif b < 0 and npos == 0:
            if nwin == 0:
                w0 = b
            elif nwin == 1:
                w1 = b
            nwin += 1
    if (npos <= 1 and nwin == 1 and w0 == -1) or (npos == 0 and nwin == 0):
        return 2
    if nwin == 0:
        return 1
    if nwin == 1 and (w0 == -1 or w0 == -2):
        return 1
    if nwin == 2 and w0 == -1 and w1 == -1:
        return 1
    return 0


cdef void _classes(const int* beta, int r, int* cond, int* deg) noexcept nogil:
    cdef int i, c, d, lowc = 2, lowd = 2
    for i in range(r):
        c = _code(beta, r, i)
        if c < lowc:
            lowc = c
        d = _degree(beta, r, i)
        if d < lowd:
            lowd = d
    cond[0] = lowc
    deg[0] = 2 if lowd >= 1 else (1 if lowd == 0 else 0)


cdef void _right_multiply(const int* action, const int* cartan, int n, int i,
                          int* out, int* col) noexcept nogil:
    cdef int j, k, coef, base = (i - 1) * n
    for k in range(n):
        col[k] = action[k * n + i - 1]
    for k in range(n * n):
        out[k] = action[k]
    for j in range(n):
        coef = cartan[base + j]
        if coef:
            for k in range(n):
                out[k * n + j] -= coef * col[k]


cdef bint _column_positive(const int* action, int n, int i) noexcept nogil:
    cdef int k, x
    for k in range(n):
        x = action[k * n + i - 1]
        if x:
            return x > 0
    return False


def word_beta(cartan, int n, letters):
    cdef Py_ssize_t r = len(letters)
    cdef int* c = _to_c(cartan, n * n)
    cdef int* ls = NULL
    cdef int* out = NULL
    try:
        ls = _to_c(letters, r)
        out = <int*> malloc((r * r if r else 1) * sizeof(int))
        _beta(c, n, ls, <int> r, out)
        return [out[k] for k in range(r * r)]
    finally:
        free(c)
        free(ls)
        free(out)


def degree_vector(beta, int r):
    cdef int* b = _to_c(beta, r * r)
    try:
        return [_degree(b, r, i) for i in range(r)]
    finally:
        free(b)


def condition_codes(beta, int r):
    cdef int* b = _to_c(beta, r * r)
    try:
        return [_code(b, r, i) for i in range(r)]
    finally:
        free(b)


def class_codes(beta, int r):
    cdef int* b = _to_c(beta, r * r)
    cdef int cond, deg
    try:
        _classes(b, r, &cond, &deg)
        return cond, deg
    finally:
        free(b)


def right_multiply(action, cartan, int n, int i):
    cdef int* a = _to_c(action, n * n)
    cdef int* c = NULL
    cdef int* out = NULL
    cdef int* col = NULL
    try:
        c = _to_c(cartan, n * n)
        out = <int*> malloc(n * n * sizeof(int))
        col = <int*> malloc(n * sizeof(int))
        _right_multiply(a, c, n, i, out, col)
        return [out[k] for k in range(n * n)]
    finally:
        free(a)
        free(c)
        free(out)
        free(col)


def column_positive(action, int n, int i):
    cdef int* a = _to_c(action, n * n)
    try:
        return bool(_column_positive(a, n, i))
    finally:
        free(a)


def survey(cartan, int n, int max_len, long cap, int first=0):
    """Compiled twin of ``_pykernels.survey``; identical output order."""
    out = []
    if not first:
        out.append(((), 2, 2))
    if max_len < 1:
        return out
    cdef int nn = n * n
    cdef int* c = _to_c(cartan, nn)
    # one action matrix and one "next letter to try" per depth
    cdef int* actions = <int*> malloc((max_len + 1) * nn * sizeof(int))
    cdef int* letters = <int*> malloc((max_len + 1) * sizeof(int))
    cdef int* nexts = <int*> malloc((max_len + 1) * sizeof(int))
    cdef int* beta = <int*> malloc((max_len * max_len + 1) * sizeof(int))
    cdef int* col = <int*> malloc(n * sizeof(int))
    cdef int depth, i, k, cond, deg, lo, hi, limit
    try:
        if actions == NULL or letters == NULL or nexts == NULL or beta == NULL or col == NULL:
            raise MemoryError()
        for k in range(nn):
            actions[k] = 0
        for k in range(n):
            actions[k * n + k] = 1
        lo = first if first else 1
        hi = first if first else n
        depth = 0
        nexts[0] = lo
        while depth >= 0:
            i = nexts[depth]
            limit = hi if depth == 0 else n
            if i > limit:
                depth -= 1
                continue
            nexts[depth] = i + 1
            if not _column_positive(actions + depth * nn, n, i):
                continue
            _right_multiply(actions + depth * nn, c, n, i,
                            actions + (depth + 1) * nn, col)
            letters[depth] = i
            _beta(c, n, letters, depth + 1, beta)
            _classes(beta, depth + 1, &cond, &deg)
            out.append((tuple([letters[k] for k in range(depth + 1)]), cond, deg))
            if len(out) > cap:
                return out
            if depth + 1 < max_len:
                depth += 1
                nexts[depth] = 1
        return out
    finally:
        free(c)
        free(actions)
        free(letters)
        free(nexts)
        free(beta)
        free(col)
