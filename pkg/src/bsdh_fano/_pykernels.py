"""Pure-Python reference kernels.

Same signatures and results as the compiled ``_ckernels`` module.  All
matrices are flat row-major integer sequences; letters are 1-based.

Class codes: 2 = Fano, 1 = weak Fano only, 0 = not weak Fano.
"""


def word_beta(cartan, n, letters):
    r = len(letters)
    out = [0] * (r * r)
    for i in range(r):
        base = (letters[i] - 1) * n - 1
        for j in range(i + 1, r):
            out[i * r + j] = cartan[base + letters[j]]
    return out


def degree_vector(beta, r):
    # entries before the first positive one are <= 0, so the running sum up
    # to that point is the window sum
    d = []
    for i in range(r):
        total = 2
        for j in range(i + 1, r):
            b = beta[i * r + j]
            if b > 0:
                break
            total += b
        d.append(total)
    return d


def _weak_ok(vals):
    k = len(vals)
    if k == 0:
        return True
    if k == 1:
        return vals[0] == -1 or vals[0] == -2
    if k == 2:
        return vals[0] == -1 and vals[1] == -1
    return False


def condition_codes(beta, r):
    codes = []
    for i in range(r):
        npos = 0
        window = []
        for j in range(i + 1, r):
            b = beta[i * r + j]
            if b > 0:
                npos += 1
            elif b < 0 and npos == 0:
                window.append(b)
        if npos <= 1 and window == [-1] or npos == 0 and not window:
            codes.append(2)
        elif _weak_ok(window):
            codes.append(1)
        else:
            codes.append(0)
    return codes


def class_codes(beta, r):
    """(class by conditions, class by degrees) for a flat beta matrix."""
    cond = min(condition_codes(beta, r), default=2)
    low = min(degree_vector(beta, r), default=2)
    deg = 2 if low >= 1 else (1 if low == 0 else 0)
    return cond, deg


def right_multiply(action, cartan, n, i):
    """Action matrix of ``w * s_i`` from that of ``w`` (columns are images of simple roots)."""
    col = [action[k * n + i - 1] for k in range(n)]
    out = list(action)
    base = (i - 1) * n
    for j in range(n):
        coef = cartan[base + j]
        if coef:
            for k in range(n):
                out[k * n + j] -= coef * col[k]
    return out


def column_positive(action, n, i):
    for k in range(n):
        x = action[k * n + i - 1]
        if x:
            return x > 0
    return False


def survey(cartan, n, max_len, cap, first=0):
    """Every reduced word of length <= max_len with both class codes.

    Depth-first, letters tried in increasing order, so words come out in
    lexicographic order.  ``first`` restricts to words starting with that
    letter (and drops the empty word).  Stops once more than ``cap`` words
    have been collected; the caller detects overflow by the list length.
    """
    identity = [0] * (n * n)
    for k in range(n):
        identity[k * n + k] = 1
    out = []
    if not first:
        out.append(((), 2, 2))
    starts = range(1, n + 1) if not first else (first,)
    if max_len < 1:
        return out
    stack = [((i,), right_multiply(identity, cartan, n, i)) for i in reversed(starts)]
    while stack:
        letters, action = stack.pop()
        r = len(letters)
        cond, deg = class_codes(word_beta(cartan, n, letters), r)
        out.append((letters, cond, deg))
        if len(out) > cap:
            return out
        if r < max_len:
            for i in range(n, 0, -1):
                if column_positive(action, n, i):
                    stack.append((letters + (i,), right_multiply(action, cartan, n, i)))
    return out
