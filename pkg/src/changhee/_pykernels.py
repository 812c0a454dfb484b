"""Pure-Python integer convolution kernels.

Reference implementation and fallback for ``changhee._ckernels``.  Both
modules expose the same two functions with identical results.
"""


def convolve(a, b):
    """Full linear convolution of two integer sequences."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def convolve2d(A, B, order):
    """Cauchy product of two series of integer polynomials, truncated.

    ``A`` and ``B`` are sequences of rows; row ``k`` holds the integer
    coefficients (ascending in x) of the t^k term.  Rows of the result
    beyond ``order`` are dropped.
    """
    out = []
    for k in range(order + 1):
        acc = []
        for i in range(k + 1):
            if i >= len(A) or k - i >= len(B):
                continue
            ra, rb = A[i], B[k - i]
            if not ra or not rb:
                continue
            n = len(ra) + len(rb) - 1
            if len(acc) < n:
                acc.extend([0] * (n - len(acc)))
            for p, ap in enumerate(ra):
                if ap == 0:
                    continue
                for q, bq in enumerate(rb):
                    acc[p + q] += ap * bq
        out.append(acc)
    return out
