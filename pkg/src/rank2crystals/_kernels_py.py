"""Pure-Python kernels; the reference behaviour for the compiled module."""
import math


def prefix_scan(terms):
    """Scan ``[(s, e), ...]`` sorted by s for the prefix sums S(r) = sum_{s <= r} e.

    Returns ``(phi, n_f, n_e)``: phi = max_r S(r) (the empty prefix counts, so
    phi >= 0), n_f the least r with S(r) = phi, n_e the greatest.  n_f is
    ``-inf`` when only the empty prefix attains phi; n_e is ``+inf`` when the
    full sum attains it.
    """
    best = 0
    first = -1
    last = -1
    running = 0
    for idx, (_, e) in enumerate(terms):
        running += e
        if running > best:
            best = running
            first = last = idx
        elif running == best:
            last = idx
    n_f = terms[first][0] if first >= 0 else -math.inf
    n_e = terms[last + 1][0] - 1 if last + 1 < len(terms) else math.inf
    return best, n_f, n_e


def height_scan(slopes, nums):
    """Breakpoint heights of a piecewise-linear path, over a common denominator.

    Segment l has slope ``slopes[l]`` between ``nums[l]`` and ``nums[l+1]``.
    Returns ``(Y, low, first, last)``: Y[j] the height at breakpoint j
    (Y[0] = 0), low = min Y, and the first and last index attaining it.
    """
    Y = [0]
    y = low = 0
    first = last = 0
    for l, slope in enumerate(slopes):
        y += slope * (nums[l + 1] - nums[l])
        Y.append(y)
        if y < low:
            low = y
            first = last = l + 1
        elif y == low:
            last = l + 1
    return Y, low, first, last
