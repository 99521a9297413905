"""Slow, independent reference implementations used only by the tests.

Nothing here imports the package's DTW code: the recursion is written out
over Python lists, exactly as the cumulative-cost definition reads.
"""

import math

INF = math.inf


def rotate_list(values, k):
    values = list(values)
    return values[k:] + values[:k]


def reference_dtw(t, s, radius=None):
    """sqrt of the terminal cumulative squared cost; ``radius=None`` means unbanded."""
    t = [float(x) for x in t]
    s = [float(x) for x in s]
    m, n = len(t), len(s)
    acc = [[INF] * n for _ in range(m)]
    for i in range(m):
        for j in range(n):
            if radius is not None and abs(i - j) > radius:
                continue
            d = t[i] - s[j]
            cost = d * d
            if i == 0 and j == 0:
                acc[i][j] = cost
                continue
            up = acc[i - 1][j] if i > 0 else INF
            left = acc[i][j - 1] if j > 0 else INF
            diag = acc[i - 1][j - 1] if i > 0 and j > 0 else INF
            acc[i][j] = cost + min(up, left, diag)
    return math.sqrt(acc[m - 1][n - 1])


def reference_shift_dtw(t, s, r):
    """Minimum over offsets 0, 2r+1, ... of banded DTW on the rotated first series.

    Returns (distance, offset); the earliest offset wins ties.
    """
    m = len(t)
    best, best_offset = INF, None
    for offset in range(0, m, 2 * r + 1):
        d = reference_dtw(rotate_list(t, offset), s, r)
        if d < best:
            best, best_offset = d, offset
    return best, best_offset


def reference_euclidean(t, s):
    total = 0.0
    for a, b in zip(t, s):
        d = float(a) - float(b)
        total += d * d
    return math.sqrt(total)


def path_cost(t, s, path):
    return math.sqrt(sum((float(t[i]) - float(s[j])) ** 2 for i, j in path))


def all_warping_paths(m, n):
    """Every monotone path from (0, 0) to (m-1, n-1); tiny sizes only."""
    def walk(i, j):
        if (i, j) == (m - 1, n - 1):
            yield [(i, j)]
            return
        for di, dj in ((1, 0), (0, 1), (1, 1)):
            a, b = i + di, j + dj
            if a < m and b < n:
                for rest in walk(a, b):
                    yield [(i, j)] + rest
    yield from walk(0, 0)
