"""Brute-force length distributions of small classical Weyl groups.

These do not touch the series code and serve as its independent check.
"""

from __future__ import annotations

import itertools
from collections import deque


def symmetric_group_lengths(n: int) -> list[int]:
    """Length distribution of the symmetric group on n letters (Weyl group of A_{n-1}).

    Length of a permutation in adjacent transpositions is its inversion count.
    """
    counts = [0] * (n * (n - 1) // 2 + 1)
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
        counts[inv] += 1
    return counts


def infinite_dihedral_lengths(max_len: int) -> list[int]:
    """Sphere sizes of <s, t | s^2 = t^2 = 1>, by BFS over freely reduced words."""
    seen = {()}
    queue = deque([()])
    counts = [0] * (max_len + 1)
    counts[0] = 1
    while queue:
        w = queue.popleft()
        if len(w) == max_len:
            continue
        for g in "st":
            v = w[:-1] if w and w[-1] == g else w + (g,)
            if v not in seen:
                seen.add(v)
                counts[len(v)] += 1
                queue.append(v)
    return counts
