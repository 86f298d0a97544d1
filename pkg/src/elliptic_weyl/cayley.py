"""Breadth-first search over the Cayley graph of W_F.

States are normal forms, edges are right multiplication by a generator.
First-visit depth is the true word length; the closed-form length is only
consulted afterwards, to fill ``BfsReport.mismatches``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .group import NormalForm, generator_keys, multiply_keys, nf_length
from .words import GroupKind

MAX_STATES_ENV = "ELLIPTIC_WEYL_MAX_STATES"
DEFAULT_MAX_STATES = 10_000_000


class StateLimitExceeded(RuntimeError):
    pass


def _max_states() -> int:
    raw = os.environ.get(MAX_STATES_ENV)
    if raw is None:
        return DEFAULT_MAX_STATES
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{MAX_STATES_ENV} must be an integer, got {raw!r}") from None


@dataclass
class BfsReport:
    kind: GroupKind
    max_len: int
    lengths: dict[NormalForm, int]
    sphere_sizes: list[int]
    mismatches: list[tuple[NormalForm, int, int]] = field(default_factory=list)
    # parent pointers for geodesic recovery: key -> (parent key, generator)
    parents: dict[tuple[int, int, int], tuple[tuple[int, int, int], str]] = field(default_factory=dict, repr=False)

    @property
    def num_states(self) -> int:
        return len(self.lengths)

    def geodesic(self, x: NormalForm) -> tuple[str, ...]:
        """A shortest word for ``x`` read off the BFS tree."""
        key = x.key
        word = []
        while key != (0, 0, 0):
            key, g = self.parents[key]
            word.append(g)
        return tuple(reversed(word))


def _bfs(kind: GroupKind, max_len: int, max_states: int | None):
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    limit = _max_states() if max_states is None else max_states
    gens = list(generator_keys(kind).items())
    start = (0, 0, 0)
    depth = {start: 0}
    parents = {}
    frontier = [start]
    sizes = [1]
    for d in range(1, max_len + 1):
        nxt = []
        for x in frontier:
            for g, gk in gens:
                y = multiply_keys(x, gk)
                if y not in depth:
                    depth[y] = d
                    parents[y] = (x, g)
                    nxt.append(y)
        if len(depth) > limit:
            raise StateLimitExceeded(
                f"BFS visited {len(depth)} states, above the cap of {limit} ({MAX_STATES_ENV})"
            )
        sizes.append(len(nxt))
        frontier = nxt
    return depth, parents, sizes


def bfs_lengths(kind: GroupKind | str, max_len: int, max_states: int | None = None) -> BfsReport:
    kind = GroupKind.parse(kind)
    depth, parents, sizes = _bfs(kind, max_len, max_states)
    lengths = {}
    mismatches = []
    for key, d in depth.items():
        x = NormalForm(kind, *key)
        lengths[x] = d
        f = nf_length(x)
        if f != d:
            mismatches.append((x, d, f))
    mismatches.sort(key=lambda t: (t[1], t[0].key))
    return BfsReport(kind, max_len, lengths, sizes, mismatches, parents)


def verify_length_formula(kind: GroupKind | str, max_len: int) -> bool:
    return not bfs_lengths(kind, max_len).mismatches


def dump_cayley(kind: GroupKind | str, max_len: int) -> list[tuple[NormalForm, str, NormalForm]]:
    """Edges out of every element of length <= max_len - 1, sorted by (length, source, generator)."""
    kind = GroupKind.parse(kind)
    if max_len <= 0:
        return []
    depth, _, _ = _bfs(kind, max_len - 1, None)
    gens = list(generator_keys(kind).items())
    sources = sorted(depth, key=lambda k: (depth[k], k))
    return [
        (NormalForm(kind, *x), g, NormalForm(kind, *multiply_keys(x, gk)))
        for x in sources
        for g, gk in gens
    ]


def format_edges(edges) -> str:
    lines = [
        f"{s.i},{s.m},{s.n}\t{g}\t{t.i},{t.m},{t.n}"
        for s, g, t in edges
    ]
    return "".join(line + "\n" for line in lines)
