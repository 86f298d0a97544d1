"""Normal-form arithmetic in the elliptic Weyl groups W_F = W/Z.

Every element is written uniquely as ``r0**i * a**m * b**n`` with
``i in {0, 1}`` and integers ``m, n``, where

* A1(1,1)*: ``a = r0 r1``,  ``b = r0 r1'``
* A1(1,1):  ``a = r0 r0'``, ``b = r0 r1'``

``a`` and ``b`` commute and conjugation by ``r0`` inverts both, so W_F is
Z^2 semidirect Z/2 and

    (i, m, n) * (j, p, q) = (i ^ j, (-1)**j m + p, (-1)**j n + q).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .words import GroupKind, Word, check_word


@dataclass(frozen=True, slots=True)
class NormalForm:
    kind: GroupKind
    i: int
    m: int
    n: int

    def __post_init__(self):
        if self.i not in (0, 1):
            raise ValueError(f"parity must be 0 or 1, got {self.i}")

    @property
    def key(self) -> tuple[int, int, int]:
        return (self.i, self.m, self.n)

    def __mul__(self, other: NormalForm) -> NormalForm:
        return nf_multiply(self, other)

    def __str__(self):
        return f"({self.i},{self.m},{self.n})"


def identity(kind: GroupKind | str) -> NormalForm:
    return NormalForm(GroupKind.parse(kind), 0, 0, 0)


_GENERATORS = {
    GroupKind.A11STAR: {"0": (1, 0, 0), "1": (1, 1, 0), "1'": (1, 0, 1)},
    # r1 = r0 (r0 r0') (r0 r1')
    GroupKind.A11: {"0": (1, 0, 0), "0'": (1, 1, 0), "1'": (1, 0, 1), "1": (1, 1, 1)},
}


def nf_generator(kind: GroupKind | str, g: str) -> NormalForm:
    kind = GroupKind.parse(kind)
    try:
        return NormalForm(kind, *_GENERATORS[kind][g])
    except KeyError:
        raise ValueError(f"{g!r} is not a generator of {kind.value}") from None


def generator_keys(kind: GroupKind) -> dict[str, tuple[int, int, int]]:
    return dict(_GENERATORS[kind])


def multiply_keys(x: tuple[int, int, int], y: tuple[int, int, int]) -> tuple[int, int, int]:
    """The group law on bare ``(i, m, n)`` triples."""
    i, m, n = x
    j, p, q = y
    if j:
        return (i ^ 1, p - m, q - n)
    return (i, m + p, n + q)


def nf_multiply(x: NormalForm, y: NormalForm) -> NormalForm:
    if x.kind is not y.kind:
        raise ValueError(f"cannot multiply elements of {x.kind.value} and {y.kind.value}")
    return NormalForm(x.kind, *multiply_keys(x.key, y.key))


def nf_invert(x: NormalForm) -> NormalForm:
    if x.i:
        return x
    return NormalForm(x.kind, 0, -x.m, -x.n)


def length_of(kind: GroupKind, i: int, m: int, n: int) -> int:
    mx = max(abs(m), abs(n))
    if kind is GroupKind.A11:
        if i == 0:
            return 2 * mx
        return 2 * mx - 1 if m + n > 0 else 2 * mx + 1
    if i == 0:
        if m * n >= 0:
            return 2 * (abs(m) + abs(n))
        return 2 * mx
    if m >= 0 and n >= 0 and (m, n) != (0, 0):
        return 2 * (m + n) - 1
    if m <= 0 and n <= 0:
        return 2 * (abs(m) + abs(n)) + 1
    return 2 * mx - 1 if m + n > 0 else 2 * mx + 1


def nf_length(x: NormalForm) -> int:
    """Word length in the generators, from the closed-form case tables."""
    return length_of(x.kind, x.i, x.m, x.n)


def length_array(kind: GroupKind, i: int, m: np.ndarray, n: np.ndarray) -> np.ndarray:
    """Vectorised :func:`length_of` over integer arrays."""
    m = np.asarray(m, dtype=np.int64)
    n = np.asarray(n, dtype=np.int64)
    mx = np.maximum(np.abs(m), np.abs(n))
    s = m + n
    if kind is GroupKind.A11:
        if i == 0:
            return 2 * mx
        return np.where(s > 0, 2 * mx - 1, 2 * mx + 1)
    l1 = 2 * (np.abs(m) + np.abs(n))
    mixed = m * n < 0
    if i == 0:
        return np.where(mixed, 2 * mx, l1)
    out = np.where(s > 0, 2 * mx - 1, 2 * mx + 1)
    out = np.where((m <= 0) & (n <= 0), l1 + 1, out)
    out = np.where((m >= 0) & (n >= 0) & (s > 0), l1 - 1, out)
    return out


def reduce_word(kind: GroupKind | str, word: Sequence[str]) -> NormalForm:
    kind = GroupKind.parse(kind)
    word = check_word(kind, word)
    gens = _GENERATORS[kind]
    key = (0, 0, 0)
    for g in word:
        key = multiply_keys(key, gens[g])
    return NormalForm(kind, *key)


def normal_form_word(x: NormalForm) -> Word:
    """A (generally non-geodesic) word spelling ``r0**i a**m b**n``."""
    if x.kind is GroupKind.A11STAR:
        a, b = ("0", "1"), ("0", "1'")
    else:
        a, b = ("0", "0'"), ("0", "1'")
    inv = lambda w: tuple(reversed(w))
    word = ("0",) * x.i
    word += (a if x.m >= 0 else inv(a)) * abs(x.m)
    word += (b if x.n >= 0 else inv(b)) * abs(x.n)
    return word


def sphere(kind: GroupKind | str, length: int) -> list[NormalForm]:
    """All elements of the given word length, ordered by (i, m, n).

    Every case of the length formulas gives ``length >= 2 max(|m|, |n|) - 1``,
    so scanning ``max(|m|, |n|) <= (length + 1) // 2`` is exhaustive.
    """
    kind = GroupKind.parse(kind)
    if length < 0:
        return []
    bound = (length + 1) // 2
    r = np.arange(-bound, bound + 1)
    mm, nn = np.meshgrid(r, r, indexing="ij")
    out = []
    for i in (0, 1):
        hit = length_array(kind, i, mm, nn) == length
        out.extend(NormalForm(kind, i, int(m), int(n)) for m, n in zip(mm[hit], nn[hit]))
    return out


def sphere_sizes(kind: GroupKind | str, max_len: int) -> list[int]:
    """``[len(sphere(kind, l)) for l in 0..max_len]`` from one lattice scan."""
    kind = GroupKind.parse(kind)
    bound = (max_len + 1) // 2
    r = np.arange(-bound, bound + 1)
    mm, nn = np.meshgrid(r, r, indexing="ij")
    counts = np.zeros(max_len + 1, dtype=np.int64)
    for i in (0, 1):
        lengths = length_array(kind, i, mm, nn).ravel()
        lengths = lengths[lengths <= max_len]
        counts += np.bincount(lengths, minlength=max_len + 1)
    return [int(c) for c in counts]


def elements_in_box(kind: GroupKind | str, radius: int) -> Iterable[NormalForm]:
    kind = GroupKind.parse(kind)
    r = range(-radius, radius + 1)
    for i in (0, 1):
        for m in r:
            for n in r:
                yield NormalForm(kind, i, m, n)
