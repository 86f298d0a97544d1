"""Verification suites: defining relations, group-law validation, BFS and series checks.

Each suite returns a :class:`SuiteResult`; ``run_all`` strings them together
in the order used by ``elliptic-weyl verify``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from . import series
from .cayley import bfs_lengths
from .group import reduce_word, sphere_sizes
from .reflection import center_failures, relation_central_power
from .words import GroupKind, Word, format_word, word_power

DEFAULT_SEED = 20240517


@dataclass(frozen=True)
class Relation:
    label: str
    lhs: Word
    rhs: Word
    # required power of the central matrix in M(lhs) = C^k M(rhs); None means any
    central_power: int | None = None


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, msg: str):
        self.failures.append(msg)


def _w(text: str) -> Word:
    return tuple(text.split())


def _cat(*parts: Word) -> Word:
    return tuple(g for p in parts for g in p)


POWER_RANGE = range(-5, 6)


def relations(kind: GroupKind | str) -> list[Relation]:
    """Every defining relation and derived identity, as pairs of words equal in W_F."""
    kind = GroupKind.parse(kind)
    out = [Relation(f"r{g}^2 = 1", (g, g), ()) for g in kind.generators]
    if kind is GroupKind.A11STAR:
        perms = ["0 1 1'", "1 1' 0", "1' 0 1", "0 1' 1", "1 0 1'", "1' 1 0"]
        for p in perms:
            w = _w(p)
            out.append(Relation(f"({p})^2 = 1", word_power(w, 2), ()))
            out.append(Relation(f"{p} = reversed", w, tuple(reversed(w))))
        sigma2 = word_power(_w(perms[0]), 2)
        six = [word_power(_w(p), 2) for p in perms[:3]] + [word_power(_w(p), -2) for p in perms[3:]]
        for p, w in zip(perms[1:], six[1:]):
            sign = "" if p in perms[:3] else "-"
            out.append(Relation(f"(0 1 1')^2 = ({p})^{sign}2", sigma2, w, central_power=0))
        a, b = _w("0 1"), _w("0 1'")
        out.append(Relation("ab = ba", _cat(a, b), _cat(b, a)))
        for n in POWER_RANGE:
            out.append(Relation(f"(1 1')^{n} = a^{-n} b^{n}", word_power(_w("1 1'"), n),
                                _cat(word_power(a, -n), word_power(b, n))))
            out.append(Relation(f"(1' 1)^{n} = a^{n} b^{-n}", word_power(_w("1' 1"), n),
                                _cat(word_power(a, n), word_power(b, -n))))
    else:
        a, b = _w("0 0'"), _w("0 1'")
        out += [
            Relation("0 0' 1 1' = 1", _w("0 0' 1 1'"), ()),
            Relation("0 0' = 1' 1", a, _w("1' 1")),
            Relation("0 1' = 0' 1", b, _w("0' 1")),
            Relation("ab = ba", _cat(a, b), _cat(b, a)),
            Relation("1 = 0' 0' 1", _w("1"), _w("0' 0' 1")),
            Relation("1 = 0' 0 1'", _w("1"), _w("0' 0 1'")),
            Relation("1 = 0 a b", _w("1"), _cat(_w("0"), a, b)),
            Relation("0 1 = a b", _w("0 1"), _cat(a, b)),
            Relation("0' 1' = a^-1 b", _w("0' 1'"), _cat(word_power(a, -1), b)),
            Relation("1' 0' = a b^-1", _w("1' 0'"), _cat(a, word_power(b, -1))),
        ]
        for n in POWER_RANGE:
            out.append(Relation(f"(0 1)^{n} = a^{n} b^{n}", word_power(_w("0 1"), n),
                                _cat(word_power(a, n), word_power(b, n))))
            out.append(Relation(f"(1' 0')^{n} = a^{n} b^{-n}", word_power(_w("1' 0'"), n),
                                _cat(word_power(a, n), word_power(b, -n))))
    return out


def relation_suite(kind: GroupKind | str) -> SuiteResult:
    """Each relation as a normal-form equality and as a matrix identity modulo the center."""
    kind = GroupKind.parse(kind)
    res = SuiteResult("relations")
    powers = {}
    for rel in relations(kind):
        res.checked += 1
        x, y = reduce_word(kind, rel.lhs), reduce_word(kind, rel.rhs)
        if x != y:
            res.fail(f"{rel.label}: normal forms differ, {x} vs {y}")
        k = relation_central_power(kind, rel.lhs, rel.rhs)
        powers[rel.label] = k
        if k is None:
            res.fail(f"{rel.label}: matrices differ by a non-central factor")
        elif rel.central_power is not None and k != rel.central_power:
            res.fail(f"{rel.label}: matrices differ by C^{k}, expected C^{rel.central_power}")
    res.details["central_powers"] = powers
    return res


def center_suite(kind: GroupKind | str) -> SuiteResult:
    res = SuiteResult("center")
    res.checked = 1
    for msg in center_failures(kind):
        res.fail(msg)
    return res


def random_word(rng: random.Random, kind: GroupKind, max_len: int) -> Word:
    return tuple(rng.choice(kind.generators) for _ in range(rng.randint(0, max_len)))


def word_pairs(kind: GroupKind | str, count: int = 200, max_len: int = 10,
               seed: int = DEFAULT_SEED) -> list[tuple[Word, Word]]:
    """Deterministic sample of word pairs: half independent, half equal in W_F.

    Equal pairs use an independent spelling: a BFS geodesic of the first word,
    padded with a cancelling ``g g`` when room remains.
    """
    kind = GroupKind.parse(kind)
    rng = random.Random(f"{seed}-{kind.value}")
    report = bfs_lengths(kind, max_len)
    pairs = []
    for k in range(count):
        w1 = random_word(rng, kind, max_len)
        if k % 2 == 0:
            w2 = random_word(rng, kind, max_len)
        else:
            w2 = report.geodesic(reduce_word(kind, w1))
            if len(w2) + 2 <= max_len:
                g = rng.choice(kind.generators)
                pos = rng.randint(0, len(w2))
                w2 = w2[:pos] + (g, g) + w2[pos:]
        pairs.append((w1, w2))
    return pairs


def multiplication_law_suite(kind: GroupKind | str, count: int = 200, max_len: int = 10,
                             seed: int = DEFAULT_SEED) -> SuiteResult:
    """Equal normal forms exactly when the matrices agree up to a central power."""
    kind = GroupKind.parse(kind)
    res = SuiteResult("multiplication-law")
    equal_pairs = 0
    for w1, w2 in word_pairs(kind, count, max_len, seed):
        res.checked += 1
        nf_equal = reduce_word(kind, w1) == reduce_word(kind, w2)
        mat_equal = relation_central_power(kind, w1, w2) is not None
        equal_pairs += nf_equal
        if nf_equal != mat_equal:
            res.fail(f"words [{format_word(w1)}] and [{format_word(w2)}]: "
                     f"normal forms equal={nf_equal}, matrices equal mod center={mat_equal}")
    res.details["equal_pairs"] = equal_pairs
    return res


def bfs_length_suite(kind: GroupKind | str, max_len: int) -> SuiteResult:
    res = SuiteResult("bfs-length-formula")
    report = bfs_lengths(kind, max_len)
    res.checked = report.num_states
    for x, d, f in report.mismatches:
        res.fail(f"{x}: BFS length {d}, formula length {f}")
    res.details["sphere_sizes"] = report.sphere_sizes
    return res


def expected_sphere_size(kind: GroupKind, n: int) -> int:
    if n == 0:
        return 1
    return (3 if kind is GroupKind.A11STAR else 4) * n


def sphere_count_suite(kind: GroupKind | str, max_len: int) -> SuiteResult:
    """BFS sphere sizes, formula-scan sphere sizes, 3n / 4n and the closed-form series all agree."""
    kind = GroupKind.parse(kind)
    res = SuiteResult("sphere-counts")
    bfs = bfs_lengths(kind, max_len).sphere_sizes
    scan = sphere_sizes(kind, max_len)
    closed = series.expand(series.elliptic_closed_form(kind), max_len).coeffs
    for n in range(max_len + 1):
        res.checked += 1
        want = expected_sphere_size(kind, n)
        got = (bfs[n], scan[n], closed[n])
        if got != (want, want, want):
            res.fail(f"n={n}: BFS {bfs[n]}, scan {scan[n]}, closed form {closed[n]}, expected {want}")
    return res


def decomposition_suite(max_len: int) -> SuiteResult:
    res = SuiteResult("six-term-decomposition")
    res.checked = len(series.DECOMPOSITION_NAMES) + 1
    try:
        terms = series.six_term_decomposition(max_len)
    except series.DecompositionMismatch as exc:
        res.fail(str(exc))
        return res
    total = series.TruncatedSeries.zero(max_len)
    for t in terms:
        total = total + t
    closed = series.expand(series.elliptic_closed_form(GroupKind.A11STAR), max_len)
    if not series.series_eq(total, closed):
        k = next(k for k in range(max_len + 1) if total[k] != closed[k])
        res.fail(f"sum of six terms is {total[k]} at q^{k}, closed form gives {closed[k]}")
    return res


def suites(kind: GroupKind | str, max_len: int) -> list[tuple[str, Callable[[], SuiteResult]]]:
    kind = GroupKind.parse(kind)
    out = [
        ("relations", lambda: relation_suite(kind)),
        ("center", lambda: center_suite(kind)),
        ("multiplication-law", lambda: multiplication_law_suite(kind)),
        ("bfs-length-formula", lambda: bfs_length_suite(kind, max_len)),
        ("sphere-counts", lambda: sphere_count_suite(kind, max_len)),
    ]
    if kind is GroupKind.A11STAR:
        out.append(("six-term-decomposition", lambda: decomposition_suite(max_len)))
    return out


def run_all(kind: GroupKind | str, max_len: int) -> list[SuiteResult]:
    return [fn() for _, fn in suites(kind, max_len)]
