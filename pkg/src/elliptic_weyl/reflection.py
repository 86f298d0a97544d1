"""Reflection representation of the two elliptic Weyl groups on h*.

Bases (fixed order, so matrix fixtures are stable):

* A1(1,1)*: ``L0, L1, a1, delta, eps`` with ``delta = a0 + 2 a1`` and
  ``eps = a1 - a1'``.
* A1(1,1):  ``Ls, L0, L1, a0, a1, eps`` where h* is the quotient by
  ``a0 - a0' = a1 - a1'`` and ``eps`` is that common difference, so
  ``a0' = a0 - eps`` and ``a1' = a1 - eps``.

Matrices act on column vectors of coordinates; a word ``g1 ... gk`` maps to
``M(g1) @ ... @ M(gk)``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .exact import ExactMatrix, ExactVector, mat_apply, mat_mul, mat_pow
from .words import GroupKind, Word, check_word, inverse_word


@dataclass(frozen=True)
class PairingTable:
    kind: GroupKind
    cartan_order: tuple[str, ...]
    # cartan[r][c] = <alpha_r^vee, alpha_c> in cartan_order
    cartan: tuple[tuple[int, ...], ...]
    basis: tuple[str, ...]
    # basis_pairings[b][g] = <b, alpha_g^vee>
    basis_pairings: Mapping[str, Mapping[str, int]]
    simple_root_coords: Mapping[str, ExactVector]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def cartan_entry(self, coroot: str, root: str) -> int:
        return self.cartan[self.cartan_order.index(coroot)][self.cartan_order.index(root)]

    def pairing(self, v: ExactVector, gen: str) -> Fraction:
        """<v, alpha_gen^vee> for a coordinate vector v."""
        return sum((v[k] * self.basis_pairings[b][gen] for k, b in enumerate(self.basis)), Fraction(0))

    def vector(self, name: str) -> ExactVector:
        """Coordinates of a named element: basis names, ``a<gen>``, ``delta``, ``delta'``."""
        if name in self.basis:
            return ExactVector.unit(self.dim, self.basis.index(name))
        if name.startswith("a") and name[1:] in self.simple_root_coords:
            return self.simple_root_coords[name[1:]]
        eps = self.vector("eps")
        if name == "delta":
            if self.kind is GroupKind.A11STAR:
                return self.vector("a0") + 2 * self.vector("a1")
            return self.vector("a0") + self.vector("a1")
        if name == "delta'":
            return self.vector("delta") - 2 * eps
        raise KeyError(name)


@dataclass(frozen=True)
class ReflectionSet:
    kind: GroupKind
    matrices: Mapping[str, ExactMatrix]


@functools.lru_cache(maxsize=None)
def build_pairing_table(kind: GroupKind | str) -> PairingTable:
    kind = GroupKind.parse(kind)
    if kind is GroupKind.A11STAR:
        order = ("0", "1", "1'")
        cartan = ((2, -1, -1),
                  (-4, 2, 2),
                  (-4, 2, 2))
        basis = ("L0", "L1", "a1", "delta", "eps")
        e = {b: ExactVector.unit(5, k) for k, b in enumerate(basis)}
        roots = {
            "0": e["delta"] - 2 * e["a1"],
            "1": e["a1"],
            "1'": e["a1"] - e["eps"],
        }
        col = {g: {h: cartan[order.index(h)][order.index(g)] for h in order} for g in order}
        pairings = {
            "L0": {"0": 1, "1": 0, "1'": 0},
            "L1": {"0": 0, "1": 1, "1'": 0},
            "a1": col["1"],
            "delta": {h: col["0"][h] + 2 * col["1"][h] for h in order},
            "eps": {h: col["1"][h] - col["1'"][h] for h in order},
        }
    else:
        order = ("0", "1", "0'", "1'")
        cartan = ((2, -2, 2, -2),
                  (-2, 2, -2, 2),
                  (2, -2, 2, -2),
                  (-2, 2, -2, 2))
        basis = ("Ls", "L0", "L1", "a0", "a1", "eps")
        e = {b: ExactVector.unit(6, k) for k, b in enumerate(basis)}
        roots = {
            "0": e["a0"],
            "0'": e["a0"] - e["eps"],
            "1": e["a1"],
            "1'": e["a1"] - e["eps"],
        }
        col = {g: {h: cartan[order.index(h)][order.index(g)] for h in order} for g in order}

        def lam(i):
            # <L_i, a_j^vee> = delta_ij, <L_i, a_j'^vee> = -delta_{i,1-j}
            out = {}
            for j in (0, 1):
                out[str(j)] = int(i == j)
                out[f"{j}'"] = -int(i == 1 - j)
            return out

        pairings = {
            "Ls": {h: 1 for h in order},
            "L0": lam(0),
            "L1": lam(1),
            "a0": col["0"],
            "a1": col["1"],
            "eps": {h: col["0"][h] - col["0'"][h] for h in order},
        }
    return PairingTable(
        kind=kind,
        cartan_order=order,
        cartan=cartan,
        basis=basis,
        basis_pairings=pairings,
        simple_root_coords=roots,
    )


def build_reflections(table: PairingTable) -> ReflectionSet:
    mats = {}
    for g in table.kind.generators:
        root = table.simple_root_coords[g]
        cols = []
        for k, b in enumerate(table.basis):
            cols.append(ExactVector.unit(table.dim, k) - table.basis_pairings[b][g] * root)
        mats[g] = ExactMatrix.from_columns(cols)
    return ReflectionSet(kind=table.kind, matrices=mats)


@functools.lru_cache(maxsize=None)
def reflections(kind: GroupKind | str) -> ReflectionSet:
    return build_reflections(build_pairing_table(kind))


def word_to_matrix(rs: ReflectionSet | GroupKind | str, word: Sequence[str]) -> ExactMatrix:
    if not isinstance(rs, ReflectionSet):
        rs = reflections(GroupKind.parse(rs))
    word = check_word(rs.kind, word)
    dim = next(iter(rs.matrices.values())).dim
    out = ExactMatrix.identity(dim)
    for g in word:
        out = mat_mul(out, rs.matrices[g])
    return out


def central_word(kind: GroupKind | str) -> Word:
    """Word of the generator of the center: sigma^2 for A1(1,1)*, sigma for A1(1,1)."""
    kind = GroupKind.parse(kind)
    if kind is GroupKind.A11STAR:
        return kind.coxeter_word * 2
    return kind.coxeter_word


@functools.lru_cache(maxsize=None)
def central_matrix(kind: GroupKind | str) -> ExactMatrix:
    return word_to_matrix(kind, central_word(kind))


@functools.lru_cache(maxsize=None)
def _central_inverse(kind: GroupKind) -> ExactMatrix:
    return word_to_matrix(kind, inverse_word(central_word(kind)))


def central_power(kind: GroupKind | str, m: ExactMatrix) -> int | None:
    """The integer k with ``m == C**k`` for the central matrix C, or None."""
    kind = GroupKind.parse(kind)
    c = central_matrix(kind)
    ident = ExactMatrix.identity(c.dim)
    nil = c - ident
    diff = m - ident
    # C = I + N with N != 0, so any C**k is pinned down by one nonzero entry of N
    p = next(k for k, x in enumerate(nil.entries) if x)
    ratio = diff.entries[p] / nil.entries[p]
    if ratio.denominator != 1:
        return None
    k = int(ratio)
    if mat_pow(c, k, _central_inverse(kind)) != m:
        return None
    return k


def relation_central_power(kind: GroupKind | str, lhs: Sequence[str], rhs: Sequence[str]) -> int | None:
    """k with ``M(lhs) == C**k @ M(rhs)``; None if the words differ outside the center."""
    kind = GroupKind.parse(kind)
    d = mat_mul(word_to_matrix(kind, lhs), word_to_matrix(kind, inverse_word(rhs)))
    return central_power(kind, d)


def center_failures(kind: GroupKind | str) -> list[str]:
    """Describe every way the central matrix fails its expected action; empty if none."""
    kind = GroupKind.parse(kind)
    table = build_pairing_table(kind)
    rs = reflections(kind)
    c = central_matrix(kind)
    v = table.vector
    failures = []
    for g, r in rs.matrices.items():
        if mat_mul(c, r) != mat_mul(r, c):
            failures.append(f"central element does not commute with r{g}")
    if kind is GroupKind.A11STAR:
        expected = {
            "L0": v("L0") + 4 * v("eps"),
            "L1": v("L1") - v("delta'"),
        }
        fixed = ["a0", "a1", "a1'", "delta", "delta'", "eps"]
    else:
        expected = {
            "Ls": v("Ls") + 2 * v("eps"),
            "L0": v("L0") - v("delta") + v("eps"),
            "L1": v("L1") - v("delta") + v("eps"),
        }
        fixed = ["a0", "a0'", "a1", "a1'", "delta", "delta'", "eps"]
    for name in fixed:
        expected[name] = v(name)
    for name, want in expected.items():
        got = mat_apply(c, v(name))
        if got != want:
            failures.append(f"central element maps {name} to {got}, expected {want}")
    return failures


def check_center(kind: GroupKind | str) -> bool:
    return not center_failures(kind)
