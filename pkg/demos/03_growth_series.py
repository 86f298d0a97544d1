"""
Growth series, checked three ways
=================================

The Poincare series of W/Z is compared against (a) a breadth-first search of
the Cayley graph, (b) the closed-form rational functions, and for A1(1,1)*
(c) the six-term lattice decomposition. The classical finite and affine
product formulas are expanded alongside brute-force oracles.
"""

from elliptic_weyl import GroupKind, bfs_lengths, elliptic_closed_form, expand, six_term_decomposition
from elliptic_weyl.oracles import infinite_dihedral_lengths, symmetric_group_lengths
from elliptic_weyl.series import DECOMPOSITION_NAMES, affine_weyl_series, finite_weyl_polynomial

L = 15
for kind in GroupKind:
    report = bfs_lengths(kind, L)
    closed = expand(elliptic_closed_form(kind), L)
    print(f"{kind.label:10} BFS    {report.sphere_sizes}")
    print(f"{'':10} closed {list(closed.coeffs)}   mismatches: {len(report.mismatches)}")

terms = six_term_decomposition(L)
for name, t in zip(DECOMPOSITION_NAMES, terms):
    print(f"  {name}: {list(t.coeffs)}")
print("  sum:", [sum(c) for c in zip(*(t.coeffs for t in terms))])

print("finite A2 :", list(finite_weyl_polynomial([1, 2]).coeffs), "vs S3", symmetric_group_lengths(3))
print("finite A3 :", list(finite_weyl_polynomial([1, 2, 3]).coeffs), "vs S4", symmetric_group_lengths(4))
print("affine A1 :", list(affine_weyl_series([1], 10).coeffs), "vs dihedral", infinite_dihedral_lengths(10))
