"""
The reflection representation
=============================

Each generator acts on h* by ``r_i(h) = h - <h, a_i^vee> a_i``. We build the
exact matrices, check that the Coxeter element (squared, for A1(1,1)*) is
central, and look at how it translates the fundamental weights.
"""

from elliptic_weyl import GroupKind, build_pairing_table, central_matrix, check_center, mat_apply, word_to_matrix
from elliptic_weyl.reflection import relation_central_power

for kind in GroupKind:
    table = build_pairing_table(kind)
    print(f"== {kind.label}, basis {', '.join(table.basis)}")
    for g in kind.generators:
        print(f"r{g}:")
        for row in word_to_matrix(kind, [g]).to_int_rows():
            print("   ", " ".join(f"{v:3d}" for v in row))
    c = central_matrix(kind)
    print("central element commutes with all r_i and acts as expected:", check_center(kind))
    for name in table.basis:
        image = mat_apply(c, table.vector(name))
        shift = image - table.vector(name)
        print(f"  {name:6} -> {name} + {[int(x) for x in shift]}")

# Relations of W/Z hold in W only up to a power of the central matrix.
star = GroupKind.A11STAR
for lhs, rhs in [("0 1 1'", "1' 1 0"), ("0 1 0 1'", "0 1' 0 1")]:
    k = relation_central_power(star, lhs.split(), rhs.split())
    print(f"M({lhs}) = C^{k} M({rhs})")
