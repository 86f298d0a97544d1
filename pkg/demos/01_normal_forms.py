"""
Normal forms and word lengths
=============================

Every element of the elliptic Weyl group is ``r0^i a^m b^n``. Here we reduce
a few words, multiply normal forms and read off lengths.
"""

from elliptic_weyl import GroupKind, nf_generator, nf_length, parse_word, reduce_word, sphere

star = GroupKind.A11STAR
a11 = GroupKind.A11

# The Coxeter element squared is central in W, so it is trivial in W/Z.
for text in ["0", "1 1'", "0 1 1' 0 1 1'", "1' 1 1' 1"]:
    x = reduce_word(star, parse_word(star, text))
    print(f"{star.label:10} {text:16} -> {x}  length {nf_length(x)}")

# In A1(1,1) the Coxeter element itself is trivial in W/Z.
for text in ["0 0' 1 1'", "1", "0 1 0 1"]:
    x = reduce_word(a11, parse_word(a11, text))
    print(f"{a11.label:10} {text:16} -> {x}  length {nf_length(x)}")

# Multiplication follows the semidirect product law: r0 inverts a and b.
r1, r1p = nf_generator(star, "1"), nf_generator(star, "1'")
print("r1 * r1' =", r1 * r1p)

# Spheres grow linearly.
print("A1(1,1)* sphere sizes:", [len(sphere(star, n)) for n in range(8)])
print("A1(1,1)  sphere sizes:", [len(sphere(a11, n)) for n in range(8)])
print("length-2 elements of A1(1,1)*:", ", ".join(str(x) for x in sphere(star, 2)))
