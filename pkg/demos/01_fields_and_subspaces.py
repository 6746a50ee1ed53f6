"""Tour of the finite-field layer and the subspace metric.

Run with:  python3 demos/01_fields_and_subspaces.py
"""
import numpy as np

from lcdsubspace.gf import field_new, field_from_order
from lcdsubspace.subspaces import (span, distance, dual, intersect, is_lcd,
                                   pairwise_lcd, projector_complement)

f4 = field_from_order(4)
print(f"{f4}: elements are integers 0..3, encoded base-{f4.p} by polynomial "
      f"coefficients, modulus {f4.modulus}")
print("  2 * 3 =", f4.mul(2, 3))
print("  inverse table:", {a: f4.inv(a) for a in range(1, 4)})

f2 = field_new(2)
U = span(f2, 4, [[1, 0, 1, 0], [0, 1, 0, 1]])
W = span(f2, 4, [[1, 0, 0, 0], [0, 1, 0, 0]])
print("\nU basis (canonical rref rows):", U.basis.tolist())
print("W basis:", W.basis.tolist())
print("dim(U meet W) =", intersect(U, W).dim)
print("subspace distance d(U, W) =", distance(U, W))

D = dual(U)
print("\ndual of U:", D.basis.tolist())
chk = is_lcd(U)
print("U meets its dual trivially?", bool(chk), "(gram det =", chk.gram_det,
      "radical dim =", chk.radical_dim, ")")
print("over F_2 this U is self-orthogonal, so no complement projector exists")

# the complement projector exists exactly when the subspace is LCD; row
# vectors map onto the orthogonal complement along it, so it is the kernel
L = span(f2, 4, [[1, 1, 1, 0], [0, 0, 0, 1]])
print("\nL basis:", L.basis.tolist(), "is_lcd:", bool(is_lcd(L)))
P = projector_complement(L)
print("projector P =\n", np.asarray(P))
for row in L.basis:
    assert not f2.matmul(row[None, :], P).any()
print("every row of L maps to zero under P (kernel check passed)")

V = span(f2, 4, [[1, 1, 0, 0]])
print("\npairwise check U vs V:", bool(pairwise_lcd(U, V)))
print("pairwise check L vs V:", bool(pairwise_lcd(L, V)))
