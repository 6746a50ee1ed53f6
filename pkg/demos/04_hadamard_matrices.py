"""Hadamard matrices: search, unbiasedness, regularity, the Gramian scheme.

The order-4 search is exhaustive, so the "no third matrix" answer below is
a proof, not a timeout.
"""
import numpy as np

from lcdsubspace.hadamard import (UnbiasedSet, all_hadamard, are_unbiased,
                                  bush_unbiased_pair_16, gramian_B, is_bush,
                                  is_regular, search_unbiased_extension,
                                  sylvester)
from lcdsubspace.constructions import murh_scheme, bush_schemes

H = sylvester(2)
print("Sylvester order 4:\n", H.entries)
print("order-4 Hadamard matrices in total:", len(all_hadamard(4)))

seed = UnbiasedSet([H])
step = search_unbiased_extension(seed, use_bound=False)
A, B = list(step.found)
print("\nfound a partner after exploring", step.nodes, "nodes:")
print(B.entries)
print("pair is unbiased?", bool(are_unbiased(A, B)))

final = search_unbiased_extension(step.found, use_bound=False)
print("third matrix exists?", final.found is not None,
      "| search space exhausted?", final.proven_exhausted)

# the bundled order-16 pair is Bush-type and regular, which unlocks the
# Gramian construction and its two block schemes
pair = bush_unbiased_pair_16()
X, Y = pair
print("\nbundled order-16 pair: regular:",
      bool(is_regular(X)) and bool(is_regular(Y)),
      "| Bush-type:", bool(is_bush(X)) and bool(is_bush(Y)))

uset = UnbiasedSet(list(pair))
B1, B2, B3 = gramian_B(uset)
print("Gramian relations B1/B2/B3 are", B1.shape, "0/1 matrices;"
      " row sums:", int(B1.sum(axis=1)[0]), int(B2.sum(axis=1)[0]),
      int(B3.sum(axis=1)[0]))
scheme3 = murh_scheme(B1, B2, B3, 2, 2)
print("3-class scheme:", scheme3, "valencies:", scheme3.valencies)

pairschemes = bush_schemes(uset)
print("5-class scheme:", pairschemes.five_class,
      "valencies:", pairschemes.five_class.valencies)
print("8-class scheme:", pairschemes.eight_class,
      "valencies:", pairschemes.eight_class.valencies)
one = pairschemes.five_class.mats[1].astype(np.int64)
lhs = one @ one
rhs = 3 * np.eye(48, dtype=np.int64) + 2 * one
print("sample product identity A_1^2 = 3 A_0 + 2 A_1 holds:",
      (lhs == rhs).all())
