"""Distance-regular graphs, association schemes, quotients, screening."""
import numpy as np

from lcdsubspace.drg import (Graph, PermutationGroup, intersection_array,
                             orbit_partition, scheme_from_drg)
from lcdsubspace.schemes import (EquitablePartition, divisibility_screen,
                                 quotient_matrices, verify_quotient_algebra)


def petersen():
    A = np.zeros((10, 10), dtype=np.int64)
    for i in range(5):
        A[i, (i + 1) % 5] = A[(i + 1) % 5, i] = 1          # outer cycle
        A[5 + i, 5 + (i + 2) % 5] = A[5 + (i + 2) % 5, 5 + i] = 1
        A[i, 5 + i] = A[5 + i, i] = 1                      # spokes
    return Graph(A)


g = petersen()
ia = intersection_array(g)
print("Petersen graph:", g)
print("intersection array:", ia)

scheme = scheme_from_drg(g)
print("\ndistance scheme:", scheme, "valencies:", scheme.valencies)
print("p_{1,1}^k for k=0..2:", [int(scheme.tensor[1, 1, k]) for k in range(3)])

# quotients by vertex orbits of an automorphism (rotate the outer cycle,
# the inner star turns with it)
rot = tuple((i + 1) % 5 for i in range(5)) + tuple(5 + (i + 1) % 5 for i in range(5))
grp = PermutationGroup(10, [rot])
part = orbit_partition(grp, g)
print("\norbit partition cells:", part.cells)
qs = quotient_matrices(part, scheme)
for k, M in enumerate(qs.quotients):
    print(f"quotient of A_{k}:\n{M}")
print("quotient algebra carries the same intersection numbers?",
      bool(verify_quotient_algebra(scheme, qs)))

# which class sets survive the divisibility screen, by characteristic
for p in (2, 3, 5):
    print(f"screen p={p}:", divisibility_screen(scheme, p))

square = Graph(np.array([[0, 1, 0, 1],
                         [1, 0, 1, 0],
                         [0, 1, 0, 1],
                         [1, 0, 1, 0]], dtype=np.int64))
sq_scheme = scheme_from_drg(square)
print("\n4-cycle screen p=2:", divisibility_screen(sq_scheme, 2),
      "(class 1 feeds the constructions in demo 05)")

lopsided = EquitablePartition([(0,), (1, 2, 3)], 4)
print("a non-equitable split raises:", end=" ")
try:
    quotient_matrices(lopsided, sq_scheme)
except Exception as exc:
    print(type(exc).__name__, "-", exc)
