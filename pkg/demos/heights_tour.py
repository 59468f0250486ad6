"""A walk through the heights on Q^N and on D^N, with exact values throughout.

Run:  python demos/heights_tour.py
"""

from fractions import Fraction

from qzero import Algebra, SubspaceD, hurwitz_order, standard_order
from qzero.heights import (
    H_O_vector,
    Hfin_O,
    Hinf_D,
    grassmann,
    h_D,
    height_H,
    height_h,
    height_subspace_D,
    height_subspace_K,
    orthogonal_complement,
)
from qzero.lemmas import image_height
from qzero.trace_form import subspace_image

A = Algebra(-1, -1)
OD, H = standard_order(A), hurwitz_order(A)

print("Heights on Q^N")
print("  H(2, 4)        =", height_H([2, 4]), "(the primitive multiple is (1, 2))")
print("  h(1/2)         =", height_h([Fraction(1, 2)]))
X = [[1, 0, 1], [0, 1, 1]]
print("  grassmann      =", [str(g) for g in grassmann(list(zip(*X)))])
print("  H(span)        =", height_subspace_K(X))

print()
print("Heights on D^N over the Hamilton quaternions")
x = (A.one, A.i)
print("  Hinf(1, i)     =", Hinf_D(x))
print("  h(2)           =", h_D((A.scalar(2),)))
print("  H^O_D(1, i)    =", H_O_vector(OD, x))
for n in (1, 2, 3):
    q = A.quat(0, 1, n)
    print(f"  Hfin^Hurwitz(i + {n}j) = {Hfin_O(H, (q,))}")

print()
Z = SubspaceD.from_basis(A, [x])
print("The line Z = span{(1, i)} in D^2")
print("  H^O_D(Z)       =", height_subspace_D(OD, Z))
print("  its complement is spanned by", orthogonal_complement(Z).basis[0])
print("  H^O_D(Z perp)  =", height_subspace_D(OD, orthogonal_complement(Z)))
print("  V_Z has", len(subspace_image(Z)), "rational basis vectors in Q^8")
lhs, rhs = image_height(Z)
print(f"  H(V_Z) = {lhs} and H^O_D(Z)^4 = {rhs}")
