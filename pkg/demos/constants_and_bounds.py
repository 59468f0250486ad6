"""The explicit constants behind the small-zero bound, as certified enclosures.

Run:  python demos/constants_and_bounds.py
"""

from qzero import Algebra, hurwitz_order, standard_order
from qzero.constants import A_K, B_K, C_K, r_real, s_t_constants
from qzero.orders import frakM


def show(name, b):
    print(f"  {name:<22} [{b.lo:.15g}, {b.hi:.15g}]")


print("Field constants for Q")
show("r(1)", r_real(1))
show("C(1)", C_K(1))
show("C(3)", C_K(3))
show("B(4)", B_K(4))

print()
for ab in [(-1, -1), (-2, -3), (-2, -5)]:
    A = Algebra(*ab)
    s, t = s_t_constants(A)
    print(f"alpha, beta = {ab}: s = {s}, t = {t}")
    for N, L in [(2, 1), (2, 2), (3, 2)]:
        show(f"A(N={N}, L={L})", A_K(N, L, A, standard_order(A)))

print()
A = Algebra(-1, -1)
H = hurwitz_order(A)
print(f"With the Hurwitz order the order constant is {frakM(H)}, so for N=2, L=1 the")
print("constant grows by its fourth power:")
show("A over O_D", A_K(2, 1, A, standard_order(A)))
show("A over Hurwitz", A_K(2, 1, A, H))
