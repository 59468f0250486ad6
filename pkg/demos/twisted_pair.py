"""The form [[0, i + nj], [conj, 0]] over the Hurwitz order.

Its finite height shrinks like (1 + n^2)^(-1/2), while the finite height of
its trace matrix stays at 1/2, so no inequality can bound the second by a
multiple of the first.

Run:  python demos/twisted_pair.py
"""

from qzero.lemmas import twisted_pair

print(f"{'n':>3}  {'index':>7}  {'Hfin(F)^4':>10}  {'Hfin(B)':>8}  ratio")
for n in range(1, 11):
    rep = twisted_pair(n)
    ratio = rep.Hfin_B / rep.Hfin_O_F
    print(f"{n:>3}  {rep.ideal_index:>7}  {str(rep.Hfin_O_F ** 4):>10}  {str(rep.Hfin_B):>8}  {float(ratio):.4f}")
