"""Find a basis of zeros of a hermitian form step by step, then certify it.

Run:  python demos/solve_walkthrough.py
"""

import random

from qzero import Algebra, SolverConfig, solve
from qzero.instances import hyperbolic_instance, planted_zero_instance
from qzero.quaternion import eval_hermitian
from qzero.solver import find_isotropic_vector, isotropic_basis, radical, select_D_basis
from qzero.trace_form import build_trace_matrix, eval_Q, subspace_image

A = Algebra(-1, -1)
inst = hyperbolic_instance(A, 2)
F, Z = inst.F, inst.Z

Qf = build_trace_matrix(F)
V = subspace_image(Z)
print(f"The trace form is a {Qf.dim} x {Qf.dim} rational quadratic form.")
print("Radical on V_Z:", radical(Qf, V) or "none, so the restriction is nondegenerate")

z1 = find_isotropic_vector(Qf, V, SolverConfig())
print("First isotropic vector:", z1)
xs = isotropic_basis(Qf, V, z1)
print(f"Completed to {len(xs)} isotropic vectors; Q vanishes on all of them:", all(eval_Q(Qf, x) == 0 for x in xs))
sel = select_D_basis(xs, A, Z.dim)
print("Indices giving a right D-basis:", sel)

print()
cert = solve(F, Z, inst.O)
for y, h in zip(cert.ys, cert.h_y):
    print("  y =", y, " h(y) =", h, " F(y, y) =", eval_hermitian(F, y, y))
print(f"  bound on h(y_1): {cert.rhs_single.hi:.6g}  verdict: {cert.verdicts['single']}")
print(f"  bound on h(y_1) h(y_n): {cert.rhs_product.hi:.6g}  verdict: {cert.verdicts['product']}")

print()
print("A random form with a planted zero in a 2-dimensional subspace of D^3:")
inst = planted_zero_instance(random.Random(7), Algebra(-2, -5), 3, 2)
cert = solve(inst.F, inst.Z, inst.O)
print("  planted zero:", inst.vector)
for y in cert.ys:
    print("  found:", y)
print("  exact checks:", cert.exact_checks, " verdicts:", cert.verdicts)
