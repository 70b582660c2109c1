"""Closed sections and the Hamilton-Jacobi test on polynomial data.

A section q -> (q, gamma_1(q), ..., gamma_k(q)) pulls each canonical two-form
back to -d gamma_r, so it is "lagrangian" exactly when every gamma_r is closed.
Closed polynomial one-forms have polynomial potentials W_r, and the section
solves the Hamilton-Jacobi problem for H when H(q, dW_1, ..., dW_k) is constant.
"""

from fractions import Fraction

from ksymplectic import (
    Poly,
    PolyOneForm,
    PolySection,
    compose_hamiltonian,
    d1,
    exterior_derivative,
    hamilton_jacobi_check,
    is_closed_section,
    p_vars,
    potential,
    pullback_omega,
    q_vars,
)

qs = q_vars(2)
q1, q2 = Poly.var(qs, "q1"), Poly.var(qs, "q2")

print("An open one-form: gamma = q2 dq1")
gamma = PolyOneForm((q2, Poly.zero(qs)))
print("  d gamma coefficient on dq1^dq2:", d1(gamma)[(0, 1)])
section = PolySection((gamma, PolyOneForm.zero(2)))
print("  pullback of Omega_1:", pullback_omega(section, 1)[(0, 1)])
print("  closed section?", is_closed_section(section))

print("\nAn exact one: gamma = d(q1^2 q2)")
g = exterior_derivative(q1 * q1 * q2)
print("  coefficients:", [str(c) for c in g.coeffs])
print("  recovered potential:", potential(g))

print("\nHamilton-Jacobi, n=1, k=2: H = p1_1 + p2_1 with W = (q1, -q1)")
v = ("q1",) + p_vars(1, 2)
h = Poly.var(v, "p1_1") + Poly.var(v, "p2_1")
x = Poly.var(("q1",), "q1")
print("  solution?", hamilton_jacobi_check(h, [x, -x]))

print("\nHamilton-Jacobi, n=1, k=1: H = (p1_1)^2 with W = q1^2 / 2")
h2 = Poly.var(("p1_1",), "p1_1") ** 2
w = [x * x * Fraction(1, 2)]
print("  H o gamma =", compose_hamiltonian(h2, PolySection((exterior_derivative(w[0]),))))
print("  solution?", hamilton_jacobi_check(h2, w))
