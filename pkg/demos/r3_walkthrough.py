"""A tour of the smallest interesting k-symplectic space.

R^3 carries two forms, w1 = e1^e3 and w2 = e2^e3. Neither is symplectic on
its own, but their kernels meet only in 0.
"""

from ksymplectic import (
    Subspace,
    classify,
    isotropic_complement,
    l_orthogonal,
    lagrangian_completion,
    r3_2symp,
)


def span(*idx):
    return Subspace.span_units(3, [i - 1 for i in idx])


def show(label, w):
    vecs = ", ".join("(" + ", ".join(str(x) for x in v) + ")" for v in w.vectors()) or "0"
    print(f"{label:32s} {vecs}")


s = r3_2symp()
print(f"dim {s.dim}, n = {s.n}, k = {s.k}\n")

show("ker w1", s.kernel(1))
show("ker w2", s.kernel(2))
show("common kernel", s.common_kernel())

print("\nThe l-orthogonal complement shrinks as more forms join in:")
show("span{e2} perp at level 1", l_orthogonal(s, span(2), 1))
show("span{e2} perp at level 2", l_orthogonal(s, span(2), 2))
show("span{e1,e3} perp at level 2", l_orthogonal(s, span(1, 3), 2))

# Unlike the symplectic case, taking the complement twice can grow the space.
once = l_orthogonal(s, Subspace.zero(3), 1)
show("({0} perp,1) perp,1", l_orthogonal(s, once, 1))

print("\nClassification of a few subspaces:")
for w, l in [(span(3), 2), (span(1), 1), (span(1, 3), 2), (span(2), 2)]:
    c = classify(s, w, l)
    print(f"  {[list(map(str, v)) for v in w.vectors()]} at level {l}: "
          f"isotropic={c.isotropic} coisotropic={c.coisotropic} lagrangian={c.lagrangian.verdict.value}")

print("\nDimensions do not add up to 3 here:")
w = span(3)
print(f"  dim span{{e3}} + dim its 2-complement = {w.dim + l_orthogonal(s, w, 2).dim}")

print("\nGrowing {0} to a self-dual subspace, then finding an isotropic complement:")
w = lagrangian_completion(s, Subspace.zero(3), 2)
show("completion", w)
show("complement", isotropic_complement(s, w, 2))
