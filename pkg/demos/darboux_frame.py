"""Normalising a random polarized space to the canonical model.

``random_kspace`` hides the canonical model behind a random integer change of
basis. We recover a polarization, build a Darboux frame and check that it
brings every form back to ``sum_i dx^i ^ dy^r_i``, exactly.
"""

import sys

from ksymplectic import (
    canonical_model,
    darboux_map,
    find_polarization,
    is_ksymplectomorphism,
    random_kspace,
)

n, k, seed = (int(a) for a in sys.argv[1:4]) if len(sys.argv) > 3 else (2, 2, 7)

s, witness = random_kspace(n, k, seed)
print(f"random space: n={n}, k={k}, seed={seed}, dim={s.dim}")
for r, A in enumerate(s.forms, start=1):
    print(f"  A_{r} =")
    for row in A:
        print("   ", " ".join(f"{str(x):>5s}" for x in row))

w = find_polarization(s, seed)
print(f"\npolarization found, dim {w.dim} (expected n*k = {n * k})")

frame = darboux_map(s, w)
print("\nDarboux matrix P (columns e_1..e_n, then f^r_i):")
for row in frame.P:
    print("   ", " ".join(f"{str(x):>6s}" for x in row))

canon = canonical_model(n, k)
for r in range(k):
    same = frame.P.T @ s.forms[r] @ frame.P == canon.forms[r]
    print(f"P^T A_{r + 1} P == canonical form {r + 1}: {same}")

print("P is a k-symplectomorphism canonical -> s:", is_ksymplectomorphism(canon, s, frame.P))
print("the generator's witness maps s -> canonical:", is_ksymplectomorphism(s, canon, witness))
