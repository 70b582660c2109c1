"""Polarizations, Darboux frames, k-symplectomorphisms and graphs.

A polarization of a k-symplectic space of dimension n(k+1) is a subspace
``W`` with ``W = W^{perp,k}`` and ``dim W = n k``. Given one, the frame
built here is a basis ``e_1..e_n, f^1_1..f^1_n, ..., f^k_1..f^k_n`` in which
every form reads ``sum_i e_i^* ^ (f^r_i)^*``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import (
    ComplementFailed,
    ConstructionIncomplete,
    DimensionError,
    MismatchedK,
    NotIsomorphism,
    NotPolarized,
    PreconditionFailed,
    SingularPhi,
)
from .kspace import KSymplecticSpace, canonical_model, congruent, eval_form, product_ominus
from .linalg import RationalMatrix, Subspace, unit_vector
from .subspaces import (
    Lagrangian,
    is_complement,
    is_l_isotropic,
    is_l_lagrangian,
    isotropic_complement,
    kernel_sum,
    l_orthogonal,
    lagrangian_completion,
)

POLARIZATION_RETRIES = 16


def check_polarization(s: KSymplecticSpace, w: Subspace) -> bool:
    if w.ambient_dim != s.dim:
        raise DimensionError(f"subspace lives in dimension {w.ambient_dim}, space has {s.dim}")
    return w.dim == s.n * s.k and l_orthogonal(s, w, s.k) == w


def find_polarization(s: KSymplecticSpace, seed: int = 0) -> Subspace | None:
    """Search for a polarization by completing {0} at level k.

    The first attempt prefers vectors of the kernel sum ``ker w_1 + ... + ker w_k``
    (for k >= 2 any polarization equals that sum); later attempts shuffle the
    candidates with a generator seeded by ``seed``. ``None`` means the search
    failed, not that the space has no polarization.
    """
    pref = kernel_sum(s) if s.k > 1 else None
    zero = Subspace.zero(s.dim)
    rng = random.Random(f"polarize:{seed}")
    for attempt in range(POLARIZATION_RETRIES):
        w = lagrangian_completion(s, zero, s.k, prefer=pref, rng=rng if attempt else None)
        if check_polarization(s, w):
            return w
    return None


@dataclass(frozen=True)
class DarbouxFrame:
    e: tuple
    f: tuple  # f[r][i] is the vector f^{r+1}_{i+1}
    P: RationalMatrix

    @property
    def n(self) -> int:
        return len(self.e)

    @property
    def k(self) -> int:
        return len(self.f)

    def to_json(self) -> dict:
        fmt = lambda v: [str(x) for x in v]  # noqa: E731
        return {
            "e": [fmt(v) for v in self.e],
            "f": [[fmt(v) for v in row] for row in self.f],
            "P": self.P.to_json(),
        }


def phi_matrix(s: KSymplecticSpace, w_basis, v_basis) -> RationalMatrix:
    """Matrix of ``w -> (-(i_w w_r)|_V)_r`` in the given bases.

    Row ``(r, j)`` (r-major) holds ``-w_r(b, e_j)`` for each basis vector ``b`` of W
    as the column.
    """
    return RationalMatrix([
        [-eval_form(s, r, b, e) for b in w_basis]
        for r in range(1, s.k + 1)
        for e in v_basis
    ], cols=len(w_basis))


def darboux_map(s: KSymplecticSpace, w: Subspace, v0: Subspace | None = None) -> DarbouxFrame:
    """Darboux frame adapted to the polarization ``w`` and complement ``v0``.

    The columns of ``P`` are ``e_1..e_n`` (a basis of ``v0``) followed by the
    ``f^r_i`` in ``w`` determined by ``phi(f^r_i) = e_i^*`` in slot ``r``. ``P``
    is a k-symplectomorphism from the canonical model onto ``s``; this is
    checked exactly before returning.
    """
    if not check_polarization(s, w):
        raise NotPolarized("subspace is not a polarization")
    if v0 is None:
        try:
            v0 = isotropic_complement(s, w, s.k)
        except (ConstructionIncomplete, PreconditionFailed) as exc:
            raise ComplementFailed(str(exc)) from exc
    elif not (is_complement(w, v0) and is_l_isotropic(s, v0, s.k)):
        raise ComplementFailed("given complement is not a k-isotropic complement of w")
    n, k = s.n, s.k
    e = v0.vectors()
    wb = w.vectors()
    phi = phi_matrix(s, wb, e)
    try:
        phi_inv = phi.inverse()
    except ZeroDivisionError:
        raise SingularPhi("phi is not invertible") from None
    # column (r, i) of phi_inv holds the W-coordinates of f^r_i
    W = RationalMatrix.from_columns(wb)
    F = W @ phi_inv
    f = tuple(tuple(F.column(r * n + i) for i in range(n)) for r in range(k))
    P = RationalMatrix.from_columns(e + [v for row in f for v in row])
    canon = canonical_model(n, k)
    if congruent(s, P) != canon.forms:
        raise SingularPhi("frame does not bring the forms to canonical shape")  # pragma: no cover
    return DarbouxFrame(tuple(e), f, P)


def is_ksymplectomorphism(s1: KSymplecticSpace, s2: KSymplecticSpace, p: RationalMatrix) -> bool:
    """``p`` is invertible and ``p^T A2_r p == A1_r`` for every r."""
    if s1.k != s2.k:
        raise MismatchedK(f"k differs: {s1.k} vs {s2.k}")
    if p.shape != (s2.dim, s1.dim):
        raise DimensionError(f"map has shape {p.shape}, expected {(s2.dim, s1.dim)}")
    return p.is_invertible() and congruent(s2, p) == s1.forms


def graph_subspace(s1: KSymplecticSpace, s2: KSymplecticSpace, p: RationalMatrix) -> Subspace:
    """``{(v, p v)}`` inside the product space of dimension ``s1.dim + s2.dim``."""
    if p.shape != (s2.dim, s1.dim):
        raise DimensionError(f"map has shape {p.shape}, expected {(s2.dim, s1.dim)}")
    n = s1.dim
    vecs = [unit_vector(n, i) + p.column(i) for i in range(n)]
    return Subspace(s1.dim + s2.dim, vecs)


@dataclass(frozen=True)
class GraphCheck:
    symplectomorphism: bool
    lagrangian: Lagrangian

    @property
    def agree(self) -> bool:
        return self.symplectomorphism == bool(self.lagrangian)


def graph_check(s1: KSymplecticSpace, s2: KSymplecticSpace, p: RationalMatrix) -> GraphCheck:
    """Both sides of the graph criterion for an isomorphism ``p``."""
    if s1.k != s2.k:
        raise MismatchedK(f"k differs: {s1.k} vs {s2.k}")
    if p.shape != (s2.dim, s1.dim) or not p.is_invertible():
        raise NotIsomorphism("graph criterion needs a linear isomorphism")
    prod = product_ominus(s1, s2)
    return GraphCheck(
        is_ksymplectomorphism(s1, s2, p),
        is_l_lagrangian(prod, graph_subspace(s1, s2, p), prod.k),
    )


def transport_polarization(p: RationalMatrix, w: Subspace) -> Subspace:
    """Image ``p^{-1} w`` of a polarization of the target under a k-symplectomorphism."""
    pinv = p.inverse()
    return Subspace(pinv.cols, [pinv @ v for v in w.basis])
