"""Orthogonal complements and isotropic / coisotropic / lagrangian subspaces."""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from typing import Optional

from .errors import ConstructionIncomplete, DimensionError, InvariantBroken, LevelError, NotIsotropic, PreconditionFailed
from .kspace import KSymplecticSpace
from .linalg import RationalMatrix, Subspace, dot, kernel, membership


def _check(s: KSymplecticSpace, w: Subspace, l: int):
    if not 1 <= l <= s.k:
        raise LevelError(f"level {l} outside 1..{s.k}")
    if w.ambient_dim != s.dim:
        raise DimensionError(f"subspace lives in dimension {w.ambient_dim}, space has {s.dim}")


def l_orthogonal(s: KSymplecticSpace, w: Subspace, l: int) -> Subspace:
    """``{v : w_r(v, b) = 0 for every b in w and r = 1..l}``."""
    _check(s, w, l)
    rows = [s.forms[r] @ b for r in range(l) for b in w.basis]
    return kernel(RationalMatrix(rows, cols=s.dim))


def is_l_isotropic(s: KSymplecticSpace, w: Subspace, l: int) -> bool:
    """Every form 1..l vanishes on pairs of basis vectors of ``w``."""
    _check(s, w, l)
    basis = w.vectors()
    for A in s.forms[:l]:
        for j in range(1, len(basis)):
            Ab = A @ basis[j]
            if any(dot(basis[i], Ab) for i in range(j)):
                return False
    return True


def is_l_coisotropic(s: KSymplecticSpace, w: Subspace, l: int) -> bool:
    return w >= l_orthogonal(s, w, l)


def is_complement(w: Subspace, u: Subspace) -> bool:
    """``V = w (+) u`` as a direct sum."""
    return w.dim + u.dim == w.ambient_dim and (w + u).dim == w.ambient_dim


class Verdict(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Lagrangian:
    verdict: Verdict
    witness: Optional[Subspace] = None

    def __bool__(self):
        return self.verdict is Verdict.YES


@dataclass(frozen=True)
class SubspaceClassification:
    level: int
    isotropic: bool
    coisotropic: bool
    lagrangian: Lagrangian

    def to_json(self) -> dict:
        doc = {
            "level": self.level,
            "isotropic": self.isotropic,
            "coisotropic": self.coisotropic,
            "lagrangian": self.lagrangian.verdict.value,
        }
        if self.lagrangian.witness is not None:
            doc["witness"] = self.lagrangian.witness.to_json()
        return doc


def kernel_sum(s: KSymplecticSpace) -> Subspace:
    """``ker w_1 + ... + ker w_k``; for k >= 2 this is the polarization when one exists."""
    out = Subspace.zero(s.dim)
    for r in range(1, s.k + 1):
        out = out + s.kernel(r)
    return out


def _isotropic_chain(s, w, l, reverse=False):
    """Grow an l-isotropic ``U`` with ``U & w = 0`` from vectors of ``U^{perp,l}``.

    Candidates are RREF basis rows of ``U^{perp,l} & K`` (``K`` the kernel sum)
    followed by those of ``U^{perp,l}``, each group in pivot order or reversed.
    Among candidates outside ``w + U`` the first one keeping
    ``V = w + U^{perp,l}`` is adjoined; an arbitrary pick can stall the chain
    (a generic line in R^3 has a 2-isotropic complement only inside ``K``).
    Stops when every candidate lies in ``w + U``.
    """
    full = Subspace.full(s.dim)
    pref = kernel_sum(s)
    u = Subspace.zero(s.dim)
    while True:
        perp = l_orthogonal(s, u, l)
        groups = [(perp & pref).vectors(), perp.vectors()]
        if reverse:
            for g in groups:
                g.reverse()
        span = w + u
        cands = [c for g in groups for c in g if not membership(c, span)]
        if not cands:
            return u
        for c in cands:
            grown = Subspace(s.dim, u.vectors() + [c])
            if w + l_orthogonal(s, grown, l) == full:
                break
        else:
            grown = Subspace(s.dim, u.vectors() + [cands[0]])
        u = grown


def isotropic_complement(s: KSymplecticSpace, w: Subspace, l: int) -> Subspace:
    """An l-isotropic ``U`` with ``V = w (+) U``, for ``w`` equal to its own l-complement."""
    _check(s, w, l)
    if l_orthogonal(s, w, l) != w:
        raise PreconditionFailed("subspace is not equal to its l-orthogonal complement")
    u = _isotropic_chain(s, w, l)
    if not (is_complement(w, u) and is_l_isotropic(s, u, l)):
        raise ConstructionIncomplete(
            f"chain stopped at dim {u.dim}; complement needs dim {w.codim}"
        )
    return u


def is_l_lagrangian(s: KSymplecticSpace, w: Subspace, l: int) -> Lagrangian:
    """Decide (or search for) l-lagrangian-ness.

    At level k the answer is exact: ``w`` is k-lagrangian iff it equals its
    k-orthogonal complement. Below k an l-isotropic complement is looked for
    by the greedy chain; if the search fails the verdict is UNKNOWN.
    """
    _check(s, w, l)
    if not is_l_isotropic(s, w, l):
        return Lagrangian(Verdict.NO)
    selfdual = l_orthogonal(s, w, l) == w
    if l == s.k and not selfdual:
        return Lagrangian(Verdict.NO)
    if selfdual:
        return Lagrangian(Verdict.YES, isotropic_complement(s, w, l))
    for reverse in (False, True):
        u = _isotropic_chain(s, w, l, reverse=reverse)
        if is_complement(w, u):
            return Lagrangian(Verdict.YES, u)
    return Lagrangian(Verdict.UNKNOWN)


def classify(s: KSymplecticSpace, w: Subspace, l: int) -> SubspaceClassification:
    return SubspaceClassification(
        level=l,
        isotropic=is_l_isotropic(s, w, l),
        coisotropic=is_l_coisotropic(s, w, l),
        lagrangian=is_l_lagrangian(s, w, l),
    )


def lagrangian_completion(
    s: KSymplecticSpace,
    u: Subspace,
    l: int,
    prefer: Subspace | None = None,
    rng: random.Random | None = None,
) -> Subspace:
    """Enlarge the l-isotropic ``u`` to some ``W`` with ``W = W^{perp,l}``.

    Each step adjoins a vector of ``u^{perp,l}`` not yet in ``u``. Candidates
    are the RREF basis rows of ``u^{perp,l}`` in pivot order. With ``prefer``,
    rows of ``u^{perp,l} & prefer`` are tried first; with ``rng``, each
    candidate group is shuffled.
    """
    _check(s, u, l)
    if not is_l_isotropic(s, u, l):
        raise NotIsotropic(f"seed subspace is not {l}-isotropic")
    if prefer is not None and prefer.ambient_dim != s.dim:
        raise DimensionError("preferred subspace has the wrong ambient dimension")
    while True:
        perp = l_orthogonal(s, u, l)
        if perp == u:
            return u
        groups = [perp.vectors()]
        if prefer is not None:
            groups.insert(0, (perp & prefer).vectors())
        if rng is not None:
            for g in groups:
                rng.shuffle(g)
        pick = next(c for g in groups for c in g if not membership(c, u))
        u = Subspace(s.dim, u.vectors() + [pick])
        if not (u <= l_orthogonal(s, u, l)):
            raise InvariantBroken("adjoined vector broke isotropy")  # pragma: no cover
