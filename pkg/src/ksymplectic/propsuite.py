"""Seeded randomized checks of the structural identities.

Every check takes a :class:`Trial` (a seeded generator plus a random
polarized space) and returns ``(ok, instance)``; ``instance`` is a JSON-able
reproducer. :func:`run_suite` runs the chosen checks for a number of trials
and tallies them per label.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .darboux import (
    darboux_map,
    check_polarization,
    find_polarization,
    graph_check,
    is_ksymplectomorphism,
    transport_polarization,
)
from .forms import (
    d1,
    exterior_derivative,
    hamilton_jacobi_check,
    pullback_omega,
    q_vars,
    p_vars,
    random_poly,
    random_section,
    two_form_is_zero,
)
from .kspace import KSymplecticSpace, canonical_model, random_kspace, y_subspace
from .linalg import RationalMatrix, Subspace, kernel
from .subspaces import (
    Verdict,
    is_complement,
    is_l_coisotropic,
    is_l_isotropic,
    is_l_lagrangian,
    isotropic_complement,
    l_orthogonal,
    lagrangian_completion,
)
from .errors import ConstructionIncomplete


class Trial:
    def __init__(self, seed: int, index: int, n_max: int, k_max: int):
        self.seed, self.index = seed, index
        self.rng = random.Random(f"trial:{seed}:{index}")
        self.n = self.rng.randint(1, n_max)
        self.k = self.rng.randint(1, k_max)
        self.space_seed = self.rng.randrange(2**31)
        self.s, self.P = random_kspace(self.n, self.k, self.space_seed)

    @property
    def N(self) -> int:
        return self.s.dim

    def level(self) -> int:
        return self.rng.randint(1, self.k)

    def vector(self) -> list:
        while True:
            v = [self.rng.randint(-3, 3) for _ in range(self.N)]
            if any(v):
                return v

    def subspace(self, dim: int | None = None) -> Subspace:
        """Span of ``dim`` random vectors (dimension may come out lower)."""
        dim = self.rng.randint(0, self.N) if dim is None else dim
        return Subspace(self.N, [self.vector() for _ in range(dim)])

    def subspace_of_dim(self, dim: int) -> Subspace:
        while True:
            w = self.subspace(dim)
            if w.dim == dim:
                return w

    def isotropic(self, l: int) -> Subspace:
        """Random l-isotropic subspace grown inside successive complements."""
        u = Subspace(self.N, [self.vector()])
        for _ in range(self.rng.randint(0, self.N)):
            perp = l_orthogonal(self.s, u, l).vectors()
            cs = [self.rng.randint(-2, 2) for _ in perp]
            v = [sum(c * p[i] for c, p in zip(cs, perp)) for i in range(self.N)]
            u = Subspace(self.N, u.vectors() + [v])
        return u

    def base(self) -> dict:
        return {"seed": self.seed, "trial": self.index, "n": self.n, "k": self.k,
                "space": self.s.to_json()}


def _inst(t: Trial, **subspaces) -> dict:
    doc = t.base()
    for name, v in subspaces.items():
        doc[name] = v.to_json() if hasattr(v, "to_json") else v
    return doc


# orthogonal complements ---------------------------------------------------

def check_nesting(t):
    w = t.subspace()
    perps = [l_orthogonal(t.s, w, l) for l in range(1, t.k + 1)]
    ok = all(perps[i + 1] <= perps[i] for i in range(t.k - 1))
    return ok, _inst(t, W=w)


def check_zero_perp(t):
    l = t.level()
    return l_orthogonal(t.s, Subspace.zero(t.N), l) == Subspace.full(t.N), _inst(t, l=l)


def check_reversal(t):
    w = t.subspace()
    v = w & t.subspace()  # v is inside w
    l = t.level()
    return l_orthogonal(t.s, w, l) <= l_orthogonal(t.s, v, l), _inst(t, V=v, W=w, l=l)


def check_double_perp(t):
    w, l = t.subspace(), t.level()
    return w <= l_orthogonal(t.s, l_orthogonal(t.s, w, l), l), _inst(t, W=w, l=l)


def restricted_kernels(s: KSymplecticSpace, w: Subspace, l: int) -> Subspace:
    """``ker(w_1|W) & ... & ker(w_l|W)`` computed from Gram matrices in a basis of W."""
    basis = w.vectors()
    if not basis:
        return Subspace.zero(s.dim)
    rows = []
    for r in range(l):
        A = s.forms[r]
        gram = [[sum(x * y for x, y in zip(bi, A @ bj)) for bj in basis] for bi in basis]
        rows.extend(RationalMatrix(gram).T)
    coeffs = kernel(RationalMatrix(rows, cols=len(basis)))
    return Subspace(s.dim, [
        [sum(c * b[i] for c, b in zip(cv, basis)) for i in range(s.dim)] for cv in coeffs.basis
    ])


def check_self_intersection(t):
    w, l = t.subspace(), t.level()
    ok = (w & l_orthogonal(t.s, w, l)) == restricted_kernels(t.s, w, l)
    return ok, _inst(t, W=w, l=l)


def check_full_perp(t):
    l = t.level()
    full = Subspace.full(t.N)
    ok = l_orthogonal(t.s, full, l) == t.s.common_kernel(l)
    ok = ok and l_orthogonal(t.s, full, t.k) == Subspace.zero(t.N)
    return ok, _inst(t, l=l)


def check_sum_perp(t):
    v, w, l = t.subspace(), t.subspace(), t.level()
    ok = l_orthogonal(t.s, v + w, l) <= (l_orthogonal(t.s, v, l) & l_orthogonal(t.s, w, l))
    return ok, _inst(t, V=v, W=w, l=l)


def check_mixed_sum(t):
    v, w, l1, l2 = t.subspace(), t.subspace(), t.level(), t.level()
    m = min(l1, l2)
    ok = (l_orthogonal(t.s, v, l1) + l_orthogonal(t.s, w, l2)) <= l_orthogonal(t.s, v & w, m)
    return ok, _inst(t, V=v, W=w, l1=l1, l2=l2)


def check_mixed_intersection(t):
    v, w, l1, l2 = t.subspace(), t.subspace(), t.level(), t.level()
    m = min(l1, l2)
    ok = (l_orthogonal(t.s, v, l1) & l_orthogonal(t.s, w, l2)) <= l_orthogonal(t.s, v + w, m)
    return ok, _inst(t, V=v, W=w, l1=l1, l2=l2)


def check_corollary_sum(t):
    v, w, l = t.subspace(), t.subspace(), t.level()
    ok = l_orthogonal(t.s, v + w, l) == (l_orthogonal(t.s, v, l) & l_orthogonal(t.s, w, l))
    return ok, _inst(t, V=v, W=w, l=l)


def check_corollary_intersection(t):
    v, w, l = t.subspace(), t.subspace(), t.level()
    inner = l_orthogonal(t.s, v, l) + l_orthogonal(t.s, w, l)
    lhs = l_orthogonal(t.s, l_orthogonal(t.s, inner, l), l)
    return lhs <= l_orthogonal(t.s, v & w, l), _inst(t, V=v, W=w, l=l)


def check_dimension_bound(t):
    w, l = t.subspace(), t.level()
    return w.dim + l_orthogonal(t.s, w, l).dim <= 2 * t.N, _inst(t, W=w, l=l)


# special subspaces -----------------------------------------------------------

def check_lines_isotropic(t):
    line = Subspace(t.N, [t.vector()])
    ok = all(is_l_isotropic(t.s, line, l) for l in range(1, t.k + 1))
    return ok, _inst(t, W=line)


def check_hyperplanes_coisotropic(t):
    h = kernel(RationalMatrix([t.vector()]))
    return is_l_coisotropic(t.s, h, t.k), _inst(t, W=h)


def check_isotropy_pairwise(t):
    l = t.level()
    w = t.isotropic(l) if t.rng.random() < 0.5 else t.subspace()
    ok = is_l_isotropic(t.s, w, l) == (w <= l_orthogonal(t.s, w, l))
    return ok, _inst(t, W=w, l=l)


def check_isotropy_closure(t):
    l = t.level()
    w = t.isotropic(l)
    ok = all(is_l_isotropic(t.s, w, lp) for lp in range(1, l + 1))
    c = t.subspace()
    if is_l_coisotropic(t.s, c, l):
        ok = ok and all(is_l_coisotropic(t.s, c, lpp) for lpp in range(l, t.k + 1))
    return ok, _inst(t, W=w, C=c, l=l)


def _lagrangian_pair(t, l):
    """(W, U): a completion of a random isotropic seed and its isotropic complement."""
    w = lagrangian_completion(t.s, t.isotropic(l), l)
    return w, isotropic_complement(t.s, w, l)


def check_selfdual_is_lagrangian(t):
    l = t.level()
    w = lagrangian_completion(t.s, t.isotropic(l), l)
    res = is_l_lagrangian(t.s, w, l)
    ok = (res.verdict is Verdict.YES and is_complement(w, res.witness)
          and is_l_isotropic(t.s, res.witness, l))
    return ok, _inst(t, W=w, l=l)


def check_lagrangian_selfdual(t):
    # U is k-lagrangian by definition (W is a k-isotropic complement of it)
    w, u = _lagrangian_pair(t, t.k)
    return l_orthogonal(t.s, u, t.k) == u, _inst(t, W=w, U=u)


def check_lagrangian_maximal(t):
    w, u = _lagrangian_pair(t, t.k)
    others = [w, u, lagrangian_completion(t.s, t.isotropic(t.k), t.k)]
    ok = True
    for a in others:
        for b in others:
            if a <= b:
                ok = ok and a == b
    seed = t.isotropic(t.k)
    big = lagrangian_completion(t.s, seed, t.k)
    ok = ok and lagrangian_completion(t.s, big, t.k) == big
    return ok, _inst(t, W=w, U=u)


def check_completion(t):
    l = t.level()
    seed = t.isotropic(l)
    w = lagrangian_completion(t.s, seed, l)
    ok = seed <= w and l_orthogonal(t.s, w, l) == w
    try:
        u = isotropic_complement(t.s, w, l)
    except ConstructionIncomplete:
        return False, _inst(t, seed=seed, W=w, l=l, error="ConstructionIncomplete")
    ok = ok and is_complement(w, u) and is_l_isotropic(t.s, u, l)
    return ok, _inst(t, seed=seed, W=w, U=u, l=l)


# Darboux and graphs -----------------------------------------------------------

def check_darboux(t):
    w = find_polarization(t.s, t.index)
    if w is None:
        return False, _inst(t, error="no polarization found")
    frame = darboux_map(t.s, w)
    canon = canonical_model(t.n, t.k)
    ok = all(frame.P.T @ A @ frame.P == C for A, C in zip(t.s.forms, canon.forms))
    ok = ok and is_ksymplectomorphism(canon, t.s, frame.P)
    # the witness carries the canonical fibre back to a polarization
    ok = ok and check_polarization(t.s, transport_polarization(t.P, y_subspace(t.n, t.k)))
    return ok, _inst(t, W=w, P=frame.P.to_json())


def symplectomorphisms(t):
    """Maps known to be k-symplectomorphisms: (source, target, matrix)."""
    s2, p2 = random_kspace(t.n, t.k, t.rng.randrange(2**31))
    canon = canonical_model(t.n, t.k)
    p1inv, p2inv = t.P.inverse(), p2.inverse()
    return [
        (t.s, canon, t.P),
        (canon, t.s, p1inv),
        (t.s, s2, p2inv @ t.P),
        (s2, t.s, p1inv @ p2),
    ]


def perturbed(t, s1, s2, p: RationalMatrix) -> RationalMatrix:
    """Bump one entry of ``p`` until the result is invertible and not a k-symplectomorphism."""
    while True:
        i, j = t.rng.randrange(p.rows), t.rng.randrange(p.cols)
        rows = [list(r) for r in p]
        rows[i][j] += t.rng.choice([-1, 1])
        q = RationalMatrix(rows)
        if q.is_invertible() and not is_ksymplectomorphism(s1, s2, q):
            return q


def check_graph_iff(t):
    ok = True
    cases = []
    for s1, s2, p in symplectomorphisms(t):
        res = graph_check(s1, s2, p)
        ok = ok and res.symplectomorphism and res.lagrangian.verdict is Verdict.YES
        q = perturbed(t, s1, s2, p)
        res = graph_check(s1, s2, q)
        ok = ok and res.agree and not res.symplectomorphism
        cases.append(q.to_json())
    return ok, _inst(t, perturbed=cases)


def check_symplecto_group(t):
    maps = symplectomorphisms(t)
    ok = all(is_ksymplectomorphism(a, b, p) for a, b, p in maps)
    ok = ok and all(is_ksymplectomorphism(b, a, p.inverse()) for a, b, p in maps)
    return ok, t.base()


# forms ------------------------------------------------------------------------

def check_d_squared(t):
    n = t.rng.randint(1, 4)
    f = random_poly(q_vars(n), t.rng, max_degree=4, n_terms=6)
    return two_form_is_zero(d1(exterior_derivative(f))), {"poly": f.to_json()}


def check_pullback(t):
    n = t.rng.randint(1, 4)
    gamma = random_section(n, t.k, t.rng)
    ok = all(
        pullback_omega(gamma, r) == {key: -c for key, c in d1(g).items()}
        for r, g in enumerate(gamma.forms, start=1)
    )
    return ok, {"section": gamma.to_json()}


def check_hj_shift(t):
    n = t.rng.randint(1, 3)
    qs = q_vars(n)
    h = random_poly(qs + p_vars(n, t.k), t.rng, max_degree=2, n_terms=4)
    ws = [random_poly(qs, t.rng, max_degree=2) for _ in range(t.k)]
    shifted = [w + t.rng.randint(-5, 5) for w in ws]
    return hamilton_jacobi_check(h, ws) == hamilton_jacobi_check(h, shifted), {"h": h.to_json()}


def check_lattice(t):
    a, b, c = t.subspace(), t.subspace(), t.subspace()
    ok = (a + b == b + a and (a & b) == (b & a)
          and (a + b) + c == a + (b + c) and ((a & b) & c) == (a & (b & c))
          and a + a == a and (a & a) == a
          and a.dim + b.dim == (a + b).dim + (a & b).dim)
    return ok, _inst(t, A=a, B=b, C=c)


CHECKS = {
    "orth-i": check_nesting,
    "orth-ii-a": check_zero_perp,
    "orth-ii-b": check_reversal,
    "orth-ii-c": check_double_perp,
    "orth-ii-d": check_self_intersection,
    "orth-ii-d-full": check_full_perp,
    "orth-ii-e": check_sum_perp,
    "orth-iii-a": check_mixed_sum,
    "orth-iii-b": check_mixed_intersection,
    "orth-corol-i": check_corollary_sum,
    "orth-corol-ii": check_corollary_intersection,
    "dim-bound": check_dimension_bound,
    "charac-i": check_lines_isotropic,
    "charac-ii": check_hyperplanes_coisotropic,
    "charac-iii": check_isotropy_pairwise,
    "charac-iv": check_selfdual_is_lagrangian,
    "charac-v": check_lagrangian_selfdual,
    "charac-vi": check_completion,
    "isotropy-closure": check_isotropy_closure,
    "lagrangian-maximal": check_lagrangian_maximal,
    "darboux-exact": check_darboux,
    "graph-iff": check_graph_iff,
    "symplecto-group": check_symplecto_group,
    "d-squared": check_d_squared,
    "closed-pullback": check_pullback,
    "hj-shift": check_hj_shift,
    "lattice": check_lattice,
}


@dataclass
class Report:
    seed: int
    trials: int
    counts: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "ok": self.ok,
            "counts": {k: self.counts[k] for k in sorted(self.counts)},
            "failures": self.failures,
        }


def run_trial(seed, index, n_max, k_max, labels):
    t = Trial(seed, index, n_max, k_max)
    out = []
    for label in labels:
        ok, inst = CHECKS[label](t)
        out.append((label, ok, inst))
    return out


def run_suite(seed: int, trials: int, n_max: int, k_max: int, labels=None) -> Report:
    """Run ``labels`` (all checks by default) on ``trials`` seeded instances."""
    if n_max < 1 or k_max < 1 or trials < 0:
        raise ValueError("n_max, k_max must be positive and trials non-negative")
    labels = list(CHECKS) if labels is None else list(labels)
    unknown = set(labels) - CHECKS.keys()
    if unknown:
        raise KeyError(f"unknown checks {sorted(unknown)}")
    report = Report(seed, trials)
    if trials:
        report.counts = {label: {"pass": 0, "fail": 0} for label in labels}
    for index in range(trials):
        for label, ok, inst in run_trial(seed, index, n_max, k_max, labels):
            report.counts[label]["pass" if ok else "fail"] += 1
            if not ok:
                report.failures.append({"label": label, "reproducer": inst})
    return report
