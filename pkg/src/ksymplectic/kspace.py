"""k-symplectic vector spaces: construction, validation, fixtures, generators.

A form is stored as a skew matrix ``A`` with ``omega(u, v) = u^T A v``. The
wedge convention is ``(e^i ^ e^j)(u, v) = u_i v_j - u_j v_i``, i.e. ``A[i][j] = 1``
and ``A[j][i] = -1``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import BadDimension, DegenerateCommonKernel, DimensionError, LevelError, MismatchedK, NotSkew, SchemaError
from .linalg import ZERO, RationalMatrix, Subspace, dot, kernel, parse_rational, format_rational, vector

RANDOM_ENTRY_RANGE = (-3, 3)
MAX_DRAWS = 1000


@dataclass(frozen=True, eq=True)
class KSymplecticSpace:
    dim: int
    k: int
    forms: tuple

    @property
    def n(self) -> int:
        return self.dim // (self.k + 1)

    def form(self, r: int) -> RationalMatrix:
        """The matrix of the r-th form, 1-based like the math."""
        if not 1 <= r <= self.k:
            raise LevelError(f"form index {r} outside 1..{self.k}")
        return self.forms[r - 1]

    def kernel(self, r: int) -> Subspace:
        return kernel(self.form(r))

    def common_kernel(self, upto: int | None = None) -> Subspace:
        """Intersection of the kernels of forms 1..upto (all by default)."""
        upto = self.k if upto is None else upto
        rows = [row for A in self.forms[:upto] for row in A]
        return kernel(RationalMatrix(rows, cols=self.dim))

    def to_json(self) -> dict:
        return space_to_json(self)


def wedge(dim: int, *pairs) -> RationalMatrix:
    """Matrix of ``sum c * e^i ^ e^j`` given ``(i, j)`` or ``(i, j, c)`` with 0-based indices."""
    A = [[ZERO] * dim for _ in range(dim)]
    for p in pairs:
        i, j = p[0], p[1]
        c = Fraction(p[2]) if len(p) > 2 else Fraction(1)
        A[i][j] += c
        A[j][i] -= c
    return RationalMatrix(A, cols=dim)


def new_kspace(dim: int, forms: Sequence[RationalMatrix]) -> KSymplecticSpace:
    """Validate ``forms`` and build the space.

    Raises NotSkew, BadDimension or DegenerateCommonKernel.
    """
    forms = tuple(f if isinstance(f, RationalMatrix) else RationalMatrix(f) for f in forms)
    k = len(forms)
    if k < 1:
        raise BadDimension(dim, k)
    for r, A in enumerate(forms, start=1):
        if A.shape != (dim, dim):
            raise DimensionError(f"form {r} has shape {A.shape}, expected {(dim, dim)}")
        if not A.is_skew():
            raise NotSkew(r)
    if dim % (k + 1):
        raise BadDimension(dim, k)
    s = KSymplecticSpace(dim, k, forms)
    common = s.common_kernel()
    if common.dim:
        raise DegenerateCommonKernel(common)
    return s


def eval_form(s: KSymplecticSpace, r: int, u: Sequence, v: Sequence) -> Fraction:
    u, v = vector(u), vector(v)
    if len(u) != s.dim or len(v) != s.dim:
        raise DimensionError(f"vectors must have length {s.dim}")
    return dot(u, s.form(r) @ v)


def canonical_model(n: int, k: int) -> KSymplecticSpace:
    """V x V* x ... x V* with coordinates (x_1..x_n, y^1_1..y^1_n, ..., y^k_1..y^k_n).

    The r-th form is ``sum_i dx^i ^ dy^r_i``.
    """
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    dim = n * (k + 1)
    forms = [wedge(dim, *[(i, r * n + i) for i in range(n)]) for r in range(1, k + 1)]
    return KSymplecticSpace(dim, k, tuple(forms))


def x_subspace(n: int, k: int) -> Subspace:
    """The base factor V x {0} of the canonical model."""
    return Subspace.span_units(n * (k + 1), range(n))


def y_subspace(n: int, k: int) -> Subspace:
    """The fibre factor {0} x V* x ... x V* of the canonical model."""
    return Subspace.span_units(n * (k + 1), range(n, n * (k + 1)))


def product_ominus(s1: KSymplecticSpace, s2: KSymplecticSpace) -> KSymplecticSpace:
    """Product space with forms ``pi_1^* w1_r - pi_2^* w2_r``."""
    if s1.k != s2.k:
        raise MismatchedK(f"k differs: {s1.k} vs {s2.k}")
    forms = [RationalMatrix.block_diagonal(a, -b) for a, b in zip(s1.forms, s2.forms)]
    return new_kspace(s1.dim + s2.dim, forms)


def congruent(s: KSymplecticSpace, p: RationalMatrix) -> tuple:
    """Forms ``p^T A_r p``."""
    return tuple(p.T @ A @ p for A in s.forms)


def random_invertible(dim: int, rng: random.Random) -> RationalMatrix:
    lo, hi = RANDOM_ENTRY_RANGE
    for _ in range(MAX_DRAWS):
        p = RationalMatrix([[rng.randint(lo, hi) for _ in range(dim)] for _ in range(dim)])
        if p.is_invertible():
            return p
    raise RuntimeError("random_invertible exhausted its draws")  # pragma: no cover


def random_kspace(n: int, k: int, seed: int) -> tuple[KSymplecticSpace, RationalMatrix]:
    """A random polarized space together with the witness ``P``.

    The forms are ``P^T C_r P`` for the canonical forms ``C_r``, so ``P`` is a
    k-symplectomorphism from the returned space onto ``canonical_model(n, k)``.
    """
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    canon = canonical_model(n, k)
    p = random_invertible(canon.dim, random.Random(f"kspace:{n}:{k}:{seed}"))
    return new_kspace(canon.dim, congruent(canon, p)), p


# fixtures ----------------------------------------------------------------

def r3_2symp() -> KSymplecticSpace:
    """R^3 with w1 = e1^e3, w2 = e2^e3."""
    return new_kspace(3, [wedge(3, (0, 2)), wedge(3, (1, 2))])


def r6_2symp() -> KSymplecticSpace:
    """R^6 with w1 = e1^e3 + e4^e6, w2 = e2^e3 + e5^e6."""
    return new_kspace(6, [wedge(6, (0, 2), (3, 5)), wedge(6, (1, 2), (4, 5))])


def r6_5symp() -> KSymplecticSpace:
    """R^6 with w_r = e_r ^ e_6 for r = 1..5."""
    return new_kspace(6, [wedge(6, (r, 5)) for r in range(5)])


FIXTURES = {
    "r3-2symp": r3_2symp,
    "r6-2symp": r6_2symp,
    "r6-5symp": r6_5symp,
}


def fixture(name: str) -> KSymplecticSpace:
    """Look up a named fixture; ``canonical:n,k`` builds the canonical model."""
    if name.startswith("canonical:"):
        try:
            n, k = (int(x) for x in name.split(":", 1)[1].split(","))
        except ValueError as exc:
            raise SchemaError(f"bad canonical fixture {name!r}; expected canonical:n,k") from exc
        if n < 1 or k < 1:
            raise SchemaError("canonical fixture needs n, k >= 1")
        return canonical_model(n, k)
    try:
        return FIXTURES[name]()
    except KeyError:
        raise SchemaError(f"unknown fixture {name!r}") from None


# JSON --------------------------------------------------------------------

def space_to_json(s: KSymplecticSpace) -> dict:
    forms = []
    for A in s.forms:
        forms.append([
            [i, j, format_rational(A[i, j])]
            for i in range(s.dim) for j in range(i + 1, s.dim) if A[i, j]
        ])
    return {"dim": s.dim, "k": s.k, "forms": forms}


def space_from_json(doc) -> KSymplecticSpace:
    """Parse the sparse upper-triangle format; domain errors still raise from validation."""
    if not isinstance(doc, dict) or not {"dim", "k", "forms"} <= doc.keys():
        raise SchemaError("space must be an object with 'dim', 'k' and 'forms'")
    dim, k, forms = doc["dim"], doc["k"], doc["forms"]
    for name, val in (("dim", dim), ("k", k)):
        if isinstance(val, bool) or not isinstance(val, int) or val < 1:
            raise SchemaError(f"'{name}' must be a positive integer")
    if not isinstance(forms, list) or len(forms) != k:
        raise SchemaError(f"'forms' must be an array of {k} forms")
    mats = []
    for form in forms:
        if not isinstance(form, list):
            raise SchemaError("each form must be an array of [i, j, value] triplets")
        A = [[ZERO] * dim for _ in range(dim)]
        for t in form:
            if not isinstance(t, list) or len(t) != 3:
                raise SchemaError(f"bad triplet {t!r}")
            i, j, c = t
            if any(isinstance(x, bool) or not isinstance(x, int) for x in (i, j)):
                raise SchemaError(f"bad indices in {t!r}")
            if not 0 <= i < j < dim:
                raise SchemaError(f"triplet {t!r} must satisfy 0 <= i < j < dim")
            c = parse_rational(c)
            A[i][j] += c
            A[j][i] -= c
        mats.append(RationalMatrix(A, cols=dim))
    return new_kspace(dim, mats)
