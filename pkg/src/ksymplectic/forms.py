"""Polynomial exterior calculus on one chart of the k-covelocity bundle.

Base coordinates are named ``q1..qn`` and fibre coordinates ``p{r}_{i}`` (the
``i``-th momentum of the ``r``-th copy). A section is a k-tuple of polynomial
one-forms ``gamma_r = sum_i gamma_{r,i}(q) dq^i``; a two-form on the base is a
dict ``{(i, j): Poly}`` over pairs ``i < j`` (0-based) giving the coefficient of
``dq^i ^ dq^j``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import LevelError, NotClosed, SchemaError, VariableMismatch
from .linalg import format_rational, parse_rational, to_fraction


def q_vars(n: int) -> tuple:
    return tuple(f"q{i}" for i in range(1, n + 1))


def p_var(r: int, i: int) -> str:
    """Name of ``p^r_i`` (1-based)."""
    return f"p{r}_{i}"


def p_vars(n: int, k: int) -> tuple:
    return tuple(p_var(r, i) for r in range(1, k + 1) for i in range(1, n + 1))


def _grlex(exp):
    return (sum(exp), exp)


class Poly:
    """Sparse polynomial with rational coefficients over named variables."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Sequence[str], terms: Mapping | None = None):
        self.vars = tuple(vars)
        if len(set(self.vars)) != len(self.vars):
            raise VariableMismatch(f"repeated variable in {self.vars}")
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != len(self.vars) or any(e < 0 for e in exp):
                raise VariableMismatch(f"exponent {exp} does not fit variables {self.vars}")
            c = to_fraction(c)
            if c:
                clean[exp] = clean.get(exp, 0) + c
                if not clean[exp]:
                    del clean[exp]
        self.terms = clean

    @classmethod
    def const(cls, vars, c) -> Poly:
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def var(cls, vars, name: str) -> Poly:
        vars = tuple(vars)
        if name not in vars:
            raise VariableMismatch(f"{name!r} is not one of {vars}")
        return cls(vars, {tuple(int(v == name) for v in vars): 1})

    @classmethod
    def zero(cls, vars) -> Poly:
        return cls(vars)

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.vars != self.vars:
                raise VariableMismatch(f"variables differ: {self.vars} vs {other.vars}")
            return other
        return Poly.const(self.vars, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Poly(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, m: int):
        out = Poly.const(self.vars, 1)
        for _ in range(m):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.vars == other.vars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Poly.const(self.vars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        out = ""
        for e, c in self.sorted_terms():
            mono = "*".join(v if d == 1 else f"{v}^{d}" for v, d in zip(self.vars, e) if d)
            mag = abs(c)
            body = (mono if mag == 1 else f"{mag}*{mono}") if mono else str(mag)
            if not out:
                out = f"-{body}" if c < 0 else body
            else:
                out += f" - {body}" if c < 0 else f" + {body}"
        return out

    def sorted_terms(self):
        """Terms in graded-lexicographic order of the exponents."""
        return sorted(self.terms.items(), key=lambda t: _grlex(t[0]))

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def index(self, name: str) -> int:
        try:
            return self.vars.index(name)
        except ValueError:
            raise VariableMismatch(f"{name!r} is not one of {self.vars}") from None

    def diff(self, name: str) -> Poly:
        j = self.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[j]:
                d = list(e)
                d[j] -= 1
                out[tuple(d)] = c * e[j]
        return Poly(self.vars, out)

    def subs(self, values: Mapping[str, Poly], target_vars: Sequence[str]) -> Poly:
        """Replace every variable by a polynomial over ``target_vars``.

        Variables missing from ``values`` must themselves be among the target
        variables and are kept as they are.
        """
        target_vars = tuple(target_vars)
        images = []
        for v in self.vars:
            if v in values:
                img = values[v]
                if img.vars != target_vars:
                    raise VariableMismatch(f"image of {v} is not over {target_vars}")
            else:
                img = Poly.var(target_vars, v)
            images.append(img)
        out = Poly.zero(target_vars)
        for e, c in self.terms.items():
            term = Poly.const(target_vars, c)
            for img, d in zip(images, e):
                if d:
                    term = term * img ** d
            out = out + term
        return out

    def extend(self, target_vars: Sequence[str]) -> Poly:
        """The same polynomial viewed over a superset of variables."""
        return self.subs({}, target_vars)

    def evaluate(self, point: Mapping[str, object]) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for v, d in zip(self.vars, e):
                if d:
                    t *= to_fraction(point[v]) ** d
            total += t
        return total

    def to_json(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [{"exp": list(e), "coef": format_rational(c)} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, doc) -> Poly:
        if not isinstance(doc, dict) or "vars" not in doc or "terms" not in doc:
            raise SchemaError("polynomial must be an object with 'vars' and 'terms'")
        vars_, terms = doc["vars"], doc["terms"]
        if not isinstance(vars_, list) or not all(isinstance(v, str) for v in vars_):
            raise SchemaError("'vars' must be an array of strings")
        if not isinstance(terms, list):
            raise SchemaError("'terms' must be an array")
        out = {}
        for t in terms:
            if not isinstance(t, dict) or "exp" not in t or "coef" not in t:
                raise SchemaError(f"bad term {t!r}")
            exp = t["exp"]
            if (not isinstance(exp, list) or len(exp) != len(vars_)
                    or any(isinstance(x, bool) or not isinstance(x, int) or x < 0 for x in exp)):
                raise SchemaError(f"bad exponent {exp!r}")
            out[tuple(exp)] = out.get(tuple(exp), 0) + parse_rational(t["coef"])
        try:
            return cls(vars_, out)
        except VariableMismatch as exc:
            raise SchemaError(str(exc)) from exc


def _check_base(f: Poly, n: int | None = None) -> int:
    n = len(f.vars) if n is None else n
    if f.vars != q_vars(n):
        raise VariableMismatch(f"expected base variables {q_vars(n)}, got {f.vars}")
    return n


@dataclass(frozen=True)
class PolyOneForm:
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if not self.coeffs:
            raise VariableMismatch("a one-form needs at least one coefficient")
        for c in self.coeffs:
            _check_base(c, len(self.coeffs))

    @property
    def n(self) -> int:
        return len(self.coeffs)

    @classmethod
    def zero(cls, n: int) -> PolyOneForm:
        return cls(tuple(Poly.zero(q_vars(n)) for _ in range(n)))

    def __add__(self, other: PolyOneForm) -> PolyOneForm:
        return PolyOneForm(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def to_json(self) -> list:
        return [c.to_json() for c in self.coeffs]


@dataclass(frozen=True)
class PolySection:
    forms: tuple

    def __post_init__(self):
        object.__setattr__(self, "forms", tuple(self.forms))
        if not self.forms:
            raise VariableMismatch("a section needs at least one component")
        if len({f.n for f in self.forms}) != 1:
            raise VariableMismatch("section components live on charts of different dimension")

    @property
    def k(self) -> int:
        return len(self.forms)

    @property
    def n(self) -> int:
        return self.forms[0].n

    def to_json(self) -> list:
        return [f.to_json() for f in self.forms]

    @classmethod
    def from_json(cls, doc) -> PolySection:
        if not isinstance(doc, list) or not doc or not all(isinstance(row, list) for row in doc):
            raise SchemaError("section must be a non-empty array of arrays of polynomials")
        try:
            return cls(tuple(PolyOneForm(tuple(Poly.from_json(p) for p in row)) for row in doc))
        except VariableMismatch as exc:
            raise SchemaError(str(exc)) from exc


def exterior_derivative(f: Poly) -> PolyOneForm:
    """``df = sum_i (df/dq^i) dq^i``."""
    _check_base(f)
    return PolyOneForm(tuple(f.diff(v) for v in f.vars))


def d1(gamma: PolyOneForm) -> dict:
    """``d gamma`` with coefficients ``d_i gamma_j - d_j gamma_i`` on ``dq^i ^ dq^j``."""
    qs = q_vars(gamma.n)
    g = gamma.coeffs
    return {
        (i, j): g[j].diff(qs[i]) - g[i].diff(qs[j])
        for i in range(gamma.n) for j in range(i + 1, gamma.n)
    }


def two_form_is_zero(c: dict) -> bool:
    return all(p.is_zero() for p in c.values())


def _wedge_one_forms(a: Sequence[Poly], b: Sequence[Poly]) -> dict:
    n = len(a)
    return {(i, j): a[i] * b[j] - a[j] * b[i] for i in range(n) for j in range(i + 1, n)}


def canonical_two_form(n: int, k: int, r: int) -> list:
    """``Omega_r = sum_i dq^i ^ dp^r_i`` as (var, var, coef) triples over the total chart."""
    return [(f"q{i}", p_var(r, i), Fraction(1)) for i in range(1, n + 1)]


def pullback_omega(gamma: PolySection, r: int) -> dict:
    """``gamma^* Omega_r``, by pulling back the canonical two-form along the section.

    The section is the map ``q -> (q, gamma(q))``; each ``dz^a ^ dz^b`` of
    ``Omega_r`` becomes ``d(z^a o gamma) ^ d(z^b o gamma)`` on the base.
    """
    if not 1 <= r <= gamma.k:
        raise LevelError(f"component {r} outside 1..{gamma.k}")
    n, k = gamma.n, gamma.k
    qs = q_vars(n)
    pulled = {q: Poly.var(qs, q) for q in qs}
    for s, form in enumerate(gamma.forms, start=1):
        for i, c in enumerate(form.coeffs, start=1):
            pulled[p_var(s, i)] = c
    jac = {z: [f.diff(q) for q in qs] for z, f in pulled.items()}
    out = {(i, j): Poly.zero(qs) for i in range(n) for j in range(i + 1, n)}
    for za, zb, c in canonical_two_form(n, k, r):
        for key, val in _wedge_one_forms(jac[za], jac[zb]).items():
            out[key] = out[key] + val * c
    return out


def is_closed_section(gamma: PolySection) -> bool:
    """Every component is closed; cross-checked against the pulled-back canonical forms."""
    closed = all(two_form_is_zero(d1(g)) for g in gamma.forms)
    pulled = all(two_form_is_zero(pullback_omega(gamma, r)) for r in range(1, gamma.k + 1))
    if closed != pulled:
        raise AssertionError("d gamma_r and gamma^* Omega_r disagree")  # pragma: no cover
    return closed


def potential(gamma: PolyOneForm) -> Poly:
    """A polynomial ``W`` with ``dW = gamma`` and ``W(0) = 0``, for closed ``gamma``.

    Uses the radial homotopy: each monomial ``c q^a`` of ``gamma_i`` contributes
    ``c q^a q^i / (|a| + 1)``.
    """
    if not two_form_is_zero(d1(gamma)):
        raise NotClosed("one-form is not closed")
    qs = q_vars(gamma.n)
    out = {}
    for i, c in enumerate(gamma.coeffs):
        for e, coef in c.terms.items():
            e2 = list(e)
            e2[i] += 1
            e2 = tuple(e2)
            out[e2] = out.get(e2, 0) + coef / (sum(e) + 1)
    return Poly(qs, out)


def section_from_potentials(w: Sequence[Poly]) -> PolySection:
    """``gamma_r = dW_r``."""
    return PolySection(tuple(exterior_derivative(f) for f in w))


def compose_hamiltonian(h: Poly, gamma: PolySection) -> Poly:
    """``H o gamma`` as a polynomial on the base."""
    n, k = gamma.n, gamma.k
    allowed = set(q_vars(n)) | set(p_vars(n, k))
    stray = set(h.vars) - allowed
    if stray:
        raise VariableMismatch(f"hamiltonian uses unknown variables {sorted(stray)}")
    values = {
        p_var(r, i): gamma.forms[r - 1].coeffs[i - 1]
        for r in range(1, k + 1) for i in range(1, n + 1)
        if p_var(r, i) in h.vars
    }
    return h.subs(values, q_vars(n))


def _is_locally_constant(f: Poly) -> bool:
    return all(f.diff(q).is_zero() for q in f.vars)


def hamilton_jacobi_check(h: Poly, w: Sequence[Poly]) -> bool:
    """True iff ``H(q, dW_1/dq, ..., dW_k/dq)`` is constant in ``q``."""
    if not w:
        raise VariableMismatch("need at least one characteristic function")
    n = len(w[0].vars)
    for f in w:
        _check_base(f, n)
    return _is_locally_constant(compose_hamiltonian(h, section_from_potentials(w)))


def hamilton_jacobi_check_section(h: Poly, gamma: PolySection) -> bool:
    """Same test for a raw section, which must be closed."""
    if not is_closed_section(gamma):
        raise NotClosed("section is not closed")
    return _is_locally_constant(compose_hamiltonian(h, gamma))


def random_poly(vars: Sequence[str], rng: random.Random, max_degree: int = 3, n_terms: int = 4) -> Poly:
    vars = tuple(vars)
    terms = {}
    for _ in range(n_terms):
        deg = rng.randint(0, max_degree)
        e = [0] * len(vars)
        for _ in range(deg):
            e[rng.randrange(len(vars))] += 1
        terms[tuple(e)] = terms.get(tuple(e), 0) + Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    return Poly(vars, terms)


def random_section(n: int, k: int, rng: random.Random, max_degree: int = 3) -> PolySection:
    qs = q_vars(n)
    return PolySection(tuple(
        PolyOneForm(tuple(random_poly(qs, rng, max_degree) for _ in range(n))) for _ in range(k)
    ))
