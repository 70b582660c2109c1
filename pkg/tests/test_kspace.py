import pytest

from conftest import span
from ksymplectic import (
    BadDimension,
    DegenerateCommonKernel,
    DimensionError,
    LevelError,
    MismatchedK,
    NotSkew,
    RationalMatrix,
    SchemaError,
    Subspace,
    canonical_model,
    congruent,
    eval_form,
    fixture,
    new_kspace,
    product_ominus,
    r3_2symp,
    r6_2symp,
    r6_5symp,
    random_kspace,
    space_from_json,
    space_to_json,
    wedge,
)
from ksymplectic.linalg import unit_vector


def e(n, i):
    return unit_vector(n, i - 1)


def test_r3_is_2symplectic():
    s = r3_2symp()
    assert (s.dim, s.n, s.k) == (3, 1, 2)
    assert s.kernel(1) == span(3, 2)
    assert s.kernel(2) == span(3, 1)


def test_r6_is_2symplectic():
    s = r6_2symp()
    assert (s.n, s.k) == (2, 2)
    assert s.kernel(1) == span(6, 2, 5)
    assert s.kernel(2) == span(6, 1, 4)


def test_r6_5symplectic():
    s = r6_5symp()
    assert (s.n, s.k) == (1, 5)
    assert s.common_kernel() == Subspace.zero(6)


def test_degenerate_common_kernel():
    with pytest.raises(DegenerateCommonKernel) as info:
        new_kspace(3, [wedge(3, (0, 2)), wedge(3, (0, 2))])
    assert info.value.kernel == span(3, 2)


def test_validation_errors():
    with pytest.raises(NotSkew) as info:
        new_kspace(3, [wedge(3, (0, 2)), RationalMatrix([[1, 0, 0], [0, 0, 0], [0, 0, 0]])])
    assert info.value.r == 2
    with pytest.raises(BadDimension):
        new_kspace(4, [wedge(4, (0, 1), (2, 3)), wedge(4, (0, 2), (1, 3))])
    with pytest.raises(DimensionError):
        new_kspace(3, [wedge(2, (0, 1)), wedge(3, (0, 2))])
    with pytest.raises(BadDimension):
        new_kspace(2, [])


def test_eval_form_sign_convention():
    s = r3_2symp()
    assert eval_form(s, 1, e(3, 1), e(3, 3)) == 1
    assert eval_form(s, 1, e(3, 3), e(3, 1)) == -1
    assert eval_form(s, 2, e(3, 2), e(3, 3)) == 1
    assert eval_form(s, 2, e(3, 1), e(3, 3)) == 0
    v = [3, -1, 7]
    assert eval_form(s, 1, v, v) == 0 and eval_form(s, 2, v, v) == 0
    with pytest.raises(LevelError):
        eval_form(s, 3, v, v)
    with pytest.raises(DimensionError):
        eval_form(s, 1, [1, 0], v)


def test_canonical_models():
    plane = canonical_model(1, 1)
    assert plane.forms == (wedge(2, (0, 1)),)
    c12 = canonical_model(1, 2)
    assert c12.dim == 3 and c12.forms == (wedge(3, (0, 1)), wedge(3, (0, 2)))
    c22 = canonical_model(2, 2)
    assert c22.dim == 6
    assert c22.kernel(1) == span(6, 5, 6)  # the two y^2 axes
    assert c22.kernel(2) == span(6, 3, 4)


def test_r3_is_congruent_to_canonical():
    # swap e1 <-> e3 and flip a sign: w1 = e1^e3 becomes x^y1
    p = RationalMatrix([[0, -1, 0], [0, 0, -1], [1, 0, 0]])
    assert congruent(r3_2symp(), p) == canonical_model(1, 2).forms


def test_product_ominus():
    s = r3_2symp()
    prod = product_ominus(s, s)
    assert (prod.dim, prod.k) == (6, 2)
    plane = canonical_model(1, 1)
    pp = product_ominus(plane, plane)
    assert (pp.dim, pp.k) == (4, 1)
    assert pp.forms[0] == RationalMatrix.block_diagonal(plane.forms[0], -plane.forms[0])
    with pytest.raises(MismatchedK):
        product_ominus(s, plane)


@pytest.mark.parametrize("n,k,seed", [(1, 1, 0), (2, 2, 5), (3, 1, 9), (1, 3, 2), (3, 3, 1)])
def test_random_kspace(n, k, seed):
    s, p = random_kspace(n, k, seed)
    again, p2 = random_kspace(n, k, seed)
    assert s == again and p == p2
    assert (s.n, s.k) == (n, k)
    assert congruent(canonical_model(n, k), p) == s.forms
    new_kspace(s.dim, s.forms)  # still validates


def test_random_kspace_seeds_differ():
    assert random_kspace(2, 2, 0)[1] != random_kspace(2, 2, 1)[1]


def test_fixture_lookup():
    assert fixture("r3-2symp") == r3_2symp()
    assert fixture("canonical:2,3") == canonical_model(2, 3)
    for bad in ["nope", "canonical:2", "canonical:0,1", "canonical:a,b"]:
        with pytest.raises(SchemaError):
            fixture(bad)


@pytest.mark.parametrize("name", ["r3-2symp", "r6-2symp", "r6-5symp", "canonical:2,2"])
def test_space_json_roundtrip(name):
    s = fixture(name)
    assert space_from_json(space_to_json(s)) == s


def test_space_json_format():
    assert space_to_json(r3_2symp()) == {"dim": 3, "k": 2, "forms": [[[0, 2, "1"]], [[1, 2, "1"]]]}


@pytest.mark.parametrize("doc", [
    [],
    {"dim": 3, "k": 2},
    {"dim": 3, "k": 2, "forms": [[[0, 2, "1"]]]},
    {"dim": 3, "k": 2, "forms": [[[2, 0, "1"]], [[1, 2, "1"]]]},
    {"dim": 3, "k": 2, "forms": [[[1, 1, "1"]], [[1, 2, "1"]]]},
    {"dim": 3, "k": 2, "forms": [[[0, 5, "1"]], [[1, 2, "1"]]]},
    {"dim": 3, "k": 2, "forms": [[[0, 2, "x"]], [[1, 2, "1"]]]},
    {"dim": "3", "k": 2, "forms": [[], []]},
])
def test_space_json_rejects_malformed(doc):
    with pytest.raises(SchemaError):
        space_from_json(doc)


def test_space_json_domain_errors_pass_through():
    with pytest.raises(DegenerateCommonKernel):
        space_from_json({"dim": 3, "k": 2, "forms": [[[0, 2, "1"]], [[0, 2, "1"]]]})
