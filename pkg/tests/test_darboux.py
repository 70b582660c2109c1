import pytest

from conftest import span
from ksymplectic import (
    ComplementFailed,
    MismatchedK,
    NotIsomorphism,
    NotPolarized,
    RationalMatrix,
    Subspace,
    Verdict,
    canonical_model,
    check_polarization,
    congruent,
    darboux_map,
    find_polarization,
    graph_check,
    graph_subspace,
    is_ksymplectomorphism,
    is_l_lagrangian,
    product_ominus,
    r3_2symp,
    r6_2symp,
    r6_5symp,
    random_kspace,
    transport_polarization,
    x_subspace,
    y_subspace,
)

R3 = r3_2symp()


@pytest.mark.parametrize("n,k", [(1, 1), (1, 2), (2, 2), (2, 3)])
def test_canonical_y_is_polarization(n, k):
    assert check_polarization(canonical_model(n, k), y_subspace(n, k))
    # for k = 1 the base is lagrangian too; for k >= 2 it has the wrong dimension
    assert check_polarization(canonical_model(n, k), x_subspace(n, k)) == (k == 1)


def test_r3_polarizations():
    assert check_polarization(R3, span(3, 1, 2))
    assert not check_polarization(R3, span(3, 3))  # 2-lagrangian, wrong dimension


def test_find_polarization_fixtures():
    assert find_polarization(r6_5symp()) == span(6, 1, 2, 3, 4, 5)
    assert find_polarization(r6_2symp()) == span(6, 1, 2, 4, 5)
    w = find_polarization(canonical_model(1, 2))
    assert w.dim == 2 and check_polarization(canonical_model(1, 2), w)


@pytest.mark.parametrize("n,k,seed", [(1, 1, 0), (2, 1, 3), (2, 2, 1), (3, 2, 4), (1, 3, 7), (2, 3, 2)])
def test_find_polarization_random(n, k, seed):
    s, _ = random_kspace(n, k, seed)
    w = find_polarization(s, seed)
    assert w is not None and check_polarization(s, w)


@pytest.mark.parametrize("n,k", [(1, 1), (1, 2), (2, 2), (3, 1), (2, 3)])
def test_darboux_on_canonical_is_identity(n, k):
    s = canonical_model(n, k)
    frame = darboux_map(s, y_subspace(n, k), x_subspace(n, k))
    assert frame.P == RationalMatrix.identity(s.dim)
    assert darboux_map(s, y_subspace(n, k)).P == RationalMatrix.identity(s.dim)


def test_darboux_r3():
    frame = darboux_map(R3, span(3, 1, 2), span(3, 3))
    assert frame.e == ((0, 0, 1),)
    assert Subspace(3, [v for row in frame.f for v in row]) == span(3, 1, 2)
    assert frame.P == RationalMatrix([[0, -1, 0], [0, 0, -1], [1, 0, 0]])
    assert congruent(R3, frame.P) == canonical_model(1, 2).forms
    assert is_ksymplectomorphism(canonical_model(1, 2), R3, frame.P)


def test_darboux_frame_json():
    doc = darboux_map(R3, span(3, 1, 2), span(3, 3)).to_json()
    assert doc == {
        "e": [["0", "0", "1"]],
        "f": [[["-1", "0", "0"]], [["0", "-1", "0"]]],
        "P": [["0", "-1", "0"], ["0", "0", "-1"], ["1", "0", "0"]],
    }


@pytest.mark.parametrize("n,k,seed", [(1, 1, 1), (2, 2, 0), (3, 1, 2), (2, 3, 5), (3, 3, 6)])
def test_darboux_random(n, k, seed):
    s, p = random_kspace(n, k, seed)
    witness = transport_polarization(p, y_subspace(n, k))
    assert check_polarization(s, witness)
    frame = darboux_map(s, witness)
    assert congruent(s, frame.P) == canonical_model(n, k).forms


def test_darboux_errors():
    with pytest.raises(NotPolarized):
        darboux_map(R3, span(3, 3))
    with pytest.raises(ComplementFailed):
        darboux_map(R3, span(3, 1, 2), span(3, 1))


def test_ksymplectomorphism_basics():
    plane = canonical_model(1, 1)
    assert is_ksymplectomorphism(plane, plane, RationalMatrix.identity(2))
    assert not is_ksymplectomorphism(plane, plane, RationalMatrix.identity(2).scale(2))
    assert not is_ksymplectomorphism(plane, plane, RationalMatrix.zeros(2, 2))
    with pytest.raises(MismatchedK):
        is_ksymplectomorphism(plane, R3, RationalMatrix.identity(3))


def test_random_witness_is_symplectomorphism():
    s, p = random_kspace(2, 2, 11)
    assert is_ksymplectomorphism(s, canonical_model(2, 2), p)
    assert is_ksymplectomorphism(canonical_model(2, 2), s, p.inverse())


def test_identity_graph_is_diagonal_and_lagrangian():
    g = graph_subspace(R3, R3, RationalMatrix.identity(3))
    assert g == Subspace(6, [[1, 0, 0, 1, 0, 0], [0, 1, 0, 0, 1, 0], [0, 0, 1, 0, 0, 1]])
    assert is_l_lagrangian(product_ominus(R3, R3), g, 2).verdict is Verdict.YES
    res = graph_check(R3, R3, RationalMatrix.identity(3))
    assert res.symplectomorphism and res.agree


def test_graph_of_scaling_is_not_lagrangian():
    plane = canonical_model(1, 1)
    res = graph_check(plane, plane, RationalMatrix.identity(2).scale(2))
    assert not res.symplectomorphism
    assert res.lagrangian.verdict is Verdict.NO and res.agree


def test_graph_check_requires_isomorphism():
    with pytest.raises(NotIsomorphism):
        graph_check(R3, R3, RationalMatrix.zeros(3, 3))


@pytest.mark.parametrize("n,k,seed", [(1, 2, 0), (2, 1, 1), (2, 2, 2)])
def test_polarization_transport(n, k, seed):
    s, p = random_kspace(n, k, seed)
    target = canonical_model(n, k)
    w = transport_polarization(p, y_subspace(n, k))
    assert check_polarization(s, w)
    assert is_ksymplectomorphism(s, target, p)
