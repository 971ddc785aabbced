import pytest

from torsionfam.groupring import Word
from torsionfam.knots import (
    ConwayPolynomial,
    KnotPresentation,
    LaurentInt,
    SeifertMatrix,
    alexander_from_fox,
    bundled_knots,
    conway_from_seifert,
    conway_normalize,
)

EXPECTED_CONWAY = {
    "unknot": (1,),
    "trefoil": (1, 0, 1),
    "figure8": (1, 0, -1),
    "5_1": (1, 0, 3, 0, 1),
    "5_2": (1, 0, 2),
}

EXPECTED_DELTA = {
    "unknot": {0: 1},
    "trefoil": {-1: 1, 0: -1, 1: 1},
    "figure8": {-1: -1, 0: 3, 1: -1},
    "5_1": {-2: 1, -1: -1, 0: 1, 1: -1, 2: 1},
    "5_2": {-1: 2, 0: -3, 1: 2},
}


def test_laurent_arithmetic():
    a = LaurentInt({1: 1, -1: -1})
    assert a * a == LaurentInt({2: 1, 0: -2, -2: 1})
    assert (a - a).is_zero()
    assert a.reciprocal() == -a
    assert LaurentInt({0: 3, 2: 1}).evaluate_at_one() == 4


# -- Fox path: spec examples ----------------------------------------------------


def test_unknot_alexander():
    pres, _ = bundled_knots()["unknot"]
    assert alexander_from_fox(pres) == LaurentInt({0: 1})


def test_trefoil_alexander():
    pres, _ = bundled_knots()["trefoil"]
    assert alexander_from_fox(pres) == LaurentInt(EXPECTED_DELTA["trefoil"])


def test_figure8_alexander():
    pres, _ = bundled_knots()["figure8"]
    assert alexander_from_fox(pres) == LaurentInt(EXPECTED_DELTA["figure8"])


@pytest.mark.parametrize("name", sorted(EXPECTED_DELTA))
def test_alexander_values(name):
    pres, _ = bundled_knots()[name]
    assert alexander_from_fox(pres).terms == EXPECTED_DELTA[name]


@pytest.mark.parametrize("name", sorted(EXPECTED_CONWAY))
def test_alexander_symmetry_and_unit(name):
    pres, _ = bundled_knots()[name]
    delta = alexander_from_fox(pres)
    assert delta.is_symmetric()
    assert delta.evaluate_at_one() == 1


def test_degenerate_presentation_rejected():
    # the commutator presents a torus, not a knot: Delta(1) = 0 there
    rel = Word([(0, 1), (1, 1), (0, -1), (1, -1)])
    pres = KnotPresentation(strands=2, wirtinger_relators=(rel,))
    with pytest.raises(ValueError, match="degenerate presentation"):
        alexander_from_fox(pres)


def test_presentation_shape_validation():
    with pytest.raises(ValueError, match="conjugation-shaped"):
        KnotPresentation(strands=2, wirtinger_relators=(Word([(0, 1), (1, 1)]),))
    with pytest.raises(ValueError, match="undeclared"):
        KnotPresentation(strands=1, wirtinger_relators=(Word([(1, 1), (0, -1)]),))


# -- conway_normalize: spec examples -----------------------------------------------


def test_normalize_constant():
    assert conway_normalize(LaurentInt({0: 1})).coefficients == (1,)


def test_normalize_trefoil():
    nabla = conway_normalize(LaurentInt({-1: 1, 0: -1, 1: 1}))
    assert nabla.coefficients == (1, 0, 1)


def test_normalize_figure8():
    nabla = conway_normalize(LaurentInt({-1: -1, 0: 3, 1: -1}))
    assert nabla.coefficients == (1, 0, -1)


def test_normalize_rejects_asymmetric():
    with pytest.raises(ValueError, match="asymmetric"):
        conway_normalize(LaurentInt({0: 1, 1: 1}))


def test_normalize_rejects_non_unit():
    with pytest.raises(ValueError, match="\\+1 or -1"):
        conway_normalize(LaurentInt({-1: 1, 0: 1, 1: 1}))


def test_normalize_uncentered_input():
    # t^2(t - 1 + 1/t) is the trefoil polynomial shifted by a unit
    shifted = LaurentInt({1: 1, 2: -1, 3: 1})
    assert conway_normalize(shifted).coefficients == (1, 0, 1)


# -- Seifert oracle: spec examples ---------------------------------------------------


def test_oracle_empty_matrix():
    assert conway_from_seifert(SeifertMatrix(())).coefficients == (1,)


def test_oracle_trefoil():
    v = SeifertMatrix(((-1, 1), (0, -1)))
    assert conway_from_seifert(v).coefficients == (1, 0, 1)


def test_oracle_figure8():
    v = SeifertMatrix(((1, 1), (0, -1)))
    assert conway_from_seifert(v).coefficients == (1, 0, -1)


def test_seifert_validation():
    with pytest.raises(ValueError, match="square"):
        SeifertMatrix(((1, 2),))


# -- the two paths agree exactly ------------------------------------------------------


@pytest.mark.parametrize("name", sorted(EXPECTED_CONWAY))
def test_oracle_agreement(name):
    """Fox-calculus path equals the Seifert oracle, sign included."""
    pres, seif = bundled_knots()[name]
    via_fox = conway_normalize(alexander_from_fox(pres))
    via_seifert = conway_from_seifert(seif)
    assert via_fox == via_seifert
    assert via_fox.coefficients == EXPECTED_CONWAY[name]
    assert via_fox.even_only()


@pytest.mark.parametrize("name", sorted(EXPECTED_CONWAY))
def test_mirror_transpose_invariance(name):
    _, seif = bundled_knots()[name]
    assert conway_from_seifert(seif.transpose()) == conway_from_seifert(seif)


def test_conway_polynomial_validation():
    with pytest.raises(ValueError, match="constant term"):
        ConwayPolynomial((0, 1))
    assert ConwayPolynomial((1, 0, 2, 0)).degree() == 2
