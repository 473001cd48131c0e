import random

import pytest
from hypothesis import given, settings, strategies as st

from ogcoh.acceptance import groebner_hilbert, random_presentation
from ogcoh.algebra import (AlgebraMorphism, InvalidMorphismError, PresentationError, PresentedAlgebra,
                           UnsupportedGradingError, hilbert_function, identity_morphism, is_finite,
                           morphism_matrix)
from ogcoh.graded import GradedDims
from ogcoh.towers import local_rings


@pytest.fixture(scope="module")
def rings():
    return local_rings()


def test_quadric(rings):
    assert hilbert_function(rings["G"], 16) == GradedDims.even([1, 1, 1, 1])


def test_truncated(rings):
    assert hilbert_function(rings["P(V)"], 16) == GradedDims.even([1, 1, 1, 1])


def test_two_generator_bundle_ring(rings):
    h = hilbert_function(rings["P(L+/L)"], 16)
    assert h == GradedDims.even([1, 2, 2, 2, 1])
    assert h.total == 8
    alg = rings["P(L+/L)"]
    assert sorted(alg.format_monomial(m) for m in alg.basis(4)) == ["h*zeta", "zeta^2"]


def test_bad_presentations():
    with pytest.raises(UnsupportedGradingError):
        PresentedAlgebra([("x", 3)])
    with pytest.raises(UnsupportedGradingError):
        PresentedAlgebra([("x", 0)])
    with pytest.raises(PresentationError):
        PresentedAlgebra([("x", 2), ("y", 4)], ["x + y"])
    with pytest.raises(PresentationError):
        PresentedAlgebra([("x", 2)], ["x*w"])


def test_infinite_quotient_is_reported():
    alg = PresentedAlgebra([("x", 2), ("y", 2)], ["x*y"])
    h = hilbert_function(alg, 10)
    assert h[10] == 2
    assert not is_finite(alg, 10)
    assert is_finite(PresentedAlgebra([("x", 2)], ["x**3"]), 10)


def test_normal_form(rings):
    alg = rings["P(L+/L)"]
    assert alg.normal_form(alg.poly("h**2")) == alg.poly("-zeta**2")
    assert alg.is_zero(alg.poly("h**4 - zeta**4"))
    assert alg.is_zero(alg.poly("(zeta + h)**2 - 2*zeta*h"))


def test_comparison_matrix(rings):
    phi = AlgebraMorphism(rings["P_G(U)"], rings["P(L+/L)"],
                          {"xi": "zeta", "u1": "zeta + h", "u2": "zeta*h"})
    for d in range(0, 17, 2):
        m = morphism_matrix(phi, d)
        assert m.rows == m.cols == m.rank()
    assert morphism_matrix(phi, 2).rank() == 2
    assert phi.apply(rings["P_G(U)"].poly("u1**2")) == rings["P(L+/L)"].poly("2*zeta*h")


def test_identity_matrix(rings):
    m = morphism_matrix(identity_morphism(rings["P(V)"]), 4)
    assert m.shape == (1, 1) and m.is_identity()


def test_relation_not_preserved_names_relation(rings):
    with pytest.raises(InvalidMorphismError, match="u2"):
        AlgebraMorphism(rings["G"], rings["P(L+/L)"], {"u1": "zeta", "u2": "h*zeta"})


def test_image_degree_checked(rings):
    with pytest.raises(InvalidMorphismError):
        AlgebraMorphism(rings["P(V)"], rings["P(L+/L)"], {"zeta": "zeta**2"})


def test_composition_is_matrix_product(rings):
    g, pgu, pl = rings["G"], rings["P_G(U)"], rings["P(L+/L)"]
    a = AlgebraMorphism(g, pgu, {"u1": "u1", "u2": "u2"})
    b = AlgebraMorphism(pgu, pl, {"xi": "zeta", "u1": "zeta + h", "u2": "zeta*h"})
    ab = a.then(b)
    for d in range(0, 9, 2):
        assert ab.matrix(d) == b.matrix(d) @ a.matrix(d)


def test_in_scope_rings_are_symmetric(rings):
    for alg in rings.values():
        h = hilbert_function(alg, 16)
        assert h.is_symmetric(h.top_degree)


@pytest.mark.parametrize("name", ["G", "P(V)", "P_G(U)", "P(L+/L)"])
def test_groebner_oracle_local(rings, name):
    assert hilbert_function(rings[name], 16) == groebner_hilbert(rings[name], 16)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_groebner_oracle_random(seed):
    alg = random_presentation(random.Random(seed))
    assert hilbert_function(alg, 12) == groebner_hilbert(alg, 12)
