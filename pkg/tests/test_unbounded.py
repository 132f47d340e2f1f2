from unittest import mock

import pytest

from comblef import (
    NotASubcomplexError,
    NotIsolatedError,
    PreconditionError,
    SelfMapSystem,
    Verdict,
    VertexSelfMap,
    build_complex,
    euler_comb,
    lambda_comb,
)
from comblef.corpus import (
    FIGURE_EIGHT_KINDS,
    figure_eight_at_infinity,
    interval,
    line_translation,
    plane_translation_sphere,
    punctured_tori_pair,
    square_identity_boundary,
    torus_grid,
)
from comblef.unbounded import (
    CompactifiedSystem,
    SpaceClass,
    SpaceTag,
    certify_extension_fixed_point,
    certify_unbounded,
    index_at_infinity,
    lambda_comb_unbounded,
    one_point_compactify,
)


def punctured_torus_identity():
    X = torus_grid()
    return CompactifiedSystem(SelfMapSystem.identity(X), X.cells([(0,)]))


def test_compactify_interval_gives_circle():
    X = interval(2)
    Y, apex = one_point_compactify(X, X.cells([(0,), (2,)]))
    assert apex == 3
    assert Y.f_vector() == [4, 4]
    assert Y.euler_characteristic() == 0


def test_compactify_string_labels():
    X = build_complex([("a", "b")])
    Y, apex = one_point_compactify(X, X.cells([("a",), ("b",)]))
    assert apex == "inf"
    assert ("a", "inf") in Y


def test_compactify_needs_subcomplex():
    X = interval(1)
    with pytest.raises(NotASubcomplexError):
        one_point_compactify(X, X.cells([(0, 1)]))


def test_unbounded_values():
    assert lambda_comb_unbounded(square_identity_boundary().compactified) == 1
    assert lambda_comb_unbounded(punctured_tori_pair().compactified) == 6
    assert lambda_comb_unbounded(punctured_torus_identity()) == -1


def test_chi_of_compactification():
    C = punctured_torus_identity()
    assert euler_comb(C.U) + 1 == 0
    assert C.compactification_connected()


def test_corona_must_be_invariant():
    X = interval(2)
    S = SelfMapSystem.of(VertexSelfMap(X, {0: 1, 1: 1, 2: 2}))
    C = CompactifiedSystem(S, X.cells([(0,)]))
    with pytest.raises(PreconditionError):
        lambda_comb_unbounded(C)
    with pytest.raises(NotASubcomplexError):
        CompactifiedSystem(S, X.cells([(0, 1)])).check()


def test_index_at_infinity():
    assert index_at_infinity(plane_translation_sphere().compactified) == 2
    assert index_at_infinity(line_translation().compactified) == 0
    with pytest.raises(NotIsolatedError):
        index_at_infinity(punctured_torus_identity())
    with pytest.raises(PreconditionError):
        index_at_infinity(square_identity_boundary().compactified)


@pytest.mark.parametrize("kind", FIGURE_EIGHT_KINDS)
def test_figure_eight_graph_class(kind):
    fx = figure_eight_at_infinity(kind)
    cert = certify_unbounded(fx.compactified, SpaceClass("graph"))
    expected = {"both-reflected": Verdict.FIXED_POINT}.get(kind, Verdict.NO_GUARANTEE)
    assert cert.verdict is expected
    if expected is Verdict.FIXED_POINT:
        assert cert.lambda_value == 2 and cert.witness is not None


def test_surface_class_rejects_the_open_square():
    cert = certify_unbounded(square_identity_boundary().compactified, SpaceClass("surface"))
    assert cert.verdict is Verdict.PRECONDITION_VIOLATED
    assert "Euler characteristic 2" in cert.justification


def test_graph_class_rejects_surfaces():
    cert = certify_unbounded(punctured_tori_pair().compactified, SpaceClass("graph"))
    assert cert.verdict is Verdict.PRECONDITION_VIOLATED


def test_wedge_class():
    C = punctured_tori_pair().compactified
    cert = certify_unbounded(C, SpaceClass("wedge", (-1, -1)))
    assert cert.verdict is Verdict.FIXED_POINT and cert.lambda_value == 6
    wrong_sum = certify_unbounded(C, SpaceClass("wedge", (-1, -2)))
    assert wrong_sum.verdict is Verdict.PRECONDITION_VIOLATED
    zero_summand = certify_unbounded(C, SpaceClass("wedge", (0, -2)))
    assert zero_summand.verdict is Verdict.PRECONDITION_VIOLATED


def test_wedge_lower_branch():
    C = punctured_torus_identity()
    cls = SpaceClass("wedge", (-1,))
    assert certify_unbounded(C, cls).verdict is Verdict.NO_GUARANTEE
    with mock.patch("comblef.unbounded.lambda_comb_unbounded", return_value=-3):
        cert = certify_unbounded(C, cls)
    assert cert.verdict is Verdict.FIXED_POINT and cert.lambda_value == -3
    assert "-2" in cert.justification


def test_space_class_validation():
    with pytest.raises(ValueError):
        SpaceClass("wedge")
    with pytest.raises(ValueError):
        SpaceClass("graph", (-1,))
    with pytest.raises(ValueError):
        SpaceClass("wedge", (1,))
    with pytest.raises(ValueError):
        SpaceClass("wedge", ())
    with pytest.raises(ValueError):
        SpaceClass("sphere")
    assert SpaceClass("collapse").tag is SpaceTag.COLLAPSE


def test_collapse_class_needs_the_conjecture_flag():
    C = punctured_tori_pair().compactified
    cert = certify_unbounded(C, SpaceClass("collapse"))
    assert cert.verdict is Verdict.PRECONDITION_VIOLATED and cert.conjectural
    cert = certify_unbounded(C, SpaceClass("collapse"), assume_conjecture=True)
    assert cert.verdict is Verdict.FIXED_POINT and cert.conjectural


def test_surrogate_is_noted():
    cert = certify_unbounded(plane_translation_sphere().compactified, SpaceClass("surface-boundary"))
    assert any("surrogate" in n for n in cert.notes)


def test_extension_certificate_on_the_line():
    C = line_translation().compactified
    cert = certify_extension_fixed_point(C)
    assert cert.verdict is Verdict.FIXED_POINT
    assert cert.lambda_value == -1
    apex = max(C.system.complex.vertices)
    assert cert.witness == (apex,)
    assert cert.region == "corona"


def test_extension_certificate_flags_fixed_cells_in_u():
    cert = certify_extension_fixed_point(punctured_torus_identity())
    assert any(n.startswith("advisory") for n in cert.notes)


def test_extension_certificate_zero():
    cert = certify_extension_fixed_point(figure_eight_at_infinity("loop-swap").compactified)
    assert cert.verdict is Verdict.NO_GUARANTEE


def test_additivity_at_infinity():
    # index at infinity plus the number of U recovers the whole number
    C = plane_translation_sphere().compactified
    S = C.system
    assert lambda_comb(S, C.corona) + lambda_comb_unbounded(C) == lambda_comb(S, S.complex.all_cells())
    assert index_at_infinity(C) == lambda_comb(S, S.complex.all_cells())
