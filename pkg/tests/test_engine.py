import random

import pytest
from hypothesis import given, settings, strategies as st

from comblef import (
    Certificate,
    DomainMismatchError,
    FrontierFixedPointError,
    NotASubcomplexError,
    PreconditionError,
    SelfMapSystem,
    Verdict,
    VertexSelfMap,
    build_complex,
    certify_fixed_point,
    check_compatibility,
    closure,
    euler_comb,
    hopf_lefschetz,
    index_via_lambda,
    lambda_comb,
    lambda_comb_additive_check,
    lefschetz,
    quotient_lambda,
    relative_lefschetz,
    subdivide_cellset,
)
from comblef.corpus import (
    annulus_with_slits,
    circle,
    circle_reflection,
    constant_map_approximations,
    interval,
    random_cellset,
    random_complex,
    random_self_map,
    square_grid,
    square_point_reflection,
    wedge_circles,
)
from comblef.engine import find_witness, restricted_system, subdivide_system


def rotation(n=3):
    X = circle(n)
    return SelfMapSystem.of(VertexSelfMap(X, {v: (v + 1) % n for v in X.vertices}))


def test_identity_is_compatible_with_everything():
    S = SelfMapSystem.identity(interval(2))
    rng = random.Random(0)
    for _ in range(20):
        r = check_compatibility(S, random_cellset(rng, S.complex))
        assert r.a_preserved and r.complement_preserved and r.nondegenerate_on_cells and not r.violations


def test_rotation_moves_an_edge():
    S = rotation()
    r = check_compatibility(S, S.complex.cells([(0, 1)]))
    assert not r.a_preserved
    assert r.violations


def test_constant_midpoint_breaks_complement():
    to_zero, identity, A = constant_map_approximations()
    r = check_compatibility(identity, A)
    assert not r.complement_preserved
    assert any(kind.startswith("approximated") for kind, _, _ in r.violations)


def test_report_flags_match_violations():
    rng = random.Random(1)
    for _ in range(50):
        X = random_complex(rng, 5)
        S = SelfMapSystem.of(random_self_map(rng, X))
        r = check_compatibility(S, random_cellset(rng, X))
        flags = r.a_preserved and r.complement_preserved and r.nondegenerate_on_cells
        assert bool(r.violations) == (not flags)


def test_lambda_comb_interval_values():
    X = interval(1)
    S = SelfMapSystem.identity(X)
    assert lambda_comb(S, X.cells([(0, 1)])) == -1
    assert lambda_comb(S, X.cells([(0,), (1,)])) == 2
    assert lambda_comb(S, X.empty()) == 0


def test_lambda_comb_enforcement_raises_with_report():
    S = rotation()
    with pytest.raises(PreconditionError) as info:
        lambda_comb(S, S.complex.cells([(0,)]))
    assert not info.value.report.a_preserved
    assert lambda_comb(S, S.complex.cells([(0,)]), enforce=False) == 0


def test_domain_mismatch():
    S = SelfMapSystem.identity(interval(1))
    with pytest.raises(DomainMismatchError):
        lambda_comb(S, interval(2).all_cells())


def test_additive_check_examples():
    S = circle_reflection().system
    X = S.complex
    A = X.cells([(0,)])
    assert lambda_comb_additive_check(S, A, A.complement()) == (lefschetz(S), lefschetz(S))
    assert lambda_comb_additive_check(S, A, A) == (lambda_comb(S, A),) * 2
    B = X.cells([(1, 2)])
    lhs, rhs = lambda_comb_additive_check(S, A, B)
    assert lhs == rhs == lambda_comb(S, A) + lambda_comb(S, B)


def test_relative_examples():
    S = SelfMapSystem.identity(interval(1))
    X = S.complex
    assert relative_lefschetz(S, X.all_cells()) == 0
    assert relative_lefschetz(S, X.empty()) == lefschetz(S)
    assert relative_lefschetz(S, X.cells([(0,), (1,)])) == -1
    with pytest.raises(NotASubcomplexError):
        relative_lefschetz(S, X.cells([(0, 1)]))


def test_quotient_examples():
    X = wedge_circles(2, 3)
    S = SelfMapSystem.identity(X)
    assert quotient_lambda(S, X.all_cells()) == 1
    loop = closure(X.cells([(0, 1), (1, 2), (0, 2)]))
    assert quotient_lambda(S, loop) == 0
    assert lefschetz(S) == -1 == hopf_lefschetz(restricted_system(S, loop)) + 0 - 1
    with pytest.raises(NotASubcomplexError):
        quotient_lambda(S, X.cells([(0, 1)]))


def test_index_examples():
    fx = circle_reflection()
    S = fx.system
    assert index_via_lambda(S, S.complex.all_cells()) == lefschetz(S)
    assert index_via_lambda(S, fx.subsets["star0"]) == 1
    half_turn = square_point_reflection()
    assert index_via_lambda(half_turn.system, half_turn.subsets["U"]) == 1


def test_index_rejects_frontier_fixed_points_and_closed_sets():
    square = square_point_reflection()
    U = square.subsets["U"]
    identity = SelfMapSystem.identity(square_grid(2))
    with pytest.raises(FrontierFixedPointError):
        index_via_lambda(identity, U)
    with pytest.raises(NotASubcomplexError):
        index_via_lambda(identity, U.complement())


def test_certificate_examples():
    point = build_complex([(0,)])
    cert = certify_fixed_point(SelfMapSystem.identity(point), point.all_cells())
    assert cert.verdict is Verdict.FIXED_POINT and cert.lambda_value == 1 and cert.witness == (0,)
    S = rotation()
    assert certify_fixed_point(S, S.complex.all_cells()).verdict is Verdict.NO_GUARANTEE
    fx = annulus_with_slits()
    cert = certify_fixed_point(fx.system, fx.subsets["X1"])
    assert cert.verdict is Verdict.FIXED_POINT and cert.lambda_value == -1


def test_certificate_precondition_verdict_is_not_an_exception():
    S = rotation()
    cert = certify_fixed_point(S, S.complex.cells([(0, 1)]))
    assert cert.verdict is Verdict.PRECONDITION_VIOLATED
    assert cert.witness is None


def test_certificate_text_is_deterministic():
    fx = annulus_with_slits()
    a = certify_fixed_point(fx.system, fx.subsets["X2"]).to_text()
    b = certify_fixed_point(fx.system, fx.subsets["X2"]).to_text()
    assert a == b
    assert a.splitlines()[0] == "verdict = FixedPointInClosure"
    assert "lambda = -2" in a


def test_certificate_invariant():
    with pytest.raises(ValueError):
        Certificate(Verdict.FIXED_POINT, 0)


def test_witness_prefers_cells_of_the_set():
    X = interval(2)
    S = SelfMapSystem.of(VertexSelfMap(X, {0: 2, 1: 1, 2: 0}))
    star = X.star((1,))
    cert = certify_fixed_point(S, star)
    assert cert.lambda_value == 1 and cert.witness == (1,)
    assert find_witness(S, X.cells([(0, 1), (1, 2)])) == (1,)


@st.composite
def systems_with_set(draw):
    rng = random.Random(draw(st.integers(0, 2**32 - 1)))
    X = random_complex(rng, 6)
    return SelfMapSystem.of(random_self_map(rng, X)), random_cellset(rng, X), random_cellset(rng, X)


@settings(max_examples=80, deadline=None)
@given(systems_with_set())
def test_identity_lambda_is_euler_comb(data):
    S, A, _ = data
    assert lambda_comb(SelfMapSystem.identity(S.complex), A) == euler_comb(A)


@settings(max_examples=80, deadline=None)
@given(systems_with_set())
def test_raw_trace_is_additive(data):
    S, A, B = data
    raw = lambda C: lambda_comb(S, C, enforce=False)
    assert raw(A | B) + raw(A & B) == raw(A) + raw(B)


@settings(max_examples=80, deadline=None)
@given(systems_with_set())
def test_invariant_subcomplex_restriction(data):
    S, A, _ = data
    A = closure(A)
    if any(S.phi.image_simplex(s) not in A.cells for s in A.cells):
        return
    assert lambda_comb(S, A, enforce=False) == hopf_lefschetz(restricted_system(S, A))


@settings(max_examples=40, deadline=None)
@given(systems_with_set())
def test_subdivided_map_keeps_lambda(data):
    S, A, _ = data
    sd, fine = subdivide_system(S)
    assert lambda_comb(fine, subdivide_cellset(sd, A), enforce=False) == lambda_comb(S, A, enforce=False)
    assert lefschetz(fine) == lefschetz(S)


def test_subdivided_annulus_keeps_slit_values():
    fx = annulus_with_slits(2)
    sd, fine = subdivide_system(fx.system)
    for i in (1, 2):
        assert lambda_comb(fine, subdivide_cellset(sd, fx.subsets[f"X{i}"])) == -i
