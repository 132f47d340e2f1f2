import random

import pytest

from comblef import SelfMapSystem, euler_comb, lambda_comb, lefschetz, restricted_lefschetz
from comblef.corpus import (
    PAIRED_NAMES,
    annulus,
    annulus_with_slits,
    circle,
    corpus_complexes,
    cylinder,
    disk,
    interval,
    klein_bottle_grid,
    mobius,
    paired_triangulations,
    reference_fixtures,
    projective_plane,
    random_cellset,
    random_complex,
    random_self_map,
    run_suite,
    sphere,
    square_grid,
    torus_grid,
    vmap,
    wedge_circles,
)


def test_builder_counts():
    assert torus_grid().f_vector() == [9, 27, 18]
    assert torus_grid(3, 4).euler_characteristic() == 0
    assert projective_plane().euler_characteristic() == 1
    assert klein_bottle_grid().euler_characteristic() == 0
    assert wedge_circles(2).euler_characteristic() == -1
    assert wedge_circles(3, 4).euler_characteristic() == -2
    assert sphere(2).euler_characteristic() == 2
    assert sphere(3).euler_characteristic() == 0
    assert disk().euler_characteristic() == 1
    assert cylinder(4, 2).euler_characteristic() == 0
    assert mobius(5, 1).euler_characteristic() == 0
    assert annulus(8, 2).euler_characteristic() == 0
    assert square_grid(3).f_vector() == [16, 33, 18]


def test_builders_are_deterministic():
    for name, X in corpus_complexes().items():
        assert corpus_complexes()[name] == X
        assert X.simplices_by_dim == corpus_complexes()[name].simplices_by_dim


@pytest.mark.parametrize("build,args", [
    (interval, (0,)), (circle, (2,)), (wedge_circles, (0,)), (sphere, (-1,)), (disk, (2,)), (annulus, (8, 3)),
])
def test_bad_parameters(build, args):
    with pytest.raises(ValueError):
        build(*args)


def test_torus_antipode_cross_check():
    X = torus_grid()
    S = SelfMapSystem.of(vmap(X, lambda v: ((-(v // 3)) % 3) * 3 + (-v) % 3))
    assert lefschetz(S) == 4
    assert lambda_comb(S, X.all_cells() - X.cells([(0,)])) == 3


def test_annulus_slit_values():
    fx = annulus_with_slits()
    for i in range(1, 5):
        assert lambda_comb(fx.system, fx.subsets[f"X{i}"]) == -i
        assert euler_comb(fx.subsets[f"X{i}"]) == i
    assert lefschetz(fx.system) == 0


def test_cone_cylinder_values():
    fx = next(f for f in reference_fixtures() if f.name == "cone-cylinder")
    assert lefschetz(fx.system) == 3
    assert restricted_lefschetz(fx.system, fx.subsets["D"]) == 2


def test_suite_passes_and_is_deterministic():
    rows = run_suite()
    assert rows and all(r.ok for r in rows)
    assert [(r.fixture, r.quantity, r.computed) for r in rows] == [
        (r.fixture, r.quantity, r.computed) for r in run_suite()
    ]
    assert {r.source for r in rows} <= {"reported", "trivial", "derived"}


def test_suite_turns_errors_into_rows():
    fx = reference_fixtures()[0]
    broken = type(fx)(fx.name, fx.system, fx.subsets, (type(fx.expected[0])("boom", 1, "derived", "x", lambda: 1 // 0),))
    (row,) = run_suite([broken])
    assert not row.ok and row.computed is None and "ZeroDivisionError" in row.error


@pytest.mark.parametrize("name", PAIRED_NAMES)
def test_paired_triangulations_agree(name):
    a, b = paired_triangulations(name)
    assert a.system.complex != b.system.complex
    assert a.expected[0].compute() == b.expected[0].compute() == a.expected[0].value


def test_unknown_pair():
    with pytest.raises(ValueError):
        paired_triangulations("klein")


def test_random_generators_are_seeded():
    def sample(seed):
        rng = random.Random(seed)
        X = random_complex(rng)
        return X, dict(random_self_map(rng, X).assignment), random_cellset(rng, X)

    assert sample(7) == sample(7)
