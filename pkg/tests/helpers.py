"""Shared builders for the test modules."""
from __future__ import annotations

import random
from itertools import combinations

from comblef import SelfMapSystem, VertexSelfMap, build_complex, closure
from comblef.corpus import reference_fixtures


def is_permutation(S: SelfMapSystem) -> bool:
    return len(set(S.phi.assignment.values())) == len(S.complex.vertices)


def cell_orbits(S: SelfMapSystem) -> list[frozenset]:
    """Orbits of open cells under a vertex-permuting map."""
    seen, orbits = set(), []
    for s in S.complex:
        if s in seen:
            continue
        orbit, t = [], s
        while t not in orbit:
            orbit.append(t)
            t = S.phi.image_simplex(t)
        seen.update(orbit)
        orbits.append(frozenset(orbit))
    return orbits


def random_orbit_union(rng: random.Random, S: SelfMapSystem, orbits, p=0.5):
    cells = set()
    for o in orbits:
        if rng.random() < p:
            cells |= o
    return S.complex.cells(cells)


def invariant_subcomplexes(S: SelfMapSystem) -> list:
    """Orbit closures and their pairwise unions, deduplicated."""
    X = S.complex
    base = []
    for o in cell_orbits(S):
        A = closure(X.cells(o))
        if A not in base:
            base.append(A)
    found = list(base)
    for A, B in combinations(base, 2):
        U = A | B
        if U not in found:
            found.append(U)
    if X.all_cells() not in found:
        found.append(X.all_cells())
    return found


def permutation_fixtures():
    return [fx for fx in reference_fixtures() if fx.system is not None and is_permutation(fx.system)]


def small_complexes():
    """Complexes with at most 8 cells, each with a few self-maps."""
    cases = []
    specs = {
        "point": [(0,)],
        "edge": [(0, 1)],
        "path2": [(0, 1), (1, 2)],
        "triangle": [(0, 1), (1, 2), (0, 2)],
        "2-simplex": [(0, 1, 2)],
        "path3+point": [(0, 1), (1, 2), (2, 3), (4,)],
    }
    for name, gens in specs.items():
        X = build_complex(gens)
        verts = X.vertices
        maps = {"identity": VertexSelfMap.identity(X), "constant": VertexSelfMap.constant(X, verts[0])}
        reversal = {v: w for v, w in zip(verts, reversed(verts))}
        try:
            maps["reversal"] = VertexSelfMap(X, reversal)
        except ValueError:
            pass
        cycle = {v: verts[(i + 1) % len(verts)] for i, v in enumerate(verts)}
        try:
            maps["cycle"] = VertexSelfMap(X, cycle)
        except ValueError:
            pass
        for mname, phi in maps.items():
            cases.append((f"{name}/{mname}", SelfMapSystem.of(phi)))
    return cases
