"""Deterministic complexes, maps and fixtures with known Lefschetz numbers."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Mapping

from .chains import VertexSelfMap
from .complex import CellSet, Complex, barycentric_subdivide, build_complex, closure
from .engine import (
    ApproximatedMap,
    SelfMapSystem,
    index_via_lambda,
    lambda_comb,
    lefschetz,
    restricted_lefschetz,
)
from .errors import SimplicialityError
from .torus import TorusMapMatrix, connected_sum_lambda, torus_lefschetz, triad_bound_via_lambda, triad_lower_bound
from .unbounded import CompactifiedSystem, index_at_infinity, lambda_comb_unbounded, one_point_compactify


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


# --- complexes -----------------------------------------------------------------


def interval(n: int = 1) -> Complex:
    """Path 0 - 1 - ... - n."""
    _need(n >= 1, "interval needs at least one edge")
    return build_complex([(i, i + 1) for i in range(n)])


def circle(n: int = 3) -> Complex:
    _need(n >= 3, "a triangulated circle needs at least 3 vertices")
    return build_complex([(i, (i + 1) % n) for i in range(n)])


def wedge_circles(k: int, n: int = 3) -> Complex:
    """``k`` n-gons sharing vertex 0; loop j uses vertices j*(n-1)+1 .. (j+1)*(n-1)."""
    _need(k >= 1 and n >= 3, "wedge needs k >= 1 loops of at least 3 vertices")
    edges = []
    for j in range(k):
        loop = [0] + [j * (n - 1) + i for i in range(1, n)]
        edges += [(loop[i], loop[(i + 1) % n]) for i in range(n)]
    return build_complex(edges)


def sphere(d: int) -> Complex:
    """Boundary of the (d+1)-simplex."""
    _need(d >= 0, "sphere dimension must be non-negative")
    return build_complex(combinations(range(d + 2), d + 1))


def disk(n: int = 6) -> Complex:
    """Cone with apex ``n`` over the n-gon on 0..n-1."""
    _need(n >= 3, "disk needs at least 3 boundary vertices")
    return build_complex([(i, (i + 1) % n, n) for i in range(n)])


def _grid(m: int, n: int, label, rows: int, cols: int) -> Complex:
    tris = []
    for i in range(rows):
        for j in range(cols):
            a, b, c, d = label(i, j), label(i + 1, j), label(i + 1, j + 1), label(i, j + 1)
            tris += [(a, b, c), (a, d, c)]
    return build_complex(tris)


def torus_grid(m: int = 3, n: int = 3) -> Complex:
    """m x n grid with both sides periodic; vertex (i, j) has label i*n + j."""
    _need(m >= 3 and n >= 3, "torus grid needs m, n >= 3")
    return _grid(m, n, lambda i, j: (i % m) * n + j % n, m, n)


def klein_bottle_grid(m: int = 3, n: int = 3) -> Complex:
    """Grid periodic in i, with (i, n) glued to (-i, 0)."""
    _need(m >= 3 and n >= 3, "Klein bottle grid needs m, n >= 3")

    def label(i, j):
        if j == n:
            i, j = -i, 0
        return (i % m) * n + j

    return _grid(m, n, label, m, n)


def projective_plane() -> Complex:
    """The 6-vertex real projective plane."""
    return build_complex([
        (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1),
        (1, 2, 4), (2, 3, 5), (3, 4, 1), (4, 5, 2), (5, 1, 3),
    ])


def cylinder(m: int = 3, n: int = 1) -> Complex:
    """m-gon times a path of n bands; vertex (i, j) has label j*m + i."""
    _need(m >= 3 and n >= 1, "cylinder needs m >= 3 and n >= 1")
    return _grid(m, n, lambda i, j: j * m + i % m, m, n)


def mobius(m: int = 3, n: int = 1) -> Complex:
    """Strip of length m and width n with (m, j) glued to (0, n - j)."""
    _need(m >= 3 and n >= 1, "Moebius strip needs m >= 3 and n >= 1")

    def label(i, j):
        if i == m:
            i, j = 0, n - j
        return j * m + i

    return _grid(m, n, label, m, n)


def square_grid(k: int) -> Complex:
    """Triangulated square [0,k]^2; vertex (i, j) has label i*(k+1) + j."""
    _need(k >= 1, "square grid needs k >= 1")
    return _grid(k, k, lambda i, j: i * (k + 1) + j, k, k)


def square_boundary(X: Complex, k: int) -> CellSet:
    side = {i * (k + 1) + j for i in range(k + 1) for j in range(k + 1) if i in (0, k) or j in (0, k)}
    return X.cells(s for s in X if len(s) <= 2 and set(s) <= side and _on_one_side(s, k))


def _on_one_side(s, k) -> bool:
    pts = [divmod(v, k + 1) for v in s]
    return any(all(p[0] == c for p in pts) for c in (0, k)) or any(all(p[1] == c for p in pts) for c in (0, k))


def vmap(X: Complex, rule: Callable) -> VertexSelfMap:
    return VertexSelfMap(X, {v: rule(v) for v in X.vertices})


# --- fixtures ------------------------------------------------------------------


@dataclass(frozen=True)
class Expected:
    """An expected integer with its provenance.

    ``source`` is ``reported`` (a value stated in the literature),
    ``trivial`` or ``derived`` (computed independently here); ``anchor``
    names the example or statement it comes from.
    """

    quantity: str
    value: int
    source: str
    anchor: str
    compute: Callable[[], int] = field(repr=False, compare=False)


@dataclass(frozen=True, eq=False)
class Fixture:
    name: str
    system: SelfMapSystem | None
    subsets: Mapping[str, CellSet] = field(default_factory=dict)
    expected: tuple = ()
    compactified: CompactifiedSystem | None = None


def _fx(name, system, subsets=None, expected=(), compactified=None) -> Fixture:
    return Fixture(name, system, dict(subsets or {}), tuple(Expected(*e) for e in expected), compactified)


def interval_identity() -> Fixture:
    X = interval(1)
    S = SelfMapSystem.identity(X)
    open_edge = X.cells([(0, 1)])
    ends = X.cells([(0,), (1,)])
    return _fx(
        "interval-identity", S, {"open": open_edge, "ends": ends},
        [
            ("lambda(X)", 1, "trivial", "closed interval", lambda: lefschetz(S)),
            ("lambda_comb(open)", -1, "reported", "wedge-of-circles computation", lambda: lambda_comb(S, open_edge)),
            ("lambda_comb(ends)", 2, "trivial", "two fixed vertices", lambda: lambda_comb(S, ends)),
        ],
    )


def circle_rotation(n: int = 3) -> Fixture:
    X = circle(n)
    S = SelfMapSystem.of(vmap(X, lambda v: (v + 1) % n))
    return _fx(
        "circle-rotation", S, {"X": X.all_cells()},
        [("lambda(X)", 0, "reported", "degree one circle map", lambda: lefschetz(S))],
    )


def circle_reflection(n: int = 3) -> Fixture:
    X = circle(n)
    S = SelfMapSystem.of(vmap(X, lambda v: (-v) % n))
    minus = X.all_cells() - X.cells([(0,)])
    star = X.star((0,))
    return _fx(
        "circle-reflection", S, {"X": X.all_cells(), "A": minus, "star0": star},
        [
            ("lambda(X)", 2, "reported", "degree minus one circle map", lambda: lefschetz(S)),
            ("lambda_comb(A)", 1, "derived", "circle minus a fixed vertex", lambda: lambda_comb(S, minus)),
            ("index(star0)", 1, "derived", "open star of the fixed vertex", lambda: index_via_lambda(S, star)),
        ],
    )


def wedge_loop_swap(n: int = 3) -> Fixture:
    X = wedge_circles(2, n)
    half = n - 1
    S = SelfMapSystem.of(vmap(X, lambda v: 0 if v == 0 else (v + half if v <= half else v - half)))
    return _fx(
        "wedge-loop-swap", S, {"X": X.all_cells()},
        [("lambda(X)", 1, "reported", "wedge of two circles, off-diagonal degrees", lambda: lefschetz(S))],
    )


def annulus(n: int = 8, m: int = 2) -> Complex:
    """n angular sectors and m radial bands; vertex (a, r) has label r*n + a.

    Bands below the middle ring use the diagonal (a, r)-(a+1, r+1), bands
    above it the other one, so the radial reversal r -> m - r is simplicial.
    """
    _need(n >= 3 and m >= 2 and m % 2 == 0, "annulus needs n >= 3 sectors and an even number m >= 2 of bands")

    def lab(a, r):
        return r * n + a % n

    tris = []
    for r in range(m):
        for a in range(n):
            p, q, s, t = lab(a, r), lab(a + 1, r), lab(a + 1, r + 1), lab(a, r + 1)
            if r < m // 2:
                tris += [(p, q, s), (p, t, s)]
            else:
                tris += [(p, q, t), (q, t, s)]
    return build_complex(tris)


def radial_slit(X: Complex, n: int, m: int, angle: int) -> CellSet:
    """Open radial segment at sector boundary ``angle``, both ends on the boundary circles removed."""
    verts = [r * n + angle for r in range(m + 1)]
    cells = [(v,) for v in verts[1:-1]] + [(verts[r], verts[r + 1]) for r in range(m)]
    return X.cells(cells)


def annulus_with_slits(slits: int = 4, m: int = 2, n: int | None = None) -> Fixture:
    """Annulus with the radial reversal and the sets X_i = annulus minus i slits."""
    n = max(3, 2 * slits) if n is None else n
    _need(1 <= slits <= n, "number of slits must be between 1 and the number of sectors")
    X = annulus(n, m)
    S = SelfMapSystem.of(vmap(X, lambda v: (m - v // n) * n + v % n))
    step = n // slits
    cuts = [radial_slit(X, n, m, i * step) for i in range(slits)]
    subsets = {"X": X.all_cells()}
    removed = X.empty()
    expected = [("lambda(X)", 0, "reported", "slit annulus, whole space", lambda: lefschetz(S))]
    for i, cut in enumerate(cuts, start=1):
        removed = removed | cut
        Xi = X.all_cells() - removed
        subsets[f"X{i}"] = Xi
        expected.append((f"lambda_comb(X{i})", -i, "reported", "slit annulus", (lambda A=Xi: lambda_comb(S, A))))
    return _fx("annulus-slits", S, subsets, expected)


def cone_glued_cylinder(n: int = 6) -> Fixture:
    """Cone over Y = two n-gons T, B joined by a path, with a cylinder glued along T and B.

    Labels: apex 0, path midpoint 1, t_i = 2+i, b_i = 2+n+i, middle circle
    m_i = 2+2n+i.  The map is a half-turn swapping T and B.
    """
    _need(n >= 4 and n % 2 == 0, "cone fixture needs an even n >= 4")
    h = n // 2
    c, o = 0, 1

    def t(i):
        return 2 + i % n

    def b(i):
        return 2 + n + i % n

    def mid(i):
        return 2 + 2 * n + i % n

    Y = [(t(i), t(i + 1)) for i in range(n)] + [(b(i), b(i + 1)) for i in range(n)] + [(t(0), o), (o, b(h))]
    cone = [s + (c,) for s in Y]
    band = []
    for i in range(n):
        band += [(t(i), t(i + 1), mid(i)), (t(i + 1), mid(i), mid(i + 1))]
        band += [(b(-i), b(-i - 1), mid(i + 1)), (b(-i), mid(i), mid(i + 1))]
    X = build_complex(cone + band)
    rule = {c: c, o: o}
    for i in range(n):
        rule[t(i)] = b(i + h)
        rule[b(i)] = t(i + h)
        rule[mid(i)] = mid(-i - h)
    S = SelfMapSystem.of(VertexSelfMap(X, rule))
    C = closure(X.cells(cone))
    D = closure(X.cells(band))
    TB = closure(X.cells(Y[: 2 * n]))
    mid_circle = closure(X.cells((mid(i), mid(i + 1)) for i in range(n)))
    return _fx(
        "cone-cylinder", S, {"C": C, "D": D, "TB": TB, "S": mid_circle, "open-cylinder": C.complement()},
        [
            ("lambda(X)", 3, "reported", "explicit cone with glued cylinder", lambda: lefschetz(S)),
            ("lambda(D)", 2, "reported", "explicit cone with glued cylinder", lambda: restricted_lefschetz(S, D)),
            ("lambda(TB)", 0, "reported", "top and bottom swapped", lambda: restricted_lefschetz(S, TB)),
            ("lambda(S)", 2, "reported", "middle circle reflection", lambda: restricted_lefschetz(S, mid_circle)),
            ("1+lambda_comb(X-C)", 3, "derived", "additivity over the cone", lambda: 1 + lambda_comb(S, C.complement())),
        ],
    )


def _disjoint_tori(m: int, n: int) -> tuple[Complex, int]:
    T = torus_grid(m, n)
    size = m * n
    return build_complex(list(T.maximal_simplices()) + [tuple(v + size for v in s) for s in T.maximal_simplices()]), size


def punctured_tori_pair(m: int = 3, n: int = 3) -> Fixture:
    """Two tori with the antipodal-type involution (i, j) -> (-i, -j), punctured at (0, 0)."""
    X, size = _disjoint_tori(m, n)

    def rule(v):
        k, v0 = divmod(v, size)
        i, j = divmod(v0, n)
        return k * size + ((-i) % m) * n + (-j) % n

    S = SelfMapSystem.of(vmap(X, rule))
    corona = X.cells([(0,), (size,)])
    C = CompactifiedSystem(S, corona)
    T1 = X.cells(s for s in X if max(s) < size)
    U1 = T1 - X.cells([(0,)])
    minus_I = TorusMapMatrix.scalar(2, -1)
    return _fx(
        "punctured-tori", S, {"T1": T1, "U1": U1, "corona": corona}, [
            ("torus_lefschetz(-I2)", 4, "reported", "two punctured tori", lambda: torus_lefschetz(minus_I)),
            ("lambda(T1)", 4, "reported", "two punctured tori", lambda: restricted_lefschetz(S, T1)),
            ("lambda_comb(U1)", 3, "reported", "two punctured tori", lambda: lambda_comb(S, U1)),
            ("lambda_comb(U)", 6, "reported", "two punctured tori", lambda: lambda_comb_unbounded(C)),
            ("2*(det-1)", 6, "derived", "torus determinant route", lambda: 2 * (torus_lefschetz(minus_I) - 1)),
        ],
        compactified=C,
    )


def square_identity_boundary(k: int = 2) -> Fixture:
    X = square_grid(k)
    S = SelfMapSystem.identity(X)
    boundary = square_boundary(X, k)
    C = CompactifiedSystem(S, boundary)
    return _fx(
        "square-identity", S, {"boundary": boundary, "U": C.U}, [
            ("lambda_comb(U)", 1, "reported", "unbounded index on the sphere", lambda: lambda_comb_unbounded(C)),
            ("lambda(square)", 1, "trivial", "contractible square", lambda: lefschetz(S)),
            ("lambda(boundary)", 0, "trivial", "boundary circle", lambda: restricted_lefschetz(S, boundary)),
        ],
        compactified=C,
    )


def plane_translation_sphere(k: int = 2) -> Fixture:
    """Square with its boundary coned to one point; identity stands in for a translation."""
    square = square_grid(k)
    X, apex = one_point_compactify(square, square_boundary(square, k))
    S = SelfMapSystem.identity(X)
    C = CompactifiedSystem(S, X.cells([(apex,)]), surrogate_of="translation of the plane")
    return _fx(
        "plane-translation", S, {"U": C.U}, [
            ("lambda_comb(U)", 1, "reported", "unbounded index on the sphere", lambda: lambda_comb_unbounded(C)),
            ("ind(inf)", 2, "reported", "unbounded index on the sphere", lambda: index_at_infinity(C)),
        ],
        compactified=C,
    )


def line_translation(n: int = 4) -> Fixture:
    """Path 0..n closed up by an apex; identity stands in for a fixed-point-free shift."""
    X, apex = one_point_compactify(interval(n), interval(n).cells([(0,), (n,)]))
    S = SelfMapSystem.identity(X)
    C = CompactifiedSystem(S, X.cells([(apex,)]), surrogate_of="translation of the line")
    return _fx(
        "line-translation", S, {"U": C.U}, [
            ("lambda_comb(U)", -1, "derived", "line closed by one point", lambda: lambda_comb_unbounded(C)),
        ],
        compactified=C,
    )


FIGURE_EIGHT_KINDS = ("both-reflected", "loop-swap", "identity")


def figure_eight_at_infinity(kind: str = "both-reflected", n: int = 6) -> Fixture:
    """Two n-gons wedged at 0, with the wedge point as the point at infinity."""
    X = wedge_circles(2, n)
    half = n - 1

    def reflect(v):
        if v == 0:
            return 0
        j, i = divmod(v - 1, half)
        return j * half + (n - (i + 1))

    rules = {
        "both-reflected": reflect,
        "loop-swap": lambda v: 0 if v == 0 else (v + half if v <= half else v - half),
        "identity": lambda v: v,
    }
    _need(kind in rules, f"unknown figure-eight map {kind!r}")
    S = SelfMapSystem.of(vmap(X, rules[kind]))
    C = CompactifiedSystem(S, X.cells([(0,)]))
    value = {"both-reflected": 2, "loop-swap": 0, "identity": -2}[kind]
    return _fx(
        f"figure-eight-{kind}", S, {"U": C.U}, [
            ("lambda_comb(U)", value, "derived" if kind != "identity" else "trivial", "figure eight at infinity",
             lambda: lambda_comb_unbounded(C)),
        ],
        compactified=C,
    )


def square_point_reflection(k: int = 2) -> Fixture:
    """Half-turn of the square; its open interior has index 1."""
    X = square_grid(k)
    S = SelfMapSystem.of(vmap(X, lambda v: (k - v // (k + 1)) * (k + 1) + k - v % (k + 1)))
    U = square_boundary(X, k).complement()
    return _fx(
        "square-half-turn", S, {"U": U},
        [("index(U)", 1, "reported", "open square", lambda: index_via_lambda(S, U))],
    )


def constant_map_approximations() -> tuple[SelfMapSystem, SelfMapSystem, CellSet]:
    """Two vertex maps on [0,1] approximating the constant map to the midpoint.

    Both record the modelled map, the constant map to the barycenter of the
    subdivided interval, so enforcement sees that it is incompatible with
    the open interval.
    """
    X = interval(1)
    sd = barycentric_subdivide(X)
    mid = (0, 1)
    true_map = ApproximatedMap(sd, VertexSelfMap.constant(sd.subdivided, mid))
    to_zero = SelfMapSystem.of(VertexSelfMap.constant(X, 0), true_map)
    identity = SelfMapSystem.of(VertexSelfMap.identity(X), true_map)
    return to_zero, identity, X.cells([(0, 1)])


def constant_map_fixture() -> Fixture:
    to_zero, identity, A = constant_map_approximations()
    return _fx(
        "constant-approximations", to_zero, {"A": A}, [
            ("lambda_comb(A), map to 0", 0, "reported", "necessity of hypotheses",
             lambda: lambda_comb(to_zero, A, enforce=False)),
            ("lambda_comb(A), identity", -1, "reported", "necessity of hypotheses",
             lambda: lambda_comb(identity, A, enforce=False)),
        ],
    )


def nielsen_fixture() -> Fixture:
    M = TorusMapMatrix.scalar(3, -1)
    # -I restricts to the antipodal map of the separating S^2: degree -1, Lefschetz number 1 - 1
    lam_sphere = 0
    total = connected_sum_lambda(M, M, lam_sphere)
    return _fx(
        "nielsen-triad", None, {}, [
            ("triad_lower_bound(-I3,-I3)", 13, "derived", "Nielsen triad bound", lambda: triad_lower_bound(M, M)),
            ("via lambda, plus case", 13, "derived", "Nielsen triad via lambda",
             lambda: triad_bound_via_lambda(total, lam_sphere, "plus")),
            ("torus_lefschetz(-I3)", 8, "derived", "det(2 I3)", lambda: torus_lefschetz(M)),
        ],
    )


def reference_fixtures() -> list[Fixture]:
    """Every fixture with expected values, in suite order."""
    return [
        interval_identity(),
        circle_rotation(),
        circle_reflection(),
        wedge_loop_swap(),
        annulus_with_slits(),
        cone_glued_cylinder(),
        punctured_tori_pair(),
        square_identity_boundary(),
        plane_translation_sphere(),
        line_translation(),
        *(figure_eight_at_infinity(k) for k in FIGURE_EIGHT_KINDS),
        square_point_reflection(),
        constant_map_fixture(),
        nielsen_fixture(),
    ]


@dataclass(frozen=True)
class SuiteRow:
    fixture: str
    quantity: str
    expected: int
    computed: int | None
    source: str
    error: str = ""

    @property
    def ok(self) -> bool:
        return self.computed == self.expected


def run_suite(fixtures: list[Fixture] | None = None) -> list[SuiteRow]:
    rows = []
    for fx in reference_fixtures() if fixtures is None else fixtures:
        for e in fx.expected:
            try:
                rows.append(SuiteRow(fx.name, e.quantity, e.value, int(e.compute()), e.source))
            except Exception as exc:  # a failing computation is a FAIL row, not a crash
                rows.append(SuiteRow(fx.name, e.quantity, e.value, None, e.source, f"{type(exc).__name__}: {exc}"))
    return rows


# --- paired triangulations -----------------------------------------------------

PAIRED_NAMES = ("circle-reflection", "annulus", "punctured-torus")


def _punctured_torus(m: int) -> Fixture:
    X = torus_grid(m, m)
    S = SelfMapSystem.identity(X)
    A = X.all_cells() - X.cells([(0,)])
    return _fx(f"punctured-torus-{m}", S, {"A": A},
               [("lambda_comb(A)", -1, "trivial", "punctured torus", lambda: lambda_comb(S, A))])


def paired_triangulations(name: str) -> tuple[Fixture, Fixture]:
    """Same space, map and subset in two triangulations; subset ``A`` in each."""
    if name == "circle-reflection":
        pair = []
        for n in (3, 6):
            fx = circle_reflection(n)
            A = fx.subsets["A"]
            pair.append(_fx(f"circle-reflection-{n}", fx.system, {"A": A},
                            [("lambda_comb(A)", 1, "derived", "circle minus a fixed vertex",
                              (lambda S=fx.system, A=A: lambda_comb(S, A)))]))
        return pair[0], pair[1]
    if name == "annulus":
        pair = []
        for n, m in ((8, 2), (12, 4)):
            fx = annulus_with_slits(1, m, n)
            A = fx.subsets["X1"]
            pair.append(_fx(f"annulus-{n}x{m}", fx.system, {"A": A},
                            [("lambda_comb(A)", -1, "reported", "slit annulus",
                              (lambda S=fx.system, A=A: lambda_comb(S, A)))]))
        return pair[0], pair[1]
    if name == "punctured-torus":
        return _punctured_torus(3), _punctured_torus(4)
    raise ValueError(f"unknown paired fixture {name!r}; choose from {', '.join(PAIRED_NAMES)}")


def corpus_complexes() -> dict[str, Complex]:
    return {
        "point": build_complex([(0,)]),
        "interval": interval(1),
        "path4": interval(4),
        "circle3": circle(3),
        "circle6": circle(6),
        "wedge2x3": wedge_circles(2, 3),
        "sphere1": sphere(1),
        "sphere2": sphere(2),
        "disk6": disk(6),
        "torus3x3": torus_grid(3, 3),
        "klein3x3": klein_bottle_grid(3, 3),
        "rp2": projective_plane(),
        "cylinder4x2": cylinder(4, 2),
        "mobius5x1": mobius(5, 1),
        "annulus8x2": annulus(8, 2),
        "square2": square_grid(2),
    }


# --- random instances ----------------------------------------------------------


def random_complex(rng: random.Random, max_vertices: int = 7, max_dim: int = 3) -> Complex:
    """Face closure of a few random simplices on at most ``max_vertices`` vertices."""
    n = rng.randint(1, max_vertices)
    gens = [(v,) for v in range(n)]
    for _ in range(rng.randint(1, 2 * n)):
        size = rng.randint(2, min(max_dim + 1, n)) if n >= 2 else 1
        gens.append(tuple(rng.sample(range(n), size)))
    return build_complex(gens)


def random_self_map(rng: random.Random, X: Complex, tries: int = 40) -> VertexSelfMap:
    """A random simplicial vertex map; falls back to maps into one maximal simplex."""
    verts = list(X.vertices)
    for _ in range(tries):
        try:
            return VertexSelfMap(X, {v: rng.choice(verts) for v in verts})
        except SimplicialityError:
            continue
    target = rng.choice(X.maximal_simplices())
    return VertexSelfMap(X, {v: rng.choice(target) for v in verts})


def random_cellset(rng: random.Random, X: Complex, p: float = 0.5) -> CellSet:
    return X.cells(s for s in X if rng.random() < p)
