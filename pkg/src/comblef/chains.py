"""Simplicial chains over the integers and Lefschetz traces.

Chain groups use the canonical simplex order of the owning complex.  Boundary
matrices carry the sign ``(-1)**i`` for deleting the i-th vertex of a sorted
simplex; a vertex map sends a simplex to the signed image simplex, or to zero
when two of its vertices collapse.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from types import MappingProxyType
from typing import Mapping

import numpy as np

from . import exact
from .complex import CellSet, Complex, Simplex, faces
from .errors import DomainMismatchError, PreconditionError, SimplicialityError


def permutation_sign(seq) -> int:
    """Sign of the permutation that sorts ``seq`` (entries distinct)."""
    sign = 1
    items = list(seq)
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if items[i] > items[j]:
                sign = -sign
    return sign


@dataclass(frozen=True, eq=False)
class VertexSelfMap:
    complex: Complex = field(repr=False)
    assignment: Mapping

    def __post_init__(self):
        table = dict(self.assignment)
        verts = set(self.complex.vertices)
        missing = verts - table.keys()
        if missing:
            raise SimplicialityError(tuple(sorted(missing)), None)
        for v, w in table.items():
            if v not in verts or w not in verts:
                raise SimplicialityError((v,), (w,))
        object.__setattr__(self, "assignment", MappingProxyType(table))
        for s in self.complex.maximal_simplices():
            image = self.image_simplex(s)
            if image not in self.complex:
                raise SimplicialityError(s, image)

    @classmethod
    def identity(cls, X: Complex) -> "VertexSelfMap":
        return cls(X, {v: v for v in X.vertices})

    @classmethod
    def constant(cls, X: Complex, target) -> "VertexSelfMap":
        return cls(X, {v: target for v in X.vertices})

    def __call__(self, v):
        return self.assignment[v]

    def image_simplex(self, simplex: Simplex) -> Simplex:
        """Simplex spanned by the images of the vertices."""
        return tuple(sorted({self.assignment[v] for v in simplex}))

    def signed_image(self, simplex: Simplex):
        """``(image, sign)`` of the oriented simplex, or None if it degenerates."""
        images = [self.assignment[v] for v in simplex]
        if len(set(images)) < len(images):
            return None
        return tuple(sorted(images)), permutation_sign(images)

    def is_injective_on(self, simplex: Simplex) -> bool:
        return len({self.assignment[v] for v in simplex}) == len(simplex)

    def fixes(self, simplex: Simplex) -> bool:
        """The vertex set is mapped onto itself (a fixed simplex)."""
        return self.image_simplex(simplex) == tuple(simplex)

    def compose(self, inner: "VertexSelfMap") -> "VertexSelfMap":
        """``self`` after ``inner``."""
        if inner.complex != self.complex:
            raise DomainMismatchError("maps live on different complexes")
        return VertexSelfMap(self.complex, {v: self.assignment[w] for v, w in inner.assignment.items()})

    def is_identity(self) -> bool:
        return all(v == w for v, w in self.assignment.items())


class ChainSystem:
    """Boundary matrices, optionally with a chain map, on a set of cells.

    ``boundary[p]`` is the matrix of d_p from p-chains to (p-1)-chains
    (``boundary[0]`` has no rows).  ``chain_map[p]`` is the square matrix
    of the induced map on p-chains.  A system may live on any locally
    closed set of cells (a subcomplex, or a relative pair), in which case
    the matrices are the corresponding submatrices.
    """

    def __init__(self, complex: Complex, cells_by_dim, boundary, chain_map=None, vertex_map=None):
        self.complex = complex
        self.cells_by_dim = tuple(tuple(layer) for layer in cells_by_dim)
        self.boundary = tuple(boundary)
        self.chain_map = None if chain_map is None else tuple(chain_map)
        self.vertex_map = vertex_map

    @property
    def top_dim(self) -> int:
        return len(self.cells_by_dim) - 1

    def rank_boundary(self, p: int) -> int:
        if p <= 0 or p > self.top_dim:
            return 0
        return exact.rank(self.boundary[p])

    def trace(self, p: int) -> int:
        if self.chain_map is None:
            raise ValueError("no chain map attached")
        return int(np.trace(self.chain_map[p])) if self.chain_map[p].size else 0

    def check(self) -> None:
        """Assert d∘d = 0 and, with a chain map, dM = Md."""
        for p in range(1, self.top_dim):
            if np.any(self.boundary[p] @ self.boundary[p + 1]):
                raise PreconditionError(f"boundary squares to a nonzero map in degree {p + 1}")
        if self.chain_map is None:
            return
        for p in range(1, self.top_dim + 1):
            lhs = self.boundary[p] @ self.chain_map[p]
            rhs = self.chain_map[p - 1] @ self.boundary[p]
            if not np.array_equal(lhs, rhs):
                raise PreconditionError(f"chain-map condition fails in degree {p}")

    def restrict(self, cells: CellSet) -> "ChainSystem":
        """Submatrices on ``cells``; the result is checked to be a chain system."""
        if cells.complex != self.complex:
            raise DomainMismatchError("cell set and chain system live on different complexes")
        keep = []
        for layer in self.cells_by_dim:
            keep.append([i for i, s in enumerate(layer) if s in cells.cells])
        while len(keep) > 1 and not keep[-1]:
            keep.pop()
        layers = [[self.cells_by_dim[p][i] for i in idx] for p, idx in enumerate(keep)]
        bnd = [np.zeros((0, len(keep[0])), dtype=np.int64)]
        for p in range(1, len(keep)):
            bnd.append(self.boundary[p][np.ix_(keep[p - 1], keep[p])])
        cmap = None
        if self.chain_map is not None:
            cmap = [self.chain_map[p][np.ix_(keep[p], keep[p])] for p in range(len(keep))]
        sub = ChainSystem(self.complex, layers, bnd, cmap, self.vertex_map)
        sub.check()
        return sub

    def relative(self, sub: CellSet) -> "ChainSystem":
        """Relative chains modulo the subcomplex ``sub``."""
        if not sub.is_subcomplex():
            raise PreconditionError("relative chains need a subcomplex")
        return self.restrict(sub.complement())

    def dump(self) -> str:
        """Deterministic row-major text dump of every matrix."""
        out = []
        for p, layer in enumerate(self.cells_by_dim):
            out.append(f"# C_{p}: {len(layer)} cells")
            for s in layer:
                out.append("#   " + " ".join(str(v) for v in s))
        for p in range(1, len(self.boundary)):
            out.append(_dump_matrix(f"d_{p}", self.boundary[p]))
        if self.chain_map is not None:
            for p, m in enumerate(self.chain_map):
                out.append(_dump_matrix(f"M_{p}", m))
        return "\n".join(out)


def _dump_matrix(name: str, m: np.ndarray) -> str:
    rows, cols = m.shape
    lines = [f"{name} = {rows}x{cols}"]
    for row in m.tolist():
        lines.append(" ".join(f"{x:2d}" for x in row))
    return "\n".join(lines)


def boundary_system(X: Complex) -> ChainSystem:
    layers = [X.simplices(p) for p in range(X.dim + 1)]
    bnd = [np.zeros((0, len(layers[0]) if layers else 0), dtype=np.int64)]
    for p in range(1, X.dim + 1):
        m = np.zeros((len(layers[p - 1]), len(layers[p])), dtype=np.int64)
        for j, s in enumerate(layers[p]):
            for i, f in enumerate(faces(s)):
                m[X.index(f), j] = -1 if i % 2 else 1
        bnd.append(m)
    system = ChainSystem(X, layers, bnd)
    system.check()
    return system


def induced_chain_map(phi: VertexSelfMap) -> ChainSystem:
    X = phi.complex
    base = boundary_system(X)
    maps = []
    for p in range(X.dim + 1):
        layer = X.simplices(p)
        m = np.zeros((len(layer), len(layer)), dtype=np.int64)
        for j, s in enumerate(layer):
            img = phi.signed_image(s)
            if img is not None:
                m[X.index(img[0]), j] = img[1]
        maps.append(m)
    system = ChainSystem(X, base.cells_by_dim, base.boundary, maps, phi)
    system.check()
    return system


def hopf_lefschetz(S: ChainSystem) -> int:
    """Alternating sum of the traces of the chain-level matrices."""
    return sum((-1) ** p * S.trace(p) for p in range(S.top_dim + 1))


def betti(S: ChainSystem) -> list[int]:
    ranks = [S.rank_boundary(p) for p in range(S.top_dim + 2)]
    return [len(S.cells_by_dim[p]) - ranks[p] - ranks[p + 1] for p in range(S.top_dim + 1)]


def homology_traces(S: ChainSystem) -> list[int]:
    """Trace of the induced map on each rational homology group.

    For each degree a basis of the cycles is chosen as (basis of boundaries)
    followed by complementary cycles; the images of the complementary cycles
    are expanded in that basis and their own coefficients are summed.
    """
    if S.chain_map is None:
        raise ValueError("no chain map attached")
    traces = []
    for p in range(S.top_dim + 1):
        n = len(S.cells_by_dim[p])
        if n == 0:
            traces.append(0)
            continue
        if p == 0:
            cycles = [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
        else:
            cycles = exact.nullspace(S.boundary[p], n)
        if p + 1 <= S.top_dim and S.boundary[p + 1].shape[1]:
            bounds = exact.column_space(S.boundary[p + 1])
        else:
            bounds = []
        stacked = bounds + cycles
        _, pivots = exact.rref([[v[i] for v in stacked] for i in range(n)])
        homology = [stacked[c] for c in pivots if c >= len(bounds)]
        basis = list(bounds) + homology
        if not homology:
            traces.append(0)
            continue
        m = S.chain_map[p].tolist()
        images = [exact.matvec(m, z) for z in homology]
        coords = exact.coordinates(basis, images)
        offset = len(bounds)
        total = sum(c[offset + k] for k, c in enumerate(coords))
        if total.denominator != 1:
            raise ArithmeticError("non-integral homology trace")
        traces.append(int(total))
    return traces


def homology_lefschetz(S: ChainSystem) -> int:
    """Alternating sum of traces on rational homology (independent of the Hopf route)."""
    return sum((-1) ** p * t for p, t in enumerate(homology_traces(S)))
