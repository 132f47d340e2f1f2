"""Finite abstract simplicial complexes and unions of open simplices.

A simplex is a strictly increasing tuple of vertex labels.  Labels are opaque
tokens (ints or strings) that only need to be mutually comparable; every
matrix built on top of a :class:`Complex` indexes rows and columns by the
lexicographic order of the simplices of each dimension.

A :class:`CellSet` is a set of simplices read as the union of their relative
interiors, so ``{(0,), (0, 1)}`` in the 1-simplex is the half-open interval.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, permutations
from typing import Hashable, Iterable, Iterator, Mapping

from .errors import DomainMismatchError, MalformedSimplexError

Simplex = tuple


def _canonical(simplex) -> Simplex:
    verts = tuple(simplex)
    if not verts:
        raise MalformedSimplexError("empty simplex")
    try:
        ordered = tuple(sorted(verts))
    except TypeError as exc:
        raise MalformedSimplexError(f"incomparable vertex labels in {verts!r}") from exc
    for a, b in zip(ordered, ordered[1:]):
        if a == b:
            raise MalformedSimplexError(f"repeated vertex {a!r} in simplex {verts!r}")
    return ordered


def faces(simplex: Simplex) -> list[Simplex]:
    """Codimension-one faces, the i-th one deleting the i-th vertex."""
    return [simplex[:i] + simplex[i + 1:] for i in range(len(simplex))] if len(simplex) > 1 else []


def all_faces(simplex: Simplex) -> Iterator[Simplex]:
    for k in range(1, len(simplex) + 1):
        yield from combinations(simplex, k)


@dataclass(frozen=True, eq=False)
class Complex:
    vertices: tuple
    simplices_by_dim: tuple

    @property
    def dim(self) -> int:
        return len(self.simplices_by_dim) - 1

    def simplices(self, p: int) -> tuple:
        if 0 <= p < len(self.simplices_by_dim):
            return self.simplices_by_dim[p]
        return ()

    def __iter__(self) -> Iterator[Simplex]:
        for layer in self.simplices_by_dim:
            yield from layer

    def __len__(self) -> int:
        return sum(len(layer) for layer in self.simplices_by_dim)

    def __contains__(self, simplex) -> bool:
        return tuple(simplex) in self._position

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Complex):
            return NotImplemented
        return self.simplices_by_dim == other.simplices_by_dim

    def __hash__(self):
        return hash(self.simplices_by_dim)

    def __repr__(self):
        counts = ", ".join(str(len(layer)) for layer in self.simplices_by_dim)
        return f"Complex(dim={self.dim}, f-vector=({counts}))"

    @cached_property
    def _position(self) -> dict:
        return {s: i for layer in self.simplices_by_dim for i, s in enumerate(layer)}

    def index(self, simplex: Simplex) -> int:
        """Row/column index of ``simplex`` among simplices of its dimension."""
        return self._position[tuple(simplex)]

    def f_vector(self) -> list[int]:
        return [len(layer) for layer in self.simplices_by_dim]

    def euler_characteristic(self) -> int:
        return sum((-1) ** p * n for p, n in enumerate(self.f_vector()))

    def cells(self, simplices: Iterable = ()) -> "CellSet":
        return CellSet(self, frozenset(_canonical(s) for s in simplices))

    def all_cells(self) -> "CellSet":
        return CellSet(self, frozenset(self))

    def empty(self) -> "CellSet":
        return CellSet(self, frozenset())

    def star(self, simplex: Simplex) -> "CellSet":
        """Open star: every simplex having ``simplex`` as a face."""
        base = set(simplex)
        return self.cells(s for s in self if base <= set(s))

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        parent = {v: v for v in self.vertices}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for a, b in self.simplices(1):
            parent[find(a)] = find(b)
        return len({find(v) for v in self.vertices}) == 1

    def is_pure(self) -> bool:
        """Every simplex is a face of some top-dimensional simplex."""
        top = self.simplices(self.dim)
        covered = set()
        for s in top:
            covered.update(all_faces(s))
        return len(covered) == len(self)

    def relabel(self, mapping: Mapping) -> "Complex":
        return build_complex([tuple(mapping[v] for v in s) for s in self.maximal_simplices()])

    def maximal_simplices(self) -> list[Simplex]:
        covered = set()
        result = []
        for p in range(self.dim, -1, -1):
            for s in self.simplices(p):
                if s not in covered:
                    result.append(s)
                    covered.update(all_faces(s))
        return sorted(result, key=lambda s: (len(s), s))

    def subcomplex(self, cells: "CellSet") -> "Complex":
        """The cells of a closed CellSet as a complex in their own right."""
        _require_same(self, cells.complex)
        if not cells.is_subcomplex():
            raise MalformedSimplexError("cell set is not closed under faces")
        return build_complex(sorted(cells.cells, key=lambda s: (len(s), s)))


def build_complex(maximal_simplices: Iterable[Iterable[Hashable]]) -> Complex:
    """Face-closed complex generated by the given simplices.

    >>> build_complex([(0, 1), (1, 2), (0, 2)]).f_vector()
    [3, 3]
    """
    generators = [_canonical(s) for s in maximal_simplices]
    closed: set = set()
    for s in generators:
        if s in closed:
            continue
        closed.update(all_faces(s))
    if not closed:
        return Complex((), ())
    top = max(len(s) for s in closed)
    layers = [[] for _ in range(top)]
    for s in closed:
        layers[len(s) - 1].append(s)
    try:
        layers = tuple(tuple(sorted(layer)) for layer in layers)
    except TypeError as exc:
        raise MalformedSimplexError("vertex labels are not mutually comparable") from exc
    vertices = tuple(v for (v,) in layers[0])
    return Complex(vertices, layers)


def _require_same(x: Complex, y: Complex) -> None:
    if x is not y and x != y:
        raise DomainMismatchError("cell sets belong to different complexes")


@dataclass(frozen=True, eq=False)
class CellSet:
    complex: Complex = field(compare=False, repr=False)
    cells: frozenset

    def __post_init__(self):
        for s in self.cells:
            if s not in self.complex:
                raise MalformedSimplexError(f"{s!r} is not a simplex of the complex")

    def __eq__(self, other):
        if not isinstance(other, CellSet):
            return NotImplemented
        return self.cells == other.cells and (self.complex is other.complex or self.complex == other.complex)

    def __hash__(self):
        return hash(self.cells)

    def __len__(self):
        return len(self.cells)

    def __iter__(self):
        return iter(self.sorted())

    def __contains__(self, simplex):
        return tuple(simplex) in self.cells

    def sorted(self) -> list[Simplex]:
        return sorted(self.cells, key=lambda s: (len(s), s))

    def _other(self, other: "CellSet") -> frozenset:
        _require_same(self.complex, other.complex)
        return other.cells

    def __or__(self, other):
        return CellSet(self.complex, self.cells | self._other(other))

    def __and__(self, other):
        return CellSet(self.complex, self.cells & self._other(other))

    def __sub__(self, other):
        return CellSet(self.complex, self.cells - self._other(other))

    def union(self, other):
        return self | other

    def intersection(self, other):
        return self & other

    def difference(self, other):
        return self - other

    def complement(self) -> "CellSet":
        return CellSet(self.complex, frozenset(s for s in self.complex if s not in self.cells))

    def closure(self) -> "CellSet":
        return closure(self)

    def is_subcomplex(self) -> bool:
        return all(f in self.cells for s in self.cells for f in faces(s))

    def is_open(self) -> bool:
        return self.complement().is_subcomplex()

    def is_locally_closed(self) -> bool:
        """Closure minus the set is closed, i.e. the set is a relative chain domain."""
        return (closure(self) - self).is_subcomplex()

    @property
    def dim(self) -> int:
        return max((len(s) - 1 for s in self.cells), default=-1)


def closure(A: CellSet) -> CellSet:
    out = set()
    for s in A.cells:
        if s not in out:
            out.update(all_faces(s))
    return CellSet(A.complex, frozenset(out))


def cellset_algebra(A: CellSet, B: CellSet | None, op: str) -> CellSet:
    """Dispatch for ``union``, ``intersection``, ``difference`` and ``complement``."""
    if op == "complement":
        return A.complement()
    if B is None:
        raise ValueError(f"{op} needs two operands")
    if op == "union":
        return A | B
    if op == "intersection":
        return A & B
    if op == "difference":
        return A - B
    raise ValueError(f"unknown cell-set operation {op!r}")


def decompose_triple(A: CellSet) -> tuple[CellSet, CellSet, CellSet]:
    """Split ``closure(A)`` into (interior, frontier, trace part).

    frontier = closure(A) - A, trace = closure(frontier) & A and
    interior = A - closure(frontier); the interior is the interior of A as a
    subspace of its closure.
    """
    frontier = closure(A) - A
    frontier_closure = closure(frontier)
    trace = frontier_closure & A
    interior = A - frontier_closure
    return interior, frontier, trace


def euler_comb(A: CellSet) -> int:
    """Alternating count of open cells."""
    return sum(-1 if len(s) % 2 == 0 else 1 for s in A.cells)


@dataclass(frozen=True, eq=False)
class Subdivision:
    """A subdivision together with the carrier of each new simplex.

    The carrier of a simplex of ``subdivided`` is the unique simplex of
    ``original`` whose open cell contains its open cell.
    """

    original: Complex
    subdivided: Complex
    carrier: Mapping

    def compose(self, finer: "Subdivision") -> "Subdivision":
        """``finer`` must subdivide ``self.subdivided``."""
        if finer.original != self.subdivided:
            raise DomainMismatchError("subdivisions do not chain")
        carrier = {s: self.carrier[c] for s, c in finer.carrier.items()}
        return Subdivision(self.original, finer.subdivided, carrier)


def barycentric_subdivide(X: Complex, rounds: int = 1) -> Subdivision:
    """Barycentric subdivision, iterated ``rounds`` times.

    New vertices are the simplices of the previous complex (standing for
    their barycenters); new simplices are strictly increasing flags.
    """
    if rounds < 1:
        raise ValueError("rounds must be at least 1")
    result = _barycentric_once(X)
    for _ in range(rounds - 1):
        result = result.compose(_barycentric_once(result.subdivided))
    return result


def _barycentric_once(X: Complex) -> Subdivision:
    flags = []
    for top in X.maximal_simplices():
        # maximal flags under ``top`` are prefix chains of its vertex orderings
        for order in permutations(top):
            flags.append(tuple(tuple(sorted(order[: k + 1])) for k in range(len(order))))
    sub = build_complex(flags)
    carrier = {s: max(s, key=len) for s in sub}
    return Subdivision(X, sub, carrier)


def subdivide_cellset(S: Subdivision, A: CellSet) -> CellSet:
    _require_same(S.original, A.complex)
    return S.subdivided.cells(s for s, c in S.carrier.items() if c in A.cells)
