"""Combinatorial Lefschetz numbers of unbounded spaces through a compactification.

The unbounded space is modelled as ``U = X - corona`` for a compact
triangulated ``X`` and an invariant subcomplex ``corona`` standing for the
points at infinity.  Collapsing the corona to a point gives the one-point
compactification of ``U``, so its Euler characteristic is
``euler_comb(U) + 1`` and its Lefschetz number is ``lambda_comb(U) + 1``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .complex import CellSet, Complex, build_complex, euler_comb
from .engine import (
    Certificate,
    SelfMapSystem,
    Verdict,
    _cell_report,
    fixed_simplices,
    find_witness,
    lambda_comb,
)
from .errors import NotASubcomplexError, NotIsolatedError, PreconditionError


def _apex_label(X: Complex):
    labels = X.vertices
    if all(isinstance(v, int) for v in labels):
        return max(labels, default=-1) + 1
    if all(isinstance(v, str) for v in labels):
        apex = "inf"
        while apex in labels:
            apex += "'"
        return apex
    raise ValueError("cannot choose an apex label for these vertex labels")


def one_point_compactify(K: Complex, link: CellSet) -> tuple[Complex, object]:
    """Cone a new apex over ``link``; returns the new complex and the apex.

    Integer-labelled complexes get ``max + 1`` as apex, string-labelled ones
    get ``"inf"``.
    """
    if link.complex != K:
        raise ValueError("link lives on a different complex")
    if not link.is_subcomplex():
        raise NotASubcomplexError("the link at infinity must be a subcomplex")
    apex = _apex_label(K)
    cone = [s + (apex,) for s in link.cells]
    return build_complex(list(K.maximal_simplices()) + cone + [(apex,)]), apex


@dataclass(frozen=True, eq=False)
class CompactifiedSystem:
    """A self-map of a compactification together with its points at infinity.

    ``surrogate_of`` names the map this system stands in for when the given
    vertex map is only homotopic to it (for instance the identity standing
    for a translation); such systems may carry fixed cells in ``U`` that
    the modelled map does not have.
    """

    system: SelfMapSystem
    corona: CellSet
    surrogate_of: str | None = None

    def __post_init__(self):
        if self.corona.complex != self.system.complex:
            raise ValueError("corona lives on a different complex")

    @property
    def U(self) -> CellSet:
        return self.corona.complement()

    def check(self) -> None:
        if not self.corona.is_subcomplex():
            raise NotASubcomplexError("corona must be a subcomplex")
        report = _cell_report(self.system.phi, self.corona)
        if not report.a_preserved:
            raise PreconditionError("corona is not mapped into itself", report)
        if not report.complement_preserved:
            raise PreconditionError("cells of U are mapped into the corona", report)

    def fixed_in_U(self) -> list:
        return fixed_simplices(self.system, self.U)

    def compactification_connected(self) -> bool:
        """Connectivity of X with the corona collapsed to one point."""
        X = self.system.complex
        parent = {v: v for v in X.vertices}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        corona_vertices = [s[0] for s in self.corona.cells if len(s) == 1]
        for v in corona_vertices[1:]:
            parent[find(v)] = find(corona_vertices[0])
        for a, b in X.simplices(1):
            parent[find(a)] = find(b)
        return len({find(v) for v in X.vertices}) <= 1


def lambda_comb_unbounded(C: CompactifiedSystem) -> int:
    C.check()
    return lambda_comb(C.system, C.U)


def index_at_infinity(C: CompactifiedSystem) -> int:
    """Index of the point at infinity, Λ_comb(U) + 1, for a one-vertex corona."""
    if len(C.corona.cells) != 1 or len(next(iter(C.corona.cells))) != 1:
        raise PreconditionError("index at infinity needs a corona made of a single vertex")
    if C.surrogate_of is None:
        fixed = C.fixed_in_U()
        if fixed:
            raise NotIsolatedError(
                f"fixed simplex {fixed[0]!r} in U; the point at infinity is not the only fixed point"
            )
    return lambda_comb_unbounded(C) + 1


class SpaceTag(str, enum.Enum):
    GRAPH = "graph"
    SURFACE = "surface"
    SURFACE_BOUNDARY = "surface-boundary"
    WEDGE = "wedge"
    COLLAPSE = "collapse"


@dataclass(frozen=True)
class SpaceClass:
    """Caller-asserted class of the one-point compactification of U.

    ``chi_list`` holds the combinatorial Euler characteristics of the
    wedge summands U_i and is required exactly for ``wedge``.
    ``collapse`` covers collapsed surfaces whose index bound is conjectural.
    """

    tag: SpaceTag
    chi_list: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "tag", SpaceTag(self.tag))
        if (self.tag is SpaceTag.WEDGE) != (self.chi_list is not None):
            raise ValueError("chi_list is given exactly for the wedge class")
        if self.chi_list is not None:
            chis = tuple(int(c) for c in self.chi_list)
            if not chis:
                raise ValueError("chi_list must list at least one summand")
            if any(c > 0 for c in chis):
                raise ValueError("wedge summands must have non-positive Euler characteristic")
            object.__setattr__(self, "chi_list", chis)


def _class_problems(C: CompactifiedSystem, cls: SpaceClass) -> list[str]:
    U = C.U
    problems = []
    if not U.cells:
        problems.append("U is empty")
    if not C.compactification_connected():
        problems.append("the one-point compactification of U is not connected")
    chi_inf = euler_comb(U) + 1
    if cls.tag is SpaceTag.GRAPH:
        if U.dim > 1:
            problems.append(f"U has dimension {U.dim}, a graph needs dimension at most 1")
    elif cls.tag in (SpaceTag.SURFACE, SpaceTag.SURFACE_BOUNDARY, SpaceTag.WEDGE):
        if U.dim != 2:
            problems.append(f"U has dimension {U.dim}, a surface needs dimension 2")
        if cls.tag is SpaceTag.SURFACE and chi_inf >= 0:
            problems.append(f"compactified surface has Euler characteristic {chi_inf}, needs < 0")
        if cls.tag is SpaceTag.WEDGE:
            if any(c > -1 for c in cls.chi_list):
                problems.append("each summand needs combinatorial Euler characteristic <= -1")
            if sum(cls.chi_list) != euler_comb(U):
                problems.append(
                    f"chi_list sums to {sum(cls.chi_list)} but U has combinatorial Euler characteristic {euler_comb(U)}"
                )
    return problems


_BOUND = {
    SpaceTag.GRAPH: "index bound for fixed-point classes on connected graphs",
    SpaceTag.SURFACE: "index bound for fixed-point classes on surfaces of negative Euler characteristic",
    SpaceTag.SURFACE_BOUNDARY: "index bound for minimal maps on surfaces with boundary",
    SpaceTag.WEDGE: "index bounds for minimal maps on wedges of surfaces",
    SpaceTag.COLLAPSE: "conjectured index bound for collapsed surfaces",
}


def certify_unbounded(C: CompactifiedSystem, cls: SpaceClass, assume_conjecture: bool = False) -> Certificate:
    """Fixed-point certificate for the map on U from an index bound at infinity.

    If the map had no fixed point in U, infinity would be its only fixed
    point in the compactification, with index Λ_comb(U) + 1 <= 1.
    """
    region = "U"
    try:
        value = lambda_comb_unbounded(C)
    except PreconditionError as exc:
        raw = lambda_comb(C.system, C.U, enforce=False)
        return Certificate(Verdict.PRECONDITION_VIOLATED, raw, justification=str(exc), region=region)
    conjectural = cls.tag is SpaceTag.COLLAPSE
    if conjectural and not assume_conjecture:
        return Certificate(
            Verdict.PRECONDITION_VIOLATED,
            value,
            justification="the collapse class rests on an unproved index bound; pass assume_conjecture",
            region=region,
            conjectural=True,
        )
    problems = _class_problems(C, cls)
    if problems:
        return Certificate(
            Verdict.PRECONDITION_VIOLATED,
            value,
            justification="; ".join(problems),
            region=region,
            conjectural=conjectural,
        )
    notes = ("class membership beyond the checked conditions is asserted by the caller",)
    if C.surrogate_of is not None:
        notes += (f"vertex map is a homotopy surrogate of: {C.surrogate_of}",)
    fires = value >= 1
    reason = f"{_BOUND[cls.tag]}: ind(inf) = lambda_comb + 1 <= 1 forces lambda_comb <= 0 without fixed points in U"
    if cls.tag is SpaceTag.WEDGE and not fires and sum(cls.chi_list) == -1 and value < -2:
        fires = True
        reason = f"{_BOUND[cls.tag]}: with summed Euler characteristic -1 the lower bound ind(inf) >= -1 forces lambda_comb >= -2"
    if not fires:
        return Certificate(
            Verdict.NO_GUARANTEE,
            value,
            justification="lambda_comb outside the certified range; no conclusion",
            region=region,
            conjectural=conjectural,
            notes=notes,
        )
    return Certificate(
        Verdict.FIXED_POINT,
        value,
        witness=find_witness(C.system, C.U),
        justification=reason,
        region=region,
        conjectural=conjectural,
        notes=notes,
    )


def certify_extension_fixed_point(C: CompactifiedSystem) -> Certificate:
    """A fixed-point-free map on U forces fixed points of any extension in the corona.

    Without fixed points in U, Λ_comb(U) is the sum of indices of fixed
    points in U and vanishes; a nonzero value therefore means the
    extension's number is carried by the corona.
    """
    value = lambda_comb_unbounded(C)
    notes = ()
    fixed = C.fixed_in_U()
    if fixed and C.surrogate_of is None:
        notes = (f"advisory: fixed simplex {fixed[0]!r} in U; the map is not fixed-point free there",)
    if C.surrogate_of is not None:
        notes += (f"vertex map is a homotopy surrogate of: {C.surrogate_of}",)
    if value == 0:
        return Certificate(
            Verdict.NO_GUARANTEE,
            value,
            justification="lambda_comb of U vanishes; no conclusion about the corona",
            region="corona",
            notes=notes,
        )
    witness = next(iter(fixed_simplices(C.system, C.corona)), None)
    return Certificate(
        Verdict.FIXED_POINT,
        value,
        witness=witness,
        justification="nonzero lambda_comb of a fixed-point-free map on U forces a fixed point of every extension in the corona",
        region="corona",
        notes=notes,
    )
