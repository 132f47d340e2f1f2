"""Combinatorial Lefschetz numbers of simplicial self-maps on unions of open cells.

For a vertex self-map ``phi`` of ``X`` and a cell set ``A`` the combinatorial
number is the alternating sum, over the cells of ``A``, of the diagonal
entries of the chain-level matrices of ``phi``.  It is only meaningful when
``phi`` sends cells of ``A`` into ``A`` and cells outside ``A`` outside
``A``; :func:`lambda_comb` enforces that by default.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property

from .chains import ChainSystem, VertexSelfMap, hopf_lefschetz, induced_chain_map
from .complex import CellSet, Complex, Simplex, Subdivision, barycentric_subdivide, closure, subdivide_cellset
from .errors import (
    DomainMismatchError,
    FrontierFixedPointError,
    NotASubcomplexError,
    PreconditionError,
)


@dataclass(frozen=True, eq=False)
class ApproximatedMap:
    """The map being modelled, as a vertex map on a subdivision of the complex.

    Used when ``phi`` is only one simplicial approximation of a map whose
    cell behaviour is visible on a finer triangulation.
    """

    subdivision: Subdivision
    phi: VertexSelfMap


@dataclass(frozen=True, eq=False)
class SelfMapSystem:
    complex: Complex
    phi: VertexSelfMap
    approximates: ApproximatedMap | None = None

    def __post_init__(self):
        if self.phi.complex != self.complex:
            raise DomainMismatchError("vertex map lives on a different complex")
        if self.approximates is not None and self.approximates.subdivision.original != self.complex:
            raise DomainMismatchError("approximated map is not defined on a subdivision of the complex")

    @classmethod
    def of(cls, phi: VertexSelfMap, approximates: ApproximatedMap | None = None) -> "SelfMapSystem":
        return cls(phi.complex, phi, approximates)

    @classmethod
    def identity(cls, X: Complex) -> "SelfMapSystem":
        return cls(X, VertexSelfMap.identity(X))

    @cached_property
    def chains(self) -> ChainSystem:
        return induced_chain_map(self.phi)

    def diagonal(self, simplex: Simplex) -> int:
        """Entry of the chain matrix on the diagonal at ``simplex``."""
        img = self.phi.signed_image(simplex)
        if img is None or img[0] != simplex:
            return 0
        return img[1]


@dataclass(frozen=True)
class CompatibilityReport:
    a_preserved: bool
    complement_preserved: bool
    nondegenerate_on_cells: bool
    violations: tuple = ()

    @property
    def ok(self) -> bool:
        """The enforced part: both preservation flags."""
        return self.a_preserved and self.complement_preserved

    def describe(self) -> str:
        lines = [
            f"a_preserved = {str(self.a_preserved).lower()}",
            f"complement_preserved = {str(self.complement_preserved).lower()}",
            f"nondegenerate_on_cells = {str(self.nondegenerate_on_cells).lower()}",
        ]
        for kind, s, img in self.violations:
            lines.append(f"violation = {kind}: {_fmt(s)} -> {_fmt(img)}")
        return "\n".join(lines)


def _fmt(simplex) -> str:
    return "(" + " ".join(str(v) for v in simplex) + ")"


def _cell_report(phi: VertexSelfMap, A: CellSet) -> CompatibilityReport:
    a_ok = comp_ok = nondeg_ok = True
    violations = []
    for s in phi.complex:
        img = phi.image_simplex(s)
        if s in A.cells:
            if img not in A.cells:
                a_ok = False
                violations.append(("leaves-set", s, img))
            if len(img) < len(s):
                nondeg_ok = False
                violations.append(("degenerate", s, img))
        elif img in A.cells:
            comp_ok = False
            violations.append(("enters-set", s, img))
    return CompatibilityReport(a_ok, comp_ok, nondeg_ok, tuple(violations))


def check_compatibility(S: SelfMapSystem, A: CellSet) -> CompatibilityReport:
    """Cell-level proxy for f(A) in A and f(X - A) in X - A.

    When the system records the map it approximates, that map is checked
    too (on the subdivided cell set) and the flags are combined.
    """
    if A.complex != S.complex:
        raise DomainMismatchError("cell set lives on a different complex")
    report = _cell_report(S.phi, A)
    if S.approximates is None:
        return report
    fine = _cell_report(S.approximates.phi, subdivide_cellset(S.approximates.subdivision, A))
    return CompatibilityReport(
        report.a_preserved and fine.a_preserved,
        report.complement_preserved and fine.complement_preserved,
        report.nondegenerate_on_cells and fine.nondegenerate_on_cells,
        report.violations + tuple((f"approximated-{k}", s, i) for k, s, i in fine.violations),
    )


def lambda_comb(S: SelfMapSystem, A: CellSet, enforce: bool = True) -> int:
    """Alternating sum of diagonal chain-matrix entries over the cells of ``A``.

    With ``enforce`` off the raw restricted trace is returned even when the
    number is not well defined.
    """
    if A.complex != S.complex:
        raise DomainMismatchError("cell set lives on a different complex")
    if enforce:
        report = check_compatibility(S, A)
        if not report.ok:
            raise PreconditionError("map is not cell-compatible with the set", report)
    return sum((-1) ** (len(s) - 1) * S.diagonal(s) for s in A.cells)


def lambda_comb_additive_check(S: SelfMapSystem, A: CellSet, B: CellSet) -> tuple[int, int]:
    """Both sides of inclusion-exclusion: (value on A|B, A + B - A&B)."""
    a = lambda_comb(S, A)
    b = lambda_comb(S, B)
    lhs = lambda_comb(S, A | B)
    rhs = a + b - lambda_comb(S, A & B)
    return lhs, rhs


def restricted_system(S: SelfMapSystem, A: CellSet) -> ChainSystem:
    """Chain system of the map restricted to an invariant subcomplex."""
    if not A.is_subcomplex():
        raise NotASubcomplexError("restriction needs a subcomplex")
    if any(S.phi.image_simplex(s) not in A.cells for s in A.cells):
        raise PreconditionError("subcomplex is not mapped into itself")
    return S.chains.restrict(A)


def lefschetz(S: SelfMapSystem) -> int:
    return hopf_lefschetz(S.chains)


def restricted_lefschetz(S: SelfMapSystem, A: CellSet) -> int:
    """Classical number of the restriction to an invariant subcomplex."""
    return hopf_lefschetz(restricted_system(S, A))


def relative_lefschetz(S: SelfMapSystem, C: CellSet) -> int:
    """Relative number of the pair (X, C), read off the open complement."""
    if not C.is_subcomplex():
        raise NotASubcomplexError("relative number needs a closed subcomplex")
    return lambda_comb(S, C.complement())


def _require_invariant_subcomplex(S: SelfMapSystem, A: CellSet) -> None:
    if not A.is_subcomplex():
        raise NotASubcomplexError("quotient needs a subcomplex")
    images = {S.phi.image_simplex(s) for s in A.cells}
    if not images <= A.cells:
        raise PreconditionError("subcomplex is not mapped into itself")
    if images != A.cells:
        raise PreconditionError("map is not onto the subcomplex; mapping into it is not enough")
    report = _cell_report(S.phi, A)
    if not report.complement_preserved:
        raise PreconditionError("cells outside the subcomplex are mapped into it", report)


def quotient_lambda(S: SelfMapSystem, A: CellSet) -> int:
    """Number of the induced map on X/A, from relative chains plus the basepoint."""
    _require_invariant_subcomplex(S, A)
    return 1 + sum((-1) ** (len(s) - 1) * S.diagonal(s) for s in S.complex if s not in A.cells)


def subdivide_system(S: SelfMapSystem, rounds: int = 1) -> tuple[Subdivision, SelfMapSystem]:
    """Barycentric subdivision of the map: each barycenter goes to the barycenter of the image."""
    if rounds < 1:
        raise ValueError("rounds must be at least 1")
    sd, system = None, S
    for _ in range(rounds):
        step = barycentric_subdivide(system.complex)
        phi = VertexSelfMap(step.subdivided, {s: system.phi.image_simplex(s) for s in system.complex})
        system = SelfMapSystem.of(phi)
        sd = step if sd is None else sd.compose(step)
    return sd, system


def fixed_simplices(S: SelfMapSystem, cells: CellSet) -> list[Simplex]:
    return [s for s in cells.sorted() if S.phi.fixes(s)]


def index_via_lambda(S: SelfMapSystem, U: CellSet) -> int:
    """Fixed-point index of an open set, certified through the restricted trace."""
    if not U.is_open():
        raise NotASubcomplexError("the complement of U is not a subcomplex, so U is not open")
    report = check_compatibility(S, U)
    if not report.ok:
        raise PreconditionError("map is not cell-compatible with U", report)
    frontier = closure(U) - U
    on_frontier = fixed_simplices(S, frontier)
    if on_frontier:
        raise FrontierFixedPointError(
            f"fixed simplex {_fmt(on_frontier[0])} on the frontier of U; index equality not certified"
        )
    return lambda_comb(S, U)


class Verdict(str, enum.Enum):
    FIXED_POINT = "FixedPointInClosure"
    NO_GUARANTEE = "NoGuarantee"
    PRECONDITION_VIOLATED = "PreconditionViolated"


@dataclass(frozen=True)
class Certificate:
    verdict: Verdict
    lambda_value: int
    witness: Simplex | None = None
    justification: str = ""
    region: str = ""
    conjectural: bool = False
    notes: tuple = field(default=())

    def __post_init__(self):
        if self.verdict is Verdict.FIXED_POINT and self.lambda_value == 0:
            raise ValueError("a fixed-point verdict needs a nonzero Lefschetz number")

    def as_pairs(self) -> list[tuple[str, str]]:
        pairs = [
            ("verdict", self.verdict.value),
            ("lambda", str(self.lambda_value)),
            ("witness", "none" if self.witness is None else " ".join(str(v) for v in self.witness)),
            ("region", self.region or "none"),
            ("conjectural", str(self.conjectural).lower()),
            ("justification", self.justification),
        ]
        pairs.extend(("note", n) for n in self.notes)
        return pairs

    def to_text(self) -> str:
        return "\n".join(f"{k} = {v}" for k, v in self.as_pairs())


def find_witness(S: SelfMapSystem, cells: CellSet) -> Simplex | None:
    """First fixed simplex in ``cells`` then in the rest of their closure."""
    for region in (cells, closure(cells) - cells):
        found = fixed_simplices(S, region)
        if found:
            return found[0]
    return None


def certify_fixed_point(S: SelfMapSystem, A: CellSet) -> Certificate:
    report = check_compatibility(S, A)
    if not report.ok:
        return Certificate(
            Verdict.PRECONDITION_VIOLATED,
            lambda_comb(S, A, enforce=False),
            justification="map is not cell-compatible with the set; raw trace reported",
            region="closure(A)",
            notes=tuple(f"{k}: {_fmt(s)} -> {_fmt(i)}" for k, s, i in report.violations[:5]),
        )
    value = lambda_comb(S, A)
    notes = ()
    if not report.nondegenerate_on_cells:
        notes = ("map collapses some cells of the set",)
    if value == 0:
        return Certificate(
            Verdict.NO_GUARANTEE,
            value,
            justification="restricted trace vanishes; no conclusion",
            region="closure(A)",
            notes=notes,
        )
    return Certificate(
        Verdict.FIXED_POINT,
        value,
        witness=find_witness(S, A),
        justification="nonzero combinatorial Lefschetz number of a compatible set forces a fixed point in its closure",
        region="closure(A)",
        notes=notes,
    )
