"""Seeded randomized checks of the algebraic identities.

Each property draws a random complex and simplicial self-map and compares
two independently computed integers.  A run is reproducible from its seed.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from .chains import hopf_lefschetz, homology_lefschetz, induced_chain_map
from .complex import barycentric_subdivide, closure, decompose_triple, euler_comb, subdivide_cellset
from .corpus import random_cellset, random_complex, random_self_map
from .engine import SelfMapSystem, lambda_comb, lefschetz, quotient_lambda, restricted_lefschetz
from .errors import PreconditionError


@dataclass
class PropertyResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _hopf(rng, X, phi):
    S = induced_chain_map(phi)
    return hopf_lefschetz(S), homology_lefschetz(S)


def _additivity(rng, X, phi):
    S = SelfMapSystem.of(phi)
    A, B = random_cellset(rng, X), random_cellset(rng, X)
    lhs = lambda_comb(S, A | B, enforce=False) + lambda_comb(S, A & B, enforce=False)
    return lhs, lambda_comb(S, A, enforce=False) + lambda_comb(S, B, enforce=False)


def _euler_additivity(rng, X, phi):
    A, B = random_cellset(rng, X), random_cellset(rng, X)
    return euler_comb(A | B) + euler_comb(A & B), euler_comb(A) + euler_comb(B)


def _identity_is_euler(rng, X, phi):
    A = random_cellset(rng, X)
    return lambda_comb(SelfMapSystem.identity(X), A), euler_comb(A)


def _decomposition(rng, X, phi):
    A = random_cellset(rng, X)
    parts = decompose_triple(A)
    union = parts[0] | parts[1] | parts[2]
    disjoint = sum(len(p) for p in parts) == len(union)
    return (union == closure(A) and disjoint), True


def _functoriality(rng, X, phi):
    psi = random_self_map(rng, X)
    lhs = induced_chain_map(phi.compose(psi)).chain_map
    a, b = induced_chain_map(phi).chain_map, induced_chain_map(psi).chain_map
    return all(np.array_equal(x, y @ z) for x, y, z in zip(lhs, a, b)), True


def _subdivision(rng, X, phi):
    A = random_cellset(rng, X)
    return euler_comb(subdivide_cellset(barycentric_subdivide(X), A)), euler_comb(A)


def _cofibration(rng, X, phi):
    S = SelfMapSystem.of(phi)
    A = closure(random_cellset(rng, X, 0.3))
    try:
        q = quotient_lambda(S, A)
        return lefschetz(S), restricted_lefschetz(S, A) + q - 1
    except PreconditionError:
        return None


PROPERTIES = {
    "hopf-trace": _hopf,
    "inclusion-exclusion": _additivity,
    "euler-comb-additivity": _euler_additivity,
    "identity-euler-comb": _identity_is_euler,
    "decomposition-partition": _decomposition,
    "chain-functoriality": _functoriality,
    "subdivision-euler-comb": _subdivision,
    "cofibration": _cofibration,
}


def run_properties(seed: int, cases: int, max_vertices: int = 7) -> list[PropertyResult]:
    rng = random.Random(seed)
    results = {name: PropertyResult(name) for name in PROPERTIES}
    for case in range(cases):
        X = random_complex(rng, max_vertices)
        phi = random_self_map(rng, X)
        for name, prop in PROPERTIES.items():
            outcome = prop(rng, X, phi)
            if outcome is None:
                continue
            results[name].checked += 1
            if outcome[0] != outcome[1]:
                results[name].failures.append((case, outcome))
    return list(results.values())
