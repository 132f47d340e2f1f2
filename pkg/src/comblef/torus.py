"""Lefschetz numbers of torus self-maps and Nielsen triad lower bounds.

A self-map of the p-torus is described by the integer matrix it induces on
first homology; its Lefschetz number is det(I - A) and its Nielsen number
is the absolute value of that.
"""
from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass

from .exact import bareiss_det


class OutOfHypothesisWarning(UserWarning):
    """A bound was evaluated outside the range where it is a theorem."""


@dataclass(frozen=True)
class TorusMapMatrix:
    p: int
    A: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.A)
        if self.p < 1:
            raise ValueError("torus dimension must be at least 1")
        if len(rows) != self.p or any(len(r) != self.p for r in rows):
            raise ValueError(f"expected a {self.p}x{self.p} integer matrix")
        object.__setattr__(self, "A", rows)

    @classmethod
    def parse(cls, text: str, p: int | None = None) -> "TorusMapMatrix":
        """Rows separated by ``;``, entries by whitespace: ``"-1 0; 0 -1"``."""
        rows = [r.split() for r in text.split(";") if r.strip()]
        try:
            matrix = [[int(x) for x in r] for r in rows]
        except ValueError as exc:
            raise ValueError(f"non-integer entry in matrix {text!r}") from exc
        return cls(len(matrix) if p is None else p, tuple(map(tuple, matrix)))

    @classmethod
    def scalar(cls, p: int, c: int) -> "TorusMapMatrix":
        return cls(p, tuple(tuple(c if i == j else 0 for j in range(p)) for i in range(p)))


def torus_lefschetz(M: TorusMapMatrix) -> int:
    """det(I - A), exactly."""
    shifted = [[int(i == j) - M.A[i][j] for j in range(M.p)] for i in range(M.p)]
    return bareiss_det(shifted)


def torus_nielsen(M: TorusMapMatrix) -> int:
    return abs(torus_lefschetz(M))


def triad_lower_bound(M1: TorusMapMatrix, M2: TorusMapMatrix) -> int:
    """|L(f1)| + |L(f2)| - 3 for the two summands of a connected sum of p-tori.

    The bound is a theorem for p >= 3 only; smaller p still returns the
    arithmetic but emits :class:`OutOfHypothesisWarning`.
    """
    if M1.p != M2.p:
        raise ValueError(f"dimension mismatch: {M1.p} vs {M2.p}")
    if M1.p < 3:
        warnings.warn(
            f"triad bound requires p >= 3, got p = {M1.p}; value is formal arithmetic only",
            OutOfHypothesisWarning,
            stacklevel=2,
        )
    return torus_nielsen(M1) + torus_nielsen(M2) - 3


class NielsenCase(str, enum.Enum):
    PLUS_PLUS = "plus"
    MINUS_MINUS = "minus"


def triad_bound_via_lambda(lambda_total: int, lambda_sphere: int, case: NielsenCase | str) -> int:
    """Bound from the number of the whole connected sum and of the separating sphere.

    ``case`` is the caller's assertion of the sign relating each summand's
    Nielsen and Lefschetz numbers: ``plus`` when N = L, ``minus`` when N = -L.
    """
    case = NielsenCase(case)
    if case is NielsenCase.PLUS_PLUS:
        return lambda_total - lambda_sphere - 1
    return -lambda_total + lambda_sphere - 5


def connected_sum_lambda(M1: TorusMapMatrix, M2: TorusMapMatrix, lambda_sphere: int) -> int:
    """Number of the whole connected sum assembled from its open pieces.

    Each punctured summand contributes L(f_i) - 1 and the separating sphere
    contributes its own number.
    """
    return (torus_lefschetz(M1) - 1) + (torus_lefschetz(M2) - 1) + lambda_sphere
