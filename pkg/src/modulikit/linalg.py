"""Dense complex matrix kernel.

Implements the antiholomorphic group involution ``h -> (h^*)^{-1}`` on
GL_N(C) whose fixed points are the unitary matrices, its Lie-algebra
differential ``X -> -X^*``, commutators, hermitian square roots, and the
norm/tolerance conventions every other module builds on.

All functions are pure and never mutate their arguments.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Sequence

import numpy as np
import scipy.linalg

from .errors import (
    DimensionMismatchError,
    NotPositiveDefiniteError,
    SingularMatrixError,
)

# Default relative tolerance for pass/fail decisions.
DEFAULT_TOL = 1e-10
# Absolute floor applied to relative tolerances so near-zero data is not
# held to an impossible standard.
ABS_FLOOR = 1e-14
# A pivoted-LU factor is declared singular when its smallest pivot drops
# below this fraction of the largest input entry.
PIVOT_RTOL = 1e-12
# Floor for commutator-based purity thresholds.
PURITY_FLOOR = 1e-12


def as_matrix(a, square: bool = False) -> np.ndarray:
    """Coerce ``a`` to a complex 2-D array, rejecting non-finite entries."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2:
        raise DimensionMismatchError(f"expected a 2-D matrix, got ndim={m.ndim}")
    if m.size and not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    if square and m.shape[0] != m.shape[1]:
        raise DimensionMismatchError(f"expected a square matrix, got shape {m.shape}")
    return m


def frob(m) -> float:
    """Frobenius norm as a plain float."""
    return float(np.linalg.norm(m))


def scaled_tol(tol: float, scale: float) -> float:
    """Relative tolerance against a Frobenius-norm scale, with absolute floor."""
    return max(tol * scale, ABS_FLOOR)


def dagger(m: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.conj(m.T)


def invert(h) -> np.ndarray:
    """Invert a square matrix via pivoted LU.

    Raises SingularMatrixError when the smallest pivot falls below
    ``PIVOT_RTOL`` times the largest entry of ``h``.
    """
    h = as_matrix(h, square=True)
    n = h.shape[0]
    if n == 0:
        return h.copy()
    biggest = float(np.max(np.abs(h)))
    if biggest == 0.0:
        raise SingularMatrixError("matrix is zero")
    with warnings.catch_warnings():
        # exact singularity is detected below via the pivot threshold
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        lu, piv = scipy.linalg.lu_factor(h, check_finite=False)
    smallest_pivot = float(np.min(np.abs(np.diag(lu))))
    if smallest_pivot < PIVOT_RTOL * biggest:
        raise SingularMatrixError(
            f"matrix is singular within tolerance (pivot {smallest_pivot:.3e} "
            f"< {PIVOT_RTOL:.0e} * {biggest:.3e})"
        )
    return scipy.linalg.lu_solve((lu, piv), np.eye(n, dtype=complex))


def sharp(h) -> np.ndarray:
    """Group involution ``h -> (h^*)^{-1}``.

    An antiholomorphic automorphism of GL_N(C); a matrix is fixed exactly
    when it is unitary.
    """
    return invert(dagger(as_matrix(h, square=True)))


def lie_sharp(x) -> np.ndarray:
    """Lie-algebra differential of :func:`sharp`: ``X -> -X^*``.

    Anti-linear, preserves brackets, and fixes exactly the anti-hermitian
    matrices.
    """
    return -dagger(as_matrix(x, square=True))


def commutator(x, y) -> np.ndarray:
    """Matrix commutator ``[X, Y] = XY - YX``."""
    x = as_matrix(x, square=True)
    y = as_matrix(y, square=True)
    if x.shape != y.shape:
        raise DimensionMismatchError(f"commutator needs equal shapes, got {x.shape} and {y.shape}")
    return x @ y - y @ x


def hermitian_sqrt(k, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Hermitian positive-definite square root ``h`` of ``k`` with ``h h^* = k``.

    The input is symmetrized before the eigendecomposition;
    NotPositiveDefiniteError is raised when ``k`` is not hermitian within
    tolerance or has an eigenvalue at or below the tolerance scale.

    Since ``h`` is hermitian, ``h^{-1} = sharp(h)``, so ``k`` factors as
    ``h * sharp(h)^{-1}``.
    """
    k = as_matrix(k, square=True)
    scale = frob(k)
    if frob(k - dagger(k)) > scaled_tol(tol, scale):
        raise NotPositiveDefiniteError("input is not hermitian within tolerance")
    sym = (k + dagger(k)) / 2.0
    evals, vecs = np.linalg.eigh(sym)
    if evals.size == 0 or float(evals.min()) <= scaled_tol(tol, scale):
        raise NotPositiveDefiniteError(
            f"matrix is not positive definite within tolerance (min eigenvalue "
            f"{float(evals.min()) if evals.size else 0.0:.3e})"
        )
    root = (vecs * np.sqrt(evals)) @ dagger(vecs)
    # Symmetrize so h == dagger(h) holds exactly.
    return (root + dagger(root)) / 2.0


def is_unitary(h, tol: float = DEFAULT_TOL) -> bool:
    """True when ``h^* h`` is within ``tol`` of the identity in Frobenius norm."""
    h = as_matrix(h, square=True)
    eye = np.eye(h.shape[0], dtype=complex)
    return frob(dagger(h) @ h - eye) <= tol


@dataclass(frozen=True)
class BlockStructure:
    """Ordered positive block sizes partitioning ``{0, ..., N-1}`` contiguously."""

    sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        sizes = tuple(int(s) for s in self.sizes)
        if not sizes:
            raise ValueError("block structure needs at least one block")
        if any(s <= 0 for s in sizes):
            raise ValueError("block sizes must be positive")
        object.__setattr__(self, "sizes", sizes)

    @property
    def total(self) -> int:
        return sum(self.sizes)

    def slices(self) -> list[slice]:
        """Contiguous index slices, one per block."""
        out = []
        start = 0
        for s in self.sizes:
            out.append(slice(start, start + s))
            start += s
        return out


def block_diag(blocks: Sequence[np.ndarray]) -> np.ndarray:
    """Assemble square blocks into one block-diagonal complex matrix."""
    mats = [as_matrix(b, square=True) for b in blocks]
    if not mats:
        return np.zeros((0, 0), dtype=complex)
    return scipy.linalg.block_diag(*mats).astype(complex)
