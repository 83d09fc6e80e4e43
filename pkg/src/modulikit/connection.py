"""Torus-covariant connection data over a weight grading.

A rank-1 grading of C^N singles out a pair of matrices (A, B): entries of
A may only join a weight block to the block one weight higher, entries of
B to the block one weight lower.  Equivalently ``f(tau) A f(conj(tau)) =
tau A`` and ``f(tau) B f(conj(tau)) = conj(tau) B`` for unit-modulus tau.

The module checks that covariance (structurally and on sampled torus
elements), decides purity of a frame tuple by commutators, applies the
involution ``(A, B) -> (-B^*, -A^*)`` induced by the group involution
``h -> (h^*)^{-1}``, recognizes its fixed points (hermitian data), and
acts by gauge transformations from the block-diagonal centralizer.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    BadWitnessError,
    DimensionMismatchError,
    MissingWeightsError,
    NotInCommutantError,
)
from .linalg import (
    ABS_FLOOR,
    DEFAULT_TOL,
    PURITY_FLOOR,
    as_matrix,
    dagger,
    frob,
    invert,
    is_unitary,
    scaled_tol,
)
from .weights import WeightData, WeightDecomposition, decompose, phase_vector

# Number of sampled torus elements used by the covariance checks.
DEFAULT_SAMPLES = 32


def _locked(m: np.ndarray) -> np.ndarray:
    out = np.array(m, dtype=complex)
    out.setflags(write=False)
    return out


@dataclass(eq=False)
class ConnectionData:
    """A rank-1 weight grading with a raising matrix A and lowering matrix B."""

    decomposition: WeightDecomposition
    a: np.ndarray
    b: np.ndarray

    def __post_init__(self) -> None:
        if self.decomposition.rank != 1:
            raise ValueError("connection data needs a rank-1 grading")
        n = self.decomposition.dim
        a = as_matrix(self.a, square=True)
        b = as_matrix(self.b, square=True)
        if a.shape[0] != n or b.shape[0] != n:
            raise DimensionMismatchError(
                f"matrices must be {n}x{n} to match the grading, got {a.shape} and {b.shape}"
            )
        self.a = _locked(a)
        self.b = _locked(b)

    @property
    def dim(self) -> int:
        return self.decomposition.dim


@dataclass(eq=False)
class FrameTuple:
    """Values of a connection on a frame: r raising and r lowering matrices.

    ``weights`` optionally records a rank-r grading for the multi-rank
    torus check; the commutator purity test does not need it.
    """

    a_list: tuple[np.ndarray, ...]
    b_list: tuple[np.ndarray, ...] | None = None
    weights: WeightData | None = None

    def __post_init__(self) -> None:
        a_list = tuple(as_matrix(a, square=True) for a in self.a_list)
        if not a_list:
            raise ValueError("frame tuple needs at least one matrix")
        n = a_list[0].shape[0]
        if any(a.shape[0] != n for a in a_list):
            raise DimensionMismatchError("all frame matrices must share one size")
        if self.b_list is None:
            b_list = tuple(np.zeros((n, n), dtype=complex) for _ in a_list)
        else:
            b_list = tuple(as_matrix(b, square=True) for b in self.b_list)
        if len(b_list) != len(a_list) or any(b.shape[0] != n for b in b_list):
            raise DimensionMismatchError("b_list must match a_list in count and size")
        if self.weights is not None:
            if self.weights.dim != n:
                raise DimensionMismatchError("weight data does not match the matrix size")
            if self.weights.rank != len(a_list):
                raise DimensionMismatchError(
                    "weight rank must equal the number of frame matrices"
                )
        self.a_list = tuple(_locked(a) for a in a_list)
        self.b_list = tuple(_locked(b) for b in b_list)

    @property
    def rank(self) -> int:
        return len(self.a_list)

    @property
    def dim(self) -> int:
        return self.a_list[0].shape[0]


@dataclass(frozen=True)
class Witness:
    """Asserts that a unitary group element carries frame sum I onto frame sum J.

    ``matrix`` is the image of the group element in GL_N(C); ``left`` and
    ``right`` are 1-based frame positions with equal cardinality.
    """

    matrix: np.ndarray
    left: tuple[int, ...]
    right: tuple[int, ...]

    def __post_init__(self) -> None:
        m = as_matrix(self.matrix, square=True)
        left = tuple(int(i) for i in self.left)
        right = tuple(int(j) for j in self.right)
        if len(left) != len(right):
            raise BadWitnessError(
                f"witness index sets must have equal size, got {len(left)} and {len(right)}"
            )
        if len(set(left)) != len(left) or len(set(right)) != len(right):
            raise BadWitnessError("witness index sets must not repeat entries")
        if any(i < 1 for i in left + right):
            raise BadWitnessError("witness frame positions are 1-based and positive")
        if not is_unitary(m, 1e-8):
            raise BadWitnessError("witness matrix must be unitary")
        object.__setattr__(self, "matrix", _locked(m))
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)


@dataclass(frozen=True)
class TorusWitness:
    """A basket of stabilizer witnesses to be checked against a frame tuple."""

    witnesses: tuple[Witness, ...]


@dataclass(frozen=True)
class Violation:
    """One failed check inside a report."""

    check: str
    measure: float
    detail: str = ""


@dataclass(eq=False)
class CheckReport:
    """Outcome of a sampled or structural verification."""

    ok: bool
    worst: float
    tol: float
    checks: int
    violations: tuple[Violation, ...] = field(default_factory=tuple)


@dataclass(frozen=True)
class PurityWitness:
    """Offending frame pair for a failed purity test, 1-based positions."""

    side: str
    i: int
    j: int
    commutator_norm: float
    threshold: float


@dataclass(eq=False)
class PurityResult:
    """Boolean purity decision plus the first offending pair on failure."""

    pure: bool
    witness: PurityWitness | None = None

    def __bool__(self) -> bool:
        return self.pure


def _weight_diff(d: WeightDecomposition) -> np.ndarray:
    w = d.index_weights()[:, 0]
    return w[:, None] - w[None, :]


def structural_violations(c: ConnectionData) -> list[Violation]:
    """Exact-zero test on entries outside the allowed weight-shift pattern."""
    diff = _weight_diff(c.decomposition)
    out: list[Violation] = []
    for name, m, shift in (("A", c.a, 1), ("B", c.b, -1)):
        bad = (diff != shift) & (m != 0)
        for i, j in zip(*np.nonzero(bad)):
            out.append(
                Violation(
                    check=f"structural:{name}",
                    measure=float(abs(m[i, j])),
                    detail=f"forbidden entry ({i}, {j}) with weight shift {int(diff[i, j])}",
                )
            )
    return out


def validate_covariance(
    c: ConnectionData,
    samples: int = DEFAULT_SAMPLES,
    tol: float = DEFAULT_TOL,
    seed: int = 0,
) -> CheckReport:
    """Check the weight-shift pattern exactly and covariance on sampled tau.

    Structural failures are nonzero entries on forbidden blocks.  Sampled
    failures are residuals ``f(tau) A f(conj(tau)) - tau A`` (and the
    conjugate relation for B) above ``tol`` relative to the matrix norm.
    """
    violations = structural_violations(c)
    rng = np.random.default_rng(seed)
    d = c.decomposition
    na, nb = frob(c.a), frob(c.b)
    worst = max((v.measure for v in violations), default=0.0)
    checks = len(violations)
    for s in range(samples):
        tau = complex(np.exp(2j * np.pi * rng.uniform()))
        phase = phase_vector(d, tau)
        conj_action = phase[:, None] * np.conj(phase)[None, :]
        res_a = frob(conj_action * c.a - tau * c.a) / max(na, ABS_FLOOR)
        res_b = frob(conj_action * c.b - np.conj(tau) * c.b) / max(nb, ABS_FLOOR)
        checks += 2
        for name, res in (("A", res_a), ("B", res_b)):
            worst = max(worst, res)
            if res > tol:
                violations.append(
                    Violation(
                        check=f"sampled:{name}",
                        measure=float(res),
                        detail=f"sample {s}, tau={tau:.6f}",
                    )
                )
    return CheckReport(
        ok=not violations,
        worst=float(worst),
        tol=tol,
        checks=checks,
        violations=tuple(violations),
    )


def is_pure(t: FrameTuple, tol: float = DEFAULT_TOL) -> PurityResult:
    """Decide purity: all raising values commute and all lowering values commute.

    The threshold for a pair is ``tol`` times the product of the operand
    norms, floored at ``PURITY_FLOOR``.  Rank-1 tuples are always pure.
    On failure the first offending pair (1-based, A side scanned first)
    is returned with its commutator norm.
    """
    for side, mats in (("A", t.a_list), ("B", t.b_list)):
        norms = [frob(m) for m in mats]
        for i in range(len(mats)):
            for j in range(i + 1, len(mats)):
                comm = frob(mats[i] @ mats[j] - mats[j] @ mats[i])
                threshold = max(tol * norms[i] * norms[j], PURITY_FLOOR)
                if comm > threshold:
                    return PurityResult(
                        pure=False,
                        witness=PurityWitness(
                            side=side,
                            i=i + 1,
                            j=j + 1,
                            commutator_norm=float(comm),
                            threshold=float(threshold),
                        ),
                    )
    return PurityResult(pure=True)


def involution(c: ConnectionData) -> ConnectionData:
    """Involution on connection data: ``(A, B) -> (-B^*, -A^*)``.

    Exchanges the raising and lowering roles while preserving the
    weight-shift pattern exactly; applying it twice returns the input.
    """
    return ConnectionData(
        decomposition=c.decomposition,
        a=-dagger(c.b),
        b=-dagger(c.a),
    )


def is_hermitian(c: ConnectionData, tol: float = DEFAULT_TOL) -> bool:
    """True when ``B = -A^*`` within tolerance, i.e. c is an involution fixed point."""
    return frob(c.b + dagger(c.a)) <= tol * max(frob(c.a), ABS_FLOOR)


def gauge(c: ConnectionData, h, tol: float = DEFAULT_TOL) -> ConnectionData:
    """Conjugate connection data by a centralizer element: ``(h A h^{-1}, h B h^{-1})``.

    ``h`` must be block diagonal for the grading within ``tol`` (its
    off-block part is discarded) and every diagonal block must be
    invertible.  The conjugation is carried out block by block, so exact
    zeros on forbidden blocks stay exact.
    """
    from .weights import commutant_contains

    h = as_matrix(h, square=True)
    d = c.decomposition
    if h.shape[0] != d.dim:
        raise DimensionMismatchError(f"gauge matrix is {h.shape}, grading has dim {d.dim}")
    if not commutant_contains(d, h, tol):
        raise NotInCommutantError("gauge matrix is not block diagonal for the grading")
    blocks = [list(b.indices) for b in d.blocks]
    hs = [h[np.ix_(ix, ix)] for ix in blocks]
    hinvs = [invert(m) for m in hs]
    new_a = np.zeros_like(c.a)
    new_b = np.zeros_like(c.b)
    for p, ip in enumerate(blocks):
        for q, iq in enumerate(blocks):
            sub_a = c.a[np.ix_(ip, iq)]
            if np.any(sub_a != 0):
                new_a[np.ix_(ip, iq)] = hs[p] @ sub_a @ hinvs[q]
            sub_b = c.b[np.ix_(ip, iq)]
            if np.any(sub_b != 0):
                new_b[np.ix_(ip, iq)] = hs[p] @ sub_b @ hinvs[q]
    return ConnectionData(decomposition=d, a=new_a, b=new_b)


def check_torus_multirank(
    t: FrameTuple,
    samples: int = DEFAULT_SAMPLES,
    tol: float = DEFAULT_TOL,
    seed: int = 0,
) -> CheckReport:
    """Sampled covariance for a rank-r frame tuple with weight data.

    For sampled ``tau`` in the r-torus, checks ``f(tau) A_i f(tau)^{-1} =
    tau_i A_i`` and ``f(tau) B_i f(tau)^{-1} = conj(tau_i) B_i``.
    """
    if t.weights is None:
        raise MissingWeightsError("multi-rank torus check needs weight data on the tuple")
    d = decompose(t.weights)
    rng = np.random.default_rng(seed)
    norms_a = [max(frob(a), ABS_FLOOR) for a in t.a_list]
    norms_b = [max(frob(b), ABS_FLOOR) for b in t.b_list]
    worst = 0.0
    checks = 0
    violations: list[Violation] = []
    for s in range(samples):
        tau = np.exp(2j * np.pi * rng.uniform(size=d.rank))
        phase = phase_vector(d, tau)
        conj_action = phase[:, None] * np.conj(phase)[None, :]
        for i in range(t.rank):
            res_a = frob(conj_action * t.a_list[i] - tau[i] * t.a_list[i]) / norms_a[i]
            res_b = frob(conj_action * t.b_list[i] - np.conj(tau[i]) * t.b_list[i]) / norms_b[i]
            checks += 2
            for name, res in ((f"A_{i + 1}", res_a), (f"B_{i + 1}", res_b)):
                worst = max(worst, res)
                if res > tol:
                    violations.append(
                        Violation(check=f"torus:{name}", measure=float(res), detail=f"sample {s}")
                    )
    return CheckReport(
        ok=not violations,
        worst=float(worst),
        tol=tol,
        checks=checks,
        violations=tuple(violations),
    )


def check_stabilizer_sums(
    t: FrameTuple, w: TorusWitness, tol: float = DEFAULT_TOL
) -> CheckReport:
    """Verify witnessed stabilizer relations on sums of raising values.

    Each witness (k, I, J) asserts ``k A_I k^{-1} = A_J`` with
    ``A_I = sum_{i in I} A_i``; the residual is measured relative to the
    larger of the two sums' norms.
    """
    worst = 0.0
    violations: list[Violation] = []
    for idx, wit in enumerate(w.witnesses):
        if any(i > t.rank for i in wit.left + wit.right):
            raise BadWitnessError(
                f"witness {idx} refers to frame positions beyond rank {t.rank}"
            )
        n = t.dim
        a_left = sum((t.a_list[i - 1] for i in wit.left), np.zeros((n, n), dtype=complex))
        a_right = sum((t.a_list[j - 1] for j in wit.right), np.zeros((n, n), dtype=complex))
        k = wit.matrix
        res = frob(k @ a_left @ invert(k) - a_right)
        scale = max(frob(a_left), frob(a_right), ABS_FLOOR)
        measure = res / scale
        worst = max(worst, measure)
        if measure > tol:
            violations.append(
                Violation(
                    check=f"witness:{idx}",
                    measure=float(measure),
                    detail=f"I={list(wit.left)}, J={list(wit.right)}",
                )
            )
    return CheckReport(
        ok=not violations,
        worst=float(worst),
        tol=tol,
        checks=len(w.witnesses),
        violations=tuple(violations),
    )
