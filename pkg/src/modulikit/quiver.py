"""Chain quivers, their doubles, moment maps, and trace invariants.

A rank-1 weight grading with levels ``m, m+1, ..., m+l`` yields a linear
chain quiver: one vertex per level, one arrow per consecutive pair,
pointing from lower to higher weight.  Doubling adds the reversed arrow
for every original one (label ``Ak`` pairs with ``Bk``).  Connection data
restricted to its allowed blocks is exactly a representation of the
double.

Two moment-map conventions are provided.  With ``"paper"`` the sum runs
over every arrow of the double, which makes the map vanish identically:
each product appears once with head bookkeeping and once with tail
bookkeeping.  With ``"standard"`` only original arrows contribute,
``mu_v = sum_{head(a)=v} x_a x_abar - sum_{tail(a)=v} x_abar x_a``,
which is the familiar equivariant moment map.

Trace invariants are traces of matrix products along closed oriented
paths, one representative per rotation class of the arrow-label word.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    CovarianceViolationError,
    DimensionMismatchError,
    QuiverMismatchError,
)
from .linalg import DEFAULT_TOL, as_matrix, invert
from .weights import ChainDecomposition, chains

MOMENT_CONVENTIONS = ("paper", "standard")
# Cap applied to the default cycle length min(N^2, MAX_LEN_CAP).
MAX_LEN_CAP = 12


@dataclass(frozen=True)
class Arrow:
    """Oriented edge between vertex positions, carrying a unique label."""

    tail: int
    head: int
    label: str


def _check_arrows(dims: tuple[int, ...], arrows: tuple[Arrow, ...]) -> None:
    nv = len(dims)
    if any(d <= 0 for d in dims):
        raise ValueError("vertex dimensions must be positive")
    labels = [a.label for a in arrows]
    if len(set(labels)) != len(labels):
        raise ValueError("arrow labels must be unique")
    for a in arrows:
        if not (0 <= a.tail < nv and 0 <= a.head < nv):
            raise ValueError(f"arrow {a.label} references a missing vertex")


@dataclass(frozen=True)
class Quiver:
    """Finite quiver: vertex dimensions plus labeled oriented arrows."""

    dims: tuple[int, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        object.__setattr__(self, "arrows", tuple(self.arrows))
        _check_arrows(self.dims, self.arrows)


@dataclass(frozen=True)
class DoubleQuiver:
    """Quiver whose arrows come in original/opposite pairs.

    ``pairs`` lists (original label, opposite label) once per original
    arrow; ``arrows`` contains both members of every pair.
    """

    dims: tuple[int, ...]
    arrows: tuple[Arrow, ...]
    pairs: tuple[tuple[str, str], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        object.__setattr__(self, "arrows", tuple(self.arrows))
        object.__setattr__(self, "pairs", tuple((a, b) for a, b in self.pairs))
        _check_arrows(self.dims, self.arrows)
        by_label = {a.label: a for a in self.arrows}
        seen = set()
        for orig, opp in self.pairs:
            if orig not in by_label or opp not in by_label:
                raise ValueError(f"pair ({orig}, {opp}) references a missing arrow")
            fwd, rev = by_label[orig], by_label[opp]
            if fwd.tail != rev.head or fwd.head != rev.tail:
                raise ValueError(f"pair ({orig}, {opp}) is not orientation reversed")
            seen.update((orig, opp))
        if len(seen) != len(self.arrows):
            raise ValueError("every arrow must belong to exactly one pair")

    def opposite(self, label: str) -> str:
        for orig, opp in self.pairs:
            if label == orig:
                return opp
            if label == opp:
                return orig
        raise KeyError(label)

    def arrow(self, label: str) -> Arrow:
        for a in self.arrows:
            if a.label == label:
                return a
        raise KeyError(label)

    @property
    def originals(self) -> tuple[Arrow, ...]:
        by_label = {a.label: a for a in self.arrows}
        return tuple(by_label[orig] for orig, _ in self.pairs)


def same_quiver(q1: DoubleQuiver, q2: DoubleQuiver) -> bool:
    """Equality up to arrow ordering."""
    return (
        q1.dims == q2.dims
        and set(q1.arrows) == set(q2.arrows)
        and dict(q1.pairs) == dict(q2.pairs)
    )


@dataclass(eq=False)
class DoubleQuiverRep:
    """A matrix for every arrow of a double quiver, shape (dim head, dim tail)."""

    quiver: DoubleQuiver
    matrices: dict[str, np.ndarray]

    def __post_init__(self) -> None:
        mats = {}
        labels = {a.label for a in self.quiver.arrows}
        extra = set(self.matrices) - labels
        if extra:
            raise DimensionMismatchError(f"matrices given for unknown arrows {sorted(extra)}")
        for a in self.quiver.arrows:
            if a.label not in self.matrices:
                raise DimensionMismatchError(f"missing matrix for arrow {a.label}")
            m = as_matrix(self.matrices[a.label])
            want = (self.quiver.dims[a.head], self.quiver.dims[a.tail])
            if m.shape != want:
                raise DimensionMismatchError(
                    f"arrow {a.label} needs shape {want}, got {m.shape}"
                )
            m = np.array(m, dtype=complex)
            m.setflags(write=False)
            mats[a.label] = m
        self.matrices = mats

    @property
    def total_dim(self) -> int:
        return sum(self.quiver.dims)


def chain_quiver(ch: ChainDecomposition) -> Quiver:
    """Linear quiver of a chain decomposition, arrows pointing up in weight.

    Chains become connected components; vertices are numbered chain by
    chain, levels ascending, and arrows are labeled ``A1, A2, ...`` in
    that traversal order.
    """
    dims: list[int] = []
    arrows: list[Arrow] = []
    arrow_no = 0
    for chain in ch.chains:
        base = len(dims)
        dims.extend(chain.dims)
        for lvl in range(1, len(chain.indices)):
            arrow_no += 1
            arrows.append(Arrow(tail=base + lvl - 1, head=base + lvl, label=f"A{arrow_no}"))
    return Quiver(dims=tuple(dims), arrows=tuple(arrows))


def _opposite_label(label: str) -> str:
    if label.startswith("A") and len(label) > 1:
        return "B" + label[1:]
    return label + "_op"


def double(q: Quiver) -> DoubleQuiver:
    """Add the reversed arrow for every arrow of ``q``."""
    arrows = list(q.arrows)
    pairs = []
    taken = {a.label for a in arrows}
    for a in q.arrows:
        opp = _opposite_label(a.label)
        if opp in taken:
            raise ValueError(f"opposite label {opp} collides with an existing arrow")
        taken.add(opp)
        arrows.append(Arrow(tail=a.head, head=a.tail, label=opp))
        pairs.append((a.label, opp))
    return DoubleQuiver(dims=q.dims, arrows=tuple(arrows), pairs=tuple(pairs))


def from_connection(c) -> DoubleQuiverRep:
    """Cut covariant connection data into blocks of its chain double.

    The data must satisfy the weight-shift pattern exactly; a nonzero
    entry on a forbidden block raises CovarianceViolationError.
    """
    from .connection import structural_violations

    bad = structural_violations(c)
    if bad:
        raise CovarianceViolationError(
            f"connection data violates the weight-shift pattern at {len(bad)} entries"
        )
    ch = chains(c.decomposition)
    dq = double(chain_quiver(ch))
    mats: dict[str, np.ndarray] = {}
    arrow_no = 0
    for chain in ch.chains:
        for lvl in range(1, len(chain.indices)):
            arrow_no += 1
            lo = list(chain.indices[lvl - 1])
            hi = list(chain.indices[lvl])
            mats[f"A{arrow_no}"] = c.a[np.ix_(hi, lo)]
            mats[f"B{arrow_no}"] = c.b[np.ix_(lo, hi)]
    return DoubleQuiverRep(quiver=dq, matrices=mats)


def to_connection(rep: DoubleQuiverRep, decomposition) -> tuple[np.ndarray, np.ndarray]:
    """Reassemble the (A, B) pair of a chain-double representation.

    Inverse of :func:`from_connection` for the grading that produced the
    representation; returns plain matrices.
    """
    ch = chains(decomposition)
    n = decomposition.dim
    a = np.zeros((n, n), dtype=complex)
    b = np.zeros((n, n), dtype=complex)
    arrow_no = 0
    for chain in ch.chains:
        for lvl in range(1, len(chain.indices)):
            arrow_no += 1
            lo = list(chain.indices[lvl - 1])
            hi = list(chain.indices[lvl])
            a[np.ix_(hi, lo)] = rep.matrices[f"A{arrow_no}"]
            b[np.ix_(lo, hi)] = rep.matrices[f"B{arrow_no}"]
    return a, b


def moment_map(rep: DoubleQuiverRep, convention: str = "paper") -> list[np.ndarray]:
    """Per-vertex moment map of a double-quiver representation.

    ``convention="paper"`` sums over every arrow of the double (vanishes
    identically); ``convention="standard"`` sums over original arrows
    only and transforms equivariantly under the gauge action.
    """
    if convention not in MOMENT_CONVENTIONS:
        raise ValueError(f"convention must be one of {MOMENT_CONVENTIONS}")
    dq = rep.quiver
    arrows = dq.arrows if convention == "paper" else dq.originals
    out = [np.zeros((d, d), dtype=complex) for d in dq.dims]
    for a in arrows:
        x = rep.matrices[a.label]
        xbar = rep.matrices[dq.opposite(a.label)]
        out[a.head] += x @ xbar
        out[a.tail] -= xbar @ x
    return out


def gauge_action(rep: DoubleQuiverRep, gs) -> DoubleQuiverRep:
    """Change of basis at every vertex: ``x_a -> g_head x_a g_tail^{-1}``."""
    dq = rep.quiver
    mats = [as_matrix(g, square=True) for g in gs]
    if len(mats) != len(dq.dims):
        raise DimensionMismatchError(f"need {len(dq.dims)} gauge matrices, got {len(mats)}")
    for v, (g, d) in enumerate(zip(mats, dq.dims)):
        if g.shape[0] != d:
            raise DimensionMismatchError(f"gauge at vertex {v} must be {d}x{d}, got {g.shape}")
    invs = [invert(g) for g in mats]
    new = {
        a.label: mats[a.head] @ rep.matrices[a.label] @ invs[a.tail]
        for a in dq.arrows
    }
    return DoubleQuiverRep(quiver=dq, matrices=new)


def canonical_rotation(word: tuple[str, ...]) -> tuple[str, ...]:
    """Lexicographically least rotation of an arrow-label word."""
    return min(word[i:] + word[:i] for i in range(len(word)))


def enumerate_cycles(dq: DoubleQuiver, max_len: int) -> list[tuple[str, ...]]:
    """Canonical words of all closed oriented paths with length <= max_len.

    Closed paths that traverse a loop several times count (their words
    are distinct); rotations of one word are identified.  Output is
    sorted by length, then lexicographically.
    """
    if max_len < 1:
        return []
    outgoing: dict[int, list[Arrow]] = {v: [] for v in range(len(dq.dims))}
    for a in dq.arrows:
        outgoing[a.tail].append(a)
    for v in outgoing:
        outgoing[v].sort(key=lambda a: a.label)
    found: set[tuple[str, ...]] = set()

    def walk(start: int, here: int, word: list[str]) -> None:
        for a in outgoing[here]:
            word.append(a.label)
            if a.head == start:
                found.add(canonical_rotation(tuple(word)))
            if len(word) < max_len:
                walk(start, a.head, word)
            word.pop()

    for start in range(len(dq.dims)):
        walk(start, start, [])
    return sorted(found, key=lambda w: (len(w), w))


def default_max_len(rep: DoubleQuiverRep) -> int:
    """Default cycle-length bound: min(total dimension squared, cap)."""
    return min(rep.total_dim**2, MAX_LEN_CAP)


@dataclass(eq=False)
class InvariantVector:
    """Cycle-word traces of a representation, keyed by canonical word."""

    max_len: int
    entries: dict[tuple[str, ...], complex]


def cycle_trace(rep: DoubleQuiverRep, word: tuple[str, ...]) -> complex:
    """Trace of the matrix product along a closed path given by arrow labels."""
    dq = rep.quiver
    first = dq.arrow(word[0])
    m = np.eye(dq.dims[first.tail], dtype=complex)
    here = first.tail
    for label in word:
        a = dq.arrow(label)
        if a.tail != here:
            raise ValueError(f"word {word} is not a path at label {label}")
        m = rep.matrices[label] @ m
        here = a.head
    if here != first.tail:
        raise ValueError(f"word {word} is not closed")
    return complex(np.trace(m))


def invariants(rep: DoubleQuiverRep, max_len: int | None = None) -> InvariantVector:
    """Traces along every canonical cycle word up to ``max_len``.

    These are invariant under the gauge action at every vertex.
    """
    if max_len is None:
        max_len = default_max_len(rep)
    words = enumerate_cycles(rep.quiver, max_len)
    return InvariantVector(
        max_len=max_len,
        entries={w: cycle_trace(rep, w) for w in words},
    )


@dataclass(frozen=True, eq=False)
class EquivalenceCertificate:
    """Outcome of comparing trace invariants of two representations.

    ``distinct`` is conclusive: some cycle trace differs beyond
    tolerance.  ``indistinguishable`` only says no difference was seen up
    to ``max_len``; it is not a proof of equivalence.
    """

    verdict: str
    max_len: int
    witness: tuple[str, ...] | None = None
    left_trace: complex | None = None
    right_trace: complex | None = None

    @property
    def distinct(self) -> bool:
        return self.verdict == "distinct"


def equivalence_certificate(
    r1: DoubleQuiverRep,
    r2: DoubleQuiverRep,
    max_len: int | None = None,
    tol: float = DEFAULT_TOL,
) -> EquivalenceCertificate:
    """Compare cycle traces of two representations of one double quiver.

    A trace difference above ``tol * max(|t1|, |t2|, 1)`` yields verdict
    ``distinct`` with the first such cycle in canonical order as witness;
    otherwise the verdict is ``indistinguishable`` at the used max_len.
    """
    if not same_quiver(r1.quiver, r2.quiver):
        raise QuiverMismatchError("representations live on different double quivers")
    if max_len is None:
        max_len = min(default_max_len(r1), default_max_len(r2))
    v1 = invariants(r1, max_len)
    v2 = invariants(r2, max_len)
    for word, t1 in v1.entries.items():
        t2 = v2.entries[word]
        if abs(t1 - t2) > tol * max(abs(t1), abs(t2), 1.0):
            return EquivalenceCertificate(
                verdict="distinct",
                max_len=max_len,
                witness=word,
                left_trace=t1,
                right_trace=t2,
            )
    return EquivalenceCertificate(verdict="indistinguishable", max_len=max_len)


def invariant_distance(v1: InvariantVector, v2: InvariantVector) -> float:
    """Sup-norm distance between two invariant vectors on the same cycles."""
    if set(v1.entries) != set(v2.entries):
        raise QuiverMismatchError("invariant vectors cover different cycle sets")
    if not v1.entries:
        return 0.0
    return max(abs(v1.entries[w] - v2.entries[w]) for w in v1.entries)
