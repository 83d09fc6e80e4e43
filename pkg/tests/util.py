"""Shared random samplers for the test suite.

Everything is driven by an explicit numpy Generator so tests stay
deterministic; conditioning of invertible draws is bounded so relative
error bounds are meaningful.
"""

from __future__ import annotations

import numpy as np


def cnormal(rng, n, m=None):
    """Complex standard normal matrix, unit entry variance."""
    m = n if m is None else m
    return (rng.standard_normal((n, m)) + 1j * rng.standard_normal((n, m))) / np.sqrt(2.0)


def unitary(rng, n):
    """Haar-ish unitary from a QR factorization with phase fixing."""
    q, r = np.linalg.qr(cnormal(rng, n))
    diag = np.diag(r)
    phases = np.where(np.abs(diag) > 0, diag / np.abs(diag), 1.0)
    return q * phases


def well_conditioned(rng, n):
    """Random invertible matrix with singular values in [1/e, e]."""
    core = np.exp(rng.uniform(-1.0, 1.0, n)) * np.exp(2j * np.pi * rng.uniform(size=n))
    return unitary(rng, n) @ np.diag(core) @ unitary(rng, n)


def disk_invertible(rng, n, bound=1e3):
    """Identity plus unit-disk entries, rejecting condition numbers above bound."""
    for _ in range(64):
        radius = np.sqrt(rng.uniform(0.0, 1.0, (n, n)))
        angle = rng.uniform(0.0, 2.0 * np.pi, (n, n))
        h = np.eye(n) + radius * np.exp(1j * angle)
        if np.linalg.cond(h) <= bound:
            return h
    raise RuntimeError("no well-conditioned draw")


def rel_err(diff, scale):
    """Frobenius norm of diff relative to scale, floored at 1e-14."""
    return float(np.linalg.norm(diff)) / max(float(scale), 1e-14)
