"""Gibbs thermal states (k_B = 1)."""

import numpy as np

from .linalg import eigh

TRACE_TOL = 1e-10
PSD_TOL = 1e-10


def check_density_matrix(rho, name="rho"):
    """Validate Hermiticity, unit trace and positivity of a density matrix."""
    rho = np.asarray(rho, dtype=complex)
    herm = np.abs(rho - rho.conj().T).max()
    if herm > 1e-10:
        raise ValueError(f"{name} not Hermitian: max deviation {herm:.3e}")
    tr = rho.trace()
    if abs(tr - 1.0) > TRACE_TOL:
        raise ValueError(f"{name} trace {tr} differs from 1 beyond {TRACE_TOL}")
    vals, _ = eigh(rho)
    if vals.min() < -PSD_TOL:
        raise ValueError(f"{name} not PSD: min eigenvalue {vals.min():.3e}")
    return rho


def gibbs_state(h, temperature, decomposition=None):
    """Thermal state exp(-H/T) / Tr exp(-H/T).

    Computed in the eigenbasis with the spectrum shifted by its minimum so
    the largest Boltzmann weight is exactly 1 (overflow-free at any T > 0).
    For T far below the spectral gap the excited weights underflow to 0 and
    the result is the ground-manifold projector, which is the intended limit.
    """
    if temperature <= 0:
        raise ValueError(f"temperature={temperature} must be positive")
    if decomposition is None:
        decomposition = eigh(h)
    vals, vecs = decomposition
    weights = np.exp(-(vals - vals.min()) / temperature)
    weights /= weights.sum()
    rho = (vecs * weights) @ vecs.conj().T
    # re-hermitize to kill rounding drift before the invariant check
    rho = (rho + rho.conj().T) / 2.0
    return check_density_matrix(rho, name="gibbs state")


def purity(rho):
    """Tr rho^2, real (equals sum |rho_ij|^2 for Hermitian rho)."""
    return float(np.vdot(rho, rho).real)
