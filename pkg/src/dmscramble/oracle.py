"""Independent verification paths for the test suite.

Everything here deliberately avoids the production propagator and Gibbs
construction: the propagator is a scaling-and-squaring Taylor series, the
thermal state is a direct power series of exp(-H/T), and the end-to-end
check recomposes F(t) from those pieces on tiny chains.
"""

from dataclasses import dataclass

import numpy as np

from .hamiltonian import build_dm, build_ising
from .operators import site_operator, two_site_term


@dataclass(frozen=True)
class OracleReport:
    quantity: str
    primary: float
    oracle: float
    deviation: float
    tolerance: float

    @property
    def passed(self):
        return self.deviation <= self.tolerance


def _series_expm(a, tol):
    """Taylor series for exp(a), assuming ||a|| already scaled below 1."""
    dim = a.shape[0]
    result = np.eye(dim, dtype=complex)
    term = np.eye(dim, dtype=complex)
    for k in range(1, 64):
        term = term @ a / k
        result += term
        if np.abs(term).max() < tol:
            return result
    raise RuntimeError("Taylor series for matrix exponential did not converge")


def _scaled_expm(a, tol):
    """exp(a) by scaling-and-squaring around the Taylor series."""
    norm = np.abs(a).max() * a.shape[0]
    squarings = 0
    while norm > 0.5 and squarings < 64:
        norm /= 2.0
        squarings += 1
    if norm > 0.5:
        raise RuntimeError("matrix too large to scale below Taylor radius")
    result = _series_expm(a / 2**squarings, tol)
    for _ in range(squarings):
        result = result @ result
    return result


def taylor_propagator(h, t, tol=1e-14):
    """exp(-i H t) by scaling-and-squaring Taylor summation."""
    if tol <= 0:
        raise ValueError(f"tol={tol} must be positive")
    h = np.asarray(h, dtype=complex)
    return _scaled_expm(-1j * t * h, tol)


def trotter_propagator(terms, t, m):
    """First-order Trotter product (prod_j exp(-i H_j t/m))^m."""
    if m < 1:
        raise ValueError(f"Trotter steps m={m} must be >= 1")
    dim = terms[0].shape[0]
    step = np.eye(dim, dtype=complex)
    for term in terms:
        step = step @ taylor_propagator(term, t / m)
    result = np.eye(dim, dtype=complex)
    for _ in range(m):
        result = result @ step
    return result


def ising_terms(cfg):
    """Local-term decomposition of the Ising Hamiltonian for Trotter use."""
    n = cfg.n
    terms = [-cfg.j_ising * two_site_term("z", "z", r, n) for r in range(1, n)]
    terms += [-cfg.h_x * site_operator("x", r, n) for r in range(1, n + 1)]
    terms += [
        -cfg.h_z_amp * (-1.0) ** r * site_operator("z", r, n)
        for r in range(1, n + 1)
    ]
    return terms


def _series_gibbs(h, temperature, tol=1e-15):
    """Thermal state by direct power-series summation of exp(-H/T).

    The spectrum is shifted by the largest diagonal bound so the series
    argument stays moderate; the shift cancels in the normalization.
    """
    h = np.asarray(h, dtype=complex)
    shift = float(np.abs(h).sum(axis=1).max())  # Gershgorin bound on |spectrum|
    ex = _scaled_expm(-(h - shift * np.eye(h.shape[0])) / temperature, tol)
    return ex / ex.trace()


def _eig_sqrt_fidelity(rho_a, rho_b):
    """(Tr sqrt(sqrt(rho_a) rho_b sqrt(rho_a)))^2 via raw eigendecompositions."""
    va, ua = np.linalg.eigh((rho_a + rho_a.conj().T) / 2.0)
    sr = (ua * np.sqrt(np.clip(va, 0.0, None))) @ ua.conj().T
    inner = sr @ rho_b @ sr
    vi = np.linalg.eigvalsh((inner + inner.conj().T) / 2.0)
    floor = len(vi) * np.finfo(float).eps * max(vi.max(), 0.0)
    return float(np.sqrt(np.where(vi < floor, 0.0, vi)).sum() ** 2)


def brute_force_otoc(cfg, t):
    """End-to-end F(t) recomputation on tiny chains (n <= 4)."""
    if cfg.n > 4:
        raise ValueError(f"brute-force oracle capped at n=4, got {cfg.n}")
    rho_i = _series_gibbs(build_dm(cfg), cfg.temperature)
    if cfg.evolution_model == "ising":
        h_ev = build_ising(cfg)
    elif cfg.evolution_model == "dm":
        h_ev = build_dm(cfg)
    else:
        h_ev = build_ising(cfg) + build_dm(cfg)
    v = site_operator("x", 1, cfg.n)
    w = site_operator("x", cfg.n, cfg.n)
    u = taylor_propagator(h_ev, t)
    w_t = u.conj().T @ w @ u
    rho_a = w_t @ v @ rho_i @ v.conj().T @ w_t.conj().T
    rho_b = v @ w_t @ rho_i @ w_t.conj().T @ v.conj().T
    f = _eig_sqrt_fidelity(rho_a, rho_b)
    return float(np.sqrt(min(max(f, 0.0), 1.0)))
