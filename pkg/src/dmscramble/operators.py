"""Pauli operators embedded in the full chain Hilbert space.

Site indices are 1-based; site 1 is the leftmost (most significant)
Kronecker factor. Chains are capped at n = 12 to keep dense 2^n x 2^n
complex matrices within desk-scale memory.
"""

import numpy as np

MAX_SITES = 12

_PAULI = {
    "x": np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex),
    "y": np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex),
    "z": np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex),
}


def pauli(axis):
    """Return the 2x2 Pauli matrix for axis 'x', 'y' or 'z'."""
    try:
        return _PAULI[axis].copy()
    except KeyError:
        raise ValueError(f"unknown Pauli axis {axis!r}, expected 'x', 'y' or 'z'")


def _check_chain(n):
    if not 1 <= n <= MAX_SITES:
        raise ValueError(f"chain length n={n} outside [1, {MAX_SITES}]")


def site_operator(axis, r, n):
    """Pauli operator on site r of an n-site chain.

    Builds I x ... x sigma_axis x ... x I with the Pauli factor at
    position r (1-based from the left).
    """
    _check_chain(n)
    if not 1 <= r <= n:
        raise ValueError(f"site index r={r} outside [1, {n}]")
    sigma = pauli(axis)
    dim_left = 2 ** (r - 1)
    dim_right = 2 ** (n - r)
    op = np.kron(np.eye(dim_left), np.kron(sigma, np.eye(dim_right)))
    return op.astype(complex)


def two_site_term(axis_a, axis_b, k, n):
    """Product sigma^a_k sigma^b_{k+1} on an n-site chain."""
    _check_chain(n)
    if not 1 <= k <= n - 1:
        raise ValueError(f"bond index k={k} outside [1, {n - 1}]")
    return site_operator(axis_a, k, n) @ site_operator(axis_b, k + 1, n)
