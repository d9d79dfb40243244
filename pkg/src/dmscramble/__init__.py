"""Exact-diagonalization study of information scrambling on thermal
spin-1/2 chains with Dzyaloshinskii-Moriya interaction."""

__version__ = "0.1.0"

from .hamiltonian import ChainConfig, build_dm, build_ising, evolution_hamiltonian
from .linalg import (
    FIDELITY_CONVENTION,
    NumericalError,
    eigh,
    psd_sqrt,
    uhlmann_fidelity,
    unitary_propagator,
)
from .operators import pauli, site_operator, two_site_term
from .otoc import (
    OtocSeries,
    TimeGrid,
    butterfly_operators,
    heisenberg_evolve,
    conjugated_pair,
    otoc_f,
    otoc_series,
    scrambling_time,
)
from .thermal import check_density_matrix, gibbs_state, purity
from .experiment import (
    ModelSelectionReport,
    SweepResult,
    SweepSpec,
    model_selection_report,
    read_csv,
    render_svg,
    run_sweep,
    write_csv,
)

__all__ = [
    "ChainConfig",
    "FIDELITY_CONVENTION",
    "ModelSelectionReport",
    "NumericalError",
    "OtocSeries",
    "SweepResult",
    "SweepSpec",
    "TimeGrid",
    "build_dm",
    "build_ising",
    "butterfly_operators",
    "check_density_matrix",
    "conjugated_pair",
    "eigh",
    "evolution_hamiltonian",
    "gibbs_state",
    "heisenberg_evolve",
    "model_selection_report",
    "otoc_f",
    "otoc_series",
    "pauli",
    "psd_sqrt",
    "purity",
    "read_csv",
    "render_svg",
    "run_sweep",
    "scrambling_time",
    "site_operator",
    "two_site_term",
    "uhlmann_fidelity",
    "unitary_propagator",
    "write_csv",
]
