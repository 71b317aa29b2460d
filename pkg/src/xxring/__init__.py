"""Exact diagonalization of XX qubit rings in a magnetic field.

Sector-blocked spectra, Gibbs-state observables, nearest-neighbor
concurrence, and the even-N multiqubit tangle, with closed-form four-site
oracles and randomized symmetry verification.
"""

from .analytic_n4 import ClosedFormN4, closed_forms
from .basis import SectorBasis, enumerate_sector, lambda_x, lambda_z_sign, translate
from .eigensolver import (
    EigenDecomposition,
    Spectrum,
    eigh_symmetric,
    full_spectrum,
    ground_state_vector,
)
from .entanglement import (
    concurrence_from_correlators,
    concurrence_wootters,
    concurrence_xstate,
    n_tangle,
)
from .experiments import (
    PropositionReport,
    SweepRow,
    ground_state_concurrence,
    level_crossings,
    proposition2_odd_control,
    sweep,
    thermal_concurrence,
    threshold_temperature,
    verify_propositions,
)
from .hamiltonian import ModelParams, SectorMatrix, build_sector_hamiltonian, full_hamiltonian
from .thermal import (
    PairDensity,
    ThermalObservables,
    correlator_xx_direct,
    ground_state_reduced,
    gxx_from_energy,
    observables,
    reduced_pair_density,
)

__version__ = "0.1.0"
