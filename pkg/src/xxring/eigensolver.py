"""Dense symmetric eigendecompositions for sector blocks and small oracles."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .basis import SectorBasis, embed_in_full_space
from .hamiltonian import ModelParams, build_sector_hamiltonian

_SYMMETRY_RTOL = 1e-12


@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenvalues ascending; vectors[:, k] is the unit eigenvector of values[k]."""

    values: np.ndarray
    vectors: np.ndarray


@dataclass(frozen=True)
class SectorSpectrum:
    sz: int
    basis: SectorBasis
    eig: EigenDecomposition


@dataclass(frozen=True)
class Spectrum:
    """Per-sector eigendecompositions covering the whole 2^n space."""

    params: ModelParams
    sectors: tuple[SectorSpectrum, ...]

    @property
    def ground_energy(self) -> float:
        return min(float(sec.eig.values[0]) for sec in self.sectors)

    def eigenvalues(self) -> np.ndarray:
        """All 2^n eigenvalues, sorted ascending."""
        return np.sort(np.concatenate([sec.eig.values for sec in self.sectors]))

    def ground_states(self, tol: float | None = None) -> list[tuple[SectorSpectrum, int]]:
        """(sector, column) pairs spanning the degenerate ground subspace."""
        e0 = self.ground_energy
        if tol is None:
            tol = 1e-8 * max(1.0, abs(e0))
        hits = []
        for sec in self.sectors:
            for k in np.nonzero(sec.eig.values <= e0 + tol)[0]:
                hits.append((sec, int(k)))
        return hits


def eigh_symmetric(matrix: np.ndarray) -> EigenDecomposition:
    """Diagonalize a dense real symmetric matrix (LAPACK divide and conquer).

    Input must be square and symmetric to 1e-12 relative; convergence failure
    surfaces as numpy.linalg.LinAlgError, which signals numerical pathology.
    """
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    scale = max(1.0, float(np.abs(a).max()))
    if float(np.abs(a - a.T).max()) > _SYMMETRY_RTOL * scale:
        raise ValueError("matrix is not symmetric within tolerance")
    values, vectors = np.linalg.eigh(a)
    values.setflags(write=False)
    vectors.setflags(write=False)
    return EigenDecomposition(values=values, vectors=vectors)


def full_spectrum(params: ModelParams) -> Spectrum:
    """Diagonalize every magnetization sector of the ring."""
    sectors = []
    for r in range(params.n + 1):
        block = build_sector_hamiltonian(params, r)
        sectors.append(SectorSpectrum(sz=block.basis.sz, basis=block.basis,
                                      eig=eigh_symmetric(block.entries)))
    return Spectrum(params=params, sectors=tuple(sectors))


def ground_state_vector(spectrum: Spectrum, tol: float | None = None) -> np.ndarray:
    """Full-space amplitudes of the unique ground state.

    Raises ValueError when the ground level is degenerate; degenerate ground
    spaces have no preferred state and must be handled as mixtures.
    """
    states = spectrum.ground_states(tol)
    if len(states) != 1:
        raise ValueError(f"ground level is {len(states)}-fold degenerate")
    sec, k = states[0]
    return embed_in_full_space(sec.basis, sec.eig.vectors[:, k])
