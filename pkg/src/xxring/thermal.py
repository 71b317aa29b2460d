"""Gibbs-state observables and the nearest-neighbor reduced density matrix.

All Boltzmann weights are computed from energies shifted by the global ground
energy, so temperatures down to 1e-3 are safe. T = 0 is a separate code path
(uniform mixture over the degenerate ground subspace), never a large-beta
limit: at level crossings the limit state is the degenerate mixture, and
beta ~ 1e6 exponentials are ill-conditioned anyway.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .eigensolver import SectorSpectrum, Spectrum


class NonAdjacentPairError(ValueError):
    """Reduced densities are only offered for ring bonds; anything else is
    available solely through the brute-force partial-trace oracle in tests."""


@dataclass(frozen=True)
class ThermalObservables:
    """Observables of the Gibbs state at temperature t (k_B = 1).

    log_z_shifted is ln sum_n exp(-(E_n - E0)/t); the true ln Z is recovered
    as log_z_shifted - E0/t. g_xx and g_zz are the nearest-neighbor
    correlators on the canonical bond (0, 1).
    """

    t: float
    log_z_shifted: float
    u: float
    m: float
    g_xx: float
    g_zz: float


@dataclass(frozen=True)
class PairDensity:
    """The four real parameters of the symmetric X-form two-qubit state."""

    u_plus: float
    u_minus: float
    w: float
    z: float

    def matrix(self) -> np.ndarray:
        """Dense 4x4 matrix in the basis {|00>, |01>, |10>, |11>}."""
        return np.array([
            [self.u_plus, 0.0, 0.0, 0.0],
            [0.0, self.w, self.z, 0.0],
            [0.0, self.z, self.w, 0.0],
            [0.0, 0.0, 0.0, self.u_minus],
        ])


def _require_adjacent(n: int, pair: tuple[int, int]) -> tuple[int, int]:
    i, j = pair
    if not (0 <= i < n and 0 <= j < n):
        raise ValueError(f"pair {pair} out of range for {n} sites")
    if i == j or (j - i) % n not in (1, n - 1):
        raise NonAdjacentPairError(f"pair {pair} is not a ring bond for n={n}")
    return i, j


def _boltzmann(spectrum: Spectrum, t: float) -> tuple[list[np.ndarray], float]:
    if not t > 0:
        raise ValueError("temperature must be positive; use ground_state_reduced at T = 0")
    e0 = spectrum.ground_energy
    weights = [np.exp(-(sec.eig.values - e0) / t) for sec in spectrum.sectors]
    z_shifted = float(sum(w.sum() for w in weights))
    if not math.isfinite(z_shifted) or z_shifted < 1.0:
        raise FloatingPointError(f"non-finite shifted partition sum at t={t}")
    return weights, z_shifted


def _zz_expectations(sec: SectorSpectrum, i: int, j: int) -> np.ndarray:
    """<v_k| sigma_z(i) sigma_z(j) |v_k> for every eigenvector of the sector."""
    labels = np.fromiter(sec.basis.labels, dtype=np.int64, count=len(sec.basis))
    diag = (1 - 2 * ((labels >> i) & 1)) * (1 - 2 * ((labels >> j) & 1))
    return np.einsum("lk,l,lk->k", sec.eig.vectors, diag.astype(float), sec.eig.vectors)


def _flipflop_expectations(sec: SectorSpectrum, i: int, j: int) -> np.ndarray:
    """<v_k| sigma_x(i) sigma_x(j) |v_k> for every eigenvector of the sector.

    Only the magnetization-preserving part of sigma_x sigma_x (the 01 <-> 10
    swap) has matrix elements inside a sector, so this is exact for states
    that commute with sum(sigma_z).
    """
    mask = (1 << i) | (1 << j)
    rows, cols = [], []
    index = sec.basis.index
    for label in sec.basis.labels:
        if ((label >> i) & 1) and not ((label >> j) & 1):
            rows.append(index[label])
            cols.append(index[label ^ mask])
    if not rows:
        return np.zeros(sec.eig.vectors.shape[1])
    return 2.0 * np.einsum("lk,lk->k", sec.eig.vectors[rows, :], sec.eig.vectors[cols, :])


def correlator_xx_direct(spectrum: Spectrum, t: float, bond: tuple[int, int] = (0, 1)) -> float:
    """Thermal <sigma_x(i) sigma_x(j)> on a ring bond, from the sector spectra."""
    i, j = _require_adjacent(spectrum.params.n, bond)
    weights, z_shifted = _boltzmann(spectrum, t)
    acc = 0.0
    for sec, w in zip(spectrum.sectors, weights):
        acc += float(_flipflop_expectations(sec, i, j) @ w)
    return acc / z_shifted


def _correlator_zz(spectrum: Spectrum, weights, z_shifted, i: int, j: int) -> float:
    acc = 0.0
    for sec, w in zip(spectrum.sectors, weights):
        acc += float(_zz_expectations(sec, i, j) @ w)
    return acc / z_shifted


def observables(spectrum: Spectrum, t: float) -> ThermalObservables:
    """Partition data, internal energy, magnetization, and bond correlators.

    U and M are spectral sums (sum of E_n resp. sector sum(sigma_z) against
    Boltzmann weights), not symbolic derivatives of Z.
    """
    weights, z_shifted = _boltzmann(spectrum, t)
    u = sum(float(sec.eig.values @ w) for sec, w in zip(spectrum.sectors, weights)) / z_shifted
    m = sum(sec.sz * float(w.sum()) for sec, w in zip(spectrum.sectors, weights)) / z_shifted
    if spectrum.params.n > 1:
        g_zz = _correlator_zz(spectrum, weights, z_shifted, 0, 1)
        g_xx = correlator_xx_direct(spectrum, t, (0, 1))
    else:
        g_zz = g_xx = 0.0  # a single site has no bond
    out = ThermalObservables(t=t, log_z_shifted=math.log(z_shifted),
                             u=u, m=m, g_xx=g_xx, g_zz=g_zz)
    if not all(math.isfinite(v) for v in (out.u, out.m, out.g_xx, out.g_zz)):
        raise FloatingPointError(f"non-finite thermal observable at t={t}")
    return out


def gxx_from_energy(obs: ThermalObservables, params) -> float:
    """Transverse correlator from energy and magnetization alone:
    (U/n - b * M/n) / (2 j). Equals the directly computed correlator; the
    relation is undefined at j = 0, where callers must use the direct path."""
    if params.j == 0:
        raise ValueError("relation undefined for j = 0; use correlator_xx_direct")
    return (obs.u / params.n - params.b * obs.m / params.n) / (2.0 * params.j)


def _pair_density(m_bar: float, g_zz: float, g_xx: float) -> PairDensity:
    # w is fixed by unit trace together with the equal central diagonals.
    return PairDensity(
        u_plus=(1.0 + 2.0 * m_bar + g_zz) / 4.0,
        u_minus=(1.0 - 2.0 * m_bar + g_zz) / 4.0,
        w=(1.0 - g_zz) / 4.0,
        z=g_xx / 2.0,
    )


def reduced_pair_density(spectrum: Spectrum, t: float, pair: tuple[int, int] = (0, 1)) -> PairDensity:
    """Thermal two-qubit reduced density matrix on a ring bond."""
    i, j = _require_adjacent(spectrum.params.n, pair)
    weights, z_shifted = _boltzmann(spectrum, t)
    n = spectrum.params.n
    m = sum(sec.sz * float(w.sum()) for sec, w in zip(spectrum.sectors, weights)) / z_shifted
    g_zz = _correlator_zz(spectrum, weights, z_shifted, i, j)
    g_xx = correlator_xx_direct(spectrum, t, (i, j))
    return _pair_density(m / n, g_zz, g_xx)


def _pattern_probability_expectations(sec: SectorSpectrum, i: int, j: int) -> np.ndarray:
    """Per-eigenvector probabilities of the four pair patterns 00, 01, 10, 11."""
    labels = np.fromiter(sec.basis.labels, dtype=np.int64, count=len(sec.basis))
    pattern = 2 * ((labels >> i) & 1) + ((labels >> j) & 1)
    v2 = sec.eig.vectors ** 2
    out = np.zeros((4, sec.eig.vectors.shape[1]))
    for p in range(4):
        rows = pattern == p
        if rows.any():
            out[p] = v2[rows, :].sum(axis=0)
    return out


def pair_state_probabilities(spectrum: Spectrum, t: float,
                             pair: tuple[int, int] = (0, 1)) -> tuple[float, float, float, float]:
    """Thermal probabilities (p00, p01, p10, p11) of the pair patterns.

    Each probability is a sum of positive terms, so it keeps relative
    accuracy even when exponentially small. The corner populations of the
    X form are (p00, p11); recovering them from magnetization and g_zz
    instead cancels catastrophically in the nearly polarized regime.
    """
    i, j = _require_adjacent(spectrum.params.n, pair)
    weights, z_shifted = _boltzmann(spectrum, t)
    probs = np.zeros(4)
    for sec, w in zip(spectrum.sectors, weights):
        probs += _pattern_probability_expectations(sec, i, j) @ w
    probs /= z_shifted
    return float(probs[0]), float(probs[1]), float(probs[2]), float(probs[3])


def ground_state_reduced(spectrum: Spectrum, pair: tuple[int, int] = (0, 1)) -> PairDensity:
    """Two-qubit reduced density of the T -> 0+ Gibbs limit: the uniform
    mixture over the full degenerate ground subspace."""
    i, j = _require_adjacent(spectrum.params.n, pair)
    states = spectrum.ground_states()
    n = spectrum.params.n
    m_bar = g_zz = g_xx = 0.0
    for sec, k in states:
        m_bar += sec.sz / n
        g_zz += float(_zz_expectations(sec, i, j)[k])
        g_xx += float(_flipflop_expectations(sec, i, j)[k])
    d = len(states)
    return _pair_density(m_bar / d, g_zz / d, g_xx / d)
