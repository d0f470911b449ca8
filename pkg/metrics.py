"""
Fidelity, time-averaged fidelity and l1-norm coherence of walker states.

A pure state is a 1-D complex array, a mixed state a 2-D density matrix.
"""
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh

from exceptions import InvalidArgumentError, InvalidStateError, NumericDomainError

STATE_TOLERANCE = 1e-10
EIGENVALUE_FLOOR = -1e-10
# eigenvalues below this are round-off from eigh on unit-trace matrices
SPECTRAL_CUTOFF = 1e-13


def validate_pure_state(psi, tol=STATE_TOLERANCE):
    psi = np.asarray(psi)
    if psi.ndim != 1:
        raise InvalidStateError(f"a pure state is a vector, got shape {psi.shape}")
    norm = np.linalg.norm(psi)
    if abs(norm - 1.0) > tol:
        raise InvalidStateError(f"state is not normalized, norm = {norm:.15g}")
    return psi


def validate_density_matrix(rho, tol=STATE_TOLERANCE):
    """
    Checks that rho is square, Hermitian and of unit trace within tol.
    :return: rho as a numpy array
    """
    rho = np.asarray(rho)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise InvalidStateError(f"a density matrix is square, got shape {rho.shape}")
    if np.max(np.abs(rho - rho.conj().T), initial=0.0) > tol:
        raise InvalidStateError("density matrix is not Hermitian")
    trace = np.trace(rho)
    if abs(trace - 1.0) > tol:
        raise InvalidStateError(f"density matrix trace is {trace.real:.15g}, expected 1")
    return rho


def to_density_matrix(state):
    state = np.asarray(state)
    if state.ndim == 1:
        return np.outer(state, state.conj())
    return state


def fidelity_pure(a, b):
    """
    |<a|b>|^2 for two pure states of the same dimension.
    """
    a, b = np.asarray(a), np.asarray(b)
    if a.shape != b.shape:
        raise InvalidArgumentError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return float(np.clip(abs(np.vdot(a, b)) ** 2, 0.0, 1.0))


def psd_sqrt(matrix):
    """
    Square root of a Hermitian positive semidefinite matrix through its eigendecomposition.
    Eigenvalues in [-1e-10, 1e-13) are float noise and are set to zero.
    """
    values, vectors = eigh(matrix)
    if values.size and values.min() < EIGENVALUE_FLOOR:
        raise InvalidStateError(f"matrix has a negative eigenvalue {values.min():.3g}")
    values = np.where(values < SPECTRAL_CUTOFF, 0.0, values)
    return (vectors * np.sqrt(values)) @ vectors.conj().T


def fidelity_mixed(rho, sigma):
    """
    Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2.
    :param rho: density matrix
    :param sigma: density matrix of the same dimension
    :return: float in [0, 1]
    """
    rho = validate_density_matrix(rho)
    sigma = validate_density_matrix(sigma)
    if rho.shape != sigma.shape:
        raise InvalidArgumentError(f"dimension mismatch: {rho.shape} vs {sigma.shape}")
    sqrt_rho = psd_sqrt(rho)
    inner = sqrt_rho @ sigma @ sqrt_rho
    inner = (inner + inner.conj().T) / 2
    values = eigh(inner, eigvals_only=True)
    values = np.where(values < SPECTRAL_CUTOFF, 0.0, values)
    return float(np.clip(np.sum(np.sqrt(values)) ** 2, 0.0, 1.0))


def fidelity_to_pure(rho, psi):
    """
    Fidelity of rho with the pure state psi, which reduces to <psi|rho|psi>.
    """
    rho, psi = np.asarray(rho), np.asarray(psi)
    if rho.shape != (psi.shape[0], psi.shape[0]):
        raise InvalidArgumentError(f"dimension mismatch: {rho.shape} vs {psi.shape}")
    return float(np.clip(np.vdot(psi, rho @ psi).real, 0.0, 1.0))


def coherence_l1(state):
    """
    Sum of the absolute values of the off-diagonal entries. Pure states are promoted to |psi><psi| first.
    """
    rho = to_density_matrix(state)
    magnitudes = np.abs(rho)
    return float(magnitudes.sum() - np.trace(magnitudes))


@dataclass(frozen=True)
class FidelitySeries:
    """
    Fidelity values F_1..F_T; values[0] belongs to t = 1.
    """
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if not np.all(np.isfinite(values)):
            raise NumericDomainError("fidelity values must be finite")
        if values.size and (values.min() < -STATE_TOLERANCE or values.max() > 1.0 + STATE_TOLERANCE):
            raise InvalidStateError("fidelity values must lie in [0, 1]")
        values = np.clip(values, 0.0, 1.0)
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def horizon(self):
        return len(self.values)

    def at(self, t):
        if not 1 <= t <= self.horizon:
            raise InvalidArgumentError(f"t = {t} is outside [1, {self.horizon}]")
        return float(self.values[t - 1])

    @property
    def maximum(self):
        return float(self.values.max())

    @property
    def argmax(self):
        """Earliest t reaching the maximum."""
        return int(np.argmax(self.values)) + 1

    def peak_times(self, threshold):
        return [int(t) + 1 for t in np.flatnonzero(self.values >= threshold)]


def average_fidelity(series):
    """
    Arithmetic mean of F_t over t = 1..T.
    :param series: FidelitySeries or a sequence of fidelity values
    """
    values = series.values if isinstance(series, FidelitySeries) else np.asarray(series, dtype=float)
    if values.size == 0:
        raise InvalidArgumentError("average of an empty fidelity series")
    return float(np.mean(values))
