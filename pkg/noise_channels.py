"""
Time-dependent non-Markovian noise channels on a d-dimensional walker, built from Weyl operators.

    rtn   random telegraph noise, unital:       K1 = sqrt((1+L)/2) U_00, K2 = sqrt((1-L)/2) U_10
    oun   Ornstein-Uhlenbeck noise, unital:     same form with the decay P(t)
    nmad  amplitude damping, non-unital:        K1 = |0><0| + sqrt(1-l) sum_j |j><j|, Kj = sqrt(l) |0><j|

Time is the integer walk step.
"""
import logging
from dataclasses import dataclass
from enum import Enum

import numpy as np

from exceptions import InvalidArgumentError, NumericDomainError
from utilites import max_entry_norm, read_only

logger = logging.getLogger(__name__)

DOMAIN_SLACK = 1e-9


class NoiseFamily(str, Enum):
    NONE = "none"
    RTN = "rtn"
    OUN = "oun"
    NMAD = "nmad"


@dataclass(frozen=True)
class NoiseSpec:
    """
    A channel family and its parameters. Defaults are the parameters used in the noisy transfer study.
    :param rtn_a: RTN coupling strength
    :param rtn_gamma: RTN fluctuation rate
    :param oun_lambda: OUN relaxation parameter
    :param oun_gamma: OUN noise bandwidth
    :param nmad_g: NMAD spectral width
    :param nmad_gamma: NMAD spontaneous emission rate
    """
    family: NoiseFamily = NoiseFamily.NONE
    rtn_a: float = 0.1
    rtn_gamma: float = 0.01
    oun_lambda: float = 1.0
    oun_gamma: float = 0.05
    nmad_g: float = 0.001
    nmad_gamma: float = 5.0

    def __post_init__(self):
        object.__setattr__(self, "family", NoiseFamily(self.family))
        for name, value in self.active_parameters().items():
            if not value > 0:
                raise InvalidArgumentError(f"{name} must be positive, got {value}")

    def active_parameters(self):
        return {
            NoiseFamily.NONE: {},
            NoiseFamily.RTN: {"rtn.a": self.rtn_a, "rtn.gamma": self.rtn_gamma},
            NoiseFamily.OUN: {"oun.lambda": self.oun_lambda, "oun.gamma": self.oun_gamma},
            NoiseFamily.NMAD: {"nmad.g": self.nmad_g, "nmad.gamma": self.nmad_gamma},
        }[self.family]

    @property
    def is_non_markovian(self):
        """RTN shows information backflow only when a / gamma > 0.5; the other two families always carry memory."""
        if self.family == NoiseFamily.RTN:
            return self.rtn_a / self.rtn_gamma > 0.5
        return self.family != NoiseFamily.NONE

    def kraus(self, t, d):
        if self.family == NoiseFamily.RTN:
            return rtn_kraus(self, t, d)
        if self.family == NoiseFamily.OUN:
            return oun_kraus(self, t, d)
        if self.family == NoiseFamily.NMAD:
            return nmad_kraus(self, t, d)
        return KrausSet((read_only(np.eye(d, dtype=complex)),), t)


@dataclass(frozen=True)
class KrausSet:
    operators: tuple
    t: float

    @property
    def dim(self):
        return self.operators[0].shape[0]


def weyl(u, v, d):
    """
    Weyl operator U_uv = sum_k exp(2 pi i k u / d) |k><(k+v) mod d|.
    U_00 is the identity, U_10 the generalized Pauli Z and U_01 the generalized Pauli X.
    :return: d x d complex unitary
    """
    if d < 1 or not (0 <= u < d and 0 <= v < d):
        raise InvalidArgumentError(f"Weyl indices ({u}, {v}) are outside [0, {d})")
    k = np.arange(d)
    operator = np.zeros((d, d), dtype=complex)
    operator[k, (k + v) % d] = np.exp(2j * np.pi * k * u / d)
    return operator


def check_time(t):
    if t < 0:
        raise InvalidArgumentError(f"channel time must be non-negative, got {t}")


def clamp(value, low, high, name):
    if not np.isfinite(value):
        raise NumericDomainError(f"{name} is not finite ({value})")
    if value < low - DOMAIN_SLACK or value > high + DOMAIN_SLACK:
        raise NumericDomainError(f"{name} = {value:.12g} is outside [{low}, {high}]")
    if not low <= value <= high:
        logger.warning("%s = %.17g clamped into [%s, %s]", name, value, low, high)
    return min(max(value, low), high)


def damped_hyperbolic(rate, decay, x):
    """
    exp(-decay x) cosh(rate x) and exp(-decay x) sinh(rate x) for 0 <= rate <= decay,
    written with non-positive exponents only, so a long horizon cannot overflow.
    :return: (damped cosh, damped sinh)
    """
    slow = np.exp((rate - decay) * x)
    fast = np.exp(-(rate + decay) * x)
    return (slow + fast) / 2.0, (slow - fast) / 2.0


def rtn_decay(a, gamma, t):
    """
    Lambda(t) = exp(-gamma t) [cos(nu gamma t) + sin(nu gamma t) / nu], nu = sqrt((2a/gamma)^2 - 1).
    An imaginary nu = i mu switches to cosh/sinh; nu = 0 is the limit 1 + gamma t.
    """
    check_time(t)
    radicand = (2.0 * a / gamma) ** 2 - 1.0
    if radicand > 0:
        nu = np.sqrt(radicand)
        value = np.exp(-gamma * t) * (np.cos(nu * gamma * t) + np.sin(nu * gamma * t) / nu)
    elif radicand < 0:
        # mu < 1, so exp(-gamma t) bounds both hyperbolic terms
        mu = np.sqrt(-radicand)
        cosh, sinh = damped_hyperbolic(mu, 1.0, gamma * t)
        value = cosh + sinh / mu
    else:
        value = np.exp(-gamma * t) * (1.0 + gamma * t)
    return clamp(float(value), -1.0, 1.0, "RTN Lambda(t)")


def oun_decay(lam, gamma, t):
    """
    P(t) = exp(-(lambda/2) (t + (exp(-gamma t) - 1) / gamma)).
    """
    check_time(t)
    exponent = -(lam / 2.0) * (t + (np.exp(-gamma * t) - 1.0) / gamma)
    return clamp(float(np.exp(exponent)), 0.0, 1.0, "OUN P(t)")


def nmad_decay(g, gamma, t):
    """
    lambda(t) = 1 - exp(-g t) [(g/l) sinh(l t / 2) + cosh(l t / 2)]^2, l = sqrt(g^2 - 2 gamma g).
    An imaginary l switches to sin/cos; l = 0 is the limit 1 + g t / 2.
    """
    check_time(t)
    radicand = g * g - 2.0 * gamma * g
    if radicand > 0:
        # l < g, so exp(-g t / 2) bounds both hyperbolic terms
        l = np.sqrt(radicand)
        cosh, sinh = damped_hyperbolic(l, g, t / 2.0)
        damped = (g / l) * sinh + cosh
    elif radicand < 0:
        l = np.sqrt(-radicand)
        damped = np.exp(-g * t / 2.0) * ((g / l) * np.sin(l * t / 2.0) + np.cos(l * t / 2.0))
    else:
        damped = np.exp(-g * t / 2.0) * (1.0 + g * t / 2.0)
    return clamp(float(1.0 - damped ** 2), 0.0, 1.0, "NMAD lambda(t)")


def dephasing_pair(decay, t, d):
    return KrausSet(
        (
            read_only(np.sqrt((1.0 + decay) / 2.0) * weyl(0, 0, d)),
            read_only(np.sqrt((1.0 - decay) / 2.0) * weyl(1 % d, 0, d)),
        ),
        t,
    )


def rtn_kraus(spec, t, d):
    """
    Random telegraph noise Kraus pair at time t.
    :param spec: NoiseSpec carrying rtn_a and rtn_gamma
    :param t: time in walk steps
    :param d: walker dimension
    :return: KrausSet
    """
    if not (spec.rtn_a > 0 and spec.rtn_gamma > 0):
        raise InvalidArgumentError("RTN parameters must be positive")
    return dephasing_pair(rtn_decay(spec.rtn_a, spec.rtn_gamma, t), t, d)


def oun_kraus(spec, t, d):
    if not (spec.oun_lambda > 0 and spec.oun_gamma > 0):
        raise InvalidArgumentError("OUN parameters must be positive")
    return dephasing_pair(oun_decay(spec.oun_lambda, spec.oun_gamma, t), t, d)


def nmad_kraus(spec, t, d):
    """
    Non-Markovian amplitude damping towards |0>: d operators.
    """
    if not (spec.nmad_g > 0 and spec.nmad_gamma > 0):
        raise InvalidArgumentError("NMAD parameters must be positive")
    lam = nmad_decay(spec.nmad_g, spec.nmad_gamma, t)

    first = np.diag(np.r_[1.0, np.full(d - 1, np.sqrt(1.0 - lam))]).astype(complex)
    operators = [read_only(first)]
    for j in range(1, d):
        jump = np.zeros((d, d), dtype=complex)
        jump[0, j] = np.sqrt(lam)
        operators.append(read_only(jump))
    return KrausSet(tuple(operators), t)


def apply_channel(kraus, state):
    """
    Operator-sum action sum_i K_i rho K_i^dagger. A pure state is promoted to |psi><psi| first.
    :param kraus: KrausSet
    :param state: pure state vector or density matrix
    :return: density matrix
    """
    state = np.asarray(state, dtype=complex)
    if state.shape[0] != kraus.dim:
        raise InvalidArgumentError(f"state dimension {state.shape[0]} does not match channel dimension {kraus.dim}")
    rho = np.outer(state, state.conj()) if state.ndim == 1 else state
    output = np.zeros_like(rho)
    for operator in kraus.operators:
        output += operator @ rho @ operator.conj().T
    return output


def validate_cptp(kraus):
    """
    Completeness residual max|sum_i K_i^dagger K_i - I|.
    """
    total = sum(operator.conj().T @ operator for operator in kraus.operators)
    return max_entry_norm(total - np.eye(kraus.dim))
