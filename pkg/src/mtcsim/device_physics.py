"""Closed-form compact model of the voltage-controlled SOT junction.

Anisotropy, thermal stability, retention, switching rate, RC voltage
evolution and the SOT-biased state distribution.  All quantities SI; the
shape-anisotropy term uses the SI form (mu0/2)*(Nz-Ny)*Ms^2 (the Gaussian
2*pi*(Nz-Ny)*Ms^2 equivalent).  All functions are pure; parameter objects
are immutable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

from scipy.special import expit

from .constants import EXP_CAP, KB, MU0
from . import kvconfig
from .kvconfig import ConfigError


def _capped_exp(x: float) -> float:
    """exp() with the exponent saturated to +-EXP_CAP (documented sentinel).

    Results at the cap (~1e304 / ~1e-304) mean "effectively infinite /
    effectively zero" while keeping downstream arithmetic finite.
    """
    return math.exp(min(max(x, -EXP_CAP), EXP_CAP))


@dataclass(frozen=True)
class MaterialParams:
    """Physical constants of one device stack.

    Ms        saturation magnetization [A/m]
    Ki        interfacial PMA coefficient [J/m^2]
    xi        VCMA coefficient [J/(V*m)]; positive = anisotropy falls with V
    t_fl      free-layer thickness [m]
    A         junction area [m^2]
    Nx,Ny,Nz  demagnetization factors, sum to 1
    alpha     Gilbert damping
    theta_sot spin Hall angle
    T         temperature [K]
    tau0      attempt time [s]
    """

    Ms: float
    Ki: float
    xi: float
    t_fl: float
    A: float
    Nx: float
    Ny: float
    Nz: float
    alpha: float
    theta_sot: float
    T: float
    tau0: float

    def __post_init__(self) -> None:
        for name in ("Ms", "t_fl", "A", "T", "tau0"):
            if not getattr(self, name) > 0:
                raise ValueError(f"MaterialParams.{name} must be > 0")
        if abs(self.Nx + self.Ny + self.Nz - 1.0) > 1e-9:
            raise ValueError("demagnetization factors must sum to 1 (within 1e-9)")
        if not 0.0 < self.alpha <= 1.0:
            raise ValueError("alpha must be in (0, 1]")


@dataclass(frozen=True)
class BehavioralParams:
    """Fitted constants of the closed-form stochastic-switching tier.

    alpha1     base switching rate [1/s]
    alpha2     voltage sensitivity [1/V]; rate increases with V
    beta       inverse RC time [1/s], must equal 1/(R*C)
    gamma1     bias offset (dimensionless logit)
    gamma2     bias-current sensitivity [1/A]
    V0         equilibrium junction voltage [V]
    R          junction resistance [ohm]
    C          junction capacitance [F]
    V_ref      voltage at which gamma1/gamma2 were calibrated [V]
    delta_ref  thermal stability at V_ref (sets how the bias sharpens as
               V, i.e. the effective temperature, drops)
    """

    alpha1: float
    alpha2: float
    beta: float
    gamma1: float
    gamma2: float
    V0: float
    R: float
    C: float
    V_ref: float
    delta_ref: float

    def __post_init__(self) -> None:
        for name in ("alpha1", "alpha2", "R", "C", "delta_ref"):
            if not getattr(self, name) > 0:
                raise ValueError(f"BehavioralParams.{name} must be > 0")
        rc_rate = 1.0 / (self.R * self.C)
        if abs(self.beta - rc_rate) > 1e-12 * rc_rate:
            raise ValueError("beta must equal 1/(R*C) within 1e-12 relative")


def effective_ki(p: MaterialParams, V: float) -> float:
    """Voltage-modulated interfacial anisotropy, Ki - xi*V/t_fl [J/m^2]."""
    return p.Ki - p.xi * V / p.t_fl


def thermal_stability(p: MaterialParams, V: float) -> float:
    """Energy barrier in units of kB*T; affine in V, may be negative.

    Combines the voltage-modulated interfacial PMA with the thin-film
    shape-anisotropy penalty (mu0/2)*(Nz-Ny)*Ms^2*t_fl.
    """
    k_shape = 0.5 * MU0 * (p.Nz - p.Ny) * p.Ms**2 * p.t_fl
    return (effective_ki(p, V) - k_shape) * p.A / (KB * p.T)


def retention_time(p: MaterialParams, V: float, H_B: float = 0.0) -> float:
    """Mean state lifetime tau0*exp(Delta(V) - mu0*Ms*H_B*t_fl*A/(kB*T)) [s].

    H_B >= 0 is a barrier-lowering bias field.  The exponent saturates at
    +-700: a result of tau0*exp(700) means "retains effectively forever".
    """
    zeeman = MU0 * p.Ms * H_B * p.t_fl * p.A / (KB * p.T)
    return p.tau0 * _capped_exp(thermal_stability(p, V) - zeeman)


def switching_rate(b: BehavioralParams, V: float) -> float:
    """Average switching frequency alpha1*exp(alpha2*V) [1/s].

    Sign convention: the rate grows with voltage (retention falls), so
    alpha2 > 0.
    """
    return b.alpha1 * _capped_exp(b.alpha2 * V)


def rc_decay(V_init: float, V0: float, beta: float, t: float) -> float:
    """First-order relaxation V0 + (V_init - V0)*exp(-beta*t)."""
    if t < 0:
        raise ValueError("t must be >= 0")
    return V0 + (V_init - V0) * math.exp(-beta * t)


def junction_voltage(b: BehavioralParams, V_init: float, t: float) -> float:
    """Junction voltage at time t for an initial charge V_init [V].

    Closed-form solution of dV/dt = -beta*(V - V0); monotone toward V0.
    """
    return rc_decay(V_init, b.V0, b.beta, t)


def bias_beta_eff(b: BehavioralParams, V: float) -> float:
    """Sharpness of the state bias at voltage V, Delta(V)/Delta(V_ref).

    Delta is affine in V with slope -alpha2, so the ratio needs only the
    calibrated delta_ref.  Clamped below at 0 (past the barrier-collapse
    voltage the device is fully thermalized and the bias vanishes).
    """
    return max(0.0, 1.0 - b.alpha2 * (V - b.V_ref) / b.delta_ref)


def bias_probability(b: BehavioralParams, I: float, V: float) -> float:
    """Stationary probability of the AP state under SOT current I at V.

    logistic(beta_eff(V) * (gamma1 + gamma2*I)); the odds
    P_AP/(1-P_AP) = exp(beta_eff*(gamma1 + gamma2*I)).  P_P = 1 - P_AP.
    """
    return float(expit(bias_beta_eff(b, V) * (b.gamma1 + b.gamma2 * I)))


# ---------------------------------------------------------------------------
# Parameter-file loading (flat key-value format, docs/params.md)
# ---------------------------------------------------------------------------

_MATERIAL_KEYS = {
    "material.Ms": "Ms",
    "material.Ki": "Ki",
    "material.xi": "xi",
    "material.t_fl": "t_fl",
    "material.A": "A",
    "material.Nx": "Nx",
    "material.Ny": "Ny",
    "material.Nz": "Nz",
    "material.alpha": "alpha",
    "material.theta_sot": "theta_sot",
    "material.T": "T",
    "material.tau0": "tau0",
}

_BEHAVIORAL_KEYS = {
    "behavioral.alpha1": "alpha1",
    "behavioral.alpha2": "alpha2",
    "behavioral.beta": "beta",
    "behavioral.gamma1": "gamma1",
    "behavioral.gamma2": "gamma2",
    "behavioral.V0": "V0",
    "behavioral.R": "R",
    "behavioral.C": "C",
    "behavioral.V_ref": "V_ref",
    "behavioral.delta_ref": "delta_ref",
}


def material_from_pairs(pairs: dict[str, str], source: str = "params") -> MaterialParams:
    kwargs = {field: kvconfig.as_float(pairs, key, source) for key, field in _MATERIAL_KEYS.items()}
    return MaterialParams(**kwargs)


def behavioral_from_pairs(pairs: dict[str, str], source: str = "params") -> BehavioralParams:
    kwargs = {field: kvconfig.as_float(pairs, key, source) for key, field in _BEHAVIORAL_KEYS.items()}
    return BehavioralParams(**kwargs)


def load_material_params(path: str | Path) -> MaterialParams:
    """Load a material parameter set from a flat key-value file."""
    pairs = kvconfig.load_kv_file(path)
    missing = sorted(set(_MATERIAL_KEYS) - set(pairs))
    if missing:
        raise ConfigError(f"{path}: missing material keys: {', '.join(missing)}")
    return material_from_pairs(pairs, source=str(path))


def load_behavioral_params(path: str | Path) -> BehavioralParams:
    """Load a behavioral parameter set from a flat key-value file."""
    pairs = kvconfig.load_kv_file(path)
    missing = sorted(set(_BEHAVIORAL_KEYS) - set(pairs))
    if missing:
        raise ConfigError(f"{path}: missing behavioral keys: {', '.join(missing)}")
    return behavioral_from_pairs(pairs, source=str(path))
