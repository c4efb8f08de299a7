"""Physical constants used across the package (SI, CODATA via scipy)."""

from scipy.constants import (
    Boltzmann as KB,            # J/K
    elementary_charge as QE,    # C
    hbar as HBAR,               # J*s
    mu_0 as MU0,                # T*m/A
    physical_constants,
)

# Electron gyromagnetic ratio, rad/(s*T).  LLG torque terms use GAMMA*MU0*H
# with H in A/m.
GAMMA = physical_constants["electron gyromag. ratio"][0]

# Saturating cap applied to every exp() exponent in closed-form rate /
# retention expressions.  exp(700) is just below the float64 overflow limit;
# values at the cap mean "effectively infinite / zero" and stay finite.
EXP_CAP = 700.0
