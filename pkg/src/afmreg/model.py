"""Static material parameters, control knobs, and the derived scalars.

An easy-axis two-sublattice antiferromagnetic plate is described by its
exchange and anisotropy fields, lattice constants, plate thickness and the
hyperfine constant of the embedded nuclear-spin atoms.  The experimenter's
knobs are the static field B along the easy axis, a transverse microwave
drive at frequency omega, and the temperature.

Conventions: SI units internally (tesla, hertz, meters, kelvin).  All
frequencies are ordinary frequencies, gyromagnetic ratios are in Hz/T, and
energy-to-temperature conversions use the Planck constant h (not hbar).
"""

from dataclasses import dataclass

import numpy as np
from scipy.constants import h as PLANCK_H
from scipy.constants import k as BOLTZMANN_K

from .errors import CriticalityError, PhysicsDomainError

# Free-electron-like gyromagnetic ratio in ordinary-frequency units.
GAMMA_ELECTRON_HZ_PER_T = 176.08e9


@dataclass(frozen=True)
class MaterialSpec:
    """Crystal and plate parameters of the antiferromagnetic substrate.

    exchange_field  B_E [T], anisotropy_field B_A [T] with B_E > B_A >= 0;
    stiffness       xi, dimensionless spin-wave stiffness (xi^2 ~ 1);
    lattice_perp    a_perp [m], in-plane lattice parameter;
    lattice_z       a_z [m], out-of-plane lattice parameter;
    plate_thickness d [m];
    hyperfine       A [Hz], isotropic hyperfine constant (order 100 MHz);
    gamma_e         electron gyromagnetic ratio [Hz/T];
    gamma_n         nuclear gyromagnetic ratio [Hz/T] (only used to build
                    candidate nuclear Zeeman terms, 0 means unspecified).
    """

    exchange_field: float
    anisotropy_field: float
    lattice_perp: float
    lattice_z: float
    plate_thickness: float
    hyperfine: float
    stiffness: float = 1.0
    gamma_e: float = GAMMA_ELECTRON_HZ_PER_T
    gamma_n: float = 0.0

    def __post_init__(self):
        if not self.anisotropy_field >= 0.0:
            raise ValueError(f"anisotropy_field must be >= 0, got {self.anisotropy_field}")
        if not self.exchange_field > self.anisotropy_field:
            raise ValueError(
                "exchange_field must exceed anisotropy_field, got "
                f"B_E={self.exchange_field}, B_A={self.anisotropy_field}"
            )
        for name in ("lattice_perp", "lattice_z", "plate_thickness", "hyperfine",
                     "stiffness", "gamma_e"):
            if not getattr(self, name) > 0.0:
                raise ValueError(f"{name} must be > 0, got {getattr(self, name)}")
        if not self.gamma_n >= 0.0:
            raise ValueError(f"gamma_n must be >= 0, got {self.gamma_n}")


@dataclass(frozen=True)
class ControlPoint:
    """External control parameters: static field, drive frequency, temperature."""

    static_field: float = 0.0    # B [T]
    microwave_freq: float = 0.0  # omega [Hz]; 0 means no drive
    temperature: float = 0.0     # T [K]

    def __post_init__(self):
        if not self.static_field >= 0.0:
            raise ValueError(f"static_field must be >= 0, got {self.static_field}")
        if not self.microwave_freq >= 0.0:
            raise ValueError(f"microwave_freq must be >= 0, got {self.microwave_freq}")
        if not self.temperature >= 0.0:
            raise ValueError(f"temperature must be >= 0, got {self.temperature}")


def critical_field(m: MaterialSpec) -> float:
    """Spin-flop critical field B_C = sqrt(2 B_A B_E + B_A^2) in tesla.

    The lower magnon branch is gapped for B < B_C and goes soft at B_C,
    where the quantum phase transition to the spin-flop phase occurs.
    Zero iff the anisotropy field vanishes.
    """
    return float(np.sqrt(2.0 * m.anisotropy_field * m.exchange_field
                         + m.anisotropy_field ** 2))


def effective_field(m: MaterialSpec, c: ControlPoint) -> float:
    """Rotating-frame effective field B_eff = B + omega / gamma_e in tesla.

    A transverse microwave drive at frequency omega shifts the static field
    seen in the co-rotating frame; all control enters through this single
    combination.
    """
    return c.static_field + c.microwave_freq / m.gamma_e


def reduced_detuning(m: MaterialSpec, c: ControlPoint) -> float:
    """Distance from criticality, 1 - B_eff / B_C (dimensionless)."""
    return 1.0 - effective_field(m, c) / critical_field(m)


def max_operating_temperature(m: MaterialSpec, c: ControlPoint) -> float:
    """Upper temperature bound T_C (1 - B_eff/B_C) for the homogeneous phase.

    T_C = h gamma_e B_C / k_B converts the zero-field magnon gap to a
    temperature.  The operating temperature must stay well below the
    returned value for the magnon vacuum to be a good ground state (and for
    long nuclear coherence times).  Uses B_eff, so the same bound covers the
    driven case.

    Note on conventions: with gamma_e in ordinary-frequency units and the
    Planck constant h, the illustrative B_C = 10 T gives T_C = 84.5 K; the
    alternative hbar * gamma_e B_C / k_B reading gives 13.4 K.  This package
    uses the h convention throughout.
    """
    b_c = critical_field(m)
    b_eff = effective_field(m, c)
    if b_eff > b_c:
        raise PhysicsDomainError(
            f"no homogeneous phase: B_eff={b_eff:.6g} T exceeds B_C={b_c:.6g} T"
        )
    t_c = PLANCK_H * m.gamma_e * b_c / BOLTZMANN_K
    return t_c * (1.0 - b_eff / b_c)


def rho_0(m: MaterialSpec) -> float:
    """Zero-detuning coupling range rho_0 = xi B_E / (sqrt(2) B_C).

    Dimensionless, in units of the inter-qubit lattice spacing a_perp.
    """
    return m.stiffness * m.exchange_field / (np.sqrt(2.0) * critical_field(m))


def correlation_length(m: MaterialSpec, c: ControlPoint) -> float:
    """Coupling range rho_B = rho_0 / sqrt(1 - B_eff/B_C), dimensionless.

    Diverges as the effective field approaches the critical field; this is
    the knob that stretches the indirect coupling over many lattice sites.

    Raises CriticalityError at or beyond B_eff = B_C.
    """
    det = reduced_detuning(m, c)
    if det <= 0.0:
        raise CriticalityError(
            f"correlation length undefined at or beyond criticality "
            f"(B_eff={effective_field(m, c):.6g} T, B_C={critical_field(m):.6g} T)"
        )
    return rho_0(m) / float(np.sqrt(det))
