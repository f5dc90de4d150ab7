"""Magnon dispersion of the easy-axis antiferromagnet, lab and rotating frame.

Long-wave branches (k_perp a_perp, k_z a_z << 1):

    omega_pm(k, B) = gamma_e ( sqrt(xi^2 B_E^2 (a_perp^2 k_perp^2
                     + a_z^2 k_z^2) + 2 B_A B_E + B_A^2) +- B )

The lower branch has gap gamma_e (B_C - B); in the rotating frame of a
transverse drive the static field is replaced by B_eff and the homogeneous
mode goes soft at the antiferromagnetic resonance omega = gamma_e (B_C - B).
"""

from dataclasses import dataclass

import numpy as np

from .errors import PhysicsDomainError
from .model import ControlPoint, MaterialSpec, critical_field, effective_field

# k a products above this leave the long-wave window; surfaced, not enforced.
LONGWAVE_LIMIT = 0.3

# Quantification of "much less than" in the thin-plate validity check.
MUCH_LESS_RATIO = 0.1


@dataclass(frozen=True)
class WaveVector:
    """In-plane radial component k_perp >= 0 and normal component k_z, in 1/m."""

    k_perp: float
    k_z: float = 0.0

    def __post_init__(self):
        if not self.k_perp >= 0.0:
            raise ValueError(f"k_perp must be >= 0, got {self.k_perp}")


@dataclass(frozen=True)
class DispersionSample:
    """Both magnon branches at one wave vector.

    longwave is False when the input leaves the k a <= 0.3 window where the
    quadratic form underlying the branches is trustworthy.
    """

    k: WaveVector
    omega_plus: float
    omega_minus: float
    frame: str  # "lab" | "rotating"
    longwave: bool


def in_longwave_window(m: MaterialSpec, k: WaveVector) -> bool:
    """True when k_perp a_perp and |k_z| a_z are both within the long-wave window."""
    return (k.k_perp * m.lattice_perp <= LONGWAVE_LIMIT
            and abs(k.k_z) * m.lattice_z <= LONGWAVE_LIMIT)


def _branch_root(m: MaterialSpec, k: WaveVector) -> float:
    quad = (m.lattice_perp ** 2 * k.k_perp ** 2
            + m.lattice_z ** 2 * k.k_z ** 2)
    return float(np.sqrt((m.stiffness * m.exchange_field) ** 2 * quad
                         + 2.0 * m.anisotropy_field * m.exchange_field
                         + m.anisotropy_field ** 2))


def dispersion_lab(m: MaterialSpec, k: WaveVector, static_field: float) -> DispersionSample:
    """Lab-frame magnon branches omega_pm = gamma_e (root +- B) at wave vector k.

    The branches split by exactly 2 gamma_e B for every k.  Inputs outside
    the long-wave window are evaluated anyway and flagged via longwave.
    """
    s = _branch_root(m, k)
    return DispersionSample(
        k=k,
        omega_plus=m.gamma_e * (s + static_field),
        omega_minus=m.gamma_e * (s - static_field),
        frame="lab",
        longwave=in_longwave_window(m, k),
    )


def gap(m: MaterialSpec, static_field: float) -> float:
    """Lower-branch gap omega_-(k=0, B) = gamma_e (B_C - B) in hertz.

    Positive below the spin-flop field, zero at B = B_C.  Negative values
    are returned rather than raised so root finders can locate the sign
    change; callers must check.
    """
    return m.gamma_e * (critical_field(m) - static_field)


def dispersion_rotating(m: MaterialSpec, k_perp, c: ControlPoint):
    """Rotating-frame lower branch at in-plane wave vector k_perp (k_z = 0).

    omega_-(k_perp, B, omega) = gamma_e (sqrt(xi^2 B_E^2 a_perp^2 k_perp^2
    + B_C^2) - B_eff).  Accepts scalar or array k_perp.  B and omega enter
    only through B_eff, and omega = 0 reproduces the lab lower branch.
    """
    kappa = np.asarray(k_perp, dtype=float) * m.lattice_perp
    root = np.sqrt((m.stiffness * m.exchange_field * kappa) ** 2
                   + critical_field(m) ** 2)
    out = m.gamma_e * (root - effective_field(m, c))
    return float(out) if np.ndim(k_perp) == 0 else out


def resonance_frequency(m: MaterialSpec, static_field: float) -> float:
    """Homogeneous antiferromagnetic resonance omega = gamma_e (B_C - B).

    The drive frequency at which the k = 0 rotating-frame mode goes soft;
    together with the effective field this closes exactly at B_C.
    """
    b_c = critical_field(m)
    if static_field > b_c:
        raise PhysicsDomainError(
            f"static field {static_field:.6g} T beyond critical field {b_c:.6g} T"
        )
    return m.gamma_e * (b_c - static_field)


def magnon_resonance_frequency(m: MaterialSpec, static_field: float, k_perp: float) -> float:
    """Drive frequency softening the k_perp mode of the 2D spin-wave resonance.

    omega = gamma_e (sqrt(xi^2 B_E^2 a_perp^2 k_perp^2 + B_C^2) - B);
    k_perp = 0 reproduces resonance_frequency, and the value is monotone
    increasing in k_perp.
    """
    b_c = critical_field(m)
    if static_field > b_c:
        raise PhysicsDomainError(
            f"static field {static_field:.6g} T beyond critical field {b_c:.6g} T"
        )
    if k_perp < 0.0:
        raise ValueError(f"k_perp must be >= 0, got {k_perp}")
    root = np.sqrt((m.stiffness * m.exchange_field * m.lattice_perp * k_perp) ** 2
                   + b_c ** 2)
    return m.gamma_e * (float(root) - static_field)


@dataclass(frozen=True)
class RegimeReport:
    """Diagnostics of the 2D (thin-plate) spin-wave regime check.

    Conditions:
      width_below_gap:     resonance width < gamma_e B_C,
      gap_well_below_band: gamma_e B_C / omega_0 < MUCH_LESS_RATIO,
      thickness_ok:        d < pi a_z sqrt(omega_0 / delta_omega),
    with omega_0 = gamma_e xi^2 B_E^2 / B_C the in-plane band scale.
    Each ratio_* field is the corresponding quotient, < 1 (or < threshold)
    when the condition holds.
    """

    ok: bool
    width_below_gap: bool
    gap_well_below_band: bool
    thickness_ok: bool
    ratio_width_to_gap: float
    ratio_gap_to_band: float
    ratio_thickness: float
    omega_0: float
    max_thickness: float


def validate_2d_regime(m: MaterialSpec, delta_omega: float) -> RegimeReport:
    """Check whether the plate supports the 2D zero-mode magnon description.

    delta_omega is the antiferromagnetic resonance width in Hz; it is an
    input, never estimated.
    """
    if not delta_omega > 0.0:
        raise ValueError(f"delta_omega must be > 0, got {delta_omega}")
    b_c = critical_field(m)
    gap_freq = m.gamma_e * b_c
    omega_0 = m.gamma_e * (m.stiffness * m.exchange_field) ** 2 / b_c
    max_thickness = np.pi * m.lattice_z * float(np.sqrt(omega_0 / delta_omega))
    r_a = delta_omega / gap_freq
    r_b = gap_freq / omega_0
    r_c = m.plate_thickness / max_thickness
    cond_a = r_a < 1.0
    cond_b = r_b < MUCH_LESS_RATIO
    cond_c = r_c < 1.0
    return RegimeReport(
        ok=cond_a and cond_b and cond_c,
        width_below_gap=cond_a,
        gap_well_below_band=cond_b,
        thickness_ok=cond_c,
        ratio_width_to_gap=r_a,
        ratio_gap_to_band=r_b,
        ratio_thickness=r_c,
        omega_0=omega_0,
        max_thickness=max_thickness,
    )
