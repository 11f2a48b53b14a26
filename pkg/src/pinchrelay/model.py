"""Physical-layer model: link gains, thermal noise, AF-relay SNR, power accounting.

Geometry: a base station feeds a full-duplex amplify-and-forward relay over a
fixed point-to-point horn-antenna link of length ``bs_relay_distance_m``.  The
relay injects the amplified signal into a dielectric waveguide running along
the x axis at height ``waveguide_height_m``; a pinching antenna clamped at
``(x_pin, 0, d)`` radiates toward the user terminal at ``(x_ue, y_ue, 0)``.

Everything in this module works in linear SI units (Hz, m, W, dimensionless
power gains).  dB quantities are converted once, explicitly, at the boundary
(:func:`db_to_linear`); nothing converts implicitly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import ClassVar

SPEED_OF_LIGHT_M_S = 299_792_458.0
BOLTZMANN_J_PER_K = 1.380649e-23
NOISE_REFERENCE_TEMP_K = 290.0


def db_to_linear(value_db: float) -> float:
    """Linear power ratio for a dB value."""
    return 10.0 ** (value_db / 10.0)


def linear_to_db(value: float) -> float:
    """dB value for a linear power ratio."""
    if value <= 0.0:
        raise ValueError(f"nonpositive ratio has no dB representation: {value!r}")
    return 10.0 * math.log10(value)


@dataclass(frozen=True)
class SystemConfig:
    """Scenario parameters, stored in SI units.

    ``snr_target_linear`` is a linear ratio (100 = 20 dB); antenna gains are
    kept in dBi because that is how they are quoted, and converted exactly
    once inside :func:`bs_relay_gain`.  ``ue_noise_figure_db = None`` means
    the terminal reuses the relay noise figure.
    """

    carrier_frequency_hz: float = 28e9
    bandwidth_hz: float = 400e6
    noise_figure_db: float = 10.0
    ue_noise_figure_db: float | None = None
    waveguide_attenuation_per_m: float = 0.01
    horn_gain_tx_dbi: float = 20.0
    horn_gain_rx_dbi: float = 20.0
    pa_efficiency: float = 0.9
    relay_circuit_power_w: float = 0.2
    bs_rf_chain_power_w: float = 0.1
    waveguide_length_m: float = 30.0
    waveguide_height_m: float = 3.0
    bs_relay_distance_m: float = 50.0
    snr_target_linear: float = 100.0
    coverage_x_m: float = 30.0
    coverage_y_m: float = 10.0

    speed_of_light_m_s: ClassVar[float] = SPEED_OF_LIGHT_M_S

    def __post_init__(self) -> None:
        for name in (
            "carrier_frequency_hz",
            "bandwidth_hz",
            "waveguide_length_m",
            "waveguide_height_m",
            "bs_relay_distance_m",
            "snr_target_linear",
            "coverage_x_m",
            "coverage_y_m",
        ):
            if not getattr(self, name) > 0.0:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)!r}")
        for name in ("waveguide_attenuation_per_m", "relay_circuit_power_w", "bs_rf_chain_power_w"):
            if not getattr(self, name) >= 0.0:
                raise ValueError(f"{name} must be nonnegative, got {getattr(self, name)!r}")
        if not 0.0 < self.pa_efficiency <= 1.0:
            raise ValueError(f"pa_efficiency must lie in (0, 1], got {self.pa_efficiency!r}")

    @property
    def relay_noise_w(self) -> float:
        """Thermal noise power at the relay receiver."""
        return noise_power_w(self.bandwidth_hz, self.noise_figure_db)

    @property
    def ue_noise_w(self) -> float:
        """Thermal noise power at the user terminal."""
        nf = self.noise_figure_db if self.ue_noise_figure_db is None else self.ue_noise_figure_db
        return noise_power_w(self.bandwidth_hz, nf)


@dataclass(frozen=True)
class UePosition:
    """User terminal coordinates on the ground plane (z = 0).

    The dataclass itself accepts any geometry so that placement studies can
    probe users outside the served rectangle; use :meth:`in_coverage` when the
    position must lie inside the configured coverage area.
    """

    x_ue_m: float
    y_ue_m: float

    @classmethod
    def in_coverage(cls, config: SystemConfig, x_ue_m: float, y_ue_m: float) -> "UePosition":
        """Construct a position, rejecting coordinates outside the coverage rectangle."""
        if not 0.0 <= x_ue_m <= config.coverage_x_m or not 0.0 <= y_ue_m <= config.coverage_y_m:
            raise ValueError(
                f"UE ({x_ue_m}, {y_ue_m}) outside coverage "
                f"[0, {config.coverage_x_m}] x [0, {config.coverage_y_m}]"
            )
        return cls(x_ue_m, y_ue_m)


@dataclass(frozen=True)
class ChannelGains:
    """Link power gains and noise powers for one scenario instance."""

    g1_sq: float
    g2_sq: float
    sigma_r_sq_w: float
    sigma_ue_sq_w: float

    def __post_init__(self) -> None:
        for name in ("g1_sq", "g2_sq", "sigma_r_sq_w", "sigma_ue_sq_w"):
            if not getattr(self, name) > 0.0:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)!r}")


def noise_power_w(bandwidth_hz: float, noise_figure_db: float) -> float:
    """Thermal noise power k*T0*B*F with T0 = 290 K."""
    if not bandwidth_hz > 0.0:
        raise ValueError(f"bandwidth must be positive, got {bandwidth_hz!r}")
    return BOLTZMANN_J_PER_K * NOISE_REFERENCE_TEMP_K * bandwidth_hz * db_to_linear(noise_figure_db)


def free_space_gain(distance_m: float, frequency_hz: float) -> float:
    """Free-space power gain (lambda / 4 pi d)^2 = c^2 / (16 pi^2 f^2 d^2).

    Singular at zero distance, so nonpositive arguments are rejected.
    """
    if not distance_m > 0.0:
        raise ValueError(f"distance must be positive, got {distance_m!r}")
    if not frequency_hz > 0.0:
        raise ValueError(f"frequency must be positive, got {frequency_hz!r}")
    return (SPEED_OF_LIGHT_M_S / (4.0 * math.pi * frequency_hz * distance_m)) ** 2


def bs_relay_gain(config: SystemConfig) -> float:
    """BS-to-relay power gain |g1|^2: both horn gains times free-space loss."""
    horn = db_to_linear(config.horn_gain_tx_dbi) * db_to_linear(config.horn_gain_rx_dbi)
    return horn * free_space_gain(config.bs_relay_distance_m, config.carrier_frequency_hz)


def relay_ue_gain(config: SystemConfig, ue: UePosition, x_pin_m: float) -> float:
    """Pinching-antenna-to-user power gain |g2|^2.

    Product of the guided-wave attenuation exp(-alpha_D * x_pin) accumulated up
    to the pinch point and the free-space gain over the 3-D pinch-to-user
    distance.  ``x_pin_m`` must lie on the waveguide, i.e. in [0, L].
    """
    if not 0.0 <= x_pin_m <= config.waveguide_length_m:
        raise ValueError(
            f"x_pin={x_pin_m!r} outside the waveguide [0, {config.waveguide_length_m}]"
        )
    dx = ue.x_ue_m - x_pin_m
    distance = math.sqrt(dx * dx + ue.y_ue_m**2 + config.waveguide_height_m**2)
    attenuation = math.exp(-config.waveguide_attenuation_per_m * x_pin_m)
    return attenuation * free_space_gain(distance, config.carrier_frequency_hz)


def channel_gains(config: SystemConfig, ue: UePosition, x_pin_m: float) -> ChannelGains:
    """Assemble both hop gains and both noise powers for one scenario."""
    return ChannelGains(
        g1_sq=bs_relay_gain(config),
        g2_sq=relay_ue_gain(config, ue, x_pin_m),
        sigma_r_sq_w=config.relay_noise_w,
        sigma_ue_sq_w=config.ue_noise_w,
    )


def af_snr(p1_w: float, beta_sq: float, gains: ChannelGains) -> float:
    """End-to-end SNR of the amplify-and-forward chain.

    gamma = P1 beta^2 |g1|^2 |g2|^2 / (sigma_ue^2 + beta^2 |g2|^2 sigma_r^2);
    monotone in both P1 and beta^2, capped by the first-hop SNR
    P1 |g1|^2 / sigma_r^2 as beta^2 grows.
    """
    _require_nonnegative(p1_w=p1_w, beta_sq=beta_sq)
    signal = p1_w * beta_sq * gains.g1_sq * gains.g2_sq
    noise = gains.sigma_ue_sq_w + beta_sq * gains.g2_sq * gains.sigma_r_sq_w
    return signal / noise


def relay_tx_power_w(p1_w: float, beta_sq: float, gains: ChannelGains) -> float:
    """Relay transmit power P2 = beta^2 (P1 |g1|^2 + sigma_r^2)."""
    _require_nonnegative(p1_w=p1_w, beta_sq=beta_sq)
    return beta_sq * (p1_w * gains.g1_sq + gains.sigma_r_sq_w)


def total_power_w(p1_w: float, beta_sq: float, gains: ChannelGains, config: SystemConfig) -> float:
    """Total consumed power: BS transmit + relay PA draw + constant circuit terms.

    P1 + P2 / eta_pa + P_amp_circ + P_bs_rf.  Equivalently
    (eta_pa P1 + P2) / eta_pa + constants, which is what the closed-form cost
    minimizes.
    """
    p2 = relay_tx_power_w(p1_w, beta_sq, gains)
    return p1_w + p2 / config.pa_efficiency + config.relay_circuit_power_w + config.bs_rf_chain_power_w


def _require_nonnegative(**values: float) -> None:
    for name, value in values.items():
        if not value >= 0.0:
            raise ValueError(f"{name} must be nonnegative, got {value!r}")
