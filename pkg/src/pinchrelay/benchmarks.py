"""Comparison schemes.

Scheme 1 is a direct massive-array downlink with no relay: NLoS log-distance
path loss with lognormal shadowing, one RF chain per array element.  Scheme 2
keeps the relay and the closed-form power split but bolts the radiating
antenna to the waveguide feed point, so the relay-to-user hop is plain free
space with no placement freedom.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import ChannelGains, SystemConfig, UePosition, bs_relay_gain, free_space_gain
from .optimize import PowerSolution, optimal_power_allocation


@dataclass(frozen=True)
class Benchmark1Config:
    """Direct-transmission array parameters.

    ``array_gain_exponent`` sets the coherent beamforming gain model
    ``num_elements ** exponent`` (1 for the standard single-stream array-gain
    convention, 2 for a fully coherent power gain).  ``shadowing_std_db`` is
    the standard deviation of the zero-mean lognormal shadowing term; the
    default corresponds to a variance of 11 dB^2.
    """

    num_elements: int = 64
    element_gain_dbi: float = 2.15
    path_loss_exponent: float = 4.0
    shadowing_std_db: float = math.sqrt(11.0)
    rf_chain_power_w_per_element: float = 0.1
    reference_distance_m: float = 1.0
    array_gain_exponent: float = 1.0

    def __post_init__(self) -> None:
        if self.num_elements < 1:
            raise ValueError(f"num_elements must be >= 1, got {self.num_elements!r}")
        if self.path_loss_exponent < 2.0:
            raise ValueError(f"path_loss_exponent must be >= 2, got {self.path_loss_exponent!r}")
        if self.shadowing_std_db < 0.0:
            raise ValueError("shadowing_std_db must be nonnegative")
        if not self.reference_distance_m > 0.0:
            raise ValueError("reference_distance_m must be positive")
        if self.rf_chain_power_w_per_element < 0.0:
            raise ValueError("rf_chain_power_w_per_element must be nonnegative")
        if not self.array_gain_exponent > 0.0:
            raise ValueError("array_gain_exponent must be positive")


@dataclass(frozen=True)
class ShadowingSample:
    """One lognormal shadowing draw in dB, with its seed when drawn standalone."""

    value_db: float
    seed: int | None = None

    @classmethod
    def draw(cls, std_db: float, seed: int) -> "ShadowingSample":
        rng = np.random.default_rng(seed)
        return cls(value_db=float(rng.normal(0.0, std_db)), seed=seed)


def benchmark1_distance_m(config: SystemConfig, ue: UePosition) -> float:
    """Default direct-link distance: BS sits ``d1`` behind the waveguide feed.

    BS, relay and coverage area are taken collinear along the waveguide axis,
    so the direct path spans the BS-relay distance plus the ground distance
    from the feed to the user.
    """
    return config.bs_relay_distance_m + math.hypot(ue.x_ue_m, ue.y_ue_m)


def benchmark1_link_gain(
    config: SystemConfig,
    b1: Benchmark1Config,
    ue_bs_distance_m: float,
    shadowing: ShadowingSample,
) -> float:
    """NLoS direct-link power gain: array gain x element gain x log-distance loss."""
    if not ue_bs_distance_m > 0.0:
        raise ValueError(f"distance must be positive, got {ue_bs_distance_m!r}")
    array_gain = float(b1.num_elements) ** b1.array_gain_exponent
    element_gain = 10.0 ** (b1.element_gain_dbi / 10.0)
    anchor = free_space_gain(b1.reference_distance_m, config.carrier_frequency_hz)
    distance_loss = (ue_bs_distance_m / b1.reference_distance_m) ** (-b1.path_loss_exponent)
    shadow = 10.0 ** (shadowing.value_db / 10.0)
    return array_gain * element_gain * anchor * distance_loss * shadow


def benchmark1_tx_power_w(
    config: SystemConfig,
    b1: Benchmark1Config,
    ue_bs_distance_m: float,
    shadowing: ShadowingSample,
) -> float:
    """Radiated power needed to hit the SNR target over the direct link."""
    gain = benchmark1_link_gain(config, b1, ue_bs_distance_m, shadowing)
    return config.snr_target_linear * config.ue_noise_w / gain


def benchmark1_power(
    config: SystemConfig,
    b1: Benchmark1Config,
    ue_bs_distance_m: float,
    shadowing: ShadowingSample,
) -> float:
    """Total consumed power of the direct scheme: PA draw plus per-element RF chains."""
    tx = benchmark1_tx_power_w(config, b1, ue_bs_distance_m, shadowing)
    return tx / config.pa_efficiency + b1.num_elements * b1.rf_chain_power_w_per_element


def benchmark2_power(config: SystemConfig, ue: UePosition) -> PowerSolution:
    """Relay scheme with the antenna fixed at the waveguide feed.

    Same closed-form power split as the adjustable scheme, but the second hop
    is free space from ``(0, 0, d)`` with no waveguide attenuation, which is
    exactly the adjustable scheme's gain at ``x_pin = 0``.
    """
    distance = math.sqrt(ue.x_ue_m**2 + ue.y_ue_m**2 + config.waveguide_height_m**2)
    gains = ChannelGains(
        g1_sq=bs_relay_gain(config),
        g2_sq=free_space_gain(distance, config.carrier_frequency_hz),
        sigma_r_sq_w=config.relay_noise_w,
        sigma_ue_sq_w=config.ue_noise_w,
    )
    p1, beta_sq, j_star = optimal_power_allocation(gains, config)
    p2 = beta_sq * (p1 * gains.g1_sq + gains.sigma_r_sq_w)
    total = p1 + p2 / config.pa_efficiency + config.relay_circuit_power_w + config.bs_rf_chain_power_w
    return PowerSolution(
        x_pin_m=0.0,
        p1_w=p1,
        beta_sq=beta_sq,
        p2_w=p2,
        j_star_w=j_star,
        total_power_w=total,
        feasible=True,
    )
