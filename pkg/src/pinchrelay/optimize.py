"""Closed-form solvers: pinching-antenna placement and BS-power / relay-gain split.

Placement.  Along the waveguide the radiated-link gain is proportional to
``f(x) = exp(-alpha x) / ((x_ue - x)^2 + y_ue^2 + d^2)``: guided-wave
attenuation up to the pinch point over the squared pinch-to-user distance.
``d(ln f)/dx = 0`` gives the quadratic ``alpha u^2 - 2u + alpha C = 0`` in
``u = x_ue - x`` with ``C = y_ue^2 + d^2``.  Its roots, when real, are a local
minimum ``x1`` (larger u) and the unique interior local maximum ``x2``
(smaller u), so the constrained optimum on ``[0, L]`` is either the feed
endpoint ``x = 0`` or ``x2`` clamped to the waveguide, whichever radiates the
stronger gain.

Power split.  With the placement fixed, the SNR target is active at the cost
optimum, pinning the relay gain as a function of the BS power and reducing the
weighted cost ``J = eta_pa P1 + beta^2 (P1 |g1|^2 + sigma_r^2)`` to
``A u + B / u + const`` in the power surplus ``u = P1 |g1|^2 - gamma0
sigma_r^2``, minimized at ``u* = sqrt(B / A)``.  Total consumed power at the
optimum is ``J* / eta_pa`` plus the constant circuit terms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .model import (
    ChannelGains,
    SystemConfig,
    UePosition,
    channel_gains,
    relay_tx_power_w,
    total_power_w,
)


@dataclass(frozen=True)
class StationaryAnalysis:
    """Stationary points of the placement objective.

    ``delta`` is the discriminant ``4 - 4 alpha^2 C``; the roots ``x1 <= x2``
    are present only when it is nonnegative.
    """

    delta: float
    c_const: float
    x1_m: float | None
    x2_m: float | None


@dataclass(frozen=True)
class PowerSolution:
    """Jointly optimal operating point for one scenario."""

    x_pin_m: float
    p1_w: float
    beta_sq: float
    p2_w: float
    j_star_w: float
    total_power_w: float
    feasible: bool


def pin_objective(config: SystemConfig, ue: UePosition, x_m: float) -> float:
    """Placement objective f(x); proportional to the radiated-link gain.

    Defined on all of R; the [0, L] restriction is applied by the optimizer.
    """
    dx = ue.x_ue_m - x_m
    c_const = ue.y_ue_m**2 + config.waveguide_height_m**2
    return math.exp(-config.waveguide_attenuation_per_m * x_m) / (dx * dx + c_const)


def stationary_points(config: SystemConfig, ue: UePosition) -> StationaryAnalysis:
    """Solve the stationary-point quadratic of the placement objective.

    Requires a strictly positive attenuation coefficient; at alpha = 0 the
    quadratic degenerates and the caller should use the pure distance-
    minimizing placement instead.
    """
    alpha = config.waveguide_attenuation_per_m
    if alpha == 0.0:
        raise ValueError("no stationary analysis for zero waveguide attenuation")
    c_const = ue.y_ue_m**2 + config.waveguide_height_m**2
    delta = 4.0 - 4.0 * alpha * alpha * c_const
    if delta < 0.0:
        return StationaryAnalysis(delta=delta, c_const=c_const, x1_m=None, x2_m=None)
    root = math.sqrt(1.0 - alpha * alpha * c_const)
    x1 = ue.x_ue_m - (1.0 + root) / alpha
    x2 = ue.x_ue_m - (1.0 - root) / alpha
    return StationaryAnalysis(delta=delta, c_const=c_const, x1_m=x1, x2_m=x2)


def optimal_pin_position(config: SystemConfig, ue: UePosition) -> float:
    """Gain-maximizing pinching-antenna position on the waveguide.

    With no attenuation the objective is pure distance minimization and the
    optimum is ``x_ue`` clamped to ``[0, L]``.  Otherwise the only candidates
    are the feed endpoint and the interior maximum ``x2`` clamped to the
    waveguide; evaluating both makes the result a global argmax under every
    case split (``x2`` below the feed, beyond the far end, or in between).
    Ties go to the feed endpoint.
    """
    length = config.waveguide_length_m
    if config.waveguide_attenuation_per_m == 0.0:
        return min(max(ue.x_ue_m, 0.0), length)
    analysis = stationary_points(config, ue)
    if analysis.x2_m is None:
        return 0.0
    candidate = min(max(analysis.x2_m, 0.0), length)
    if pin_objective(config, ue, candidate) > pin_objective(config, ue, 0.0):
        return candidate
    return 0.0


def optimal_power_allocation(gains: ChannelGains, config: SystemConfig) -> tuple[float, float, float]:
    """Cost-minimizing BS power and relay gain meeting the SNR target exactly.

    Returns ``(p1_w, beta_sq, j_w)``:

        p1      = gamma0 sigma_r^2 / |g1|^2
                  + (sigma_r sigma_ue / |g1||g2|) sqrt(gamma0 (gamma0+1) / eta)
        beta^2  = (sigma_ue / (|g1||g2| sigma_r)) sqrt(eta gamma0 / (gamma0+1))
        j       = eta gamma0 sigma_r^2 / |g1|^2 + gamma0 sigma_ue^2 / |g2|^2
                  + (2 sigma_r sigma_ue / |g1||g2|) sqrt(eta gamma0 (gamma0+1))

    ``p1`` strictly exceeds the feasibility floor ``gamma0 sigma_r^2 / |g1|^2``
    below which no relay gain can reach the target.
    """
    gamma0 = config.snr_target_linear
    eta = config.pa_efficiency
    if not (gamma0 > 0.0 and min(gains.g1_sq, gains.g2_sq) > 0.0):
        raise ValueError("power allocation needs positive gains and SNR target")
    g1 = math.sqrt(gains.g1_sq)
    g2 = math.sqrt(gains.g2_sq)
    sigma_r = math.sqrt(gains.sigma_r_sq_w)
    sigma_ue = math.sqrt(gains.sigma_ue_sq_w)
    # Factored as two tame ratios: the raw four-factor product of noise
    # amplitudes over channel amplitudes can leave the normal float range.
    cross = (sigma_r / g1) * (sigma_ue / g2)
    floor_w = gamma0 * gains.sigma_r_sq_w / gains.g1_sq
    p1 = floor_w + cross * math.sqrt(gamma0 * (gamma0 + 1.0) / eta)
    beta_sq = (sigma_ue / sigma_r) / (g1 * g2) * math.sqrt(eta * gamma0 / (gamma0 + 1.0))
    j = (
        eta * floor_w
        + gamma0 * gains.sigma_ue_sq_w / gains.g2_sq
        + 2.0 * cross * math.sqrt(eta * gamma0 * (gamma0 + 1.0))
    )
    return p1, beta_sq, j


def solve(config: SystemConfig, ue: UePosition) -> PowerSolution:
    """Full pipeline: place the pinching antenna, then split the powers.

    The placement step reads only the geometry and the attenuation
    coefficient, so it is independent of the power variables; the closed-form
    split always admits a solution for positive gains, hence ``feasible`` is
    always true.
    """
    x_pin = optimal_pin_position(config, ue)
    gains = channel_gains(config, ue, x_pin)
    p1, beta_sq, j_star = optimal_power_allocation(gains, config)
    return PowerSolution(
        x_pin_m=x_pin,
        p1_w=p1,
        beta_sq=beta_sq,
        p2_w=relay_tx_power_w(p1, beta_sq, gains),
        j_star_w=j_star,
        total_power_w=total_power_w(p1, beta_sq, gains, config),
        feasible=True,
    )
