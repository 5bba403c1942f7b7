"""Scalar information measures of a single system.

Shannon entropies and their rigorous moment bounds, Onicescu information
energies and content, the Landsberg order/disorder split, and the
order-times-disorder complexity Gamma_{alpha,beta} with its analytic
maximum. All entropies are in nats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .density import MOMENTUM, POSITION, MomentSet, RadialDensity
from .quadrature import DEFAULT_SPEC, QuadratureSpec, integrate_semi_infinite

_BOUND_HALF = 1.5 * (1.0 + math.log(math.pi))

#: Lower limit of the total entropy sum, 3(1 + ln pi); independent of the system.
TOTAL_ENTROPY_FLOOR = 3.0 * (1.0 + math.log(math.pi))


@dataclass(frozen=True)
class EntropyBounds:
    """The six moment-derived entropy limits (nats)."""

    s_r_min: float
    s_r_max: float
    s_k_min: float
    s_k_max: float
    s_min: float
    s_max: float


@dataclass(frozen=True)
class OnicescuSet:
    """Information energies E_r (inverse volume), E_k (volume), content O = 1/(E_r E_k)."""

    e_r: float
    e_k: float
    o: float


@dataclass(frozen=True)
class ComplexityPoint:
    """Disorder/order split and the complexity Gamma = delta^alpha * omega^beta."""

    alpha: float
    beta: float
    delta: float
    omega: float
    gamma: float


def shannon_entropy(d: RadialDensity, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """Shannon entropy -int d ln d over 3-space, via the radial integral.

    Position-space input yields S_r, momentum-space input S_k.
    """

    def integrand(x):
        value = d.evaluate(x)
        if value <= 0.0:
            return 0.0
        return -4.0 * math.pi * x * x * value * math.log(value)

    return integrate_semi_infinite(integrand, spec)


def total_entropy(s_r: float, s_k: float) -> float:
    """Entropy sum S = S_r + S_k."""
    return s_r + s_k


def entropy_bounds(m: MomentSet) -> EntropyBounds:
    """Rigorous entropy limits from <r^2> and the kinetic energy.

    S_r and S_k bounds are symmetric in (T, <r^2>); the total-sum floor
    3(1 + ln pi) is universal and the ceiling adds (3/2) ln((8/9) <r^2> T).
    """
    t = m.kinetic_energy
    msr = m.mean_square_radius
    if not (t > 0 and msr > 0):
        raise ValueError("entropy bounds need positive moments")
    kinetic_term = 1.5 * math.log(4.0 * t / 3.0)
    radius_term = 1.5 * math.log(2.0 * msr / 3.0)
    return EntropyBounds(
        s_r_min=_BOUND_HALF - kinetic_term,
        s_r_max=_BOUND_HALF + radius_term,
        s_k_min=_BOUND_HALF - radius_term,
        s_k_max=_BOUND_HALF + kinetic_term,
        s_min=TOTAL_ENTROPY_FLOOR,
        s_max=TOTAL_ENTROPY_FLOOR + 1.5 * math.log(8.0 * msr * t / 9.0),
    )


def onicescu(
    rho: RadialDensity, n: RadialDensity, spec: QuadratureSpec = DEFAULT_SPEC
) -> OnicescuSet:
    """Information energies E = int d^2 over both spaces, and O = 1/(E_r E_k)."""
    if rho.space != POSITION or n.space != MOMENTUM:
        raise ValueError("onicescu expects (position density, momentum density)")

    def squared(d):
        return integrate_semi_infinite(
            lambda x: 4.0 * math.pi * x * x * d.evaluate(x) ** 2, spec
        )

    e_r = squared(rho)
    e_k = squared(n)
    return OnicescuSet(e_r=e_r, e_k=e_k, o=1.0 / (e_r * e_k))


def gaussian_information_energy(sigma: float) -> float:
    """Information energy of a 1-D Gaussian of width sigma: 1/(2 sigma sqrt(pi))."""
    if not sigma > 0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    return 1.0 / (2.0 * sigma * math.sqrt(math.pi))


def discrete_information_energy(probabilities) -> float:
    """Information energy sum p_i^2 of a finite probability list.

    Extremes: 1 when one outcome is certain, 1/k for the uniform
    distribution over k outcomes (total disorder).
    """
    probs = list(probabilities)
    if not probs:
        raise ValueError("probability list is empty")
    if any(p < 0 for p in probs):
        raise ValueError("probabilities must be nonnegative")
    total = sum(probs)
    if abs(total - 1.0) > 1e-9:
        raise ValueError(f"probabilities must sum to 1, got {total!r}")
    return sum(p * p for p in probs)


def order_parameter(s: float, s_max: float) -> tuple[float, float]:
    """Landsberg order/disorder split: omega = 1 - s/s_max, delta = s/s_max."""
    if not s_max > 0:
        raise ValueError(f"s_max must be positive, got {s_max}")
    delta = s / s_max
    return 1.0 - delta, delta


def complexity(delta: float, alpha: float, beta: float) -> ComplexityPoint:
    """Complexity Gamma_{alpha,beta} = delta^alpha (1-delta)^beta, with 0^0 := 1.

    alpha is the disorder strength, beta the order strength; either may be
    zero (pure disorder- or order-driven measures).
    """
    if not 0.0 <= delta <= 1.0:
        raise ValueError(f"disorder must lie in [0, 1], got {delta}")
    if alpha < 0 or beta < 0:
        raise ValueError("strengths must be nonnegative")
    omega = 1.0 - delta
    gamma = delta**alpha * omega**beta  # Python: 0.0 ** 0 == 1.0
    return ComplexityPoint(alpha=alpha, beta=beta, delta=delta, omega=omega, gamma=gamma)


def complexity_max(alpha: float, beta: float) -> tuple[float, float]:
    """Analytic maximum of Gamma_{alpha,beta} over the disorder axis.

    Returns (gamma_max, delta_star) with
    gamma_max = alpha^alpha beta^beta / (alpha+beta)^(alpha+beta) attained
    at delta_star = alpha/(alpha+beta). Both strengths must be positive.
    """
    if not (alpha > 0 and beta > 0):
        raise ValueError("complexity_max needs strictly positive strengths")
    total = alpha + beta
    gamma_max = alpha**alpha * beta**beta / total**total
    return gamma_max, alpha / total
