"""Spherically averaged one-electron densities built from STO bases.

Position and momentum densities are normalized to unity (probability per
unit volume, Hartree atomic units throughout):

    rho(r) = (1 / 4 pi Z) sum_nl occ_nl R_nl(r)^2
    n(k)   = (1 / 4 pi Z) sum_nl occ_nl Rt_nl(k)^2

Radial orbitals are evaluated through a signed log-sum-exp so that both
R(r) and log rho(r) stay exact far outside the float64 underflow range of
the naive product form; Kullback integrals need those logs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .basis import AtomBasis, Orbital
from .errors import NumericsError
from .quadrature import DEFAULT_SPEC, QuadratureSpec, integrate_semi_infinite
from .transforms import radial_to_momentum

_LOG_TINY = -745.0  # below exp() underflow; used as "effectively zero" log

POSITION = "position"
MOMENTUM = "momentum"


class STORadial:
    """Evaluable radial orbital R_nl(r) = sum_j C_j N_j r^(n_j-1) e^(-zeta_j r).

    N_jl = (2 zeta)^(n+1/2) / sqrt((2n)!) is computed in log form, and the
    whole sum is evaluated as a signed log-sum-exp, so large exponents and
    radii cannot overflow r^(n-1) or underflow prematurely.
    """

    def __init__(self, orbital: Orbital):
        self.l = orbital.l
        signs = []
        log_coeffs = []
        powers = []
        zetas = []
        for c, prim in orbital.coefficients:
            if c == 0.0:
                continue
            log_norm = (prim.n + 0.5) * math.log(2.0 * prim.zeta) - 0.5 * math.lgamma(
                2 * prim.n + 1
            )
            signs.append(math.copysign(1.0, c))
            log_coeffs.append(math.log(abs(c)) + log_norm)
            powers.append(prim.n - 1)
            zetas.append(prim.zeta)
        if not signs:
            raise ValueError("orbital has no nonzero coefficients")
        self._signs = np.asarray(signs)
        self._log_coeffs = np.asarray(log_coeffs)
        self._powers = np.asarray(powers, dtype=float)
        self._zetas = np.asarray(zetas)

    def _signed_log_terms(self, r):
        r = np.asarray(r, dtype=float)
        with np.errstate(divide="ignore"):
            log_r = np.where(r > 0, np.log(np.where(r > 0, r, 1.0)), -np.inf)
        # r^0 contributes log 1 even at r=0, where log r itself is -inf
        power_part = np.where(
            self._powers[:, None] == 0, 0.0, self._powers[:, None] * log_r[None, :]
        )
        logs = self._log_coeffs[:, None] + power_part - self._zetas[:, None] * r[None, :]
        return logs

    def __call__(self, r):
        scalar = np.ndim(r) == 0
        logs = self._signed_log_terms(np.atleast_1d(r))
        peak = logs.max(axis=0)
        safe_peak = np.where(np.isfinite(peak), peak, 0.0)
        total = (self._signs[:, None] * np.exp(logs - safe_peak[None, :])).sum(axis=0)
        out = np.where(np.isfinite(peak) & (safe_peak > _LOG_TINY), np.exp(safe_peak) * total, 0.0)
        return float(out[0]) if scalar else out

    def log_square(self, r):
        """log(R(r)^2), exact even where R(r)^2 underflows (-inf at true zeros)."""
        scalar = np.ndim(r) == 0
        logs = self._signed_log_terms(np.atleast_1d(r))
        peak = logs.max(axis=0)
        safe_peak = np.where(np.isfinite(peak), peak, 0.0)
        total = (self._signs[:, None] * np.exp(logs - safe_peak[None, :])).sum(axis=0)
        with np.errstate(divide="ignore"):
            log_abs_total = np.where(total != 0.0, np.log(np.abs(np.where(total != 0, total, 1.0))), -np.inf)
        out = np.where(np.isfinite(peak), 2.0 * (safe_peak + log_abs_total), -np.inf)
        return float(out[0]) if scalar else out


def sto_radial(orbital: Orbital) -> STORadial:
    """Evaluable R_nl for an orbital's STO expansion (normalization factors included)."""
    return STORadial(orbital)


class RadialDensity:
    """Unit-normalized spherically symmetric density in position or momentum space.

    Immutable apart from an internal moment cache; instances are safe to
    share across threads.
    """

    def __init__(
        self,
        space: str,
        fn,
        log_fn=None,
        *,
        normalized: bool = False,
        spec: QuadratureSpec = DEFAULT_SPEC,
    ):
        if space not in (POSITION, MOMENTUM):
            raise ValueError(f"space must be {POSITION!r} or {MOMENTUM!r}, got {space!r}")
        self.space = space
        self._spec = spec
        self._fn = fn
        self._log_fn = log_fn
        self._moment_cache: dict[float, float] = {}
        if not normalized:
            norm = integrate_semi_infinite(lambda x: 4.0 * math.pi * x * x * fn(x), spec)
            residual = abs(norm - 1.0)
            if residual > 1e-3:
                raise NumericsError(
                    f"{space} density normalization residual {residual:.3e};"
                    " too large to renormalize silently"
                )
            if residual > 1e-9:
                scale = 1.0 / norm
                log_scale = math.log(scale)
                base_fn, base_log = fn, log_fn
                self._fn = lambda x: scale * base_fn(x)
                if base_log is not None:
                    self._log_fn = lambda x: log_scale + base_log(x)

    def evaluate(self, x):
        return self._fn(x)

    __call__ = evaluate

    def log_evaluate(self, x):
        """log density; exact where a log form is known, -inf at true zeros."""
        if self._log_fn is not None:
            return self._log_fn(x)
        value = np.asarray(self._fn(x), dtype=float)
        with np.errstate(divide="ignore"):
            out = np.where(value > 0, np.log(np.where(value > 0, value, 1.0)), -np.inf)
        return float(out) if np.ndim(x) == 0 else out

    def radial_moment(self, power: float) -> float:
        """<x^power> = int x^power d(x) 4 pi x^2 dx, cached per power."""
        cached = self._moment_cache.get(power)
        if cached is None:
            cached = integrate_semi_infinite(
                lambda x: 4.0 * math.pi * x ** (2.0 + power) * self._fn(x), self._spec
            )
            self._moment_cache[power] = cached
        return cached


@dataclass(frozen=True)
class MomentSet:
    """<r^2>, <k^2> and the per-electron kinetic energy T = <k^2>/2 (Hartree)."""

    mean_square_radius: float
    mean_square_momentum: float
    kinetic_energy: float

    def __post_init__(self):
        for name, value in (
            ("mean_square_radius", self.mean_square_radius),
            ("mean_square_momentum", self.mean_square_momentum),
            ("kinetic_energy", self.kinetic_energy),
        ):
            if not value > 0:
                raise ValueError(f"{name} must be positive, got {value}")


def position_density(basis: AtomBasis, spec: QuadratureSpec = DEFAULT_SPEC) -> RadialDensity:
    """Spherically averaged position density of an atom, normalized to one."""
    radials = [(orb.occupancy, sto_radial(orb)) for orb in basis.orbitals]
    z = basis.electron_count
    log_z4pi = math.log(4.0 * math.pi * z)
    log_occs = np.asarray([math.log(occ) for occ, _ in radials])

    def fn(r):
        total = sum(occ * radial(r) ** 2 for occ, radial in radials)
        return total / (4.0 * math.pi * z)

    def log_fn(r):
        scalar = np.ndim(r) == 0
        logs = np.stack([radial.log_square(np.atleast_1d(r)) for _, radial in radials])
        logs = logs + log_occs[:, None]
        peak = logs.max(axis=0)
        safe_peak = np.where(np.isfinite(peak), peak, 0.0)
        total = np.exp(logs - safe_peak[None, :]).sum(axis=0)
        out = np.where(np.isfinite(peak), safe_peak + np.log(total) - log_z4pi, -np.inf)
        return float(out[0]) if scalar else out

    return RadialDensity(POSITION, fn, log_fn, spec=spec)


def momentum_density(basis: AtomBasis, spec: QuadratureSpec = DEFAULT_SPEC) -> RadialDensity:
    """Spherically averaged momentum density, via the radial Bessel transform."""
    transformed = [
        (orb.occupancy, radial_to_momentum(sto_radial(orb), orb.l, spec))
        for orb in basis.orbitals
    ]
    z = basis.electron_count

    def fn(k):
        total = sum(occ * mom(k) ** 2 for occ, mom in transformed)
        return total / (4.0 * math.pi * z)

    return RadialDensity(MOMENTUM, fn, spec=spec)


def moments(
    rho: RadialDensity, n: RadialDensity, spec: QuadratureSpec = DEFAULT_SPEC
) -> MomentSet:
    """Mean square radius and momentum plus kinetic energy for a density pair."""
    if rho.space != POSITION or n.space != MOMENTUM:
        raise ValueError("moments expects (position density, momentum density)")
    msr = rho.radial_moment(2.0)
    msk = n.radial_moment(2.0)
    return MomentSet(
        mean_square_radius=msr, mean_square_momentum=msk, kinetic_energy=0.5 * msk
    )


def local_entropy_curve(d: RadialDensity, grid) -> list[tuple[float, float]]:
    """Pointwise local entropy -4 pi x^2 d(x) ln d(x) on the given grid.

    The curve is the integrand of the total entropy; 0 * ln 0 is taken as 0.
    """
    xs = np.asarray(list(grid), dtype=float)
    if np.any(xs < 0):
        raise ValueError("grid values must be nonnegative")
    values = np.asarray([d.evaluate(float(x)) for x in xs], dtype=float)
    out = np.zeros_like(values)
    positive = values > 0
    out[positive] = (
        -4.0 * math.pi * xs[positive] ** 2 * values[positive] * np.log(values[positive])
    )
    return list(zip(xs.tolist(), out.tolist()))
