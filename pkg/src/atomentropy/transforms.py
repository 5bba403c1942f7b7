"""Spherical Bessel functions and the radial position->momentum transform.

The transform uses the unitary convention

    Rt(k) = sqrt(2/pi) * int_0^inf r^2 R(r) j_l(kr) dr,

which preserves radial normalization (Parseval) and reproduces the known
hydrogen momentum density 8/(pi^2 (1+k^2)^4).

Two integration strategies are switched on the oscillation count
k*r_support/pi:

* low count: direct adaptive integration of the full integrand;
* high count: j_l is expanded into sin/cos terms with 1/x^p coefficient
  polynomials and each piece is integrated with QUADPACK's oscillatory
  QAWO rule on [0, r_support]. The expansion suffers cancellation only at
  small x, which the switch keeps out of this branch.
"""

from __future__ import annotations

import functools
import math

import numpy as np
from scipy import integrate
from scipy.special import spherical_jn

from .errors import QuadratureError
from .quadrature import DEFAULT_SPEC, QuadratureSpec, RadialFunction

_SQRT_2_OVER_PI = math.sqrt(2.0 / math.pi)

# Above this many half-oscillations over the support, the direct adaptive
# rule wastes subdivisions and the sin/cos decomposition is both cheaper
# and free of cancellation.
_OSCILLATION_SWITCH = 24.0

_MAX_L = 6


def spherical_bessel_j(l: int, x):
    """Spherical Bessel function j_l(x) for l >= 0, scalar or array x."""
    if l < 0 or l != int(l):
        raise ValueError(f"order must be a nonnegative integer, got {l}")
    return spherical_jn(int(l), x)


@functools.lru_cache(maxsize=None)
def _sincos_coefficients(l: int) -> tuple[tuple[tuple[int, float], ...], tuple[tuple[int, float], ...]]:
    """Coefficients of j_l(x) = sum a_p x^-p sin x + sum b_p x^-p cos x.

    Built from the upward recurrence j_{l+1} = (2l+1)/x j_l - j_{l-1}.
    Returns ((power, coeff), ...) pairs for the sin and cos parts.
    """
    a: dict[int, float] = {1: 1.0}
    b: dict[int, float] = {}
    if l > 0:
        a_prev, b_prev = a, b
        a, b = {2: 1.0}, {1: -1.0}
        for ell in range(1, l):
            a_next: dict[int, float] = {}
            b_next: dict[int, float] = {}
            for p, c in a.items():
                a_next[p + 1] = a_next.get(p + 1, 0.0) + (2 * ell + 1) * c
            for p, c in b.items():
                b_next[p + 1] = b_next.get(p + 1, 0.0) + (2 * ell + 1) * c
            for p, c in a_prev.items():
                a_next[p] = a_next.get(p, 0.0) - c
            for p, c in b_prev.items():
                b_next[p] = b_next.get(p, 0.0) - c
            a_prev, b_prev = a, b
            a, b = a_next, b_next
    return tuple(sorted(a.items())), tuple(sorted(b.items()))


def _support_radius(radial: RadialFunction) -> float:
    """Largest radius where |r^2 R(r)| is still significant.

    Scanned on a log grid; used both to bound the oscillatory-rule
    interval and to estimate oscillation counts.
    """
    r = np.geomspace(1e-4, 1e6, 600)
    env = np.abs(r * r * np.asarray([radial(x) for x in r], dtype=float))
    peak = env.max()
    if peak == 0.0:
        return 1.0
    significant = np.nonzero(env > 1e-17 * peak)[0]
    return float(r[significant[-1]])


class MomentumRadial:
    """Momentum-space radial orbital Rt_nl(k), evaluated on demand.

    Values are cached per k, so the several momentum-space integrals of a
    report share transform work. Instances are immutable apart from the
    cache and safe to share across threads computing disjoint k sets.
    """

    def __init__(self, radial: RadialFunction, l: int, spec: QuadratureSpec = DEFAULT_SPEC):
        if l < 0 or l > _MAX_L:
            raise ValueError(f"orbital angular momentum {l} outside supported range 0..{_MAX_L}")
        self._radial = radial
        self._l = int(l)
        self._spec = spec
        self._r_cut = _support_radius(radial)
        self._cache: dict[float, float] = {}

    @property
    def l(self) -> int:
        return self._l

    def __call__(self, k):
        if np.ndim(k) == 0:
            return self._evaluate(float(k))
        return np.asarray([self._evaluate(float(x)) for x in np.ravel(k)]).reshape(np.shape(k))

    def _evaluate(self, k: float) -> float:
        if k < 0:
            raise ValueError("wavenumber must be nonnegative")
        cached = self._cache.get(k)
        if cached is not None:
            return cached
        value = self._transform(k)
        self._cache[k] = value
        return value

    def _transform(self, k: float) -> float:
        R = self._radial
        spec = self._spec
        # Tighter inner tolerances keep transform noise below the outer
        # integrals' requested accuracy.
        eps_abs = 0.1 * spec.abs_tol
        eps_rel = 0.1 * spec.rel_tol
        if k == 0.0:
            if self._l > 0:
                return 0.0
            value = self._quad_checked(
                lambda r: r * r * R(r), 0.0, np.inf, eps_abs, eps_rel, k
            )
            return _SQRT_2_OVER_PI * value
        if k * self._r_cut / math.pi <= _OSCILLATION_SWITCH:
            l = self._l
            value = self._quad_checked(
                lambda r: r * r * R(r) * spherical_jn(l, k * r), 0.0, np.inf, eps_abs, eps_rel, k
            )
            return _SQRT_2_OVER_PI * value
        sin_terms, cos_terms = _sincos_coefficients(self._l)
        total = 0.0
        for terms, weight in ((sin_terms, "sin"), (cos_terms, "cos")):
            for power, coeff in terms:
                piece = self._quad_checked(
                    lambda r, p=power: 0.0 if r == 0.0 else R(r) * r ** (2 - p),
                    0.0,
                    self._r_cut,
                    eps_abs,
                    eps_rel,
                    k,
                    weight=weight,
                )
                total += coeff * k ** (-power) * piece
        return _SQRT_2_OVER_PI * total

    def _quad_checked(self, f, a, b, eps_abs, eps_rel, k, weight=None) -> float:
        kwargs = dict(epsabs=eps_abs, epsrel=eps_rel, limit=max(self._spec.max_refinement, 50))
        if weight is not None:
            kwargs.update(weight=weight, wvar=k, maxp1=100)
        result = integrate.quad(f, a, b, full_output=1, **kwargs)
        value, err = result[0], result[1]
        if not math.isfinite(value):
            raise QuadratureError(
                f"momentum transform failed at k={k}", estimate=value, error=err
            )
        # Absolute accuracy is what the squared-density integrals consume;
        # the oscillatory pieces legitimately lose relative accuracy once
        # the transform value itself is negligible.
        if len(result) > 3 and err > max(10 * eps_abs, eps_rel * abs(value)):
            raise QuadratureError(
                f"momentum transform did not converge at k={k}", estimate=value, error=err
            )
        return value


def radial_to_momentum(
    radial: RadialFunction, l: int, spec: QuadratureSpec = DEFAULT_SPEC
) -> MomentumRadial:
    """Transform a normalized position-space radial orbital to momentum space.

    Parameters
    ----------
    radial : callable
        Position-space radial orbital R_nl(r), normalized so that
        int_0^inf R(r)^2 r^2 dr = 1.
    l : int
        Azimuthal quantum number of the orbital.
    spec : QuadratureSpec
        Tolerances for the transform integrals.

    Returns
    -------
    MomentumRadial
        Evaluable Rt_nl(k); normalization carries over by Parseval within
        an order of magnitude of spec.rel_tol.
    """
    return MomentumRadial(radial, l, spec)
