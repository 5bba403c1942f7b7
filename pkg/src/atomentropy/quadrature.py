"""Adaptive quadrature over the half line.

Every radial integral in the package (norms, moments, entropies,
information energies, distances) runs through ``integrate_semi_infinite``.
Integrands may decay exponentially or algebraically and may carry an
integrable singularity at the origin (the Thomas-Fermi density behaves
like r^(-3/2) there); the QUADPACK QAGI/QAGS routines behind
``scipy.integrate.quad`` handle both without special casing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy import integrate

from .errors import QuadratureError

# Evaluable radial profile: scalar in, scalar out (arrays accepted where noted).
RadialFunction = Callable[[float], float]


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerances and refinement budget for adaptive integration.

    rel_tol / abs_tol mirror QUADPACK's epsrel/epsabs: refinement stops
    once the error estimate drops below max(rel_tol*|value|, abs_tol).
    max_refinement bounds the number of subintervals.
    """

    rel_tol: float = 1e-9
    abs_tol: float = 1e-12
    max_refinement: int = 200

    def __post_init__(self):
        if self.rel_tol <= 0:
            raise ValueError(f"rel_tol must be positive, got {self.rel_tol}")
        if self.abs_tol < 0:
            raise ValueError(f"abs_tol must be nonnegative, got {self.abs_tol}")
        if self.max_refinement < 1:
            raise ValueError("max_refinement must be at least 1")


DEFAULT_SPEC = QuadratureSpec()


def integrate_semi_infinite(f: RadialFunction, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """Integrate ``f`` over (0, inf).

    Parameters
    ----------
    f : callable
        Integrand; must be integrable on (0, inf), with at worst an
        integrable endpoint singularity at 0.
    spec : QuadratureSpec
        Tolerances and subdivision budget.

    Returns
    -------
    float
        The integral estimate, converged to the requested tolerance.

    Raises
    ------
    QuadratureError
        If the refinement limit is reached before the error estimate
        meets max(rel_tol*|value|, abs_tol). The exception carries the
        best estimate and its error bound.
    """
    value, _ = integrate_semi_infinite_with_error(f, spec)
    return value


def integrate_semi_infinite_with_error(
    f: RadialFunction, spec: QuadratureSpec = DEFAULT_SPEC
) -> tuple[float, float]:
    """Like integrate_semi_infinite, but also return the error estimate."""
    result = integrate.quad(
        f,
        0.0,
        np.inf,
        epsabs=spec.abs_tol,
        epsrel=spec.rel_tol,
        limit=spec.max_refinement,
        full_output=1,
    )
    value, err = result[0], result[1]
    converged = err <= max(spec.rel_tol * abs(value), spec.abs_tol)
    if not math.isfinite(value) or (len(result) > 3 and not converged):
        raise QuadratureError(
            "semi-infinite integral did not converge", estimate=value, error=err
        )
    return value, err
