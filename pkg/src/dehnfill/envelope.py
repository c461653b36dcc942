"""The deformation envelope bounding visual area along a radial filling path.

In the variable z = tanh(rho) (where h(rho) equals the visual area), the
integrated extremals of the differential inequalities for v = A/alpha^2 are

    f(z)      = 3.3957 (1 - z) exp(-int_1^z F(w) dw),
    ftilde(z) = 3.3957 (1 - z) exp(-int_1^z Ftilde(w) dw),

and the deformation parameter x = alpha^2 / Lhat^2 is pinched between them:
ftilde(z) >= x >= f(z).  H(z) = 1/A is the reciprocal visual area; G and
Gtilde are the coefficient functions of the inequalities.  Ftilde has a pole
at z = sqrt(2) - 1; we work on [Z_MIN, 1] with Z_MIN = 0.45, strictly above
it (the certified range only needs [1/sqrt(3), 1]).

Inversion of f and ftilde (producing z-hat and z-tilde from a target x) is
by bisection: each function evaluation is a quadrature, the functions are
strictly decreasing on the working domain, and f is flat near z = 1 where
derivative-based methods are fragile.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.integrate import quad

from .errors import DomainError, UncertifiableError
from .packing import PACKING

__all__ = [
    "Z_MIN",
    "POLE",
    "EnvelopeDomain",
    "EnvelopeTable",
    "H",
    "H_prime",
    "G",
    "Gtilde",
    "F",
    "Ftilde",
    "f",
    "ftilde",
    "invert_f",
    "invert_ftilde",
    "sample_envelope",
]

#: Excluded singularity of Ftilde.
POLE = math.sqrt(2.0) - 1.0

#: Lower end of the working domain; the certified range is [1/sqrt(3), 1].
Z_MIN = 0.45

#: Absolute quadrature tolerance for the exponent integrals of f, ftilde.
QUAD_TOL = 1e-10

#: Bisection tolerance: |f(z) - x| <= INV_TOL * max(1, x).
INV_TOL = 1e-12

_COEFF = PACKING.h_coefficient  # 3.3957


@dataclass(frozen=True)
class EnvelopeDomain:
    """Working z-interval [z_min, 1] for the envelope, kept above the pole."""

    z_min: float = Z_MIN
    pole: float = POLE

    def __post_init__(self):
        if not self.z_min > self.pole:
            raise DomainError(
                f"z_min={self.z_min} must exceed the Ftilde pole {self.pole}"
            )


def _check_open_unit(z: float):
    if not 0.0 < z < 1.0:
        raise DomainError(f"argument must lie in (0, 1), got {z}")


def H(z: float) -> float:
    """Reciprocal visual area H(z) = (1+z^2)/(3.3957 z (1-z^2))."""
    _check_open_unit(z)
    return (1.0 + z * z) / (_COEFF * z * (1.0 - z * z))


def H_prime(z: float) -> float:
    """Analytic derivative of H."""
    _check_open_unit(z)
    num = 1.0 + z * z
    den = z - z ** 3
    return (2.0 * z * den - num * (1.0 - 3.0 * z * z)) / (_COEFF * den * den)


def G(z: float) -> float:
    """G(z) = (1+z^2)/(6.7914 z^3)."""
    _check_open_unit(z)
    return (1.0 + z * z) / (2.0 * _COEFF * z ** 3)


def Gtilde(z: float) -> float:
    """Gtilde(z) = (1+z^2)^2/(6.7914 z^3 (3-z^2)); finite at z = 1."""
    if not 0.0 < z <= 1.0:
        raise DomainError(f"argument must lie in (0, 1], got {z}")
    return (1.0 + z * z) ** 2 / (2.0 * _COEFF * z ** 3 * (3.0 - z * z))


def F(z: float) -> float:
    """F(z) = -(1+4z+6z^2+z^4)/((z+1)(1+z^2)^2), regular on [0, 1]."""
    if not 0.0 <= z <= 1.0:
        raise DomainError(f"F is defined on [0, 1], got {z}")
    return -(1.0 + 4.0 * z + 6.0 * z * z + z ** 4) / ((z + 1.0) * (1.0 + z * z) ** 2)


def Ftilde(z: float) -> float:
    """Ftilde(z), regular on (sqrt(2)-1, 1]; pole at sqrt(2)-1."""
    if not POLE < z <= 1.0:
        raise DomainError(f"Ftilde is defined on (sqrt(2)-1, 1], got {z}")
    num = z ** 6 + 7.0 * z ** 4 + 12.0 * z ** 3 - 9.0 * z * z - 4.0 * z + 1.0
    den = (z + 1.0) * (z * z + 1.0) * (z * z - 2.0 * z - 1.0) * (z * z + 2.0 * z - 1.0)
    return -num / den


def _check_working(z: float):
    if not Z_MIN <= z <= 1.0:
        raise DomainError(f"argument must lie in [{Z_MIN}, 1], got {z}")


@lru_cache(maxsize=100_000)
def _exponent_f(z: float) -> float:
    val, _ = quad(F, 1.0, z, epsabs=QUAD_TOL, epsrel=1e-12)
    return val


@lru_cache(maxsize=100_000)
def _exponent_ftilde(z: float) -> float:
    val, _ = quad(Ftilde, 1.0, z, epsabs=QUAD_TOL, epsrel=1e-12)
    return val


def f(z: float) -> float:
    """Lower envelope f(z) = 3.3957 (1-z) exp(-int_1^z F); f(1) = 0."""
    _check_working(z)
    if z == 1.0:
        return 0.0
    return _COEFF * (1.0 - z) * math.exp(-_exponent_f(z))


def ftilde(z: float) -> float:
    """Upper envelope, same shape with Ftilde; ftilde(1) = 0."""
    _check_working(z)
    if z == 1.0:
        return 0.0
    return _COEFF * (1.0 - z) * math.exp(-_exponent_ftilde(z))


def _invert_decreasing(func, x_hat: float, name: str) -> float:
    if x_hat < 0.0:
        raise DomainError(f"target value must be nonnegative, got {x_hat}")
    if x_hat == 0.0:
        return 1.0
    top = func(Z_MIN)
    if x_hat > top:
        raise UncertifiableError(
            f"uncertifiable: normalized length too small "
            f"(target {x_hat} exceeds {name}({Z_MIN}) = {top})"
        )
    tol = INV_TOL * max(1.0, x_hat)
    lo, hi = Z_MIN, 1.0  # func(lo) >= x_hat >= func(hi)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        val = func(mid)
        if abs(val - x_hat) <= tol:
            return mid
        if val > x_hat:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-16:
            break
    return 0.5 * (lo + hi)


def invert_f(x_hat: float) -> float:
    """z-hat with f(z-hat) = x_hat; bisection on the decreasing branch."""
    return _invert_decreasing(f, x_hat, "f")


def invert_ftilde(x_hat: float) -> float:
    """z-tilde with ftilde(z-tilde) = x_hat."""
    return _invert_decreasing(ftilde, x_hat, "ftilde")


@dataclass(frozen=True)
class EnvelopeTable:
    """Sampled envelope values on an ascending z-grid.

    Immutable once built; safe to share across threads.
    """

    z_grid: np.ndarray
    f_values: np.ndarray
    ftilde_values: np.ndarray
    H_values: np.ndarray
    quad_tolerance: float

    def __post_init__(self):
        if np.any(np.diff(self.z_grid) <= 0.0):
            raise DomainError("z_grid must be strictly ascending")


def sample_envelope(samples: int, z_min: float = Z_MIN, z_max: float = 1.0) -> EnvelopeTable:
    """Tabulate f, ftilde and H at evenly spaced z values in [z_min, z_max]."""
    if samples < 2:
        raise DomainError("need at least 2 samples")
    if not Z_MIN <= z_min < z_max <= 1.0:
        raise DomainError(f"bad table range [{z_min}, {z_max}]")
    zs = np.linspace(z_min, z_max, samples)
    fs = np.array([f(z) for z in zs])
    fts = np.array([ftilde(z) for z in zs])
    # H blows up at z = 1; record inf there
    Hs = np.array([H(z) if z < 1.0 else math.inf for z in zs])
    return EnvelopeTable(zs, fs, fts, Hs, QUAD_TOL)
