"""Cusp-shape lattice arithmetic.

A cusp shape is the unit-area normalization of the flat metric on a cusp
cross-section, presented as a modulus tau in the upper half plane: the
lattice generated by 1 and tau.  A slope (p, q) is the class p*1 + q*tau.
This module computes normalized slope lengths, Gauss-reduces the basis, and
enumerates all primitive slopes below a normalized-length cutoff (complete,
via a window bound derived from the reduced basis).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

__all__ = [
    "CuspShape",
    "slope_normalized_length",
    "lattice_reduce",
    "enumerate_short_slopes",
]


@dataclass(frozen=True)
class CuspShape:
    """Modulus tau = re + i*im of a unit-area flat torus lattice; im > 0."""

    re: float
    im: float

    def __post_init__(self):
        if not self.im > 0.0:
            raise DomainError(f"cusp shape needs im(tau) > 0, got {self.im}")

    @property
    def tau(self) -> complex:
        return complex(self.re, self.im)


def slope_normalized_length(shape: CuspShape, slope: tuple[float, float]) -> float:
    """Normalized length |p + q*tau| / sqrt(im tau) of the class p + q*tau."""
    p, q = slope
    if p == 0.0 and q == 0.0:
        raise DomainError("slope (0, 0) has no normalized length")
    return abs(p + q * shape.tau) / math.sqrt(shape.im)


def lattice_reduce(shape: CuspShape) -> tuple[CuspShape, tuple[tuple[int, int], tuple[int, int]]]:
    """Gauss-reduce the basis (1, tau).

    Returns (reduced shape, M) where the reduced modulus tau' satisfies
    |re tau'| <= 1/2 and |tau'| >= 1, and M is an integer matrix of
    determinant +-1 mapping old slope coordinates to new ones:
    normalized lengths satisfy L(slope, tau) == L(M @ slope, tau').
    """
    tau = shape.tau
    # Basis vectors e1, e2 as complex numbers; coordinates transform by the
    # inverse transpose of the basis change, which we track directly:
    # row i of M gives the new i-th coordinate of a vector from its old ones.
    e1, e2 = complex(1.0, 0.0), tau
    # rows of inverse-coordinate map: new_coords = M @ old_coords
    m11, m12, m21, m22 = 1, 0, 0, 1
    for _ in range(10_000):
        t = round((e2 / e1).real)
        if t != 0:
            # e2 <- e2 - t*e1; a vector p*e1 + q*e2 keeps q, gains t*q on p
            e2 -= t * e1
            m11, m12 = m11 + t * m21, m12 + t * m22
        if abs(e2) < abs(e1):
            e1, e2 = e2, e1
            m11, m12, m21, m22 = m21, m22, m11, m12
        else:
            break
    tau_red = e2 / e1
    if tau_red.imag < 0.0:
        # keep the modulus in the upper half plane by negating e1
        e1 = -e1
        m11, m12 = -m11, -m12
        tau_red = e2 / e1
    return CuspShape(tau_red.real, tau_red.imag), ((m11, m12), (m21, m22))


def _window_bounds(cutoff: float, shape: CuspShape) -> tuple[int, int]:
    """Half-widths (P, Q) so that every slope with L-hat <= cutoff has
    |p| <= P and |q| <= Q in this basis.

    From |p + q*tau|^2 = (p + q*re)^2 + (q*im)^2 <= cutoff^2 * im:
    |q| <= cutoff/sqrt(im) and |p| <= cutoff*sqrt(im) + |q|*|re|.
    """
    qmax = cutoff / math.sqrt(shape.im)
    pmax = cutoff * math.sqrt(shape.im) + qmax * abs(shape.re)
    return math.ceil(pmax), math.ceil(qmax)


def enumerate_short_slopes(shape: CuspShape, cutoff: float) -> list[tuple[int, int, float]]:
    """All primitive integral slopes with normalized length <= cutoff.

    Identifies (p, q) ~ (-p, -q) and reports the representative with p > 0
    (or p = 0 and q > 0), sorted by (length, p, q).  Each entry is
    (p, q, normalized_length).  Completeness comes from enumerating the
    window bound of the Gauss-reduced basis and mapping back.
    """
    if not cutoff > 0.0:
        raise DomainError(f"cutoff must be positive, got {cutoff}")
    reduced, m = lattice_reduce(shape)
    # invert the integer coordinate map (det is +-1)
    (m11, m12), (m21, m22) = m
    det = m11 * m22 - m12 * m21
    inv = ((m22 * det, -m12 * det), (-m21 * det, m11 * det))
    pmax, qmax = _window_bounds(cutoff, reduced)
    # the window covers both (p, q) and (-p, -q); key on the normalized
    # representative so each class appears once
    found: dict[tuple[int, int], float] = {}
    for q in range(-qmax, qmax + 1):
        for p in range(-pmax, pmax + 1):
            if (p, q) == (0, 0) or math.gcd(p, q) != 1:
                continue
            if slope_normalized_length(reduced, (p, q)) > cutoff:
                continue
            # back to original-basis coordinates
            p0 = inv[0][0] * p + inv[0][1] * q
            q0 = inv[1][0] * p + inv[1][1] * q
            if p0 < 0 or (p0 == 0 and q0 < 0):
                p0, q0 = -p0, -q0
            found[(p0, q0)] = slope_normalized_length(shape, (p0, q0))
    out = [(p0, q0, length) for (p0, q0), length in found.items()]
    out.sort(key=lambda s: (s[2], s[0], s[1]))
    return out
