"""Tube-packing bounds on the visual area of tubular boundaries.

The central object is the function h(r) = 3.3957 * tanh(r) / cosh(2r): the
total visual area of the boundary is at least h(R) where R is the tube
radius of the filled manifold.  The coefficients come from packing disjoint
ellipses (the shadows of bumping tubes) on the boundary torus at density at
most pi/(2*sqrt(3)).

The decimal constants 3.3957 and 0.980258 are kept as the literal truncated
values the certified statements use; recomputing them more precisely would
change certified outputs.  Their provenance is checked by the consistency
properties below (axis_coefficient ~ 1/S, h_coefficient ~ 2*sqrt(3) * axis).
Note 0.980258 (the axis coefficient, ~1/S) and 0.980254 (the value h(R0))
are different numbers and are never conflated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

__all__ = [
    "PackingConstants",
    "PACKING",
    "R0",
    "h",
    "ellipse_axes",
    "boundary_injectivity_bound",
]

#: Critical tube radius arctanh(1/sqrt(3)) ~ 0.65848 below which the packing
#: bound no longer pins the geometry.
R0 = math.atanh(1.0 / math.sqrt(3.0))


@dataclass(frozen=True)
class PackingConstants:
    """The literal decimal constants entering the packing bound."""

    density_ratio: float  # max packing density of congruent ellipses
    s_constant: float  # S = (1/(2 sqrt 2)) / arcsinh(1/(2 sqrt 2))
    h_coefficient: float  # 3.3957, the coefficient of h(r)
    axis_coefficient: float  # 0.980258, semi-axis shrink factor ~ 1/S


PACKING = PackingConstants(
    density_ratio=math.pi / (2.0 * math.sqrt(3.0)),
    s_constant=(1.0 / (2.0 * math.sqrt(2.0))) / math.asinh(1.0 / (2.0 * math.sqrt(2.0))),
    h_coefficient=3.3957,
    axis_coefficient=0.980258,
)


def h(r: float) -> float:
    """Visual-area lower bound h(r) = 3.3957 tanh(r)/cosh(2r), r > 0."""
    if not r > 0.0:
        raise DomainError(f"h needs r > 0, got {r}")
    return PACKING.h_coefficient * math.tanh(r) / math.cosh(2.0 * r)


def ellipse_axes(R_i: float, R: float) -> tuple[float, float]:
    """Semi-axes of the disjoint shadow ellipse on a torus of radius R_i.

    a = 0.980258 sinh(R) cosh(R_i) / cosh(R_i + R),
    b = sinh(R) sinh(R_i) / sinh(R_i + R), valid for 0 < R <= R_i.
    At R_i = R these are the bumping-ellipse axes, with b = tanh(R)/2.
    """
    if not 0.0 < R <= R_i:
        raise DomainError(f"ellipse_axes needs 0 < R <= R_i, got R={R}, R_i={R_i}")
    a = PACKING.axis_coefficient * math.sinh(R) * math.cosh(R_i) / math.cosh(R_i + R)
    b = math.sinh(R) * math.sinh(R_i) / math.sinh(R_i + R)
    return a, b


def boundary_injectivity_bound(R: float) -> float:
    """Euclidean injectivity radius bound c(R) = 0.980258/(coth R + 1)."""
    if not R > 0.0:
        raise DomainError(f"boundary_injectivity_bound needs R > 0, got {R}")
    return PACKING.axis_coefficient / (1.0 / math.tanh(R) + 1.0)
