"""Closed-form geometry of tubular boundary tori.

A tubular torus is the flat boundary torus of an embedded tube of radius R
around a geodesic in a hyperbolic 3-manifold.  Its intrinsic geometry is the
quotient of the Euclidean plane by two translations, which we store in the
principal-curvature frame: the first component of each translation vector
points in the k1 = coth(R) direction, the second in the k2 = tanh(R)
direction.  All operations here are exact closed forms; the horospherical
limit R = inf is represented by ``math.inf`` and carries its own conventions
(complex length identically zero, no surgery coefficient).

Sign convention: complex length is defined up to sign; we fix it by always
evaluating the stored, positively oriented basis in the given order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    DegeneracyError,
    DomainError,
    InfiniteCoefficientError,
    OrientationError,
)

__all__ = [
    "TubularTorus",
    "SlopeClass",
    "ComplexLength",
    "principal_curvatures",
    "complex_length",
    "euclidean_length",
    "visual_area",
    "normalized_length",
    "surgery_coefficient",
]


@dataclass(frozen=True)
class SlopeClass:
    """A real homology class p*a + q*b relative to the torus's stored basis.

    Integral coprime (p, q) correspond to simple closed curves; arbitrary
    real coefficients are allowed (generalized surgery coefficients).
    """

    p: float
    q: float

    def require_nonzero(self):
        if self.p == 0.0 and self.q == 0.0:
            raise DomainError("slope (0, 0) is not a valid surgery coefficient")


@dataclass(frozen=True)
class ComplexLength:
    """Signed translation length plus total rotation angle (radians, not mod 2pi)."""

    trans: float
    rot: float


@dataclass(frozen=True)
class TubularTorus:
    """A flat boundary torus: tube radius plus Euclidean holonomy of a basis.

    ``basis_holonomy`` holds the two translation vectors ((x1_a, x2_a),
    (x1_b, x2_b)) of the basis generators a, b in the principal frame.
    The basis must be positively oriented: x1_a*x2_b - x1_b*x2_a > 0.
    ``tube_radius`` is a positive real or ``math.inf`` (horospherical torus).
    """

    tube_radius: float
    basis_holonomy: tuple[tuple[float, float], tuple[float, float]]

    def __post_init__(self):
        if not self.tube_radius > 0.0:
            raise DomainError(f"tube radius must be positive, got {self.tube_radius}")
        if self._basis_det() <= 0.0:
            raise OrientationError(
                "basis holonomy is not positively oriented "
                f"(determinant {self._basis_det()!r} <= 0)"
            )

    def _basis_det(self) -> float:
        (x1a, x2a), (x1b, x2b) = self.basis_holonomy
        return x1a * x2b - x1b * x2a

    def holonomy(self, slope: SlopeClass) -> tuple[float, float]:
        """Real-linear extension of the holonomy applied to p*a + q*b."""
        (x1a, x2a), (x1b, x2b) = self.basis_holonomy
        return (slope.p * x1a + slope.q * x1b, slope.p * x2a + slope.q * x2b)

    @property
    def area(self) -> float:
        """Area of the fundamental parallelogram of the flat metric."""
        return self._basis_det()

    @property
    def is_horospherical(self) -> bool:
        return math.isinf(self.tube_radius)


def principal_curvatures(tube_radius: float) -> tuple[float, float]:
    """Principal curvatures (k1, k2) = (coth R, tanh R) of the tube boundary.

    Satisfies k1 >= k2 and k1*k2 = 1; the horospherical limit R = inf
    gives (1, 1).
    """
    if not tube_radius > 0.0:
        raise DomainError(f"tube radius must be positive, got {tube_radius}")
    if math.isinf(tube_radius):
        return (1.0, 1.0)
    t = math.tanh(tube_radius)
    return (1.0 / t, t)


def complex_length(torus: TubularTorus, slope: SlopeClass) -> ComplexLength:
    """Complex length (trans, rot) = (x2/cosh R, x1/sinh R) of a homology class.

    For a horospherical torus the complex length is zero by convention.
    """
    if torus.is_horospherical:
        return ComplexLength(0.0, 0.0)
    x1, x2 = torus.holonomy(slope)
    R = torus.tube_radius
    return ComplexLength(x2 / math.cosh(R), x1 / math.sinh(R))


def euclidean_length(torus: TubularTorus, slope: SlopeClass) -> float:
    """Euclidean length of a homology class on the flat torus."""
    slope.require_nonzero()
    x1, x2 = torus.holonomy(slope)
    return math.hypot(x1, x2)


def visual_area(torus: TubularTorus) -> float:
    """Visual area area(T_R)/(sinh R cosh R) = l_b*theta_a - l_a*theta_b.

    Independent of the radius at which a parallel family of tori is
    presented, and invariant under positively oriented basis change.
    Requires a finite tube radius.
    """
    if torus.is_horospherical:
        raise DomainError("visual area requires a finite tube radius")
    R = torus.tube_radius
    return torus.area / (math.sinh(R) * math.cosh(R))


def normalized_length(torus: TubularTorus, slope: SlopeClass) -> float:
    """Euclidean length of the class after rescaling the torus to unit area."""
    slope.require_nonzero()
    return euclidean_length(torus, slope) / math.sqrt(torus.area)


def surgery_coefficient(torus: TubularTorus) -> SlopeClass:
    """The unique real class c with complex length (0, 2*pi).

    Solves the 2x2 real linear system p*L(a) + q*L(b) = 2*pi*i.  Raises
    for a horospherical torus (the coefficient is infinite) and for a
    degenerate holonomy matrix.
    """
    if torus.is_horospherical:
        raise InfiniteCoefficientError()
    La = complex_length(torus, SlopeClass(1.0, 0.0))
    Lb = complex_length(torus, SlopeClass(0.0, 1.0))
    det = La.trans * Lb.rot - Lb.trans * La.rot
    if det == 0.0:
        raise DegeneracyError("holonomy matrix is singular; complex length not invertible")
    # [trans_a trans_b; rot_a rot_b] (p, q) = (0, 2*pi)
    two_pi = 2.0 * math.pi
    p = -Lb.trans * two_pi / det
    q = La.trans * two_pi / det
    return SlopeClass(p, q)
