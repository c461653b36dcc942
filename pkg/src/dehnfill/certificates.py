"""Decision procedure and geometric bounds for certified Dehn fillings.

A surgery coefficient is certified hyperbolic-fillable when the normalized
lengths Lhat_i of its components satisfy sum(1/Lhat_i^2) < 1/C^2 with the
universal constant C = 7.5832 (strict inequality; equality is reported as
not certified).  The tighter derived value sqrt(57.5041) ~ 7.58315 is
exposed as C_DERIVED, but decisions are governed by the literal 7.5832 the
certified statements use.

For certified inputs the change of geometry is pinned by the envelope:
with x-hat = (2*pi)^2/Lhat^2, z-hat and z-tilde solve f(z-hat) = x-hat and
ftilde(z-tilde) = x-hat, and

    (1/4) int_{z-tilde}^1 H'/(H (H - Gtilde)) <= Delta V
        <= (1/4) int_{z-hat}^1 H'/(H (H + G)),
    1/H(z-tilde) <= visual area <= 1/H(z-hat),

with the core-length bound visual_area_hi/(2*pi) for a smooth core.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .envelope import G, Gtilde, H, H_prime, Z_MIN, f, ftilde, invert_f, invert_ftilde
from .errors import DomainError, UncertifiableError
from .packing import R0, h

__all__ = [
    "UNIVERSAL_C",
    "C_DERIVED",
    "FillingCertificate",
    "SchlafliStep",
    "combine_normalized_lengths",
    "certify",
    "full_certificate",
    "volume_drop_bounds",
    "visual_area_bounds",
    "core_length_bound",
    "schlafli_dV",
    "figure_data",
    "certificate_to_json",
]

#: Universal certification threshold, stored as the literal decimal.
UNIVERSAL_C = 7.5832

#: Quadrature tolerance for the volume-drop integrals.
DV_QUAD_TOL = 1e-9

Z0 = 1.0 / math.sqrt(3.0)  # tanh(R0)


def _c_derived() -> float:
    """Recompute sqrt((2*pi)^2 / f(1/sqrt(3))) ~ 7.58315."""
    return 2.0 * math.pi / math.sqrt(f(Z0))


C_DERIVED = 7.58315


@dataclass(frozen=True)
class FillingCertificate:
    """Full decision-plus-bounds report for one surgery coefficient.

    Bound fields are None when the input is not certified (the envelope
    does not apply below the threshold).
    """

    per_cusp_lhat: tuple[float, ...]
    combined_lhat: float
    certified: bool
    margin: float  # 1/C^2 - sum(1/Lhat_i^2); certified iff > 0
    tube_radius_floor: float | None
    volume_drop: tuple[float, float] | None
    visual_area: tuple[float, float] | None
    core_length_hi: float | None
    z_hat: float | None
    z_tilde: float | None


@dataclass(frozen=True)
class SchlafliStep:
    """An infinitesimal radial deformation step: visual area, angle, d(angle)."""

    visual_area: float
    alpha: float
    d_alpha: float

    def __post_init__(self):
        if not self.alpha > 0.0:
            raise DomainError(f"alpha must be positive, got {self.alpha}")
        if not self.visual_area > 0.0:
            raise DomainError(f"visual area must be positive, got {self.visual_area}")


def combine_normalized_lengths(lhats) -> float:
    """Combined multi-cusp normalized length: 1/Lhat^2 = sum(1/Lhat_i^2)."""
    lhats = list(lhats)
    if not lhats:
        raise DomainError("need at least one normalized length")
    if any(not v > 0.0 for v in lhats):
        raise DomainError(f"normalized lengths must be positive, got {lhats}")
    return 1.0 / math.sqrt(sum(1.0 / v ** 2 for v in lhats))


def certify(lhats) -> FillingCertificate:
    """Decision-only certificate: certified iff sum(1/Lhat_i^2) < 1/C^2."""
    lhats = tuple(float(v) for v in lhats)
    combined = combine_normalized_lengths(lhats)
    margin = 1.0 / UNIVERSAL_C ** 2 - sum(1.0 / v ** 2 for v in lhats)
    certified = margin > 0.0
    return FillingCertificate(
        per_cusp_lhat=lhats,
        combined_lhat=combined,
        certified=certified,
        margin=margin,
        tube_radius_floor=R0 if certified else None,
        volume_drop=None,
        visual_area=None,
        core_length_hi=None,
        z_hat=None,
        z_tilde=None,
    )


def _zhat_ztilde(lhat: float) -> tuple[float, float]:
    if not lhat >= UNIVERSAL_C:
        raise UncertifiableError(
            f"uncertifiable: normalized length {lhat} below threshold {UNIVERSAL_C}"
        )
    x_hat = (2.0 * math.pi) ** 2 / lhat ** 2
    return invert_f(x_hat), invert_ftilde(x_hat)


def _dv_upper_from_z(z_hat: float) -> float:
    if z_hat >= 1.0:
        return 0.0
    val, _ = quad(
        lambda z: H_prime(z) / (H(z) * (H(z) + G(z))),
        z_hat, 1.0, epsabs=DV_QUAD_TOL / 10.0, epsrel=1e-12,
    )
    return val / 4.0


def _dv_lower_from_z(z_tilde: float) -> float:
    if z_tilde >= 1.0:
        return 0.0
    # the integrand needs H > Gtilde on [z_tilde, 1); this holds strictly
    # above the pole sqrt(2)-1, but assert it rather than assume it
    for z in np.linspace(z_tilde, 1.0, 65)[:-1]:
        if not H(z) > Gtilde(z):
            raise DomainError(f"H <= Gtilde at z = {z}; lower bound not applicable")
    val, _ = quad(
        lambda z: H_prime(z) / (H(z) * (H(z) - Gtilde(z))),
        z_tilde, 1.0, epsabs=DV_QUAD_TOL / 10.0, epsrel=1e-12,
    )
    return val / 4.0


def _area_from_z(z: float) -> float:
    return 0.0 if z >= 1.0 else 1.0 / H(z)


def volume_drop_bounds(lhat: float) -> tuple[float, float]:
    """Rigorous (lo, hi) bounds on the volume decrease during filling."""
    z_hat, z_tilde = _zhat_ztilde(lhat)
    return _dv_lower_from_z(z_tilde), _dv_upper_from_z(z_hat)


def visual_area_bounds(lhat: float) -> tuple[float, float]:
    """(lo, hi) bounds on the total visual area of the filled boundary."""
    z_hat, z_tilde = _zhat_ztilde(lhat)
    return _area_from_z(z_tilde), _area_from_z(z_hat)


def core_length_bound(lhat: float) -> float:
    """Upper bound on the core geodesic length: visual_area_hi / (2*pi)."""
    return visual_area_bounds(lhat)[1] / (2.0 * math.pi)


def full_certificate(lhats) -> FillingCertificate:
    """Certificate with geometric bounds filled in when certified."""
    cert = certify(lhats)
    if not cert.certified:
        return cert
    lhat = cert.combined_lhat
    z_hat, z_tilde = _zhat_ztilde(lhat)
    dv = (_dv_lower_from_z(z_tilde), _dv_upper_from_z(z_hat))
    area = (_area_from_z(z_tilde), _area_from_z(z_hat))
    return FillingCertificate(
        per_cusp_lhat=cert.per_cusp_lhat,
        combined_lhat=lhat,
        certified=True,
        margin=cert.margin,
        tube_radius_floor=R0,
        volume_drop=dv,
        visual_area=area,
        core_length_hi=area[1] / (2.0 * math.pi),
        z_hat=z_hat,
        z_tilde=z_tilde,
    )


def schlafli_dV(step: SchlafliStep) -> float:
    """Variation in volume dV = -(A/(2*alpha)) d(alpha)."""
    return -step.visual_area / (2.0 * step.alpha) * step.d_alpha


def certificate_to_json(cert: FillingCertificate) -> str:
    """Serialize a certificate with exactly its field names."""
    doc = {
        "per_cusp_lhat": list(cert.per_cusp_lhat),
        "combined_lhat": cert.combined_lhat,
        "certified": cert.certified,
        "margin": cert.margin,
        "tube_radius_floor": cert.tube_radius_floor,
        "volume_drop": list(cert.volume_drop) if cert.volume_drop else None,
        "visual_area": list(cert.visual_area) if cert.visual_area else None,
        "core_length_hi": cert.core_length_hi,
        "z_hat": cert.z_hat,
        "z_tilde": cert.z_tilde,
    }
    return json.dumps(doc, indent=2)


FIGURE_HEADERS = {
    1: ("x", "area_lower", "area_upper"),
    2: ("x_hat", "volume_drop_lower", "volume_drop_upper", "nz_asymptote"),
    3: ("x_hat", "area_lower", "area_upper", "nz_asymptote"),
}


def figure_data(which: int, samples: int) -> tuple[tuple[str, ...], np.ndarray]:
    """Tabulate the envelope figures on an x grid from 0 to f(1/sqrt(3)).

    Figure 1: visual-area envelope (lower from ftilde, upper from f) versus
    x = alpha^2/Lhat^2.  Figure 2: volume-drop bounds versus
    x_hat = (2*pi)^2/Lhat^2, with the asymptote pi^2/Lhat^2 = x_hat/4.
    Figure 3: visual-area bounds versus x_hat, asymptote (2*pi)^2/Lhat^2
    = x_hat.  Returns (header, rows).
    """
    if which not in FIGURE_HEADERS:
        raise DomainError(f"figure id must be 1, 2 or 3, got {which}")
    if samples < 2:
        raise DomainError(f"need at least 2 samples, got {samples}")
    x_max = f(Z0)
    xs = np.linspace(0.0, x_max, samples)
    rows = np.empty((samples, len(FIGURE_HEADERS[which])))
    for i, x in enumerate(xs):
        z_hat = invert_f(x)
        z_tilde = invert_ftilde(x)
        if which == 1:
            rows[i] = (x, _area_from_z(z_tilde), _area_from_z(z_hat))
        elif which == 2:
            rows[i] = (x, _dv_lower_from_z(z_tilde), _dv_upper_from_z(z_hat), x / 4.0)
        else:
            rows[i] = (x, _area_from_z(z_tilde), _area_from_z(z_hat), x)
    return FIGURE_HEADERS[which], rows
