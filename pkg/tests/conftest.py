import math

from dehnfill.torus_geometry import TubularTorus


def torus_from_complex_lengths(R, La, Lb):
    """Build a torus of radius R whose basis generators have the given
    complex lengths (trans, rot): holonomy x1 = rot*sinh(R), x2 = trans*cosh(R)."""
    sh, ch = math.sinh(R), math.cosh(R)
    return TubularTorus(
        tube_radius=R,
        basis_holonomy=(
            (La[1] * sh, La[0] * ch),
            (Lb[1] * sh, Lb[0] * ch),
        ),
    )
