"""Davis-Wielandt shells, numerical ranges and conformal ranges of 2x2 complex
matrices, described by explicit quadrics in models of hyperbolic geometry."""
from .algebra import (
    CLASS_TOL, FiveData, InvariantSet, MobiusMap, ReducedFiveData, SpectralClass,
    TriangularForm, canonical_triangular, eigenvalues, five_data, invariants,
    mobius_apply, norm_conorm, parse_matrix, principal_sqrt, reduced_five_data,
    scaling_factor,
)
from .confrange import (
    CRInvariants, CRShape, ShapeKind, band_horo_check, bifocal_check,
    characteristic_ckb_values, confrange_G, confrange_Q, cr_eigen_ratios,
    cr_invariants, cr_oriented_distances, cr_reconstruct, cr_shape,
    eigenpoints_and_distance, parabola_check, pythagorean_check,
)
from .errors import *  # noqa: F401,F403
from .models import Model, convert, distance, horo_distance, iota, iota2, norm_distance
from .numrange import ellipse_data, numrange_G, numrange_Q, numrange_focal_roots
from .oracle import (
    envelope_algebraic, envelope_rotational, envelope_standard, project_quadratic,
    sample_cr, sample_numrange, sample_shell,
)
from .shell import (
    mobius_projective_rep, shell_G, shell_Q, shell_axis_distance, shell_center,
    shell_distances, shell_eigen_ratios, shell_geometry, shell_pencil_members,
    shell_signed_distance,
)

__version__ = "0.1.0"
