"""Bour-family minimal surfaces and their exact certificates."""

from .curves import (ZETA, MinimalCurve, WeierstrassData, bour_curve, isotropy_certificate,
                     weierstrass_data_from_curve, weierstrass_patch)
from .index import (DEGREE_LIMIT_MESSAGE, EXCLUSION_MESSAGE, InvalidIndex, SurfaceIndex,
                    parse_m, ribaucour_class, ribaucour_degree, symbolic_m)
from .integral_free import (IntegralFreeData, integral_free_components, phi_bour,
                            phi_from_components)
from .polar import polar_eval, polar_grid, total_curvature_closed_form, total_curvature_numeric
from .quadric import circle_image, quadric_certificate, quadric_coefficient, trig_expand
from .sections import (deltoid_certificate, deltoid_curve, deltoid_sample_values, profile_curve,
                       rational_circle_point, rotation_identities,
                       self_intersection_identities)
from .surface import (UV, FundamentalForms, RealParamSurface, cartesian_surface,
                      fundamental_forms, gauss_map, has_branch_point_at_origin,
                      minimality_certificate, normal_at_origin, parallel_certificate,
                      real_part_surface, unnormalized_normal)
from .tangential import (CARTESIAN_VARS, TANGENTIAL_VARS, DegreeLimitError, TangentialChart,
                         support_function, surface_class, surface_degree,
                         tangent_plane_identity, tangential_chart)

__all__ = [
    "ZETA", "MinimalCurve", "WeierstrassData", "bour_curve", "isotropy_certificate",
    "weierstrass_data_from_curve", "weierstrass_patch",
    "DEGREE_LIMIT_MESSAGE", "EXCLUSION_MESSAGE", "InvalidIndex", "SurfaceIndex", "parse_m",
    "ribaucour_class", "ribaucour_degree", "symbolic_m",
    "IntegralFreeData", "integral_free_components", "phi_bour", "phi_from_components",
    "polar_eval", "polar_grid", "total_curvature_closed_form", "total_curvature_numeric",
    "circle_image", "quadric_certificate", "quadric_coefficient", "trig_expand",
    "deltoid_certificate", "deltoid_curve", "deltoid_sample_values", "profile_curve",
    "rational_circle_point",
    "rotation_identities", "self_intersection_identities",
    "UV", "FundamentalForms", "RealParamSurface", "cartesian_surface", "fundamental_forms",
    "gauss_map", "has_branch_point_at_origin", "minimality_certificate", "normal_at_origin",
    "parallel_certificate", "real_part_surface", "unnormalized_normal",
    "CARTESIAN_VARS", "TANGENTIAL_VARS", "DegreeLimitError", "TangentialChart",
    "support_function", "surface_class", "surface_degree", "tangent_plane_identity",
    "tangential_chart",
]
