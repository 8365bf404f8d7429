from .data_models import (
    Normalization, WallRelation, CurveClass, ExtremalRay, RejectedClass, MoriConeAnalysis,
    ExtremalPrimitiveRelation,
)
from .relations import (
    MoriError, wall_relation, curve_class, intersection_number, intersection_sign, recognize_wps,
)
from .mori_cone import (
    NonCanonicalRelationError, ExtremalStructureError, relative_mori_cone, mori_cone_analysis,
    extremal_rays, get_extremal_ray, relative_picard_number, extremal_primitive_relation,
    witness_total, epr_from_relation,
)
from .structure import verify_primitive_closure, verify_extremal_structure

__all__ = [
    'Normalization', 'WallRelation', 'CurveClass', 'ExtremalRay', 'RejectedClass',
    'MoriConeAnalysis', 'ExtremalPrimitiveRelation',
    'MoriError', 'wall_relation', 'curve_class', 'intersection_number', 'intersection_sign',
    'recognize_wps',
    'NonCanonicalRelationError', 'ExtremalStructureError', 'relative_mori_cone',
    'mori_cone_analysis', 'extremal_rays', 'get_extremal_ray', 'relative_picard_number',
    'extremal_primitive_relation', 'witness_total', 'epr_from_relation',
    'verify_primitive_closure', 'verify_extremal_structure',
]
