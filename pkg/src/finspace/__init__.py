"""Finite topological spaces, homotopy reductions and asphericity certificates."""

from finspace.algebra import (
    GroupPresentation,
    HomologySummary,
    IntegerMatrix,
    abelianization,
    boundary_matrices,
    edge_path_presentation,
    euler_characteristic,
    free_rank_height1,
    fundamental_group,
    homology,
    homology_space,
    smith_normal_form,
    tietze_simplify,
)
from finspace.aspherical import (
    a_points,
    a_reduce,
    asphericity_certificate,
    is_a_point,
    is_strong_aspherical,
    strong_aspherical_complex,
    theorem36_subspace_check,
    whitehead_check,
)
from finspace.certificate import Certificate, Verdict
from finspace.poset import (
    FiniteSpace,
    build_space,
    components,
    down_set,
    extremal_points,
    height,
    is_isomorphic,
    non_hausdorff_suspension,
    punctured_link,
    up_set,
)
from finspace.qc import (
    is_qc_reducible,
    lemma33_check,
    prop25_check,
    qc_candidates,
    qc_reduce,
    split_phases,
    theorem34_certificate,
)
from finspace.reduction import (
    ReductionMove,
    ReductionTrace,
    beat_points,
    core,
    homotopically_trivial_certificate,
    homotopy_equivalent,
    is_collapsible,
    is_contractible,
    weak_points,
)
from finspace.search import Outcome
from finspace.simplicial import (
    SimplicialComplex,
    barycentric,
    collapse_to_dimension,
    face_poset,
    free_faces,
    order_complex,
    star_link,
)

__version__ = "0.1.0"
