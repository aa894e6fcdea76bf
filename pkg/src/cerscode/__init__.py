"""Binary coding of perfect matchings, resonance graphs and resonant
equivalence for catacondensed even ring systems (cers)."""

from .coding import (
    CodedMatchingMap,
    CodeSet,
    FaceOrdering,
    binary_codes,
    code_graph,
    coded_matchings,
    well_order_faces,
)
from .equivalence import (
    SegmentEdit,
    apply_transformation,
    benzenoid_to_phenylene,
    canonical_form,
    find_nonbenzenoid_witness,
    is_normal,
    resonantly_equivalent,
    to_benzenoid,
)
from .kernels import BACKEND
from .matching import check_link_property, enumerate_perfect_matchings
from .model import (
    BoundarySegment,
    CersError,
    CersSpec,
    FaceSpec,
    PlaneCers,
    TripleClass,
    boundary_segments,
    classify_triple,
    edge_distance,
    inner_dual,
    link,
    realize,
    validate_spec,
)
from .resonance import (
    ResonanceGraph,
    build_resonance_graph,
    graph_isomorphic,
    is_median_graph,
    verify_isometric_embedding,
)

__version__ = "0.1.0"
