"""One-bend three-dimensional grid drawings with fixed vertex locations."""
from .analysis import (
    BoundingBox,
    BoundsReport,
    analyze,
    bounding_box,
    cutwidth_bruteforce,
    cutwidth_complete,
    kn_line_experiment,
    line_lower_bound,
    upper_bound_volume,
)
from .drawer import DrawOptions, DrawState, choose_anchor, draw_edge, draw_graph, is_bend_feasible
from .geometry import (
    GridPoint,
    Intersection,
    Kind,
    Segment,
    collinear,
    interior_lattice_count,
    point_on_segment,
    segments_intersect,
)
from .model import (
    Drawing,
    Graph,
    InstanceError,
    ParseError,
    Placement,
    PolylineEdge,
    ValidationError,
    load_drawing,
    load_instance,
    save_drawing,
)
from .verifier import VerificationReport, Violation, ViolationKind, verify

__version__ = "0.1.0"
