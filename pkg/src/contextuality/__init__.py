"""A nine-ray qutrit contextuality test: ray sets, orthogonality graphs,
noncontextual bounds, quantum values and witness alignment."""

__version__ = "0.1.0"

from .config import DEFAULT_TOLS, Tolerances
from .errors import (
    ContextualityError,
    DimensionMismatchError,
    InvalidObjectError,
    LimitExceededError,
    ParseError,
)
from .linalg import DensityMatrix, hermitian_eig, inner_product, projector_of, von_neumann_entropy
from .scenario import (
    OrthogonalityGraph,
    RaySet,
    build_graph,
    builtin_paper_rayset,
    degrees,
    graph_equal,
    independence_number,
    induced_five_cycles,
)
from .hiddenvars import nc_bound_correlation, nc_bound_projector, nc_bounds
from .witness import (
    align,
    assemble_witness,
    correlation_value,
    prior_information,
    projector_value,
    run_test,
)
