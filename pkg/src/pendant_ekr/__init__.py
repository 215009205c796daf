"""Exact verification of Erdős–Ko–Rado properties of pendant graphs."""

from .closed_forms import (
    argmax_star_product,
    check_path_recurrence,
    count_kstar_formula,
    fib,
    star_kstar_formula,
    star_product,
)
from .compression import compress, partition_pxr, phi_step
from .errors import (
    CapacityError,
    EkrError,
    GraphParseError,
    InvalidParameterError,
    InvalidVertexError,
    PreconditionError,
    SolverCapError,
)
from .families import (
    SetFamily,
    StarTable,
    independent_rsets,
    is_intersecting,
    star,
    star_center,
    star_table,
)
from .graphs import (
    Graph,
    build_family,
    delete_closed_neighborhood,
    is_well_covered,
    min_maximal_independent,
    pendant_closure,
    pendant_edges_form_perfect_matching,
    pendant_family,
)
from .solver import EkrVerdict, ekr_verdict, holroyd_talbot_report, beats_star_family, max_intersecting

__version__ = "0.1.0"
