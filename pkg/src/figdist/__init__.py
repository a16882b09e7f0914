"""Distance between straight-edge planar figures.

The distance combines an angular dissimilarity over corresponding angles
with an edge-length disproportionality measured against an origin line
fitted by iterative proportional fitting. It is defined only for figures
with isomorphic adjacency graphs.
"""

from .angular import AngularResult, alpha, angular_dissimilarity, angular_shifts
from .corpus import FigureCorpus, build_corpus, distance_matrix, emit_scatter, nearest
from .distance import DEFAULT_BETA, DistanceReport, UndefinedDistance, distance
from .edge_prop import EdgeResult, edge_deviations, edge_disproportionality, rho
from .figure import (
    CorrespondenceError,
    Figure,
    FigurePair,
    FigureFormatError,
    FigureSchemaError,
    FigureSyntaxError,
    FigureValidationError,
    dump_figure,
    dumps_figure,
    figure_violations,
    load_figure,
    parse_figure,
    scale_figure,
    validate_figure,
)
from .graph_iso import Graph, adjacency_graph, is_isomorphic
from .ipfp import (
    DEFAULT_TOLERANCE,
    ConvergenceError,
    FitTable,
    FittedLine,
    closed_form_fit,
    column_fit,
    fit_table,
    ipfp_fit,
    row_fit,
)
from .reference import REFERENCE_PAIRS, load_reference, reference_dir

__version__ = "0.1.0"
