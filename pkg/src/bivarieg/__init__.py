"""bivarieg: 2-variegated graphs, line graphs, and everything decidable
about their interaction on small graphs.

Highlights: certificate-producing 2-variegation detection, Krausz-partition
line-graph recognition with root reconstruction, the line-graph equation
solvers, the degree-sequence characterization, exact integer spectra of
complete 2-variegated graphs, and exhaustive corpus scans.
"""

__version__ = "1.0.0"

from .bivariegation import (
    BivariegationCertificate,
    FixedPointVerdict,
    LineGraphEquationVerdict,
    NestedEquationVerdict,
    PathDecomposition,
    bivariegation_certificate,
    certificate_failures,
    find_path_decomposition,
    fixed_point_check,
    is_bivariegated,
    iterated_bivariegation_profile,
    solve_line_graph_equation,
    solve_nested_equation,
    verify_certificate,
)
from .corpus import corpus, oracle_is_bivariegated
from .degseq import (
    AdmissiblePartition,
    admissible_partitions,
    degree_sequence_of_partition,
    enumerate_realizations,
    extract_partition,
    forcibly_bivariegated_line_graphic,
    potentially_bivariegated_line_graphic,
    realize_partition,
)
from .errors import InputError, ResourceLimitError
from .graph import (
    Graph,
    complete,
    complete_bipartite,
    complete_bivariegated,
    cycle,
    degree_sequence,
    family,
    from_edge_list,
    path,
    petersen,
    union,
)
from .io import from_graph6, parse_graph, to_edge_list_text, to_graph6
from .isomorphism import find_isomorphism, is_isomorphic
from .linegraph import (
    KrauszPartition,
    is_line_graph,
    iterated_line_graph,
    krausz_partition,
    line_graph,
    verify_krausz,
)
from .scans import ScanReport, scan
from .spectra import (
    SpectrumReport,
    spectrum_complete_bivariegated,
    verify_polynomial_identity,
)

__all__ = [
    "AdmissiblePartition",
    "BivariegationCertificate",
    "FixedPointVerdict",
    "Graph",
    "InputError",
    "KrauszPartition",
    "LineGraphEquationVerdict",
    "NestedEquationVerdict",
    "PathDecomposition",
    "ResourceLimitError",
    "ScanReport",
    "SpectrumReport",
    "__version__",
    "admissible_partitions",
    "bivariegation_certificate",
    "certificate_failures",
    "complete",
    "complete_bipartite",
    "complete_bivariegated",
    "corpus",
    "cycle",
    "degree_sequence",
    "degree_sequence_of_partition",
    "enumerate_realizations",
    "extract_partition",
    "family",
    "find_isomorphism",
    "find_path_decomposition",
    "fixed_point_check",
    "forcibly_bivariegated_line_graphic",
    "from_edge_list",
    "from_graph6",
    "is_bivariegated",
    "is_isomorphic",
    "is_line_graph",
    "iterated_bivariegation_profile",
    "iterated_line_graph",
    "krausz_partition",
    "line_graph",
    "oracle_is_bivariegated",
    "parse_graph",
    "path",
    "petersen",
    "potentially_bivariegated_line_graphic",
    "realize_partition",
    "scan",
    "solve_line_graph_equation",
    "solve_nested_equation",
    "spectrum_complete_bivariegated",
    "to_edge_list_text",
    "to_graph6",
    "union",
    "verify_certificate",
    "verify_krausz",
    "verify_polynomial_identity",
]
