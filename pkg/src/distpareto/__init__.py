"""Distance Pareto eigenvalues of connected graphs.

The Pareto spectrum of a distance matrix is the set of spectral radii of its
principal submatrices.  This package enumerates it, certifies individual
values, evaluates closed forms and inequalities for the two largest values,
classifies the fifth and sixth smallest values, and scans graph6 corpora
for counterexamples to related conjectures.
"""

from .bounds import BoundCheck
from .corpus_io import (
    Graph6Record,
    ScanReport,
    csv_projection,
    emit_graph6,
    parse_graph6,
    read_graph6,
    scan_conjectures,
    write_report,
)
from .errors import (
    DomainError,
    InvalidParameterError,
    MalformedInputError,
    NumericError,
    OutOfRangeError,
    ParetoError,
    ResourceError,
)
from .graph_core import (
    Graph,
    PatternId,
    clique_number,
    coalesce,
    degree,
    diameter,
    distance_matrix,
    find_induced,
    has_induced,
    is_bipartite,
    is_isomorphic,
    is_pyramidal,
    is_unicyclic,
    make_family,
    transmission,
)
from .pareto import (
    ParetoCertificate,
    ParetoSpectrum,
    certificate_for,
    mu,
    pareto_spectrum,
    rho,
    rho2_by_deletion,
    spectrum_size,
    verify_pareto,
)
from .spectral import (
    SpectralResult,
    all_eigenvalues,
    avg_row_sum_bound,
    dominates,
    principal_submatrix,
    rayleigh,
    spectral_radius,
)
from .theorems import (
    GAMMA,
    MuVerdict,
    check_diff_cn,
    check_diff_rownorm,
    check_diff_sn,
    check_r1_lower_family,
    check_r1_optimal,
    check_r1_t1,
    check_ratio,
    check_transmission_bound,
    classify_mu5,
    classify_mu6,
    gamma_root,
    rho2_snplus_closed_form,
    rho2_wheel_closed_form,
    star_spectrum_closed_form,
)

__version__ = "0.1.0"
