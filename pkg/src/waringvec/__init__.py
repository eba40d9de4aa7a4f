"""Simultaneous Waring decompositions of vectors of homogeneous forms.

A vector (f_1, ..., f_r) of complex forms in n+1 variables is decomposed
as f_j = sum_i lambda_i^j l_i^{a_j} with shared linear forms l_i.  The
package decides when the counting problem is square ("perfect"), checks
secant defectivity numerically, counts decompositions of generic vectors
by monodromy, and recovers them explicitly by contraction kernels.
"""
from .combinatorics import (CaseSpec, binary_identifiable, is_perfect,
                            pair_lower_bound, veronese_count)
from .decomposition import WaringDecomposition, canonical_point
from .errors import (DefectiveCaseError, DegenerateCaseError,
                     DegenerateInputError, InconclusiveError)
from .polycore import (HomogeneousPoly, PolyVector, apolar_contract,
                       monomial_basis, random_poly_vector)
from .apolarity import (BundleSpec, ContractionMatrix, base_locus,
                        catalecticant, decompose, default_bundle,
                        nonabelian_matrix, quotient_pairing)
from .terracini import DefectResult, secant_defect, tangent_frame
from .homotopy import (CountResult, SolutionRegistry, TrackerOptions,
                       count_decompositions, decompositions_of)
from .tables import TableRow, load_table, run_row, run_table

__version__ = "0.1.0"

__all__ = [
    "CaseSpec", "is_perfect", "veronese_count", "pair_lower_bound",
    "binary_identifiable",
    "HomogeneousPoly", "PolyVector", "monomial_basis", "apolar_contract",
    "random_poly_vector",
    "WaringDecomposition", "canonical_point",
    "BundleSpec", "default_bundle", "catalecticant", "nonabelian_matrix",
    "quotient_pairing", "ContractionMatrix", "base_locus", "decompose",
    "DefectResult", "secant_defect", "tangent_frame",
    "TrackerOptions", "SolutionRegistry", "CountResult",
    "count_decompositions", "decompositions_of",
    "TableRow", "load_table", "run_row", "run_table",
    "DegenerateInputError", "DegenerateCaseError", "DefectiveCaseError",
    "InconclusiveError",
    "__version__",
]
