"""singlab: exact lattice invariants of resolution graphs of normal
surface singularities.

From a weighted dual resolution graph (plus the geometric genus, supplied
directly or computed from a weighted-homogeneous equation) the package
computes fundamental cycles, the canonical cycle, the elliptic sequence,
normal Hilbert data, and the classification of elliptic ideals whose
normal tangent cone is Gorenstein.  All arithmetic is exact.
"""

from .artinian import DensePoly, MonomialIdeal, colength, colength_saturating, standard_monomials
from .classify import (
    AfStructure,
    ClassificationReport,
    EllipticIdealClass,
    HilbertData,
    classify_gorenstein_elliptic_ideals,
    derive_af,
    normal_hilbert_data,
    pg_ideal_gorenstein_test,
)
from .cycles import (
    adjunction_vector,
    canonical_cycle,
    chi,
    fundamental_cycle,
    is_numerically_gorenstein,
    riemann_roch_colength,
)
from .elliptic import (
    EllipticSequence,
    MinusOneChainReport,
    check_minus_one_chains,
    chi_nonnegative_check,
    elliptic_sequence,
    enumerate_antinef_upto,
    is_elliptic,
    minimally_elliptic_cycle,
)
from .errors import (
    EnumerationLimitError,
    InputError,
    InternalCheckError,
    ParseError,
    SinglabError,
)
from .graph import (
    Cycle,
    DualGraph,
    QCycle,
    Vertex,
    intersection_matrix,
    is_anti_nef,
    is_negative_definite,
    pairing,
    parse_graph,
    serialize_graph,
)
from .wh import (
    WeightedPoly,
    a_invariant,
    br_maximal_ideal_brieskorn,
    graded_dim,
    pg_brieskorn,
    pg_weighted_homogeneous,
)

__version__ = "0.1.0"
