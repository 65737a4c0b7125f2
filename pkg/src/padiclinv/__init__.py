"""Exact p-adic linear algebra and derivative formulas for trivial-zero
L-invariants: precision-tracked arithmetic in Q_p and its unramified
extensions, first-order weight jets, rank-one cohomology dimension
tables, (phi, N)-module filtrations, GSp_2g Satake/Hecke combinatorics,
and the determinant formulas assembling the local factors."""

from .padic import (
    DEFAULT_PRECISION,
    PadicError,
    PadicScalar,
    UnramExtElement,
    UnramifiedField,
    ZeroValuation,
    frobenius,
    iwasawa_log,
    teichmuller_lift,
    valuation,
)
from .jets import ExponentialFamily, JetError, WeightJet, dlog, jet_arith, specialize_parallel
from .linalg import GUARD_DIGITS, PrecisionExhausted, SingularMatrix
from .rankone import (
    GENERIC,
    NON_POSITIVE_ALGEBRAIC,
    POSITIVE_NORM_TWIST,
    CocycleCoordinates,
    CohomologyProfile,
    LocalCharacter,
    classify_character,
    cohomology_profile,
    induction_profile,
    is_crystalline_line,
    nonsplit_block_dims,
)
from .phin import (
    AttestationError,
    FiltrationResult,
    PhiNModule,
    PhinError,
    RegularSubmodule,
    benois_filtration,
    check_regular,
    count_trivial_zeros,
    dual_module,
    is_semisimple_at,
    linearize_frobenius,
    phi_eigenvectors,
)
from .automorphic import (
    AutomorphicError,
    Refinement,
    SiegelLocalDatum,
    TriangulationDatum,
    enumerate_p_stabilizations,
    hecke_normalization,
    hodge_tate_weights,
    is_steinberg,
    spin_frobenius_eigenvalues,
    standard_frobenius_eigenvalues,
    tadic_reducible,
    triangulation_characters,
)
from .linvariant import (
    IotaMatrices,
    LinvReport,
    LinvariantError,
    adjoint_iota_wiring,
    assemble_report,
    linv_adjoint_gsp4,
    linv_general,
    linv_rank_one,
    linv_standard_twists,
    linv_steinberg_spin,
)

__version__ = "0.1.0"
