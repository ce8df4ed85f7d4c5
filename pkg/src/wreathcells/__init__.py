"""Exact cellular and constructible characters for the groups G(d,1,n)."""

from .combinatorics import (
    BoxCoord,
    CharacterSum,
    DPartition,
    StandardTableau,
    addable_boxes,
    content,
    empty_dpartition,
    enumerate_dpartitions,
    parse_dpartition,
    removable_boxes,
    standard_tableaux,
    tableau_count,
)
from .conjecture import (
    ConjectureVerdict,
    InvalidParam,
    NonIntegralRatio,
    UnsortedParameters,
    check_conjecture,
    params_from_r,
    r_from_params,
)
from .fock import (
    ConstructibleCharacters,
    CrystalComponent,
    FockVector,
    LeadingTermMismatch,
    NonTerminating,
    PositivityWarning,
    Symbol,
    canonical_basis,
    crystal_f,
    divided_power_f,
    dpartition_from_symbol,
    e_action,
    enumerate_standard_symbols,
    f_action,
    highest_weight_symbol,
    intermediate_A,
    lm_constructible,
    lt_monomial,
    symbol_from_dpartition,
)
from .gd12 import (
    Cyclo,
    GaudinReport,
    RegimeMismatch,
    XYPoly,
    cm_cells_n2,
    cm_cells_n2_family,
    cyclotomic_polynomial,
    gaudin_matrices,
    sim_classes,
    verify_frac_identity,
    verify_gaudin_eigensystem,
)
from .jucys_murphy import (
    CellDecomposition,
    CMParams,
    GenericityReport,
    euler_value,
    is_generic,
    jm_cellular_characters,
    jm_eigenvalue,
    tableau_spectrum,
)
from .laurent import (
    LaurentPoly,
    NotDivisible,
    Rational,
    bar_symmetric_head,
    parse_laurent,
    parse_rational,
    q,
    q_factorial,
    q_integer,
)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
