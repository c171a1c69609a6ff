"""Exact computations in the Grothendieck ring of mod-p representations of
GL2(F_q), with principal-series combinatorics, asymptotic multiplicity
bounds, a Brauer-character oracle, and Breuil-Mezard multiplicities."""

from .asymptotics import (
    BoundReport,
    ConstantsReport,
    SAlphaElement,
    check_theorem_bound,
    compute_constants,
    exact_multiplicity,
    frobenius_proximity,
    multiplicity_estimate,
    norm_L_inf,
    norm_S_1,
    operator_norm,
    residual,
    s_alpha,
    split_by_central_character,
    t_shift,
    t_shift_candidates,
)
from .bm import (
    GaloisTypeClass,
    RhoBarQp,
    a_sigma,
    mu_aut,
    mu_aut_asymptotic_qp,
    mu_aut_asymptotic_unramified,
    preset_type_crystalline_trivial_qp,
    preset_type_trivial_qp,
    qp_gate,
    serre_weights_qp_irreducible,
    unramified_gate,
)
from .brauer import (
    BrauerTable,
    OracleError,
    PRegularClass,
    build_table,
    character_of_irreducible,
    character_of_symm,
    enumerate_p_regular_classes,
    oracle_decompose,
)
from .params import FieldParams
from .principal import (
    ClosedPath,
    antecedents,
    diamond_decompose,
    enumerate_closed_paths,
    ell_of_path,
    lambda_of_path,
    mu_of_path,
    omega,
)
from .reduction import SymmFactor, reduce_product, reduce_symm
from .ring import (
    RingElement,
    central_character,
    convert_basis,
    det_twist,
    dimension,
    frobenius_twist,
    multiply,
    symm_to_L,
    theta_apply,
)

__all__ = [name for name in dir() if not name.startswith("_")]
