// SPDX-License-Identifier: Apache-2.0

//! Sums of distinct residues of biquadratic polynomials `a·x⁴ + c·x² + e`
//! modulo a prime, and the classification of the set of such sums.
//!
//! Everything here is exact modular arithmetic. Closed forms live in
//! [`closed_form`] and [`classification`]; the brute-force oracles they are
//! checked against live in [`residue_sets`].

pub mod classification;
pub mod closed_form;
pub mod error;
pub mod modular;
pub mod residue_sets;

pub use classification::{
    canonical_set, classify, classify_by_residue_class, set_of_sums_bruteforce, DispatchRoute,
    SumSetClassification, SumSetKind,
};
pub use closed_form::{
    sum_of_residues, sum_of_residues_small_prime, vw_from_corollary_table, vw_from_master_table,
    Fraction, MasterTableRow, VWPair, COROLLARY_TABLE, MASTER_TABLE,
};
pub use error::{Error, Result};
pub use modular::{
    is_prime, legendre_symbol, mod_inverse, mod_pow, power_residue_symbol, FieldElement,
    PrimeModulus, QuadraticCharacter, SymbolValue,
};
pub use residue_sets::{
    a00_generation_list, faulhaber_check, partition, residue_set, restricted_residue_set,
    subtraction_sum, BiquadraticPoly, QuadraticMap, ResiduePartition, ResidueSummary,
};
