// SPDX-License-Identifier: Apache-2.0

//! Closed forms for `Σ R_p(a·x⁴ + c·x² + e)`.
//!
//! For `p >= 7` and `p ∤ c` the sum is `V·c² + W·e` where `(V, W)` depends
//! only on `p mod 8` and the quadratic character of `c`. Two independent
//! routes produce `(V, W)`:
//!
//! * [`vw_from_master_table`] rebuilds them from the duplicate-removal data
//!   in [`MASTER_TABLE`] (which `A_ij` holds the duplicated summands, its
//!   size and subtraction sum, and whether the middle residue `(p-1)/2`
//!   pairs with itself);
//! * [`vw_from_corollary_table`] reads the explicit fractions in
//!   [`COROLLARY_TABLE`].
//!
//! Both tables are stored as data so they can be compared row by row with
//! their published form.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::modular::{FieldElement, PrimeModulus, QuadraticCharacter};
use crate::residue_sets::{residue_set, BiquadraticPoly};

use QuadraticCharacter::{NonResidue, Residue};

/// A rational constant `num / den`, reduced modulo a prime at use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Fraction {
    pub num: i64,
    pub den: i64,
}

impl Fraction {
    pub const fn new(num: i64, den: i64) -> Self {
        Fraction { num, den }
    }

    pub fn reduce(&self, p: PrimeModulus) -> Result<FieldElement> {
        Ok(p.element(self.num) * p.element(self.den).inverse()?)
    }
}

impl std::fmt::Display for Fraction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// The integer `(p + offset) / divisor`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct AffineCount {
    pub offset: i64,
    pub divisor: u64,
}

impl AffineCount {
    pub const fn new(offset: i64, divisor: u64) -> Self {
        AffineCount { offset, divisor }
    }

    pub fn evaluate(&self, p: u64) -> u64 {
        let shifted = p as i128 + self.offset as i128;
        assert!(
            shifted >= 0 && shifted % self.divisor as i128 == 0,
            "(p {:+}) / {} is not an integer for p = {p}",
            self.offset,
            self.divisor
        );
        (shifted / self.divisor as i128) as u64
    }
}

/// One row of the duplicate-removal table, keyed by `(p mod 8, χ(c))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MasterTableRow {
    pub p_mod8: u8,
    pub chi_c: QuadraticCharacter,
    /// `A_i` with `χ(c) = (-1)^i`.
    pub i_index: QuadraticCharacter,
    /// The `j` of the cell `A_ij` holding the duplicated summands.
    pub j_index: QuadraticCharacter,
    /// Whether `(p - 1) / 2 ∈ A_ij`.
    pub middle_in_cell: bool,
    /// `Σ_{a ∈ A_ij} (a² + a)`, always `±1/32`.
    pub subtraction_sum: Fraction,
    /// `|A_ij|`.
    pub cell_size: AffineCount,
    /// `|A_i \ {-1}|`.
    pub class_size_without_minus_one: AffineCount,
}

const fn master_row(
    p_mod8: u8,
    chi_c: QuadraticCharacter,
    j_index: QuadraticCharacter,
    middle_in_cell: bool,
    sign: i64,
    cell_offset: i64,
    class_offset: i64,
) -> MasterTableRow {
    MasterTableRow {
        p_mod8,
        chi_c,
        i_index: chi_c,
        j_index,
        middle_in_cell,
        subtraction_sum: Fraction::new(sign, 32),
        cell_size: AffineCount::new(cell_offset, 4),
        class_size_without_minus_one: AffineCount::new(class_offset, 2),
    }
}

#[rustfmt::skip]
pub const MASTER_TABLE: [MasterTableRow; 8] = [
    //          p   χ(c)         j            middle  ±1/32  |A_ij|  |A_i\{-1}|
    master_row(1, Residue,    Residue,    true,    1,   -5,     -3),
    master_row(3, Residue,    NonResidue, true,   -1,    1,     -1),
    master_row(5, Residue,    Residue,    false,   1,   -5,     -3),
    master_row(7, Residue,    NonResidue, false,  -1,    1,     -1),
    master_row(1, NonResidue, NonResidue, false,   1,   -1,     -1),
    master_row(3, NonResidue, Residue,    false,  -1,   -3,     -3),
    master_row(5, NonResidue, NonResidue, true,    1,   -1,     -1),
    master_row(7, NonResidue, Residue,    true,   -1,   -3,     -3),
];

/// Explicit `(V, W)` fractions keyed by `(p mod 8, χ(c))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CorollaryRow {
    pub p_mod8: u8,
    pub chi_c: QuadraticCharacter,
    pub v: Fraction,
    pub w: Fraction,
}

const fn corollary_row(p_mod8: u8, chi_c: QuadraticCharacter, v: i64, w: i64) -> CorollaryRow {
    CorollaryRow {
        p_mod8,
        chi_c,
        v: Fraction::new(v, 64),
        w: Fraction::new(w, 8),
    }
}

#[rustfmt::skip]
pub const COROLLARY_TABLE: [CorollaryRow; 8] = [
    corollary_row(1, Residue,    -9,  5),
    corollary_row(3, Residue,    -7,  7),
    corollary_row(5, Residue,    -1,  1),
    corollary_row(7, Residue,     1,  3),
    corollary_row(1, NonResidue, -1,  5),
    corollary_row(3, NonResidue,  1, -1),
    corollary_row(5, NonResidue, -9,  9),
    corollary_row(7, NonResidue, -7,  3),
];

fn require_large(p: PrimeModulus) -> Result<()> {
    if p.get() < 7 {
        Err(Error::SmallPrime(p.get()))
    } else {
        Ok(())
    }
}

pub fn master_row_for(p: PrimeModulus, chi_c: QuadraticCharacter) -> &'static MasterTableRow {
    MASTER_TABLE
        .iter()
        .find(|r| r.p_mod8 == p.p_mod8() && r.chi_c == chi_c)
        .expect("every odd residue mod 8 has a row")
}

pub fn corollary_row_for(p: PrimeModulus, chi_c: QuadraticCharacter) -> &'static CorollaryRow {
    COROLLARY_TABLE
        .iter()
        .find(|r| r.p_mod8 == p.p_mod8() && r.chi_c == chi_c)
        .expect("every odd residue mod 8 has a row")
}

/// Coefficients of `Σ R(x⁴ + c·x² + e) ≡ V·c² + W·e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VWPair {
    pub v: FieldElement,
    pub w: FieldElement,
}

/// Derives `(V, W)` from the duplicate-removal data:
///
/// ```text
/// V = -1/2 · [ Σ_{A_ij}(a² + a) - (-1/4 if middle) ]
/// W = |A_i \ {-1}| - 1/2 · [ |A_ij| - (1 if middle) ] + 1
/// ```
///
/// The `-1/4` is `((p-1)/2)·((p+1)/2)`, the summand of the self-paired
/// middle residue.
pub fn vw_from_master_table(p: PrimeModulus, chi_c: QuadraticCharacter) -> Result<VWPair> {
    require_large(p)?;
    let row = master_row_for(p, chi_c);
    let half = Fraction::new(1, 2).reduce(p)?;

    let mut removed_sum = row.subtraction_sum.reduce(p)?;
    let mut removed_count = p.element_u64(row.cell_size.evaluate(p.get()));
    if row.middle_in_cell {
        removed_sum = removed_sum - Fraction::new(-1, 4).reduce(p)?;
        removed_count = removed_count - p.one();
    }
    let class_size = p.element_u64(row.class_size_without_minus_one.evaluate(p.get()));

    Ok(VWPair {
        v: -(half * removed_sum),
        w: class_size - half * removed_count + p.one(),
    })
}

pub fn vw_from_corollary_table(p: PrimeModulus, chi_c: QuadraticCharacter) -> Result<VWPair> {
    require_large(p)?;
    let row = corollary_row_for(p, chi_c);
    Ok(VWPair {
        v: row.v.reduce(p)?,
        w: row.w.reduce(p)?,
    })
}

/// `|R_p(x⁴)| = (p - 1) / gcd(4, p - 1) + 1`.
pub fn fourth_power_count(p: PrimeModulus) -> u64 {
    let g = if p.p_mod4() == 1 { 4 } else { 2 };
    (p.get() - 1) / g + 1
}

/// Closed-form `Σ R_p(a·x⁴ + c·x² + e)` for `p >= 7`.
///
/// A non-monic `f` is reduced through `R(a·x⁴ + c·x² + e) = a·R(x⁴ +
/// a⁻¹c·x² + a⁻¹e)`. When `p | c` the sum is `|R(x⁴)|·e`, with the
/// cardinality taken from the brute-force set of fourth powers.
pub fn sum_of_residues(f: &BiquadraticPoly, p: PrimeModulus) -> Result<FieldElement> {
    require_large(p)?;
    let (a, c, e) = f.reduce(p);
    if a.is_zero() {
        return Err(Error::DegenerateLeading(p.get()));
    }
    if c.is_zero() {
        let fourth_powers = residue_set(&BiquadraticPoly::monic(0, 0), p);
        return Ok(p.element_u64(fourth_powers.cardinality() as u64) * e);
    }
    let a_inv = a.inverse()?;
    let (c, e) = (a_inv * c, a_inv * e);
    let chi = QuadraticCharacter::from_symbol(c.legendre()).expect("c is nonzero");
    let VWPair { v, w } = vw_from_corollary_table(p, chi)?;
    Ok(a * (v * c * c + w * e))
}

/// `Σ R_p(a·x⁴ + c·x² + e)` for the excluded primes 3 and 5.
///
/// With `c ∈ A0` both primes give `2c² + 2e`; with `c ∈ A1` the sum is `e`
/// mod 3 and `3c² + 3e` mod 5. There is no closed form for `p | c` here, so
/// that case is read off the brute-force set.
pub fn sum_of_residues_small_prime(f: &BiquadraticPoly, p: PrimeModulus) -> Result<FieldElement> {
    if !matches!(p.get(), 3 | 5) {
        return Err(Error::WrongModulus(p.get()));
    }
    let (a, c, e) = f.reduce(p);
    if a.is_zero() {
        return Err(Error::DegenerateLeading(p.get()));
    }
    let a_inv = a.inverse()?;
    let (c, e) = (a_inv * c, a_inv * e);
    let monic_sum = match QuadraticCharacter::from_symbol(c.legendre()) {
        None => residue_set(&BiquadraticPoly::new(1, 0, e.value() as i64), p).sum_mod_p(),
        Some(Residue) => p.element(2) * (c * c + e),
        Some(NonResidue) if p.get() == 3 => e,
        Some(NonResidue) => p.element(3) * (c * c + e),
    };
    Ok(a * monic_sum)
}
