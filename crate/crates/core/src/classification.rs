// SPDX-License-Identifier: Apache-2.0

//! The set of sums `S(p) = { Σ R_p(x⁴ + c·x²) : c ∈ Z_p }` and its
//! identification with squares, fourth powers, or the whole field.
//!
//! For `p >= 7`, `-1 ∈ S(p)` is decided by whether 7 (when `p ≡ 3 mod 4`)
//! or 3 (when `p ≡ 1 mod 4`) is a quadratic residue, and that single bit
//! together with `p mod 8` names the set. [`classify_by_residue_class`]
//! reaches the same answer from `p mod 28` or `p mod 24` alone.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::modular::{PrimeModulus, SymbolValue};
use crate::residue_sets::{residue_set, squares_with_zero, BiquadraticPoly, ResidueSummary};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SumSetKind {
    /// All of `Z_p`.
    FullField,
    /// `R(x²)`, the squares including 0.
    Squares,
    /// `R(x⁴)`, the fourth powers including 0.
    FourthPowers,
    /// `(R(x²) \ R(x⁴)) ∪ {0}`.
    SquaresMinusFourthPowersWithZero,
    /// `p ∈ {3, 5}`, which carry their literal sets.
    ExplicitSmallPrime,
}

impl std::fmt::Display for SumSetKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            SumSetKind::FullField => "FullField",
            SumSetKind::Squares => "Squares",
            SumSetKind::FourthPowers => "FourthPowers",
            SumSetKind::SquaresMinusFourthPowersWithZero => "SquaresMinusFourthPowersWithZero",
            SumSetKind::ExplicitSmallPrime => "ExplicitSmallPrime",
        };
        f.write_str(name)
    }
}

/// The facts the classifier branched on. Only the fields of the branch
/// actually taken are set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct DispatchRoute {
    pub minus_one_in_sp: bool,
    pub seven_is_qr: Option<bool>,
    pub three_is_qr: Option<bool>,
    pub p_mod28: Option<u64>,
    pub p_mod24: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumSetClassification {
    pub kind: SumSetKind,
    /// The set named by `kind`, materialized.
    pub witness_set: ResidueSummary,
    pub dispatch_route: DispatchRoute,
}

/// `S(3)` and `S(5)`. The `c = 0` term contributes `Σ R(x⁴) = Σ {0, 1} = 1`
/// for both primes; every other `c` gives 0 or 2.
fn small_prime_sums(p: PrimeModulus) -> Option<ResidueSummary> {
    match p.get() {
        3 => Some(ResidueSummary::from_values(p, [0, 1, 2])),
        5 => Some(ResidueSummary::from_values(p, [1, 2])),
        _ => None,
    }
}

/// `S(p)` straight from the residue-set oracle, one brute-force sum per `c`.
pub fn set_of_sums_bruteforce(p: PrimeModulus) -> ResidueSummary {
    ResidueSummary::from_elements(
        p,
        (0..p.get()).map(|c| residue_set(&BiquadraticPoly::monic(c as i64, 0), p).sum_mod_p()),
    )
}

/// Enumerates the set named by `kind` directly from squares and fourth
/// powers. `ExplicitSmallPrime` is only defined for `p ∈ {3, 5}`.
pub fn canonical_set(kind: SumSetKind, p: PrimeModulus) -> Result<ResidueSummary> {
    let fourth_powers = || ResidueSummary::from_elements(p, p.elements().map(|x| x.pow(4)));
    Ok(match kind {
        SumSetKind::FullField => ResidueSummary::from_elements(p, p.elements()),
        SumSetKind::Squares => squares_with_zero(p),
        SumSetKind::FourthPowers => fourth_powers(),
        SumSetKind::SquaresMinusFourthPowersWithZero => squares_with_zero(p)
            .difference(&fourth_powers())
            .union(&ResidueSummary::from_values(p, [0])),
        SumSetKind::ExplicitSmallPrime => {
            small_prime_sums(p).ok_or(Error::WrongModulus(p.get()))?
        }
    })
}

fn is_qr(a: i64, p: PrimeModulus) -> bool {
    p.element(a).legendre() == SymbolValue::One
}

fn materialize(
    kind: SumSetKind,
    p: PrimeModulus,
    dispatch_route: DispatchRoute,
) -> SumSetClassification {
    SumSetClassification {
        kind,
        witness_set: canonical_set(kind, p).expect("kind is valid for p"),
        dispatch_route,
    }
}

/// Classifies `S(p)` through the quadratic character of 7 or 3.
///
/// `p = 7` has `(7/p) = 0` and falls on the `R(x²)` side along with the
/// primes where 7 is a non-residue.
pub fn classify(p: PrimeModulus) -> SumSetClassification {
    if let Some(witness_set) = small_prime_sums(p) {
        let route = DispatchRoute {
            minus_one_in_sp: witness_set.contains(p.get() - 1),
            ..Default::default()
        };
        return SumSetClassification {
            kind: SumSetKind::ExplicitSmallPrime,
            witness_set,
            dispatch_route: route,
        };
    }

    if p.p_mod4() == 3 {
        let seven_is_qr = is_qr(7, p);
        let kind = if seven_is_qr {
            SumSetKind::FullField
        } else {
            SumSetKind::Squares
        };
        let route = DispatchRoute {
            minus_one_in_sp: seven_is_qr,
            seven_is_qr: Some(seven_is_qr),
            ..Default::default()
        };
        return materialize(kind, p, route);
    }

    let three_is_qr = is_qr(3, p);
    let kind = match (three_is_qr, p.p_mod8()) {
        (true, _) => SumSetKind::Squares,
        (false, 5) => SumSetKind::FourthPowers,
        (false, _) => SumSetKind::SquaresMinusFourthPowersWithZero,
    };
    let route = DispatchRoute {
        minus_one_in_sp: three_is_qr,
        three_is_qr: Some(three_is_qr),
        ..Default::default()
    };
    materialize(kind, p, route)
}

/// Classifies `S(p)` from `p mod 28` (for `p ≡ 3 mod 4`) or `p mod 24`
/// (for `p ≡ 1 mod 4`) without evaluating any symbol.
pub fn classify_by_residue_class(p: PrimeModulus) -> Result<SumSetClassification> {
    if p.get() < 7 {
        return Err(Error::SmallPrime(p.get()));
    }
    if p.p_mod4() == 3 {
        let r = p.get() % 28;
        let (kind, minus_one_in_sp) = match r {
            3 | 19 | 27 => (SumSetKind::FullField, true),
            7 | 11 | 15 | 23 => (SumSetKind::Squares, false),
            _ => unreachable!("{r} is not 3 mod 4"),
        };
        let route = DispatchRoute {
            minus_one_in_sp,
            p_mod28: Some(r),
            ..Default::default()
        };
        return Ok(materialize(kind, p, route));
    }
    let r = p.get() % 24;
    let (kind, minus_one_in_sp) = match r {
        1 | 13 => (SumSetKind::Squares, true),
        5 | 21 => (SumSetKind::FourthPowers, false),
        9 | 17 => (SumSetKind::SquaresMinusFourthPowersWithZero, false),
        _ => unreachable!("{r} is not 1 mod 4 and prime to 3"),
    };
    let route = DispatchRoute {
        minus_one_in_sp,
        p_mod24: Some(r),
        ..Default::default()
    };
    Ok(materialize(kind, p, route))
}
