// SPDX-License-Identifier: Apache-2.0

//! Exact arithmetic modulo an odd 64-bit prime, primality testing, and the
//! quadratic and k-th power residue symbols.
//!
//! Every product is formed in `u128` before reduction, so results are exact
//! for any modulus below 2^64.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

// Witnesses sufficient for every n < 3.3 * 10^24, in particular all of u64.
const MR_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic Miller-Rabin for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &MR_WITNESSES {
        if n == q {
            return true;
        }
        if n.is_multiple_of(q) {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// An odd prime modulus with its residues mod 4 and mod 8 cached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeModulus {
    p: u64,
    p_mod4: u8,
    p_mod8: u8,
}

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self> {
        if p == 2 {
            return Err(Error::EvenPrime(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeModulus {
            p,
            p_mod4: (p % 4) as u8,
            p_mod8: (p % 8) as u8,
        })
    }

    #[inline]
    pub fn get(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn p_mod4(&self) -> u8 {
        self.p_mod4
    }

    #[inline]
    pub fn p_mod8(&self) -> u8 {
        self.p_mod8
    }

    /// Reduces an arbitrary signed integer into `[0, p)`.
    pub fn element(&self, value: i64) -> FieldElement {
        FieldElement {
            value: (value as i128).rem_euclid(self.p as i128) as u64,
            modulus: *self,
        }
    }

    pub fn element_u64(&self, value: u64) -> FieldElement {
        FieldElement {
            value: value % self.p,
            modulus: *self,
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.element_u64(0)
    }

    pub fn one(&self) -> FieldElement {
        self.element_u64(1)
    }

    /// `p - 1`, i.e. the residue of -1.
    pub fn minus_one(&self) -> FieldElement {
        self.element_u64(self.p - 1)
    }

    /// All residues `0, 1, ..., p - 1` in ascending order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.p).map(move |v| FieldElement {
            value: v,
            modulus: *self,
        })
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.p)
    }
}

/// A canonical residue in `[0, p)`.
///
/// Combining elements of different moduli is a programming error and panics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u64,
    modulus: PrimeModulus,
}

impl FieldElement {
    #[inline]
    pub fn value(&self) -> u64 {
        self.value
    }

    #[inline]
    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn pow(self, exp: u64) -> FieldElement {
        FieldElement {
            value: pow_mod(self.value, exp, self.modulus.p),
            modulus: self.modulus,
        }
    }

    pub fn inverse(self) -> Result<FieldElement> {
        if self.value == 0 {
            return Err(Error::ZeroInverse);
        }
        // Fermat: x^(p-2) = x^-1 for prime p.
        Ok(self.pow(self.modulus.p - 2))
    }

    /// Signed representative in `(-p/2, p/2]`, handy for display.
    pub fn centered(&self) -> i128 {
        let p = self.modulus.p;
        if self.value > p / 2 {
            self.value as i128 - p as i128
        } else {
            self.value as i128
        }
    }

    pub fn legendre(&self) -> SymbolValue {
        let p = self.modulus.p;
        match pow_mod(self.value, (p - 1) / 2, p) {
            0 => SymbolValue::Zero,
            1 => SymbolValue::One,
            r => {
                debug_assert_eq!(r, p - 1);
                SymbolValue::MinusOne
            }
        }
    }

    #[inline]
    fn check_same(&self, other: &FieldElement) {
        assert_eq!(
            self.modulus.p, other.modulus.p,
            "field elements from different moduli"
        );
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for FieldElement {
    type Output = FieldElement;

    fn add(self, rhs: FieldElement) -> FieldElement {
        self.check_same(&rhs);
        let p = self.modulus.p;
        let s = self.value as u128 + rhs.value as u128;
        FieldElement {
            value: (s % p as u128) as u64,
            modulus: self.modulus,
        }
    }
}

impl AddAssign for FieldElement {
    fn add_assign(&mut self, rhs: FieldElement) {
        *self = *self + rhs;
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;

    fn neg(self) -> FieldElement {
        let p = self.modulus.p;
        FieldElement {
            value: if self.value == 0 { 0 } else { p - self.value },
            modulus: self.modulus,
        }
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;

    fn sub(self, rhs: FieldElement) -> FieldElement {
        self.check_same(&rhs);
        self + (-rhs)
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;

    fn mul(self, rhs: FieldElement) -> FieldElement {
        self.check_same(&rhs);
        FieldElement {
            value: mul_mod(self.value, rhs.value, self.modulus.p),
            modulus: self.modulus,
        }
    }
}

impl MulAssign for FieldElement {
    fn mul_assign(&mut self, rhs: FieldElement) {
        *self = *self * rhs;
    }
}

impl std::iter::Sum for FieldElement {
    fn sum<I: Iterator<Item = FieldElement>>(iter: I) -> FieldElement {
        iter.reduce(|a, b| a + b)
            .expect("cannot sum an empty sequence of field elements without a modulus")
    }
}

/// Value of a Legendre or power residue symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SymbolValue {
    MinusOne,
    Zero,
    One,
}

impl SymbolValue {
    pub fn as_i8(self) -> i8 {
        match self {
            SymbolValue::MinusOne => -1,
            SymbolValue::Zero => 0,
            SymbolValue::One => 1,
        }
    }
}

impl Mul for SymbolValue {
    type Output = SymbolValue;

    fn mul(self, rhs: SymbolValue) -> SymbolValue {
        match self.as_i8() * rhs.as_i8() {
            -1 => SymbolValue::MinusOne,
            0 => SymbolValue::Zero,
            _ => SymbolValue::One,
        }
    }
}

impl Serialize for SymbolValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i8(self.as_i8())
    }
}

/// Whether a nonzero residue is a square (`A0`) or a non-square (`A1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QuadraticCharacter {
    Residue,
    NonResidue,
}

impl QuadraticCharacter {
    pub const BOTH: [QuadraticCharacter; 2] =
        [QuadraticCharacter::Residue, QuadraticCharacter::NonResidue];

    pub fn from_sign(sign: i64) -> Result<Self> {
        match sign {
            1 => Ok(QuadraticCharacter::Residue),
            -1 => Ok(QuadraticCharacter::NonResidue),
            other => Err(Error::InvalidCharacter(other)),
        }
    }

    /// `None` for the zero symbol.
    pub fn from_symbol(symbol: SymbolValue) -> Option<Self> {
        match symbol {
            SymbolValue::One => Some(QuadraticCharacter::Residue),
            SymbolValue::MinusOne => Some(QuadraticCharacter::NonResidue),
            SymbolValue::Zero => None,
        }
    }

    pub fn sign(self) -> i8 {
        match self {
            QuadraticCharacter::Residue => 1,
            QuadraticCharacter::NonResidue => -1,
        }
    }

    /// 0 for `A0`, 1 for `A1`.
    pub fn index(self) -> usize {
        match self {
            QuadraticCharacter::Residue => 0,
            QuadraticCharacter::NonResidue => 1,
        }
    }
}

impl Serialize for QuadraticCharacter {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i8(self.sign())
    }
}

impl<'de> Deserialize<'de> for QuadraticCharacter {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let sign = i64::deserialize(d)?;
        QuadraticCharacter::from_sign(sign).map_err(serde::de::Error::custom)
    }
}

pub fn mod_pow(base: FieldElement, exp: u64) -> FieldElement {
    base.pow(exp)
}

pub fn mod_inverse(x: FieldElement) -> Result<FieldElement> {
    x.inverse()
}

/// Legendre symbol `(a/p)` by Euler's criterion.
pub fn legendre_symbol(a: i64, p: PrimeModulus) -> SymbolValue {
    p.element(a).legendre()
}

/// `(a/p)_k`: one when `x^k = a` has a nonzero solution, zero when `p | a`.
///
/// With `g = gcd(k, p - 1)` the k-th powers of units are exactly the g-th
/// powers, which are the `a` with `a^((p-1)/g) = 1`.
pub fn power_residue_symbol(a: i64, p: PrimeModulus, k: u64) -> SymbolValue {
    assert!(k >= 2, "power residue symbol needs k >= 2");
    let a = p.element(a);
    if a.is_zero() {
        return SymbolValue::Zero;
    }
    let g = gcd(k, p.get() - 1);
    if a.pow((p.get() - 1) / g).value() == 1 {
        SymbolValue::One
    } else {
        SymbolValue::MinusOne
    }
}
