// SPDX-License-Identifier: Apache-2.0

//! Brute-force residue sets and the `A_ij` partition of consecutive
//! residue/non-residue pairs.
//!
//! [`residue_set`] is the oracle every closed form in this crate is checked
//! against, so it evaluates the polynomial at every point and never
//! consults a formula.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modular::{FieldElement, PrimeModulus, QuadraticCharacter, SymbolValue};

/// `a·x⁴ + c·x² + e` with integer coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BiquadraticPoly {
    pub a: i64,
    pub c: i64,
    pub e: i64,
}

impl BiquadraticPoly {
    pub fn new(a: i64, c: i64, e: i64) -> Self {
        BiquadraticPoly { a, c, e }
    }

    pub fn monic(c: i64, e: i64) -> Self {
        BiquadraticPoly { a: 1, c, e }
    }

    /// Coefficients reduced modulo `p`, as `(a, c, e)`.
    pub fn reduce(&self, p: PrimeModulus) -> (FieldElement, FieldElement, FieldElement) {
        (p.element(self.a), p.element(self.c), p.element(self.e))
    }

    pub fn eval(&self, x: FieldElement) -> FieldElement {
        let (a, c, e) = self.reduce(x.modulus());
        let x2 = x * x;
        (a * x2 + c) * x2 + e
    }
}

impl fmt::Display for BiquadraticPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x^4 + {}x^2 + {}", self.a, self.c, self.e)
    }
}

/// `t ↦ t² + β·t + γ`, the map a biquadratic induces on `x²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadraticMap {
    pub beta: i64,
    pub gamma: i64,
}

impl QuadraticMap {
    pub fn new(beta: i64, gamma: i64) -> Self {
        QuadraticMap { beta, gamma }
    }

    pub fn eval(&self, t: FieldElement) -> FieldElement {
        let p = t.modulus();
        (t + p.element(self.beta)) * t + p.element(self.gamma)
    }
}

/// A set of residues modulo `p`, kept sorted and duplicate-free, together
/// with its cardinality and its sum modulo `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueSummary {
    modulus: PrimeModulus,
    elements: Vec<u64>,
    sum: FieldElement,
}

impl ResidueSummary {
    pub fn from_elements<I>(p: PrimeModulus, values: I) -> Self
    where
        I: IntoIterator<Item = FieldElement>,
    {
        let mut elements: Vec<u64> = values
            .into_iter()
            .map(|v| {
                assert_eq!(v.modulus(), p, "field elements from different moduli");
                v.value()
            })
            .collect();
        elements.sort_unstable();
        elements.dedup();
        Self::from_sorted(p, elements)
    }

    /// Accepts raw integers; each is reduced modulo `p`.
    pub fn from_values<I>(p: PrimeModulus, values: I) -> Self
    where
        I: IntoIterator<Item = u64>,
    {
        Self::from_elements(p, values.into_iter().map(|v| p.element_u64(v)))
    }

    fn from_sorted(p: PrimeModulus, elements: Vec<u64>) -> Self {
        let sum = elements
            .iter()
            .fold(p.zero(), |acc, &v| acc + p.element_u64(v));
        ResidueSummary {
            modulus: p,
            elements,
            sum,
        }
    }

    pub fn empty(p: PrimeModulus) -> Self {
        Self::from_sorted(p, Vec::new())
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    /// Canonical values in ascending order.
    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn iter(&self) -> impl Iterator<Item = FieldElement> + '_ {
        self.elements.iter().map(|&v| self.modulus.element_u64(v))
    }

    pub fn cardinality(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn sum_mod_p(&self) -> FieldElement {
        self.sum
    }

    pub fn contains(&self, value: u64) -> bool {
        self.elements.binary_search(&value).is_ok()
    }

    pub fn union(&self, other: &ResidueSummary) -> ResidueSummary {
        Self::from_elements(self.modulus, self.iter().chain(other.iter()))
    }

    pub fn difference(&self, other: &ResidueSummary) -> ResidueSummary {
        let kept = self
            .elements
            .iter()
            .copied()
            .filter(|v| !other.contains(*v))
            .collect();
        Self::from_sorted(self.modulus, kept)
    }

    pub fn intersection(&self, other: &ResidueSummary) -> ResidueSummary {
        let kept = self
            .elements
            .iter()
            .copied()
            .filter(|v| other.contains(*v))
            .collect();
        Self::from_sorted(self.modulus, kept)
    }

    /// `k · S`, elementwise.
    pub fn scaled(&self, k: FieldElement) -> ResidueSummary {
        Self::from_elements(self.modulus, self.iter().map(|x| k * x))
    }
}

/// `R_p(f)`: the distinct values of `f(x) mod p` for `x = 0, ..., p - 1`.
pub fn residue_set(f: &BiquadraticPoly, p: PrimeModulus) -> ResidueSummary {
    let (a, c, e) = f.reduce(p);
    let mut seen = vec![false; p.get() as usize];
    for x in p.elements() {
        let x2 = x * x;
        let y = (a * x2 + c) * x2 + e;
        seen[y.value() as usize] = true;
    }
    let elements = seen
        .iter()
        .enumerate()
        .filter_map(|(v, &hit)| hit.then_some(v as u64))
        .collect();
    ResidueSummary::from_sorted(p, elements)
}

/// Distinct values of `g(t)` as `t` ranges over `domain`.
pub fn restricted_residue_set<I>(g: &QuadraticMap, domain: I, p: PrimeModulus) -> ResidueSummary
where
    I: IntoIterator<Item = FieldElement>,
{
    ResidueSummary::from_elements(p, domain.into_iter().map(|t| g.eval(t)))
}

/// `A0' = A0 ∪ {0}`, the squares modulo `p`.
pub fn squares_with_zero(p: PrimeModulus) -> ResidueSummary {
    ResidueSummary::from_elements(p, p.elements().map(|x| x * x))
}

/// `A1' = A1 ∪ {0}`.
pub fn non_residues_with_zero(p: PrimeModulus) -> ResidueSummary {
    ResidueSummary::from_elements(p, p.elements().filter(|x| x.legendre() != SymbolValue::One))
}

/// Quadratic residues `A0`, non-residues `A1` and the four classes
/// `A_ij = { a in [1, p-1] : a in A_i, a + 1 in A_j }`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResiduePartition {
    modulus: PrimeModulus,
    classes: [Vec<u64>; 2],
    cells: [[Vec<u64>; 2]; 2],
}

impl ResiduePartition {
    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    /// `A0` or `A1`, ascending.
    pub fn class(&self, i: QuadraticCharacter) -> &[u64] {
        &self.classes[i.index()]
    }

    /// `A_ij`, ascending.
    pub fn cell(&self, i: QuadraticCharacter, j: QuadraticCharacter) -> &[u64] {
        &self.cells[i.index()][j.index()]
    }

    /// Whether the middle residue `(p - 1) / 2` lies in `A_ij`.
    pub fn contains_middle(&self, i: QuadraticCharacter, j: QuadraticCharacter) -> bool {
        let middle = (self.modulus.get() - 1) / 2;
        self.cell(i, j).binary_search(&middle).is_ok()
    }

    /// `Σ_{a ∈ A_ij} (a² + a) mod p`, summed directly.
    pub fn cell_sum(&self, i: QuadraticCharacter, j: QuadraticCharacter) -> FieldElement {
        let p = self.modulus;
        self.cell(i, j)
            .iter()
            .map(|&a| {
                let a = p.element_u64(a);
                a * a + a
            })
            .fold(p.zero(), |acc, v| acc + v)
    }
}

pub fn partition(p: PrimeModulus) -> ResiduePartition {
    let n = p.get();
    let character: Vec<Option<QuadraticCharacter>> = p
        .elements()
        .map(|x| QuadraticCharacter::from_symbol(x.legendre()))
        .collect();

    let mut classes: [Vec<u64>; 2] = Default::default();
    let mut cells: [[Vec<u64>; 2]; 2] = Default::default();
    for a in 1..n {
        let Some(i) = character[a as usize] else {
            continue;
        };
        classes[i.index()].push(a);
        if let Some(j) = character[((a + 1) % n) as usize] {
            cells[i.index()][j.index()].push(a);
        }
    }
    ResiduePartition {
        modulus: p,
        classes,
        cells,
    }
}

/// `Σ_{a ∈ A_ij} (a² + a) mod p` for `p >= 7`.
pub fn subtraction_sum(
    p: PrimeModulus,
    i: QuadraticCharacter,
    j: QuadraticCharacter,
) -> Result<FieldElement> {
    if p.get() < 7 {
        return Err(Error::SmallPrime(p.get()));
    }
    Ok(partition(p).cell_sum(i, j))
}

/// The list `[((w⁻¹ - w) / 2)²]` for `w = 1, ..., p - 1`, in order of `w`.
///
/// Each `x²` in the list satisfies `x² + 1 = y²`, so the list hits `A00`
/// (four times per element), `0`, and `-1` when `-1` is a square.
pub fn a00_generation_list(p: PrimeModulus) -> Vec<FieldElement> {
    let half = p.element(2).inverse().expect("p is odd");
    (1..p.get())
        .map(|w| {
            let w = p.element_u64(w);
            let x = (w.inverse().expect("w is nonzero") - w) * half;
            x * x
        })
        .collect()
}

/// `Σ_{i=1}^{p-1} i^k mod p`, computed term by term.
pub fn faulhaber_check(p: PrimeModulus, k: u64) -> FieldElement {
    (1..p.get())
        .map(|i| p.element_u64(i).pow(k))
        .fold(p.zero(), |acc, v| acc + v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use QuadraticCharacter::{NonResidue as N, Residue as R};

    fn pm(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    #[test]
    fn residue_set_examples() {
        let s = residue_set(&BiquadraticPoly::monic(0, 0), pm(7));
        assert_eq!(s.elements(), &[0, 1, 2, 4]);
        assert_eq!(s.sum_mod_p().value(), 0);

        let s = residue_set(&BiquadraticPoly::monic(1, 0), pm(7));
        assert_eq!(s.elements(), &[0, 2, 6]);
        assert_eq!(s.sum_mod_p().value(), 1);
        assert_eq!(s.cardinality(), 3);

        let s = residue_set(&BiquadraticPoly::monic(2, 0), pm(11));
        assert_eq!(s.sum_mod_p().value(), 9);
    }

    #[test]
    fn residue_set_accepts_degenerate_leading() {
        // 7x^4 + x^2 mod 7 is just x^2
        let s = residue_set(&BiquadraticPoly::new(7, 1, 0), pm(7));
        assert_eq!(s.elements(), &[0, 1, 2, 4]);
    }

    #[test]
    fn restricted_examples() {
        let g = QuadraticMap::new(1, 0);
        let p3 = pm(3);
        let s = restricted_residue_set(&g, squares_with_zero(p3).iter(), p3);
        assert_eq!(s.elements(), &[0, 2]);
        assert_eq!(s.sum_mod_p().value(), 2);

        let p5 = pm(5);
        let domain = non_residues_with_zero(p5);
        assert_eq!(domain.elements(), &[0, 2, 3]);
        let s = restricted_residue_set(&g, domain.iter(), p5);
        assert_eq!(s.elements(), &[0, 1, 2]);
        assert_eq!(s.sum_mod_p().value(), 3);

        let s = restricted_residue_set(&g, std::iter::empty(), p5);
        assert!(s.is_empty());
        assert_eq!(s.sum_mod_p().value(), 0);
    }

    #[test]
    fn partition_examples() {
        let part = partition(pm(7));
        assert_eq!(part.class(R), &[1, 2, 4]);
        assert_eq!(part.class(N), &[3, 5, 6]);
        assert_eq!(part.cell(R, N).len(), 2);
        assert_eq!(part.cell(R, R), &[1]);

        let part = partition(pm(13));
        assert_eq!(part.cell(R, R).len(), 2);
    }

    #[test]
    fn last_residue_is_in_no_cell() {
        for p in [7, 11, 13, 17] {
            let part = partition(pm(p));
            for i in QuadraticCharacter::BOTH {
                for j in QuadraticCharacter::BOTH {
                    assert!(!part.cell(i, j).contains(&(p - 1)));
                    assert!(!part.cell(i, j).contains(&0));
                }
            }
        }
    }

    #[test]
    fn subtraction_sum_examples() {
        let p = pm(7);
        assert_eq!(subtraction_sum(p, R, R).unwrap().value(), 2);
        assert_eq!(subtraction_sum(p, R, N).unwrap().value(), 5);
        let inv32 = p.element(32).inverse().unwrap();
        assert_eq!(subtraction_sum(p, R, R).unwrap(), inv32);
        assert_eq!(
            subtraction_sum(p, R, R).unwrap() + subtraction_sum(p, R, N).unwrap(),
            p.zero()
        );
        assert_eq!(subtraction_sum(pm(5), R, R), Err(Error::SmallPrime(5)));
    }

    #[test]
    fn generation_list_examples() {
        let p = pm(7);
        let list = a00_generation_list(p);
        assert_eq!(list.len(), 6);
        assert_eq!(list[0].value(), 0);
        let a00 = partition(p).cell(R, R).to_vec();
        for v in &a00 {
            assert_eq!(list.iter().filter(|x| x.value() == *v).count(), 4);
        }

        let p = pm(13);
        assert!(a00_generation_list(p).contains(&p.minus_one()));
        // -1 is a non-residue mod 7
        assert!(!a00_generation_list(pm(7)).contains(&pm(7).minus_one()));
    }

    #[test]
    fn faulhaber_examples() {
        assert!(faulhaber_check(pm(7), 1).is_zero());
        assert!(faulhaber_check(pm(11), 2).is_zero());
        assert!(faulhaber_check(pm(13), 4).is_zero());
        // p - 1 divides k, so every term is 1
        assert_eq!(faulhaber_check(pm(5), 4).value(), 4);
    }

    #[test]
    fn summary_set_operations() {
        let p = pm(13);
        let sq = squares_with_zero(p);
        let fourth = residue_set(&BiquadraticPoly::new(1, 0, 0), p);
        assert_eq!(fourth.elements(), &[0, 1, 3, 9]);
        let diff = sq.difference(&fourth);
        assert_eq!(diff.elements(), &[4, 10, 12]);
        assert_eq!(diff.union(&fourth), sq);
        assert_eq!(sq.intersection(&fourth), fourth);
        assert_eq!(ResidueSummary::from_values(p, [14, 1, 27]).elements(), &[1]);
    }
}
