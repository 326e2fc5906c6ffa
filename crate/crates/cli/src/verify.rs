// SPDX-License-Identifier: Apache-2.0

//! Prime-range sweep that checks every closed form against brute force.
//!
//! Primes are independent, so they are checked in parallel and the per-prime
//! results are merged back in ascending prime order.

use std::time::Instant;

use biquad_core::closed_form::{fourth_power_count, COROLLARY_TABLE};
use biquad_core::{
    a00_generation_list, classify, classify_by_residue_class, faulhaber_check, partition,
    residue_set, set_of_sums_bruteforce, subtraction_sum, sum_of_residues,
    sum_of_residues_small_prime, vw_from_corollary_table, vw_from_master_table, BiquadraticPoly,
    FieldElement, PrimeModulus, QuadraticCharacter, SumSetKind, SymbolValue,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::records::{Mismatch, VerifyReport};
use crate::CliError;

/// Largest `--max` accepted; the sweep costs roughly `Σ p²` polynomial
/// evaluations.
pub const MAX_VERIFY_PRIME: u64 = 5000;

/// Below this bound every `e in [0, p)` is tried.
pub const EXHAUSTIVE_E_BOUND: u64 = 61;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub min: u64,
    pub max: u64,
    pub e_samples: usize,
    pub seed: u64,
    pub jobs: usize,
}

#[derive(Default)]
struct Tally {
    cases: u64,
    mismatches: Vec<Mismatch>,
}

struct Case<'a> {
    check_name: &'a str,
    p: u64,
    a: Option<i64>,
    c: Option<i64>,
    e: Option<i64>,
}

impl<'a> Case<'a> {
    fn new(check_name: &'a str, p: PrimeModulus) -> Self {
        Case {
            check_name,
            p: p.get(),
            a: None,
            c: None,
            e: None,
        }
    }

    fn poly(mut self, f: &BiquadraticPoly) -> Self {
        (self.a, self.c, self.e) = (Some(f.a), Some(f.c), Some(f.e));
        self
    }
}

impl Tally {
    fn check(
        &mut self,
        case: Case<'_>,
        expected: u64,
        got: u64,
        detail: impl FnOnce() -> Option<String>,
    ) {
        self.cases += 1;
        if expected != got {
            self.mismatches.push(Mismatch {
                check_name: case.check_name.to_string(),
                p: case.p,
                a: case.a,
                c: case.c,
                e: case.e,
                expected,
                got,
                detail: detail(),
            });
        }
    }

    fn check_elements(&mut self, case: Case<'_>, expected: FieldElement, got: FieldElement) {
        self.check(case, expected.value(), got.value(), || None);
    }

    fn error(&mut self, case: Case<'_>, err: biquad_core::Error) {
        let detail = err.to_string();
        self.check(case, 0, 1, || Some(detail));
    }
}

pub fn primes_in(min: u64, max: u64) -> Vec<PrimeModulus> {
    (min..=max)
        .filter_map(|n| PrimeModulus::new(n).ok())
        .collect()
}

pub fn validate(opts: &VerifyOptions) -> Result<(), CliError> {
    if opts.min < 3 || opts.min > opts.max {
        return Err(CliError::Usage(format!(
            "need 3 <= min <= max, got min={} max={}",
            opts.min, opts.max
        )));
    }
    if opts.max > MAX_VERIFY_PRIME {
        return Err(CliError::Usage(format!(
            "max={} exceeds the sweep limit {MAX_VERIFY_PRIME}",
            opts.max
        )));
    }
    if opts.jobs == 0 {
        return Err(CliError::Usage("--jobs must be at least 1".into()));
    }
    Ok(())
}

pub fn run(opts: &VerifyOptions) -> Result<VerifyReport, CliError> {
    validate(opts)?;
    let start = Instant::now();
    let primes = primes_in(opts.min, opts.max);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let tallies: Vec<Tally> =
        pool.install(|| primes.par_iter().map(|&p| check_prime(p, opts)).collect());

    let mut report = VerifyReport {
        prime_range: (opts.min, opts.max),
        primes_checked: primes.len(),
        cases_checked: 0,
        mismatches: Vec::new(),
        elapsed_ms: 0,
    };
    for t in tallies {
        report.cases_checked += t.cases;
        report.mismatches.extend(t.mismatches);
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

fn check_prime(p: PrimeModulus, opts: &VerifyOptions) -> Tally {
    let mut tally = Tally::default();
    if p.get() < 7 {
        check_small_prime_sums(p, &mut tally);
    } else {
        check_sums(p, opts, &mut tally);
        check_vw(p, &mut tally);
        check_partition(p, &mut tally);
        check_generation_list(p, &mut tally);
        check_faulhaber(p, &mut tally);
        check_dispatch(p, &mut tally);
    }
    check_classification(p, &mut tally);
    tally
}

fn leading_coefficients(p: PrimeModulus) -> Vec<i64> {
    let first = |want: SymbolValue| (2..p.get() as i64).find(|&a| p.element(a).legendre() == want);
    let mut out = vec![1];
    out.extend(first(SymbolValue::One));
    out.extend(first(SymbolValue::MinusOne));
    out
}

fn e_values(p: PrimeModulus, opts: &VerifyOptions) -> Vec<i64> {
    let n = p.get();
    if n <= EXHAUSTIVE_E_BOUND {
        return (0..n as i64).collect();
    }
    let mut values = vec![0, 1, 2, n as i64 - 1];
    // Seeded per prime so the draw does not depend on how primes are split
    // across workers.
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ n.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    values.extend((0..opts.e_samples).map(|_| rng.random_range(0..n) as i64));
    values
}

fn check_sums(p: PrimeModulus, opts: &VerifyOptions, tally: &mut Tally) {
    let es = e_values(p, opts);
    for a in leading_coefficients(p) {
        for c in 0..p.get() as i64 {
            for &e in &es {
                let f = BiquadraticPoly::new(a, c, e);
                let oracle = residue_set(&f, p).sum_mod_p();
                match sum_of_residues(&f, p) {
                    Ok(closed) => tally.check_elements(
                        Case::new("closed_form_sum", p).poly(&f),
                        oracle,
                        closed,
                    ),
                    Err(err) => tally.error(Case::new("closed_form_sum", p).poly(&f), err),
                }
            }
        }
    }
    tally.check(
        Case::new("fourth_power_count", p),
        residue_set(&BiquadraticPoly::monic(0, 0), p).cardinality() as u64,
        fourth_power_count(p),
        || None,
    );
}

fn check_small_prime_sums(p: PrimeModulus, tally: &mut Tally) {
    for a in 1..p.get() as i64 {
        for c in 0..p.get() as i64 {
            for e in 0..p.get() as i64 {
                let f = BiquadraticPoly::new(a, c, e);
                let oracle = residue_set(&f, p).sum_mod_p();
                match sum_of_residues_small_prime(&f, p) {
                    Ok(closed) => tally.check_elements(
                        Case::new("small_prime_sum", p).poly(&f),
                        oracle,
                        closed,
                    ),
                    Err(err) => tally.error(Case::new("small_prime_sum", p).poly(&f), err),
                }
            }
        }
    }
}

fn check_vw(p: PrimeModulus, tally: &mut Tally) {
    for chi in QuadraticCharacter::BOTH {
        let (master, corollary) = match (
            vw_from_master_table(p, chi),
            vw_from_corollary_table(p, chi),
        ) {
            (Ok(m), Ok(c)) => (m, c),
            (Err(err), _) | (_, Err(err)) => {
                tally.error(Case::new("vw_tables", p), err);
                continue;
            }
        };
        let row = COROLLARY_TABLE
            .iter()
            .find(|r| r.p_mod8 == p.p_mod8() && r.chi_c == chi)
            .expect("row exists");
        tally.check(
            Case::new("vw_tables_v", p),
            corollary.v.value(),
            master.v.value(),
            || Some(format!("chi={:+}, V={}", chi.sign(), row.v)),
        );
        tally.check(
            Case::new("vw_tables_w", p),
            corollary.w.value(),
            master.w.value(),
            || Some(format!("chi={:+}, W={}", chi.sign(), row.w)),
        );
    }
}

fn check_partition(p: PrimeModulus, tally: &mut Tally) {
    use QuadraticCharacter::{NonResidue as N, Residue as R};
    let n = p.get();
    let part = partition(p);
    let expected_sizes = if p.p_mod4() == 1 {
        [(n - 5) / 4, (n - 1) / 4, (n - 1) / 4, (n - 1) / 4]
    } else {
        [(n - 3) / 4, (n + 1) / 4, (n - 3) / 4, (n - 3) / 4]
    };
    let inv32 = p.element(32).inverse().expect("p >= 7");
    let expected_sums = [inv32, -inv32, -inv32, inv32];
    let cells = [(R, R), (R, N), (N, R), (N, N)];
    let names = ["A00", "A01", "A10", "A11"];
    for (k, (i, j)) in cells.into_iter().enumerate() {
        tally.check(
            Case::new("lemmermeyer_count", p),
            expected_sizes[k],
            part.cell(i, j).len() as u64,
            || Some(names[k].to_string()),
        );
        match subtraction_sum(p, i, j) {
            Ok(sum) => tally.check(
                Case::new("subtraction_sum", p),
                expected_sums[k].value(),
                sum.value(),
                || Some(names[k].to_string()),
            ),
            Err(err) => tally.error(Case::new("subtraction_sum", p), err),
        }
    }
}

fn check_generation_list(p: PrimeModulus, tally: &mut Tally) {
    let list = a00_generation_list(p);
    let a00 = partition(p)
        .cell(QuadraticCharacter::Residue, QuadraticCharacter::Residue)
        .to_vec();
    let minus_one = p.get() - 1;
    for &v in &a00 {
        let hits = list.iter().filter(|x| x.value() == v).count() as u64;
        tally.check(Case::new("a00_generation_multiplicity", p), 4, hits, || {
            Some(format!("element {v}"))
        });
    }
    let strays = list
        .iter()
        .filter(|x| {
            let v = x.value();
            !(v == 0 || v == minus_one || a00.binary_search(&v).is_ok())
        })
        .count() as u64;
    tally.check(Case::new("a00_generation_strays", p), 0, strays, || None);
    let minus_one_is_square = p.minus_one().legendre() == SymbolValue::One;
    tally.check(
        Case::new("a00_generation_minus_one", p),
        minus_one_is_square as u64,
        list.contains(&p.minus_one()) as u64,
        || None,
    );
    tally.check(
        Case::new("a00_generation_zero", p),
        1,
        list.iter().any(|x| x.is_zero()) as u64,
        || None,
    );
}

fn check_faulhaber(p: PrimeModulus, tally: &mut Tally) {
    for k in [1, 2, 4] {
        tally.check(
            Case::new("faulhaber_zero", p),
            0,
            faulhaber_check(p, k).value(),
            || Some(format!("k={k}")),
        );
    }
}

fn kind_code(kind: SumSetKind) -> u64 {
    match kind {
        SumSetKind::FullField => 0,
        SumSetKind::Squares => 1,
        SumSetKind::FourthPowers => 2,
        SumSetKind::SquaresMinusFourthPowersWithZero => 3,
        SumSetKind::ExplicitSmallPrime => 4,
    }
}

fn check_classification(p: PrimeModulus, tally: &mut Tally) {
    let brute = set_of_sums_bruteforce(p);
    let classified = classify(p);
    let same = classified.witness_set == brute;
    tally.check(Case::new("classification_set", p), 1, same as u64, || {
        Some(format!(
            "{} witness {:?} vs brute force {:?}",
            classified.kind,
            classified.witness_set.elements(),
            brute.elements()
        ))
    });
    tally.check(
        Case::new("minus_one_in_sp", p),
        brute.contains(p.get() - 1) as u64,
        classified.dispatch_route.minus_one_in_sp as u64,
        || None,
    );
}

fn check_dispatch(p: PrimeModulus, tally: &mut Tally) {
    let by_symbol = classify(p).kind;
    match classify_by_residue_class(p) {
        Ok(by_class) => tally.check(
            Case::new("classification_dispatch", p),
            kind_code(by_class.kind),
            kind_code(by_symbol),
            || {
                Some(format!(
                    "residue class says {}, symbols say {by_symbol}",
                    by_class.kind
                ))
            },
        ),
        Err(err) => tally.error(Case::new("classification_dispatch", p), err),
    }
}
