// SPDX-License-Identifier: Apache-2.0

//! Acceptance suite. Every check is an exact congruence or set equality
//! against the brute-force oracle; there is no tolerance to tune.
//!
//! Prints one PASS/FAIL line per criterion and exits nonzero if any fail.

use std::process::ExitCode;
use std::time::Instant;

use biquad_core::*;

use QuadraticCharacter::{NonResidue as N, Residue as R};

type Outcome = std::result::Result<String, String>;

fn primes(lo: u64, hi: u64) -> Vec<PrimeModulus> {
    (lo..=hi)
        .filter_map(|n| PrimeModulus::new(n).ok())
        .collect()
}

fn smallest_qr_above_one(p: PrimeModulus) -> i64 {
    (2..p.get() as i64)
        .find(|&a| legendre_symbol(a, p) == SymbolValue::One)
        .expect("p >= 7 has a residue above 1")
}

fn smallest_non_residue(p: PrimeModulus) -> i64 {
    (2..p.get() as i64)
        .find(|&a| legendre_symbol(a, p) == SymbolValue::MinusOne)
        .expect("odd p has a non-residue")
}

fn search_sign(a: u64, p: u64, k: u32) -> i8 {
    if a.is_multiple_of(p) {
        return 0;
    }
    let hit = (1..p).any(|x| (0..k).fold(1u64, |y, _| y * x % p) == a);
    if hit {
        1
    } else {
        -1
    }
}

fn closed_form_sums() -> Outcome {
    let mut cases = 0usize;
    let mut mismatches = Vec::new();
    for p in primes(7, 499) {
        let n = p.get() as i64;
        let leading = [1, smallest_qr_above_one(p), smallest_non_residue(p)];
        for a in leading {
            for c in 0..n {
                for e in [0, 1, 2, n - 1] {
                    let f = BiquadraticPoly::new(a, c, e);
                    let oracle = residue_set(&f, p).sum_mod_p();
                    let closed = sum_of_residues(&f, p).map_err(|err| err.to_string())?;
                    cases += 1;
                    if closed != oracle {
                        mismatches.push(format!("p={p} f={f}: closed {closed} oracle {oracle}"));
                    }
                }
            }
        }
    }
    if mismatches.is_empty() {
        Ok(format!("{cases} polynomials, 0 mismatches"))
    } else {
        Err(format!(
            "{} mismatches, first: {}",
            mismatches.len(),
            mismatches[0]
        ))
    }
}

fn vw_tables() -> Outcome {
    let mut rows = std::collections::BTreeSet::new();
    let mut checked = 0;
    for p in primes(7, 499) {
        for chi in QuadraticCharacter::BOTH {
            let master = vw_from_master_table(p, chi).map_err(|e| e.to_string())?;
            let corollary = vw_from_corollary_table(p, chi).map_err(|e| e.to_string())?;
            if master != corollary {
                return Err(format!(
                    "p={p} chi={:+}: {master:?} vs {corollary:?}",
                    chi.sign()
                ));
            }
            rows.insert((p.p_mod8(), chi));
            checked += 1;
        }
    }
    if rows.len() != 8 {
        return Err(format!("only {} of 8 rows exercised", rows.len()));
    }
    Ok(format!(
        "{checked} (p, chi) pairs, {} table rows ({} fractions)",
        rows.len(),
        2 * rows.len()
    ))
}

fn partition_statistics() -> Outcome {
    let mut count = 0;
    for p in primes(7, 499) {
        let part = partition(p);
        let n = p.get();
        let sizes = [(R, R), (R, N), (N, R), (N, N)].map(|(i, j)| part.cell(i, j).len() as u64);
        let expected = if matches!(p.p_mod8(), 1 | 5) {
            [(n - 5) / 4, (n - 1) / 4, (n - 1) / 4, (n - 1) / 4]
        } else {
            [(n - 3) / 4, (n + 1) / 4, (n - 3) / 4, (n - 3) / 4]
        };
        if sizes != expected {
            return Err(format!("p={p}: |A_ij| = {sizes:?}, expected {expected:?}"));
        }
        let inv32 = p.element(32).inverse().map_err(|e| e.to_string())?;
        for (i, j, want) in [(R, R, inv32), (N, N, inv32), (R, N, -inv32), (N, R, -inv32)] {
            let got = subtraction_sum(p, i, j).map_err(|e| e.to_string())?;
            if got != want {
                return Err(format!(
                    "p={p}: subtraction sum A{}{} = {got}, expected {want}",
                    i.index(),
                    j.index()
                ));
            }
        }
        count += 1;
    }
    Ok(format!(
        "{count} primes, cardinalities and ±1/32 sums exact"
    ))
}

fn a00_generation() -> Outcome {
    let mut count = 0;
    for p in primes(7, 199) {
        let list = a00_generation_list(p);
        let a00 = partition(p).cell(R, R).to_vec();
        let minus_one = p.get() - 1;
        for v in &a00 {
            let hits = list.iter().filter(|x| x.value() == *v).count();
            if hits != 4 {
                return Err(format!("p={p}: {v} appears {hits} times"));
            }
        }
        if let Some(stray) = list
            .iter()
            .map(|x| x.value())
            .find(|v| !(a00.contains(v) || *v == 0 || *v == minus_one))
        {
            return Err(format!("p={p}: {stray} lies outside A00 ∪ {{0, -1}}"));
        }
        count += 1;
    }
    Ok(format!(
        "{count} primes, every A00 element 4 times, nothing stray"
    ))
}

fn faulhaber_zeros() -> Outcome {
    let mut count = 0;
    for p in primes(7, 499) {
        for k in [1, 2, 4] {
            let s = faulhaber_check(p, k);
            if !s.is_zero() {
                return Err(format!("p={p} k={k}: sum is {s}"));
            }
        }
        count += 1;
    }
    Ok(format!("{count} primes × k ∈ {{1, 2, 4}}"))
}

fn set_of_sums_classification() -> Vec<(&'static str, Outcome)> {
    let witness = || -> Outcome {
        let mut count = 0;
        for p in primes(3, 499) {
            let brute = set_of_sums_bruteforce(p);
            let c = classify(p);
            if c.witness_set != brute {
                return Err(format!(
                    "p={p}: {} witness {:?} vs S(p) {:?}",
                    c.kind,
                    c.witness_set.elements(),
                    brute.elements()
                ));
            }
            count += 1;
        }
        Ok(format!(
            "classify(p).witness_set = S(p) for {count} primes in [3, 499]"
        ))
    };
    let dispatch = || -> Outcome {
        let mut count = 0;
        for p in primes(7, 499) {
            let by_symbol = classify(p).kind;
            let by_class = classify_by_residue_class(p)
                .map_err(|e| e.to_string())?
                .kind;
            if by_symbol != by_class {
                return Err(format!("p={p}: {by_symbol} vs {by_class}"));
            }
            count += 1;
        }
        Ok(format!(
            "classify = classify_by_residue_class for {count} primes in [7, 499]"
        ))
    };
    let small = || -> Outcome {
        let sets: Vec<(u64, Vec<u64>)> = [3, 5]
            .map(|p| {
                (
                    p,
                    set_of_sums_bruteforce(PrimeModulus::new(p).unwrap())
                        .elements()
                        .to_vec(),
                )
            })
            .into();
        let shown = sets
            .iter()
            .map(|(p, s)| format!("S({p}) = {s:?}"))
            .collect::<Vec<_>>()
            .join(", ");
        if sets.iter().all(|(_, s)| s == &[0, 2]) {
            Ok(shown)
        } else {
            Err(format!(
                "{shown}; expected {{0, 2}} for both (the c = 0 term Σ R(x⁴) = 1 is not 0 for p < 7)"
            ))
        }
    };
    vec![("6a", witness()), ("6b", dispatch()), ("6c", small())]
}

fn symbol_correctness() -> Outcome {
    let mut count = 0;
    for p in primes(3, 199) {
        let n = p.get();
        for a in 0..n {
            let l = legendre_symbol(a as i64, p).as_i8();
            let q = power_residue_symbol(a as i64, p, 4).as_i8();
            if l != search_sign(a, n, 2) || q != search_sign(a, n, 4) {
                return Err(format!("p={p} a={a}: legendre {l}, quartic {q}"));
            }
        }
        count += 1;
    }
    for p in primes(7, 499) {
        let expected = match (p.p_mod4(), p.p_mod8()) {
            (3, _) => -1,
            (_, 1) => 1,
            _ => -1,
        };
        let got = power_residue_symbol(-1, p, 4).as_i8();
        if got != expected {
            return Err(format!("p={p}: (-1/p)_4 = {got}, expected {expected}"));
        }
    }
    Ok(format!(
        "{count} primes exhaustive; (-1/p)_4 table for [7, 499]"
    ))
}

fn non_monic_scaling() -> Outcome {
    let mut count = 0;
    for p in primes(7, 199) {
        let n = p.get() as i64;
        for a in [smallest_qr_above_one(p), smallest_non_residue(p)] {
            let a_el = p.element(a);
            let a_inv = a_el.inverse().map_err(|e| e.to_string())?;
            for c in 0..n {
                for e in [0, 1, 2, n - 1] {
                    let lhs = residue_set(&BiquadraticPoly::new(a, c, e), p);
                    let monic = BiquadraticPoly::monic(
                        (a_inv * p.element(c)).value() as i64,
                        (a_inv * p.element(e)).value() as i64,
                    );
                    let rhs = residue_set(&monic, p).scaled(a_el);
                    if lhs != rhs {
                        return Err(format!("p={p} a={a} c={c} e={e}"));
                    }
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} set identities"))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let mut results: Vec<(&str, &str, Outcome)> = vec![
        ("1", "closed-form sum vs oracle", closed_form_sums()),
        ("2", "master vs corollary V/W", vw_tables()),
        ("3", "partition statistics", partition_statistics()),
        ("4", "A00 generation list", a00_generation()),
        ("5", "Faulhaber zeros", faulhaber_zeros()),
    ];
    for (id, outcome) in set_of_sums_classification() {
        results.push((id, "S(p) classification", outcome));
    }
    results.push(("7", "symbol correctness", symbol_correctness()));
    results.push(("8", "non-monic scaling", non_monic_scaling()));

    let mut failed = 0;
    for (id, name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("[PASS] criterion {id:<3} {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] criterion {id:<3} {name}: {detail}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed in {:.1}s",
        results.len() - failed,
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
