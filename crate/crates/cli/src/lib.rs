// SPDX-License-Identifier: Apache-2.0

//! Command implementations behind the `biquad` binary.

pub mod args;
pub mod records;
pub mod verify;

use std::io::Write;

use biquad_core::closed_form::corollary_row_for;
use biquad_core::{
    classify, partition, residue_set, set_of_sums_bruteforce, subtraction_sum, sum_of_residues,
    sum_of_residues_small_prime, vw_from_corollary_table, vw_from_master_table, BiquadraticPoly,
    PrimeModulus, QuadraticCharacter,
};

use args::{Cli, Command, Format, PrimeArg, SumArgs, VerifyArgs, VwArgs};
use records::{
    ClassifyRecord, PartitionStatsRecord, Record, SetOfSumsRecord, SumRecord, VerifyReport,
    VwRecord,
};
use verify::VerifyOptions;

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments; exit code 2.
    Usage(String),
    Io(std::io::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Io(err) => write!(f, "{err}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<biquad_core::Error> for CliError {
    fn from(err: biquad_core::Error) -> Self {
        CliError::Usage(err.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Io(err)
    }
}

/// Whether every closed form agreed with brute force.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Match,
    Mismatch,
}

impl Outcome {
    fn from_match(ok: bool) -> Self {
        if ok {
            Outcome::Match
        } else {
            Outcome::Mismatch
        }
    }
}

fn modulus(p: u64) -> Result<PrimeModulus, CliError> {
    Ok(PrimeModulus::new(p)?)
}

fn emit<R: Record>(out: &mut dyn Write, format: Format, record: &R) -> Result<(), CliError> {
    match format {
        Format::Json => {
            serde_json::to_writer(&mut *out, record).map_err(std::io::Error::from)?;
            writeln!(out)?;
        }
        Format::Text => write!(out, "{}", record.text())?,
    }
    Ok(())
}

pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Sum(args) => {
            let record = sum(args)?;
            emit(out, cli.format, &record)?;
            Ok(Outcome::from_match(record.matches))
        }
        Command::Vw(args) => {
            let record = vw(args)?;
            emit(out, cli.format, &record)?;
            Ok(Outcome::from_match(record.matches))
        }
        Command::SetOfSums(PrimeArg { p }) => {
            emit(out, cli.format, &set_of_sums(*p)?)?;
            Ok(Outcome::Match)
        }
        Command::Classify(PrimeArg { p }) => {
            let record = classify_prime(*p)?;
            emit(out, cli.format, &record)?;
            Ok(Outcome::from_match(record.matches))
        }
        Command::PartitionStats(PrimeArg { p }) => {
            emit(out, cli.format, &partition_stats(*p)?)?;
            Ok(Outcome::Match)
        }
        Command::Verify(args) => {
            let report = run_verify(args)?;
            emit(out, cli.format, &report)?;
            Ok(Outcome::from_match(report.mismatches.is_empty()))
        }
    }
}

pub fn sum(args: &SumArgs) -> Result<SumRecord, CliError> {
    let p = modulus(args.p)?;
    let f = BiquadraticPoly::new(args.a, args.c, args.e);
    let (closed, route) = if p.get() < 7 {
        (sum_of_residues_small_prime(&f, p)?, "small_prime")
    } else {
        (sum_of_residues(&f, p)?, "closed_form")
    };
    let brute = residue_set(&f, p).sum_mod_p();
    Ok(SumRecord {
        p: p.get(),
        a: args.a,
        c: args.c,
        e: args.e,
        route: route.to_string(),
        closed: closed.value(),
        brute: brute.value(),
        matches: closed == brute,
    })
}

pub fn vw(args: &VwArgs) -> Result<VwRecord, CliError> {
    let p = modulus(args.p)?;
    let chi = QuadraticCharacter::from_sign(args.chi)?;
    let master = vw_from_master_table(p, chi)?;
    let corollary = vw_from_corollary_table(p, chi)?;
    let row = corollary_row_for(p, chi);
    Ok(VwRecord {
        p: p.get(),
        p_mod8: p.p_mod8(),
        chi: chi.sign(),
        v_fraction: row.v.to_string(),
        w_fraction: row.w.to_string(),
        master_v: master.v.value(),
        master_w: master.w.value(),
        corollary_v: corollary.v.value(),
        corollary_w: corollary.w.value(),
        matches: master == corollary,
    })
}

pub fn set_of_sums(p: u64) -> Result<SetOfSumsRecord, CliError> {
    let s = set_of_sums_bruteforce(modulus(p)?);
    Ok(SetOfSumsRecord {
        p,
        cardinality: s.cardinality(),
        set_of_sums: s.elements().to_vec(),
    })
}

pub fn classify_prime(p: u64) -> Result<ClassifyRecord, CliError> {
    let p = modulus(p)?;
    let c = classify(p);
    let brute = set_of_sums_bruteforce(p);
    let route = c.dispatch_route;
    Ok(ClassifyRecord {
        p: p.get(),
        kind: c.kind.to_string(),
        minus_one_in_sp: route.minus_one_in_sp,
        seven_is_qr: route.seven_is_qr,
        three_is_qr: route.three_is_qr,
        p_mod28: route.p_mod28,
        p_mod24: route.p_mod24,
        matches: c.witness_set == brute,
        witness_set: c.witness_set.elements().to_vec(),
        brute_force_set: brute.elements().to_vec(),
    })
}

pub fn partition_stats(p: u64) -> Result<PartitionStatsRecord, CliError> {
    use QuadraticCharacter::{NonResidue as N, Residue as R};
    let p = modulus(p)?;
    let part = partition(p);
    let sum = |i, j| subtraction_sum(p, i, j).map(|s| s.value());
    Ok(PartitionStatsRecord {
        p: p.get(),
        a00_size: part.cell(R, R).len(),
        a01_size: part.cell(R, N).len(),
        a10_size: part.cell(N, R).len(),
        a11_size: part.cell(N, N).len(),
        a00_sum: sum(R, R)?,
        a01_sum: sum(R, N)?,
        a10_sum: sum(N, R)?,
        a11_sum: sum(N, N)?,
        middle_in_a00: part.contains_middle(R, R),
        middle_in_a01: part.contains_middle(R, N),
        middle_in_a10: part.contains_middle(N, R),
        middle_in_a11: part.contains_middle(N, N),
    })
}

pub fn run_verify(args: &VerifyArgs) -> Result<VerifyReport, CliError> {
    verify::run(&VerifyOptions {
        min: args.min,
        max: args.max,
        e_samples: args.e_samples,
        seed: args.seed,
        jobs: args.jobs,
    })
}
