// SPDX-License-Identifier: Apache-2.0

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "biquad",
    version,
    about = "Sums of distinct residues of a·x⁴ + c·x² + e modulo primes",
    allow_negative_numbers = true
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form residue sum next to the brute-force sum.
    Sum(SumArgs),
    /// V and W from both the master table and the explicit fractions.
    Vw(VwArgs),
    /// The set of sums S(p), by brute force.
    SetOfSums(PrimeArg),
    /// Classify S(p) and compare with brute force.
    Classify(PrimeArg),
    /// Sizes and subtraction sums of the four A_ij classes.
    PartitionStats(PrimeArg),
    /// Sweep a prime range and check every closed form against brute force.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct PrimeArg {
    #[arg(long)]
    pub p: u64,
}

#[derive(Debug, Args)]
pub struct SumArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    pub a: i64,
    #[arg(long, allow_negative_numbers = true)]
    pub c: i64,
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub e: i64,
}

#[derive(Debug, Args)]
pub struct VwArgs {
    #[arg(long)]
    pub p: u64,
    /// Quadratic character of c: +1 or -1.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_chi)]
    pub chi: i64,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub min: u64,
    #[arg(long)]
    pub max: u64,
    /// Random values of e per (a, c) on top of {0, 1, 2, p-1}.
    #[arg(long, default_value_t = 0)]
    pub e_samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

fn parse_chi(s: &str) -> Result<i64, String> {
    match s.trim() {
        "+1" | "1" | "+" => Ok(1),
        "-1" | "\u{2212}1" | "-" => Ok(-1),
        other => Err(format!("expected +1 or -1, got {other:?}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chi_spellings() {
        assert_eq!(parse_chi("+1"), Ok(1));
        assert_eq!(parse_chi("1"), Ok(1));
        assert_eq!(parse_chi("-1"), Ok(-1));
        assert_eq!(parse_chi("−1"), Ok(-1));
        assert!(parse_chi("0").is_err());
    }

    #[test]
    fn parses_negative_coefficients() {
        let cli =
            Cli::try_parse_from(["biquad", "sum", "--p", "7", "--c", "-3", "--e", "-1"]).unwrap();
        match cli.command {
            Command::Sum(args) => assert_eq!((args.a, args.c, args.e), (1, -3, -1)),
            other => panic!("unexpected {other:?}"),
        }
        let cli = Cli::try_parse_from(["biquad", "vw", "--p", "11", "--chi", "-1"]).unwrap();
        assert!(matches!(cli.command, Command::Vw(VwArgs { chi: -1, .. })));
    }

    #[test]
    fn verify_defaults() {
        let cli = Cli::try_parse_from([
            "biquad", "--format", "json", "verify", "--min", "7", "--max", "9",
        ])
        .unwrap();
        assert_eq!(cli.format, Format::Json);
        match cli.command {
            Command::Verify(v) => assert_eq!((v.e_samples, v.seed, v.jobs), (0, 0, 1)),
            other => panic!("unexpected {other:?}"),
        }
    }
}
