// SPDX-License-Identifier: Apache-2.0

//! Printed records. Each one is a flat snake_case JSON object in `--format
//! json` and a block of `key: value` lines otherwise.

use serde::{Deserialize, Serialize};

pub trait Record: Serialize {
    fn text(&self) -> String;
}

fn set_text(values: &[u64]) -> String {
    let inner = values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(", ");
    format!("{{{inner}}}")
}

fn opt_text<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumRecord {
    pub p: u64,
    pub a: i64,
    pub c: i64,
    pub e: i64,
    /// `closed_form` for `p >= 7`, `small_prime` for 3 and 5.
    pub route: String,
    pub closed: u64,
    pub brute: u64,
    pub matches: bool,
}

impl Record for SumRecord {
    fn text(&self) -> String {
        format!(
            "f      = {}x^4 + {}x^2 + {} (mod {})\nroute  = {}\nclosed = {}\nbrute  = {}\nmatch  = {}\n",
            self.a, self.c, self.e, self.p, self.route, self.closed, self.brute, self.matches
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VwRecord {
    pub p: u64,
    pub p_mod8: u8,
    pub chi: i8,
    pub v_fraction: String,
    pub w_fraction: String,
    pub master_v: u64,
    pub master_w: u64,
    pub corollary_v: u64,
    pub corollary_w: u64,
    pub matches: bool,
}

impl Record for VwRecord {
    fn text(&self) -> String {
        format!(
            "p = {} (p mod 8 = {}), chi = {:+}\nfraction  V = {}, W = {}\ncorollary V = {}, W = {}\nmaster    V = {}, W = {}\nmatch = {}\n",
            self.p,
            self.p_mod8,
            self.chi,
            self.v_fraction,
            self.w_fraction,
            self.corollary_v,
            self.corollary_w,
            self.master_v,
            self.master_w,
            self.matches
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetOfSumsRecord {
    pub p: u64,
    pub cardinality: usize,
    pub set_of_sums: Vec<u64>,
}

impl Record for SetOfSumsRecord {
    fn text(&self) -> String {
        format!(
            "S({}) = {}\n|S({})| = {}\n",
            self.p,
            set_text(&self.set_of_sums),
            self.p,
            self.cardinality
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyRecord {
    pub p: u64,
    pub kind: String,
    pub minus_one_in_sp: bool,
    pub seven_is_qr: Option<bool>,
    pub three_is_qr: Option<bool>,
    pub p_mod28: Option<u64>,
    pub p_mod24: Option<u64>,
    pub witness_set: Vec<u64>,
    pub brute_force_set: Vec<u64>,
    pub matches: bool,
}

impl Record for ClassifyRecord {
    fn text(&self) -> String {
        format!(
            "p = {}\nkind = {}\nroute: -1 in S(p) = {}, 7 is QR = {}, 3 is QR = {}, p mod 28 = {}, p mod 24 = {}\nwitness = {}\nS(p)    = {}\nmatch = {}\n",
            self.p,
            self.kind,
            self.minus_one_in_sp,
            opt_text(&self.seven_is_qr),
            opt_text(&self.three_is_qr),
            opt_text(&self.p_mod28),
            opt_text(&self.p_mod24),
            set_text(&self.witness_set),
            set_text(&self.brute_force_set),
            self.matches
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionStatsRecord {
    pub p: u64,
    pub a00_size: usize,
    pub a01_size: usize,
    pub a10_size: usize,
    pub a11_size: usize,
    pub a00_sum: u64,
    pub a01_sum: u64,
    pub a10_sum: u64,
    pub a11_sum: u64,
    pub middle_in_a00: bool,
    pub middle_in_a01: bool,
    pub middle_in_a10: bool,
    pub middle_in_a11: bool,
}

impl Record for PartitionStatsRecord {
    fn text(&self) -> String {
        let rows = [
            ("A00", self.a00_size, self.a00_sum, self.middle_in_a00),
            ("A01", self.a01_size, self.a01_sum, self.middle_in_a01),
            ("A10", self.a10_size, self.a10_sum, self.middle_in_a10),
            ("A11", self.a11_size, self.a11_sum, self.middle_in_a11),
        ];
        let mut out = format!("p = {}\ncell  size  sum(a^2+a)  (p-1)/2 in cell\n", self.p);
        for (name, size, sum, middle) in rows {
            out.push_str(&format!("{name}  {size:>5}  {sum:>10}  {middle}\n"));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub check_name: String,
    pub p: u64,
    pub a: Option<i64>,
    pub c: Option<i64>,
    pub e: Option<i64>,
    pub expected: u64,
    pub got: u64,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub prime_range: (u64, u64),
    pub primes_checked: usize,
    pub cases_checked: u64,
    pub mismatches: Vec<Mismatch>,
    pub elapsed_ms: u64,
}

impl Record for VerifyReport {
    fn text(&self) -> String {
        let mut out = format!(
            "range          = [{}, {}]\nprimes checked = {}\ncases checked  = {}\nmismatches     = {}\nelapsed        = {} ms\n",
            self.prime_range.0,
            self.prime_range.1,
            self.primes_checked,
            self.cases_checked,
            self.mismatches.len(),
            self.elapsed_ms
        );
        for m in &self.mismatches {
            out.push_str(&format!(
                "MISMATCH {} p={} a={} c={} e={} expected={} got={}",
                m.check_name,
                m.p,
                opt_text(&m.a),
                opt_text(&m.c),
                opt_text(&m.e),
                m.expected,
                m.got
            ));
            if let Some(d) = &m.detail {
                out.push_str(&format!(" ({d})"));
            }
            out.push('\n');
        }
        out
    }
}
