//! Exhaustive verification of the cycle and path theorems at desk scale,
//! plus the CLI binding every module together.

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Serialize, Serializer};

use crate::analysis::{is_id_coloring, symmetry_report};
use crate::constructions::{
    least_factorization, multi_central_coloring, sa_coloring, single_red_coloring,
};
use crate::cycle::{all_codes, code_of, is_prime, CycleColoring};
use crate::paths::{path_id_by_criterion, path_is_id_brute_force, PathColoring};
use crate::reconstruction::reconstruct;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TheoremId {
    #[serde(rename = "T1.2")]
    PathCriterion,
    #[serde(rename = "T1.3")]
    RedCountRange,
    #[serde(rename = "T2.1")]
    PrimeEquivalence,
    #[serde(rename = "T3.1")]
    CompositeCounterexamples,
    #[serde(rename = "T4.3")]
    UniqueCentral,
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TheoremId::PathCriterion => "T1.2",
            TheoremId::RedCountRange => "T1.3",
            TheoremId::PrimeEquivalence => "T2.1",
            TheoremId::CompositeCounterexamples => "T3.1",
            TheoremId::UniqueCentral => "T4.3",
        };
        f.write_str(s)
    }
}

fn ser_ms<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_millis() as u64)
}

/// Outcome of one exhaustive verification run. `failures` holds one entry per
/// counterexample found; an empty list means the claim held everywhere.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub theorem: TheoremId,
    pub n: usize,
    pub checked: u64,
    pub failures: Vec<String>,
    #[serde(rename = "elapsedMs", serialize_with = "ser_ms")]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "theorem {} n={} checked={} failures={} elapsed_ms={}",
            self.theorem,
            self.n,
            self.checked,
            self.failures.len(),
            self.elapsed.as_millis()
        )?;
        for fail in &self.failures {
            write!(f, "\n  counterexample: {fail}")?;
        }
        Ok(())
    }
}

fn require_prime_in_range(n: usize, hi: usize) -> Result<()> {
    if !is_prime(n) {
        return Err(Error::NotPrime(n));
    }
    if n > hi {
        return Err(Error::OutOfRange { n, lo: 3, hi });
    }
    Ok(())
}

/// Checks over all `2^n` colorings of a prime cycle that the ID property
/// coincides with the absence of a central vertex.
pub fn verify_prime_equivalence(n: usize) -> Result<VerificationReport> {
    require_prime_in_range(n, 19)?;
    let start = Instant::now();
    let mut failures = Vec::new();
    let total = 1u64 << n;
    for mask in 0..total {
        let col = CycleColoring::from_mask(n, mask)?;
        let is_id = is_id_coloring(&col).is_id;
        let symmetric = !symmetry_report(&col).central_vertices.is_empty();
        if is_id == symmetric {
            failures.push(col.to_string());
        }
    }
    Ok(VerificationReport {
        theorem: TheoremId::PrimeEquivalence,
        n,
        checked: total,
        failures,
        elapsed: start.elapsed(),
    })
}

/// Red counts `r` for which `C_n` admits an ID-coloring with exactly `r`
/// reds, found by enumeration. Also returns the number of ID checks made
/// (masks whose count is already settled are skipped).
fn scan_red_counts(n: usize) -> (Vec<bool>, u64) {
    let mut exists = vec![false; n + 1];
    let mut checked = 0u64;
    for mask in 0u64..(1 << n) {
        let r = mask.count_ones() as usize;
        if exists[r] {
            continue;
        }
        let col = CycleColoring::from_mask(n, mask).expect("valid n");
        checked += 1;
        if is_id_coloring(&col).is_id {
            exists[r] = true;
        }
    }
    (exists, checked)
}

/// The sorted red counts admitting an ID-coloring of `C_n`.
pub fn red_counts_with_id(n: usize) -> Result<Vec<usize>> {
    if !(6..=20).contains(&n) {
        return Err(Error::OutOfRange { n, lo: 6, hi: 20 });
    }
    let (exists, _) = scan_red_counts(n);
    Ok((0..=n).filter(|&r| exists[r]).collect())
}

/// Checks that `C_n` has an ID-coloring with exactly `r` reds iff
/// `3 <= r <= n - 3`, and that the minimum such `r` is 3.
pub fn verify_red_count_range(n: usize) -> Result<VerificationReport> {
    if !(6..=20).contains(&n) {
        return Err(Error::OutOfRange { n, lo: 6, hi: 20 });
    }
    let start = Instant::now();
    let (exists, checked) = scan_red_counts(n);
    let mut failures = Vec::new();
    for (r, &found) in exists.iter().enumerate() {
        let expected = (3..=n - 3).contains(&r);
        if found != expected {
            failures.push(format!(
                "r={r}: ID-coloring exists={found}, expected {expected}"
            ));
        }
    }
    if exists.iter().position(|&e| e) != Some(3) {
        failures.push("minimum red count is not 3".into());
    }
    Ok(VerificationReport {
        theorem: TheoremId::RedCountRange,
        n,
        checked,
        failures,
        elapsed: start.elapsed(),
    })
}

/// Checks that every non-constant symmetric coloring of a prime cycle has
/// exactly one central vertex.
pub fn verify_unique_central(n: usize) -> Result<VerificationReport> {
    require_prime_in_range(n, 19)?;
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut checked = 0u64;
    for mask in 1u64..((1 << n) - 1) {
        let col = CycleColoring::from_mask(n, mask)?;
        checked += 1;
        let centrals = symmetry_report(&col).central_vertices;
        if !centrals.is_empty() && centrals.len() != 1 {
            failures.push(col.to_string());
        }
    }
    Ok(VerificationReport {
        theorem: TheoremId::UniqueCentral,
        n,
        checked,
        failures,
        elapsed: start.elapsed(),
    })
}

/// For an odd composite `n = p * q` (least `p`): the asymmetric family
/// member is neither ID nor symmetric, and the multi-central family member
/// has exactly `q` central vertices.
pub fn verify_composite_counterexamples(n: usize) -> Result<VerificationReport> {
    let f = least_factorization(n)?;
    if n > 45 {
        return Err(Error::OutOfRange { n, lo: 9, hi: 45 });
    }
    let start = Instant::now();
    let mut failures = Vec::new();

    let sa = sa_coloring(n, f.p)?;
    let ones = vec![1u32; n / 2];
    let sa_ok = !is_id_coloring(&sa).is_id
        && code_of(&sa, 0)?.counts() == ones
        && code_of(&sa, f.q)?.counts() == ones
        && symmetry_report(&sa).central_vertices.is_empty();
    if !sa_ok {
        failures.push(sa.to_string());
    }

    let multi = multi_central_coloring(n, f.p)?;
    if symmetry_report(&multi).central_vertices.len() != f.q {
        failures.push(multi.to_string());
    }

    Ok(VerificationReport {
        theorem: TheoremId::CompositeCounterexamples,
        n,
        checked: 2,
        failures,
        elapsed: start.elapsed(),
    })
}

/// Checks the subpath criterion against the brute-force ID test over every
/// path coloring of `P_n` with at least two reds.
pub fn verify_path_criterion(n: usize) -> Result<VerificationReport> {
    if !(2..=16).contains(&n) {
        return Err(Error::OutOfRange { n, lo: 2, hi: 16 });
    }
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut checked = 0u64;
    for mask in 0u64..(1 << n) {
        if mask.count_ones() < 2 {
            continue;
        }
        let col = PathColoring::from_mask(n, mask)?;
        checked += 1;
        if path_id_by_criterion(&col)? != path_is_id_brute_force(&col) {
            failures.push(col.to_string());
        }
    }
    Ok(VerificationReport {
        theorem: TheoremId::PathCriterion,
        n,
        checked,
        failures,
        elapsed: start.elapsed(),
    })
}

#[derive(Parser)]
#[command(name = "idcycle", about = "ID-colorings of cycles and paths", version)]
struct Cli {
    /// Emit structured JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// ID verdict and symmetry report for a cycle coloring.
    Check { coloring: String },
    /// Code vector of every vertex of a cycle coloring.
    Codes { coloring: String },
    /// Reconstruct the reflection symmetry of a non-ID prime-cycle coloring.
    Trace {
        coloring: String,
        /// Duplicate-code pair as "a,b"; defaults to the smallest witness.
        #[arg(long)]
        pair: Option<String>,
    },
    /// Emit a member of a named coloring family.
    Generate {
        #[command(subcommand)]
        family: Family,
    },
    /// Exhaustively verify a theorem at one parameter value.
    Verify {
        theorem: TheoremArg,
        #[arg(long)]
        n: usize,
    },
    /// Path-coloring operations.
    Path {
        #[command(subcommand)]
        op: PathOp,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Asymmetric non-ID coloring of an odd composite cycle.
    Sa {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: Option<usize>,
    },
    /// Symmetric coloring with n/p central vertices.
    Multicentral {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: Option<usize>,
    },
    /// Single red vertex at u_0.
    Singlered {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum PathOp {
    /// Brute-force ID verdict for a path coloring.
    Check { coloring: String },
    /// Subpath-criterion ID verdict (requires at least two reds).
    Criterion { coloring: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremArg {
    PrimeEquivalence,
    RedCountRange,
    UniqueCentral,
    CompositeCounterexamples,
    PathCriterion,
}

fn parse_pair(s: &str) -> Result<(usize, usize)> {
    let parse = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| Error::BadPairArgument(s.to_string()))
    };
    match s.split_once(',') {
        Some((a, b)) => Ok((parse(a)?, parse(b)?)),
        None => Err(Error::BadPairArgument(s.to_string())),
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    let w = |out: &mut dyn Write, s: String| {
        let _ = writeln!(out, "{s}");
    };
    match cli.command {
        Command::Check { coloring } => {
            let col: CycleColoring = coloring.parse()?;
            let verdict = is_id_coloring(&col);
            let report = symmetry_report(&col);
            if cli.json {
                let v = serde_json::json!({
                    "coloring": col.to_string(),
                    "n": col.n(),
                    "isId": verdict.is_id,
                    "witness": verdict.witness,
                    "centralVertices": report.central_vertices,
                    "edgeAxes": report.edge_axes,
                });
                w(out, v.to_string());
            } else {
                w(out, format!("n={} reds={}", col.n(), col.red_count()));
                match verdict.witness {
                    None => w(out, "ID-coloring: yes".into()),
                    Some((a, b)) => w(
                        out,
                        format!("ID-coloring: no (vertices {a} and {b} share a code)"),
                    ),
                }
                if col.n() % 2 == 1 {
                    let c = &report.central_vertices;
                    if c.is_empty() {
                        w(out, "symmetric: no".into());
                    } else {
                        let list: Vec<String> = c.iter().map(|u| u.to_string()).collect();
                        w(
                            out,
                            format!("symmetric: yes (central vertices {})", list.join(" ")),
                        );
                    }
                } else if report.edge_axes.is_empty() {
                    w(out, "symmetric: no".into());
                } else {
                    let list: Vec<String> =
                        report.edge_axes.iter().map(|r| r.to_string()).collect();
                    w(out, format!("symmetric: yes (edge axes {})", list.join(" ")));
                }
            }
            Ok(0)
        }
        Command::Codes { coloring } => {
            let col: CycleColoring = coloring.parse()?;
            let codes = all_codes(&col);
            if cli.json {
                let v = serde_json::json!({
                    "coloring": col.to_string(),
                    "codes": codes,
                });
                w(out, v.to_string());
            } else {
                for (v, code) in codes.iter().enumerate() {
                    w(out, format!("u{v} {code}"));
                }
            }
            Ok(0)
        }
        Command::Trace { coloring, pair } => {
            let col: CycleColoring = coloring.parse()?;
            let (a, b) = match pair {
                Some(s) => parse_pair(&s)?,
                None => match is_id_coloring(&col).witness {
                    Some(p) => p,
                    None => {
                        w(out, "coloring is an ID-coloring; nothing to reconstruct".into());
                        return Ok(0);
                    }
                },
            };
            let trace = reconstruct(&col, a, b)?;
            if cli.json {
                w(out, serde_json::to_string(&trace).expect("serializable"));
            } else {
                w(out, trace.to_string());
            }
            Ok(0)
        }
        Command::Generate { family } => {
            let col = match family {
                Family::Sa { n, p } => {
                    let p = match p {
                        Some(p) => p,
                        None => least_factorization(n)?.p,
                    };
                    sa_coloring(n, p)?
                }
                Family::Multicentral { n, p } => {
                    let p = match p {
                        Some(p) => p,
                        None => least_factorization(n)?.p,
                    };
                    multi_central_coloring(n, p)?
                }
                Family::Singlered { n } => single_red_coloring(n)?,
            };
            if cli.json {
                w(out, serde_json::json!({ "coloring": col.to_string() }).to_string());
            } else {
                w(out, col.to_string());
            }
            Ok(0)
        }
        Command::Verify { theorem, n } => {
            let report = match theorem {
                TheoremArg::PrimeEquivalence => verify_prime_equivalence(n)?,
                TheoremArg::RedCountRange => verify_red_count_range(n)?,
                TheoremArg::UniqueCentral => verify_unique_central(n)?,
                TheoremArg::CompositeCounterexamples => verify_composite_counterexamples(n)?,
                TheoremArg::PathCriterion => verify_path_criterion(n)?,
            };
            if cli.json {
                w(out, serde_json::to_string(&report).expect("serializable"));
            } else {
                w(out, report.to_string());
            }
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Path { op } => {
            let (col, is_id): (PathColoring, bool) = match op {
                PathOp::Check { coloring } => {
                    let col: PathColoring = coloring.parse()?;
                    let id = path_is_id_brute_force(&col);
                    (col, id)
                }
                PathOp::Criterion { coloring } => {
                    let col: PathColoring = coloring.parse()?;
                    let id = path_id_by_criterion(&col)?;
                    (col, id)
                }
            };
            if cli.json {
                let v = serde_json::json!({
                    "coloring": col.to_string(),
                    "n": col.n(),
                    "isId": is_id,
                });
                w(out, v.to_string());
            } else {
                w(
                    out,
                    format!("n={} ID-coloring: {}", col.n(), if is_id { "yes" } else { "no" }),
                );
            }
            Ok(0)
        }
    }
}

/// Runs the CLI against `args` (including the program name), writing all
/// output to `out`. Returns the process exit code: 0 for a computed verdict,
/// 1 for a failed verification, 2 for usage or domain errors.
pub fn run_cli<I, S>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(out, "{e}");
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp
                | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(out, "error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_equivalence_small() {
        let r = verify_prime_equivalence(7).unwrap();
        assert_eq!(r.checked, 128);
        assert!(r.passed());
        assert_eq!(r.theorem, TheoremId::PrimeEquivalence);

        let r = verify_prime_equivalence(3).unwrap();
        assert_eq!(r.checked, 8);
        assert!(r.passed());

        assert!(matches!(verify_prime_equivalence(9), Err(Error::NotPrime(9))));
        assert!(matches!(
            verify_prime_equivalence(23),
            Err(Error::OutOfRange { n: 23, .. })
        ));
    }

    #[test]
    fn red_count_examples() {
        assert_eq!(red_counts_with_id(6).unwrap(), [3]);
        assert_eq!(red_counts_with_id(7).unwrap(), [3, 4]);
        assert_eq!(red_counts_with_id(10).unwrap(), [3, 4, 5, 6, 7]);
        assert!(verify_red_count_range(6).unwrap().passed());
        assert!(verify_red_count_range(9).unwrap().passed());
        assert!(matches!(
            verify_red_count_range(5),
            Err(Error::OutOfRange { n: 5, .. })
        ));
    }

    #[test]
    fn unique_central_small() {
        for n in [3usize, 5, 7, 11] {
            let r = verify_unique_central(n).unwrap();
            assert!(r.passed(), "n={n}");
            assert_eq!(r.checked, (1 << n) - 2);
        }
        assert!(matches!(verify_unique_central(9), Err(Error::NotPrime(9))));
    }

    #[test]
    fn composite_counterexamples_small() {
        for n in [9usize, 15, 21] {
            let r = verify_composite_counterexamples(n).unwrap();
            assert!(r.passed(), "n={n}");
            assert_eq!(r.checked, 2);
        }
        assert!(matches!(
            verify_composite_counterexamples(7),
            Err(Error::NotOddComposite(7))
        ));
    }

    #[test]
    fn path_criterion_small() {
        let r = verify_path_criterion(8).unwrap();
        assert!(r.passed());
        // 2^8 minus the 9 colorings with fewer than 2 reds
        assert_eq!(r.checked, 256 - 9);
        assert!(matches!(
            verify_path_criterion(1),
            Err(Error::OutOfRange { n: 1, .. })
        ));
    }

    #[test]
    fn report_json_schema() {
        let r = verify_composite_counterexamples(9).unwrap();
        let v: serde_json::Value = serde_json::from_str(&serde_json::to_string(&r).unwrap())
            .unwrap();
        assert_eq!(v["theorem"], "T3.1");
        assert_eq!(v["n"], 9);
        assert_eq!(v["checked"], 2);
        assert!(v["failures"].as_array().unwrap().is_empty());
        assert!(v["elapsedMs"].is_u64());
    }
}
