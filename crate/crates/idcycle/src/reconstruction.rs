//! Symmetry reconstruction for non-ID colorings of prime cycles.
//!
//! Given a coloring of a prime cycle and a pair of vertices with equal codes,
//! the step algorithm recovers the reflection symmetry one partner pair at a
//! time, checking a structural fact at every move. Internally the arithmetic
//! runs in a 1-based frame obtained by rotating the duplicate pair onto
//! indices (1, k); the emitted trace is 0-based.

use std::fmt;

use serde::Serialize;

use crate::analysis::is_symmetric_about;
use crate::cycle::{
    central_vertex_of, code_of, dist_unchecked, is_prime, CycleColoring, PairContext,
};
use crate::{Error, Result};

/// Which of the eight case rules applied when the step formed its new pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CaseRule {
    #[serde(rename = "I-1")]
    I1,
    #[serde(rename = "I-2")]
    I2,
    #[serde(rename = "II-1")]
    II1,
    #[serde(rename = "II-2")]
    II2,
    #[serde(rename = "III-1")]
    III1,
    #[serde(rename = "III-2")]
    III2,
    #[serde(rename = "IV-1")]
    IV1,
    #[serde(rename = "IV-2")]
    IV2,
}

impl fmt::Display for CaseRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CaseRule::I1 => "I-1",
            CaseRule::I2 => "I-2",
            CaseRule::II1 => "II-1",
            CaseRule::II2 => "II-2",
            CaseRule::III1 => "III-1",
            CaseRule::III2 => "III-2",
            CaseRule::IV1 => "IV-1",
            CaseRule::IV2 => "IV-2",
        };
        f.write_str(s)
    }
}

/// Per-fact verdicts for one step. `None` means the fact does not apply to
/// that step (facts 1-2 belong to step 1, facts 3-8 to later steps).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct FactChecks {
    pub f1: Option<bool>,
    pub f2: Option<bool>,
    pub f3: Option<bool>,
    pub f4: Option<bool>,
    pub f5: Option<bool>,
    pub f6: Option<bool>,
    pub f7: Option<bool>,
    pub f8: Option<bool>,
}

impl FactChecks {
    pub fn all_passed(&self) -> bool {
        [
            self.f1, self.f2, self.f3, self.f4, self.f5, self.f6, self.f7, self.f8,
        ]
        .iter()
        .flatten()
        .all(|&ok| ok)
    }

    fn fmt_list(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let named = [
            ("F1", self.f1),
            ("F2", self.f2),
            ("F3", self.f3),
            ("F4", self.f4),
            ("F5", self.f5),
            ("F6", self.f6),
            ("F7", self.f7),
            ("F8", self.f8),
        ];
        let mut first = true;
        for (name, check) in named {
            if let Some(ok) = check {
                if !first {
                    write!(f, ",")?;
                }
                first = false;
                write!(f, "{name}:{}", if ok { "ok" } else { "FAIL" })?;
            }
        }
        Ok(())
    }
}

/// One step of the reconstruction. All vertex indices are 0-based;
/// `k_s`/`k_s_prime` are the partner pair confirmed by the previous step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepRecord {
    pub s: usize,
    pub d_s: usize,
    pub k_s: usize,
    pub k_s_prime: usize,
    /// The candidate index `D_s`; absent in step 1.
    pub big_d: Option<usize>,
    pub case_rule: Option<CaseRule>,
    pub new_pair: Option<(usize, usize)>,
    pub facts: FactChecks,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReconstructionTrace {
    pub ctx: PairContext,
    /// 1-based offset of the second pair vertex in the rotated frame.
    pub k: usize,
    pub steps: Vec<StepRecord>,
    /// Accumulated same-color partner pairs, starting with the input pair.
    pub pairs: Vec<(usize, usize)>,
    pub terminated_at_step: usize,
    pub success: bool,
}

impl fmt::Display for ReconstructionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "trace n={} a={} b={} k={} central={} success={}",
            self.ctx.n, self.ctx.a, self.ctx.b, self.k, self.ctx.j, self.success
        )?;
        for step in &self.steps {
            write!(
                f,
                "step s={} d_s={} k_s={} k_s'={} D_s={} case={} new_pair={} facts=",
                step.s,
                step.d_s,
                step.k_s,
                step.k_s_prime,
                step.big_d.map_or("-".into(), |d| d.to_string()),
                step.case_rule.map_or("-".into(), |c| c.to_string()),
                step.new_pair
                    .map_or("-".into(), |(x, y)| format!("({x},{y})")),
            )?;
            step.facts.fmt_list(f)?;
            writeln!(f)?;
        }
        write!(f, "pairs=")?;
        for (i, (x, y)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "({x},{y})")?;
        }
        writeln!(f)?;
        write!(f, "terminated_at_step={}", self.terminated_at_step)
    }
}

/// 1-based frame for the rotated cycle: the first duplicate vertex sits at
/// index 1, the second at index k with 2 <= k <= (n+1)/2.
struct Frame {
    n: usize,
    k: usize,
    j: usize,
    /// Original 0-based index of frame index 1.
    base: usize,
    /// True when the arc I lies on the +1 side of j.
    i_on_plus_side: bool,
}

impl Frame {
    fn new(n: usize, a: usize, b: usize) -> Frame {
        let forward = (b + n - a) % n;
        let (base, k) = if forward + 1 <= (n + 1) / 2 {
            (a, forward + 1)
        } else {
            (b, (a + n - b) % n + 1)
        };
        // Parity case split for the central vertex; the generalized closed
        // form in `central_vertex_of` must agree (tested).
        let j = if k % 2 == 1 { (k + 1) / 2 } else { (n + k + 1) / 2 };
        // I is the arc containing k.
        let half = (n - 1) / 2;
        let k_offset = (k + n - j) % n;
        Frame {
            n,
            k,
            j,
            base,
            i_on_plus_side: (1..=half).contains(&k_offset),
        }
    }

    /// Normalizes an index expression to the 1-based range 1..=n.
    fn norm(&self, x: i64) -> usize {
        let m = x.rem_euclid(self.n as i64) as usize;
        if m == 0 {
            self.n
        } else {
            m
        }
    }

    fn partner(&self, l: usize) -> usize {
        self.norm(self.n as i64 + self.k as i64 + 1 - l as i64)
    }

    fn dist(&self, x: usize, y: usize) -> usize {
        dist_unchecked(self.n, x % self.n, y % self.n)
    }

    fn in_i(&self, l: usize) -> bool {
        let half = (self.n - 1) / 2;
        let off = (l + self.n - self.j) % self.n;
        if self.i_on_plus_side {
            (1..=half).contains(&off)
        } else {
            (self.n - half..=self.n - 1).contains(&off)
        }
    }

    fn to_orig(&self, frame_idx: usize) -> usize {
        (self.base + frame_idx - 1) % self.n
    }
}

/// Reconstructs the reflection symmetry of a prime-cycle coloring from a
/// duplicate-code pair `(a, b)`, recording every step and fact check.
///
/// `C_3` and `C_5` are always symmetric and return a zero-step trace.
/// A failed fact check signals an implementation bug and is returned as
/// [`Error::Inconsistency`] carrying the partial trace.
pub fn reconstruct(col: &CycleColoring, a: usize, b: usize) -> Result<ReconstructionTrace> {
    let n = col.n();
    if !is_prime(n) {
        return Err(Error::NotPrime(n));
    }
    if a == b {
        return Err(Error::VerticesNotDistinct { a, b });
    }
    if code_of(col, a)? != code_of(col, b)? {
        return Err(Error::CodesDiffer { a, b });
    }
    let ctx = central_vertex_of(n, a, b)?;
    let j_orig = ctx.j;

    if n <= 5 {
        // All colorings of C_3 and C_5 are symmetric; the single code
        // coordinate equality already pins every remaining pair.
        let pairs: Vec<(usize, usize)> = (1..=n / 2)
            .map(|d| ((j_orig + d) % n, (j_orig + n - d) % n))
            .collect();
        let success = is_symmetric_about(col, j_orig)?;
        let frame = Frame::new(n, a, b);
        return Ok(ReconstructionTrace {
            ctx,
            k: frame.k,
            steps: Vec::new(),
            pairs,
            terminated_at_step: 0,
            success,
        });
    }

    let frame = Frame::new(n, a, b);
    debug_assert_eq!(frame.to_orig(frame.j), j_orig);
    let color1 = |m: usize| col.color(frame.to_orig(m));

    let mut trace = ReconstructionTrace {
        ctx,
        k: frame.k,
        steps: Vec::new(),
        pairs: vec![(frame.to_orig(1), frame.to_orig(frame.k))],
        terminated_at_step: 0,
        success: false,
    };
    let fail = |trace: ReconstructionTrace, step: usize, detail: String| {
        Err(Error::Inconsistency {
            step,
            detail,
            trace: Box::new(trace),
        })
    };

    let (n_i, k) = (n as i64, frame.k as i64);
    // Frame-internal pair list, 1-based, pairs_1[s-1] = (k_s, k_s').
    let mut pairs1: Vec<(usize, usize)> = vec![(frame.k, 1)];
    let mut ds_list: Vec<usize> = Vec::new();

    // Step 1: the (k-1)-th code coordinate pins the pair (2k-1, n+2-k).
    let d1 = frame.k - 1;
    let x = frame.norm(2 * k - 1);
    let y = frame.norm(n_i + 2 - k);
    let f1 = frame.in_i(x) != frame.in_i(y);
    let (k2, k2p) = if frame.in_i(x) { (x, y) } else { (y, x) };
    let f2 = ![frame.j, frame.k, 1].contains(&k2) && ![frame.j, frame.k, 1].contains(&k2p);
    let f8_step1 = color1(k2) == color1(k2p);
    ds_list.push(d1);
    let mut facts = FactChecks {
        f1: Some(f1),
        f2: Some(f2),
        f8: Some(f8_step1),
        ..FactChecks::default()
    };
    trace.steps.push(StepRecord {
        s: 1,
        d_s: d1,
        k_s: frame.to_orig(frame.k),
        k_s_prime: frame.to_orig(1),
        big_d: None,
        case_rule: None,
        new_pair: Some((frame.to_orig(k2), frame.to_orig(k2p))),
        facts,
    });
    if !facts.all_passed() {
        return fail(trace, 1, "fact check failed in step 1".into());
    }
    pairs1.push((k2, k2p));
    trace.pairs.push((frame.to_orig(k2), frame.to_orig(k2p)));

    let mut s = 2;
    loop {
        if s > n {
            return fail(trace, s, "algorithm failed to terminate".into());
        }
        let (ks, ksp) = *pairs1.last().expect("non-empty");
        let d_prev = *ds_list.last().expect("non-empty");
        let e1 = frame.dist(1, ks);
        let ek = frame.dist(frame.k, ks);
        let f3 = (e1 == d_prev) != (ek == d_prev);
        let d_s = if e1 == d_prev { ek } else { e1 };
        let f4 = d_s != 0 && !ds_list.contains(&d_s);
        let c_minus = frame.norm(1 - d_s as i64);
        let c_plus = frame.norm(1 + d_s as i64);
        let in_pair = |v: usize| v == ks || v == ksp;
        let f5 = in_pair(c_minus) != in_pair(c_plus);
        let big_d = if in_pair(c_minus) { c_plus } else { c_minus };
        ds_list.push(d_s);
        facts = FactChecks {
            f3: Some(f3),
            f4: Some(f4),
            f5: Some(f5),
            ..FactChecks::default()
        };

        if big_d == frame.j {
            trace.steps.push(StepRecord {
                s,
                d_s,
                k_s: frame.to_orig(ks),
                k_s_prime: frame.to_orig(ksp),
                big_d: Some(frame.to_orig(big_d)),
                case_rule: None,
                new_pair: None,
                facts,
            });
            if !facts.all_passed() {
                return fail(trace, s, "fact check failed at termination".into());
            }
            trace.terminated_at_step = s;
            break;
        }

        let big_dp = frame.partner(big_d);
        let f6 = frame.in_i(big_d) != frame.in_i(big_dp);
        let (knext, knextp) = if frame.in_i(big_d) {
            (big_d, big_dp)
        } else {
            (big_dp, big_d)
        };
        let seen = |v: usize| {
            v == frame.j || pairs1.iter().any(|&(p, q)| v == p || v == q)
        };
        let f7 = !seen(knext) && !seen(knextp);
        let f8 = color1(knext) == color1(knextp);

        // Case rule per the step's eight-way analysis; the implied index
        // identities are re-checked rather than assumed.
        let sub1 = d_s == e1;
        let (case_rule, rule_ok) = if knext == c_minus {
            let case = if sub1 { CaseRule::I1 } else { CaseRule::I2 };
            let prev_ok = if sub1 {
                c_plus == ks && frame.norm(k - d_s as i64) == ksp
            } else {
                c_plus == ksp && frame.norm(k - d_s as i64) == ks
            };
            (case, prev_ok && frame.norm(k + d_s as i64) == knextp)
        } else if knext == c_plus {
            let case = if sub1 { CaseRule::II1 } else { CaseRule::II2 };
            let prev_ok = if sub1 {
                c_minus == ks && frame.norm(k + d_s as i64) == ksp
            } else {
                c_minus == ksp && frame.norm(k + d_s as i64) == ks
            };
            (case, prev_ok && frame.norm(k - d_s as i64) == knextp)
        } else if knextp == c_minus {
            let case = if sub1 { CaseRule::III1 } else { CaseRule::III2 };
            let prev_ok = if sub1 {
                c_plus == ks && frame.norm(k - d_s as i64) == ksp
            } else {
                c_plus == ksp && frame.norm(k - d_s as i64) == ks
            };
            (case, prev_ok && frame.norm(k + d_s as i64) == knext)
        } else {
            let case = if sub1 { CaseRule::IV1 } else { CaseRule::IV2 };
            let prev_ok = if sub1 {
                c_minus == ks && frame.norm(k + d_s as i64) == ksp
            } else {
                c_minus == ksp && frame.norm(k + d_s as i64) == ks
            };
            (case, prev_ok && frame.norm(k - d_s as i64) == knext)
        };

        facts.f6 = Some(f6);
        facts.f7 = Some(f7);
        facts.f8 = Some(f8);
        trace.steps.push(StepRecord {
            s,
            d_s,
            k_s: frame.to_orig(ks),
            k_s_prime: frame.to_orig(ksp),
            big_d: Some(frame.to_orig(big_d)),
            case_rule: Some(case_rule),
            new_pair: Some((frame.to_orig(knext), frame.to_orig(knextp))),
            facts,
        });
        if !facts.all_passed() {
            return fail(trace, s, "fact check failed".into());
        }
        if !rule_ok {
            return fail(trace, s, format!("case rule {case_rule} inconsistent"));
        }
        pairs1.push((knext, knextp));
        trace
            .pairs
            .push((frame.to_orig(knext), frame.to_orig(knextp)));
        s += 1;
    }

    // Exit checks: the pairs plus the central vertex must partition the
    // vertex set and the coloring must actually be symmetric about j.
    let mut covered: Vec<usize> = trace
        .pairs
        .iter()
        .flat_map(|&(p, q)| [p, q])
        .chain([j_orig])
        .collect();
    covered.sort_unstable();
    covered.dedup();
    let partition_ok = covered.len() == n;
    trace.success = partition_ok && is_symmetric_about(col, j_orig)?;
    Ok(trace)
}

/// The two residues `{s(k-1), -s(k-1)} (mod n)` that the step distance `d_s`
/// must realize (after folding to a cycle distance). 1-based `k`.
pub fn ds_closed_form(n: usize, k1based: usize, s: usize) -> (usize, usize) {
    let r = s * (k1based - 1) % n;
    (r, (n - r) % n)
}

/// Folds a residue mod n to a cycle distance.
pub fn fold_to_distance(n: usize, r: usize) -> usize {
    let r = r % n;
    r.min(n - r)
}

/// Checks that no step distance can hit the termination offsets `±(j-1)`
/// before step (n-1)/2. Always true for prime n; exists as an oracle.
pub fn no_early_stop_bound(n: usize, k1based: usize) -> bool {
    let j = if k1based % 2 == 1 {
        (k1based + 1) / 2
    } else {
        (n + k1based + 1) / 2
    };
    let forbidden = [(j - 1) % n, (n - (j - 1) % n) % n];
    for s in 1..=(n - 3) / 2 {
        let (r1, r2) = ds_closed_form(n, k1based, s);
        if forbidden.contains(&r1) || forbidden.contains(&r2) {
            return false;
        }
    }
    true
}
