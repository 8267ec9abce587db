//! Closed-form-vs-oracle verification sweeps.
//!
//! Each theorem id binds to one sweep comparing a closed-form routine against
//! the brute-force orbit arithmetic over a deterministic candidate order:
//!
//! * 3.1 / 4.1 / 5.1 — leader classification over every odd residue of the
//!   family envelope;
//! * 3.5 / 4.5 / 5.2 — the five-leader ladder, its coset cardinalities, and
//!   a scan proving no other leader lives above the fifth;
//! * 3.7 / 4.7 / 5.4 — closed dimensions and Bose distances against brute
//!   force for every odd delta the rows cover, both offsets;
//! * 2.4-band — the small-delta dimension band, both offsets.
//!
//! Sweeps fan out over worker threads in disjoint contiguous chunks and are
//! merged in input order, so reports are deterministic for any worker count.
//! When the estimated work exceeds a fixed trigger (or `--sample` is given)
//! the sweep draws a fixed-seed uniform sample instead of exhausting; the
//! seed and sample size are recorded in the report.

use std::time::Instant;

use atlas_core::{
    bose_closed, bose_distance, classification_envelope, classify_leader, coset_of, delta_ladder,
    dim_small_delta, dimension_brute, dimension_closed, is_coset_leader, top_leaders, CodeLength,
    Error, Family, LeaderStatus,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::emit::{render, Format, Row};
use crate::CliError;

/// Estimated unit operations above which a sweep samples instead ofexhausting.
const SAMPLE_TRIGGER: u64 = 10_000_000;
/// Default sample size when the trigger fires.
const DEFAULT_SAMPLE: u64 = 10_000;
/// Fixed sampling seed, recorded in every sampled report.
const SAMPLE_SEED: u64 = 0x0a71a5;
/// The brute-force oracle tables fall off a cliff above this exponent.
const VERIFY_M_CAP: u32 = 24;
/// Mismatch details retained in the JSON report (the count is always exact).
const DETAIL_CAP: usize = 50;

pub struct Mismatch {
    pub input: String,
    pub closed: String,
    pub oracle: String,
}

enum CaseOutcome {
    Pass,
    /// The closed form makes no claim here; not counted as a case.
    Skip,
    Fail(Mismatch),
}

pub struct VerifyReport {
    pub theorem: String,
    pub m: u32,
    pub cases_checked: u64,
    pub mismatch_count: u64,
    pub mismatches: Vec<Mismatch>,
    pub sampled: bool,
    pub sample_seed: Option<u64>,
    pub sample_size: Option<u64>,
    pub elapsed_ms: u128,
}

impl VerifyReport {
    pub fn pass(&self) -> bool {
        self.mismatch_count == 0
    }

    fn status(&self) -> &'static str {
        if self.pass() {
            "PASS"
        } else {
            "FAIL"
        }
    }

    pub fn summary_line(&self) -> String {
        let mut line = format!(
            "verify {} m={}: {} ({} cases, {} mismatches, {} ms",
            self.theorem,
            self.m,
            self.status(),
            self.cases_checked,
            self.mismatch_count,
            self.elapsed_ms
        );
        if self.sampled {
            line.push_str(&format!(
                ", sampled {} seed {:#x}",
                self.sample_size.unwrap_or(0),
                self.sample_seed.unwrap_or(0)
            ));
        }
        line.push(')');
        line
    }

    /// Human-readable detail lines for the first few mismatches.
    pub fn detail_lines(&self, cap: usize) -> Vec<String> {
        self.mismatches
            .iter()
            .take(cap)
            .map(|mm| format!("  {}: closed={} oracle={}", mm.input, mm.closed, mm.oracle))
            .collect()
    }

    /// CSV keeps the scalar summary; JSON additionally carries the mismatch
    /// details (capped at 50; `mismatch_count` is always exact).
    pub fn render(&self, format: Format) -> String {
        let summary_row: Row = vec![
            ("theorem", json!(self.theorem)),
            ("m", json!(self.m)),
            ("status", json!(self.status())),
            ("cases_checked", json!(self.cases_checked)),
            ("mismatch_count", json!(self.mismatch_count)),
            ("sampled", json!(self.sampled)),
            ("sample_seed", self.sample_seed.map_or(Value::Null, |s| json!(s))),
            ("sample_size", self.sample_size.map_or(Value::Null, |s| json!(s))),
            ("elapsed_ms", json!(self.elapsed_ms as u64)),
        ];
        match format {
            Format::Csv => render(&[summary_row], Format::Csv),
            Format::Json => {
                let mut map = Map::new();
                for (k, v) in summary_row {
                    map.insert(k.to_string(), v);
                }
                let details: Vec<Value> = self
                    .mismatches
                    .iter()
                    .map(|mm| {
                        json!({
                            "input": mm.input,
                            "closed": mm.closed,
                            "oracle": mm.oracle,
                        })
                    })
                    .collect();
                map.insert("mismatches".to_string(), Value::Array(details));
                let mut s =
                    serde_json::to_string_pretty(&Value::Object(map)).expect("serializable");
                s.push('\n');
                s
            }
        }
    }
}

fn usage(message: String) -> CliError {
    CliError::Usage(message)
}

pub fn worker_count() -> usize {
    if let Ok(request) = std::env::var("ATLAS_WORKERS") {
        if let Ok(count) = request.trim().parse::<usize>() {
            if count >= 1 {
                return count;
            }
        }
    }
    std::thread::available_parallelism().map_or(4, |p| p.get().min(8))
}

struct SweepPlan {
    candidates: Vec<u64>,
    sampled: bool,
    sample_size: Option<u64>,
}

fn plan(mut candidates: Vec<u64>, unit_cost: u64, sample_override: Option<u64>) -> SweepPlan {
    let estimated = candidates.len() as u64 * unit_cost;
    let force = sample_override.is_some();
    if !force && estimated <= SAMPLE_TRIGGER {
        return SweepPlan { candidates, sampled: false, sample_size: None };
    }
    let amount =
        sample_override.unwrap_or(DEFAULT_SAMPLE).clamp(1, candidates.len() as u64) as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    let mut picked = rand::seq::index::sample(&mut rng, candidates.len(), amount).into_vec();
    picked.sort_unstable();
    candidates = picked.into_iter().map(|i| candidates[i]).collect();
    SweepPlan { candidates, sampled: true, sample_size: Some(amount as u64) }
}

/// Run `check` over the candidates on `workers` threads in contiguous chunks;
/// results merge in input order regardless of worker count.
fn run_chunked<F>(candidates: &[u64], workers: usize, check: F) -> (u64, Vec<Mismatch>)
where
    F: Fn(u64) -> CaseOutcome + Sync,
{
    if candidates.is_empty() {
        return (0, Vec::new());
    }
    let chunk = candidates.len().div_ceil(workers.max(1));
    let partials: Vec<(u64, Vec<Mismatch>)> = std::thread::scope(|scope| {
        let handles: Vec<_> = candidates
            .chunks(chunk)
            .map(|slice| {
                let check = &check;
                scope.spawn(move || {
                    let mut checked = 0u64;
                    let mut mismatches = Vec::new();
                    for &candidate in slice {
                        match check(candidate) {
                            CaseOutcome::Pass => checked += 1,
                            CaseOutcome::Skip => {}
                            CaseOutcome::Fail(mm) => {
                                checked += 1;
                                mismatches.push(mm);
                            }
                        }
                    }
                    (checked, mismatches)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("verify worker panicked")).collect()
    });
    let checked = partials.iter().map(|(c, _)| c).sum();
    let mismatches = partials.into_iter().flat_map(|(_, mm)| mm).collect();
    (checked, mismatches)
}

fn family_matches(theorem: &str, family: Family) -> bool {
    match theorem.split('.').next() {
        Some("3") => matches!(family, Family::OddM { .. }),
        Some("4") => matches!(family, Family::FourTPlus2 { .. }),
        Some("5") => matches!(family, Family::EightTPlus4 { .. }),
        _ => false,
    }
}

const KNOWN_THEOREMS: [&str; 10] =
    ["3.1", "3.5", "3.7", "4.1", "4.5", "4.7", "5.1", "5.2", "5.4", "2.4-band"];

fn checked_length(theorem: &str, m: u32) -> Result<CodeLength, CliError> {
    if !KNOWN_THEOREMS.contains(&theorem) {
        return Err(usage(format!(
            "unknown theorem id {theorem:?} (expected one of {})",
            KNOWN_THEOREMS.join(", ")
        )));
    }
    let len = CodeLength::new(m).map_err(|e| usage(e.to_string()))?;
    if m > VERIFY_M_CAP {
        return Err(usage(format!(
            "m = {m} exceeds the verification cap of {VERIFY_M_CAP} (oracle tables)"
        )));
    }
    if theorem != "2.4-band" {
        if !family_matches(theorem, len.family()) {
            return Err(usage(format!("theorem {theorem} does not apply to m = {m}")));
        }
        match (len.family().t(), len.family().floor()) {
            (Some(t), Some(floor)) if t >= floor => {}
            (Some(t), Some(floor)) => {
                return Err(usage(format!(
                    "m = {m} sits below its family floor (t = {t}, need t >= {floor})"
                )))
            }
            _ => return Err(usage(format!("theorem {theorem} does not apply to m = {m}"))),
        }
    }
    Ok(len)
}

fn classify_sweep(
    len: CodeLength,
    sample: Option<u64>,
    workers: usize,
) -> Result<(SweepPlan, u64, Vec<Mismatch>), CliError> {
    let envelope = classification_envelope(len).map_err(|e| usage(e.to_string()))?;
    let candidates: Vec<u64> = (1..=envelope).step_by(2).collect();
    let plan = plan(candidates, u64::from(len.m()), sample);
    let (checked, mismatches) = run_chunked(&plan.candidates, workers, |x| {
        let closed = match classify_leader(x, len) {
            Ok(verdict) => verdict.status == LeaderStatus::Leader,
            Err(e) => {
                return CaseOutcome::Fail(Mismatch {
                    input: format!("x={x}"),
                    closed: format!("error: {e}"),
                    oracle: String::new(),
                })
            }
        };
        let oracle = is_coset_leader(x, len).expect("odd nonzero in range");
        if closed == oracle {
            CaseOutcome::Pass
        } else {
            CaseOutcome::Fail(Mismatch {
                input: format!("x={x}"),
                closed: format!("leader={closed}"),
                oracle: format!("leader={oracle}"),
            })
        }
    });
    Ok((plan, checked, mismatches))
}

fn ladder_sweep(
    len: CodeLength,
    sample: Option<u64>,
    workers: usize,
) -> Result<(SweepPlan, u64, Vec<Mismatch>), CliError> {
    let ladder = delta_ladder(len).map_err(|e| usage(e.to_string()))?;
    let mut checked = 0u64;
    let mut mismatches = Vec::new();
    // the five closed-form leaders against the oracle's five largest
    let oracle_top: Vec<u64> = top_leaders(len, 5).iter().map(|c| c.leader).collect();
    for i in 0..5 {
        checked += 1;
        let closed = (ladder.deltas[i], ladder.coset_sizes[i]);
        let oracle_delta = oracle_top.get(i).copied();
        let oracle_size = oracle_delta.map(|d| coset_of(d, len).expect("in range").size as u64);
        if Some(closed.0) != oracle_delta || Some(closed.1) != oracle_size {
            mismatches.push(Mismatch {
                input: format!("ladder i={}", i + 1),
                closed: format!("delta={} size={}", closed.0, closed.1),
                oracle: format!("delta={:?} size={:?}", oracle_delta, oracle_size),
            });
        }
    }
    // no sixth leader hides above the fifth
    let delta5 = ladder.deltas[4];
    let candidates: Vec<u64> = (delta5 + 2..len.n()).step_by(2).collect();
    let plan = plan(candidates, u64::from(len.m()), sample);
    let in_ladder = ladder.deltas;
    let (scan_checked, scan_mismatches) = run_chunked(&plan.candidates, workers, |x| {
        let expected = in_ladder.contains(&x);
        let oracle = is_coset_leader(x, len).expect("odd nonzero in range");
        if expected == oracle {
            CaseOutcome::Pass
        } else {
            CaseOutcome::Fail(Mismatch {
                input: format!("x={x}"),
                closed: format!("leader={expected}"),
                oracle: format!("leader={oracle}"),
            })
        }
    });
    checked += scan_checked;
    mismatches.extend(scan_mismatches);
    Ok((plan, checked, mismatches))
}

fn dims_sweep(
    len: CodeLength,
    sample: Option<u64>,
    workers: usize,
) -> Result<(SweepPlan, u64, Vec<Mismatch>), CliError> {
    // candidate encoding: delta * 2 + b
    let mut candidates = Vec::with_capacity(len.n() as usize);
    let mut delta = 3u64;
    while delta <= len.n() {
        candidates.push(delta * 2 + 1);
        candidates.push(delta * 2);
        delta += 2;
    }
    let plan = plan(candidates, 4, sample);
    let (checked, mismatches) = run_chunked(&plan.candidates, workers, |candidate| {
        let (delta, b) = (candidate / 2, (candidate % 2) as u8);
        let closed_k = match dimension_closed(len, delta, b) {
            Ok(k) => k,
            Err(Error::NoDimensionRow { .. }) => return CaseOutcome::Skip,
            Err(e) => {
                return CaseOutcome::Fail(Mismatch {
                    input: format!("delta={delta} b={b}"),
                    closed: format!("error: {e}"),
                    oracle: String::new(),
                })
            }
        };
        let closed_bose = bose_closed(len, delta, b).expect("same row as dimension");
        let oracle_k = dimension_brute(len, delta, b).expect("delta in range");
        let oracle_bose = bose_distance(len, delta, b).expect("delta in range");
        if closed_k == oracle_k && closed_bose == oracle_bose {
            CaseOutcome::Pass
        } else {
            CaseOutcome::Fail(Mismatch {
                input: format!("delta={delta} b={b}"),
                closed: format!("k={closed_k} bose={closed_bose}"),
                oracle: format!("k={oracle_k} bose={oracle_bose}"),
            })
        }
    });
    Ok((plan, checked, mismatches))
}

fn band_sweep(
    len: CodeLength,
    sample: Option<u64>,
    workers: usize,
) -> Result<(SweepPlan, u64, Vec<Mismatch>), CliError> {
    // window upper end is 2^{h+1} for b = 1; scan a little past both windows
    let h = (u64::from(len.m()) - 1) / 2;
    let top = (1u64 << (h + 1)) + 4;
    let mut candidates = Vec::new();
    for delta in 2..=top.min(len.n()) {
        candidates.push(delta * 2 + 1);
        candidates.push(delta * 2);
    }
    let plan = plan(candidates, 2, sample);
    let (checked, mismatches) = run_chunked(&plan.candidates, workers, |candidate| {
        let (delta, b) = (candidate / 2, (candidate % 2) as u8);
        match dim_small_delta(len, delta, b) {
            None => CaseOutcome::Skip,
            Some(k) => {
                let oracle = dimension_brute(len, delta, b).expect("delta in range");
                if k == oracle {
                    CaseOutcome::Pass
                } else {
                    CaseOutcome::Fail(Mismatch {
                        input: format!("delta={delta} b={b}"),
                        closed: format!("k={k}"),
                        oracle: format!("k={oracle}"),
                    })
                }
            }
        }
    });
    Ok((plan, checked, mismatches))
}

pub fn run_verify(
    theorem: &str,
    m: u32,
    sample: Option<u64>,
) -> Result<VerifyReport, CliError> {
    let len = checked_length(theorem, m)?;
    let workers = worker_count();
    // warm the per-length oracle table once so workers don't serialize on it
    let _ = dimension_brute(len, 2, 1);
    let start = Instant::now();
    let (plan, checked, mut mismatches) = match theorem {
        "3.1" | "4.1" | "5.1" => classify_sweep(len, sample, workers)?,
        "3.5" | "4.5" | "5.2" => ladder_sweep(len, sample, workers)?,
        "3.7" | "4.7" | "5.4" => dims_sweep(len, sample, workers)?,
        "2.4-band" => band_sweep(len, sample, workers)?,
        _ => unreachable!("theorem id validated by checked_length"),
    };
    let elapsed_ms = start.elapsed().as_millis();
    let mismatch_count = mismatches.len() as u64;
    mismatches.truncate(DETAIL_CAP);
    Ok(VerifyReport {
        theorem: theorem.to_string(),
        m,
        cases_checked: checked,
        mismatch_count,
        mismatches,
        sampled: plan.sampled,
        sample_seed: plan.sampled.then_some(SAMPLE_SEED),
        sample_size: plan.sample_size,
        elapsed_ms,
    })
}
