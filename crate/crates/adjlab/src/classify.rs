//! Verdict assembly and deterministic report rendering.
//!
//! A knot's classification is the combination of the filter battery
//! ([`crate::filters`]), the d-invariant pipeline ([`crate::obstruct`])
//! for the knots with ingested lift data, and the curated list of knots
//! known to be 2-adjacent. The verdict is:
//!
//! - `Obstructed` when at least one filter fails (`eliminated_by` lists
//!   every failing filter in battery order; the first entry is the
//!   attribution);
//! - `KnownTwoAdjacent` when nothing fails and the knot is on the known
//!   list;
//! - `Unresolved` otherwise — a data outcome, not an error.
//!
//! Reports serialize as JSON lines (one knot per line, keys sorted,
//! knots ordered by name) so runs are byte-identical across repetitions
//! and parallelism settings.

use crate::filters::{det_form, run_battery, FilterId, FilterOutcome};
use crate::knotdata::{KnotRecord, LiftEntry};
use crate::obstruct::{floer_pipeline, FloerFinding, FloerReport};
use rayon::prelude::*;
use serde_json::{json, Map, Value};
use std::collections::BTreeSet;
use std::collections::HashMap;

/// Final classification of one knot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// On the curated known-2-adjacent list and consistent with every filter.
    KnownTwoAdjacent,
    /// Some filter proved the knot is not 2-adjacent.
    Obstructed,
    /// Neither known nor obstructed.
    Unresolved,
}

impl Verdict {
    /// Stable report string.
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::KnownTwoAdjacent => "KnownTwoAdjacent",
            Verdict::Obstructed => "Obstructed",
            Verdict::Unresolved => "Unresolved",
        }
    }
}

/// Everything the pipeline concluded about one knot.
#[derive(Debug, Clone)]
pub struct ObstructionReport {
    /// Knot name.
    pub knot: String,
    /// Final verdict; `Obstructed` exactly when `eliminated_by` is nonempty.
    pub verdict: Verdict,
    /// Failing filter identifiers in battery order (first = attribution).
    pub eliminated_by: Vec<String>,
    /// Battery outcomes in order (the d-invariant filter excluded).
    pub filter_outcomes: Vec<(FilterId, FilterOutcome)>,
    /// Outcome of the d-invariant filter.
    pub floer_outcome: FilterOutcome,
    /// Full d-invariant pipeline report when it ran.
    pub floer: Option<FloerReport>,
}

impl ObstructionReport {
    /// The attributed (first failing) filter, if any.
    pub fn attribution(&self) -> Option<&str> {
        self.eliminated_by.first().map(String::as_str)
    }
}

/// Classifies one record. `lift` is the ingested surgery description for
/// the knot, when one exists; `known` is the curated known-2-adjacent set.
pub fn classify_record(
    record: &KnotRecord,
    lift: Option<&LiftEntry>,
    known: &BTreeSet<String>,
    threshold: f64,
) -> ObstructionReport {
    let filter_outcomes = run_battery(record);
    let mut eliminated_by: Vec<String> = filter_outcomes
        .iter()
        .filter(|(_, o)| o.is_fail())
        .map(|(id, _)| id.name().to_string())
        .collect();

    let (floer, floer_outcome) = if !eliminated_by.is_empty() {
        (None, FilterOutcome::Skipped("an earlier filter already eliminated the knot".into()))
    } else {
        match (record.is_lspace_dbc, lift) {
            (None, _) => (
                None,
                FilterOutcome::Skipped("missing data: no L-space determination for Σ(K)".into()),
            ),
            (Some(false), _) => (
                None,
                FilterOutcome::Skipped("Σ(K) is not an L-space; d-invariant method inapplicable".into()),
            ),
            (Some(true), None) => {
                (None, FilterOutcome::Skipped("missing data: no ingested lift entry".into()))
            }
            (Some(true), Some(lift)) => match floer_pipeline(record, lift, threshold) {
                Ok(report) => {
                    let outcome = if report.obstructed {
                        FilterOutcome::Fail(format!(
                            "no candidate Alexander polynomial evaluates to 1 at all odd {}-th roots of unity",
                            2 * report.omega
                        ))
                    } else {
                        FilterOutcome::Pass
                    };
                    (Some(report), outcome)
                }
                Err(e) => (None, FilterOutcome::Skipped(format!("pipeline not applicable: {e}"))),
            },
        }
    };
    if floer_outcome.is_fail() {
        eliminated_by.push(FilterId::FloerTorres.name().to_string());
    }

    let verdict = if !eliminated_by.is_empty() {
        Verdict::Obstructed
    } else if known.contains(&record.name) {
        Verdict::KnownTwoAdjacent
    } else {
        Verdict::Unresolved
    };

    ObstructionReport {
        knot: record.name.clone(),
        verdict,
        eliminated_by,
        filter_outcomes,
        floer_outcome,
        floer,
    }
}

/// Verdict counts for a whole run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Summary {
    /// Knots classified `KnownTwoAdjacent`.
    pub known_two_adjacent: usize,
    /// Knots classified `Obstructed`.
    pub obstructed: usize,
    /// Knots classified `Unresolved`.
    pub unresolved: usize,
}

/// A full classification run: per-knot reports sorted by name plus counts.
#[derive(Debug, Clone)]
pub struct ClassifyOutcome {
    /// One report per knot, sorted by knot name.
    pub reports: Vec<ObstructionReport>,
    /// Verdict counts.
    pub summary: Summary,
}

/// Classifies a whole table concurrently. The output order is always the
/// lexicographic knot-name order, independent of scheduling.
pub fn classify_table(
    records: &[KnotRecord],
    lifts: &[LiftEntry],
    known: &BTreeSet<String>,
    threshold: f64,
) -> ClassifyOutcome {
    let lift_map: HashMap<&str, &LiftEntry> =
        lifts.iter().map(|l| (l.knot.as_str(), l)).collect();
    let mut reports: Vec<ObstructionReport> = records
        .par_iter()
        .map(|r| classify_record(r, lift_map.get(r.name.as_str()).copied(), known, threshold))
        .collect();
    reports.sort_by(|a, b| a.knot.cmp(&b.knot));
    let mut summary = Summary::default();
    for r in &reports {
        match r.verdict {
            Verdict::KnownTwoAdjacent => summary.known_two_adjacent += 1,
            Verdict::Obstructed => summary.obstructed += 1,
            Verdict::Unresolved => summary.unresolved += 1,
        }
    }
    ClassifyOutcome { reports, summary }
}

fn det_form_payload(record_det: u64, outcome: &FilterOutcome) -> Value {
    let (form, omega) = match det_form(record_det) {
        Some(f) => (
            Value::String(
                match f {
                    crate::filters::DetForm::PlusOne { .. } => "4w^2+1",
                    crate::filters::DetForm::MinusOne { .. } => "4w^2-1",
                }
                .to_string(),
            ),
            Value::from(f.omega()),
        ),
        None => (Value::Null, Value::Null),
    };
    json!({ "outcome": outcome.to_string(), "form": form, "omega": omega })
}

fn floer_payload(report: &FloerReport, outcome: &FilterOutcome) -> Value {
    let mut obj = Map::new();
    obj.insert("outcome".into(), Value::String(outcome.to_string()));
    obj.insert("omega".into(), Value::from(report.omega));
    obj.insert("surgery_q".into(), Value::from(report.surgery_q));
    obj.insert("candidate_count".into(), Value::from(report.candidate_count));
    obj.insert("unique_candidate".into(), Value::from(report.unique_candidate));
    obj.insert(
        "note".into(),
        report.inversion_note.as_ref().map_or(Value::Null, |n| Value::String(n.clone())),
    );
    match &report.finding {
        FloerFinding::Vacuous => {
            obj.insert("status".into(), Value::String("vacuous".into()));
            obj.insert("max_distance".into(), Value::Null);
            obj.insert("worst_root".into(), Value::Null);
        }
        FloerFinding::Verdict(v) => {
            obj.insert("status".into(), Value::String("verdict".into()));
            let mut worst: Option<(usize, u64, f64, f64, f64)> = None;
            let mut max_distance = 0.0f64;
            for (ci, cand) in v.candidates.iter().enumerate() {
                for root in &cand.roots {
                    if root.distance > max_distance {
                        max_distance = root.distance;
                        worst = Some((ci, root.ell, root.value.re, root.value.im, root.distance));
                    }
                }
            }
            obj.insert("max_distance".into(), Value::from(max_distance));
            obj.insert(
                "worst_root".into(),
                worst.map_or(Value::Null, |(ci, ell, re, im, dist)| {
                    json!({
                        "candidate": ci,
                        "ell": ell,
                        "re": re,
                        "im": im,
                        "distance": dist,
                    })
                }),
            );
        }
    }
    Value::Object(obj)
}

/// The JSON object for one report (keys sorted by construction).
pub fn report_json(report: &ObstructionReport, determinant: u64) -> Value {
    let mut detail = Map::new();
    for (id, outcome) in &report.filter_outcomes {
        let payload = if *id == FilterId::DetForm {
            det_form_payload(determinant, outcome)
        } else {
            Value::String(outcome.to_string())
        };
        detail.insert(id.name().to_string(), payload);
    }
    let floer_value = match &report.floer {
        Some(fr) => floer_payload(fr, &report.floer_outcome),
        None => Value::String(report.floer_outcome.to_string()),
    };
    detail.insert(FilterId::FloerTorres.name().to_string(), floer_value);
    json!({
        "knot": report.knot,
        "verdict": report.verdict.as_str(),
        "eliminated_by": report.eliminated_by,
        "detail": Value::Object(detail),
    })
}

/// Renders a full run as JSON lines: one knot per line in name order,
/// then a final summary line. With `pretty`, each object is pretty-printed
/// (multi-line) instead.
pub fn render_report(
    outcome: &ClassifyOutcome,
    determinants: &HashMap<String, u64>,
    pretty: bool,
) -> String {
    let mut out = String::new();
    let to_text = |v: &Value| {
        if pretty {
            serde_json::to_string_pretty(v).expect("JSON serialization cannot fail")
        } else {
            serde_json::to_string(v).expect("JSON serialization cannot fail")
        }
    };
    for report in &outcome.reports {
        let det = determinants.get(&report.knot).copied().unwrap_or(0);
        out.push_str(&to_text(&report_json(report, det)));
        out.push('\n');
    }
    let summary = json!({
        "summary": {
            "KnownTwoAdjacent": outcome.summary.known_two_adjacent,
            "Obstructed": outcome.summary.obstructed,
            "Unresolved": outcome.summary.unresolved,
        }
    });
    out.push_str(&to_text(&summary));
    out.push('\n');
    out
}

/// Runs the classification and renders the deterministic report in one
/// call (convenience wrapper used by the CLI and the examples).
pub fn classify_and_render(
    records: &[KnotRecord],
    lifts: &[LiftEntry],
    known: &BTreeSet<String>,
    threshold: f64,
    pretty: bool,
) -> (ClassifyOutcome, String) {
    let outcome = classify_table(records, lifts, known, threshold);
    let determinants: HashMap<String, u64> =
        records.iter().map(|r| (r.name.clone(), r.determinant)).collect();
    let text = render_report(&outcome, &determinants, pretty);
    (outcome, text)
}

/// Renders the human-readable drilldown trace for one knot.
///
/// The trace prints every filter verdict, the d-invariant vectors, the
/// admissibility-search output, and the root evaluations, and ends with a
/// single verdict line.
pub fn drilldown_trace(record: &KnotRecord, report: &ObstructionReport) -> String {
    use crate::dinv::{format_d_vector, lens_d_recursive};
    use std::fmt::Write as _;

    let mut out = String::new();
    let _ = writeln!(
        out,
        "knot {} — {} crossings, determinant {}, signature {}, {}",
        record.name,
        record.crossing_number,
        record.determinant,
        record.signature,
        if record.alternating { "alternating" } else { "non-alternating" },
    );
    match det_form(record.determinant) {
        Some(f) => {
            let _ = writeln!(out, "determinant form: {} (ω = {})", f, f.omega());
        }
        None => {
            let _ = writeln!(out, "determinant form: none (not 4ω² ± 1)");
        }
    }
    let _ = writeln!(out, "filters:");
    for (id, outcome) in &report.filter_outcomes {
        let _ = writeln!(out, "  {}: {}", id.name(), outcome);
    }
    let _ = writeln!(out, "  floer_torres: {}", report.floer_outcome);

    if let Some(fr) = &report.floer {
        let _ = writeln!(out, "d-invariant pipeline:");
        let _ = writeln!(
            out,
            "  surgery description: slope {}/{} on the ingested lift",
            fr.determinant, fr.surgery_q
        );
        if let Some(slope) = &fr.slope {
            let _ = writeln!(
                out,
                "  sign bookkeeping: σ = {} → ε = {}, slope sign {}{}",
                slope.sigma,
                slope.epsilon,
                if slope.slope_sign > 0 { "+" } else { "−" },
                if slope.mirrored_for_positive_slope() {
                    "; mirrored to the positive slope (Alexander data unchanged)"
                } else {
                    ""
                },
            );
        }
        match &fr.finding {
            FloerFinding::Vacuous => {
                let _ = writeln!(out, "  ω = 0: root-of-unity gate passed vacuously");
            }
            FloerFinding::Verdict(v) => {
                if fr.surgery_q != 2 {
                    let lens3: Vec<_> = (0..fr.determinant)
                        .map(|i| lens_d_recursive(fr.determinant, fr.surgery_q as u64, i).unwrap())
                        .collect();
                    let _ = writeln!(
                        out,
                        "  lens d(L({},{}), ·): {}",
                        fr.determinant,
                        fr.surgery_q,
                        format_d_vector(&lens3).join(", ")
                    );
                }
                let lens2: Vec<_> = (0..fr.determinant)
                    .map(|i| lens_d_recursive(fr.determinant, 2, i).unwrap())
                    .collect();
                let _ = writeln!(
                    out,
                    "  lens d(L({},2), ·): {}",
                    fr.determinant,
                    format_d_vector(&lens2).join(", ")
                );
                let _ = writeln!(
                    out,
                    "  d-invariants of Σ(K): {}",
                    format_d_vector(&fr.sigma_d).join(", ")
                );
                match &fr.v_sequence {
                    Some(v) => {
                        let terms: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                        let _ = writeln!(out, "  torsion sequence V: {}", terms.join(", "));
                    }
                    None => {
                        let _ = writeln!(out, "  torsion sequence V: none derived");
                    }
                }
                if fr.surgery_q == 3 {
                    let _ = writeln!(
                        out,
                        "  half-integer inversion (q = 3 → q = 2): {}",
                        fr.inversion_note.as_deref().unwrap_or("consistent"),
                    );
                } else if let Some(note) = &fr.inversion_note {
                    let _ = writeln!(out, "  inversion note: {note}");
                }
                let _ = writeln!(
                    out,
                    "  admissible candidate polynomials: {}{}",
                    fr.candidate_count,
                    if fr.unique_candidate { " (unique)" } else { "" },
                );
                let _ = writeln!(
                    out,
                    "  root evaluations at z = e^((2ℓ+1)πi/{}), threshold {}:",
                    fr.omega, v.threshold
                );
                for (ci, cand) in v.candidates.iter().enumerate() {
                    let _ = writeln!(
                        out,
                        "    candidate {}: {} — max |Δ(z) − 1| = {:.4} → {}",
                        ci + 1,
                        cand.candidate,
                        cand.max_distance,
                        if cand.fails { "fails" } else { "survives" },
                    );
                    // Round to the displayed precision and fold negative
                    // zero so the trace never prints `-0.0000`.
                    let shown = |x: f64| {
                        let r = (x * 1e4).round() / 1e4;
                        if r == 0.0 {
                            0.0
                        } else {
                            r
                        }
                    };
                    for root in &cand.roots {
                        let _ = writeln!(
                            out,
                            "      ℓ = {}: Δ(z) = {:.4} {:+.4}i, |Δ(z) − 1| = {:.4}",
                            root.ell,
                            shown(root.value.re),
                            shown(root.value.im),
                            root.distance
                        );
                    }
                }
            }
        }
    }

    let final_line = match report.verdict {
        Verdict::KnownTwoAdjacent => "KnownTwoAdjacent; all filters pass".to_string(),
        Verdict::Unresolved => "Unresolved; no filter applies and the knot is not on the known list".to_string(),
        Verdict::Obstructed => {
            let first = report.attribution().unwrap_or("unknown");
            if first == FilterId::FloerTorres.name() {
                let omega = report.floer.as_ref().map(|f| f.omega).unwrap_or(0);
                format!("obstructed by floer_torres; ω={omega}")
            } else {
                format!("obstructed by {first}")
            }
        }
    };
    out.push_str(&final_line);
    out.push('\n');
    out
}
