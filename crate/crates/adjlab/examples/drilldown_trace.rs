//! Prints the full per-knot evidence trace for three instructive knots.
//!
//! The drilldown renders everything the classifier saw for one knot: each
//! filter verdict with its reason, the determinant form, and — when the
//! d-invariant route ran — the surgery description, torsion sequence,
//! admissibility search outcome, and every root-of-unity evaluation. The
//! three knots shown here cover the interesting shapes:
//!
//! * `3_1` — on the curated known-2-adjacent list; every filter passes.
//! * `11a_255` — survives the classical battery, eliminated by the
//!   d-invariant root test (`ω = 6`, one admissible candidate, all six
//!   roots deviate).
//! * `12n_586` — the `q = 3` lift: the half-integer inversion is
//!   inconsistent, the admissibility search confirms no sequence exists,
//!   and the root test eliminates both recorded polynomials.
//!
//! Run with:
//!
//! ```text
//! cargo run --example drilldown_trace
//! ```

use std::error::Error;

use adjlab::classify::{classify_record, drilldown_trace, Verdict};
use adjlab::knotdata::{fixtures_dir, load_known_list, load_lifts, load_table};

/// Deviation threshold for the root-of-unity test (the strict default).
const THRESHOLD: f64 = 1e-6;

pub fn main() -> Result<(), Box<dyn Error>> {
    let dir = fixtures_dir();
    let records = load_table(&dir.join("knots_12.csv"))?;
    let lifts = load_lifts(&dir.join("lifts.json"))?;
    let known = load_known_list(&dir.join("known_two_adjacent.json"))?;

    for (name, expected) in [
        ("3_1", Verdict::KnownTwoAdjacent),
        ("11a_255", Verdict::Obstructed),
        ("12n_586", Verdict::Obstructed),
    ] {
        let record = records
            .iter()
            .find(|r| r.name == name)
            .ok_or_else(|| format!("{name} not in the shipped table"))?;
        let lift = lifts.iter().find(|l| l.knot == name);
        let report = classify_record(record, lift, &known, THRESHOLD);
        assert_eq!(report.verdict, expected);

        let trace = drilldown_trace(record, &report);
        println!("{trace}");
        println!("{}", "=".repeat(72));
    }

    Ok(())
}
