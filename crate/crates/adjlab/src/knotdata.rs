//! Knot-table and lift-table loading with strict validation.
//!
//! The on-disk inputs are:
//!
//! * a knot table CSV with one row per knot (classical invariants, optional
//!   HOMFLY-PT slices, optional signed-unknotting annotations);
//! * `lifts.json`, a list of surgery descriptions: for certain knots `K` a
//!   companion knot `J` with `Σ(K) = S³_{±d/q}(J)`, given by its symmetric
//!   Alexander polynomial (and, where available, a DT code kept for
//!   provenance);
//! * `known_two_adjacent.json`, the reference list of confirmed names;
//! * `expected_eliminations.json`, per-filter attribution lists used by the
//!   regression tests.
//!
//! [`load_table`] parses and then [`validate`]s every record; a single bad
//! row fails the whole load, because downstream classification must never
//! run on internally inconsistent data. Validation recomputes each claimed
//! invariant along two independent routes where possible (e.g. the
//! determinant both as `|Δ(-1)|` and as `|∇|` evaluated at `z² = -4`).
//!
//! Polynomial-valued cells are JSON: Conway coefficients as the array
//! `[a_0, a_2, a_4, …]`, the symmetrized Alexander polynomial as
//! `[a_0, a_1, …, a_g]`, and HOMFLY-PT slices as `{"exponent": coefficient}`
//! objects in the framing variable `ℓ`. Empty cells mean "not recorded".

use crate::algebra::{conway_to_alexander, Laurent};
use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Deserialize;
use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};

/// Errors from loading or validating knot data.
#[derive(Debug, thiserror::Error)]
pub enum KnotDataError {
    /// Filesystem error.
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    /// CSV structure error.
    #[error("CSV error in {path}: {source}")]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },
    /// A required column is missing from the header.
    #[error("missing column {0:?}")]
    MissingColumn(String),
    /// A cell failed to parse.
    #[error("row {row} ({name}): bad {column}: {detail}")]
    BadCell { row: usize, name: String, column: String, detail: String },
    /// A record failed semantic validation.
    #[error("knot {name}: {detail}")]
    Validation { name: String, detail: String },
    /// Two rows share a name.
    #[error("duplicate knot name {0}")]
    DuplicateName(String),
    /// JSON error.
    #[error("JSON error in {path}: {detail}")]
    Json { path: PathBuf, detail: String },
}

/// One row of the knot table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotRecord {
    /// Catalog name, e.g. `12n_586`.
    pub name: String,
    /// Minimal crossing number.
    pub crossing_number: u32,
    /// Whether the knot is alternating.
    pub alternating: bool,
    /// Knot determinant (always odd for a knot).
    pub determinant: u64,
    /// Signature (always even for a knot).
    pub signature: i32,
    /// Lower bound for the unknotting number, if recorded.
    pub unknotting_min: Option<u32>,
    /// Upper bound for the unknotting number, if recorded.
    pub unknotting_max: Option<u32>,
    /// Conway coefficients `[a_0, a_2, a_4, …]` (odd ones vanish for knots).
    pub conway_coeffs: Vec<BigInt>,
    /// Alexander polynomial in half form `[a_0, a_1, …, a_g]`.
    pub alexander_symmetrized: Vec<BigInt>,
    /// HOMFLY-PT slice `p_0(ℓ)`, if recorded.
    pub homfly_p0: Option<Laurent>,
    /// HOMFLY-PT slice `p_2(ℓ)`, if recorded.
    pub homfly_p2: Option<Laurent>,
    /// Whether the branched double cover is an L-space, if known.
    pub is_lspace_dbc: Option<bool>,
    /// Whether the knot is rational (two-bridge).
    pub is_rational_knot: bool,
    /// Whether the knot has positive unknotting number one, if annotated.
    pub mccoy_pos: Option<bool>,
    /// Whether the knot has negative unknotting number one, if annotated.
    pub mccoy_neg: Option<bool>,
}

impl KnotRecord {
    /// The Alexander polynomial as a full symmetric Laurent polynomial.
    pub fn alexander(&self) -> Laurent {
        Laurent::from_symmetric(&self.alexander_symmetrized)
    }

    /// Conway coefficient `a_2` (zero if the polynomial is shorter).
    pub fn a2(&self) -> BigInt {
        self.conway_coeffs.get(1).cloned().unwrap_or_default()
    }

    /// Conway coefficient `a_4` (zero if the polynomial is shorter).
    pub fn a4(&self) -> BigInt {
        self.conway_coeffs.get(2).cloned().unwrap_or_default()
    }
}

/// One lift entry: a knot `J` with `Σ(K) = S³_{±d/q}(J)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftEntry {
    /// Name of the knot `K` whose branched double cover is described.
    pub knot: String,
    /// DT code of `J` (empty when no diagram code was recorded).
    pub dt_code: Vec<i64>,
    /// Alexander polynomial of `J` in half form.
    pub alexander: Vec<BigInt>,
    /// Denominator `q` of the surgery slope `d/q` (`d` is the determinant).
    pub surgery_q: u32,
    /// A candidate Alexander polynomial for a conjectured alternative lift,
    /// kept for cross-examination when the primary route is inconsistent.
    pub candidate_alexander: Option<Vec<BigInt>>,
    /// The torsion sequence recorded alongside `candidate_alexander`.
    pub v_prime: Option<Vec<u64>>,
    /// Free-text provenance note.
    pub note: Option<String>,
}

impl LiftEntry {
    /// The lift's Alexander polynomial as a Laurent polynomial.
    pub fn alexander_poly(&self) -> Laurent {
        Laurent::from_symmetric(&self.alexander)
    }

    /// The candidate's Alexander polynomial, if present.
    pub fn candidate_poly(&self) -> Option<Laurent> {
        self.candidate_alexander.as_deref().map(Laurent::from_symmetric)
    }
}

/// Resolves the fixture directory: the `ADJLAB_FIXTURES` environment
/// variable if set, otherwise the `fixtures/` directory shipped with the
/// crate.
pub fn fixtures_dir() -> PathBuf {
    match std::env::var_os("ADJLAB_FIXTURES") {
        Some(dir) => PathBuf::from(dir),
        None => Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures"),
    }
}

const COLUMNS: [&str; 15] = [
    "name",
    "crossing_number",
    "alternating",
    "determinant",
    "signature",
    "unknotting_min",
    "unknotting_max",
    "conway_coeffs",
    "alexander_symmetrized",
    "homfly_p0",
    "homfly_p2",
    "is_lspace_dbc",
    "is_rational_knot",
    "mccoy_pos",
    "mccoy_neg",
];

/// Loads and validates a knot table CSV. Any parse or validation failure on
/// any row fails the whole load.
pub fn load_table(path: &Path) -> Result<Vec<KnotRecord>, KnotDataError> {
    let mut reader = csv::ReaderBuilder::new()
        .flexible(false)
        .from_path(path)
        .map_err(|source| KnotDataError::Csv { path: path.to_path_buf(), source })?;
    let headers = reader
        .headers()
        .map_err(|source| KnotDataError::Csv { path: path.to_path_buf(), source })?
        .clone();
    let mut index = BTreeMap::new();
    for col in COLUMNS {
        let pos = headers
            .iter()
            .position(|h| h == col)
            .ok_or_else(|| KnotDataError::MissingColumn(col.to_string()))?;
        index.insert(col, pos);
    }
    let mut records = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for (row_num, row) in reader.records().enumerate() {
        let row = row.map_err(|source| KnotDataError::Csv { path: path.to_path_buf(), source })?;
        let record = parse_row(&row, &index, row_num + 2)?;
        if !seen.insert(record.name.clone()) {
            return Err(KnotDataError::DuplicateName(record.name));
        }
        validate(&record)?;
        records.push(record);
    }
    Ok(records)
}

fn parse_row(
    row: &csv::StringRecord,
    index: &BTreeMap<&'static str, usize>,
    row_num: usize,
) -> Result<KnotRecord, KnotDataError> {
    let cell = |col: &'static str| row.get(index[col]).unwrap_or("").trim();
    let name = cell("name").to_string();
    let bad = |column: &str, detail: String| KnotDataError::BadCell {
        row: row_num,
        name: name.clone(),
        column: column.to_string(),
        detail,
    };
    if name.is_empty() {
        return Err(bad("name", "empty".into()));
    }

    fn req<T: std::str::FromStr>(
        s: &str,
        col: &str,
        bad: &dyn Fn(&str, String) -> KnotDataError,
    ) -> Result<T, KnotDataError>
    where
        T::Err: std::fmt::Display,
    {
        s.parse::<T>().map_err(|e| bad(col, format!("{e} (value {s:?})")))
    }

    fn opt<T: std::str::FromStr>(
        s: &str,
        col: &str,
        bad: &dyn Fn(&str, String) -> KnotDataError,
    ) -> Result<Option<T>, KnotDataError>
    where
        T::Err: std::fmt::Display,
    {
        if s.is_empty() {
            Ok(None)
        } else {
            req::<T>(s, col, bad).map(Some)
        }
    }

    let badf: &dyn Fn(&str, String) -> KnotDataError = &bad;
    let conway_coeffs = parse_int_array(cell("conway_coeffs"))
        .map_err(|e| bad("conway_coeffs", e))?;
    let alexander_symmetrized = parse_int_array(cell("alexander_symmetrized"))
        .map_err(|e| bad("alexander_symmetrized", e))?;
    let homfly_p0 = parse_opt_laurent(cell("homfly_p0")).map_err(|e| bad("homfly_p0", e))?;
    let homfly_p2 = parse_opt_laurent(cell("homfly_p2")).map_err(|e| bad("homfly_p2", e))?;

    Ok(KnotRecord {
        crossing_number: req(cell("crossing_number"), "crossing_number", badf)?,
        alternating: req(cell("alternating"), "alternating", badf)?,
        determinant: req(cell("determinant"), "determinant", badf)?,
        signature: req(cell("signature"), "signature", badf)?,
        unknotting_min: opt(cell("unknotting_min"), "unknotting_min", badf)?,
        unknotting_max: opt(cell("unknotting_max"), "unknotting_max", badf)?,
        conway_coeffs,
        alexander_symmetrized,
        homfly_p0,
        homfly_p2,
        is_lspace_dbc: opt(cell("is_lspace_dbc"), "is_lspace_dbc", badf)?,
        is_rational_knot: req(cell("is_rational_knot"), "is_rational_knot", badf)?,
        mccoy_pos: opt(cell("mccoy_pos"), "mccoy_pos", badf)?,
        mccoy_neg: opt(cell("mccoy_neg"), "mccoy_neg", badf)?,
        name,
    })
}

/// Parses a JSON integer array like `[1, 0, -4]`.
fn parse_int_array(s: &str) -> Result<Vec<BigInt>, String> {
    if s.is_empty() {
        return Err("empty (this column is required)".into());
    }
    let vals: Vec<i64> = serde_json::from_str(s).map_err(|e| e.to_string())?;
    Ok(vals.into_iter().map(BigInt::from).collect())
}

/// Parses an optional JSON Laurent object like `{"-4": 1, "-2": 2}`.
fn parse_opt_laurent(s: &str) -> Result<Option<Laurent>, String> {
    if s.is_empty() {
        return Ok(None);
    }
    let map: BTreeMap<String, i64> = serde_json::from_str(s).map_err(|e| e.to_string())?;
    let mut terms = Vec::with_capacity(map.len());
    for (k, v) in map {
        let e: i64 = k.trim().parse().map_err(|_| format!("bad exponent {k:?}"))?;
        terms.push((e, BigInt::from(v)));
    }
    Ok(Some(Laurent::from_terms(terms)))
}

/// Semantic validation of a single record.
///
/// Checks, in order:
/// 1. the determinant is odd and positive, the signature even;
/// 2. `Δ(1) = 1` for the symmetrized Alexander polynomial;
/// 3. the determinant equals `|Δ(-1)|` **and** `|∇|` at `z² = -4` — two
///    separately computed routes that must agree with the recorded value;
/// 4. the Conway and Alexander polynomials describe the same invariant
///    (exact change of variable);
/// 5. determinant mod 4 and signature mod 4 are compatible
///    (`det ≡ 1 (mod 4)` exactly when `σ ≡ 0 (mod 4)`);
/// 6. unknotting bounds are ordered, and the signed-unknotting annotations
///    come as a pair.
pub fn validate(record: &KnotRecord) -> Result<(), KnotDataError> {
    let fail = |detail: String| KnotDataError::Validation {
        name: record.name.clone(),
        detail,
    };
    if record.determinant % 2 == 0 {
        return Err(fail(format!(
            "determinant {} is even; knot determinants are odd",
            record.determinant
        )));
    }
    if record.signature % 2 != 0 {
        return Err(fail(format!("signature {} is odd", record.signature)));
    }
    if record.alexander_symmetrized.is_empty() {
        return Err(fail("empty Alexander polynomial".into()));
    }

    let alex = record.alexander();
    let at_one = alex.laurent_eval_int(1).expect("eval at 1 never fails");
    if at_one != num_rational::BigRational::from(BigInt::one()) {
        return Err(fail(format!("Δ(1) = {at_one}, expected 1")));
    }

    // Route 1: determinant from the Alexander polynomial at t = -1.
    let at_minus_one = alex.laurent_eval_int(-1).expect("eval at -1 never fails");
    let det_alex = at_minus_one.numer().abs();
    // Route 2: determinant from the Conway polynomial at z² = -4.
    let conway_alex = conway_to_alexander(&record.conway_coeffs);
    let det_conway = conway_alex
        .laurent_eval_int(-1)
        .expect("eval at -1 never fails")
        .numer()
        .abs();
    let det = BigInt::from(record.determinant);
    if det_alex != det {
        return Err(fail(format!(
            "determinant {} does not match |Δ(-1)| = {}",
            record.determinant, det_alex
        )));
    }
    if det_conway != det {
        return Err(fail(format!(
            "determinant {} does not match the Conway route |∇(z²=-4)| = {}",
            record.determinant, det_conway
        )));
    }

    // The two polynomial columns must encode the same invariant.
    match conway_alex.symmetrize() {
        Ok(half) if half == record.alexander_symmetrized => {}
        Ok(half) => {
            return Err(fail(format!(
                "Conway and Alexander columns disagree: conversion gives {half:?}, table has {:?}",
                record.alexander_symmetrized
            )))
        }
        Err(e) => return Err(fail(format!("Conway column is not symmetric: {e}"))),
    }

    let det_mod4 = record.determinant % 4;
    let sig_mod4 = record.signature.rem_euclid(4);
    if (det_mod4 == 1) != (sig_mod4 == 0) {
        return Err(fail(format!(
            "determinant ≡ {det_mod4} (mod 4) is incompatible with signature ≡ {sig_mod4} (mod 4)"
        )));
    }

    if let (Some(lo), Some(hi)) = (record.unknotting_min, record.unknotting_max) {
        if lo > hi {
            return Err(fail(format!("unknotting bounds out of order: {lo} > {hi}")));
        }
    }
    if record.mccoy_pos.is_some() != record.mccoy_neg.is_some() {
        return Err(fail("signed-unknotting annotations must come as a pair".into()));
    }
    Ok(())
}

#[derive(Deserialize)]
struct RawLift {
    knot: String,
    dt_code: Vec<i64>,
    alexander: Vec<i64>,
    surgery_q: u32,
    #[serde(default)]
    candidate_alexander: Option<Vec<i64>>,
    #[serde(default)]
    v_prime: Option<Vec<u64>>,
    #[serde(default)]
    note: Option<String>,
}

/// Loads `lifts.json` and checks every entry: the Alexander polynomial must
/// satisfy `Δ(1) = 1`, and `surgery_q` must be positive.
pub fn load_lifts(path: &Path) -> Result<Vec<LiftEntry>, KnotDataError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| KnotDataError::Io { path: path.to_path_buf(), source })?;
    let raw: Vec<RawLift> = serde_json::from_str(&text)
        .map_err(|e| KnotDataError::Json { path: path.to_path_buf(), detail: e.to_string() })?;
    let mut out = Vec::with_capacity(raw.len());
    for r in raw {
        let entry = LiftEntry {
            knot: r.knot,
            dt_code: r.dt_code,
            alexander: r.alexander.into_iter().map(BigInt::from).collect(),
            surgery_q: r.surgery_q,
            candidate_alexander: r
                .candidate_alexander
                .map(|v| v.into_iter().map(BigInt::from).collect()),
            v_prime: r.v_prime,
            note: r.note,
        };
        if entry.surgery_q == 0 {
            return Err(KnotDataError::Validation {
                name: entry.knot,
                detail: "surgery_q must be positive".into(),
            });
        }
        let at_one = entry
            .alexander_poly()
            .laurent_eval_int(1)
            .expect("eval at 1 never fails");
        if at_one != num_rational::BigRational::from(BigInt::one()) {
            return Err(KnotDataError::Validation {
                name: entry.knot,
                detail: format!("lift Alexander polynomial has Δ(1) = {at_one}, expected 1"),
            });
        }
        out.push(entry);
    }
    Ok(out)
}

/// Loads the reference list of confirmed names.
pub fn load_known_list(path: &Path) -> Result<BTreeSet<String>, KnotDataError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| KnotDataError::Io { path: path.to_path_buf(), source })?;
    serde_json::from_str(&text)
        .map_err(|e| KnotDataError::Json { path: path.to_path_buf(), detail: e.to_string() })
}

/// Loads the per-filter attribution lists.
pub fn load_expected_eliminations(
    path: &Path,
) -> Result<BTreeMap<String, Vec<String>>, KnotDataError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| KnotDataError::Io { path: path.to_path_buf(), source })?;
    serde_json::from_str(&text)
        .map_err(|e| KnotDataError::Json { path: path.to_path_buf(), detail: e.to_string() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn shipped(name: &str) -> PathBuf {
        Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
    }

    #[test]
    fn shipped_twelve_crossing_table_loads_and_validates() {
        let records = load_table(&shipped("knots_12.csv")).unwrap();
        assert_eq!(records.len(), 69);
        let trefoil = records.iter().find(|r| r.name == "3_1").unwrap();
        assert_eq!(trefoil.determinant, 3);
        assert_eq!(trefoil.signature, -2);
        assert!(trefoil.is_rational_knot);
        assert_eq!(trefoil.a2(), BigInt::from(1));
        assert!(trefoil.homfly_p0.is_some());
        assert_eq!(trefoil.is_lspace_dbc, Some(true));
    }

    #[test]
    fn shipped_thirteen_crossing_table_loads_and_validates() {
        let records = load_table(&shipped("knots_13.csv")).unwrap();
        assert_eq!(records.len(), 87);
        assert!(records.iter().all(|r| r.crossing_number == 13));
    }

    #[test]
    fn shipped_lifts_load_with_expected_shapes() {
        let lifts = load_lifts(&shipped("lifts.json")).unwrap();
        assert_eq!(lifts.len(), 5);
        let by_name: BTreeMap<_, _> = lifts.iter().map(|l| (l.knot.as_str(), l)).collect();
        assert_eq!(by_name["11a_255"].surgery_q, 2);
        assert_eq!(by_name["12n_586"].surgery_q, 3);
        assert!(by_name["12n_586"].dt_code.is_empty());
        assert!(by_name["12n_586"].candidate_alexander.is_some());
        assert!(by_name["12n_586"].v_prime.is_some());
        assert_eq!(by_name["11a_255"].dt_code.len(), 58);
        assert!(by_name["12n_656"].note.is_some());
    }

    #[test]
    fn known_list_and_eliminations_load() {
        let known = load_known_list(&shipped("known_two_adjacent.json")).unwrap();
        assert_eq!(known.len(), 33);
        assert!(known.contains(&"3_1".to_string()));
        let elim = load_expected_eliminations(&shipped("expected_eliminations.json")).unwrap();
        let total: usize = elim.values().map(Vec::len).sum();
        assert_eq!(total, 36);
    }

    fn write_csv(rows: &[&str]) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(
            f,
            "name,crossing_number,alternating,determinant,signature,unknotting_min,\
             unknotting_max,conway_coeffs,alexander_symmetrized,homfly_p0,homfly_p2,\
             is_lspace_dbc,is_rational_knot,mccoy_pos,mccoy_neg"
        )
        .unwrap();
        for row in rows {
            writeln!(f, "{row}").unwrap();
        }
        f.flush().unwrap();
        f
    }

    #[test]
    fn even_determinant_is_a_validation_error() {
        let f = write_csv(&[r#"9_2,9,true,14,-2,1,1,"[1, 4]","[-7, 4]",,,,true,,"#]);
        let err = load_table(f.path()).unwrap_err();
        assert!(err.to_string().contains("even"), "{err}");
    }

    #[test]
    fn determinant_mismatch_is_a_validation_error() {
        // Claims det 15 but Δ = t - 1 + t^-1 has |Δ(-1)| = 3.
        let f = write_csv(&[r#"3_1,3,true,15,-2,1,1,"[1, 1]","[-1, 1]",,,,true,,"#]);
        let err = load_table(f.path()).unwrap_err();
        assert!(err.to_string().contains("does not match"), "{err}");
    }

    #[test]
    fn conway_alexander_disagreement_is_rejected() {
        // Alexander column says figure-eight (det 5, matching the claimed
        // determinant), Conway column says trefoil: the second determinant
        // route fires.
        let f = write_csv(&[r#"x_1,4,true,5,0,1,1,"[1, 1]","[3, -1]",,,,false,,"#]);
        let err = load_table(f.path()).unwrap_err();
        assert!(err.to_string().contains("Conway route"), "{err}");
    }

    #[test]
    fn parity_mismatch_is_rejected() {
        // det 5 ≡ 1 (mod 4) forces σ ≡ 0 (mod 4); σ = -2 must be rejected.
        let f = write_csv(&[r#"x_2,4,true,5,-2,1,1,"[1, -1]","[3, -1]",,,,false,,"#]);
        let err = load_table(f.path()).unwrap_err();
        assert!(err.to_string().contains("incompatible"), "{err}");
    }

    #[test]
    fn duplicate_names_are_rejected() {
        let row = r#"3_1,3,true,3,-2,1,1,"[1, 1]","[-1, 1]",,,,true,,"#;
        let f = write_csv(&[row, row]);
        let err = load_table(f.path()).unwrap_err();
        assert!(matches!(err, KnotDataError::DuplicateName(_)), "{err}");
    }

    #[test]
    fn empty_table_loads_as_empty() {
        let f = write_csv(&[]);
        assert_eq!(load_table(f.path()).unwrap(), Vec::new());
    }

    #[test]
    fn unpaired_mccoy_annotation_is_rejected() {
        let f = write_csv(&[r#"x_3,4,true,5,0,1,1,"[1, -1]","[3, -1]",,,,false,true,"#]);
        let err = load_table(f.path()).unwrap_err();
        assert!(err.to_string().contains("pair"), "{err}");
    }

    #[test]
    fn homfly_cells_parse_as_laurent_objects() {
        let f = write_csv(
            &[r#"3_1,3,true,3,-2,1,1,"[1, 1]","[-1, 1]","{""2"": 2, ""4"": 1}",,true,true,,"#],
        );
        let records = load_table(f.path()).unwrap();
        let p0 = records[0].homfly_p0.as_ref().unwrap();
        assert_eq!(p0.coeff(4), BigInt::from(1));
        assert_eq!(p0.coeff(2), BigInt::from(2));
        assert_eq!(records[0].homfly_p2, None);
    }
}
