//! End-to-end checks of the `adjlab` binary: exit codes, report stability
//! across parallelism settings, the fixture-directory override, and the
//! output of every subcommand.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

const CSV_HEADER: &str = "name,crossing_number,alternating,determinant,signature,\
unknotting_min,unknotting_max,conway_coeffs,alexander_symmetrized,homfly_p0,homfly_p2,\
is_lspace_dbc,is_rational_knot,mccoy_pos,mccoy_neg";

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_adjlab"))
}

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    assert!(
        output.status.success(),
        "exit {:?}, stderr: {}",
        output.status.code(),
        String::from_utf8_lossy(&output.stderr)
    );
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

// ---------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------

#[test]
fn classify_shipped_table_is_deterministic_across_jobs() {
    let one = stdout_of(&run(&["classify", "--jobs", "1"]));
    let four = stdout_of(&run(&["classify", "--jobs", "4"]));
    let default = stdout_of(&run(&["classify"]));
    assert_eq!(one, four, "reports must be byte-identical across --jobs");
    assert_eq!(one, default);

    let lines: Vec<&str> = one.lines().collect();
    assert_eq!(lines.len(), 70, "69 knots + summary");
    assert_eq!(
        lines[69],
        r#"{"summary":{"KnownTwoAdjacent":20,"Obstructed":49,"Unresolved":0}}"#
    );
    // JSON-lines with sorted keys: every knot line starts with the same
    // first key, and names arrive in lexicographic order.
    let mut names = Vec::new();
    for line in &lines[..69] {
        assert!(line.starts_with(r#"{"detail":"#), "sorted keys expected: {line}");
        let value: Value = serde_json::from_str(line).expect("valid JSON");
        names.push(value["knot"].as_str().expect("knot name").to_string());
    }
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted, "knots must be emitted in name order");
}

#[test]
fn classify_thirteen_crossing_table_counts() {
    let table = fixtures().join("knots_13.csv");
    let text = stdout_of(&run(&["classify", "--table", table.to_str().unwrap()]));
    let last = text.lines().last().unwrap();
    assert_eq!(
        last,
        r#"{"summary":{"KnownTwoAdjacent":13,"Obstructed":0,"Unresolved":74}}"#,
        "unresolved knots are a data outcome, not an error"
    );
}

#[test]
fn classify_missing_table_exits_one() {
    let output = run(&["classify", "--table", "/nonexistent/knots.csv"]);
    assert_eq!(output.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&output.stderr).contains("error:"));
}

#[test]
fn classify_invalid_threshold_exits_one() {
    let output = run(&["classify", "--threshold", "0"]);
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn classify_empty_table_exits_zero_with_empty_report() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("empty.csv");
    std::fs::write(&table, format!("{CSV_HEADER}\n")).unwrap();
    let output = run(&["classify", "--table", table.to_str().unwrap()]);
    let text = stdout_of(&output);
    assert_eq!(
        text,
        "{\"summary\":{\"KnownTwoAdjacent\":0,\"Obstructed\":0,\"Unresolved\":0}}\n"
    );
}

#[test]
fn classify_output_flag_writes_the_same_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.jsonl");
    let to_stdout = stdout_of(&run(&["classify"]));
    let piped = run(&["classify", "--output", path.to_str().unwrap()]);
    assert!(piped.status.success());
    assert!(piped.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), to_stdout);
}

#[test]
fn classify_pretty_renders_multiline_json_with_same_verdicts() {
    let pretty = stdout_of(&run(&["classify", "--pretty"]));
    assert!(pretty.contains("\"verdict\": \"KnownTwoAdjacent\""));
    assert!(pretty.contains("\"KnownTwoAdjacent\": 20"));
    assert!(pretty.contains("\"Obstructed\": 49"));
}

// ---------------------------------------------------------------------
// drilldown
// ---------------------------------------------------------------------

#[test]
fn drilldown_11a_255_ends_with_the_obstruction_line() {
    let text = stdout_of(&run(&["drilldown", "11a_255"]));
    assert!(
        text.trim_end().ends_with("obstructed by floer_torres; ω=6"),
        "trace ends: {:?}",
        text.lines().last()
    );
}

#[test]
fn drilldown_trefoil_reports_known_two_adjacent() {
    let text = stdout_of(&run(&["drilldown", "3_1"]));
    assert!(text.contains("KnownTwoAdjacent; all filters pass"));
}

#[test]
fn drilldown_12n_586_shows_the_inversion_path() {
    let text = stdout_of(&run(&["drilldown", "12n_586"]));
    assert!(text.contains("q = 3 → q = 2"), "inversion path missing:\n{text}");
    assert!(text.trim_end().ends_with("obstructed by floer_torres; ω=5"));
}

#[test]
fn drilldown_unknown_knot_exits_two() {
    let output = run(&["drilldown", "99z_999"]);
    assert_eq!(output.status.code(), Some(2));
}

// ---------------------------------------------------------------------
// fixture directory override
// ---------------------------------------------------------------------

#[test]
fn adjlab_fixtures_env_overrides_the_fixture_directory() {
    let dir = tempfile::tempdir().unwrap();
    for name in [
        "knots_12.csv",
        "knots_13.csv",
        "lifts.json",
        "known_two_adjacent.json",
        "expected_eliminations.json",
    ] {
        std::fs::copy(fixtures().join(name), dir.path().join(name)).unwrap();
    }
    let baseline = stdout_of(&run(&["classify"]));
    let moved = bin()
        .args(["classify"])
        .env("ADJLAB_FIXTURES", dir.path())
        .output()
        .expect("binary runs");
    assert_eq!(stdout_of(&moved), baseline);

    // Pointing the override at an empty directory breaks loading: exit 1.
    let empty = tempfile::tempdir().unwrap();
    let broken = bin()
        .args(["classify"])
        .env("ADJLAB_FIXTURES", empty.path())
        .output()
        .expect("binary runs");
    assert_eq!(broken.status.code(), Some(1));
}

// ---------------------------------------------------------------------
// dinv
// ---------------------------------------------------------------------

#[test]
fn dinv_lens_prints_exact_rationals() {
    let text = stdout_of(&run(&["dinv", "lens", "7", "2"]));
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 7);
    let expected: Vec<String> = (0..7)
        .map(|i| {
            adjlab::algebra::format_rational(&adjlab::dinv::lens_d_recursive(7, 2, i).unwrap())
        })
        .collect();
    assert_eq!(lines, expected);
}

#[test]
fn dinv_surgery_accepts_either_v_or_alex() {
    let from_v = stdout_of(&run(&["dinv", "surgery", "11", "2", "--v", "1,0"]));
    let from_alex = stdout_of(&run(&["dinv", "surgery", "11", "2", "--alex", "-1,1"]));
    assert_eq!(from_v, from_alex, "V = (1, 0) is the torsion sequence of Δ = t − 1 + t⁻¹");
    assert_eq!(from_v.lines().count(), 11);

    let neither = run(&["dinv", "surgery", "11", "2"]);
    assert_eq!(neither.status.code(), Some(1));
    let both = run(&["dinv", "surgery", "11", "2", "--v", "1,0", "--alex", "-1,1"]);
    assert_ne!(both.status.code(), Some(0), "--v and --alex conflict");
}

// ---------------------------------------------------------------------
// vsolve
// ---------------------------------------------------------------------

#[test]
fn vsolve_finds_the_unique_sequence_for_a_forward_instance() {
    let v: Vec<num_bigint::BigInt> = [1i64, 0].iter().map(|&x| x.into()).collect();
    let sigma = adjlab::dinv::niwu_surgery_d(11, 2, &v).unwrap();
    let entries: Vec<String> = adjlab::dinv::format_d_vector(&sigma);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sigma.json");
    std::fs::write(&path, serde_json::to_string(&entries).unwrap()).unwrap();

    let text = stdout_of(&run(&["vsolve", "--lens", "11", "--sigma", path.to_str().unwrap()]));
    assert!(text.contains("[1, 0]"), "solution missing:\n{text}");
    assert!(text.contains("unique: true"));
}

#[test]
fn vsolve_reports_inconsistency_for_an_impossible_multiset() {
    // d(L(11,2)) with every entry shifted by −2: a parity-consistent
    // multiset no torsion sequence reproduces.
    let shifted: Vec<String> = (0..11)
        .map(|i| {
            let two = num_rational::BigRational::from_integer(2.into());
            adjlab::algebra::format_rational(
                &(adjlab::dinv::lens_d_recursive(11, 2, i).unwrap() - two),
            )
        })
        .collect();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sigma.json");
    std::fs::write(&path, serde_json::to_string(&shifted).unwrap()).unwrap();

    let text = stdout_of(&run(&["vsolve", "--lens", "11", "--sigma", path.to_str().unwrap()]));
    assert!(
        text.contains("no admissible torsion sequence"),
        "expected the no-consistent-surgery report:\n{text}"
    );
    assert!(text.contains("unique: false"));
}

// ---------------------------------------------------------------------
// obstruct
// ---------------------------------------------------------------------

#[test]
fn obstruct_emits_the_pipeline_fragment_as_json() {
    let text = stdout_of(&run(&["obstruct", "--knot", "11a_255"]));
    let value: Value = serde_json::from_str(&text).expect("valid JSON");
    assert_eq!(value["knot"], "11a_255");
    assert_eq!(value["determinant"], 143);
    assert_eq!(value["omega"], 6);
    assert_eq!(value["surgery_q"], 2);
    assert_eq!(value["obstructed"], true);
    assert_eq!(value["candidate_count"], 1);
    assert_eq!(value["unique_candidate"], true);
    assert_eq!(value["status"], "verdict");
    assert_eq!(value["candidates"][0]["fails"], true);
    assert_eq!(value["candidates"][0]["roots"].as_array().unwrap().len(), 6);
    // Keys are serialized in sorted order.
    assert!(text.starts_with(r#"{"candidate_count":"#), "sorted keys expected: {text}");
}

#[test]
fn obstruct_without_a_lift_entry_exits_one() {
    let output = run(&["obstruct", "--knot", "3_1"]);
    assert_eq!(output.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&output.stderr).contains("no lift entry"));
}

// ---------------------------------------------------------------------
// construct
// ---------------------------------------------------------------------

#[test]
fn construct_emits_matrix_closed_forms_and_det_form() {
    let text = stdout_of(&run(&[
        "construct",
        "--linking",
        "-2",
        "--h1",
        "1",
        "--h2",
        "-1",
        "--non-interleaved",
    ]));
    let value: Value = serde_json::from_str(&text).expect("valid JSON");
    assert_eq!(value["determinant"], 65);
    assert_eq!(value["det_form"]["form"], "4w^2+1");
    assert_eq!(value["det_form"]["omega"], 4);
    assert_eq!(value["conway"].as_array().unwrap().len(), 3);
    assert_eq!(value["seifert_matrix"][2][3], -2);

    let interleaved = stdout_of(&run(&[
        "construct",
        "--linking",
        "-2",
        "--h1",
        "1",
        "--h2",
        "-1",
        "--interleaved",
    ]));
    let value: Value = serde_json::from_str(&interleaved).expect("valid JSON");
    assert_eq!(value["determinant"], 101);
    assert_eq!(value["det_form"]["form"], "4w^2+1");
    assert_eq!(value["det_form"]["omega"], 5);
}

#[test]
fn construct_requires_exactly_one_layout_flag() {
    let neither = run(&["construct", "--linking", "1", "--h1", "1", "--h2", "1"]);
    assert_eq!(neither.status.code(), Some(1));
    let both = run(&[
        "construct",
        "--linking",
        "1",
        "--h1",
        "1",
        "--h2",
        "1",
        "--interleaved",
        "--non-interleaved",
    ]);
    assert_ne!(both.status.code(), Some(0), "layout flags conflict");
}
