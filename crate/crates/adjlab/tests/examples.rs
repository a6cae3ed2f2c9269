//! Executes every shipped example end to end.
//!
//! Each example file is mounted as a module via `#[path]`, so the exact code
//! that `cargo run --example <name>` executes also runs (and is asserted on)
//! under `cargo test`. The examples print to stdout; the test harness
//! captures that output and only the examples' own internal assertions and
//! error paths decide the outcome.

#[path = "../examples/classify_catalog.rs"]
mod classify_catalog;
#[path = "../examples/drilldown_trace.rs"]
mod drilldown_trace;
#[path = "../examples/invert_vsequence.rs"]
mod invert_vsequence;
#[path = "../examples/lens_dinvariants.rs"]
mod lens_dinvariants;
#[path = "../examples/root_obstruction.rs"]
mod root_obstruction;
#[path = "../examples/seifert_forms.rs"]
mod seifert_forms;
#[path = "../examples/surgery_dinvariants.rs"]
mod surgery_dinvariants;

#[test]
fn classify_catalog_runs() {
    classify_catalog::main().expect("classify_catalog failed");
}

#[test]
fn drilldown_trace_runs() {
    drilldown_trace::main().expect("drilldown_trace failed");
}

#[test]
fn invert_vsequence_runs() {
    invert_vsequence::main().expect("invert_vsequence failed");
}

#[test]
fn lens_dinvariants_runs() {
    lens_dinvariants::main().expect("lens_dinvariants failed");
}

#[test]
fn root_obstruction_runs() {
    root_obstruction::main().expect("root_obstruction failed");
}

#[test]
fn seifert_forms_runs() {
    seifert_forms::main().expect("seifert_forms failed");
}

#[test]
fn surgery_dinvariants_runs() {
    surgery_dinvariants::main().expect("surgery_dinvariants failed");
}
