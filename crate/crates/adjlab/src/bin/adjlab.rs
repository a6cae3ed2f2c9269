//! Command-line surface for the 2-adjacency pipeline.
//!
//! Subcommands: `classify` (whole-table JSON-lines report), `drilldown`
//! (human-readable single-knot trace), `dinv lens` / `dinv surgery`
//! (d-invariant vectors), `vsolve` (admissible torsion sequences),
//! `obstruct` (single-knot pipeline fragment as JSON), and `construct`
//! (Seifert-matrix family).
//!
//! Exit codes: `classify` exits 1 on load/validation failure and 0
//! otherwise (unresolved knots are a data outcome, not an error);
//! `drilldown` exits 2 when the knot is not in the table. The fixture
//! directory defaults to the one shipped with the crate and can be
//! overridden with the `ADJLAB_FIXTURES` environment variable.

use adjlab::algebra::parse_rational;
use adjlab::classify::{classify_record, classify_table, drilldown_trace, render_report};
use adjlab::dinv::{
    format_d_vector, lens_d_recursive, niwu_surgery_d, v_from_alex,
};
use adjlab::filters::DetForm;
use adjlab::knotdata::{
    fixtures_dir, load_known_list, load_lifts, load_table, KnotRecord, LiftEntry,
};
use adjlab::obstruct::{floer_pipeline, FloerFinding, DEFAULT_THRESHOLD};
use adjlab::seifert::{
    alexander_from_seifert, build_seifert_matrix, construction_determinant, conway_closed_form,
    normalize_alexander, TangleParams,
};
use adjlab::vsolver::admissible_v_sequences;
use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Map, Value};
use std::collections::HashMap;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "adjlab",
    version,
    about = "Exact-arithmetic 2-adjacency obstructions for knots"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify every knot in a table and emit a JSON-lines report.
    Classify(ClassifyArgs),
    /// Print a human-readable trace for a single knot.
    Drilldown(DrilldownArgs),
    /// d-invariant vectors.
    #[command(subcommand)]
    Dinv(DinvCommand),
    /// Enumerate admissible torsion sequences for a d-invariant multiset.
    Vsolve(VsolveArgs),
    /// Run the d-invariant pipeline for one knot and emit the report fragment.
    Obstruct(ObstructArgs),
    /// Build a Seifert matrix from the two-clasp family and verify its closed forms.
    Construct(ConstructArgs),
}

#[derive(Args)]
struct TableArgs {
    /// Knot table CSV (defaults to the shipped 12-crossing table).
    #[arg(long)]
    table: Option<PathBuf>,
    /// Lift entries JSON (defaults to the shipped file).
    #[arg(long)]
    lifts: Option<PathBuf>,
    /// Known-2-adjacent list JSON (defaults to the shipped file).
    #[arg(long)]
    known: Option<PathBuf>,
}

impl TableArgs {
    fn load(&self) -> Result<(Vec<KnotRecord>, Vec<LiftEntry>, std::collections::BTreeSet<String>)> {
        let dir = fixtures_dir();
        let table = self.table.clone().unwrap_or_else(|| dir.join("knots_12.csv"));
        let lifts = self.lifts.clone().unwrap_or_else(|| dir.join("lifts.json"));
        let known = self.known.clone().unwrap_or_else(|| dir.join("known_two_adjacent.json"));
        let records =
            load_table(&table).with_context(|| format!("loading table {}", table.display()))?;
        let lifts =
            load_lifts(&lifts).with_context(|| format!("loading lifts {}", lifts.display()))?;
        let known = load_known_list(&known)
            .with_context(|| format!("loading known list {}", known.display()))?;
        Ok((records, lifts, known))
    }
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    table: TableArgs,
    /// Deviation threshold for the root-of-unity test.
    #[arg(long, default_value_t = DEFAULT_THRESHOLD)]
    threshold: f64,
    /// Worker threads (0 = library default).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Pretty-print each JSON object (multi-line) instead of JSON lines.
    #[arg(long)]
    pretty: bool,
}

#[derive(Args)]
struct DrilldownArgs {
    /// Knot name, e.g. 11a_255.
    knot: String,
    #[command(flatten)]
    table: TableArgs,
    /// Deviation threshold for the root-of-unity test.
    #[arg(long, default_value_t = DEFAULT_THRESHOLD)]
    threshold: f64,
    /// Write the trace here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum DinvCommand {
    /// Print d(L(p,q), i) for i = 0..p−1, one exact rational per line.
    Lens(LensArgs),
    /// Print d(S³_{p/q}(J), i) for i = 0..p−1 from a torsion sequence.
    Surgery(SurgeryArgs),
}

#[derive(Args)]
struct LensArgs {
    /// Surgery numerator p ≥ 1.
    p: u64,
    /// Surgery denominator q with 1 ≤ q < p, coprime to p.
    q: u64,
    /// Write the values here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SurgeryArgs {
    /// Surgery numerator p ≥ 1.
    p: u64,
    /// Surgery denominator q with 1 ≤ q < p, coprime to p.
    q: u64,
    /// Torsion sequence, comma-separated (e.g. "1,0").
    #[arg(long, value_name = "V0,V1,...", conflicts_with = "alex", allow_hyphen_values = true)]
    v: Option<String>,
    /// Alexander half-coefficients a_0,a_1,…,a_g to derive V from.
    #[arg(long, value_name = "A0,A1,...", allow_hyphen_values = true)]
    alex: Option<String>,
    /// Write the values here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VsolveArgs {
    /// The lens-space order d (odd, ≥ 3); the target is L(d,2).
    #[arg(long)]
    lens: u64,
    /// JSON file with the d-invariant multiset as an array of "num/den" strings.
    #[arg(long)]
    sigma: PathBuf,
    /// Write the output here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ObstructArgs {
    /// Knot name, e.g. 11a_255.
    #[arg(long)]
    knot: String,
    #[command(flatten)]
    table: TableArgs,
    /// Deviation threshold for the root-of-unity test.
    #[arg(long, default_value_t = DEFAULT_THRESHOLD)]
    threshold: f64,
    /// Write the fragment here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Pretty-print the JSON.
    #[arg(long)]
    pretty: bool,
}

#[derive(Args)]
struct ConstructArgs {
    /// Linking number ℓ of the two band arcs.
    #[arg(long, allow_hyphen_values = true)]
    linking: i64,
    /// First clasp sign (+1 or -1).
    #[arg(long, allow_hyphen_values = true)]
    h1: i8,
    /// Second clasp sign (+1 or -1).
    #[arg(long, allow_hyphen_values = true)]
    h2: i8,
    /// Use the interleaved band layout ((ℓ, ℓ−1) bottom block).
    #[arg(long, conflicts_with = "non_interleaved")]
    interleaved: bool,
    /// Use the non-interleaved band layout ((ℓ, ℓ) bottom block).
    #[arg(long)]
    non_interleaved: bool,
    /// Write the JSON here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Pretty-print the JSON.
    #[arg(long)]
    pretty: bool,
}

fn emit(output: &Option<PathBuf>, text: &str) -> Result<()> {
    match output {
        Some(path) => std::fs::write(path, text)
            .with_context(|| format!("writing {}", path.display()))?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
        }
    }
    Ok(())
}

fn parse_int_list(s: &str) -> Result<Vec<BigInt>> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<BigInt>()
                .with_context(|| format!("invalid integer {:?}", part.trim()))
        })
        .collect()
}

fn json_to_text(v: &Value, pretty: bool) -> String {
    let mut text = if pretty {
        serde_json::to_string_pretty(v).expect("JSON serialization cannot fail")
    } else {
        serde_json::to_string(v).expect("JSON serialization cannot fail")
    };
    text.push('\n');
    text
}

fn det_form_json(form: &DetForm) -> Value {
    json!({
        "form": match form { DetForm::PlusOne { .. } => "4w^2+1", DetForm::MinusOne { .. } => "4w^2-1" },
        "omega": form.omega(),
    })
}

fn run_classify(args: ClassifyArgs) -> Result<ExitCode> {
    let (records, lifts, known) = args.table.load()?;
    if !(args.threshold > 0.0) {
        bail!("--threshold must be positive, got {}", args.threshold);
    }
    let outcome = if args.jobs > 0 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(args.jobs)
            .build()
            .context("building worker pool")?;
        pool.install(|| classify_table(&records, &lifts, &known, args.threshold))
    } else {
        classify_table(&records, &lifts, &known, args.threshold)
    };
    let determinants: HashMap<String, u64> =
        records.iter().map(|r| (r.name.clone(), r.determinant)).collect();
    let text = render_report(&outcome, &determinants, args.pretty);
    emit(&args.output, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn run_drilldown(args: DrilldownArgs) -> Result<ExitCode> {
    let (records, lifts, known) = args.table.load()?;
    let Some(record) = records.iter().find(|r| r.name == args.knot) else {
        eprintln!("error: knot {:?} is not in the table", args.knot);
        return Ok(ExitCode::from(2));
    };
    let lift = lifts.iter().find(|l| l.knot == args.knot);
    let report = classify_record(record, lift, &known, args.threshold);
    let trace = drilldown_trace(record, &report);
    emit(&args.output, &trace)?;
    Ok(ExitCode::SUCCESS)
}

fn run_dinv(cmd: DinvCommand) -> Result<ExitCode> {
    match cmd {
        DinvCommand::Lens(args) => {
            let mut values = Vec::with_capacity(args.p as usize);
            for i in 0..args.p {
                values.push(lens_d_recursive(args.p, args.q, i)?);
            }
            let mut text = format_d_vector(&values).join("\n");
            text.push('\n');
            emit(&args.output, &text)?;
        }
        DinvCommand::Surgery(args) => {
            let v = match (&args.v, &args.alex) {
                (Some(v), None) => parse_int_list(v)?,
                (None, Some(alex)) => v_from_alex(&parse_int_list(alex)?),
                _ => bail!("provide exactly one of --v or --alex"),
            };
            let values = niwu_surgery_d(args.p, args.q, &v)?;
            let mut text = format_d_vector(&values).join("\n");
            text.push('\n');
            emit(&args.output, &text)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_vsolve(args: VsolveArgs) -> Result<ExitCode> {
    let raw = std::fs::read_to_string(&args.sigma)
        .with_context(|| format!("reading {}", args.sigma.display()))?;
    let entries: Vec<String> =
        serde_json::from_str(&raw).context("sigma file must be a JSON array of \"num/den\" strings")?;
    let sigma: Vec<BigRational> = entries
        .iter()
        .map(|s| parse_rational(s).with_context(|| format!("invalid rational {s:?}")))
        .collect::<Result<_>>()?;
    let lens: Vec<BigRational> = (0..args.lens)
        .map(|i| lens_d_recursive(args.lens, 2, i))
        .collect::<Result<_, _>>()?;
    let solution = admissible_v_sequences(&lens, &sigma, 2)?;
    let mut text = String::new();
    if solution.sequences.is_empty() {
        text.push_str("no admissible torsion sequence (no consistent half-integer surgery)\n");
    }
    for seq in &solution.sequences {
        let terms: Vec<String> = seq.iter().map(|x| x.to_string()).collect();
        text.push_str(&format!("[{}]\n", terms.join(", ")));
    }
    text.push_str(&format!("unique: {}\n", solution.unique));
    emit(&args.output, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn run_obstruct(args: ObstructArgs) -> Result<ExitCode> {
    let (records, lifts, _) = args.table.load()?;
    let Some(record) = records.iter().find(|r| r.name == args.knot) else {
        eprintln!("error: knot {:?} is not in the table", args.knot);
        return Ok(ExitCode::from(2));
    };
    let Some(lift) = lifts.iter().find(|l| l.knot == args.knot) else {
        bail!("no lift entry for {:?}; the d-invariant pipeline needs one", args.knot);
    };
    let report = floer_pipeline(record, lift, args.threshold)?;
    let mut obj = Map::new();
    obj.insert("knot".into(), Value::String(report.knot.clone()));
    obj.insert("determinant".into(), Value::from(report.determinant));
    obj.insert("omega".into(), Value::from(report.omega));
    obj.insert("surgery_q".into(), Value::from(report.surgery_q));
    obj.insert("obstructed".into(), Value::from(report.obstructed));
    obj.insert("candidate_count".into(), Value::from(report.candidate_count));
    obj.insert("unique_candidate".into(), Value::from(report.unique_candidate));
    obj.insert(
        "note".into(),
        report.inversion_note.as_ref().map_or(Value::Null, |n| Value::String(n.clone())),
    );
    obj.insert(
        "sigma_d".into(),
        Value::Array(format_d_vector(&report.sigma_d).into_iter().map(Value::String).collect()),
    );
    obj.insert(
        "v_sequence".into(),
        report.v_sequence.as_ref().map_or(Value::Null, |v| {
            Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
        }),
    );
    match &report.finding {
        FloerFinding::Vacuous => {
            obj.insert("status".into(), Value::String("vacuous".into()));
            obj.insert("candidates".into(), Value::Array(Vec::new()));
        }
        FloerFinding::Verdict(v) => {
            obj.insert("status".into(), Value::String("verdict".into()));
            obj.insert("threshold".into(), Value::from(v.threshold));
            let cands: Vec<Value> = v
                .candidates
                .iter()
                .map(|c| {
                    json!({
                        "polynomial": c.candidate.to_string(),
                        "max_distance": c.max_distance,
                        "fails": c.fails,
                        "roots": c.roots.iter().map(|r| json!({
                            "ell": r.ell,
                            "re": r.value.re,
                            "im": r.value.im,
                            "distance": r.distance,
                        })).collect::<Vec<_>>(),
                    })
                })
                .collect();
            obj.insert("candidates".into(), Value::Array(cands));
        }
    }
    emit(&args.output, &json_to_text(&Value::Object(obj), args.pretty))?;
    Ok(ExitCode::SUCCESS)
}

fn run_construct(args: ConstructArgs) -> Result<ExitCode> {
    if args.interleaved == args.non_interleaved {
        bail!("choose exactly one of --interleaved or --non-interleaved");
    }
    let params = TangleParams::new(args.linking, args.h1, args.h2, args.interleaved)?;
    let matrix = build_seifert_matrix(&params);
    let raw = alexander_from_seifert(&matrix);
    let alexander = normalize_alexander(&raw)?;
    let conway = conway_closed_form(&params);
    let (det, form) = construction_determinant(&params)?;
    let value = json!({
        "params": {
            "linking": params.linking,
            "h1": params.h1,
            "h2": params.h2,
            "interleaved": params.interleaved,
        },
        "seifert_matrix": matrix.entries,
        "alexander": alexander.to_string(),
        "alexander_half": alexander
            .symmetrize()
            .expect("normalized form is symmetric")
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>(),
        "conway": conway.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "determinant": det,
        "det_form": det_form_json(&form),
    });
    emit(&args.output, &json_to_text(&value, args.pretty))?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Classify(args) => run_classify(args),
        Command::Drilldown(args) => run_drilldown(args),
        Command::Dinv(cmd) => run_dinv(cmd),
        Command::Vsolve(args) => run_vsolve(args),
        Command::Obstruct(args) => run_obstruct(args),
        Command::Construct(args) => run_construct(args),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}
