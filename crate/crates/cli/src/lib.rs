//! quinv: reports over quiver models of orthogonal and symplectic bundle
//! moduli. Every subcommand prints one JSON document on standard output.
//!
//! Exit codes separate plumbing from mathematics: 0 is a clean pass, 1 is a
//! validation or input error (bad flags, malformed files), 2 means a checked
//! mathematical property actually failed on the given data. The acceptance
//! suite leans on that distinction.

use clap::{Args, Parser, Subcommand};
use quiver_invariants::asym::AsymModel;
use quiver_invariants::decomposition::DecompositionData;
use quiver_invariants::elliptic::{
    canonical_form, equivalent, expected_points, forgetful_fiber_elliptic, moduli_description,
    EllipticBundleSpec, EllipticPoint,
};
use quiver_invariants::fixtures;
use quiver_invariants::invariants::{
    check_invariance, generate_invariants, restriction_surjectivity_check, InvarianceOptions,
    SurjectivityOptions,
};
use quiver_invariants::local_models::{local_model_report, ClassicalGroup};
use quiver_invariants::scalar::Rat;
use serde::Serialize;
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_REFUTED: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "quinv", version, about = "trace invariants and local models for self-dual bundle moduli", disable_help_subcommand = true)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate or check trace invariants on a doubled quiver
    Invariants {
        #[command(subcommand)]
        action: InvariantsAction,
    },
    /// Check that restricted ambient invariants span the subspace invariants
    Surjectivity(SurjectivityArgs),
    /// Local structure reports at a polystable point
    LocalModel {
        #[command(subcommand)]
        action: LocalModelAction,
    },
    /// Genus-one classification
    Elliptic {
        #[command(subcommand)]
        action: EllipticAction,
    },
    /// Bundled example decompositions
    Fixtures {
        #[command(subcommand)]
        action: FixturesAction,
    },
}

#[derive(Args, Debug, Clone)]
pub struct SourceArgs {
    /// name of a bundled fixture
    #[arg(long, conflicts_with = "input")]
    pub fixture: Option<String>,
    /// path to a decomposition JSON file
    #[arg(long)]
    pub input: Option<String>,
}

impl SourceArgs {
    fn load(&self) -> Result<(String, DecompositionData), Value> {
        match (&self.fixture, &self.input) {
            (Some(name), None) => {
                let f = fixtures::by_name(name).map_err(error_value)?;
                Ok((f.name.to_string(), f.data))
            }
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| json!({"error": format!("cannot read {path}: {e}")}))?;
                let value: Value = serde_json::from_str(&text)
                    .map_err(|e| json!({"error": format!("{path}: {e}")}))?;
                let data = DecompositionData::from_json(&value).map_err(error_value)?;
                Ok((path.clone(), data))
            }
            _ => Err(json!({"error": "exactly one of --fixture or --input is required"})),
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum InvariantsAction {
    /// List the deduplicated trace invariants up to a length bound
    Generate(GenerateArgs),
    /// Verify invariance under seeded group elements on seeded representations
    Check(CheckArgs),
}

#[derive(Args, Debug)]
pub struct GenerateArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    /// maximum cycle length
    #[arg(long, default_value_t = 4)]
    pub max_len: usize,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[arg(long, default_value_t = 4)]
    pub max_len: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// sampled representations
    #[arg(long, default_value_t = 10)]
    pub reps: usize,
    /// sampled group elements per representation
    #[arg(long, default_value_t = 50)]
    pub elements: usize,
    /// arithmetic backend
    #[arg(long, default_value = "exact", value_parser = ["exact", "float"])]
    pub backend: String,
    /// comparison tolerance for the float backend; the exact backend ignores it
    #[arg(long, default_value_t = 1e-9)]
    pub tolerance: f64,
}

#[derive(Args, Debug)]
pub struct SurjectivityArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    /// degree bound for both product families
    #[arg(long, default_value_t = 4)]
    pub degree: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// sample point floor; the check raises this to 3x the larger product count
    #[arg(long, default_value_t = 0)]
    pub samples: usize,
}

#[derive(Subcommand, Debug)]
pub enum LocalModelAction {
    /// Dimensions, automorphisms, orientation fibers and smoothness verdict
    Report(LocalModelArgs),
}

#[derive(Args, Debug)]
pub struct LocalModelArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    /// ambient structure group
    #[arg(long, default_value = "SO")]
    pub group: String,
    /// report the determinant component flag even for unoriented groups
    #[arg(long, default_value_t = false)]
    pub oriented: bool,
}

#[derive(Subcommand, Debug)]
pub enum EllipticAction {
    /// Canonical form, moduli shape and forgetful fiber of a tuple spec
    Classify(EllipticArgs),
}

#[derive(Args, Debug)]
pub struct EllipticArgs {
    /// path to an EllipticBundleSpec JSON file
    #[arg(long, conflicts_with_all = ["group", "rank", "points"])]
    pub input: Option<String>,
    #[arg(long, requires = "rank")]
    pub group: Option<String>,
    #[arg(long)]
    pub rank: Option<u32>,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    pub w2: i8,
    /// comma-separated points, each [[xnum,xden],[ynum,yden]]
    #[arg(long)]
    pub points: Option<String>,
    /// optional second spec to compare against
    #[arg(long)]
    pub other: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum FixturesAction {
    /// Names, descriptions and data of the bundled corpus
    List,
}

fn error_value(e: quiver_invariants::Error) -> Value {
    json!({"error": e.to_string()})
}

pub struct RunOutcome {
    pub exit: i32,
    pub stdout: String,
}

fn render(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("report serializes");
    text.push('\n');
    text
}

fn outcome(exit: i32, value: Value) -> RunOutcome {
    RunOutcome { exit, stdout: render(&value) }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report serializes")
}

pub fn run(config: RunConfig) -> RunOutcome {
    match dispatch(config) {
        Ok(out) => out,
        Err(e) => outcome(EXIT_INVALID, e),
    }
}

/// Parse argv and run. Flag errors come back as exit 1 with a JSON error
/// object; help and version requests print as usual with exit 0.
pub fn run_from_args<I, T>(args: I) -> RunOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(config) => run(config),
        Err(e) => {
            use clap::error::ErrorKind;
            match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    RunOutcome { exit: EXIT_OK, stdout: e.to_string() }
                }
                _ => outcome(EXIT_INVALID, json!({"error": e.to_string()})),
            }
        }
    }
}

fn dispatch(config: RunConfig) -> Result<RunOutcome, Value> {
    match config.command {
        Command::Invariants { action } => match action {
            InvariantsAction::Generate(args) => cmd_generate(args),
            InvariantsAction::Check(args) => cmd_check(args),
        },
        Command::Surjectivity(args) => cmd_surjectivity(args),
        Command::LocalModel { action } => match action {
            LocalModelAction::Report(args) => cmd_local_model(args),
        },
        Command::Elliptic { action } => match action {
            EllipticAction::Classify(args) => cmd_elliptic(args),
        },
        Command::Fixtures { action } => match action {
            FixturesAction::List => cmd_fixtures(),
        },
    }
}

fn cmd_generate(args: GenerateArgs) -> Result<RunOutcome, Value> {
    let (source, data) = args.source.load()?;
    let model = AsymModel::new(&data).map_err(error_value)?;
    let invs = generate_invariants(model.doubled(), &model.layout().alpha, Some(args.max_len))
        .map_err(error_value)?;
    let dq = model.doubled();
    Ok(outcome(
        EXIT_OK,
        json!({
            "source": source,
            "max_len": args.max_len,
            "count": invs.len(),
            "invariants": invs.iter().map(|t| t.to_json(dq)).collect::<Vec<_>>(),
        }),
    ))
}

fn cmd_check(args: CheckArgs) -> Result<RunOutcome, Value> {
    let (source, data) = args.source.load()?;
    let model = AsymModel::new(&data).map_err(error_value)?;
    let layout = model.layout();
    let invs = generate_invariants(model.doubled(), &layout.alpha, Some(args.max_len))
        .map_err(error_value)?;
    let opts = InvarianceOptions {
        n_reps: args.reps,
        n_elements: args.elements,
        seed: args.seed,
        tolerance: args.tolerance,
        ..Default::default()
    };
    let report = match args.backend.as_str() {
        "exact" => check_invariance::<Rat>(
            &layout.quiver,
            model.doubled(),
            &layout.alpha,
            &layout.group,
            &invs,
            &InvarianceOptions { tolerance: 0.0, ..opts },
        ),
        _ => check_invariance::<f64>(
            &layout.quiver,
            model.doubled(),
            &layout.alpha,
            &layout.group,
            &invs,
            &opts,
        ),
    }
    .map_err(error_value)?;
    let exit = if report.failure_count == 0 { EXIT_OK } else { EXIT_REFUTED };
    let mut value = to_value(&report);
    value["source"] = json!(source);
    value["backend"] = json!(args.backend);
    value["invariants"] = json!(invs.len());
    Ok(outcome(exit, value))
}

fn cmd_surjectivity(args: SurjectivityArgs) -> Result<RunOutcome, Value> {
    let (source, data) = args.source.load()?;
    let opts = SurjectivityOptions {
        degree_bound: args.degree,
        n_points: args.samples,
        seed: args.seed,
        ..Default::default()
    };
    let report = restriction_surjectivity_check(&data, &opts).map_err(error_value)?;
    let exit = if report.contained { EXIT_OK } else { EXIT_REFUTED };
    let mut value = to_value(&report);
    value["source"] = json!(source);
    Ok(outcome(exit, value))
}

fn cmd_local_model(args: LocalModelArgs) -> Result<RunOutcome, Value> {
    let (source, data) = args.source.load()?;
    let group: ClassicalGroup = args.group.parse().map_err(error_value)?;
    let report = local_model_report(&data, group).map_err(error_value)?;
    let mut value = to_value(&report);
    value["source"] = json!(source);
    if args.oriented && group != ClassicalGroup::SO {
        let aut = quiver_invariants::local_models::aut_group(&data, true).map_err(error_value)?;
        value["aut_group"] = to_value(&aut);
    }
    Ok(outcome(EXIT_OK, value))
}

fn parse_points(text: &str) -> Result<Vec<EllipticPoint>, Value> {
    serde_json::from_str(&format!("[{text}]"))
        .map_err(|e| json!({"error": format!("cannot parse points: {e}")}))
}

fn load_elliptic_spec(path: &str) -> Result<EllipticBundleSpec, Value> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| json!({"error": format!("cannot read {path}: {e}")}))?;
    serde_json::from_str(&text).map_err(|e| json!({"error": format!("{path}: {e}")}))
}

fn cmd_elliptic(args: EllipticArgs) -> Result<RunOutcome, Value> {
    let spec = match (&args.input, &args.group, &args.rank) {
        (Some(path), _, _) => load_elliptic_spec(path)?,
        (None, Some(group), Some(rank)) => {
            let group: ClassicalGroup =
                group.parse().map_err(error_value)?;
            let points = match &args.points {
                Some(text) => parse_points(text)?,
                None => Vec::new(),
            };
            EllipticBundleSpec { group, rank: *rank, w2: args.w2, points }
        }
        _ => {
            return Err(json!({
                "error": "either --input FILE or --group and --rank are required"
            }))
        }
    };
    let moduli = moduli_description(spec.group, spec.rank, spec.w2).map_err(error_value)?;
    let canonical = canonical_form(&spec).map_err(error_value)?;
    let fiber = forgetful_fiber_elliptic(&spec).map_err(error_value)?;
    let mut value = json!({
        "group": spec.group,
        "rank": spec.rank,
        "w2": spec.w2,
        "expected_points": expected_points(spec.group, spec.rank, spec.w2).map_err(error_value)?,
        "moduli_space": to_value(&moduli),
        "canonical_points": to_value(&canonical),
        "fiber_count": fiber,
    });
    if let Some(path) = &args.other {
        let other = load_elliptic_spec(path)?;
        value["equivalent"] = json!(equivalent(&spec, &other).map_err(error_value)?);
    }
    Ok(outcome(EXIT_OK, value))
}

fn cmd_fixtures() -> Result<RunOutcome, Value> {
    let list: Vec<Value> = fixtures::all()
        .iter()
        .map(|f| {
            json!({
                "name": f.name,
                "description": f.description,
                "genus": f.data.genus,
                "total_rank": f.data.total_rank(),
                "data": f.data.to_json(),
            })
        })
        .collect();
    Ok(outcome(EXIT_OK, json!({"count": list.len(), "fixtures": list})))
}
