//! Command-line front end. [`run`] is the whole program minus process I/O.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::classify::{
    clean_witness, clear_witness, exchange_test, idempotent_test, two_clean_test, two_good_test,
    unit_regular_witness, unit_witness, DEFAULT_BOUND,
};
use crate::decomp::clear_decompose_full;
use crate::descriptor::{parse_element, parse_ring};
use crate::error::Error;
use crate::finite::DEFAULT_BUDGET;
use crate::json::elem_to_json;
use crate::ring::{Elem, Ring};
use crate::smith::{fullness, smith_normal_form};
use crate::survey::{
    check_proposition, classify_ring, default_catalog, non_clean_oracle_12_5, reports_text,
    survey_zn, theorem_1_3_forward_check, PropositionId, StableRangeObservation,
};
use crate::verdict::{verdict_json, Verdict, Witness};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(
    name = "clearlab",
    version,
    about = "Clear, clean and unit-regular elements of concrete rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide an element property, or report on a whole finite ring.
    Classify(ClassifyArgs),
    /// Clear decomposition of a full 2x2 matrix.
    Decompose(MatrixArgs),
    /// Diagonal reduction and fullness of a 2x2 matrix.
    Snf(MatrixArgs),
    /// Ring reports for Z/n, or seeded decomposition samples over Z.
    Survey(SurveyArgs),
    /// Exhaustive check of one statement on a finite ring or the catalog.
    Check(CheckArgs),
    /// Exact search for a clean split of [[12,5],[0,0]] over Z.
    Oracle(OracleArgs),
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    #[arg(long)]
    ring: String,
    #[arg(long, conflicts_with = "matrix", allow_hyphen_values = true)]
    element: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    matrix: Option<String>,
    #[arg(long, value_enum)]
    property: Option<Property>,
    #[arg(long, default_value_t = DEFAULT_BOUND)]
    bound: u64,
    #[command(flatten)]
    common: Common,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Property {
    Unit,
    Idempotent,
    UnitRegular,
    Clean,
    Clear,
    #[value(name = "2-good")]
    TwoGood,
    #[value(name = "2-clean")]
    TwoClean,
    Exchange,
}

impl Property {
    fn name(self) -> &'static str {
        match self {
            Property::Unit => "unit",
            Property::Idempotent => "idempotent",
            Property::UnitRegular => "unit-regular",
            Property::Clean => "clean",
            Property::Clear => "clear",
            Property::TwoGood => "2-good",
            Property::TwoClean => "2-clean",
            Property::Exchange => "exchange",
        }
    }
}

#[derive(Args, Debug)]
struct MatrixArgs {
    #[arg(long)]
    ring: String,
    #[arg(long, allow_hyphen_values = true)]
    matrix: String,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct SurveyArgs {
    #[arg(long, default_value_t = 60)]
    n_max: u64,
    /// Run the seeded decomposition experiment instead of the Z/n table.
    #[arg(long, requires = "seed")]
    samples: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
    /// Entry bound for sampled matrices.
    #[arg(long, default_value_t = 50)]
    bound: u64,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct CheckArgs {
    /// Proposition identifier, e.g. P1-clean-implies-clear or P1.
    #[arg(long)]
    property: String,
    /// Defaults to every ring of the bundled catalog.
    #[arg(long)]
    ring: Option<String>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[arg(long, default_value_t = 100)]
    bound: u64,
    #[command(flatten)]
    common: Common,
}

struct Output {
    code: i32,
    value: Value,
    text: Option<String>,
}

fn usage(msg: String) -> Outcome {
    Outcome {
        code: EXIT_USAGE,
        stdout: String::new(),
        stderr: format!("error: {msg}\n"),
    }
}

/// Positions in parse errors are echoed under the offending input.
fn parse_failure(flag: &str, input: &str, e: Error) -> String {
    match &e {
        Error::Parse { position, .. } => format!(
            "--{flag}: {e}\n  {input}\n  {}^",
            " ".repeat(position.saturating_sub(1))
        ),
        _ => format!("--{flag}: {e}"),
    }
}

fn ring_arg(src: &str) -> Result<Ring, String> {
    parse_ring(src).map_err(|e| parse_failure("ring", src, e))
}

fn element_arg(ring: &Ring, flag: &str, src: &str) -> Result<Elem, String> {
    parse_element(ring, src).map_err(|e| parse_failure(flag, src, e))
}

/// Exit status and serialized output for an argument vector (including the
/// program name).
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_YES,
                    stdout: rendered,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: rendered,
                },
            };
        }
    };
    let (format, result) = match cli.command {
        Command::Classify(a) => (a.common.format, classify(a)),
        Command::Decompose(a) => (a.common.format, decompose(a)),
        Command::Snf(a) => (a.common.format, snf(a)),
        Command::Survey(a) => (a.common.format, survey(a)),
        Command::Check(a) => (a.common.format, check(a)),
        Command::Oracle(a) => (a.common.format, oracle(a)),
    };
    match result {
        Ok(out) => {
            let stdout = match format {
                Format::Json => format!(
                    "{}\n",
                    serde_json::to_string_pretty(&out.value).expect("json")
                ),
                Format::Text => out.text.unwrap_or_else(|| json_text(&out.value, 0)),
            };
            Outcome {
                code: out.code,
                stdout,
                stderr: String::new(),
            }
        }
        Err(msg) => usage(msg),
    }
}

fn verdict_code<W>(v: &Verdict<W>) -> i32 {
    match v {
        Verdict::Yes(_) => EXIT_YES,
        Verdict::No(_) => EXIT_NO,
        Verdict::Unknown { .. } => EXIT_UNKNOWN,
    }
}

fn verdict_output<W: Witness>(property: &str, ring: &Ring, v: Verdict<W>) -> Output {
    Output {
        code: verdict_code(&v),
        value: verdict_json(property, ring, &v),
        text: None,
    }
}

fn classify(a: ClassifyArgs) -> Result<Output, String> {
    let ring = ring_arg(&a.ring)?;
    let payload = match (&a.element, &a.matrix) {
        (Some(s), _) => Some(element_arg(&ring, "element", s)?),
        (None, Some(s)) => Some(element_arg(&ring, "matrix", s)?),
        (None, None) => None,
    };
    let Some(x) = payload else {
        if a.property.is_some() {
            return Err("--property needs --element or --matrix".into());
        }
        let report = classify_ring(&ring, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        let text = reports_text(std::slice::from_ref(&report));
        return Ok(Output {
            code: EXIT_YES,
            value: report.to_json(),
            text: Some(text),
        });
    };
    let property = a
        .property
        .ok_or("--property is required with --element or --matrix")?;
    let name = property.name();
    let err = |e: Error| e.to_string();
    Ok(match property {
        Property::Unit => verdict_output(name, &ring, unit_witness(&ring, &x).map_err(err)?),
        Property::UnitRegular => {
            verdict_output(name, &ring, unit_regular_witness(&ring, &x).map_err(err)?)
        }
        Property::Clean => {
            verdict_output(name, &ring, clean_witness(&ring, &x, a.bound).map_err(err)?)
        }
        Property::Clear => {
            verdict_output(name, &ring, clear_witness(&ring, &x, a.bound).map_err(err)?)
        }
        Property::TwoGood => {
            verdict_output(name, &ring, two_good_test(&ring, &x, a.bound).map_err(err)?)
        }
        Property::TwoClean => verdict_output(
            name,
            &ring,
            two_clean_test(&ring, &x, a.bound).map_err(err)?,
        ),
        Property::Idempotent => {
            let yes = idempotent_test(&ring, &x).map_err(err)?;
            Output {
                code: if yes { EXIT_YES } else { EXIT_NO },
                value: json!({
                    "property": name,
                    "verdict": if yes { "yes" } else { "no" },
                    "element": elem_to_json(&ring, &x),
                }),
                text: None,
            }
        }
        Property::Exchange => {
            let v = match exchange_test(&ring, &x).map_err(err)? {
                Some(w) => Verdict::Yes(w),
                None => Verdict::No(crate::verdict::Refutation::ExhaustiveEnumeration),
            };
            verdict_output(name, &ring, v)
        }
    })
}

fn decompose(a: MatrixArgs) -> Result<Output, String> {
    let ring = ring_arg(&a.ring)?;
    let m = element_arg(&ring, "matrix", &a.matrix)?;
    match clear_decompose_full(&ring, &m) {
        Ok(d) => Ok(Output {
            code: EXIT_YES,
            value: d.to_json(&ring),
            text: None,
        }),
        Err(Error::NotFull { gcd }) => Ok(Output {
            code: EXIT_NO,
            value: json!({"A": elem_to_json(&ring, &m), "full": false, "gcd_of_entries": gcd}),
            text: None,
        }),
        Err(e) => Err(e.to_string()),
    }
}

fn snf(a: MatrixArgs) -> Result<Output, String> {
    let ring = ring_arg(&a.ring)?;
    let m = element_arg(&ring, "matrix", &a.matrix)?;
    let s = smith_normal_form(&ring, &m).map_err(|e| e.to_string())?;
    let f = fullness(&ring, &m).map_err(|e| e.to_string())?;
    let base = ring.matrix_base().expect("matrix ring");
    Ok(Output {
        code: EXIT_YES,
        value: json!({
            "A": elem_to_json(&ring, &s.original),
            "P": elem_to_json(&ring, &s.p),
            "D": elem_to_json(&ring, &s.d),
            "Q": elem_to_json(&ring, &s.q),
            "d1": elem_to_json(base, &s.d1),
            "d2": elem_to_json(base, &s.d2),
            "multiplier": elem_to_json(base, &s.multiplier),
            "full": f.is_full,
            "gcd_of_entries": elem_to_json(base, &f.gcd_of_entries),
            "nonsingular": f.is_nonsingular,
        }),
        text: None,
    })
}

fn survey(a: SurveyArgs) -> Result<Output, String> {
    if let Some(samples) = a.samples {
        let seed = a.seed.ok_or("--samples needs --seed")?;
        if samples == 0 {
            return Err("--samples must be at least 1".into());
        }
        let bound = i64::try_from(a.bound.max(1)).map_err(|_| "--bound too large")?;
        let report = theorem_1_3_forward_check(samples, seed, bound);
        return Ok(Output {
            code: if report.all_passed() {
                EXIT_YES
            } else {
                EXIT_NO
            },
            value: report.to_json(),
            text: None,
        });
    }
    let rows = survey_zn(a.n_max).map_err(|e| e.to_string())?;
    let observation = StableRangeObservation::from_reports(&rows);
    let mut text = reports_text(&rows);
    text.push_str(&format!(
        "\nobservation: {}/{} commutative clear rings have unit-regular stable range 1\n",
        observation.with_ursr1, observation.commutative_clear
    ));
    Ok(Output {
        code: EXIT_YES,
        value: json!({
            "rows": rows.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
            "observation": observation.to_json(),
        }),
        text: Some(text),
    })
}

fn check(a: CheckArgs) -> Result<Output, String> {
    let id: PropositionId = a.property.parse().map_err(|e: Error| e.to_string())?;
    let rings = match &a.ring {
        Some(r) => vec![ring_arg(r)?],
        None => default_catalog(),
    };
    let checks = rings
        .iter()
        .map(|r| check_proposition(id, r))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    let all = checks.iter().all(|c| c.is_verified());
    let value = match checks.as_slice() {
        [one] => one.to_json(),
        many => json!(many.iter().map(|c| c.to_json()).collect::<Vec<_>>()),
    };
    Ok(Output {
        code: if all { EXIT_YES } else { EXIT_NO },
        value,
        text: None,
    })
}

fn oracle(a: OracleArgs) -> Result<Output, String> {
    let bound = i64::try_from(a.bound.max(1)).map_err(|_| "--bound too large")?;
    let report = non_clean_oracle_12_5(bound, bound);
    Ok(Output {
        code: if report.all_refuted() {
            EXIT_YES
        } else {
            EXIT_NO
        },
        value: report.to_json(),
        text: None,
    })
}

/// Indented `key: value` rendering of a JSON value.
fn json_text(v: &Value, indent: usize) -> String {
    let pad = "  ".repeat(indent);
    let scalar = |v: &Value| match v {
        Value::String(s) => Some(s.clone()),
        Value::Bool(b) => Some(if *b { "yes".into() } else { "no".into() }),
        Value::Number(n) => Some(n.to_string()),
        Value::Null => Some("-".into()),
        Value::Array(xs) if xs.iter().all(|x| !x.is_object()) => Some(compact(v)),
        _ => None,
    };
    let mut out = String::new();
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        out.push_str(&json_text(x, indent + 1));
                    }
                }
            }
        }
        Value::Array(xs) => {
            for x in xs {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        out.push_str(&json_text(x, indent + 1));
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
    out
}

/// Matrices and pairs in bracket syntax without quotes.
fn compact(v: &Value) -> String {
    match v {
        Value::Array(xs) => format!("[{}]", xs.iter().map(compact).collect::<Vec<_>>().join(",")),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
