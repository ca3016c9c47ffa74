//! `escalier`: JSON-in, JSON-out front end to `escalier-core`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use escalier_core::json::{self as docs, CartesianDescriptionDoc, ConditionsDoc, PolynomialDoc, PointSetDoc};
use escalier_core::{
    build_cartesian, enumerate_quotient_bases, escalier, recognize, slices, unique_quotient_basis, xi_family,
    Error, Exponent, FunctionalSet, MonomialOrder, OracleLimit,
};

const ORACLE_LIMIT_VAR: &str = "QB_ORACLE_LIMIT";

#[derive(Parser)]
#[command(name = "escalier", version, about = "Gröbner éscaliers and unique quotient bases of interpolation ideals")]
struct Cli {
    /// Write the result here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    /// Indent the JSON output.
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Éscalier, corners and reduced Gröbner basis for one monomial order.
    Escalier {
        #[arg(long, short)]
        input: PathBuf,
        /// lex:σ1,…,σd | grlex:σ1,…,σd | grevlex | elim:i | matrix:[[…],…]
        #[arg(long, default_value = "grevlex")]
        order: String,
    },
    /// Reduced Gröbner basis only.
    Gbasis {
        #[arg(long, short)]
        input: PathBuf,
        #[arg(long, default_value = "grevlex")]
        order: String,
    },
    /// Decide whether the quotient basis is unique.
    Unique {
        #[arg(long, short)]
        input: PathBuf,
        /// Exit 0 when unique and 3 when not.
        #[arg(long)]
        status_exit: bool,
    },
    /// Recognize a Cartesian point set.
    Cartesian {
        #[arg(long, short)]
        input: PathBuf,
    },
    /// Hyperplane slices perpendicular to one axis.
    Slices {
        #[arg(long, short)]
        input: PathBuf,
        /// 1-based axis.
        #[arg(long)]
        axis: usize,
    },
    /// Build the point set of a Cartesian description.
    MakeCartesian {
        #[arg(long, short)]
        input: PathBuf,
    },
    /// Brute-force list of all quotient bases (small instances only).
    EnumerateBases {
        #[arg(long, short)]
        input: PathBuf,
        #[arg(long)]
        max_results: Option<usize>,
    },
    /// Corners of an order ideal.
    Corners {
        #[arg(long, short)]
        input: PathBuf,
    },
    /// Normal form of a polynomial modulo the ideal.
    NormalForm {
        #[arg(long, short)]
        input: PathBuf,
        #[arg(long, default_value = "grevlex")]
        order: String,
        /// Polynomial file: a list of {"exp": [...], "coef": "p/q"} terms.
        #[arg(long)]
        poly: PathBuf,
    },
    /// The four-point non-Cartesian family in dimension d >= 3.
    XiFamily {
        #[arg(long, short)]
        dimension: usize,
    },
}

enum Failure {
    /// Input could not be read or parsed (exit 2).
    Input(String),
    /// Well-formed input rejected by the algebra (exit 1).
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(msg) => Failure::Input(msg),
            other => Failure::Domain(other),
        }
    }
}

struct Outcome {
    value: Value,
    status: u8,
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_conditions(path: &Path) -> Result<FunctionalSet, Failure> {
    let doc: ConditionsDoc = read_json(path)?;
    Ok(docs::conditions_from_doc(&doc)?)
}

fn read_points(path: &Path) -> Result<escalier_core::PointSet, Failure> {
    let doc: PointSetDoc = read_json(path)?;
    Ok(docs::point_set_from_doc(&doc)?)
}

/// Accepts a bare exponent list or any document carrying one under
/// `escalier`, `basis` or `lower_set`.
fn read_order_ideal(path: &Path) -> Result<escalier_core::OrderIdeal, Failure> {
    let value: Value = read_json(path)?;
    let list = match &value {
        Value::Array(_) => &value,
        Value::Object(map) => ["escalier", "basis", "lower_set"]
            .iter()
            .find_map(|k| map.get(*k))
            .ok_or_else(|| Failure::Input("expected an exponent list".into()))?,
        _ => return Err(Failure::Input("expected an exponent list".into())),
    };
    let exps: Vec<Exponent> =
        serde_json::from_value(list.clone()).map_err(|e| Failure::Input(format!("bad exponent list: {e}")))?;
    if exps.is_empty() {
        return Err(Failure::Input("empty exponent list".into()));
    }
    Ok(docs::order_ideal_from_list(&exps)?)
}

/// Accepts a description or the output of `cartesian`.
fn read_description(path: &Path) -> Result<escalier_core::CartesianDescription, Failure> {
    let mut value: Value = read_json(path)?;
    if let Some(inner) = value.get_mut("description") {
        value = inner.take();
    }
    let doc: CartesianDescriptionDoc =
        serde_json::from_value(value).map_err(|e| Failure::Input(format!("bad description: {e}")))?;
    Ok(docs::description_from_doc(&doc)?)
}

fn oracle_limit() -> Result<OracleLimit, Failure> {
    match std::env::var(ORACLE_LIMIT_VAR) {
        Ok(s) => Ok(s.parse()?),
        Err(_) => Ok(OracleLimit::default()),
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("documents serialize")
}

fn run(command: &Command) -> Result<Outcome, Failure> {
    let ok = |value| Ok(Outcome { value, status: 0 });
    match command {
        Command::Escalier { input, order } => {
            let theta = read_conditions(input)?;
            let order = MonomialOrder::parse(order, theta.dimension())?;
            ok(to_value(&docs::escalier_doc(&escalier(&theta, &order)?)))
        }
        Command::Gbasis { input, order } => {
            let theta = read_conditions(input)?;
            let order = MonomialOrder::parse(order, theta.dimension())?;
            let r = escalier(&theta, &order)?;
            let gb: Vec<PolynomialDoc> = r.groebner.iter().map(docs::polynomial_doc).collect();
            ok(json!({ "order": docs::order_doc(&order), "groebner": gb }))
        }
        Command::Unique { input, status_exit } => {
            let theta = read_conditions(input)?;
            let verdict = unique_quotient_basis(&theta)?;
            let status = if *status_exit && !verdict.is_unique() { 3 } else { 0 };
            Ok(Outcome { value: to_value(&docs::verdict_doc(&verdict)), status })
        }
        Command::Cartesian { input } => ok(to_value(&docs::recognition_doc(&recognize(&read_points(input)?)))),
        Command::Slices { input, axis } => {
            ok(to_value(&docs::slice_family_doc(&slices(&read_points(input)?, *axis)?)))
        }
        Command::MakeCartesian { input } => {
            ok(to_value(&docs::point_set_doc(&build_cartesian(&read_description(input)?))))
        }
        Command::EnumerateBases { input, max_results } => {
            let theta = read_conditions(input)?;
            let bases = enumerate_quotient_bases(&theta, max_results.unwrap_or(usize::MAX), oracle_limit()?)?;
            let lists: Vec<Vec<Exponent>> = bases.iter().map(|b| b.to_vec()).collect();
            ok(json!({ "count": lists.len(), "bases": lists }))
        }
        Command::Corners { input } => {
            let o = read_order_ideal(input)?;
            ok(json!({ "order_ideal": o.to_vec(), "corners": o.corner() }))
        }
        Command::NormalForm { input, order, poly } => {
            let theta = read_conditions(input)?;
            let order = MonomialOrder::parse(order, theta.dimension())?;
            let terms: PolynomialDoc = read_json(poly)?;
            let f = docs::polynomial_from_doc(&terms, theta.dimension())?;
            let r = escalier(&theta, &order)?;
            ok(to_value(&docs::polynomial_doc(&r.normal_form(&f)?)))
        }
        Command::XiFamily { dimension } => ok(to_value(&docs::point_set_doc(&xi_family(*dimension)?))),
    }
}

fn render(value: &Value, pretty: bool) -> String {
    let mut s = if pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    }
    .expect("json values serialize");
    s.push('\n');
    s
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (value, status) = match run(&cli.command) {
        Ok(outcome) => (outcome.value, outcome.status),
        Err(Failure::Domain(e)) => (json!({ "error": e.code(), "detail": e.to_string() }), 1),
        Err(Failure::Input(msg)) => (json!({ "error": "input_error", "detail": msg }), 2),
    };
    let text = render(&value, cli.pretty);
    match (&cli.output, status) {
        (Some(path), 0 | 3) => {
            if let Err(e) = fs::write(path, &text) {
                let err = json!({ "error": "input_error", "detail": format!("{}: {e}", path.display()) });
                print!("{}", render(&err, cli.pretty));
                return ExitCode::from(2);
            }
        }
        _ => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(text.as_bytes());
        }
    }
    ExitCode::from(status)
}
