//! Command-line front end: loads JSON descriptions of groups, spaces
//! and bundles, dispatches the library computations, and emits a
//! single JSON document (or a plain table with `--format table`).
//!
//! Exit codes: 0 on success, 1 on a domain error (invalid model,
//! inconsistent data, unsatisfiable parameters), 2 on malformed input
//! (unreadable files, bad JSON, unparsable flags).

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use equichern::json::{FunctionJson, GSpaceJson, GroupJson, SeriesJson, SpaceJson};
use equichern::{
    bgl1_truncated, canonical_function, degeneracy_class, euler_of_singular_locus, format_rat,
    orbifold_euler, porteous_tp, power_orbifold_euler, rat, segre_sm_smooth, symprod_genfun,
    AtomSpace, BundleData, FiniteGroup, GSpace, PorteousSpec, SeriesRing,
};

#[derive(Parser)]
#[command(
    name = "equichern",
    about = "Euler calculus and characteristic classes for finite group actions",
    version
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Check all model invariants of a space file.
    Validate {
        #[arg(long)]
        space: String,
    },
    /// Euler characteristic of a space.
    Euler {
        #[arg(long)]
        space: String,
    },
    /// Euler characteristic of the simultaneous fixed set of a tuple.
    FixedChi {
        #[arg(long)]
        space: String,
        /// Comma-separated element ids; empty for the whole space.
        #[arg(long, default_value = "")]
        tuple: String,
    },
    /// Orbit space of a model.
    Quotient {
        #[arg(long)]
        space: String,
    },
    /// k-th canonical constructible function.
    Canonical {
        #[arg(long)]
        space: String,
        #[arg(long)]
        k: usize,
    },
    /// k-th orbifold Euler characteristic of a model.
    OrbifoldEuler {
        #[arg(long)]
        space: String,
        #[arg(long)]
        k: usize,
    },
    /// k-th orbifold Euler characteristic of X^n under a permutation group.
    Symprod {
        #[arg(long)]
        chi: i64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Group file acting on n points; the full symmetric group by default.
        #[arg(long)]
        group: Option<String>,
    },
    /// Generating-function coefficients of symmetric-product orbifold
    /// Euler characteristics.
    Genfun {
        #[arg(long)]
        chi: i64,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        max_n: usize,
    },
    /// Thom–Porteous class; a series in c_i, or a class in H*(P^n)
    /// when bundle twists and a base are given.
    Porteous {
        #[arg(long)]
        e: usize,
        #[arg(long)]
        f: usize,
        #[arg(long)]
        i: usize,
        /// Twists of the source bundle, e.g. "0,1".
        #[arg(long = "E")]
        e_twists: Option<String>,
        /// Twists of the target bundle.
        #[arg(long = "F")]
        f_twists: Option<String>,
        /// Dimension of the base projective space.
        #[arg(long)]
        base: Option<usize>,
        #[arg(long, default_value_t = 8)]
        trunc: usize,
    },
    /// Degeneracy-locus class of split bundles over projective space.
    Degeneracy {
        #[arg(long)]
        e: usize,
        #[arg(long)]
        f: usize,
        #[arg(long)]
        i: usize,
        #[arg(long = "E")]
        e_twists: String,
        #[arg(long = "F")]
        f_twists: String,
        #[arg(long)]
        base: usize,
    },
    /// Segre refinement of the Thom polynomial for a smooth linear
    /// locus with normal weights a·h.
    SegreSm {
        /// Comma-separated integer weights.
        #[arg(long)]
        weights: String,
        #[arg(long, default_value_t = 8)]
        trunc: usize,
    },
    /// Euler characteristic of the zero locus of a generic section of
    /// ⊕O(a_j) on P^n.
    ChiLocus {
        #[arg(long)]
        degrees: String,
        #[arg(long)]
        base: usize,
    },
    /// Rank vector and inclusion matrix of the m-th GL(1) stage.
    Bgl1 {
        #[arg(long)]
        m: usize,
    },
}

enum CliError {
    Input(String),
    Domain(String),
}

fn input<E: std::fmt::Display>(context: &str) -> impl Fn(E) -> CliError + '_ {
    move |e| CliError::Input(format!("{context}: {e}"))
}

fn domain<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Domain(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(value) => {
            match cli.format {
                Format::Json => println!("{value}"),
                Format::Table => print!("{}", to_table(&value)),
            }
            ExitCode::SUCCESS
        }
        Err(CliError::Domain(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
        Err(CliError::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: &Command) -> Result<Value, CliError> {
    match command {
        Command::Validate { space } => {
            let x = load_gspace(space)?;
            match x.validate() {
                Ok(()) => Ok(json!({ "ok": true })),
                Err(violation) => Err(CliError::Domain(format!(
                    "{space}: {violation}"
                ))),
            }
        }
        Command::Euler { space } => {
            let chi = load_any_space(space)?.euler();
            Ok(json!({ "chi": chi }))
        }
        Command::FixedChi { space, tuple } => {
            let x = load_valid_gspace(space)?;
            let tuple = parse_list::<usize>(tuple, "tuple")?;
            let chi = x.fixed_chi(&tuple).map_err(domain)?;
            Ok(json!({ "chi": chi }))
        }
        Command::Quotient { space } => {
            let x = load_valid_gspace(space)?;
            let value = serde_json::to_value(SpaceJson::from_space(&x.quotient()))
                .map_err(|e| CliError::Domain(e.to_string()))?;
            Ok(value)
        }
        Command::Canonical { space, k } => {
            let x = load_valid_gspace(space)?;
            let alpha = canonical_function(&x, *k);
            let file = FunctionJson::from_function(space, &x, &alpha).map_err(domain)?;
            serde_json::to_value(file).map_err(|e| CliError::Domain(e.to_string()))
        }
        Command::OrbifoldEuler { space, k } => {
            let x = load_valid_gspace(space)?;
            let value = orbifold_euler(&x, *k);
            Ok(json!({ "k": k, "value": format_rat(&value) }))
        }
        Command::Symprod { chi, n, k, group } => {
            let loaded;
            let gamma = match group {
                Some(path) => {
                    loaded = load_group(path)?;
                    Some(&loaded)
                }
                None => None,
            };
            let value = power_orbifold_euler(*chi, *n, *k, gamma).map_err(domain)?;
            Ok(json!({ "n": n, "k": k, "value": format_rat(&value) }))
        }
        Command::Genfun { chi, k, max_n } => {
            let coefficients = symprod_genfun(*chi, *max_n, *k).map_err(domain)?;
            let strings: Vec<String> = coefficients.iter().map(format_rat).collect();
            Ok(json!({ "coeffs": strings }))
        }
        Command::Porteous {
            e,
            f,
            i,
            e_twists,
            f_twists,
            base,
            trunc,
        } => {
            let spec = PorteousSpec::new(*e, *f, *i).map_err(domain)?;
            match (e_twists, f_twists, base) {
                (Some(et), Some(ft), Some(n)) => {
                    let bundles = BundleData::new(
                        *n,
                        parse_list::<i64>(et, "E")?,
                        parse_list::<i64>(ft, "F")?,
                    );
                    let class = degeneracy_class(&spec, &bundles).map_err(domain)?;
                    Ok(json!({ "class": class.display() }))
                }
                (None, None, None) => {
                    let tp = porteous_tp(&spec, (*trunc).max(spec.codimension()))
                        .map_err(domain)?;
                    serde_json::to_value(SeriesJson::from_series(&tp))
                        .map_err(|e| CliError::Domain(e.to_string()))
                }
                _ => Err(CliError::Input(
                    "porteous needs either all of --E, --F, --base or none of them".into(),
                )),
            }
        }
        Command::Degeneracy {
            e,
            f,
            i,
            e_twists,
            f_twists,
            base,
        } => {
            let spec = PorteousSpec::new(*e, *f, *i).map_err(domain)?;
            let bundles = BundleData::new(
                *base,
                parse_list::<i64>(e_twists, "E")?,
                parse_list::<i64>(f_twists, "F")?,
            );
            let class = degeneracy_class(&spec, &bundles).map_err(domain)?;
            Ok(json!({ "class": class.display() }))
        }
        Command::SegreSm { weights, trunc } => {
            let degrees = parse_list::<i64>(weights, "weights")?;
            let ring = SeriesRing::degree_one(&["h"], *trunc).map_err(domain)?;
            let h = ring.var("h").map_err(domain)?;
            let weight_series: Vec<_> =
                degrees.iter().map(|&a| h.scale(&rat(a))).collect();
            let series = segre_sm_smooth(&weight_series).map_err(domain)?;
            serde_json::to_value(SeriesJson::from_series(&series))
                .map_err(|e| CliError::Domain(e.to_string()))
        }
        Command::ChiLocus { degrees, base } => {
            let degrees = parse_list::<i64>(degrees, "degrees")?;
            let chi = euler_of_singular_locus(&degrees, *base).map_err(domain)?;
            Ok(json!({ "chi": format_rat(&chi) }))
        }
        Command::Bgl1 { m } => {
            let stage = bgl1_truncated(*m);
            Ok(json!({
                "m": stage.m,
                "ranks": stage.ranks,
                "shifted_degrees": stage.shifted_degrees,
                "inclusion": stage.inclusion,
            }))
        }
    }
}

fn parse_list<T: std::str::FromStr>(text: &str, field: &str) -> Result<Vec<T>, CliError>
where
    T::Err: std::fmt::Display,
{
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<T>()
                .map_err(|e| CliError::Input(format!("field {field}: {part:?}: {e}")))
        })
        .collect()
}

fn load_group(path: &str) -> Result<FiniteGroup, CliError> {
    let text = fs::read_to_string(path).map_err(input(path))?;
    let json: GroupJson = serde_json::from_str(&text).map_err(input(path))?;
    json.to_group().map_err(input(path))
}

fn load_gspace(path: &str) -> Result<GSpace, CliError> {
    let text = fs::read_to_string(path).map_err(input(path))?;
    let json: GSpaceJson = serde_json::from_str(&text).map_err(input(path))?;
    let base = Path::new(path).parent().map(Path::to_path_buf);
    json.to_gspace(|group_path| {
        let resolved = match &base {
            Some(dir) => dir.join(group_path),
            None => Path::new(group_path).to_path_buf(),
        };
        let text = fs::read_to_string(&resolved).map_err(|e| {
            equichern::Error::InvalidArgument(format!("group file {}: {e}", resolved.display()))
        })?;
        serde_json::from_str(&text).map_err(|e| {
            equichern::Error::InvalidArgument(format!("group file {}: {e}", resolved.display()))
        })
    })
    .map_err(input(path))
}

fn load_valid_gspace(path: &str) -> Result<GSpace, CliError> {
    let x = load_gspace(path)?;
    x.validate()
        .map_err(|violation| CliError::Domain(format!("{path}: {violation}")))?;
    Ok(x)
}

/// Spaces with or without an action: try the G-space schema first,
/// then the plain one.
fn load_any_space(path: &str) -> Result<Box<dyn AtomSpace>, CliError> {
    let text = fs::read_to_string(path).map_err(input(path))?;
    if let Ok(json) = serde_json::from_str::<GSpaceJson>(&text) {
        let base = Path::new(path).parent().map(Path::to_path_buf);
        let space = json
            .to_gspace(|group_path| {
                let resolved = match &base {
                    Some(dir) => dir.join(group_path),
                    None => Path::new(group_path).to_path_buf(),
                };
                let text = fs::read_to_string(&resolved).map_err(|e| {
                    equichern::Error::InvalidArgument(format!(
                        "group file {}: {e}",
                        resolved.display()
                    ))
                })?;
                serde_json::from_str(&text).map_err(|e| {
                    equichern::Error::InvalidArgument(format!(
                        "group file {}: {e}",
                        resolved.display()
                    ))
                })
            })
            .map_err(input(path))?;
        return Ok(Box::new(space));
    }
    let json: SpaceJson = serde_json::from_str(&text).map_err(input(path))?;
    Ok(Box::new(json.to_space().map_err(input(path))?))
}

/// Minimal tabular rendering: one `key: value` line per top-level field.
fn to_table(value: &Value) -> String {
    let mut out = String::new();
    match value {
        Value::Object(map) => {
            for (key, v) in map {
                out.push_str(&format!("{key}: {}\n", render(v)));
            }
        }
        other => out.push_str(&format!("{}\n", render(other))),
    }
    out
}

fn render(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        Value::Array(items) => items
            .iter()
            .map(render)
            .collect::<Vec<_>>()
            .join(" "),
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| format!("{k}={}", render(v)))
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}
