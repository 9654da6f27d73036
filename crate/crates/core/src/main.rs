use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use mbmod::oracle::{oracle_components, oracle_minimal_closed};
use mbmod::{
    check_star_multiplicative, decompose, forward_closure, generate, is_minimal,
    minimal_closed_subsets, parse_instance, reverse_witness, serialize_instance, verify_witness,
    ActionTable, Error, FieldSpec, GenSpec, IndexSet, Origin, Step, SupportGraph,
};

/// Decompose modules over linear spaces given by a multiplicative action table.
#[derive(Debug, Parser)]
#[command(name = "mbmod", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check that an instance file is well formed and multiplicative.
    Validate { path: PathBuf },
    /// Split the index set into connection classes.
    Decompose {
        path: PathBuf,
        /// Cross-check against the brute-force oracle (small instances only).
        #[arg(long)]
        oracle: bool,
    },
    /// Print a shortest connection between two V-indices and its reversal.
    Witness {
        path: PathBuf,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Decide minimality and list the minimal closed subsets.
    Minimal {
        path: PathBuf,
        #[arg(long)]
        oracle: bool,
    },
    /// Check star-multiplicativity and list violations.
    CheckStar { path: PathBuf },
    /// Forward closure of a set of V-indices.
    Closure {
        path: PathBuf,
        /// Comma-separated V-indices or labels.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        seed_set: Vec<String>,
    },
    /// Generate a random instance.
    Generate {
        #[arg(long)]
        v: usize,
        #[arg(long)]
        w: usize,
        #[arg(long)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// `rational` or `gf:<prime>`.
        #[arg(long, default_value = "rational")]
        field: String,
        /// Require exactly this many connection classes.
        #[arg(long)]
        components: Option<usize>,
        /// Symmetrize so that the basis is star-multiplicative.
        #[arg(long)]
        star: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn io(path: &std::path::Path, e: std::io::Error) -> Self {
        CliError {
            code: 3,
            message: format!("{}: {e}", path.display()),
        }
    }

    fn invalid(e: impl std::fmt::Display) -> Self {
        CliError {
            code: 1,
            message: format!("invalid instance: {e}"),
        }
    }

    fn query(e: impl std::fmt::Display) -> Self {
        CliError {
            code: 2,
            message: e.to_string(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::query(e)
    }
}

type CmdResult = Result<String, CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn configure_threads() {
    let threads = std::env::var("MBMOD_THREADS")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .unwrap_or(0);
    if threads > 0 {
        // fails only if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
}

fn load(path: &std::path::Path) -> Result<ActionTable, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse_instance(&text).map_err(CliError::invalid)
}

fn run(cli: &Cli) -> CmdResult {
    let fmt = cli.format;
    match &cli.command {
        Command::Validate { path } => cmd_validate(&load(path)?, fmt),
        Command::Decompose { path, oracle } => cmd_decompose(&load(path)?, *oracle, fmt),
        Command::Witness { path, from, to } => cmd_witness(&load(path)?, from, to, fmt),
        Command::Minimal { path, oracle } => cmd_minimal(&load(path)?, *oracle, fmt),
        Command::CheckStar { path } => cmd_check_star(&load(path)?, fmt),
        Command::Closure { path, seed_set } => cmd_closure(&load(path)?, seed_set, fmt),
        Command::Generate {
            v,
            w,
            density,
            seed,
            field,
            components,
            star,
            out,
        } => {
            let mut spec = GenSpec::new(*v, *w, *density, *seed)
                .field(parse_field(field)?)
                .star_multiplicative(*star);
            spec.target_components = *components;
            let text = serialize_instance(&generate(&spec)?);
            match out {
                Some(path) => {
                    std::fs::write(path, text).map_err(|e| CliError::io(path, e))?;
                    Ok(String::new())
                }
                None => Ok(text),
            }
        }
    }
}

fn parse_field(text: &str) -> Result<FieldSpec, CliError> {
    if text == "rational" {
        return Ok(FieldSpec::Rational);
    }
    let p = text
        .strip_prefix("gf:")
        .and_then(|p| p.parse::<u64>().ok())
        .ok_or_else(|| CliError::query(format!("unknown field {text:?}")))?;
    Ok(FieldSpec::prime(p)?)
}

fn resolve(t: &ActionTable, text: &str) -> Result<usize, CliError> {
    t.resolve_v(text)
        .ok_or_else(|| CliError::query(format!("unknown V-index {text:?}")))
}

fn to_json(v: Value) -> String {
    // serde_json's default map is ordered by key
    let mut s = serde_json::to_string_pretty(&v).expect("json values serialize");
    s.push('\n');
    s
}

fn list(s: &IndexSet) -> String {
    let items: Vec<String> = s.iter().map(|i| i.to_string()).collect();
    format!("[{}]", items.join(","))
}

fn field_name(f: FieldSpec) -> String {
    f.to_string()
}

fn cmd_validate(t: &ActionTable, fmt: Format) -> CmdResult {
    Ok(match fmt {
        Format::Text => format!(
            "{}×{}, {} entries, {}\n",
            t.v_size(),
            t.w_size(),
            t.len(),
            field_name(t.field())
        ),
        Format::Json => to_json(json!({
            "valid": true,
            "v_size": t.v_size(),
            "w_size": t.w_size(),
            "entries": t.len(),
            "field": field_name(t.field()),
        })),
    })
}

fn cmd_decompose(t: &ActionTable, oracle: bool, fmt: Format) -> CmdResult {
    let d = decompose(t);
    let agreement = if oracle {
        Some(oracle_components(t)? == *d.classes())
    } else {
        None
    };
    Ok(match fmt {
        Format::Text => {
            let mut out = String::new();
            let all: Vec<String> = d.modules().map(|m| list(m.component())).collect();
            writeln!(out, "components: [{}]", all.join(",")).unwrap();
            for (b, m) in d.modules().enumerate() {
                writeln!(
                    out,
                    "block {b}: representative {}, members {}, entries {}",
                    m.representative(),
                    list(m.component()),
                    m.entry_count()
                )
                .unwrap();
            }
            if let Some(a) = agreement {
                writeln!(out, "oracle agreement: {a}").unwrap();
            }
            out
        }
        Format::Json => {
            let blocks: Vec<Value> = d
                .modules()
                .map(|m| {
                    json!({
                        "representative": m.representative(),
                        "members": m.component().as_slice(),
                        "entries": m.entry_count(),
                    })
                })
                .collect();
            let mut v = json!({ "count": d.len(), "components": blocks });
            if let Some(a) = agreement {
                v["oracle_agreement"] = json!(a);
            }
            to_json(v)
        }
    })
}

fn render_steps(t: &ActionTable, steps: &[Step]) -> Vec<String> {
    steps.iter().map(|x| x.render(t)).collect()
}

fn cmd_witness(t: &ActionTable, from: &str, to: &str, fmt: Format) -> CmdResult {
    let (from, to) = (resolve(t, from)?, resolve(t, to)?);
    let w = SupportGraph::new(t).find_witness(from, to)?;
    let r = reverse_witness(&w);
    if !verify_witness(t, &w) || !verify_witness(t, &r) {
        return Err(CliError::query(
            "internal error: witness failed verification",
        ));
    }
    let (steps, reverse) = (render_steps(t, &w.steps), render_steps(t, &r.steps));
    Ok(match fmt {
        Format::Text => {
            let show = |s: &[String]| {
                if s.is_empty() {
                    "(empty)".to_string()
                } else {
                    s.join(" ")
                }
            };
            format!(
                "from {} to {}\nwitness: {}\nreverse: {}\n",
                t.v_name(from),
                t.v_name(to),
                show(&steps),
                show(&reverse)
            )
        }
        Format::Json => to_json(json!({
            "from": t.v_name(from),
            "to": t.v_name(to),
            "steps": steps,
            "reverse": reverse,
            "verified": true,
        })),
    })
}

fn cmd_minimal(t: &ActionTable, oracle: bool, fmt: Format) -> CmdResult {
    let m = is_minimal(t)?;
    let subsets = minimal_closed_subsets(t);
    let agreement = if oracle {
        Some(oracle_minimal_closed(t)? == subsets)
    } else {
        None
    };
    Ok(match fmt {
        Format::Text => {
            let mut out = format!("minimal: {}\nmethod: {}\n", m.minimal, m.method.tag());
            let all: Vec<String> = subsets.iter().map(list).collect();
            writeln!(out, "minimal closed subsets: [{}]", all.join(",")).unwrap();
            if let Some(a) = agreement {
                writeln!(out, "oracle agreement: {a}").unwrap();
            }
            out
        }
        Format::Json => {
            let sets: Vec<&[usize]> = subsets.iter().map(|s| s.as_slice()).collect();
            let mut v = json!({
                "minimal": m.minimal,
                "method": m.method.tag(),
                "minimal_closed_subsets": sets,
            });
            if let Some(a) = agreement {
                v["oracle_agreement"] = json!(a);
            }
            to_json(v)
        }
    })
}

fn cmd_check_star(t: &ActionTable, fmt: Format) -> CmdResult {
    let report = check_star_multiplicative(t);
    Ok(match fmt {
        Format::Text => {
            let mut out = format!(
                "star-multiplicative: {}\nviolations: {}\n",
                report.holds(),
                report.violations.len()
            );
            for v in &report.violations {
                writeln!(
                    out,
                    "  a={} b={} x={}",
                    t.v_name(v.a),
                    t.v_name(v.b),
                    v.x.render(t)
                )
                .unwrap();
            }
            out
        }
        Format::Json => {
            let violations: Vec<Value> = report
                .violations
                .iter()
                .map(|v| json!({ "a": v.a, "b": v.b, "x": v.x.render(t) }))
                .collect();
            to_json(json!({ "holds": report.holds(), "violations": violations }))
        }
    })
}

fn cmd_closure(t: &ActionTable, seed: &[String], fmt: Format) -> CmdResult {
    let seed: IndexSet = seed
        .iter()
        .filter(|s| !s.is_empty())
        .map(|s| resolve(t, s))
        .collect::<Result<_, _>>()?;
    let report = forward_closure(t, &seed)?;
    Ok(match fmt {
        Format::Text => {
            let mut out = format!(
                "seed: {}\nclosure: {}\nsize: {}\ntrace:\n",
                list(&report.seed),
                list(&report.closure),
                report.closure.len()
            );
            for (i, origin) in &report.trace {
                match origin {
                    Origin::Seed => writeln!(out, "  {} seed", t.v_name(*i)),
                    Origin::Entry { source, column } => writeln!(
                        out,
                        "  {} from {} via {}",
                        t.v_name(*i),
                        t.v_name(*source),
                        t.w_name(*column)
                    ),
                }
                .unwrap();
            }
            out
        }
        Format::Json => {
            let trace: Vec<Value> = report
                .trace
                .iter()
                .map(|(i, origin)| match origin {
                    Origin::Seed => json!({ "member": i, "origin": "seed" }),
                    Origin::Entry { source, column } => {
                        json!({ "member": i, "origin": "entry", "source": source, "column": column })
                    }
                })
                .collect();
            to_json(json!({
                "seed": report.seed.as_slice(),
                "closure": report.closure.as_slice(),
                "trace": trace,
            }))
        }
    })
}
