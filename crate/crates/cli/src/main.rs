//! `amoeba`: load labeled graphs, compute their replacement groups, run the
//! structural checks and generate families.

use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use amoeba::classify::{self, ClassificationReport};
use amoeba::construct::{self, Family, FamilySpec};
use amoeba::fer::FerAnalysis;
use amoeba::lgraph::LabeledGraph;
use amoeba::oracle;
use amoeba::permgroup::{Label, PermGroup};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error(transparent)]
    Core(#[from] amoeba::Error),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Core(amoeba::Error::SizeGuard { .. }) => 3,
            _ => 2,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "amoeba",
    version,
    about = "Feasible edge-replacement groups of labeled graphs"
)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Largest accepted vertex count (default 30, or 6 for `oracle`).
    #[arg(long, global = true, env = "AMOEBA_MAX_N")]
    max_n: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classification report for one graph.
    Classify {
        file: String,
        /// Root to use instead of the file's.
        #[arg(long)]
        root: Option<String>,
    },
    /// Order, generators and orbits of Fer, Fer^L or H_L.
    Fer {
        file: String,
        #[arg(long, conflicts_with = "hang")]
        fixed: Option<String>,
        #[arg(long)]
        hang: Option<String>,
    },
    /// Orbit partition of Fer or Fer^L.
    Orbits {
        file: String,
        #[arg(long)]
        fixed: Option<String>,
    },
    /// Write the comb product G ∗ H.
    Comb {
        g: String,
        h: String,
        #[arg(short, long, default_value = "-")]
        out: String,
        #[arg(long)]
        dot: bool,
    },
    /// Write a member of a graph family: path, complete, a_family, b_family, cube.
    Family {
        name: String,
        n: usize,
        #[arg(short, long, default_value = "-")]
        out: String,
        #[arg(long)]
        dot: bool,
    },
    /// Write a named example graph.
    Example {
        name: String,
        #[arg(short, long, default_value = "-")]
        out: String,
        #[arg(long)]
        dot: bool,
    },
    /// Brute-force reachability against the group criterion.
    Oracle { file: String },
    /// Run a structural checker; exits 1 when it is falsified.
    #[command(subcommand)]
    Check(CheckCommand),
}

#[derive(Subcommand, Debug)]
enum CheckCommand {
    Thm3 { file: String },
    Hangcorr { file: String },
    Globaltrans { file: String },
    Wreath { g: String, h: String },
    Fixedwreath { g: String, h: String },
    Bigcor { g: String, h: String },
}

struct Ctx {
    format: Format,
    max_n: Option<usize>,
}

impl Ctx {
    fn limit(&self, default: usize) -> usize {
        self.max_n.unwrap_or(default)
    }

    fn guard(&self, what: &'static str, size: usize, default: usize) -> Result<()> {
        let limit = self.limit(default);
        if size > limit {
            return Err(amoeba::Error::SizeGuard { what, size, limit }.into());
        }
        Ok(())
    }

    fn load(&self, path: &str) -> Result<LabeledGraph> {
        let text = read(path)?;
        let g = LabeledGraph::from_json_str(&text)
            .map_err(|e| CliError::Usage(format!("{path}: {e}")))?;
        self.guard("input graph", g.len(), ENGINE_MAX_N)?;
        Ok(g)
    }

    fn report(&self, v: &Value) -> Result<()> {
        let text = match self.format {
            Format::Json => serde_json::to_string_pretty(v).expect("json value"),
            Format::Text => text_lines(v),
        };
        write("-", &format!("{text}\n"))
    }
}

const ENGINE_MAX_N: usize = 30;
const ORACLE_MAX_N: usize = 6;

fn read(path: &str) -> Result<String> {
    let io_err = |source| CliError::Io {
        path: path.to_string(),
        source,
    };
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(io_err)
    }
}

fn write(path: &str, text: &str) -> Result<()> {
    let io_err = |source| CliError::Io {
        path: path.to_string(),
        source,
    };
    if path == "-" {
        io::stdout().write_all(text.as_bytes()).map_err(io_err)
    } else {
        fs::write(path, text).map_err(io_err)
    }
}

fn text_lines(v: &Value) -> String {
    match v {
        Value::Object(m) => m
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}: {s}"),
                Value::Null => format!("{k}: -"),
                other => format!("{k}: {other}"),
            })
            .collect::<Vec<_>>()
            .join("\n"),
        other => other.to_string(),
    }
}

fn emit_graph(g: &LabeledGraph, out: &str, dot: bool) -> Result<()> {
    let text = if dot {
        g.to_dot()
    } else {
        format!("{}\n", g.to_json_string())
    };
    write(out, &text)
}

fn label(g: &LabeledGraph, s: &str) -> Result<usize> {
    let l: Label = s.parse()?;
    Ok(g.index_of(&l)?)
}

fn orbit_names(g: &LabeledGraph, grp: &PermGroup) -> Vec<Vec<String>> {
    grp.orbits()
        .iter()
        .map(|c| c.iter().map(|&v| g.label(v).to_string()).collect())
        .collect()
}

fn group_value(g: &LabeledGraph, grp: &PermGroup) -> Value {
    json!({
        "order": grp.order().to_string(),
        "generators": grp.generators().iter().map(|p| p.to_cycle_string()).collect::<Vec<_>>(),
        "orbits": orbit_names(g, grp),
    })
}

fn pick_group(an: &FerAnalysis, fixed: Option<usize>, hang: Option<usize>) -> PermGroup {
    match (fixed, hang) {
        (Some(i), _) => an.fixed_group(i),
        (_, Some(i)) => an.hang_group(i),
        _ => an.fer_group(),
    }
}

/// `Ok(true)` on pass, `Ok(false)` on falsification.
fn run(cli: Cli) -> Result<bool> {
    let ctx = Ctx {
        format: cli.format,
        max_n: cli.max_n,
    };
    match cli.command {
        Command::Classify { file, root } => {
            let mut g = ctx.load(&file)?;
            if let Some(r) = root {
                g = g.with_root(&r.parse()?)?;
            }
            let report: ClassificationReport = classify::classify(&g, &file)?;
            ctx.report(&serde_json::to_value(&report).expect("report"))?;
        }
        Command::Fer { file, fixed, hang } => {
            let g = ctx.load(&file)?;
            let fixed = fixed.map(|l| label(&g, &l)).transpose()?;
            let hang = hang.map(|l| label(&g, &l)).transpose()?;
            let an = FerAnalysis::new(&g);
            let mut v = group_value(&g, &pick_group(&an, fixed, hang));
            v["replacements"] = an.replacements().iter().map(|r| r.to_string()).collect();
            ctx.report(&v)?;
        }
        Command::Orbits { file, fixed } => {
            let g = ctx.load(&file)?;
            let fixed = fixed.map(|l| label(&g, &l)).transpose()?;
            let grp = pick_group(&FerAnalysis::new(&g), fixed, None);
            ctx.report(&json!({ "orbits": orbit_names(&g, &grp) }))?;
        }
        Command::Comb { g, h, out, dot } => {
            let (g, h) = (ctx.load(&g)?, ctx.load(&h)?);
            ctx.guard("comb product", g.len() * h.len(), ENGINE_MAX_N)?;
            emit_graph(&construct::comb_product(&g, &h)?, &out, dot)?;
        }
        Command::Family { name, n, out, dot } => {
            let family: Family = name.parse()?;
            let g = construct::family(FamilySpec { family, n })?;
            ctx.guard("family", g.len(), ENGINE_MAX_N)?;
            emit_graph(&g, &out, dot)?;
        }
        Command::Example { name, out, dot } => {
            emit_graph(&construct::paper_example(&name)?, &out, dot)?;
        }
        Command::Oracle { file } => {
            let text = read(&file)?;
            let g = LabeledGraph::from_json_str(&text)
                .map_err(|e| CliError::Usage(format!("{file}: {e}")))?;
            ctx.guard("oracle input", g.len(), ORACLE_MAX_N)?;
            let reach = oracle::reachability(&g)?;
            let an = FerAnalysis::new(&g);
            let fer = an.fer_group();
            let local = fer.is_symmetric();
            let quotient = fer.order() / an.automorphisms().order();
            let agrees = local == reach.is_complete() && quotient == reach.reached.len().into();
            ctx.report(&json!({
                "reached": reach.reached.len(),
                "total_copies": reach.total_copies,
                "local_amoeba": local,
                "fer_over_aut": quotient.to_string(),
                "agrees": agrees,
            }))?;
            return Ok(agrees);
        }
        Command::Check(c) => return check(&ctx, c),
    }
    Ok(true)
}

fn check(ctx: &Ctx, c: CheckCommand) -> Result<bool> {
    let pair = |g: &str, h: &str| -> Result<(LabeledGraph, LabeledGraph)> {
        let (g, h) = (ctx.load(g)?, ctx.load(h)?);
        ctx.guard("comb product", g.len() * h.len(), ENGINE_MAX_N)?;
        Ok((g, h))
    };
    let (pass, detail) = match c {
        CheckCommand::Thm3 { file } => {
            let t = classify::check_theorem3(&ctx.load(&file)?)?;
            (t.consistent(), serde_json::to_value(t))
        }
        CheckCommand::Hangcorr { file } => {
            let g = ctx.load(&file)?;
            let hc = classify::check_hang_correspondence(&g)?;
            let bijection = classify::check_hang_bijection(&g)?;
            let mut v = serde_json::to_value(&hc).expect("report");
            v["bijection"] = bijection.into();
            (hc.consistent() && bijection, Ok(v))
        }
        CheckCommand::Globaltrans { file } => {
            let t = classify::check_global_transitive(&ctx.load(&file)?)?;
            (t.consistent(), serde_json::to_value(t))
        }
        CheckCommand::Wreath { g, h } => {
            let (g, h) = pair(&g, &h)?;
            let w = classify::check_wreath_embedding(&g, &h)?;
            (w.passed(), serde_json::to_value(w))
        }
        CheckCommand::Fixedwreath { g, h } => {
            let (g, h) = pair(&g, &h)?;
            let w = classify::check_fixed_wreath_embedding(&g, &h)?;
            let mut v = serde_json::to_value(&w).expect("report");
            v["equal"] = w.equal().into();
            (w.passed(), Ok(v))
        }
        CheckCommand::Bigcor { g, h } => {
            let (g, h) = pair(&g, &h)?;
            let b = classify::check_big_corollary(&g, &h)?;
            (b.passed(), serde_json::to_value(b))
        }
    };
    let mut v = detail.expect("report");
    v["result"] = if pass { "pass" } else { "falsified" }.into();
    ctx.report(&v)?;
    Ok(pass)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("amoeba: {e}");
            ExitCode::from(e.code())
        }
    }
}
