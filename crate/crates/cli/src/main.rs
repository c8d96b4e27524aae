use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_integer::Integer;
use serde_json::{json, Value};

use qlskit::crystal::Crystal;
use qlskit::decomp::lemmas::{verify_diamond, verify_qbg_structure, verify_simple_edges, verify_tilted_lift};
use qlskit::decomp::similarity::n_lambda;
use qlskit::decomp::verify::{
    render_ws, verify_corollary, verify_degree, verify_degree_consistency, verify_main_theorem, verify_similarity, Options,
};
use qlskit::decomp::{XiStrategy, DEFAULT_DEPTH};
use qlskit::qls::{QlsCrystal, DEFAULT_CAP};
use qlskit::report::Report;
use qlskit::root_system::{CartanType, Family, WeightVec};
use qlskit::weyl::WeylElt;
use qlskit::{Context, Error};

#[derive(Parser)]
#[command(name = "qlskit", version, about = "Quantum Bruhat graphs, quantum LS paths and tensor product decompositions")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Root system type: a label such as `A2`, or a family letter together with --rank.
    #[arg(long = "type", global = true, default_value = "A1")]
    cartan_type: String,
    #[arg(long, global = true)]
    rank: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Word length budget for the search strategy of the semi-infinite decomposition.
    #[arg(long, global = true, default_value_t = DEFAULT_DEPTH)]
    depth: usize,
    #[arg(long, global = true, value_enum, default_value_t = Strategy::Lifted)]
    strategy: Strategy,
    /// Upper bound on the number of paths enumerated in one crystal.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Worker threads; 0 uses one per core.
    #[arg(long, global = true, env = "QLSKIT_JOBS", default_value_t = 0)]
    jobs: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Strategy {
    /// Transport the operator word of the quantum decomposition to a lift.
    Lifted,
    /// Bidirectional breadth-first search in the tensor product, bounded by --depth.
    Search,
}

#[derive(Subcommand)]
enum Command {
    /// Cartan matrix, positive roots and highest root.
    Roots,
    /// Elements of the Weyl group with their lengths.
    Weyl,
    /// The quantum Bruhat graph on W, or on W^J with J read off a weight.
    Qbg {
        #[arg(long, value_name = "WEIGHT")]
        parabolic_from: Option<String>,
    },
    /// Quantum LS paths of shape λ.
    Qls {
        #[arg(long)]
        weight: String,
        /// Also emit the root operator arrows.
        #[arg(long)]
        crystal: bool,
    },
    /// Graded characters gch_{wλ} QLS(λ).
    Gch {
        #[arg(long)]
        weight: String,
        /// A reduced word such as `s1 s2` or `1,2`, `e`, or `all`.
        #[arg(long, default_value = "e")]
        w: String,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[command(flatten)]
        params: VerifyParams,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Theorem,
    Degree,
    Corollary,
    Lemmas,
    Diagrams,
    All,
}

#[derive(Args)]
struct VerifyParams {
    #[arg(long)]
    lambda: Option<String>,
    #[arg(long)]
    mu: Option<String>,
    #[arg(long, default_value = "all")]
    w: String,
    /// Scaling factor for the similarity diagrams; defaults to the least admissible one.
    #[arg(long)]
    n: Option<i64>,
    /// Number of sampled semi-infinite paths for the similarity diagrams.
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

/// Usage errors exit with 2, everything else that goes wrong with 1.
enum Failure {
    Usage(String),
    Run(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Parse(_)
            | Error::DimensionMismatch { .. }
            | Error::NotDominant(_)
            | Error::UnsupportedType(_)
            | Error::NotMultiple { .. } => Failure::Usage(e.to_string()),
            Error::DepthExceeded { .. } => {
                Failure::Run(format!("{e}; rerun with a larger --depth or with --strategy lifted"))
            }
            Error::EnumerationCap { .. } => Failure::Run(format!("{e}; rerun with a larger --cap")),
            other => Failure::Run(other.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn context(g: &Global) -> CliResult<Context> {
    let label = g.cartan_type.trim();
    let cartan_type: CartanType = match (label.len(), g.rank) {
        (1, Some(rank)) => CartanType::new(label.parse::<Family>()?, rank)?,
        (1, None) => return Err(Failure::Usage(format!("type {label} needs --rank"))),
        (_, rank) => {
            let t: CartanType = label.parse()?;
            if rank.is_some_and(|r| r != t.rank) {
                return Err(Failure::Usage(format!("--rank {} contradicts type {label}", rank.unwrap_or(0))));
            }
            t
        }
    };
    Ok(Context::new(cartan_type)?)
}

/// Comma-separated fundamental-weight coordinates of a dominant weight.
fn weight(ctx: &Context, s: &str) -> CliResult<WeightVec> {
    let coords = s
        .split(',')
        .map(|c| c.trim().parse::<i64>().map_err(|_| Failure::Usage(format!("bad weight {s:?}"))))
        .collect::<CliResult<Vec<i64>>>()?;
    let lambda = WeightVec::from_slice(&coords);
    ctx.check_dominant(&lambda)?;
    Ok(lambda)
}

fn nonzero_weight(ctx: &Context, s: &str) -> CliResult<WeightVec> {
    let lambda = weight(ctx, s)?;
    if lambda.is_zero() {
        return Err(Failure::Usage("the weight must be nonzero".to_string()));
    }
    Ok(lambda)
}

fn elements(ctx: &Context, s: &str) -> CliResult<Vec<WeylElt>> {
    if s.trim() == "all" {
        Ok(ctx.group().elements().collect())
    } else {
        Ok(vec![ctx.group().parse_word(s)?])
    }
}

fn require(value: &Option<String>, flag: &str) -> CliResult<String> {
    value.clone().ok_or_else(|| Failure::Usage(format!("this suite needs {flag}")))
}

fn no_dot(g: &Global, what: &str) -> CliResult<()> {
    if g.format == Format::Dot {
        return Err(Failure::Usage(format!("--format dot is not available for {what}")));
    }
    Ok(())
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).unwrap_or_default() + "\n"
}

fn cmd_roots(g: &Global, ctx: &Context) -> CliResult<String> {
    no_dot(g, "roots")?;
    let d = ctx.datum();
    Ok(match g.format {
        Format::Json => pretty(&json!({
            "type": d.cartan_type().to_string(),
            "cartan": d.cartan_matrix(),
            "symmetrizers": d.symmetrizers(),
            "positive_roots": d.positive_roots(),
            "positive_coroots": d.positive_coroots(),
            "theta": d.theta(),
            "theta_coroot": d.theta_coroot(),
        })),
        _ => d.dump(),
    })
}

fn cmd_weyl(g: &Global, ctx: &Context) -> CliResult<String> {
    no_dot(g, "weyl")?;
    let grp = ctx.group();
    Ok(match g.format {
        Format::Json => {
            let items: Vec<Value> =
                grp.elements().map(|w| json!({ "word": grp.render(w), "length": grp.length(w) })).collect();
            pretty(&json!({ "type": ctx.datum().cartan_type().to_string(), "order": grp.order(), "elements": items }))
        }
        _ => {
            let mut s = format!("order: {}\n", grp.order());
            for w in grp.elements() {
                let _ = writeln!(s, "{}\t{}", grp.length(w), grp.render(w));
            }
            s
        }
    })
}

fn cmd_qbg(g: &Global, ctx: &Context, parabolic_from: &Option<String>) -> CliResult<String> {
    let j = match parabolic_from {
        Some(s) => ctx.stabilizer_nodes(&weight(ctx, s)?),
        None => Default::default(),
    };
    let graph = ctx.qbg(j);
    let grp = ctx.group();
    Ok(match g.format {
        Format::Dot => graph.to_dot(grp),
        Format::Json => {
            let edges: Vec<Value> = graph
                .edges()
                .iter()
                .map(|e| {
                    json!({
                        "source": grp.render(e.source),
                        "target": grp.render(e.target),
                        "label": e.label,
                        "kind": e.kind,
                    })
                })
                .collect();
            let nodes: Vec<String> = graph.vertices().iter().map(|&v| grp.render(v)).collect();
            pretty(&json!({ "type": ctx.datum().cartan_type().to_string(), "parabolic": j.to_string(), "nodes": nodes, "edges": edges }))
        }
        Format::Text => {
            let mut s = format!("J={j} nodes: {} edges: {}\n", graph.vertices().len(), graph.edges().len());
            for e in graph.edges() {
                let _ = writeln!(s, "{} -> {}\t{}\t{:?}", grp.render(e.source), grp.render(e.target), e.label, e.kind);
            }
            s
        }
    })
}

fn cmd_qls(g: &Global, ctx: &Context, weight_arg: &str, crystal: bool) -> CliResult<String> {
    let c = QlsCrystal::new(ctx, nonzero_weight(ctx, weight_arg)?)?;
    let paths = c.enumerate(g.cap)?;
    if g.format == Format::Dot && !crystal {
        return Err(Failure::Usage("--format dot needs --crystal".to_string()));
    }
    let arrows: Vec<(usize, usize, usize)> = if crystal {
        let index: std::collections::HashMap<_, _> = paths.iter().enumerate().map(|(k, p)| (p.clone(), k)).collect();
        let mut out = Vec::new();
        for (k, p) in paths.iter().enumerate() {
            for i in 0..=ctx.rank() {
                if let Some(q) = c.f(i, p) {
                    out.push((k, index[&q], i));
                }
            }
        }
        out
    } else {
        Vec::new()
    };
    let names: Vec<String> = paths.iter().map(|p| c.render(p)).collect();
    Ok(match g.format {
        Format::Dot => {
            let mut s = "digraph qls {\n".to_string();
            for n in &names {
                let _ = writeln!(s, "  \"{n}\";");
            }
            for &(a, b, i) in &arrows {
                let _ = writeln!(s, "  \"{}\" -> \"{}\" [label=\"{i}\"];", names[a], names[b]);
            }
            s + "}\n"
        }
        Format::Json => {
            let mut v = json!({
                "type": ctx.datum().cartan_type().to_string(),
                "lambda": c.lambda().to_string(),
                "count": paths.len(),
                "paths": paths.iter().map(|p| json!({ "path": c.render(p), "wt": c.wt(p).to_string() })).collect::<Vec<_>>(),
            });
            if crystal {
                v["arrows"] = arrows.iter().map(|&(a, b, i)| json!({ "source": names[a], "target": names[b], "i": i })).collect();
            }
            pretty(&v)
        }
        Format::Text => {
            let mut s = format!("count: {}\n", paths.len());
            for (p, n) in paths.iter().zip(&names) {
                let _ = writeln!(s, "{n}\twt={}", c.wt(p));
            }
            for &(a, b, i) in &arrows {
                let _ = writeln!(s, "{} -f{i}-> {}", names[a], names[b]);
            }
            s
        }
    })
}

fn cmd_gch(g: &Global, ctx: &Context, weight_arg: &str, w: &str) -> CliResult<String> {
    no_dot(g, "gch")?;
    let c = QlsCrystal::new(ctx, nonzero_weight(ctx, weight_arg)?)?;
    let grp = ctx.group();
    let mut rows = Vec::new();
    for w in elements(ctx, w)? {
        rows.push((grp.render(w), c.gch(w, g.cap)?));
    }
    Ok(match g.format {
        Format::Json => pretty(&Value::Array(
            rows.iter().map(|(w, ch)| json!({ "w": w, "terms": ch.terms() })).collect(),
        )),
        _ => rows.iter().map(|(w, ch)| format!("{w}: {ch}\n")).collect(),
    })
}

fn cmd_verify(g: &Global, ctx: &Context, suite: Suite, p: &VerifyParams) -> CliResult<(String, bool)> {
    no_dot(g, "verify")?;
    let strategy = match g.strategy {
        Strategy::Lifted => XiStrategy::LiftedWord,
        Strategy::Search => XiStrategy::Search { depth: g.depth },
    };
    let opts = Options { strategy, cap: g.cap };
    let runs = |s: Suite| suite == s || suite == Suite::All;
    let needs_weights = suite != Suite::Lemmas;
    let (lambda, mu) = if needs_weights {
        (nonzero_weight(ctx, &require(&p.lambda, "--lambda")?)?, nonzero_weight(ctx, &require(&p.mu, "--mu")?)?)
    } else {
        (WeightVec::zero(ctx.rank()), WeightVec::zero(ctx.rank()))
    };
    let ws = elements(ctx, &p.w)?;
    let mut reports: Vec<Report> = Vec::new();
    if runs(Suite::Theorem) {
        reports.push(verify_main_theorem(ctx, &lambda, &mu, &ws, opts)?);
    }
    if runs(Suite::Degree) {
        reports.push(verify_degree(ctx, &lambda, &mu, &ws, opts)?);
        for l in [&lambda, &mu] {
            reports.push(verify_degree_consistency(ctx, l, &ws, opts)?);
        }
    }
    if runs(Suite::Corollary) {
        reports.push(verify_corollary(ctx, &lambda, &mu, &ws, opts)?);
    }
    if runs(Suite::Lemmas) {
        reports.push(verify_diamond(ctx));
        reports.push(verify_simple_edges(ctx));
        reports.push(verify_tilted_lift(ctx)?);
        reports.push(verify_qbg_structure(ctx));
    }
    if runs(Suite::Diagrams) {
        let least = [&lambda, &mu, &(&lambda + &mu)].iter().fold(1, |acc: i64, l| acc.lcm(&n_lambda(ctx, l)));
        let report = verify_similarity(ctx, &lambda, &mu, p.n.unwrap_or(least), p.samples, p.seed, opts)?;
        reports.push(report.with_w(render_ws(ctx, &ws)));
    }
    let ok = reports.iter().all(Report::passed);
    let out = match g.format {
        Format::Json => serde_json::to_string_pretty(&reports).unwrap_or_default() + "\n",
        _ => reports.iter().map(|r| r.to_string()).collect(),
    };
    Ok((out, ok))
}

fn run(cli: &Cli) -> CliResult<(String, bool)> {
    let g = &cli.global;
    let ctx = context(g)?;
    match &cli.command {
        Command::Roots => cmd_roots(g, &ctx).map(|s| (s, true)),
        Command::Weyl => cmd_weyl(g, &ctx).map(|s| (s, true)),
        Command::Qbg { parabolic_from } => cmd_qbg(g, &ctx, parabolic_from).map(|s| (s, true)),
        Command::Qls { weight, crystal } => cmd_qls(g, &ctx, weight, *crystal).map(|s| (s, true)),
        Command::Gch { weight, w } => cmd_gch(g, &ctx, weight, w).map(|s| (s, true)),
        Command::Verify { suite, params } => cmd_verify(g, &ctx, *suite, params),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.global.jobs).build() {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    match pool.install(|| run(&cli)) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Run(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn global(label: &str, rank: Option<usize>) -> Global {
        Global {
            cartan_type: label.to_string(),
            rank,
            format: Format::Text,
            depth: DEFAULT_DEPTH,
            strategy: Strategy::Lifted,
            cap: DEFAULT_CAP,
            jobs: 1,
        }
    }

    #[test]
    fn type_labels() {
        assert_eq!(context(&global("G", Some(2))).ok().map(|c| c.group().order()), Some(12));
        assert!(matches!(context(&global("C", None)), Err(Failure::Usage(_))));
        assert!(matches!(context(&global("A9x", None)), Err(Failure::Usage(_))));
    }

    #[test]
    fn weights_are_checked() {
        let ctx = context(&global("B2", None)).ok().unwrap();
        assert_eq!(weight(&ctx, " 1, 2").ok(), Some(WeightVec::from_slice(&[1, 2])));
        for bad in ["1", "1,-1", "a,b", "1,2,3"] {
            assert!(matches!(weight(&ctx, bad), Err(Failure::Usage(_))), "{bad}");
        }
        assert!(matches!(nonzero_weight(&ctx, "0,0"), Err(Failure::Usage(_))));
    }
}
