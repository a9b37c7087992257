use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use srdepth::graph::{parse_graph, parse_graph6, GraphFormat};
use srdepth::hochster::{depth_monomial_quotient, depth_of_graph, graded_betti_table, Guards};
use srdepth::monomial::{edge_ideal, symbolic_power};
use srdepth::suite::{
    bounds, fuzz_campaign, search_depth2, verify_graph, Example, Profile, VerificationReport, VerifyOptions,
};
use srdepth::{Error, FieldSpec, Graph, MonomialIdeal, SimplicialComplex};

#[derive(Parser)]
#[command(
    name = "sr-depth",
    version,
    about = "Depth, Betti numbers and connectivity of edge ideals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Coefficient field: a prime p, or 0 for the rationals.
    #[arg(long, global = true, default_value_t = 2)]
    field: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Largest ring for Betti tables and depth scans.
    #[arg(long, global = true)]
    max_vars: Option<usize>,
    /// Largest polarized ring for depths of powers.
    #[arg(long, global = true)]
    max_polarized_vars: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Edges,
    Graph6,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Edge list or graph6 file.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Named example, e.g. c6, fig1, k55, multipartite:3, joined-cycles:5.
    #[arg(long)]
    name: Option<String>,
}

#[derive(Args)]
struct GraphInput {
    #[command(flatten)]
    source: Source,
    /// Defaults to graph6 for `.g6` files, edge list otherwise.
    #[arg(long, value_enum)]
    input_format: Option<InputFormat>,
}

#[derive(Subcommand)]
enum Command {
    /// Depth and projective dimension of S/I(G^c).
    Depth(GraphInput),
    /// Graded Betti table of S/I(G^c).
    Betti(GraphInput),
    /// Vertex connectivity with a minimum separator.
    Kappa(GraphInput),
    /// Depths of S/I, S/I^(2) and S/I^2 for I = I(G^c).
    Powers(GraphInput),
    /// Every invariant of a graph, checked against the known bounds.
    Verify {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long)]
        powers: bool,
        /// Include wall-clock timings (makes output nondeterministic).
        #[arg(long)]
        timings: bool,
    },
    /// Verify a named example.
    Example {
        #[arg(long)]
        name: String,
        #[arg(long)]
        powers: bool,
    },
    /// Seeded random verification campaign.
    Fuzz {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "all")]
        profile: String,
    },
    /// Search for depth-2 graphs with large connectivity.
    SearchDepth2 {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1000)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Depth of S/I for a monomial ideal given one generator per line.
    IdealDepth {
        #[arg(long)]
        ideal: PathBuf,
        /// Number of variables (default: largest index used).
        #[arg(long)]
        vars: Option<usize>,
    },
}

enum Failure {
    Usage(String),
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = match &e {
            Error::Guard {
                what: "universe size", ..
            } => format!("{e} (raise with --max-vars)"),
            Error::Guard {
                what: "polarized variable count",
                ..
            } => format!("{e} (raise with --max-polarized-vars)"),
            Error::BadField(_) => format!("--field: {e}"),
            _ => e.to_string(),
        };
        Failure::Usage(msg)
    }
}

type Outcome = Result<(), Failure>;

struct Ctx {
    field: FieldSpec,
    format: Format,
    guards: Guards,
    out: String,
}

impl Ctx {
    fn header(&self, command: &str) -> Value {
        json!({
            "command": command,
            "field": self.field,
            "guards": self.guards,
        })
    }

    fn emit_json(&mut self, command: &str, key: &str, body: Value) {
        let mut v = self.header(command);
        v[key] = body;
        self.out = serde_json::to_string_pretty(&v).expect("serializable") + "\n";
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.out.push_str(s.as_ref());
        if !s.as_ref().ends_with('\n') {
            self.out.push('\n');
        }
    }
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("--input {}: {e}", path.display())))
}

fn load_graphs(input: &GraphInput) -> Result<Vec<(String, Graph)>, Failure> {
    if let Some(name) = &input.source.name {
        let ex: Example = name
            .parse()
            .map_err(|e: Error| Failure::Usage(format!("--name: {e}")))?;
        return Ok(vec![(ex.to_string(), ex.build()?)]);
    }
    let path = input.source.input.as_ref().expect("clap enforces one source");
    let text = read(path)?;
    let format = input.input_format.unwrap_or_else(|| {
        if path.extension().is_some_and(|e| e == "g6") {
            InputFormat::Graph6
        } else {
            InputFormat::Edges
        }
    });
    let label = path.display().to_string();
    let at = |e: Error| Failure::Usage(format!("--input {label}: {e}"));
    match format {
        InputFormat::Edges => Ok(vec![(
            label.clone(),
            parse_graph(&text, GraphFormat::EdgeList).map_err(at)?,
        )]),
        InputFormat::Graph6 => {
            let graphs = parse_graph6(&text).map_err(at)?;
            if graphs.is_empty() {
                return Err(Failure::Usage(format!("--input {label}: no graphs")));
            }
            Ok(graphs
                .into_iter()
                .enumerate()
                .map(|(i, g)| (format!("{label}#{}", i + 1), g))
                .collect())
        }
    }
}

fn cmd_depth(ctx: &mut Ctx, input: &GraphInput) -> Outcome {
    let graphs = load_graphs(input)?;
    let mut results = Vec::new();
    if ctx.format == Format::Csv {
        ctx.line("graph,n,depth,projective_dimension");
    }
    for (label, g) in &graphs {
        let r = depth_of_graph(g, ctx.field, ctx.guards)?;
        match ctx.format {
            Format::Json => results.push(json!({ "graph": label, "n": g.num_vertices(), "result": r })),
            Format::Csv => ctx.line(format!(
                "{label},{},{},{}",
                g.num_vertices(),
                r.depth,
                r.projective_dimension
            )),
            Format::Text => ctx.line(format!(
                "{label}: depth {} (pd {}, witness W = {}, l = {})",
                r.depth, r.projective_dimension, r.witness.w, r.witness.ell
            )),
        }
    }
    if ctx.format == Format::Json {
        ctx.emit_json("depth", "results", Value::Array(results));
    }
    Ok(())
}

fn cmd_betti(ctx: &mut Ctx, input: &GraphInput) -> Outcome {
    let graphs = load_graphs(input)?;
    let mut results = Vec::new();
    for (label, g) in &graphs {
        let complex = SimplicialComplex::clique_complex(g)?;
        let table = graded_betti_table(&complex, ctx.field, ctx.guards)?;
        match ctx.format {
            Format::Json => results.push(json!({ "graph": label, "table": table })),
            Format::Csv => {
                let csv = table.to_csv();
                if graphs.len() == 1 {
                    ctx.line(csv);
                } else {
                    ctx.line(format!("# {label}\n{csv}"));
                }
            }
            Format::Text => ctx.line(format!("{label}\n{}", table.to_diagram())),
        }
    }
    if ctx.format == Format::Json {
        ctx.emit_json("betti", "results", Value::Array(results));
    }
    Ok(())
}

fn cmd_kappa(ctx: &mut Ctx, input: &GraphInput) -> Outcome {
    let graphs = load_graphs(input)?;
    let mut results = Vec::new();
    if ctx.format == Format::Csv {
        ctx.line("graph,n,kappa,separator");
    }
    for (label, g) in &graphs {
        let r = g.vertex_connectivity()?;
        let sep = r.witness.map(|w| w.to_string());
        match ctx.format {
            Format::Json => results.push(json!({
                "graph": label,
                "n": g.num_vertices(),
                "kappa": r.kappa,
                "separator": r.witness,
            })),
            Format::Csv => ctx.line(format!(
                "{label},{},{},\"{}\"",
                g.num_vertices(),
                r.kappa,
                sep.unwrap_or_default()
            )),
            Format::Text => ctx.line(format!(
                "{label}: kappa {} (separator {})",
                r.kappa,
                sep.unwrap_or_else(|| "none, complete graph".into())
            )),
        }
    }
    if ctx.format == Format::Json {
        ctx.emit_json("kappa", "results", Value::Array(results));
    }
    Ok(())
}

fn cmd_powers(ctx: &mut Ctx, input: &GraphInput) -> Outcome {
    let graphs = load_graphs(input)?;
    let mut results = Vec::new();
    if ctx.format == Format::Csv {
        ctx.line("graph,n,kappa,depth,depth_symbolic_square,depth_square");
    }
    for (label, g) in &graphs {
        let gc = g.complement();
        let ideal = edge_ideal(&gc);
        let kappa = g.vertex_connectivity()?.kappa;
        let d1 = depth_of_graph(g, ctx.field, ctx.guards)?.depth;
        let d_sym = depth_monomial_quotient(&symbolic_power(&gc, 2)?, ctx.field, ctx.guards)?.depth;
        let d_sq = depth_monomial_quotient(&ideal.power(2)?, ctx.field, ctx.guards)?.depth;
        let b = if g.is_complete() {
            None
        } else {
            Some(bounds(g.num_vertices(), kappa)?)
        };
        match ctx.format {
            Format::Json => results.push(json!({
                "graph": label,
                "n": g.num_vertices(),
                "kappa": kappa,
                "depth": d1,
                "depth_symbolic_square": d_sym,
                "depth_square": d_sq,
                "bounds": b,
            })),
            Format::Csv => ctx.line(format!("{label},{},{kappa},{d1},{d_sym},{d_sq}", g.num_vertices())),
            Format::Text => {
                ctx.line(format!("{label}: kappa {kappa}"));
                ctx.line(format!("  depth S/I       = {d1}"));
                ctx.line(format!("  depth S/I^(2)   = {d_sym}"));
                ctx.line(format!("  depth S/I^2     = {d_sq}"));
                if let Some(b) = b {
                    ctx.line(format!(
                        "  lower bounds    = {}, {}, {}",
                        b.lower_depth, b.lower_symbolic, b.lower_square
                    ));
                }
            }
        }
    }
    if ctx.format == Format::Json {
        ctx.emit_json("powers", "results", Value::Array(results));
    }
    Ok(())
}

fn emit_reports(ctx: &mut Ctx, command: &str, reports: &[(String, VerificationReport)]) -> Outcome {
    match ctx.format {
        Format::Json => {
            let body = reports
                .iter()
                .map(|(label, r)| json!({ "graph": label, "report": r }))
                .collect();
            ctx.emit_json(command, "results", Value::Array(body));
        }
        Format::Csv => {
            ctx.line(format!("graph,{}", VerificationReport::CSV_HEADER));
            for (label, r) in reports {
                ctx.line(format!("{label},{}", r.csv_line()));
            }
        }
        Format::Text => {
            for (label, r) in reports {
                ctx.line(format!("== {label}"));
                ctx.line(r.to_text());
            }
        }
    }
    if reports.iter().all(|(_, r)| r.passed()) {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn verify_options(ctx: &Ctx, powers: bool, timings: bool) -> VerifyOptions {
    VerifyOptions {
        field: ctx.field,
        include_powers: powers,
        guards: ctx.guards,
        timings,
    }
}

fn cmd_verify(ctx: &mut Ctx, input: &GraphInput, powers: bool, timings: bool) -> Outcome {
    let opts = verify_options(ctx, powers, timings);
    let reports = load_graphs(input)?
        .into_iter()
        .map(|(label, g)| Ok((label, verify_graph(&g, opts)?)))
        .collect::<Result<Vec<_>, Failure>>()?;
    emit_reports(ctx, "verify", &reports)
}

fn cmd_example(ctx: &mut Ctx, name: &str, powers: bool) -> Outcome {
    let ex: Example = name
        .parse()
        .map_err(|e: Error| Failure::Usage(format!("--name: {e}")))?;
    let mut report = verify_graph(&ex.build()?, verify_options(ctx, powers, false))?;
    if let Some(note) = ex.note() {
        report.notes.push(note.to_string());
    }
    emit_reports(ctx, "example", &[(ex.to_string(), report)])
}

fn cmd_fuzz(ctx: &mut Ctx, n: usize, count: usize, seed: u64, profile: &str) -> Outcome {
    let profile: Profile = profile
        .parse()
        .map_err(|e: Error| Failure::Usage(format!("--profile: {e}")))?;
    let outcome = fuzz_campaign(n, count, seed, profile, verify_options(ctx, false, false)).map_err(|e| match e {
        Error::Guard { actual, limit, .. } => {
            Failure::Usage(format!("--n: {actual} exceeds {limit} for profile {profile}"))
        }
        e => e.into(),
    })?;
    match ctx.format {
        Format::Json => {
            let body = serde_json::to_value(&outcome).expect("serializable");
            ctx.emit_json("fuzz", "campaign", body);
        }
        Format::Csv => {
            ctx.line(format!("index,{}", VerificationReport::CSV_HEADER));
            for (i, r) in outcome.reports.iter().enumerate() {
                ctx.line(format!("{i},{}", r.csv_line()));
            }
        }
        Format::Text => {
            let skipped = outcome
                .reports
                .iter()
                .flat_map(|r| &r.checks)
                .filter(|c| c.status == srdepth::suite::Status::Skipped)
                .count();
            ctx.line(format!(
                "fuzz profile {profile}, seed {seed}, n <= {n}: {} of {count} graphs verified, {skipped} checks skipped",
                outcome.reports.len()
            ));
            match outcome.first_failure {
                None => ctx.line("all checks passed"),
                Some(i) => {
                    let r = &outcome.reports[i];
                    ctx.line(format!("graph {i} FAILED:\n{}{}", r.edge_list(), r.to_text()));
                }
            }
        }
    }
    if outcome.passed() {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn cmd_search(ctx: &mut Ctx, n: usize, budget: usize, seed: u64) -> Outcome {
    let outcome = search_depth2(n, budget, seed, ctx.field).map_err(|e| match e {
        Error::Guard { actual, limit, .. } => Failure::Usage(format!("--n: {actual} exceeds {limit}")),
        e => e.into(),
    })?;
    match ctx.format {
        Format::Json => {
            let body = serde_json::to_value(&outcome).expect("serializable");
            ctx.emit_json("search-depth2", "search", body);
        }
        Format::Csv => {
            ctx.line("n,kappa,source,edges");
            for c in &outcome.frontier {
                let edges: Vec<String> = c.edges.iter().map(|[u, v]| format!("{u}-{v}")).collect();
                ctx.line(format!("{n},{},{},{}", c.kappa, c.source, edges.join(" ")));
            }
        }
        Format::Text => {
            let ks: Vec<String> = outcome.frontier.iter().map(|c| c.kappa.to_string()).collect();
            ctx.line(format!(
                "n = {n}: {} graphs examined, {} with depth 2",
                outcome.graphs_examined, outcome.depth2_graphs
            ));
            ctx.line(format!("kappa realized with depth 2: {{{}}}", ks.join(",")));
            ctx.line(format!(
                "cap {} {}",
                outcome.cap,
                if outcome.cap_attained {
                    "attained"
                } else {
                    "not attained"
                }
            ));
            for c in &outcome.frontier {
                ctx.line(format!("  kappa {}: {}", c.kappa, c.source));
            }
            for c in &outcome.violations {
                ctx.line(format!("  VIOLATION kappa {}: {:?}", c.kappa, c.edges));
            }
        }
    }
    if outcome.violations.is_empty() {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn cmd_ideal_depth(ctx: &mut Ctx, path: &PathBuf, vars: Option<usize>) -> Outcome {
    let text = read(path)?;
    let at = |e: Error| Failure::Usage(format!("--ideal {}: {e}", path.display()));
    let ideal = match vars {
        Some(n) => MonomialIdeal::parse(&text, n),
        None => MonomialIdeal::parse_infer(&text, 1),
    }
    .map_err(at)?;
    let r = depth_monomial_quotient(&ideal, ctx.field, ctx.guards)?;
    match ctx.format {
        Format::Json => {
            let body = json!({
                "num_vars": ideal.num_vars(),
                "generators": ideal.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                "depth": r.depth,
                "projective_dimension": r.projective_dimension,
            });
            ctx.emit_json("ideal-depth", "result", body);
        }
        Format::Csv => {
            ctx.line("num_vars,generators,depth,projective_dimension");
            ctx.line(format!(
                "{},{},{},{}",
                ideal.num_vars(),
                ideal.generators().len(),
                r.depth,
                r.projective_dimension
            ));
        }
        Format::Text => ctx.line(format!(
            "S = K[x1..x{}], I = ({ideal})\ndepth S/I = {} (pd {})",
            ideal.num_vars(),
            r.depth,
            r.projective_dimension
        )),
    }
    Ok(())
}

fn dispatch(ctx: &mut Ctx, command: &Command) -> Outcome {
    match command {
        Command::Depth(g) => cmd_depth(ctx, g),
        Command::Betti(g) => cmd_betti(ctx, g),
        Command::Kappa(g) => cmd_kappa(ctx, g),
        Command::Powers(g) => cmd_powers(ctx, g),
        Command::Verify { graph, powers, timings } => cmd_verify(ctx, graph, *powers, *timings),
        Command::Example { name, powers } => cmd_example(ctx, name, *powers),
        Command::Fuzz {
            n,
            count,
            seed,
            profile,
        } => cmd_fuzz(ctx, *n, *count, *seed, profile),
        Command::SearchDepth2 { n, budget, seed } => cmd_search(ctx, *n, *budget, *seed),
        Command::IdealDepth { ideal, vars } => cmd_ideal_depth(ctx, ideal, *vars),
    }
}

fn run(cli: Cli) -> Outcome {
    let field = FieldSpec::new(cli.common.field).map_err(|e| Failure::Usage(format!("--field: {e}")))?;
    let defaults = Guards::default();
    let guards = Guards {
        max_vars: cli.common.max_vars.unwrap_or(defaults.max_vars),
        max_polarized_vars: cli.common.max_polarized_vars.unwrap_or(defaults.max_polarized_vars),
    };
    let mut ctx = Ctx {
        field,
        format: cli.common.format,
        guards,
        out: String::new(),
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = cli.common.jobs {
        if jobs == 0 {
            return Err(Failure::Usage("--jobs must be at least 1".into()));
        }
        builder = builder.num_threads(jobs);
    }
    let pool = builder.build().map_err(|e| Failure::Usage(format!("--jobs: {e}")))?;
    let result = pool.install(|| dispatch(&mut ctx, &cli.command));
    let mut stdout = io::stdout().lock();
    let _ = stdout.write_all(ctx.out.as_bytes());
    let _ = stdout.flush();
    result
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
