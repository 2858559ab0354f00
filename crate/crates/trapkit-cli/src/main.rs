//! `trapkit` — trap-space decision problems for Boolean networks.
//!
//! Exit codes: 0 = the queried property holds (or the command succeeded),
//! 1 = the property does not hold, 2 = error. `--json` switches stdout to
//! one machine-readable object per invocation.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use trapkit::deciders::{self, Limits, TrapVerdict, Witness};
use trapkit::funcgraph::{self, VertexSet};
use trapkit::model::{
    self, parse_hypercube, parse_model, write_functional_graph, write_network, Encoding,
    ModelFormat, ParsedModel,
};
use trapkit::oracle;
use trapkit::reductions::{
    gen_dnf_taut_chain, gen_dnf_taut_monotone, gen_pi2_mintrap, gen_tautology_trapspace,
    parse_dnf_instance, parse_qbf_instance, parse_taut_instance, Problem, ReductionInstance,
};
use trapkit::{BooleanNetwork, Configuration, FunctionalGraph, Hypercube};

/// The engine auto-selection threshold: the explicit graph wins while
/// `2^n` stays small.
const AUTO_GRAPH_LIMIT: usize = 14;

#[derive(Parser)]
#[command(name = "trapkit", version, about = "Trap spaces of Boolean networks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Engine {
    Auto,
    Symbolic,
    Graph,
    Oracle,
}

#[derive(Args)]
struct ModelArgs {
    /// Model file: .bn (formulas), .tt, .bdd, .d01, or .fg
    model: PathBuf,
    /// Input format override (formula|tt|bdd|dnf01|fg)
    #[arg(long)]
    format: Option<String>,
    /// Decision backend
    #[arg(long, value_enum, default_value_t = Engine::Auto)]
    engine: Engine,
    /// Emit a JSON report on stdout
    #[arg(long)]
    json: bool,
    /// Worker cap for functional-graph construction
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a hypercube is a trap space
    Trapspace {
        #[command(flatten)]
        model: ModelArgs,
        /// Hypercube over {0,1,*}, leftmost character is component 1
        #[arg(long)]
        cube: String,
    },
    /// Decide whether a hypercube is a minimal trap space
    Mintrap {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        cube: String,
    },
    /// Decide whether a configuration lies in a minimal trap space
    #[command(name = "in-mintrap")]
    InMintrap {
        #[command(flatten)]
        model: ModelArgs,
        /// Configuration over {0,1}
        #[arg(long)]
        config: String,
    },
    /// Compute T(seed), the smallest trap space containing the seed
    Saturate {
        #[command(flatten)]
        model: ModelArgs,
        /// A configuration or hypercube string
        #[arg(long)]
        from: String,
    },
    /// Enumerate all minimal trap spaces
    #[command(name = "min-trapspaces")]
    MinTrapspaces {
        #[command(flatten)]
        model: ModelArgs,
        /// Shorthand for --engine oracle
        #[arg(long)]
        oracle: bool,
    },
    /// Build the functional graph; print .fg text or DOT
    Graph {
        #[command(flatten)]
        model: ModelArgs,
        /// Render DOT of the subgraph induced by --cube instead of .fg
        #[arg(long)]
        dot: bool,
        /// Restriction hypercube (default: the full space)
        #[arg(long)]
        cube: Option<String>,
        /// Output file (stdout when omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Generate a reduction instance network plus its manifest
    Generate {
        /// Which construction to run
        #[arg(value_parser = ["taut", "pi2", "monotone", "chain"])]
        kind: String,
        /// Instance file (formula, QBF, or DNF, depending on the kind)
        instance: PathBuf,
        /// Output model file
        #[arg(short, long)]
        output: PathBuf,
        /// Post-convert the network (chain generator only): tt|bdd|dnf01
        #[arg(long)]
        encoding: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Convert a network between local-function encodings
    Convert {
        model: PathBuf,
        #[arg(long)]
        format: Option<String>,
        /// Target encoding: formula|dnf|tt|bdd|dnf01
        #[arg(long)]
        to: String,
        /// Output file (stdout when omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run() -> anyhow::Result<ExitCode> {
    let cli = Cli::parse();
    match cli.command {
        Command::Trapspace { model, cube } => decide(&model, DecisionKind::Trapspace, &cube),
        Command::Mintrap { model, cube } => decide(&model, DecisionKind::Mintrap, &cube),
        Command::InMintrap { model, config } => decide(&model, DecisionKind::InMintrap, &config),
        Command::Saturate { model, from } => saturate_cmd(&model, &from),
        Command::MinTrapspaces { model, oracle } => min_trapspaces_cmd(&model, oracle),
        Command::Graph {
            model,
            dot,
            cube,
            output,
        } => graph_cmd(&model, dot, cube, output),
        Command::Generate {
            kind,
            instance,
            output,
            encoding,
            json,
        } => generate_cmd(&kind, &instance, &output, encoding, json),
        Command::Convert {
            model,
            format,
            to,
            output,
            json,
        } => convert_cmd(&model, format, &to, output, json),
    }
}

// ---------------------------------------------------------------------------
// Model loading and engine resolution
// ---------------------------------------------------------------------------

fn load_model(path: &Path, format: &Option<String>) -> anyhow::Result<ParsedModel> {
    let format = match format {
        Some(name) => ModelFormat::from_str(name)?,
        None => {
            let name = path.to_string_lossy();
            ModelFormat::from_extension(&name)
                .ok_or_else(|| anyhow!("cannot infer the format of `{name}`; pass --format"))?
        }
    };
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(parse_model(&text, format)?)
}

fn limits_from_env() -> anyhow::Result<Limits> {
    let mut limits = Limits::default();
    if let Ok(raw) = std::env::var("TRAPKIT_BUDGET") {
        let budget: u64 = raw
            .parse()
            .map_err(|_| anyhow!("TRAPKIT_BUDGET must be an integer, found `{raw}`"))?;
        limits.sat_budget = budget;
    }
    Ok(limits)
}

/// What the query will actually run on.
enum Backend {
    Symbolic(BooleanNetwork),
    Graph(FunctionalGraph),
    Oracle(ParsedModel),
}

fn resolve_backend(args: &ModelArgs) -> anyhow::Result<Backend> {
    let parsed = load_model(&args.model, &args.format)?;
    let engine = match (&parsed, args.engine) {
        (_, Engine::Oracle) => return Ok(Backend::Oracle(parsed)),
        (ParsedModel::Graph(_), Engine::Auto | Engine::Graph) => Engine::Graph,
        (ParsedModel::Graph(_), Engine::Symbolic) => {
            bail!("the symbolic engine needs local functions; a .fg file only lists transitions")
        }
        (ParsedModel::Network(net), Engine::Auto) => {
            if net.n() <= AUTO_GRAPH_LIMIT {
                Engine::Graph
            } else {
                Engine::Symbolic
            }
        }
        (ParsedModel::Network(_), choice) => choice,
    };
    Ok(match (parsed, engine) {
        (ParsedModel::Network(net), Engine::Symbolic) => Backend::Symbolic(net),
        (ParsedModel::Network(net), Engine::Graph) => {
            Backend::Graph(funcgraph::build_functional_graph_with(&net, args.threads)?)
        }
        (ParsedModel::Graph(g), _) => Backend::Graph(g),
        _ => unreachable!("symbolic backend always has a network"),
    })
}

fn model_dimension(parsed: &ParsedModel) -> usize {
    match parsed {
        ParsedModel::Network(net) => net.n(),
        ParsedModel::Graph(g) => g.n(),
    }
}

// ---------------------------------------------------------------------------
// Decision commands
// ---------------------------------------------------------------------------

#[derive(Clone, Copy)]
enum DecisionKind {
    Trapspace,
    Mintrap,
    InMintrap,
}

fn decide(args: &ModelArgs, kind: DecisionKind, query: &str) -> anyhow::Result<ExitCode> {
    let limits = limits_from_env()?;
    let backend = resolve_backend(args)?;
    let started = Instant::now();
    let mut verdict = match (&backend, kind) {
        (Backend::Symbolic(net), DecisionKind::Trapspace) => {
            deciders::trapspace(net, &cube_query(net.n(), query)?, limits)?
        }
        (Backend::Symbolic(net), DecisionKind::Mintrap) => {
            deciders::mintrap(net, &cube_query(net.n(), query)?, limits)?
        }
        (Backend::Symbolic(net), DecisionKind::InMintrap) => {
            deciders::in_mintrap(net, &config_query(net.n(), query)?, limits)?
        }
        (Backend::Graph(g), DecisionKind::Trapspace) => {
            funcgraph::trapspace_g(g, &cube_query(g.n(), query)?)?
        }
        (Backend::Graph(g), DecisionKind::Mintrap) => {
            funcgraph::mintrap_g(g, &cube_query(g.n(), query)?)?
        }
        (Backend::Graph(g), DecisionKind::InMintrap) => {
            funcgraph::in_mintrap_g(g, &config_query(g.n(), query)?)?
        }
        (Backend::Oracle(parsed), _) => oracle_decide(parsed, kind, query)?,
    };
    if matches!(kind, DecisionKind::Trapspace | DecisionKind::Mintrap) {
        normalize_transition_witness(&mut verdict, &parse_hypercube(query)?);
    }
    let elapsed = started.elapsed().as_secs_f64() * 1e3;
    report_verdict(&verdict, elapsed, args.json);
    Ok(ExitCode::from(u8::from(!verdict.answer)))
}

/// The graph engine reports escapes as transitions `x -> f(x)`; rewrite
/// them into the component/config shape the symbolic engine uses, so the
/// report format does not depend on the backend.
fn normalize_transition_witness(verdict: &mut TrapVerdict, cube: &Hypercube) {
    if let Some(Witness::Transition { from, to }) = &verdict.witness {
        let escaped = (0..cube.n()).find(|&i| cube.cell(i).is_some_and(|v| to.bit(i) != v));
        if let Some(component) = escaped {
            verdict.witness = Some(Witness::Escape {
                component,
                config: from.clone(),
            });
        }
    }
}

fn cube_query(n: usize, query: &str) -> anyhow::Result<Hypercube> {
    let h = parse_hypercube(query)?;
    if h.n() != n {
        bail!(
            "the cube has {} cells but the model has dimension {n}",
            h.n()
        );
    }
    Ok(h)
}

fn config_query(n: usize, query: &str) -> anyhow::Result<Configuration> {
    let x = Configuration::from_str(query)?;
    if x.n() != n {
        bail!(
            "the configuration has {} bits but the model has dimension {n}",
            x.n()
        );
    }
    Ok(x)
}

fn oracle_decide(
    parsed: &ParsedModel,
    kind: DecisionKind,
    query: &str,
) -> anyhow::Result<TrapVerdict> {
    let n = model_dimension(parsed);
    let traps = match parsed {
        ParsedModel::Network(net) => oracle::enumerate_trap_spaces(net)?,
        ParsedModel::Graph(g) => oracle::enumerate_trap_spaces_graph(g)?,
    };
    let minimal: Vec<Hypercube> = traps
        .iter()
        .filter(|h| {
            !traps
                .iter()
                .any(|inner| inner != *h && h.contains_cube(inner))
        })
        .cloned()
        .collect();
    Ok(match kind {
        DecisionKind::Trapspace => {
            let h = cube_query(n, query)?;
            if traps.contains(&h) {
                TrapVerdict::yes()
            } else {
                TrapVerdict {
                    answer: false,
                    witness: None,
                    closure: None,
                }
            }
        }
        DecisionKind::Mintrap => {
            let h = cube_query(n, query)?;
            if minimal.contains(&h) {
                TrapVerdict::yes()
            } else {
                let witness = traps
                    .iter()
                    .find(|inner| **inner != h && h.contains_cube(inner))
                    .filter(|_| traps.contains(&h))
                    .map(|inner| Witness::SmallerTrap(inner.clone()));
                TrapVerdict {
                    answer: false,
                    witness,
                    closure: None,
                }
            }
        }
        DecisionKind::InMintrap => {
            let x = config_query(n, query)?;
            let closure = oracle::oracle_closure(&traps, &Hypercube::point(&x));
            let answer = minimal.iter().any(|m| m.contains(&x));
            TrapVerdict {
                answer,
                witness: None,
                closure: Some(closure),
            }
        }
    })
}

fn witness_json(witness: &Witness) -> serde_json::Value {
    match witness {
        Witness::Escape { component, config } => json!({
            "component": component + 1,
            "config": config.to_string(),
        }),
        // a transition x -> f(x) leaving v(h); reported through the
        // component it escapes on so the shape matches the symbolic engine
        Witness::Transition { from, to } => json!({
            "from": from.to_string(),
            "to": to.to_string(),
        }),
        Witness::SmallerTrap(h) => json!({ "smaller": h.to_string() }),
    }
}

fn report_verdict(verdict: &TrapVerdict, time_ms: f64, as_json: bool) {
    if as_json {
        let mut obj = json!({
            "answer": verdict.answer,
            "witness": verdict.witness.as_ref().map(witness_json),
            "time_ms": time_ms,
        });
        if let Some(closure) = &verdict.closure {
            obj["closure"] = json!(closure.to_string());
        }
        println!("{obj}");
        return;
    }
    println!("{}", verdict.answer);
    if let Some(closure) = &verdict.closure {
        println!("closure: {closure}");
    }
    match &verdict.witness {
        Some(Witness::Escape { component, config }) => {
            println!("witness: component {} escapes at {config}", component + 1);
        }
        Some(Witness::Transition { from, to }) => {
            println!("witness: transition {from} -> {to} leaves the cube");
        }
        Some(Witness::SmallerTrap(h)) => {
            println!("witness: smaller trap space {h}");
        }
        None => {}
    }
}

// ---------------------------------------------------------------------------
// saturate / min-trapspaces / graph
// ---------------------------------------------------------------------------

fn saturate_cmd(args: &ModelArgs, from: &str) -> anyhow::Result<ExitCode> {
    let limits = limits_from_env()?;
    let backend = resolve_backend(args)?;
    let started = Instant::now();
    let result = match &backend {
        Backend::Symbolic(net) => deciders::compute_t(net, &cube_query(net.n(), from)?, limits)?,
        Backend::Graph(g) => {
            let seed = cube_query(g.n(), from)?;
            let ranks: Vec<u32> = seed.rank_vertices().collect();
            funcgraph::saturate(g, &VertexSet::from_ranks(g.n(), ranks))?
        }
        Backend::Oracle(parsed) => {
            let n = model_dimension(parsed);
            let traps = match parsed {
                ParsedModel::Network(net) => oracle::enumerate_trap_spaces(net)?,
                ParsedModel::Graph(g) => oracle::enumerate_trap_spaces_graph(g)?,
            };
            oracle::oracle_closure(&traps, &cube_query(n, from)?)
        }
    };
    let elapsed = started.elapsed().as_secs_f64() * 1e3;
    if args.json {
        println!(
            "{}",
            json!({ "result": result.to_string(), "time_ms": elapsed })
        );
    } else {
        println!("{result}");
    }
    Ok(ExitCode::SUCCESS)
}

/// Ternary-counter order: 0 < 1 < *, component 1 most significant.
fn cube_sort_key(h: &Hypercube) -> Vec<u8> {
    (0..h.n())
        .map(|i| match h.cell(i) {
            Some(false) => 0,
            Some(true) => 1,
            None => 2,
        })
        .collect()
}

fn min_trapspaces_cmd(args: &ModelArgs, oracle_flag: bool) -> anyhow::Result<ExitCode> {
    let parsed = load_model(&args.model, &args.format)?;
    let n = model_dimension(&parsed);
    let engine = if oracle_flag {
        Engine::Oracle
    } else {
        args.engine
    };
    let engine = match engine {
        Engine::Auto => {
            if n <= oracle::MAX_ORACLE_DIMENSION {
                Engine::Oracle
            } else {
                Engine::Graph
            }
        }
        Engine::Symbolic => {
            bail!("enumerating minimal trap spaces needs --engine oracle or --engine graph")
        }
        other => other,
    };
    let started = Instant::now();
    let mut minimal = match engine {
        Engine::Oracle => match &parsed {
            ParsedModel::Network(net) => oracle::enumerate_minimal_trap_spaces(net)?,
            ParsedModel::Graph(g) => oracle::enumerate_minimal_trap_spaces_graph(g)?,
        },
        Engine::Graph => {
            let g = match parsed {
                ParsedModel::Network(ref net) => {
                    funcgraph::build_functional_graph_with(net, args.threads)?
                }
                ParsedModel::Graph(g) => g,
            };
            // every minimal trap space is the saturation of a terminal SCC
            let full = Hypercube::full(g.n());
            let mut out: Vec<Hypercube> = Vec::new();
            for scc in funcgraph::terminal_sccs(&g, &full)? {
                let t = funcgraph::saturate(&g, &scc)?;
                if funcgraph::mintrap_g(&g, &t)?.answer && !out.contains(&t) {
                    out.push(t);
                }
            }
            out
        }
        _ => unreachable!(),
    };
    minimal.sort_by_key(cube_sort_key);
    let elapsed = started.elapsed().as_secs_f64() * 1e3;
    if args.json {
        let cubes: Vec<String> = minimal.iter().map(Hypercube::to_string).collect();
        println!(
            "{}",
            json!({ "minimal_trap_spaces": cubes, "time_ms": elapsed })
        );
    } else {
        for h in &minimal {
            println!("{h}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn graph_cmd(
    args: &ModelArgs,
    dot: bool,
    cube: Option<String>,
    output: Option<PathBuf>,
) -> anyhow::Result<ExitCode> {
    let parsed = load_model(&args.model, &args.format)?;
    let started = Instant::now();
    let g = match parsed {
        ParsedModel::Network(ref net) => funcgraph::build_functional_graph_with(net, args.threads)?,
        ParsedModel::Graph(g) => g,
    };
    let cube = match cube {
        Some(raw) => cube_query(g.n(), &raw)?,
        None => Hypercube::full(g.n()),
    };
    let text = if dot {
        funcgraph::to_dot(&g, &cube)?
    } else {
        write_functional_graph(&g)
    };
    let elapsed = started.elapsed().as_secs_f64() * 1e3;
    match &output {
        Some(path) => {
            std::fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?
        }
        None if !args.json => print!("{text}"),
        None => {}
    }
    if args.json {
        let closed = funcgraph::trapspace_g(&g, &cube)?.answer;
        let terminal = if closed {
            Some(funcgraph::terminal_sccs(&g, &cube)?.len())
        } else {
            None
        };
        println!(
            "{}",
            json!({
                "n": g.n(),
                "vertices": g.vertex_count(),
                "cube": cube.to_string(),
                "closed": closed,
                "terminal_sccs": terminal,
                "time_ms": elapsed,
            })
        );
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// generate / convert
// ---------------------------------------------------------------------------

fn generate_cmd(
    kind: &str,
    instance: &Path,
    output: &Path,
    encoding: Option<String>,
    as_json: bool,
) -> anyhow::Result<ExitCode> {
    let text = std::fs::read_to_string(instance)
        .with_context(|| format!("reading {}", instance.display()))?;
    let started = Instant::now();
    let generated: ReductionInstance = match kind {
        "taut" => {
            let (formula, vars) = parse_taut_instance(&text)?;
            gen_tautology_trapspace(formula, vars)?
        }
        "pi2" => gen_pi2_mintrap(parse_qbf_instance(&text)?)?,
        "monotone" => {
            let (dnf, vars) = parse_dnf_instance(&text)?;
            gen_dnf_taut_monotone(dnf, vars)?
        }
        "chain" => {
            let (dnf, vars) = parse_dnf_instance(&text)?;
            gen_dnf_taut_chain(dnf, vars)?
        }
        other => bail!("unknown generator `{other}`"),
    };
    let (network, format) = match &encoding {
        None => (generated.network.clone(), ModelFormat::Bn),
        Some(enc) => {
            if kind != "chain" {
                bail!("--encoding is only supported for the chain generator (bounded arity)");
            }
            let target = Encoding::from_str(enc)?;
            let format = match target {
                Encoding::Formula | Encoding::Dnf => ModelFormat::Bn,
                Encoding::Table => ModelFormat::Tt,
                Encoding::Bdd => ModelFormat::Bdd,
                Encoding::Dnf01 => ModelFormat::D01,
            };
            (model::convert(&generated.network, target)?, format)
        }
    };
    std::fs::write(output, write_network(&network, format)?)
        .with_context(|| format!("writing {}", output.display()))?;
    let manifest_path = manifest_path(output);
    let contract = match generated.problem {
        Problem::Trapspace => "TRAPSPACE(f, cube) holds iff the source formula is a tautology",
        Problem::Mintrap | Problem::InMintrap => {
            "MINTRAP(f, cube) and IN-MINTRAP(f, config) hold iff the source formula is valid"
        }
    };
    let manifest = json!({
        "generator": kind,
        "problem": generated.problem.to_string(),
        "dimension": network.n(),
        "cube": generated.target_hypercube.to_string(),
        "config": generated.target_configuration.as_ref().map(|c| c.to_string()),
        "source": generated.source.to_string(),
        "contract": contract,
    });
    std::fs::write(&manifest_path, format!("{manifest:#}\n"))
        .with_context(|| format!("writing {}", manifest_path.display()))?;
    let elapsed = started.elapsed().as_secs_f64() * 1e3;
    if as_json {
        println!(
            "{}",
            json!({
                "output": output.display().to_string(),
                "manifest": manifest_path.display().to_string(),
                "dimension": network.n(),
                "cube": generated.target_hypercube.to_string(),
                "config": generated.target_configuration.as_ref().map(|c| c.to_string()),
                "time_ms": elapsed,
            })
        );
    } else {
        println!(
            "wrote {} (manifest: {})",
            output.display(),
            manifest_path.display()
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn manifest_path(output: &Path) -> PathBuf {
    let mut name = output.file_name().unwrap_or_default().to_os_string();
    name.push(".manifest.json");
    output.with_file_name(name)
}

fn convert_cmd(
    model: &Path,
    format: Option<String>,
    to: &str,
    output: Option<PathBuf>,
    as_json: bool,
) -> anyhow::Result<ExitCode> {
    let parsed = load_model(model, &format)?;
    let ParsedModel::Network(net) = parsed else {
        bail!("conversion needs local functions; a .fg file only lists transitions");
    };
    let target = Encoding::from_str(to)?;
    let started = Instant::now();
    let converted = model::convert(&net, target)?;
    let out_format = match target {
        Encoding::Formula | Encoding::Dnf => ModelFormat::Bn,
        Encoding::Table => ModelFormat::Tt,
        Encoding::Bdd => ModelFormat::Bdd,
        Encoding::Dnf01 => ModelFormat::D01,
    };
    let text = write_network(&converted, out_format)?;
    let elapsed = started.elapsed().as_secs_f64() * 1e3;
    match &output {
        Some(path) => {
            std::fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?
        }
        None if !as_json => print!("{text}"),
        None => {}
    }
    if as_json {
        println!(
            "{}",
            json!({
                "encoding": target.to_string(),
                "output": output.as_ref().map(|p| p.display().to_string()),
                "time_ms": elapsed,
            })
        );
    }
    Ok(ExitCode::SUCCESS)
}
