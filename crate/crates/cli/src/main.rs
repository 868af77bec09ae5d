//! `regfactor`: spectra, thresholds, factors, Tutte certificates and
//! verification campaigns for regular graphs, as JSON envelopes.

mod input;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use regfactor::factor::{DegreeSpec, FactorSolver};
use regfactor::graph::{build, to_graph6, ConstructionSpec, Graph};
use regfactor::lab::{self, ClassFamily};
use regfactor::oracle::{self, STPair};
use regfactor::spectral::{cubic_family, eigenvalues, largest_root, rho1, rho2, CubicKind};

use input::Source;
use output::Status;

#[derive(Parser)]
#[command(name = "regfactor", version, about = "Regular factors of regular graphs from eigenvalues")]
struct Cli {
    /// Machine-readable output (the default).
    #[arg(long, global = true)]
    json: bool,
    /// Plain-text output instead of JSON.
    #[arg(long, global = true, conflicts_with = "json")]
    human: bool,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest order for enumerated corpora.
    #[arg(long, global = true)]
    nmax: Option<usize>,
    /// Number of random samples.
    #[arg(long, global = true)]
    samples: Option<usize>,
    /// Slack for threshold comparisons.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tolerance: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphArg {
    /// graph6 string, file of graph6 lines, or `-` for standard input
    /// (read by default).
    graph: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Adjacency eigenvalues in non-increasing order.
    Spectrum(GraphArg),
    /// Spectral-radius threshold of a near-regular class, or a cubic's root.
    Threshold {
        #[arg(long)]
        r: usize,
        #[arg(long, required_unless_present = "cubic")]
        m: Option<usize>,
        #[arg(long, value_enum, required_unless_present = "cubic", conflicts_with = "cubic")]
        family: Option<Family>,
        #[arg(long, value_enum)]
        cubic: Option<CubicArg>,
    },
    /// Build an extremal construction and report its spectral radius.
    Extremal {
        #[arg(long, value_enum)]
        family: ExtremalFamily,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        m: Option<usize>,
        /// Cycle lengths for the odd family with m >= 3, comma separated.
        #[arg(long)]
        cycles: Option<String>,
    },
    /// k-factor or f-factor existence with a witness or certificate.
    Factor {
        #[arg(long, required_unless_present = "degrees")]
        k: Option<usize>,
        /// Per-vertex target degrees, comma separated.
        #[arg(long, conflicts_with = "k")]
        degrees: Option<String>,
        #[command(flatten)]
        graph: GraphArg,
    },
    /// k-factor deficiency with a maximizing (S, T) pair when available.
    Deficiency {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        graph: GraphArg,
    },
    /// k-criticality with the near-factor witnesses.
    Critical {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        graph: GraphArg,
    },
    /// Brute-force Tutte functional.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Verification campaigns.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Graph generators.
    #[command(subcommand)]
    Gen(GenCommand),
}

#[derive(Subcommand)]
enum OracleCommand {
    /// δ(S, T) and its terms for one pair.
    Delta {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "")]
        s: String,
        #[arg(long, default_value = "")]
        t: String,
        #[command(flatten)]
        graph: GraphArg,
    },
    /// Deficiency by enumerating every (S, T).
    Deficiency {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = oracle::DEFAULT_CAP)]
        cap: usize,
        #[command(flatten)]
        graph: GraphArg,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Minimum spectral radius of the class with order parity unlike r.
    Rho1Min {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        m: usize,
    },
    /// Minimum spectral radius of the class with order parity like r.
    Rho2Min {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        m: usize,
    },
    /// r even, k odd: small λ₂ or λ₃ forces k-criticality or a k-factor.
    EvenRegular {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        /// Corpus file or `-`; defaults to all connected r-regular graphs up to --nmax.
        graphs: Option<String>,
    },
    /// r odd: small λ₃ forces a k-factor.
    OddRegular {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        graphs: Option<String>,
    },
    /// def + 1 disjoint dense induced subgraphs in graphs without a k-factor.
    DenseSubgraphs {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        graph: GraphArg,
    },
}

#[derive(Subcommand)]
enum GenCommand {
    /// Random connected r-regular graphs.
    RandomRegular {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
    /// Random members of a near-regular class.
    Class {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
    /// Every connected r-regular graph of order n, up to isomorphism.
    Regular {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Every connected graph of order n, up to isomorphism.
    Connected {
        #[arg(long)]
        n: usize,
    },
    /// r-regular graph with hubs whose removal leaves many odd blobs.
    Blob {
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 1)]
        s: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    /// Order parity unlike r.
    #[value(alias = "even")]
    Rho1,
    /// Order parity like r.
    #[value(alias = "odd")]
    Rho2,
}

#[derive(Clone, Copy, ValueEnum)]
enum CubicArg {
    P,
    F1,
    F2,
    F3,
    F1Equitable,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExtremalFamily {
    Even,
    OddM3,
    OddM1,
    OddM2,
    OddM2AdjacentPair,
    OddM2DegreeDrop,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Spectrum(_) => "spectrum",
            Command::Threshold { .. } => "threshold",
            Command::Extremal { .. } => "extremal",
            Command::Factor { .. } => "factor",
            Command::Deficiency { .. } => "deficiency",
            Command::Critical { .. } => "critical",
            Command::Oracle(OracleCommand::Delta { .. }) => "oracle delta",
            Command::Oracle(OracleCommand::Deficiency { .. }) => "oracle deficiency",
            Command::Verify(VerifyCommand::Rho1Min { .. }) => "verify rho1-min",
            Command::Verify(VerifyCommand::Rho2Min { .. }) => "verify rho2-min",
            Command::Verify(VerifyCommand::EvenRegular { .. }) => "verify even-regular",
            Command::Verify(VerifyCommand::OddRegular { .. }) => "verify odd-regular",
            Command::Verify(VerifyCommand::DenseSubgraphs { .. }) => "verify dense-subgraphs",
            Command::Gen(GenCommand::RandomRegular { .. }) => "gen random-regular",
            Command::Gen(GenCommand::Class { .. }) => "gen class",
            Command::Gen(GenCommand::Regular { .. }) => "gen regular",
            Command::Gen(GenCommand::Connected { .. }) => "gen connected",
            Command::Gen(GenCommand::Blob { .. }) => "gen blob",
        }
    }
}

type Outcome = Result<(Status, Value), String>;

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("payload types serialize")
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// Apply `f` to each input graph; a batch reports every line.
fn per_graph(arg: &GraphArg, f: impl Fn(&Graph) -> Result<(Status, Value), String>) -> Outcome {
    match input::read_source(arg.graph.as_deref())? {
        Source::Single(text) => f(&input::parse(&text)?),
        Source::Batch(lines) => {
            let mut status = Status::Ok;
            let results: Vec<Value> = lines
                .iter()
                .map(|line| match input::parse(line).and_then(|g| f(&g)) {
                    Ok((s, v)) => {
                        if s == Status::Counterexample && status == Status::Ok {
                            status = s;
                        }
                        json!({"graph6": line, "status": s, "result": v})
                    }
                    Err(e) => {
                        status = Status::Error;
                        json!({"graph6": line, "status": Status::Error, "error": e})
                    }
                })
                .collect();
            Ok((status, json!({"count": results.len(), "results": results})))
        }
    }
}

fn ok(v: Value) -> Result<(Status, Value), String> {
    Ok((Status::Ok, v))
}

fn graphs_payload(graphs: &[Graph]) -> Value {
    json!({"count": graphs.len(), "graphs": graphs.iter().map(to_graph6).collect::<Vec<_>>()})
}

fn regular_corpus(r: usize, graphs: Option<&str>, nmax: Option<usize>) -> Result<(String, Vec<Graph>), String> {
    if let Some(arg) = graphs {
        let lines = match input::read_source(Some(arg))? {
            Source::Single(s) => vec![s],
            Source::Batch(v) => v,
        };
        let gs = lines.iter().map(|l| input::parse(l)).collect::<Result<Vec<_>, _>>()?;
        return Ok((format!("{} graphs from {arg}", gs.len()), gs));
    }
    let nmax = nmax.unwrap_or(lab::corpus::REGULAR_ENUMERATION_MAX);
    let mut gs = Vec::new();
    for n in r + 1..=nmax {
        if n * r % 2 == 0 {
            gs.extend(lab::enumerate_connected_regular(n, r).map_err(err)?);
        }
    }
    Ok((format!("connected {r}-regular graphs with n <= {nmax}"), gs))
}

fn campaign_status(report: &lab::CampaignReport) -> Status {
    if report.is_clean() {
        Status::Ok
    } else {
        Status::Counterexample
    }
}

fn run(cli: &Cli) -> Outcome {
    let solver = FactorSolver::default();
    match &cli.command {
        Command::Spectrum(arg) => per_graph(arg, |g| {
            let s = eigenvalues(g).map_err(err)?;
            ok(json!({
                "order": g.order(),
                "size": g.size(),
                "regular_degree": g.regular_degree(),
                "lambda1": s.largest(),
                "eigenvalues": s.values(),
            }))
        }),
        Command::Threshold { r, m, family, cubic } => {
            if let Some(c) = cubic {
                let kind = match c {
                    CubicArg::P => CubicKind::P,
                    CubicArg::F1 => CubicKind::F1,
                    CubicArg::F2 => CubicKind::F2,
                    CubicArg::F3 => CubicKind::F3,
                    CubicArg::F1Equitable => CubicKind::F1Equitable,
                };
                let poly = cubic_family(kind, *r);
                return ok(json!({
                    "cubic": kind,
                    "r": r,
                    "polynomial": poly.to_string(),
                    "roots": poly.real_roots(),
                    "value": largest_root(&poly),
                }));
            }
            let m = m.expect("clap requires m");
            let t = match family.expect("clap requires family") {
                Family::Rho1 => rho1(*r, m),
                Family::Rho2 => rho2(*r, m),
            }
            .map_err(err)?;
            ok(to_value(&t))
        }
        Command::Extremal { family, r, m, cycles } => {
            let r = *r;
            let need_m = || m.ok_or_else(|| "this family needs --m".to_string());
            let spec = match family {
                ExtremalFamily::Even => ConstructionSpec::ExtremalEven { r, m: need_m()? },
                ExtremalFamily::OddM3 => ConstructionSpec::ExtremalOddM3 {
                    r,
                    m: need_m()?,
                    cycles: cycles.as_deref().map(input::parse_list).transpose()?,
                },
                ExtremalFamily::OddM1 => ConstructionSpec::ExtremalOddM1 { r },
                ExtremalFamily::OddM2 => ConstructionSpec::ExtremalOddM2 { r },
                ExtremalFamily::OddM2AdjacentPair => ConstructionSpec::OddM2AdjacentPair { r },
                ExtremalFamily::OddM2DegreeDrop => ConstructionSpec::OddM2DegreeDrop { r },
            };
            let g = build(&spec).map_err(err)?;
            let lambda1 = eigenvalues(&g).map_err(err)?.largest();
            let (_, cm) = spec.class_params().expect("extremal families carry (r, m)");
            let threshold = match family {
                ExtremalFamily::Even => rho1(r, cm).ok(),
                _ => rho2(r, cm).ok(),
            };
            ok(json!({
                "construction": spec.name(),
                "r": r,
                "m": cm,
                "graph6": to_graph6(&g),
                "order": g.order(),
                "size": g.size(),
                "max_degree": g.max_degree(),
                "lambda1": lambda1,
                "threshold": threshold.map(|t| t.value),
                "attains_threshold": threshold.map(|t| (t.value - lambda1).abs() <= cli.tolerance),
            }))
        }
        Command::Factor { k, degrees, graph } => {
            let degrees = degrees.as_deref().map(input::parse_list).transpose()?;
            per_graph(graph, |g| {
                let report = match (&degrees, k) {
                    (Some(d), _) => solver.has_f_factor(g, &DegreeSpec::new(d.clone())),
                    (None, Some(k)) => solver.k_factor(g, *k),
                    (None, None) => unreachable!("clap requires k or degrees"),
                }
                .map_err(err)?;
                ok(to_value(&report))
            })
        }
        Command::Deficiency { k, graph } => per_graph(graph, |g| {
            let def = solver.deficiency(g, *k).map_err(err)?;
            let cert = if def > 0 { solver.certificate(g, *k) } else { None };
            ok(json!({"k": k, "deficiency": def, "certificate": cert}))
        }),
        Command::Critical { k, graph } => per_graph(graph, |g| ok(to_value(&solver.critical(g, *k).map_err(err)?))),
        Command::Oracle(OracleCommand::Delta { k, s, t, graph }) => {
            let pair = STPair::new(input::parse_list(s)?, input::parse_list(t)?).map_err(err)?;
            per_graph(graph, |g| {
                let d = oracle::delta(g, *k, &pair).map_err(err)?;
                ok(json!({"k": k, "s": pair.s, "t": pair.t, "breakdown": d}))
            })
        }
        Command::Oracle(OracleCommand::Deficiency { k, cap, graph }) => per_graph(graph, |g| {
            let (def, pair) = oracle::brute_force_deficiency_capped(g, *k, *cap).map_err(err)?;
            ok(json!({"k": k, "deficiency": def, "has_k_factor": def == 0, "maximizing_pair": pair}))
        }),
        Command::Verify(v) => verify(cli, v),
        Command::Gen(gen) => {
            let count_seeds = |count: usize| (0..count as u64).map(move |i| cli.seed.wrapping_add(i));
            let graphs: Vec<Graph> = match gen {
                GenCommand::RandomRegular { n, r, count } => count_seeds(*count)
                    .map(|s| lab::random_regular(*n, *r, s))
                    .collect::<Result<_, _>>()
                    .map_err(err)?,
                GenCommand::Class { r, m, family, count } => {
                    let f = match family {
                        Family::Rho1 => ClassFamily::Even,
                        Family::Rho2 => ClassFamily::Odd,
                    };
                    count_seeds(*count)
                        .map(|s| lab::random_class_member(*r, *m, f, s))
                        .collect::<Result<_, _>>()
                        .map_err(err)?
                }
                GenCommand::Regular { n, r } => lab::enumerate_connected_regular(*n, *r).map_err(err)?,
                GenCommand::Connected { n } => lab::enumerate_connected(*n).map_err(err)?,
                GenCommand::Blob { r, s } => {
                    if *r < 3 || *s < 1 {
                        return Err("blob graphs need r >= 3 and s >= 1".into());
                    }
                    vec![lab::pendant_blob_graph(*r, *s)]
                }
            };
            ok(graphs_payload(&graphs))
        }
    }
}

fn verify(cli: &Cli, v: &VerifyCommand) -> Outcome {
    let samples = cli.samples.unwrap_or(500);
    let report = match v {
        VerifyCommand::Rho1Min { r, m } => lab::verify_rho1_minimum(*r, *m, samples, cli.seed).map_err(err)?,
        VerifyCommand::Rho2Min { r, m } => lab::verify_rho2_minimum(*r, *m, samples, cli.seed).map_err(err)?,
        VerifyCommand::EvenRegular { r, k, m, graphs } => {
            let (name, corpus) = regular_corpus(*r, graphs.as_deref(), cli.nmax)?;
            lab::verify_even_regular(*r, *k, *m, &name, &corpus, cli.tolerance).map_err(err)?
        }
        VerifyCommand::OddRegular { r, k, m, graphs } => {
            let (name, corpus) = regular_corpus(*r, graphs.as_deref(), cli.nmax)?;
            lab::verify_odd_regular(*r, *k, *m, &name, &corpus, cli.tolerance).map_err(err)?
        }
        VerifyCommand::DenseSubgraphs { k, m, graph } => {
            return per_graph(graph, |g| {
                let rep = lab::check_dense_subgraphs(g, *k, *m).map_err(err)?;
                let status = if rep.is_failure() { Status::Counterexample } else { Status::Ok };
                Ok((status, to_value(&rep)))
            });
        }
    };
    Ok((campaign_status(&report), to_value(&report)))
}

fn emit(envelope: &Value, human: bool) {
    let text = if human {
        output::render_human(envelope)
    } else {
        format!("{envelope}\n")
    };
    let mut out = std::io::stdout().lock();
    // a closed pipe is not worth a panic
    let _ = out.write_all(text.as_bytes());
    let _ = out.flush();
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            eprint!("{}", e.render());
            let message = e.render().to_string();
            let first = message.lines().next().unwrap_or("usage error").trim_start_matches("error: ");
            let human = std::env::args().any(|a| a == "--human");
            emit(&output::envelope("usage", Status::Error, json!({"message": first})), human);
            return ExitCode::from(1);
        }
    };
    let name = cli.command.name();
    let (status, payload) = match run(&cli) {
        Ok(x) => x,
        Err(message) => {
            eprintln!("error: {message}");
            (Status::Error, json!({"message": message}))
        }
    };
    emit(&output::envelope(name, status, payload), cli.human);
    ExitCode::from(status.exit_code())
}
