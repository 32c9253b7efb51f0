use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use tutte_core::connectivity::{circuit_check, connectivity_profile, ConnectivityProfile, NotCircuit};
use tutte_core::measures::{bound_report, Measurer, Mutation};
use tutte_core::oracle::{Oracle, OracleReport};
use tutte_core::toolkit::{generate, stress, Family, GeneratorSpec, StressConfig};
use tutte_core::{Engine, Instance, PlaneGraph, TutteResult, Vid};

#[derive(Parser)]
#[command(name = "tutte", version, about = "Tutte paths and cycles in plane graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the embedding and report whether it is a circuit graph.
    Validate { file: PathBuf },
    /// Run one construction and print the path with its bound report.
    Path(PathArgs),
    /// Run a construction, re-check it, and optionally enumerate with the oracle.
    Verify {
        #[command(flatten)]
        args: PathArgs,
        #[arg(long)]
        oracle: bool,
    },
    /// Write a generated plane graph.
    Gen {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the seeded harness; exits nonzero on any violation.
    Stress {
        #[arg(long)]
        nmax: usize,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Restrict to these families (comma separated).
        #[arg(long, value_delimiter = ',')]
        families: Vec<Family>,
        /// Sample this many tuples per operation and graph instead of all.
        #[arg(long)]
        per_op: Option<usize>,
        /// Directory for failing instances.
        #[arg(long, default_value = "stress-failures")]
        out: PathBuf,
        /// Run with a deliberately defective measurer (negative control).
        #[arg(long, value_enum)]
        mutation: Option<MutationArg>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MutationArg {
    TauSwap,
    TrivialBridges,
    DropBeta,
}

impl From<MutationArg> for Mutation {
    fn from(m: MutationArg) -> Self {
        match m {
            MutationArg::TauSwap => Mutation::TauCasesSwapped,
            MutationArg::TrivialBridges => Mutation::CountTrivialBridges,
            MutationArg::DropBeta => Mutation::DropBeta,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Edge,
    Vertex,
    TwoEdge,
    VertexEdge,
    Cycle3,
}

#[derive(Args)]
struct PathArgs {
    file: PathBuf,
    #[arg(long, value_enum)]
    mode: Mode,
    #[arg(long)]
    u: Option<Vid>,
    #[arg(long)]
    v: Option<Vid>,
    #[arg(long, value_parser = parse_edge)]
    e: Option<(Vid, Vid)>,
    #[arg(long, value_parser = parse_edge)]
    f: Option<(Vid, Vid)>,
    #[arg(long, value_parser = parse_edge)]
    g: Option<(Vid, Vid)>,
    #[arg(long)]
    z: Option<Vid>,
    #[arg(long)]
    json: bool,
}

fn parse_edge(s: &str) -> std::result::Result<(Vid, Vid), String> {
    let (a, b) = s.split_once('-').ok_or_else(|| format!("expected A-B, got `{s}`"))?;
    let id = |x: &str| x.trim().parse::<Vid>().map_err(|_| format!("bad vertex id `{x}`"));
    Ok((id(a)?, id(b)?))
}

fn need<T>(x: Option<T>, flag: &str) -> Result<T> {
    x.ok_or_else(|| anyhow!("--{flag} is required for this mode"))
}

enum Job {
    Path(Instance),
    Cycle([(Vid, Vid); 3]),
}

impl PathArgs {
    fn job(&self) -> Result<Job> {
        if let Mode::Cycle3 = self.mode {
            return Ok(Job::Cycle([need(self.e, "e")?, need(self.f, "f")?, need(self.g, "g")?]));
        }
        let (u, v) = (need(self.u, "u")?, need(self.v, "v")?);
        Ok(Job::Path(match self.mode {
            Mode::Edge => Instance::SingleEdge { u, v, e: need(self.e, "e")? },
            Mode::Vertex => Instance::PrescribedVertex { u, v, z: need(self.z, "z")? },
            Mode::TwoEdge => Instance::TwoEdge { u, v, e: need(self.e, "e")?, f: need(self.f, "f")? },
            Mode::VertexEdge => Instance::VertexEdge { u, v, z: need(self.z, "z")?, e: need(self.e, "e")? },
            Mode::Cycle3 => unreachable!(),
        }))
    }
}

fn load(file: &Path) -> Result<PlaneGraph> {
    let text = fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    Ok(PlaneGraph::parse(&text)?)
}

fn run_job(engine: &Engine, g: &PlaneGraph, job: &Job) -> Result<TutteResult> {
    Ok(match job {
        Job::Path(inst) => engine.run(g, inst)?,
        Job::Cycle([e, f, h]) => engine.long_cycle_three_edges(g, *e, *f, *h)?,
    })
}

fn print_result(r: &TutteResult) {
    let ids: Vec<String> = r.path.iter().map(|v| v.to_string()).collect();
    match &r.cycle {
        Some(c) => {
            println!("cycle: {}", ids.join(" "));
            println!(
                "length {} bound {} {}{}",
                c.length,
                c.length_bound,
                if c.bound_holds { "holds" } else { "fails" },
                if c.degenerate { " (degenerate)" } else { "" }
            );
        }
        None => {
            println!("path: {}", ids.join(" "));
            println!("{}", r.report);
        }
    }
}

#[derive(Serialize)]
struct Validation {
    n: usize,
    edges: usize,
    outer: Vec<Vid>,
    circuit_graph: bool,
    reason: Option<NotCircuit>,
    profile: ConnectivityProfile,
}

fn validate(file: &Path) -> Result<ExitCode> {
    let g = match load(file) {
        Ok(g) => g,
        Err(e) => {
            println!("invalid: {e:#}");
            return Ok(ExitCode::FAILURE);
        }
    };
    let check = circuit_check(&g);
    let v = Validation {
        n: g.n(),
        edges: g.edge_count(),
        outer: g.outer_walk().to_vec(),
        circuit_graph: check.is_ok(),
        reason: check.err(),
        profile: connectivity_profile(&g),
    };
    println!("{}", serde_json::to_string_pretty(&v)?);
    Ok(if v.circuit_graph { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

#[derive(Serialize)]
struct Verification<'a> {
    result: &'a TutteResult,
    measures_agree: bool,
    oracle: Option<OracleReport>,
}

fn verify(args: &PathArgs, with_oracle: bool) -> Result<ExitCode> {
    let g = load(&args.file)?;
    let job = args.job()?;
    let r = run_job(&Engine::new().verify(true), &g, &job)?;
    let measures_agree = match &job {
        Job::Path(inst) => bound_report(&g, inst, &r.path)? == r.report,
        Job::Cycle(_) => true,
    };
    let oracle = if with_oracle {
        let o = Oracle::default();
        Some(match &job {
            Job::Path(inst) => o.verify_instance("cli", &g, inst, Some((&r.path, &r.report)))?,
            Job::Cycle(edges) => {
                // The engine reads the chosen face as the outer cycle.
                let face = &r.cycle.as_ref().expect("cycle report").face;
                let h = g.with_outer_dart((face[0], face[1]))?;
                o.verify_cycle("cli", &h, *edges, Some(&r.path))?
            }
        })
    } else {
        None
    };
    let ok = measures_agree
        && match (&oracle, &r.cycle) {
            (Some(o), None) => o.engine_path_valid && o.engine_bound_satisfied && o.report_agrees,
            (Some(o), Some(_)) => o.engine_path_valid,
            (None, _) => true,
        };
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&Verification { result: &r, measures_agree, oracle: oracle.clone() })?
        );
    } else {
        print_result(&r);
        println!("measures agree: {measures_agree}");
        if let Some(o) = &oracle {
            println!(
                "oracle: {} valid paths, least bridge count {:?}, engine path valid {}",
                o.valid_paths, o.min_bridge_count, o.engine_path_valid
            );
        }
        println!("{}", if ok { "ok" } else { "MISMATCH" });
    }
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn run_stress(cfg: StressConfig, out: &Path, json: bool) -> Result<ExitCode> {
    let s = stress(&cfg);
    if !s.failures.is_empty() {
        fs::create_dir_all(out).with_context(|| format!("creating {}", out.display()))?;
        for f in &s.failures {
            fs::write(out.join(format!("{}.graph", f.id)), &f.graph)?;
            fs::write(out.join(format!("{}.json", f.id)), serde_json::to_string_pretty(f)?)?;
        }
    }
    if json {
        println!("{}", serde_json::to_string_pretty(&s)?);
    } else {
        println!("graphs {} cases {} oracle-checked {}", s.graphs, s.total_cases(), s.oracle_checked);
        for (op, c) in &s.cases {
            println!("  {op}: {c}");
        }
        println!("violations {}", s.violations);
        for f in &s.failures {
            println!("  {} {}: {}", f.id, f.op, f.reason);
        }
        if !s.failures.is_empty() {
            println!("failing instances written to {}", out.display());
        }
    }
    Ok(if s.clean() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn main() -> ExitCode {
    match real_main() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn real_main() -> Result<ExitCode> {
    match Cli::parse().cmd {
        Cmd::Validate { file } => validate(&file),
        Cmd::Path(args) => {
            let g = load(&args.file)?;
            let r = run_job(&Engine::new(), &g, &args.job()?)?;
            if args.json {
                println!("{}", serde_json::to_string_pretty(&r)?);
            } else {
                print_result(&r);
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify { args, oracle } => verify(&args, oracle),
        Cmd::Gen { family, n, seed, output } => {
            let text = generate(&GeneratorSpec { family, n, seed })?.to_text();
            match output {
                Some(p) => fs::write(&p, text).with_context(|| format!("writing {}", p.display()))?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Stress { nmax, count, seed, families, per_op, out, mutation, json } => {
            if nmax < 3 {
                bail!("--nmax must be at least 3");
            }
            let mut cfg = StressConfig::new(nmax, count, seed);
            if !families.is_empty() {
                cfg.families = families;
            }
            cfg.per_op = per_op;
            if let Some(m) = mutation {
                cfg.measurer = Measurer::mutated(m.into());
            }
            run_stress(cfg, &out, json)
        }
    }
}
