use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use rainbow_cli::format::{
    read_colouring, read_digraph, write_colouring, write_digraph, write_file, Colouring,
    FormatError,
};
use rainbow_cli::generate::{self, Request};
use rainbow_cli::reproduce::{self, Config, Tag};
use rainbow_core::families::Lemma5;
use rainbow_core::solver::{compute, Witness};
use rainbow_core::verify::{check_rc, check_rvc, check_src, check_srvc};
use rainbow_core::{Error, Parameter, SolveOptions, Verdict};

const EXIT_INVALID: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_NOT_STRONG: u8 = 3;
const EXIT_INCONCLUSIVE: u8 = 4;

/// Rainbow (vertex-)connection numbers of strongly connected digraphs.
#[derive(Parser)]
#[command(name = "rainbow", version)]
struct Cli {
    /// Solver worker threads.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Seed for random families and sampled tables.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Wall-clock limit per solver call.
    #[arg(long, global = true, value_name = "SECS")]
    time_limit: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute rvc, srvc, rc or src of a digraph file.
    Compute {
        input: PathBuf,
        #[arg(long, default_value = "rvc")]
        param: Parameter,
        /// Write the optimal colouring to this file.
        #[arg(long)]
        witness: Option<PathBuf>,
        /// Largest palette size to try.
        #[arg(long)]
        max_budget: Option<usize>,
        /// Search node limit per palette size.
        #[arg(long)]
        max_nodes: Option<u64>,
    },
    /// Check a colouring file against a digraph file.
    Verify {
        digraph: PathBuf,
        colouring: PathBuf,
        #[arg(long)]
        mode: Parameter,
    },
    /// Write a family instance and optionally one of its colourings.
    Generate(GenerateArgs),
    /// Check closed-form values against the solver and write a CSV table.
    Reproduce {
        /// One of bior-table, directed-cycles, cycle-subdigraphs, circulant,
        /// tournaments, lemma5, lemma6, bounds-chain.
        tag: Tag,
        #[arg(long)]
        min_n: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
        /// Largest order given to the exact solver for the costly parameters.
        #[arg(long)]
        solver_max_n: Option<usize>,
        /// Random instances for the sampled tables.
        #[arg(long)]
        samples: Option<usize>,
        /// CSV destination; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    leaves: Option<usize>,
    #[arg(long)]
    which: Option<Lemma5>,
    #[arg(long, value_delimiter = ',')]
    sizes: Vec<usize>,
    #[arg(long, value_delimiter = ',')]
    asym: Vec<usize>,
    #[arg(long, value_delimiter = ',')]
    jumps: Vec<usize>,
    #[arg(long)]
    density: Option<f64>,
    /// Constructive colouring to write next to the digraph.
    #[arg(long)]
    colouring: Option<String>,
    #[arg(long)]
    out: PathBuf,
    /// Colouring destination; `<out>.col` when omitted.
    #[arg(long)]
    colouring_out: Option<PathBuf>,
}

fn fail(code: u8, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(code)
}

fn core_failure(e: Error) -> ExitCode {
    match e {
        Error::NotStronglyConnected | Error::Unreachable { .. } => fail(EXIT_NOT_STRONG, e),
        e => fail(EXIT_INPUT, e),
    }
}

fn format_failure(e: FormatError) -> ExitCode {
    match e {
        FormatError::Digraph(e) => core_failure(e),
        e => fail(EXIT_INPUT, e),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let time_limit = match cli.time_limit {
        Some(s) if !(s.is_finite() && s > 0.0) => {
            return fail(EXIT_INPUT, "--time-limit must be a positive number")
        }
        s => s.map(Duration::from_secs_f64),
    };
    let opts = SolveOptions {
        threads: cli.threads.max(1),
        time_limit,
        ..SolveOptions::default()
    };
    match cli.command {
        Command::Compute {
            input,
            param,
            witness,
            max_budget,
            max_nodes,
        } => {
            let opts = SolveOptions {
                max_budget,
                max_nodes,
                ..opts
            };
            cmd_compute(&input, param, witness.as_deref(), &opts)
        }
        Command::Verify {
            digraph,
            colouring,
            mode,
        } => cmd_verify(&digraph, &colouring, mode),
        Command::Generate(args) => cmd_generate(args, cli.seed),
        Command::Reproduce {
            tag,
            min_n,
            max_n,
            solver_max_n,
            samples,
            out,
        } => {
            let cfg = Config {
                min_n,
                max_n,
                solver_max_n,
                samples,
                seed: cli.seed,
                threads: opts.threads,
                time_limit,
            };
            cmd_reproduce(tag, &cfg, out.as_deref())
        }
    }
}

fn join(colours: &[u32]) -> String {
    colours
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_compute(
    input: &Path,
    param: Parameter,
    witness_out: Option<&Path>,
    opts: &SolveOptions,
) -> ExitCode {
    let d = match read_digraph(input) {
        Ok(d) => d,
        Err(e) => return format_failure(e),
    };
    let diameter = match d.diameter() {
        Ok(x) => x,
        Err(e) => return core_failure(e),
    };
    let r = match compute(&d, param, opts) {
        Ok(r) => r,
        Err(e) => return core_failure(e),
    };
    let mut out = String::new();
    let mut line = |k: &str, v: String| {
        out.push_str(k);
        out.push('=');
        out.push_str(&v);
        out.push('\n');
    };
    line("parameter", param.name().to_string());
    line(
        "status",
        if r.is_exact() {
            "exact"
        } else {
            "inconclusive"
        }
        .to_string(),
    );
    line(
        "value",
        r.value().map_or("unknown".to_string(), |v| v.to_string()),
    );
    line("lower", r.lower.to_string());
    line("upper", r.upper.to_string());
    line("order", d.order().to_string());
    line("arcs", d.arc_count().to_string());
    line("diameter", diameter.to_string());
    line("colourings_tested", r.stats.colourings_tested.to_string());
    line("nodes_expanded", r.stats.nodes_expanded.to_string());
    if let Some(t) = r.stats.elapsed {
        line("elapsed_ms", t.as_millis().to_string());
    }
    if let Some(w) = &r.witness {
        line("witness", join(w.colours()));
    }
    print!("{out}");

    let exact = r.is_exact();
    if let (Some(path), Some(w)) = (witness_out, r.witness) {
        let c = match w {
            Witness::Vertex(c) => Colouring::Vertex(c),
            Witness::Arc(c) => Colouring::Arc(c),
        };
        if let Err(e) = write_file(path, &write_colouring(&c)) {
            return fail(EXIT_INPUT, e);
        }
    }
    if exact {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_INCONCLUSIVE)
    }
}

fn cmd_verify(digraph: &Path, colouring: &Path, mode: Parameter) -> ExitCode {
    let d = match read_digraph(digraph) {
        Ok(d) => d,
        Err(e) => return format_failure(e),
    };
    let c = match read_colouring(colouring) {
        Ok(c) => c,
        Err(e) => return format_failure(e),
    };
    let verdict = match (&c, mode) {
        (Colouring::Vertex(c), Parameter::Rvc) => check_rvc(&d, c),
        (Colouring::Vertex(c), Parameter::Srvc) => check_srvc(&d, c),
        (Colouring::Arc(c), Parameter::Rc) => check_rc(&d, c),
        (Colouring::Arc(c), Parameter::Src) => check_src(&d, c),
        (Colouring::Vertex(_), _) => return fail(EXIT_INPUT, "mode needs an arc colouring"),
        (Colouring::Arc(_), _) => return fail(EXIT_INPUT, "mode needs a vertex colouring"),
    };
    match verdict {
        Ok(Verdict::Valid) => {
            println!("VALID");
            ExitCode::SUCCESS
        }
        Ok(Verdict::Invalid { from, to }) => {
            println!("INVALID pair {from} {to}");
            ExitCode::from(EXIT_INVALID)
        }
        Err(e) => core_failure(e),
    }
}

fn cmd_generate(args: GenerateArgs, seed: u64) -> ExitCode {
    let req = Request {
        family: args.family,
        n: args.n,
        k: args.k,
        s: args.s,
        leaves: args.leaves,
        which: args.which,
        sizes: args.sizes,
        asym: args.asym,
        jumps: args.jumps,
        density: args.density,
        seed,
    };
    let d = match generate::build(&req) {
        Ok(d) => d,
        Err(e) => return fail(EXIT_INPUT, e),
    };
    let colouring = match args
        .colouring
        .as_deref()
        .map(|name| generate::colouring(&req, &d, name))
    {
        None => None,
        Some(Ok(c)) => Some(c),
        Some(Err(e)) => return fail(EXIT_INPUT, e),
    };
    if let Err(e) = write_file(&args.out, &write_digraph(&d)) {
        return fail(EXIT_INPUT, e);
    }
    println!("digraph={}", args.out.display());
    if let Some(c) = colouring {
        let path = args.colouring_out.unwrap_or_else(|| {
            let mut p = args.out.into_os_string();
            p.push(".col");
            p.into()
        });
        if let Err(e) = write_file(&path, &write_colouring(&c)) {
            return fail(EXIT_INPUT, e);
        }
        println!("colouring={}", path.display());
    }
    ExitCode::SUCCESS
}

fn cmd_reproduce(tag: Tag, cfg: &Config, out: Option<&Path>) -> ExitCode {
    let rows = match reproduce::run(tag, cfg) {
        Ok(rows) => rows,
        Err(e) => return core_failure(e),
    };
    let written = match out {
        Some(path) => std::fs::File::create(path)
            .map_err(csv::Error::from)
            .and_then(|f| reproduce::write_csv(&rows, io::BufWriter::new(f))),
        None => reproduce::write_csv(&rows, io::stdout().lock()),
    };
    if let Err(e) = written {
        return fail(EXIT_INPUT, e);
    }
    let count = |a| rows.iter().filter(|r| r.agree == a).count();
    let disagree = count(Some(false));
    let _ = writeln!(
        io::stderr(),
        "{tag}: rows={} agree={} disagree={disagree} n/a={}",
        rows.len(),
        count(Some(true)),
        count(None)
    );
    if disagree > 0 {
        ExitCode::from(EXIT_INVALID)
    } else {
        ExitCode::SUCCESS
    }
}
