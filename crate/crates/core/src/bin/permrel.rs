use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use permrel::cli::{self, RunConfig, WpMode};

/// Monoids and groups presented by permutation relations of fixed length.
#[derive(Parser, Debug)]
#[command(name = "permrel", version)]
struct Args {
    /// Number of generators.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Relation length.
    #[arg(long, global = true)]
    l: Option<usize>,
    /// Generator of H in cycle notation, e.g. "(1 2 3)"; repeatable.
    #[arg(long = "perm", global = true)]
    perms: Vec<String>,
    #[arg(long, global = true)]
    length_bound: Option<usize>,
    /// Growth horizon for both the monoid and the group.
    #[arg(long, global = true)]
    mmax: Option<usize>,
    /// text or json.
    #[arg(long, global = true)]
    format: Option<String>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true)]
    depth: Option<usize>,
    /// File of key = value lines; flags given on the command line win.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Run independent checks on separate threads.
    #[arg(long, global = true)]
    parallel: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Orbits, representatives and hypothesis predicates of H.
    Classify,
    /// Run every structural check on the presentation.
    Verify,
    /// Growth of the monoid and the group.
    Growth,
    /// Decide whether two words are equal.
    Wp {
        u: String,
        v: String,
        /// monoid or group.
        #[arg(long, default_value = "group")]
        mode: String,
    },
    /// Print the coset table of F as tab-separated values.
    Cosets,
    /// Right reversibility of a submonoid of a free monoid, e.g. `reversible ab ba`.
    Reversible { words: Vec<String> },
}

fn build_config(args: &Args) -> permrel::Result<RunConfig> {
    let mut c = RunConfig::default();
    if let Some(path) = &args.config {
        let text = std::fs::read_to_string(path)
            .map_err(|e| permrel::Error::Config(format!("{}: {e}", path.display())))?;
        c.apply_file_text(&text)?;
    }
    let flags = [
        ("n", args.n.map(|v| v.to_string())),
        ("l", args.l.map(|v| v.to_string())),
        ("length_bound", args.length_bound.map(|v| v.to_string())),
        ("mmax", args.mmax.map(|v| v.to_string())),
        ("format", args.format.clone()),
        ("seed", args.seed.map(|v| v.to_string())),
        ("depth", args.depth.map(|v| v.to_string())),
    ];
    for (key, value) in flags {
        if let Some(v) = value {
            c.apply(key, &v)?;
        }
    }
    if !args.perms.is_empty() {
        c.perms = args.perms.clone();
    }
    if args.parallel {
        c.parallel = true;
    }
    Ok(c)
}

fn run(args: &Args) -> permrel::Result<i32> {
    let config = build_config(args)?;
    let report = match &args.command {
        Command::Classify => cli::cmd_classify(&config)?,
        Command::Verify => cli::cmd_verify(&config)?,
        Command::Growth => cli::cmd_growth(&config)?,
        Command::Wp { u, v, mode } => cli::cmd_wp(&config, u, v, mode.parse::<WpMode>()?)?,
        Command::Cosets => {
            let (report, tsv) = cli::cmd_cosets(&config)?;
            if config.format == cli::Format::Text {
                print!("{tsv}");
                return Ok(report.exit_code());
            }
            report
        }
        Command::Reversible { words } => cli::cmd_reversible(&config, words)?,
    };
    print!("{}", report.render(config.format));
    Ok(report.exit_code())
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&args) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
