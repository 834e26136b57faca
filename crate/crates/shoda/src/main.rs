use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use shoda::run::{run, Command, Format, RunConfig, DEFAULT_MAX_ORDER, EXIT_INVALID, EXIT_OK};

/// Wedderburn decompositions, primitive central idempotents and strong Shoda
/// pairs of semisimple group algebras F_q G.
#[derive(Parser)]
#[command(name = "shoda", version)]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand)]
enum Sub {
    /// Print the Wedderburn decomposition of F_q G.
    Decompose(GroupArgs),
    /// List the strong Shoda pairs S(G) with their components.
    ShodaPairs(GroupArgs),
    /// Print the primitive central idempotents e_C(G,A,D).
    Idempotents(GroupArgs),
    /// Compare against the centre-splitting oracle.
    Verify(GroupArgs),
    /// List the built-in groups.
    Families {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    Oracle,
}

#[derive(Args)]
struct GroupArgs {
    /// perm:(1 2 3);(1 2), pc:orders=[..];pow:..;conj:.., or a family name such as Q8 or G:3@p=5
    #[arg(long)]
    group: String,
    /// Prime power coprime to |G|.
    #[arg(long)]
    q: u64,
    #[arg(long)]
    json: bool,
    /// Append the description of Aut(F_q G).
    #[arg(long)]
    aut: bool,
    #[arg(long)]
    idempotents: bool,
    #[arg(long, value_enum)]
    verify: Option<Check>,
    /// Worker threads; overrides SHODA_THREADS.
    #[arg(long)]
    threads: Option<usize>,
    /// Largest group order accepted.
    #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
    max_order: usize,
}

fn config(command: Command, a: GroupArgs) -> RunConfig {
    let mut cfg = RunConfig::new(command, &a.group, a.q);
    cfg.emit_idempotents |= a.idempotents;
    cfg.emit_aut = a.aut;
    cfg.verify_oracle |= a.verify.is_some();
    cfg.format = if a.json { Format::Json } else { Format::Text };
    cfg.threads = a.threads;
    cfg.max_order = a.max_order;
    cfg
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INVALID as u8 } else { EXIT_OK as u8 });
        }
    };
    let cfg = match cli.command {
        Sub::Decompose(a) => config(Command::Decompose, a),
        Sub::ShodaPairs(a) => config(Command::ShodaPairs, a),
        Sub::Idempotents(a) => config(Command::Idempotents, a),
        Sub::Verify(a) => config(Command::Verify, a),
        Sub::Families { json } => {
            let mut cfg = RunConfig::new(Command::Families, "", 0);
            cfg.format = if json { Format::Json } else { Format::Text };
            cfg
        }
    };
    let outcome = run(&cfg);
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
