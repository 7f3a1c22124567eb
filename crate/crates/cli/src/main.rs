use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;

use commands::CliError;

#[derive(Parser, Debug)]
#[command(
    name = "cforce",
    version,
    about = "Zero forcing and connected forcing numbers"
)]
struct Cli {
    /// Cap the number of worker threads.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a graph family as an edge list.
    Gen {
        /// path, cycle, complete, star, hypercube, torus, flower_snark,
        /// pendant_path, pendant_cycle, or random_tree
        family: String,
        params: Vec<String>,
        /// Seed for random_tree.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Connected forcing number.
    Fc {
        /// Edge-list file, or `-` for standard input.
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        #[arg(long)]
        witness: bool,
        /// Print every minimum connected forcing set (exhaustive search).
        #[arg(long)]
        all: bool,
        /// Print the forcing trace of the witness.
        #[arg(long)]
        trace: bool,
        /// Maximum number of candidate sets to test.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Forcing number.
    F {
        input: PathBuf,
        #[arg(long)]
        witness: bool,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// List all minimum (connected) forcing sets.
    Sets {
        input: PathBuf,
        #[arg(long, conflicts_with = "plain", required_unless_present = "plain")]
        connected: bool,
        #[arg(long)]
        plain: bool,
        #[arg(long, required = true)]
        min: bool,
    },
    /// Forcing spread of a vertex.
    Spread {
        input: PathBuf,
        vertex: usize,
        #[arg(long)]
        connected: bool,
    },
    /// Structural report: R-sets, leaves, articulation points, blocks, reduced graph.
    Info { input: PathBuf },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
    },
    /// Enumeration reports for open questions.
    Explore {
        #[arg(value_enum)]
        question: QuestionArg,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Auto,
    Brute,
    Structural,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Trees,
    Clique,
    Extremal,
    Snark,
    Bounds,
    Spreads,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum QuestionArg {
    #[value(name = "fc-2")]
    FcTwo,
    #[value(name = "fc-3")]
    FcThree,
    #[value(name = "fc-n-2")]
    FcNMinusTwo,
    #[value(name = "fc-n-3")]
    FcNMinusThree,
    Containment,
    #[value(name = "r2-converse")]
    R2Converse,
}

fn read_input(path: &PathBuf) -> Result<String, CliError> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(path)?;
    }
    Ok(text)
}

fn dispatch(cli: Cli) -> Result<String, CliError> {
    use cforce::explore::Question;
    use cforce::verify::Suite;

    match cli.command {
        Command::Gen {
            family,
            params,
            seed,
        } => commands::gen(&family, &params, seed),
        Command::Fc {
            input,
            method,
            witness,
            all,
            trace,
            budget,
        } => {
            let g = commands::parse_graph(&read_input(&input)?)?;
            commands::fc(&g, method, witness, all, trace, budget)
        }
        Command::F {
            input,
            witness,
            all,
            trace,
            budget,
        } => {
            let g = commands::parse_graph(&read_input(&input)?)?;
            commands::f(&g, witness, all, trace, budget)
        }
        Command::Sets {
            input, connected, ..
        } => {
            let g = commands::parse_graph(&read_input(&input)?)?;
            commands::sets(&g, connected)
        }
        Command::Spread {
            input,
            vertex,
            connected,
        } => {
            let g = commands::parse_graph(&read_input(&input)?)?;
            commands::spread(&g, vertex, connected)
        }
        Command::Info { input } => {
            let g = commands::parse_graph(&read_input(&input)?)?;
            commands::info(&g)
        }
        Command::Verify { suite } => {
            let suites: Vec<Suite> = match suite {
                SuiteArg::Trees => vec![Suite::Trees],
                SuiteArg::Clique => vec![Suite::Clique],
                SuiteArg::Extremal => vec![Suite::Extremal],
                SuiteArg::Snark => vec![Suite::Snark],
                SuiteArg::Bounds => vec![Suite::Bounds],
                SuiteArg::Spreads => vec![Suite::Spreads],
                SuiteArg::All => Suite::ALL.to_vec(),
            };
            commands::verify(&suites)
        }
        Command::Explore { question, max_n } => {
            let q = match question {
                QuestionArg::FcTwo => Question::FcTwo,
                QuestionArg::FcThree => Question::FcThree,
                QuestionArg::FcNMinusTwo => Question::FcNMinusTwo,
                QuestionArg::FcNMinusThree => Question::FcNMinusThree,
                QuestionArg::Containment => Question::Containment,
                QuestionArg::R2Converse => Question::R2Converse,
            };
            Ok(cforce::explore::explore(q, max_n)?.to_string())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(k) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    let (code, out) = match dispatch(cli) {
        Ok(out) => (0, out),
        Err(CliError::VerifyFailed(out)) => (3, out),
        Err(e) => {
            eprintln!("error: {e}");
            (e.exit_code(), String::new())
        }
    };
    let mut stdout = io::stdout().lock();
    let _ = stdout.write_all(out.as_bytes());
    let _ = stdout.flush();
    ExitCode::from(code)
}
