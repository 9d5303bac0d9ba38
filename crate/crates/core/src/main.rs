use clap::{Parser, Subcommand};

use skeinrep::cli::{self, CliRequest};

#[derive(Parser)]
#[command(
    name = "skeinrep",
    version,
    about = "Exact computation in the torus braid-skein realization of the type-A double affine Hecke algebra"
)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate braid words (letters T<i>, x<i>, y<i>, g, optional
    /// ^<exponent>; the leftmost letter acts last) to normal form
    NormalForm {
        /// Number of strands
        #[arg(long)]
        kappa: usize,
        /// Emit structured JSON
        #[arg(long)]
        json: bool,
        /// Braid words
        #[arg(required = true)]
        words: Vec<String>,
    },
    /// Reduce polynomial classes to a multiple of the constant braid class
    Reduce {
        #[arg(long)]
        kappa: usize,
        #[arg(long)]
        json: bool,
        /// Cross-check against the linear-algebra oracle on this exponent box
        #[arg(long)]
        bound: Option<i64>,
        /// Polynomial expressions in x1..x<kappa> over Q(s,c)
        #[arg(required = true)]
        exprs: Vec<String>,
    },
    /// Evaluate the skein bilinear form on two classes
    Pair {
        #[arg(long)]
        kappa: usize,
        #[arg(long)]
        json: bool,
        lhs: String,
        rhs: String,
    },
    /// Compute nonsymmetric Macdonald polynomials for compositions like 0,1
    Macdonald {
        #[arg(long)]
        kappa: usize,
        #[arg(long)]
        json: bool,
        #[arg(required = true)]
        compositions: Vec<String>,
    },
    /// Run the exact identity suites
    Verify {
        #[arg(long)]
        kappa: usize,
        #[arg(long)]
        json: bool,
        /// One of hecke, conjugation, dimension, cherednik, uniqueness,
        /// macdonald, compiler, words, hermitian, or all
        #[arg(long, default_value = "all")]
        suite: String,
        /// Monomial window half-width
        #[arg(long, default_value_t = 2)]
        degree: i64,
    },
}

fn main() {
    let args = Args::parse();
    let request = match args.command {
        Command::NormalForm { kappa, json, words } => CliRequest {
            subcommand: cli::Subcommand::NormalForm,
            kappa,
            expressions: words,
            json,
            bound: None,
            degree: 0,
            suite: String::new(),
        },
        Command::Reduce {
            kappa,
            json,
            bound,
            exprs,
        } => CliRequest {
            subcommand: cli::Subcommand::Reduce,
            kappa,
            expressions: exprs,
            json,
            bound,
            degree: 0,
            suite: String::new(),
        },
        Command::Pair {
            kappa,
            json,
            lhs,
            rhs,
        } => CliRequest {
            subcommand: cli::Subcommand::Pair,
            kappa,
            expressions: vec![lhs, rhs],
            json,
            bound: None,
            degree: 0,
            suite: String::new(),
        },
        Command::Macdonald {
            kappa,
            json,
            compositions,
        } => CliRequest {
            subcommand: cli::Subcommand::Macdonald,
            kappa,
            expressions: compositions,
            json,
            bound: None,
            degree: 0,
            suite: String::new(),
        },
        Command::Verify {
            kappa,
            json,
            suite,
            degree,
        } => CliRequest {
            subcommand: cli::Subcommand::Verify,
            kappa,
            expressions: Vec::new(),
            json,
            bound: None,
            degree,
            suite,
        },
    };

    let report = cli::run(&request);
    print!("{}", cli::render(&request, &report));
    for d in &report.diagnostics {
        eprintln!("error: {d}");
    }
    std::process::exit(cli::exit_code(&report));
}
