use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sta::cli::{self, GridMode, GridSpec};

#[derive(Parser)]
#[command(name = "sta", version, about = "Complexified spacetime algebra calculator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression such as "exp(0.5*e1*e2)*g0".
    Eval {
        expr: String,
        /// Also print the 4x4 complex matrix.
        #[arg(long)]
        matrix: bool,
    },
    /// Run the seeded identity suite and print the max residual per family.
    Identities {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        n: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Transition probability between the family states x (rapidity phi_x)
    /// and y (rapidity phi_y).
    #[command(allow_negative_numbers = true)]
    Prob { x1: f64, x2: f64, y1: f64, y2: f64, phi_x: f64, phi_y: f64 },
    /// Emit a probability surface over a rectangle of x.
    #[command(allow_negative_numbers = true)]
    Grid {
        #[arg(long, default_value_t = 1.0)]
        y1: f64,
        #[arg(long, default_value_t = 1.0)]
        y2: f64,
        /// Use y = x at every point instead of a fixed y.
        #[arg(long)]
        diagonal: bool,
        #[arg(long, default_value_t = 0.0)]
        phi_x: f64,
        #[arg(long, default_value_t = 0.0)]
        phi_y: f64,
        #[arg(long, default_value_t = -3.0)]
        x1_min: f64,
        #[arg(long, default_value_t = 3.0)]
        x1_max: f64,
        #[arg(long, default_value_t = -3.0)]
        x2_min: f64,
        #[arg(long, default_value_t = 3.0)]
        x2_max: f64,
        #[arg(long, default_value_t = 61)]
        steps: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Observables J, S, K, R and the Fierz report for a spinor given as
    /// re(phi1) im(phi1) ... re(phi4) im(phi4).
    #[command(allow_negative_numbers = true)]
    Observables {
        #[arg(num_args = 8, required = true)]
        reals: Vec<f64>,
    },
}

fn run(command: Command, out: &mut dyn Write) -> cli::CliResult {
    match command {
        Command::Eval { expr, matrix } => cli::cmd_eval(&expr, matrix, out),
        Command::Identities { seed, n, tol } => cli::cmd_identities(seed, n, tol, out),
        Command::Prob { x1, x2, y1, y2, phi_x, phi_y } => cli::cmd_prob([x1, x2], [y1, y2], phi_x, phi_y, out),
        Command::Grid {
            y1,
            y2,
            diagonal,
            phi_x,
            phi_y,
            x1_min,
            x1_max,
            x2_min,
            x2_max,
            steps,
            format,
            out: path,
        } => {
            let spec = GridSpec {
                mode: if diagonal { GridMode::Diagonal } else { GridMode::Fixed([y1, y2]) },
                phi_x,
                phi_y,
                x1_range: [x1_min, x1_max],
                x2_range: [x2_min, x2_max],
                steps,
            };
            cli::cmd_grid(&spec, matches!(format, Format::Json), path.as_deref(), out)
        }
        Command::Observables { reals } => {
            let reals: [f64; 8] = reals.try_into().expect("clap enforces eight values");
            cli::cmd_observables(reals, out)
        }
    }
}

fn main() -> ExitCode {
    let args = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = match run(args.command, &mut out) {
        Ok(()) => cli::exit::OK,
        Err(e) => {
            let _ = out.flush();
            eprintln!("sta: {e}");
            e.exit_code()
        }
    };
    if out.flush().is_err() && code == cli::exit::OK {
        return ExitCode::from(cli::exit::IO as u8);
    }
    ExitCode::from(code as u8)
}
