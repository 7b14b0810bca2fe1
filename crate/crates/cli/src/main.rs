use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hypalg_cli::commands::{self, Output, SpinorView};
use hypalg_core::LorentzParams;

/// Hyperbolic-complex Clifford algebra calculator.
#[derive(Parser)]
#[command(name = "hypalg", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression.
    Eval {
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Rotate, then boost, a four-vector.
    Transform {
        /// Rapidity vector bx,by,bz.
        #[arg(long, allow_hyphen_values = true, default_value = "0,0,0", value_parser = triple)]
        boost: [f64; 3],
        /// Rotation vector ax,ay,az (axis times angle, radians).
        #[arg(long, allow_hyphen_values = true, default_value = "0,0,0", value_parser = triple)]
        rotate: [f64; 3],
        /// Components x0,x1,x2,x3.
        #[arg(long, allow_hyphen_values = true, value_parser = quad)]
        vector: [f64; 4],
        #[arg(long)]
        json: bool,
    },
    /// Components of the spinor of a unit spacelike vector.
    Spinor {
        #[command(flatten)]
        params: Params,
        #[arg(long, group = "view")]
        even: bool,
        #[arg(long, group = "view")]
        odd: bool,
        #[arg(long, group = "view")]
        column: bool,
        /// Compare against the closed-form component expressions.
        #[arg(long)]
        check: bool,
        #[arg(long)]
        json: bool,
    },
    /// Squared spinor product against the standard spinor, and the Mott factor.
    CrossSection {
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        json: bool,
    },
    /// Run the built-in identity suites.
    Verify,
}

#[derive(Args)]
struct Params {
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    phi: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    theta: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    xi: f64,
}

impl From<Params> for LorentzParams {
    fn from(p: Params) -> Self {
        LorentzParams::new(p.phi, p.theta, p.xi)
    }
}

fn list<const N: usize>(s: &str) -> Result<[f64; N], String> {
    let parts: Vec<f64> =
        s.split(',').map(|t| t.trim().parse::<f64>().map_err(|e| format!("{t:?}: {e}"))).collect::<Result<_, _>>()?;
    parts.try_into().map_err(|p: Vec<f64>| format!("expected {N} comma-separated numbers, got {}", p.len()))
}

fn triple(s: &str) -> Result<[f64; 3], String> {
    list(s)
}

fn quad(s: &str) -> Result<[f64; 4], String> {
    list(s)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Eval { expr, json } => commands::eval(&expr, json),
        Command::Transform { boost, rotate, vector, json } => commands::transform(boost, rotate, vector, json),
        Command::Spinor { params, odd, column, check, json, .. } => {
            let view = if odd {
                SpinorView::Odd
            } else if column {
                SpinorView::Column
            } else {
                SpinorView::Even
            };
            Ok(commands::spinor(params.into(), view, check, json))
        }
        Command::CrossSection { params, json } => commands::cross_section(params.into(), json),
        Command::Verify => Ok(commands::verify()),
    };
    match result {
        Ok(Output { stdout, code }) => {
            println!("{stdout}");
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("hypalg: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
