//! Command-line front end for the exact Verlinde / twisted K-theory
//! engines. Exit codes: 0 success, 1 verification failure, 2 usage error.

mod render;

use clap::{Parser, Subcommand, ValueEnum};
use std::process::ExitCode;

use verlinde_core::finite_sector::{kgg_ring, FiniteAbelianGroup};
use verlinde_core::fusion::{FusionRing, SMatrix};
use verlinde_core::induction::induce_monomial;
use verlinde_core::rep_ring::RepRingElem;
use verlinde_core::theorem::verify_range;
use verlinde_core::twisted_k::{MvMap, Twist};

#[derive(Parser)]
#[command(
    name = "verlinde",
    version,
    about = "Exact fusion rings and twisted equivariant K-theory of SU(2)"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the level-k fusion ring of SU(2).
    Fusion {
        /// Level k >= 0.
        #[arg(long, allow_negative_numbers = true)]
        level: u32,
    },
    /// Print the twisted equivariant K-theory ring at twist m.
    TwistedK {
        /// Twisting multiple m >= 1.
        #[arg(long, allow_negative_numbers = true, value_parser = clap::value_parser!(u32).range(1..))]
        twist: u32,
    },
    /// Check the fusion ring against the K-theory quotient for every level
    /// up to the bound; exits 1 on any mismatch.
    Verify {
        /// Highest level to check.
        #[arg(long, allow_negative_numbers = true)]
        max_level: u32,
    },
    /// Holomorphically induce a sum of torus weights up to SU(2).
    Induce {
        /// Weight exponents; the input is the sum of the monomials a^n.
        #[arg(required = true, allow_negative_numbers = true)]
        exponents: Vec<i64>,
    },
    /// Print the level-k modular S-matrix to 12 decimal places.
    Smatrix {
        /// Level k >= 0.
        #[arg(long, allow_negative_numbers = true)]
        level: u32,
    },
    /// Print the level-0 equivariant K-theory ring of a finite abelian
    /// group acting on itself.
    Finite {
        /// A cyclic factor Z/n with n >= 2; repeat for product groups.
        #[arg(long = "cyclic", required = true, value_parser = clap::value_parser!(u32).range(2..))]
        cyclic: Vec<u32>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.format == Format::Json;
    match cli.command {
        Command::Fusion { level } => {
            let ring = FusionRing::new(level);
            print_line(if json {
                render::fusion_json(&ring)
            } else {
                render::fusion_text(&ring)
            });
        }
        Command::TwistedK { twist } => {
            let quotient = MvMap::new(Twist::new(twist)).cokernel();
            print_line(if json {
                render::twisted_json(&quotient)
            } else {
                render::twisted_text(&quotient)
            });
        }
        Command::Verify { max_level } => {
            let reports = verify_range(max_level);
            print_line(if json {
                render::verify_json(&reports)
            } else {
                render::verify_text(&reports)
            });
            if reports.iter().any(|r| !r.verdict) {
                return ExitCode::from(1);
            }
        }
        Command::Induce { exponents } => {
            let image = exponents
                .iter()
                .fold(RepRingElem::zero(), |acc, &n| &acc + &induce_monomial(n));
            print_line(if json {
                render::induce_json(&image)
            } else {
                render::induce_text(&image)
            });
        }
        Command::Smatrix { level } => {
            let s = SMatrix::new(level);
            print_line(if json {
                render::smatrix_json(&s)
            } else {
                render::smatrix_text(&s)
            });
        }
        Command::Finite { cyclic } => {
            let ring = kgg_ring(FiniteAbelianGroup::new(&cyclic));
            print_line(if json {
                render::finite_json(&ring)
            } else {
                render::finite_text(&ring)
            });
        }
    }
    ExitCode::SUCCESS
}

/// Writes the payload with a trailing newline, swallowing broken-pipe
/// errors so `verlinde ... | head` ends quietly instead of panicking.
fn print_line(out: String) {
    use std::io::Write;
    let _ = writeln!(std::io::stdout().lock(), "{out}");
}
