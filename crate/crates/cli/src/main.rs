use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use monocycle::{FieldSpec, MonomialIdeal};

mod commands;
mod report;

#[derive(Parser)]
#[command(name = "monocycle", version, about = "Monomial cycles in Koszul homology of monomial quotient rings")]
struct Cli {
    /// Characteristic of the coefficient field (0 for the rationals).
    #[arg(long = "char", global = true, default_value_t = 0)]
    characteristic: u64,
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for independent strand and inclusion checks.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct IdealArg {
    /// Ideal file: `n=<count>` header, then one monomial per line.
    #[arg(long)]
    ideal: PathBuf,
}

impl IdealArg {
    fn load(&self) -> anyhow::Result<MonomialIdeal> {
        read_ideal(&self.ideal)
    }
}

fn read_ideal(path: &Path) -> anyhow::Result<MonomialIdeal> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    monocycle::io::parse_ideal(&text).with_context(|| format!("in {}", path.display()))
}

#[derive(Subcommand)]
enum Command {
    /// Minimal generators of the boundary ideal at σ.
    BoundaryIdeal {
        #[command(flatten)]
        ideal: IdealArg,
        /// Comma-separated 1-based indices, e.g. `1,2`.
        #[arg(long)]
        sigma: String,
    },
    /// Whether the monomial cycle u·e_σ is a boundary.
    IsBoundary {
        #[command(flatten)]
        ideal: IdealArg,
        #[arg(long)]
        monomial: String,
        #[arg(long)]
        sigma: String,
        /// Also print a preimage chain when one exists.
        #[arg(long)]
        witness: bool,
    },
    /// Multigraded Koszul homology dimensions.
    Homology {
        #[command(flatten)]
        ideal: IdealArg,
        /// Restrict to one homological degree.
        #[arg(long)]
        p: Option<usize>,
        /// Restrict to one multidegree, e.g. `1,1,1,0`.
        #[arg(long)]
        multidegree: Option<String>,
    },
    /// Total Betti numbers β_1..β_n.
    Betti {
        #[command(flatten)]
        ideal: IdealArg,
    },
    /// Golod test for ideals in four variables.
    Golod4 {
        #[command(flatten)]
        ideal: IdealArg,
    },
    /// Whether all products of monomial cycles are boundaries.
    Monprod {
        #[command(flatten)]
        ideal: IdealArg,
    },
    /// Ranks of the homology product H_p ⊗ H_q → H_{p+q}.
    Pairing {
        #[command(flatten)]
        ideal: IdealArg,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
    },
    /// Ideals generated by permutation orbits of partitions.
    #[command(subcommand)]
    Symmetric(SymmetricCommand),
    /// Ideals with linear quotients.
    #[command(subcommand)]
    Linquot(LinquotCommand),
    /// Simplicial matroids of the sign matrices.
    #[command(subcommand)]
    Matroid(MatroidCommand),
    /// Run the built-in fixture corpus.
    Selftest,
}

#[derive(Subcommand)]
enum SymmetricCommand {
    /// Partition conditions per homological degree.
    Vp {
        /// Partitions separated by `;`, e.g. `3,0,0,0;2,1,0,0`.
        #[arg(long)]
        lambdas: String,
        #[arg(long)]
        p: Option<usize>,
    },
    /// Golod verdict for the orbit of a single partition.
    Principal {
        #[arg(long)]
        lambda: String,
    },
    /// Whether the symmetric ideal is symmetric shifted.
    Shifted {
        #[arg(long)]
        lambdas: String,
    },
}

#[derive(Subcommand)]
enum LinquotCommand {
    /// Monomial basis of Koszul homology, with a verification summary.
    Basis {
        #[command(flatten)]
        ideal: IdealArg,
    },
    /// Order, regularity and nice-lift status.
    Check {
        #[command(flatten)]
        ideal: IdealArg,
    },
    /// Betti numbers from the iterated mapping cone.
    Betti {
        #[command(flatten)]
        ideal: IdealArg,
    },
}

#[derive(Subcommand)]
enum MatroidCommand {
    /// Circuits of the row matroid of M(n,p) through σ.
    Circuits {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        sigma: String,
    },
}

/// Outcome of a command that succeeded in computing an answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Holds,
    Fails,
}

impl Status {
    fn from_bool(holds: bool) -> Self {
        if holds {
            Status::Holds
        } else {
            Status::Fails
        }
    }
}

pub struct Ctx {
    pub field: FieldSpec,
    pub json: bool,
}

fn run(cli: Cli) -> anyhow::Result<Status> {
    if let Some(k) = cli.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(k).build_global().context("configuring worker pool")?;
    }
    let ctx = Ctx { field: FieldSpec::new(cli.characteristic)?, json: cli.json };
    use commands as c;
    match cli.command {
        Command::BoundaryIdeal { ideal, sigma } => c::boundary_ideal(&ctx, ideal.load()?, &sigma),
        Command::IsBoundary { ideal, monomial, sigma, witness } => {
            c::is_boundary(&ctx, ideal.load()?, &monomial, &sigma, witness)
        }
        Command::Homology { ideal, p, multidegree } => c::homology(&ctx, ideal.load()?, p, multidegree.as_deref()),
        Command::Betti { ideal } => c::betti(&ctx, ideal.load()?),
        Command::Golod4 { ideal } => c::golod4(&ctx, ideal.load()?),
        Command::Monprod { ideal } => c::monprod(&ctx, ideal.load()?),
        Command::Pairing { ideal, p, q } => c::pairing(&ctx, ideal.load()?, p, q),
        Command::Symmetric(SymmetricCommand::Vp { lambdas, p }) => c::symmetric_vp(&ctx, &lambdas, p),
        Command::Symmetric(SymmetricCommand::Principal { lambda }) => c::symmetric_principal(&ctx, &lambda),
        Command::Symmetric(SymmetricCommand::Shifted { lambdas }) => c::symmetric_shifted(&ctx, &lambdas),
        Command::Linquot(LinquotCommand::Basis { ideal }) => c::linquot_basis(&ctx, ideal.load()?),
        Command::Linquot(LinquotCommand::Check { ideal }) => c::linquot_check(&ctx, ideal.load()?),
        Command::Linquot(LinquotCommand::Betti { ideal }) => c::linquot_betti(&ctx, ideal.load()?),
        Command::Matroid(MatroidCommand::Circuits { n, p, sigma }) => c::matroid_circuits(&ctx, n, p, &sigma),
        Command::Selftest => c::selftest(&ctx),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Status::Holds) => ExitCode::SUCCESS,
        Ok(Status::Fails) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
