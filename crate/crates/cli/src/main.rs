//! `ogtool`: OBRSK, chain exploration, ideal verification and fixture replay.
//!
//! Exit codes: 0 success, 2 input or validation error, 3 verification failure.

mod ideal_cmd;
mod input;
mod obrsk_cmd;
mod og_cmd;
mod replay;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "ogtool", version, about = "OBRSK and initial ideals of Richardson varieties in the orthogonal Grassmannian")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply or invert the correspondence on JSON input.
    #[command(subcommand)]
    Obrsk(ObrskCmd),
    /// Extended chains and their w elements.
    #[command(subcommand)]
    Og(OgCmd),
    /// Pfaffian generators, Hilbert counts and the main-theorem verifier.
    #[command(subcommand)]
    Ideal(IdealCmd),
    /// The worked five-column example.
    #[command(subcommand)]
    Fixture(FixtureCmd),
}

#[derive(Subcommand)]
pub enum ObrskCmd {
    /// Pair JSON to bitableau JSON.
    Apply {
        /// Read from this file instead of standard input.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Emit every intermediate state (negative pairs only).
        #[arg(long)]
        trace: bool,
    },
    /// Bitableau JSON to pair JSON.
    Invert {
        #[arg(long)]
        input: Option<PathBuf>,
    },
}

#[derive(Args, Clone)]
pub struct BetaArgs {
    #[arg(long)]
    pub d: u32,
    /// Comma-separated, e.g. 1,3,4,6,9.
    #[arg(long)]
    pub beta: String,
}

#[derive(Subcommand)]
pub enum OgCmd {
    /// List all extended chains in roots(β) with their sign split and w values.
    Chains {
        #[command(flatten)]
        at: BetaArgs,
        /// With --gamma, also report membership in Chains_α^γ(β).
        #[arg(long, requires = "gamma")]
        alpha: Option<String>,
        #[arg(long, requires = "alpha")]
        gamma: Option<String>,
    },
    /// w of one chain, given as "r,c;r,c;...".
    Wchain {
        #[command(flatten)]
        at: BetaArgs,
        #[arg(long)]
        chain: String,
    },
}

#[derive(Args, Clone)]
pub struct TripleArgs {
    #[arg(long)]
    pub d: u32,
    #[arg(long)]
    pub alpha: String,
    #[arg(long)]
    pub beta: String,
    #[arg(long)]
    pub gamma: String,
}

#[derive(Subcommand)]
pub enum IdealCmd {
    /// One Pfaffian per τ with α ≰ τ or τ ≰ γ, in canonical text form.
    Generators {
        #[command(flatten)]
        triple: TripleArgs,
    },
    /// Per degree: total monomials, initial monomials, standard monomials.
    Hilbert {
        #[command(flatten)]
        triple: TripleArgs,
        #[arg(long)]
        max_degree: u32,
    },
    /// Check in(I)_m against the chain-divisible monomials and the standard
    /// monomial basis up to a degree.
    VerifyMain {
        #[arg(long)]
        d: u32,
        #[arg(long, conflicts_with_all = ["alpha", "beta", "gamma"])]
        all_triples: bool,
        #[arg(long, required_unless_present = "all_triples")]
        alpha: Option<String>,
        #[arg(long, required_unless_present = "all_triples")]
        beta: Option<String>,
        #[arg(long, required_unless_present = "all_triples")]
        gamma: Option<String>,
        #[arg(long)]
        max_degree: u32,
        /// Worker threads; the report order does not depend on it.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Subcommand)]
pub enum FixtureCmd {
    /// Recompute every intermediate state and compare with the stored table.
    Replay,
}

/// How a command ended when it did not hit an input error.
pub enum Outcome {
    Ok,
    VerificationFailed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Obrsk(c) => obrsk_cmd::run(c),
        Command::Og(c) => og_cmd::run(c),
        Command::Ideal(c) => ideal_cmd::run(c),
        Command::Fixture(FixtureCmd::Replay) => replay::run(),
    };
    match result {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::VerificationFailed) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
