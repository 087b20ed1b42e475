//! Library half of the `lbit` binary: experiments produce uniform reports,
//! renderers make them byte-deterministic in three formats.

pub mod cli;
pub mod experiments;
pub mod render;
pub mod report;

use lbit::rational::CombineBranch;

use crate::cli::{BranchArg, Cli, Command};
use crate::report::Report;

/// Experiment outcome: the report plus whether the run counts as fully
/// successful (only `verify` can produce a well-formed report that still
/// signals failure).
pub struct RunOutput {
    pub report: Report,
    pub ok: bool,
}

pub fn run(cli: &Cli) -> lbit::Result<RunOutput> {
    let n_tot = cli.n_tot.unwrap_or_else(|| cli.command.default_n_tot());
    let (seed, samples) = (cli.seed, cli.samples);
    let (report, ok) = match &cli.command {
        Command::Verify => {
            let (report, ok) = experiments::verifycmd::run(n_tot, seed, samples)?;
            (report, ok)
        }
        Command::Pow { j, alpha } => (
            experiments::powcmd::run(
                &experiments::powcmd::PowArgs {
                    j: *j,
                    alpha: alpha.clone(),
                },
                n_tot,
                seed,
                samples,
            )?,
            true,
        ),
        Command::SgChain { orientations } => (
            experiments::sg::run(
                &experiments::sg::SgArgs {
                    orientations: orientations.clone(),
                },
                n_tot,
                seed,
                samples,
            )?,
            true,
        ),
        Command::Bell {
            cos_ab,
            cos_ab_prime,
            alpha1,
            j,
        } => (
            experiments::bell::run(
                &experiments::bell::BellArgs {
                    cos_ab: cos_ab.clone(),
                    cos_ab_prime: cos_ab_prime.clone(),
                    alpha1: alpha1.clone(),
                    j: *j,
                },
                n_tot,
                seed,
                samples,
            )?,
            true,
        ),
        Command::Ghz {
            alphas,
            j_shared,
            j_last,
        } => (
            experiments::ghz::run(
                &experiments::ghz::GhzArgs {
                    alphas: alphas.clone(),
                    j_shared: *j_shared,
                    j_last: *j_last,
                },
                n_tot,
                seed,
                samples,
            )?,
            true,
        ),
        Command::Precession { omega, t_max } => (
            experiments::precession::run(
                &experiments::precession::PrecessionArgs {
                    omega: omega.clone(),
                    t_max: *t_max,
                },
                n_tot,
                seed,
                samples,
            )?,
            true,
        ),
        Command::Niven { angle } => (
            experiments::niven::run(
                &experiments::niven::NivenArgs { angle: *angle },
                n_tot,
                seed,
                samples,
            )?,
            true,
        ),
        Command::Defined {
            cos1,
            cos2,
            branch,
            included_angle,
        } => (
            experiments::defined::run(
                &experiments::defined::DefinedArgs {
                    cos1: cos1.clone(),
                    cos2: cos2.clone(),
                    branch: match branch {
                        BranchArg::Sum => CombineBranch::Sum,
                        BranchArg::Difference => CombineBranch::Difference,
                    },
                    included_angle: *included_angle,
                },
                n_tot,
                seed,
                samples,
            )?,
            true,
        ),
    };
    Ok(RunOutput { report, ok })
}
