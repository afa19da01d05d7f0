//! Exact verification suites with structured reports.
//!
//! Every suite is deterministic in `(seed, trials)`: parameter tuples are
//! drawn serially from a per-suite stream, the checks run in parallel, and
//! reports are collected in relation-then-tuple order.

pub mod actions;
pub mod expr;
pub mod pararacah;
pub mod relations;
pub mod report;
pub mod sample;
pub mod structural;

use std::fmt;
use std::str::FromStr;

pub use actions::{verify_sklyanin_representation, verify_wilson_bispectral};
pub use expr::{eval_expr, relation_residual, Env, Value};
pub use pararacah::{
    bareiss_solve, solve_discrete_weights, verify_para_racah, verify_truncation, DEFAULT_PARA_RACAH_N,
};
pub use relations::{verify_appendix, verify_casimirs, verify_sheun, verify_stab, RelationSpec};
pub use report::{render, CorrectionOutcome, Format, Status, VerificationReport};
pub use sample::Sampler;
pub use structural::verify_rains;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Sheun,
    Stab,
    Appendix,
    Universal,
    Sklyanin,
    Casimir,
    Rains,
    Wilson,
    Representation,
    ParaRacah,
    Truncation,
    All,
}

impl Suite {
    /// Every concrete suite, in the order `All` runs them.
    pub const CONCRETE: [Suite; 11] = [
        Suite::Sheun,
        Suite::Stab,
        Suite::Appendix,
        Suite::Universal,
        Suite::Sklyanin,
        Suite::Casimir,
        Suite::Rains,
        Suite::Wilson,
        Suite::Representation,
        Suite::ParaRacah,
        Suite::Truncation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Sheun => "sheun",
            Suite::Stab => "stab",
            Suite::Appendix => "appendix",
            Suite::Universal => "universal",
            Suite::Sklyanin => "sklyanin",
            Suite::Casimir => "casimir",
            Suite::Rains => "rains",
            Suite::Wilson => "wilson",
            Suite::Representation => "representation",
            Suite::ParaRacah => "pararacah",
            Suite::Truncation => "truncation",
            Suite::All => "all",
        }
    }

    /// The random stream reserved for this suite.
    pub fn stream(self) -> u64 {
        Suite::CONCRETE
            .iter()
            .position(|s| *s == self)
            .unwrap_or(Suite::CONCRETE.len()) as u64
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Suite::CONCRETE
            .iter()
            .chain([&Suite::All])
            .find(|suite| suite.name() == s)
            .copied()
            .ok_or_else(|| {
                let names: Vec<_> = Suite::CONCRETE.iter().map(|s| s.name()).collect();
                format!("unknown suite `{s}` (expected one of {}, all)", names.join(", "))
            })
    }
}

/// Sampling and size controls shared by all suites.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub trials: usize,
    pub seed: u64,
    /// Highest degree for the Wilson and representation suites.
    pub n_max: Option<usize>,
    /// A single lattice size for the para-Racah and truncation suites.
    pub big_n: Option<usize>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            trials: 5,
            seed: 0,
            n_max: None,
            big_n: None,
        }
    }
}

pub const DEFAULT_WILSON_N_MAX: usize = 8;
pub const DEFAULT_REPRESENTATION_N_MAX: usize = 6;
pub const DEFAULT_TRUNCATION_N_MAX: usize = 8;

/// Relation suites driven by a table: stab, appendix, universal, sklyanin.
/// Other suites are dispatched to their own operations.
pub fn verify_relation_set(suite: Suite, trials: usize, seed: u64) -> Vec<VerificationReport> {
    run_suite(
        suite,
        &VerifyConfig {
            trials,
            seed,
            ..VerifyConfig::default()
        },
    )
}

/// Runs one suite, or all of them in order.
pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Vec<VerificationReport> {
    let trials = cfg.trials.max(1);
    let seed = cfg.seed;
    let stream = suite.stream();
    match suite {
        Suite::Sheun => verify_sheun(trials, seed),
        Suite::Stab => verify_stab(),
        Suite::Appendix => verify_appendix(),
        Suite::Universal => {
            let mut out = relations::verify_universal_relations(trials, seed, stream);
            out.extend(structural::verify_structural(trials, seed, stream | 1 << 32));
            out
        }
        Suite::Sklyanin => relations::verify_sklyanin_relations(trials, seed, stream),
        Suite::Casimir => relations::verify_casimirs_on(trials, seed, stream),
        Suite::Rains => structural::verify_rains_on(trials, seed, stream),
        Suite::Wilson => {
            actions::verify_wilson_on(cfg.n_max.unwrap_or(DEFAULT_WILSON_N_MAX).max(1), trials, seed, stream)
        }
        Suite::Representation => actions::verify_representation_on(
            cfg.n_max.unwrap_or(DEFAULT_REPRESENTATION_N_MAX).max(1),
            trials,
            seed,
            stream,
        ),
        Suite::ParaRacah => {
            let sizes: Vec<usize> = match cfg.big_n {
                Some(n) => vec![n],
                None => DEFAULT_PARA_RACAH_N.to_vec(),
            };
            sizes
                .into_iter()
                .flat_map(|n| pararacah::verify_para_racah_on(n, trials, seed, stream))
                .collect()
        }
        Suite::Truncation => {
            let sizes: Vec<usize> = match cfg.big_n {
                Some(n) => vec![n],
                None => (1..=DEFAULT_TRUNCATION_N_MAX).collect(),
            };
            sizes.into_iter().flat_map(verify_truncation).collect()
        }
        Suite::All => Suite::CONCRETE.iter().flat_map(|s| run_suite(*s, cfg)).collect(),
    }
}

/// Whether any entry fails both as printed and under its correction.
pub fn has_hard_failure(reports: &[VerificationReport]) -> bool {
    reports.iter().any(VerificationReport::is_hard_failure)
}
