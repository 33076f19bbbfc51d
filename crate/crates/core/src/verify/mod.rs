//! Named suites of checks over the group, the form catalogs and the
//! q-series, collected into machine-readable reports.

mod context;
mod leading;
mod manifest;
mod relations;
mod report;
pub mod suites;

pub use context::{
    Context, Overrides, RunConfig, DEFAULT_ORDER, DEFAULT_SEED, DEFAULT_TRIALS, MIN_ORDER,
};
pub use leading::{Lead, QuadraticCombination, A_LEADING, D_LEADING, G_LEADING, W_COMBINATIONS};
pub use manifest::CHECK_IDS;
pub use suites::group::build_store;
pub use relations::{identification, reduce, relations, substitute, Relation, PHI_DEGREES};
pub use report::{
    run_check, CheckResult, Outcome, ReportConfig, Status, VerificationReport, REPORT_SCHEMA,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("truncation order {0} is below the minimum of 2")]
    OrderTooSmall(i64),
    #[error("{0} is not a prime congruent to 1 mod 1560")]
    BadPrime(u64),
    #[error("at least one random trial is needed")]
    NoTrials,
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Group,
    Forms,
    Invariance,
    Modular,
    Singularity,
    Icosahedral,
    Theta,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Group,
        Suite::Forms,
        Suite::Invariance,
        Suite::Modular,
        Suite::Singularity,
        Suite::Icosahedral,
        Suite::Theta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Group => "group",
            Suite::Forms => "forms",
            Suite::Invariance => "invariance",
            Suite::Modular => "modular",
            Suite::Singularity => "singularity",
            Suite::Icosahedral => "icosahedral",
            Suite::Theta => "theta",
        }
    }

    /// A suite name, or `None` for "all".
    pub fn parse(s: &str) -> Result<Option<Suite>, VerifyError> {
        if s == "all" {
            return Ok(None);
        }
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .map(Some)
            .ok_or_else(|| VerifyError::UnknownSuite(s.to_string()))
    }

    pub fn run(self, ctx: &Context) -> Vec<CheckResult> {
        match self {
            Suite::Group => suites::group::run(ctx),
            Suite::Forms => suites::forms::run(ctx),
            Suite::Invariance => suites::invariance::run(ctx),
            Suite::Modular => suites::modular::run(ctx),
            Suite::Singularity => suites::singularity::run(ctx),
            Suite::Icosahedral => suites::icosahedral::run(ctx),
            Suite::Theta => suites::theta::run(ctx),
        }
    }
}

pub fn run_suite(suite: Suite, ctx: &Context) -> VerificationReport {
    VerificationReport::new(suite.name(), ctx.config.report_config(), suite.run(ctx))
}

/// Every suite, run on separate threads over a shared context; results are
/// merged in check-id order so scheduling cannot change the report.
pub fn run_all(ctx: &Context) -> VerificationReport {
    let results: Vec<CheckResult> = std::thread::scope(|scope| {
        let handles: Vec<_> = Suite::ALL.iter().map(|s| scope.spawn(move || s.run(ctx))).collect();
        handles.into_iter().flat_map(|h| h.join().expect("suite thread")).collect()
    });
    VerificationReport::new("all", ctx.config.report_config(), results)
}

/// Runs one suite or all of them.
pub fn run_selected(selection: Option<Suite>, ctx: &Context) -> VerificationReport {
    match selection {
        Some(s) => run_suite(s, ctx),
        None => run_all(ctx),
    }
}
