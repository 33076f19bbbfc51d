use std::path::PathBuf;
use std::sync::OnceLock;

use crate::exact::DEFAULT_PRECISION;
use crate::forms::{FormSet, FormTables, INVARIANTS};
use crate::group::{gen_s, gen_t, CycloMatrix, DEFAULT_BOUND};
use crate::polynomial::{default_prime, PrimeField};
use crate::qseries::{InvariantAtTheta, MonomialCache, ThetaPoint};

use super::report::ReportConfig;
use super::VerifyError;

/// Smallest accepted truncation order.
pub const MIN_ORDER: i64 = 2;
pub const DEFAULT_ORDER: i64 = 12;
pub const DEFAULT_SEED: u64 = 13;
pub const DEFAULT_TRIALS: usize = 2;

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub order: i64,
    pub prime: u64,
    pub seed: u64,
    pub trials: usize,
    pub precision: usize,
    /// Record wall-clock times; off gives byte-identical reports.
    pub timing: bool,
    pub cache_dir: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            order: DEFAULT_ORDER,
            prime: default_prime(),
            seed: DEFAULT_SEED,
            trials: DEFAULT_TRIALS,
            precision: DEFAULT_PRECISION,
            timing: true,
            cache_dir: None,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), VerifyError> {
        if self.order < MIN_ORDER {
            return Err(VerifyError::OrderTooSmall(self.order));
        }
        if self.prime % 1560 != 1 {
            return Err(VerifyError::BadPrime(self.prime));
        }
        PrimeField::new(self.prime).map_err(|_| VerifyError::BadPrime(self.prime))?;
        if self.trials == 0 {
            return Err(VerifyError::NoTrials);
        }
        Ok(())
    }

    pub fn report_config(&self) -> ReportConfig {
        ReportConfig {
            order: self.order,
            prime: self.prime,
            seed: self.seed,
            trials: self.trials,
            precision: self.precision,
        }
    }
}

/// Deliberate corruptions used to show that the suites notice them.
#[derive(Clone, Debug)]
pub struct Overrides {
    pub tables: FormTables,
    pub t: CycloMatrix,
    pub bound: usize,
}

impl Default for Overrides {
    fn default() -> Self {
        Overrides {
            tables: FormTables::standard(),
            t: gen_t(),
            bound: DEFAULT_BOUND,
        }
    }
}

impl Overrides {
    pub fn with_d_sign_flip(mut self, form: usize, term: usize) -> Self {
        self.tables = self.tables.flip_d_sign(form, term);
        self
    }

    pub fn with_t(mut self, t: CycloMatrix) -> Self {
        self.t = t;
        self
    }

    pub fn with_bound(mut self, bound: usize) -> Self {
        self.bound = bound;
        self
    }
}

/// Shared state for a run: configuration plus lazily built catalogs.
pub struct Context {
    pub config: RunConfig,
    pub overrides: Overrides,
    pub s: CycloMatrix,
    forms: OnceLock<FormSet>,
    field: OnceLock<PrimeField>,
    invariants: OnceLock<Result<Vec<InvariantAtTheta>, String>>,
}

impl Context {
    pub fn new(config: RunConfig, overrides: Overrides) -> Result<Self, VerifyError> {
        config.validate()?;
        Ok(Context {
            config,
            overrides,
            s: gen_s(),
            forms: OnceLock::new(),
            field: OnceLock::new(),
            invariants: OnceLock::new(),
        })
    }

    pub fn forms(&self) -> &FormSet {
        self.forms.get_or_init(|| FormSet::build(self.overrides.tables.clone()))
    }

    pub fn field(&self) -> &PrimeField {
        self.field
            .get_or_init(|| PrimeField::new(self.config.prime).expect("validated prime"))
    }

    /// The seven Φ at the theta point through the configured order, in
    /// degree order.
    pub fn invariants_at_theta(&self) -> Result<&[InvariantAtTheta], &str> {
        self.invariants
            .get_or_init(|| {
                let tp = ThetaPoint::new(self.config.order);
                let mut cache = MonomialCache::new(&tp.a);
                INVARIANTS
                    .iter()
                    .map(|f| tp.invariant(self.forms(), f, &mut cache).map_err(|e| e.to_string()))
                    .collect()
            })
            .as_ref()
            .map(Vec::as_slice)
            .map_err(String::as_str)
    }
}
