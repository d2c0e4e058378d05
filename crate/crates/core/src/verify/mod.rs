//! Named, range-parameterized checks for every congruence, identity and
//! representation-number fact, plus the runner that executes them.
//!
//! Congruence sweeps read residues modulo 3 from a shared [`Context`], which
//! builds each partition series once, lazily, at a single truncation order.
//! Arguments beyond that order are skipped and counted, never silently
//! treated as passes.

mod checks;
mod report;

use std::sync::OnceLock;

use rayon::prelude::*;
use thiserror::Error;

use crate::arith::ArithError;
use crate::fivesquares::FiveSquaresError;
use crate::partitions::{coefficients, PartitionKind};
use crate::series::{CoefficientRing, SeriesError, TruncatedSeries};

pub use checks::{registry, CheckDef, Reach};
pub use report::{
    render, write_reports, CheckReport, Counterexample, OutputFormat, Params, MAX_COUNTEREXAMPLES,
};

/// Truncation order used for the congruence families unless overridden.
pub const DEFAULT_ORDER: usize = 150_000;

/// Exact coefficients are only built up to this order for congruence sweeps.
pub const EXACT_ORDER_CAP: usize = 400;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
    #[error("{0}: empty effective range")]
    EmptyRange(String),
    #[error("{check}: {prime} is not an admissible prime ({rule})")]
    BadPrime {
        check: String,
        prime: i64,
        rule: &'static str,
    },
    #[error("{0}")]
    Config(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    FiveSquares(#[from] FiveSquaresError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// A check name with its sweep bound and parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckSpec {
    pub name: String,
    /// Sweep bound; its meaning (bound on `n`, or on `ℓ²n`) is per check.
    pub n_max: u64,
    pub params: Params,
}

impl CheckSpec {
    pub fn param(&self, key: &str) -> Option<i64> {
        self.params.iter().find(|(k, _)| k == key).map(|&(_, v)| v)
    }

    pub fn params_named(&self, key: &str) -> Vec<i64> {
        self.params
            .iter()
            .filter(|(k, _)| k == key)
            .map(|&(_, v)| v)
            .collect()
    }
}

/// Adds `delta` to one coefficient of one partition series after it is
/// built. Used to exercise the failure path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Perturbation {
    pub kind: PartitionKind,
    pub index: usize,
    pub delta: i128,
}

/// Shared, lazily built series for the congruence sweeps.
#[derive(Debug)]
pub struct Context {
    ring: CoefficientRing,
    order: usize,
    perturbation: Option<Perturbation>,
    series: [OnceLock<Result<TruncatedSeries, SeriesError>>; 4],
}

impl Context {
    /// `ring` must be exact or modulo a multiple of 3. Exact orders are
    /// capped at [`EXACT_ORDER_CAP`].
    pub fn new(ring: CoefficientRing, order: usize) -> Result<Self, VerifyError> {
        let order = match ring {
            CoefficientRing::Exact => order.min(EXACT_ORDER_CAP),
            CoefficientRing::Modular(m) if m % 3 == 0 => order,
            other => {
                return Err(VerifyError::Config(format!(
                    "congruences modulo 3 cannot be read in {other}"
                )))
            }
        };
        Ok(Self {
            ring,
            order,
            perturbation: None,
            series: Default::default(),
        })
    }

    pub fn with_perturbation(mut self, p: Perturbation) -> Self {
        self.perturbation = Some(p);
        self
    }

    pub fn ring(&self) -> CoefficientRing {
        self.ring
    }

    pub fn order(&self) -> usize {
        self.order
    }

    fn slot(kind: PartitionKind) -> usize {
        match kind {
            PartitionKind::Overpartition => 0,
            PartitionKind::OverpartitionOdd => 1,
            PartitionKind::Ped => 2,
            PartitionKind::Pod => 3,
        }
    }

    pub fn series(&self, kind: PartitionKind) -> Result<&TruncatedSeries, VerifyError> {
        self.series[Self::slot(kind)]
            .get_or_init(|| {
                let s = coefficients(kind, self.order, self.ring)?;
                Ok(match self.perturbation {
                    Some(p) if p.kind == kind && p.index <= s.order() => {
                        s.perturbed(p.index, p.delta)
                    }
                    _ => s,
                })
            })
            .as_ref()
            .map_err(|e| VerifyError::Series(e.clone()))
    }

    /// Residue mod 3 of the `k`-th coefficient, or `None` beyond the order.
    pub fn residue(&self, kind: PartitionKind, k: u64) -> Result<Option<i128>, VerifyError> {
        let s = self.series(kind)?;
        Ok(usize::try_from(k)
            .ok()
            .filter(|&k| k <= s.order())
            .map(|k| s.coeff(k).rem_euclid(3)))
    }
}

/// Options for [`run_all`]. `None` fields fall back to each check's defaults.
#[derive(Debug, Clone, Default)]
pub struct RunConfig {
    /// Checks to run; empty means all registered checks.
    pub checks: Vec<String>,
    pub n_max: Option<u64>,
    pub alpha_max: Option<i64>,
    pub primes: Option<Vec<i64>>,
    /// Defaults to mod 3.
    pub ring: Option<CoefficientRing>,
    /// Series order for the shared context; defaults to what the selected
    /// checks need, and at least [`DEFAULT_ORDER`] when a family is selected.
    pub order: Option<usize>,
    pub perturbation: Option<Perturbation>,
}

/// Resolves the config into concrete check specs, validating each.
pub fn resolve(config: &RunConfig) -> Result<Vec<(&'static CheckDef, CheckSpec)>, VerifyError> {
    let reg = registry();
    let selected: Vec<&'static CheckDef> = if config.checks.is_empty() {
        reg.iter().collect()
    } else {
        config
            .checks
            .iter()
            .map(|name| {
                reg.iter()
                    .find(|d| d.name == name)
                    .ok_or_else(|| VerifyError::UnknownCheck(name.clone()))
            })
            .collect::<Result<_, _>>()?
    };
    selected
        .into_iter()
        .map(|def| {
            let mut spec = def.default_spec();
            if let Some(n) = config.n_max {
                spec.n_max = n;
            }
            if let Some(a) = config.alpha_max {
                for (k, v) in spec.params.iter_mut() {
                    if k == "alpha_max" {
                        *v = a;
                    }
                }
            }
            if let Some(primes) = &config.primes {
                if spec.param("prime").is_some() {
                    spec.params.retain(|(k, _)| k != "prime");
                    spec.params
                        .extend(primes.iter().map(|&p| ("prime".to_string(), p)));
                }
            }
            def.validate(&spec)?;
            Ok((def, spec))
        })
        .collect()
}

/// Runs the configured checks in parallel; reports come back sorted by name.
pub fn run_all(config: &RunConfig) -> Result<Vec<CheckReport>, VerifyError> {
    let specs = resolve(config)?;
    let ring = config.ring.unwrap_or(CoefficientRing::MOD3);
    let order = config.order.unwrap_or_else(|| {
        let reach = specs
            .iter()
            .filter_map(|(def, spec)| match def.reach {
                Reach::Upto(f) => Some(f(spec) as usize),
                _ => None,
            })
            .max()
            .unwrap_or(0);
        if specs
            .iter()
            .any(|(def, _)| matches!(def.reach, Reach::Truncated))
        {
            reach.max(DEFAULT_ORDER)
        } else {
            reach
        }
    });
    let mut ctx = Context::new(ring, order)?;
    if let Some(p) = config.perturbation {
        ctx = ctx.with_perturbation(p);
    }
    run_with(&ctx, &specs)
}

/// Runs already-resolved specs against a given context.
pub fn run_with(
    ctx: &Context,
    specs: &[(&'static CheckDef, CheckSpec)],
) -> Result<Vec<CheckReport>, VerifyError> {
    let mut reports = specs
        .par_iter()
        .map(|(def, spec)| def.run(ctx, spec))
        .collect::<Result<Vec<_>, _>>()?;
    reports.sort_by(|a, b| a.spec.name.cmp(&b.spec.name));
    Ok(reports)
}

/// 0 when every report passed, 1 otherwise.
pub fn exit_code(reports: &[CheckReport]) -> i32 {
    if reports.iter().all(|r| r.passed) {
        0
    } else {
        1
    }
}
