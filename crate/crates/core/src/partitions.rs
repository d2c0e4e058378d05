//! The four partition functions `p̄(n)`, `p̄ₒ(n)`, `ped(n)` and `pod(n)`.
//!
//! Two series routes build the generating functions:
//!
//! * [`coefficients_by_products`] multiplies out the Pochhammer products
//!   literally and inverts the denominator. Intermediate coefficients stay
//!   small, so this is the route used in exact arithmetic.
//! * [`coefficients_by_eta_quotient`] rewrites each product through
//!   `E_k = (q^k; q^k)_∞`, which has `O(√N)` nonzero terms by the pentagonal
//!   number theorem. Multiplication and division by a sparse series is
//!   `O(N√N)`, which is what makes mod-3 sweeps to order `10⁵` tractable.
//!
//! [`enumerate_count`] is an independent combinatorial oracle that shares no
//! code with the series engine.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::series::{
    euler_product, pochhammer_product, CoefficientRing, FactorSign, Result, TruncatedSeries,
};

/// Largest `n` accepted by [`enumerate_count`].
pub const ORACLE_MAX: u64 = 60;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("n = {0} is above the enumeration oracle range (max {ORACLE_MAX})")]
    OutOfRange(u64),
    #[error("unknown partition kind {0:?}")]
    UnknownKind(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PartitionKind {
    /// `p̄(n)`: overpartitions.
    Overpartition,
    /// `p̄ₒ(n)`: overpartitions into odd parts.
    OverpartitionOdd,
    /// `ped(n)`: partitions with no repeated even part.
    Ped,
    /// `pod(n)`: partitions with no repeated odd part.
    Pod,
}

impl PartitionKind {
    pub const ALL: [PartitionKind; 4] = [
        PartitionKind::Overpartition,
        PartitionKind::OverpartitionOdd,
        PartitionKind::Ped,
        PartitionKind::Pod,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PartitionKind::Overpartition => "pbar",
            PartitionKind::OverpartitionOdd => "pbar-odd",
            PartitionKind::Ped => "ped",
            PartitionKind::Pod => "pod",
        }
    }
}

impl fmt::Display for PartitionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PartitionKind {
    type Err = PartitionError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        PartitionKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| PartitionError::UnknownKind(s.to_string()))
    }
}

/// Generating function of `kind` truncated at `order`.
///
/// Exact rings use the product route, modular rings the eta-quotient route.
/// In exact arithmetic an [`Overflow`](crate::series::SeriesError::Overflow)
/// is returned once coefficients leave `i128`; `p̄(n)` fits up to `n ≈ 900`.
pub fn coefficients(
    kind: PartitionKind,
    order: usize,
    ring: CoefficientRing,
) -> Result<TruncatedSeries> {
    match ring {
        CoefficientRing::Exact => coefficients_by_products(kind, order, ring),
        CoefficientRing::Modular(_) => coefficients_by_eta_quotient(kind, order, ring),
    }
}

/// `numerator · invert(denominator)` on the literal products:
///
/// | kind | numerator | denominator |
/// |------|-----------|-------------|
/// | p̄   | (−q;q)∞   | (q;q)∞      |
/// | p̄ₒ  | (−q;q²)∞  | (q;q²)∞     |
/// | ped  | (−q²;q²)∞ | (q;q²)∞     |
/// | pod  | (−q;q²)∞  | (q²;q²)∞    |
pub fn coefficients_by_products(
    kind: PartitionKind,
    order: usize,
    ring: CoefficientRing,
) -> Result<TruncatedSeries> {
    use FactorSign::{Minus, Plus};
    let (num, den) = match kind {
        PartitionKind::Overpartition => ((Plus, 1, 1), (Minus, 1, 1)),
        PartitionKind::OverpartitionOdd => ((Plus, 1, 2), (Minus, 1, 2)),
        PartitionKind::Ped => ((Plus, 2, 2), (Minus, 1, 2)),
        PartitionKind::Pod => ((Plus, 1, 2), (Minus, 2, 2)),
    };
    let num = pochhammer_product(num.0, num.1, num.2, order, ring)?;
    let den = pochhammer_product(den.0, den.1, den.2, order, ring)?;
    num.mul(&den.invert()?)
}

/// The same generating functions as eta quotients in `E_k = (q^k;q^k)_∞`:
/// `p̄ = E₂/E₁²`, `p̄ₒ = E₂³/(E₁²E₄)`, `ped = E₄/E₁`, `pod = E₂/(E₁E₄)`.
pub fn coefficients_by_eta_quotient(
    kind: PartitionKind,
    order: usize,
    ring: CoefficientRing,
) -> Result<TruncatedSeries> {
    let e = |k| euler_product(k, order, ring);
    let (e1, e2, e4) = (e(1), e(2), e(4));
    match kind {
        PartitionKind::Overpartition => e2.div(&e1)?.div(&e1),
        PartitionKind::OverpartitionOdd => e2.pow(3)?.div(&e1)?.div(&e1)?.div(&e4),
        PartitionKind::Ped => e4.div(&e1),
        PartitionKind::Pod => e2.div(&e1)?.div(&e4),
    }
}

/// Counts partitions of `n` of the given kind by explicit recursion over part
/// sizes, largest first.
///
/// Overlining the first occurrence of a part is a yes/no choice per distinct
/// part size, so each partition contributes `2^(distinct sizes)`
/// overpartitions.
pub fn enumerate_count(kind: PartitionKind, n: u64) -> std::result::Result<u64, PartitionError> {
    if n > ORACLE_MAX {
        return Err(PartitionError::OutOfRange(n));
    }
    Ok(count_with_parts_at_most(kind, n, n))
}

fn count_with_parts_at_most(kind: PartitionKind, n: u64, largest: u64) -> u64 {
    if n == 0 {
        return 1;
    }
    if largest == 0 {
        return 0;
    }
    // Partitions that do not use `largest` at all.
    let mut total = count_with_parts_at_most(kind, n, largest - 1);
    if !part_allowed(kind, largest) {
        return total;
    }
    let max_mult = match (kind, largest % 2) {
        (PartitionKind::Ped, 0) | (PartitionKind::Pod, 1) => 1,
        _ => n / largest,
    };
    let weight = match kind {
        PartitionKind::Overpartition | PartitionKind::OverpartitionOdd => 2,
        PartitionKind::Ped | PartitionKind::Pod => 1,
    };
    for mult in 1..=max_mult.min(n / largest) {
        total += weight * count_with_parts_at_most(kind, n - mult * largest, largest - 1);
    }
    total
}

fn part_allowed(kind: PartitionKind, part: u64) -> bool {
    match kind {
        PartitionKind::OverpartitionOdd => part % 2 == 1,
        _ => true,
    }
}
