//! `r₅(n)`, the number of ordered representations of `n` as a sum of five
//! integer squares.

use thiserror::Error;

use crate::arith::{isqrt, legendre, ArithError};
use crate::series::{theta, CoefficientRing, Result as SeriesResult, SeriesError, TruncatedSeries};

/// Largest `n` accepted by [`r5_enumerate`].
pub const ENUMERATE_MAX: u64 = 2000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FiveSquaresError {
    #[error("n = {0} is above the enumeration range (max {ENUMERATE_MAX})")]
    OutOfRange(u64),
    #[error("index {index} is beyond the table bound {bound}")]
    BeyondTable { index: u64, bound: u64 },
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// Counts `(x₁,…,x₅) ∈ Z⁵` with `Σxᵢ² = n` directly.
///
/// Walks non-negative `x₁..x₄`, tests whether the remainder is a square, and
/// weights each hit by `2^(#nonzero coordinates)` for the sign choices.
pub fn r5_enumerate(n: u64) -> Result<u64, FiveSquaresError> {
    if n > ENUMERATE_MAX {
        return Err(FiveSquaresError::OutOfRange(n));
    }
    let weight = |x: u64| if x == 0 { 1 } else { 2 };
    let mut total = 0u64;
    for x1 in 0..=isqrt(n) {
        let n1 = n - x1 * x1;
        for x2 in 0..=isqrt(n1) {
            let n2 = n1 - x2 * x2;
            for x3 in 0..=isqrt(n2) {
                let n3 = n2 - x3 * x3;
                let w123 = weight(x1) * weight(x2) * weight(x3);
                for x4 in 0..=isqrt(n3) {
                    let n4 = n3 - x4 * x4;
                    let x5 = isqrt(n4);
                    if x5 * x5 == n4 {
                        total += w123 * weight(x4) * weight(x5);
                    }
                }
            }
        }
    }
    Ok(total)
}

/// `θ(q)⁵ = Σ r₅(n) qⁿ`, computed as `(θ²)²·θ`.
pub fn r5_series(order: usize, ring: CoefficientRing) -> SeriesResult<TruncatedSeries> {
    let t = theta(order, ring);
    let t2 = t.mul(&t)?;
    t2.mul(&t2)?.mul(&t)
}

/// Exact `r₅(0..=N)`, built once and shared read-only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct R5Table {
    values: Vec<i128>,
}

impl R5Table {
    pub fn new(bound: usize) -> Result<Self, FiveSquaresError> {
        let values = r5_series(bound, CoefficientRing::Exact)?.into_coeffs();
        debug_assert_eq!(values[0], 1);
        Ok(Self { values })
    }

    pub fn bound(&self) -> u64 {
        (self.values.len() - 1) as u64
    }

    pub fn get(&self, n: u64) -> Result<i128, FiveSquaresError> {
        self.values
            .get(n as usize)
            .copied()
            .ok_or(FiveSquaresError::BeyondTable {
                index: n,
                bound: self.bound(),
            })
    }

    pub fn values(&self) -> &[i128] {
        &self.values
    }
}

/// Right-hand side of the Hecke-type relation for `r₅(ℓ²n)`:
/// `(ℓ³ − ℓ(n/ℓ) + 1) r₅(n) − ℓ³ r₅(n/ℓ²)`.
///
/// The last term vanishes unless `ℓ² | n`. For `n = 0` the divisibility is
/// taken to hold, giving `28 − 27 = 1` at `ℓ = 3`, consistent with `r₅(0) = 1`.
pub fn r5_hecke_rhs(ell: u64, n: u64, table: &R5Table) -> Result<i128, FiveSquaresError> {
    let symbol = legendre((n % ell) as i64, ell as i64)? as i128;
    let index = ell
        .checked_mul(ell)
        .and_then(|sq| sq.checked_mul(n))
        .unwrap_or(u64::MAX);
    if index > table.bound() {
        return Err(FiveSquaresError::BeyondTable {
            index,
            bound: table.bound(),
        });
    }
    let l = ell as i128;
    let cube = l * l * l;
    let reduced = if n.is_multiple_of(ell * ell) {
        table.get(n / (ell * ell))?
    } else {
        0
    };
    Ok((cube - l * symbol + 1) * table.get(n)? - cube * reduced)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::theta_psi;

    #[test]
    fn enumerate_examples() {
        assert_eq!(r5_enumerate(0), Ok(1));
        assert_eq!(r5_enumerate(1), Ok(10));
        // ±2 in one slot (10 ways) or four ±1 (5 · 16 ways)
        assert_eq!(r5_enumerate(4), Ok(90));
        assert_eq!(r5_enumerate(9), Ok(250));
        assert_eq!(r5_enumerate(50), Ok(5240));
        assert_eq!(r5_enumerate(5), Ok(112));
        assert_eq!(r5_enumerate(2001), Err(FiveSquaresError::OutOfRange(2001)));
    }

    #[test]
    fn series_examples() {
        let s = r5_series(3, CoefficientRing::Exact).unwrap();
        assert_eq!(s.coeffs(), &[1, 10, 40, 80]);
        assert_eq!(r5_series(3, CoefficientRing::MOD3).unwrap().coeff(1), 1);
    }

    #[test]
    fn routes_agree() {
        let table = R5Table::new(300).unwrap();
        for n in 0..=300 {
            assert_eq!(
                table.get(n).unwrap(),
                r5_enumerate(n).unwrap() as i128,
                "r5({n})"
            );
        }
    }

    #[test]
    fn hecke_examples() {
        let table = R5Table::new(60).unwrap();
        assert_eq!(r5_hecke_rhs(3, 0, &table), Ok(1));
        assert_eq!(r5_hecke_rhs(3, 1, &table), Ok(250));
        assert_eq!(r5_hecke_rhs(5, 2, &table), Ok(5240));
        assert!(matches!(
            r5_hecke_rhs(5, 3, &table),
            Err(FiveSquaresError::BeyondTable { index: 75, .. })
        ));
        assert!(matches!(
            r5_hecke_rhs(4, 1, &table),
            Err(FiveSquaresError::Arith(_))
        ));
    }

    #[test]
    fn hecke_identity() {
        let table = R5Table::new(2000).unwrap();
        for ell in [3u64, 5, 7] {
            for n in 0..=2000 / (ell * ell) {
                let lhs = table.get(ell * ell * n).unwrap();
                assert_eq!(
                    lhs,
                    r5_hecke_rhs(ell, n, &table).unwrap(),
                    "ell={ell} n={n}"
                );
            }
        }
    }

    #[test]
    fn psi_fifth_power_mod3() {
        let m3 = CoefficientRing::MOD3;
        let psi5 = theta_psi(200, m3).pow(5).unwrap();
        let table = R5Table::new(8 * 200 + 5).unwrap();
        for n in 0..=200u64 {
            let r = table.get(8 * n + 5).unwrap().rem_euclid(3);
            assert_eq!(psi5.coeff(n as usize), r, "n={n}");
        }
    }

    #[test]
    fn r5_9n_plus_6_divisible_by_3() {
        let table = R5Table::new(9 * 200 + 6).unwrap();
        for n in 0..=200 {
            assert_eq!(table.get(9 * n + 6).unwrap() % 3, 0, "n={n}");
        }
    }
}
