//! Representation numbers `R(n, Q)` of diagonal forms
//! `Q = c₁x₁² + ... + c_kx_k²`, counted over all of `Z^k` (signs and order
//! both matter), together with the closed forms for `x² + 6y²` and
//! `2x² + 3y²`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::arith::{factorize, isqrt, ArithError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error("a diagonal form needs at least one coefficient")]
    Empty,
    #[error("form coefficients must be positive")]
    NonPositive,
    #[error("cannot parse form {0:?}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiagonalForm {
    coeffs: Vec<u64>,
}

impl DiagonalForm {
    pub fn new(coeffs: Vec<u64>) -> Result<Self, FormError> {
        if coeffs.is_empty() {
            return Err(FormError::Empty);
        }
        if coeffs.contains(&0) {
            return Err(FormError::NonPositive);
        }
        Ok(Self { coeffs })
    }

    /// `x² + 6y²`
    pub fn x2_6y2() -> Self {
        Self { coeffs: vec![1, 6] }
    }

    /// `2x² + 3y²`
    pub fn two_x2_3y2() -> Self {
        Self { coeffs: vec![2, 3] }
    }

    /// `x² + y² + 3z²`
    pub fn x2_y2_3z2() -> Self {
        Self {
            coeffs: vec![1, 1, 3],
        }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn evaluate(&self, xs: &[i64]) -> u64 {
        self.coeffs
            .iter()
            .zip(xs)
            .map(|(&c, &x)| c * (x * x) as u64)
            .sum()
    }
}

impl fmt::Display for DiagonalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(u64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for DiagonalForm {
    type Err = FormError;

    /// Parses a comma-separated coefficient list such as `1,6`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let coeffs = s
            .split(',')
            .map(|p| p.trim().parse::<u64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| FormError::Parse(s.to_string()))?;
        Self::new(coeffs)
    }
}

/// Number of `x ∈ Z^k` with `Σ cᵢxᵢ² = n`.
///
/// Nested loops with `|xᵢ| ≤ √(n/cᵢ)`, largest coefficient outermost; the
/// innermost coordinate is solved for directly.
pub fn count_representations(n: u64, form: &DiagonalForm) -> u64 {
    let mut coeffs = form.coeffs.clone();
    coeffs.sort_unstable_by(|a, b| b.cmp(a));
    count_rec(n, &coeffs)
}

fn count_rec(n: u64, coeffs: &[u64]) -> u64 {
    let (&c, rest) = coeffs.split_first().expect("nonempty form");
    if rest.is_empty() {
        if !n.is_multiple_of(c) {
            return 0;
        }
        let m = n / c;
        let r = isqrt(m);
        return match (r * r == m, m) {
            (false, _) => 0,
            (true, 0) => 1,
            (true, _) => 2,
        };
    }
    let bound = isqrt(n / c);
    let mut total = count_rec(n, rest);
    for x in 1..=bound {
        total += 2 * count_rec(n - c * x * x, rest);
    }
    total
}

/// Closed form for `R(n, x² + 6y²)` from the factorization of `n`.
pub fn count_x2_6y2_formula(n: u64) -> Result<u64, ArithError> {
    binary_form_formula(n, 1)
}

/// Closed form for `R(n, 2x² + 3y²)` from the factorization of `n`.
pub fn count_2x2_3y2_formula(n: u64) -> Result<u64, ArithError> {
    binary_form_formula(n, -1)
}

/// `(1 + lead·(-1)^{a+b+t}) Π(1 + vᵢ) Π (1 + (-1)^{wⱼ})/2`.
fn binary_form_formula(n: u64, lead: i64) -> Result<u64, ArithError> {
    let f = factorize(n)?;
    let parity = if (f.a() + f.b() + f.t()) % 2 == 0 {
        1
    } else {
        -1
    };
    let leading = (1 + lead * parity) as u64;
    if leading == 0 || f.class_q().iter().any(|q| q.exponent % 2 == 1) {
        return Ok(0);
    }
    let divisor_part: u64 = f.class_p().iter().map(|p| 1 + p.exponent as u64).product();
    Ok(leading * divisor_part)
}
