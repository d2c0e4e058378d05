//! Truncated formal power series `c_0 + c_1 q + ... + c_N q^N (mod q^{N+1})`
//! over either the integers or `Z/mZ`.
//!
//! Exact coefficients are `i128` with checked arithmetic: overflow is an
//! error, never a wrap. Modular coefficients are kept as canonical
//! representatives in `[0, m)`.
//!
//! Every operation returns a new series. Binary operations truncate to the
//! smaller of the two orders.

use std::fmt;
use std::io::{self, Write};

use thiserror::Error;

/// Largest modulus accepted by [`CoefficientRing::modular`]. Keeps every
/// product of two residues and long sums of them inside `i128`.
pub const MAX_MODULUS: u64 = 1 << 31;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(CoefficientRing, CoefficientRing),
    #[error("integer overflow at coefficient {index}")]
    Overflow { index: usize },
    #[error("constant term {0} is not a unit")]
    NonUnit(i128),
    #[error("modulus must lie in [2, 2^31], got {0}")]
    BadModulus(u64),
    #[error("progression {modulus}n + {residue} is empty below order {order}")]
    EmptyProgression {
        modulus: usize,
        residue: usize,
        order: usize,
    },
    #[error("unknown ring {0:?} (expected exact or mod<m>)")]
    UnknownRing(String),
    #[error("cannot reduce from {from} to {to}")]
    BadReduction {
        from: CoefficientRing,
        to: CoefficientRing,
    },
}

pub type Result<T> = std::result::Result<T, SeriesError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoefficientRing {
    /// Signed integers; arithmetic overflow is reported.
    Exact,
    /// Integers modulo `m`.
    Modular(u64),
}

impl fmt::Display for CoefficientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientRing::Exact => write!(f, "exact"),
            CoefficientRing::Modular(m) => write!(f, "mod {m}"),
        }
    }
}

/// Accepts `exact`, `mod3`, `mod 3`.
impl std::str::FromStr for CoefficientRing {
    type Err = SeriesError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "exact" {
            return Ok(CoefficientRing::Exact);
        }
        s.strip_prefix("mod")
            .and_then(|m| m.trim().parse().ok())
            .ok_or_else(|| SeriesError::UnknownRing(s.to_string()))
            .and_then(CoefficientRing::modular)
    }
}

impl CoefficientRing {
    pub const MOD3: CoefficientRing = CoefficientRing::Modular(3);

    pub fn modular(m: u64) -> Result<Self> {
        if (2..=MAX_MODULUS).contains(&m) {
            Ok(CoefficientRing::Modular(m))
        } else {
            Err(SeriesError::BadModulus(m))
        }
    }

    /// Maps an integer into the ring's canonical representative.
    pub fn element(self, v: i128) -> i128 {
        match self {
            CoefficientRing::Exact => v,
            CoefficientRing::Modular(m) => v.rem_euclid(m as i128),
        }
    }

    fn add(self, a: i128, b: i128, index: usize) -> Result<i128> {
        match self {
            CoefficientRing::Exact => a.checked_add(b).ok_or(SeriesError::Overflow { index }),
            CoefficientRing::Modular(m) => Ok((a + b) % m as i128),
        }
    }

    fn sub(self, a: i128, b: i128, index: usize) -> Result<i128> {
        match self {
            CoefficientRing::Exact => a.checked_sub(b).ok_or(SeriesError::Overflow { index }),
            CoefficientRing::Modular(m) => Ok((a - b).rem_euclid(m as i128)),
        }
    }

    fn mul(self, a: i128, b: i128, index: usize) -> Result<i128> {
        match self {
            CoefficientRing::Exact => a.checked_mul(b).ok_or(SeriesError::Overflow { index }),
            CoefficientRing::Modular(m) => Ok(a * b % m as i128),
        }
    }

    /// Multiplicative inverse of `c`, if it is a unit.
    pub fn unit_inverse(self, c: i128) -> Option<i128> {
        match self {
            CoefficientRing::Exact => matches!(c, 1 | -1).then_some(c),
            CoefficientRing::Modular(m) => {
                let m = m as i128;
                let (mut r0, mut r1) = (m, c.rem_euclid(m));
                let (mut s0, mut s1) = (0i128, 1i128);
                while r1 != 0 {
                    let q = r0 / r1;
                    (r0, r1) = (r1, r0 - q * r1);
                    (s0, s1) = (s1, s0 - q * s1);
                }
                (r0 == 1).then(|| s0.rem_euclid(m))
            }
        }
    }
}

/// Sign pattern of a Pochhammer product: `Plus` builds factors `(1 + q^j)`,
/// `Minus` builds `(1 - q^j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorSign {
    Plus,
    Minus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    ring: CoefficientRing,
    coeffs: Vec<i128>,
}

impl TruncatedSeries {
    /// Builds a series of order `coeffs.len() - 1`, reducing every coefficient
    /// into the ring.
    ///
    /// Panics if `coeffs` is empty.
    pub fn from_coeffs(ring: CoefficientRing, mut coeffs: Vec<i128>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least c_0");
        if let CoefficientRing::Modular(_) = ring {
            for c in coeffs.iter_mut() {
                *c = ring.element(*c);
            }
        }
        Self { ring, coeffs }
    }

    pub fn zero(order: usize, ring: CoefficientRing) -> Self {
        Self {
            ring,
            coeffs: vec![0; order + 1],
        }
    }

    pub fn one(order: usize, ring: CoefficientRing) -> Self {
        let mut s = Self::zero(order, ring);
        s.coeffs[0] = 1;
        s
    }

    /// The series `Σ_{k ≤ order} q^k`.
    pub fn geometric(order: usize, ring: CoefficientRing) -> Self {
        Self {
            ring,
            coeffs: vec![1; order + 1],
        }
    }

    pub fn ring(&self) -> CoefficientRing {
        self.ring
    }

    /// Truncation bound `N`: the series is known modulo `q^{N+1}`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^k`. Panics if `k > order`.
    pub fn coeff(&self, k: usize) -> i128 {
        self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<i128> {
        self.coeffs
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(SeriesError::RingMismatch(self.ring, other.ring))
        }
    }

    fn nonzero_terms(&self, upto: usize) -> Vec<(usize, i128)> {
        self.coeffs[..=upto.min(self.order())]
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(j, &c)| (j, c))
            .collect()
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        Self {
            ring: self.ring,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, CoefficientRing::add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, CoefficientRing::sub)
    }

    fn zip_with(
        &self,
        other: &Self,
        op: fn(CoefficientRing, i128, i128, usize) -> Result<i128>,
    ) -> Result<Self> {
        self.check_ring(other)?;
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|k| op(self.ring, self.coeffs[k], other.coeffs[k], k))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            ring: self.ring,
            coeffs,
        })
    }

    pub fn neg(&self) -> Result<Self> {
        self.scale(-1)
    }

    /// Multiplies every coefficient by the integer `c`.
    pub fn scale(&self, c: i128) -> Result<Self> {
        let c = self.ring.element(c);
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, &a)| self.ring.mul(a, c, k))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            ring: self.ring,
            coeffs,
        })
    }

    /// Cauchy product truncated at the smaller order.
    ///
    /// Schoolbook convolution that walks only the nonzero terms of the
    /// sparser operand; theta series and Euler products have `O(√N)` of them.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let order = self.order().min(other.order());
        let (dense, sparse) = if self.density(order) >= other.density(order) {
            (self, other)
        } else {
            (other, self)
        };
        let terms = sparse.nonzero_terms(order);
        let mut out = vec![0i128; order + 1];
        match self.ring {
            CoefficientRing::Exact => {
                for &(j, b) in &terms {
                    for (i, &a) in dense.coeffs[..=order - j].iter().enumerate() {
                        if a == 0 {
                            continue;
                        }
                        let k = i + j;
                        let p = a.checked_mul(b).ok_or(SeriesError::Overflow { index: k })?;
                        out[k] = out[k]
                            .checked_add(p)
                            .ok_or(SeriesError::Overflow { index: k })?;
                    }
                }
            }
            CoefficientRing::Modular(m) => {
                let m = m as i128;
                for &(j, b) in &terms {
                    for (o, &a) in out[j..].iter_mut().zip(&dense.coeffs[..=order - j]) {
                        // residues < 2^31: each product < 2^62, no overflow for any realistic order
                        *o += a * b;
                    }
                }
                out.iter_mut().for_each(|o| *o %= m);
            }
        }
        Ok(Self {
            ring: self.ring,
            coeffs: out,
        })
    }

    fn density(&self, upto: usize) -> usize {
        self.coeffs[..=upto].iter().filter(|&&c| c != 0).count()
    }

    /// `self^e` by repeated squaring.
    pub fn pow(&self, mut e: u32) -> Result<Self> {
        let mut acc = Self::one(self.order(), self.ring);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Multiplicative inverse modulo `q^{N+1}`, via
    /// `u_k = -c_0^{-1} Σ_{j=1..k} c_j u_{k-j}`.
    pub fn invert(&self) -> Result<Self> {
        Self::one(self.order(), self.ring).div(self)
    }

    /// `self / den` modulo `q^{N+1}`, by the same recurrence as [`invert`]
    /// with `self` as the right-hand side. Walks only nonzero terms of `den`.
    ///
    /// [`invert`]: TruncatedSeries::invert
    pub fn div(&self, den: &Self) -> Result<Self> {
        self.check_ring(den)?;
        let order = self.order().min(den.order());
        let c0 = den.coeffs[0];
        let inv = self.ring.unit_inverse(c0).ok_or(SeriesError::NonUnit(c0))?;
        let terms: Vec<(usize, i128)> = den
            .nonzero_terms(order)
            .into_iter()
            .filter(|&(j, _)| j > 0)
            .collect();
        let mut u = vec![0i128; order + 1];
        match self.ring {
            CoefficientRing::Exact => {
                for k in 0..=order {
                    let mut acc = self.coeffs[k];
                    for &(j, d) in terms.iter().take_while(|&&(j, _)| j <= k) {
                        let p = d
                            .checked_mul(u[k - j])
                            .ok_or(SeriesError::Overflow { index: k })?;
                        acc = acc
                            .checked_sub(p)
                            .ok_or(SeriesError::Overflow { index: k })?;
                    }
                    // inv is ±1
                    u[k] = acc * inv;
                }
            }
            CoefficientRing::Modular(m) => {
                let m = m as i128;
                for k in 0..=order {
                    let mut acc = self.coeffs[k];
                    for &(j, d) in terms.iter().take_while(|&&(j, _)| j <= k) {
                        acc -= d * u[k - j];
                    }
                    u[k] = acc.rem_euclid(m) * inv % m;
                }
            }
        }
        Ok(Self {
            ring: self.ring,
            coeffs: u,
        })
    }

    /// `q -> q^m`, keeping the order.
    pub fn substitute_power(&self, m: usize) -> Self {
        assert!(m >= 1, "substitution exponent must be positive");
        let mut out = vec![0i128; self.order() + 1];
        for (k, &c) in self.coeffs.iter().enumerate() {
            match k.checked_mul(m) {
                Some(e) if e <= self.order() => out[e] = c,
                _ => break,
            }
        }
        Self {
            ring: self.ring,
            coeffs: out,
        }
    }

    /// `q -> -q`.
    pub fn substitute_negate(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 1 { self.ring.element(-c) } else { c })
            .collect();
        Self {
            ring: self.ring,
            coeffs,
        }
    }

    /// The series `Σ_n c_{modulus·n + residue} q^n`, of order
    /// `⌊(N - residue) / modulus⌋`.
    pub fn extract(&self, modulus: usize, residue: usize) -> Result<Self> {
        assert!(modulus >= 1, "progression modulus must be positive");
        if residue > self.order() {
            return Err(SeriesError::EmptyProgression {
                modulus,
                residue,
                order: self.order(),
            });
        }
        let coeffs = self.coeffs[residue..]
            .iter()
            .step_by(modulus)
            .copied()
            .collect();
        Ok(Self {
            ring: self.ring,
            coeffs,
        })
    }

    /// Reduces an exact series modulo `m`. Reducing a modular series to the
    /// same ring is the identity; anything else is an error.
    pub fn reduce(&self, to: CoefficientRing) -> Result<Self> {
        match (self.ring, to) {
            (from, to) if from == to => Ok(self.clone()),
            (CoefficientRing::Exact, CoefficientRing::Modular(_)) => {
                Ok(Self::from_coeffs(to, self.coeffs.clone()))
            }
            (CoefficientRing::Modular(a), CoefficientRing::Modular(b)) if a % b == 0 => {
                Ok(Self::from_coeffs(to, self.coeffs.clone()))
            }
            (from, to) => Err(SeriesError::BadReduction { from, to }),
        }
    }

    /// Returns a copy with `delta` added to coefficient `k`.
    pub fn perturbed(&self, k: usize, delta: i128) -> Self {
        let mut out = self.clone();
        out.coeffs[k] = self.ring.element(out.coeffs[k] + delta);
        out
    }

    /// Writes one `k<TAB>c_k` line per nonzero coefficient.
    pub fn dump<W: Write>(&self, mut w: W) -> io::Result<()> {
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                writeln!(w, "{k}\t{c}")?;
            }
        }
        Ok(())
    }
}

/// `D(q) = Σ_{n ∈ Z} (-1)^n q^{n²} = 1 - 2q + 2q⁴ - 2q⁹ + ...`
pub fn theta_d(order: usize, ring: CoefficientRing) -> TruncatedSeries {
    let mut coeffs = vec![0i128; order + 1];
    coeffs[0] = 1;
    for n in (1..).take_while(|n| n * n <= order) {
        coeffs[n * n] = if n % 2 == 0 { 2 } else { -2 };
    }
    TruncatedSeries::from_coeffs(ring, coeffs)
}

/// `θ(q) = Σ_{n ∈ Z} q^{n²}`, obtained as `D(-q)`.
pub fn theta(order: usize, ring: CoefficientRing) -> TruncatedSeries {
    theta_d(order, ring).substitute_negate()
}

/// `ψ(q) = Σ_{n ≥ 0} q^{n(n+1)/2}`.
pub fn theta_psi(order: usize, ring: CoefficientRing) -> TruncatedSeries {
    let mut coeffs = vec![0i128; order + 1];
    for n in (0..).take_while(|n| n * (n + 1) / 2 <= order) {
        coeffs[n * (n + 1) / 2] = 1;
    }
    TruncatedSeries::from_coeffs(ring, coeffs)
}

/// `(∓q^first; q^step)_∞ = Π_{k ≥ 0} (1 ± q^{first + k·step})` truncated at
/// `order`, multiplied out one factor at a time.
pub fn pochhammer_product(
    sign: FactorSign,
    first: usize,
    step: usize,
    order: usize,
    ring: CoefficientRing,
) -> Result<TruncatedSeries> {
    assert!(
        first >= 1 && step >= 1,
        "Pochhammer exponents must be positive"
    );
    let mut c = vec![0i128; order + 1];
    c[0] = 1;
    let delta = match sign {
        FactorSign::Plus => 1,
        FactorSign::Minus => -1,
    };
    let mut e = first;
    let mut top = 0usize;
    while e <= order {
        // Multiply by (1 + delta·q^e) in place, high indices first.
        top = (top + e).min(order);
        for k in (e..=top).rev() {
            let shifted = c[k - e];
            if shifted != 0 {
                c[k] = if delta == 1 {
                    ring.add(c[k], shifted, k)?
                } else {
                    ring.sub(c[k], shifted, k)?
                };
            }
        }
        e += step;
    }
    Ok(TruncatedSeries::from_coeffs(ring, c))
}

/// `(q^step; q^step)_∞` via the pentagonal number theorem:
/// `Σ_{j ∈ Z} (-1)^j q^{step · j(3j-1)/2}`.
pub fn euler_product(step: usize, order: usize, ring: CoefficientRing) -> TruncatedSeries {
    assert!(step >= 1, "Euler product step must be positive");
    let mut coeffs = vec![0i128; order + 1];
    coeffs[0] = 1;
    for j in 1usize.. {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let lo = step * (j * (3 * j - 1) / 2);
        let hi = step * (j * (3 * j + 1) / 2);
        if lo > order {
            break;
        }
        coeffs[lo] += sign;
        if hi <= order {
            coeffs[hi] += sign;
        }
    }
    TruncatedSeries::from_coeffs(ring, coeffs)
}
