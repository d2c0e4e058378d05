//! Integer utilities: factorization into the 24-residue classes used by the
//! binary-form formulas, the Legendre symbol, the sign function `f(n)` and a
//! deterministic primality test.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("factorization is undefined for n = 0")]
    Zero,
    #[error("{0} is not an odd prime")]
    NotOddPrime(i64),
}

/// A prime power `p^e` appearing in a [`Factorization`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimePower {
    pub prime: u64,
    pub exponent: u32,
}

/// `n = 2^a 3^b Π p_i^{v_i} Π q_j^{w_j}` where the `p_i` are congruent to
/// 1, 5, 7, 11 and the `q_j` to 13, 17, 19, 23 modulo 24.
///
/// `t` counts prime factors congruent to 5 or 11 (mod 24) with multiplicity.
/// It is stored rather than recomputed, and checked on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    n: u64,
    a: u32,
    b: u32,
    class_p: Vec<PrimePower>,
    class_q: Vec<PrimePower>,
    t: u32,
}

fn is_class_p(p: u64) -> bool {
    matches!(p % 24, 1 | 5 | 7 | 11)
}

fn counts_toward_t(p: u64) -> bool {
    matches!(p % 24, 5 | 11)
}

impl Factorization {
    fn new(
        n: u64,
        a: u32,
        b: u32,
        class_p: Vec<PrimePower>,
        class_q: Vec<PrimePower>,
        t: u32,
    ) -> Self {
        let recount: u32 = class_p
            .iter()
            .filter(|pp| counts_toward_t(pp.prime))
            .map(|pp| pp.exponent)
            .sum();
        assert_eq!(recount, t, "t disagrees with the class-p exponents of {n}");
        debug_assert!(class_p.windows(2).all(|w| w[0].prime < w[1].prime));
        debug_assert!(class_q.windows(2).all(|w| w[0].prime < w[1].prime));
        Self {
            n,
            a,
            b,
            class_p,
            class_q,
            t,
        }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Exponent of 2.
    pub fn a(&self) -> u32 {
        self.a
    }

    /// Exponent of 3.
    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn class_p(&self) -> &[PrimePower] {
        &self.class_p
    }

    pub fn class_q(&self) -> &[PrimePower] {
        &self.class_q
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    /// Multiplies the prime powers back together.
    pub fn recombine(&self) -> u128 {
        let mut acc = 2u128.pow(self.a) * 3u128.pow(self.b);
        for pp in self.class_p.iter().chain(&self.class_q) {
            acc *= (pp.prime as u128).pow(pp.exponent);
        }
        acc
    }
}

/// Trial division up to `√n`.
pub fn factorize(n: u64) -> Result<Factorization, ArithError> {
    if n == 0 {
        return Err(ArithError::Zero);
    }
    let mut m = n;
    let mut a = 0;
    while m.is_multiple_of(2) {
        m /= 2;
        a += 1;
    }
    let mut b = 0;
    while m.is_multiple_of(3) {
        m /= 3;
        b += 1;
    }
    let mut class_p = Vec::new();
    let mut class_q = Vec::new();
    let mut t = 0;
    let mut push = |prime: u64, exponent: u32| {
        if is_class_p(prime) {
            if counts_toward_t(prime) {
                t += exponent;
            }
            class_p.push(PrimePower { prime, exponent });
        } else {
            class_q.push(PrimePower { prime, exponent });
        }
    };
    let mut d = 5u64;
    while d <= m / d {
        if m.is_multiple_of(d) {
            let mut e = 0;
            while m.is_multiple_of(d) {
                m /= d;
                e += 1;
            }
            push(d, e);
        }
        d += 2;
    }
    if m > 1 {
        push(m, 1);
    }
    Ok(Factorization::new(n, a, b, class_p, class_q, t))
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin; the first twelve prime bases are exact for
/// every 64-bit input.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Legendre symbol `(a / ell)` by Euler's criterion.
pub fn legendre(a: i64, ell: i64) -> Result<i32, ArithError> {
    if ell < 3 || ell % 2 == 0 || !is_prime(ell as u64) {
        return Err(ArithError::NotOddPrime(ell));
    }
    let r = a.rem_euclid(ell) as u64;
    if r == 0 {
        return Ok(0);
    }
    let e = pow_mod(r, (ell as u64 - 1) / 2, ell as u64);
    Ok(if e == 1 { 1 } else { -1 })
}

/// The sign `f(n)`: `-1` when `n ≡ 1, 6, 9, 10 (mod 12)`, otherwise `1`.
pub fn f_sign(n: u64) -> i32 {
    match n % 12 {
        1 | 6 | 9 | 10 => -1,
        _ => 1,
    }
}

/// `(-1)^n` as an `i32`.
pub fn parity_sign(n: u64) -> i32 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Largest `r` with `r * r <= n`.
pub fn isqrt(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    let n = n as u128;
    let mut r = (n as f64).sqrt() as u128;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r as u64
}

/// Primes `p` in `[lo, hi]`, ascending.
pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&p| is_prime(p)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(prime: u64, exponent: u32) -> PrimePower {
        PrimePower { prime, exponent }
    }

    #[test]
    fn factorize_examples() {
        let one = factorize(1).unwrap();
        assert_eq!((one.a(), one.b(), one.t()), (0, 0, 0));
        assert!(one.class_p().is_empty() && one.class_q().is_empty());

        let f25 = factorize(25).unwrap();
        assert_eq!((f25.a(), f25.b(), f25.t()), (0, 0, 2));
        assert_eq!(f25.class_p(), &[pp(5, 2)]);
        assert!(f25.class_q().is_empty());

        let f78 = factorize(78).unwrap();
        assert_eq!((f78.a(), f78.b(), f78.t()), (1, 1, 0));
        assert!(f78.class_p().is_empty());
        assert_eq!(f78.class_q(), &[pp(13, 1)]);
    }

    #[test]
    fn factorize_rejects_zero() {
        assert_eq!(factorize(0), Err(ArithError::Zero));
    }

    #[test]
    fn factorize_large_prime_cofactor() {
        // 999983 is prime and ≡ 23 (mod 24).
        let f = factorize(2 * 999_983).unwrap();
        assert_eq!(f.a(), 1);
        assert!(f.class_p().is_empty());
        assert_eq!(f.class_q(), &[pp(999_983, 1)]);
        assert_eq!(f.recombine(), 2 * 999_983);
    }

    #[test]
    fn factorize_reconstructs_and_classifies() {
        for n in 1..=100_000u64 {
            let f = factorize(n).unwrap();
            assert_eq!(f.recombine(), n as u128, "n = {n}");
            for p in f.class_p() {
                assert!(is_class_p(p.prime) && p.prime % 2 == 1 && p.prime % 3 != 0);
            }
            for q in f.class_q() {
                assert!(!is_class_p(q.prime) && q.prime % 2 == 1 && q.prime % 3 != 0);
            }
        }
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre(0, 5), Ok(0));
        assert_eq!(legendre(1, 7), Ok(1));
        assert_eq!(legendre(2, 5), Ok(-1));
        assert_eq!(legendre(-1, 5), Ok(1));
        assert_eq!(legendre(-1, 7), Ok(-1));
    }

    #[test]
    fn legendre_rejects_bad_modulus() {
        assert_eq!(legendre(1, 2), Err(ArithError::NotOddPrime(2)));
        assert_eq!(legendre(1, 9), Err(ArithError::NotOddPrime(9)));
        assert_eq!(legendre(1, 1), Err(ArithError::NotOddPrime(1)));
    }

    #[test]
    fn legendre_is_multiplicative() {
        for ell in [3, 5, 7, 11, 13] {
            for a in -50..=50 {
                for b in -50..=50 {
                    let lhs = legendre(a * b, ell).unwrap();
                    let rhs = legendre(a, ell).unwrap() * legendre(b, ell).unwrap();
                    assert_eq!(lhs, rhs, "({a}*{b} / {ell})");
                }
            }
        }
    }

    #[test]
    fn legendre_matches_square_table() {
        for ell in [3i64, 5, 7, 11, 13, 17] {
            let squares: Vec<i64> = (1..ell).map(|x| x * x % ell).collect();
            for a in 1..ell {
                let expect = if squares.contains(&a) { 1 } else { -1 };
                assert_eq!(legendre(a, ell).unwrap(), expect);
            }
        }
    }

    #[test]
    fn f_sign_examples_and_period() {
        assert_eq!(f_sign(0), 1);
        assert_eq!(f_sign(6), -1);
        assert_eq!(f_sign(22), -1);
        for n in 0..=1000 {
            assert_eq!(f_sign(n), f_sign(n + 12));
        }
    }

    #[test]
    fn primality() {
        assert!(!is_prime(1));
        assert!(is_prime(2));
        assert!(!is_prime(91));
        assert!(is_prime((1u64 << 61) - 1));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to bases 2, 3, 5, 7
        let sieve: Vec<u64> = (1..2000u64)
            .filter(|&n| n > 1 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0))
            .collect();
        assert_eq!(primes_in(1, 1999), sieve);
    }

    #[test]
    fn isqrt_boundaries() {
        for r in 0..2000u64 {
            assert_eq!(isqrt(r * r), r);
            if r > 0 {
                assert_eq!(isqrt(r * r - 1), r - 1);
            }
        }
        assert_eq!(isqrt(u32::MAX as u64 * u32::MAX as u64), u32::MAX as u64);
    }
}
