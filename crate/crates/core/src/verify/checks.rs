use crate::arith::{f_sign, is_prime, legendre, parity_sign};
use crate::fivesquares::{r5_enumerate, r5_hecke_rhs, r5_series, R5Table, ENUMERATE_MAX};
use crate::partitions::{coefficients, enumerate_count, PartitionKind, ORACLE_MAX};
use crate::quadforms::{
    count_2x2_3y2_formula, count_representations, count_x2_6y2_formula, DiagonalForm,
};
use crate::series::{theta, theta_d, theta_psi, CoefficientRing, TruncatedSeries};

use super::report::Sweep;
use super::{CheckReport, CheckSpec, Context, VerifyError};

const PBAR: PartitionKind = PartitionKind::Overpartition;
const PBAR_ODD: PartitionKind = PartitionKind::OverpartitionOdd;
const PED: PartitionKind = PartitionKind::Ped;
const POD: PartitionKind = PartitionKind::Pod;

const EXACT: CoefficientRing = CoefficientRing::Exact;
const MOD3: CoefficientRing = CoefficientRing::MOD3;

type RunFn = fn(&Context, &CheckSpec) -> Result<CheckReport, VerifyError>;

/// How a check uses the shared [`Context`] series.
#[derive(Clone, Copy)]
pub enum Reach {
    /// Builds everything it needs itself.
    Independent,
    /// Reads shared series up to the returned index.
    Upto(fn(&CheckSpec) -> u64),
    /// Reads shared series as far as they go; later arguments are skipped.
    Truncated,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum PrimeRule {
    None,
    Odd,
    /// `ℓ ≡ 1, 5, 7, 11 (mod 24)`
    Mod24,
    /// `ℓ ≡ 2 (mod 3)`
    TwoMod3,
}

impl PrimeRule {
    fn admits(self, p: i64) -> bool {
        p >= 2
            && is_prime(p as u64)
            && match self {
                PrimeRule::None => true,
                PrimeRule::Odd => p % 2 == 1,
                PrimeRule::Mod24 => matches!(p % 24, 1 | 5 | 7 | 11),
                PrimeRule::TwoMod3 => p % 3 == 2,
            }
    }

    fn describe(self) -> &'static str {
        match self {
            PrimeRule::None => "prime",
            PrimeRule::Odd => "odd prime",
            PrimeRule::Mod24 => "prime ≡ 1, 5, 7, 11 (mod 24)",
            PrimeRule::TwoMod3 => "prime ≡ 2 (mod 3)",
        }
    }
}

/// A registered check.
pub struct CheckDef {
    pub name: &'static str,
    pub paper_ref: &'static str,
    pub summary: &'static str,
    pub default_n_max: u64,
    default_params: &'static [(&'static str, i64)],
    pub reach: Reach,
    primes: PrimeRule,
    n_max_limit: Option<u64>,
    run: RunFn,
}

impl CheckDef {
    pub fn default_spec(&self) -> CheckSpec {
        CheckSpec {
            name: self.name.to_string(),
            n_max: self.default_n_max,
            params: self
                .default_params
                .iter()
                .map(|&(k, v)| (k.to_string(), v))
                .collect(),
        }
    }

    pub fn validate(&self, spec: &CheckSpec) -> Result<(), VerifyError> {
        if spec.n_max == 0 {
            return Err(VerifyError::EmptyRange(spec.name.clone()));
        }
        if let Some(limit) = self.n_max_limit {
            if spec.n_max > limit {
                return Err(VerifyError::Config(format!(
                    "{}: n_max {} exceeds the oracle range {limit}",
                    spec.name, spec.n_max
                )));
            }
        }
        if let Some(a) = spec.param("alpha_max") {
            if a < 0 {
                return Err(VerifyError::Config(format!(
                    "{}: alpha_max must be non-negative",
                    spec.name
                )));
            }
        }
        if self.primes != PrimeRule::None {
            let primes = spec.params_named("prime");
            if primes.is_empty() {
                return Err(VerifyError::EmptyRange(spec.name.clone()));
            }
            if let Some(&p) = primes.iter().find(|&&p| !self.primes.admits(p)) {
                return Err(VerifyError::BadPrime {
                    check: spec.name.clone(),
                    prime: p,
                    rule: self.primes.describe(),
                });
            }
        }
        Ok(())
    }

    pub fn run(&self, ctx: &Context, spec: &CheckSpec) -> Result<CheckReport, VerifyError> {
        self.validate(spec)?;
        (self.run)(ctx, spec)
    }
}

fn m3(v: i128) -> i128 {
    v.rem_euclid(3)
}

fn signed(sign: i32, v: i128) -> i128 {
    sign as i128 * v
}

fn primes(spec: &CheckSpec) -> Vec<u64> {
    spec.params_named("prime")
        .into_iter()
        .map(|p| p as u64)
        .collect()
}

fn alpha_max(spec: &CheckSpec) -> u32 {
    spec.param("alpha_max").unwrap_or(0) as u32
}

fn compare_series(sweep: &mut Sweep, lhs: &TruncatedSeries, rhs: &TruncatedSeries) {
    let order = lhs.order().min(rhs.order());
    for k in 0..=order {
        sweep.compare(k as u64, &[], Some(lhs.coeff(k)), Some(rhs.coeff(k)));
    }
}

pub fn registry() -> &'static [CheckDef] {
    &REGISTRY
}

static REGISTRY: [CheckDef; 26] = [
    CheckDef {
        name: "cong-1.1",
        paper_ref: "(1.1)",
        summary: "pbar_o(9^a(9n+6)) = pbar_o(9^a(27n+9)) = 0 (mod 3)",
        default_n_max: 20_000,
        default_params: &[("alpha_max", 1)],
        reach: Reach::Truncated,
        primes: PrimeRule::None,
        n_max_limit: None,
        run: cong_1_1,
    },
    CheckDef {
        name: "cong-1.2",
        paper_ref: "(1.2)",
        summary: "ped(3^(2a+3)n + (17*3^(2a+2)-1)/8) = ped(3^(2a+2)n + (19*3^(2a+1)-1)/8) = 0 (mod 3)",
        default_n_max: 20_000,
        default_params: &[("alpha_max", 1)],
        reach: Reach::Truncated,
        primes: PrimeRule::None,
        n_max_limit: None,
        run: cong_1_2,
    },
    CheckDef {
        name: "cong-1.3",
        paper_ref: "(1.3)",
        summary: "pbar(9^a(27n+18)) = 0 (mod 3)",
        default_n_max: 20_000,
        default_params: &[("alpha_max", 1)],
        reach: Reach::Truncated,
        primes: PrimeRule::None,
        n_max_limit: None,
        run: cong_1_3,
    },
    CheckDef {
        name: "cong-1.4",
        paper_ref: "(1.4)",
        summary: "pod(3^(2a+3)n + (23*3^(2a+2)+1)/8) = 0 (mod 3)",
        default_n_max: 20_000,
        default_params: &[("alpha_max", 1)],
        reach: Reach::Truncated,
        primes: PrimeRule::None,
        n_max_limit: None,
        run: cong_1_4,
    },
    CheckDef {
        name: "cong-1.4-literal",
        paper_ref: "(1.4) as printed",
        summary: "pod(3^(2a+3) + (23*3^(2a+2)+1)/8) = 0 (mod 3), one argument per a",
        default_n_max: 1,
        default_params: &[("alpha_max", 2)],
        reach: Reach::Truncated,
        primes: PrimeRule::None,
        n_max_limit: None,
        run: cong_1_4_literal,
    },
    CheckDef {
        name: "cor-1.2",
        paper_ref: "Corollary 1.2",
        summary: "pbar_o(4^a(24n+9)) = pbar_o(4^a(24n+15)) = 0 (mod 3)",
        default_n_max: 20_000,
        default_params: &[("alpha_max", 2)],
        reach: Reach::Truncated,
        primes: PrimeRule::None,
        n_max_limit: None,
        run: cor_1_2,
    },
    CheckDef {
        name: "cor-1.3",
        paper_ref: "Corollary 1.3",
        summary: "pbar_o(3 l^2 n) = 0 (mod 3) for l = 1,5,7,11 (mod 24), l not dividing n",
        default_n_max: 20_000,
        default_params: &[("prime", 5), ("prime", 7), ("prime", 11), ("prime", 29)],
        reach: Reach::Truncated,
        primes: PrimeRule::Mod24,
        n_max_limit: None,
        run: cor_1_3,
    },
    CheckDef {
        name: "cor-1.5",
        paper_ref: "Corollary 1.5",
        summary: "pbar(3 l^3 n) = 0 (mod 3) for l = 2 (mod 3), l not dividing n",
        default_n_max: 20_000,
        default_params: &[("prime", 5), ("prime", 11), ("prime", 17)],
        reach: Reach::Truncated,
        primes: PrimeRule::TwoMod3,
        n_max_limit: None,
        run: cor_1_5,
    },
    CheckDef {
        name: "id-pbar-3n-mod3",
        paper_ref: "Section 2, pbar(3n) identity",
        summary: "sum pbar(3n)q^n * D(q) = D(q^3)^2 (mod 3)",
        default_n_max: 2000,
        default_params: &[],
        reach: Reach::Independent,
        primes: PrimeRule::None,
        n_max_limit: None,
        run: id_pbar_3n,
    },
    CheckDef {
        name: "id-pbar_o-3n",
        paper_ref: "Section 2, pbar_o(3n) identity",
        summary: "sum pbar_o(3n)q^n * D(q)^2 = D(q^3)D(q^6), exact",
        default_n_max: 200,
        default_params: &[],
        reach: Reach::Independent,
        primes: PrimeRule::None,
        n_max_limit: None,
        run: id_pbar_odd_3n,
    },
    CheckDef {
        name: "id-ped-3n+1",
        paper_ref: "Section 2, ped(3n+1) identity",
        summary: "sum ped(3n+1)q^n * D(q)^2 = D(q^3)psi(-q^3), exact",
        default_n_max: 200,
        default_params: &[],
        reach: Reach::Independent,
        primes: PrimeRule::None,
        n_max_limit: None,
        run: id_ped_3n1,
    },
    CheckDef {
        name: "id-pod-3n+2",
        paper_ref: "Section 2, pod(3n+2) identity",
        summary: "sum (-1)^n pod(3n+2)q^n * psi(q)^4 = psi(q^3)^3, exact",
        default_n_max: 200,
        default_params: &[],
        reach: Reach::Independent,
        primes: PrimeRule::None,
        n_max_limit: None,
        run: id_pod_3n2,
    },
    CheckDef {
        name: "id-psi5-r5",
        paper_ref: "Section 2, psi(q)^5 congruence",
        summary: "psi(q)^5 = sum r5(8n+5)q^n (mod 3)",
        default_n_max: 200,
        default_params: &[],
        reach: Reach::Independent,
        primes: PrimeRule::None,
        n_max_limit: None,
        run: id_psi5_r5,
    },
    CheckDef {
        name: "lemma-r5-hecke",
        paper_ref: "Section 2, r5 Hecke relation",
        summary: "r5(l^2 n) = (l^3 - l(n/l) + 1)r5(n) - l^3 r5(n/l^2), exact, l^2 n <= n_max",
        default_n_max: 2000,
        default_params: &[("prime", 3), ("prime", 5)],
        reach: Reach::Independent,
        primes: PrimeRule::Odd,
        n_max_limit: Some(ENUMERATE_MAX),
        run: lemma_r5_hecke,
    },
    CheckDef {
        name: "oracle-forms",
        paper_ref: "Section 2, R(n, x^2+6y^2) and R(n, 2x^2+3y^2) formulas",
        summary: "closed forms for R(n, x^2+6y^2), R(n, 2x^2+3y^2) equal enumeration, 1 <= n <= n_max",
        default_n_max: 10_000,
        default_params: &[],
        reach: Reach::Independent,
        primes: PrimeRule::None,
        n_max_limit: None,
        run: oracle_forms,
    },
    CheckDef {
        name: "oracle-partitions",
        paper_ref: "Section 1, generating functions",
        summary: "series coefficients of pbar, pbar_o, ped, pod equal direct enumeration",
        default_n_max: 40,
        default_params: &[],
        reach: Reach::Independent,
        primes: PrimeRule::None,
        n_max_limit: Some(ORACLE_MAX),
        run: oracle_partitions,
    },
    CheckDef {
        name: "oracle-r5",
        paper_ref: "Theorem 1.4, r5",
        summary: "theta(q)^5 coefficients equal direct five-square enumeration",
        default_n_max: 300,
        default_params: &[],
        reach: Reach::Independent,
        primes: PrimeRule::None,
        n_max_limit: Some(ENUMERATE_MAX),
        run: oracle_r5,
    },
    CheckDef {
        name: "r5-9n+6",
        paper_ref: "Section 2, r5(9n+6) divisibility",
        summary: "r5(9n+6) = 0 (mod 3)",
        default_n_max: 200,
        default_params: &[],
        reach: Reach::Independent,
        primes: PrimeRule::None,
        n_max_limit: None,
        run: r5_9n6,
    },
    CheckDef {
        name: "theta-x2_6y2",
        paper_ref: "Section 1, R(n, x^2+6y^2)",
        summary: "sum R(n, x^2+6y^2)q^n = theta(q)theta(q^6)",
        default_n_max: 2000,
        default_params: &[],
        reach: Reach::Independent,
        primes: PrimeRule::None,
        n_max_limit: None,
        run: theta_x2_6y2,
    },
    CheckDef {
        name: "thm1.1-pbar_o",
        paper_ref: "Theorem 1.1, (1.7)",
        summary: "pbar_o(3n) = f(n)R(n, x^2+6y^2) (mod 3), by enumeration (route 0) and closed form (route 1)",
        default_n_max: 5000,
        default_params: &[],
        reach: Reach::Upto(|s| 3 * s.n_max),
        primes: PrimeRule::None,
        n_max_limit: None,
        run: thm11_pbar_odd,
    },
    CheckDef {
        name: "thm1.1-ped",
        paper_ref: "Theorem 1.1",
        summary: "ped(3n+1) = (-1)^(n+1) R(8n+3, 2x^2+3y^2) (mod 3)",
        default_n_max: 5000,
        default_params: &[],
        reach: Reach::Upto(|s| 3 * s.n_max + 1),
        primes: PrimeRule::None,
        n_max_limit: None,
        run: thm11_ped,
    },
    CheckDef {
        name: "thm1.1-relation-1.8",
        paper_ref: "(1.8)",
        summary: "(-1)^n ped(3n+1) = pbar_o(48n+18) (mod 3)",
        default_n_max: 2000,
        default_params: &[],
        reach: Reach::Upto(|s| 48 * s.n_max + 18),
        primes: PrimeRule::None,
        n_max_limit: None,
        run: relation_18,
    },
    CheckDef {
        name: "thm1.4-hecke-1.9",
        paper_ref: "(1.9)",
        summary: "pbar(3 l^2 n) = (l - l(n/l) + 1)pbar(3n) - l pbar(3n/l^2) (mod 3)",
        default_n_max: 300,
        default_params: &[("prime", 3), ("prime", 5), ("prime", 7)],
        reach: Reach::Upto(|s| {
            let l = primes(s).into_iter().max().unwrap_or(1);
            3 * l * l * s.n_max
        }),
        primes: PrimeRule::Odd,
        n_max_limit: None,
        run: hecke_19,
    },
    CheckDef {
        name: "thm1.4-pbar",
        paper_ref: "Theorem 1.4",
        summary: "pbar(3n) = (-1)^n r5(n) (mod 3)",
        default_n_max: 2000,
        default_params: &[],
        reach: Reach::Upto(|s| 3 * s.n_max),
        primes: PrimeRule::None,
        n_max_limit: None,
        run: thm14_pbar,
    },
    CheckDef {
        name: "thm1.4-pod",
        paper_ref: "Theorem 1.4, (1.10)",
        summary: "pod(3n+2) = (-1)^n r5(8n+5) (route 0) and (-1)^(n+1)pod(3n+2) = pbar(24n+15) (route 1), mod 3",
        default_n_max: 1000,
        default_params: &[],
        reach: Reach::Upto(|s| 24 * s.n_max + 15),
        primes: PrimeRule::None,
        n_max_limit: None,
        run: thm14_pod,
    },
    CheckDef {
        name: "vanish-forms",
        paper_ref: "Section 1 and 2, vanishing representation numbers",
        summary: "R(3n+2, x^2+6y^2) = R(9n+3, x^2+6y^2) = 0 (n <= n_max) and R(9n+6, x^2+y^2+3z^2) = 0 (n <= n_max/3)",
        default_n_max: 3000,
        default_params: &[],
        reach: Reach::Independent,
        primes: PrimeRule::None,
        n_max_limit: None,
        run: vanish_forms,
    },
];

// ---------------------------------------------------------------------------
// Theorem sweeps

fn thm11_pbar_odd(ctx: &Context, spec: &CheckSpec) -> Result<CheckReport, VerifyError> {
    let form = DiagonalForm::x2_6y2();
    let mut sweep = Sweep::default();
    for n in 0..=spec.n_max {
        let lhs = ctx.residue(PBAR_ODD, 3 * n)?;
        let f = f_sign(n);
        let enumerated = m3(signed(f, count_representations(n, &form) as i128));
        sweep.compare(n, &[("route", 0)], lhs, Some(enumerated));
        if n >= 1 {
            let closed = m3(signed(f, count_x2_6y2_formula(n)? as i128));
            sweep.compare(n, &[("route", 1)], lhs, Some(closed));
        }
    }
    sweep.finish(spec, registry_ref("thm1.1-pbar_o"))
}

fn thm11_ped(ctx: &Context, spec: &CheckSpec) -> Result<CheckReport, VerifyError> {
    let form = DiagonalForm::two_x2_3y2();
    let mut sweep = Sweep::default();
    for n in 0..=spec.n_max {
        let lhs = ctx.residue(PED, 3 * n + 1)?;
        let r = count_representations(8 * n + 3, &form) as i128;
        sweep.compare(n, &[], lhs, Some(m3(signed(-parity_sign(n), r))));
    }
    sweep.finish(spec, registry_ref("thm1.1-ped"))
}

fn relation_18(ctx: &Context, spec: &CheckSpec) -> Result<CheckReport, VerifyError> {
    let mut sweep = Sweep::default();
    for n in 0..=spec.n_max {
        let lhs = ctx
            .residue(PED, 3 * n + 1)?
            .map(|v| m3(signed(parity_sign(n), v)));
        let rhs = ctx.residue(PBAR_ODD, 48 * n + 18)?;
        sweep.compare(n, &[], lhs, rhs);
    }
    sweep.finish(spec, registry_ref("thm1.1-relation-1.8"))
}

fn thm14_pbar(ctx: &Context, spec: &CheckSpec) -> Result<CheckReport, VerifyError> {
    let r5 = r5_series(spec.n_max as usize, MOD3)?;
    let mut sweep = Sweep::default();
    for n in 0..=spec.n_max {
        let lhs = ctx.residue(PBAR, 3 * n)?;
        let rhs = m3(signed(parity_sign(n), r5.coeff(n as usize)));
        sweep.compare(n, &[], lhs, Some(rhs));
    }
    sweep.finish(spec, registry_ref("thm1.4-pbar"))
}

fn thm14_pod(ctx: &Context, spec: &CheckSpec) -> Result<CheckReport, VerifyError> {
    let r5 = r5_series(8 * spec.n_max as usize + 5, MOD3)?;
    let mut sweep = Sweep::default();
    for n in 0..=spec.n_max {
        let pod = ctx.residue(POD, 3 * n + 2)?;
        let s = parity_sign(n);
        let r = m3(signed(s, r5.coeff(8 * n as usize + 5)));
        sweep.compare(n, &[("route", 0)], pod, Some(r));
        let lhs = pod.map(|v| m3(signed(-s, v)));
        sweep.compare(n, &[("route", 1)], lhs, ctx.residue(PBAR, 24 * n + 15)?);
    }
    sweep.finish(spec, registry_ref("thm1.4-pod"))
}

fn hecke_19(ctx: &Context, spec: &CheckSpec) -> Result<CheckReport, VerifyError> {
    let mut sweep = Sweep::default();
    for ell in primes(spec) {
        let l = ell as i128;
        for n in 0..=spec.n_max {
            let lhs = ctx.residue(PBAR, 3 * ell * ell * n)?;
            let symbol = legendre((n % ell) as i64, ell as i64)? as i128;
            let base = ctx.residue(PBAR, 3 * n)?;
            let reduced = if (3 * n) % (ell * ell) == 0 {
                ctx.residue(PBAR, 3 * n / (ell * ell))?
            } else {
                Some(0)
            };
            let rhs = base
                .zip(reduced)
                .map(|(b, r)| m3((l - l * symbol + 1) * b - l * r));
            sweep.compare(n, &[("prime", ell as i64)], lhs, rhs);
        }
    }
    sweep.finish(spec, registry_ref("thm1.4-hecke-1.9"))
}

fn lemma_r5_hecke(_: &Context, spec: &CheckSpec) -> Result<CheckReport, VerifyError> {
    let table = R5Table::new(spec.n_max as usize)?;
    let mut sweep = Sweep::default();
    for ell in primes(spec) {
        for n in 0..=spec.n_max / (ell * ell) {
            let lhs = r5_enumerate(ell * ell * n)? as i128;
            let rhs = r5_hecke_rhs(ell, n, &table)?;
            sweep.compare(n, &[("prime", ell as i64)], Some(lhs), Some(rhs));
        }
    }
    sweep.finish(spec, registry_ref("lemma-r5-hecke"))
}

// ---------------------------------------------------------------------------
// Congruence families: F(A n + B) ≡ 0 (mod 3)

struct Progression {
    params: [(&'static str, i64); 2],
    a: u64,
    b: u64,
}

fn family(
    ctx: &Context,
    spec: &CheckSpec,
    kind: PartitionKind,
    progressions: &[Progression],
) -> Result<CheckReport, VerifyError> {
    let mut sweep = Sweep::default();
    for p in progressions {
        for n in 0..=spec.n_max {
            let lhs = match p.a.checked_mul(n).and_then(|an| an.checked_add(p.b)) {
                Some(arg) => ctx.residue(kind, arg)?,
                None => None,
            };
            sweep.compare(n, &p.params, lhs, Some(0));
        }
    }
    sweep.finish(spec, registry_ref(&spec.name))
}

fn cong_1_1(ctx: &Context, spec: &CheckSpec) -> Result<CheckReport, VerifyError> {
    let mut ps = Vec::new();
    for alpha in 0..=alpha_max(spec) {
        let s = 9u64.pow(alpha);
        let a = alpha as i64;
        ps.push(Progression {
            params: [("alpha", a), ("form", 0)],
            a: 9 * s,
            b: 6 * s,
        });
        ps.push(Progression {
            params: [("alpha", a), ("form", 1)],
            a: 27 * s,
            b: 9 * s,
        });
    }
    family(ctx, spec, PBAR_ODD, &ps)
}

fn cong_1_2(ctx: &Context, spec: &CheckSpec) -> Result<CheckReport, VerifyError> {
    let mut ps = Vec::new();
    for alpha in 0..=alpha_max(spec) {
        let a = alpha as i64;
        ps.push(Progression {
            params: [("alpha", a), ("form", 0)],
            a: 3u64.pow(2 * alpha + 3),
            b: (17 * 3u64.pow(2 * alpha + 2) - 1) / 8,
        });
        ps.push(Progression {
            params: [("alpha", a), ("form", 1)],
            a: 3u64.pow(2 * alpha + 2),
            b: (19 * 3u64.pow(2 * alpha + 1) - 1) / 8,
        });
    }
    family(ctx, spec, PED, &ps)
}

fn cong_1_3(ctx: &Context, spec: &CheckSpec) -> Result<CheckReport, VerifyError> {
    let ps: Vec<_> = (0..=alpha_max(spec))
        .map(|alpha| {
            let s = 9u64.pow(alpha);
            Progression {
                params: [("alpha", alpha as i64), ("form", 0)],
                a: 27 * s,
                b: 18 * s,
            }
        })
        .collect();
    family(ctx, spec, PBAR, &ps)
}

fn cong_1_4_offset(alpha: u32) -> (u64, u64) {
    (
        3u64.pow(2 * alpha + 3),
        (23 * 3u64.pow(2 * alpha + 2) + 1) / 8,
    )
}

fn cong_1_4(ctx: &Context, spec: &CheckSpec) -> Result<CheckReport, VerifyError> {
    let ps: Vec<_> = (0..=alpha_max(spec))
        .map(|alpha| {
            let (a, b) = cong_1_4_offset(alpha);
            Progression {
                params: [("alpha", alpha as i64), ("form", 0)],
                a,
                b,
            }
        })
        .collect();
    family(ctx, spec, POD, &ps)
}

/// The n-free argument `3^(2a+3) + (23·3^(2a+2)+1)/8`, one point per `a`;
/// the reported `n` is the argument itself.
fn cong_1_4_literal(ctx: &Context, spec: &CheckSpec) -> Result<CheckReport, VerifyError> {
    let mut sweep = Sweep::default();
    for alpha in 0..=alpha_max(spec) {
        let (a, b) = cong_1_4_offset(alpha);
        let arg = a + b;
        sweep.compare(
            arg,
            &[("alpha", alpha as i64)],
            ctx.residue(POD, arg)?,
            Some(0),
        );
    }
    sweep.finish(spec, registry_ref("cong-1.4-literal"))
}

fn cor_1_2(ctx: &Context, spec: &CheckSpec) -> Result<CheckReport, VerifyError> {
    let mut ps = Vec::new();
    for alpha in 0..=alpha_max(spec) {
        let s = 4u64.pow(alpha);
        let a = alpha as i64;
        ps.push(Progression {
            params: [("alpha", a), ("form", 0)],
            a: 24 * s,
            b: 9 * s,
        });
        ps.push(Progression {
            params: [("alpha", a), ("form", 1)],
            a: 24 * s,
            b: 15 * s,
        });
    }
    family(ctx, spec, PBAR_ODD, &ps)
}

/// `F(c·n) ≡ 0` over `1 <= n <= n_max` with `ℓ ∤ n`; multiples of `ℓ` are
/// excluded by the generator and not counted at all.
fn coprime_family(
    ctx: &Context,
    spec: &CheckSpec,
    kind: PartitionKind,
    scale: fn(u64) -> u64,
) -> Result<CheckReport, VerifyError> {
    let mut sweep = Sweep::default();
    for ell in primes(spec) {
        let c = scale(ell);
        for n in (1..=spec.n_max).filter(|n| n % ell != 0) {
            let lhs = match c.checked_mul(n) {
                Some(arg) => ctx.residue(kind, arg)?,
                None => None,
            };
            sweep.compare(n, &[("prime", ell as i64)], lhs, Some(0));
        }
    }
    sweep.finish(spec, registry_ref(&spec.name))
}

fn cor_1_3(ctx: &Context, spec: &CheckSpec) -> Result<CheckReport, VerifyError> {
    coprime_family(ctx, spec, PBAR_ODD, |l| 3 * l * l)
}

fn cor_1_5(ctx: &Context, spec: &CheckSpec) -> Result<CheckReport, VerifyError> {
    coprime_family(ctx, spec, PBAR, |l| 3 * l * l * l)
}

// ---------------------------------------------------------------------------
// Series identities, checked by cross-multiplication

fn id_pbar_odd_3n(_: &Context, spec: &CheckSpec) -> Result<CheckReport, VerifyError> {
    let n = spec.n_max as usize;
    let sub = coefficients(PBAR_ODD, 3 * n, EXACT)?.extract(3, 0)?;
    let d = theta_d(n, EXACT);
    let lhs = sub.mul(&d)?.mul(&d)?;
    let rhs = d.substitute_power(3).mul(&d.substitute_power(6))?;
    let mut sweep = Sweep::default();
    compare_series(&mut sweep, &lhs, &rhs);
    sweep.finish(spec, registry_ref("id-pbar_o-3n"))
}

fn id_ped_3n1(_: &Context, spec: &CheckSpec) -> Result<CheckReport, VerifyError> {
    let n = spec.n_max as usize;
    let sub = coefficients(PED, 3 * n + 1, EXACT)?.extract(3, 1)?;
    let d = theta_d(n, EXACT);
    let lhs = sub.mul(&d)?.mul(&d)?;
    let psi_neg_q3 = theta_psi(n, EXACT).substitute_negate().substitute_power(3);
    let rhs = d.substitute_power(3).mul(&psi_neg_q3)?;
    let mut sweep = Sweep::default();
    compare_series(&mut sweep, &lhs, &rhs);
    sweep.finish(spec, registry_ref("id-ped-3n+1"))
}

fn id_pbar_3n(_: &Context, spec: &CheckSpec) -> Result<CheckReport, VerifyError> {
    let n = spec.n_max as usize;
    let sub = coefficients(PBAR, 3 * n, MOD3)?.extract(3, 0)?;
    let d = theta_d(n, MOD3);
    let lhs = sub.mul(&d)?;
    let d3 = d.substitute_power(3);
    let rhs = d3.mul(&d3)?;
    let mut sweep = Sweep::default();
    compare_series(&mut sweep, &lhs, &rhs);
    sweep.finish(spec, registry_ref("id-pbar-3n-mod3"))
}

fn id_pod_3n2(_: &Context, spec: &CheckSpec) -> Result<CheckReport, VerifyError> {
    let n = spec.n_max as usize;
    let signed_sub = coefficients(POD, 3 * n + 2, EXACT)?
        .extract(3, 2)?
        .substitute_negate();
    let psi = theta_psi(n, EXACT);
    let lhs = signed_sub.mul(&psi.pow(4)?)?;
    let rhs = psi.substitute_power(3).pow(3)?;
    let mut sweep = Sweep::default();
    compare_series(&mut sweep, &lhs, &rhs);
    sweep.finish(spec, registry_ref("id-pod-3n+2"))
}

fn id_psi5_r5(_: &Context, spec: &CheckSpec) -> Result<CheckReport, VerifyError> {
    let n = spec.n_max;
    let psi5 = theta_psi(n as usize, MOD3).pow(5)?;
    let table = R5Table::new(8 * n as usize + 5)?;
    let mut sweep = Sweep::default();
    for k in 0..=n {
        let rhs = m3(table.get(8 * k + 5)?);
        sweep.compare(k, &[], Some(psi5.coeff(k as usize)), Some(rhs));
    }
    sweep.finish(spec, registry_ref("id-psi5-r5"))
}

// ---------------------------------------------------------------------------
// Representation-number facts and oracles

fn vanish_forms(_: &Context, spec: &CheckSpec) -> Result<CheckReport, VerifyError> {
    let binary = DiagonalForm::x2_6y2();
    let ternary = DiagonalForm::x2_y2_3z2();
    let mut sweep = Sweep::default();
    for n in 0..=spec.n_max {
        let r = count_representations(3 * n + 2, &binary) as i128;
        sweep.compare(n, &[("form", 0)], Some(r), Some(0));
        let r = count_representations(9 * n + 3, &binary) as i128;
        sweep.compare(n, &[("form", 1)], Some(r), Some(0));
    }
    for n in 0..=spec.n_max / 3 {
        let r = count_representations(9 * n + 6, &ternary) as i128;
        sweep.compare(n, &[("form", 2)], Some(r), Some(0));
    }
    sweep.finish(spec, registry_ref("vanish-forms"))
}

fn r5_9n6(_: &Context, spec: &CheckSpec) -> Result<CheckReport, VerifyError> {
    let table = R5Table::new(9 * spec.n_max as usize + 6)?;
    let mut sweep = Sweep::default();
    for n in 0..=spec.n_max {
        sweep.compare(n, &[], Some(m3(table.get(9 * n + 6)?)), Some(0));
    }
    sweep.finish(spec, registry_ref("r5-9n+6"))
}

fn theta_x2_6y2(_: &Context, spec: &CheckSpec) -> Result<CheckReport, VerifyError> {
    let n = spec.n_max as usize;
    let t = theta(n, EXACT);
    let product = t.mul(&t.substitute_power(6))?;
    let form = DiagonalForm::x2_6y2();
    let mut sweep = Sweep::default();
    for k in 0..=n {
        let r = count_representations(k as u64, &form) as i128;
        sweep.compare(k as u64, &[], Some(r), Some(product.coeff(k)));
    }
    sweep.finish(spec, registry_ref("theta-x2_6y2"))
}

fn oracle_partitions(_: &Context, spec: &CheckSpec) -> Result<CheckReport, VerifyError> {
    let mut sweep = Sweep::default();
    for (i, kind) in PartitionKind::ALL.into_iter().enumerate() {
        let s = coefficients(kind, spec.n_max as usize, EXACT)?;
        for n in 0..=spec.n_max {
            let counted = enumerate_count(kind, n).expect("n_max validated") as i128;
            sweep.compare(
                n,
                &[("kind", i as i64)],
                Some(s.coeff(n as usize)),
                Some(counted),
            );
        }
    }
    sweep.finish(spec, registry_ref("oracle-partitions"))
}

fn oracle_forms(_: &Context, spec: &CheckSpec) -> Result<CheckReport, VerifyError> {
    let (a, b) = (DiagonalForm::x2_6y2(), DiagonalForm::two_x2_3y2());
    let mut sweep = Sweep::default();
    for n in 1..=spec.n_max {
        let closed = count_x2_6y2_formula(n)? as i128;
        sweep.compare(
            n,
            &[("form", 0)],
            Some(closed),
            Some(count_representations(n, &a) as i128),
        );
        let closed = count_2x2_3y2_formula(n)? as i128;
        sweep.compare(
            n,
            &[("form", 1)],
            Some(closed),
            Some(count_representations(n, &b) as i128),
        );
    }
    sweep.finish(spec, registry_ref("oracle-forms"))
}

fn oracle_r5(_: &Context, spec: &CheckSpec) -> Result<CheckReport, VerifyError> {
    let table = R5Table::new(spec.n_max as usize)?;
    let mut sweep = Sweep::default();
    for n in 0..=spec.n_max {
        sweep.compare(n, &[], Some(table.get(n)?), Some(r5_enumerate(n)? as i128));
    }
    sweep.finish(spec, registry_ref("oracle-r5"))
}

fn registry_ref(name: &str) -> &'static str {
    REGISTRY
        .iter()
        .find(|d| d.name == name)
        .map(|d| d.paper_ref)
        .expect("check is registered")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(order: usize) -> Context {
        Context::new(MOD3, order).unwrap()
    }

    fn run(name: &str, ctx: &Context, n_max: u64, params: &[(&str, i64)]) -> CheckReport {
        let def = REGISTRY.iter().find(|d| d.name == name).unwrap();
        let mut spec = def.default_spec();
        spec.n_max = n_max;
        if !params.is_empty() {
            spec.params = params.iter().map(|&(k, v)| (k.to_string(), v)).collect();
        }
        def.run(ctx, &spec).unwrap()
    }

    #[test]
    fn registry_names_are_unique_and_sorted() {
        let names: Vec<_> = REGISTRY.iter().map(|d| d.name).collect();
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(names, sorted);
    }

    #[test]
    fn small_theorem_examples() {
        let c = ctx(2000);
        // pbar_o(6) = 12 ≡ 0 = f(2)R(2); pbar_o(3) = 4 ≡ 1 ≡ -2.
        assert_eq!(c.residue(PBAR_ODD, 6).unwrap(), Some(0));
        assert_eq!(c.residue(PBAR_ODD, 3).unwrap(), Some(1));
        // ped(1) = 1, ped(4) = 4.
        assert_eq!(c.residue(PED, 1).unwrap(), Some(1));
        assert_eq!(c.residue(PED, 4).unwrap(), Some(1));
        // pbar(3) = 8 ≡ 2 ≡ -r5(1).
        assert_eq!(c.residue(PBAR, 3).unwrap(), Some(2));
        // pod(2) = 1 ≡ r5(5) = 112.
        assert_eq!(c.residue(POD, 2).unwrap(), Some(1));
        assert_eq!(c.residue(PBAR, 2001).unwrap(), None);
        for name in ["thm1.1-pbar_o", "thm1.1-ped", "thm1.4-pbar"] {
            assert!(run(name, &c, 300, &[]).passed, "{name}");
        }
        assert!(run("thm1.1-relation-1.8", &c, 40, &[]).passed);
        assert!(run("thm1.4-pod", &c, 80, &[]).passed);
    }

    #[test]
    fn family_examples_and_skips() {
        let c = ctx(1000);
        // cong-1.2 with alpha = 0 starts at ped(19) and ped(7).
        let r = run("cong-1.2", &c, 100, &[("alpha_max", 0)]);
        assert!(r.passed);
        // 27n + 19 <= 1000 → n <= 36; 9n + 7 <= 1000 → n <= 110 (capped at 100).
        assert_eq!(r.tested, 37 + 101);
        assert_eq!(r.skipped, 101 - 37);
        let r = run("cong-1.3", &c, 10, &[("alpha_max", 0)]);
        assert!(r.passed && r.tested == 11);
    }

    #[test]
    fn coprimality_is_applied_in_the_generator() {
        let c = ctx(10_000);
        let r = run("cor-1.3", &c, 20, &[("prime", 5)]);
        // n in 1..=20 without multiples of 5: 16 points; 75·n <= 1500 all in range.
        assert_eq!((r.tested, r.skipped), (16, 0));
        assert!(r.passed);
    }

    #[test]
    fn corollary_1_5_fails_for_two() {
        let c = ctx(5000);
        let r = run("cor-1.5", &c, 50, &[("prime", 2)]);
        assert!(!r.passed);
        // pbar(24) ≡ r5(8) = 200 ≡ 2
        assert_eq!(r.counterexamples[0].n, 1);
        assert_eq!(r.counterexamples[0].lhs, 2);
    }

    #[test]
    fn empty_effective_range() {
        let c = ctx(10);
        let def = REGISTRY.iter().find(|d| d.name == "cong-1.3").unwrap();
        let spec = def.default_spec();
        assert!(matches!(
            def.run(&c, &spec),
            Err(VerifyError::EmptyRange(_))
        ));
        let mut zero = def.default_spec();
        zero.n_max = 0;
        assert!(matches!(
            def.run(&ctx(1000), &zero),
            Err(VerifyError::EmptyRange(_))
        ));
    }

    #[test]
    fn prime_rules() {
        let def = REGISTRY.iter().find(|d| d.name == "cor-1.3").unwrap();
        let mut spec = def.default_spec();
        spec.params = vec![("prime".into(), 13)];
        assert!(matches!(
            def.validate(&spec),
            Err(VerifyError::BadPrime { prime: 13, .. })
        ));
        let def = REGISTRY
            .iter()
            .find(|d| d.name == "thm1.4-hecke-1.9")
            .unwrap();
        spec.params = vec![("prime".into(), 2)];
        assert!(def.validate(&spec).is_err());
        spec.params = vec![("prime".into(), 9)];
        assert!(def.validate(&spec).is_err());
        let def = REGISTRY.iter().find(|d| d.name == "cor-1.5").unwrap();
        spec.params = vec![("prime".into(), 2)];
        assert!(def.validate(&spec).is_ok());
    }
}
