use partcong::partitions::PartitionKind;
use partcong::series::CoefficientRing;
use partcong::verify::{
    exit_code, registry, render, resolve, run_all, run_with, CheckDef, CheckSpec, Context,
    OutputFormat, Perturbation, RunConfig, VerifyError,
};
use proptest::prelude::*;
use std::sync::LazyLock;

fn spec(name: &str, n_max: u64, params: &[(&str, i64)]) -> (&'static CheckDef, CheckSpec) {
    let def = registry().iter().find(|d| d.name == name).unwrap();
    let mut s = def.default_spec();
    s.n_max = n_max;
    if !params.is_empty() {
        s.params = params.iter().map(|&(k, v)| (k.to_string(), v)).collect();
    }
    (def, s)
}

/// Covers 3·7²·n for n < 400.
static WIDE: LazyLock<Context> = LazyLock::new(|| mod3(3 * 49 * 400));

fn mod3(order: usize) -> Context {
    Context::new(CoefficientRing::MOD3, order).unwrap()
}

#[test]
fn default_run_passes() {
    let reports = run_all(&RunConfig::default()).unwrap();
    assert_eq!(reports.len(), registry().len());
    for r in &reports {
        assert!(r.passed, "{}", r.to_json());
    }
    assert_eq!(exit_code(&reports), 0);
}

#[test]
fn zero_bound_is_an_empty_range() {
    let config = RunConfig {
        checks: vec!["cong-1.1".into()],
        n_max: Some(0),
        ..Default::default()
    };
    let err = run_all(&config).unwrap_err();
    assert_eq!(err, VerifyError::EmptyRange("cong-1.1".into()));
    assert_eq!(err.to_string(), "cong-1.1: empty effective range");
}

#[test]
fn overrides_reach_the_right_params() {
    let config = RunConfig {
        checks: vec!["cor-1.5".into(), "cong-1.2".into(), "thm1.1-ped".into()],
        alpha_max: Some(3),
        primes: Some(vec![2, 23]),
        ..Default::default()
    };
    let specs = resolve(&config).unwrap();
    assert_eq!(specs[0].1.params_named("prime"), vec![2, 23]);
    assert_eq!(specs[1].1.param("alpha_max"), Some(3));
    assert!(specs[2].1.params.is_empty());
    let bad = RunConfig {
        checks: vec!["cor-1.3".into()],
        primes: Some(vec![13]),
        ..Default::default()
    };
    assert!(matches!(
        resolve(&bad),
        Err(VerifyError::BadPrime { prime: 13, .. })
    ));
}

#[test]
fn non_multiple_of_three_ring_is_rejected() {
    assert!(matches!(
        Context::new(CoefficientRing::Modular(5), 10),
        Err(VerifyError::Config(_))
    ));
    let ctx = Context::new(CoefficientRing::Modular(6), 100).unwrap();
    let specs = [spec("thm1.1-pbar_o", 30, &[])];
    assert!(run_with(&ctx, &specs).unwrap()[0].passed);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn family_counts_add_up(order in 10usize..4000, n_max in 1u64..500, alpha in 0i64..3) {
        let ctx = mod3(order);
        let (def, s) = spec("cong-1.1", n_max, &[("alpha_max", alpha)]);
        let progressions: Vec<(u64, u64)> = (0..=alpha as u32)
            .flat_map(|a| {
                let p = 9u64.pow(a);
                [(9 * p, 6 * p), (27 * p, 9 * p)]
            })
            .collect();
        let in_range: u64 = progressions
            .iter()
            .map(|&(a, b)| (0..=n_max).filter(|n| a * n + b <= order as u64).count() as u64)
            .sum();
        match def.run(&ctx, &s) {
            Ok(r) => {
                prop_assert_eq!(r.tested + r.skipped, progressions.len() as u64 * (n_max + 1));
                prop_assert_eq!(r.tested, in_range);
                prop_assert!(r.passed);
            }
            Err(e) => {
                prop_assert_eq!(in_range, 0);
                prop_assert_eq!(e, VerifyError::EmptyRange("cong-1.1".into()));
            }
        }
    }

    #[test]
    fn corollary_counts_exclude_multiples(n_max in 1u64..400) {
        let (def, s) = spec("cor-1.3", n_max, &[("prime", 5), ("prime", 7)]);
        let r = def.run(&WIDE, &s).unwrap();
        let coprime = |l: u64| n_max - n_max / l;
        prop_assert_eq!(r.tested, coprime(5) + coprime(7));
        prop_assert_eq!(r.skipped, 0);
    }

    /// A single changed coefficient fails exactly the checks that read it.
    #[test]
    fn perturbation_is_localized(k in 1usize..150, delta in 1i128..3) {
        let specs = [
            spec("thm1.1-pbar_o", 150, &[]),
            spec("thm1.4-pbar", 150, &[]),
            spec("thm1.1-ped", 150, &[]),
        ];
        let hit = |kind, index| {
            let ctx = mod3(460).with_perturbation(Perturbation { kind, index, delta });
            run_with(&ctx, &specs)
                .unwrap()
                .into_iter()
                .map(|r| (r.spec.name.clone(), r.passed))
                .collect::<Vec<_>>()
        };
        let names = |v: &[(String, bool)]| -> Vec<String> {
            v.iter().filter(|(_, p)| !p).map(|(n, _)| n.clone()).collect()
        };
        prop_assert_eq!(names(&hit(PartitionKind::OverpartitionOdd, 3 * k)), vec!["thm1.1-pbar_o"]);
        prop_assert_eq!(names(&hit(PartitionKind::Overpartition, 3 * k)), vec!["thm1.4-pbar"]);
        prop_assert_eq!(names(&hit(PartitionKind::Ped, 3 * k + 1)), vec!["thm1.1-ped"]);
        // Positions no check reads.
        prop_assert!(names(&hit(PartitionKind::Ped, 3 * k)).is_empty());
        prop_assert!(names(&hit(PartitionKind::Pod, k)).is_empty());
    }

    #[test]
    fn runs_are_deterministic(n_max in 1u64..300) {
        let specs = [
            spec("cor-1.5", n_max, &[("prime", 2), ("prime", 5)]),
            spec("thm1.4-hecke-1.9", n_max.min(20), &[]),
            spec("cong-1.4", n_max, &[]),
        ];
        let a = run_with(&WIDE, &specs).unwrap();
        let b = run_with(&mod3(3 * 49 * 400), &specs).unwrap();
        prop_assert_eq!(render(&a, OutputFormat::Json), render(&b, OutputFormat::Json));
    }
}
