//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. Every check is exact (rational arithmetic, polynomial identity
//! or divisibility); the only tolerances anywhere are wall-clock bounds.

use std::time::Instant;

use baxterq::qhierarchy::{Convention, GenConfig, QHierarchy};
use baxterq::scalar::int;
use baxterq::subset::Subset;
use baxterq::twist::TwistData;
use baxterq::verify::{mutation_seeds, run_suite, Checker, Mode, Suite, SuiteConfig, VerifyReport};
use baxterq::Partition;

fn build_pair(m: usize, n: usize, deg: u32, seed: u64) -> (QHierarchy, QHierarchy) {
    let twist = TwistData::auto(m, n);
    let cfg = GenConfig::uniform(seed, deg, m + n);
    (
        QHierarchy::build(twist.clone(), Convention::Unbarred, &cfg).expect("unbarred build"),
        QHierarchy::build(twist, Convention::Barred, &cfg).expect("barred build"),
    )
}

fn assert_all_pass(criterion: &str, reports: &[VerifyReport]) {
    let fails: Vec<&VerifyReport> = reports.iter().filter(|r| !r.pass).collect();
    for f in &fails {
        eprintln!("  {}", f.line(false));
    }
    println!(
        "ACCEPTANCE {criterion}: {} ({} checks)",
        if fails.is_empty() { "PASS" } else { "FAIL" },
        reports.len()
    );
    assert!(
        fails.is_empty(),
        "{criterion}: {} failing checks",
        fails.len()
    );
}

#[test]
fn criterion_01_qq_suite_grid() {
    let start = Instant::now();
    let mut reports = Vec::new();
    for (m, n) in [(1usize, 1usize), (2, 1), (2, 2), (3, 1)] {
        for seed in 0..5u64 {
            let (unb, bar) = build_pair(m, n, 2, seed);
            reports.extend(run_suite(Suite::Qq, &unb, &bar, &SuiteConfig::default()));
        }
    }
    let elapsed = start.elapsed();
    assert_all_pass("01 qq-relations", &reports);
    println!("ACCEPTANCE 01 runtime: {elapsed:?} (bound 120 s)");
    assert!(
        elapsed.as_secs() < 120,
        "QQ suite exceeded the runtime bound"
    );
}

#[test]
fn criterion_02_wronskian_solution_and_cauchy() {
    // The hierarchies are built from the Wronskian determinant formula, so
    // the QQ suite passing over the full grid is exactly the solution
    // theorem; the Cauchy-type identity is checked determinant-vs-product.
    let mut reports = Vec::new();
    for (m, n) in [(1usize, 1usize), (2, 1), (2, 2), (3, 1)] {
        for seed in 0..5u64 {
            let (unb, bar) = build_pair(m, n, 2, seed);
            let mut checker = Checker::new(Mode::Exact);
            baxterq::verify::qq::verify_qq(&mut checker, &unb);
            baxterq::verify::qq::verify_qq(&mut checker, &bar);
            reports.extend(checker.reports);
        }
    }
    let mut checker = Checker::new(Mode::Exact);
    baxterq::verify::qq::verify_cauchy_deno(&mut checker, 3);
    let cauchy = checker.reports.iter().filter(|r| r.id == "bf-id").count();
    assert_eq!(cauchy, 15, "all (m, n) pairs with m, n <= 3 checked");
    reports.extend(checker.reports);
    assert_all_pass("02 wronskian-solution", &reports);
}

#[test]
fn criterion_03_t_system() {
    let start = Instant::now();
    let (unb, bar) = build_pair(2, 2, 1, 0);
    let cfg = SuiteConfig {
        a_max: 4,
        s_max: 4,
        mode: Mode::Exact,
    };
    let reports = run_suite(Suite::Tsystem, &unb, &bar, &cfg);
    let elapsed = start.elapsed();
    assert!(
        reports.iter().any(|r| r.id == "t-system1")
            && reports.iter().any(|r| r.id == "t-system2")
            && reports.iter().any(|r| r.id == "reduc1")
            && reports.iter().any(|r| r.id == "reduc4")
            && reports.iter().any(|r| r.id == "dual-mn")
            && reports.iter().any(|r| r.id == "dual-mn2"),
        "all display families instantiated"
    );
    assert_all_pass("03 t-system", &reports);
    println!("ACCEPTANCE 03 runtime: {elapsed:?} (bound 300 s)");
    assert!(
        elapsed.as_secs() < 300,
        "T-system suite exceeded the runtime bound"
    );
}

#[test]
fn criterion_04_backlund() {
    let (unb, bar) = build_pair(2, 2, 1, 0);
    let cfg = SuiteConfig {
        a_max: 3,
        s_max: 3,
        mode: Mode::Exact,
    };
    let reports = run_suite(Suite::Backlund, &unb, &bar, &cfg);
    for id in [
        "bac1", "bac2", "bac3", "bac4", "bac5", "bac6", "bac7", "bac8", "tqeq",
    ] {
        assert!(reports.iter().any(|r| r.id == id), "{id} instantiated");
    }
    assert_all_pass("04 backlund", &reports);
}

#[test]
fn criterion_05_tf_route_agreement() {
    let mut reports = Vec::new();
    for (m, n) in [(1usize, 1usize), (2, 1), (2, 2)] {
        let (unb, bar) = build_pair(m, n, 1, 0);
        reports.extend(run_suite(
            Suite::TfRoutes,
            &unb,
            &bar,
            &SuiteConfig::default(),
        ));
    }
    let tab_checks = reports
        .iter()
        .filter(|r| r.id.starts_with("tf-rel") && r.params.contains("routes=tab"))
        .count();
    assert!(
        tab_checks >= 40,
        "route grid is populated ({tab_checks} tab instances)"
    );
    assert_all_pass("05 tf-routes", &reports);
}

#[test]
fn criterion_06_baxter_equations() {
    let (unb, bar) = build_pair(2, 2, 1, 0);
    let reports = run_suite(Suite::Baxter, &unb, &bar, &SuiteConfig::default());
    for id in [
        "baxtereq1",
        "baxtereq2",
        "baxtereq3",
        "baxtereq4",
        "baxtereq1r",
        "baxtereq2r",
    ] {
        assert!(reports.iter().any(|r| r.id == id), "{id} instantiated");
    }
    assert_all_pass("06 baxter-equations", &reports);
}

#[test]
fn criterion_07_conserved_quantities() {
    // (m, n) = (1, 1) and (2, 1) canonical pairs inside a (2, 1) twist.
    let (unb, bar) = build_pair(2, 1, 1, 0);
    let reports = run_suite(Suite::Conserved, &unb, &bar, &SuiteConfig::default());
    for id in [
        "cons-det-I",
        "cons-det-J",
        "cons-det-K",
        "cons-det-L",
        "th-cons1-I",
        "th-cons3-K",
        "baxterEQ-general",
        "baxterEQ-general-2",
    ] {
        assert!(reports.iter().any(|r| r.id == id), "{id} instantiated");
    }
    assert_all_pass("07 conserved", &reports);
}

#[test]
fn criterion_08_pole_cancellation_all_orders() {
    let (unb, bar) = build_pair(2, 1, 1, 0);
    let reports = run_suite(Suite::Pole, &unb, &bar, &SuiteConfig::default());
    // 3! tuple orders, two adjacent levels each.
    assert_eq!(reports.len(), 12, "all 3! orders and both levels checked");
    assert_all_pass("08 pole-cancellation", &reports);
}

#[test]
fn criterion_09_character_limit() {
    let (unb, bar) = build_pair(2, 2, 1, 0);
    let reports = run_suite(Suite::Chars, &unb, &bar, &SuiteConfig::default());
    let three_way = reports.iter().filter(|r| r.id == "char-3way").count();
    // Partitions of size <= 6 inside the (2,2) hook.
    assert!(three_way >= 30, "hook enumeration populated ({three_way})");
    assert_all_pass("09 characters", &reports);
    // The (1,1) single-box value is z1 - z2 exactly.
    let twist = TwistData::new(1, 1, int(2), vec![int(2), int(3)]).unwrap();
    let mu: Partition = "1".parse().unwrap();
    let val = baxterq::tfun::chars::sergeev_pragacz(&twist, &mu).unwrap();
    assert_eq!(val, int(2) - int(3));
    println!("ACCEPTANCE 09 single-box value: PASS (z1 - z2 = -1)");
}

#[test]
fn criterion_10_mutation_sensitivity() {
    // For qq, tsystem and backlund every subset of the (2,1) hierarchy
    // enters the checked displays, so every single +1 coefficient
    // perturbation must produce a failing record, reproducibly.
    let cases: [(Suite, usize); 3] = [(Suite::Qq, 20), (Suite::Tsystem, 20), (Suite::Backlund, 20)];
    let cfg = SuiteConfig {
        a_max: 2,
        s_max: 2,
        mode: Mode::Exact,
    };
    for (suite, min_detected) in cases {
        let (unb, bar) = build_pair(2, 1, 2, 1);
        let baseline = run_suite(suite, &unb, &bar, &cfg);
        assert!(baseline.iter().all(|r| r.pass), "baseline must pass");
        let mut detected = 0usize;
        for seed in mutation_seeds(7, 20) {
            let (mutated, witness) = unb.with_mutation(seed);
            let reports = run_suite(suite, &mutated, &bar, &cfg);
            let fails: Vec<String> = reports
                .iter()
                .filter(|r| !r.pass)
                .map(|r| r.line(false))
                .collect();
            if !fails.is_empty() {
                detected += 1;
            }
            // Reproducibility: the identical mutation yields the identical
            // records, failing or not.
            let (mutated2, witness2) = unb.with_mutation(seed);
            assert_eq!(witness, witness2);
            let reports2 = run_suite(suite, &mutated2, &bar, &cfg);
            let fails2: Vec<String> = reports2
                .iter()
                .filter(|r| !r.pass)
                .map(|r| r.line(false))
                .collect();
            assert_eq!(fails, fails2, "witness not reproducible");
        }
        println!(
            "ACCEPTANCE 10 mutation-sensitivity [{}]: {} ({detected}/20 mutations detected, \
             required >= {min_detected})",
            suite.name(),
            if detected >= min_detected {
                "PASS"
            } else {
                "FAIL"
            },
        );
        assert!(
            detected >= min_detected,
            "{}: only {detected}/20 mutations produced failures",
            suite.name()
        );
    }
}

/// The Baxter-equation leg of the mutation-sensitivity criterion cannot
/// pass: each Baxter equation is the Laplace expansion of a determinant
/// whose appended Q_k row duplicates an existing row of the minor matrix,
/// so the alternating sum vanishes for *arbitrary* table entries -- it is
/// an identity in the stored polynomials, not a consequence of the
/// three-term relations. Perturbing a stored coefficient changes the
/// minors and the trailing factor coherently and the sum stays zero.
/// The test is kept, ignored by default, as the faithful statement of the
/// criterion; running it documents the zero detection rate.
#[test]
#[ignore = "unattainable as specified: Baxter equations hold identically in the table entries"]
fn criterion_10_baxter_leg_as_specified() {
    let cfg = SuiteConfig {
        a_max: 2,
        s_max: 2,
        mode: Mode::Exact,
    };
    let (unb, bar) = build_pair(2, 1, 2, 1);
    let mut detected = 0usize;
    for seed in mutation_seeds(7, 20) {
        let (mutated, _) = unb.with_mutation(seed);
        let reports = run_suite(Suite::Baxter, &mutated, &bar, &cfg);
        if reports.iter().any(|r| !r.pass) {
            detected += 1;
        }
    }
    println!("ACCEPTANCE 10 mutation-sensitivity [baxter]: {detected}/20 mutations detected");
    assert!(
        detected >= 1,
        "no mutation can break an entry-independent identity"
    );
}

#[test]
fn criterion_11_determinism_and_round_trip() {
    // Identical seeds give byte-identical hierarchy files.
    let (a, _) = build_pair(2, 1, 2, 9);
    let (b, _) = build_pair(2, 1, 2, 9);
    assert_eq!(a.save_to_string(), b.save_to_string());
    // Hierarchy files round-trip bit-exactly.
    let text = a.save_to_string();
    let loaded = QHierarchy::load(text.as_bytes()).unwrap();
    assert_eq!(loaded.save_to_string(), text);
    for set in Subset::all(3) {
        assert_eq!(loaded.q(set), a.q(set));
    }
    // Identical seeds give identical report streams, timing excluded.
    let (unb, bar) = build_pair(2, 1, 1, 3);
    let cfg = SuiteConfig::default();
    let lines = |reports: &[VerifyReport]| -> Vec<String> {
        reports.iter().map(|r| r.line(false)).collect::<Vec<_>>()
    };
    let r1 = lines(&run_suite(Suite::Qq, &unb, &bar, &cfg));
    let r2 = lines(&run_suite(Suite::Qq, &unb, &bar, &cfg));
    assert_eq!(r1, r2);
    let (unb2, bar2) = build_pair(2, 1, 1, 3);
    let r3 = lines(&run_suite(Suite::Qq, &unb2, &bar2, &cfg));
    assert_eq!(r1, r3);
    println!("ACCEPTANCE 11 determinism-round-trip: PASS");
}

#[test]
fn fast_mode_agrees_with_exact_mode() {
    // The sampled mode is a proof for the degree bound; both modes must
    // return the same verdicts, passing on a valid hierarchy and failing
    // on a mutated one.
    let (unb, bar) = build_pair(2, 1, 1, 5);
    let exact = run_suite(Suite::Qq, &unb, &bar, &SuiteConfig::default());
    let fast_cfg = SuiteConfig {
        mode: Mode::Fast { extra: 2 },
        ..SuiteConfig::default()
    };
    let fast = run_suite(Suite::Qq, &unb, &bar, &fast_cfg);
    assert!(exact.iter().all(|r| r.pass) && fast.iter().all(|r| r.pass));
    let (mutated, _) = unb.with_mutation(1);
    let exact_m = run_suite(Suite::Qq, &mutated, &bar, &SuiteConfig::default());
    let fast_m = run_suite(Suite::Qq, &mutated, &bar, &fast_cfg);
    let ids = |reports: &[VerifyReport]| -> Vec<String> {
        reports
            .iter()
            .filter(|r| !r.pass)
            .map(|r| format!("{} {}", r.id, r.params))
            .collect()
    };
    assert_eq!(
        ids(&exact_m),
        ids(&fast_m),
        "fast mode catches the same failures"
    );
    println!("fast-mode agreement: PASS");
}
