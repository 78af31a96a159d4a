//! Exact verification suites for the functional relations: each suite
//! checks a family of identities on a built hierarchy and returns one
//! structured report per instance. Every pass condition is exact
//! polynomial equality (or exact divisibility); the fast mode trades the
//! full identity for evaluation at enough points to still be a proof for
//! the known degree bound.

pub mod backlund;
pub mod baxter;
pub mod conserved;
pub mod detids;
pub mod misc;
pub mod qq;
pub mod tsystem;

use std::fmt;
use std::time::Instant;

use crate::poly::LaurentPoly;
use crate::prng::SplitMix64;
use crate::qhierarchy::QHierarchy;
use crate::ratfn::leading_terms;
use crate::scalar::{self, Scalar};
use crate::tfun::{FVal, TCtx};

/// One verified identity instance.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    /// Identity key, e.g. `qq-rel1` or `t-system1`.
    pub id: String,
    /// Parameter tuple rendered as text.
    pub params: String,
    pub pass: bool,
    /// On failure: leading coefficients of the nonzero difference plus the
    /// reproduction data.
    pub witness: Option<String>,
    /// Degree statistics of the compared objects.
    pub degree: i64,
    /// Elapsed wall time; excluded from comparison streams.
    pub micros: u128,
}

impl VerifyReport {
    pub fn status(&self) -> &'static str {
        if self.pass {
            "pass"
        } else {
            "fail"
        }
    }

    /// Line-record form: tab-separated `(id, params, status, deg, witness, micros)`.
    pub fn line(&self, with_timing: bool) -> String {
        let witness = self.witness.as_deref().unwrap_or("-");
        let mut s = format!(
            "{}\t{}\t{}\tdeg={}\t{}",
            self.id,
            self.params,
            self.status(),
            self.degree,
            witness
        );
        if with_timing {
            s.push_str(&format!("\t{}us", self.micros));
        }
        s
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.line(true))
    }
}

/// Exactness mode: full identity or sampled at `max degree + 1` points
/// (still a proof of equality given the degree bound).
#[derive(Clone, Copy, Debug)]
pub enum Mode {
    Exact,
    /// Extra points beyond the degree bound, for headroom against poles.
    Fast {
        extra: u32,
    },
}

/// Equality checker shared by the suites; collects reports.
pub struct Checker {
    pub mode: Mode,
    pub reports: Vec<VerifyReport>,
    start: Instant,
}

impl Checker {
    pub fn new(mode: Mode) -> Self {
        Checker {
            mode,
            reports: Vec::new(),
            start: Instant::now(),
        }
    }

    fn push(&mut self, id: &str, params: String, pass: bool, witness: Option<String>, degree: i64) {
        let micros = self.start.elapsed().as_micros();
        self.start = Instant::now();
        self.reports.push(VerifyReport {
            id: id.to_string(),
            params,
            pass,
            witness,
            degree,
            micros,
        });
    }

    pub fn all_pass(&self) -> bool {
        self.reports.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerifyReport> {
        self.reports.iter().filter(|r| !r.pass)
    }

    /// Asserts `lhs = rhs` as Laurent polynomials.
    pub fn poly_eq(&mut self, id: &str, params: String, lhs: &LaurentPoly, rhs: &LaurentPoly) {
        let diff = lhs - rhs;
        let degree = lhs.degree().max(rhs.degree());
        let pass = match self.mode {
            Mode::Exact => diff.is_zero(),
            Mode::Fast { extra } => poly_zero_sampled(&diff, extra),
        };
        let witness = (!pass).then(|| format!("difference {}", leading_terms(&diff, 3)));
        self.push(id, params, pass, witness, degree);
    }

    /// Asserts a polynomial is identically zero.
    pub fn poly_zero(&mut self, id: &str, params: String, p: &LaurentPoly) {
        self.poly_eq(id, params, p, &LaurentPoly::zero());
    }

    /// Asserts `lhs = rhs` for factored tableaux values.
    pub fn fval_eq(&mut self, id: &str, params: String, ctx: &TCtx, lhs: &FVal, rhs: &FVal) {
        let degree = lhs.degree(ctx).max(rhs.degree(ctx));
        match self.mode {
            Mode::Exact => {
                let pass = lhs.eq_exact(ctx, rhs);
                let witness = (!pass).then(|| {
                    let diff = lhs.sub(ctx, rhs);
                    format!("difference numerator {}", leading_terms(&diff.num, 3))
                });
                self.push(id, params, pass, witness, degree);
            }
            Mode::Fast { extra } => {
                let diff = lhs.sub(ctx, rhs);
                let bound = diff.num.degree() - diff.num.min_exp().unwrap_or(0) + 1 + extra as i64;
                let mut pass = true;
                let mut bad = None;
                let mut hits = 0i64;
                let mut x = 1i64;
                while hits < bound {
                    let x0 = scalar::int(x);
                    x += 1;
                    match diff.eval(ctx, &x0) {
                        Ok(v) if v == Scalar::from_integer(0.into()) => hits += 1,
                        Ok(v) => {
                            pass = false;
                            bad = Some(format!("x={}: {}", x - 1, scalar::display_scalar(&v)));
                            break;
                        }
                        Err(_) => continue, // pole at sample; resample
                    }
                }
                self.push(id, params, pass, bad, degree);
            }
        }
    }

    /// Asserts exact divisibility `divisor | p`.
    pub fn divides(&mut self, id: &str, params: String, divisor: &LaurentPoly, p: &LaurentPoly) {
        let (ok, _) = crate::poly::divides(divisor, p);
        let witness = (!ok).then(|| {
            format!(
                "no exact quotient; numerator {} vs divisor {}",
                leading_terms(p, 2),
                leading_terms(divisor, 2)
            )
        });
        let degree = p.degree();
        self.push(id, params, ok, witness, degree);
    }

    /// Records an externally computed outcome.
    pub fn record(&mut self, id: &str, params: String, pass: bool, witness: Option<String>) {
        self.push(id, params, pass, witness, 0);
    }
}

fn poly_zero_sampled(diff: &LaurentPoly, extra: u32) -> bool {
    if diff.is_zero() {
        return true;
    }
    // A nonzero Laurent polynomial of window width w has at most w-1
    // nonzero roots; evaluating at w distinct nonzero points suffices.
    let width = diff.degree() - diff.min_exp().unwrap_or(0) + 1 + extra as i64;
    for x in 1..=width {
        if diff.eval(&scalar::int(x)).unwrap() != Scalar::from_integer(0.into()) {
            return false;
        }
    }
    true
}

/// Suite selector for the orchestrator.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Qq,
    Tsystem,
    Backlund,
    Baxter,
    Pole,
    Conserved,
    DetIds,
    Conj,
    TfRoutes,
    Chars,
    Conv,
    Reverse,
    Typical,
}

impl Suite {
    pub const ALL: [Suite; 13] = [
        Suite::Qq,
        Suite::Tsystem,
        Suite::Backlund,
        Suite::Baxter,
        Suite::Pole,
        Suite::Conserved,
        Suite::DetIds,
        Suite::Conj,
        Suite::TfRoutes,
        Suite::Chars,
        Suite::Conv,
        Suite::Reverse,
        Suite::Typical,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Qq => "qq",
            Suite::Tsystem => "tsystem",
            Suite::Backlund => "backlund",
            Suite::Baxter => "baxter",
            Suite::Pole => "pole",
            Suite::Conserved => "conserved",
            Suite::DetIds => "detids",
            Suite::Conj => "conj",
            Suite::TfRoutes => "tf",
            Suite::Chars => "char",
            Suite::Conv => "conv",
            Suite::Reverse => "reverse",
            Suite::Typical => "typical",
        }
    }

    pub fn parse(s: &str) -> Option<Vec<Suite>> {
        if s == "all" {
            return Some(Suite::ALL.to_vec());
        }
        let mut out = Vec::new();
        for part in s.split(',') {
            let suite = Suite::ALL.iter().find(|x| x.name() == part.trim())?;
            out.push(*suite);
        }
        Some(out)
    }
}

/// Grid bounds shared by the suites.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub a_max: i64,
    pub s_max: i64,
    pub mode: Mode,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            a_max: 3,
            s_max: 3,
            mode: Mode::Exact,
        }
    }
}

/// Runs a suite on the matching-convention hierarchies. `unbarred` and
/// `barred` must share twist data and seed.
pub fn run_suite(
    suite: Suite,
    unbarred: &QHierarchy,
    barred: &QHierarchy,
    cfg: &SuiteConfig,
) -> Vec<VerifyReport> {
    let mut checker = Checker::new(cfg.mode);
    match suite {
        Suite::Qq => {
            qq::verify_qq(&mut checker, unbarred);
            qq::verify_qq(&mut checker, barred);
            qq::verify_cauchy_deno(&mut checker, 3);
        }
        Suite::Tsystem => {
            tsystem::verify_tsystem(&mut checker, unbarred, cfg.a_max, cfg.s_max);
            tsystem::verify_tsystem(&mut checker, barred, cfg.a_max, cfg.s_max);
            tsystem::verify_f_tsystem(&mut checker, unbarred, cfg.a_max.min(3), cfg.s_max.min(3));
            tsystem::verify_f_tsystem(&mut checker, barred, cfg.a_max.min(3), cfg.s_max.min(3));
        }
        Suite::Backlund => {
            backlund::verify_backlund(&mut checker, unbarred, cfg.a_max, cfg.s_max);
            backlund::verify_backlund(&mut checker, barred, cfg.a_max, cfg.s_max);
            backlund::verify_f_backlund(&mut checker, unbarred, cfg.a_max.min(2), cfg.s_max.min(2));
            backlund::verify_f_backlund(&mut checker, barred, cfg.a_max.min(2), cfg.s_max.min(2));
        }
        Suite::Baxter => {
            baxter::verify_baxter(&mut checker, unbarred);
            baxter::verify_baxter(&mut checker, barred);
        }
        Suite::Pole => misc::verify_pole_cancellation(&mut checker, unbarred),
        Suite::Conserved => conserved::verify_conserved(&mut checker, unbarred, cfg.s_max.max(3)),
        Suite::DetIds => detids::verify_det_identities(&mut checker, unbarred),
        Suite::Conj => misc::verify_conj_invariance(&mut checker, unbarred),
        Suite::TfRoutes => {
            misc::verify_tf_routes(&mut checker, unbarred, 6);
            misc::verify_tf_routes(&mut checker, barred, 6);
        }
        Suite::Chars => misc::verify_characters(&mut checker, unbarred, 6),
        Suite::Conv => misc::verify_conv_series(&mut checker, unbarred, cfg.s_max),
        Suite::Reverse => misc::verify_reverse(&mut checker, unbarred),
        Suite::Typical => {
            tsystem::verify_typical(&mut checker, unbarred);
            tsystem::verify_typical(&mut checker, barred);
        }
    }
    checker.reports
}

/// Runs suites in order; deterministic stream.
pub fn run_suites(
    suites: &[Suite],
    unbarred: &QHierarchy,
    barred: &QHierarchy,
    cfg: &SuiteConfig,
) -> Vec<VerifyReport> {
    let mut out = Vec::new();
    for &suite in suites {
        out.extend(run_suite(suite, unbarred, barred, cfg));
    }
    out
}

/// Deterministic sequence of mutation seeds for the sensitivity tests.
pub fn mutation_seeds(base: u64, count: usize) -> Vec<u64> {
    let mut rng = SplitMix64::new(base);
    (0..count).map(|_| rng.next_u64()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qhierarchy::{Convention, GenConfig};
    use crate::twist::TwistData;

    /// Degree-zero hierarchies (every Q identically 1) satisfy every
    /// relation trivially; all suites must pass on them.
    #[test]
    fn all_suites_pass_on_the_trivial_hierarchy() {
        let twist = TwistData::auto(1, 1);
        let cfg = GenConfig::uniform(0, 0, 2);
        let unb = QHierarchy::build(twist.clone(), Convention::Unbarred, &cfg).unwrap();
        let bar = QHierarchy::build(twist, Convention::Barred, &cfg).unwrap();
        let suite_cfg = SuiteConfig {
            a_max: 2,
            s_max: 2,
            mode: Mode::Exact,
        };
        for suite in Suite::ALL {
            let reports = run_suite(suite, &unb, &bar, &suite_cfg);
            for r in &reports {
                assert!(r.pass, "{}: {}", suite.name(), r.line(false));
            }
        }
    }

    #[test]
    fn suite_selector_parses() {
        assert_eq!(Suite::parse("all").unwrap().len(), Suite::ALL.len());
        assert_eq!(
            Suite::parse("qq,pole").unwrap(),
            vec![Suite::Qq, Suite::Pole]
        );
        assert!(Suite::parse("nope").is_none());
    }

    #[test]
    fn report_lines_isolate_timing() {
        let r = VerifyReport {
            id: "qq-rel1".into(),
            params: "I={} i=1 j=2".into(),
            pass: true,
            witness: None,
            degree: 4,
            micros: 123,
        };
        assert!(r.line(true).ends_with("123us"));
        assert!(!r.line(false).contains("us"));
    }
}
