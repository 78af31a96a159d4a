//! Property tests for the exact-arithmetic invariants: ring axioms,
//! shift homomorphism, determinant multilinearity, rational-function
//! equivalence, and the combinatorial involutions.

use baxterq::diagrams::Partition;
use baxterq::matrix::det_poly;
use baxterq::poly::{divides, LaurentPoly};
use baxterq::ratfn::RationalFn;
use baxterq::scalar::{ratio, Scalar};
use proptest::prelude::*;

fn arb_scalar() -> impl Strategy<Value = Scalar> {
    (-20i64..=20, 1i64..=12).prop_map(|(n, d)| ratio(n, d))
}

fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
    (proptest::collection::vec(arb_scalar(), 0..5), -3i64..=3)
        .prop_map(|(coeffs, base)| LaurentPoly::from_coeffs(coeffs).mul_xpow(base))
}

fn arb_nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
    arb_poly().prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms_hold_exactly(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn shift_is_a_ring_homomorphism(a in arb_poly(), b in arb_poly(), k in -4i64..=4) {
        let t = ratio(3, 2);
        prop_assert_eq!((&a * &b).shift(k, &t), &a.shift(k, &t) * &b.shift(k, &t));
        prop_assert_eq!((&a + &b).shift(k, &t), &a.shift(k, &t) + &b.shift(k, &t));
    }

    #[test]
    fn shift_composes_and_preserves_degree(a in arb_nonzero_poly(), j in -3i64..=3, k in -3i64..=3) {
        let t = ratio(5, 3);
        prop_assert_eq!(a.shift(j, &t).shift(k, &t), a.shift(j + k, &t));
        prop_assert_eq!(a.shift(k, &t).degree(), a.degree());
    }

    #[test]
    fn construct_then_divide_round_trips(d in arb_nonzero_poly(), q in arb_poly()) {
        let p = &d * &q;
        let (ok, quotient) = divides(&d, &p);
        prop_assert!(ok);
        prop_assert_eq!(quotient.unwrap(), q);
    }

    #[test]
    fn ratfn_equality_is_scaling_invariant(
        n in arb_poly(),
        d in arb_nonzero_poly(),
        m in arb_nonzero_poly(),
    ) {
        let a = RationalFn::new(n.clone(), d.clone());
        let b = RationalFn::new(&n * &m, &d * &m);
        prop_assert!(a.eq_exact(&b));
        // Equality is symmetric and survives canonicalization.
        prop_assert!(b.eq_exact(&a));
        prop_assert!(a.canonicalize().eq_exact(&b));
    }

    #[test]
    fn determinant_alternates(
        rows in proptest::collection::vec(proptest::collection::vec(arb_scalar(), 3), 3),
        i in 0usize..3,
        j in 0usize..3,
    ) {
        let m: Vec<Vec<LaurentPoly>> = rows
            .iter()
            .map(|r| r.iter().map(|c| LaurentPoly::constant(c.clone())).collect())
            .collect();
        if i != j {
            let mut swapped = m.clone();
            swapped.swap(i, j);
            prop_assert_eq!(det_poly(&swapped), det_poly(&m).neg());
            let mut repeated = m.clone();
            repeated[i] = repeated[j].clone();
            prop_assert!(det_poly(&repeated).is_zero());
        }
    }

    #[test]
    fn conjugate_is_an_involution(parts in proptest::collection::vec(0u32..9, 0..8)) {
        let mut sorted = parts;
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let mu = Partition::new(sorted);
        prop_assert_eq!(mu.conjugate().conjugate(), mu);
    }

    #[test]
    fn eval_commutes_with_arithmetic(a in arb_poly(), b in arb_poly(), x0n in 1i64..7, x0d in 1i64..5) {
        let x0 = ratio(x0n, x0d);
        let lhs = (&a * &b).eval(&x0).unwrap();
        let rhs = a.eval(&x0).unwrap() * b.eval(&x0).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn partition_enumeration_sizes() {
    // Partitions of size <= 4 into any parts: (), (1), (2), (1,1), (3),
    // (2,1), (1,1,1), (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
    let all = Partition::enumerate(4, 6, 6);
    assert_eq!(all.len(), 12);
}
