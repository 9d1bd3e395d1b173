//! Property tests: exact field axioms on randomized cyclotomic values,
//! canonical-form stability, and structural invariants of the enumeration
//! machinery.

use proptest::prelude::*;

use fuscat::cyclo::{rat, Cyc};
use fuscat::tambara;

fn arb_cyc() -> impl Strategy<Value = Cyc> {
    let conductor = prop::sample::select(vec![1u64, 3, 4, 5, 8, 12, 16, 24]);
    (conductor, prop::collection::vec((-3i64..=3, 1i64..=3, 0u64..24), 1..4)).prop_map(
        |(n, terms)| {
            let mut acc = Cyc::zero();
            for (num, den, k) in terms {
                let coef = Cyc::from_rat(rat(num, den));
                let root = Cyc::root_of_unity(n, (k % n) as i64).unwrap();
                acc = acc.add(&coef.mul(&root));
            }
            acc
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_axioms(a in arb_cyc(), b in arb_cyc(), c in arb_cyc()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.sub(&a), Cyc::zero());
        if !a.is_zero() {
            prop_assert_eq!(a.mul(&a.inverse().unwrap()), Cyc::one());
        }
    }

    #[test]
    fn conjugation_is_a_ring_involution(a in arb_cyc(), b in arb_cyc()) {
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!(a.add(&b).conj(), a.conj().add(&b.conj()));
        prop_assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
        // Real values are exactly the conjugation-fixed ones.
        let norm = a.mul(&a.conj());
        prop_assert!(norm.is_real());
    }

    #[test]
    fn approx_tracks_exact_arithmetic(a in arb_cyc(), b in arb_cyc()) {
        let (ra, ia) = a.approx();
        let (rb, ib) = b.approx();
        let (rm, im) = a.mul(&b).approx();
        prop_assert!((rm - (ra * rb - ia * ib)).abs() < 1e-9);
        prop_assert!((im - (ra * ib + ia * rb)).abs() < 1e-9);
    }

    #[test]
    fn canonical_form_is_stable(a in arb_cyc()) {
        let rebuilt = Cyc::from_coeffs(a.conductor(), a.padded_coeffs()).unwrap();
        prop_assert_eq!(&rebuilt, &a);
        let js = serde_json::to_string(&a).unwrap();
        let back: Cyc = serde_json::from_str(&js).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn quadratic_forms_polarize(n in 1usize..4, k in 0u8..2) {
        prop_assume!(k == 1 || n % 2 == 0);
        let chi = tambara::bicharacter(n, k).unwrap();
        for q in tambara::quadratic_forms(&chi) {
            prop_assert!(tambara::polarizes(&q, &chi));
            // Values are 4th roots of unity with q(0) = 1.
            for v in &q {
                let ord = v.root_order().unwrap();
                prop_assert!(ord == 1 || ord == 2 || ord == 4);
            }
        }
    }

    #[test]
    fn generated_subrings_are_monotone_idempotent(seeds in prop::collection::vec(0usize..5, 1..3)) {
        let ring = tambara::ty_ring(2).unwrap();
        let sub = ring.subring_generated(&seeds);
        let again = ring.subring_generated(&sub.indices);
        prop_assert_eq!(&again.indices, &sub.indices);
        for &s in &seeds {
            prop_assert!(sub.contains(s));
        }
        prop_assert!(ring.is_closed(&sub.indices));
    }

    #[test]
    fn braiding_equivalence_is_symmetric(signs in 0u8..4, tau in prop::bool::ANY, eps in prop::bool::ANY) {
        let q1 = if signs & 1 == 0 { Cyc::i() } else { Cyc::i().neg() };
        let q2 = if signs & 2 == 0 { Cyc::i() } else { Cyc::i().neg() };
        let ts = if tau { 1 } else { -1 };
        let es = if eps { 1 } else { -1 };
        let a = tambara::make_braiding(2, 1, ts, &[q1.clone(), q2.clone()], es).unwrap();
        let b = tambara::make_braiding(2, 1, ts, &[q2, q1], es).unwrap();
        let fwd = tambara::braiding_equivalent(&a, &b);
        let bwd = tambara::braiding_equivalent(&b, &a);
        prop_assert_eq!(fwd.is_some(), bwd.is_some());
        prop_assert!(fwd.is_some(), "swapped basis values are equivalent");
    }
}
