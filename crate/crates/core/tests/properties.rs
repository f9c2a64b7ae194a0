mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use vlink::gauss::{ChordId, GaussDiagram, Sign};
use vlink::indices::{naive, Convention, IndexTable, LeftArc};
use vlink::invariants::{Execution, Invariants};
use vlink::moves::{is_kink, r1_delete, r1_insert, r2a_delete, r2a_insert, smooth, Gap, R2Placement};
use vlink::poly::{ExponentSum, LaurentPolynomial};
use vlink::random::{random_diagram, random_knot};

use common::braid_closure;

fn diagram(seed: u64, circles: usize, chords: usize) -> GaussDiagram {
    random_diagram(&mut ChaCha8Rng::seed_from_u64(seed), circles, chords)
}

fn inv() -> Invariants {
    Invariants::new(Convention::default())
}

/// The report with the input code blanked, so equivalent diagrams compare equal.
fn invariants_of(d: &GaussDiagram) -> vlink::InvariantReport {
    let mut r = inv().report(d).unwrap();
    r.input.clear();
    r
}

fn poly() -> impl Strategy<Value = LaurentPolynomial> {
    prop::collection::vec((-4i64..=4, -6i64..=6), 0..6).prop_map(|v| common::lp(&v))
}

fn exp_sum() -> impl Strategy<Value = ExponentSum> {
    prop::collection::vec((-3i64..=3, poly()), 0..4).prop_map(|v| common::es(&v))
}

fn random_gap(rng: &mut ChaCha8Rng, d: &GaussDiagram) -> Gap {
    let circle = rng.gen_range(0..d.circle_count());
    Gap::new(circle, rng.gen_range(0..=d.circles()[circle].len()))
}

fn random_sign(rng: &mut ChaCha8Rng) -> Sign {
    if rng.gen() {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

fn braid() -> impl Strategy<Value = (Vec<i32>, usize)> {
    (2usize..=4).prop_flat_map(|n| {
        let g = (1..n as i32).prop_flat_map(|i| prop_oneof![Just(i), Just(-i)]);
        (prop::collection::vec(g, 0..9), Just(n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn code_round_trip(seed: u64) {
        let d = diagram(seed, 3, 8);
        let code = d.to_code();
        let e = GaussDiagram::parse(&code).unwrap();
        prop_assert!(e.diagram_equal(&d));
        prop_assert_eq!(e.to_code(), code);
    }

    #[test]
    fn parse_never_panics(s in "[OUou0-9a-c+\\-; ]{0,24}") {
        let _ = GaussDiagram::parse(&s);
    }

    #[test]
    fn diagram_equal_is_an_equivalence(a: u64, b: u64) {
        let (x, y) = (diagram(a, 2, 4), diagram(b, 2, 4));
        let x2 = GaussDiagram::parse(&x.to_code()).unwrap();
        prop_assert!(x.diagram_equal(&x));
        prop_assert!(x.diagram_equal(&x2) && x2.diagram_equal(&x));
        prop_assert_eq!(x.diagram_equal(&y), y.diagram_equal(&x));
        prop_assert_eq!(x2.diagram_equal(&y), x.diagram_equal(&y));
    }

    #[test]
    fn crossing_change_and_mirror_are_involutions(seed: u64) {
        let d = diagram(seed, 3, 6);
        let m = d.mirror_all();
        prop_assert!(m.mirror_all().diagram_equal(&d));
        prop_assert_eq!(m.classify(), d.classify());
        prop_assert_eq!(m.writhe(), -d.writhe());
        for c in d.chord_ids().collect::<Vec<_>>() {
            let x = d.crossing_change(c).unwrap();
            prop_assert!(x.crossing_change(c).unwrap().diagram_equal(&d));
            prop_assert_eq!(x.classify(), d.classify());
            prop_assert_eq!(x.sign(c).unwrap(), -d.sign(c).unwrap());
        }
    }

    #[test]
    fn laurent_ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &LaurentPolynomial::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert!((&a * &b).is_canonical());
        prop_assert_eq!(a.invert_variable().invert_variable(), a.clone());
        prop_assert_eq!((&a * &b).invert_variable(), &a.invert_variable() * &b.invert_variable());
        prop_assert_eq!((&a + &b).eval_at_one(), a.eval_at_one() + b.eval_at_one());
    }

    #[test]
    fn exponent_sum_group(a in exp_sum(), b in exp_sum(), c in exp_sum()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert!((&a + &b).is_canonical());
        prop_assert_eq!(a.invert_t().invert_t(), a.clone());
        prop_assert_eq!(a.invert_s().invert_s(), a.clone());
        prop_assert_eq!((&a + &b).invert_t(), &a.invert_t() + &b.invert_t());
        prop_assert_eq!((&a + &b).invert_s(), &a.invert_s() + &b.invert_s());
    }

    #[test]
    fn table_matches_naive(seed: u64) {
        let d = diagram(seed, 3, 8);
        for (_, conv) in Convention::ALL {
            let t = IndexTable::new(&d, conv);
            for c in d.classify().self_chords {
                prop_assert_eq!(t.ind_prime(c).unwrap(), naive::ind_prime(&d, c, conv).unwrap());
                prop_assert_eq!(t.ind(c).unwrap(), naive::ind(&d, c, conv).unwrap());
            }
            for i in 0..d.circle_count() {
                prop_assert_eq!(t.span(i).unwrap(), naive::span(&d, i, conv).unwrap());
            }
        }
    }

    #[test]
    fn ind_equals_ind_prime_on_knots(seed: u64, n in 0usize..9) {
        let d = random_knot(&mut ChaCha8Rng::seed_from_u64(seed), n);
        let t = IndexTable::new(&d, Convention::default());
        for c in d.chord_ids() {
            prop_assert_eq!(t.ind(c).unwrap(), t.ind_prime(c).unwrap());
        }
        prop_assert_eq!(t.span(0).unwrap(), 0);
    }

    #[test]
    fn two_sided_crossing_change(seed: u64) {
        let d = diagram(seed, 3, 7);
        let conv = Convention::default();
        let t = IndexTable::new(&d, conv);
        for c in d.classify().self_chords {
            let x = d.crossing_change(c).unwrap();
            let tx = IndexTable::new(&x, conv);
            let circle = d.chord(c).unwrap().over.circle;
            let right = IndexTable::new(&d, conv.with_left_arc(LeftArc::UnderToOver));
            prop_assert_eq!(t.ind_prime(c).unwrap() + right.ind_prime(c).unwrap(), t.span(circle).unwrap());
            prop_assert_eq!(tx.spans(), t.spans());
            prop_assert_eq!(t.ind_prime(c).unwrap() + tx.ind_prime(c).unwrap(), t.span(circle).unwrap());
            for e in d.classify().self_chords.into_iter().filter(|&e| e != c) {
                prop_assert_eq!(tx.ind_prime(e).unwrap(), t.ind_prime(e).unwrap());
            }
        }
    }

    #[test]
    fn flat_invariants_ignore_crossing_changes(seed: u64) {
        let d = diagram(seed, 2, 6);
        let (wbar, bbar) = (inv().wbar(&d), inv().bbar_ts(&d).unwrap());
        for c in d.chord_ids().collect::<Vec<_>>() {
            let x = d.crossing_change(c).unwrap();
            prop_assert_eq!(inv().wbar(&x), wbar.clone());
            prop_assert_eq!(inv().bbar_ts(&x).unwrap(), bbar.clone());
        }
    }

    #[test]
    fn affine_index_vanishes_at_one(seed: u64, n in 0usize..9) {
        let d = random_knot(&mut ChaCha8Rng::seed_from_u64(seed), n);
        prop_assert_eq!(inv().affine_index_p(&d).unwrap().eval_at_one(), BigInt::from(0));
    }

    #[test]
    fn bbar_is_b_plus_mirror_b(seed: u64) {
        let d = diagram(seed, 2, 6);
        let b = inv().b_ts(&d).unwrap();
        let bm = inv().b_ts(&d.mirror_all()).unwrap();
        prop_assert_eq!(inv().bbar_ts(&d).unwrap(), &b + &bm);
    }

    #[test]
    fn classical_closures_are_silent((word, n) in braid()) {
        let d = braid_closure(&word, n);
        let r = inv().report(&d).unwrap();
        prop_assert!(r.w.is_zero());
        prop_assert!(r.wbar.is_zero());
        prop_assert!(r.l_ts.is_zero());
        prop_assert!(r.bbar.is_zero());
        prop_assert!(!r.nonclassical);
    }

    #[test]
    fn r1_insert_delete_round_trip(seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_diagram(&mut rng, 3, 6);
        let gap = random_gap(&mut rng, &d);
        let (k, c) = r1_insert(&d, gap, random_sign(&mut rng), rng.gen()).unwrap();
        prop_assert!(is_kink(&k, c).unwrap());
        prop_assert!(r1_delete(&k, c).unwrap().diagram_equal(&d));
        prop_assert_eq!(invariants_of(&k), invariants_of(&d));
    }

    #[test]
    fn r2_insert_delete_round_trip(seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_diagram(&mut rng, 3, 6);
        let p = R2Placement {
            over: random_gap(&mut rng, &d),
            under: random_gap(&mut rng, &d),
            first_sign: random_sign(&mut rng),
            unders_first: rng.gen(),
        };
        let (e, a, b) = r2a_insert(&d, p).unwrap();
        prop_assert!(r2a_delete(&e, a, b).unwrap().diagram_equal(&d));
        prop_assert_eq!(invariants_of(&e), invariants_of(&d));
    }

    #[test]
    fn smoothing_commutes_with_other_crossing_changes(seed: u64) {
        let d = diagram(seed, 2, 6);
        let ids: Vec<ChordId> = d.chord_ids().collect();
        for &a in &ids {
            for &c in ids.iter().filter(|&&c| c != a) {
                let lhs = smooth(&d.crossing_change(a).unwrap(), c).unwrap();
                let rhs = smooth(&d, c).unwrap().crossing_change(a).unwrap();
                prop_assert!(lhs.diagram_equal(&rhs));
            }
        }
    }

    #[test]
    fn execution_modes_agree(seed: u64) {
        let d = diagram(seed, 3, 9);
        let seq = inv().with_execution(Execution::Sequential).report(&d).unwrap();
        let par = inv().with_execution(Execution::Parallel).report(&d).unwrap();
        prop_assert_eq!(seq, par);
    }
}
