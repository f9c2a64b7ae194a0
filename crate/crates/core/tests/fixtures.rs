mod common;

use num_bigint::BigInt;
use vlink::corpus;
use vlink::indices::{Convention, IndexTable};
use vlink::invariants::report;
use vlink::InvariantReport;

use common::{es, f, f_inv, lp};

fn rep(name: &str) -> InvariantReport {
    report(&corpus::diagram(name)).unwrap()
}

#[test]
fn every_fixture_is_normalized_and_parses() {
    for fx in corpus::FIXTURES {
        let d = fx.diagram().unwrap();
        assert_eq!(d.to_code(), fx.code().replace(char::is_whitespace, ""), "{}", fx.name);
        assert!(!fx.comment().is_empty(), "{} has no description", fx.name);
    }
}

#[test]
fn classical_fixtures_are_silent() {
    for name in ["trefoil", "figure-eight", "hopf", "whitehead"] {
        let r = rep(name);
        assert!(r.w.is_zero() && r.wbar.is_zero() && r.l_ts.is_zero() && r.b.is_zero(), "{name}");
        assert!(!r.nonclassical && !r.nontrivial_flat, "{name}");
        assert_eq!((r.self_crossing_lower_bound, r.real_crossing_lower_bound), (0, 0), "{name}");
    }
}

#[test]
fn virtual_trefoil() {
    let d = corpus::diagram("virtual-trefoil");
    let t = IndexTable::new(&d, Convention::default());
    let ids: Vec<_> = d.chord_ids().collect();
    assert_eq!(ids.iter().map(|&c| t.ind(c).unwrap()).collect::<Vec<_>>(), [1, -1]);
    let r = rep("virtual-trefoil");
    assert_eq!(r.w, lp(&[(-1, 1), (1, 1)]));
    assert_eq!(r.p, Some(lp(&[(-1, 1), (0, -2), (1, 1)])));
    assert!(r.wbar.is_zero() && r.l_ts.is_zero());
    assert!(r.nonclassical && !r.nontrivial_flat);
    assert_eq!(r.self_crossing_lower_bound, 2);
}

#[test]
fn kishino_pair() {
    let k = rep("kishino");
    let v = rep("kishino-variant");
    assert!(k.w.is_zero() && v.w.is_zero());
    assert_eq!(k.l_ts, es(&[(2, f()), (-2, f_inv())]));
    assert_eq!(v.bbar, -k.bbar.clone());
    assert_eq!(v.b, es(&[(2, f()), (-2, f_inv())]));
    for r in [&k, &v] {
        assert_eq!((r.self_crossing_lower_bound, r.real_crossing_lower_bound), (4, 4));
    }
}

#[test]
fn two_component_example() {
    let r = rep("eg1-link");
    assert_eq!(r.w, lp(&[(1, -1), (2, 1)]));
    assert_eq!(r.wbar, lp(&[(-2, -1), (-1, 1), (1, -1), (2, 1)]));
    assert_eq!(r.w_i.len(), 2);
    assert!(r.w_i[1].is_zero());
    assert!(r.b.is_zero());
    assert_eq!(r.l_ts.coeff_abs_sum(false), BigInt::from(4));
    assert_eq!(r.real_crossing_lower_bound, 2);
    assert_eq!((r.p, r.f), (None, None));
}

#[test]
fn slavik_stand_in_is_invisible() {
    let r = rep("slavik");
    assert!(r.w.is_zero() && r.l_ts.is_zero() && r.b.is_zero() && r.bbar.is_zero());
}
