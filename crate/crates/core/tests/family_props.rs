//! Generator invariants and constructive colourings checked against the
//! closed-form predictions.

use proptest::prelude::*;
use rainbow_core::families::*;
use rainbow_core::predict::{predict_circulant, predict_cycle_subdigraph};
use rainbow_core::verify::{is_rvc_colouring, is_srvc_colouring};
use rainbow_core::Digraph;

fn asym_set() -> impl Strategy<Value = (usize, Vec<usize>)> {
    (3usize..=16).prop_flat_map(|n| {
        proptest::collection::btree_set(0..n, 1..=n).prop_map(move |s| (n, s.into_iter().collect()))
    })
}

fn assert_tournament(t: &Digraph) {
    let n = t.order();
    assert!(t.is_tournament());
    for v in 0..n {
        assert_eq!(t.out_degree(v) + t.in_degree(v), n - 1);
    }
    for u in 0..n {
        for v in u + 1..n {
            assert!(t.has_arc(u, v) ^ t.has_arc(v, u));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn classification_is_rotation_invariant((n, asym) in asym_set(), r in 0usize..16) {
        let a = classify_positions(n, &asym);
        let rotated: Vec<usize> = asym.iter().map(|&p| (p + r) % n).collect();
        let b = classify_positions(n, &rotated);
        prop_assert_eq!(a.kind, b.kind);
        prop_assert_eq!(a.k, b.k);
        let sorted = |s: Option<(usize, usize)>| s.map(|(x, y)| (x.min(y), x.max(y)));
        prop_assert_eq!(sorted(a.segments), sorted(b.segments));
        prop_assert_eq!(classify_cycle_subdigraph(&cycle_subdigraph(n, &asym).unwrap()).unwrap(), a);
    }

    #[test]
    fn cycle_colourings_achieve_predictions((n, asym) in asym_set()) {
        let d = cycle_subdigraph(n, &asym).unwrap();
        prop_assert!(d.is_strongly_connected());
        let p = predict_cycle_subdigraph(&classify_cycle_subdigraph(&d).unwrap()).unwrap();
        let c = predicted_cycle_colouring(&d, CycleTarget::Rvc).unwrap();
        prop_assert!(is_rvc_colouring(&d, &c).unwrap());
        prop_assert_eq!(Some(c.colours_used()), p.rvc.form.exact());
        let c = predicted_cycle_colouring(&d, CycleTarget::Srvc).unwrap();
        prop_assert!(is_srvc_colouring(&d, &c).unwrap());
        prop_assert_eq!(Some(c.colours_used()), p.srvc.form.exact());
    }

    #[test]
    fn random_tournaments_are_tournaments(n in 3usize..20, seed in any::<u64>()) {
        let t = random_tournament(n, seed).unwrap();
        assert_tournament(&t);
        prop_assert!(t.is_strongly_connected());
    }

    #[test]
    fn random_strong_digraphs_are_strong(n in 1usize..10, p in 0.1f64..1.0, seed in any::<u64>()) {
        prop_assert!(random_strong_digraph(n, p, seed).unwrap().is_strongly_connected());
    }
}

#[test]
fn tournament_generators() {
    for t in [t4(), t5_1()] {
        assert_tournament(&t);
    }
    for n in 5..=10 {
        for k in 2..=n - 2 {
            let t = t_nk(n, k).unwrap();
            assert_tournament(&t);
            assert!(t.is_strongly_connected());
            assert_eq!(t.diameter(), Ok(k + 1));
        }
        let t = t_n_1(n, 7).unwrap();
        assert_tournament(&t);
        assert_eq!(t.diameter(), Ok(2));
    }
}

#[test]
fn circulant_colour_counts_and_validity() {
    for n in 6..=20 {
        let d0 = circulant_k(n, 1).unwrap();
        assert!(d0.is_strongly_connected());
        for k in 2..=n - 2 {
            let d = circulant_k(n, k).unwrap();
            assert!(d.is_strongly_connected());
            let block = circulant_colouring(n, k, CirculantVariant::Block).unwrap();
            assert_eq!(block.colours_used(), n.div_ceil(k));
            assert!(is_srvc_colouring(&d, &block).unwrap());
            if CirculantVariant::CaseBI.applies(n, k) {
                let c = circulant_colouring(n, k, CirculantVariant::CaseBI).unwrap();
                assert_eq!(c.colours_used(), (n - 1) / k - 1);
            }
            if k > n / 2 - 1 {
                continue;
            }
            // No valid colouring beats the predicted lower end.
            let p = predict_circulant(n, k).unwrap();
            for v in CirculantVariant::ALL {
                let Ok(c) = circulant_colouring(n, k, v) else {
                    continue;
                };
                let (ok, lo) = if v.is_strong() {
                    (is_srvc_colouring(&d, &c), p.srvc.form.lo())
                } else {
                    (is_rvc_colouring(&d, &c), p.rvc.form.lo())
                };
                assert!(ok.unwrap(), "{} n={n} k={k}", v.name());
                assert!(c.colours_used() >= lo, "{} n={n} k={k}", v.name());
            }
        }
    }
}

#[test]
fn every_named_family_is_strong() {
    let ds = [
        path(5).unwrap(),
        wheel(6).unwrap(),
        star(4).unwrap(),
        complete_multipartite(&[1, 2, 3]).unwrap(),
        lemma5(Lemma5::H1),
        lemma5(Lemma5::D1),
        lemma5(Lemma5::H2),
        lemma5(Lemma5::D2),
        lemma6_fan(4).unwrap(),
        lemma6_pendant(4).unwrap(),
    ];
    assert!(ds.iter().all(Digraph::is_strongly_connected));
}
