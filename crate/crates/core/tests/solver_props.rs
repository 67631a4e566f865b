//! Exact solver against the brute-force oracle, plus the bound chain,
//! monotonicity under adding arcs, small-diameter equivalences and
//! determinism.

use proptest::prelude::*;
use rainbow_core::enumerate::{digraph_from_code, strong_class_codes};
use rainbow_core::families::random_strong_digraph;
use rainbow_core::oracle::{oracle_check, oracle_value};
use rainbow_core::solver::{compute, decide, Decision};
use rainbow_core::{Digraph, Parameter, SolveOptions};

const ORACLE_WORK: f64 = 2e6;

fn value(d: &Digraph, p: Parameter) -> usize {
    let r = compute(d, p, &SolveOptions::default()).unwrap();
    let w = r.witness.as_ref().unwrap();
    assert_eq!(w.palette(), r.value().unwrap());
    r.value().unwrap()
}

/// Checks the solver value against the oracle where enumeration is cheap.
fn agrees_with_oracle(d: &Digraph, p: Parameter) -> bool {
    let r = compute(d, p, &SolveOptions::default()).unwrap();
    let v = r.value().unwrap();
    let m = if p.is_arc() { d.arc_count() } else { d.order() };
    if (v as f64).powi(m as i32) > ORACLE_WORK || (p.is_arc() && m > 14) {
        return true;
    }
    let w = r.witness.unwrap();
    oracle_check(d, p, w.colours()).unwrap()
        && oracle_value(d, p, v).unwrap()
        && (v == 0 || !oracle_value(d, p, v - 1).unwrap())
}

fn feasible(d: &Digraph, p: Parameter, k: usize) -> bool {
    match decide(d, p, k, &SolveOptions::default()).unwrap() {
        Decision::Feasible(_) => true,
        Decision::Infeasible => false,
        Decision::Unknown => unreachable!("no limits set"),
    }
}

#[test]
fn solver_matches_oracle_on_every_class_up_to_four() {
    for n in 2..=4 {
        for code in strong_class_codes(n).unwrap() {
            let d = digraph_from_code(n, code).unwrap();
            for p in Parameter::ALL {
                assert!(agrees_with_oracle(&d, p), "{p} on {:?}", d.arcs());
            }
        }
    }
}

#[test]
fn small_diameter_equivalences_up_to_five() {
    for n in 2..=5 {
        for code in strong_class_codes(n).unwrap() {
            let d = digraph_from_code(n, code).unwrap();
            let diam = d.diameter().unwrap();
            let rvc1 = feasible(&d, Parameter::Rvc, 1);
            assert_eq!(rvc1, feasible(&d, Parameter::Srvc, 1));
            assert_eq!(rvc1, diam <= 2);
            assert_eq!(
                feasible(&d, Parameter::Rvc, 2),
                feasible(&d, Parameter::Srvc, 2)
            );
            let rc2 = feasible(&d, Parameter::Rc, 2);
            assert_eq!(rc2, feasible(&d, Parameter::Src, 2));
            if rc2 {
                assert!(diam <= 2);
            }
        }
    }
}

fn strong(n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Digraph> {
    (n, 0.25f64..0.8, any::<u64>())
        .prop_map(|(n, p, seed)| random_strong_digraph(n, p, seed).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn solver_matches_oracle_on_random_digraphs(d in strong(5..=7)) {
        for p in Parameter::ALL {
            prop_assert!(agrees_with_oracle(&d, p), "{}", p);
        }
    }

    #[test]
    fn bound_chain(d in strong(2..=7)) {
        let n = d.order();
        let diam = d.diameter().unwrap();
        let (rvc, srvc) = (value(&d, Parameter::Rvc), value(&d, Parameter::Srvc));
        let (rc, src) = (value(&d, Parameter::Rc), value(&d, Parameter::Src));
        prop_assert!(diam - 1 <= rvc && rvc <= srvc && srvc <= n);
        prop_assert!(diam <= rc && rc <= src);
    }

    #[test]
    fn adding_arcs_never_raises_path_numbers(
        h in strong(3..=7),
        extra in proptest::collection::vec((0usize..7, 0usize..7), 1..6),
    ) {
        let n = h.order();
        let mut d = h.clone();
        for (u, v) in extra {
            let (u, v) = (u % n, v % n);
            if u != v && !d.has_arc(u, v) {
                d = d.with_arc(u, v).unwrap();
            }
        }
        prop_assert!(h.is_spanning_subdigraph_of(&d));
        prop_assert!(value(&d, Parameter::Rvc) <= value(&h, Parameter::Rvc));
        prop_assert!(value(&d, Parameter::Rc) <= value(&h, Parameter::Rc));
    }

    #[test]
    fn worker_count_does_not_change_results(d in strong(4..=7)) {
        for p in Parameter::ALL {
            let one = compute(&d, p, &SolveOptions::default()).unwrap();
            let many = compute(&d, p, &SolveOptions { threads: 3, ..SolveOptions::default() }).unwrap();
            prop_assert_eq!(one.value(), many.value());
            prop_assert_eq!(one.witness, many.witness);
        }
    }
}
