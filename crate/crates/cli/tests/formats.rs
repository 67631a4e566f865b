use proptest::prelude::*;
use rainbow_cli::format::{
    parse_colouring, parse_digraph, write_colouring, write_digraph, Colouring,
};
use rainbow_core::{ArcColouring, Digraph, VertexColouring};

fn digraph() -> impl Strategy<Value = Digraph> {
    (1usize..=12).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..40).prop_map(move |pairs| {
            Digraph::new(n, pairs.into_iter().filter(|(u, v)| u != v)).unwrap()
        })
    })
}

fn colours(len: usize) -> impl Strategy<Value = (Vec<u32>, usize)> {
    (1usize..=10).prop_flat_map(move |k| (proptest::collection::vec(0..k as u32, len), Just(k)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn digraph_round_trip(d in digraph()) {
        let text = write_digraph(&d);
        prop_assert_eq!(parse_digraph(&text).unwrap(), d);
    }

    #[test]
    fn vertex_colouring_round_trip((c, k) in (0usize..20).prop_flat_map(colours)) {
        let c = Colouring::Vertex(VertexColouring::new(c, k).unwrap());
        prop_assert_eq!(parse_colouring(&write_colouring(&c)).unwrap(), c);
    }

    #[test]
    fn arc_colouring_round_trip((c, k) in (0usize..40).prop_flat_map(colours)) {
        let c = Colouring::Arc(ArcColouring::new(c, k).unwrap());
        prop_assert_eq!(parse_colouring(&write_colouring(&c)).unwrap(), c);
    }

    #[test]
    fn comments_and_blank_lines_are_ignored(d in digraph()) {
        let text: String = write_digraph(&d)
            .lines()
            .flat_map(|l| ["# note", "", l])
            .map(|l| format!("{l}\n"))
            .collect();
        prop_assert_eq!(parse_digraph(&text).unwrap(), d);
    }
}
