//! Property tests for the diagram layer: Tait graph sizes, shading
//! duality, crossing-change involutions, and mirror invariance of the
//! determinant.

use proptest::prelude::*;
use std::collections::BTreeSet;
use weavelab::diagrams::{braid_closure, tait_graph, BraidWord, LinkDiagram, Shading};
use weavelab::spanning::{determinant, spanning_tree_count};

/// Random braid words whose closures are connected diagrams: every
/// generator index 1..strands appears at least once.
fn connected_braid() -> impl Strategy<Value = BraidWord> {
    (2usize..=5)
        .prop_flat_map(|strands| {
            let extra = prop::collection::vec((1i32..strands as i32, prop::bool::ANY), 0..10);
            (Just(strands), extra)
        })
        .prop_map(|(strands, extra)| {
            let mut letters: Vec<i32> = (1..strands as i32).collect();
            for (g, neg) in extra {
                letters.push(if neg { -g } else { g });
            }
            BraidWord::new(strands, letters).unwrap()
        })
}

fn closure(word: &BraidWord, alternating: bool) -> LinkDiagram {
    braid_closure(word, alternating).expect("closure of a connected braid")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn tait_edge_count_equals_crossing_count(word in connected_braid()) {
        let d = closure(&word, false);
        for shading in [Shading::Even, Shading::Odd] {
            let t = tait_graph(&d, shading).unwrap();
            prop_assert_eq!(t.edge_count(), d.crossing_count());
        }
    }

    #[test]
    fn shadings_are_dual_with_equal_tree_counts(word in connected_braid()) {
        let d = closure(&word, true);
        let even = tait_graph(&d, Shading::Even).unwrap();
        let odd = tait_graph(&d, Shading::Odd).unwrap();
        // dual planar multigraphs: complementary sizes and equal tree counts
        let faces = d.crossing_count() + 2;
        prop_assert_eq!(even.vertex_count() + odd.vertex_count(), faces);
        if even.graph.is_connected() && odd.graph.is_connected() {
            let te = spanning_tree_count(&even.graph).unwrap().exact.unwrap();
            let to = spanning_tree_count(&odd.graph).unwrap().exact.unwrap();
            prop_assert_eq!(te, to);
        }
    }

    #[test]
    fn crossing_change_is_involution(word in connected_braid(), mask in 0u32..1024) {
        let d = closure(&word, false);
        let subset: BTreeSet<usize> =
            (0..d.crossing_count()).filter(|i| mask >> (i % 32) & 1 == 1).collect();
        let once = d.change_crossings(&subset).unwrap();
        let twice = once.change_crossings(&subset).unwrap();
        prop_assert_eq!(d, twice);
    }

    #[test]
    fn mirror_preserves_determinant(word in connected_braid()) {
        let d = closure(&word, true);
        prop_assume!(d.crossing_count() <= 10);
        let det = determinant(&d).unwrap().exact.unwrap();
        let mirrored = determinant(&d.mirror()).unwrap().exact.unwrap();
        prop_assert_eq!(det, mirrored);
    }

    #[test]
    fn forced_alternation_validates(word in connected_braid()) {
        let d = closure(&word, true);
        prop_assert!(d.is_alternating());
        // projection untouched by the over/under rewrite
        let raw = closure(&word, false);
        prop_assert_eq!(raw.crossing_count(), d.crossing_count());
        prop_assert_eq!(
            raw.projection_graph().edge_count(),
            d.projection_graph().edge_count()
        );
    }
}
