//! Trace closures of braid words, with and without the alternating
//! override.
//!
//!     cargo run --example braid_closures

use weavelab::diagrams::{braid_closure, weaving_diagram, BraidWord};

fn main() {
    // the trefoil as the closure of σ1³ in the 2-strand braid group
    let trefoil = braid_closure(&BraidWord::new(2, vec![1, 1, 1]).unwrap(), true).unwrap();
    println!(
        "closure of s1^3: {} crossings, alternating = {}, twist number = {}",
        trefoil.crossing_count(),
        trefoil.is_alternating(),
        trefoil.twist_number().unwrap()
    );

    // the all-positive torus word is not alternating until the projection
    // is re-dressed; the re-dressed closure is the weave
    let word = BraidWord::parse(3, "1 2 1 2").unwrap();
    let raw = braid_closure(&word, false).unwrap();
    let forced = braid_closure(&word, true).unwrap();
    println!(
        "closure of (s1 s2)^2: alternating raw = {}, forced = {}",
        raw.is_alternating(),
        forced.is_alternating()
    );

    // forcing (σ1 σ2)² alternating reproduces W(3,2) as a labelled map
    let weave_pattern = braid_closure(&BraidWord::parse(3, "1 2 1 2").unwrap(), true).unwrap();
    let w32 = weaving_diagram(3, 2).unwrap();
    println!(
        "closure of (s1 s2)^2 is isomorphic to W(3,2): {}",
        weave_pattern.canonical_code() == w32.canonical_code()
    );

    // 1-crossing unknot: a single kink, rejected as nugatory by the
    // twist-number validator
    let kink = braid_closure(&BraidWord::new(2, vec![1]).unwrap(), false).unwrap();
    println!(
        "single kink: projection has {} vertex and {} edges; twist_number -> {:?}",
        kink.projection_graph().vertex_count(),
        kink.projection_graph().edge_count(),
        kink.twist_number().err().map(|e| e.to_string())
    );
}
