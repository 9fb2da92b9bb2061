//! Plaitwork closures of square-lattice blocks: finite pieces of the
//! infinite weave.
//!
//!     cargo run --example grid_weaves

use weavelab::diagrams::grid_weave_closure;

fn main() {
    for n in [2usize, 4, 8] {
        let gw = grid_weave_closure(n, n).unwrap();
        println!(
            "grid({n},{n}): {} crossings, {} curls, alternating = {}, block ratio = {}",
            gw.diagram.crossing_count(),
            gw.curls,
            gw.diagram.is_alternating(),
            (n * n) as f64 / gw.diagram.crossing_count() as f64,
        );
    }

    // interior lattice adjacency survives the closure untouched
    let gw = grid_weave_closure(4, 4).unwrap();
    let proj = gw.diagram.projection_graph();
    let mut lattice_edges = 0;
    for i in 0..4 {
        for j in 0..4 {
            if j + 1 < 4 && proj.has_edge(gw.vertex(i, j), gw.vertex(i, j + 1)) {
                lattice_edges += 1;
            }
            if i + 1 < 4 && proj.has_edge(gw.vertex(i, j), gw.vertex(i + 1, j)) {
                lattice_edges += 1;
            }
        }
    }
    println!("\n4x4 block: {lattice_edges}/24 lattice adjacencies embedded");

    // odd sides force two corner curls
    let odd = grid_weave_closure(3, 3).unwrap();
    println!(
        "grid(3,3): {} crossings, {} corner curls",
        odd.diagram.crossing_count(),
        odd.curls
    );
}
