//! Build weaving diagrams W(p,q) and inspect their combinatorics.
//!
//!     cargo run --example weave_diagrams

use weavelab::diagrams::weaving_diagram;

fn main() {
    for (p, q) in [(3, 2), (5, 4), (4, 3)] {
        let d = weaving_diagram(p, q).unwrap();
        println!(
            "{}: {} crossings, {} edges, {} faces, {} link component(s), alternating = {}",
            d.name(),
            d.crossing_count(),
            d.edge_count(),
            d.faces().len(),
            d.component_count(),
            d.is_alternating()
        );
    }

    // the 4-crossing weave is the figure-eight knot; its PD code:
    let w32 = weaving_diagram(3, 2).unwrap();
    println!("\nPD code of {}:", w32.name());
    for line in w32.pd_codes() {
        println!("  {line}");
    }

    println!("\nJSON form:");
    println!("{}", serde_json::to_string_pretty(&w32.to_json()).unwrap());
}
