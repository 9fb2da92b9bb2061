//! Knot determinants from Tait graphs: exact values, densities, the
//! signed count under crossing changes, and the Jones average.
//!
//!     cargo run --example determinants

use std::collections::BTreeSet;
use weavelab::diagrams::{braid_closure, tait_graph, weaving_diagram, BraidWord, Shading};
use weavelab::hypgeom::v8;
use weavelab::spanning::{determinant, determinant_density, jones_average, mu_density};

fn main() {
    let trefoil = braid_closure(&BraidWord::new(2, vec![1, 1, 1]).unwrap(), true).unwrap();
    let w32 = weaving_diagram(3, 2).unwrap();

    for d in [&trefoil, &w32] {
        let det = determinant(d).unwrap();
        println!(
            "{}: det = {}, density = {:.6}, jones average = {}",
            d.name(),
            det.exact.as_ref().unwrap(),
            determinant_density(d).unwrap(),
            jones_average(d).unwrap(),
        );
    }

    // the two checkerboard shadings give planar-dual Tait graphs
    let even = tait_graph(&w32, Shading::Even).unwrap();
    let odd = tait_graph(&w32, Shading::Odd).unwrap();
    println!(
        "\nW(3,2) Tait graphs: {} and {} vertices, {} edges each",
        even.vertex_count(),
        odd.vertex_count(),
        even.edge_count()
    );

    // changing any proper crossing subset strictly lowers the determinant
    println!("\ncrossing changes of W(3,2) (det = 5):");
    for c in 0..4 {
        let subset: BTreeSet<usize> = [c].into_iter().collect();
        let changed = w32.change_crossings(&subset).unwrap();
        println!(
            "  flip crossing {c}: det = {}",
            determinant(&changed).unwrap().exact.unwrap()
        );
    }

    let d2020 = weaving_diagram(20, 20).unwrap();
    let density = determinant_density(&d2020).unwrap();
    println!(
        "\nW(20,20): density = {:.5} < v8 = {:.5}; mu-density = {:.5}",
        density,
        v8(),
        mu_density(&d2020).unwrap()
    );
}
