//! Triangulate the weave-plus-axis complements, check the reference angle
//! structure, and maximize the volume functional.
//!
//!     cargo run --example angle_structures

use weavelab::anglestruct::{
    angle_space, axis_volume, build_weaving_triangulation, maximize_volume, octahedral_point,
    total_volume,
};
use weavelab::hypgeom::{v3, v8};

fn main() {
    for p in [3usize, 4, 5, 8] {
        let tri = build_weaving_triangulation(p).unwrap();
        let space = angle_space(&tri).unwrap();
        let reference = octahedral_point(&tri).unwrap();
        let ref_vol = total_volume(&tri, &reference).unwrap();
        let result = maximize_volume(&space, &reference).unwrap();
        println!(
            "p = {p}: {} tets, {} edge classes, space dimension {}",
            tri.tet_count(),
            tri.class_count(),
            space.dimension()
        );
        println!(
            "  reference volume {:.9}   maximized {:.9}   ({} steps, kkt {:.1e})",
            ref_vol, result.volume, result.iterations, result.kkt_residual
        );
        if p == 3 {
            println!("  p = 3 closed form 4 v3 = {:.9}", 4.0 * v3());
        } else {
            println!(
                "  window [v8(p-2), v8(p-3)+4v3] = [{:.9}, {:.9}]",
                v8() * (p as f64 - 2.0),
                v8() * (p as f64 - 3.0) + 4.0 * v3()
            );
        }
    }

    // covering-space multiplicativity: the q-fold cover scales the volume
    println!("\naxis volumes vol(W(3,q) u B) = 4 q v3:");
    for q in [1usize, 3, 6] {
        println!(
            "  q = {q}: solver {:.9}  closed form {:.9}",
            axis_volume(3, q).unwrap(),
            4.0 * q as f64 * v3()
        );
    }

    // triangulation export
    let tri = build_weaving_triangulation(4).unwrap();
    println!("\np = 4 triangulation JSON:");
    println!("{}", serde_json::to_string_pretty(&tri).unwrap());
}
