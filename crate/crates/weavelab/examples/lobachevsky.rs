//! The Lobachevsky function and the geometric constants derived from it.
//!
//!     cargo run --example lobachevsky

use std::f64::consts::PI;
use weavelab::hypgeom::{constants, ideal_tet_volume, lobachevsky};

fn main() {
    let c = constants();
    println!("v3      = {:.12}  (= 2 L(pi/6) = 3 L(pi/3))", c.v3);
    println!("v8      = {:.12}  (= 8 L(pi/4))", c.v8);
    println!(
        "catalan = {:.12}  (v8 - 4C = {:.2e})",
        c.catalan,
        c.v8 - 4.0 * c.catalan
    );

    println!("\nLobachevsky samples:");
    for k in 1..=6 {
        let theta = PI * k as f64 / 12.0;
        println!("  L({k:>2} pi/12) = {:+.12}", lobachevsky(theta));
    }
    println!(
        "  maximum on [0, pi] at pi/6: L = {:.12}",
        lobachevsky(PI / 6.0)
    );

    println!("\nideal tetrahedron volumes:");
    let regular = ideal_tet_volume(PI / 3.0, PI / 3.0, PI / 3.0).unwrap();
    let oct_quarter = ideal_tet_volume(PI / 2.0, PI / 4.0, PI / 4.0).unwrap();
    println!("  regular (pi/3, pi/3, pi/3)   = {regular:.12} = v3");
    println!("  quarter octahedron           = {oct_quarter:.12} = v8/4");
    println!(
        "  flat (0, 0, pi)              = {}",
        ideal_tet_volume(0.0, 0.0, PI).unwrap()
    );

    // duplication identity on a few angles
    println!("\nduplication identity residuals |L(2t)/2 - L(t) - L(t + pi/2)|:");
    for &t in &[0.3, 0.7, 1.1] {
        let r = (0.5 * lobachevsky(2.0 * t) - lobachevsky(t) - lobachevsky(t + PI / 2.0)).abs();
        println!("  t = {t}: {r:.2e}");
    }
}
