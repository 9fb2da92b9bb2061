//! Every closed-form volume bound: octahedral, refined, twist-number,
//! combined alternating, and the weaving-knot bounds with the Dehn-filling
//! factor.
//!
//!     cargo run --example volume_bounds

use weavelab::hypgeom::{
    adams_upper, alternating_bounds, dehn_filling_factor, three_strand_axis_volume, thurston_upper,
    twist_bounds, weaving_bounds,
};

fn main() {
    println!("per-crossing octahedral upper bound:");
    for c in [1u64, 16, 100] {
        println!("  c = {c:>3}: vol <= {:.4}", thurston_upper(c).unwrap());
    }

    println!("\nrefined upper bound (c >= 5): v8(c-5) + 4v3:");
    for c in [5u64, 16, 100] {
        println!("  c = {c:>3}: vol <= {:.4}", adams_upper(c).unwrap());
    }

    println!("\ntwist-number bounds:");
    for t in [2u64, 3, 10] {
        let b = twist_bounds(t).unwrap();
        println!(
            "  t = {t:>2}: {:.4} <= vol < {:.4}",
            b.lower.unwrap(),
            b.upper
        );
    }

    println!("\ncombined alternating bounds:");
    for c in [5u64, 16, 100] {
        let b = alternating_bounds(c).unwrap();
        print!(
            "  c = {c:>3}: {:.4} <= vol <= {:.4}",
            b.lower.unwrap(),
            b.upper
        );
        match &b.warning {
            Some(w) => println!("  ({w})"),
            None => println!(),
        }
    }

    println!("\nDehn filling factor (1 - (2pi/q)^2)^(3/2):");
    for q in [7u64, 10, 50, 1000] {
        println!("  q = {q:>4}: {:.6}", dehn_filling_factor(q).unwrap());
    }

    println!("\nweaving-knot bounds:");
    for (p, q) in [(3u64, 7u64), (5, 4), (5, 7), (20, 20)] {
        let b = weaving_bounds(p, q).unwrap();
        let c = q * (p - 1);
        match b.lower {
            Some(l) => println!(
                "  W({p},{q}): {l:.4} <= vol <= {:.4}   (density window {:.4}..{:.4})",
                b.upper,
                l / c as f64,
                b.upper / c as f64
            ),
            None => println!(
                "  W({p},{q}): vol <= {:.4}  (q < 7: no lower bound)",
                b.upper
            ),
        }
    }

    println!("\nthree-strand axis volumes 4 q v3:");
    for q in [1u64, 2, 10] {
        println!("  q = {q:>2}: {:.6}", three_strand_axis_volume(q).unwrap());
    }
}
