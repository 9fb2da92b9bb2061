//! Hyperbolic volume primitives: the Lobachevsky function, ideal tetrahedron
//! volumes, the constants v3 (regular ideal tetrahedron), v8 (regular ideal
//! octahedron) and Catalan's constant, and the closed-form volume bounds for
//! alternating links and weaving knots.

mod bounds;
mod lobachevsky;

pub use bounds::{
    adams_upper, alternating_bounds, dehn_filling_factor, three_strand_axis_volume, thurston_upper,
    twist_bounds, weaving_bounds, VolumeBounds,
};
pub use lobachevsky::{ideal_tet_volume, lobachevsky};

use serde::Serialize;
use std::f64::consts::PI;
use std::sync::OnceLock;

/// The geometric constants of the crate, computed once from the Lobachevsky
/// function (and, for Catalan, from its defining series) rather than
/// hardcoded decimals.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct GeomConstants {
    /// Volume of the regular ideal tetrahedron, `2Λ(π/6) ≈ 1.01494`.
    pub v3: f64,
    /// Volume of the regular ideal octahedron, `8Λ(π/4) ≈ 3.66386`.
    pub v8: f64,
    /// Catalan's constant `C ≈ 0.91597`, with `4C = v8`.
    pub catalan: f64,
}

static CONSTANTS: OnceLock<GeomConstants> = OnceLock::new();

/// Catalan's constant from its alternating series, summed in positive pairs
/// from the tail back so rounding stays at machine level. Truncation error
/// is below `1/(4K+1)^2 ≈ 2.5e-13` at `K = 5e5` pairs.
fn catalan_series() -> f64 {
    const PAIRS: u64 = 500_000;
    let mut sum = 0.0f64;
    for k in (0..PAIRS).rev() {
        let a = 4 * k + 1;
        let b = 4 * k + 3;
        sum += 1.0 / ((a * a) as f64) - 1.0 / ((b * b) as f64);
    }
    sum
}

/// The shared constants, initialized on first use.
pub fn constants() -> &'static GeomConstants {
    CONSTANTS.get_or_init(|| GeomConstants {
        v3: 2.0 * lobachevsky(PI / 6.0),
        v8: 8.0 * lobachevsky(PI / 4.0),
        catalan: catalan_series(),
    })
}

/// Shorthand for `constants().v3`.
pub fn v3() -> f64 {
    constants().v3
}

/// Shorthand for `constants().v8`.
pub fn v8() -> f64 {
    constants().v8
}
