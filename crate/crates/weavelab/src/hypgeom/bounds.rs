//! Closed-form volume bounds: the octahedral per-crossing bound, the Adams
//! refinement, twist-number bounds, the combined alternating-diagram bounds,
//! and the weaving-knot bounds with their Dehn-filling correction factor.

use super::{v3, v8};
use crate::{Error, Result};
use serde::Serialize;
use std::f64::consts::PI;

/// A lower/upper volume bound pair, tagged with the formulas that produced
/// it. `lower` is absent when no lower bound applies. When `warning` is set
/// the pair is reported as computed even if `lower > upper` (this happens
/// for the alternating-diagram bounds at very small crossing numbers, where
/// the formulas sit outside their comfort zone).
#[derive(Debug, Clone, Serialize)]
pub struct VolumeBounds {
    pub lower: Option<f64>,
    pub upper: f64,
    pub sources: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
}

impl VolumeBounds {
    fn new(lower: Option<f64>, upper: f64, sources: &[&str]) -> Self {
        VolumeBounds {
            lower,
            upper,
            sources: sources.iter().map(|s| s.to_string()).collect(),
            warning: None,
        }
    }
}

/// Octahedral upper bound: one ideal octahedron per crossing gives
/// `vol(K) ≤ c(K) · v8`.
pub fn thurston_upper(c: u64) -> Result<f64> {
    if c < 1 {
        return Err(Error::parameter("crossing number must be at least 1"));
    }
    Ok(c as f64 * v8())
}

/// Refined upper bound `vol(K) ≤ v8(c−5) + 4v3` for hyperbolic links with
/// at least 5 crossings.
pub fn adams_upper(c: u64) -> Result<f64> {
    if c < 5 {
        return Err(Error::domain("adams bound needs c >= 5"));
    }
    Ok(v8() * (c as f64 - 5.0) + 4.0 * v3())
}

/// Twist-number bounds for a prime alternating twist-reduced diagram:
/// `v8/2 (t−2) ≤ vol < 10 v3 (t−1)`. The upper bound is strict.
pub fn twist_bounds(t: u64) -> Result<VolumeBounds> {
    if t < 2 {
        return Err(Error::domain("twist bounds need t >= 2"));
    }
    let lower = v8() / 2.0 * (t as f64 - 2.0);
    let upper = 10.0 * v3() * (t as f64 - 1.0);
    Ok(VolumeBounds::new(
        Some(lower),
        upper,
        &["v8/2*(t-2)", "10*v3*(t-1) (strict)"],
    ))
}

/// Combined bounds for a prime alternating twist-reduced bigon-free diagram
/// with `c ≥ 5`: `v8/2 (c−2) ≤ vol ≤ v8(c−5) + 4v3`. At c = 5 and 6 the
/// two formulas cross; the pair is returned as computed with a warning tag
/// rather than silently reordered.
pub fn alternating_bounds(c: u64) -> Result<VolumeBounds> {
    if c < 5 {
        return Err(Error::domain("alternating bounds need c >= 5"));
    }
    let lower = v8() / 2.0 * (c as f64 - 2.0);
    let upper = adams_upper(c)?;
    let mut b = VolumeBounds::new(Some(lower), upper, &["v8/2*(c-2)", "v8*(c-5)+4*v3"]);
    if lower > upper {
        b.warning = Some(format!(
            "lower bound {lower:.6} exceeds upper bound {upper:.6}: the bigon-free \
             alternating hypotheses are vacuous at c = {c}"
        ));
    }
    Ok(b)
}

/// Volume-loss factor `(1 − (2π/q)²)^(3/2)` for Dehn filling along a slope
/// of length q. Defined here for `q ≥ 7`, where the slope length exceeds 2π.
pub fn dehn_filling_factor(q: u64) -> Result<f64> {
    if q < 7 {
        return Err(Error::domain("dehn filling factor needs q >= 7"));
    }
    let r = 2.0 * PI / q as f64;
    Ok((1.0 - r * r).powf(1.5))
}

/// Volume bounds for the weaving knot `W(p,q)`, `p ≥ 3`:
/// upper `(v8(p−3) + 4v3) q` for all q ≥ 1, lower
/// `v8 (p−2) q · (1 − (2π/q)²)^(3/2)` once `q ≥ 7`.
pub fn weaving_bounds(p: u64, q: u64) -> Result<VolumeBounds> {
    if p < 3 {
        return Err(Error::domain("weaving bounds need p >= 3"));
    }
    if q < 1 {
        return Err(Error::parameter("q must be at least 1"));
    }
    let upper = (v8() * (p as f64 - 3.0) + 4.0 * v3()) * q as f64;
    let lower = if q >= 7 {
        Some(v8() * (p as f64 - 2.0) * q as f64 * dehn_filling_factor(q)?)
    } else {
        None
    };
    let mut sources = vec!["(v8*(p-3)+4*v3)*q"];
    if lower.is_some() {
        sources.insert(0, "v8*(p-2)*q*(1-(2pi/q)^2)^(3/2)");
    }
    Ok(VolumeBounds::new(lower, upper, &sources))
}

/// Exact volume of the 3-strand weave together with its braid axis:
/// `vol(W(3,q) ∪ B) = 4 q v3`.
pub fn three_strand_axis_volume(q: u64) -> Result<f64> {
    if q < 1 {
        return Err(Error::parameter("q must be at least 1"));
    }
    Ok(4.0 * q as f64 * v3())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn octahedral_bound() {
        assert!((thurston_upper(1).unwrap() - 3.66386).abs() < 5e-6);
        assert!((thurston_upper(16).unwrap() - 58.622).abs() < 1e-3);
        assert!(thurston_upper(0).is_err());
    }

    #[test]
    fn adams_bound() {
        assert!((adams_upper(5).unwrap() - 4.0 * v3()).abs() < 1e-12);
        assert!((adams_upper(16).unwrap() - 44.362).abs() < 1e-3);
        assert!(adams_upper(4).is_err());
    }

    #[test]
    fn twist_number_bounds() {
        let b2 = twist_bounds(2).unwrap();
        assert_eq!(b2.lower, Some(0.0));
        assert!((b2.upper - 10.0 * v3()).abs() < 1e-12);
        let b3 = twist_bounds(3).unwrap();
        assert!((b3.lower.unwrap() - v8() / 2.0).abs() < 1e-12);
        assert!((b3.upper - 20.0 * v3()).abs() < 1e-12);
        for t in 2..=100 {
            let b = twist_bounds(t).unwrap();
            assert!(b.lower.unwrap() <= b.upper);
        }
        assert!(twist_bounds(1).is_err());
    }

    #[test]
    fn alternating_bound_pair() {
        let b5 = alternating_bounds(5).unwrap();
        assert!((b5.lower.unwrap() - 1.5 * v8()).abs() < 1e-12);
        assert!((b5.upper - 4.0 * v3()).abs() < 1e-12);
        assert!(b5.warning.is_some(), "crossed bounds at c=5 must warn");
        let b16 = alternating_bounds(16).unwrap();
        assert!((b16.lower.unwrap() - 25.647).abs() < 1e-3);
        assert!((b16.upper - 44.362).abs() < 1e-3);
        assert!(b16.warning.is_none());
        let b100 = alternating_bounds(100).unwrap();
        assert!((b100.lower.unwrap() - 179.53).abs() < 5e-3);
        assert!((b100.upper - 352.13).abs() < 5e-3);
        assert!(alternating_bounds(4).is_err());
    }

    #[test]
    fn filling_factor() {
        assert!((dehn_filling_factor(7).unwrap() - 0.085658).abs() < 1e-5);
        assert!((dehn_filling_factor(50).unwrap() - 0.976407).abs() < 1e-5);
        assert!((dehn_filling_factor(1_000_000).unwrap() - 1.0).abs() < 1e-8);
        assert!(dehn_filling_factor(6).is_err());
        for q in 7..=200 {
            let f = dehn_filling_factor(q).unwrap();
            assert!(f > 0.0 && f < 1.0);
        }
    }

    #[test]
    fn weaving_bound_examples() {
        let b37 = weaving_bounds(3, 7).unwrap();
        assert!((b37.lower.unwrap() - 2.197).abs() < 1e-3);
        assert!((b37.upper - 28.418).abs() < 1e-3);

        let b54 = weaving_bounds(5, 4).unwrap();
        assert!(b54.lower.is_none());
        assert!((b54.upper - (2.0 * v8() + 4.0 * v3()) * 4.0).abs() < 1e-12);
        assert!((b54.upper - 45.550).abs() < 1e-3);

        // for p = 3 the upper bound is 4 v3 q, which exceeds v8 q
        let b3 = weaving_bounds(3, 10).unwrap();
        assert!(b3.upper > v8() * 10.0);
        assert!(weaving_bounds(2, 5).is_err());
    }

    #[test]
    fn weaving_lower_density_tends_to_v8() {
        // along the diagonal p = q the lower-bound density increases to v8
        let mut prev = 0.0;
        for &n in &[10u64, 20, 40] {
            let b = weaving_bounds(n, n).unwrap();
            let density = b.lower.unwrap() / (n as f64 * (n as f64 - 1.0));
            assert!(density > prev && density < v8());
            prev = density;
        }
        assert!(prev > 0.9 * v8());
    }

    #[test]
    fn upper_density_below_v8() {
        for p in 3..=100u64 {
            let b = weaving_bounds(p, 10).unwrap();
            let density = b.upper / (10.0 * (p as f64 - 1.0));
            assert!(density < v8());
        }
    }

    #[test]
    fn lower_density_monotone_in_p_and_q() {
        let density =
            |p: u64, q: u64| weaving_bounds(p, q).unwrap().lower.unwrap() / (q * (p - 1)) as f64;
        for p in 3..=12u64 {
            for q in 7..=16u64 {
                let d = density(p, q);
                assert!(d < v8());
                if p > 3 {
                    assert!(d > density(p - 1, q), "p step at ({p},{q})");
                }
                if q > 7 {
                    assert!(d > density(p, q - 1), "q step at ({p},{q})");
                }
            }
        }
    }

    #[test]
    fn three_strand_values() {
        assert!((three_strand_axis_volume(1).unwrap() - 4.0598).abs() < 1e-3);
        assert!((three_strand_axis_volume(2).unwrap() - 8.0 * v3()).abs() < 1e-12);
    }
}
