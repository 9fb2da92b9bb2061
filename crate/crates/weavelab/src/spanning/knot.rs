//! Knot determinants from Tait graphs: the spanning-tree count for
//! alternating diagrams, the absolute signed count in general, and the
//! determinant / Jones-average densities.

use super::{signed_tree_sum, spanning_tree_count, TreeCount};
use crate::diagrams::{tait_graph, LinkDiagram, Shading};
use crate::numeric::big_ln;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::f64::consts::PI;

/// Knot determinant of a connected non-split diagram. Alternating diagrams
/// use the plain spanning-tree count of the Tait graph; otherwise the
/// absolute signed spanning-tree sum, with positive edges weighted −1.
/// The result is independent of the shading choice, which is asserted.
pub fn determinant(d: &LinkDiagram) -> Result<TreeCount> {
    let even = determinant_for_shading(d, Shading::Even)?;
    let odd = determinant_for_shading(d, Shading::Odd)?;
    if even != odd {
        return Err(Error::numeric(format!(
            "determinant differs between shadings: {even} vs {odd}"
        )));
    }
    let log_value = big_ln(&even);
    Ok(TreeCount {
        exact: Some(even),
        log_value,
        log_error: 1e-14,
    })
}

fn determinant_for_shading(d: &LinkDiagram, shading: Shading) -> Result<BigInt> {
    let tait = tait_graph(d, shading)?;
    if !tait.graph.is_connected() {
        return Err(Error::domain("split diagram: Tait graph is disconnected"));
    }
    if d.is_alternating() {
        Ok(spanning_tree_count(&tait.graph)?.exact.unwrap())
    } else {
        Ok(signed_tree_sum(&tait.graph)?.value.abs())
    }
}

/// Determinant density `2π·log det(d) / c(d)` in natural log.
pub fn determinant_density(d: &LinkDiagram) -> Result<f64> {
    let det = determinant(d)?;
    let exact = det.exact.as_ref().unwrap();
    if exact.is_zero() {
        return Err(Error::domain("determinant is zero; density undefined"));
    }
    Ok(2.0 * PI * det.log_value / d.crossing_count() as f64)
}

/// Log-scale determinant of an alternating diagram via the floating LU
/// path, for scans where exact counting is unnecessary.
pub fn log_determinant(d: &LinkDiagram) -> Result<TreeCount> {
    if !d.is_alternating() {
        return Err(Error::domain(
            "log-determinant path requires an alternating diagram",
        ));
    }
    let tait = tait_graph(d, Shading::Even)?;
    if !tait.graph.is_connected() {
        return Err(Error::domain("split diagram: Tait graph is disconnected"));
    }
    super::log_spanning_tree_count(&tait.graph)
}

/// Average Jones coefficient magnitude of an alternating link,
/// `μ = det / (c + 1)`, as an exact rational.
pub fn jones_average(d: &LinkDiagram) -> Result<BigRational> {
    if !d.is_alternating() {
        return Err(Error::domain(
            "jones average identity det/(c+1) holds for alternating diagrams only",
        ));
    }
    let det = determinant(d)?.exact.unwrap();
    Ok(BigRational::new(
        det,
        BigInt::from(d.crossing_count() as u64 + 1),
    ))
}

/// μ-density `2π·log μ / c`.
pub fn mu_density(d: &LinkDiagram) -> Result<f64> {
    let det = determinant(d)?;
    let c = d.crossing_count() as f64;
    let log_mu = det.log_value - (c + 1.0).ln();
    Ok(2.0 * PI * log_mu / c)
}
