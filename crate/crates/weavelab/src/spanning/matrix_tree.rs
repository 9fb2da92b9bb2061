//! Matrix-tree computations: exact spanning-tree counts by fraction-free
//! (Bareiss) elimination over big integers, signed counts via ±1 edge
//! weights, and a floating LU log-determinant path for graphs too large for
//! exact arithmetic to be worthwhile.

use super::{Multigraph, SignedTreeSum, TreeCount};
use crate::numeric::{big_ln, lu_logdet};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

fn require_connected(g: &Multigraph) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::domain("graph is not connected"));
    }
    Ok(())
}

/// Reduced integer Laplacian (vertex 0 struck). Loops are dropped. With
/// `signed_weights` each positive edge contributes weight −1 and each
/// negative edge +1, so the determinant is `Σ_T (−1)^{σ(T)}`.
fn reduced_laplacian_int(g: &Multigraph, signed_weights: bool) -> Vec<Vec<i64>> {
    let n = g.vertex_count();
    let mut lap = vec![vec![0i64; n - 1]; n - 1];
    for e in g.edges() {
        if e.u == e.v {
            continue;
        }
        let w: i64 = if signed_weights { -(e.sign as i64) } else { 1 };
        if e.u > 0 {
            lap[e.u - 1][e.u - 1] += w;
        }
        if e.v > 0 {
            lap[e.v - 1][e.v - 1] += w;
        }
        if e.u > 0 && e.v > 0 {
            lap[e.u - 1][e.v - 1] -= w;
            lap[e.v - 1][e.u - 1] -= w;
        }
    }
    lap
}

/// Exact determinant by Bareiss fraction-free elimination. Every division
/// is exact, so the result is the integer determinant with no rational
/// arithmetic along the way.
fn bareiss_det(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut sign = 1i8;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let swap = (k + 1..n).find(|&r| !a[r][k].is_zero());
            match swap {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Exact spanning-tree count τ(g) of a connected multigraph.
pub fn spanning_tree_count(g: &Multigraph) -> Result<TreeCount> {
    require_connected(g)?;
    if g.vertex_count() == 1 {
        return Ok(TreeCount {
            exact: Some(BigInt::from(1)),
            log_value: 0.0,
            log_error: 0.0,
        });
    }
    let lap = reduced_laplacian_int(g, false);
    let det = bareiss_det(&lap);
    if det.is_negative() {
        return Err(Error::numeric(format!(
            "matrix-tree determinant came out negative ({det}); Laplacian construction bug"
        )));
    }
    let log_value = big_ln(&det);
    Ok(TreeCount {
        exact: Some(det),
        log_value,
        log_error: 1e-14,
    })
}

/// Signed spanning-tree sum `Σ_T (−1)^{σ(T)}` via the weighted matrix-tree
/// determinant. No tally; see [`super::sigma_tallies`] for the guarded
/// enumeration path that produces one.
pub fn signed_tree_sum(g: &Multigraph) -> Result<SignedTreeSum> {
    require_connected(g)?;
    if g.vertex_count() == 1 {
        return Ok(SignedTreeSum {
            value: BigInt::from(1),
            tallies: None,
        });
    }
    let lap = reduced_laplacian_int(g, true);
    Ok(SignedTreeSum {
        value: bareiss_det(&lap),
        tallies: None,
    })
}

/// `log τ(g)` by floating LU with partial pivoting on the reduced
/// Laplacian. The error estimate is a growth-factor heuristic calibrated so
/// that exact comparisons on feasible sizes stay well inside it.
pub fn log_spanning_tree_count(g: &Multigraph) -> Result<TreeCount> {
    require_connected(g)?;
    if g.vertex_count() == 1 {
        return Ok(TreeCount {
            exact: None,
            log_value: 0.0,
            log_error: 0.0,
        });
    }
    let n = g.vertex_count() - 1;
    let mut lap = vec![vec![0.0f64; n]; n];
    for e in g.edges() {
        if e.u == e.v {
            continue;
        }
        if e.u > 0 {
            lap[e.u - 1][e.u - 1] += 1.0;
        }
        if e.v > 0 {
            lap[e.v - 1][e.v - 1] += 1.0;
        }
        if e.u > 0 && e.v > 0 {
            lap[e.u - 1][e.v - 1] -= 1.0;
            lap[e.v - 1][e.u - 1] -= 1.0;
        }
    }
    let (log_value, sign) = lu_logdet(lap).ok_or_else(|| {
        Error::numeric("reduced Laplacian is numerically singular; graph may be disconnected")
    })?;
    if sign < 0.0 {
        return Err(Error::numeric("reduced Laplacian determinant negative"));
    }
    let nf = n as f64;
    let log_error = f64::EPSILON * nf * (nf.sqrt() + log_value.abs());
    Ok(TreeCount {
        exact: None,
        log_value,
        log_error,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spanning::enumerate_spanning_trees;

    #[test]
    fn triangle_has_three_trees() {
        let t = spanning_tree_count(&Multigraph::cycle(3)).unwrap();
        assert_eq!(t.exact.unwrap(), BigInt::from(3));
    }

    #[test]
    fn k4_matches_cayley_and_enumeration() {
        let g = Multigraph::complete(4);
        let t = spanning_tree_count(&g).unwrap();
        assert_eq!(t.exact.as_ref().unwrap(), &BigInt::from(16));
        assert_eq!(enumerate_spanning_trees(&g).unwrap().len(), 16);
    }

    #[test]
    fn single_vertex_counts_one() {
        let t = spanning_tree_count(&Multigraph::new(1)).unwrap();
        assert_eq!(t.exact.unwrap(), BigInt::from(1));
    }

    #[test]
    fn loops_are_ignored() {
        let mut g = Multigraph::cycle(3);
        g.add_edge(0, 0);
        let t = spanning_tree_count(&g).unwrap();
        assert_eq!(t.exact.unwrap(), BigInt::from(3));
    }

    #[test]
    fn parallel_edges_multiply() {
        // doubled triangle: 3 tree shapes, 2 copy choices per tree edge
        let mut g = Multigraph::new(3);
        for _ in 0..2 {
            g.add_edge(0, 1);
            g.add_edge(1, 2);
            g.add_edge(2, 0);
        }
        let t = spanning_tree_count(&g).unwrap();
        assert_eq!(t.exact.unwrap(), BigInt::from(12));
    }

    #[test]
    fn disconnected_rejected() {
        let mut g = Multigraph::new(4);
        g.add_edge(0, 1);
        g.add_edge(2, 3);
        assert!(spanning_tree_count(&g).is_err());
        assert!(log_spanning_tree_count(&g).is_err());
    }

    #[test]
    fn log_count_matches_exact() {
        for g in [
            Multigraph::cycle(3),
            Multigraph::complete(5),
            Multigraph::grid(5, 5),
            Multigraph::grid(10, 10),
        ] {
            let exact = spanning_tree_count(&g).unwrap();
            let approx = log_spanning_tree_count(&g).unwrap();
            let rel = (exact.log_value - approx.log_value).abs() / exact.log_value.abs().max(1.0);
            assert!(rel < 1e-9, "relative gap {rel}");
        }
    }

    #[test]
    fn single_edge_log_zero() {
        let mut g = Multigraph::new(2);
        g.add_edge(0, 1);
        assert_eq!(log_spanning_tree_count(&g).unwrap().log_value, 0.0);
    }

    #[test]
    fn signed_sum_all_positive_is_plus_minus_tau() {
        let g = Multigraph::cycle(3);
        let s = signed_tree_sum(&g).unwrap();
        assert_eq!(s.value.magnitude(), BigInt::from(3).magnitude());
    }
}
