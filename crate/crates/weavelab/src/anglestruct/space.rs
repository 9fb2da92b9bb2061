//! The affine space of angle structures: per-tetrahedron sums equal π,
//! per-edge-class sums equal 2π. Represented as one particular solution
//! plus an orthonormal basis of the homogeneous solution space; the
//! positivity region is implicit.

use super::{build::class_residual, flatten, octahedral_point, AngleAssignment, Triangulation};
use crate::numeric::{dot, nullspace, solve_particular};
use crate::{Error, Result};
use std::f64::consts::PI;

#[derive(Debug, Clone)]
pub struct AngleSpace {
    pub triangulation: Triangulation,
    /// Flattened particular solution, 3 variables per tetrahedron.
    pub particular: Vec<f64>,
    /// Orthonormal basis of the homogeneous directions.
    pub basis: Vec<Vec<f64>>,
}

impl AngleSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn var_count(&self) -> usize {
        self.particular.len()
    }

    /// The point `particular + Σ tᵢ basisᵢ`.
    pub fn point(&self, t: &[f64]) -> AngleAssignment {
        assert_eq!(t.len(), self.dimension());
        let mut x = self.particular.clone();
        for (ti, b) in t.iter().zip(&self.basis) {
            for (xi, bi) in x.iter_mut().zip(b) {
                *xi += ti * bi;
            }
        }
        super::unflatten(&x)
    }

    /// Coordinates of a feasible assignment relative to the particular
    /// solution.
    pub fn coordinates(&self, a: &AngleAssignment) -> Result<Vec<f64>> {
        let r = self.residual(a);
        if r > 1e-9 {
            return Err(Error::domain(format!(
                "assignment violates the equality constraints by {r:e}"
            )));
        }
        let x = flatten(a);
        let delta: Vec<f64> = x.iter().zip(&self.particular).map(|(a, b)| a - b).collect();
        Ok(self.basis.iter().map(|b| dot(&delta, b)).collect())
    }

    /// Largest violation of the per-tet and per-class equations.
    pub fn residual(&self, a: &AngleAssignment) -> f64 {
        let tet_res = a
            .iter()
            .map(|t| (t[0] + t[1] + t[2] - PI).abs())
            .fold(0.0, f64::max);
        tet_res.max(class_residual(&self.triangulation, a))
    }
}

/// Constraint matrix: one row per tetrahedron (angles sum to π), one row
/// per edge class (slot angles sum to 2π). Variables are the 3 angle
/// variables of each tetrahedron in order.
fn constraint_system(tri: &Triangulation) -> (Vec<Vec<f64>>, Vec<f64>) {
    let nt = tri.tet_count();
    let nv = 3 * nt;
    let mut rows = Vec::with_capacity(nt + tri.class_count());
    let mut rhs = Vec::with_capacity(nt + tri.class_count());
    for t in 0..nt {
        let mut row = vec![0.0; nv];
        for k in 0..3 {
            row[3 * t + k] = 1.0;
        }
        rows.push(row);
        rhs.push(PI);
    }
    for class in 0..tri.class_count() {
        let mut row = vec![0.0; nv];
        for (t, tet) in tri.tets.iter().enumerate() {
            for (slot, &c) in tet.slot_class.iter().enumerate() {
                if c == class {
                    row[3 * t + slot / 2] += 1.0;
                }
            }
        }
        rows.push(row);
        rhs.push(2.0 * PI);
    }
    (rows, rhs)
}

/// Builds the angle-structure space of a triangulation. The particular
/// solution is seeded from the reference right-angled point when the
/// triangulation is from the weaving family, otherwise from a linear
/// solve; the homogeneous basis comes from the nullspace of the constraint
/// matrix.
pub fn angle_space(tri: &Triangulation) -> Result<AngleSpace> {
    let (rows, rhs) = constraint_system(tri);
    let particular = match octahedral_point(tri) {
        Ok(p) => flatten(&p),
        Err(_) => solve_particular(&rows, &rhs, 1e-10).ok_or_else(|| {
            Error::numeric("angle equality system is infeasible; triangulation builder bug")
        })?,
    };
    let basis = nullspace(&rows, 1e-10);
    let space = AngleSpace {
        triangulation: tri.clone(),
        particular: particular.clone(),
        basis,
    };
    let check = space.residual(&super::unflatten(&particular));
    if check > 1e-9 {
        return Err(Error::numeric(format!(
            "particular solution violates constraints by {check:e}"
        )));
    }
    Ok(space)
}
