//! Ideal triangulations of the weaving-knot-and-axis complements and their
//! angle structures.
//!
//! The complement of the one-pass weave `W(p,1)` together with its braid
//! axis decomposes into four ideal tetrahedra and `p−3` ideal octahedra;
//! stellating each octahedron into four tetrahedra around a new vertical
//! edge gives an ideal triangulation with `4(p−2)` tetrahedra. An angle
//! structure assigns each tetrahedron a positive triple `(x, y, z)` summing
//! to π, one angle per pair of opposite edges, such that the angles around
//! every edge class sum to 2π. The volume of an angle structure is the sum
//! of the ideal-tetrahedron volumes; it is strictly concave, and its
//! interior maximum is the quantity the solver reports.

mod build;
mod optimize;
mod space;

pub use build::{build_weaving_triangulation, octahedral_point};
pub use optimize::{axis_volume, maximize_volume, total_volume, MaximizeResult, TraceRow};
pub use space::{angle_space, AngleSpace};

use serde::Serialize;

/// Which polyhedron of the decomposition a tetrahedron came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum TetLabel {
    /// One of the four tetrahedra at the braid ends; `left` distinguishes
    /// the two ends, `above` the side of the projection plane.
    Outer { left: bool, above: bool },
    /// Quadrant `quadrant` (0..4) of stellated octahedron `octahedron`.
    Stellated { octahedron: usize, quadrant: usize },
}

/// Provenance of an edge class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum EdgeClassLabel {
    /// The crossing arc at crossing `i` (1-based) of the one-pass weave.
    Crossing(usize),
    /// The vertical stellation edge through octahedron `i`.
    Stellation(usize),
    /// A knot-to-axis edge group; the name records its position.
    Axis(String),
}

/// One tetrahedron: six edge slots, where slots `(2k, 2k+1)` are the
/// opposite pair carrying angle variable `k`.
#[derive(Debug, Clone, Serialize)]
pub struct Tet {
    pub label: TetLabel,
    pub slot_class: [usize; 6],
}

#[derive(Debug, Clone, Serialize)]
pub struct EdgeClass {
    pub label: EdgeClassLabel,
    /// Number of slots in the class.
    pub valence: usize,
}

/// Cusp cross-section bookkeeping for the braid axis: each outer
/// tetrahedron meets the axis in a triangle, each octahedron in two
/// quadrilaterals.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct AxisCusp {
    pub triangles: usize,
    pub quads: usize,
}

/// An ideal triangulation of `S³ − (W(p,1) ∪ axis)`.
#[derive(Debug, Clone, Serialize)]
pub struct Triangulation {
    pub p: usize,
    pub tets: Vec<Tet>,
    pub edge_classes: Vec<EdgeClass>,
    pub axis_cusp: AxisCusp,
}

impl Triangulation {
    pub fn tet_count(&self) -> usize {
        self.tets.len()
    }

    pub fn class_count(&self) -> usize {
        self.edge_classes.len()
    }
}

/// One `(x, y, z)` triple per tetrahedron, in the tetrahedron order of the
/// triangulation. Entry k of a triple is the angle on slot pair k.
pub type AngleAssignment = Vec<[f64; 3]>;

/// Flattens an assignment into the variable vector used by the solver.
pub(crate) fn flatten(a: &AngleAssignment) -> Vec<f64> {
    a.iter().flat_map(|t| t.iter().copied()).collect()
}

pub(crate) fn unflatten(x: &[f64]) -> AngleAssignment {
    x.chunks(3).map(|c| [c[0], c[1], c[2]]).collect()
}
