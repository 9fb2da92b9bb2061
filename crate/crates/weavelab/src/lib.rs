//! Weaving-knot laboratory: combinatorial link diagrams, Tait graphs and
//! spanning-tree determinants, hyperbolic volume primitives and closed-form
//! volume bounds, angle structures on the braid-axis triangulations of
//! weaving knots, and batch density experiments.
//!
//! The library is organized around five subsystems plus a thin CLI:
//!
//! * [`diagrams`] — rotation-system link diagrams: weaving knots `W(p,q)`,
//!   braid closures, grid-weave closures, Tait and projection graphs.
//! * [`spanning`] — exact and log-scale spanning-tree counting (matrix-tree
//!   via fraction-free elimination, floating LU), knot determinants and
//!   densities, spanning-tree entropy.
//! * [`hypgeom`] — the Lobachevsky function, ideal tetrahedron volumes, the
//!   constants v3/v8/Catalan, and every closed-form volume bound used here.
//! * [`anglestruct`] — ideal triangulations of the weaving-knot-plus-axis
//!   complements, their angle-structure spaces, and concave volume
//!   maximization.
//! * [`density`] — batch experiments: weaving scans with ordering verdicts,
//!   grid entropy tables, grid-weave density runs, crossing-change
//!   monotonicity, density spectrum summaries.
//!
//! Every operation is deterministic and reentrant; nothing here holds global
//! mutable state beyond lazily initialized mathematical constants.

pub mod anglestruct;
pub mod cli;
pub mod density;
pub mod diagrams;
mod error;
pub mod hypgeom;
pub(crate) mod numeric;
pub mod spanning;

pub use error::{Error, Result};
