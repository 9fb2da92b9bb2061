//! Weaving-knot diagrams: the alternating link with the same projection as
//! the (p,q) torus braid closure, so `c(W(p,q)) = q(p−1)`.

use super::{braid_closure, BraidWord, LinkDiagram};
use crate::{Error, Result};

/// The weaving diagram `W(p,q)`: alternating closure of the p-strand braid
/// `(σ₁…σ_{p−1})^q`.
pub fn weaving_diagram(p: usize, q: usize) -> Result<LinkDiagram> {
    if p < 2 {
        return Err(Error::parameter("weaving diagram needs p >= 2"));
    }
    if q < 1 {
        return Err(Error::parameter("weaving diagram needs q >= 1"));
    }
    let word = BraidWord::torus_pass(p, q)?;
    let mut d = braid_closure(&word, true)?;
    d.set_name(format!("W({p},{q})"));
    debug_assert_eq!(d.crossing_count(), q * (p - 1));
    Ok(d)
}
