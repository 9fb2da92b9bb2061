//! Finite pieces of the infinite square-lattice weave, closed up along the
//! boundary in plaitwork style: every boundary half-edge is joined to its
//! neighbor around the block with no extra crossings, so the crossing count
//! is exactly m·n. Crossing (i,j) has id `i*cols + j`; its projection
//! vertex keeps the full 4-neighbor lattice adjacency on the interior.
//!
//! When a side length is odd, the pairing must straddle two corners and the
//! straddling arcs degenerate to one-crossing curls; the count is recorded
//! in the result. Even-by-even blocks close with no curls.

use super::{Crossing, Dart, LinkDiagram};
use crate::{Error, Result};

/// Which of the two adjacent-pair matchings of the boundary darts closes
/// the block. The boundary cycle has exactly two such matchings; both add
/// zero crossings, and on even-by-even blocks both are curl-free.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BoundaryMatching {
    /// Pair the boundary darts starting at the top-left corner.
    #[default]
    Standard,
    /// The matching shifted by one dart around the boundary.
    Shifted,
}

/// A grid-weave closure together with its block dimensions and the number
/// of corner curls the boundary closure produced.
#[derive(Debug, Clone)]
pub struct GridWeave {
    pub diagram: LinkDiagram,
    pub rows: usize,
    pub cols: usize,
    pub curls: usize,
}

impl GridWeave {
    /// Projection-vertex id of lattice point (i, j).
    pub fn vertex(&self, i: usize, j: usize) -> usize {
        i * self.cols + j
    }
}

// slots: 0 = E, 1 = N, 2 = W, 3 = S (counterclockwise); the strand passes
// are E–W (slots 0,2) and N–S (slots 1,3)
const E: u8 = 0;
const N: u8 = 1;
const W: u8 = 2;
const S: u8 = 3;

/// Alternating diagram whose projection graph contains the m×n square
/// lattice block as an induced subgraph, closed with the standard boundary
/// matching.
pub fn grid_weave_closure(m: usize, n: usize) -> Result<GridWeave> {
    grid_weave_closure_with(m, n, BoundaryMatching::Standard)
}

/// As [`grid_weave_closure`], with an explicit choice of the boundary
/// matching.
pub fn grid_weave_closure_with(
    m: usize,
    n: usize,
    matching: BoundaryMatching,
) -> Result<GridWeave> {
    if m < 2 || n < 2 {
        return Err(Error::parameter("grid weave needs m, n >= 2"));
    }
    let id = |i: usize, j: usize| i * n + j;
    let crossings = vec![Crossing { over02: true }; m * n];
    let mut edges: Vec<[Dart; 2]> = Vec::new();
    for i in 0..m {
        for j in 0..n {
            if j + 1 < n {
                edges.push([Dart::new(id(i, j), E), Dart::new(id(i, j + 1), W)]);
            }
            if i + 1 < m {
                edges.push([Dart::new(id(i, j), S), Dart::new(id(i + 1, j), N)]);
            }
        }
    }
    // boundary darts clockwise around the block: top row eastward, right
    // column southward, bottom row westward, left column northward
    let mut boundary: Vec<Dart> = Vec::with_capacity(2 * (m + n));
    for j in 0..n {
        boundary.push(Dart::new(id(0, j), N));
    }
    for i in 0..m {
        boundary.push(Dart::new(id(i, n - 1), E));
    }
    for j in (0..n).rev() {
        boundary.push(Dart::new(id(m - 1, j), S));
    }
    for i in (0..m).rev() {
        boundary.push(Dart::new(id(i, 0), W));
    }
    if matching == BoundaryMatching::Shifted {
        boundary.rotate_left(1);
    }
    let mut curls = 0;
    for pair in boundary.chunks(2) {
        if pair[0].crossing == pair[1].crossing {
            curls += 1;
        }
        edges.push([pair[0], pair[1]]);
    }
    let d = LinkDiagram::from_parts(crossings, edges, format!("grid({m},{n})"))?;
    let diagram = d.into_alternating()?;
    Ok(GridWeave {
        diagram,
        rows: m,
        cols: n,
        curls,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_block() {
        let g = grid_weave_closure(2, 2).unwrap();
        assert_eq!(g.diagram.crossing_count(), 4);
        assert_eq!(g.curls, 0);
        assert!(g.diagram.is_alternating());
        let proj = g.diagram.projection_graph();
        for (a, b) in [(0, 1), (0, 2), (1, 3), (2, 3)] {
            assert!(proj.has_edge(a, b));
        }
    }

    #[test]
    fn lattice_block_is_induced() {
        for (m, n) in [(2, 4), (4, 4), (8, 8)] {
            let g = grid_weave_closure(m, n).unwrap();
            assert_eq!(g.diagram.crossing_count(), m * n);
            assert_eq!(g.curls, 0, "even sides close without curls");
            let proj = g.diagram.projection_graph();
            for i in 0..m {
                for j in 0..n {
                    if j + 1 < n {
                        assert!(proj.has_edge(g.vertex(i, j), g.vertex(i, j + 1)));
                    }
                    if i + 1 < m {
                        assert!(proj.has_edge(g.vertex(i, j), g.vertex(i + 1, j)));
                    }
                }
            }
            // no adjacency between lattice points at distance > 1
            for a in 0..m * n {
                for b in a + 1..m * n {
                    let (ai, aj) = (a / n, a % n);
                    let (bi, bj) = (b / n, b % n);
                    let dist = ai.abs_diff(bi) + aj.abs_diff(bj);
                    if dist > 1 {
                        assert!(
                            !proj.has_edge(a, b),
                            "({m},{n}): unexpected adjacency {a}-{b}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn ratio_of_block_to_crossings_is_one() {
        // the plaitwork closure adds no crossings, so |G_n| = c(K_n)
        for n in [2, 4, 6] {
            let g = grid_weave_closure(n, n).unwrap();
            assert_eq!(g.diagram.crossing_count(), n * n);
        }
    }

    #[test]
    fn odd_sides_close_with_curls() {
        let g = grid_weave_closure(3, 3).unwrap();
        assert_eq!(g.diagram.crossing_count(), 9);
        assert_eq!(g.curls, 2);
        assert!(g.diagram.is_alternating());
    }

    #[test]
    fn rejects_degenerate_sizes() {
        assert!(grid_weave_closure(1, 4).is_err());
        assert!(grid_weave_closure(2, 1).is_err());
    }

    #[test]
    fn shifted_matching_also_closes() {
        // shifting the matching on an even block straddles all four
        // corners, so every corner closes with a curl
        let g = grid_weave_closure_with(4, 4, BoundaryMatching::Shifted).unwrap();
        assert_eq!(g.diagram.crossing_count(), 16);
        assert!(g.diagram.is_alternating());
        assert_eq!(g.curls, 4);
        let std = grid_weave_closure(4, 4).unwrap();
        assert_ne!(g.diagram.canonical_code(), std.diagram.canonical_code());
    }
}
