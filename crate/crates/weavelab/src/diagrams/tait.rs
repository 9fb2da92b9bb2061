//! Tait (checkerboard) graphs of link diagrams: one vertex per shaded
//! region, one signed edge per crossing.

use super::{Dart, LinkDiagram};
use crate::spanning::Multigraph;
use crate::Result;
use serde::{Deserialize, Serialize};

/// Which checkerboard color class becomes the shaded regions. The two
/// choices produce planar-dual Tait graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Shading {
    Even,
    Odd,
}

/// The signed checkerboard graph of a diagram. Edge k comes from crossing
/// `crossing_of[k]`; `rotations` lists each vertex's incident edges in the
/// cyclic order they appear around the shaded region.
#[derive(Debug, Clone)]
pub struct TaitGraph {
    pub graph: Multigraph,
    pub crossing_of: Vec<usize>,
    pub rotations: Vec<Vec<usize>>,
}

impl TaitGraph {
    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// True when every edge carries the same sign.
    pub fn uniform_sign(&self) -> bool {
        let signs: Vec<i8> = self.graph.edges().iter().map(|e| e.sign).collect();
        signs.windows(2).all(|w| w[0] == w[1])
    }
}

/// Builds the Tait graph for the chosen shading. The diagram must be
/// connected (enforced at construction). The edge sign is positive exactly
/// when the over-strand's counterclockwise rotation sweeps the shaded
/// corners, so an alternating diagram gets all-equal signs.
pub fn tait_graph(d: &LinkDiagram, shading: Shading) -> Result<TaitGraph> {
    let (corner_face, color) = d.checkerboard()?;
    let shade = match shading {
        Shading::Even => false,
        Shading::Odd => true,
    };
    // relabel shaded faces 0..k
    let mut face_vertex = vec![usize::MAX; color.len()];
    let mut n_shaded = 0;
    for (f, &c) in color.iter().enumerate() {
        if c == shade {
            face_vertex[f] = n_shaded;
            n_shaded += 1;
        }
    }
    let mut graph = Multigraph::new(n_shaded);
    let mut crossing_of = Vec::with_capacity(d.crossing_count());
    for c in 0..d.crossing_count() {
        // the shaded corner pair is (0,2) or (1,3)
        let corner0 = corner_face[Dart::new(c, 0).index()];
        let base: u8 = if color[corner0] == shade { 0 } else { 1 };
        let fa = corner_face[Dart::new(c, base).index()];
        let fb = corner_face[Dart::new(c, base + 2).index()];
        // positive when the over pass sweeps shaded corners under ccw
        // rotation: pass (0,2) sweeps corners (0,2), pass (1,3) sweeps (1,3)
        let over_sweeps_shaded = (base == 0) == d.crossings()[c].over02;
        let sign = if over_sweeps_shaded { 1 } else { -1 };
        graph.add_signed_edge(face_vertex[fa], face_vertex[fb], sign);
        crossing_of.push(c);
    }
    // rotation: walk each shaded face and record its crossings in order
    let faces = d.faces();
    let mut rotations = vec![Vec::new(); n_shaded];
    for (f, orbit) in faces.iter().enumerate() {
        if color[f] != shade {
            continue;
        }
        let v = face_vertex[f];
        for dart in orbit {
            let corner = dart.rotated(3);
            debug_assert_eq!(corner_face[corner.index()], f);
            // corner (c, s) is a shaded corner of c exactly when the Tait
            // edge of c is incident here
            rotations[v].push(corner.crossing);
        }
    }
    Ok(TaitGraph {
        graph,
        crossing_of,
        rotations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::{braid_closure, weaving_diagram, BraidWord};
    use crate::spanning::spanning_tree_count;
    use num_bigint::BigInt;

    #[test]
    fn trefoil_shadings_are_dual() {
        let d = braid_closure(&BraidWord::new(2, vec![1, 1, 1]).unwrap(), true).unwrap();
        let a = tait_graph(&d, Shading::Even).unwrap();
        let b = tait_graph(&d, Shading::Odd).unwrap();
        assert_eq!(a.edge_count(), 3);
        assert_eq!(b.edge_count(), 3);
        let sizes = [a.vertex_count(), b.vertex_count()];
        assert!(sizes.contains(&2) && sizes.contains(&3), "sizes {sizes:?}");
        // dual graphs share the spanning-tree count
        let ta = spanning_tree_count(&a.graph).unwrap().exact.unwrap();
        let tb = spanning_tree_count(&b.graph).unwrap().exact.unwrap();
        assert_eq!(ta, tb);
        assert_eq!(ta, BigInt::from(3));
    }

    #[test]
    fn edge_count_equals_crossing_count() {
        for (p, q) in [(2, 3), (3, 2), (4, 3), (5, 4)] {
            let d = weaving_diagram(p, q).unwrap();
            let t = tait_graph(&d, Shading::Even).unwrap();
            assert_eq!(t.edge_count(), d.crossing_count());
        }
    }

    #[test]
    fn alternating_iff_uniform_signs() {
        let d = weaving_diagram(3, 2).unwrap();
        assert!(tait_graph(&d, Shading::Even).unwrap().uniform_sign());
        assert!(tait_graph(&d, Shading::Odd).unwrap().uniform_sign());
        let changed = d.change_crossings(&[0].into_iter().collect()).unwrap();
        assert!(!tait_graph(&changed, Shading::Even).unwrap().uniform_sign());
    }

    #[test]
    fn four_crossing_weave_has_four_tait_edges() {
        let d = weaving_diagram(3, 2).unwrap();
        let t = tait_graph(&d, Shading::Even).unwrap();
        assert_eq!(t.edge_count(), 4);
        assert!(t.graph.is_connected());
    }

    #[test]
    fn rotations_cover_every_crossing_twice_per_shading() {
        let d = weaving_diagram(4, 2).unwrap();
        let t = tait_graph(&d, Shading::Even).unwrap();
        let mut count = vec![0usize; d.crossing_count()];
        for rot in &t.rotations {
            for &c in rot {
                count[c] += 1;
            }
        }
        // each crossing has two shaded corners
        assert!(count.iter().all(|&k| k == 2));
    }
}
