//! Combinatorial link diagrams as rotation systems.
//!
//! A diagram is a 4-valent plane multigraph with over/under data: each
//! crossing carries four half-edge slots in counterclockwise cyclic order,
//! and each edge joins two slots. One strand of a crossing passes through
//! slots 0 and 2, the other through 1 and 3; `over02` records which pass is
//! on top. Faces are derived from the rotation system, never stored as
//! geometry.

mod braid;
mod grid;
mod pd;
mod tait;
mod weave;

pub use braid::{braid_closure, BraidWord};
pub use grid::{grid_weave_closure, GridWeave};
pub use pd::DiagramJson;
pub use tait::{tait_graph, Shading, TaitGraph};
pub use weave::weaving_diagram;

use crate::spanning::Multigraph;
use crate::{Error, Result};
use std::collections::BTreeSet;

/// A half-edge position: crossing index plus slot 0..3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart {
    pub crossing: usize,
    pub slot: u8,
}

impl Dart {
    pub fn new(crossing: usize, slot: u8) -> Self {
        Dart { crossing, slot }
    }

    fn index(&self) -> usize {
        self.crossing * 4 + self.slot as usize
    }

    /// Next slot counterclockwise at the same crossing.
    fn rotated(&self, by: u8) -> Dart {
        Dart {
            crossing: self.crossing,
            slot: (self.slot + by) % 4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    /// True when the strand through slots 0 and 2 is the over-strand.
    pub over02: bool,
}

/// A connected link diagram. Construction validates the combinatorial-map
/// invariants: every crossing has exactly four incident half-edges, every
/// edge joins two slots, the diagram is connected, and the face count
/// satisfies Euler's formula for the sphere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    edges: Vec<[Dart; 2]>,
    /// dart index -> edge index
    dart_edge: Vec<usize>,
    alternating: bool,
    name: String,
}

impl LinkDiagram {
    pub fn from_parts(
        crossings: Vec<Crossing>,
        edges: Vec<[Dart; 2]>,
        name: impl Into<String>,
    ) -> Result<Self> {
        let nc = crossings.len();
        if nc == 0 {
            return Err(Error::parameter("diagram needs at least one crossing"));
        }
        if edges.len() != 2 * nc {
            return Err(Error::parameter(format!(
                "4-valent diagram with {nc} crossings needs {} edges, got {}",
                2 * nc,
                edges.len()
            )));
        }
        let mut dart_edge = vec![usize::MAX; 4 * nc];
        for (ei, e) in edges.iter().enumerate() {
            for d in e {
                if d.crossing >= nc || d.slot > 3 {
                    return Err(Error::parameter(format!(
                        "edge {ei} references invalid dart ({}, {})",
                        d.crossing, d.slot
                    )));
                }
                if dart_edge[d.index()] != usize::MAX {
                    return Err(Error::parameter(format!(
                        "dart ({}, {}) used by two edges",
                        d.crossing, d.slot
                    )));
                }
                dart_edge[d.index()] = ei;
            }
        }
        if dart_edge.contains(&usize::MAX) {
            return Err(Error::parameter("some half-edge slot is unused"));
        }
        let mut d = LinkDiagram {
            crossings,
            edges,
            dart_edge,
            alternating: false,
            name: name.into(),
        };
        if !d.projection_graph().is_connected() {
            return Err(Error::parameter("diagram is disconnected"));
        }
        let faces = d.faces();
        let v = nc as i64;
        let e = 2 * nc as i64;
        let f = faces.len() as i64;
        if v - e + f != 2 {
            return Err(Error::parameter(format!(
                "rotation system is not planar: V - E + F = {}",
                v - e + f
            )));
        }
        d.alternating = d.compute_alternating();
        Ok(d)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn edges(&self) -> &[[Dart; 2]] {
        &self.edges
    }

    pub fn is_alternating(&self) -> bool {
        self.alternating
    }

    /// The other end of the edge at `d`.
    pub fn across(&self, d: Dart) -> Dart {
        let e = &self.edges[self.dart_edge[d.index()]];
        if e[0] == d {
            e[1]
        } else {
            e[0]
        }
    }

    pub fn edge_at(&self, d: Dart) -> usize {
        self.dart_edge[d.index()]
    }

    /// Whether the pass entering at `d` goes over.
    pub fn is_over(&self, d: Dart) -> bool {
        let over02 = self.crossings[d.crossing].over02;
        if d.slot.is_multiple_of(2) {
            over02
        } else {
            !over02
        }
    }

    /// Faces of the rotation system, each as the cyclic dart sequence of the
    /// orbit `d -> rotate(across(d))`.
    pub fn faces(&self) -> Vec<Vec<Dart>> {
        let nd = 4 * self.crossing_count();
        let mut seen = vec![false; nd];
        let mut faces = Vec::new();
        for start_idx in 0..nd {
            if seen[start_idx] {
                continue;
            }
            let start = Dart::new(start_idx / 4, (start_idx % 4) as u8);
            let mut orbit = Vec::new();
            let mut d = start;
            loop {
                seen[d.index()] = true;
                orbit.push(d);
                d = self.across(d).rotated(1);
                if d == start {
                    break;
                }
            }
            faces.push(orbit);
        }
        faces
    }

    /// The face id containing each corner, where corner `(c, s)` sits
    /// between slots `s` and `s+1` at crossing `c`. Returned as a flat
    /// `4*crossings` vector indexed like darts.
    pub(crate) fn corner_faces(&self) -> (usize, Vec<usize>) {
        let faces = self.faces();
        let mut corner_face = vec![usize::MAX; 4 * self.crossing_count()];
        for (fi, orbit) in faces.iter().enumerate() {
            for d in orbit {
                // arriving at dart d means the face wraps the corner
                // between slots d.slot-1 and d.slot
                let corner = d.rotated(3);
                corner_face[corner.index()] = fi;
            }
        }
        (faces.len(), corner_face)
    }

    /// Checkerboard coloring of the faces: returns `(face_count,
    /// corner_face, face_color)` with two colors such that faces adjacent
    /// across an edge differ.
    pub(crate) fn checkerboard(&self) -> Result<(Vec<usize>, Vec<bool>)> {
        let (nf, corner_face) = self.corner_faces();
        let mut color: Vec<Option<bool>> = vec![None; nf];
        // adjacency: the two faces flanking an edge are the faces at the
        // corners on either side of either dart
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nf];
        for e in &self.edges {
            let d = e[0];
            let left = corner_face[d.index()];
            let right = corner_face[d.rotated(3).index()];
            adj[left].push(right);
            adj[right].push(left);
        }
        let mut stack = vec![0usize];
        color[0] = Some(false);
        while let Some(f) = stack.pop() {
            let c = color[f].unwrap();
            for &g in &adj[f] {
                match color[g] {
                    None => {
                        color[g] = Some(!c);
                        stack.push(g);
                    }
                    Some(existing) => {
                        if existing == c {
                            return Err(Error::domain(
                                "face structure is not checkerboard colorable",
                            ));
                        }
                    }
                }
            }
        }
        if color.iter().any(|c| c.is_none()) {
            return Err(Error::domain("face adjacency is disconnected"));
        }
        Ok((corner_face, color.into_iter().map(|c| c.unwrap()).collect()))
    }

    /// Walks every strand component. For each pass the callback receives
    /// `(component, arrival dart, is_over)`.
    fn walk_strands(&self, mut visit: impl FnMut(usize, Dart, bool)) -> usize {
        let nd = 4 * self.crossing_count();
        let mut seen = vec![false; nd];
        let mut comp = 0;
        for idx in 0..nd {
            if seen[idx] {
                continue;
            }
            let start = Dart::new(idx / 4, (idx % 4) as u8);
            let mut d = start;
            loop {
                seen[d.index()] = true;
                let exit = d.rotated(2);
                seen[exit.index()] = true;
                visit(comp, d, self.is_over(d));
                d = self.across(exit);
                if d == start {
                    break;
                }
            }
            comp += 1;
        }
        comp
    }

    /// Number of link components.
    pub fn component_count(&self) -> usize {
        self.walk_strands(|_, _, _| {})
    }

    fn compute_alternating(&self) -> bool {
        let mut runs: Vec<Vec<bool>> = Vec::new();
        self.walk_strands(|comp, _, over| {
            if runs.len() <= comp {
                runs.push(Vec::new());
            }
            runs[comp].push(over);
        });
        runs.iter()
            .all(|r| r.len() % 2 == 0 && r.windows(2).all(|w| w[0] != w[1]))
    }

    /// Flips the over/under flag on exactly the given crossings. The
    /// projection is unchanged; the alternating flag is recomputed.
    pub fn change_crossings(&self, subset: &BTreeSet<usize>) -> Result<LinkDiagram> {
        for &c in subset {
            if c >= self.crossing_count() {
                return Err(Error::parameter(format!("unknown crossing id {c}")));
            }
        }
        let mut out = self.clone();
        for &c in subset {
            out.crossings[c].over02 = !out.crossings[c].over02;
        }
        out.alternating = out.compute_alternating();
        Ok(out)
    }

    /// The mirror image: every crossing flipped.
    pub fn mirror(&self) -> LinkDiagram {
        let all: BTreeSet<usize> = (0..self.crossing_count()).collect();
        self.change_crossings(&all).unwrap()
    }

    /// Forgets over/under data: the 4-valent projection multigraph, one
    /// vertex per crossing.
    pub fn projection_graph(&self) -> Multigraph {
        let mut g = Multigraph::new(self.crossing_count());
        for e in &self.edges {
            g.add_edge(e[0].crossing, e[1].crossing);
        }
        g
    }

    fn has_nugatory_crossing(&self) -> bool {
        // self-loop in the projection, or an articulation crossing
        if self.edges.iter().any(|e| e[0].crossing == e[1].crossing) {
            return true;
        }
        articulation_exists(self.crossing_count(), &self.edges)
    }

    /// Twist number: maximal chains of bigon faces count as one twist
    /// region, isolated crossings one region each. The diagram must be
    /// reduced (no nugatory crossings).
    pub fn twist_number(&self) -> Result<u64> {
        if self.has_nugatory_crossing() {
            return Err(Error::parameter("diagram has a nugatory crossing"));
        }
        let mut uf = crate::spanning::UnionFind::new(self.crossing_count());
        for face in self.faces() {
            if face.len() == 2 {
                uf.union(face[0].crossing, face[1].crossing);
            }
        }
        let mut roots = BTreeSet::new();
        for c in 0..self.crossing_count() {
            roots.insert(uf.find(c));
        }
        Ok(roots.len() as u64)
    }

    /// Canonical encoding of the diagram as an oriented combinatorial map
    /// with over/under data. Two diagrams are isomorphic (by a relabeling
    /// preserving rotations) exactly when their codes agree.
    pub fn canonical_code(&self) -> Vec<u32> {
        let nc = self.crossing_count();
        let mut best: Option<Vec<u32>> = None;
        for start_c in 0..nc {
            for start_s in 0..4u8 {
                let code = self.code_from(Dart::new(start_c, start_s));
                if best.as_ref().is_none_or(|b| code < *b) {
                    best = Some(code);
                }
            }
        }
        best.unwrap()
    }

    fn code_from(&self, start: Dart) -> Vec<u32> {
        let nc = self.crossing_count();
        // BFS over crossings; each visited crossing gets a label and a slot
        // offset aligning its local rotation with the traversal.
        let mut label = vec![usize::MAX; nc];
        let mut offset = vec![0u8; nc];
        let mut order = Vec::with_capacity(nc);
        label[start.crossing] = 0;
        offset[start.crossing] = start.slot;
        order.push(start.crossing);
        let mut head = 0;
        while head < order.len() {
            let c = order[head];
            head += 1;
            for s in 0..4u8 {
                let d = Dart::new(c, (offset[c] + s) % 4);
                let t = self.across(d);
                if label[t.crossing] == usize::MAX {
                    label[t.crossing] = order.len();
                    offset[t.crossing] = t.slot;
                    order.push(t.crossing);
                }
            }
        }
        let mut code = Vec::with_capacity(nc * 9);
        for &c in &order {
            let over = self.crossings[c].over02 != (offset[c] % 2 == 1);
            code.push(over as u32);
            for s in 0..4u8 {
                let d = Dart::new(c, (offset[c] + s) % 4);
                let t = self.across(d);
                code.push(label[t.crossing] as u32);
                code.push(((t.slot + 4 - offset[t.crossing]) % 4) as u32);
            }
        }
        code
    }
}

/// Articulation-vertex test on the projection (multi-edges handled by
/// skipping only the tree edge itself, not every parallel copy).
fn articulation_exists(n: usize, edges: &[[Dart; 2]]) -> bool {
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (ei, e) in edges.iter().enumerate() {
        let (u, v) = (e[0].crossing, e[1].crossing);
        if u == v {
            continue;
        }
        adj[u].push((v, ei));
        adj[v].push((u, ei));
    }
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0usize;
    // iterative DFS from vertex 0 (diagram is connected)
    let mut stack: Vec<(usize, usize, usize)> = vec![(0, usize::MAX, 0)];
    let mut children_of_root = 0;
    let mut is_art = vec![false; n];
    while let Some(&mut (v, parent_edge, ref mut it)) = stack.last_mut() {
        if disc[v] == usize::MAX {
            disc[v] = timer;
            low[v] = timer;
            timer += 1;
        }
        if *it < adj[v].len() {
            let (to, ei) = adj[v][*it];
            *it += 1;
            if ei == parent_edge {
                continue;
            }
            if disc[to] == usize::MAX {
                if v == 0 {
                    children_of_root += 1;
                }
                stack.push((to, ei, 0));
            } else {
                low[v] = low[v].min(disc[to]);
            }
        } else {
            stack.pop();
            if let Some(&(p, _, _)) = stack.last() {
                low[p] = low[p].min(low[v]);
                if p != 0 && low[v] >= disc[p] {
                    is_art[p] = true;
                }
            }
        }
    }
    is_art.iter().any(|&a| a) || children_of_root > 1
}
