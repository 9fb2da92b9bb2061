//! Construction of the weaving-family triangulation and its right-angled
//! reference angle structure.
//!
//! The edge classes follow the polyhedral decomposition of the one-pass
//! weave with its braid axis: one class per crossing arc, one vertical
//! stellation edge per octahedron, and knot-to-axis edge groups. The end
//! tetrahedra carry the local gluing of the decomposition (each end
//! tetrahedron has two slots on the nearest crossing arc, one on the next,
//! and its axis slots split between the shared near-strand group and its
//! own axis edge); octahedron equators meet crossing arcs in the pattern
//! `{c_i, c_{i+1}, c_{i+1}, c_{i+2}}` with the repeated arc on opposite
//! sides. The middle axis groups are taken symmetrically, eight quarter
//! angles each. The construction is pinned down by structural checks:
//! `4(p−2)` tetrahedra, equally many edge classes, the right-angled point
//! satisfies every class equation, and at p = 3 all four classes are
//! 6-valent so the regular point is feasible.

use super::{AngleAssignment, AxisCusp, EdgeClass, EdgeClassLabel, Tet, TetLabel, Triangulation};
use crate::{Error, Result};
use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4};

struct ClassTable {
    labels: Vec<EdgeClassLabel>,
}

impl ClassTable {
    fn new() -> Self {
        ClassTable { labels: Vec::new() }
    }

    fn add(&mut self, label: EdgeClassLabel) -> usize {
        self.labels.push(label);
        self.labels.len() - 1
    }
}

/// Builds the triangulation of `S³ − (W(p,1) ∪ axis)` for `p ≥ 3`.
pub fn build_weaving_triangulation(p: usize) -> Result<Triangulation> {
    if p < 3 {
        return Err(Error::domain("weaving triangulation needs p >= 3"));
    }
    let tri = if p == 3 { build_p3() } else { build_general(p) };
    validate(&tri)?;
    Ok(tri)
}

/// p = 3: four tetrahedra, four 6-valent edge classes (two crossing arcs,
/// two knot-to-axis groups), no octahedra.
fn build_p3() -> Triangulation {
    let mut classes = ClassTable::new();
    let c1 = classes.add(EdgeClassLabel::Crossing(1));
    let c2 = classes.add(EdgeClassLabel::Crossing(2));
    let a = classes.add(EdgeClassLabel::Axis("left".into()));
    let b = classes.add(EdgeClassLabel::Axis("right".into()));
    let outer = |left: bool, above: bool, slots: [usize; 6]| Tet {
        label: TetLabel::Outer { left, above },
        slot_class: slots,
    };
    let tets = vec![
        outer(true, true, [c1, b, c1, a, c2, a]),
        outer(true, false, [c1, b, c1, a, c2, a]),
        outer(false, true, [c2, a, c2, b, c1, b]),
        outer(false, false, [c2, a, c2, b, c1, b]),
    ];
    finish(3, tets, classes)
}

/// p ≥ 4: four end tetrahedra plus four stellated quadrants per
/// octahedron.
fn build_general(p: usize) -> Triangulation {
    let m = p - 3; // octahedra
    let mut classes = ClassTable::new();
    // crossing arcs c_1..c_{p-1}; id of c_j is crossing[j-1]
    let crossing: Vec<usize> = (1..p)
        .map(|j| classes.add(EdgeClassLabel::Crossing(j)))
        .collect();
    let stellation: Vec<usize> = (0..m)
        .map(|i| classes.add(EdgeClassLabel::Stellation(i)))
        .collect();
    let a_left = classes.add(EdgeClassLabel::Axis("near-strand-left".into()));
    let a_right = classes.add(EdgeClassLabel::Axis("near-strand-right".into()));
    let b_top = classes.add(EdgeClassLabel::Axis("end-top".into()));
    let b_bottom = classes.add(EdgeClassLabel::Axis("end-bottom".into()));

    let mut tets = Vec::with_capacity(4 * (p - 2));
    let outer = |left: bool, above: bool, slots: [usize; 6]| Tet {
        label: TetLabel::Outer { left, above },
        slot_class: slots,
    };
    // end tetrahedra: pair 0 = (near crossing arc, own axis edge), pair 1 =
    // (near crossing arc, shared near-strand group), pair 2 = (next
    // crossing arc, shared near-strand group)
    tets.push(outer(
        true,
        true,
        [crossing[0], b_top, crossing[0], a_left, crossing[1], a_left],
    ));
    tets.push(outer(
        true,
        false,
        [
            crossing[0],
            b_bottom,
            crossing[0],
            a_left,
            crossing[1],
            a_left,
        ],
    ));
    tets.push(outer(
        false,
        true,
        [
            crossing[p - 2],
            b_top,
            crossing[p - 2],
            a_right,
            crossing[p - 3],
            a_right,
        ],
    ));
    tets.push(outer(
        false,
        false,
        [
            crossing[p - 2],
            b_bottom,
            crossing[p - 2],
            a_right,
            crossing[p - 3],
            a_right,
        ],
    ));

    // vertical-slot classes for octahedron i, quadrant k: each stellated
    // tetrahedron has pair 1 = slots (2,3) and pair 2 = slots (4,5) on
    // knot-to-axis edges. The end groups absorb the quadrants facing the
    // end tetrahedra; the rest pair up symmetrically within and between
    // octahedra.
    let mut vert = vec![[[usize::MAX; 2]; 4]; m]; // [oct][quadrant][pair-1]
                                                  // quadrant 0 of the first octahedron joins the left near-strand group,
                                                  // quadrant 2 of the last joins the right
    vert[0][0] = [a_left, a_left];
    vert[m - 1][2] = [a_right, a_right];
    if m == 1 {
        vert[0][1] = [b_top, b_top];
        vert[0][3] = [b_bottom, b_bottom];
    } else {
        // the end axis edges collect the top/bottom quadrants facing the
        // two ends
        vert[0][1] = [b_top, usize::MAX];
        vert[m - 1][1] = [usize::MAX, b_top];
        vert[0][3] = [b_bottom, usize::MAX];
        vert[m - 1][3] = [usize::MAX, b_bottom];
    }
    // middle groups: one per leftover half-octahedron, eight slots each
    let mid = |classes: &mut ClassTable, name: String| classes.add(EdgeClassLabel::Axis(name));
    if m >= 2 {
        let g = mid(&mut classes, "mid-0".into());
        vert[0][1][1] = g;
        vert[0][2] = [g, g];
        vert[0][3][1] = g;
        let g = mid(&mut classes, format!("mid-{}", 2 * m - 3));
        vert[m - 1][1][0] = g;
        vert[m - 1][0] = [g, g];
        vert[m - 1][3][0] = g;
        for i in 1..m - 1 {
            let g1 = mid(&mut classes, format!("mid-{}", 2 * i - 1));
            vert[i][0] = [g1, g1];
            vert[i][2] = [g1, g1];
            let g2 = mid(&mut classes, format!("mid-{}", 2 * i));
            vert[i][1] = [g2, g2];
            vert[i][3] = [g2, g2];
        }
    }

    for i in 0..m {
        // equator arcs around octahedron i, repeated one on opposite sides
        let equator = [
            crossing[i],
            crossing[i + 1],
            crossing[i + 2],
            crossing[i + 1],
        ];
        for (k, &eq) in equator.iter().enumerate() {
            let [u, v] = vert[i][k];
            debug_assert!(u != usize::MAX && v != usize::MAX);
            tets.push(Tet {
                label: TetLabel::Stellated {
                    octahedron: i,
                    quadrant: k,
                },
                slot_class: [eq, stellation[i], u, u, v, v],
            });
        }
    }
    finish(p, tets, classes)
}

fn finish(p: usize, tets: Vec<Tet>, classes: ClassTable) -> Triangulation {
    let mut valence = vec![0usize; classes.labels.len()];
    for t in &tets {
        for &c in &t.slot_class {
            valence[c] += 1;
        }
    }
    let edge_classes = classes
        .labels
        .into_iter()
        .zip(valence)
        .map(|(label, valence)| EdgeClass { label, valence })
        .collect();
    Triangulation {
        p,
        tets,
        edge_classes,
        axis_cusp: AxisCusp {
            triangles: 4,
            quads: 2 * (p - 3),
        },
    }
}

fn validate(tri: &Triangulation) -> Result<()> {
    let p = tri.p;
    let expect_tets = 4 * (p - 2);
    if tri.tet_count() != expect_tets {
        return Err(Error::numeric(format!(
            "builder produced {} tetrahedra, expected {expect_tets}",
            tri.tet_count()
        )));
    }
    if tri.class_count() != expect_tets {
        return Err(Error::numeric(format!(
            "builder produced {} edge classes, expected {expect_tets}",
            tri.class_count()
        )));
    }
    let total: usize = tri.edge_classes.iter().map(|c| c.valence).sum();
    if total != 6 * expect_tets {
        return Err(Error::numeric("edge slots not partitioned"));
    }
    if p == 3 && tri.edge_classes.iter().any(|c| c.valence != 6) {
        return Err(Error::numeric("p = 3 classes must all be 6-valent"));
    }
    // the right-angled point must satisfy every class equation
    let point = octahedral_point_unchecked(tri);
    let residual = class_residual(tri, &point);
    if residual > 1e-12 {
        return Err(Error::numeric(format!(
            "reference angle structure violates class equations by {residual:e}"
        )));
    }
    Ok(())
}

/// Largest violation of the per-class 2π equations at an assignment.
pub(crate) fn class_residual(tri: &Triangulation, a: &AngleAssignment) -> f64 {
    let mut sums = vec![0.0f64; tri.class_count()];
    for (t, tet) in tri.tets.iter().enumerate() {
        for (slot, &class) in tet.slot_class.iter().enumerate() {
            sums[class] += a[t][slot / 2];
        }
    }
    sums.iter()
        .map(|s| (s - 2.0 * std::f64::consts::PI).abs())
        .fold(0.0, f64::max)
}

fn octahedral_point_unchecked(tri: &Triangulation) -> AngleAssignment {
    if tri.p == 3 {
        vec![[FRAC_PI_3; 3]; tri.tet_count()]
    } else {
        vec![[FRAC_PI_2, FRAC_PI_4, FRAC_PI_4]; tri.tet_count()]
    }
}

/// The reference angle structure of the weaving triangulation. For `p > 3`
/// every tetrahedron gets `(π/2, π/4, π/4)` with the right angle on the
/// crossing-arc/stellation pair, so each stellated octahedron is regular
/// and the total volume is `v8 (p−2)`. For p = 3 the feasible reference is
/// the regular point `(π/3, π/3, π/3)` with volume `4 v3`.
pub fn octahedral_point(tri: &Triangulation) -> Result<AngleAssignment> {
    let a = octahedral_point_unchecked(tri);
    let residual = class_residual(tri, &a);
    if residual > 1e-12 {
        return Err(Error::domain(format!(
            "triangulation is not from the weaving family (residual {residual:e})"
        )));
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::anglestruct::total_volume;
    use crate::hypgeom::{v3, v8};

    #[test]
    fn p3_counts_and_valences() {
        let tri = build_weaving_triangulation(3).unwrap();
        assert_eq!(tri.tet_count(), 4);
        assert_eq!(tri.class_count(), 4);
        assert!(tri.edge_classes.iter().all(|c| c.valence == 6));
        assert_eq!(tri.axis_cusp.triangles, 4);
        assert_eq!(tri.axis_cusp.quads, 0);
    }

    #[test]
    fn tet_and_class_counts() {
        for p in 3..=14 {
            let tri = build_weaving_triangulation(p).unwrap();
            assert_eq!(tri.tet_count(), 4 * (p - 2), "p={p}");
            assert_eq!(tri.class_count(), 4 * (p - 2), "p={p}");
            let crossings = tri
                .edge_classes
                .iter()
                .filter(|c| matches!(c.label, EdgeClassLabel::Crossing(_)))
                .count();
            let stellations = tri
                .edge_classes
                .iter()
                .filter(|c| matches!(c.label, EdgeClassLabel::Stellation(_)))
                .count();
            assert_eq!(crossings, p - 1);
            assert_eq!(stellations, p.saturating_sub(3));
            assert_eq!(tri.axis_cusp.quads, 2 * (p - 3));
        }
        assert!(build_weaving_triangulation(2).is_err());
    }

    #[test]
    fn stellation_classes_are_pure_quadruples() {
        let tri = build_weaving_triangulation(7).unwrap();
        for (id, class) in tri.edge_classes.iter().enumerate() {
            if let EdgeClassLabel::Stellation(oct) = class.label {
                assert_eq!(class.valence, 4);
                for tet in &tri.tets {
                    let uses = tet.slot_class.iter().filter(|&&c| c == id).count();
                    if uses > 0 {
                        assert_eq!(uses, 1);
                        assert!(
                            matches!(tet.label, TetLabel::Stellated { octahedron, .. }
                                if octahedron == oct),
                            "stellation edge {oct} used outside its octahedron"
                        );
                        // the stellation slot pairs with the equator slot
                        assert_eq!(tet.slot_class[1], id);
                    }
                }
            }
        }
    }

    #[test]
    fn reference_point_volumes() {
        for p in 4..=12 {
            let tri = build_weaving_triangulation(p).unwrap();
            let a = octahedral_point(&tri).unwrap();
            assert!(class_residual(&tri, &a) < 1e-12, "p={p}");
            let vol = total_volume(&tri, &a).unwrap();
            assert!(
                (vol - v8() * (p as f64 - 2.0)).abs() < 1e-9,
                "p={p}: vol {vol}"
            );
        }
        let tri3 = build_weaving_triangulation(3).unwrap();
        let a3 = octahedral_point(&tri3).unwrap();
        let vol3 = total_volume(&tri3, &a3).unwrap();
        assert!((vol3 - 4.0 * v3()).abs() < 1e-12);
    }

    #[test]
    fn p10_reference_volume_is_eight_octahedra() {
        let tri = build_weaving_triangulation(10).unwrap();
        let a = octahedral_point(&tri).unwrap();
        let vol = total_volume(&tri, &a).unwrap();
        assert!((vol - 8.0 * v8()).abs() < 1e-9);
    }
}
