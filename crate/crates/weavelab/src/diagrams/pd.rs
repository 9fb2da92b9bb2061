//! Diagram interchange: JSON serialization and PD-code text lines.

use super::{Crossing, Dart, LinkDiagram};
use crate::Result;
use serde::{Deserialize, Serialize};

/// Serialized form of a diagram: crossing over-flags plus the edge list as
/// pairs of `[crossing, slot]` darts.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DiagramJson {
    pub name: String,
    pub crossings: Vec<CrossingJson>,
    pub edges: Vec<[[usize; 2]; 2]>,
    pub alternating: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CrossingJson {
    pub over02: bool,
}

impl LinkDiagram {
    pub fn to_json(&self) -> DiagramJson {
        DiagramJson {
            name: self.name().to_string(),
            crossings: self
                .crossings()
                .iter()
                .map(|c| CrossingJson { over02: c.over02 })
                .collect(),
            edges: self
                .edges()
                .iter()
                .map(|e| {
                    [
                        [e[0].crossing, e[0].slot as usize],
                        [e[1].crossing, e[1].slot as usize],
                    ]
                })
                .collect(),
            alternating: self.is_alternating(),
        }
    }

    pub fn from_json(j: &DiagramJson) -> Result<LinkDiagram> {
        let crossings = j
            .crossings
            .iter()
            .map(|c| Crossing { over02: c.over02 })
            .collect();
        let edges = j
            .edges
            .iter()
            .map(|e| {
                [
                    Dart::new(e[0][0], e[0][1] as u8),
                    Dart::new(e[1][0], e[1][1] as u8),
                ]
            })
            .collect();
        LinkDiagram::from_parts(crossings, edges, j.name.clone())
    }

    /// PD-code lines, one `X[a,b,c,d]` per crossing: edges numbered along
    /// an orientation of each component, listed counterclockwise from the
    /// incoming under-strand.
    pub fn pd_codes(&self) -> Vec<String> {
        let nd = 4 * self.crossing_count();
        let mut edge_label = vec![0usize; self.edge_count()];
        let mut arrival = vec![false; nd];
        let mut seen = vec![false; nd];
        let mut next_label = 0usize;
        for idx in 0..nd {
            if seen[idx] {
                continue;
            }
            let start = Dart::new(idx / 4, (idx % 4) as u8);
            let mut d = start;
            loop {
                seen[d.index()] = true;
                arrival[d.index()] = true;
                let exit = d.rotated(2);
                seen[exit.index()] = true;
                next_label += 1;
                edge_label[self.edge_at(exit)] = next_label;
                d = self.across(exit);
                if d == start {
                    break;
                }
            }
        }
        (0..self.crossing_count())
            .map(|c| {
                let under_base: u8 = if self.crossings()[c].over02 { 1 } else { 0 };
                let start = [under_base, under_base + 2]
                    .into_iter()
                    .map(|s| Dart::new(c, s))
                    .find(|d| arrival[d.index()])
                    .expect("one end of the under pass is an arrival");
                let labels: Vec<String> = (0..4)
                    .map(|k| edge_label[self.edge_at(start.rotated(k))].to_string())
                    .collect();
                format!("X[{}]", labels.join(","))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::{braid_closure, weaving_diagram, BraidWord};

    #[test]
    fn json_round_trip() {
        let d = weaving_diagram(3, 2).unwrap();
        let j = d.to_json();
        let text = serde_json::to_string(&j).unwrap();
        let parsed: DiagramJson = serde_json::from_str(&text).unwrap();
        let d2 = LinkDiagram::from_json(&parsed).unwrap();
        assert_eq!(d, d2);
        assert!(parsed.alternating);
    }

    #[test]
    fn pd_lines_use_each_edge_twice() {
        let d = braid_closure(&BraidWord::new(2, vec![1, 1, 1]).unwrap(), true).unwrap();
        let pd = d.pd_codes();
        assert_eq!(pd.len(), 3);
        let mut counts = std::collections::HashMap::new();
        for line in &pd {
            let inner = line.trim_start_matches("X[").trim_end_matches(']');
            for tok in inner.split(',') {
                *counts.entry(tok.parse::<usize>().unwrap()).or_insert(0) += 1;
            }
        }
        assert_eq!(counts.len(), 6, "six edges");
        assert!(counts.values().all(|&v| v == 2));
        assert!(counts.keys().all(|&k| (1..=6).contains(&k)));
    }
}
