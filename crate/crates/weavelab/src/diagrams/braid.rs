//! Braid words and their trace closures.

use super::{Crossing, Dart, LinkDiagram};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// A word in the braid group on `strands` strands. Letters are nonzero
/// signed generator indices: `k` means σ_k (strand at position k passes
/// over position k+1, 1-based), `-k` the inverse.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidWord {
    pub strands: usize,
    pub letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::parameter("braid needs at least 2 strands"));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(Error::parameter(format!(
                    "generator index {l} out of range for {strands} strands"
                )));
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Parses a whitespace-separated list of signed generator indices.
    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        let letters = text
            .split_whitespace()
            .map(|t| {
                t.parse::<i32>()
                    .map_err(|_| Error::parameter(format!("bad braid letter {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        BraidWord::new(strands, letters)
    }

    /// The full-twist pass σ₁σ₂…σ_{p−1} repeated q times.
    pub fn torus_pass(p: usize, q: usize) -> Result<Self> {
        let mut letters = Vec::with_capacity(q * (p - 1));
        for _ in 0..q {
            for g in 1..p {
                letters.push(g as i32);
            }
        }
        BraidWord::new(p, letters)
    }
}

/// Trace closure of a braid word: top endpoints are joined to the bottom
/// endpoints of the same strand position. With `force_alternating` the
/// over/under assignments are replaced by the alternating pattern of the
/// underlying projection.
///
/// Crossing slots: 0 = lower-left, 1 = lower-right, 2 = upper-right,
/// 3 = upper-left, counterclockwise with the braid read upward.
pub fn braid_closure(word: &BraidWord, force_alternating: bool) -> Result<LinkDiagram> {
    if word.letters.is_empty() {
        return Err(Error::parameter("braid word is empty"));
    }
    let mut crossings = Vec::with_capacity(word.letters.len());
    let mut edges: Vec<[Dart; 2]> = Vec::new();
    // per position: the dart waiting for its upward continuation, and the
    // dart that first consumed the position (for the closure arcs)
    let mut open: Vec<Option<Dart>> = vec![None; word.strands];
    let mut first: Vec<Option<Dart>> = vec![None; word.strands];

    for &letter in &word.letters {
        let g = letter.unsigned_abs() as usize; // positions g-1, g
        let k = crossings.len();
        crossings.push(Crossing { over02: letter > 0 });
        let in_left = Dart::new(k, 0);
        let in_right = Dart::new(k, 1);
        for (pos, dart) in [(g - 1, in_left), (g, in_right)] {
            match open[pos] {
                Some(prev) => edges.push([prev, dart]),
                None => first[pos] = Some(dart),
            }
        }
        open[g - 1] = Some(Dart::new(k, 3));
        open[g] = Some(Dart::new(k, 2));
    }
    for pos in 0..word.strands {
        match (open[pos], first[pos]) {
            (Some(top), Some(bottom)) => edges.push([top, bottom]),
            _ => {
                return Err(Error::parameter(format!(
                    "strand {} is never crossed; closure would be split",
                    pos + 1
                )))
            }
        }
    }
    let name = format!("closure(p={}, w={:?})", word.strands, word.letters);
    let d = LinkDiagram::from_parts(crossings, edges, name)?;
    if force_alternating {
        d.into_alternating()
    } else {
        Ok(d)
    }
}

impl LinkDiagram {
    /// Replaces the over/under data with the alternating assignment of the
    /// underlying projection: checkerboard color the faces, then make each
    /// crossing's over-strand the one whose counterclockwise rotation
    /// sweeps the shaded corners.
    pub fn into_alternating(mut self) -> Result<LinkDiagram> {
        let (corner_face, color) = self.checkerboard()?;
        for c in 0..self.crossings.len() {
            let corner0 = Dart::new(c, 0);
            self.crossings[c].over02 = color[corner_face[corner0.index()]];
        }
        self.alternating = self.compute_alternating();
        if !self.alternating {
            return Err(Error::numeric(
                "checkerboard assignment failed to alternate; rotation system bug",
            ));
        }
        Ok(self)
    }
}
