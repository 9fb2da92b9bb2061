//! Batch experiments over the weaving family and grid weaves: determinant
//! density scans with inequality verdicts, spanning-tree entropy tables,
//! grid-weave density runs, crossing-change monotonicity sweeps, Jones
//! average densities, and density-spectrum summaries.

mod scan;
pub mod thresholds;

pub use scan::{
    crossing_change_experiment, folner_density_experiment, grid_entropy_scan, mu_density_scan,
    spectrum_sample, weaving_scan, CrossingChangeReport, FolnerRow, GridEntropyRow, MuRow,
    ScanOutcome, SpectrumSummary,
};

use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// One (p, q) cell of a weaving scan.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DensityRecord {
    pub p: u64,
    pub q: u64,
    /// Crossing number q(p−1).
    pub c: u64,
    /// Natural log of the determinant.
    pub log_det: f64,
    /// 2π·log_det / c.
    pub det_density: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vol_lower: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vol_upper: Option<f64>,
    /// Maximized axis volume `vol(W(p,q) ∪ B)`, when requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub axis_volume: Option<f64>,
    pub verdicts: Verdicts,
}

/// Named boolean checks attached to each record; reported, never assumed.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Verdicts {
    /// The expected chain of inequalities between the volume upper bound,
    /// 2π·log det, and v8·c holds for this cell (which chain is expected
    /// depends on the sign of q² + q + 4 − 2p).
    pub ordering_ok: bool,
    /// The volume upper bound is below 2π·log det, which certifies
    /// vol < 2π·log det for this knot.
    pub vol_below_det: bool,
    /// det_density < v8.
    pub density_below_v8: bool,
}

/// Configuration of a weaving scan over an inclusive (p, q) grid.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScanConfig {
    pub p_min: u64,
    pub p_max: u64,
    pub q_min: u64,
    pub q_max: u64,
    /// Exact big-integer determinants instead of the floating log path.
    pub exact: bool,
    /// Also maximize the axis-volume triangulation per cell.
    pub include_axis: bool,
    /// Worker threads; 0 means one.
    pub jobs: usize,
}

impl ScanConfig {
    pub fn new(p_min: u64, p_max: u64, q_min: u64, q_max: u64) -> Result<Self> {
        let cfg = ScanConfig {
            p_min,
            p_max,
            q_min,
            q_max,
            exact: false,
            include_axis: false,
            jobs: 1,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.p_min < 3 {
            return Err(Error::parameter("weaving scans need p >= 3"));
        }
        if self.p_max < self.p_min || self.q_max < self.q_min || self.q_min < 1 {
            return Err(Error::parameter("empty scan range"));
        }
        Ok(())
    }

    pub fn cells(&self) -> Vec<(u64, u64)> {
        let mut cells = Vec::new();
        for p in self.p_min..=self.p_max {
            for q in self.q_min..=self.q_max {
                cells.push((p, q));
            }
        }
        cells
    }
}
