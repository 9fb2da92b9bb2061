//! Batch density experiments: the weaving grid scan with its verdicts,
//! grid entropy, grid-weave densities, crossing-change sweeps, and the
//! spectrum summary.
//!
//!     cargo run --example density_scan

use weavelab::cli::bundled_corpus;
use weavelab::density::{
    crossing_change_experiment, folner_density_experiment, grid_entropy_scan, mu_density_scan,
    spectrum_sample, weaving_scan, ScanConfig,
};
use weavelab::hypgeom::v8;

fn main() {
    let mut cfg = ScanConfig::new(3, 6, 7, 10).unwrap();
    cfg.exact = true;
    cfg.jobs = 2;
    let out = weaving_scan(&cfg).unwrap();
    println!("weaving scan {}x{} cells:", 4, 4);
    println!("  p  q    c   det density   lower     upper    ordering");
    for r in out.records.iter().step_by(3) {
        println!(
            "  {}  {}  {:3}   {:.6}   {:7.3}   {:7.3}   {}",
            r.p,
            r.q,
            r.c,
            r.det_density,
            r.vol_lower.unwrap_or(f64::NAN),
            r.vol_upper.unwrap_or(f64::NAN),
            r.verdicts.ordering_ok
        );
    }

    let summary = spectrum_sample(&out.records).unwrap();
    println!(
        "\nspectrum: {} samples in [{:.4}, {:.4}], all below v8 = {}: {}",
        summary.count,
        summary.min,
        summary.max,
        v8(),
        summary.all_below_v8
    );

    println!("\ngrid entropy toward 4C/pi:");
    for row in grid_entropy_scan(&[4, 8, 16], 14).unwrap() {
        println!(
            "  n = {:2}: entropy {:.6} ({}), gap {:.2}%",
            row.n,
            row.entropy,
            if row.exact { "exact" } else { "LU" },
            row.gap_to_limit * 100.0
        );
    }

    println!("\ngrid-weave determinant densities:");
    for row in folner_density_experiment(&[4, 8, 16]).unwrap() {
        println!(
            "  n = {:2}: c = {:3}, density {:.5}, block ratio {}",
            row.n, row.crossings, row.det_density, row.block_ratio
        );
    }

    let report = crossing_change_experiment(&bundled_corpus().unwrap(), 7).unwrap();
    println!(
        "\ncrossing changes: {} diagrams, {} subsets, {} violations",
        report.diagrams_checked,
        report.subsets_checked,
        report.violations.len()
    );

    let mu = mu_density_scan(&ScanConfig::new(3, 4, 2, 4).unwrap()).unwrap();
    let worst = mu
        .iter()
        .map(|r| r.identity_residual)
        .fold(0.0f64, f64::max);
    println!(
        "\nmu-density identity residual over {} cells: max {:.2e}",
        mu.len(),
        worst
    );
}
