//! The Lobachevsky function `Λ(θ) = −∫₀^θ log|2 sin t| dt` and the ideal
//! tetrahedron volume `Λ(x) + Λ(y) + Λ(z)`.

use crate::{Error, Result};
use std::f64::consts::PI;
use std::sync::OnceLock;

/// ζ(2k) for k = 1..=ZETA_TERMS, precomputed once. The first three come from
/// the classical closed forms; the rest converge in a handful of terms.
const ZETA_TERMS: usize = 60;

fn zeta_even() -> &'static [f64; ZETA_TERMS] {
    static TABLE: OnceLock<[f64; ZETA_TERMS]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = [0.0f64; ZETA_TERMS];
        t[0] = PI * PI / 6.0;
        t[1] = PI.powi(4) / 90.0;
        t[2] = PI.powi(6) / 945.0;
        for (k, slot) in t.iter_mut().enumerate().skip(3) {
            let s = 2.0 * (k + 1) as f64;
            let mut sum = 1.0f64;
            let mut n = 2.0f64;
            loop {
                let term = n.powf(-s);
                if term < 1e-20 {
                    break;
                }
                sum += term;
                n += 1.0;
            }
            *slot = sum;
        }
        t
    })
}

/// Λ on `[0, π/2]`, via the exact termwise integration of
/// `log(2 sin t) = log(2t) + Σ_n log(1 − t²/(n²π²))`:
///
/// `Λ(θ) = θ − θ·log(2θ) + Σ_{k≥1} ζ(2k)/(k(2k+1)) · θ^{2k+1}/π^{2k}`.
///
/// On this range the series ratio is at most 1/4 per term, so the truncation
/// after the table runs out is far below machine precision.
fn lambda_core(theta: f64) -> f64 {
    if theta == 0.0 {
        return 0.0;
    }
    let zeta = zeta_even();
    let r2 = (theta / PI) * (theta / PI);
    let mut sum = 0.0f64;
    let mut pow = r2;
    for (i, &z) in zeta.iter().enumerate() {
        let k = (i + 1) as f64;
        let term = z / (k * (2.0 * k + 1.0)) * pow;
        sum += term;
        if term < 1e-18 {
            break;
        }
        pow *= r2;
    }
    theta - theta * (2.0 * theta).ln() + theta * sum
}

/// The Lobachevsky function, `Λ(θ) = −∫₀^θ log|2 sin t| dt`, for any finite
/// angle. Odd and π-periodic; evaluated to well under 1e-12 absolute error
/// by reduction to `[0, π/2]`.
pub fn lobachevsky(theta: f64) -> f64 {
    // reduce by π-periodicity, then fold [π/2, π) by Λ(π−θ) = −Λ(θ)
    let mut r = theta.rem_euclid(PI);
    let mut sign = 1.0;
    if r > PI / 2.0 {
        r = PI - r;
        sign = -1.0;
    }
    sign * lambda_core(r)
}

/// Volume of the ideal hyperbolic tetrahedron with dihedral angles
/// `(x, y, z)`: `Λ(x) + Λ(y) + Λ(z)`. Angles must be nonnegative and sum to
/// π within 1e-9; the maximum v3 is attained at the regular point
/// `(π/3, π/3, π/3)`.
pub fn ideal_tet_volume(x: f64, y: f64, z: f64) -> Result<f64> {
    if x < 0.0 || y < 0.0 || z < 0.0 {
        return Err(Error::domain(format!(
            "tetrahedron angles must be nonnegative, got ({x}, {y}, {z})"
        )));
    }
    if (x + y + z - PI).abs() > 1e-9 {
        return Err(Error::domain(format!(
            "tetrahedron angles must sum to pi, got {}",
            x + y + z
        )));
    }
    Ok(lobachevsky(x) + lobachevsky(y) + lobachevsky(z))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypgeom::constants;

    /// Independent oracle: adaptive Simpson quadrature of −log|2 sin t| on
    /// [0, θ], with the log singularity at 0 split off in closed form:
    /// ∫₀^θ −log(2t) dt = θ(1 − log 2θ) and the remainder −log(sin t / t)
    /// is smooth.
    fn lambda_quadrature(theta: f64) -> f64 {
        assert!((0.0..=PI / 2.0).contains(&theta));
        if theta == 0.0 {
            return 0.0;
        }
        fn smooth(t: f64) -> f64 {
            if t.abs() < 1e-8 {
                // -log(sin t / t) = t^2/6 + t^4/180 + ...
                t * t / 6.0
            } else {
                -(t.sin() / t).ln()
            }
        }
        fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
            (b - a) / 6.0 * (fa + 4.0 * fm + fb)
        }
        fn adapt(a: f64, b: f64, fa: f64, fm: f64, fb: f64, whole: f64, eps: f64) -> f64 {
            let m = 0.5 * (a + b);
            let lm = 0.5 * (a + m);
            let rm = 0.5 * (m + b);
            let flm = smooth(lm);
            let frm = smooth(rm);
            let left = simpson(a, m, fa, flm, fm);
            let right = simpson(m, b, fm, frm, fb);
            if (left + right - whole).abs() < 15.0 * eps {
                left + right + (left + right - whole) / 15.0
            } else {
                adapt(a, m, fa, flm, fm, left, eps / 2.0)
                    + adapt(m, b, fm, frm, fb, right, eps / 2.0)
            }
        }
        let fa = smooth(0.0);
        let fb = smooth(theta);
        let fm = smooth(theta / 2.0);
        let whole = simpson(0.0, theta, fa, fm, fb);
        let tail = adapt(0.0, theta, fa, fm, fb, whole, 1e-14);
        theta * (1.0 - (2.0 * theta).ln()) + tail
    }

    /// Raw Fourier partial sum (1/2)Σ_{n≤N} sin(2nθ)/n², tail below 1/(2N).
    fn lambda_fourier(theta: f64, n_terms: usize) -> f64 {
        let mut s = 0.0;
        for n in (1..=n_terms).rev() {
            let nf = n as f64;
            s += (2.0 * nf * theta).sin() / (nf * nf);
        }
        0.5 * s
    }

    #[test]
    fn matches_quadrature_oracle() {
        for i in 0..=40 {
            let theta = PI / 2.0 * i as f64 / 40.0;
            let q = lambda_quadrature(theta);
            assert!(
                (lobachevsky(theta) - q).abs() < 1e-11,
                "theta={theta}: {} vs {}",
                lobachevsky(theta),
                q
            );
        }
    }

    #[test]
    fn matches_raw_fourier_sum() {
        // 10^6 terms leaves a tail below 5e-7
        for &theta in &[0.2, 0.5, PI / 6.0, 1.0, 1.4, 2.0, 3.0] {
            let f = lambda_fourier(theta, 1_000_000);
            assert!(
                (lobachevsky(theta) - f).abs() < 1e-6,
                "theta={theta}: {} vs {}",
                lobachevsky(theta),
                f
            );
        }
    }

    #[test]
    fn zero_and_symmetries() {
        assert_eq!(lobachevsky(0.0), 0.0);
        assert!((lobachevsky(1.0) + lobachevsky(-1.0)).abs() < 1e-15);
        assert!((lobachevsky(1.0 + PI) - lobachevsky(1.0)).abs() < 1e-13);
    }

    #[test]
    fn regular_tet_and_octahedron_values() {
        assert!((2.0 * lobachevsky(PI / 6.0) - 1.01494).abs() < 5e-6);
        assert!((8.0 * lobachevsky(PI / 4.0) - 3.66386).abs() < 5e-6);
    }

    #[test]
    fn tet_volume_examples() {
        let c = constants();
        let reg = ideal_tet_volume(PI / 3.0, PI / 3.0, PI / 3.0).unwrap();
        assert!((reg - c.v3).abs() < 1e-12);
        let oct_quarter = ideal_tet_volume(PI / 2.0, PI / 4.0, PI / 4.0).unwrap();
        assert!((oct_quarter - c.v8 / 4.0).abs() < 1e-12);
        assert!((oct_quarter - 0.915966).abs() < 5e-6);
        let flat = ideal_tet_volume(0.0, 0.0, PI).unwrap();
        assert!(flat.abs() < 1e-12);
    }

    #[test]
    fn tet_volume_rejects_bad_angles() {
        assert!(ideal_tet_volume(1.0, 1.0, 1.0).is_err());
        assert!(ideal_tet_volume(-0.1, PI / 2.0, PI / 2.0 + 0.1).is_err());
    }

    #[test]
    fn duplication_identity() {
        // Λ(2θ)/2 = Λ(θ) + Λ(θ + π/2)
        for i in 1..50 {
            let theta = PI * i as f64 / 50.0;
            let lhs = 0.5 * lobachevsky(2.0 * theta);
            let rhs = lobachevsky(theta) + lobachevsky(theta + PI / 2.0);
            assert!((lhs - rhs).abs() < 1e-11, "theta={theta}");
        }
    }

    #[test]
    fn regular_tet_maximizes_volume() {
        // 10^4 random valid angle triples never beat v3, and near-v3
        // volumes only occur near the regular point
        let v3 = constants().v3;
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut rand_unit = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..10_000 {
            let a = rand_unit();
            let b = rand_unit() * (1.0 - a);
            let (x, y, z) = (a * PI, b * PI, PI - a * PI - b * PI);
            let vol = ideal_tet_volume(x, y, z).unwrap();
            assert!(vol <= v3 + 1e-12, "({x},{y},{z}) -> {vol}");
            if vol > v3 - 1e-6 {
                let off = (x - PI / 3.0)
                    .abs()
                    .max((y - PI / 3.0).abs())
                    .max((z - PI / 3.0).abs());
                assert!(off < 2e-2, "near-maximal volume far from regular: {off}");
            }
        }
    }
}
