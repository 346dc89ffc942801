//! Independent ground-truth generators used by the verification suite.
//!
//! Three routes that share no code with the implementations they check:
//!
//! * contact values of the three reduced kernels from term-by-term integrated
//!   geometric series, brute-force summed;
//! * a two-sided exponential-fitting boundary-value solver for the screened
//!   slab response, with the point source entering as a derivative jump;
//! * the force integral in the original transverse-wavenumber variable
//!   (no hyperbolic substitution), evaluated through a rational map of
//!   `[0, inf)` onto the unit interval.

use crate::error::{Error, Result};
use crate::model::{PlasmaParameters, SlabGeometry};
use crate::quadrature::{integrate_finite, QuadratureSpec};
use crate::screened::transmitted_damped;
use std::f64::consts::PI;

/// Which contact kernel the series oracle reproduces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContactKernel {
    /// `I_f(0) = 1/12`
    Force,
    /// `I_U(0) = (2 ln 2 - 1)/8`
    Internal,
    /// `I_L(0) = (2 ln 2 - 1)/4`
    Free,
}

/// Number of series terms; leaves the tail below ~2e-13 relative.
const CONTACT_TERMS: u64 = 2_000_000;

/// Contact value of a reduced kernel by expanding `1/(1 - e^{-4t})` into a
/// geometric series and integrating each term exactly:
///
/// ```text
/// force     sum 8n / ((16n^2 - 9)(16n^2 - 1))
/// internal  sum (1/8) (1/(2n-1) - 1/n + 1/(2n+1))
/// free      sum (1/4) (1/(2n-1) - 1/n + 1/(2n+1))
/// ```
///
/// Summed smallest-term-first for accuracy.
pub fn contact_series(kind: ContactKernel) -> f64 {
    (1..=CONTACT_TERMS)
        .rev()
        .map(|n| {
            let nf = n as f64;
            match kind {
                ContactKernel::Force => {
                    let n2 = 16.0 * nf * nf;
                    8.0 * nf / ((n2 - 9.0) * (n2 - 1.0))
                }
                ContactKernel::Internal => {
                    0.125 * (1.0 / (2.0 * nf - 1.0) - 1.0 / nf + 1.0 / (2.0 * nf + 1.0))
                }
                ContactKernel::Free => {
                    0.25 * (1.0 / (2.0 * nf - 1.0) - 1.0 / nf + 1.0 / (2.0 * nf + 1.0))
                }
            }
        })
        .sum()
}

/// Grid request for the boundary-value solver.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    /// Minimum number of sample points across the whole domain.
    pub min_points: usize,
    /// E-folds of decay demanded between the source region and each
    /// truncated end. Must be at least 10.
    pub padding_efolds: f64,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self {
            min_points: 200,
            padding_efolds: 10.0,
        }
    }
}

/// Sampled solution of the screened slab equation with a unit point source.
#[derive(Debug, Clone, PartialEq)]
pub struct BvpSolution {
    pub z: Vec<f64>,
    pub phi: Vec<f64>,
    /// Carried derivative samples (left-sided limit at the source node).
    pub dphi: Vec<f64>,
    /// Index of the source node in `z`.
    pub source_index: usize,
    /// Derivative jump across the source, ideally `-4 pi`.
    pub derivative_jump: f64,
    /// Combined relative residual of the two matching conditions.
    pub matching_residual: f64,
    /// Truncation half-width of the solved domain.
    pub half_width: f64,
}

/// Exact transfer of `(phi, phi')` over a step `h` in a region with constant
/// evanescence rate `mu`.
fn propagate(phi: f64, dphi: f64, mu: f64, h: f64) -> (f64, f64) {
    let c = (mu * h).cosh();
    let s = (mu * h).sinh();
    (phi * c + dphi * s / mu, phi * mu * s + dphi * c)
}

/// Solves `(d^2/dz^2 - q^2 - kappa_z^2) phi = -4 pi delta(z - z0)` with
/// `kappa_z = kappa` in the media (`z < 0`, `z > a`) and `0` in the gap, by
/// integrating the decaying solution inward from each truncated end and
/// matching value and derivative jump at the source. The per-step transfer is
/// exact on each piecewise-constant region, so the sampled profile is limited
/// only by round-off, not by grid resolution.
pub fn bvp_phi_hat(
    q: f64,
    kappa: f64,
    a: f64,
    z0: f64,
    grid: &GridSpec,
) -> Result<BvpSolution> {
    if q <= 0.0 || !q.is_finite() {
        return Err(Error::InvalidParameter {
            field: "q",
            value: q,
            reason: "transverse wavenumber must be finite and > 0",
        });
    }
    if kappa <= 0.0 || !kappa.is_finite() {
        return Err(Error::InvalidParameter {
            field: "kappa",
            value: kappa,
            reason: "inverse screening length must be finite and > 0",
        });
    }
    if !a.is_finite() || a < 0.0 {
        return Err(Error::InvalidParameter {
            field: "a",
            value: a,
            reason: "the solver needs a finite gap >= 0",
        });
    }
    if !z0.is_finite() || z0 >= 0.0 {
        return Err(Error::InvalidParameter {
            field: "z0",
            value: z0,
            reason: "source must lie in the lower half-space (z0 < 0)",
        });
    }
    if grid.padding_efolds < 10.0 {
        return Err(Error::InsufficientTruncation {
            detail: format!(
                "padding of {} e-folds is below the required 10",
                grid.padding_efolds
            ),
        });
    }

    let qk = q.hypot(kappa);
    let half_width = grid.padding_efolds / q.min(qk) + z0.abs() + a;
    // The wanted solution grows toward the source; f64 runs out near e^709.
    if qk * half_width > 640.0 {
        return Err(Error::InsufficientTruncation {
            detail: format!(
                "growth exponent {:.1} across the domain exceeds f64 range",
                qk * half_width
            ),
        });
    }

    // Grid with the region edges (and the source) as exact nodes.
    let mut edges = vec![-half_width, z0, 0.0, half_width];
    if a > 0.0 {
        edges.push(a);
    }
    edges.sort_by(f64::total_cmp);
    edges.dedup();
    let lo = edges[0];
    let hi = *edges.last().unwrap();
    let span = hi - lo;
    let n_target = grid.min_points.max(edges.len() * 2);

    let mut z = Vec::with_capacity(n_target + edges.len());
    for pair in edges.windows(2) {
        let (e0, e1) = (pair[0], pair[1]);
        let steps = (((e1 - e0) / span * n_target as f64).ceil() as usize).max(2);
        for k in 0..steps {
            z.push(e0 + (e1 - e0) * k as f64 / steps as f64);
        }
    }
    z.push(hi);
    // Region rate at a midpoint: media screen with qk, the gap with q.
    let rate_at = |mid: f64| if mid < 0.0 || mid > a { qk } else { q };

    let source_index = z
        .iter()
        .position(|&v| v == z0)
        .expect("source is a grid node");

    // Left pass: decaying toward -inf means growing to the right.
    let mut left: Vec<(f64, f64)> = Vec::with_capacity(source_index + 1);
    left.push((1.0, qk));
    for i in 0..source_index {
        let (phi, dphi) = left[i];
        let h = z[i + 1] - z[i];
        let mu = rate_at(0.5 * (z[i] + z[i + 1]));
        left.push(propagate(phi, dphi, mu, h));
    }

    // Right pass: decaying toward +inf, integrated leftward to the source.
    let n = z.len();
    let mut right: Vec<(f64, f64)> = vec![(0.0, 0.0); n - source_index];
    right[n - source_index - 1] = (1.0, -qk);
    for i in (source_index..n - 1).rev() {
        let (phi, dphi) = right[i + 1 - source_index];
        let h = z[i] - z[i + 1];
        let mu = rate_at(0.5 * (z[i] + z[i + 1]));
        right[i - source_index] = propagate(phi, dphi, mu, h);
    }

    // Rescale each one-sided solution to unit value at the source so the
    // matching products stay inside f64 range even when both passes grew by
    // hundreds of e-folds.
    let left_scale = left[source_index].0;
    let right_scale = right[0].0;
    if left_scale == 0.0
        || right_scale == 0.0
        || !left_scale.is_finite()
        || !right_scale.is_finite()
    {
        return Err(Error::InsufficientTruncation {
            detail: "one-sided solution left the representable range".to_string(),
        });
    }
    for v in &mut left {
        v.0 /= left_scale;
        v.1 /= left_scale;
    }
    for v in &mut right {
        v.0 /= right_scale;
        v.1 /= right_scale;
    }

    // Match: continuity of phi, derivative jump of -4 pi.
    let (yl, dyl) = left[source_index];
    let (yr, dyr) = right[0];
    let wronskian = yl * dyr - dyl * yr;
    if wronskian == 0.0 || !wronskian.is_finite() {
        return Err(Error::InsufficientTruncation {
            detail: "matching system is degenerate".to_string(),
        });
    }
    let alpha = -4.0 * PI * yr / wronskian;
    let gamma = -4.0 * PI * yl / wronskian;

    let mut phi = Vec::with_capacity(n);
    let mut dphi = Vec::with_capacity(n);
    for (i, _) in z.iter().enumerate() {
        if i <= source_index {
            phi.push(alpha * left[i].0);
            dphi.push(alpha * left[i].1);
        } else {
            phi.push(gamma * right[i - source_index].0);
            dphi.push(gamma * right[i - source_index].1);
        }
    }

    let value_residual = (alpha * yl - gamma * yr).abs() / (alpha * yl).abs();
    let jump = gamma * dyr - alpha * dyl;
    let jump_residual = (jump + 4.0 * PI).abs() / (4.0 * PI);

    Ok(BvpSolution {
        z,
        phi,
        dphi,
        source_index,
        derivative_jump: jump,
        matching_residual: value_residual + jump_residual,
        half_width,
    })
}

/// Force per unit area integrated directly over the transverse wavenumber,
/// `f = -(kappa^4 / (8 pi beta)) int_0^inf D e^{-(q_k + q) a} / (q_k + q)^2 q dq`,
/// with the coefficients taken from the slab solution. No hyperbolic
/// substitution: the domain is folded onto `[0, 1]` by `q = kappa u/(1 - u)`.
pub fn direct_force_oracle(
    params: &PlasmaParameters,
    geom: &SlabGeometry,
    spec: &QuadratureSpec,
) -> Result<f64> {
    let a = geom.gap();
    if a.is_infinite() {
        return Ok(0.0);
    }
    let kappa = params.kappa();
    let integrand = move |u: f64| {
        if u <= 0.0 || u >= 1.0 {
            return 0.0;
        }
        let q = kappa * u / (1.0 - u);
        let qk = q.hypot(kappa);
        let sum = qk + q;
        let damped = transmitted_damped(q, kappa, a).expect("interior mode");
        let jacobian = kappa / ((1.0 - u) * (1.0 - u));
        damped / (sum * sum) * q * jacobian
    };
    let integral = integrate_finite(integrand, 0.0, 1.0, spec)?;
    Ok(-kappa.powi(4) / (8.0 * PI * params.beta()) * integral.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::screened::phi_hat;
    use crate::thermo::casimir_force;
    use approx::assert_relative_eq;

    const TWO_LN2_MINUS_1: f64 = 2.0 * std::f64::consts::LN_2 - 1.0;

    #[test]
    fn contact_series_values() {
        assert_relative_eq!(
            contact_series(ContactKernel::Force),
            1.0 / 12.0,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            contact_series(ContactKernel::Internal),
            TWO_LN2_MINUS_1 / 8.0,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            contact_series(ContactKernel::Free),
            TWO_LN2_MINUS_1 / 4.0,
            max_relative = 1e-12
        );
    }

    #[test]
    fn contact_series_truncation_is_converged() {
        // Doubling the term count moves nothing above round-off, so the
        // fixed truncation really does bound the tail.
        let doubled: f64 = (1..=(2 * CONTACT_TERMS))
            .rev()
            .map(|n| {
                let nf = n as f64;
                let n2 = 16.0 * nf * nf;
                8.0 * nf / ((n2 - 9.0) * (n2 - 1.0))
            })
            .sum();
        assert_relative_eq!(
            contact_series(ContactKernel::Force),
            doubled,
            max_relative = 1e-12
        );
    }

    #[test]
    fn free_series_is_twice_internal() {
        assert_relative_eq!(
            contact_series(ContactKernel::Free),
            2.0 * contact_series(ContactKernel::Internal),
            max_relative = 1e-14
        );
    }

    #[test]
    fn bvp_uniform_medium() {
        // At contact the two media touch and the geometry is uniform:
        // phi = (2 pi / q_k) e^{-q_k |z - z0|}.
        let (q, kappa, z0) = (0.75, 1.0, -0.5);
        let qk = 1.25;
        let sol = bvp_phi_hat(q, kappa, 0.0, z0, &GridSpec::default()).unwrap();
        for (&z, &phi) in sol.z.iter().zip(&sol.phi) {
            let exact = 2.0 * PI / qk * (-qk * (z - z0).abs()).exp();
            assert_relative_eq!(phi, exact, max_relative = 1e-8);
        }
        assert!(sol.matching_residual < 1e-8);
    }

    #[test]
    fn bvp_matches_analytic_slab_solution() {
        let (q, kappa, a, z0) = (0.75, 1.0, 1.0, -0.5);
        let sol = bvp_phi_hat(q, kappa, a, z0, &GridSpec::default()).unwrap();
        for (&z, &phi) in sol.z.iter().zip(&sol.phi) {
            let exact = phi_hat(z, z0, q, kappa, a).unwrap();
            assert_relative_eq!(phi, exact, max_relative = 1e-6);
        }
    }

    #[test]
    fn bvp_source_jump_normalization() {
        let sol = bvp_phi_hat(0.6, 1.0, 0.8, -0.4, &GridSpec::default()).unwrap();
        assert_relative_eq!(sol.derivative_jump, -4.0 * PI, max_relative = 1e-6);
    }

    #[test]
    fn bvp_decays_at_both_ends() {
        let sol = bvp_phi_hat(0.5, 1.0, 1.0, -0.7, &GridSpec::default()).unwrap();
        let peak = sol.phi.iter().cloned().fold(0.0_f64, f64::max);
        assert!(sol.phi[0] < 1e-4 * peak);
        assert!(*sol.phi.last().unwrap() < 1e-4 * peak);
        for &p in &sol.phi {
            assert!(p > 0.0);
        }
    }

    #[test]
    fn bvp_refinement_stays_at_the_floor() {
        // The transfer steps are exact per region, so refining the grid must
        // not degrade the profile.
        let (q, kappa, a, z0) = (1.5, 1.0, 0.5, -0.3);
        for points in [100, 200, 800] {
            let grid = GridSpec {
                min_points: points,
                padding_efolds: 10.0,
            };
            let sol = bvp_phi_hat(q, kappa, a, z0, &grid).unwrap();
            let mut worst = 0.0_f64;
            for (&z, &phi) in sol.z.iter().zip(&sol.phi) {
                let exact = phi_hat(z, z0, q, kappa, a).unwrap();
                worst = worst.max((phi - exact).abs() / exact);
            }
            assert!(worst < 1e-10, "worst deviation {worst} at {points} points");
        }
    }

    #[test]
    fn bvp_rejects_thin_padding_and_bad_modes() {
        let thin = GridSpec {
            min_points: 200,
            padding_efolds: 5.0,
        };
        assert!(matches!(
            bvp_phi_hat(0.5, 1.0, 1.0, -0.5, &thin),
            Err(Error::InsufficientTruncation { .. })
        ));
        assert!(bvp_phi_hat(0.5, 1.0, 1.0, 0.5, &GridSpec::default()).is_err());
        // Extremely evanescent mode exceeds the representable growth.
        assert!(matches!(
            bvp_phi_hat(1e-3, 1.0, 1.0, -0.5, &GridSpec::default()),
            Err(Error::InsufficientTruncation { .. })
        ));
    }

    #[test]
    fn direct_force_matches_substituted_route() {
        let spec = QuadratureSpec::default();
        let p = PlasmaParameters::reduced();
        for &x in &[0.5, 1.0, 2.0] {
            let g = SlabGeometry::new(&p, x, 1.0).unwrap();
            let direct = direct_force_oracle(&p, &g, &spec).unwrap();
            let substituted = casimir_force(&p, &g, &spec).unwrap();
            assert_relative_eq!(direct, substituted, max_relative = 1e-8);
        }
    }

    #[test]
    fn direct_force_contact_value() {
        let spec = QuadratureSpec::default();
        let p = PlasmaParameters::reduced();
        let g = SlabGeometry::new(&p, 0.0, 1.0).unwrap();
        let direct = direct_force_oracle(&p, &g, &spec).unwrap();
        assert_relative_eq!(direct, -1.0 / (24.0 * PI), max_relative = 1e-8);
        let g_inf = SlabGeometry::new(&p, f64::INFINITY, 1.0).unwrap();
        assert_eq!(direct_force_oracle(&p, &g_inf, &spec).unwrap(), 0.0);
    }
}
