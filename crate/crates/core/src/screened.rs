//! Closed-form coefficients and piecewise transverse-Fourier potential of the
//! screened slab problem.
//!
//! A point source sits at `z0 < 0` inside the lower half-space. The media
//! (`z < 0` and `z > a`) screen with rate `q_kappa = sqrt(q^2 + kappa^2)`,
//! the vacuum gap (`0 < z < a`) with rate `q`. The response is, with overall
//! prefactor `2 pi exp(q_kappa z0)`,
//!
//! ```text
//! z <  z0      exp(-2 q_k z0) exp(q_k z)/q_k + B exp(q_k z)
//! z0 < z < 0   exp(-q_k z)/q_k              + B exp(q_k z)
//! 0  < z < a   C exp(-q z) + C1 exp(q z)
//! a  < z       D exp(-q_k z)
//! ```
//!
//! Matching value and slope at both interfaces fixes the four coefficients:
//!
//! ```text
//! A = ((q_k - q)/(q_k + q))^2 = kappa^4/(q_k + q)^4
//! D = 4 q exp((q_k - q) a) / [(q_k + q)^2 (1 - A exp(-2 q a))]
//! B = (q_k - q)(1 - exp(-2 q a)) / [q_k (q_k + q)(1 - A exp(-2 q a))]
//! C  =  D (q_k + q) exp(-(q_k - q) a) / (2 q)  =  2 / [(q_k + q)(1 - A exp(-2 q a))]
//! C1 = -D (q_k - q) exp(-(q_k + q) a) / (2 q)  = -2 (q_k - q) exp(-2 q a) / [(q_k + q)^2 (1 - A exp(-2 q a))]
//! ```
//!
//! The interior pair is solved from continuity at `z = a` given `D`; the
//! boundary-residual operation is the ground truth for the whole set.
//!
//! `a = f64::INFINITY` is a distinguished input: every `exp(-2 q a)` and
//! `exp(-(q_k + q) a)` factor is taken identically zero, which keeps the
//! otherwise-overflowing `exp((q_k - q) a)` out of `D` (the isolated-surface
//! convention is `D = 0`).

use crate::error::{Error, Result};
use std::f64::consts::PI;

/// Coefficients of the four-branch transformed potential at one mode
/// `(q, kappa, a)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlabCoefficients {
    /// Interface reflection factor `A`, dimensionless, in `[0, 1)`.
    pub reflection: f64,
    /// Source-side homogeneous amplitude `B` (cm).
    pub source_side: f64,
    /// Gap amplitude `C` on the decaying exponential (cm).
    pub gap_decaying: f64,
    /// Gap amplitude `C1` on the growing exponential (cm).
    pub gap_growing: f64,
    /// Transmitted amplitude `D` (cm). Raw value; grows like
    /// `exp((q_k - q) a)` and overflows f64 for reduced gaps beyond ~700.
    pub transmitted: f64,
}

fn validate_mode(q: f64, kappa: f64, a: f64) -> Result<f64> {
    if q == 0.0 {
        return Err(Error::SingularMode);
    }
    if !q.is_finite() || q < 0.0 {
        return Err(Error::InvalidParameter {
            field: "q",
            value: q,
            reason: "transverse wavenumber must be finite and > 0",
        });
    }
    if !kappa.is_finite() || kappa <= 0.0 {
        return Err(Error::InvalidParameter {
            field: "kappa",
            value: kappa,
            reason: "inverse screening length must be finite and > 0",
        });
    }
    if a.is_nan() || a < 0.0 {
        return Err(Error::InvalidParameter {
            field: "a",
            value: a,
            reason: "gap must be >= 0 (f64::INFINITY allowed)",
        });
    }
    Ok(q.hypot(kappa))
}

/// Solves the interface conditions for the potential coefficients.
pub fn coefficients(q: f64, kappa: f64, a: f64) -> Result<SlabCoefficients> {
    let qk = validate_mode(q, kappa, a)?;
    let sum = qk + q;
    let diff = qk - q;
    let reflection = (diff / sum) * (diff / sum);

    if a.is_infinite() {
        return Ok(SlabCoefficients {
            reflection,
            source_side: diff / (qk * sum),
            gap_decaying: 2.0 / sum,
            gap_growing: 0.0,
            transmitted: 0.0,
        });
    }

    let w = (-2.0 * q * a).exp();
    let denom = 1.0 - reflection * w;
    Ok(SlabCoefficients {
        reflection,
        source_side: diff * (1.0 - w) / (qk * sum * denom),
        gap_decaying: 2.0 / (sum * denom),
        gap_growing: -2.0 * diff * w / (sum * sum * denom),
        transmitted: 4.0 * q * (diff * a).exp() / (sum * sum * denom),
    })
}

/// The damped combination `D exp(-(q_k + q) a) = 4 q exp(-2 q a) /
/// [(q_k + q)^2 (1 - A exp(-2 q a))]`, computed without forming the raw
/// (possibly huge) `D`. This is the quantity every energy integral needs;
/// it vanishes for the distinguished `a = INFINITY`.
pub fn transmitted_damped(q: f64, kappa: f64, a: f64) -> Result<f64> {
    let qk = validate_mode(q, kappa, a)?;
    if a.is_infinite() {
        return Ok(0.0);
    }
    let sum = qk + q;
    let diff = qk - q;
    let reflection = (diff / sum) * (diff / sum);
    let w = (-2.0 * q * a).exp();
    Ok(4.0 * q * w / (sum * sum * (1.0 - reflection * w)))
}

fn validate_source(z0: f64) -> Result<()> {
    if !z0.is_finite() || z0 >= 0.0 {
        return Err(Error::InvalidParameter {
            field: "z0",
            value: z0,
            reason: "source must lie in the lower half-space (z0 < 0)",
        });
    }
    Ok(())
}

/// Value and slope of the transformed potential at `z`, branch by branch.
/// The `a < z` branch is evaluated through the damped transmitted amplitude
/// so large gaps never overflow.
fn branch_value_slope(
    z: f64,
    z0: f64,
    q: f64,
    qk: f64,
    a: f64,
    co: &SlabCoefficients,
) -> (f64, f64) {
    if z <= z0 {
        // 2 pi [ exp(q_k (z - z0))/q_k + B exp(q_k (z + z0)) ]
        let direct = (qk * (z - z0)).exp() / qk;
        let image = co.source_side * (qk * (z + z0)).exp();
        (
            2.0 * PI * (direct + image),
            2.0 * PI * qk * (direct + image),
        )
    } else if z <= 0.0 {
        let direct = (-qk * (z - z0)).exp() / qk;
        let image = co.source_side * (qk * (z + z0)).exp();
        (
            2.0 * PI * (direct + image),
            2.0 * PI * qk * (image - direct),
        )
    } else if z <= a {
        let pref = 2.0 * PI * (qk * z0).exp();
        let down = co.gap_decaying * (-q * z).exp();
        let up = co.gap_growing * (q * z).exp();
        (pref * (down + up), pref * q * (up - down))
    } else {
        // 2 pi D exp(q_k z0 - q_k z) = 2 pi [D e^{-(q_k+q)a}] e^{q_k z0 + q a - q_k (z - a)}
        let damped = co.transmitted * (-(qk + q) * a).exp();
        let v = 2.0 * PI * damped * (qk * z0 + q * a - qk * (z - a)).exp();
        (v, -qk * v)
    }
}

/// Piecewise transformed potential for a source at `z0 < 0`.
pub fn phi_hat(z: f64, z0: f64, q: f64, kappa: f64, a: f64) -> Result<f64> {
    validate_source(z0)?;
    if z.is_nan() {
        return Err(Error::InvalidParameter {
            field: "z",
            value: z,
            reason: "field point must be a number",
        });
    }
    let qk = validate_mode(q, kappa, a)?;
    let co = coefficients(q, kappa, a)?;
    Ok(branch_value_slope(z, z0, q, qk, a, &co).0)
}

/// Potential sampled on a caller-supplied grid.
#[derive(Debug, Clone, PartialEq)]
pub struct PotentialProfile {
    pub z: Vec<f64>,
    pub phi: Vec<f64>,
    pub source_position: f64,
}

pub fn potential_profile(
    z_grid: &[f64],
    z0: f64,
    q: f64,
    kappa: f64,
    a: f64,
) -> Result<PotentialProfile> {
    validate_source(z0)?;
    let qk = validate_mode(q, kappa, a)?;
    let co = coefficients(q, kappa, a)?;
    let phi = z_grid
        .iter()
        .map(|&z| branch_value_slope(z, z0, q, qk, a, &co).0)
        .collect();
    Ok(PotentialProfile {
        z: z_grid.to_vec(),
        phi,
        source_position: z0,
    })
}

/// Relative continuity residuals of value and slope at the two interfaces.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryResiduals {
    pub value_inner: f64,
    pub slope_inner: f64,
    pub value_outer: f64,
    pub slope_outer: f64,
}

impl BoundaryResiduals {
    pub fn max(&self) -> f64 {
        self.value_inner
            .max(self.slope_inner)
            .max(self.value_outer)
            .max(self.slope_outer)
    }
}

fn residuals_for(
    co: &SlabCoefficients,
    q: f64,
    qk: f64,
    a: f64,
    z0: f64,
) -> BoundaryResiduals {
    // Inner interface z = 0: source-medium branch vs gap branch.
    let (v_in_lo, s_in_lo) = branch_medium_at_zero(co, qk, z0);
    let (v_in_hi, s_in_hi) = branch_gap(co, q, qk, z0, 0.0);
    // Outer interface z = a: gap branch vs transmitted branch.
    let (v_out_lo, s_out_lo) = branch_gap(co, q, qk, z0, a);
    let (v_out_hi, s_out_hi) = branch_transmitted(co, q, qk, z0, a, a);

    let scale_in = v_in_lo.abs().max(v_in_hi.abs());
    let scale_out = v_out_lo.abs().max(v_out_hi.abs());
    BoundaryResiduals {
        value_inner: (v_in_lo - v_in_hi).abs() / scale_in,
        slope_inner: (s_in_lo - s_in_hi).abs() / (qk * scale_in),
        value_outer: (v_out_lo - v_out_hi).abs() / scale_out,
        slope_outer: (s_out_lo - s_out_hi).abs() / (qk * scale_out),
    }
}

fn branch_medium_at_zero(co: &SlabCoefficients, qk: f64, z0: f64) -> (f64, f64) {
    let direct = (qk * z0).exp() / qk;
    let image = co.source_side * (qk * z0).exp();
    (
        2.0 * PI * (direct + image),
        2.0 * PI * qk * (image - direct),
    )
}

fn branch_gap(co: &SlabCoefficients, q: f64, qk: f64, z0: f64, z: f64) -> (f64, f64) {
    let pref = 2.0 * PI * (qk * z0).exp();
    let down = co.gap_decaying * (-q * z).exp();
    let up = co.gap_growing * (q * z).exp();
    (pref * (down + up), pref * q * (up - down))
}

fn branch_transmitted(
    co: &SlabCoefficients,
    q: f64,
    qk: f64,
    z0: f64,
    a: f64,
    z: f64,
) -> (f64, f64) {
    let damped = co.transmitted * (-(qk + q) * a).exp();
    let v = 2.0 * PI * damped * (qk * z0 + q * a - qk * (z - a)).exp();
    (v, -qk * v)
}

/// Continuity residuals of the analytic coefficient set at `z = 0` and
/// `z = a`. Exact algebra must close these to round-off; they are the ground
/// truth the coefficient derivation is tested against.
pub fn boundary_residuals(q: f64, kappa: f64, a: f64, z0: f64) -> Result<BoundaryResiduals> {
    validate_source(z0)?;
    let qk = validate_mode(q, kappa, a)?;
    if a.is_infinite() {
        // The outer interface sits at infinity; only the inner one remains.
        let co = coefficients(q, kappa, a)?;
        let (v_lo, s_lo) = branch_medium_at_zero(&co, qk, z0);
        let (v_hi, s_hi) = branch_gap(&co, q, qk, z0, 0.0);
        let scale = v_lo.abs().max(v_hi.abs());
        return Ok(BoundaryResiduals {
            value_inner: (v_lo - v_hi).abs() / scale,
            slope_inner: (s_lo - s_hi).abs() / (qk * scale),
            value_outer: 0.0,
            slope_outer: 0.0,
        });
    }
    let co = coefficients(q, kappa, a)?;
    Ok(residuals_for(&co, q, qk, a, z0))
}
