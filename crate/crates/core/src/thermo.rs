//! Casimir force, free energy, internal energy and entropy of the slab pair,
//! with their thermodynamic-identity verifiers.
//!
//! Everything reduces to three dimensionless kernels of `x = kappa a`, all
//! built on the mode exponent `g(t) = 4t + 2x sinh t`:
//!
//! ```text
//! I_f(x) = int_0^inf sinh^2 t cosh t / (e^g - 1) dt        force
//! I_L(x) = int_0^inf -ln(1 - e^{-g}) sinh t cosh t dt      free energy
//! I_U(x) = int_0^inf sinh^2 t / (e^g - 1) dt               internal energy
//! ```
//!
//! with the dimensional wrappers
//!
//! ```text
//! f    = -(kappa^3 / (2 pi beta)) I_f(x)      force per unit area
//! F_c  = -(kappa^2 / (4 pi beta)) I_L(x)      with F_c(inf) = 0
//! U_c  = -(kappa^2 / (2 pi beta)) I_U(x)
//! S_c  =  k_B (a kappa^3 / (4 pi)) I_f(x)
//! ```
//!
//! Partial integration gives the exact kernel relation
//! `I_L(x) = 2 I_U(x) + x I_f(x)`, which is why `S_c = k_B beta (U_c - F_c)`
//! and `S_c = -(1/2) k_B beta a f` hold identically. `beta F_c` is the stored
//! primitive; `kappa^2` is proportional to `beta` at fixed density and charge,
//! so temperature derivatives move `x` as well.
//!
//! Only the zero-frequency (electrostatic) polarization exists here; there is
//! no transverse-electric term anywhere.

use crate::error::{Error, Result};
use crate::model::{PlasmaParameters, SlabGeometry};
use crate::quadrature::{integrate_semi_infinite, IntegralResult, QuadratureSpec};
use std::f64::consts::PI;

/// Boltzmann constant in cgs units (erg/K), CODATA.
pub const BOLTZMANN: f64 = 1.380_649e-16;

/// Apery's constant zeta(3); controls the large-gap force asymptote.
pub const ZETA_3: f64 = 1.202_056_903_159_594_3;

/// Mode exponent `g(t) = 4t + 2 x sinh t`.
#[inline]
pub fn mode_exponent(t: f64, x: f64) -> f64 {
    let s = t.sinh();
    if s == 0.0 {
        4.0 * t
    } else {
        4.0 * t + 2.0 * x * s
    }
}

/// Integrand of `I_f`. Written as `1/(e^g - 1)` so the removable point at
/// `t = 0` and the small-`g` regime at contact stay accurate.
#[inline]
pub fn force_integrand(t: f64, x: f64) -> f64 {
    if t <= 0.0 {
        return 0.0;
    }
    let g = mode_exponent(t, x);
    if g > 700.0 {
        return 0.0;
    }
    let s = t.sinh();
    s * s * t.cosh() / g.exp_m1()
}

/// Integrand of `I_U`.
#[inline]
pub fn internal_energy_integrand(t: f64, x: f64) -> f64 {
    if t <= 0.0 {
        return 0.0;
    }
    let g = mode_exponent(t, x);
    if g > 700.0 {
        return 0.0;
    }
    let s = t.sinh();
    s * s / g.exp_m1()
}

/// Integrand of `I_L`, via `-ln_1p(-e^{-g})` for small-tail accuracy.
#[inline]
pub fn free_energy_integrand(t: f64, x: f64) -> f64 {
    if t <= 0.0 {
        return 0.0;
    }
    let g = mode_exponent(t, x);
    -(-(-g).exp()).ln_1p() * t.sinh() * t.cosh()
}

fn validate_reduced_gap(x: f64) -> Result<()> {
    if x.is_nan() || x < 0.0 {
        return Err(Error::InvalidParameter {
            field: "x",
            value: x,
            reason: "reduced gap must be >= 0 (f64::INFINITY allowed)",
        });
    }
    Ok(())
}

pub fn force_kernel(x: f64, spec: &QuadratureSpec) -> Result<IntegralResult> {
    validate_reduced_gap(x)?;
    if x.is_infinite() {
        return Ok(IntegralResult::zero());
    }
    // Envelope: sinh^2 t cosh t <= e^{3t}/8 and g >= (4 + 2x) t.
    integrate_semi_infinite(|t| force_integrand(t, x), 1.0 + 2.0 * x, spec)
}

pub fn internal_energy_kernel(x: f64, spec: &QuadratureSpec) -> Result<IntegralResult> {
    validate_reduced_gap(x)?;
    if x.is_infinite() {
        return Ok(IntegralResult::zero());
    }
    integrate_semi_infinite(|t| internal_energy_integrand(t, x), 2.0 + 2.0 * x, spec)
}

pub fn free_energy_kernel(x: f64, spec: &QuadratureSpec) -> Result<IntegralResult> {
    validate_reduced_gap(x)?;
    if x.is_infinite() {
        return Ok(IntegralResult::zero());
    }
    integrate_semi_infinite(|t| free_energy_integrand(t, x), 2.0 + 2.0 * x, spec)
}

/// The three reduced kernels at one reduced gap.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedKernels {
    pub x: f64,
    /// `I_f(x)`
    pub force: IntegralResult,
    /// `I_L(x)`
    pub free_energy: IntegralResult,
    /// `I_U(x)`
    pub internal_energy: IntegralResult,
}

pub fn reduced_kernels(x: f64, spec: &QuadratureSpec) -> Result<ReducedKernels> {
    Ok(ReducedKernels {
        x,
        force: force_kernel(x, spec)?,
        free_energy: free_energy_kernel(x, spec)?,
        internal_energy: internal_energy_kernel(x, spec)?,
    })
}

/// Casimir force per unit area, dyne/cm^2. Attractive (negative) for every
/// finite gap.
pub fn casimir_force(
    params: &PlasmaParameters,
    geom: &SlabGeometry,
    spec: &QuadratureSpec,
) -> Result<f64> {
    let x = geom.reduced_gap();
    if x.is_infinite() {
        return Ok(0.0);
    }
    let kappa = params.kappa();
    Ok(-kappa.powi(3) / (2.0 * PI * params.beta()) * force_kernel(x, spec)?.value)
}

/// Casimir free energy per unit area, erg/cm^2, normalized to zero at
/// infinite separation.
pub fn casimir_free_energy(
    params: &PlasmaParameters,
    geom: &SlabGeometry,
    spec: &QuadratureSpec,
) -> Result<f64> {
    let x = geom.reduced_gap();
    if x.is_infinite() {
        return Ok(0.0);
    }
    let kappa = params.kappa();
    Ok(-kappa * kappa / (4.0 * PI * params.beta()) * free_energy_kernel(x, spec)?.value)
}

/// Casimir internal energy per unit area, erg/cm^2.
pub fn casimir_internal_energy(
    params: &PlasmaParameters,
    geom: &SlabGeometry,
    spec: &QuadratureSpec,
) -> Result<f64> {
    let x = geom.reduced_gap();
    if x.is_infinite() {
        return Ok(0.0);
    }
    let kappa = params.kappa();
    Ok(-kappa * kappa / (2.0 * PI * params.beta()) * internal_energy_kernel(x, spec)?.value)
}

/// Casimir entropy per unit area, erg/(K cm^2). Non-negative everywhere,
/// vanishing at contact and at infinite separation.
pub fn casimir_entropy(
    params: &PlasmaParameters,
    geom: &SlabGeometry,
    spec: &QuadratureSpec,
) -> Result<f64> {
    let x = geom.reduced_gap();
    if x.is_infinite() {
        return Ok(0.0);
    }
    if geom.gap() == 0.0 {
        return Ok(0.0);
    }
    let kappa = params.kappa();
    Ok(BOLTZMANN * geom.gap() * kappa.powi(3) / (4.0 * PI) * force_kernel(x, spec)?.value)
}

/// Large-gap asymptote `-zeta(3) / (8 pi beta (a + 2/kappa)^3)`: the ideal
/// high-temperature result with the separation shifted by two screening
/// lengths.
pub fn asymptotic_force(params: &PlasmaParameters, geom: &SlabGeometry) -> f64 {
    if geom.gap().is_infinite() {
        return 0.0;
    }
    let shifted = geom.gap() + 2.0 / params.kappa();
    -ZETA_3 / (8.0 * PI * params.beta() * shifted.powi(3))
}

/// Relative residual of the Gibbs-Helmholtz identity
/// `U_c = d(beta F_c)/d beta` at fixed `(a, rho, q_c)`, by central difference
/// with absolute beta-step `step`. `kappa` tracks `sqrt(beta)`, so the
/// reduced gap moves with beta as it must.
///
/// The difference quotient amplifies quadrature noise by `1/step`, so the
/// kernels are evaluated at a tolerance tightened well below the step size.
pub fn check_thermo_identity(
    params: &PlasmaParameters,
    geom: &SlabGeometry,
    step: f64,
    spec: &QuadratureSpec,
) -> Result<f64> {
    let beta = params.beta();
    if !step.is_finite() || step <= 0.0 || step >= beta {
        return Err(Error::InvalidParameter {
            field: "step",
            value: step,
            reason: "finite-difference step must satisfy 0 < step < beta",
        });
    }
    if geom.reduced_gap().is_infinite() {
        // Both sides vanish identically at infinite separation.
        return Ok(0.0);
    }
    let tight = QuadratureSpec {
        rel_tol: spec.rel_tol.min(1e-12),
        abs_tol: spec.abs_tol.min(1e-16),
        ..*spec
    };

    let beta_free_energy = |b: f64| -> Result<f64> {
        let p = params.with_beta(b)?;
        let g = SlabGeometry::new(&p, geom.gap(), geom.thickness())?;
        Ok(b * casimir_free_energy(&p, &g, &tight)?)
    };

    let u = casimir_internal_energy(params, geom, &tight)?;
    let derivative = (beta_free_energy(beta + step)? - beta_free_energy(beta - step)?)
        / (2.0 * step);
    Ok((u - derivative).abs() / u.abs())
}

/// Relative residual of `S_c = k_B beta (U_c - F_c)`, comparing the direct
/// entropy kernel against independent quadratures of the energy kernels.
/// Returns 0 when both sides sit at the contact/infinite-gap zero.
pub fn check_entropy_identity(
    params: &PlasmaParameters,
    geom: &SlabGeometry,
    spec: &QuadratureSpec,
) -> Result<f64> {
    let x = geom.reduced_gap();
    if x.is_infinite() {
        return Ok(0.0);
    }
    let s_direct = casimir_entropy(params, geom, spec)?;
    let u = casimir_internal_energy(params, geom, spec)?;
    let f = casimir_free_energy(params, geom, spec)?;
    let s_thermo = BOLTZMANN * params.beta() * (u - f);

    let kappa = params.kappa();
    let noise_floor = BOLTZMANN * kappa * kappa * 1e-9;
    if s_direct.abs() <= noise_floor && s_thermo.abs() <= noise_floor {
        return Ok(0.0);
    }
    Ok((s_direct - s_thermo).abs() / s_direct.abs().max(noise_floor))
}
