//! Surface tension versus the field-theory time-splitting cutoff, through the
//! zero-temperature surface force on a dilute dielectric ball.
//!
//! For a nonmagnetic ball of radius `a` with susceptibility
//! `chi = epsilon - 1 << 1`, point-splitting the stress two-point function by
//! a time `tau` leaves the surface force density
//!
//! ```text
//! f = -(chi^2 hbar c / (256 pi a^4)) [16/delta^3 + 1/4],   delta = tau c / a
//! ```
//!
//! both terms inward. Equating the cutoff-dependent term to the hydrodynamic
//! surface-tension stress `2 sigma / a` of a fluid sphere fixes the photon
//! flight distance during the splitting,
//!
//! ```text
//! tau c = (chi^2 hbar c / (32 pi sigma))^(1/3)
//!       = 6.80e-7 (chi^2 / sigma)^(1/3) cm,
//! ```
//!
//! independent of the radius, and `tau ~ sigma^(-1/3)`. For an air-water
//! surface (`sigma = 73 dyne/cm`) and `chi = 0.01` this gives
//! `tau c = 0.755 angstrom` and `tau = 2.5e-19 s`: atomic dimensions.
//!
//! This is a dimensional estimate, not a derivation; whether the numbers
//! carry over to other regularizations or materials is an open question, and
//! nothing here should be read as a stronger claim. Only the dilute limit is
//! implemented; callers should treat `chi > 0.1` as outside the model (see
//! [`BallParameters::is_dilute`]).

use crate::error::{require_positive, Result};

/// Reduced Planck constant, erg s (CODATA, cgs).
pub const HBAR: f64 = 1.054572e-27;
/// Speed of light, cm/s (CODATA, cgs).
pub const SPEED_OF_LIGHT: f64 = 2.997925e10;
/// Upper edge of the low-susceptibility regime the force formula covers.
pub const DILUTE_LIMIT: f64 = 0.1;

/// Dilute dielectric ball with an explicit nondimensional cutoff.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BallParameters {
    /// Susceptibility `epsilon - 1`, dimensionless.
    pub susceptibility: f64,
    /// Ball radius, cm.
    pub radius: f64,
    /// Surface tension, dyne/cm.
    pub surface_tension: f64,
    /// Cutoff ratio `delta = tau c / a`, dimensionless.
    pub cutoff_ratio: f64,
}

impl BallParameters {
    pub fn new(
        susceptibility: f64,
        radius: f64,
        surface_tension: f64,
        cutoff_ratio: f64,
    ) -> Result<Self> {
        require_positive("epsilon_minus_1", susceptibility)?;
        require_positive("a_ball", radius)?;
        require_positive("sigma", surface_tension)?;
        require_positive("delta", cutoff_ratio)?;
        Ok(Self {
            susceptibility,
            radius,
            surface_tension,
            cutoff_ratio,
        })
    }

    /// Whether the susceptibility is small enough for the dilute-limit force.
    pub fn is_dilute(&self) -> bool {
        self.susceptibility <= DILUTE_LIMIT
    }
}

/// Surface force density on the ball, dyne/cm^2. Always negative (inward):
/// the cutoff term and the finite remainder share the sign.
pub fn milton_surface_force(ball: &BallParameters) -> f64 {
    let chi2 = ball.susceptibility * ball.susceptibility;
    let delta3 = ball.cutoff_ratio.powi(3);
    -chi2 * HBAR * SPEED_OF_LIGHT / (256.0 * std::f64::consts::PI * ball.radius.powi(4))
        * (16.0 / delta3 + 0.25)
}

/// Photon flight distance `tau c` during the time splitting, cm. Radius drops
/// out of the stress balance, so only the susceptibility and the surface
/// tension enter.
pub fn cutoff_distance(susceptibility: f64, surface_tension: f64) -> Result<f64> {
    require_positive("epsilon_minus_1", susceptibility)?;
    require_positive("sigma", surface_tension)?;
    let chi2 = susceptibility * susceptibility;
    Ok(
        (chi2 * HBAR * SPEED_OF_LIGHT / (32.0 * std::f64::consts::PI * surface_tension))
            .powf(1.0 / 3.0),
    )
}

/// Time-splitting parameter `tau = (tau c)/c`, seconds.
pub fn cutoff_time(susceptibility: f64, surface_tension: f64) -> Result<f64> {
    Ok(cutoff_distance(susceptibility, surface_tension)? / SPEED_OF_LIGHT)
}
