//! Domain types for the screened one-component plasma slab problem.
//!
//! Everything is expressed in Gaussian (cgs/esu) units. The single derived
//! scale is the inverse Debye screening length
//!
//! ```text
//! kappa^2 = 4 pi * beta * q_c^2 * rho
//! ```
//!
//! and all kernel integrals downstream are functions of the reduced gap
//! `x = kappa * a` only; dimensional prefactors are applied by wrapper
//! operations. Types are immutable value objects after construction.

use crate::error::{require_non_negative, require_positive, Error, Result};
use std::f64::consts::PI;

/// State of the one-component ionic fluid: inverse temperature `beta`
/// (1/erg), number density `rho` (1/cm^3), ionic charge `q_c` (esu), and the
/// derived inverse screening length `kappa` (1/cm).
///
/// `kappa` is computed once at construction so there is a single source of
/// truth for the relation `kappa^2 = 4 pi beta q_c^2 rho`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlasmaParameters {
    beta: f64,
    rho: f64,
    ionic_charge: f64,
    kappa: f64,
}

impl PlasmaParameters {
    pub fn new(beta: f64, rho: f64, ionic_charge: f64) -> Result<Self> {
        let beta = require_positive("beta", beta)?;
        let rho = require_positive("rho", rho)?;
        let ionic_charge = require_positive("q_c", ionic_charge)?;
        let kappa = (4.0 * PI * beta * ionic_charge * ionic_charge * rho).sqrt();
        Ok(Self {
            beta,
            rho,
            ionic_charge,
            kappa,
        })
    }

    /// Unit-screening state (`kappa = 1`, `beta = 1`): handy for working in
    /// reduced variables.
    pub fn reduced() -> Self {
        Self::new(1.0, 1.0 / (4.0 * PI), 1.0).expect("unit parameters are valid")
    }

    /// Same fluid at a different inverse temperature (fixed `rho`, `q_c`).
    /// Note `kappa` scales as `sqrt(beta)`.
    pub fn with_beta(&self, beta: f64) -> Result<Self> {
        Self::new(beta, self.rho, self.ionic_charge)
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn ionic_charge(&self) -> f64 {
        self.ionic_charge
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }
}

/// Two equal half-spaces of plasma separated by a vacuum gap of width `a`,
/// each slab of thickness `d`. `a = f64::INFINITY` is accepted as the
/// distinguished isolated-surface configuration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlabGeometry {
    gap: f64,
    thickness: f64,
    reduced_gap: f64,
}

impl SlabGeometry {
    pub fn new(params: &PlasmaParameters, gap: f64, thickness: f64) -> Result<Self> {
        let gap = require_non_negative("a", gap)?;
        let thickness = require_positive("d", thickness)?;
        Ok(Self {
            gap,
            thickness,
            reduced_gap: params.kappa() * gap,
        })
    }

    /// Gap width `a` in cm (possibly infinite).
    pub fn gap(&self) -> f64 {
        self.gap
    }

    /// Slab thickness `d` in cm.
    pub fn thickness(&self) -> f64 {
        self.thickness
    }

    /// Reduced gap `x = kappa * a`.
    pub fn reduced_gap(&self) -> f64 {
        self.reduced_gap
    }
}

/// One point of the hyperbolic mode substitution `q = kappa sinh t`.
///
/// Carries the transverse wavenumber `q`, the screened wavenumber
/// `q_kappa = kappa cosh t` (so `q_kappa^2 - q^2 = kappa^2`), the interface
/// reflection factor `A = e^{-4t} = ((q_kappa - q)/(q_kappa + q))^2`, and the
/// mode exponent `g = 4t + 2 x sinh t` that controls every gap integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModePoint {
    pub t: f64,
    pub q: f64,
    pub q_kappa: f64,
    pub reflection: f64,
    pub g: f64,
}

/// Evaluates the substitution variables at `t >= 0` for the given state and
/// geometry.
pub fn mode_point(params: &PlasmaParameters, geom: &SlabGeometry, t: f64) -> Result<ModePoint> {
    if !t.is_finite() || t < 0.0 {
        return Err(Error::InvalidParameter {
            field: "t",
            value: t,
            reason: "substitution variable must be finite and >= 0",
        });
    }
    let kappa = params.kappa();
    let sinh_t = t.sinh();
    let x = geom.reduced_gap();
    // At t = 0 the product x * sinh t must be 0 even for the distinguished
    // infinite gap.
    let g = if sinh_t == 0.0 {
        4.0 * t
    } else {
        4.0 * t + 2.0 * x * sinh_t
    };
    Ok(ModePoint {
        t,
        q: kappa * sinh_t,
        q_kappa: kappa * t.cosh(),
        reflection: (-4.0 * t).exp(),
        g,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn value_types_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<PlasmaParameters>();
        assert_send_sync::<SlabGeometry>();
        assert_send_sync::<ModePoint>();
    }

    #[test]
    fn kappa_relation_holds() {
        let p = PlasmaParameters::new(1.0, 1.0, 1.0).unwrap();
        assert_relative_eq!(p.kappa(), (4.0 * PI).sqrt(), max_relative = 1e-15);
        assert_relative_eq!(
            p.kappa() * p.kappa(),
            4.0 * PI * p.beta() * p.ionic_charge() * p.ionic_charge() * p.rho(),
            max_relative = 1e-15
        );
    }

    #[test]
    fn unit_screening_cancels() {
        let p = PlasmaParameters::new(1.0 / (4.0 * PI), 1.0, 1.0).unwrap();
        assert_relative_eq!(p.kappa(), 1.0, max_relative = 1e-15);
        let r = PlasmaParameters::reduced();
        assert_relative_eq!(r.kappa(), 1.0, max_relative = 1e-15);
        assert_relative_eq!(r.beta(), 1.0, max_relative = 1e-15);
    }

    #[test]
    fn invalid_parameters_name_the_field() {
        let err = PlasmaParameters::new(-1.0, 1.0, 1.0).unwrap_err();
        assert!(matches!(err, Error::InvalidParameter { field: "beta", .. }));
        let err = PlasmaParameters::new(1.0, f64::NAN, 1.0).unwrap_err();
        assert!(matches!(err, Error::InvalidParameter { field: "rho", .. }));
        let err = PlasmaParameters::new(1.0, 1.0, 0.0).unwrap_err();
        assert!(matches!(err, Error::InvalidParameter { field: "q_c", .. }));
    }

    #[test]
    fn geometry_reduced_gap() {
        let p = PlasmaParameters::new(1.0, 1.0, 1.0).unwrap();
        let g = SlabGeometry::new(&p, 2.0, 1.0).unwrap();
        assert_eq!(g.reduced_gap(), p.kappa() * 2.0);
        assert!(SlabGeometry::new(&p, -1.0, 1.0).is_err());
        assert!(SlabGeometry::new(&p, 1.0, 0.0).is_err());
        let inf = SlabGeometry::new(&p, f64::INFINITY, 1.0).unwrap();
        assert!(inf.reduced_gap().is_infinite());
    }

    #[test]
    fn mode_point_contact_values() {
        let p = PlasmaParameters::reduced();
        let geom = SlabGeometry::new(&p, 0.0, 1.0).unwrap();
        let m = mode_point(&p, &geom, 0.0).unwrap();
        assert_eq!(m.q, 0.0);
        assert_eq!(m.q_kappa, 1.0);
        assert_eq!(m.reflection, 1.0);
        assert_eq!(m.g, 0.0);
        assert!(mode_point(&p, &geom, -0.1).is_err());
    }

    #[test]
    fn mode_point_three_four_five() {
        // sinh t = 3/4 makes cosh t = 5/4.
        let p = PlasmaParameters::reduced();
        let geom = SlabGeometry::new(&p, 2.0, 1.0).unwrap();
        let t = 0.75_f64.asinh();
        let m = mode_point(&p, &geom, t).unwrap();
        assert_relative_eq!(m.q, 0.75, max_relative = 1e-14);
        assert_relative_eq!(m.q_kappa, 1.25, max_relative = 1e-14);
        assert_relative_eq!(m.reflection, 0.0625, max_relative = 1e-14);
        assert_relative_eq!(m.g, 4.0 * t + 3.0, max_relative = 1e-14);
    }

    #[test]
    fn mode_point_invariants_on_grid() {
        for &x in &[0.0, 0.1, 1.0, 10.0] {
            let p = PlasmaParameters::new(2.0, 0.5, 1.3).unwrap();
            let a = x / p.kappa();
            let geom = SlabGeometry::new(&p, a, 1.0).unwrap();
            let mut prev_g = -1.0;
            for i in 0..300 {
                let t = 30.0 * f64::from(i) / 299.0;
                let m = mode_point(&p, &geom, t).unwrap();
                // q_kappa^2 - q^2 = kappa^2, asserted in the cancellation-free
                // forms that stay conditioned over the whole t range:
                assert_relative_eq!(m.q_kappa, m.q.hypot(p.kappa()), max_relative = 1e-12);
                assert_relative_eq!(
                    m.reflection * (m.q_kappa + m.q).powi(4),
                    p.kappa().powi(4),
                    max_relative = 1e-12
                );
                if t <= 4.0 {
                    // The literal difference forms are float-testable only
                    // while e^{2t} eps stays below the tolerance.
                    assert_relative_eq!(
                        m.q_kappa * m.q_kappa - m.q * m.q,
                        p.kappa() * p.kappa(),
                        max_relative = 1e-12
                    );
                    let ratio = (m.q_kappa - m.q) / (m.q_kappa + m.q);
                    assert_relative_eq!(m.reflection, ratio * ratio, max_relative = 1e-12);
                }
                // reduced-gap consistency
                assert_relative_eq!(
                    m.g,
                    4.0 * t + 2.0 * geom.reduced_gap() * t.sinh(),
                    max_relative = 1e-14
                );
                assert!(m.g >= 0.0 && m.g > prev_g || i == 0);
                prev_g = m.g;
            }
        }
    }
}
