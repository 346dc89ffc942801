//! Cross-module consistency checks that go beyond the acceptance criteria:
//! recovering the free energy by integrating the surface-route internal
//! energy over inverse temperature, and dual-path entropy evaluation.

use casimir_plasma::quadrature::{integrate_finite, QuadratureSpec};
use casimir_plasma::surface::surface_kernel_raw;
use casimir_plasma::thermo::{
    casimir_entropy, casimir_free_energy, casimir_internal_energy, free_energy_kernel, BOLTZMANN,
};
use casimir_plasma::{PlasmaParameters, SlabGeometry};

/// `beta F_c` rebuilt from the surface-route internal energy: integrating
/// `U(beta')` from zero coupling up to `beta` is, in reduced variables,
/// `x^2 I_L(x)/4 = int_0^x u K_surf(u) du` with the kernel taken from the raw
/// coefficient ledger. This closes the loop free energy -> force -> surface
/// energy -> free energy.
#[test]
fn free_energy_bookkeeping_through_the_surface_route() {
    let spec = QuadratureSpec::default();
    // The integrand is itself a quadrature; relax the outer tolerance so the
    // inner error budget stays subdominant.
    let outer = QuadratureSpec {
        rel_tol: 1e-9,
        abs_tol: 1e-12,
        ..spec
    };
    for &x in &[0.5, 1.0, 2.0] {
        let lhs = x * x * free_energy_kernel(x, &spec).unwrap().value / 4.0;
        let integral = integrate_finite(
            |u| {
                if u <= 0.0 {
                    return 0.0;
                }
                u * surface_kernel_raw(u, &spec).unwrap().value
            },
            0.0,
            x,
            &outer,
        )
        .unwrap();
        let rel = (integral.value - lhs).abs() / lhs;
        assert!(rel < 1e-6, "bookkeeping residual {rel} at x = {x}");
    }
}

/// Entropy via its own kernel against entropy via `k_B beta (U - F)` with all
/// three quantities from independent quadratures, at the reference gap.
#[test]
fn entropy_dual_path_at_unit_gap() {
    let spec = QuadratureSpec::default();
    let p = PlasmaParameters::reduced();
    let g = SlabGeometry::new(&p, 1.0, 1.0).unwrap();
    let direct = casimir_entropy(&p, &g, &spec).unwrap();
    let u = casimir_internal_energy(&p, &g, &spec).unwrap();
    let f = casimir_free_energy(&p, &g, &spec).unwrap();
    let via_thermo = BOLTZMANN * p.beta() * (u - f);
    let rel = (direct - via_thermo).abs() / direct;
    assert!(rel < 1e-8, "dual-path entropy residual {rel}");
}

/// The dimensional wrappers and the reduced kernels describe one family:
/// scaling beta and the charge at fixed reduced gap moves every quantity by
/// its documented prefactor only.
#[test]
fn reduced_family_collapse() {
    let spec = QuadratureSpec::default();
    let x = 0.8;
    let reference = PlasmaParameters::reduced();
    let g_ref = SlabGeometry::new(&reference, x, 1.0).unwrap();
    let f_ref = casimir_free_energy(&reference, &g_ref, &spec).unwrap();

    for &(beta, rho, q_c) in &[(2.0, 0.3, 1.0), (0.5, 4.0, 0.7), (3.0, 1.0, 2.0)] {
        let p = PlasmaParameters::new(beta, rho, q_c).unwrap();
        let g = SlabGeometry::new(&p, x / p.kappa(), 1.0).unwrap();
        let f = casimir_free_energy(&p, &g, &spec).unwrap();
        // beta F_c scales as kappa^2 at fixed x.
        let collapsed = f * p.beta() / (p.kappa() * p.kappa());
        let rel = (collapsed - f_ref).abs() / f_ref.abs();
        assert!(rel < 1e-12, "family collapse residual {rel}");
    }
}
