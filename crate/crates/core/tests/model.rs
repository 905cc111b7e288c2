use std::f64::consts::{FRAC_PI_2, PI};

use nalgebra::{Matrix2, SymmetricEigen};
use proptest::prelude::*;
use thermopurity::model::{derive_decoupled, from_decoupled, validate, OscillatorParams};
use thermopurity::Error;

/// Square roots of the eigenvalues of `M^{-1/2} K M^{-1/2}`, ascending.
fn eigen_frequencies(p: &OscillatorParams) -> (f64, f64) {
    let (r1, r2) = (1.0 / p.m1.sqrt(), 1.0 / p.m2.sqrt());
    let weighted = Matrix2::new(
        p.c1 * r1 * r1,
        0.5 * p.c3 * r1 * r2,
        0.5 * p.c3 * r1 * r2,
        p.c2 * r2 * r2,
    );
    let eig = SymmetricEigen::new(weighted).eigenvalues;
    let (lo, hi) = (eig[0].min(eig[1]), eig[0].max(eig[1]));
    (lo.sqrt(), hi.sqrt())
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

#[test]
fn validation_examples() {
    assert!(validate(&OscillatorParams::new(1.0, 1.0, 1.0, 1.0, 0.0)).is_ok());
    assert!(matches!(
        validate(&OscillatorParams::new(1.0, 1.0, 1.0, 1.0, 2.0)),
        Err(Error::UnstablePotential { .. })
    ));
    assert!(validate(&OscillatorParams::new(1.0, 1.0, 1.0, 1.0, 30.0 / 17.0)).is_ok());
    assert!(matches!(
        validate(&OscillatorParams::new(1.0, -1.0, 1.0, 1.0, 0.0)),
        Err(Error::NonPositiveParameter { .. })
    ));
    assert!(matches!(
        validate(&OscillatorParams::new(1.0, 1.0, 1.0, 1.0, 0.0).with_hbar(0.0)),
        Err(Error::NonPositiveParameter { .. })
    ));
}

#[test]
fn identical_particles_with_eta_ln2() {
    let dp = derive_decoupled(&OscillatorParams::new(1.0, 1.0, 1.0, 1.0, 30.0 / 17.0)).unwrap();
    assert!((dp.mu - 1.0).abs() < 1e-15);
    assert!((dp.eta - 2f64.ln()).abs() < 1e-14);
    assert!((dp.k - 8.0 / 17.0).abs() < 1e-15);
    // positive coupling puts the stiff mode on the antisymmetric combination
    assert!((dp.theta - 3.0 * FRAC_PI_2).abs() < 1e-14);
    let flipped = derive_decoupled(&OscillatorParams::new(1.0, 1.0, 1.0, 1.0, -30.0 / 17.0)).unwrap();
    assert!((flipped.theta - FRAC_PI_2).abs() < 1e-14);
}

#[test]
fn uncoupled_unequal_springs() {
    let dp = derive_decoupled(&OscillatorParams::new(1.0, 1.0, 4.0, 1.0, 0.0)).unwrap();
    assert_eq!(dp.mu, 1.0);
    assert_eq!(dp.theta, 0.0);
    assert!((dp.k - 2.0).abs() < 1e-15);
    assert!(((2.0 * dp.eta).exp() - 2.0).abs() < 1e-14);
    assert!((dp.omega - 2f64.sqrt()).abs() < 1e-15);
    assert!((dp.e0 - 2f64.sqrt() * (0.5 * 2f64.ln()).cosh()).abs() < 1e-14);
}

#[test]
fn unequal_masses_match_eigen_oracle() {
    let p = OscillatorParams::new(2.0, 1.0, 3.0, 2.0, 1.0);
    let dp = derive_decoupled(&p).unwrap();
    let (soft, stiff) = eigen_frequencies(&p);
    let (w_plus, w_minus) = dp.mode_frequencies();
    assert!(rel(w_plus, stiff) < 1e-12, "{w_plus} vs {stiff}");
    assert!(rel(w_minus, soft) < 1e-12, "{w_minus} vs {soft}");
    assert!((dp.mu - 2f64.powf(0.25)).abs() < 1e-15);
}

#[test]
fn dimensionless_constructor() {
    let dp = from_decoupled(0.0, PI);
    assert_eq!((dp.eta, dp.theta, dp.e0), (0.0, PI, 1.0));
    assert!((from_decoupled(2f64.ln(), FRAC_PI_2).e0 - 1.25).abs() < 1e-15);
    let series: f64 = (0..20).map(|n| 1.0 / (1..=2 * n).map(f64::from).product::<f64>()).sum();
    assert!((from_decoupled(1.0, PI / 3.0).e0 - series).abs() < 1e-15);
    assert!((series - 1.5430806).abs() < 1e-7);
}

fn stable_params() -> impl Strategy<Value = OscillatorParams> {
    (0.1f64..10.0, 0.1f64..10.0, 0.1f64..10.0, 0.1f64..10.0, -0.99f64..0.99).prop_map(
        |(m1, m2, c1, c2, frac)| OscillatorParams::new(m1, m2, c1, c2, frac * 2.0 * (c1 * c2).sqrt()),
    )
}

proptest! {
    #[test]
    fn frequencies_match_eigen_oracle(p in stable_params()) {
        let dp = derive_decoupled(&p).unwrap();
        let (soft, stiff) = eigen_frequencies(&p);
        let (w_plus, w_minus) = dp.mode_frequencies();
        prop_assert!(rel(w_plus, stiff) < 1e-10);
        prop_assert!(rel(w_minus, soft) < 1e-10);
    }

    #[test]
    fn branches_multiply_to_one(p in stable_params()) {
        let (plus, minus) = p.mode_stiffness_ratios().unwrap();
        prop_assert!((plus * minus - 1.0).abs() < 1e-12 * plus.max(1.0));
    }

    #[test]
    fn couplings_round_trip(p in stable_params()) {
        let q = derive_decoupled(&p).unwrap().couplings();
        let scale = p.c1.max(p.c2);
        prop_assert!(rel(q.m1, p.m1) < 1e-13 && rel(q.m2, p.m2) < 1e-13);
        prop_assert!((q.c1 - p.c1).abs() < 1e-11 * scale);
        prop_assert!((q.c2 - p.c2).abs() < 1e-11 * scale);
        prop_assert!((q.c3 - p.c3).abs() < 1e-11 * scale);
    }

    #[test]
    fn normal_modes_diagonalize_potential(p in stable_params(), x1 in -3.0f64..3.0, x2 in -3.0f64..3.0) {
        let dp = derive_decoupled(&p).unwrap();
        let v = p.potential(x1, x2);
        prop_assert!((dp.potential(x1, x2) - v).abs() < 1e-11 * (1.0 + v.abs()));
        let (b1, b2) = dp.to_normal(x1, x2);
        let (y1, y2) = dp.from_normal(b1, b2);
        prop_assert!((y1 - x1).abs() < 1e-12 && (y2 - x2).abs() < 1e-12);
    }

    #[test]
    fn kinetic_term_is_diagonal_with_mass_m(p in stable_params(), v1 in -3.0f64..3.0, v2 in -3.0f64..3.0) {
        // velocities map like coordinates; kinetic energy must read m(V1² + V2²)/2
        let dp = derive_decoupled(&p).unwrap();
        let (big1, big2) = dp.to_normal(v1, v2);
        let original = 0.5 * (p.m1 * v1 * v1 + p.m2 * v2 * v2);
        let normal = 0.5 * dp.m * (big1 * big1 + big2 * big2);
        prop_assert!((original - normal).abs() < 1e-11 * (1.0 + original));
    }

    #[test]
    fn uncoupled_means_no_mixing(m1 in 0.1f64..10.0, m2 in 0.1f64..10.0, c1 in 0.1f64..10.0, c2 in 0.1f64..10.0) {
        let dp = derive_decoupled(&OscillatorParams::new(m1, m2, c1, c2, 0.0)).unwrap();
        prop_assert!(dp.theta == 0.0 || dp.theta == PI);
    }

    #[test]
    fn ground_energy_bounded_by_hbar_omega(p in stable_params(), hbar in 0.1f64..3.0) {
        let dp = derive_decoupled(&p.with_hbar(hbar)).unwrap();
        let floor = hbar * dp.omega;
        prop_assert!(dp.eta >= 0.0);
        prop_assert!(dp.e0 >= floor * (1.0 - 1e-15));
        if dp.eta > 1e-6 {
            prop_assert!(dp.e0 > floor);
        }
    }
}

#[test]
fn ground_energy_equals_hbar_omega_for_matched_modes() {
    let dp = derive_decoupled(&OscillatorParams::new(1.0, 4.0, 2.0, 8.0, 0.0)).unwrap();
    assert!(dp.eta.abs() < 1e-15);
    assert!((dp.e0 - dp.hbar * dp.omega).abs() < 1e-15);
}
