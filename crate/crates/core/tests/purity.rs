use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use thermopurity::model::{derive_decoupled, from_decoupled, OscillatorParams};
use thermopurity::oracle::{purity_quadrature, Grid2D};
use thermopurity::purity::*;
use thermopurity::thermal::{self, WavefunctionCoeffs};
use thermopurity::Error;

/// Independent rewrite: `P⁻² = 1 + c²s²(r + 1/r − 2)` with
/// `r = e^{2η} tanh(βe^η) / tanh(βe^{−η})` and half-angle `c, s`.
fn purity_oracle(eta: f64, theta: f64, beta: f64) -> f64 {
    let (s, c) = (0.5 * theta).sin_cos();
    let r = (2.0 * eta).exp() * (beta * eta.exp()).tanh() / (beta * (-eta).exp()).tanh();
    1.0 / (1.0 + (c * s).powi(2) * (r + 1.0 / r - 2.0)).sqrt()
}

#[test]
fn closed_form_examples() {
    for theta in [0.0, 1.0, 3.0] {
        for beta in [0.1, 1.0, 30.0] {
            assert_eq!(purity_closed(0.0, theta, beta).unwrap(), 1.0);
        }
    }
    assert!((purity_closed(2f64.ln(), FRAC_PI_2, 50.0).unwrap() - 0.8).abs() < 1e-9);
    let p = purity_closed(1.0, FRAC_PI_2, 1.0).unwrap();
    assert!((p - 0.4185).abs() < 5e-4);
    let grid = Grid2D::new(8.0, 257).unwrap();
    let q = purity_quadrature(&from_decoupled(1.0, FRAC_PI_2), 1.0, &grid).unwrap();
    assert!((q.value - p).abs() < 1e-6);
    assert!(matches!(purity_closed(1.0, 1.0, 0.0), Err(Error::NonPositiveBeta(_))));
}

#[test]
fn closed_form_matches_rewritten_form() {
    for i in 0..20 {
        for j in 0..20 {
            for beta in [0.05, 0.4, 1.0, 3.0, 20.0] {
                let (eta, theta) = (-3.0 + 6.0 * i as f64 / 19.0, 2.0 * PI * j as f64 / 19.0);
                let (a, b) = (purity_closed(eta, theta, beta).unwrap(), purity_oracle(eta, theta, beta));
                assert!((a - b).abs() < 1e-12, "({eta}, {theta}, {beta}): {a} vs {b}");
            }
        }
    }
}

#[test]
fn coefficient_path_examples() {
    let pure = WavefunctionCoeffs {
        alpha_tilde: 0.4,
        beta_tilde: 1.3,
        gamma_tilde: 0.0,
        log_norm: 0.0,
    };
    assert_eq!(purity_from_coeffs(&pure).unwrap(), 1.0);
    let wc = thermal::wavefunction_coeffs(&from_decoupled(2f64.ln(), FRAC_PI_2), 50.0).unwrap();
    assert!((purity_from_coeffs(&wc).unwrap() - 0.8).abs() < 1e-9);
    let wc = thermal::wavefunction_coeffs(&from_decoupled(2.0, FRAC_PI_3), 1.0).unwrap();
    assert!((purity_from_coeffs(&wc).unwrap() - purity_closed(2.0, FRAC_PI_3, 1.0).unwrap()).abs() < 1e-12);
    let singular = WavefunctionCoeffs {
        alpha_tilde: 1.0,
        beta_tilde: 1.0,
        gamma_tilde: 1.0,
        log_norm: 0.0,
    };
    assert!(matches!(purity_from_coeffs(&singular), Err(Error::DegenerateKernel(_))));
}

#[test]
fn low_temperature_examples() {
    assert!((purity_low_t(0.0, FRAC_PI_2).value - 1.0).abs() < 1e-15);
    let id = purity_low_t(2f64.ln(), FRAC_PI_2);
    assert!((id.value - 0.8).abs() < 1e-14 && !id.degenerate_angle);
    assert!((id.value - 2.0 / (2.0f64 * 17.0 / 8.0 + 2.0).sqrt()).abs() < 1e-14);
    assert!((purity_low_t(1.0, FRAC_PI_3).value - purity_closed(1.0, FRAC_PI_3, 50.0).unwrap()).abs() < 1e-6);
    for theta in [0.0, PI, 2.0 * PI] {
        let p = purity_low_t(1.5, theta);
        assert!(p.degenerate_angle);
        assert_eq!(p.value, 1.0);
        assert!((purity_closed(1.5, theta, 50.0).unwrap() - 1.0).abs() < 1e-12);
    }
}

#[test]
fn high_temperature_examples() {
    for theta in [0.0, 1.0, 4.0] {
        assert_eq!(purity_high_t(0.0, theta), 1.0);
    }
    assert!((purity_high_t(1.0, FRAC_PI_3) - purity_low_t(2.0, FRAC_PI_3).value).abs() < 1e-12);
    let dp = derive_decoupled(&OscillatorParams::new(1.0, 1.0, 1.0, 1.0, 1.0)).unwrap();
    assert!((purity_high_t(dp.eta, dp.theta) - 0.75f64.sqrt()).abs() < 1e-12);
}

#[test]
fn high_temperature_purity_from_couplings() {
    let mut rng = StdRng::seed_from_u64(21);
    for _ in 0..50 {
        let (c1, c2) = (rng.gen_range(0.2..5.0), rng.gen_range(0.2..5.0));
        let c3 = rng.gen_range(-0.95..0.95) * 2.0 * f64::sqrt(c1 * c2);
        let (m1, m2) = (rng.gen_range(0.2..5.0), rng.gen_range(0.2..5.0));
        let dp = derive_decoupled(&OscillatorParams::new(m1, m2, c1, c2, c3)).unwrap();
        let expected = ((c1 * c2 - 0.25 * c3 * c3) / (c1 * c2)).sqrt();
        assert!((purity_high_t(dp.eta, dp.theta) - expected).abs() < 1e-12);
    }
}

#[test]
fn identical_particle_examples() {
    for beta in [0.01, 1.0, 100.0] {
        assert!((purity_identical(1.0, 0.0, 1.0, 1.0, beta).unwrap() - 1.0).abs() < 1e-15);
    }
    assert!((purity_identical(1.0, 30.0 / 17.0, 1.0, 1.0, 50.0).unwrap() - 0.8).abs() < 1e-6);
    for (c1, c3, m1, hbar, beta) in [(1.0, 1.0, 1.0, 1.0, 1.0), (2.0, -1.5, 0.5, 0.7, 0.3), (0.5, 0.9, 3.0, 1.2, 4.0)] {
        let dp = derive_decoupled(&OscillatorParams::new(m1, m1, c1, c1, c3).with_hbar(hbar)).unwrap();
        let direct = purity_identical(c1, c3, m1, hbar, beta).unwrap();
        let closed = purity_closed(dp.eta, FRAC_PI_2, hbar * dp.omega * beta).unwrap();
        assert!((direct - closed).abs() < 1e-10, "{direct} vs {closed}");
    }
    assert!(matches!(
        purity_identical(1.0, 2.0, 1.0, 1.0, 1.0),
        Err(Error::UnstablePotential { .. })
    ));
}

#[test]
fn linear_entropy_examples() {
    for d in [2, 3, 10] {
        assert_eq!(linear_entropy(1.0, d).unwrap(), 0.0);
        assert!((linear_entropy(1.0 / f64::from(d), d).unwrap() - 1.0).abs() < 1e-15);
    }
    assert!((linear_entropy(0.8, 2).unwrap() - 0.4).abs() < 1e-15);
    assert!(matches!(linear_entropy(0.3, 2), Err(Error::OutOfRange { .. })));
    assert!(matches!(linear_entropy(1.1, 2), Err(Error::OutOfRange { .. })));
    assert!(linear_entropy(0.9, 1).is_err());
}

fn wide_grid() -> impl Iterator<Item = (f64, f64, f64)> {
    (0..20).flat_map(|i| {
        (0..20).flat_map(move |j| {
            (0..10).map(move |k| {
                (
                    -4.0 + 8.0 * i as f64 / 19.0,
                    2.0 * PI * j as f64 / 19.0,
                    0.1 * 500f64.powf(k as f64 / 9.0),
                )
            })
        })
    })
}

#[test]
fn purity_lies_in_unit_interval() {
    for (eta, theta, beta) in wide_grid() {
        let p = purity_closed(eta, theta, beta).unwrap();
        assert!(p > 0.0 && p <= 1.0, "({eta}, {theta}, {beta}) -> {p}");
    }
}

#[test]
fn symmetries_hold() {
    for (eta, theta, beta) in wide_grid() {
        let p = purity_closed(eta, theta, beta).unwrap();
        assert!((p - purity_closed(-eta, theta, beta).unwrap()).abs() < 1e-12);
        assert!((p - purity_closed(eta, 2.0 * PI - theta, beta).unwrap()).abs() < 1e-12);
        assert!((p - purity_closed(eta, PI - theta, beta).unwrap()).abs() < 1e-12);
    }
}

#[test]
fn purity_grows_as_temperature_drops() {
    for i in 0..20 {
        for j in 0..20 {
            let eta = -4.0 + 8.0 * (i as f64 + 0.5) / 20.0;
            let theta = 0.05 + (2.0 * PI - 0.1) * j as f64 / 19.0;
            let mut last = 0.0;
            for k in 0..200 {
                let p = purity_closed(eta, theta, 0.01 * 1.05f64.powi(k)).unwrap();
                assert!(p >= last - 1e-14, "({eta}, {theta}) drops at step {k}");
                last = p;
            }
        }
    }
}

#[test]
fn coefficient_path_agrees_everywhere() {
    for (eta, theta, beta) in wide_grid() {
        let wc = thermal::wavefunction_coeffs(&from_decoupled(eta, theta), beta).unwrap();
        let (a, b) = (purity_from_coeffs(&wc).unwrap(), purity_closed(eta, theta, beta).unwrap());
        assert!((a - b).abs() < 1e-12, "({eta}, {theta}, {beta})");
    }
}

#[test]
fn temperature_limits() {
    for i in 0..20 {
        for j in 0..20 {
            let eta = -2.0 + 4.0 * i as f64 / 19.0;
            let theta = 0.05 + (2.0 * PI - 0.1) * j as f64 / 19.0;
            let cold = purity_closed(eta, theta, 50.0).unwrap();
            assert!((cold - purity_low_t(eta, theta).value).abs() < 1e-6);
            let hot = purity_closed(eta, theta, 1e-3).unwrap();
            assert!((hot - purity_high_t(eta, theta)).abs() < 1e-4);
            assert!((purity_high_t(eta, theta) - purity_low_t(2.0 * eta, theta).value).abs() < 1e-12);
        }
    }
}

#[test]
fn uncoupled_systems_are_pure() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..50 {
        let p = OscillatorParams::new(
            rng.gen_range(0.1..10.0),
            rng.gen_range(0.1..10.0),
            rng.gen_range(0.1..10.0),
            rng.gen_range(0.1..10.0),
            0.0,
        );
        let dp = derive_decoupled(&p).unwrap();
        for beta in [0.1, 1.0, 10.0] {
            assert!((purity_closed(dp.eta, dp.theta, beta).unwrap() - 1.0).abs() < 1e-12);
        }
    }
}

#[test]
fn strong_coupling_drives_purity_to_zero() {
    for (c1, c2) in [(1.0, 1.0), (1.0, 2.0), (3.0, 0.5)] {
        let values: Vec<f64> = [1e-2, 1e-3, 1e-4, 1e-5, 1e-6]
            .iter()
            .map(|delta| {
                let c3 = 2.0 * f64::sqrt(c1 * c2) * (1.0 - delta);
                let dp = derive_decoupled(&OscillatorParams::new(1.0, 1.0, c1, c2, c3)).unwrap();
                purity_closed(dp.eta, dp.theta, 1.0).unwrap()
            })
            .collect();
        assert!(values.windows(2).all(|w| w[1] < w[0]), "{values:?}");
        assert!(values[4] < 0.05, "{values:?}");
    }
}

#[test]
fn point_constructor() {
    let p = PurityPoint::evaluate(1.0, 2.0, 3.0).unwrap();
    assert_eq!(p.value, purity_closed(1.0, 2.0, 3.0).unwrap());
    assert!(PurityPoint::evaluate(1.0, 2.0, -3.0).is_err());
}

#[test]
fn extreme_arguments_stay_finite() {
    for (eta, beta) in [(6.0, 500.0), (-6.0, 500.0), (6.0, 1e-6), (0.5, 1e6)] {
        let p = purity_closed(eta, 1.0, beta).unwrap();
        assert!(p.is_finite() && p > 0.0 && p <= 1.0, "({eta}, {beta}) -> {p}");
    }
}

proptest! {
    #[test]
    fn range_and_symmetry(eta in -5.0f64..5.0, theta in 0.0f64..(2.0 * PI), beta in 1e-3f64..100.0) {
        let p = purity_closed(eta, theta, beta).unwrap();
        prop_assert!(p > 0.0 && p <= 1.0);
        prop_assert!((p - purity_closed(-eta, PI - theta, beta).unwrap()).abs() < 1e-12);
        prop_assert!((p - purity_oracle(eta, theta, beta)).abs() < 1e-12);
    }
}
