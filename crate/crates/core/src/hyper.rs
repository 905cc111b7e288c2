//! Hyperbolic functions that stay finite for the large arguments reached in
//! sweeps (ħωβe^η of several hundred).

use std::f64::consts::LN_2;

/// Above this argument `sinh`/`cosh` are replaced by their exponential
/// asymptotes.
const ASYMPTOTIC: f64 = 30.0;

pub(crate) fn ln_sinh(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    if x > ASYMPTOTIC {
        x - LN_2 + (-(-2.0 * x).exp()).ln_1p()
    } else {
        x.sinh().ln()
    }
}

pub(crate) fn ln_cosh(x: f64) -> f64 {
    let x = x.abs();
    if x > ASYMPTOTIC {
        x - LN_2 + (-2.0 * x).exp().ln_1p()
    } else {
        x.cosh().ln()
    }
}

pub(crate) fn coth(x: f64) -> f64 {
    if x > ASYMPTOTIC {
        1.0
    } else {
        1.0 / x.tanh()
    }
}

pub(crate) fn csch(x: f64) -> f64 {
    // 2e^{-x} / (1 - e^{-2x}) without overflow
    2.0 * (-x).exp() / -(-2.0 * x).exp_m1()
}
