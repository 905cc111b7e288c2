//! Purity across temperature, with its low- and high-temperature limits.

use std::f64::consts::FRAC_PI_3;

use thermopurity::{purity_closed, purity_high_t, purity_low_t};

fn main() -> thermopurity::Result<()> {
    let (eta, theta) = (1.0, FRAC_PI_3);
    println!("η = {eta}, θ = π/3");
    println!("{:>8}  {:>10}  {:>10}", "β", "purity", "1 − P");
    for beta in [1e-3, 0.1, 0.5, 1.0, 2.0, 5.0, 20.0, 50.0] {
        let p = purity_closed(eta, theta, beta)?;
        // the oscillator has infinitely many levels, so S_lin reduces to 1 − P
        println!("{beta:>8}  {p:>10.6}  {:>10.6}", 1.0 - p);
    }
    let low = purity_low_t(eta, theta);
    println!("β → ∞ limit {:.6}", low.value);
    println!("β → 0 limit {:.6}", purity_high_t(eta, theta));
    println!("high-T at η equals low-T at 2η: {:.6}", purity_low_t(2.0 * eta, theta).value);
    Ok(())
}
