//! Two identical particles: the purity saturates at 4/5 when η = ln 2.

use thermopurity::model::{derive_decoupled, OscillatorParams};
use thermopurity::{purity_closed, purity_identical};

fn main() -> thermopurity::Result<()> {
    let (c1, c3, m1, hbar) = (1.0, 30.0 / 17.0, 1.0, 1.0);
    let dp = derive_decoupled(&OscillatorParams::new(m1, m1, c1, c1, c3).with_hbar(hbar))?;
    println!("C3/C1 = 30/17 gives η = {:.12} (ln 2 = {:.12})", dp.eta, 2f64.ln());
    for beta in [0.1, 1.0, 5.0, 50.0] {
        let direct = purity_identical(c1, c3, m1, hbar, beta)?;
        let closed = purity_closed(dp.eta, dp.theta, hbar * dp.omega * beta)?;
        println!("β = {beta:>5}: {direct:.10}  (general formula {closed:.10})");
    }
    Ok(())
}
