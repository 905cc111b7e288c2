//! Map two coupled oscillators onto independent normal modes.

use thermopurity::model::{derive_decoupled, OscillatorParams};

fn main() -> thermopurity::Result<()> {
    let params = OscillatorParams::new(2.0, 1.0, 3.0, 2.0, 1.0);
    let dp = derive_decoupled(&params)?;
    let (w_plus, w_minus) = dp.mode_frequencies();

    println!("masses m1={} m2={}, springs C1={} C2={} C3={}", params.m1, params.m2, params.c1, params.c2, params.c3);
    println!("mixing angle θ = {:.6}", dp.theta);
    println!("coupling η    = {:.6}", dp.eta);
    println!("mode frequencies ω·e^±η = {w_plus:.6}, {w_minus:.6}");
    println!("ground energy E₀ = ħω cosh η = {:.6}", dp.e0);

    // the normal coordinates diagonalize the potential
    let (x1, x2) = (0.3, -0.8);
    let (big1, big2) = dp.to_normal(x1, x2);
    println!("V(x1, x2) = {:.12}", params.potential(x1, x2));
    println!("V(X1, X2) = {:.12}  at X = ({big1:.4}, {big2:.4})", dp.potential(x1, x2));

    let back = dp.couplings();
    println!("round trip C3 = {:.12}", back.c3);
    Ok(())
}
