//! Cross-check the closed-form purity with a brute-force grid integral.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3};

use thermopurity::model::from_decoupled;
use thermopurity::oracle::{purity_quadrature, schrodinger_residual, Grid2D};
use thermopurity::purity_closed;

fn main() -> thermopurity::Result<()> {
    let grid = Grid2D::new(8.0, 257)?;
    for (eta, theta, beta) in [(1.0, FRAC_PI_2, 1.0), (2f64.ln(), FRAC_PI_3, 0.5), (0.5, 1.0, 5.0)] {
        let dp = from_decoupled(eta, theta);
        let q = purity_quadrature(&dp, beta, &grid)?;
        let exact = purity_closed(eta, theta, beta)?;
        let residual = schrodinger_residual(&dp, beta.max(0.5), &grid)?;
        println!(
            "η={eta:.3} θ={theta:.3} β={beta}: grid {:.12}, closed {exact:.12}, |Δ| {:.1e}, residual {residual:.1e}",
            q.value,
            (q.value - exact).abs()
        );
    }
    Ok(())
}
