//! Build the reduced density matrix by Gaussian algebra and take its purity.

use std::f64::consts::FRAC_PI_2;

use thermopurity::model::from_decoupled;
use thermopurity::{purity_closed, thermal, trace_product};

fn main() -> thermopurity::Result<()> {
    let (eta, theta, beta) = (1.0, FRAC_PI_2, 1.0);
    let dp = from_decoupled(eta, theta);

    // ψ(x1, x2; β) ψ(x1', x2; β), integrated over x2
    let rho = thermal::reduced_density_kernel(&dp, beta)?;
    println!("Tr ρ      = {:.15}", rho.trace()?);
    println!("Tr ρ²     = {:.15}", trace_product(&rho, &rho)?);
    println!("closed    = {:.15}", purity_closed(eta, theta, beta)?);
    println!("ρ(0.5, −0.2) = {:.12}", thermal::reduced_density(&dp, beta, 0.5, -0.2)?);

    let full = thermal::density_kernel(&dp, beta)?;
    println!("thermal kernel has {} variables; ρ(0,0; 0,0) = {:.12}", full.dim(), full.evaluate(&[0.0; 4]));
    Ok(())
}
