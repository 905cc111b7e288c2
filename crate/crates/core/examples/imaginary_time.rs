//! Evolve a narrow Gaussian in imaginary time and watch it settle into ψ₀.

use std::f64::consts::FRAC_PI_3;

use thermopurity::model::from_decoupled;
use thermopurity::oracle::{Grid2D, ImaginaryTimePropagator, DEFAULT_BETA_START};
use thermopurity::verify::ground_state_deviation;

fn main() -> thermopurity::Result<()> {
    let dp = from_decoupled(1.0, FRAC_PI_3);
    let grid = Grid2D::new(8.0, 129)?;
    let mut prop = ImaginaryTimePropagator::new(&dp, &grid, DEFAULT_BETA_START, 20.0, 20_000)?;
    let mut next_report = 1.0;
    while prop.step() {
        if prop.beta() >= next_report {
            let field = prop.field();
            println!(
                "β = {:>5.1}: norm {:.6}, max deviation from ψ₀ {:.2e}",
                prop.beta(),
                field.norm_sq().sqrt(),
                ground_state_deviation(&dp, &field)
            );
            next_report *= 2.0;
        }
    }
    println!("final deviation {:.2e}", ground_state_deviation(&dp, &prop.field()));
    Ok(())
}
