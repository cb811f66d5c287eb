//! Freeway with a prescribed direction: the linear-time solver swept over
//! orientations, compared with the free optimum.
//!
//! cargo run --example fixed_orientation

use std::f64::consts::PI;

use highway_center::freeway::{solve_freeway, solve_freeway_fixed_orientation};
use highway_center::generate::{generate, Family};
use highway_center::metric::HighwayKind;
use highway_center::problem::{Instance, LengthMode};

fn main() -> highway_center::Result<()> {
    let pts = generate(Family::Clustered, 60, 4)?;
    let v = 3.0;
    for length in [LengthMode::Variable, LengthMode::Fixed(25.0)] {
        let best = solve_freeway(&Instance::new(
            pts.clone(),
            HighwayKind::Freeway,
            length,
            v,
        )?)?;
        println!(
            "{length:?}: optimum {:.5} at {:.4} rad",
            best.radius, best.alpha
        );
        for k in 0..12 {
            let alpha = PI * k as f64 / 12.0;
            let sol = solve_freeway_fixed_orientation(&pts, alpha, length, v)?;
            let bar = "#".repeat((40.0 * best.radius / sol.radius) as usize);
            println!("  {alpha:6.3} rad  {:9.5}  {bar}", sol.radius);
        }
        let again = solve_freeway_fixed_orientation(&pts, best.alpha, length, v)?;
        println!("  at the optimal orientation: {:.5}", again.radius);
    }
    Ok(())
}
