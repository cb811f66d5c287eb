//! Cross-checks the solvers against the brute-force oracles and runs the
//! verifier on their output.
//!
//! cargo run --release --example oracle_check

use highway_center::generate::{generate, Family};
use highway_center::metric::HighwayKind;
use highway_center::oracle::{brute_turnpike, grid_freeway, verify};
use highway_center::problem::{Instance, LengthMode};
use highway_center::solution::solve;

fn main() -> highway_center::Result<()> {
    for seed in 0..4 {
        let pts = generate(Family::Uniform, 6, seed)?;
        for length in [LengthMode::Variable, LengthMode::Fixed(15.0)] {
            for kind in [HighwayKind::Turnpike, HighwayKind::Freeway] {
                let inst = Instance::new(pts.clone(), kind, length, 2.0)?;
                let rec = solve(&inst)?;
                let oracle = match kind {
                    HighwayKind::Turnpike => brute_turnpike(&pts, 2.0, length)?,
                    HighwayKind::Freeway => grid_freeway(&pts, 2.0, length, 32)?,
                };
                let report = verify(&inst, &rec, false)?;
                println!(
                    "seed {seed} {kind:?} {:<12} solver {:10.6}  oracle {:10.6}  verify {}",
                    format!("{length:?}"),
                    rec.radius,
                    oracle,
                    if report.passed() { "pass" } else { "FAIL" }
                );
            }
        }
    }
    Ok(())
}
