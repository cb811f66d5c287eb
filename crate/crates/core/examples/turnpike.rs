//! Facility plus turnpike: fixed and variable length, on a hand-made set and
//! a generated one.
//!
//! cargo run --example turnpike

use highway_center::generate::{generate, Family};
use highway_center::geom::Point;
use highway_center::metric::HighwayKind;
use highway_center::problem::{Instance, LengthMode};
use highway_center::turnpike::{rectilinear_1center, solve_turnpike};

fn report(label: &str, inst: &Instance) -> highway_center::Result<()> {
    let sol = solve_turnpike(inst)?;
    let (_, walk_only) = rectilinear_1center(&inst.points)?;
    println!("{label}");
    println!(
        "  facility      ({:.4}, {:.4})",
        sol.facility.x, sol.facility.y
    );
    println!(
        "  turnpike end  ({:.4}, {:.4})  length {:.4}",
        sol.t.x, sol.t.y, sol.length
    );
    println!(
        "  radius        {:.6}  (walking only: {:.6})",
        sol.radius, walk_only
    );
    println!(
        "  partition     {} walk, {} ride",
        sol.partition.walkers.len(),
        sol.partition.riders.len()
    );
    Ok(())
}

fn main() -> highway_center::Result<()> {
    let two = vec![Point::new(0.0, 0.0), Point::new(10.0, 0.0)];
    report(
        "two clients, free length, v = 5",
        &Instance::new(
            two.clone(),
            HighwayKind::Turnpike,
            LengthMode::Variable,
            5.0,
        )?,
    )?;
    report(
        "two clients, length 5, v = 5",
        &Instance::new(two, HighwayKind::Turnpike, LengthMode::Fixed(5.0), 5.0)?,
    )?;

    let pts = generate(Family::Clustered, 200, 7)?;
    for length in [LengthMode::Variable, LengthMode::Fixed(30.0)] {
        let inst = Instance::new(pts.clone(), HighwayKind::Turnpike, length, 3.0)?;
        report(&format!("200 clustered clients, {length:?}, v = 3"), &inst)?;
    }
    Ok(())
}
