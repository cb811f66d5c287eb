//! Writes SVG drawings of a turnpike and a freeway solution.
//!
//! cargo run --example plot -- [output-directory]

use std::path::PathBuf;

use highway_center::generate::{generate, Family};
use highway_center::metric::HighwayKind;
use highway_center::plot::plot;
use highway_center::problem::{Instance, LengthMode};
use highway_center::solution::solve;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(std::env::temp_dir);
    let pts = generate(Family::Clustered, 40, 12)?;
    for (kind, length, name) in [
        (
            HighwayKind::Turnpike,
            LengthMode::Variable,
            "turnpike_vl.svg",
        ),
        (
            HighwayKind::Turnpike,
            LengthMode::Fixed(30.0),
            "turnpike_fl.svg",
        ),
        (HighwayKind::Freeway, LengthMode::Variable, "freeway_vl.svg"),
        (
            HighwayKind::Freeway,
            LengthMode::Fixed(30.0),
            "freeway_fl.svg",
        ),
    ] {
        let inst = Instance::new(pts.clone(), kind, length, 2.5)?;
        let rec = solve(&inst)?;
        let path = dir.join(name);
        std::fs::write(&path, plot(&inst, &rec)?)?;
        println!("{} (radius {:.4})", path.display(), rec.radius);
    }
    Ok(())
}
