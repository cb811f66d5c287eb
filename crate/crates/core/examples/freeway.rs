//! Facility plus freeway: the rotating-calipers solver in both length modes,
//! with the orientation intervals it sweeps.
//!
//! cargo run --example freeway

use highway_center::freeway::{orientation_intervals, solve_freeway};
use highway_center::generate::{generate, Family};
use highway_center::geom::Point;
use highway_center::metric::{Extent, HighwayKind};
use highway_center::problem::{Instance, LengthMode};

fn main() -> highway_center::Result<()> {
    let cases = [
        (
            "two clients, line, v = 5",
            vec![Point::new(0.0, 0.0), Point::new(10.0, 0.0)],
            LengthMode::Variable,
            5.0,
        ),
        (
            "two clients, length 4, v = 5",
            vec![Point::new(0.0, 0.0), Point::new(10.0, 0.0)],
            LengthMode::Fixed(4.0),
            5.0,
        ),
        (
            "500 uniform clients, line, v = 2",
            generate(Family::Uniform, 500, 1)?,
            LengthMode::Variable,
            2.0,
        ),
        (
            "500 uniform clients, length 20, v = 2",
            generate(Family::Uniform, 500, 1)?,
            LengthMode::Fixed(20.0),
            2.0,
        ),
    ];
    for (label, pts, length, v) in cases {
        let intervals = orientation_intervals(&pts, v)?;
        let sol = solve_freeway(&Instance::new(pts, HighwayKind::Freeway, length, v)?)?;
        let h = sol.highway;
        println!("{label}");
        println!("  orientation intervals  {}", intervals.len());
        println!("  radius                 {:.6}", sol.radius);
        println!("  orientation            {:.6} rad", sol.alpha);
        println!(
            "  facility               ({:.4}, {:.4})",
            sol.facility.x, sol.facility.y
        );
        match h.extent {
            Extent::Segment => println!(
                "  segment                ({:.4}, {:.4}) - ({:.4}, {:.4})",
                h.a.x, h.a.y, h.b.x, h.b.y
            ),
            Extent::Line => println!("  line, span used        {:.4}", sol.length),
        }
    }
    Ok(())
}
