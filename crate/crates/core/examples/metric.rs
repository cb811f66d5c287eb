//! The time metric itself: walking, turnpike and freeway travel times,
//! entry points, the critical slope and the shortest-path-map regions.
//!
//! cargo run --example metric

use highway_center::geom::Point;
use highway_center::metric::{critical_angle, entry_point, spm_region, turnpike_time, Highway};

fn main() -> highway_center::Result<()> {
    let v = 2.0;
    let f = Point::new(0.0, 0.0);
    let freeway = Highway::freeway(Point::new(-2.0, 0.0), Point::new(10.0, 0.0), v)?;
    println!("critical slope for v = {v}: {:.6} rad", critical_angle(v)?);
    println!("freeway (-2,0)-(10,0), facility at the origin");
    for p in [
        Point::new(5.0, 3.0),
        Point::new(-1.0, 1.0),
        Point::new(12.0, -4.0),
        Point::new(0.5, 8.0),
    ] {
        let e = entry_point(p, f, &freeway)?;
        println!(
            "  ({:5.1}, {:5.1})  walk {:6.3}  time {:6.3}  via {:?} at ({:.3}, {:.3})",
            p.x,
            p.y,
            p.l1(f),
            e.time,
            e.mode,
            e.entry.x,
            e.entry.y
        );
    }

    let tilted = Highway::freeway(Point::new(0.0, 0.0), Point::new(8.0, 2.0), v)?;
    println!("tilted freeway (0,0)-(8,2), facility at (4,1)");
    for p in [
        Point::new(6.0, 4.0),
        Point::new(9.0, -1.0),
        Point::new(1.0, 3.0),
    ] {
        let d = spm_region(p, Point::new(4.0, 1.0), &tilted)?;
        println!(
            "  ({:.1}, {:.1})  {:?} region {:?}  time {:.4}  table agrees: {}",
            p.x, p.y, d.regime, d.region, d.actual.time, !d.discrepancy
        );
    }

    let t = Point::new(10.0, 0.0);
    let f = Point::new(5.0 / 3.0, 0.0);
    println!("turnpike (10,0) -> (5/3,0), v = 5");
    for p in [
        Point::new(0.0, 0.0),
        Point::new(10.0, 0.0),
        Point::new(8.0, 2.0),
    ] {
        println!(
            "  ({:.1}, {:.1})  time {:.4}",
            p.x,
            p.y,
            turnpike_time(p, f, t, f, 5.0)?
        );
    }
    Ok(())
}
