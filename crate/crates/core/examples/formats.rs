//! Instance and solution documents: generate, emit, parse back, solve and
//! verify, all through the JSON format.
//!
//! cargo run --example formats

use highway_center::generate::{generate, Family};
use highway_center::io::{emit_instance, emit_solution, parse_instance, parse_solution};
use highway_center::metric::HighwayKind;
use highway_center::oracle::verify;
use highway_center::problem::{Instance, LengthMode};
use highway_center::solution::solve;

fn main() -> highway_center::Result<()> {
    let inst = Instance::new(
        generate(Family::DuplicateHeavy, 12, 5)?,
        HighwayKind::Freeway,
        LengthMode::Fixed(12.0),
        3.0,
    )?;
    let text = emit_instance(&inst);
    println!("{text}");
    let back = parse_instance(&text)?;
    assert_eq!(back, inst);

    let rec = solve(&back)?;
    let doc = emit_solution(&rec);
    println!("{doc}");
    let rec_back = parse_solution(&doc)?;
    let report = verify(&back, &rec_back, true)?;
    println!("verification passed: {}", report.passed());

    match parse_instance(
        r#"{"points":[[0,0]], "kind":"turnpike", "length":{"mode":"variable"}, "speed":0.5}"#,
    ) {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
