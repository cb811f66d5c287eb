//! Empirical running-time scaling of every solver variant.
//!
//! cargo run --release --example scaling

use highway_center::bench::{bench, Variant};

fn main() -> highway_center::Result<()> {
    for (variant, sizes) in [
        (Variant::TurnpikeVl, vec![1000, 2000, 4000, 8000]),
        (Variant::TurnpikeFl, vec![250, 500, 1000]),
        (Variant::FreewayVl, vec![1000, 2000, 4000, 8000]),
        (Variant::FreewayFl, vec![1000, 2000, 4000, 8000]),
    ] {
        let report = bench(variant, &sizes, 3, 1)?;
        println!("{variant}");
        for row in &report.rows {
            let ratio = row.ratio.map_or(String::from("-"), |r| format!("{r:.2}"));
            println!(
                "  n = {:5}  median {:9.3} ms  ratio {ratio}",
                row.n,
                row.median_seconds * 1e3
            );
        }
        if let Some(k) = report.exponent {
            println!("  fitted exponent {k:.2}");
        }
    }
    Ok(())
}
