//! Reproducible point-set generators. All randomness comes from a ChaCha8
//! stream seeded by the caller.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::error::{Error, Result};
use crate::geom::Point;

/// Side of the square the generators draw from.
pub const EXTENT: f64 = 100.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Uniform in the square.
    Uniform,
    /// Gaussian blobs around a few uniform centers.
    Clustered,
    /// All points on one horizontal line.
    Collinear,
    /// Row-major lattice points.
    Grid,
    /// Few distinct integer locations, each repeated.
    DuplicateHeavy,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Uniform,
        Family::Clustered,
        Family::Collinear,
        Family::Grid,
        Family::DuplicateHeavy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Uniform => "uniform",
            Family::Clustered => "clustered",
            Family::Collinear => "collinear",
            Family::Grid => "grid",
            Family::DuplicateHeavy => "duplicate-heavy",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// `n` points of the given family; identical for identical arguments.
pub fn generate(family: Family, n: usize, seed: u64) -> Result<Vec<Point>> {
    if n == 0 {
        return Err(Error::TooFewPoints { needed: 1, got: 0 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let uniform =
        |rng: &mut ChaCha8Rng| Point::new(rng.gen_range(0.0..EXTENT), rng.gen_range(0.0..EXTENT));
    let points = match family {
        Family::Uniform => (0..n).map(|_| uniform(&mut rng)).collect(),
        Family::Clustered => {
            let k = ((n as f64).sqrt() / 2.0).round().max(1.0) as usize;
            let centers: Vec<Point> = (0..k).map(|_| uniform(&mut rng)).collect();
            let noise = Normal::new(0.0, EXTENT / 30.0).expect("positive deviation");
            (0..n)
                .map(|_| {
                    let c = *centers.choose(&mut rng).expect("at least one center");
                    c + Point::new(noise.sample(&mut rng), noise.sample(&mut rng))
                })
                .collect()
        }
        Family::Collinear => {
            let y = rng.gen_range(0.0..EXTENT);
            (0..n)
                .map(|_| Point::new(rng.gen_range(0.0..EXTENT), y))
                .collect()
        }
        Family::Grid => {
            let side = (n as f64).sqrt().ceil() as usize;
            let step = EXTENT / side as f64;
            let origin = Point::new(rng.gen_range(0..10) as f64, rng.gen_range(0..10) as f64);
            (0..n)
                .map(|i| origin + Point::new((i % side) as f64 * step, (i / side) as f64 * step))
                .collect()
        }
        Family::DuplicateHeavy => {
            let distinct = (n / 4).max(1);
            let sites: Vec<Point> = (0..distinct)
                .map(|_| Point::new(rng.gen_range(0..=100) as f64, rng.gen_range(0..=100) as f64))
                .collect();
            (0..n)
                .map(|_| *sites.choose(&mut rng).expect("at least one site"))
                .collect()
        }
    };
    Ok(points)
}
