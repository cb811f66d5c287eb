//! Empirical scaling of the solvers: median wall time per input size,
//! ratios between consecutive sizes and a least-squares exponent.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::freeway::solve_freeway;
use crate::generate::{generate, Family, EXTENT};
use crate::metric::HighwayKind;
use crate::problem::{Instance, LengthMode};
use crate::turnpike::solve_turnpike;

/// Highway length used by fixed-length benchmark instances.
pub const BENCH_LENGTH: f64 = EXTENT / 10.0;
/// Highway speed used by benchmark instances.
pub const BENCH_SPEED: f64 = 2.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    TurnpikeVl,
    TurnpikeFl,
    FreewayVl,
    FreewayFl,
}

impl Variant {
    pub const ALL: [Variant; 4] = [
        Variant::TurnpikeVl,
        Variant::TurnpikeFl,
        Variant::FreewayVl,
        Variant::FreewayFl,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Variant::TurnpikeVl => "turnpike-vl",
            Variant::TurnpikeFl => "turnpike-fl",
            Variant::FreewayVl => "freeway-vl",
            Variant::FreewayFl => "freeway-fl",
        }
    }

    pub fn kind(self) -> HighwayKind {
        match self {
            Variant::TurnpikeVl | Variant::TurnpikeFl => HighwayKind::Turnpike,
            Variant::FreewayVl | Variant::FreewayFl => HighwayKind::Freeway,
        }
    }

    pub fn length(self) -> LengthMode {
        match self {
            Variant::TurnpikeVl | Variant::FreewayVl => LengthMode::Variable,
            Variant::TurnpikeFl | Variant::FreewayFl => LengthMode::Fixed(BENCH_LENGTH),
        }
    }

    /// Benchmark instance with `n` uniform points.
    pub fn instance(self, n: usize, seed: u64) -> Result<Instance> {
        Instance::new(
            generate(Family::Uniform, n, seed)?,
            self.kind(),
            self.length(),
            BENCH_SPEED,
        )
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Variant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown variant `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub n: usize,
    pub radius: f64,
    pub median_seconds: f64,
    /// Median time divided by the previous row's.
    pub ratio: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub variant: Variant,
    pub seed: u64,
    pub repetitions: usize,
    pub rows: Vec<BenchRow>,
    /// Slope of log time against log size.
    pub exponent: Option<f64>,
}

fn solve_radius(inst: &Instance) -> Result<f64> {
    Ok(match inst.kind {
        HighwayKind::Turnpike => solve_turnpike(inst)?.radius,
        HighwayKind::Freeway => solve_freeway(inst)?.radius,
    })
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    let m = xs.len() / 2;
    if xs.len() % 2 == 1 {
        xs[m]
    } else {
        (xs[m - 1] + xs[m]) / 2.0
    }
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn fit_exponent(xs: &[f64], ys: &[f64]) -> Option<f64> {
    if xs.len() < 2 || xs.len() != ys.len() || ys.iter().any(|&y| y <= 0.0) {
        return None;
    }
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let k = lx.len() as f64;
    let (mx, my) = (lx.iter().sum::<f64>() / k, ly.iter().sum::<f64>() / k);
    let sxx: f64 = lx.iter().map(|x| (x - mx).powi(2)).sum();
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// Times `variant` on uniform instances of each size.
pub fn bench(
    variant: Variant,
    sizes: &[usize],
    repetitions: usize,
    seed: u64,
) -> Result<BenchReport> {
    if sizes.is_empty() {
        return Err(Error::InvalidArgument("no sizes given".into()));
    }
    if sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument(
            "sizes must be strictly ascending".into(),
        ));
    }
    if repetitions == 0 {
        return Err(Error::InvalidArgument(
            "at least one repetition is needed".into(),
        ));
    }
    let mut rows: Vec<BenchRow> = Vec::with_capacity(sizes.len());
    for &n in sizes {
        let inst = variant.instance(n, seed)?;
        let mut radius = 0.0;
        let mut times = Vec::with_capacity(repetitions);
        for _ in 0..repetitions {
            let start = Instant::now();
            radius = solve_radius(&inst)?;
            times.push(start.elapsed().as_secs_f64());
        }
        let median_seconds = median(times);
        let ratio = rows.last().map(|r| median_seconds / r.median_seconds);
        rows.push(BenchRow {
            n,
            radius,
            median_seconds,
            ratio,
        });
    }
    let ns: Vec<f64> = rows.iter().map(|r| r.n as f64).collect();
    let ts: Vec<f64> = rows.iter().map(|r| r.median_seconds).collect();
    Ok(BenchReport {
        variant,
        seed,
        repetitions,
        exponent: fit_exponent(&ns, &ts),
        rows,
    })
}
