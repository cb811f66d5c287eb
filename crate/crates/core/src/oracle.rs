//! Brute-force reference values, independent of the solvers.
//!
//! None of these functions use the basic-problem solvers or the freeway
//! entry-point routine, so agreement with the solvers is evidence rather
//! than a restatement.
//!
//! For the turnpike, a partition `(W, H)` with the turnpike running from
//! `t = f + D (cos th, sin th)` to the facility `f` is feasible at radius `r`
//! iff, in the rotated frame where walking is L∞, every coordinate `k`
//! satisfies
//! `max(W_k, H_k - D U_k + D/v) - min(W_k, H_k - D U_k - D/v) <= 2 r`,
//! with `U` the rotated unit direction. For fixed `th` this is a maximum of
//! lines in `D`, minimized exactly over its breakpoints; `th` is searched on
//! a dense grid with golden-section refinement.

use std::f64::consts::{PI, SQRT_2, TAU};

use serde::{Deserialize, Serialize};

use crate::error::{check_length, check_speed, Error, Result};
use crate::geom::{to_linf_frame, Frame, Point, EPS};
use crate::metric::{freeway_time, turnpike_time, Extent, Highway, HighwayKind};
use crate::problem::{Instance, LengthMode};
use crate::solution::SolutionRecord;

pub const BRUTE_TURNPIKE_MAX: usize = 12;
pub const GRID_FREEWAY_MAX: usize = 8;
/// Resolution used by [`verify`] for the freeway grid oracle.
pub const VERIFY_GRID_RESOLUTION: usize = 64;

const THETA_SAMPLES: usize = 512;
const THETA_REFINE: usize = 3;
const GOLDEN_ITERS: usize = 60;

fn check_points(points: &[Point]) -> Result<()> {
    if points.is_empty() {
        return Err(Error::EmptySet);
    }
    for p in points {
        p.check()?;
    }
    Ok(())
}

fn check_mode(length: LengthMode) -> Result<()> {
    if let LengthMode::Fixed(ell) = length {
        check_length(ell)?;
    }
    Ok(())
}

/// Coordinate-wise extremes of a nonempty set.
#[derive(Debug, Clone, Copy)]
struct Bounds {
    lo: [f64; 2],
    hi: [f64; 2],
}

impl Bounds {
    fn of<'a>(points: impl IntoIterator<Item = &'a Point>) -> Option<Bounds> {
        let mut it = points.into_iter();
        let p = it.next()?;
        let mut b = Bounds {
            lo: [p.x, p.y],
            hi: [p.x, p.y],
        };
        for p in it {
            b.lo = [b.lo[0].min(p.x), b.lo[1].min(p.y)];
            b.hi = [b.hi[0].max(p.x), b.hi[1].max(p.y)];
        }
        Some(b)
    }

    fn half_span(&self) -> f64 {
        (self.hi[0] - self.lo[0]).max(self.hi[1] - self.lo[1]) / 2.0
    }
}

/// `2 r(D)` as the maximum of lines `a + b D` for one orientation.
fn radius_lines(w: Option<&Bounds>, h: &Bounds, u: [f64; 2], v: f64) -> Vec<(f64, f64)> {
    let mut lines = Vec::with_capacity(8);
    for k in 0..2 {
        let mut tops = vec![(h.hi[k], 1.0 / v - u[k])];
        let mut bottoms = vec![(h.lo[k], -u[k] - 1.0 / v)];
        if let Some(w) = w {
            tops.push((w.hi[k], 0.0));
            bottoms.push((w.lo[k], 0.0));
        }
        for &(ta, tb) in &tops {
            for &(ba, bb) in &bottoms {
                lines.push((ta - ba, tb - bb));
            }
        }
    }
    lines
}

fn max_lines(lines: &[(f64, f64)], d: f64) -> f64 {
    lines
        .iter()
        .map(|&(a, b)| a + b * d)
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Exact minimum over `D >= 0` of a maximum of lines that grows without
/// bound.
fn min_over_length(lines: &[(f64, f64)]) -> f64 {
    let mut best = max_lines(lines, 0.0);
    for (i, &(a1, b1)) in lines.iter().enumerate() {
        for &(a2, b2) in &lines[i + 1..] {
            if b1 != b2 {
                let d = (a2 - a1) / (b1 - b2);
                if d > 0.0 && d.is_finite() {
                    best = best.min(max_lines(lines, d));
                }
            }
        }
    }
    best
}

fn golden_min(mut a: f64, mut b: f64, f: &impl Fn(f64) -> f64) -> f64 {
    const R: f64 = 0.618_033_988_749_894_9;
    let mut x1 = b - R * (b - a);
    let mut x2 = a + R * (b - a);
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..GOLDEN_ITERS {
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - R * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + R * (b - a);
            f2 = f(x2);
        }
    }
    f1.min(f2)
}

/// Minimum of a function on the circle: dense samples, then golden-section
/// refinement around the smallest local minima.
fn min_on_circle(f: impl Fn(f64) -> f64) -> f64 {
    let step = TAU / THETA_SAMPLES as f64;
    let vals: Vec<f64> = (0..THETA_SAMPLES).map(|i| f(i as f64 * step)).collect();
    let mut minima: Vec<usize> = (0..THETA_SAMPLES)
        .filter(|&i| {
            let prev = vals[(i + THETA_SAMPLES - 1) % THETA_SAMPLES];
            let next = vals[(i + 1) % THETA_SAMPLES];
            vals[i] <= prev && vals[i] <= next
        })
        .collect();
    minima.sort_by(|&i, &j| vals[i].total_cmp(&vals[j]));
    let mut best = vals.iter().copied().fold(f64::INFINITY, f64::min);
    for &i in minima.iter().take(THETA_REFINE) {
        let c = i as f64 * step;
        best = best.min(golden_min(c - step, c + step, &f));
    }
    best
}

/// Optimal radius for a partition whose riders `h` are nonempty.
/// `scale` is the length of the rotated unit direction.
fn partition_radius(w: Option<&Bounds>, h: &Bounds, v: f64, length: LengthMode, scale: f64) -> f64 {
    let dir = |th: f64| [scale * th.cos(), scale * th.sin()];
    let twice = match length {
        LengthMode::Variable => {
            min_on_circle(|th| min_over_length(&radius_lines(w, h, dir(th), v)))
        }
        LengthMode::Fixed(ell) => {
            min_on_circle(|th| max_lines(&radius_lines(w, h, dir(th), v), ell))
        }
    };
    twice / 2.0
}

/// Optimal basic-problem radius for walkers `w` and riders `h`.
///
/// Coordinates are in a frame where walking distance is L∞; the Euclidean
/// highway length is measured as `frame` prescribes (`Frame::Original`
/// measures it directly in these coordinates).
pub fn brute_basic(
    w: &[Point],
    h: &[Point],
    v: f64,
    length: LengthMode,
    frame: Frame,
) -> Result<f64> {
    check_speed(v)?;
    check_mode(length)?;
    for p in w.iter().chain(h) {
        p.check()?;
    }
    let wb = Bounds::of(w);
    let Some(hb) = Bounds::of(h) else {
        return wb.map(|b| b.half_span()).ok_or(Error::EmptySet);
    };
    Ok(partition_radius(
        wb.as_ref(),
        &hb,
        v,
        length,
        frame.euclid_scale(),
    ))
}

/// Optimal turnpike radius by enumerating every walker/rider partition.
pub fn brute_turnpike(points: &[Point], v: f64, length: LengthMode) -> Result<f64> {
    check_points(points)?;
    check_speed(v)?;
    check_mode(length)?;
    let n = points.len();
    if n > BRUTE_TURNPIKE_MAX {
        return Err(Error::TooManyPoints {
            what: "brute_turnpike",
            max: BRUTE_TURNPIKE_MAX,
            got: n,
        });
    }
    let q: Vec<Point> = points
        .iter()
        .map(|&p| to_linf_frame(p))
        .collect::<Result<_>>()?;
    let mut best = Bounds::of(&q).expect("nonempty").half_span();
    let ride = length.fixed_length().map_or(0.0, |ell| ell / v);
    for mask in 1u32..(1 << n) {
        let riders = q
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, p)| p);
        let walkers = q
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 0)
            .map(|(_, p)| p);
        let hb = Bounds::of(riders).expect("mask is nonzero");
        let wb = Bounds::of(walkers);
        let lower = (hb.half_span() + ride).max(wb.map_or(0.0, |b| b.half_span()));
        if lower >= best {
            continue;
        }
        best = best.min(partition_radius(wb.as_ref(), &hb, v, length, SQRT_2));
    }
    Ok(best)
}

// ---------------------------------------------------------------------------
// Freeway

/// Freeway travel time from `p` to `f` on the track `f + s u`,
/// `s in [lo, hi]` (`lo <= 0 <= hi`, possibly infinite). The cost
/// `|p - f - s u|_1 + |s| / v` is convex and piecewise linear in `s`, so it
/// is minimized at a breakpoint or a track end.
fn track_time(p: Point, f: Point, u: Point, lo: f64, hi: f64, v: f64) -> f64 {
    let d = p - f;
    let cost = |s: f64| (d.x - s * u.x).abs() + (d.y - s * u.y).abs() + s.abs() / v;
    let mut best = cost(0.0);
    let mut try_s = |s: f64| {
        if s.is_finite() {
            best = best.min(cost(s.clamp(lo, hi)));
        }
    };
    try_s(lo);
    try_s(hi);
    if u.x != 0.0 {
        try_s(d.x / u.x);
    }
    if u.y != 0.0 {
        try_s(d.y / u.y);
    }
    best
}

/// Placement parameters: orientation, facility, and for a segment the
/// fraction of its length lying behind the facility.
#[derive(Debug, Clone, Copy)]
struct Params {
    alpha: f64,
    f: Point,
    behind: f64,
}

struct GridProblem<'a> {
    points: &'a [Point],
    v: f64,
    length: LengthMode,
}

impl GridProblem<'_> {
    fn value(&self, p: &Params) -> f64 {
        let u = Point::new(p.alpha.cos(), p.alpha.sin());
        let (lo, hi) = match self.length {
            LengthMode::Variable => (f64::NEG_INFINITY, f64::INFINITY),
            LengthMode::Fixed(ell) => {
                let b = p.behind.clamp(0.0, 1.0);
                (-b * ell, (1.0 - b) * ell)
            }
        };
        self.points
            .iter()
            .map(|&q| track_time(q, p.f, u, lo, hi, self.v))
            .fold(0.0, f64::max)
    }

    /// Compass search from `start` with initial steps `steps`.
    fn polish(&self, start: Params, steps: [f64; 4]) -> f64 {
        let mut x = start;
        let mut fx = self.value(&x);
        let mut steps = steps;
        let dims = if self.length == LengthMode::Variable {
            3
        } else {
            4
        };
        for _ in 0..4000 {
            if steps[..dims].iter().all(|&s| s < 1e-11) {
                break;
            }
            let mut moved = false;
            for k in 0..dims {
                for sign in [1.0, -1.0] {
                    let mut y = x;
                    let d = sign * steps[k];
                    match k {
                        0 => y.alpha += d,
                        1 => y.f.x += d,
                        2 => y.f.y += d,
                        _ => y.behind = (y.behind + d).clamp(0.0, 1.0),
                    }
                    let fy = self.value(&y);
                    if fy < fx {
                        x = y;
                        fx = fy;
                        moved = true;
                    }
                }
            }
            if !moved {
                for s in &mut steps {
                    *s /= 2.0;
                }
            }
        }
        fx
    }

    fn search(&self, resolution: usize) -> f64 {
        const CELLS: usize = 12;
        const KEEP: usize = 6;
        let n_behind = if self.length == LengthMode::Variable {
            1
        } else {
            9
        };
        let mut lo = self.points[0];
        let mut hi = self.points[0];
        for p in self.points {
            lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
        }
        let pad = 0.1 * (hi.x - lo.x).max(hi.y - lo.y) + 1e-3;
        let (lo, hi) = (lo - Point::new(pad, pad), hi + Point::new(pad, pad));
        let cell = Point::new((hi.x - lo.x) / CELLS as f64, (hi.y - lo.y) / CELLS as f64);
        let mut facilities: Vec<Point> = self.points.to_vec();
        for i in 0..=CELLS {
            for j in 0..=CELLS {
                facilities.push(Point::new(
                    lo.x + cell.x * i as f64,
                    lo.y + cell.y * j as f64,
                ));
            }
        }
        let mut scored: Vec<(f64, Params)> = Vec::new();
        for a in 0..resolution {
            let alpha = PI * a as f64 / resolution as f64;
            for &f in &facilities {
                for b in 0..n_behind {
                    let behind = if n_behind == 1 {
                        0.0
                    } else {
                        b as f64 / (n_behind - 1) as f64
                    };
                    let p = Params { alpha, f, behind };
                    scored.push((self.value(&p), p));
                }
            }
        }
        scored.sort_by(|a, b| a.0.total_cmp(&b.0));
        let steps = [PI / resolution as f64, cell.x, cell.y, 1.0 / 8.0];
        let mut best = scored[0].0;
        for &(_, p) in scored.iter().take(KEEP) {
            best = best.min(self.polish(p, steps));
        }
        best
    }
}

/// Upper bound on the optimal freeway radius from a grid over orientation,
/// facility and segment placement followed by local polishing. Doubling
/// `resolution` never increases the result.
pub fn grid_freeway(
    points: &[Point],
    v: f64,
    length: LengthMode,
    resolution: usize,
) -> Result<f64> {
    check_points(points)?;
    check_speed(v)?;
    check_mode(length)?;
    if points.len() > GRID_FREEWAY_MAX {
        return Err(Error::TooManyPoints {
            what: "grid_freeway",
            max: GRID_FREEWAY_MAX,
            got: points.len(),
        });
    }
    if resolution == 0 {
        return Err(Error::InvalidArgument(
            "grid resolution must be positive".into(),
        ));
    }
    let prob = GridProblem { points, v, length };
    let mut best = f64::INFINITY;
    let mut r = resolution;
    loop {
        best = best.min(prob.search(r));
        if r % 2 == 1 {
            break;
        }
        r /= 2;
    }
    Ok(best)
}

/// Freeway travel time with the inner minimum over entry points replaced
/// by `k` equally spaced candidates (plus walking). Never below the exact
/// time.
pub fn sampled_freeway_time(p: Point, f: Point, h: &Highway, k: usize) -> Result<f64> {
    if k < 2 {
        return Err(Error::TooFewSamples(k));
    }
    let (p, f) = (p.check()?, f.check()?);
    check_speed(h.speed)?;
    if h.kind != HighwayKind::Freeway {
        return Err(Error::KindMismatch("expected a freeway".into()));
    }
    let walk = p.l1(f);
    let d = h.b - h.a;
    let len = d.norm();
    let scale = 1.0 + f.x.abs().max(f.y.abs()) + h.a.x.abs().max(h.a.y.abs());
    if len == 0.0 {
        if f.l2(h.a) > EPS * scale {
            return Err(Error::NotOnHighway(f.l2(h.a)));
        }
        return Ok(walk);
    }
    let u = d * (1.0 / len);
    let rel = f - h.a;
    let off = u.cross(rel).abs();
    let sf = u.dot(rel);
    let (lo, hi) = match h.extent {
        Extent::Segment => (-sf, len - sf),
        Extent::Line => {
            // Entries farther than the walking time from p's projection
            // cannot beat walking.
            let sp = u.dot(p - f);
            (sp - walk, sp + walk)
        }
    };
    let along = (lo.max(0.0)).max(-hi.min(0.0));
    if off.max(along) > EPS * scale {
        return Err(Error::NotOnHighway(off.max(along)));
    }
    let mut best = walk;
    for i in 0..k {
        let s = lo + (hi - lo) * i as f64 / (k - 1) as f64;
        let q = f + u * s;
        best = best.min(p.l1(q) + s.abs() / h.speed);
    }
    Ok(best)
}

// ---------------------------------------------------------------------------
// Verification

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub radius_recomputed: f64,
    pub radius_claimed: f64,
    pub worst_point: usize,
    pub checks: Vec<Check>,
    /// Claimed radius minus the oracle value, when an oracle was run.
    pub oracle_gap: Option<f64>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn push(&mut self, name: &str, ok: bool, detail: String) {
        let status = if ok {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        self.checks.push(Check {
            name: name.into(),
            status,
            detail,
        });
    }
}

/// Tolerance of the radius agreement check.
pub fn radius_tolerance(r: f64) -> f64 {
    1e-6 * (1.0 + r.abs())
}

fn angle_gap(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(PI);
    d.min(PI - d)
}

/// Recomputes a solution's radius and checks its structural invariants;
/// with `run_oracle`, also compares against the brute-force oracle when the
/// instance is small enough.
pub fn verify(
    inst: &Instance,
    rec: &SolutionRecord,
    run_oracle: bool,
) -> Result<VerificationReport> {
    inst.validate()?;
    if inst.kind != rec.kind {
        return Err(Error::KindMismatch(format!(
            "instance is a {:?} problem, solution describes a {:?}",
            inst.kind, rec.kind
        )));
    }
    let h = rec.highway()?;
    let f = rec.facility.check()?;
    let times: Vec<f64> = inst
        .points
        .iter()
        .map(|&p| match h.kind {
            HighwayKind::Turnpike => turnpike_time(p, f, h.a, h.b, h.speed),
            HighwayKind::Freeway => freeway_time(p, f, &h),
        })
        .collect::<Result<_>>()
        .or_else(|e| match e {
            Error::NotOnHighway(_) => Ok(inst.points.iter().map(|_| f64::INFINITY).collect()),
            e => Err(e),
        })?;
    let (worst_point, recomputed) =
        times
            .iter()
            .copied()
            .enumerate()
            .fold(
                (0, f64::NEG_INFINITY),
                |b, (i, t)| if t > b.1 { (i, t) } else { b },
            );
    let claimed = rec.radius;
    let tol = radius_tolerance(claimed);
    let mut report = VerificationReport {
        radius_recomputed: recomputed,
        radius_claimed: claimed,
        worst_point,
        checks: Vec::new(),
        oracle_gap: None,
    };

    report.push(
        "speed",
        rec.speed == inst.speed,
        format!("instance {}, solution {}", inst.speed, rec.speed),
    );
    report.push(
        "radius",
        (recomputed - claimed).abs() <= tol,
        format!("recomputed {recomputed}, claimed {claimed}"),
    );
    report.push(
        "coverage",
        recomputed <= claimed + tol,
        format!("point {worst_point} needs {}", times[worst_point]),
    );

    let scale = 1.0
        + f.x.abs().max(f.y.abs())
        + h.a.x.abs().max(h.a.y.abs())
        + h.b.x.abs().max(h.b.y.abs());
    let miss = match h.kind {
        HighwayKind::Turnpike => f.l2(h.b),
        HighwayKind::Freeway => distance_to_highway(f, &h),
    };
    report.push(
        "facility_on_highway",
        miss <= EPS * scale,
        format!("facility is {miss} off the highway"),
    );

    if let LengthMode::Fixed(ell) = inst.length {
        let got = h.length();
        report.push(
            "length",
            (got - ell).abs() <= EPS * (1.0 + ell),
            format!("highway length {got}, required {ell}"),
        );
    }
    if let Some(alpha) = inst.orientation {
        let gap = h.angle().map_or(0.0, |a| angle_gap(a, alpha));
        report.push(
            "orientation",
            gap <= 1e-9,
            format!("orientation differs by {gap} rad"),
        );
    }

    let mut bad = Vec::new();
    if rec.clients.len() != inst.points.len() {
        bad.push(format!(
            "{} records for {} points",
            rec.clients.len(),
            inst.points.len()
        ));
    }
    for c in &rec.clients {
        let Some(&p) = inst.points.get(c.index) else {
            bad.push(format!("record index {} out of range", c.index));
            continue;
        };
        let t = times[c.index];
        if (c.time - t).abs() > tol {
            bad.push(format!(
                "point {} records {} but needs {}",
                c.index, c.time, t
            ));
        }
        if c.time > p.l1(f) + EPS * scale {
            bad.push(format!(
                "point {} records more than its walking time",
                c.index
            ));
        }
    }
    let ok = bad.is_empty();
    report.push(
        "clients",
        ok,
        if ok {
            "consistent".into()
        } else {
            bad.join("; ")
        },
    );

    if run_oracle {
        let n = inst.points.len();
        let (cap, name) = match inst.kind {
            HighwayKind::Turnpike => (BRUTE_TURNPIKE_MAX, "oracle_turnpike"),
            HighwayKind::Freeway => (GRID_FREEWAY_MAX, "oracle_freeway"),
        };
        if n > cap || inst.orientation.is_some() {
            report.checks.push(Check {
                name: name.into(),
                status: CheckStatus::Skipped,
                detail: if n > cap {
                    format!("{n} points exceed the oracle cap of {cap}")
                } else {
                    "prescribed orientation".into()
                },
            });
        } else {
            match inst.kind {
                HighwayKind::Turnpike => {
                    let r = brute_turnpike(&inst.points, inst.speed, inst.length)?;
                    let gap = claimed - r;
                    report.oracle_gap = Some(gap);
                    report.push(
                        name,
                        gap.abs() <= 1e-4 * (1.0 + r),
                        format!("exhaustive partitions give {r}"),
                    );
                }
                HighwayKind::Freeway => {
                    let r = grid_freeway(
                        &inst.points,
                        inst.speed,
                        inst.length,
                        VERIFY_GRID_RESOLUTION,
                    )?;
                    let gap = claimed - r;
                    report.oracle_gap = Some(gap);
                    report.push(
                        name,
                        gap <= 1e-3 * (1.0 + r),
                        format!("grid search gives {r}"),
                    );
                }
            }
        }
    }
    Ok(report)
}

fn distance_to_highway(f: Point, h: &Highway) -> f64 {
    let d = h.b - h.a;
    let len = d.norm();
    if len == 0.0 {
        return f.l2(h.a);
    }
    let u = d * (1.0 / len);
    let s = u.dot(f - h.a);
    let s = match h.extent {
        Extent::Segment => s.clamp(0.0, len),
        Extent::Line => s,
    };
    f.l2(h.a + u * s)
}
