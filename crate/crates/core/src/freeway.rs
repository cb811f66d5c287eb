//! Rotating-calipers solver for the facility-plus-freeway problem.
//!
//! For a freeway with direction `u` and a facility on it, the travel time is
//!
//! ```text
//! d(p) = max_g  <g, p - f> - b * max(0, <g,u> - 1/v) - a * max(0, -<g,u> - 1/v)
//! ```
//!
//! where `g` ranges over the unit L∞ square and the highway extends `a`
//! behind and `b` ahead of `f`. The maximum is attained at a square corner or
//! where one of the lines `<g,u> = ±1/v` meets the square boundary, and these
//! are exactly the gradients of the direction bundle. For a fixed orientation
//! the placement is therefore a small linear program over the directional
//! extremes of the clients. Orientations are searched inside the intervals
//! where those extremes stay the same.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use crate::error::{check_length, check_speed, Error, Result};
use crate::geom::{convex_hull, Isometry, Point};
use crate::metric::{
    critical_angle, entry_point, objective_radius, GradientFamily, GradientMode, Highway,
    HighwayKind,
};
use crate::problem::{Instance, LengthMode};

/// The four symmetries that map every orientation in `[0, pi)` into
/// `[0, pi/4]`.
pub const FRAMES: [Isometry; 4] = [
    Isometry {
        swap: false,
        flip_x: false,
        flip_y: false,
    },
    Isometry {
        swap: true,
        flip_x: false,
        flip_y: false,
    },
    Isometry {
        swap: false,
        flip_x: true,
        flip_y: false,
    },
    Isometry {
        swap: true,
        flip_x: false,
        flip_y: true,
    },
];

const DUAL_TOL: f64 = 1e-12;

/// A directional extreme point of the clients for one gradient family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extreme {
    pub family: GradientFamily,
    pub point: Point,
}

/// Orientations `[alpha_lo, alpha_hi]` (inside `frame`) over which the
/// directional extremes do not change.
#[derive(Debug, Clone, PartialEq)]
pub struct OrientationInterval {
    pub frame: Isometry,
    pub alpha_lo: f64,
    pub alpha_hi: f64,
    /// Extremes in frame coordinates, one per valid family.
    pub extremes: Vec<Extreme>,
}

impl OrientationInterval {
    /// Distinct extreme points in lexicographic order.
    pub fn points(&self) -> Vec<Point> {
        coalesce(self.extremes.iter().map(|e| e.point))
    }
}

/// Event angles of one frame, sorted, including both ends of `[0, pi/4]`.
#[derive(Debug, Clone, PartialEq)]
pub struct FrameEvents {
    pub frame: Isometry,
    pub angles: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FreewaySolution {
    pub facility: Point,
    pub highway: Highway,
    pub radius: f64,
    /// Orientation of the highway in `[0, pi)`.
    pub alpha: f64,
    /// Segment length, or for a line the span actually used by entry points.
    pub length: f64,
    /// Set when the extreme-point restriction missed a client and the
    /// placement had to be recomputed against the whole set.
    pub refit: bool,
}

fn coalesce(points: impl Iterator<Item = Point>) -> Vec<Point> {
    let mut v: Vec<Point> = points.collect();
    v.sort_by(|a, b| a.lex_cmp(b));
    v.dedup();
    v
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !alpha.is_finite() {
        return Err(Error::NonFinite);
    }
    if !(0.0..=FRAC_PI_4).contains(&alpha) {
        return Err(Error::AngleOutOfRange(alpha));
    }
    Ok(())
}

/// Gradient of `family` at `alpha` if it lies in the unit square.
fn valid_gradient(family: &GradientFamily, alpha: f64, v: f64) -> Option<Point> {
    let g = family.gradient(alpha, v)?;
    (g.x.abs() <= 1.0 + DUAL_TOL && g.y.abs() <= 1.0 + DUAL_TOL)
        .then(|| Point::new(g.x.clamp(-1.0, 1.0), g.y.clamp(-1.0, 1.0)))
}

/// Index of the maximizer of `<g, p>`, ties to the lexicographically
/// smallest point.
fn argmax(points: &[Point], g: Point) -> usize {
    let mut best = 0;
    for (i, p) in points.iter().enumerate().skip(1) {
        let (a, b) = (p.dot(g), points[best].dot(g));
        if a > b || (a == b && p.lex_cmp(&points[best]).is_lt()) {
            best = i;
        }
    }
    best
}

fn extremes_in_frame(points: &[Point], alpha: f64, v: f64) -> Vec<Extreme> {
    GradientFamily::all()
        .iter()
        .filter_map(|fam| {
            valid_gradient(fam, alpha, v).map(|g| Extreme {
                family: *fam,
                point: points[argmax(points, g)],
            })
        })
        .collect()
}

/// Directional extremes of `points` at orientation `alpha` in `[0, pi/4]`.
pub fn extremes_at(points: &[Point], alpha: f64, v: f64) -> Result<Vec<Extreme>> {
    check_speed(v)?;
    check_alpha(alpha)?;
    if points.is_empty() {
        return Err(Error::EmptySet);
    }
    for p in points {
        p.check()?;
    }
    Ok(extremes_in_frame(points, alpha, v))
}

/// Solutions in `[0, pi/4]` of `sin(alpha - gamma) = k`.
fn sin_roots(gamma: f64, k: f64, out: &mut Vec<f64>) {
    if !(-1.0..=1.0).contains(&k) {
        return;
    }
    let s = k.asin();
    for base in [gamma + s, gamma + PI - s] {
        let a = base.rem_euclid(2.0 * PI);
        for cand in [a, a - 2.0 * PI] {
            if (0.0..=FRAC_PI_4).contains(&cand) {
                out.push(cand);
            }
        }
    }
}

/// Angles where some moving gradient family becomes normal to a hull edge,
/// together with the critical angle where the valid families change.
fn raw_events(hull: &[Point], v: f64) -> Vec<f64> {
    let mut out = vec![0.0, FRAC_PI_4, critical_angle(v).expect("speed checked")];
    let m = hull.len();
    if m >= 2 {
        for i in 0..m {
            let e = hull[(i + 1) % m] - hull[i];
            if e.norm() == 0.0 {
                continue;
            }
            let gamma = e.y.atan2(e.x);
            let (sg, cg) = gamma.sin_cos();
            for fam in GradientFamily::all() {
                let s = (fam.s1 * fam.s2) as f64;
                match fam.mode {
                    GradientMode::Walk => {}
                    GradientMode::VerticalProjection => sin_roots(gamma, s * cg / v, &mut out),
                    GradientMode::HorizontalProjection => sin_roots(gamma, -s * sg / v, &mut out),
                }
            }
        }
    }
    out.sort_by(f64::total_cmp);
    out.dedup_by(|a, b| (*a - *b).abs() < 1e-15);
    out
}

fn frame_intervals(points: &[Point], frame: Isometry, v: f64) -> Vec<OrientationInterval> {
    let q: Vec<Point> = points.iter().map(|&p| frame.apply(p)).collect();
    let hull = convex_hull(&q);
    let ev = raw_events(&hull, v);
    let mut out: Vec<OrientationInterval> = Vec::new();
    for w in ev.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        let extremes = extremes_in_frame(&hull, 0.5 * (lo + hi), v);
        match out.last_mut() {
            Some(last) if last.extremes == extremes => last.alpha_hi = hi,
            _ => out.push(OrientationInterval {
                frame,
                alpha_lo: lo,
                alpha_hi: hi,
                extremes,
            }),
        }
    }
    out
}

fn validate_points(points: &[Point], v: f64) -> Result<()> {
    check_speed(v)?;
    if points.is_empty() {
        return Err(Error::EmptySet);
    }
    for p in points {
        p.check()?;
    }
    Ok(())
}

/// Orientation intervals of all four frames.
pub fn orientation_intervals(points: &[Point], v: f64) -> Result<Vec<OrientationInterval>> {
    validate_points(points, v)?;
    Ok(FRAMES
        .iter()
        .flat_map(|&fr| frame_intervals(points, fr, v))
        .collect())
}

/// Angles (per frame, inside `[0, pi/4]`) at which the directional extremes
/// change.
pub fn orientation_events(points: &[Point], v: f64) -> Result<Vec<FrameEvents>> {
    validate_points(points, v)?;
    Ok(FRAMES
        .iter()
        .map(|&frame| {
            let iv = frame_intervals(points, frame, v);
            let mut angles: Vec<f64> = iv.iter().map(|i| i.alpha_lo).collect();
            angles.push(iv.last().map_or(FRAC_PI_4, |i| i.alpha_hi));
            FrameEvents { frame, angles }
        })
        .collect())
}

// ---------------------------------------------------------------------------
// Placement for a fixed orientation

/// Solves `A x = b` for a square system; `None` if (nearly) singular.
fn solve_square<const D: usize>(mut a: [[f64; D]; D], mut b: [f64; D]) -> Option<[f64; D]> {
    for col in 0..D {
        let piv = (col..D).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        let scale = a[piv].iter().fold(0.0f64, |m, x| m.max(x.abs()));
        if a[piv][col].abs() <= 1e-12 * scale.max(1e-300) {
            return None;
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for r in col + 1..D {
            let m = a[r][col] / a[col][col];
            if m != 0.0 {
                for c in col..D {
                    a[r][c] -= m * a[col][c];
                }
                b[r] -= m * b[col];
            }
        }
    }
    let mut x = [0.0; D];
    for r in (0..D).rev() {
        let s: f64 = (r + 1..D).map(|c| a[r][c] * x[c]).sum();
        x[r] = (b[r] - s) / a[r][r];
    }
    Some(x)
}

fn rows_dot<const D: usize>(r: &[f64; D], x: &[f64; D]) -> f64 {
    r.iter().zip(x.iter()).map(|(p, q)| p * q).sum()
}

fn basis_system<const D: usize>(
    rows: &[([f64; D], f64)],
    idx: &[usize; D],
) -> ([[f64; D]; D], [f64; D]) {
    let mut a = [[0.0; D]; D];
    let mut b = [0.0; D];
    for k in 0..D {
        a[k] = rows[idx[k]].0;
        b[k] = rows[idx[k]].1;
    }
    (a, b)
}

/// Vertex of `basis` if it is an optimal vertex of `min x[D-1]` subject to
/// `row . x >= rhs`: primal feasible and with nonnegative multipliers.
fn certify<const D: usize>(rows: &[([f64; D], f64)], basis: &[usize; D]) -> Option<[f64; D]> {
    if basis.iter().any(|&i| i >= rows.len()) {
        return None;
    }
    let (a, b) = basis_system(rows, basis);
    let x = solve_square(a, b)?;
    let scale = rows.iter().fold(1.0f64, |s, r| s.max(r.1.abs()));
    if !rows
        .iter()
        .all(|(r, rhs)| rows_dot(r, &x) >= rhs - 1e-9 * scale)
    {
        return None;
    }
    let mut at = [[0.0; D]; D];
    for i in 0..D {
        for j in 0..D {
            at[i][j] = a[j][i];
        }
    }
    let mut e = [0.0; D];
    e[D - 1] = 1.0;
    let y = solve_square(at, e)?;
    y.iter().all(|&m| m >= -1e-9).then_some(x)
}

/// Minimizes `cost` over the vertices of the arrangement of `rows`
/// (hyperplanes `row . x = rhs`). When the rows describe the epigraph of a
/// convex piecewise-linear function whose minimum is attained, that minimum
/// is attained at one of these vertices; `cost` evaluates the function
/// exactly, so no feasibility tolerance is needed. A basis in `hint` that
/// certifies as optimal short-cuts the enumeration; on return `hint` holds
/// the basis of the chosen vertex.
fn vertex_min<const D: usize>(
    rows: &[([f64; D], f64)],
    cost: impl Fn(&[f64; D]) -> f64,
    hint: &mut Option<[usize; D]>,
) -> Option<([f64; D], f64)> {
    if let Some(h) = *hint {
        if let Some(x) = certify(rows, &h) {
            return Some((x, cost(&x)));
        }
        for k in 0..D {
            for r in 0..rows.len() {
                if h.contains(&r) {
                    continue;
                }
                let mut nb = h;
                nb[k] = r;
                if let Some(x) = certify(rows, &nb) {
                    *hint = Some(nb);
                    return Some((x, cost(&x)));
                }
            }
        }
    }
    let m = rows.len();
    if m < D {
        return None;
    }
    let mut best: Option<([f64; D], f64, [usize; D])> = None;
    let mut idx = [0usize; D];
    for (i, slot) in idx.iter_mut().enumerate() {
        *slot = i;
    }
    loop {
        let (a, b) = basis_system(rows, &idx);
        if let Some(x) = solve_square(a, b) {
            let c = cost(&x);
            if c.is_finite() && best.map_or(true, |(_, bc, _)| c < bc) {
                best = Some((x, c, idx));
            }
        }
        let mut i = D;
        loop {
            if i == 0 {
                let (x, c, basis) = best?;
                *hint = Some(basis);
                return Some((x, c));
            }
            i -= 1;
            if idx[i] < m - D + i {
                idx[i] += 1;
                for j in i + 1..D {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Best facility (and for a segment the length `a` behind it) at one
/// orientation, in frame coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
struct Placement {
    alpha: f64,
    f: Point,
    behind: f64,
    radius: f64,
}

/// Warm-start state carried between nearby orientations.
#[derive(Debug, Clone, Copy, Default)]
struct Hint {
    line: Option<[usize; 3]>,
    segment: Option<[usize; 4]>,
}

fn place(e: &[Point], alpha: f64, length: LengthMode, v: f64, hint: &mut Hint) -> Placement {
    let origin = e.iter().fold(Point::ORIGIN, |s, &p| s + p) * (1.0 / e.len() as f64);
    let u = Point::new(alpha.cos(), alpha.sin());
    let mut duals: Vec<(Point, f64, f64)> = Vec::with_capacity(12);
    for fam in GradientFamily::all() {
        let Some(g) = valid_gradient(&fam, alpha, v) else {
            continue;
        };
        let c = g.dot(u);
        let clip = |x: f64| if x <= DUAL_TOL { 0.0 } else { x };
        let (up, down) = (clip(c - 1.0 / v), clip(-c - 1.0 / v));
        if length == LengthMode::Variable && (up > 0.0 || down > 0.0) {
            continue;
        }
        if !duals.iter().any(|d| d.0 == g) {
            duals.push((g, up, down));
        }
    }
    let top = |g: Point| {
        e.iter()
            .map(|&p| (p - origin).dot(g))
            .fold(f64::NEG_INFINITY, f64::max)
    };
    match length {
        LengthMode::Variable => {
            let terms: Vec<(Point, f64)> = duals.iter().map(|&(g, _, _)| (g, top(g))).collect();
            let rows: Vec<([f64; 3], f64)> =
                terms.iter().map(|&(g, m)| ([g.x, g.y, 1.0], m)).collect();
            let cost = |x: &[f64; 3]| {
                let f = Point::new(x[0], x[1]);
                terms
                    .iter()
                    .map(|&(g, m)| m - g.dot(f))
                    .fold(0.0f64, f64::max)
            };
            let (x, radius) =
                vertex_min(&rows, cost, &mut hint.line).expect("bounded covering program");
            Placement {
                alpha,
                f: origin + Point::new(x[0], x[1]),
                behind: 0.0,
                radius,
            }
        }
        LengthMode::Fixed(ell) => {
            let terms: Vec<(Point, f64, f64, f64)> = duals
                .iter()
                .map(|&(g, up, down)| (g, up, down, top(g)))
                .collect();
            let mut rows: Vec<([f64; 4], f64)> = terms
                .iter()
                .map(|&(g, up, down, m)| ([g.x, g.y, down - up, 1.0], m - ell * up))
                .collect();
            rows.push(([0.0, 0.0, 1.0, 0.0], 0.0));
            rows.push(([0.0, 0.0, -1.0, 0.0], -ell));
            let cost = |x: &[f64; 4]| {
                let f = Point::new(x[0], x[1]);
                let a = x[2].clamp(0.0, ell);
                terms
                    .iter()
                    .map(|&(g, up, down, m)| m - g.dot(f) - (ell - a) * up - a * down)
                    .fold(0.0f64, f64::max)
            };
            let (x, radius) =
                vertex_min(&rows, cost, &mut hint.segment).expect("bounded covering program");
            Placement {
                alpha,
                f: origin + Point::new(x[0], x[1]),
                behind: x[2].clamp(0.0, ell),
                radius,
            }
        }
    }
}

fn golden(mut a: f64, mut b: f64, f: &mut impl FnMut(f64) -> Placement) -> Placement {
    const R: f64 = 0.618_033_988_749_894_9;
    let mut x1 = b - R * (b - a);
    let mut x2 = a + R * (b - a);
    let (mut p1, mut p2) = (f(x1), f(x2));
    for _ in 0..80 {
        if b - a <= 1e-11 {
            break;
        }
        if p1.radius <= p2.radius {
            b = x2;
            x2 = x1;
            p2 = p1;
            x1 = b - R * (b - a);
            p1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            p1 = p2;
            x2 = a + R * (b - a);
            p2 = f(x2);
        }
    }
    if p1.radius <= p2.radius {
        p1
    } else {
        p2
    }
}

/// Minimizes the placement radius over `[lo, hi]` by sampling and refining
/// every sampled local minimum with golden-section search.
fn search_alpha(lo: f64, hi: f64, mut f: impl FnMut(f64) -> Placement) -> Placement {
    if hi <= lo {
        return f(lo);
    }
    const N: usize = 8;
    let xs: Vec<f64> = (0..=N)
        .map(|i| {
            if i == N {
                hi
            } else {
                lo + (hi - lo) * i as f64 / N as f64
            }
        })
        .collect();
    let ps: Vec<Placement> = xs.iter().map(|&x| f(x)).collect();
    let mut best = ps[0];
    for (i, p) in ps.iter().enumerate() {
        if p.radius < best.radius {
            best = *p;
        }
        let left = i == 0 || p.radius <= ps[i - 1].radius;
        let right = i == N || p.radius <= ps[i + 1].radius;
        if left && right {
            let a = xs[i.saturating_sub(1)];
            let b = xs[(i + 1).min(N)];
            let g = golden(a, b, &mut f);
            if g.radius < best.radius {
                best = g;
            }
        }
    }
    best
}

/// Best placement for orientations in `[alpha_lo, alpha_hi]` (frame
/// coordinates), covering the points `e`.
pub fn optimize_interval(
    e: &[Point],
    alpha_lo: f64,
    alpha_hi: f64,
    length: LengthMode,
    v: f64,
) -> Result<FreewaySolution> {
    validate_points(e, v)?;
    check_interval(alpha_lo, alpha_hi)?;
    if let LengthMode::Fixed(ell) = length {
        check_length(ell)?;
    }
    let mut hint = Hint::default();
    let p = search_alpha(alpha_lo, alpha_hi, |a| place(e, a, length, v, &mut hint));
    finish(e, Isometry::IDENTITY, p, length, v, false)
}

fn check_interval(lo: f64, hi: f64) -> Result<()> {
    if !(lo.is_finite() && hi.is_finite()) || lo > hi || lo < 0.0 || hi > FRAC_PI_4 {
        return Err(Error::BadInterval { lo, hi });
    }
    Ok(())
}

/// Builds the highway for a placement and maps it back through `frame`.
/// The reported radius is recomputed from the metric over `points`
/// (original coordinates).
fn finish(
    points: &[Point],
    frame: Isometry,
    p: Placement,
    length: LengthMode,
    v: f64,
    refit: bool,
) -> Result<FreewaySolution> {
    let u = Point::new(p.alpha.cos(), p.alpha.sin());
    let f = frame.invert(p.f);
    let dir = frame.invert(u);
    let highway = match length {
        LengthMode::Fixed(ell) => Highway::freeway(
            frame.invert(p.f - u * p.behind),
            frame.invert(p.f + u * (ell - p.behind)),
            v,
        )?,
        LengthMode::Variable => Highway::freeway_line(f, dir, v)?,
    };
    let radius = objective_radius(points, f, &highway)?;
    let length = match length {
        LengthMode::Fixed(ell) => ell,
        LengthMode::Variable => used_span(points, f, &highway)?,
    };
    Ok(FreewaySolution {
        facility: f,
        alpha: highway.angle().unwrap_or(0.0),
        highway,
        radius,
        length,
        refit,
    })
}

/// Length of the stretch of a line between the facility and the entry
/// points of all clients.
fn used_span(points: &[Point], f: Point, h: &Highway) -> Result<f64> {
    let d = h.b - h.a;
    let (mut lo, mut hi) = (0.0f64, 0.0f64);
    for &p in points {
        let s = (entry_point(p, f, h)?.entry - f).dot(d);
        lo = lo.min(s);
        hi = hi.max(s);
    }
    Ok(hi - lo)
}

fn frame_for(alpha: f64) -> (Isometry, f64) {
    let t = alpha.rem_euclid(PI);
    let (frame, a) = if t <= FRAC_PI_4 {
        (FRAMES[0], t)
    } else if t <= FRAC_PI_2 {
        (FRAMES[1], FRAC_PI_2 - t)
    } else if t <= 3.0 * FRAC_PI_4 {
        (FRAMES[3], t - FRAC_PI_2)
    } else {
        (FRAMES[2], PI - t)
    };
    (frame, a.clamp(0.0, FRAC_PI_4))
}

fn tolerance(r: f64) -> f64 {
    1e-6 * (1.0 + r)
}

/// Freeway with a prescribed orientation (radians, any value), in linear time.
pub fn solve_freeway_fixed_orientation(
    points: &[Point],
    alpha: f64,
    length: LengthMode,
    v: f64,
) -> Result<FreewaySolution> {
    validate_points(points, v)?;
    if !alpha.is_finite() {
        return Err(Error::NonFinite);
    }
    if let LengthMode::Fixed(ell) = length {
        check_length(ell)?;
    }
    let (frame, a) = frame_for(alpha);
    let q: Vec<Point> = points.iter().map(|&p| frame.apply(p)).collect();
    let e = coalesce(extremes_in_frame(&q, a, v).into_iter().map(|x| x.point));
    let p = place(&e, a, length, v, &mut Hint::default());
    let sol = finish(points, frame, p, length, v, false)?;
    if sol.radius > p.radius + tolerance(p.radius) {
        let p = place(&q, a, length, v, &mut Hint::default());
        return finish(points, frame, p, length, v, true);
    }
    Ok(sol)
}

/// Optimal freeway and facility over all orientations.
pub fn solve_freeway(inst: &Instance) -> Result<FreewaySolution> {
    inst.validate()?;
    if inst.kind != HighwayKind::Freeway {
        return Err(Error::KindMismatch("expected a freeway instance".into()));
    }
    if let Some(alpha) = inst.orientation {
        return solve_freeway_fixed_orientation(&inst.points, alpha, inst.length, inst.speed);
    }
    let (points, length, v) = (&inst.points, inst.length, inst.speed);
    let mut best: Option<(Isometry, Placement)> = None;
    for iv in orientation_intervals(points, v)? {
        let e = iv.points();
        let mut hint = Hint::default();
        let p = search_alpha(iv.alpha_lo, iv.alpha_hi, |a| {
            place(&e, a, length, v, &mut hint)
        });
        if best.map_or(true, |(_, b)| p.radius < b.radius) {
            best = Some((iv.frame, p));
        }
    }
    let (frame, p) = best.expect("at least one interval per frame");
    let sol = finish(points, frame, p, length, v, false)?;
    if sol.radius > p.radius + tolerance(p.radius) {
        let q: Vec<Point> = points.iter().map(|&x| frame.apply(x)).collect();
        let p = place(&q, p.alpha, length, v, &mut Hint::default());
        return finish(points, frame, p, length, v, true);
    }
    Ok(sol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::{direction_bundle, freeway_time};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn pts(v: &[(f64, f64)]) -> Vec<Point> {
        v.iter().map(|&p| p.into()).collect()
    }

    fn inst(p: &[(f64, f64)], length: LengthMode, v: f64) -> Instance {
        Instance::new(pts(p), HighwayKind::Freeway, length, v).unwrap()
    }

    #[test]
    fn two_point_examples() {
        let s = solve_freeway(&inst(&[(0., 0.), (10., 0.)], LengthMode::Variable, 5.0)).unwrap();
        assert!((s.radius - 1.0).abs() < 1e-9, "{}", s.radius);
        assert!((s.facility - Point::new(5., 0.)).norm() < 1e-6);
        assert!(s.alpha.abs() < 1e-6 || (s.alpha - PI).abs() < 1e-6);

        let s = solve_freeway(&inst(&[(0., 0.), (10., 0.)], LengthMode::Fixed(4.0), 5.0)).unwrap();
        assert!((s.radius - 3.4).abs() < 1e-9, "{}", s.radius);
        assert!((s.highway.length() - 4.0).abs() < 1e-9);

        for mode in [LengthMode::Variable, LengthMode::Fixed(3.0)] {
            let s = solve_freeway(&inst(&[(2., 7.)], mode, 2.0)).unwrap();
            assert_eq!(s.radius, 0.0);
        }
    }

    #[test]
    fn fixed_orientation_examples() {
        let p = pts(&[(0., 0.), (10., 0.)]);
        let s = solve_freeway_fixed_orientation(&p, 0.0, LengthMode::Variable, 5.0).unwrap();
        assert!((s.radius - 1.0).abs() < 1e-9);
        let s = solve_freeway_fixed_orientation(&p, FRAC_PI_2, LengthMode::Variable, 5.0).unwrap();
        assert!((s.radius - 5.0).abs() < 1e-9, "{}", s.radius);
        assert!((s.facility.y - s.highway.a.y).abs() > 0.0 || s.highway.a.x == s.highway.b.x);
        assert!((s.facility.x - 5.0).abs() < 1e-9);
    }

    #[test]
    fn interval_examples() {
        let e = pts(&[(0., 0.), (10., 0.)]);
        let s = optimize_interval(&e, 0.0, 0.1, LengthMode::Variable, 5.0).unwrap();
        assert!((s.radius - 1.0).abs() < 1e-9);
        let s = optimize_interval(&e, 0.0, 0.1, LengthMode::Fixed(4.0), 5.0).unwrap();
        assert!((s.radius - 3.4).abs() < 1e-9);
        assert!((s.highway.length() - 4.0).abs() < 1e-12);
        let s = optimize_interval(&pts(&[(3., 3.)]), 0.2, 0.3, LengthMode::Variable, 2.0).unwrap();
        assert_eq!(s.radius, 0.0);
        assert_eq!(
            optimize_interval(&e, 0.3, 0.2, LengthMode::Variable, 2.0).unwrap_err(),
            Error::BadInterval { lo: 0.3, hi: 0.2 }
        );
    }

    #[test]
    fn extremes_examples() {
        let e = extremes_at(&pts(&[(4., 4.)]), 0.3, 2.0).unwrap();
        assert!(e.iter().all(|x| x.point == Point::new(4., 4.)));
        let p = pts(&[(0., 0.), (10., 0.), (5., 3.)]);
        let e = extremes_at(&p, 0.0, 2.0).unwrap();
        let got = coalesce(e.iter().map(|x| x.point));
        assert!(got.contains(&p[0]) && got.contains(&p[1]));
        assert!(got.iter().all(|q| p.contains(q)));
        assert_eq!(extremes_at(&p, 1.0, 2.0), Err(Error::AngleOutOfRange(1.0)));
    }

    #[test]
    fn extremes_maximize_their_functional() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..200 {
            let n = rng.gen_range(1..=50);
            let p: Vec<Point> = (0..n)
                .map(|_| Point::new(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0)))
                .collect();
            let alpha = rng.gen_range(0.0..FRAC_PI_4);
            let v = rng.gen_range(1.1..6.0);
            let hull = convex_hull(&p);
            for x in extremes_at(&p, alpha, v).unwrap() {
                let g = x.family.gradient(alpha, v).unwrap();
                let m = p.iter().map(|q| q.dot(g)).fold(f64::NEG_INFINITY, f64::max);
                assert_eq!(x.point.dot(g), m);
                assert!(hull.contains(&x.point) || n == 1);
            }
        }
    }

    #[test]
    fn events_are_real_changes() {
        let square = pts(&[(0., 0.), (1., 0.), (1., 1.), (0., 1.)]);
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        let mut sets = vec![square];
        for _ in 0..30 {
            let n = rng.gen_range(2..30);
            sets.push(
                (0..n)
                    .map(|_| Point::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0)))
                    .collect(),
            );
        }
        for p in &sets {
            let v = 2.0;
            let hull_len = convex_hull(p).len();
            for fe in orientation_events(p, v).unwrap() {
                let a = &fe.angles;
                assert_eq!(a[0], 0.0);
                assert_eq!(*a.last().unwrap(), FRAC_PI_4);
                assert!(a.windows(2).all(|w| w[0] < w[1]));
                assert!(a.len() - 2 <= 12 * hull_len + 1);
                let q: Vec<Point> = p.iter().map(|&x| fe.frame.apply(x)).collect();
                for w in a.windows(3) {
                    let before = extremes_at(&q, 0.5 * (w[0] + w[1]), v).unwrap();
                    let after = extremes_at(&q, 0.5 * (w[1] + w[2]), v).unwrap();
                    assert_ne!(before, after);
                }
                // inside an interval the extremes stay the same
                for w in a.windows(2) {
                    let e0 = extremes_at(&q, w[0] + 0.25 * (w[1] - w[0]), v).unwrap();
                    let e1 = extremes_at(&q, w[0] + 0.75 * (w[1] - w[0]), v).unwrap();
                    assert_eq!(e0, e1);
                }
            }
        }
        let col = pts(&[(0., 0.), (1., 0.), (3., 0.)]);
        for fe in orientation_events(&col, 3.0).unwrap() {
            assert!(fe.angles.len() <= 2 + 12 * 2 + 1);
        }
    }

    #[test]
    fn placement_matches_metric() {
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        for i in 0..300 {
            let n = rng.gen_range(1..8);
            let p: Vec<Point> = (0..n)
                .map(|_| Point::new(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0)))
                .collect();
            let alpha = rng.gen_range(0.0..PI);
            let v = rng.gen_range(1.1..6.0);
            let length = if i % 2 == 0 {
                LengthMode::Variable
            } else {
                LengthMode::Fixed(rng.gen_range(0.5..15.0))
            };
            let s = solve_freeway_fixed_orientation(&p, alpha, length, v).unwrap();
            assert!(!s.refit);
            // the placement is optimal: no nearby facility position does better
            let h = s.highway;
            let d = h.direction().unwrap();
            assert!(
                ((s.alpha - alpha.rem_euclid(PI)).abs() < 1e-9)
                    || ((s.alpha - alpha.rem_euclid(PI)).abs() - PI).abs() < 1e-9
            );
            for _ in 0..20 {
                let shift = Point::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                let slide = rng.gen_range(-1.0..1.0);
                let (f2, h2) = match length {
                    LengthMode::Variable => {
                        let f2 = s.facility + shift;
                        (f2, Highway::freeway_line(f2, d, v).unwrap())
                    }
                    LengthMode::Fixed(ell) => {
                        let a = h.a + shift;
                        let b = a + d * ell;
                        let t = (s.facility - h.a).norm() / ell;
                        let t2 = (t + slide * 0.2).clamp(0.0, 1.0);
                        (a.lerp(b, t2), Highway::freeway(a, b, v).unwrap())
                    }
                };
                let r2 = objective_radius(&p, f2, &h2).unwrap();
                assert!(r2 >= s.radius - 1e-9, "{i}: {r2} < {}", s.radius);
            }
        }
    }

    #[test]
    fn dual_points_are_bundle_members() {
        for k in 0..50 {
            let alpha = FRAC_PI_4 * k as f64 / 49.0;
            let b = direction_bundle(alpha, 2.5).unwrap();
            for fam in GradientFamily::all() {
                if let Some(g) = valid_gradient(&fam, alpha, 2.5) {
                    assert!(b.entries.iter().any(|e| (e.gradient - g).norm() < 1e-9));
                }
            }
        }
    }

    #[test]
    fn symmetric_and_translation_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(34);
        for _ in 0..15 {
            let n = rng.gen_range(2..7);
            let p: Vec<Point> = (0..n)
                .map(|_| Point::new(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0)))
                .collect();
            let v = rng.gen_range(1.2..5.0);
            let base = solve_freeway(
                &Instance::new(p.clone(), HighwayKind::Freeway, LengthMode::Variable, v).unwrap(),
            )
            .unwrap()
            .radius;
            let off = Point::new(rng.gen_range(-50.0..50.0), rng.gen_range(-50.0..50.0));
            for iso in Isometry::all() {
                let q: Vec<Point> = p.iter().map(|&x| iso.apply(x) + off).collect();
                let r = solve_freeway(
                    &Instance::new(q, HighwayKind::Freeway, LengthMode::Variable, v).unwrap(),
                )
                .unwrap()
                .radius;
                assert!((r - base).abs() <= 1e-9 * (1.0 + base), "{r} vs {base}");
            }
        }
    }

    #[test]
    fn facility_on_highway_and_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(35);
        for i in 0..40 {
            let n = rng.gen_range(1..20);
            let p: Vec<Point> = (0..n)
                .map(|_| Point::new(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0)))
                .collect();
            let v = rng.gen_range(1.1..6.0);
            let length = if i % 2 == 0 {
                LengthMode::Variable
            } else {
                LengthMode::Fixed(rng.gen_range(0.5..15.0))
            };
            let s =
                solve_freeway(&Instance::new(p.clone(), HighwayKind::Freeway, length, v).unwrap())
                    .unwrap();
            assert!(!s.refit);
            assert!(freeway_time(s.facility, s.facility, &s.highway).unwrap() == 0.0);
            let (_, rc) = crate::turnpike::rectilinear_1center(&p).unwrap();
            assert!(s.radius <= rc + 1e-9);
            let mut diam = 0.0f64;
            for a in &p {
                for b in &p {
                    diam = diam.max(a.l2(*b));
                }
            }
            assert!(s.radius >= diam / (2.0 * v) - 1e-9);
        }
    }

    #[test]
    fn kind_is_checked() {
        let mut i = inst(&[(0., 0.)], LengthMode::Variable, 2.0);
        i.kind = HighwayKind::Turnpike;
        assert!(matches!(solve_freeway(&i), Err(Error::KindMismatch(_))));
    }
}
