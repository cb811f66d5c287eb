//! Exact solvers for the facility-plus-turnpike problem.
//!
//! The facility sits at one endpoint of the turnpike. After moving to the L∞
//! frame, every client either walks to the facility (an L∞ ball of radius `R`
//! around `f`) or walks to the far endpoint `t` and rides (a ball of radius
//! `R - ℓ/v` around `t`). The optimum is attained at one of `O(n²)` candidate
//! splits of the clients, each solved in constant time as a basic problem on
//! the two extreme sets.

use crate::error::{check_length, check_speed, Error, Result};
use crate::geom::{
    closest_pair, extreme_set_in, farthest_pair, from_linf_frame, ExtremeSet, Frame, FramedSet,
    Isometry, Point, Rect,
};
use crate::metric::{Highway, HighwayKind};
use crate::problem::{Instance, LengthMode};

/// A split of the client indices into walkers and riders.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Partition {
    pub walkers: Vec<usize>,
    pub riders: Vec<usize>,
}

/// Optimal placement for a fixed partition, expressed in the frame of the
/// extreme sets it was computed from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BasicSolution {
    pub f: Point,
    pub t: Point,
    pub radius: f64,
    pub walk_radius: f64,
    pub ride_radius: f64,
    /// Euclidean highway length in the original frame.
    pub length_used: f64,
    pub frame: Frame,
}

/// Facility `f`, turnpike from `t` to `f`, and the achieved radius.
#[derive(Debug, Clone, PartialEq)]
pub struct TurnpikeSolution {
    pub facility: Point,
    pub t: Point,
    pub radius: f64,
    pub length: f64,
    pub speed: f64,
    pub partition: Partition,
}

impl TurnpikeSolution {
    pub fn highway(&self) -> Highway {
        Highway {
            a: self.t,
            b: self.facility,
            kind: HighwayKind::Turnpike,
            extent: crate::metric::Extent::Segment,
            speed: self.speed,
        }
    }
}

// ---------------------------------------------------------------------------
// Basic problem

/// Center locus of a set as a center with half-extents.
#[derive(Debug, Clone, Copy)]
struct Locus {
    c: Point,
    hx: f64,
    hy: f64,
}

impl Locus {
    fn of(x: &ExtremeSet, r: f64) -> Locus {
        let b = x.bbox();
        Locus {
            c: b.center(),
            hx: (r - b.width() / 2.0).max(0.0),
            hy: (r - b.height() / 2.0).max(0.0),
        }
    }

    fn rect(&self) -> Rect {
        Rect::new(
            self.c.x - self.hx,
            self.c.x + self.hx,
            self.c.y - self.hy,
            self.c.y + self.hy,
        )
    }
}

/// Signed gaps and spans between two loci along each axis.
#[derive(Debug, Clone, Copy)]
struct Gaps {
    gx: f64,
    gy: f64,
    sx: f64,
    sy: f64,
}

impl Gaps {
    fn between(a: &Locus, b: &Locus) -> Gaps {
        let dx = (a.c.x - b.c.x).abs();
        let dy = (a.c.y - b.c.y).abs();
        Gaps {
            gx: dx - a.hx - b.hx,
            gy: dy - a.hy - b.hy,
            sx: dx + a.hx + b.hx,
            sy: dy + a.hy + b.hy,
        }
    }

    /// Distance between the loci once both are inflated by `x`.
    fn dmin(&self, x: f64) -> f64 {
        (self.gx - 2.0 * x)
            .max(0.0)
            .hypot((self.gy - 2.0 * x).max(0.0))
    }

    fn dmax(&self, x: f64) -> f64 {
        (self.sx + 2.0 * x).hypot(self.sy + 2.0 * x)
    }
}

fn bisect(mut lo: f64, mut hi: f64, mut below: impl FnMut(f64) -> bool) -> f64 {
    // `below(lo)` is true, `below(hi)` false; returns the boundary.
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if below(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    hi
}

/// Smallest inflation `x >= 0` with `dmin(x) <= d <= dmax(x)`.
fn fixed_inflation(g: &Gaps, d: f64) -> f64 {
    let tol = 1e-12 * (1.0 + d);
    if d > g.dmax(0.0) {
        let (p, q) = (g.sx, g.sy);
        let b = 4.0 * (p + q);
        let c = p * p + q * q - d * d;
        let disc = 32.0 * d * d - 16.0 * (p - q) * (p - q);
        let x = -2.0 * c / (b + disc.max(0.0).sqrt());
        if x.is_finite() && (g.dmax(x) - d).abs() <= 1e-9 * (1.0 + d) {
            return x.max(0.0);
        }
        let mut hi = d.max(1.0);
        while g.dmax(hi) < d {
            hi *= 2.0;
        }
        bisect(0.0, hi, |x| g.dmax(x) < d - tol)
    } else if d < g.dmin(0.0) {
        let hi_gap = g.gx.max(g.gy);
        let lo_gap = g.gx.min(g.gy);
        let y = if lo_gap <= hi_gap - d {
            hi_gap - d
        } else {
            let num = g.gx * g.gx + g.gy * g.gy - d * d;
            let disc = 2.0 * d * d - (g.gx - g.gy) * (g.gx - g.gy);
            num / (g.gx + g.gy + disc.max(0.0).sqrt())
        };
        let x = y / 2.0;
        if x.is_finite() && (g.dmin(x) - d).abs() <= 1e-9 * (1.0 + d) {
            return x.max(0.0);
        }
        bisect(0.0, hi_gap, |x| g.dmin(x) > d + tol)
    } else {
        0.0
    }
}

fn fixed_radius(xw: &ExtremeSet, xh: &ExtremeSet, ell: f64, v: f64, scale: f64) -> f64 {
    let (dw, dh) = (xw.half_span(), xh.half_span());
    let ride = ell / v;
    let r0 = dw.max(dh + ride);
    let g = Gaps::between(&Locus::of(xw, r0), &Locus::of(xh, r0 - ride));
    r0 + fixed_inflation(&g, scale * ell)
}

/// Radius of the variable-length basic problem as a function of the total
/// inflation `c` shared between the two balls.
fn variable_profile(dw: f64, dh: f64, gx: f64, gy: f64, k: f64, c: f64) -> f64 {
    let g = (gx - c).max(0.0).hypot((gy - c).max(0.0));
    dw.max(dh + k * g).max(0.5 * (dw + dh + c + k * g))
}

fn push_roots(out: &mut Vec<f64>, a: f64, b: f64, c: f64) {
    // Real roots of a x² + b x + c = 0.
    if a.abs() < 1e-300 {
        if b != 0.0 {
            out.push(-c / b);
        }
        return;
    }
    let disc = b * b - 4.0 * a * c;
    if disc < 0.0 {
        return;
    }
    let s = disc.sqrt();
    let q = -0.5 * (b + b.signum() * s);
    if q != 0.0 {
        out.push(c / q);
    }
    out.push(q / a);
    if b == 0.0 {
        out.push(s / (2.0 * a));
        out.push(-s / (2.0 * a));
    }
}

/// Minimizer of the (convex) variable-length profile. The minimum lies at a
/// breakpoint of the gap function or where two of the three terms cross, all
/// of which are roots of at most quadratic equations.
fn variable_optimum(dw: f64, dh: f64, gx: f64, gy: f64, k: f64) -> (f64, f64) {
    let d = dw - dh;
    let hi = gx.max(gy);
    let mut cands = vec![0.0, gx, gy];
    if hi > 0.0 {
        if k > 0.0 {
            cands.push(hi - d / k);
        }
        cands.push((k * hi - d) / (1.0 + k));
        if (1.0 - k).abs() > 1e-15 {
            cands.push((d - k * hi) / (1.0 - k));
        }
        let (sum, sq) = (gx + gy, gx * gx + gy * gy);
        let k2 = k * k;
        push_roots(&mut cands, 2.0 * k2, -2.0 * k2 * sum, k2 * sq - d * d);
        push_roots(
            &mut cands,
            2.0 * k2 - 1.0,
            -2.0 * (k2 * sum + d),
            k2 * sq - d * d,
        );
        push_roots(
            &mut cands,
            2.0 * k2 - 1.0,
            -2.0 * (k2 * sum - d),
            k2 * sq - d * d,
        );
        let delta = gy - gx;
        let mut xs = Vec::new();
        push_roots(
            &mut xs,
            2.0 * (2.0 * k2 - 1.0),
            2.0 * delta * (2.0 * k2 - 1.0),
            (k2 - 1.0) * delta * delta,
        );
        cands.extend(xs.into_iter().map(|x| gx - x));
    }
    let mut best = (0.0, variable_profile(dw, dh, gx, gy, k, 0.0));
    for c in cands {
        if !c.is_finite() || c <= 0.0 {
            continue;
        }
        let r = variable_profile(dw, dh, gx, gy, k, c);
        if r < best.1 {
            best = (c, r);
        }
    }
    best
}

fn variable_radius(xw: &ExtremeSet, xh: &ExtremeSet, v: f64, scale: f64) -> f64 {
    let (dw, dh) = (xw.half_span(), xh.half_span());
    let g = Gaps::between(&Locus::of(xw, dw), &Locus::of(xh, dh));
    variable_optimum(dw, dh, g.gx, g.gy, 1.0 / (v * scale)).1
}

fn check_pair(xw: &ExtremeSet, xh: &ExtremeSet) -> Result<f64> {
    if xw.frame != xh.frame {
        return Err(Error::FrameMismatch {
            expected: xw.frame,
            got: xh.frame,
        });
    }
    for p in xw.points().iter().chain(xh.points().iter()) {
        p.check()?;
    }
    Ok(xw.frame.euclid_scale())
}

/// Constant-time basic problem with a prescribed highway length `ell`
/// (measured in the original frame). The frame of the extreme sets decides
/// how Euclidean lengths are measured.
pub fn solve_basic_fixed(
    xw: &ExtremeSet,
    xh: &ExtremeSet,
    ell: f64,
    v: f64,
) -> Result<BasicSolution> {
    check_speed(v)?;
    check_length(ell)?;
    let scale = check_pair(xw, xh)?;
    let radius = fixed_radius(xw, xh, ell, v, scale);
    let ride = ell / v;
    let d = scale * ell;
    let a = Locus::of(xw, radius).rect();
    let b = Locus::of(xh, radius - ride).rect();
    let (c1, c2) = closest_pair(&a, &b);
    let (f1, f2) = farthest_pair(&a, &b);
    let (f, t) = if d <= c1.l2(c2) {
        (c1, c2)
    } else if d >= f1.l2(f2) {
        (f1, f2)
    } else {
        let lam = bisect(0.0, 1.0, |l| c1.lerp(f1, l).l2(c2.lerp(f2, l)) < d);
        (c1.lerp(f1, lam), c2.lerp(f2, lam))
    };
    Ok(BasicSolution {
        f,
        t,
        radius,
        walk_radius: radius,
        ride_radius: radius - ride,
        length_used: ell,
        frame: xw.frame,
    })
}

/// Constant-time basic problem where the highway length is free.
pub fn solve_basic_variable(xw: &ExtremeSet, xh: &ExtremeSet, v: f64) -> Result<BasicSolution> {
    check_speed(v)?;
    let scale = check_pair(xw, xh)?;
    let k = 1.0 / (v * scale);
    let (dw, dh) = (xw.half_span(), xh.half_span());
    let g0 = Gaps::between(&Locus::of(xw, dw), &Locus::of(xh, dh));
    let (c, _) = variable_optimum(dw, dh, g0.gx, g0.gy, k);
    let gc = (g0.gx - c).max(0.0).hypot((g0.gy - c).max(0.0));
    let a = ((dh + c + k * gc - dw) / 2.0).clamp(0.0, c);
    let b = c - a;
    let (f, t) = closest_pair(&Locus::of(xw, dw + a).rect(), &Locus::of(xh, dh + b).rect());
    let length = f.l2(t) / scale;
    let ride_radius = dh + b;
    let radius = (dw + a).max(ride_radius + length / v);
    Ok(BasicSolution {
        f,
        t,
        radius,
        walk_radius: radius,
        ride_radius: radius - length / v,
        length_used: length,
        frame: xw.frame,
    })
}

// ---------------------------------------------------------------------------
// Candidate splits

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
}

/// How the first side of a candidate split is selected from the point set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SplitRule {
    /// The first `count` points in `(axis, other axis, index)` order.
    Axis { axis: Axis, count: usize },
    /// Points with `y > y_above` and `x < x_below` after applying `reflection`.
    Quadrant {
        reflection: Isometry,
        y_above: f64,
        x_below: f64,
    },
    /// The first `count` points ordered by L∞ distance to a bounding-box corner.
    Corner { corner: usize, count: usize },
}

impl SplitRule {
    /// Indices of the first side, in increasing order.
    pub fn first_indices(&self, points: &[Point]) -> Vec<usize> {
        let mut out: Vec<usize> = match *self {
            SplitRule::Axis { axis, count } => axis_order(points, axis)[..count].to_vec(),
            SplitRule::Corner { corner, count } => corner_order(points, corner)[..count].to_vec(),
            SplitRule::Quadrant {
                reflection,
                y_above,
                x_below,
            } => (0..points.len())
                .filter(|&i| {
                    let q = reflection.apply(points[i]);
                    q.y > y_above && q.x < x_below
                })
                .collect(),
        };
        out.sort_unstable();
        out
    }
}

/// A candidate split with the extreme sets of both sides. Neither side is
/// designated as walkers; solvers try both role assignments.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Candidate {
    pub rule: SplitRule,
    pub first: ExtremeSet,
    pub second: ExtremeSet,
}

impl Candidate {
    pub fn partition(&self, points: &[Point], first_walks: bool) -> Partition {
        let first = self.rule.first_indices(points);
        let mut mark = vec![false; points.len()];
        for &i in &first {
            mark[i] = true;
        }
        let second = (0..points.len()).filter(|&i| !mark[i]).collect();
        if first_walks {
            Partition {
                walkers: first,
                riders: second,
            }
        } else {
            Partition {
                walkers: second,
                riders: first,
            }
        }
    }
}

fn axis_order(points: &[Point], axis: Axis) -> Vec<usize> {
    let key = |p: &Point| match axis {
        Axis::X => (p.x, p.y),
        Axis::Y => (p.y, p.x),
    };
    let mut idx: Vec<usize> = (0..points.len()).collect();
    idx.sort_by(|&i, &j| {
        let (a, b) = (key(&points[i]), key(&points[j]));
        a.0.total_cmp(&b.0)
            .then(a.1.total_cmp(&b.1))
            .then(i.cmp(&j))
    });
    idx
}

fn corner_order(points: &[Point], corner: usize) -> Vec<usize> {
    let u = Rect::bounding(points).corners()[corner];
    let mut idx: Vec<usize> = (0..points.len()).collect();
    idx.sort_by(|&i, &j| {
        points[i]
            .linf(u)
            .total_cmp(&points[j].linf(u))
            .then(i.cmp(&j))
    });
    idx
}

fn require_two(s: &FramedSet) -> Result<()> {
    let n = s.points().len();
    if n < 2 {
        return Err(Error::TooFewPoints { needed: 2, got: n });
    }
    Ok(())
}

/// Emits every prefix/suffix split of `order` with incrementally maintained
/// extreme sets.
fn prefix_splits(
    points: &[Point],
    frame: Frame,
    order: &[usize],
    mut rule: impl FnMut(usize) -> SplitRule,
    visit: &mut impl FnMut(&Candidate),
) {
    let n = order.len();
    let mut suffix = vec![ExtremeSet::singleton(points[order[n - 1]], frame); n];
    for k in (0..n - 1).rev() {
        let mut x = suffix[k + 1];
        x.include(points[order[k]]);
        suffix[k] = x;
    }
    let mut prefix = ExtremeSet::singleton(points[order[0]], frame);
    for k in 1..n {
        visit(&Candidate {
            rule: rule(k),
            first: prefix,
            second: suffix[k],
        });
        prefix.include(points[order[k]]);
    }
}

/// Prefix splits of the points sorted along each axis (`2(n - 1)` splits).
pub fn axis_split_candidates(s: &FramedSet, mut visit: impl FnMut(&Candidate)) -> Result<()> {
    require_two(s)?;
    let pts = s.points();
    for axis in [Axis::X, Axis::Y] {
        let order = axis_order(pts, axis);
        prefix_splits(
            pts,
            s.frame(),
            &order,
            |count| SplitRule::Axis { axis, count },
            &mut visit,
        );
    }
    Ok(())
}

/// Prefix splits of the points sorted by L∞ distance to each of the four
/// bounding-box corners (`4(n - 1)` splits).
pub fn corner_candidates(s: &FramedSet, mut visit: impl FnMut(&Candidate)) -> Result<()> {
    require_two(s)?;
    let pts = s.points();
    for corner in 0..4 {
        let order = corner_order(pts, corner);
        prefix_splits(
            pts,
            s.frame(),
            &order,
            |count| SplitRule::Corner { corner, count },
            &mut visit,
        );
    }
    Ok(())
}

/// Quadrant splits `{y > Y, x < X}` under the four axis reflections, swept
/// with `O(n)` live memory.
pub fn quadrant_candidates(s: &FramedSet, mut visit: impl FnMut(&Candidate)) -> Result<()> {
    require_two(s)?;
    let pts = s.points();
    let frame = s.frame();
    let n = pts.len();
    for (flip_x, flip_y) in [(false, false), (true, false), (false, true), (true, true)] {
        let reflection = Isometry {
            swap: false,
            flip_x,
            flip_y,
        };
        let q: Vec<Point> = pts.iter().map(|&p| reflection.apply(p)).collect();
        let order = axis_order(&q, Axis::X);
        let mut ys: Vec<f64> = q.iter().map(|p| p.y).collect();
        ys.sort_by(|a, b| b.total_cmp(a));
        ys.dedup();
        let mut suffix: Vec<Option<ExtremeSet>> = vec![None; n + 1];
        for &y_above in &ys[1..] {
            let mut lower: Option<ExtremeSet> = None;
            for i in 0..n {
                if q[i].y <= y_above {
                    merge_point(&mut lower, pts[i], frame);
                }
            }
            let lower = lower.expect("threshold is attained");
            for k in (0..n).rev() {
                let mut x = suffix[k + 1];
                if q[order[k]].y > y_above {
                    merge_point(&mut x, pts[order[k]], frame);
                }
                suffix[k] = x;
            }
            suffix[n] = None;
            let mut prefix: Option<ExtremeSet> = None;
            let mut dirty = false;
            for k in 0..n {
                let i = order[k];
                if k > 0 && q[i].x > q[order[k - 1]].x && dirty {
                    if let Some(first) = prefix {
                        let second = match suffix[k] {
                            Some(s) => lower.merge(&s),
                            None => lower,
                        };
                        visit(&Candidate {
                            rule: SplitRule::Quadrant {
                                reflection,
                                y_above,
                                x_below: q[i].x,
                            },
                            first,
                            second,
                        });
                    }
                    dirty = false;
                }
                if q[i].y > y_above {
                    merge_point(&mut prefix, pts[i], frame);
                    dirty = true;
                }
            }
        }
    }
    Ok(())
}

fn merge_point(x: &mut Option<ExtremeSet>, p: Point, frame: Frame) {
    match x {
        Some(x) => x.include(p),
        None => *x = Some(ExtremeSet::singleton(p, frame)),
    }
}

// ---------------------------------------------------------------------------
// Solvers

/// Rectilinear 1-center: the facility minimizing the largest L1 distance.
pub fn rectilinear_1center(points: &[Point]) -> Result<(Point, f64)> {
    let s = FramedSet::original(points.to_vec())?.to_linf()?;
    let x = extreme_set_in(s.points(), Frame::Linf)?;
    Ok((from_linf_frame(x.bbox().center())?, x.half_span()))
}

#[derive(Debug, Clone, Copy)]
struct Best {
    radius: f64,
    pick: Option<(Candidate, bool)>,
}

impl Best {
    fn consider(&mut self, c: &Candidate, length: LengthMode, v: f64) {
        let scale = c.first.frame.euclid_scale();
        for first_walks in [true, false] {
            let (w, h) = if first_walks {
                (&c.first, &c.second)
            } else {
                (&c.second, &c.first)
            };
            let r = match length {
                LengthMode::Fixed(ell) => fixed_radius(w, h, ell, v, scale),
                LengthMode::Variable => variable_radius(w, h, v, scale),
            };
            if r < self.radius {
                self.radius = r;
                self.pick = Some((*c, first_walks));
            }
        }
    }
}

fn validate(points: &[Point], length: LengthMode, v: f64) -> Result<FramedSet> {
    if points.is_empty() {
        return Err(Error::EmptySet);
    }
    check_speed(v)?;
    if let LengthMode::Fixed(ell) = length {
        check_length(ell)?;
    }
    FramedSet::original(points.to_vec())?.to_linf()
}

fn finish(
    points: &[Point],
    s: &FramedSet,
    best: Best,
    length: LengthMode,
    v: f64,
) -> Result<TurnpikeSolution> {
    let Some((cand, first_walks)) = best.pick else {
        let (f, radius) = rectilinear_1center(points)?;
        let (t, length) = match length {
            LengthMode::Fixed(ell) => (f + Point::new(ell, 0.0), ell),
            LengthMode::Variable => (f, 0.0),
        };
        return Ok(TurnpikeSolution {
            facility: f,
            t,
            radius,
            length,
            speed: v,
            partition: Partition {
                walkers: (0..points.len()).collect(),
                riders: Vec::new(),
            },
        });
    };
    let partition = cand.partition(s.points(), first_walks);
    let (w, h) = if first_walks {
        (&cand.first, &cand.second)
    } else {
        (&cand.second, &cand.first)
    };
    let basic = match length {
        LengthMode::Fixed(ell) => solve_basic_fixed(w, h, ell, v)?,
        LengthMode::Variable => solve_basic_variable(w, h, v)?,
    };
    Ok(TurnpikeSolution {
        facility: from_linf_frame(basic.f)?,
        t: from_linf_frame(basic.t)?,
        radius: basic.radius,
        length: basic.length_used,
        speed: v,
        partition,
    })
}

fn baseline(s: &FramedSet) -> Result<Best> {
    Ok(Best {
        radius: extreme_set_in(s.points(), Frame::Linf)?.half_span(),
        pick: None,
    })
}

/// Quadratic-time solver over axis and quadrant splits, for either length mode.
pub fn solve_turnpike_quadratic(
    points: &[Point],
    length: LengthMode,
    v: f64,
) -> Result<TurnpikeSolution> {
    let s = validate(points, length, v)?;
    let mut best = baseline(&s)?;
    if points.len() >= 2 {
        axis_split_candidates(&s, |c| best.consider(c, length, v))?;
        quadrant_candidates(&s, |c| best.consider(c, length, v))?;
    }
    finish(points, &s, best, length, v)
}

/// Variable-length solver over axis and corner splits in `O(n log n)`.
pub fn solve_vl_fast(points: &[Point], v: f64) -> Result<TurnpikeSolution> {
    let length = LengthMode::Variable;
    let s = validate(points, length, v)?;
    let mut best = baseline(&s)?;
    if points.len() >= 2 {
        axis_split_candidates(&s, |c| best.consider(c, length, v))?;
        corner_candidates(&s, |c| best.consider(c, length, v))?;
    }
    finish(points, &s, best, length, v)
}

/// Solves a turnpike instance, using the fast path for variable length.
pub fn solve_turnpike(inst: &Instance) -> Result<TurnpikeSolution> {
    inst.validate()?;
    if inst.kind != HighwayKind::Turnpike {
        return Err(Error::KindMismatch("expected a turnpike instance".into()));
    }
    match inst.length {
        LengthMode::Variable => solve_vl_fast(&inst.points, inst.speed),
        fixed => solve_turnpike_quadratic(&inst.points, fixed, inst.speed),
    }
}

#[cfg(test)]
/// Largest violation of the basic-solution invariants for the given point
/// sets (which must be in the solution's frame).
pub(crate) fn basic_violation(sol: &BasicSolution, w: &[Point], h: &[Point], v: f64) -> f64 {
    let cover =
        |c: Point, r: f64, pts: &[Point]| pts.iter().map(|p| p.linf(c) - r).fold(0.0f64, f64::max);
    let scale = sol.frame.euclid_scale();
    let relation = (sol.walk_radius - sol.ride_radius - sol.length_used / v).abs();
    let len = (sol.f.l2(sol.t) / scale - sol.length_used).abs();
    cover(sol.f, sol.walk_radius, w)
        .max(cover(sol.t, sol.ride_radius, h))
        .max(relation)
        .max(len)
        .max(-sol.ride_radius)
        .max((sol.walk_radius - sol.radius).abs())
}
