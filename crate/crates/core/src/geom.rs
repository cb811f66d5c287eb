//! Planar primitives shared by every solver.
//!
//! The turnpike solver works in the frame obtained from the 45 degree map
//! `(x, y) -> (x + y, x - y)`, in which L1 balls of the input plane become
//! axis-parallel squares (L∞ balls). [`Frame`] tags which of the two frames a
//! set of coordinates lives in so that the two are never mixed silently.

use std::cmp::Ordering;
use std::f64::consts::SQRT_2;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute tolerance used for distance comparisons throughout the crate.
pub const EPS: f64 = 1e-9;

/// Serialized as a two-element array `[x, y]`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub(crate) fn check(self) -> Result<Self> {
        if self.is_finite() {
            Ok(self)
        } else {
            Err(Error::NonFinite)
        }
    }

    pub fn dot(self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y
    }

    pub fn cross(self, o: Point) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn l1(self, o: Point) -> f64 {
        (self.x - o.x).abs() + (self.y - o.y).abs()
    }

    pub fn linf(self, o: Point) -> f64 {
        (self.x - o.x).abs().max((self.y - o.y).abs())
    }

    pub fn l2(self, o: Point) -> f64 {
        (self.x - o.x).hypot(self.y - o.y)
    }

    pub fn lerp(self, o: Point, t: f64) -> Point {
        Point::new(self.x + (o.x - self.x) * t, self.y + (o.y - self.y) * t)
    }

    /// Lexicographic order on `(x, y)`.
    pub fn lex_cmp(&self, o: &Point) -> Ordering {
        self.x.total_cmp(&o.x).then(self.y.total_cmp(&o.y))
    }

    fn lex_cmp_yx(&self, o: &Point) -> Ordering {
        self.y.total_cmp(&o.y).then(self.x.total_cmp(&o.x))
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, k: f64) -> Point {
        Point::new(self.x * k, self.y * k)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

impl From<[f64; 2]> for Point {
    fn from([x, y]: [f64; 2]) -> Self {
        Point::new(x, y)
    }
}

impl From<Point> for [f64; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

impl From<(f64, f64)> for Point {
    fn from((x, y): (f64, f64)) -> Self {
        Point::new(x, y)
    }
}

pub fn l1_distance(p: Point, q: Point) -> Result<f64> {
    Ok(p.check()?.l1(q.check()?))
}

pub fn linf_distance(p: Point, q: Point) -> Result<f64> {
    Ok(p.check()?.linf(q.check()?))
}

pub fn l2_distance(p: Point, q: Point) -> Result<f64> {
    Ok(p.check()?.l2(q.check()?))
}

/// Coordinate frame of a point set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Frame {
    /// Input coordinates, walking distance is L1.
    Original,
    /// Rotated coordinates `(x + y, x - y)`, walking distance is L∞.
    Linf,
}

impl Frame {
    /// Factor by which Euclidean lengths measured in the original frame are
    /// scaled in this frame.
    pub fn euclid_scale(self) -> f64 {
        match self {
            Frame::Original => 1.0,
            Frame::Linf => SQRT_2,
        }
    }
}

pub fn to_linf_frame(p: Point) -> Result<Point> {
    let p = p.check()?;
    Ok(Point::new(p.x + p.y, p.x - p.y))
}

pub fn from_linf_frame(p: Point) -> Result<Point> {
    let p = p.check()?;
    Ok(Point::new((p.x + p.y) / 2.0, (p.x - p.y) / 2.0))
}

/// A point set together with the frame its coordinates are expressed in.
#[derive(Debug, Clone, PartialEq)]
pub struct FramedSet {
    frame: Frame,
    points: Vec<Point>,
}

impl FramedSet {
    pub fn original(points: Vec<Point>) -> Result<Self> {
        for p in &points {
            p.check()?;
        }
        Ok(FramedSet {
            frame: Frame::Original,
            points,
        })
    }

    pub fn frame(&self) -> Frame {
        self.frame
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// Moves the set into the L∞ frame. Fails if it is already there.
    pub fn to_linf(&self) -> Result<FramedSet> {
        self.expect(Frame::Original)?;
        let points = self
            .points
            .iter()
            .map(|&p| to_linf_frame(p))
            .collect::<Result<_>>()?;
        Ok(FramedSet {
            frame: Frame::Linf,
            points,
        })
    }

    pub fn to_original(&self) -> Result<FramedSet> {
        self.expect(Frame::Linf)?;
        let points = self
            .points
            .iter()
            .map(|&p| from_linf_frame(p))
            .collect::<Result<_>>()?;
        Ok(FramedSet {
            frame: Frame::Original,
            points,
        })
    }

    pub fn expect(&self, frame: Frame) -> Result<()> {
        if self.frame == frame {
            Ok(())
        } else {
            Err(Error::FrameMismatch {
                expected: frame,
                got: self.frame,
            })
        }
    }
}

/// Axis-parallel rectangle. The empty rectangle is a regular value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rect {
    pub xmin: f64,
    pub xmax: f64,
    pub ymin: f64,
    pub ymax: f64,
}

impl Rect {
    pub const EMPTY: Rect = Rect {
        xmin: f64::INFINITY,
        xmax: f64::NEG_INFINITY,
        ymin: f64::INFINITY,
        ymax: f64::NEG_INFINITY,
    };

    /// Builds `[xmin, xmax] x [ymin, ymax]`, or [`Rect::EMPTY`] if either side
    /// is inverted.
    pub fn new(xmin: f64, xmax: f64, ymin: f64, ymax: f64) -> Rect {
        if xmin > xmax || ymin > ymax {
            Rect::EMPTY
        } else {
            Rect {
                xmin,
                xmax,
                ymin,
                ymax,
            }
        }
    }

    pub fn point(p: Point) -> Rect {
        Rect::new(p.x, p.x, p.y, p.y)
    }

    pub fn is_empty(&self) -> bool {
        !(self.xmin <= self.xmax && self.ymin <= self.ymax)
    }

    pub fn width(&self) -> f64 {
        self.xmax - self.xmin
    }

    pub fn height(&self) -> f64 {
        self.ymax - self.ymin
    }

    pub fn center(&self) -> Point {
        Point::new((self.xmin + self.xmax) / 2.0, (self.ymin + self.ymax) / 2.0)
    }

    pub fn contains(&self, p: Point, tol: f64) -> bool {
        p.x >= self.xmin - tol
            && p.x <= self.xmax + tol
            && p.y >= self.ymin - tol
            && p.y <= self.ymax + tol
    }

    /// Grows every side outwards by `d`.
    pub fn inflate(&self, d: f64) -> Rect {
        if self.is_empty() {
            return Rect::EMPTY;
        }
        Rect::new(self.xmin - d, self.xmax + d, self.ymin - d, self.ymax + d)
    }

    pub fn corners(&self) -> [Point; 4] {
        [
            Point::new(self.xmin, self.ymin),
            Point::new(self.xmax, self.ymin),
            Point::new(self.xmax, self.ymax),
            Point::new(self.xmin, self.ymax),
        ]
    }

    pub fn clamp(&self, p: Point) -> Point {
        Point::new(
            p.x.clamp(self.xmin, self.xmax),
            p.y.clamp(self.ymin, self.ymax),
        )
    }

    pub fn bounding(points: &[Point]) -> Rect {
        points.iter().fold(Rect::EMPTY, |r, p| {
            if r.is_empty() {
                Rect::point(*p)
            } else {
                Rect {
                    xmin: r.xmin.min(p.x),
                    xmax: r.xmax.max(p.x),
                    ymin: r.ymin.min(p.y),
                    ymax: r.ymax.max(p.y),
                }
            }
        })
    }
}

/// The west-, east-, south- and northmost points of a set.
///
/// Ties are resolved lexicographically: `west` is the lexicographic minimum of
/// `(x, y)`, `east` the maximum, and `south`/`north` the minimum/maximum of
/// `(y, x)`. Duplicated points are allowed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremeSet {
    pub west: Point,
    pub east: Point,
    pub south: Point,
    pub north: Point,
    pub frame: Frame,
}

impl ExtremeSet {
    pub fn singleton(p: Point, frame: Frame) -> Self {
        ExtremeSet {
            west: p,
            east: p,
            south: p,
            north: p,
            frame,
        }
    }

    pub fn include(&mut self, p: Point) {
        if p.lex_cmp(&self.west) == Ordering::Less {
            self.west = p;
        }
        if p.lex_cmp(&self.east) == Ordering::Greater {
            self.east = p;
        }
        if p.lex_cmp_yx(&self.south) == Ordering::Less {
            self.south = p;
        }
        if p.lex_cmp_yx(&self.north) == Ordering::Greater {
            self.north = p;
        }
    }

    pub fn merge(&self, other: &ExtremeSet) -> ExtremeSet {
        let mut out = *self;
        for p in other.points() {
            out.include(p);
        }
        out
    }

    pub fn points(&self) -> [Point; 4] {
        [self.west, self.east, self.south, self.north]
    }

    pub fn bbox(&self) -> Rect {
        Rect {
            xmin: self.west.x,
            xmax: self.east.x,
            ymin: self.south.y,
            ymax: self.north.y,
        }
    }

    /// Half of the L∞ diameter of the originating set.
    pub fn half_span(&self) -> f64 {
        let b = self.bbox();
        b.width().max(b.height()) / 2.0
    }
}

/// Extreme set of `points`, which are taken to be in `frame`.
pub fn extreme_set_in(points: &[Point], frame: Frame) -> Result<ExtremeSet> {
    let (first, rest) = points.split_first().ok_or(Error::EmptySet)?;
    let mut x = ExtremeSet::singleton(first.check()?, frame);
    for p in rest {
        x.include(p.check()?);
    }
    Ok(x)
}

pub fn extreme_set(points: &[Point]) -> Result<ExtremeSet> {
    extreme_set_in(points, Frame::Original)
}

/// Half of the largest L∞ distance between two points of the set.
pub fn half_span(points: &[Point]) -> Result<f64> {
    Ok(extreme_set(points)?.half_span())
}

/// Locus of centers of the L∞ balls of radius `r` that cover the set whose
/// extremes are `x`.
pub fn center_locus(x: &ExtremeSet, r: f64) -> Result<Rect> {
    if !r.is_finite() {
        return Err(Error::NonFinite);
    }
    if r < 0.0 {
        return Err(Error::NegativeRadius(r));
    }
    let b = x.bbox();
    Ok(Rect::new(b.xmax - r, b.xmin + r, b.ymax - r, b.ymin + r))
}

/// Smallest and largest Euclidean distance between a point of `a` and a
/// point of `b`.
pub fn rect_distance_bounds(a: &Rect, b: &Rect) -> Result<(f64, f64)> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyRect);
    }
    let gx = (b.xmin - a.xmax).max(a.xmin - b.xmax).max(0.0);
    let gy = (b.ymin - a.ymax).max(a.ymin - b.ymax).max(0.0);
    let sx = (b.xmax - a.xmin).max(a.xmax - b.xmin);
    let sy = (b.ymax - a.ymin).max(a.ymax - b.ymin);
    Ok((gx.hypot(gy), sx.hypot(sy)))
}

/// A pair of points realizing the smallest distance between two non-empty
/// rectangles.
pub(crate) fn closest_pair(a: &Rect, b: &Rect) -> (Point, Point) {
    fn axis(alo: f64, ahi: f64, blo: f64, bhi: f64) -> (f64, f64) {
        if ahi < blo {
            (ahi, blo)
        } else if bhi < alo {
            (alo, bhi)
        } else {
            let m = (alo.max(blo) + ahi.min(bhi)) / 2.0;
            (m, m)
        }
    }
    let (ax, bx) = axis(a.xmin, a.xmax, b.xmin, b.xmax);
    let (ay, by) = axis(a.ymin, a.ymax, b.ymin, b.ymax);
    (Point::new(ax, ay), Point::new(bx, by))
}

/// A pair of corners realizing the largest distance between two non-empty
/// rectangles.
pub(crate) fn farthest_pair(a: &Rect, b: &Rect) -> (Point, Point) {
    let (ax, bx) = if b.xmax - a.xmin >= a.xmax - b.xmin {
        (a.xmin, b.xmax)
    } else {
        (a.xmax, b.xmin)
    };
    let (ay, by) = if b.ymax - a.ymin >= a.ymax - b.ymin {
        (a.ymin, b.ymax)
    } else {
        (a.ymax, b.ymin)
    };
    (Point::new(ax, ay), Point::new(bx, by))
}

/// One of the eight signed coordinate permutations. All of them preserve both
/// the L1 and the Euclidean distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Isometry {
    pub swap: bool,
    pub flip_x: bool,
    pub flip_y: bool,
}

impl Isometry {
    pub const IDENTITY: Isometry = Isometry {
        swap: false,
        flip_x: false,
        flip_y: false,
    };

    pub fn all() -> [Isometry; 8] {
        let mut out = [Isometry::IDENTITY; 8];
        for (i, iso) in out.iter_mut().enumerate() {
            *iso = Isometry {
                swap: i & 1 != 0,
                flip_x: i & 2 != 0,
                flip_y: i & 4 != 0,
            };
        }
        out
    }

    pub fn apply(&self, p: Point) -> Point {
        let (x, y) = if self.swap { (p.y, p.x) } else { (p.x, p.y) };
        Point::new(
            if self.flip_x { -x } else { x },
            if self.flip_y { -y } else { y },
        )
    }

    pub fn invert(&self, p: Point) -> Point {
        let x = if self.flip_x { -p.x } else { p.x };
        let y = if self.flip_y { -p.y } else { p.y };
        if self.swap {
            Point::new(y, x)
        } else {
            Point::new(x, y)
        }
    }
}

/// Convex hull in counter-clockwise order without collinear vertices
/// (Andrew's monotone chain). Duplicates are removed; a set of identical
/// points yields a single vertex.
pub fn convex_hull(points: &[Point]) -> Vec<Point> {
    let mut p: Vec<Point> = points.to_vec();
    p.sort_by(|a, b| a.lex_cmp(b));
    p.dedup();
    if p.len() <= 2 {
        return p;
    }
    let turn = |o: Point, a: Point, b: Point| (a - o).cross(b - o);
    let mut hull: Vec<Point> = Vec::with_capacity(2 * p.len());
    for &q in &p {
        while hull.len() >= 2 && turn(hull[hull.len() - 2], hull[hull.len() - 1], q) <= 0.0 {
            hull.pop();
        }
        hull.push(q);
    }
    let lower = hull.len() + 1;
    for &q in p.iter().rev().skip(1) {
        while hull.len() >= lower && turn(hull[hull.len() - 2], hull[hull.len() - 1], q) <= 0.0 {
            hull.pop();
        }
        hull.push(q);
    }
    hull.pop();
    hull
}
