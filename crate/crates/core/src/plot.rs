//! SVG rendering of an instance and its solution: clients, highway,
//! facility and the ball of all points within the solution radius.
//!
//! The freeway ball is exact. With `u` the highway direction, `a` and `b`
//! the lengths behind and ahead of the facility and `c = <g, u>`, the
//! travel time is
//! `max_g <g, p - f> - b max(0, c - 1/v) - a max(0, -c - 1/v)` over `g` in
//! the unit L∞ square. The maximum is attained at the square's corners or
//! where the lines `c = ±1/v` cross its edges, so the ball is the
//! intersection of at most a dozen half-planes.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::geom::Point;
use crate::metric::{Extent, Highway, HighwayKind};
use crate::problem::Instance;
use crate::solution::{SolutionRecord, RADIUS_TOL};

const WIDTH: f64 = 800.0;

/// Gradients `g` on which the freeway time can be maximal, with the
/// multipliers of the lengths ahead of and behind the facility.
fn dual_gradients(u: Point, v: f64) -> Vec<(Point, f64, f64)> {
    let mut gs = vec![
        Point::new(1.0, 1.0),
        Point::new(1.0, -1.0),
        Point::new(-1.0, 1.0),
        Point::new(-1.0, -1.0),
    ];
    for c in [1.0 / v, -1.0 / v] {
        for s in [1.0, -1.0] {
            if u.y.abs() > 1e-15 {
                let y = (c - u.x * s) / u.y;
                if y.abs() <= 1.0 {
                    gs.push(Point::new(s, y));
                }
            }
            if u.x.abs() > 1e-15 {
                let x = (c - u.y * s) / u.x;
                if x.abs() <= 1.0 {
                    gs.push(Point::new(x, s));
                }
            }
        }
    }
    gs.into_iter()
        .map(|g| {
            let c = g.dot(u);
            let cut = |x: f64| if x <= 1e-12 { 0.0 } else { x };
            (g, cut(c - 1.0 / v), cut(-c - 1.0 / v))
        })
        .collect()
}

/// Keeps the part of `poly` where `<g, p> <= rhs`.
fn clip(poly: &[Point], g: Point, rhs: f64) -> Vec<Point> {
    let mut out = Vec::with_capacity(poly.len() + 1);
    for (i, &p) in poly.iter().enumerate() {
        let q = poly[(i + 1) % poly.len()];
        let (sp, sq) = (g.dot(p) - rhs, g.dot(q) - rhs);
        if sp <= 0.0 {
            out.push(p);
        }
        if (sp < 0.0 && sq > 0.0) || (sp > 0.0 && sq < 0.0) {
            out.push(p.lerp(q, sp / (sp - sq)));
        }
    }
    out
}

/// Drops repeated and collinear vertices.
fn simplify(poly: Vec<Point>, tol: f64) -> Vec<Point> {
    let mut pts: Vec<Point> = Vec::with_capacity(poly.len());
    for p in poly {
        if pts.last().map_or(true, |q: &Point| q.l2(p) > tol) {
            pts.push(p);
        }
    }
    while pts.len() > 1 && pts[0].l2(pts[pts.len() - 1]) <= tol {
        pts.pop();
    }
    loop {
        let n = pts.len();
        if n < 3 {
            return pts;
        }
        let drop = (0..n).find(|&i| {
            let (a, b, c) = (pts[(i + n - 1) % n], pts[i], pts[(i + 1) % n]);
            (b - a).cross(c - b).abs() <= tol * (a.l2(b) + b.l2(c))
        });
        match drop {
            Some(i) => {
                pts.remove(i);
            }
            None => return pts,
        }
    }
}

/// The set of points within time `r` of the facility `f` using freeway `h`,
/// as a convex polygon (counter-clockwise).
pub fn freeway_ball(f: Point, h: &Highway, r: f64) -> Result<Vec<Point>> {
    if h.kind != HighwayKind::Freeway {
        return Err(Error::KindMismatch("expected a freeway".into()));
    }
    if r < 0.0 {
        return Err(Error::NegativeRadius(r));
    }
    let Some(u) = h.direction() else {
        return Ok(diamond(f, r));
    };
    if r == 0.0 {
        return Ok(vec![f]);
    }
    let (ahead, behind) = match h.extent {
        Extent::Line => (f64::INFINITY, f64::INFINITY),
        Extent::Segment => {
            let s = |p: Point| (p - f).dot(u);
            (s(h.a).max(s(h.b)).max(0.0), (-s(h.a)).max(-s(h.b)).max(0.0))
        }
    };
    let half = (h.speed + 1.0) * r * 2.0 + 1.0;
    let mut poly = vec![
        f + Point::new(-half, -half),
        f + Point::new(half, -half),
        f + Point::new(half, half),
        f + Point::new(-half, half),
    ];
    for (g, up, down) in dual_gradients(u, h.speed) {
        let slack =
            if up > 0.0 { ahead * up } else { 0.0 } + if down > 0.0 { behind * down } else { 0.0 };
        if slack.is_finite() {
            poly = clip(&poly, g, g.dot(f) + r + slack);
        }
    }
    Ok(simplify(poly, 1e-12 * (1.0 + r + f.x.abs().max(f.y.abs()))))
}

/// L1 ball as a four-vertex polygon.
pub fn diamond(c: Point, r: f64) -> Vec<Point> {
    vec![
        c + Point::new(r, 0.0),
        c + Point::new(0.0, r),
        c + Point::new(-r, 0.0),
        c + Point::new(0.0, -r),
    ]
}

/// Polygons whose union is the ball of radius `rec.radius` around the
/// facility.
pub fn ball_polygons(rec: &SolutionRecord) -> Result<Vec<Vec<Point>>> {
    let h = rec.highway()?;
    let r = rec.radius;
    match h.kind {
        HighwayKind::Freeway => Ok(vec![freeway_ball(rec.facility, &h, r)?]),
        HighwayKind::Turnpike => {
            let mut polys = vec![diamond(rec.facility, r)];
            let rest = r - h.a.l2(h.b) / h.speed;
            if rest >= -RADIUS_TOL * (1.0 + r) {
                polys.push(diamond(h.a, rest.max(0.0)));
            }
            Ok(polys)
        }
    }
}

fn num(x: f64) -> String {
    let s = format!("{x:.4}");
    if s == "-0.0000" {
        "0.0000".into()
    } else {
        s
    }
}

/// SVG document for `inst` and its solution `rec`.
pub fn plot(inst: &Instance, rec: &SolutionRecord) -> Result<String> {
    if inst.kind != rec.kind {
        return Err(Error::KindMismatch(format!(
            "instance is a {:?} problem, solution describes a {:?}",
            inst.kind, rec.kind
        )));
    }
    let h = rec.highway()?;
    let balls = ball_polygons(rec)?;
    let mut all: Vec<Point> = inst.points.clone();
    all.push(rec.facility);
    if h.extent == Extent::Segment {
        all.extend([h.a, h.b]);
    }
    all.extend(balls.iter().flatten());
    let (mut lo, mut hi) = (all[0], all[0]);
    for p in &all {
        lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
    }
    let span = (hi.x - lo.x).max(hi.y - lo.y).max(1.0);
    let pad = 0.05 * span;
    let (vx, vy) = (lo.x - pad, -(hi.y + pad));
    let (vw, vh) = (hi.x - lo.x + 2.0 * pad, hi.y - lo.y + 2.0 * pad);
    let height = WIDTH * vh / vw;
    let stroke = span / 400.0;
    let pt = |p: Point| format!("{},{}", num(p.x), num(-p.y));

    let mut s = String::new();
    writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="{} {} {} {}">"#,
        num(WIDTH),
        num(height),
        num(vx),
        num(vy),
        num(vw),
        num(vh)
    )
    .unwrap();
    writeln!(
        s,
        r#"  <title>{} solution, radius {}</title>"#,
        match rec.kind {
            HighwayKind::Turnpike => "turnpike",
            HighwayKind::Freeway => "freeway",
        },
        rec.radius
    )
    .unwrap();
    writeln!(
        s,
        r##"  <rect x="{}" y="{}" width="{}" height="{}" fill="#ffffff"/>"##,
        num(vx),
        num(vy),
        num(vw),
        num(vh)
    )
    .unwrap();
    for poly in &balls {
        let pts: Vec<String> = poly.iter().map(|&p| pt(p)).collect();
        writeln!(
            s,
            r##"  <polygon class="ball" points="{}" fill="#4a90d9" fill-opacity="0.15" stroke="#4a90d9" stroke-width="{}"/>"##,
            pts.join(" "),
            num(stroke)
        )
        .unwrap();
    }
    let (a, b) = match h.extent {
        Extent::Segment => (h.a, h.b),
        Extent::Line => {
            let d = h.direction().unwrap_or(Point::new(1.0, 0.0)) * (4.0 * span);
            (rec.facility - d, rec.facility + d)
        }
    };
    let (pa, pb) = (pt(a), pt(b));
    let (ax, ay) = pa.split_once(',').expect("pair");
    let (bx, by) = pb.split_once(',').expect("pair");
    writeln!(
        s,
        r##"  <line class="highway" x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" stroke="#d9534f" stroke-width="{}"/>"##,
        num(3.0 * stroke)
    )
    .unwrap();
    for p in &inst.points {
        writeln!(
            s,
            r##"  <circle class="client" cx="{}" cy="{}" r="{}" fill="#222222"/>"##,
            num(p.x),
            num(-p.y),
            num(3.0 * stroke)
        )
        .unwrap();
    }
    let m = 6.0 * stroke;
    let f = rec.facility;
    writeln!(
        s,
        r##"  <rect class="facility" x="{}" y="{}" width="{}" height="{}" fill="#f0ad4e" stroke="#222222" stroke-width="{}"/>"##,
        num(f.x - m / 2.0),
        num(-f.y - m / 2.0),
        num(m),
        num(m),
        num(stroke / 2.0)
    )
    .unwrap();
    s.push_str("</svg>\n");
    Ok(s)
}
