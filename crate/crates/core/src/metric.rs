//! Travel time to the facility when walking is L1 at unit speed and a
//! highway can be ridden at speed `v > 1`.
//!
//! A turnpike can only be entered and left at its endpoints. A freeway can be
//! entered anywhere; for a facility lying on the freeway the ride cost from an
//! entry parameter `s` is `|s - s_f| / v`, so the total cost
//! `|p - q(s)|_1 + |s - s_f| / v` is convex and piecewise linear in `s` with
//! breakpoints only at the vertical projection of `p`, its horizontal
//! projection and the facility itself. The minimum over the highway is
//! therefore attained at one of those breakpoints (clamped to the segment) or
//! at an endpoint, and [`entry_point`] simply evaluates that candidate set.

use std::f64::consts::FRAC_PI_4;

use serde::{Deserialize, Serialize};

use crate::error::{check_speed, Error, Result};
use crate::geom::{Isometry, Point, EPS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HighwayKind {
    Turnpike,
    Freeway,
}

/// Whether a highway is a finite segment or an infinite line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Extent {
    Segment,
    Line,
}

/// A turnpike or freeway.
///
/// For a segment, `a` and `b` are the endpoints (for a turnpike carrying the
/// facility, `b` is the endpoint at the facility). For a line, `a` is an
/// anchor on the line and `b - a` is the unit direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Highway {
    pub a: Point,
    pub b: Point,
    pub kind: HighwayKind,
    pub extent: Extent,
    pub speed: f64,
}

impl Highway {
    pub fn turnpike(t: Point, t2: Point, speed: f64) -> Result<Self> {
        check_speed(speed)?;
        Ok(Highway {
            a: t.check()?,
            b: t2.check()?,
            kind: HighwayKind::Turnpike,
            extent: Extent::Segment,
            speed,
        })
    }

    pub fn freeway(a: Point, b: Point, speed: f64) -> Result<Self> {
        check_speed(speed)?;
        Ok(Highway {
            a: a.check()?,
            b: b.check()?,
            kind: HighwayKind::Freeway,
            extent: Extent::Segment,
            speed,
        })
    }

    /// Infinite freeway through `anchor` with the given direction.
    pub fn freeway_line(anchor: Point, direction: Point, speed: f64) -> Result<Self> {
        check_speed(speed)?;
        let n = direction.check()?.norm();
        if n == 0.0 {
            return Err(Error::DegenerateHighway("zero direction".into()));
        }
        let anchor = anchor.check()?;
        Ok(Highway {
            a: anchor,
            b: anchor + direction * (1.0 / n),
            kind: HighwayKind::Freeway,
            extent: Extent::Line,
            speed,
        })
    }

    /// Euclidean length; infinite for a line.
    pub fn length(&self) -> f64 {
        match self.extent {
            Extent::Segment => self.a.l2(self.b),
            Extent::Line => f64::INFINITY,
        }
    }

    /// Unit direction from `a` towards `b`, if the highway is not a point.
    pub fn direction(&self) -> Option<Point> {
        let d = self.b - self.a;
        let n = d.norm();
        (n > 0.0).then(|| d * (1.0 / n))
    }

    /// Orientation in `[0, pi)`.
    pub fn angle(&self) -> Option<f64> {
        self.direction().map(|d| {
            let a = d.y.atan2(d.x);
            if a < 0.0 {
                a + std::f64::consts::PI
            } else if a >= std::f64::consts::PI {
                a - std::f64::consts::PI
            } else {
                a
            }
        })
    }

    /// Lexicographically smaller endpoint (`e`) and the other one (`e'`).
    pub fn ordered_endpoints(&self) -> (Point, Point) {
        if self.a.lex_cmp(&self.b).is_le() {
            (self.a, self.b)
        } else {
            (self.b, self.a)
        }
    }

    fn validate(&self) -> Result<()> {
        check_speed(self.speed)?;
        self.a.check()?;
        self.b.check()?;
        Ok(())
    }
}

pub fn turnpike_time(p: Point, f: Point, t: Point, t2: Point, v: f64) -> Result<f64> {
    check_speed(v)?;
    let (p, f, t, t2) = (p.check()?, f.check()?, t.check()?, t2.check()?);
    let ride = t.l2(t2) / v;
    Ok(p.l1(f)
        .min(p.l1(t) + ride + t2.l1(f))
        .min(p.l1(t2) + ride + t.l1(f)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EntryMode {
    Walk,
    ViaEndpointE,
    ViaEndpointE2,
    VerticalProjection,
    HorizontalProjection,
    AtFacility,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntryResult {
    pub entry: Point,
    pub mode: EntryMode,
    pub time: f64,
}

/// Arc-length parametrization of a freeway with the facility located on it.
#[derive(Debug, Clone, Copy)]
struct Track {
    origin: Point,
    dir: Point,
    lo: f64,
    hi: f64,
    facility: f64,
    speed: f64,
}

impl Track {
    fn new(h: &Highway, f: Point) -> Result<Track> {
        h.validate()?;
        f.check()?;
        if h.kind != HighwayKind::Freeway {
            return Err(Error::KindMismatch("expected a freeway".into()));
        }
        let (e, e2) = h.ordered_endpoints();
        let scale = 1.0 + f.x.abs().max(f.y.abs()) + e.x.abs().max(e.y.abs());
        let tol = EPS * scale;
        let Some(dir) = h.direction() else {
            // A point-sized freeway only carries the facility itself.
            let off = f.l2(e);
            if off > tol {
                return Err(Error::NotOnHighway(off));
            }
            return Ok(Track {
                origin: f,
                dir: Point::new(1.0, 0.0),
                lo: 0.0,
                hi: 0.0,
                facility: 0.0,
                speed: h.speed,
            });
        };
        let (origin, dir, lo, hi) = match h.extent {
            Extent::Segment => {
                let dir = (e2 - e) * (1.0 / e.l2(e2));
                (e, dir, 0.0, e.l2(e2))
            }
            Extent::Line => (h.a, dir, f64::NEG_INFINITY, f64::INFINITY),
        };
        let rel = f - origin;
        let off = dir.cross(rel).abs();
        let s = dir.dot(rel);
        let along = if s < lo {
            lo - s
        } else if s > hi {
            s - hi
        } else {
            0.0
        };
        let miss = off.max(along);
        if miss > tol {
            return Err(Error::NotOnHighway(miss));
        }
        Ok(Track {
            origin,
            dir,
            lo,
            hi,
            facility: s.clamp(lo, hi),
            speed: h.speed,
        })
    }

    fn at(&self, s: f64) -> Point {
        self.origin + self.dir * s
    }

    fn cost(&self, p: Point, s: f64) -> f64 {
        p.l1(self.at(s)) + (s - self.facility).abs() / self.speed
    }
}

/// Ties between candidates of (almost) equal cost go to the earlier one.
const TIE: f64 = 1e-12;

/// Shortest-path witness for the freeway metric.
///
/// Candidates are tried in the order walk, `e`, `e'`, vertical projection,
/// horizontal projection; a later candidate only wins if it is strictly
/// cheaper. Projections whose direction is parallel to the freeway are
/// skipped.
pub fn entry_point(p: Point, f: Point, h: &Highway) -> Result<EntryResult> {
    let track = Track::new(h, f)?;
    let p = p.check()?;
    let fpt = track.at(track.facility);
    if p == f {
        return Ok(EntryResult {
            entry: f,
            mode: EntryMode::AtFacility,
            time: 0.0,
        });
    }
    let mut best = EntryResult {
        entry: f,
        mode: EntryMode::Walk,
        time: p.l1(f),
    };
    let mut consider = |s: f64, mode: EntryMode| {
        let s = s.clamp(track.lo, track.hi);
        let t = track.cost(p, s);
        if t < best.time - TIE * (1.0 + best.time) {
            best = EntryResult {
                entry: track.at(s),
                mode,
                time: t,
            };
        }
    };
    if track.lo.is_finite() {
        consider(track.lo, EntryMode::ViaEndpointE);
        consider(track.hi, EntryMode::ViaEndpointE2);
    }
    let rel = p - track.origin;
    if track.dir.x.abs() > 1e-12 {
        consider(rel.x / track.dir.x, EntryMode::VerticalProjection);
    }
    if track.dir.y.abs() > 1e-12 {
        consider(rel.y / track.dir.y, EntryMode::HorizontalProjection);
    }
    // The facility is exactly on the track; report it there.
    if best.mode == EntryMode::Walk {
        best.entry = fpt;
    }
    Ok(best)
}

pub fn freeway_time(p: Point, f: Point, h: &Highway) -> Result<f64> {
    Ok(entry_point(p, f, h)?.time)
}

/// Largest travel time from a point of `points` to the facility.
pub fn objective_radius(points: &[Point], f: Point, h: &Highway) -> Result<f64> {
    if points.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut worst = 0.0f64;
    for &p in points {
        let t = match h.kind {
            HighwayKind::Turnpike => turnpike_time(p, f, h.a, h.b, h.speed)?,
            HighwayKind::Freeway => freeway_time(p, f, h)?,
        };
        worst = worst.max(t);
    }
    Ok(worst)
}

/// Slope above which shortest paths never leave the freeway through its
/// horizontal projection: `pi/4 - asin(sqrt(2) / (2 v))`.
pub fn critical_angle(v: f64) -> Result<f64> {
    check_speed(v)?;
    Ok(FRAC_PI_4 - (std::f64::consts::SQRT_2 / (2.0 * v)).asin())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpmRegime {
    /// `phi_v < alpha <= pi/4`: three regions.
    Steep,
    /// `0 <= alpha <= phi_v`: eight regions.
    Shallow,
}

/// Region classification of the published shortest-path map, compared
/// against the candidate evaluation of [`entry_point`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpmDiagnostic {
    pub regime: SpmRegime,
    /// 1-based region, `None` if no case of the table applies.
    pub region: Option<u8>,
    pub prescribed_entry: Option<Point>,
    pub prescribed_time: Option<f64>,
    pub actual: EntryResult,
    /// The region's entry is worse than the true shortest path (or the region
    /// prescribes nothing).
    pub discrepancy: bool,
}

/// Maps the plane so that the highway's slope lies in `[0, pi/4]`.
fn normalizing_isometry(dir: Point) -> (Isometry, Point) {
    for iso in Isometry::all() {
        for d in [iso.apply(dir), -iso.apply(dir)] {
            if d.x > 0.0 && d.y >= 0.0 && d.x >= d.y {
                return (iso, d);
            }
        }
    }
    unreachable!("every direction has a normalizing signed permutation")
}

/// Classifies `p` by the region table of the shortest-path map. Diagnostic
/// only: the table is known to disagree with the true metric in places.
pub fn spm_region(p: Point, f: Point, h: &Highway) -> Result<SpmDiagnostic> {
    let actual = entry_point(p, f, h)?;
    let v = h.speed;
    let dir = h
        .direction()
        .ok_or_else(|| Error::DegenerateHighway("zero-length freeway".into()))?;
    let (iso, d) = normalizing_isometry(dir);
    let alpha = d.y.atan2(d.x);
    let phi = critical_angle(v)?;
    let np = iso.apply(p);
    let nf = iso.apply(f);
    let (ne, ne2) = match h.extent {
        Extent::Segment => {
            let (x, y) = (iso.apply(h.a), iso.apply(h.b));
            if x.lex_cmp(&y).is_le() {
                (x, y)
            } else {
                (y, x)
            }
        }
        Extent::Line => (
            Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY),
            Point::new(f64::INFINITY, f64::INFINITY),
        ),
    };
    let above = d.cross(np - nf) >= 0.0;
    let clamp_x = |x: f64| {
        let lo = if ne.x.is_finite() {
            ne.x
        } else {
            f64::NEG_INFINITY
        };
        let hi = if ne2.x.is_finite() {
            ne2.x
        } else {
            f64::INFINITY
        };
        x.clamp(lo, hi)
    };
    let on_line_x = |x: f64| nf + d * ((x - nf.x) / d.x);
    let vertical = on_line_x(clamp_x(np.x));
    let horizontal = (d.y > 0.0).then(|| {
        let q = nf + d * ((np.y - nf.y) / d.y);
        on_line_x(clamp_x(q.x))
    });

    let (regime, region, entry) = if alpha > phi {
        let (r, q) = if np.x <= ne.x {
            (1, Some(ne))
        } else if np.x >= ne2.x {
            (2, Some(ne2))
        } else {
            (3, Some(vertical))
        };
        (SpmRegime::Steep, Some(r), q)
    } else {
        let cases: [(bool, Option<Point>); 8] = [
            (np.x <= ne.x && np.y <= ne.y, Some(ne)),
            (np.x >= ne2.x && np.y >= ne2.y, Some(ne2)),
            (nf.x <= np.x && np.x <= ne2.x && above, Some(vertical)),
            (nf.y <= np.y && np.y <= ne2.y && !above, horizontal),
            (ne.y <= np.y && np.y <= nf.y && above, horizontal),
            (ne.x <= np.x && np.x <= nf.x && !above, Some(vertical)),
            (np.x <= nf.x && np.y >= nf.y, Some(nf)),
            (np.x >= nf.x && np.y <= nf.y, Some(nf)),
        ];
        match cases.iter().position(|(hit, _)| *hit) {
            Some(i) => (SpmRegime::Shallow, Some(i as u8 + 1), cases[i].1),
            None => (SpmRegime::Shallow, None, None),
        }
    };
    let prescribed_time = entry.map(|q| np.l1(q) + q.l2(nf) / v);
    let discrepancy = match prescribed_time {
        Some(t) => t > actual.time + EPS * (1.0 + actual.time),
        None => true,
    };
    Ok(SpmDiagnostic {
        regime,
        region,
        prescribed_entry: entry.map(|q| iso.invert(q)),
        prescribed_time,
        actual,
        discrepancy,
    })
}

/// Family of a linear piece of the freeway distance function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GradientMode {
    /// L1 quadrant gradients `(±1, ±1)`; also covers entry through an endpoint.
    Walk,
    VerticalProjection,
    HorizontalProjection,
}

/// One gradient family, parametrized by the orientation `alpha` in `[0, pi/4]`.
///
/// `s1` is the sign of the walking leg perpendicular to the projection and
/// `s2` the sign of the ride.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GradientFamily {
    pub mode: GradientMode,
    pub s1: i8,
    pub s2: i8,
}

impl GradientFamily {
    pub fn all() -> Vec<GradientFamily> {
        let mut out = Vec::with_capacity(12);
        for mode in [
            GradientMode::Walk,
            GradientMode::VerticalProjection,
            GradientMode::HorizontalProjection,
        ] {
            for s1 in [1i8, -1] {
                for s2 in [1i8, -1] {
                    out.push(GradientFamily { mode, s1, s2 });
                }
            }
        }
        out
    }

    /// The gradient of the distance function, `None` where it is undefined
    /// (horizontal projection on a horizontal freeway).
    pub fn gradient(&self, alpha: f64, v: f64) -> Option<Point> {
        let (s1, s2) = (self.s1 as f64, self.s2 as f64);
        match self.mode {
            GradientMode::Walk => Some(Point::new(s2, s1)),
            GradientMode::VerticalProjection => {
                Some(Point::new(s2 / (v * alpha.cos()) - s1 * alpha.tan(), s1))
            }
            GradientMode::HorizontalProjection => {
                (alpha > 0.0).then(|| Point::new(s1, s2 / (v * alpha.sin()) - s1 / alpha.tan()))
            }
        }
    }

    /// A positive multiple of [`Self::gradient`] that stays finite at
    /// `alpha = 0`, where it gives the limiting direction.
    pub fn direction(&self, alpha: f64, v: f64) -> Point {
        let (s1, s2) = (self.s1 as f64, self.s2 as f64);
        let (sin, cos) = alpha.sin_cos();
        match self.mode {
            GradientMode::Walk => Point::new(s2, s1),
            GradientMode::VerticalProjection => Point::new(s2 / v - s1 * sin, s1 * cos),
            GradientMode::HorizontalProjection => Point::new(s1 * sin, s2 / v - s1 * cos),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BundleEntry {
    pub gradient: Point,
    pub family: GradientFamily,
}

/// Gradients of every linear piece the freeway distance can take at a given
/// orientation. This is a superset of the pieces that actually occur.
#[derive(Debug, Clone, PartialEq)]
pub struct DirectionBundle {
    pub alpha: f64,
    pub speed: f64,
    pub entries: Vec<BundleEntry>,
}

pub fn direction_bundle(alpha: f64, v: f64) -> Result<DirectionBundle> {
    check_speed(v)?;
    if !alpha.is_finite() {
        return Err(Error::NonFinite);
    }
    if !(0.0..=FRAC_PI_4).contains(&alpha) {
        return Err(Error::AngleOutOfRange(alpha));
    }
    let entries = GradientFamily::all()
        .into_iter()
        .filter_map(|family| {
            family
                .gradient(alpha, v)
                .map(|gradient| BundleEntry { gradient, family })
        })
        .collect();
    Ok(DirectionBundle {
        alpha,
        speed: v,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn pt(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    fn x_axis_freeway() -> Highway {
        Highway::freeway(pt(-2., 0.), pt(10., 0.), 2.0).unwrap()
    }

    #[test]
    fn turnpike_examples() {
        let t = turnpike_time(pt(0., 0.), pt(10., 0.), pt(1., 0.), pt(10., 0.), 3.0).unwrap();
        assert!((t - 4.0).abs() < 1e-12);
        let t = turnpike_time(pt(0., 0.), pt(2., 0.), pt(1., 5.), pt(2., 0.), 10.0).unwrap();
        assert_eq!(t, 2.0);
        let ell = pt(1., 5.).l2(pt(4., 1.));
        let t = turnpike_time(pt(1., 5.), pt(4., 1.), pt(1., 5.), pt(4., 1.), 4.0).unwrap();
        assert_eq!(t, ell / 4.0);
        assert_eq!(
            turnpike_time(pt(0., 0.), pt(1., 0.), pt(0., 0.), pt(1., 0.), 1.0),
            Err(Error::InvalidSpeed(1.0))
        );
        assert_eq!(
            turnpike_time(pt(f64::NAN, 0.), pt(1., 0.), pt(0., 0.), pt(1., 0.), 2.0),
            Err(Error::NonFinite)
        );
    }

    #[test]
    fn freeway_examples() {
        let h = x_axis_freeway();
        let f = pt(0., 0.);
        let r = entry_point(pt(5., 3.), f, &h).unwrap();
        assert_eq!(r.time, 5.5);
        assert_eq!(r.mode, EntryMode::VerticalProjection);
        assert_eq!(r.entry, pt(5., 0.));
        let r = entry_point(pt(12., 0.), f, &h).unwrap();
        assert_eq!(r.time, 7.0);
        assert_eq!(r.mode, EntryMode::ViaEndpointE2);
        // Far up-right: entering at e' beats any projection.
        let r = entry_point(pt(20., 20.), f, &h).unwrap();
        assert_eq!(r.mode, EntryMode::ViaEndpointE2);
        assert_eq!(r.time, 35.0);
        // On the highway the ride is the whole trip.
        let r = entry_point(pt(6., 0.), f, &h).unwrap();
        assert_eq!(r.entry, pt(6., 0.));
        assert_eq!(r.time, 3.0);
        let r = entry_point(f, f, &h).unwrap();
        assert_eq!((r.mode, r.time), (EntryMode::AtFacility, 0.0));
    }

    #[test]
    fn freeway_errors() {
        let h = x_axis_freeway();
        assert!(matches!(
            freeway_time(pt(1., 1.), pt(0., 1.), &h),
            Err(Error::NotOnHighway(_))
        ));
        assert!(matches!(
            freeway_time(pt(1., 1.), pt(11., 0.), &h),
            Err(Error::NotOnHighway(_))
        ));
        let tp = Highway::turnpike(pt(0., 0.), pt(1., 0.), 2.0).unwrap();
        assert!(matches!(
            freeway_time(pt(1., 1.), pt(1., 0.), &tp),
            Err(Error::KindMismatch(_))
        ));
        assert_eq!(
            Highway::freeway(pt(0., 0.), pt(1., 0.), 0.5),
            Err(Error::InvalidSpeed(0.5))
        );
    }

    #[test]
    fn line_mode_has_no_endpoints() {
        let h = Highway::freeway_line(pt(0., 0.), pt(1., 0.), 2.0).unwrap();
        let r = entry_point(pt(100., 1.), pt(0., 0.), &h).unwrap();
        assert_eq!(r.mode, EntryMode::VerticalProjection);
        assert_eq!(r.time, 51.0);
    }

    #[test]
    fn critical_angle_values() {
        let phi = critical_angle(std::f64::consts::SQRT_2).unwrap();
        assert!((phi - std::f64::consts::PI / 12.0).abs() < 1e-12);
        assert!((critical_angle(1e6).unwrap() - FRAC_PI_4).abs() < 1e-5);
        let low = critical_angle(1.0001).unwrap();
        assert!(low > 0.0 && low < 0.01);
        assert_eq!(critical_angle(0.9), Err(Error::InvalidSpeed(0.9)));
    }

    #[test]
    fn spm_examples() {
        let h = x_axis_freeway();
        let f = pt(0., 0.);
        let d = spm_region(pt(4., 2.), f, &h).unwrap();
        assert_eq!((d.regime, d.region), (SpmRegime::Shallow, Some(3)));
        assert!(!d.discrepancy);
        let d = spm_region(pt(-5., -1.), f, &h).unwrap();
        assert_eq!(d.region, Some(1));
        assert_eq!(d.prescribed_entry, Some(pt(-2., 0.)));
        assert_eq!(d.actual.mode, EntryMode::ViaEndpointE);
        assert!(!d.discrepancy);
        // Up-left of the facility the table says "walk", yet riding from the
        // vertical projection is faster: 1 + 1/2 < 2.
        let d = spm_region(pt(-1., 1.), f, &h).unwrap();
        assert_eq!(d.region, Some(7));
        assert_eq!(d.prescribed_time, Some(2.0));
        assert_eq!(d.actual.mode, EntryMode::VerticalProjection);
        assert_eq!(d.actual.time, 1.5);
        assert!(d.discrepancy);
    }

    #[test]
    fn spm_normalizes_steep_highways() {
        // A vertical freeway is mapped onto a horizontal one.
        let h = Highway::freeway(pt(0., -2.), pt(0., 10.), 2.0).unwrap();
        let d = spm_region(pt(2., 4.), pt(0., 0.), &h).unwrap();
        assert_eq!(d.regime, SpmRegime::Shallow);
        assert!(d.region.is_some());
        assert!(!d.discrepancy);
        let h = Highway::freeway(pt(0., 0.), pt(5., 5.), 3.0).unwrap();
        let d = spm_region(pt(1., 4.), pt(1., 1.), &h).unwrap();
        assert_eq!(d.regime, SpmRegime::Steep);
        assert_eq!(d.region, Some(3));
    }

    #[test]
    fn bundle_shape() {
        let b = direction_bundle(0.0, 2.0).unwrap();
        assert_eq!(b.entries.len(), 8);
        assert!(b.entries.iter().any(|e| e.gradient == pt(0.5, 1.0)));
        let b = direction_bundle(0.3, 2.0).unwrap();
        assert_eq!(b.entries.len(), 12);
        assert!(b.entries.iter().all(|e| e.gradient.norm() > 0.0));
        for alpha in [0.0, 0.2, 0.7] {
            let walk: Vec<Point> = direction_bundle(alpha, 3.0)
                .unwrap()
                .entries
                .iter()
                .filter(|e| e.family.mode == GradientMode::Walk)
                .map(|e| e.gradient)
                .collect();
            assert_eq!(
                walk,
                vec![pt(1., 1.), pt(-1., 1.), pt(1., -1.), pt(-1., -1.)]
            );
        }
        assert_eq!(direction_bundle(1.0, 2.0), Err(Error::AngleOutOfRange(1.0)));
        for fam in GradientFamily::all() {
            for alpha in [0.1, 0.5] {
                let g = fam.gradient(alpha, 2.5).unwrap();
                let d = fam.direction(alpha, 2.5);
                assert!(g.cross(d).abs() < 1e-12 && g.dot(d) > 0.0);
            }
        }
    }

    #[test]
    fn bundle_matches_finite_differences() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut checked = 0;
        while checked < 400 {
            let alpha = rng.gen_range(0.02..FRAC_PI_4);
            let v = rng.gen_range(1.1..8.0);
            let u = pt(alpha.cos(), alpha.sin());
            let f = pt(0., 0.);
            let h = Highway::freeway(u * -6.0, u * 7.0, v).unwrap();
            let p = pt(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0));
            let fd = |step: f64| {
                let tx = (freeway_time(p + pt(step, 0.), f, &h).unwrap()
                    - freeway_time(p - pt(step, 0.), f, &h).unwrap())
                    / (2.0 * step);
                let ty = (freeway_time(p + pt(0., step), f, &h).unwrap()
                    - freeway_time(p - pt(0., step), f, &h).unwrap())
                    / (2.0 * step);
                pt(tx, ty)
            };
            let g1 = fd(1e-6);
            let g2 = fd(1e-7);
            if (g1 - g2).norm() > 1e-6 {
                continue; // p sits on a kink
            }
            let bundle = direction_bundle(alpha, v).unwrap();
            let best = bundle
                .entries
                .iter()
                .map(|e| (e.gradient - g1).norm())
                .fold(f64::INFINITY, f64::min);
            assert!(best < 1e-5, "alpha={alpha} v={v} p={p:?} fd={g1:?}");
            checked += 1;
        }
    }

    #[test]
    fn objective_radius_examples() {
        let f = pt(3., -1.);
        let h = Highway::freeway(pt(0., -1.), pt(5., -1.), 2.0).unwrap();
        assert_eq!(objective_radius(&[f], f, &h).unwrap(), 0.0);
        let h = Highway::freeway(pt(0., 0.), pt(10., 0.), 5.0).unwrap();
        let r = objective_radius(&[pt(0., 0.), pt(10., 0.)], pt(5., 0.), &h).unwrap();
        assert_eq!(r, 1.0);
        assert_eq!(objective_radius(&[], f, &h), Err(Error::EmptySet));

        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let s: Vec<Point> = (0..rng.gen_range(1..10))
                .map(|_| pt(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0)))
                .collect();
            let v = rng.gen_range(1.05..6.0);
            let a = pt(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
            let b = pt(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
            let f = a.lerp(b, rng.gen_range(0.0..1.0));
            for h in [
                Highway::freeway(a, b, v).unwrap(),
                Highway::turnpike(a, f, v).unwrap(),
            ] {
                let r = objective_radius(&s, f, &h).unwrap();
                let walk = s.iter().map(|p| p.l1(f)).fold(0.0, f64::max);
                let fly = s.iter().map(|p| p.l2(f) / v).fold(0.0, f64::max);
                assert!(r <= walk + 1e-12 && r >= fly - 1e-12);
            }
        }
    }
}
