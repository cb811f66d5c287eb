//! Solver-independent description of a solved instance: facility, highway,
//! radius and one travel record per client.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::freeway::{solve_freeway, FreewaySolution};
use crate::geom::{Point, EPS};
use crate::metric::{entry_point, EntryMode, Extent, Highway, HighwayKind};
use crate::problem::{Instance, LengthMode};
use crate::turnpike::{solve_turnpike, TurnpikeSolution};

/// How a client reaches the facility.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TravelMode {
    Walk,
    AtFacility,
    /// Walk to the far turnpike endpoint, then ride to the facility.
    ViaT,
    ViaEndpointE,
    ViaEndpointE2,
    VerticalProjection,
    HorizontalProjection,
}

impl From<EntryMode> for TravelMode {
    fn from(m: EntryMode) -> Self {
        match m {
            EntryMode::Walk => TravelMode::Walk,
            EntryMode::AtFacility => TravelMode::AtFacility,
            EntryMode::ViaEndpointE => TravelMode::ViaEndpointE,
            EntryMode::ViaEndpointE2 => TravelMode::ViaEndpointE2,
            EntryMode::VerticalProjection => TravelMode::VerticalProjection,
            EntryMode::HorizontalProjection => TravelMode::HorizontalProjection,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClientRecord {
    pub index: usize,
    pub mode: TravelMode,
    /// Where the client joins the highway; `None` when walking.
    pub entry: Option<Point>,
    pub time: f64,
}

/// Highway geometry as stored in a solution document.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "extent", rename_all = "lowercase")]
pub enum HighwayRecord {
    /// For a turnpike, `b` is the endpoint carrying the facility.
    Segment {
        a: Point,
        b: Point,
    },
    Line {
        anchor: Point,
        direction: Point,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub eps: f64,
    pub radius: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionRecord {
    pub solver: String,
    pub kind: HighwayKind,
    pub speed: f64,
    pub facility: Point,
    pub highway: HighwayRecord,
    pub radius: f64,
    /// Highway length; for a freeway line, the span used by entry points.
    pub length: f64,
    /// Highway orientation in `[0, pi)`, when defined.
    pub alpha: Option<f64>,
    pub clients: Vec<ClientRecord>,
    pub tolerances: Tolerances,
}

/// Relative tolerance on reported radii.
pub const RADIUS_TOL: f64 = 1e-6;

impl SolutionRecord {
    pub fn highway(&self) -> Result<Highway> {
        match (self.kind, self.highway) {
            (HighwayKind::Turnpike, HighwayRecord::Segment { a, b }) => {
                Highway::turnpike(a, b, self.speed)
            }
            (HighwayKind::Freeway, HighwayRecord::Segment { a, b }) => {
                Highway::freeway(a, b, self.speed)
            }
            (HighwayKind::Freeway, HighwayRecord::Line { anchor, direction }) => {
                Highway::freeway_line(anchor, direction, self.speed)
            }
            (HighwayKind::Turnpike, HighwayRecord::Line { .. }) => {
                Err(Error::KindMismatch("a turnpike cannot be a line".into()))
            }
        }
    }

    pub fn from_turnpike(points: &[Point], sol: &TurnpikeSolution, solver: &str) -> Result<Self> {
        let (f, t, v) = (sol.facility, sol.t, sol.speed);
        let ride = sol.t.l2(f) / v;
        let clients = points
            .iter()
            .enumerate()
            .map(|(index, &p)| {
                let walk = p.l1(f);
                let via = p.l1(t) + ride;
                if p == f {
                    ClientRecord {
                        index,
                        mode: TravelMode::AtFacility,
                        entry: None,
                        time: 0.0,
                    }
                } else if via < walk {
                    ClientRecord {
                        index,
                        mode: TravelMode::ViaT,
                        entry: Some(t),
                        time: via,
                    }
                } else {
                    ClientRecord {
                        index,
                        mode: TravelMode::Walk,
                        entry: None,
                        time: walk,
                    }
                }
            })
            .collect();
        Ok(SolutionRecord {
            solver: solver.into(),
            kind: HighwayKind::Turnpike,
            speed: v,
            facility: f,
            highway: HighwayRecord::Segment { a: t, b: f },
            radius: sol.radius,
            length: sol.length,
            alpha: sol.highway().angle(),
            clients,
            tolerances: Tolerances {
                eps: EPS,
                radius: RADIUS_TOL,
            },
        })
    }

    pub fn from_freeway(points: &[Point], sol: &FreewaySolution, solver: &str) -> Result<Self> {
        let h = &sol.highway;
        let clients = points
            .iter()
            .enumerate()
            .map(|(index, &p)| {
                let e = entry_point(p, sol.facility, h)?;
                let mode = TravelMode::from(e.mode);
                let entry =
                    (!matches!(mode, TravelMode::Walk | TravelMode::AtFacility)).then_some(e.entry);
                Ok(ClientRecord {
                    index,
                    mode,
                    entry,
                    time: e.time,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let highway = match h.extent {
            Extent::Segment => HighwayRecord::Segment { a: h.a, b: h.b },
            Extent::Line => HighwayRecord::Line {
                anchor: h.a,
                direction: h.b - h.a,
            },
        };
        Ok(SolutionRecord {
            solver: solver.into(),
            kind: HighwayKind::Freeway,
            speed: h.speed,
            facility: sol.facility,
            highway,
            radius: sol.radius,
            length: sol.length,
            alpha: Some(sol.alpha),
            clients,
            tolerances: Tolerances {
                eps: EPS,
                radius: RADIUS_TOL,
            },
        })
    }

    /// Index and time of the slowest client.
    pub fn worst_client(&self) -> Option<&ClientRecord> {
        self.clients.iter().max_by(|a, b| a.time.total_cmp(&b.time))
    }
}

/// Name of the solver `solve` dispatches to for `inst`.
pub fn solver_name(inst: &Instance) -> &'static str {
    match (inst.kind, inst.length, inst.orientation) {
        (HighwayKind::Turnpike, LengthMode::Variable, _) => "turnpike-vl-fast",
        (HighwayKind::Turnpike, LengthMode::Fixed(_), _) => "turnpike-quadratic",
        (HighwayKind::Freeway, _, Some(_)) => "freeway-fixed-orientation",
        (HighwayKind::Freeway, _, None) => "freeway-calipers",
    }
}

/// Solves any instance and describes the result.
pub fn solve(inst: &Instance) -> Result<SolutionRecord> {
    inst.validate()?;
    let name = solver_name(inst);
    match inst.kind {
        HighwayKind::Turnpike => {
            SolutionRecord::from_turnpike(&inst.points, &solve_turnpike(inst)?, name)
        }
        HighwayKind::Freeway => {
            SolutionRecord::from_freeway(&inst.points, &solve_freeway(inst)?, name)
        }
    }
}
