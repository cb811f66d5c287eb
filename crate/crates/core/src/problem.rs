use crate::error::{check_length, check_speed, Error, Result};
use crate::geom::Point;
use crate::metric::HighwayKind;

/// Whether the highway length is prescribed or free.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LengthMode {
    Fixed(f64),
    Variable,
}

impl LengthMode {
    pub fn fixed_length(&self) -> Option<f64> {
        match *self {
            LengthMode::Fixed(ell) => Some(ell),
            LengthMode::Variable => None,
        }
    }

    pub(crate) fn validate(&self) -> Result<()> {
        match *self {
            LengthMode::Fixed(ell) => check_length(ell),
            LengthMode::Variable => Ok(()),
        }
    }
}

/// A problem instance: clients, highway type, length mode and speed.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    pub points: Vec<Point>,
    pub kind: HighwayKind,
    pub length: LengthMode,
    pub speed: f64,
    /// Prescribed highway orientation in radians (freeways only).
    pub orientation: Option<f64>,
}

impl Instance {
    pub fn new(
        points: Vec<Point>,
        kind: HighwayKind,
        length: LengthMode,
        speed: f64,
    ) -> Result<Self> {
        let inst = Instance {
            points,
            kind,
            length,
            speed,
            orientation: None,
        };
        inst.validate()?;
        Ok(inst)
    }

    pub fn with_orientation(mut self, alpha: f64) -> Result<Self> {
        self.orientation = Some(alpha);
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if self.points.is_empty() {
            return Err(Error::EmptySet);
        }
        for p in &self.points {
            p.check()?;
        }
        check_speed(self.speed)?;
        self.length.validate()?;
        if let Some(alpha) = self.orientation {
            if !alpha.is_finite() {
                return Err(Error::NonFinite);
            }
            if self.kind == HighwayKind::Turnpike {
                return Err(Error::InvalidArgument(
                    "a fixed orientation is only supported for freeways".into(),
                ));
            }
        }
        Ok(())
    }
}
