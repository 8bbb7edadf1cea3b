//! JSON instance and result documents.

use std::path::Path;

use hdimp_core::{Disc, Point};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// One side of an instance: precise points or discs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum Side {
    Precise { points: Vec<[f64; 2]> },
    Imprecise { discs: Vec<[f64; 3]> },
}

impl Side {
    pub fn precise(points: &[Point]) -> Self {
        Side::Precise {
            points: points.iter().map(|p| [p.x, p.y]).collect(),
        }
    }

    pub fn imprecise(discs: &[Disc]) -> Self {
        Side::Imprecise {
            discs: discs.iter().map(|d| [d.centre.x, d.centre.y, d.radius]).collect(),
        }
    }

    pub fn is_precise(&self) -> bool {
        matches!(self, Side::Precise { .. })
    }

    pub fn len(&self) -> usize {
        match self {
            Side::Precise { points } => points.len(),
            Side::Imprecise { discs } => discs.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Points of a precise side.
    pub fn points(&self) -> Option<Vec<Point>> {
        match self {
            Side::Precise { points } => Some(points.iter().map(|&[x, y]| Point::new(x, y)).collect()),
            Side::Imprecise { .. } => None,
        }
    }

    /// Every side as discs; precise points become discs of radius zero.
    pub fn discs(&self) -> Vec<Disc> {
        match self {
            Side::Precise { points } => points.iter().map(|&[x, y]| Disc::point(Point::new(x, y))).collect(),
            Side::Imprecise { discs } => discs.iter().map(|&[x, y, r]| Disc::new(Point::new(x, y), r)).collect(),
        }
    }

    fn validate(&self, name: &str) -> Result<(), CliError> {
        if self.is_empty() {
            return Err(CliError::Malformed(format!("side {name} is empty")));
        }
        for (i, d) in self.discs().iter().enumerate() {
            if !d.centre.is_finite() || !d.radius.is_finite() {
                return Err(CliError::Malformed(format!("side {name} entry {i} is not finite")));
            }
            if d.radius < 0.0 {
                return Err(CliError::Malformed(format!(
                    "side {name} entry {i} has negative radius"
                )));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    /// Unit length of gadget instances.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<f64>,
    pub p: Side,
    pub q: Side,
}

impl InstanceDocument {
    pub fn new(p: Side, q: Side) -> Self {
        InstanceDocument {
            name: None,
            epsilon: None,
            p,
            q,
        }
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let doc: InstanceDocument =
            serde_json::from_str(text).map_err(|e| CliError::Malformed(format!("instance: {e}")))?;
        doc.p.validate("p")?;
        doc.q.validate("q")?;
        if let Some(eps) = doc.epsilon {
            if !(eps.is_finite() && eps > 0.0) {
                return Err(CliError::Malformed(format!("epsilon {eps} must be positive")));
            }
        }
        Ok(doc)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        Self::parse(&read(path)?)
    }

    pub fn emit(&self) -> String {
        to_json(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Quantity {
    Hmin,
    Hmax,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GuaranteeKind {
    Exact,
    Approx,
    ThresholdExceeded,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Guarantee {
    pub kind: GuaranteeKind,
    /// Multiplicative factor; absent when only an additive bound is known.
    pub factor: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub additive: Option<f64>,
}

impl Guarantee {
    pub fn exact() -> Self {
        Guarantee {
            kind: GuaranteeKind::Exact,
            factor: Some(1.0),
            additive: None,
        }
    }

    pub fn factor(kind: GuaranteeKind, factor: f64) -> Self {
        Guarantee {
            kind,
            factor: Some(factor),
            additive: None,
        }
    }
}

/// Realisations of both sides.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub p: Vec<[f64; 2]>,
    pub q: Vec<[f64; 2]>,
}

impl Witness {
    pub fn new(p: &[Point], q: &[Point]) -> Self {
        let flat = |v: &[Point]| v.iter().map(|x| [x.x, x.y]).collect();
        Witness { p: flat(p), q: flat(q) }
    }

    pub fn p_points(&self) -> Vec<Point> {
        self.p.iter().map(|&[x, y]| Point::new(x, y)).collect()
    }

    pub fn q_points(&self) -> Vec<Point> {
        self.q.iter().map(|&[x, y]| Point::new(x, y)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub quantity: Quantity,
    pub value: f64,
    pub guarantee: Guarantee,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub accepted_d: Option<f64>,
    /// Absent when the value is a threshold rather than an achieved distance.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub algorithm: String,
    pub wall_time_s: f64,
}

impl ResultDocument {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Malformed(format!("result: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        Self::parse(&read(path)?)
    }

    pub fn emit(&self) -> String {
        to_json(self)
    }
}

/// Bracket produced by the `oracle` command.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleDocument {
    pub quantity: Quantity,
    pub lower: f64,
    pub upper: f64,
    pub step: f64,
    /// Exact enumeration value, when the instance is small enough.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<f64>,
    pub wall_time_s: f64,
}

impl OracleDocument {
    pub fn emit(&self) -> String {
        to_json(self)
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Malformed(format!("{}: {e}", path.display())))
}

// serde_json prints the shortest representation that parses back to the
// same double, so emitted documents round-trip exactly.
fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents contain only finite numbers");
    s.push('\n');
    s
}
