//! JSON forms of quivers, modules, diagrams and families.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arcs::{Arc, ArcDiagram, ArcError};
use crate::families::Family;
use crate::quiver::Quiver;
use crate::string::{StringError, StringModule};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    String(#[from] StringError),
    #[error(transparent)]
    Arc(#[from] ArcError),
    #[error("a diagram needs exactly one of \"modules\" or \"arcs\"")]
    DiagramForm,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleJson {
    pub i: usize,
    pub j: usize,
    pub l: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lift: Option<[i64; 2]>,
}

impl ModuleJson {
    pub fn of(q: &Quiver, m: &StringModule) -> ModuleJson {
        let (i, j, l) = m.triple(q);
        ModuleJson { i, j, l, lift: None }
    }

    pub fn with_lift(q: &Quiver, m: &StringModule) -> ModuleJson {
        let (a, b) = m.lift();
        ModuleJson { lift: Some([a, b]), ..ModuleJson::of(q, m) }
    }

    pub fn to_module(&self, q: &Quiver) -> Result<StringModule, IoError> {
        let m = StringModule::from_triple(q, self.i, self.j, self.l)?;
        if let Some([a, b]) = self.lift {
            let lifted = StringModule::from_lift(q, a, b)?;
            if lifted != m {
                return Err(StringError::LiftMismatch {
                    start: a,
                    end: b,
                    i: self.i,
                    j: self.j,
                    l: self.l,
                }
                .into());
            }
        }
        Ok(m)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArcJson {
    pub i: usize,
    pub j: usize,
    pub lambda: i64,
}

impl From<Arc> for ArcJson {
    fn from(a: Arc) -> Self {
        ArcJson { i: a.i, j: a.j, lambda: a.lambda }
    }
}

impl From<&ArcJson> for Arc {
    fn from(a: &ArcJson) -> Self {
        Arc { i: a.i, j: a.j, lambda: a.lambda }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramJson {
    pub quiver: Quiver,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modules: Option<Vec<ModuleJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arcs: Option<Vec<ArcJson>>,
}

impl DiagramJson {
    /// Canonical module form.
    pub fn of(d: &ArcDiagram) -> DiagramJson {
        DiagramJson {
            quiver: d.quiver.clone(),
            modules: Some(d.modules.iter().map(|m| ModuleJson::of(&d.quiver, m)).collect()),
            arcs: None,
        }
    }

    pub fn to_diagram(&self) -> Result<ArcDiagram, IoError> {
        let q = self.quiver.clone();
        match (&self.modules, &self.arcs) {
            (Some(ms), None) => {
                let modules = ms.iter().map(|m| m.to_module(&q)).collect::<Result<Vec<_>, _>>()?;
                Ok(ArcDiagram::new(q, modules))
            }
            (None, Some(arcs)) => {
                let arcs: Vec<Arc> = arcs.iter().map(Arc::from).collect();
                Ok(ArcDiagram::from_arcs(q, &arcs)?)
            }
            _ => Err(IoError::DiagramForm),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyJson {
    pub canonical: DiagramJson,
    pub z: i64,
}

impl FamilyJson {
    pub fn of(f: &Family) -> FamilyJson {
        FamilyJson { canonical: DiagramJson::of(&f.canonical), z: f.z }
    }
}

pub fn parse_quiver(text: &str) -> Result<Quiver, IoError> {
    Ok(serde_json::from_str(text)?)
}

pub fn parse_module(q: &Quiver, text: &str) -> Result<StringModule, IoError> {
    serde_json::from_str::<ModuleJson>(text)?.to_module(q)
}

pub fn parse_modules(q: &Quiver, text: &str) -> Result<Vec<StringModule>, IoError> {
    serde_json::from_str::<Vec<ModuleJson>>(text)?
        .iter()
        .map(|m| m.to_module(q))
        .collect()
}

pub fn parse_diagram(text: &str) -> Result<ArcDiagram, IoError> {
    serde_json::from_str::<DiagramJson>(text)?.to_diagram()
}
