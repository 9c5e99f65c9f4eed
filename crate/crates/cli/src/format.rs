//! Instance and solution files.
//!
//! ```json
//! {"container": {"width": 4, "height": 4},
//!  "rectangles": [{"width": 2, "height": 4}, {"width": 2, "height": 4}]}
//!
//! {"feasible": true,
//!  "placements": [{"index": 1, "x": 0, "y": 0, "rotated": false}, ...]}
//! ```
//!
//! Unknown fields are rejected. Indices in solution files are 1-based.

use cornerpack::{Container, Instance, PackError, Packing, Placement, RectDims};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("{0}")]
    Syntax(#[from] serde_json::Error),

    #[error("{field}: must be at least 1, got {value}")]
    Dimension { field: String, value: u32 },

    #[error("solution lists {found} placements for {expected} rectangles")]
    PlacementCount { expected: usize, found: usize },

    #[error("placement index {index} is out of range 1..={len}")]
    BadIndex { index: usize, len: usize },

    #[error("rectangle {index} is placed twice")]
    DuplicateIndex { index: usize },

    #[error("solution is marked infeasible")]
    NotFeasible,

    #[error("feasible solution has no placements field")]
    MissingPlacements,

    #[error("infeasible solution must not list placements")]
    UnexpectedPlacements,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DimsEntry {
    pub width: u32,
    pub height: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub container: DimsEntry,
    pub rectangles: Vec<DimsEntry>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlacementEntry {
    pub index: usize,
    pub x: u32,
    pub y: u32,
    pub rotated: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolutionFile {
    pub feasible: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub placements: Option<Vec<PlacementEntry>>,
}

impl SolutionFile {
    pub fn infeasible() -> Self {
        Self {
            feasible: false,
            placements: None,
        }
    }

    pub fn from_packing(p: &Packing) -> Self {
        let placements = p
            .placements()
            .iter()
            .enumerate()
            .map(|(i, pl)| PlacementEntry {
                index: i + 1,
                x: pl.x,
                y: pl.y,
                rotated: pl.rotated,
            })
            .collect();
        Self {
            feasible: true,
            placements: Some(placements),
        }
    }

    /// Pairs the placements with `inst`. Entries may come in any order but
    /// must cover every rectangle exactly once.
    pub fn to_packing(&self, inst: &Instance) -> Result<Packing, FormatError> {
        if !self.feasible {
            return Err(FormatError::NotFeasible);
        }
        let entries = self
            .placements
            .as_ref()
            .ok_or(FormatError::MissingPlacements)?;
        let len = inst.len();
        if entries.len() != len {
            return Err(FormatError::PlacementCount {
                expected: len,
                found: entries.len(),
            });
        }
        let mut slots: Vec<Option<Placement>> = vec![None; len];
        for e in entries {
            if e.index == 0 || e.index > len {
                return Err(FormatError::BadIndex {
                    index: e.index,
                    len,
                });
            }
            let slot = &mut slots[e.index - 1];
            if slot.is_some() {
                return Err(FormatError::DuplicateIndex { index: e.index });
            }
            *slot = Some(Placement::new(e.x, e.y, e.rotated));
        }
        let placements = slots.into_iter().map(|s| s.expect("all indices covered")).collect();
        Ok(Packing::new(inst.clone(), placements).expect("length checked"))
    }
}

fn dims_error(prefix: &str, e: PackError) -> FormatError {
    match e {
        PackError::InvalidDimension { field, value } => FormatError::Dimension {
            field: format!("{prefix}.{field}"),
            value,
        },
        other => unreachable!("dimension constructors only fail on zero sides: {other}"),
    }
}

impl InstanceFile {
    pub fn from_instance(inst: &Instance) -> Self {
        let c = inst.container();
        Self {
            container: DimsEntry {
                width: c.width(),
                height: c.height(),
            },
            rectangles: inst
                .rects()
                .iter()
                .map(|r| DimsEntry {
                    width: r.width(),
                    height: r.height(),
                })
                .collect(),
        }
    }

    pub fn to_instance(&self) -> Result<Instance, FormatError> {
        let container = Container::new(self.container.width, self.container.height)
            .map_err(|e| dims_error("container", e))?;
        let rects = self
            .rectangles
            .iter()
            .enumerate()
            .map(|(k, d)| {
                RectDims::new(d.width, d.height)
                    .map_err(|e| dims_error(&format!("rectangles[{k}]"), e))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Instance::new(container, rects))
    }
}

pub fn parse_instance(text: &str) -> Result<Instance, FormatError> {
    let file: InstanceFile = serde_json::from_str(text)?;
    file.to_instance()
}

pub fn parse_solution(text: &str) -> Result<SolutionFile, FormatError> {
    let file: SolutionFile = serde_json::from_str(text)?;
    match (&file.placements, file.feasible) {
        (None, true) => Err(FormatError::MissingPlacements),
        (Some(_), false) => Err(FormatError::UnexpectedPlacements),
        _ => Ok(file),
    }
}

fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn emit_instance(inst: &Instance) -> String {
    to_pretty(&InstanceFile::from_instance(inst))
}

pub fn emit_solution(sol: &SolutionFile) -> String {
    to_pretty(sol)
}
