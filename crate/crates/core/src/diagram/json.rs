//! The diagram JSON schema:
//!
//! ```json
//! {"root": 0, "vertices": [{"id": 0, "weight": 6, "parent": null, "proximate_to": []}, ...]}
//! ```
//!
//! Ids are dense `0..n`, listed in order, the root is `0`, and
//! `proximate_to` lists the parent first, then any other target ascending.

use serde::{Deserialize, Serialize};

use crate::diagram::{ProximityDiagram, VertexId, WeightedDiagram};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexJson {
    pub id: VertexId,
    pub weight: i64,
    pub parent: Option<VertexId>,
    pub proximate_to: Vec<VertexId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub root: VertexId,
    pub vertices: Vec<VertexJson>,
}

/// The id of `v` in the JSON form: the root becomes 0, everything else keeps
/// its relative order.
pub(crate) fn json_id(d: &ProximityDiagram, v: VertexId) -> VertexId {
    if v == d.root() {
        0
    } else if v < d.root() {
        v + 1
    } else {
        v
    }
}

impl From<&WeightedDiagram> for DiagramJson {
    fn from(w: &WeightedDiagram) -> Self {
        let d = w.diagram();
        let n = w.len();
        let new_id = |v: VertexId| json_id(d, v);
        let mut vertices: Vec<VertexJson> = (0..n)
            .map(|v| {
                let parent = d.parent(v).map(new_id);
                let mut rest: Vec<VertexId> = d
                    .proximate_to(v)
                    .iter()
                    .copied()
                    .filter(|&t| Some(t) != d.parent(v))
                    .map(new_id)
                    .collect();
                rest.sort_unstable();
                let proximate_to = parent.into_iter().chain(rest).collect();
                VertexJson {
                    id: new_id(v),
                    weight: w.weight(v),
                    parent,
                    proximate_to,
                }
            })
            .collect();
        vertices.sort_by_key(|v| v.id);
        DiagramJson { root: 0, vertices }
    }
}

impl TryFrom<&DiagramJson> for WeightedDiagram {
    type Error = Error;

    fn try_from(j: &DiagramJson) -> Result<Self> {
        if j.root != 0 {
            return Err(Error::Json(format!("root id must be 0, found {}", j.root)));
        }
        for (i, v) in j.vertices.iter().enumerate() {
            if v.id != i {
                return Err(Error::Json(format!(
                    "vertex ids must be dense and in order: position {i} holds id {}",
                    v.id
                )));
            }
        }
        if let Some(v) = j.vertices.first() {
            if v.parent.is_some() {
                return Err(Error::Json(
                    "vertex 0 is the root and cannot have a parent".into(),
                ));
            }
        }
        let parent = j.vertices.iter().map(|v| v.parent).collect();
        let prox = j.vertices.iter().map(|v| v.proximate_to.clone()).collect();
        let weights = j.vertices.iter().map(|v| v.weight).collect();
        WeightedDiagram::new(ProximityDiagram::new(parent, prox)?, weights)
    }
}

impl WeightedDiagram {
    pub fn to_json_value(&self) -> DiagramJson {
        DiagramJson::from(self)
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json_value()).expect("plain data");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let j: DiagramJson = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        Self::try_from(&j)
    }
}
