//! The relation `(D′,ν′) ≥ (D,ν)` and bounded linear adjacency of types.
//!
//! `upper ≥ lower` holds when some predecessor-closed subdiagram of `lower`
//! is isomorphic to one of `upper` and, transporting the weights of `upper`
//! along the isomorphism (zero off the subdiagram) into `κ`, every vertex of
//! `lower` satisfies `ord_ν(P) ≤ ord_κ(P)`.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::diagram::json::json_id;
use crate::diagram::{DiagramJson, DiagramType, VertexId, WeightedDiagram};
use crate::error::Result;

/// An isomorphism between predecessor-closed subdiagrams, stored as the
/// image of each vertex of the lower diagram (`None` off the subdiagram).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubdiagramEmbedding {
    map: Vec<Option<VertexId>>,
}

impl SubdiagramEmbedding {
    pub fn new(map: Vec<Option<VertexId>>) -> Self {
        Self { map }
    }

    pub fn image(&self, v: VertexId) -> Option<VertexId> {
        self.map.get(v).copied().flatten()
    }

    pub fn map(&self) -> &[Option<VertexId>] {
        &self.map
    }

    pub fn source_subset(&self) -> Vec<VertexId> {
        (0..self.map.len())
            .filter(|&v| self.map[v].is_some())
            .collect()
    }

    pub fn target_subset(&self) -> Vec<VertexId> {
        let mut t: Vec<_> = self.map.iter().flatten().copied().collect();
        t.sort_unstable();
        t
    }

    /// `(lower, upper)` pairs in lower-vertex order.
    pub fn pairs(&self) -> Vec<(VertexId, VertexId)> {
        self.map
            .iter()
            .enumerate()
            .filter_map(|(v, m)| m.map(|u| (v, u)))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeqWitness {
    pub embedding: SubdiagramEmbedding,
    /// Indexed by vertices of the lower diagram.
    pub kappa: Vec<i64>,
    pub ord_nu: Vec<i64>,
    pub ord_kappa: Vec<i64>,
}

#[derive(Serialize)]
struct WitnessJson<'a> {
    #[serde(flatten)]
    diagram: DiagramJson,
    embedding: Vec<[VertexId; 2]>,
    kappa: &'a [i64],
    ord_nu: &'a [i64],
    ord_kappa: &'a [i64],
}

impl GeqWitness {
    /// The upper diagram in the diagram JSON schema, extended by the
    /// embedding (upper ids as in that JSON), `kappa` and both ord systems.
    pub fn to_json_value(&self, upper: &WeightedDiagram) -> serde_json::Value {
        let d = upper.diagram();
        let j = WitnessJson {
            diagram: upper.to_json_value(),
            embedding: self
                .embedding
                .pairs()
                .into_iter()
                .map(|(a, b)| [a, json_id(d, b)])
                .collect(),
            kappa: &self.kappa,
            ord_nu: &self.ord_nu,
            ord_kappa: &self.ord_kappa,
        };
        serde_json::to_value(j).expect("plain data")
    }
}

struct Search<'a> {
    upper: &'a WeightedDiagram,
    lower: &'a WeightedDiagram,
    order: &'a [VertexId],
    ord_nu: Vec<i64>,
    map: Vec<Option<VertexId>>,
    used: Vec<bool>,
    kappa: Vec<i64>,
    ord_kappa: Vec<i64>,
}

impl Search<'_> {
    fn candidates(&self, v: VertexId) -> Vec<Option<VertexId>> {
        let (ud, ld) = (self.upper.diagram(), self.lower.diagram());
        let mut out = Vec::new();
        match ld.parent(v) {
            None => out.push(Some(ud.root())),
            Some(p) => {
                if let Some(pi) = self.map[p] {
                    let want = ld.second_target(v).map(|t| self.map[t]);
                    for &c in ud.children(pi) {
                        if self.used[c] {
                            continue;
                        }
                        let ok = match want {
                            None => ud.is_free(c),
                            Some(t) => t.is_some() && ud.second_target(c) == t,
                        };
                        if ok {
                            out.push(Some(c));
                        }
                    }
                }
            }
        }
        out.push(None);
        out
    }

    fn step(&mut self, i: usize) -> bool {
        let Some(&v) = self.order.get(i) else {
            return true;
        };
        let ld = self.lower.diagram();
        let inherited: i64 = ld.proximate_to(v).iter().map(|&q| self.ord_kappa[q]).sum();
        for c in self.candidates(v) {
            let k = c.map_or(0, |u| self.upper.weight(u));
            if self.ord_nu[v] > k + inherited {
                continue;
            }
            self.map[v] = c;
            self.kappa[v] = k;
            self.ord_kappa[v] = k + inherited;
            if let Some(u) = c {
                self.used[u] = true;
            }
            if self.step(i + 1) {
                return true;
            }
            if let Some(u) = c {
                self.used[u] = false;
            }
            self.map[v] = None;
        }
        false
    }
}

/// Searches for a witness of `upper ≥ lower`. Vertices of `lower` are
/// decided root-first; each is mapped to an unused child of its parent's
/// image with the same proximity shape, or left out (forced once its parent
/// is left out). Mapped candidates are tried before exclusion, in ascending
/// id order, so the result is deterministic.
pub fn geq(upper: &WeightedDiagram, lower: &WeightedDiagram) -> Result<Option<GeqWitness>> {
    upper.diagram().ensure_valid()?;
    upper.ensure_consistent()?;
    lower.diagram().ensure_valid()?;
    let n = lower.len();
    let mut s = Search {
        upper,
        lower,
        order: lower.diagram().order(),
        ord_nu: lower.order_of_values(),
        map: vec![None; n],
        used: vec![false; upper.len()],
        kappa: vec![0; n],
        ord_kappa: vec![0; n],
    };
    if !s.step(0) {
        return Ok(None);
    }
    Ok(Some(GeqWitness {
        embedding: SubdiagramEmbedding::new(s.map),
        kappa: s.kappa,
        ord_nu: s.ord_nu,
        ord_kappa: s.ord_kappa,
    }))
}

fn ord_memo(
    w: &WeightedDiagram,
    weights: &[i64],
    v: VertexId,
    memo: &mut HashMap<VertexId, i64>,
) -> i64 {
    if let Some(&x) = memo.get(&v) {
        return x;
    }
    let mut total = weights[v];
    for &q in w.diagram().proximate_to(v) {
        total += ord_memo(w, weights, q, memo);
    }
    memo.insert(v, total);
    total
}

/// Re-derives `κ` and both ord systems from the embedding alone and checks
/// every condition of `upper ≥ lower`, plus agreement with the stored vectors.
pub fn check_geq_witness(upper: &WeightedDiagram, lower: &WeightedDiagram, w: &GeqWitness) -> bool {
    let (ud, ld) = (upper.diagram(), lower.diagram());
    if !ud.is_valid() || !ld.is_valid() || !upper.is_consistent() {
        return false;
    }
    let n = lower.len();
    let map = w.embedding.map();
    if map.len() != n || w.kappa.len() != n || w.ord_nu.len() != n || w.ord_kappa.len() != n {
        return false;
    }
    let mut seen = vec![false; upper.len()];
    for &u in map.iter().flatten() {
        if u >= upper.len() || seen[u] {
            return false;
        }
        seen[u] = true;
    }
    for v in 0..n {
        let Some(u) = map[v] else { continue };
        // both subsets closed under predecessors, parents correspond
        let parent_image = match ld.parent(v) {
            None => None,
            Some(p) => match map[p] {
                Some(pi) => Some(pi),
                None => return false,
            },
        };
        if ud.parent(u) != parent_image {
            return false;
        }
        // proximity in both directions
        let mut from_lower = Vec::new();
        for &t in ld.proximate_to(v) {
            match map[t] {
                Some(ti) => from_lower.push(ti),
                None => return false,
            }
        }
        let mut from_upper = ud.proximate_to(u).to_vec();
        if from_upper.iter().any(|&t| !seen[t]) {
            return false;
        }
        from_lower.sort_unstable();
        from_upper.sort_unstable();
        if from_lower != from_upper {
            return false;
        }
    }
    let kappa: Vec<i64> = (0..n)
        .map(|v| map[v].map_or(0, |u| upper.weight(u)))
        .collect();
    let mut memo_nu = HashMap::new();
    let mut memo_kappa = HashMap::new();
    for v in 0..n {
        let a = ord_memo(lower, lower.weights(), v, &mut memo_nu);
        let b = ord_memo(lower, &kappa, v, &mut memo_kappa);
        if a > b || w.ord_nu[v] != a || w.ord_kappa[v] != b || w.kappa[v] != kappa[v] {
            return false;
        }
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AdjacencyVerdict {
    /// `representative` is a diagram of the source type dominating the
    /// target's minimal diagram.
    Yes {
        representative: WeightedDiagram,
        witness: GeqWitness,
    },
    /// No representative with at most `extra_bound` added free weight-1
    /// vertices dominates the target.
    NoUpToBound { extra_bound: usize },
}

impl AdjacencyVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, Self::Yes { .. })
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        match self {
            Self::Yes {
                representative,
                witness,
            } => serde_json::json!({
                "verdict": "yes",
                "witness": witness.to_json_value(representative),
            }),
            Self::NoUpToBound { extra_bound } => serde_json::json!({
                "verdict": "no_up_to_bound",
                "extra_bound": extra_bound,
            }),
        }
    }
}

/// Vertex count of the target's minimal diagram.
pub fn default_extra_bound(target: &DiagramType) -> usize {
    target.representative().len()
}

/// Representatives of `source` with exactly `added` extra free weight-1
/// vertices, one per isomorphism class, sorted by canonical key.
fn next_representatives(level: &[WeightedDiagram]) -> Vec<WeightedDiagram> {
    let mut next: BTreeMap<String, WeightedDiagram> = BTreeMap::new();
    for d in level {
        for (v, excess) in d.excesses().into_iter().enumerate() {
            if excess < 1 {
                continue;
            }
            let e = d
                .add_free_leaf(v, 1)
                .expect("vertex is in range")
                .canonical_form();
            next.entry(e.canonical_key()).or_insert(e);
        }
    }
    next.into_values().collect()
}

/// Bounded decision of linear adjacency `source → target`: tries the
/// minimal source diagram, then representatives with one, two, … added free
/// weight-1 vertices up to `extra_bound`. Within a level the first success in
/// canonical-key order wins.
pub fn linear_adjacent(
    source: &DiagramType,
    target: &DiagramType,
    extra_bound: usize,
) -> Result<AdjacencyVerdict> {
    let lower = target.representative();
    let mut level = vec![source.representative().clone()];
    for added in 0..=extra_bound {
        let found = level
            .par_iter()
            .map(|rep| geq(rep, lower).map(|w| w.map(|w| (rep, w))))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .next();
        if let Some((rep, witness)) = found {
            return Ok(AdjacencyVerdict::Yes {
                representative: rep.clone(),
                witness,
            });
        }
        if added < extra_bound {
            level = next_representatives(&level);
        }
    }
    Ok(AdjacencyVerdict::NoUpToBound { extra_bound })
}
