use std::fmt;

use crate::diagram::{ProximityDiagram, VertexId, WeightedDiagram};
use crate::error::Result;

/// Per-vertex subtree keys. A satellite's second target is always an
/// ancestor, so it is encoded by how many generations up it sits.
fn subtree_keys(d: &ProximityDiagram, weights: &[i64]) -> Vec<String> {
    let mut keys = vec![String::new(); d.len()];
    for &v in d.order().iter().rev() {
        let mut child_keys: Vec<&str> = d.children(v).iter().map(|&c| keys[c].as_str()).collect();
        child_keys.sort_unstable();
        let kind = if v == d.root() {
            "r".to_string()
        } else if let Some(t) = d.second_target(v) {
            format!("s{}", d.depth(v) - d.depth(t))
        } else {
            "f".to_string()
        };
        let key = format!("{}{}[{}]", weights[v], kind, child_keys.join(","));
        keys[v] = key;
    }
    keys
}

impl WeightedDiagram {
    /// Relabeling-invariant encoding; equal keys iff the diagrams are
    /// isomorphic as weighted proximity trees.
    pub fn canonical_key(&self) -> String {
        let keys = subtree_keys(self.diagram(), self.weights());
        keys[self.root()].clone()
    }

    /// Isomorphic copy with ids assigned in preorder, children visited in key
    /// order. Isomorphic inputs give identical outputs.
    pub fn canonical_form(&self) -> Self {
        let d = self.diagram();
        let keys = subtree_keys(d, self.weights());
        let mut perm = vec![0; self.len()];
        let mut next = 0;
        let mut stack = vec![d.root()];
        while let Some(v) = stack.pop() {
            perm[v] = next;
            next += 1;
            let mut ch: Vec<VertexId> = d.children(v).to_vec();
            ch.sort_by(|&a, &b| keys[a].cmp(&keys[b]).then(a.cmp(&b)));
            stack.extend(ch.into_iter().rev());
        }
        self.relabel(&perm)
            .expect("preorder relabeling is a permutation")
    }
}

/// A type `[(D,ν)]`, represented by its minimal diagram in canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramType {
    representative: WeightedDiagram,
    key: String,
}

impl std::hash::Hash for DiagramType {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.key.hash(state);
    }
}

impl DiagramType {
    /// The type of a consistent diagram.
    pub fn of(w: &WeightedDiagram) -> Result<Self> {
        w.diagram().ensure_valid()?;
        let representative = w.minimalize()?.canonical_form();
        let key = representative.canonical_key();
        Ok(Self {
            representative,
            key,
        })
    }

    pub fn representative(&self) -> &WeightedDiagram {
        &self.representative
    }

    pub fn canonical_key(&self) -> &str {
        &self.key
    }

    pub fn milnor_number(&self) -> i64 {
        self.representative
            .milnor_number()
            .expect("minimal diagrams are consistent")
    }
}

impl fmt::Display for DiagramType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key)
    }
}
