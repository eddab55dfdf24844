//! Abstract Enriques diagrams: rooted trees carrying a proximity relation.
//!
//! Vertices are dense indices `0..n`. The root may be any index; every
//! traversal goes through [`ProximityDiagram::order`], a root-first order in
//! which each vertex appears after its parent.

mod canonical;
mod enumerate;
pub(crate) mod json;
mod weighted;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use canonical::DiagramType;
pub use enumerate::{enumerate_minimal_diagrams, EnumerationLimits};
pub use json::{DiagramJson, VertexJson};
pub use weighted::{WeightedBuilder, WeightedDiagram};

pub type VertexId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Root,
    Free,
    Satellite,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Root => "root",
            Kind::Free => "free",
            Kind::Satellite => "satellite",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexKind {
    pub kind: Kind,
    /// No successor.
    pub is_final: bool,
}

/// One broken instance of a proximity axiom.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AxiomViolation {
    pub axiom: u8,
    pub vertices: Vec<VertexId>,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.axiom {
            1 => "the root is proximate to a vertex",
            2 => "a non-root vertex is not proximate to its parent",
            3 => "a vertex is proximate to more than two vertices",
            4 => "a vertex proximate to two vertices breaks the parent rule",
            5 => "more than one vertex is proximate to both ends of a proximity",
            _ => "unknown axiom",
        };
        write!(f, "axiom {} ({what}) at {:?}", self.axiom, self.vertices)
    }
}

/// A rooted tree with a proximity relation.
///
/// Construction only checks structure (a single root, a tree, targets in
/// range); the five proximity axioms are checked by
/// [`validate_axioms`](Self::validate_axioms) so that invalid inputs can be
/// reported rather than refused.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProximityDiagram {
    root: VertexId,
    parent: Vec<Option<VertexId>>,
    // Parent first (when present), then the remaining targets ascending.
    proximate_to: Vec<Vec<VertexId>>,
    children: Vec<Vec<VertexId>>,
    order: Vec<VertexId>,
    depth: Vec<usize>,
}

impl ProximityDiagram {
    pub fn new(parent: Vec<Option<VertexId>>, proximate_to: Vec<Vec<VertexId>>) -> Result<Self> {
        let n = parent.len();
        if n == 0 {
            return Err(Error::EmptyDiagram);
        }
        if proximate_to.len() != n {
            return Err(Error::UnknownVertex(proximate_to.len().max(n)));
        }
        let roots: Vec<_> = (0..n).filter(|&v| parent[v].is_none()).collect();
        if roots.len() != 1 {
            return Err(Error::RootCount(roots.len()));
        }
        let root = roots[0];
        let mut children = vec![Vec::new(); n];
        for (v, p) in parent.iter().enumerate() {
            if let Some(p) = *p {
                if p >= n {
                    return Err(Error::UnknownVertex(p));
                }
                children[p].push(v);
            }
        }
        let mut order = Vec::with_capacity(n);
        let mut depth = vec![0; n];
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &c in &children[v] {
                depth[c] = depth[v] + 1;
                queue.push_back(c);
            }
        }
        if order.len() != n {
            let mut seen = vec![false; n];
            order.iter().for_each(|&v| seen[v] = true);
            let missing = seen.iter().position(|s| !s).unwrap_or(0);
            return Err(Error::NotATree(missing));
        }

        let mut normalized = Vec::with_capacity(n);
        for (v, targets) in proximate_to.into_iter().enumerate() {
            let mut rest = Vec::with_capacity(targets.len());
            let mut has_parent = false;
            for t in targets {
                if t >= n {
                    return Err(Error::UnknownVertex(t));
                }
                if Some(t) == parent[v] && !has_parent {
                    has_parent = true;
                } else {
                    rest.push(t);
                }
            }
            rest.sort_unstable();
            let before = rest.len();
            rest.dedup();
            if rest.len() != before || (has_parent && rest.contains(&parent[v].unwrap())) {
                return Err(Error::DuplicateProximity(v));
            }
            let mut list = Vec::with_capacity(rest.len() + 1);
            if has_parent {
                list.push(parent[v].unwrap());
            }
            list.extend(rest);
            normalized.push(list);
        }

        Ok(Self {
            root,
            parent,
            proximate_to: normalized,
            children,
            order,
            depth,
        })
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn root(&self) -> VertexId {
        self.root
    }

    pub fn parent(&self, v: VertexId) -> Option<VertexId> {
        self.parent[v]
    }

    pub fn children(&self, v: VertexId) -> &[VertexId] {
        &self.children[v]
    }

    /// Vertices `v` is proximate to, parent first.
    pub fn proximate_to(&self, v: VertexId) -> &[VertexId] {
        &self.proximate_to[v]
    }

    /// Vertices proximate to `v`.
    pub fn proximate_from(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.len()).filter(move |&q| self.proximate_to[q].contains(&v))
    }

    pub fn is_proximate(&self, q: VertexId, p: VertexId) -> bool {
        self.proximate_to[q].contains(&p)
    }

    /// Root-first order; every vertex comes after its parent.
    pub fn order(&self) -> &[VertexId] {
        &self.order
    }

    pub fn depth(&self, v: VertexId) -> usize {
        self.depth[v]
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v < self.len()
    }

    /// For a satellite, the target that is not its parent.
    pub fn second_target(&self, v: VertexId) -> Option<VertexId> {
        match self.proximate_to[v].as_slice() {
            [p, other] if Some(*p) == self.parent[v] => Some(*other),
            _ => None,
        }
    }

    pub fn is_final(&self, v: VertexId) -> bool {
        self.children[v].is_empty()
    }

    pub fn is_free(&self, v: VertexId) -> bool {
        v != self.root && self.proximate_to[v].len() == 1
    }

    pub fn is_satellite(&self, v: VertexId) -> bool {
        self.proximate_to[v].len() == 2
    }

    pub fn classify(&self, v: VertexId) -> Result<VertexKind> {
        if !self.contains(v) {
            return Err(Error::UnknownVertex(v));
        }
        let kind = if v == self.root {
            Kind::Root
        } else if self.is_satellite(v) {
            Kind::Satellite
        } else {
            Kind::Free
        };
        Ok(VertexKind {
            kind,
            is_final: self.is_final(v),
        })
    }

    /// One record per broken axiom instance; empty means valid.
    pub fn validate_axioms(&self) -> Vec<AxiomViolation> {
        let mut out = Vec::new();
        let n = self.len();
        if !self.proximate_to[self.root].is_empty() {
            let mut vs = vec![self.root];
            vs.extend(&self.proximate_to[self.root]);
            out.push(AxiomViolation {
                axiom: 1,
                vertices: vs,
            });
        }
        for v in 0..n {
            let Some(p) = self.parent[v] else { continue };
            let targets = &self.proximate_to[v];
            if !targets.contains(&p) {
                out.push(AxiomViolation {
                    axiom: 2,
                    vertices: vec![v, p],
                });
            }
            if targets.len() > 2 {
                let mut vs = vec![v];
                vs.extend(targets);
                out.push(AxiomViolation {
                    axiom: 3,
                    vertices: vs,
                });
            } else if targets.len() == 2 {
                let ok = targets.contains(&p) && {
                    let other = if targets[0] == p {
                        targets[1]
                    } else {
                        targets[0]
                    };
                    self.is_proximate(p, other)
                };
                if !ok {
                    let mut vs = vec![v];
                    vs.extend(targets);
                    out.push(AxiomViolation {
                        axiom: 4,
                        vertices: vs,
                    });
                }
            }
        }
        for q in 0..n {
            for &p in &self.proximate_to[q] {
                let both: Vec<_> = (0..n)
                    .filter(|&x| self.is_proximate(x, p) && self.is_proximate(x, q))
                    .collect();
                if both.len() > 1 {
                    let mut vs = vec![p, q];
                    vs.extend(both);
                    out.push(AxiomViolation {
                        axiom: 5,
                        vertices: vs,
                    });
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate_axioms().is_empty()
    }

    pub(crate) fn ensure_valid(&self) -> Result<()> {
        let v = self.validate_axioms();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::Axioms(v))
        }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[VertexId]) -> Result<Self> {
        let n = self.len();
        if perm.len() != n {
            return Err(Error::UnknownVertex(perm.len()));
        }
        let mut parent = vec![None; n];
        let mut prox = vec![Vec::new(); n];
        for v in 0..n {
            let nv = *perm
                .get(v)
                .filter(|&&x| x < n)
                .ok_or(Error::UnknownVertex(v))?;
            parent[nv] = self.parent[v].map(|p| perm[p]);
            prox[nv] = self.proximate_to[v].iter().map(|&t| perm[t]).collect();
        }
        Self::new(parent, prox)
    }

    /// Copy without the final vertex `v`; ids above `v` shift down by one.
    pub(crate) fn without_final(&self, v: VertexId) -> Self {
        debug_assert!(self.is_final(v) && v != self.root);
        let shift = |x: VertexId| if x > v { x - 1 } else { x };
        let mut parent = Vec::with_capacity(self.len() - 1);
        let mut prox = Vec::with_capacity(self.len() - 1);
        for u in (0..self.len()).filter(|&u| u != v) {
            parent.push(self.parent[u].map(shift));
            prox.push(self.proximate_to[u].iter().map(|&t| shift(t)).collect());
        }
        Self::new(parent, prox).expect("removing a leaf keeps the tree structure")
    }

    pub(crate) fn with_leaf(&self, parent: VertexId, other: Option<VertexId>) -> Self {
        let mut parents = self.parent.clone();
        let mut prox = self.proximate_to.clone();
        parents.push(Some(parent));
        prox.push(std::iter::once(parent).chain(other).collect());
        Self::new(parents, prox).expect("adding a leaf keeps the tree structure")
    }
}
