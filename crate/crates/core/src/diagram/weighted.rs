use crate::diagram::{ProximityDiagram, VertexId};
use crate::error::{Error, Result};

/// A proximity diagram with an integer weight on every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedDiagram {
    diagram: ProximityDiagram,
    weights: Vec<i64>,
}

impl WeightedDiagram {
    pub fn new(diagram: ProximityDiagram, weights: Vec<i64>) -> Result<Self> {
        if weights.len() != diagram.len() {
            return Err(Error::WeightCount {
                expected: diagram.len(),
                found: weights.len(),
            });
        }
        Ok(Self { diagram, weights })
    }

    /// Single root vertex.
    pub fn point(weight: i64) -> Self {
        Self {
            diagram: ProximityDiagram::new(vec![None], vec![vec![]]).unwrap(),
            weights: vec![weight],
        }
    }

    pub fn builder(root_weight: i64) -> WeightedBuilder {
        WeightedBuilder {
            parent: vec![None],
            prox: vec![vec![]],
            weights: vec![root_weight],
        }
    }

    pub fn diagram(&self) -> &ProximityDiagram {
        &self.diagram
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn weight(&self, v: VertexId) -> i64 {
        self.weights[v]
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn root(&self) -> VertexId {
        self.diagram.root()
    }

    /// `ν(P) − Σ_{Q→P} ν(Q)` for every vertex.
    pub fn excesses(&self) -> Vec<i64> {
        let mut r = self.weights.clone();
        for q in 0..self.len() {
            for &p in self.diagram.proximate_to(q) {
                r[p] -= self.weights[q];
            }
        }
        r
    }

    pub fn excess(&self, v: VertexId) -> i64 {
        self.excesses()[v]
    }

    pub fn is_consistent(&self) -> bool {
        self.excesses().iter().all(|&r| r >= 0)
    }

    pub(crate) fn ensure_consistent(&self) -> Result<()> {
        match self.excesses().iter().position(|&r| r < 0) {
            None => Ok(()),
            Some(vertex) => Err(Error::Inconsistent {
                vertex,
                excess: self.excess(vertex),
            }),
        }
    }

    pub fn is_complete(&self) -> bool {
        let d = &self.diagram;
        let r = self.excesses();
        (0..self.len()).all(|v| {
            if !d.is_final(v) {
                return r[v] == 0;
            }
            d.is_free(v)
                && self.weights[v] == 1
                && d.proximate_to(v)
                    .iter()
                    .all(|&p| !(d.is_free(p) && self.weights[p] == 1))
        })
    }

    /// The system of values: `ord(root) = ν(root)`, otherwise
    /// `ord(P) = ν(P) + Σ_{P→Q} ord(Q)`.
    pub fn order_of_values(&self) -> Vec<i64> {
        ord_values(&self.diagram, &self.weights)
    }

    /// `Σ ν(ν−1) + 1 − Σ r(P)`; defined for consistent diagrams only.
    pub fn milnor_number(&self) -> Result<i64> {
        self.ensure_consistent()?;
        let squares: i64 = self.weights.iter().map(|&w| w * (w - 1)).sum();
        let excess: i64 = self.excesses().iter().sum();
        Ok(squares + 1 - excess)
    }

    /// No free vertices of weight 0, and free vertices of weight 1 only when
    /// some satellite is proximate to them.
    pub fn is_minimal(&self) -> bool {
        if !self.is_consistent() {
            return false;
        }
        let d = &self.diagram;
        (0..self.len())
            .filter(|&v| d.is_free(v))
            .all(|v| match self.weights[v] {
                0 => false,
                1 => d.proximate_from(v).any(|q| d.is_satellite(q)),
                _ => true,
            })
    }

    /// The unique minimal diagram of the same type.
    ///
    /// Removes final free vertices of weight 0 or 1 until none is left.
    pub fn minimalize(&self) -> Result<Self> {
        self.ensure_consistent()?;
        let mut cur = self.clone();
        while let Some(v) = cur.removable_leaf() {
            cur = cur.without_final(v);
        }
        if !cur.is_minimal() {
            return Err(Error::NoMinimalForm);
        }
        Ok(cur)
    }

    fn removable_leaf(&self) -> Option<VertexId> {
        let d = &self.diagram;
        (0..self.len()).rev().find(|&v| {
            d.is_final(v)
                && d.is_free(v)
                && matches!(self.weights[v], 0 | 1)
                && !d.proximate_from(v).any(|q| d.is_satellite(q))
        })
    }

    fn without_final(&self, v: VertexId) -> Self {
        let mut weights = self.weights.clone();
        weights.remove(v);
        Self {
            diagram: self.diagram.without_final(v),
            weights,
        }
    }

    /// Appends a free final vertex proximate only to `at`.
    pub fn add_free_leaf(&self, at: VertexId, weight: i64) -> Result<Self> {
        if !self.diagram.contains(at) {
            return Err(Error::UnknownVertex(at));
        }
        let diagram = self.diagram.with_leaf(at, None);
        debug_assert!(diagram.is_valid() || !self.diagram.is_valid());
        let mut weights = self.weights.clone();
        weights.push(weight);
        Ok(Self { diagram, weights })
    }

    pub(crate) fn with_leaf(&self, parent: VertexId, other: Option<VertexId>, weight: i64) -> Self {
        let mut weights = self.weights.clone();
        weights.push(weight);
        Self {
            diagram: self.diagram.with_leaf(parent, other),
            weights,
        }
    }

    pub fn with_weight(&self, v: VertexId, weight: i64) -> Result<Self> {
        if !self.diagram.contains(v) {
            return Err(Error::UnknownVertex(v));
        }
        let mut out = self.clone();
        out.weights[v] = weight;
        Ok(out)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[VertexId]) -> Result<Self> {
        let diagram = self.diagram.relabel(perm)?;
        let mut weights = vec![0; self.len()];
        for (v, &w) in self.weights.iter().enumerate() {
            weights[perm[v]] = w;
        }
        Ok(Self { diagram, weights })
    }

    /// `r_D`, the sum of all excesses.
    pub fn total_excess(&self) -> i64 {
        self.excesses().iter().sum()
    }
}

pub(crate) fn ord_values(d: &ProximityDiagram, weights: &[i64]) -> Vec<i64> {
    let mut ord = vec![0; d.len()];
    for &v in d.order() {
        ord[v] = weights[v] + d.proximate_to(v).iter().map(|&q| ord[q]).sum::<i64>();
    }
    ord
}

/// Incremental construction of a valid weighted diagram.
#[derive(Debug, Clone)]
pub struct WeightedBuilder {
    parent: Vec<Option<VertexId>>,
    prox: Vec<Vec<VertexId>>,
    weights: Vec<i64>,
}

impl WeightedBuilder {
    pub fn root(&self) -> VertexId {
        0
    }

    pub fn free(&mut self, parent: VertexId, weight: i64) -> VertexId {
        self.push(parent, None, weight)
    }

    /// Satellite proximate to `parent` and `other`.
    pub fn satellite(&mut self, parent: VertexId, other: VertexId, weight: i64) -> VertexId {
        self.push(parent, Some(other), weight)
    }

    fn push(&mut self, parent: VertexId, other: Option<VertexId>, weight: i64) -> VertexId {
        let id = self.parent.len();
        self.parent.push(Some(parent));
        self.prox
            .push(std::iter::once(parent).chain(other).collect());
        self.weights.push(weight);
        id
    }

    pub fn build(self) -> Result<WeightedDiagram> {
        let diagram = ProximityDiagram::new(self.parent, self.prox)?;
        diagram.ensure_valid()?;
        WeightedDiagram::new(diagram, self.weights)
    }
}
