//! Bounded enumeration of minimal consistent diagrams up to isomorphism.
//!
//! Diagrams are grown one leaf at a time. Every consistent diagram arises
//! from a consistent diagram with one vertex fewer (drop any leaf), so
//! level `k + 1` is the deduplicated set of leaf extensions of level `k`.
//! Minimality is not inherited by subdiagrams and is filtered at output.
//! A free weight-1 vertex without a satellite needs its own satellite later
//! on, which bounds how many of them a partial diagram may carry.

use rayon::prelude::*;

use crate::diagram::{ProximityDiagram, WeightedDiagram};
use crate::error::{Error, Result};

const NONE: u8 = u8::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationLimits {
    pub max_vertices: usize,
    pub max_weight: i64,
    /// Cap on the number of partial diagrams explored.
    pub max_candidates: Option<usize>,
}

impl EnumerationLimits {
    pub fn new(max_vertices: usize, max_weight: i64) -> Self {
        Self {
            max_vertices,
            max_weight,
            max_candidates: None,
        }
    }
}

#[derive(Debug, Clone)]
struct Shape {
    // Vertices in creation order, so parent[v] < v.
    parent: Vec<u8>,
    second: Vec<u8>,
    weight: Vec<i64>,
    excess: Vec<i64>,
    depth: Vec<u8>,
}

impl Shape {
    fn point(w: i64) -> Self {
        Self {
            parent: vec![NONE],
            second: vec![NONE],
            weight: vec![w],
            excess: vec![w],
            depth: vec![0],
        }
    }

    fn len(&self) -> usize {
        self.parent.len()
    }

    fn push(&self, parent: usize, second: u8, w: i64) -> Self {
        let mut s = self.clone();
        s.parent.push(parent as u8);
        s.second.push(second);
        s.weight.push(w);
        s.excess.push(w);
        s.depth.push(self.depth[parent] + 1);
        s.excess[parent] -= w;
        if second != NONE {
            s.excess[second as usize] -= w;
        }
        s
    }

    fn has_satellite_child_to(&self, v: usize, target: u8) -> bool {
        (v + 1..self.len()).any(|c| self.parent[c] as usize == v && self.second[c] == target)
    }

    fn is_free(&self, v: usize) -> bool {
        v != 0 && self.second[v] == NONE
    }

    /// Free weight-1 vertices with no satellite proximate to them.
    fn deficient(&self) -> usize {
        (1..self.len())
            .filter(|&v| self.is_free(v) && self.weight[v] == 1)
            .filter(|&v| {
                !(v + 1..self.len()).any(|q| {
                    self.second[q] != NONE
                        && (self.parent[q] as usize == v || self.second[q] as usize == v)
                })
            })
            .count()
    }

    fn is_minimal(&self) -> bool {
        self.deficient() == 0
    }

    fn key(&self) -> String {
        let n = self.len();
        let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
        for v in 1..n {
            children[self.parent[v] as usize].push(v);
        }
        let mut keys = vec![String::new(); n];
        for v in (0..n).rev() {
            let mut ck: Vec<&str> = children[v].iter().map(|&c| keys[c].as_str()).collect();
            ck.sort_unstable();
            let kind = if v == 0 {
                "r".to_string()
            } else if self.second[v] != NONE {
                format!("s{}", self.depth[v] - self.depth[self.second[v] as usize])
            } else {
                "f".to_string()
            };
            keys[v] = format!("{}{}[{}]", self.weight[v], kind, ck.join(","));
        }
        std::mem::take(&mut keys[0])
    }

    fn extensions(&self, limits: &EnumerationLimits) -> Vec<Shape> {
        let mut out = Vec::new();
        let n = self.len();
        let remaining_after = limits.max_vertices - (n + 1);
        for v in 0..n {
            let mut options: Vec<u8> = vec![NONE];
            if v != 0 {
                let p = self.parent[v];
                if !self.has_satellite_child_to(v, p) {
                    options.push(p);
                }
                let s = self.second[v];
                if s != NONE && !self.has_satellite_child_to(v, s) {
                    options.push(s);
                }
            }
            for second in options {
                let mut cap = limits.max_weight.min(self.excess[v]);
                if second != NONE {
                    cap = cap.min(self.excess[second as usize]);
                }
                for w in 1..=cap {
                    let s = self.push(v, second, w);
                    if s.deficient() <= remaining_after {
                        out.push(s);
                    }
                }
            }
        }
        out
    }

    fn to_weighted(&self) -> WeightedDiagram {
        let n = self.len();
        let parent = (0..n)
            .map(|v| (v != 0).then(|| self.parent[v] as usize))
            .collect();
        let prox = (0..n)
            .map(|v| {
                if v == 0 {
                    vec![]
                } else if self.second[v] == NONE {
                    vec![self.parent[v] as usize]
                } else {
                    vec![self.parent[v] as usize, self.second[v] as usize]
                }
            })
            .collect();
        let d = ProximityDiagram::new(parent, prox).expect("enumerated shapes are trees");
        WeightedDiagram::new(d, self.weight.clone()).unwrap()
    }
}

/// One canonical representative per isomorphism class of consistent minimal
/// diagrams with at most `max_vertices` vertices and weights in
/// `1..=max_weight`, ordered by vertex count and then canonical key.
pub fn enumerate_minimal_diagrams(limits: &EnumerationLimits) -> Result<Vec<WeightedDiagram>> {
    if limits.max_vertices == 0 || limits.max_weight < 1 {
        return Err(Error::InvalidBounds(format!(
            "need max_vertices >= 1 and max_weight >= 1, got {} and {}",
            limits.max_vertices, limits.max_weight
        )));
    }
    if limits.max_vertices >= NONE as usize {
        return Err(Error::InvalidBounds(format!(
            "max_vertices must be below {}",
            NONE
        )));
    }
    let mut explored = 0usize;
    let mut out = Vec::new();
    let mut level: Vec<(String, Shape)> = (1..=limits.max_weight)
        .map(|w| {
            let s = Shape::point(w);
            (s.key(), s)
        })
        .collect();
    level.sort_by(|a, b| a.0.cmp(&b.0));
    loop {
        explored += level.len();
        if let Some(cap) = limits.max_candidates {
            if explored > cap {
                return Err(Error::ResourceLimit { cap });
            }
        }
        out.extend(
            level
                .iter()
                .filter(|(_, s)| s.is_minimal())
                .map(|(_, s)| s.to_weighted().canonical_form()),
        );
        if level.is_empty() || level[0].1.len() >= limits.max_vertices {
            break;
        }
        let mut next: Vec<(String, Shape)> = level
            .par_iter()
            .flat_map_iter(|(_, s)| s.extensions(limits))
            .map(|s| (s.key(), s))
            .collect();
        next.par_sort_unstable_by(|a, b| a.0.cmp(&b.0));
        next.dedup_by(|a, b| a.0 == b.0);
        level = next;
    }
    Ok(out)
}
