#![allow(dead_code)]

use std::collections::BTreeSet;

use enriques::{ProximityDiagram, VertexId, WeightedDiagram};
use proptest::prelude::*;

/// Raw material for a random diagram: for vertex `i + 1`, a parent choice,
/// a satellite choice and a weight seed.
pub type Plan = Vec<(usize, u8, i64)>;

pub fn plan(max_extra: usize) -> impl Strategy<Value = (Plan, i64)> {
    (
        prop::collection::vec((0usize..64, 0u8..3, 0i64..3), 0..=max_extra),
        0i64..3,
    )
}

/// Builds a valid proximity tree from a plan: each new vertex picks a parent
/// and, if allowed, one of the parent's own satellite options.
pub fn tree(plan: &Plan) -> (Vec<Option<VertexId>>, Vec<Vec<VertexId>>) {
    let mut parent: Vec<Option<VertexId>> = vec![None];
    let mut prox: Vec<Vec<VertexId>> = vec![vec![]];
    for &(pc, sc, _) in plan {
        let p = pc % parent.len();
        let mut options: Vec<VertexId> = Vec::new();
        if let Some(pp) = parent[p] {
            options.push(pp);
        }
        if prox[p].len() == 2 {
            options.push(prox[p][1]);
        }
        // at most one satellite child of p per second target
        options.retain(|&o| {
            !(0..parent.len())
                .any(|c| parent[c] == Some(p) && prox[c].len() == 2 && prox[c][1] == o)
        });
        let mut targets = vec![p];
        if sc > 0 && !options.is_empty() {
            targets.push(options[(sc as usize - 1) % options.len()]);
        }
        parent.push(Some(p));
        prox.push(targets);
    }
    (parent, prox)
}

/// A random consistent diagram: weights are chosen from the leaves up so
/// that every excess is a small non-negative number.
pub fn consistent((plan, root_extra): &(Plan, i64)) -> WeightedDiagram {
    let (parent, prox) = tree(plan);
    let n = parent.len();
    let mut weights = vec![0i64; n];
    for v in (0..n).rev() {
        let received: i64 = (v + 1..n)
            .filter(|&q| prox[q].contains(&v))
            .map(|q| weights[q])
            .sum();
        let extra = if v == 0 { *root_extra } else { plan[v - 1].2 };
        weights[v] = (received + extra).max(1);
    }
    let d = ProximityDiagram::new(parent, prox).unwrap();
    WeightedDiagram::new(d, weights).unwrap()
}

pub fn permutation(n: usize, seed: &[usize]) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = seed.get(i).copied().unwrap_or(0) % (i + 1);
        perm.swap(i, j);
    }
    perm
}

/// Isomorphism test by direct search for a bijection, independent of the
/// canonical keys.
pub fn isomorphic(a: &WeightedDiagram, b: &WeightedDiagram) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut map = vec![usize::MAX; a.len()];
    let mut used = vec![false; b.len()];
    extend(a, b, a.diagram().order(), 0, &mut map, &mut used)
}

fn extend(
    a: &WeightedDiagram,
    b: &WeightedDiagram,
    order: &[VertexId],
    i: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    let Some(&v) = order.get(i) else {
        return true;
    };
    let (da, db) = (a.diagram(), b.diagram());
    let candidates: Vec<VertexId> = match da.parent(v) {
        None => vec![db.root()],
        Some(p) => db.children(map[p]).to_vec(),
    };
    for u in candidates {
        if used[u] || a.weight(v) != b.weight(u) || da.children(v).len() != db.children(u).len() {
            continue;
        }
        let want: BTreeSet<VertexId> = da.proximate_to(v).iter().map(|&t| map[t]).collect();
        let have: BTreeSet<VertexId> = db.proximate_to(u).iter().copied().collect();
        if want != have {
            continue;
        }
        map[v] = u;
        used[u] = true;
        if extend(a, b, order, i + 1, map, used) {
            return true;
        }
        used[u] = false;
        map[v] = usize::MAX;
    }
    false
}
