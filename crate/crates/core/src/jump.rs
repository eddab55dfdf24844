//! Linear jumps of quasihomogeneous singularities: the adjacent diagram
//! `E_D` realizing the jump, the closed form, and a bounded check that no
//! adjacent type comes closer to `μ(D)`.

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::adjacency::{check_geq_witness, geq, linear_adjacent, GeqWitness};
use crate::diagram::{enumerate_minimal_diagrams, DiagramType, EnumerationLimits, WeightedDiagram};
use crate::error::{Error, Result};
use crate::quasihomogeneous::{
    derived_invariants, gcd, minimal_diagram, Bamboo, QuasihomogeneousSpec,
};

fn minimal_bamboo(d: &WeightedDiagram) -> Result<Bamboo> {
    d.diagram().ensure_valid()?;
    if !d.is_minimal() {
        return Err(Error::NotABamboo("diagram is not minimal".into()));
    }
    let b = Bamboo::of(d).ok_or_else(|| Error::NotABamboo("a vertex has two successors".into()))?;
    if b.d < 1 {
        return Err(Error::NotABamboo(format!("last weight is {}", b.d)));
    }
    if b.d * b.t as i64 <= 1 {
        return Err(Error::NotABamboo(
            "a single vertex of weight 1 is smooth".into(),
        ));
    }
    Ok(b)
}

/// The diagram obtained by modifying the end `R_t` of a minimal bamboo, before
/// minimalization:
///
/// * `d = 1`: drop `R_t`;
/// * `d = 2`, `t = 1`: a single vertex of weight 1;
/// * `d = 2`, `t > 1`: `ν(R_t) = 1` plus a satellite `W` proximate to `R_t`
///   and `R_{t−1}`;
/// * `d ≥ 3`: `ν(R_t) = d − 1`, a free `U` of weight 2 after `R_t`, and a
///   chain `W_1..W_{d−3}` of weight 1 each proximate to its parent and `R_t`.
pub fn adjacent_diagram_construction(d: &WeightedDiagram) -> Result<WeightedDiagram> {
    let b = minimal_bamboo(d)?;
    let end = b.end();
    Ok(match b.d {
        1 => {
            let keep = &b.chain[..b.t - 1];
            let mut out = WeightedDiagram::builder(d.weight(keep[0]));
            for (i, &v) in keep.iter().enumerate().skip(1) {
                match d.diagram().second_target(v) {
                    Some(o) => out.satellite(
                        i - 1,
                        b.chain.iter().position(|&c| c == o).unwrap(),
                        d.weight(v),
                    ),
                    None => out.free(i - 1, d.weight(v)),
                };
            }
            out.build()?
        }
        2 if b.t == 1 => WeightedDiagram::point(1),
        2 => {
            let prev = d.diagram().parent(end).expect("t > 1");
            d.with_weight(end, 1)?.with_leaf(end, Some(prev), 1)
        }
        dd => {
            let mut out = d.with_weight(end, dd - 1)?.with_leaf(end, None, 2);
            let mut last = out.len() - 1;
            for _ in 0..dd - 3 {
                out = out.with_leaf(last, Some(end), 1);
                last = out.len() - 1;
            }
            out
        }
    })
}

/// `E_D`: the minimal diagram of [`adjacent_diagram_construction`].
pub fn construct_adjacent_diagram(d: &WeightedDiagram) -> Result<WeightedDiagram> {
    adjacent_diagram_construction(d)?.minimalize()
}

/// The jump predicted from the end weight `d` and the number `w` of
/// vertices `R_t` is proximate to.
pub fn expected_jump(d: i64, w: i64) -> i64 {
    match d {
        1 => 1,
        2 if w == 0 => 1,
        2 => w,
        _ => d - 2 + w,
    }
}

/// The linear jump read off `(k, l, p, q)` directly.
pub fn closed_form_lambda(spec: &QuasihomogeneousSpec) -> i64 {
    let (k, l, p, q) = (
        spec.k() as i64,
        spec.l() as i64,
        spec.p() as i64,
        spec.q() as i64,
    );
    if p == q {
        if k + l + p == 2 {
            1
        } else {
            k + l + p - 2
        }
    } else if q % p == 0 {
        if p + k <= 2 {
            1
        } else {
            p + k - 1
        }
    } else {
        gcd(p as u64, q as u64) as i64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MaximalityBounds {
    pub max_vertices: usize,
    pub max_weight: i64,
    pub extra_bound: usize,
}

impl MaximalityBounds {
    /// `|D_min| + 4` vertices, root weight + 2, two extra vertices.
    pub fn default_for(spec: &QuasihomogeneousSpec) -> Self {
        let d = minimal_diagram(spec);
        Self {
            max_vertices: d.len() + 4,
            max_weight: d.weight(d.root()) + 2,
            extra_bound: 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Maximality {
    Unverified,
    /// Outcome of a bounded sweep.
    Checked {
        bounds: MaximalityBounds,
        verified: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JumpReport {
    pub spec: QuasihomogeneousSpec,
    pub semi_quasihomogeneous: bool,
    pub d: i64,
    pub t: usize,
    pub w: i64,
    pub d_min: WeightedDiagram,
    pub mu_d: i64,
    pub e_d: WeightedDiagram,
    pub mu_e: i64,
    pub lambda_lin: i64,
    /// `D_min` with one free weight-1 vertex added at `R_t`.
    pub representative: WeightedDiagram,
    pub witness: GeqWitness,
    pub maximality: Maximality,
}

impl JumpReport {
    pub fn to_json_value(&self) -> serde_json::Value {
        let maximality = match &self.maximality {
            Maximality::Unverified => json!({
                "status": "unverified",
                "max_vertices": null,
                "max_weight": null,
                "extra_bound": null,
            }),
            Maximality::Checked { bounds, verified } => json!({
                "status": if *verified { "verified" } else { "unverified" },
                "max_vertices": bounds.max_vertices,
                "max_weight": bounds.max_weight,
                "extra_bound": bounds.extra_bound,
            }),
        };
        let mut v = json!({
            "spec": self.spec.as_tuple(),
            "d": self.d,
            "t": self.t,
            "w": self.w,
            "mu": self.mu_d,
            "lambda_lin": self.lambda_lin,
            "E_D": self.e_d.to_json_value(),
            "witness": self.witness.to_json_value(&self.representative),
            "maximality": maximality,
        });
        if self.semi_quasihomogeneous {
            v["semi_quasihomogeneous"] = json!(true);
        }
        v
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json_value()).expect("plain data");
        s.push('\n');
        s
    }
}

/// Computes the linear jump three ways (closed form, from `(d, w)`, and as
/// `μ(D) − μ(E_D)`) and fails if they disagree.
pub fn lambda_lin(spec: &QuasihomogeneousSpec) -> Result<JumpReport> {
    let d_min = minimal_diagram(spec);
    let b = minimal_bamboo(&d_min)?;
    let inv = derived_invariants(spec);
    if (b.d as u64, b.t as u64, b.w as u64) != (inv.d, inv.t, inv.w) {
        return Err(Error::Internal(format!(
            "{spec}: bamboo (d, t, w) = ({}, {}, {}) but expected ({}, {}, {})",
            b.d, b.t, b.w, inv.d, inv.t, inv.w
        )));
    }
    let e_d = construct_adjacent_diagram(&d_min)?;
    let mu_d = d_min.milnor_number()?;
    let mu_e = e_d.milnor_number()?;
    let from_mu = mu_d - mu_e;
    let from_dw = expected_jump(b.d, b.w as i64);
    let closed = closed_form_lambda(spec);
    if from_mu != from_dw || from_dw != closed {
        return Err(Error::Internal(format!(
            "{spec}: jump disagreement: mu(D) - mu(E_D) = {from_mu}, from (d, w) = {from_dw}, closed form = {closed}"
        )));
    }
    let representative = d_min.add_free_leaf(b.end(), 1)?;
    let witness = geq(&representative, &e_d)?
        .ok_or_else(|| Error::Internal(format!("{spec}: no witness for the adjacency to E_D")))?;
    if !check_geq_witness(&representative, &e_d, &witness) {
        return Err(Error::Internal(format!(
            "{spec}: witness fails its own check"
        )));
    }
    Ok(JumpReport {
        spec: *spec,
        semi_quasihomogeneous: false,
        d: b.d,
        t: b.t,
        w: b.w as i64,
        d_min,
        mu_d,
        e_d,
        mu_e,
        lambda_lin: closed,
        representative,
        witness,
        maximality: Maximality::Unverified,
    })
}

/// As [`lambda_lin`], for `spec` declared to be the quasihomogeneous initial
/// part of a semi-quasihomogeneous germ, whose diagram has the same type.
pub fn lambda_lin_semi(spec: &QuasihomogeneousSpec) -> Result<JumpReport> {
    let mut r = lambda_lin(spec)?;
    r.semi_quasihomogeneous = true;
    Ok(r)
}

/// An enumerated type found adjacent to `D`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub key: String,
    pub mu: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaximalityReport {
    pub spec: QuasihomogeneousSpec,
    pub bounds: MaximalityBounds,
    pub mu_d: i64,
    pub lambda_lin: i64,
    /// Minimal diagrams produced by the enumeration.
    pub enumerated: usize,
    /// Candidates of another type with `μ ≥ μ(D) − λ`, each tested for
    /// adjacency.
    pub examined: usize,
    /// Candidates with `μ > μ(D) − λ` shown not adjacent within the bound.
    pub refuted: usize,
    /// Adjacent types with `μ(D) − λ < μ < μ(D)` or `μ > μ(D)`.
    pub contradictions: Vec<Finding>,
    /// Adjacent types of another kind with `μ = μ(D)`.
    pub anomalies: Vec<Finding>,
    pub e_d_adjacent: bool,
    /// Largest `μ` among adjacent types, `E_D` included.
    pub attained_max: Option<i64>,
}

impl MaximalityReport {
    pub fn verified(&self) -> bool {
        self.contradictions.is_empty()
            && self.anomalies.is_empty()
            && self.e_d_adjacent
            && self.attained_max == Some(self.mu_d - self.lambda_lin)
    }
}

/// Sweeps every minimal diagram within `bounds` whose type differs from `D`
/// and whose `μ` is at least `μ(D) − λ`, and tests adjacency from `D`. Only
/// positive weights are enumerated.
pub fn verify_maximality(
    spec: &QuasihomogeneousSpec,
    bounds: MaximalityBounds,
    max_candidates: Option<usize>,
) -> Result<MaximalityReport> {
    let jump = lambda_lin(spec)?;
    let d_min = &jump.d_min;
    let heaviest = d_min.weights().iter().copied().max().unwrap_or(0);
    if bounds.max_vertices < d_min.len() || bounds.max_weight < heaviest {
        return Err(Error::InvalidBounds(format!(
            "bounds ({}, {}) are smaller than the minimal diagram ({} vertices, weight {})",
            bounds.max_vertices,
            bounds.max_weight,
            d_min.len(),
            heaviest
        )));
    }
    let source = DiagramType::of(d_min)?;
    let threshold = jump.mu_d - jump.lambda_lin;
    let all = enumerate_minimal_diagrams(&EnumerationLimits {
        max_vertices: bounds.max_vertices,
        max_weight: bounds.max_weight,
        max_candidates,
    })?;
    let candidates: Vec<(&WeightedDiagram, i64)> = all
        .iter()
        .map(|e| {
            (
                e,
                e.milnor_number()
                    .expect("enumerated diagrams are consistent"),
            )
        })
        .filter(|(e, mu)| *mu >= threshold && e.canonical_key() != source.canonical_key())
        .collect();
    let verdicts: Vec<(String, i64, bool)> = candidates
        .par_iter()
        .map(|(e, mu)| {
            let target = DiagramType::of(e)?;
            let v = linear_adjacent(&source, &target, bounds.extra_bound)?;
            Ok((target.canonical_key().to_string(), *mu, v.is_yes()))
        })
        .collect::<Result<_>>()?;

    let mut report = MaximalityReport {
        spec: *spec,
        bounds,
        mu_d: jump.mu_d,
        lambda_lin: jump.lambda_lin,
        enumerated: all.len(),
        examined: verdicts.len(),
        refuted: 0,
        contradictions: Vec::new(),
        anomalies: Vec::new(),
        e_d_adjacent: false,
        attained_max: None,
    };
    for (key, mu, adjacent) in verdicts {
        if !adjacent {
            if mu > threshold {
                report.refuted += 1;
            }
            continue;
        }
        report.attained_max = report.attained_max.max(Some(mu));
        if mu == jump.mu_d {
            report.anomalies.push(Finding { key, mu });
        } else if mu > threshold {
            report.contradictions.push(Finding { key, mu });
        }
    }
    let e_type = DiagramType::of(&jump.e_d)?;
    report.e_d_adjacent = linear_adjacent(&source, &e_type, bounds.extra_bound)?.is_yes();
    if report.e_d_adjacent {
        report.attained_max = report.attained_max.max(Some(jump.mu_e));
    }
    Ok(report)
}
