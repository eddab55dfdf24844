//! Quasihomogeneous plane curve singularities `x^k y^l (x^p + … + y^q)` and
//! their Enriques diagrams.

mod parse;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::{DiagramType, VertexId, WeightedDiagram};
use crate::error::{Error, Result};

pub use parse::parse_spec;

/// Normal form `x^k y^l (x^p + … + y^q)` with `k, l ∈ {0,1}`, `p ≤ q` and
/// `k + l + p ≥ 2`. Generic coefficients are implied; the topological type
/// only depends on these four numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuasihomogeneousSpec {
    k: u8,
    l: u8,
    p: u32,
    q: u32,
}

impl QuasihomogeneousSpec {
    pub fn new(k: u8, l: u8, p: u32, q: u32) -> Result<Self> {
        if k > 1 {
            return Err(Error::InvalidSpec(format!("k must be 0 or 1, got {k}")));
        }
        if l > 1 {
            return Err(Error::InvalidSpec(format!("l must be 0 or 1, got {l}")));
        }
        if p == 0 || q == 0 {
            return Err(Error::InvalidSpec(format!(
                "exponents must be positive, got p={p}, q={q}"
            )));
        }
        if p > q {
            return Err(Error::InvalidSpec(format!("p <= q violated: p={p}, q={q}")));
        }
        if k as u32 + l as u32 + p < 2 {
            return Err(Error::InvalidSpec(format!(
                "k + l + p >= 2 violated: {k} + {l} + {p} < 2"
            )));
        }
        Ok(Self { k, l, p, q })
    }

    /// Like [`new`](Self::new), but swaps the roles of `x` and `y` when
    /// `p > q`.
    pub fn normalized(k: u8, l: u8, p: u32, q: u32) -> Result<Self> {
        if p > q {
            Self::new(l, k, q, p)
        } else {
            Self::new(k, l, p, q)
        }
    }

    pub fn k(&self) -> u8 {
        self.k
    }
    pub fn l(&self) -> u8 {
        self.l
    }
    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn as_tuple(&self) -> [u32; 4] {
        [self.k as u32, self.l as u32, self.p, self.q]
    }

    /// All valid specs with `q <= max_q`, in lexicographic `(p, q, k, l)`
    /// order.
    pub fn all_up_to(max_q: u32) -> Vec<Self> {
        let mut out = Vec::new();
        for p in 1..=max_q {
            for q in p..=max_q {
                for k in 0..=1 {
                    for l in 0..=1 {
                        if let Ok(s) = Self::new(k, l, p, q) {
                            out.push(s);
                        }
                    }
                }
            }
        }
        out
    }

    /// `y(x + y^q)` with `q ≥ 2` is a pair of transverse smooth branches.
    fn is_node_in_disguise(&self) -> bool {
        self.k == 0 && self.l == 1 && self.p == 1 && self.q > 1
    }

    pub fn polynomial(&self) -> String {
        let mut s = String::new();
        if self.k == 1 {
            s.push_str("x*");
        }
        if self.l == 1 {
            s.push_str("y*");
        }
        if s.is_empty() {
            format!("x^{}+y^{}", self.p, self.q)
        } else {
            format!("{s}(x^{}+y^{})", self.p, self.q)
        }
    }
}

impl fmt::Display for QuasihomogeneousSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.k, self.l, self.p, self.q)
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Sum of the partial quotients of `s / r`.
fn continued_fraction_length(r: u64, s: u64) -> u64 {
    let (mut a, mut b) = (s, r);
    let mut t = 0;
    while b != 0 {
        t += a / b;
        (a, b) = (b, a % b);
    }
    t
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DerivedInvariants {
    pub d_tilde: u64,
    pub r: u64,
    pub s: u64,
    /// Weight of the last bamboo vertex.
    pub d: u64,
    /// Bamboo length.
    pub t: u64,
    /// Number of vertices the last bamboo vertex is proximate to.
    pub w: u64,
    pub w_x: u64,
    pub w_y: u64,
    /// Quasihomogeneous degree.
    pub degree: u64,
}

pub fn derived_invariants(spec: &QuasihomogeneousSpec) -> DerivedInvariants {
    let (k, l, p, q) = (spec.k as u64, spec.l as u64, spec.p as u64, spec.q as u64);
    let d_tilde = gcd(p, q);
    let (r, s) = (p / d_tilde, q / d_tilde);
    let (w_x, w_y) = (s, r);
    let degree = (k + p) * w_x + l * w_y;
    let (d, w, t) = if spec.is_node_in_disguise() {
        (2, 0, 1)
    } else if p == q {
        (k + l + p, 0, 1)
    } else if q % p == 0 {
        (k + p, 1, continued_fraction_length(r, s))
    } else {
        (d_tilde, 2, continued_fraction_length(r, s))
    };
    DerivedInvariants {
        d_tilde,
        r,
        s,
        d,
        t,
        w,
        w_x,
        w_y,
        degree,
    }
}

/// Milnor number of a weighted homogeneous germ,
/// `(W − w_x)(W − w_y) / (w_x w_y)`.
pub fn milnor_orlik(spec: &QuasihomogeneousSpec) -> Result<i64> {
    let inv = derived_invariants(spec);
    let (wx, wy, big) = (inv.w_x as i64, inv.w_y as i64, inv.degree as i64);
    let num = (big - wx) * (big - wy);
    let den = wx * wy;
    if num % den != 0 {
        return Err(Error::Internal(format!(
            "weighted homogeneous Milnor number {num}/{den} is not integral for {spec}"
        )));
    }
    Ok(num / den)
}

/// The complete Enriques diagram, by simulating the blow-ups of
/// `x^k y^l ∏ (x^r + α_i y^s)`.
///
/// The state `(a, b)` is the pair of exponents of the current strict
/// transform `x'^a + y'^b` (times `d̃` branches); `axis_x`/`axis_y` are the
/// vertices whose exceptional divisors are the local axes `x' = 0` and
/// `y' = 0`, or `None` while the axis is still the original coordinate line.
/// Vertex order: bamboo `R_1..R_t`, then the `d̃` branch leaves, then `T_1`
/// (from `y`) and `T_2` (from `x`).
pub fn build_enriques_diagram(spec: &QuasihomogeneousSpec) -> WeightedDiagram {
    let inv = derived_invariants(spec);
    let (k, l) = (spec.k as i64, spec.l as i64);
    let dt = inv.d_tilde as i64;

    struct Step {
        weight: i64,
        second: Option<usize>,
    }
    let mut chain: Vec<Step> = Vec::new();
    // last bamboo vertex the original x axis passes through
    let mut x_axis_end = 0;

    if spec.p == spec.q {
        chain.push(Step {
            weight: dt + k + l,
            second: None,
        });
    } else {
        let (mut a, mut b) = (inv.r as i64, inv.s as i64);
        let (mut axis_x, mut axis_y): (Option<usize>, Option<usize>) = (None, None);
        loop {
            let mult = dt * a.min(b) + k * axis_x.is_none() as i64 + l * axis_y.is_none() as i64;
            if !chain.is_empty() && mult == 1 {
                // A single smooth branch; stop once it crosses the
                // divisors through this point transversally.
                let normal_crossing = match (axis_x, axis_y) {
                    (None, Some(_)) => a == 1,
                    (Some(_), None) => b == 1,
                    _ => false,
                };
                if normal_crossing {
                    break;
                }
            }
            let id = chain.len();
            let parent = id.checked_sub(1);
            let second = [axis_x, axis_y]
                .into_iter()
                .flatten()
                .find(|&v| Some(v) != parent);
            chain.push(Step {
                weight: mult,
                second,
            });
            if axis_x.is_none() {
                x_axis_end = id;
            }
            if a == b {
                break;
            }
            if a < b {
                b -= a;
                axis_y = Some(id);
            } else {
                a -= b;
                axis_x = Some(id);
            }
        }
    }

    let mut builder = WeightedDiagram::builder(chain[0].weight);
    for (i, step) in chain.iter().enumerate().skip(1) {
        match step.second {
            Some(o) => builder.satellite(i - 1, o, step.weight),
            None => builder.free(i - 1, step.weight),
        };
    }
    let last = chain.len() - 1;
    let branches = if spec.is_node_in_disguise() { 1 } else { dt };
    for _ in 0..branches {
        builder.free(last, 1);
    }
    if spec.l == 1 {
        builder.free(0, 1);
    }
    if spec.k == 1 {
        builder.free(x_axis_end, 1);
    }
    let out = builder
        .build()
        .expect("blow-up simulation yields valid diagrams");
    debug_assert!(out.is_complete(), "{spec}: built diagram is not complete");
    out
}

/// The minimal diagram of the singularity.
pub fn minimal_diagram(spec: &QuasihomogeneousSpec) -> WeightedDiagram {
    build_enriques_diagram(spec)
        .minimalize()
        .expect("complete diagrams are consistent")
}

/// A diagram whose vertices form a single chain `R_1..R_t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bamboo {
    pub chain: Vec<VertexId>,
    /// `ν(R_t)`.
    pub d: i64,
    pub t: usize,
    /// Number of vertices `R_t` is proximate to.
    pub w: usize,
}

impl Bamboo {
    pub fn of(w: &WeightedDiagram) -> Option<Self> {
        let d = w.diagram();
        let mut chain = vec![d.root()];
        loop {
            let last = *chain.last().unwrap();
            match d.children(last) {
                [] => break,
                [c] => chain.push(*c),
                _ => return None,
            }
        }
        let end = *chain.last().unwrap();
        Some(Self {
            d: w.weight(end),
            t: chain.len(),
            w: d.proximate_to(end).len(),
            chain,
        })
    }

    pub fn end(&self) -> VertexId {
        *self.chain.last().unwrap()
    }
}

/// The weight constraints satisfied by minimal bamboos of quasihomogeneous
/// singularities with `t ≠ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BambooConstraints {
    /// `ν(R_1) ≤ Σ_{R_i→R_1} ν(R_i) + 1`.
    pub root_bound: bool,
    /// The same bound at the predecessor of the first satellite; `None`
    /// when there is no satellite.
    pub before_first_satellite: Option<bool>,
    /// Equality `ν(R_k) = Σ_{R_i→R_k} ν(R_i)` for `2 ≤ k < t` unless
    /// `R_{k+1}` is the first satellite.
    pub equalities: bool,
}

impl BambooConstraints {
    pub fn hold(&self) -> bool {
        self.root_bound && self.before_first_satellite.unwrap_or(true) && self.equalities
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuasihomogeneousMembership {
    pub bamboo: Option<Bamboo>,
    /// `None` for non-bamboos and for `t = 1`.
    pub constraints: Option<BambooConstraints>,
    /// A spec whose minimal diagram has the same type, if one exists.
    pub reconstructed: Option<QuasihomogeneousSpec>,
}

impl QuasihomogeneousMembership {
    pub fn is_quasihomogeneous(&self) -> bool {
        self.reconstructed.is_some()
    }
}

fn bamboo_constraints(w: &WeightedDiagram, b: &Bamboo) -> BambooConstraints {
    let d = w.diagram();
    let received = |v: VertexId| -> i64 { d.proximate_from(v).map(|q| w.weight(q)).sum() };
    let root = b.chain[0];
    let root_bound = w.weight(root) <= received(root) + 1;
    let first_sat = b.chain.iter().position(|&v| d.is_satellite(v));
    let before_first_satellite =
        first_sat.map(|i| w.weight(b.chain[i - 1]) <= received(b.chain[i - 1]) + 1);
    let equalities = (1..b.t - 1)
        .filter(|&i| first_sat != Some(i + 1))
        .all(|i| w.weight(b.chain[i]) == received(b.chain[i]));
    BambooConstraints {
        root_bound,
        before_first_satellite,
        equalities,
    }
}

/// Decides whether a minimal diagram is a bamboo, checks the weight
/// constraints, and looks for a spec reproducing its type.
pub fn check_quasihomogeneous_membership(
    w: &WeightedDiagram,
) -> Result<QuasihomogeneousMembership> {
    w.diagram().ensure_valid()?;
    if !w.is_minimal() {
        return Err(Error::NotMinimal);
    }
    let Some(bamboo) = Bamboo::of(w) else {
        return Ok(QuasihomogeneousMembership {
            bamboo: None,
            constraints: None,
            reconstructed: None,
        });
    };
    let constraints = (bamboo.t != 1).then(|| bamboo_constraints(w, &bamboo));

    let target = DiagramType::of(w)?;
    let root_weight = w.weight(w.root()).max(0) as u32;
    let t = bamboo.t as u32;
    let mut reconstructed = None;
    'search: for p in 1..=root_weight {
        for q in p..=p * t.max(1) {
            for k in 0..=1 {
                for l in 0..=1 {
                    let Ok(spec) = QuasihomogeneousSpec::new(k, l, p, q) else {
                        continue;
                    };
                    let built = minimal_diagram(&spec);
                    if built.len() == w.len() && built.canonical_key() == target.canonical_key() {
                        reconstructed = Some(spec);
                        break 'search;
                    }
                }
            }
        }
    }
    Ok(QuasihomogeneousMembership {
        bamboo: Some(bamboo),
        constraints,
        reconstructed,
    })
}
