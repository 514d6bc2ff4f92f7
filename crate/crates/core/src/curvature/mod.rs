//! Per-edge curvature quantities, bone-idleness predicates and
//! whole-graph curvature profiles.
//!
//! Every value is computed exactly. Where two independent routes exist
//! (transport and assignment) both are exposed so callers can cross-check.

mod idleness;
mod local;
mod profile;

pub use idleness::{idleness_function, PiecewiseLinearFn};
pub use local::{local_structure, pair_counts, FlatCase, LocalStructure, PairCounts};
pub use profile::{curvature_profile, edge_record, CurvatureProfile, EdgeCurvatureRecord};

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;
use crate::transport::{
    min_assignment_cost, mu_alpha, optimal_pair_support, optimal_plan_within, CostMatrix,
};

/// Distances between endpoints of neighboring edges never exceed this.
pub(crate) const LOCAL_RADIUS: u32 = 3;

/// `kappa_alpha(x, y) = 1 - W_1(mu_x^alpha, mu_y^alpha)` for an edge `x ~ y`.
pub fn kappa_alpha(g: &Graph, x: usize, y: usize, alpha: &Rational) -> Result<Rational> {
    g.check_edge(x, y)?;
    let mu = mu_alpha(g, x, alpha)?;
    let nu = mu_alpha(g, y, alpha)?;
    let plan = optimal_plan_within(g, &mu, &nu, Some(LOCAL_RADIUS), true)?;
    Ok(Rational::one() - plan.cost)
}

/// Idleness at which the idleness function enters its final linear piece.
pub fn linear_threshold(dx: usize, dy: usize) -> Rational {
    Rational::new(1, dx.max(dy) as i64 + 1)
}

/// Lin-Lu-Yau curvature via the transport route: `kappa_a / (1 - a)` at
/// `a = 1 / (max(d_x, d_y) + 1)`.
pub fn kappa_lly(g: &Graph, x: usize, y: usize) -> Result<Rational> {
    g.check_edge(x, y)?;
    let a = linear_threshold(g.degree(x), g.degree(y));
    let k = kappa_alpha(g, x, y, &a)?;
    Ok(k / (Rational::one() - a))
}

/// Curvature without idleness, transport route.
pub fn kappa_zero(g: &Graph, x: usize, y: usize) -> Result<Rational> {
    kappa_alpha(g, x, y, &Rational::zero())
}

fn equal_degree(g: &Graph, x: usize, y: usize) -> Result<usize> {
    g.check_edge(x, y)?;
    let (dx, dy) = (g.degree(x), g.degree(y));
    if dx != dy {
        return Err(Error::UnequalDegrees { x, y, dx, dy });
    }
    Ok(dx)
}

/// Distance matrix from `rows` to `cols`; every pair must lie within
/// [`LOCAL_RADIUS`].
fn local_costs(g: &Graph, rows: &[usize], cols: &[usize]) -> Result<CostMatrix> {
    let mut out = Vec::with_capacity(rows.len());
    for &u in rows {
        let dist = g.bfs(u, Some(LOCAL_RADIUS))?;
        let row = cols
            .iter()
            .map(|&v| dist[v].map(i64::from).ok_or(Error::Disconnected(u, v)))
            .collect::<Result<Vec<_>>>()?;
        out.push(row);
    }
    CostMatrix::new(out)
}

/// Neighbors of `x` that are neither `y` nor adjacent to `y`.
pub(crate) fn private_neighbors(g: &Graph, x: usize, y: usize) -> Vec<usize> {
    g.neighbors(x)
        .iter()
        .copied()
        .filter(|&z| z != y && !g.has_edge(z, y))
        .collect()
}

/// Cost matrix between the private neighbors of `x` and those of `y`.
/// Its optimum `C` gives `kappa = (d + 1 - C) / d` on equal-degree edges.
pub fn lly_cost_matrix(g: &Graph, x: usize, y: usize) -> Result<CostMatrix> {
    equal_degree(g, x, y)?;
    local_costs(g, &private_neighbors(g, x, y), &private_neighbors(g, y, x))
}

/// Cost matrix between `{y} + private(x)` and `{x} + private(y)`.
/// Its optimum `C` gives `kappa_0 = (d - C) / d` on equal-degree edges.
pub fn zero_cost_matrix(g: &Graph, x: usize, y: usize) -> Result<CostMatrix> {
    equal_degree(g, x, y)?;
    let mut rows = vec![y];
    rows.extend(private_neighbors(g, x, y));
    let mut cols = vec![x];
    cols.extend(private_neighbors(g, y, x));
    local_costs(g, &rows, &cols)
}

/// Lin-Lu-Yau curvature via the assignment route. Equal degrees only.
pub fn kappa_lly_assignment(g: &Graph, x: usize, y: usize) -> Result<Rational> {
    let d = equal_degree(g, x, y)? as i64;
    let c = min_assignment_cost(&lly_cost_matrix(g, x, y)?);
    Ok(Rational::new(d + 1 - c, d))
}

/// Curvature without idleness via the assignment route. Equal degrees only.
pub fn kappa_zero_assignment(g: &Graph, x: usize, y: usize) -> Result<Rational> {
    let d = equal_degree(g, x, y)? as i64;
    let c = min_assignment_cost(&zero_cost_matrix(g, x, y)?);
    Ok(Rational::new(d - c, d))
}

/// `kappa - kappa_0` on an equal-degree edge, with the largest distance
/// used by any optimal assignment of private neighbors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gap {
    pub value: Rational,
    /// Absent when the edge lies in `d - 1` triangles.
    pub supsup: Option<u8>,
}

impl Gap {
    /// `d * value`, always 0, 1 or 2.
    pub fn scaled(&self, d: usize) -> i64 {
        (&self.value * &Rational::from(d))
            .to_i64()
            .expect("gap times degree is an integer")
    }
}

fn max_support_cost(c: &CostMatrix, support: &BTreeSet<(usize, usize)>) -> u8 {
    support.iter().map(|&(i, j)| c.get(i, j)).max().unwrap_or(0) as u8
}

pub fn curvature_gap(g: &Graph, x: usize, y: usize) -> Result<Gap> {
    let d = equal_degree(g, x, y)?;
    let c = lly_cost_matrix(g, x, y)?;
    if c.size() == 0 {
        return Ok(Gap { value: Rational::new(2, d as i64), supsup: None });
    }
    let supsup = max_support_cost(&c, &optimal_pair_support(&c));
    Ok(Gap {
        value: Rational::new(3 - i64::from(supsup), d as i64),
        supsup: Some(supsup),
    })
}

/// Whether `kappa = kappa_0`, decided by a distance-3 pair in some optimal
/// assignment.
pub fn equality_holds(g: &Graph, x: usize, y: usize) -> Result<bool> {
    Ok(curvature_gap(g, x, y)?.supsup == Some(3))
}

/// `kappa_alpha(x, y) = 0` for every idleness, decided by `kappa_0 = 0` and
/// `kappa = 0`.
pub fn is_bone_idle_edge(g: &Graph, x: usize, y: usize) -> Result<bool> {
    Ok(kappa_zero(g, x, y)?.is_zero() && kappa_lly(g, x, y)?.is_zero())
}

fn all_edges(g: &Graph, pred: impl Fn(usize, usize) -> Result<bool>) -> Result<bool> {
    for (x, y) in g.edges() {
        if !pred(x, y)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every edge bone-idle; vacuously true without edges.
pub fn is_bone_idle(g: &Graph) -> Result<bool> {
    all_edges(g, |x, y| is_bone_idle_edge(g, x, y))
}

/// Lin-Lu-Yau curvature zero on every edge.
pub fn is_ricci_flat(g: &Graph) -> Result<bool> {
    all_edges(g, |x, y| Ok(kappa_lly(g, x, y)?.is_zero()))
}

/// Curvature without idleness zero on every edge.
pub fn is_zero_ricci_flat(g: &Graph) -> Result<bool> {
    all_edges(g, |x, y| Ok(kappa_zero(g, x, y)?.is_zero()))
}

/// Smallest Lin-Lu-Yau curvature over all edges, if any.
pub fn min_edge_curvature(g: &Graph) -> Result<Option<Rational>> {
    let mut best: Option<Rational> = None;
    for (x, y) in g.edges() {
        let k = kappa_lly(g, x, y)?;
        best = Some(match best {
            Some(b) => b.min(k),
            None => k,
        });
    }
    Ok(best)
}
