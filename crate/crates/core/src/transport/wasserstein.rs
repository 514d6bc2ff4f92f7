//! Exact Wasserstein-1 distance between measures on a graph.
//!
//! Masses are scaled by the least common multiple of their denominators
//! into integer supplies and demands; the resulting transportation problem
//! is solved as an integer min-cost flow with hop distances as costs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::flow::MinCostFlow;
use super::measure::Measure;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;

/// An optimal coupling: `(from, to, distance, mass)` for every moved piece.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransportPlan {
    pub cost: Rational,
    pub moves: Vec<(usize, usize, u32, Rational)>,
}

impl TransportPlan {
    /// Total mass moved over each distance `0, 1, 2, ...`.
    pub fn mass_by_distance(&self) -> Vec<Rational> {
        let longest = self.moves.iter().map(|m| m.2).max().unwrap_or(0) as usize;
        let mut out = vec![Rational::zero(); longest + 1];
        for (_, _, d, m) in &self.moves {
            out[*d as usize] = &out[*d as usize] + m;
        }
        out
    }
}

fn scale_of<'a>(masses: impl Iterator<Item = &'a Rational>) -> BigInt {
    masses.fold(BigInt::one(), |acc, m| acc.lcm(m.denom()))
}

fn scaled(m: &Rational, scale: &BigInt) -> Result<i128> {
    (m.numer() * (scale / m.denom()))
        .to_i128()
        .ok_or_else(|| Error::Overflow(format!("mass {m} scaled by {scale}")))
}

/// `W_1(mu, nu)`. Shared mass `min(mu(v), nu(v))` is fixed in place before
/// the flow is solved.
pub fn wasserstein1(g: &Graph, mu: &Measure, nu: &Measure) -> Result<Rational> {
    Ok(optimal_plan_within(g, mu, nu, None, true)?.cost)
}

/// `W_1(mu, nu)` solved on the full supplies, without fixing shared mass.
pub fn wasserstein1_unreduced(g: &Graph, mu: &Measure, nu: &Measure) -> Result<Rational> {
    Ok(optimal_plan_within(g, mu, nu, None, false)?.cost)
}

pub fn optimal_plan(g: &Graph, mu: &Measure, nu: &Measure) -> Result<TransportPlan> {
    optimal_plan_within(g, mu, nu, None, true)
}

/// Solves the transport problem; distances are searched only up to
/// `radius` hops when given (pairs beyond it count as disconnected).
pub(crate) fn optimal_plan_within(
    g: &Graph,
    mu: &Measure,
    nu: &Measure,
    radius: Option<u32>,
    fix_shared: bool,
) -> Result<TransportPlan> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    mu.check_on(g)?;
    nu.check_on(g)?;

    let mut moves = Vec::new();
    let mut supply: Vec<(usize, Rational)> = Vec::new();
    let mut demand: Vec<(usize, Rational)> = Vec::new();
    if fix_shared {
        for (v, m) in mu.iter() {
            let other = nu.mass(v);
            let shared = m.clone().min(other);
            if shared.is_positive() {
                moves.push((v, v, 0, shared.clone()));
            }
            let left = m - &shared;
            if left.is_positive() {
                supply.push((v, left));
            }
        }
        for (v, m) in nu.iter() {
            let left = m - m.clone().min(mu.mass(v));
            if left.is_positive() {
                demand.push((v, left));
            }
        }
    } else {
        supply = mu.iter().map(|(v, m)| (v, m.clone())).collect();
        demand = nu.iter().map(|(v, m)| (v, m.clone())).collect();
    }

    let scale = scale_of(supply.iter().chain(&demand).map(|(_, m)| m));
    let supply_units = supply
        .iter()
        .map(|(_, m)| scaled(m, &scale))
        .collect::<Result<Vec<_>>>()?;
    let demand_units = demand
        .iter()
        .map(|(_, m)| scaled(m, &scale))
        .collect::<Result<Vec<_>>>()?;
    let total: i128 = supply_units.iter().sum();

    let (s, t) = (supply.len() + demand.len(), supply.len() + demand.len() + 1);
    let mut net = MinCostFlow::new(t + 1);
    let mut routes = Vec::new();
    for (i, &(u, _)) in supply.iter().enumerate() {
        net.add_arc(s, i, supply_units[i], 0);
        let dist = g.bfs(u, radius)?;
        for (j, &(v, _)) in demand.iter().enumerate() {
            let d = dist[v].ok_or(Error::Disconnected(u, v))?;
            let id = net.add_arc(i, supply.len() + j, total, d as i64);
            routes.push((id, u, v, d));
        }
    }
    for (j, units) in demand_units.iter().enumerate() {
        net.add_arc(supply.len() + j, t, *units, 0);
    }
    let cost_units = net.solve(s, t, total)?;

    let scale_rat = Rational::from_big(scale.clone(), BigInt::one())?;
    for (id, u, v, d) in routes {
        let f = net.flow(id);
        if f > 0 {
            moves.push((u, v, d, Rational::from_big(BigInt::from(f), scale.clone())?));
        }
    }
    moves.sort();
    let cost = Rational::from_big(BigInt::from(cost_units), BigInt::one())? / scale_rat;
    Ok(TransportPlan { cost, moves })
}

/// Token count accepted by [`wasserstein1_oracle`].
pub const ORACLE_TOKEN_LIMIT: u64 = 8;

/// Brute-force `W_1`: both measures become `M` equal tokens (`M` the common
/// denominator) and every pairing of tokens is tried. Only for `M <= 8`.
pub fn wasserstein1_oracle(g: &Graph, mu: &Measure, nu: &Measure) -> Result<Rational> {
    mu.check_on(g)?;
    nu.check_on(g)?;
    let scale = scale_of(mu.iter().chain(nu.iter()).map(|(_, m)| m));
    let tokens = scale
        .to_u64()
        .filter(|&t| t <= ORACLE_TOKEN_LIMIT)
        .ok_or_else(|| Error::TokenBound {
            tokens: scale.to_u64().unwrap_or(u64::MAX),
            limit: ORACLE_TOKEN_LIMIT,
        })?;
    let expand = |m: &Measure| -> Vec<usize> {
        m.iter()
            .flat_map(|(v, mass)| {
                let count = (mass.numer() * (&scale / mass.denom())).to_usize().unwrap();
                std::iter::repeat_n(v, count)
            })
            .collect()
    };
    let (from, to) = (expand(mu), expand(nu));
    debug_assert_eq!(from.len() as u64, tokens);

    let mut cost = vec![vec![0u32; to.len()]; from.len()];
    for (i, &u) in from.iter().enumerate() {
        let dist = g.bfs(u, None)?;
        for (j, &v) in to.iter().enumerate() {
            cost[i][j] = dist[v].ok_or(Error::Disconnected(u, v))?;
        }
    }

    fn search(row: usize, used: &mut [bool], acc: u32, cost: &[Vec<u32>], best: &mut u32) {
        if row == cost.len() {
            *best = (*best).min(acc);
            return;
        }
        for j in 0..used.len() {
            if !used[j] {
                used[j] = true;
                search(row + 1, used, acc + cost[row][j], cost, best);
                used[j] = false;
            }
        }
    }
    let mut best = u32::MAX;
    search(0, &mut vec![false; to.len()], 0, &cost, &mut best);
    Ok(Rational::new(best as i64, tokens as i64))
}
