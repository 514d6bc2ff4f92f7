use serde::Serialize;

use super::{equal_degree, lly_cost_matrix};
use crate::error::Result;
use crate::graph::Graph;
use crate::transport::{min_cost_assignment, optimal_pair_support, Assignment};

/// How many pairs of an assignment sit at distance 1, 2 and 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PairCounts {
    pub at_one: usize,
    pub at_two: usize,
    pub at_three: usize,
}

/// Shape of a flat triangle-free edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FlatCase {
    /// Some optimal assignment uses a pair at distance 3.
    LongPair,
    /// No optimal assignment uses a pair at distance 3.
    ShortPairsOnly,
    /// The edge has curvature other than zero or lies in a triangle.
    NotApplicable,
}

/// Optimal-assignment structure around an equal-degree edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalStructure {
    pub degree: usize,
    pub common_neighbors: usize,
    /// Private neighbors of each endpoint.
    pub k: usize,
    pub optimal_cost: i64,
    /// `2 * at_one + at_two`, equal to `3k - optimal_cost` for every
    /// optimal assignment.
    pub short_pair_weight: i64,
    pub has_distance3_optimal: bool,
    pub bone_idle: bool,
    pub case: FlatCase,
    /// An optimal assignment, using a distance-3 pair when one exists.
    pub witness: Vec<usize>,
    pub witness_counts: PairCounts,
}

pub fn pair_counts(c: &crate::transport::CostMatrix, a: &Assignment) -> PairCounts {
    let mut counts = PairCounts { at_one: 0, at_two: 0, at_three: 0 };
    for (i, &j) in a.permutation.iter().enumerate() {
        match c.get(i, j) {
            1 => counts.at_one += 1,
            2 => counts.at_two += 1,
            3 => counts.at_three += 1,
            other => unreachable!("private neighbors at distance {other}"),
        }
    }
    counts
}

pub fn local_structure(g: &Graph, x: usize, y: usize) -> Result<LocalStructure> {
    let d = equal_degree(g, x, y)?;
    let common = g.common_neighbors(x, y)?.len();
    let c = lly_cost_matrix(g, x, y)?;
    let k = c.size();
    let best = min_cost_assignment(&c);
    let long = optimal_pair_support(&c)
        .into_iter()
        .find(|&(i, j)| c.get(i, j) == 3);

    let witness = match long {
        Some((i, j)) => {
            let rest = min_cost_assignment(&c.minor(i, j));
            let mut perm: Vec<usize> = rest
                .permutation
                .iter()
                .map(|&col| if col >= j { col + 1 } else { col })
                .collect();
            perm.insert(i, j);
            Assignment { cost: c.cost_of(&perm), permutation: perm }
        }
        None => best.clone(),
    };
    debug_assert_eq!(witness.cost, best.cost);

    let short_pair_weight = 3 * k as i64 - best.cost;
    let flat = d as i64 + 1 == best.cost;
    let bone_idle =
        2 * d as i64 - 4 - 3 * common as i64 == short_pair_weight && long.is_some();
    let case = match (flat && common == 0, long.is_some()) {
        (true, true) => FlatCase::LongPair,
        (true, false) => FlatCase::ShortPairsOnly,
        (false, _) => FlatCase::NotApplicable,
    };
    Ok(LocalStructure {
        degree: d,
        common_neighbors: common,
        k,
        optimal_cost: best.cost,
        short_pair_weight,
        has_distance3_optimal: long.is_some(),
        bone_idle,
        case,
        witness_counts: pair_counts(&c, &witness),
        witness: witness.permutation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    #[test]
    fn torus_edges_have_a_long_pair() {
        let g = torus_grid(6, 6).unwrap();
        for (x, y) in g.edges() {
            let s = local_structure(&g, x, y).unwrap();
            assert!(s.bone_idle);
            assert_eq!(s.case, FlatCase::LongPair);
            assert_eq!(s.witness_counts, PairCounts { at_one: 2, at_two: 0, at_three: 1 });
        }
    }

    #[test]
    fn cube_edges_match_perfectly() {
        let g = hypercube(3).unwrap();
        let s = local_structure(&g, 0, 1).unwrap();
        assert_eq!(s.optimal_cost, 2);
        assert_eq!(s.witness_counts.at_one, 2);
        assert!(!s.bone_idle);
        assert_eq!(s.case, FlatCase::NotApplicable);
    }

    #[test]
    fn complete_bipartite_has_no_long_pair() {
        let g = complete_bipartite(3, 3).unwrap();
        let (x, y) = g.edges().next().unwrap();
        assert!(!local_structure(&g, x, y).unwrap().has_distance3_optimal);
    }

    #[test]
    fn dodecahedral_edges_are_flat_without_long_pairs() {
        let g = dodecahedral();
        let (x, y) = g.edges().next().unwrap();
        let s = local_structure(&g, x, y).unwrap();
        assert_eq!(s.short_pair_weight, 3 * s.k as i64 - s.optimal_cost);
        assert_eq!(s.optimal_cost, 4);
    }
}
