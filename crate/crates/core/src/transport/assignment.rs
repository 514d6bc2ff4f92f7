//! Exact minimum-cost bipartite assignment on small square matrices.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A square matrix of non-negative integer costs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CostMatrix {
    k: usize,
    entries: Vec<i64>,
}

impl fmt::Debug for CostMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

impl CostMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let k = rows.len();
        if rows.iter().any(|r| r.len() != k) {
            return Err(Error::NotSquare);
        }
        let entries: Vec<i64> = rows.into_iter().flatten().collect();
        if let Some(bad) = entries.iter().find(|&&c| c < 0) {
            return Err(Error::InvalidParameter(format!("negative cost {bad}")));
        }
        Ok(CostMatrix { k, entries })
    }

    pub fn from_fn(k: usize, mut f: impl FnMut(usize, usize) -> i64) -> Result<Self> {
        CostMatrix::new((0..k).map(|i| (0..k).map(|j| f(i, j)).collect()).collect())
    }

    pub fn size(&self) -> usize {
        self.k
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.k + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i64]> {
        self.entries.chunks(self.k.max(1)).take(self.k)
    }

    /// The matrix with row `i` and column `j` removed.
    pub fn minor(&self, i: usize, j: usize) -> CostMatrix {
        let k = self.k - 1;
        let entries = (0..self.k)
            .filter(|&r| r != i)
            .flat_map(|r| (0..self.k).filter(move |&c| c != j).map(move |c| (r, c)))
            .map(|(r, c)| self.get(r, c))
            .collect();
        CostMatrix { k, entries }
    }

    /// Total cost of `perm` read as row `i` to column `perm[i]`.
    pub fn cost_of(&self, perm: &[usize]) -> i64 {
        perm.iter().enumerate().map(|(i, &j)| self.get(i, j)).sum()
    }
}

/// A perfect matching of rows to columns and its cost.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Assignment {
    pub permutation: Vec<usize>,
    pub cost: i64,
}

/// Optimal assignment cost by the Hungarian method with potentials.
pub fn min_assignment_cost(c: &CostMatrix) -> i64 {
    let n = c.size();
    if n == 0 {
        return 0;
    }
    // 1-indexed rows/columns; column 0 is the virtual start
    let inf = i64::MAX / 4;
    let mut u = vec![0i64; n + 1];
    let mut v = vec![0i64; n + 1];
    let mut matched = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for row in 1..=n {
        matched[0] = row;
        let mut j0 = 0;
        let mut minv = vec![inf; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = matched[j0];
            let mut delta = inf;
            let mut j1 = 0;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let cur = c.get(i0 - 1, j - 1) - u[i0] - v[j];
                if cur < minv[j] {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if minv[j] < delta {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[matched[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if matched[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            matched[j0] = matched[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    (1..=n).map(|j| c.get(matched[j] - 1, j - 1)).sum()
}

/// The lexicographically smallest optimal assignment.
pub fn min_cost_assignment(c: &CostMatrix) -> Assignment {
    let optimum = min_assignment_cost(c);
    let mut permutation = Vec::with_capacity(c.size());
    let mut rest = c.clone();
    // column labels of `rest` in terms of the original matrix
    let mut columns: Vec<usize> = (0..c.size()).collect();
    let mut target = optimum;
    while rest.size() > 0 {
        let pick = (0..rest.size())
            .find(|&j| rest.get(0, j) + min_assignment_cost(&rest.minor(0, j)) == target)
            .expect("some column extends an optimal assignment");
        target -= rest.get(0, pick);
        permutation.push(columns.remove(pick));
        rest = rest.minor(0, pick);
    }
    Assignment { permutation, cost: optimum }
}

/// All `(row, column)` pairs used by at least one optimal assignment.
pub fn optimal_pair_support(c: &CostMatrix) -> BTreeSet<(usize, usize)> {
    let optimum = min_assignment_cost(c);
    let k = c.size();
    (0..k)
        .flat_map(|i| (0..k).map(move |j| (i, j)))
        .filter(|&(i, j)| c.get(i, j) + min_assignment_cost(&c.minor(i, j)) == optimum)
        .collect()
}

/// Every optimal assignment, in lexicographic order of permutations.
pub fn optimal_assignments(c: &CostMatrix) -> Vec<Assignment> {
    fn extend(
        c: &CostMatrix,
        rest: &CostMatrix,
        columns: &mut Vec<usize>,
        prefix: &mut Vec<usize>,
        target: i64,
        out: &mut Vec<Assignment>,
        optimum: i64,
    ) {
        if rest.size() == 0 {
            debug_assert_eq!(c.cost_of(prefix), optimum);
            out.push(Assignment { permutation: prefix.clone(), cost: optimum });
            return;
        }
        for j in 0..rest.size() {
            let sub = rest.minor(0, j);
            let here = rest.get(0, j);
            if here + min_assignment_cost(&sub) != target {
                continue;
            }
            let col = columns.remove(j);
            prefix.push(col);
            extend(c, &sub, columns, prefix, target - here, out, optimum);
            prefix.pop();
            columns.insert(j, col);
        }
    }
    let optimum = min_assignment_cost(c);
    let mut out = Vec::new();
    let mut columns: Vec<usize> = (0..c.size()).collect();
    extend(c, c, &mut columns, &mut Vec::new(), optimum, &mut out, optimum);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matrix(rows: &[&[i64]]) -> CostMatrix {
        CostMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn empty_matrix() {
        let c = CostMatrix::new(vec![]).unwrap();
        let a = min_cost_assignment(&c);
        assert_eq!((a.cost, a.permutation.len()), (0, 0));
        assert!(optimal_pair_support(&c).is_empty());
        assert_eq!(optimal_assignments(&c).len(), 1);
    }

    #[test]
    fn unique_optimum() {
        let c = matrix(&[&[1, 2], &[2, 1]]);
        let a = min_cost_assignment(&c);
        assert_eq!(a, Assignment { permutation: vec![0, 1], cost: 2 });
        assert_eq!(optimal_pair_support(&c), BTreeSet::from([(0, 0), (1, 1)]));
    }

    #[test]
    fn all_ones() {
        let c = matrix(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]);
        assert_eq!(optimal_pair_support(&c).len(), 9);
        assert_eq!(optimal_assignments(&c).len(), 6);
        assert_eq!(min_cost_assignment(&c).permutation, vec![0, 1, 2]);
    }

    #[test]
    fn lexicographic_tie_break() {
        // optima: [1,0,2] and [2,1,0] both cost 3; [0,..] cannot reach it
        let c = matrix(&[&[3, 1, 1], &[1, 1, 3], &[3, 3, 1]]);
        let all = optimal_assignments(&c);
        assert_eq!(min_cost_assignment(&c).permutation, all[0].permutation);
        assert_eq!(min_cost_assignment(&c).cost, 3);
    }

    #[test]
    fn validation() {
        assert_eq!(CostMatrix::new(vec![vec![1, 2]]), Err(Error::NotSquare));
        assert!(CostMatrix::new(vec![vec![-1]]).is_err());
    }
}
