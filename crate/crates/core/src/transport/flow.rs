//! Integer min-cost flow by successive shortest paths with node potentials.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    rev: usize,
    cap: i128,
    cost: i64,
}

/// Residual network for min-cost flow. Arc costs must be non-negative.
#[derive(Debug, Clone)]
pub struct MinCostFlow {
    graph: Vec<Vec<Arc>>,
    arcs: Vec<(usize, usize)>,
}

impl MinCostFlow {
    pub fn new(nodes: usize) -> Self {
        MinCostFlow {
            graph: vec![Vec::new(); nodes],
            arcs: Vec::new(),
        }
    }

    /// Adds an arc and returns its id.
    pub fn add_arc(&mut self, from: usize, to: usize, cap: i128, cost: i64) -> usize {
        assert!(cost >= 0, "negative arc cost");
        let fwd = self.graph[from].len();
        let bwd = self.graph[to].len() + usize::from(from == to);
        self.graph[from].push(Arc { to, rev: bwd, cap, cost });
        self.graph[to].push(Arc { to: from, rev: fwd, cap: 0, cost: -cost });
        self.arcs.push((from, fwd));
        self.arcs.len() - 1
    }

    /// Flow currently on arc `id`.
    pub fn flow(&self, id: usize) -> i128 {
        let (from, idx) = self.arcs[id];
        let arc = &self.graph[from][idx];
        self.graph[arc.to][arc.rev].cap
    }

    /// Sends exactly `amount` units from `source` to `sink` at minimum cost
    /// and returns that cost. Fails if the network cannot carry `amount`.
    pub fn solve(&mut self, source: usize, sink: usize, amount: i128) -> Result<i128> {
        let n = self.graph.len();
        let mut potential = vec![0i128; n];
        let mut remaining = amount;
        let mut total = 0i128;
        let mut dist = vec![i128::MAX; n];
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; n];
        while remaining > 0 {
            dist.iter_mut().for_each(|d| *d = i128::MAX);
            prev.iter_mut().for_each(|p| *p = None);
            dist[source] = 0;
            let mut heap = BinaryHeap::from([Reverse((0i128, source))]);
            while let Some(Reverse((d, u))) = heap.pop() {
                if d > dist[u] {
                    continue;
                }
                for (i, arc) in self.graph[u].iter().enumerate() {
                    if arc.cap <= 0 {
                        continue;
                    }
                    let reduced = arc.cost as i128 + potential[u] - potential[arc.to];
                    let nd = d + reduced;
                    if nd < dist[arc.to] {
                        dist[arc.to] = nd;
                        prev[arc.to] = Some((u, i));
                        heap.push(Reverse((nd, arc.to)));
                    }
                }
            }
            if dist[sink] == i128::MAX {
                return Err(Error::InvalidParameter(format!(
                    "network carries only {} of {amount} units",
                    amount - remaining
                )));
            }
            for v in 0..n {
                if dist[v] != i128::MAX {
                    potential[v] += dist[v];
                }
            }
            let mut push = remaining;
            let mut v = sink;
            while let Some((u, i)) = prev[v] {
                push = push.min(self.graph[u][i].cap);
                v = u;
            }
            let mut v = sink;
            while let Some((u, i)) = prev[v] {
                let arc = &mut self.graph[u][i];
                arc.cap -= push;
                total += push * arc.cost as i128;
                let (to, rev) = (arc.to, arc.rev);
                self.graph[to][rev].cap += push;
                v = u;
            }
            remaining -= push;
        }
        Ok(total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn picks_the_cheaper_route() {
        // 0 -> 1 -> 3 costs 2, 0 -> 2 -> 3 costs 5; capacity 2 on the cheap one
        let mut f = MinCostFlow::new(4);
        let a = f.add_arc(0, 1, 2, 1);
        f.add_arc(1, 3, 2, 1);
        let b = f.add_arc(0, 2, 10, 2);
        f.add_arc(2, 3, 10, 3);
        assert_eq!(f.solve(0, 3, 3).unwrap(), 2 * 2 + 5);
        assert_eq!((f.flow(a), f.flow(b)), (2, 1));
    }

    #[test]
    fn reroutes_through_residual_arcs() {
        // classic instance where the first shortest path must be partially undone
        let mut f = MinCostFlow::new(4);
        f.add_arc(0, 1, 1, 1);
        f.add_arc(0, 2, 1, 5);
        f.add_arc(1, 2, 1, 1);
        f.add_arc(1, 3, 1, 5);
        f.add_arc(2, 3, 1, 1);
        assert_eq!(f.solve(0, 3, 2).unwrap(), 12);
    }

    #[test]
    fn infeasible_amount() {
        let mut f = MinCostFlow::new(2);
        f.add_arc(0, 1, 1, 0);
        assert!(f.solve(0, 1, 2).is_err());
    }
}
