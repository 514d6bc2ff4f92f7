use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`enumerate_graphs`].
pub const MAX_ENUMERATION_ORDER: usize = 7;

/// Every labeled simple graph on `n` vertices, in increasing order of the
/// edge bitmask over the pairs `(0,1), (0,2), ..., (n-2,n-1)`.
#[derive(Debug, Clone)]
pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
    connected_only: bool,
}

impl LabeledGraphs {
    pub fn connected_only(mut self) -> Self {
        self.connected_only = true;
        self
    }

    /// Restrict to masks in `start..end` (clamped), so workers can split
    /// the stream by index range.
    pub fn range(mut self, start: u64, end: u64) -> Self {
        let total = self.total();
        self.next = start.min(total);
        self.end = end.min(total);
        self
    }

    /// Number of labeled graphs in the full stream, `2^(n(n-1)/2)`.
    pub fn total(&self) -> u64 {
        1u64 << self.pairs.len()
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn graph_for_mask(&self, mask: u64) -> Graph {
        let edges = self
            .pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &p)| p);
        Graph::from_edges(self.n, edges).expect("pairs are in range")
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.end {
            let g = self.graph_for_mask(self.next);
            self.next += 1;
            if !self.connected_only || g.is_connected() {
                return Some(g);
            }
        }
        None
    }
}

pub fn enumerate_graphs(n: usize) -> Result<LabeledGraphs> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(Error::InvalidParameter(format!(
            "enumeration order must be in 1..={MAX_ENUMERATION_ORDER}, got {n}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let end = 1u64 << pairs.len();
    Ok(LabeledGraphs {
        n,
        pairs,
        next: 0,
        end,
        connected_only: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn binomial(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    /// Connected labeled graphs by the standard inclusion recurrence,
    /// conditioning on the component of vertex 0.
    fn connected_count(n: u64) -> u64 {
        let all = |m: u64| 1u64 << (m * m.saturating_sub(1) / 2);
        let mut c = vec![0u64; n as usize + 1];
        for m in 1..=n {
            let mut disconnected = 0;
            for k in 1..m {
                disconnected += binomial(m - 1, k - 1) * c[k as usize] * all(m - k);
            }
            c[m as usize] = all(m) - disconnected;
        }
        c[n as usize]
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_graphs(3).unwrap().count(), 8);
        assert_eq!(enumerate_graphs(4).unwrap().count(), 64);
        assert_eq!(connected_count(5), 728);
        for n in 1..=5 {
            let found = enumerate_graphs(n).unwrap().connected_only().count() as u64;
            assert_eq!(found, connected_count(n as u64), "n = {n}");
        }
    }

    #[test]
    fn no_duplicates() {
        let all: Vec<Graph> = enumerate_graphs(4).unwrap().collect();
        let distinct: HashSet<Graph> = all.iter().cloned().collect();
        assert_eq!(distinct.len(), all.len());
    }

    #[test]
    fn ranges_partition_the_stream() {
        let full: Vec<Graph> = enumerate_graphs(4).unwrap().collect();
        let mut parts: Vec<Graph> = enumerate_graphs(4).unwrap().range(0, 20).collect();
        parts.extend(enumerate_graphs(4).unwrap().range(20, 1000));
        assert_eq!(full, parts);
    }

    #[test]
    fn order_bounds() {
        assert!(enumerate_graphs(0).is_err());
        assert!(enumerate_graphs(8).is_err());
        assert_eq!(enumerate_graphs(7).unwrap().total(), 1 << 21);
    }
}
