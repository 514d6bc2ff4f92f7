//! Finite simple graphs and their hop metric.
//!
//! Vertices are the dense indices `0..n`. A [`Graph`] is immutable once
//! built; every query is a pure function of the adjacency lists.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hop distance between two vertices.
///
/// `Finite` sorts before `Infinite`, so the derived order is the numeric one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Dist {
    Finite(u32),
    Infinite,
}

impl Dist {
    pub fn finite(self) -> Option<u32> {
        match self {
            Dist::Finite(d) => Some(d),
            Dist::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Dist::Finite(_))
    }
}

impl fmt::Display for Dist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dist::Finite(d) => write!(f, "{d}"),
            Dist::Infinite => f.write_str("inf"),
        }
    }
}

/// An undirected simple graph on the vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    /// Builds a graph from an edge list. Repeated edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Sorted neighbor list of `x`.
    pub fn neighbors(&self, x: usize) -> &[usize] {
        &self.adj[x]
    }

    pub fn degree(&self, x: usize) -> usize {
        self.adj[x].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    pub(crate) fn check_edge(&self, x: usize, y: usize) -> Result<()> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        if self.has_edge(x, y) {
            Ok(())
        } else {
            Err(Error::NotAnEdge(x, y))
        }
    }

    /// Breadth-first hop counts from `source`, stopping after `radius` hops
    /// when given. Unreached vertices are `None`.
    pub fn bfs(&self, source: usize, radius: Option<u32>) -> Result<Vec<Option<u32>>> {
        self.check_vertex(source)?;
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            if radius.is_some_and(|r| du >= r) {
                continue;
            }
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    pub fn distance(&self, u: usize, v: usize) -> Result<Dist> {
        self.distance_within(u, v, None)
    }

    /// Distance from `u` to `v`, reported as `Infinite` if it exceeds `radius`.
    pub fn distance_within(&self, u: usize, v: usize, radius: Option<u32>) -> Result<Dist> {
        self.check_vertex(v)?;
        if u == v {
            self.check_vertex(u)?;
            return Ok(Dist::Finite(0));
        }
        let dist = self.bfs(u, radius)?;
        Ok(dist[v].map_or(Dist::Infinite, Dist::Finite))
    }

    /// `S_r(x)`: vertices at distance exactly `r`, sorted.
    pub fn sphere(&self, x: usize, r: u32) -> Result<Vec<usize>> {
        let dist = self.bfs(x, Some(r))?;
        Ok((0..self.n()).filter(|&v| dist[v] == Some(r)).collect())
    }

    /// `B_r(x)`: vertices at distance at most `r`, sorted.
    pub fn ball(&self, x: usize, r: u32) -> Result<Vec<usize>> {
        let dist = self.bfs(x, Some(r))?;
        Ok((0..self.n()).filter(|&v| dist[v].is_some()).collect())
    }

    /// Vertices adjacent to both `x` and `y`, sorted.
    pub fn common_neighbors(&self, x: usize, y: usize) -> Result<Vec<usize>> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        let (a, b) = (&self.adj[x], &self.adj[y]);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        Ok(out)
    }

    /// Length of a shortest cycle, `Infinite` for forests.
    pub fn girth(&self) -> Dist {
        let n = self.n();
        let mut best = u32::MAX;
        let mut dist = vec![u32::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = u32::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                // no shorter cycle can be closed beyond this depth
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for &w in &self.adj[u] {
                    if dist[w] == u32::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        if best == u32::MAX {
            Dist::Infinite
        } else {
            Dist::Finite(best)
        }
    }

    /// Maximum pairwise distance; `Infinite` when disconnected.
    /// The graph on zero vertices has diameter 0.
    pub fn diameter(&self) -> Dist {
        let mut best = 0;
        for v in 0..self.n() {
            let dist = self.bfs(v, None).expect("vertex in range");
            for d in dist {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Dist::Infinite,
                }
            }
        }
        Dist::Finite(best)
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.bfs(0, None).expect("vertex 0").iter().all(Option::is_some)
    }

    pub fn min_degree(&self) -> Result<usize> {
        self.adj.iter().map(Vec::len).min().ok_or(Error::EmptyGraph)
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).max()
    }

    /// `Some(d)` iff every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first()?.len();
        self.adj.iter().all(|l| l.len() == d).then_some(d)
    }

    pub fn is_regular(&self) -> bool {
        self.regular_degree().is_some()
    }

    /// `G □ H`; vertex `(x, y)` becomes `x * h.n() + y`.
    pub fn cartesian_product(&self, h: &Graph) -> Result<Graph> {
        if self.n() == 0 || h.n() == 0 {
            return Err(Error::EmptyGraph);
        }
        let n = self
            .n()
            .checked_mul(h.n())
            .ok_or_else(|| Error::Overflow("product vertex count".into()))?;
        let m = h.n();
        let mut edges = Vec::new();
        for x in 0..self.n() {
            for (y1, y2) in h.edges() {
                edges.push((x * m + y1, x * m + y2));
            }
        }
        for (x1, x2) in self.edges() {
            for y in 0..m {
                edges.push((x1 * m + y, x2 * m + y));
            }
        }
        Graph::from_edges(n, edges)
    }

    /// Degree sequence in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }
}
