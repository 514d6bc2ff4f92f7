use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

const MAX_RESTARTS: usize = 10_000;
const BLIND_ATTEMPTS: usize = 64;

/// A `d`-regular simple graph on `n` vertices. Points are paired one at a
/// time, only ever joining two distinct non-adjacent vertices; a dead end
/// restarts from scratch. Deterministic in `seed`.
pub fn random_regular(n: usize, d: usize, seed: u64) -> Result<Graph> {
    if d >= n && !(n == 0 && d == 0) {
        return Err(Error::InvalidParameter(format!("degree {d} needs more than {d} vertices")));
    }
    if (n * d) % 2 == 1 {
        return Err(Error::InvalidParameter(format!("n * d = {} is odd", n * d)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'restart: for _ in 0..MAX_RESTARTS {
        let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
        let mut adjacency = vec![Vec::with_capacity(d); n];
        let mut edges = Vec::with_capacity(n * d / 2);
        while !points.is_empty() {
            let Some((i, j)) = pick_pair(&points, &adjacency, &mut rng) else {
                continue 'restart;
            };
            let (u, v) = (points[i], points[j]);
            points.swap_remove(i.max(j));
            points.swap_remove(i.min(j));
            adjacency[u].push(v);
            adjacency[v].push(u);
            edges.push((u, v));
        }
        return Graph::from_edges(n, edges);
    }
    Err(Error::InvalidParameter(format!(
        "no simple {d}-regular graph on {n} vertices after {MAX_RESTARTS} restarts"
    )))
}

/// Two point indices on distinct non-adjacent vertices, chosen uniformly
/// among suitable pairs; `None` when no suitable pair is left.
fn pick_pair(points: &[usize], adjacency: &[Vec<usize>], rng: &mut ChaCha8Rng) -> Option<(usize, usize)> {
    let suitable = |i: usize, j: usize| {
        let (u, v) = (points[i], points[j]);
        u != v && !adjacency[u].contains(&v)
    };
    for _ in 0..BLIND_ATTEMPTS {
        let (i, j) = (rng.gen_range(0..points.len()), rng.gen_range(0..points.len()));
        if suitable(i, j) {
            return Some((i, j));
        }
    }
    let all: Vec<(usize, usize)> = (0..points.len())
        .flat_map(|i| (i + 1..points.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| suitable(i, j))
        .collect();
    (!all.is_empty()).then(|| all[rng.gen_range(0..all.len())])
}
