//! Named graph families.

use crate::error::{Error, Result};
use crate::graph::Graph;

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

fn build(n: usize, edges: Vec<(usize, usize)>) -> Graph {
    Graph::from_edges(n, edges).expect("generator edges are valid")
}

/// `K_n`.
pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("complete graph needs n >= 1"));
    }
    Ok(build(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()))
}

/// `C_n` on `0..n` with edges `i ~ i+1 (mod n)`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid("cycle needs n >= 3"));
    }
    Ok(build(n, (0..n).map(|i| (i, (i + 1) % n)).collect()))
}

/// `P_n`: `n` vertices in a line.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("path needs n >= 1"));
    }
    Ok(build(n, (1..n).map(|i| (i - 1, i)).collect()))
}

/// Star with hub `0` and `n` leaves.
pub fn star(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("star needs n >= 1 leaves"));
    }
    Ok(build(n + 1, (1..=n).map(|i| (0, i)).collect()))
}

/// `K_{m,n}`: left side `0..m`, right side `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    if m == 0 || n == 0 {
        return Err(invalid("complete bipartite graph needs m, n >= 1"));
    }
    Ok(build(m + n, (0..m).flat_map(|i| (0..n).map(move |j| (i, m + j))).collect()))
}

/// `Q_k` as the `k`-fold product of `K_2`.
pub fn hypercube(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(invalid("hypercube needs k >= 1"));
    }
    if k >= usize::BITS as usize - 1 {
        return Err(Error::Overflow(format!("hypercube dimension {k}")));
    }
    let k2 = complete(2)?;
    let mut g = k2.clone();
    for _ in 1..k {
        g = g.cartesian_product(&k2)?;
    }
    Ok(g)
}

/// Cocktail party graph on `2k` vertices: `2i` is non-adjacent only to `2i+1`.
pub fn cocktail_party(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(invalid("cocktail party graph needs k >= 2"));
    }
    let n = 2 * k;
    let edges = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !(i % 2 == 0 && j == i + 1))
        .collect();
    Ok(build(n, edges))
}

/// The graph with degree sequence `(n-1, n-2, ..., n-2)` for odd `n`:
/// vertex `0` dominates and `1..n` carry a cocktail-party pairing
/// (`2i-1` is non-adjacent to `2i`).
pub fn near_cocktail(n: usize) -> Result<Graph> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(invalid("near-cocktail graph needs odd n >= 3"));
    }
    let edges = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !(i > 0 && i % 2 == 1 && j == i + 1))
        .collect();
    Ok(build(n, edges))
}

/// Petersen graph as the Kneser graph `KG(5, 2)`.
pub fn petersen() -> Graph {
    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    let mut edges = Vec::new();
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for (j, &(c, d)) in pairs.iter().enumerate().skip(i + 1) {
            if a != c && a != d && b != c && b != d {
                edges.push((i, j));
            }
        }
    }
    build(10, edges)
}

/// Dodecahedral graph from its LCF code `[10, 7, 4, -4, -7, 10, -4, 7, -7, 4]^2`.
pub fn dodecahedral() -> Graph {
    const LCF: [i64; 10] = [10, 7, 4, -4, -7, 10, -4, 7, -7, 4];
    lcf(20, &LCF)
}

fn lcf(n: usize, code: &[i64]) -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    for i in 0..n {
        let j = (i as i64 + code[i % code.len()]).rem_euclid(n as i64) as usize;
        edges.push((i.min(j), i.max(j)));
    }
    build(n, edges)
}

// Vertex labels follow the drawing of the 30-vertex polyhedral graph; the
// list is the line graph of the dodecahedron up to relabeling.
const ICOSIDODECAHEDRON: [(usize, usize); 60] = [
    (0, 1), (0, 2), (0, 5), (0, 7), (1, 3), (1, 5), (1, 6), (2, 4), (2, 7), (2, 8),
    (3, 4), (3, 6), (3, 9), (4, 8), (4, 9), (5, 18), (5, 19), (6, 15), (6, 17), (7, 14),
    (7, 16), (8, 11), (8, 12), (9, 10), (9, 13), (10, 11), (10, 13), (10, 20), (11, 12), (11, 20),
    (12, 14), (12, 21), (13, 15), (13, 24), (14, 16), (14, 21), (15, 17), (15, 24), (16, 19), (16, 29),
    (17, 18), (17, 28), (18, 19), (18, 28), (19, 29), (20, 22), (20, 23), (21, 22), (21, 25), (22, 23),
    (22, 25), (23, 24), (23, 26), (24, 26), (25, 27), (25, 29), (26, 27), (26, 28), (27, 28), (27, 29),
];

/// The icosidodecahedron graph: 30 vertices, 60 edges, 4-regular.
pub fn icosidodecahedron() -> Graph {
    build(30, ICOSIDODECAHEDRON.to_vec())
}

/// `BI_n`: inner cycle `x_k = k`, outer cycle `y_k = n + k`, and
/// `y_k ~ x_{k-1}, x_{k+1}`.
pub fn bi_antiprism(n: usize) -> Result<Graph> {
    if n < 6 {
        return Err(invalid("BI_n needs n >= 6"));
    }
    let mut edges = Vec::with_capacity(4 * n);
    for k in 0..n {
        edges.push((k, (k + 1) % n));
        edges.push((n + k, n + (k + 1) % n));
        edges.push((n + k, (k + n - 1) % n));
        edges.push((n + k, (k + 1) % n));
    }
    Ok(build(2 * n, edges))
}

/// Grid vertex `x_{i,j}` has index `i * m + j`.
fn wrapped_grid(n: usize, m: usize, column_wrap: impl Fn(usize) -> usize) -> Graph {
    let at = |i: usize, j: usize| i * m + j;
    let mut edges = Vec::with_capacity(2 * n * m);
    for i in 0..n {
        for j in 0..m {
            if i + 1 < n {
                edges.push((at(i, j), at(i + 1, j)));
            }
            if j + 1 < m {
                edges.push((at(i, j), at(i, j + 1)));
            }
        }
    }
    for j in 0..m {
        edges.push((at(0, j), at(n - 1, j)));
    }
    for i in 0..n {
        edges.push((at(i, 0), at(column_wrap(i), m - 1)));
    }
    build(n * m, edges)
}

/// Twisted torus: `n x m` grid, row wrap `x_{0,j} ~ x_{n-1,j}` and
/// column wrap `x_{i,0} ~ x_{(i+l) mod n, m-1}`.
pub fn twisted_torus(n: usize, m: usize, l: usize) -> Result<Graph> {
    if n < 6 {
        return Err(invalid("twisted torus needs n >= 6"));
    }
    if m < 2 || m + l < 6 {
        return Err(invalid("twisted torus needs m >= 2 and m + l >= 6"));
    }
    if 2 * l > n {
        return Err(invalid("twisted torus needs l <= n/2"));
    }
    Ok(wrapped_grid(n, m, |i| (i + l) % n))
}

/// Untwisted torus `C_n □ C_m`, laid out as a grid.
pub fn torus_grid(n: usize, m: usize) -> Result<Graph> {
    if m < 6 {
        return Err(invalid("torus grid needs m >= 6"));
    }
    twisted_torus(n, m, 0)
}

/// Klein bottle graph: row wrap as the torus, column wrap
/// `x_{i,0} ~ x_{n-1-i, m-1}`.
pub fn klein_bottle(n: usize, m: usize) -> Result<Graph> {
    if n < 6 || m < 6 {
        return Err(invalid("Klein bottle graph needs n, m >= 6"));
    }
    Ok(wrapped_grid(n, m, |i| n - 1 - i))
}

/// Prism `C_m □ K_2`.
pub fn prism(m: usize) -> Result<Graph> {
    cycle(m)?.cartesian_product(&complete(2)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Dist;

    fn triangles(g: &Graph) -> usize {
        g.edges()
            .map(|(u, v)| g.common_neighbors(u, v).unwrap().len())
            .sum::<usize>()
            / 3
    }

    #[test]
    fn small_families() {
        let k1 = complete(1).unwrap();
        assert_eq!((k1.n(), k1.edge_count()), (1, 0));
        let k4 = complete(4).unwrap();
        assert_eq!((k4.edge_count(), k4.regular_degree()), (6, Some(3)));
        assert_eq!(complete(5).unwrap().diameter(), Dist::Finite(1));
        assert!(complete(0).is_err());

        let c6 = cycle(6).unwrap();
        assert_eq!((c6.regular_degree(), c6.girth()), (Some(2), Dist::Finite(6)));
        assert_eq!(path(2).unwrap().edge_count(), 1);
        assert_eq!(star(3).unwrap().degree_sequence(), vec![3, 1, 1, 1]);
        assert!(cycle(2).is_err());
        assert!(star(0).is_err());
    }

    #[test]
    fn bipartite_and_cubes() {
        let c4 = Graph::from_edges(4, [(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(hypercube(2).unwrap(), c4);
        let k33 = complete_bipartite(3, 3).unwrap();
        assert_eq!(k33.girth(), Dist::Finite(4));
        for (u, v) in k33.edges() {
            assert!(k33.common_neighbors(u, v).unwrap().is_empty());
        }
        let q3 = hypercube(3).unwrap();
        assert_eq!((q3.n(), q3.regular_degree(), q3.girth()), (8, Some(3), Dist::Finite(4)));
        for k in 1..=6 {
            let q = hypercube(k).unwrap();
            assert_eq!(q.n(), 1 << k);
            assert_eq!(q.edge_count(), k << (k - 1));
        }
        assert!(complete_bipartite(0, 2).is_err());
    }

    #[test]
    fn cocktail_graphs() {
        assert_eq!(cocktail_party(2).unwrap().regular_degree(), Some(2));
        assert_eq!(cocktail_party(2).unwrap().girth(), Dist::Finite(4));
        let oct = cocktail_party(3).unwrap();
        assert_eq!((oct.n(), oct.regular_degree()), (6, Some(4)));
        assert_eq!(cocktail_party(4).unwrap().regular_degree(), Some(6));
        assert!(cocktail_party(1).is_err());

        assert_eq!(near_cocktail(3).unwrap().degree_sequence(), vec![2, 1, 1]);
        assert_eq!(near_cocktail(5).unwrap().degree_sequence(), vec![4, 3, 3, 3, 3]);
        assert_eq!(near_cocktail(7).unwrap().degree_sequence(), vec![6, 5, 5, 5, 5, 5, 5]);
        assert!(near_cocktail(6).is_err());
    }

    #[test]
    fn platonic_style_graphs() {
        let p = petersen();
        assert_eq!((p.n(), p.regular_degree(), p.girth()), (10, Some(3), Dist::Finite(5)));
        assert_eq!(p.diameter(), Dist::Finite(2));
        let d = dodecahedral();
        assert_eq!((d.n(), d.regular_degree(), d.girth()), (20, Some(3), Dist::Finite(5)));
        assert_eq!(d.diameter(), Dist::Finite(5));
    }

    #[test]
    fn icosidodecahedron_faces() {
        let g = icosidodecahedron();
        assert_eq!((g.n(), g.edge_count(), g.regular_degree()), (30, 60, Some(4)));
        assert_eq!(g.girth(), Dist::Finite(3));
        assert_eq!(triangles(&g), 20);
        // every edge on exactly one triangle and one pentagon
        for (u, v) in g.edges() {
            assert_eq!(g.common_neighbors(u, v).unwrap().len(), 1);
            let pentagons = pentagons_through(&g, u, v);
            assert_eq!(pentagons, 1, "edge ({u},{v})");
        }
    }

    /// Induced 5-cycles through the edge `u ~ v`: paths `u-a-b-c-v` with
    /// no chords.
    fn pentagons_through(g: &Graph, u: usize, v: usize) -> usize {
        let mut count = 0;
        for &a in g.neighbors(u) {
            for &b in g.neighbors(a) {
                for &c in g.neighbors(b) {
                    let cyc = [u, a, b, c, v];
                    let mut distinct = cyc.to_vec();
                    distinct.sort_unstable();
                    distinct.dedup();
                    if distinct.len() != 5 || !g.has_edge(c, v) {
                        continue;
                    }
                    let chords = (0..5)
                        .flat_map(|i| (i + 2..5).map(move |j| (i, j)))
                        .filter(|&(i, j)| !(i == 0 && j == 4))
                        .any(|(i, j)| g.has_edge(cyc[i], cyc[j]));
                    if !chords {
                        count += 1;
                    }
                }
            }
        }
        count
    }

    #[test]
    fn four_regular_families() {
        let bi6 = bi_antiprism(6).unwrap();
        assert_eq!((bi6.n(), bi6.edge_count()), (12, 24));
        assert_eq!(bi_antiprism(7).unwrap().regular_degree(), Some(4));
        assert_eq!(bi_antiprism(8).unwrap().girth(), Dist::Finite(4));
        assert!(bi_antiprism(5).is_err());

        let t = torus_grid(6, 6).unwrap();
        assert_eq!(t.regular_degree(), Some(4));
        let c6 = cycle(6).unwrap();
        let product = c6.cartesian_product(&c6).unwrap();
        assert_eq!(t, product);

        let tw = twisted_torus(7, 5, 2).unwrap();
        assert_eq!((tw.n(), tw.regular_degree()), (35, Some(4)));
        let kb = klein_bottle(6, 6).unwrap();
        assert_eq!((kb.n(), kb.regular_degree()), (36, Some(4)));

        assert!(twisted_torus(5, 6, 0).is_err());
        assert!(twisted_torus(8, 3, 2).is_err());
        assert!(twisted_torus(8, 4, 5).is_err());
        assert!(torus_grid(6, 5).is_err());
        assert!(klein_bottle(6, 5).is_err());
    }

    #[test]
    fn prisms() {
        let p = prism(5).unwrap();
        assert_eq!((p.n(), p.regular_degree()), (10, Some(3)));
        assert!(prism(2).is_err());
    }
}
