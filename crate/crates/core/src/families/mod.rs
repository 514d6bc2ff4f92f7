//! Graph families, random and exhaustive graph sources, and text formats.

mod enumerate;
mod generators;
mod io;
mod random;

use std::fmt;

pub use enumerate::{enumerate_graphs, LabeledGraphs, MAX_ENUMERATION_ORDER};
pub use generators::*;
pub use io::{
    detect_format, parse_edge_list, parse_graph6, read_graph, write_edge_list, write_graph6,
    GraphFormat,
};
pub use random::random_regular;

use crate::error::Result;
use crate::graph::Graph;

/// A named family together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    Star(usize),
    CompleteBipartite(usize, usize),
    Hypercube(usize),
    CocktailParty(usize),
    NearCocktail(usize),
    Petersen,
    Dodecahedral,
    Icosidodecahedron,
    BiAntiprism(usize),
    TorusGrid(usize, usize),
    TwistedTorus(usize, usize, usize),
    KleinBottle(usize, usize),
    Prism(usize),
    RandomRegular { n: usize, d: usize, seed: u64 },
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        use FamilySpec::*;
        match *self {
            Complete(n) => complete(n),
            Cycle(n) => cycle(n),
            Path(n) => path(n),
            Star(n) => star(n),
            CompleteBipartite(m, n) => complete_bipartite(m, n),
            Hypercube(k) => hypercube(k),
            CocktailParty(k) => cocktail_party(k),
            NearCocktail(n) => near_cocktail(n),
            Petersen => Ok(petersen()),
            Dodecahedral => Ok(dodecahedral()),
            Icosidodecahedron => Ok(icosidodecahedron()),
            BiAntiprism(n) => bi_antiprism(n),
            TorusGrid(n, m) => torus_grid(n, m),
            TwistedTorus(n, m, l) => twisted_torus(n, m, l),
            KleinBottle(n, m) => klein_bottle(n, m),
            Prism(m) => prism(m),
            RandomRegular { n, d, seed } => random_regular(n, d, seed),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match self {
            Complete(n) => write!(f, "K_{n}"),
            Cycle(n) => write!(f, "C_{n}"),
            Path(n) => write!(f, "P_{n}"),
            Star(n) => write!(f, "T_{n}"),
            CompleteBipartite(m, n) => write!(f, "K_{{{m},{n}}}"),
            Hypercube(k) => write!(f, "Q_{k}"),
            CocktailParty(k) => write!(f, "CP_{k}"),
            NearCocktail(n) => write!(f, "NCP_{n}"),
            Petersen => f.write_str("petersen"),
            Dodecahedral => f.write_str("dodecahedral"),
            Icosidodecahedron => f.write_str("icosidodecahedron"),
            BiAntiprism(n) => write!(f, "BI_{n}"),
            TorusGrid(n, m) => write!(f, "torus({n},{m})"),
            TwistedTorus(n, m, l) => write!(f, "twisted-torus({n},{m},{l})"),
            KleinBottle(n, m) => write!(f, "klein({n},{m})"),
            Prism(m) => write!(f, "prism_{m}"),
            RandomRegular { n, d, seed } => write!(f, "random-regular({n},{d},seed={seed})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn is_simple(g: &Graph) -> bool {
        (0..g.n()).all(|u| {
            g.neighbors(u).iter().all(|&v| v != u && g.neighbors(v).contains(&u))
                && g.neighbors(u).windows(2).all(|w| w[0] < w[1])
        })
    }

    #[test]
    fn regularity_table() {
        use FamilySpec::*;
        let table = [
            (BiAntiprism(9), 4),
            (TorusGrid(7, 8), 4),
            (TwistedTorus(8, 4, 2), 4),
            (TwistedTorus(6, 6, 3), 4),
            (KleinBottle(7, 6), 4),
            (Icosidodecahedron, 4),
            (Petersen, 3),
            (Dodecahedral, 3),
            (CocktailParty(5), 8),
        ];
        for (spec, d) in table {
            let g = spec.build().unwrap();
            assert!(is_simple(&g), "{spec}");
            assert_eq!(g.regular_degree(), Some(d), "{spec}");
        }
    }

    proptest! {
        #[test]
        fn random_regular_round_trips(n in 4usize..20, d in 0usize..4, seed in any::<u64>()) {
            prop_assume!(d < n && n * d % 2 == 0);
            let g = random_regular(n, d, seed).unwrap();
            prop_assert!(is_simple(&g));
            prop_assert_eq!(g.regular_degree(), Some(d));
            prop_assert_eq!(&parse_graph6(&write_graph6(&g).unwrap()).unwrap(), &g);
            prop_assert_eq!(&parse_edge_list(&write_edge_list(&g)).unwrap(), &g);
        }
    }
}
