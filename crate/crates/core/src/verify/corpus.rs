use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::graph::Graph;

/// Named graphs with unique labels.
#[derive(Debug, Clone, Default)]
pub struct Corpus {
    entries: Vec<(String, Graph)>,
}

impl Corpus {
    pub fn new(entries: Vec<(String, Graph)>) -> Result<Self> {
        let mut seen = HashSet::new();
        for (label, _) in &entries {
            if !seen.insert(label.as_str()) {
                return Err(Error::InvalidParameter(format!("duplicate corpus label {label}")));
            }
        }
        Ok(Corpus { entries })
    }

    pub fn from_specs(specs: &[FamilySpec]) -> Result<Self> {
        Corpus::new(
            specs
                .iter()
                .map(|s| Ok((s.to_string(), s.build()?)))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    pub fn push(&mut self, label: impl Into<String>, g: Graph) -> Result<()> {
        let label = label.into();
        if self.entries.iter().any(|(l, _)| *l == label) {
            return Err(Error::InvalidParameter(format!("duplicate corpus label {label}")));
        }
        self.entries.push((label, g));
        Ok(())
    }

    pub fn entries(&self) -> &[(String, Graph)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.entries.iter().map(|(_, g)| g.edge_count()).sum()
    }
}

/// A connected graph on `n` vertices: a random spanning tree plus each
/// remaining pair with probability `p`.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("vertices in range")
}

/// Every family at small parameters, 50 random regular graphs and 20
/// random connected graphs with unequal degrees.
pub fn default_corpus() -> Result<Corpus> {
    use FamilySpec::*;
    let mut specs = Vec::new();
    specs.extend((2..=10).map(Complete));
    specs.extend((3..=12).map(Cycle));
    specs.extend((2..=8).map(Path));
    specs.extend((1..=6).map(Star));
    for a in 1..=5 {
        specs.extend((a..=5).map(|b| CompleteBipartite(a, b)));
    }
    specs.extend((1..=6).map(Hypercube));
    specs.extend((2..=6).map(CocktailParty));
    specs.extend([3, 5, 7, 9].map(NearCocktail));
    specs.extend([Petersen, Dodecahedral, Icosidodecahedron]);
    specs.extend((6..=10).map(BiAntiprism));
    specs.extend([(6, 6), (6, 7), (7, 8), (8, 8), (10, 10), (12, 12)].map(|(n, m)| TorusGrid(n, m)));
    specs.extend(
        [(7, 5, 2), (8, 4, 2), (6, 6, 3), (9, 6, 4)].map(|(n, m, l)| TwistedTorus(n, m, l)),
    );
    specs.extend([(6, 6), (7, 6), (8, 8)].map(|(n, m)| KleinBottle(n, m)));
    specs.extend((3..=8).map(Prism));
    for i in 0..50u64 {
        let n = 10 + 2 * (i % 10) as usize;
        let d = 3 + (i % 3) as usize;
        specs.push(RandomRegular { n, d, seed: i });
    }
    let mut corpus = Corpus::from_specs(&specs)?;
    for seed in 0..20u64 {
        let n = 6 + (seed % 7) as usize;
        corpus.push(format!("random-connected({n},seed={seed})"), random_connected(n, 0.35, seed))?;
    }
    Ok(corpus)
}

/// Factor pairs checked by the product-formula suite.
pub fn default_product_pairs() -> Vec<(FamilySpec, FamilySpec)> {
    use FamilySpec::*;
    vec![
        (Cycle(6), Cycle(6)),
        (Cycle(6), Complete(2)),
        (Petersen, Cycle(6)),
        (Complete(4), Complete(4)),
        (Hypercube(3), Cycle(6)),
    ]
}
