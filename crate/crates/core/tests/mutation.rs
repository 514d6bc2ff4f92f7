//! A curvature engine with an off-by-one assignment cost must be caught.

use graph_ricci::curvature::lly_cost_matrix;
use graph_ricci::families::FamilySpec::*;
use graph_ricci::transport::min_assignment_cost;
use graph_ricci::verify::{Corpus, CurvatureEngine, Exact, Verifier};
use graph_ricci::{Graph, Rational, Result};

struct OffByOne;

impl CurvatureEngine for OffByOne {
    fn kappa_lly_assignment(&self, g: &Graph, x: usize, y: usize) -> Result<Rational> {
        let d = g.degree(x) as i64;
        let c = min_assignment_cost(&lly_cost_matrix(g, x, y)?) + 1;
        Ok(Rational::new(d + 1 - c, d))
    }
}

fn small_corpus() -> Corpus {
    Corpus::from_specs(&[Cycle(6), Petersen, Hypercube(3), TorusGrid(6, 6), Star(4)]).unwrap()
}

#[test]
fn family_values_catch_the_mutant() {
    let report = Verifier::new(OffByOne).check_family_values();
    assert!(!report.passed());
    assert!(report.failures.iter().all(|f| f.expected.starts_with("kappa (assignment)")));
    assert!(Verifier::new(Exact).check_family_values().passed());
}

#[test]
fn edge_properties_catch_the_mutant() {
    let corpus = small_corpus();
    let report = Verifier::new(OffByOne).check_edge_properties(&corpus);
    assert!(!report.passed());
    let equal_degree_edges = corpus
        .entries()
        .iter()
        .flat_map(|(_, g)| g.edges().filter(|&(x, y)| g.degree(x) == g.degree(y)).collect::<Vec<_>>())
        .count();
    assert_eq!(report.failures.len(), equal_degree_edges);
    assert!(Verifier::new(Exact).check_edge_properties(&corpus).passed());
}
