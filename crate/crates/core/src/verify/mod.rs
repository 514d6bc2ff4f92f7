//! Verification suites: exhaustive and corpus-wide checks of curvature
//! identities, each producing a [`VerificationReport`].

mod corpus;
mod suites;

pub use corpus::{default_corpus, default_product_pairs, random_connected, Corpus};

use std::fmt;
use std::time::Duration;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::curvature::{self, Gap, LocalStructure, PiecewiseLinearFn};
use crate::error::Result;
use crate::graph::Graph;
use crate::rational::Rational;

/// One failed expectation.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Failure {
    pub graph: String,
    pub edge: Option<(usize, usize)>,
    pub expected: String,
    pub actual: String,
}

/// Outcome of one suite. The suite passed iff `failures` is empty.
///
/// `elapsed` is not serialized, so reports of identical runs are
/// byte-identical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub suite: String,
    pub instances: u64,
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn new(suite: &str) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            instances: 0,
            failures: Vec::new(),
            notes: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub(crate) fn fail(
        &mut self,
        graph: &str,
        edge: Option<(usize, usize)>,
        expected: impl fmt::Display,
        actual: impl fmt::Display,
    ) {
        self.failures.push(Failure {
            graph: graph.to_string(),
            edge,
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }

    pub(crate) fn absorb(&mut self, instances: u64, failures: Vec<Failure>) {
        self.instances += instances;
        self.failures.extend(failures);
    }
}

impl Serialize for VerificationReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("VerificationReport", 5)?;
        st.serialize_field("suite", &self.suite)?;
        st.serialize_field("passed", &self.passed())?;
        st.serialize_field("instances", &self.instances)?;
        st.serialize_field("failures", &self.failures)?;
        st.serialize_field("notes", &self.notes)?;
        st.end()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(
            f,
            "{status} {}: {} instances, {} failures ({:.2?})",
            self.suite,
            self.instances,
            self.failures.len(),
            self.elapsed
        )?;
        for note in &self.notes {
            writeln!(f, "  note: {note}")?;
        }
        for fl in self.failures.iter().take(20) {
            let edge = fl.edge.map(|(u, v)| format!(" edge ({u},{v})")).unwrap_or_default();
            writeln!(f, "  fail: {}{edge}: expected {}, got {}", fl.graph, fl.expected, fl.actual)?;
        }
        if self.failures.len() > 20 {
            writeln!(f, "  ... {} more failures", self.failures.len() - 20)?;
        }
        Ok(())
    }
}

/// The curvature routines a suite relies on. Every method defaults to the
/// exact implementation in [`crate::curvature`]; overriding one lets a test
/// check that the suites notice a wrong answer.
pub trait CurvatureEngine: Sync {
    fn kappa_alpha(&self, g: &Graph, x: usize, y: usize, alpha: &Rational) -> Result<Rational> {
        curvature::kappa_alpha(g, x, y, alpha)
    }
    fn kappa_lly(&self, g: &Graph, x: usize, y: usize) -> Result<Rational> {
        curvature::kappa_lly(g, x, y)
    }
    fn kappa_zero(&self, g: &Graph, x: usize, y: usize) -> Result<Rational> {
        curvature::kappa_zero(g, x, y)
    }
    fn kappa_lly_assignment(&self, g: &Graph, x: usize, y: usize) -> Result<Rational> {
        curvature::kappa_lly_assignment(g, x, y)
    }
    fn kappa_zero_assignment(&self, g: &Graph, x: usize, y: usize) -> Result<Rational> {
        curvature::kappa_zero_assignment(g, x, y)
    }
    fn curvature_gap(&self, g: &Graph, x: usize, y: usize) -> Result<Gap> {
        curvature::curvature_gap(g, x, y)
    }
    fn idleness_function(&self, g: &Graph, x: usize, y: usize) -> Result<PiecewiseLinearFn> {
        curvature::idleness_function(g, x, y)
    }
    fn local_structure(&self, g: &Graph, x: usize, y: usize) -> Result<LocalStructure> {
        curvature::local_structure(g, x, y)
    }
}

/// The exact curvature routines.
#[derive(Debug, Clone, Copy, Default)]
pub struct Exact;

impl CurvatureEngine for Exact {}

/// Runs suites against a curvature engine.
#[derive(Debug, Clone, Default)]
pub struct Verifier<E = Exact> {
    engine: E,
}

impl<E: CurvatureEngine> Verifier<E> {
    pub fn new(engine: E) -> Self {
        Verifier { engine }
    }
}

/// Suite names accepted by [`run_suite`], in the order `all` runs them.
pub const SUITES: &[&str] = &[
    "main-theorem",
    "ric-one",
    "family-values",
    "bone-idle-families",
    "no-cubic-bone-idle",
    "girth5",
    "product-formula",
    "edge-properties",
];

/// Parameters of the suites that take any.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteOptions {
    pub n_max: usize,
    pub seed: u64,
    pub trials: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { n_max: 6, seed: 1, trials: 13 }
    }
}

impl<E: CurvatureEngine> Verifier<E> {
    /// Runs the named suite, or every suite for `"all"`.
    pub fn run_suite(&self, name: &str, opts: &SuiteOptions) -> Result<Vec<VerificationReport>> {
        if name == "all" {
            return SUITES.iter().map(|s| self.run_one(s, opts)).collect();
        }
        Ok(vec![self.run_one(name, opts)?])
    }

    fn run_one(&self, name: &str, opts: &SuiteOptions) -> Result<VerificationReport> {
        Ok(match name {
            "main-theorem" => self.check_main_theorem(opts.n_max)?,
            "ric-one" => self.check_ric_one_classification(),
            "family-values" => self.check_family_values(),
            "bone-idle-families" => self.check_bone_idle_families(),
            "no-cubic-bone-idle" => self.check_no_cubic_bone_idle(opts.seed, opts.trials)?,
            "girth5" => self.check_girth5_bone_idle(),
            "product-formula" => self.check_product_formula(&default_product_pairs())?,
            "edge-properties" => self.check_edge_properties(&default_corpus()?),
            other => {
                return Err(crate::Error::InvalidParameter(format!(
                    "unknown suite {other:?}; expected one of {} or all",
                    SUITES.join(", ")
                )))
            }
        })
    }
}

pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<Vec<VerificationReport>> {
    Verifier::new(Exact).run_suite(name, opts)
}

pub fn check_main_theorem(n_max: usize) -> Result<VerificationReport> {
    Verifier::new(Exact).check_main_theorem(n_max)
}

pub fn check_ric_one_classification() -> VerificationReport {
    Verifier::new(Exact).check_ric_one_classification()
}

pub fn check_family_values() -> VerificationReport {
    Verifier::new(Exact).check_family_values()
}

pub fn check_bone_idle_families() -> VerificationReport {
    Verifier::new(Exact).check_bone_idle_families()
}

pub fn check_no_cubic_bone_idle(seed: u64, trials: usize) -> Result<VerificationReport> {
    Verifier::new(Exact).check_no_cubic_bone_idle(seed, trials)
}

pub fn check_girth5_bone_idle() -> VerificationReport {
    Verifier::new(Exact).check_girth5_bone_idle()
}

pub fn check_product_formula(
    pairs: &[(crate::families::FamilySpec, crate::families::FamilySpec)],
) -> Result<VerificationReport> {
    Verifier::new(Exact).check_product_formula(pairs)
}

pub fn check_edge_properties(corpus: &Corpus) -> VerificationReport {
    Verifier::new(Exact).check_edge_properties(corpus)
}

pub fn check_rf72(g: &Graph) -> VerificationReport {
    Verifier::new(Exact).check_rf72(g)
}
