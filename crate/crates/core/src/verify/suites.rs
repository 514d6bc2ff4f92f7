use std::collections::hash_map::Entry;
use std::collections::{BTreeSet, HashMap};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{Corpus, CurvatureEngine, Failure, VerificationReport, Verifier};
use crate::curvature::{linear_threshold, FlatCase};
use crate::error::{Error, Result};
use crate::families::*;
use crate::graph::{Dist, Graph};
use crate::rational::Rational;
use crate::transport::optimal_assignments;

/// An edge with its kappa and kappa0.
type Witness = ((usize, usize), Rational, Rational);

fn r(p: i64, q: i64) -> Rational {
    Rational::new(p, q)
}

fn timed(suite: &str, body: impl FnOnce(&mut VerificationReport) -> Result<()>) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new(suite);
    body(&mut report)?;
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Collects failures for one graph.
struct Sink<'a> {
    label: &'a str,
    failures: Vec<Failure>,
}

impl<'a> Sink<'a> {
    fn new(label: &'a str) -> Self {
        Sink { label, failures: Vec::new() }
    }

    fn fail(&mut self, edge: Option<(usize, usize)>, expected: impl ToString, actual: impl ToString) {
        self.failures.push(Failure {
            graph: self.label.to_string(),
            edge,
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }

    /// Records `Err` as a failure and returns the value otherwise.
    fn ok<T>(&mut self, edge: (usize, usize), what: &str, res: Result<T>) -> Option<T> {
        match res {
            Ok(v) => Some(v),
            Err(e) => {
                self.fail(Some(edge), what, format!("error: {e}"));
                None
            }
        }
    }

    fn expect_eq(&mut self, edge: (usize, usize), what: &str, expected: &Rational, actual: Result<Rational>) {
        if let Some(a) = self.ok(edge, what, actual) {
            if a != *expected {
                self.fail(Some(edge), format!("{what} = {expected}"), a);
            }
        }
    }
}

impl<E: CurvatureEngine> Verifier<E> {
    /// Checks `kappa` and/or `kappa_0` on every edge, through both routes on
    /// equal-degree edges.
    fn check_values(
        &self,
        label: &str,
        g: &Graph,
        kappa: Option<&Rational>,
        zero: Option<&Rational>,
    ) -> (u64, Vec<Failure>) {
        let e = &self.engine;
        let mut sink = Sink::new(label);
        for (x, y) in g.edges() {
            let equal = g.degree(x) == g.degree(y);
            if let Some(k) = kappa {
                sink.expect_eq((x, y), "kappa", k, e.kappa_lly(g, x, y));
                if equal {
                    sink.expect_eq((x, y), "kappa (assignment)", k, e.kappa_lly_assignment(g, x, y));
                }
            }
            if let Some(k) = zero {
                sink.expect_eq((x, y), "kappa0", k, e.kappa_zero(g, x, y));
                if equal {
                    sink.expect_eq((x, y), "kappa0 (assignment)", k, e.kappa_zero_assignment(g, x, y));
                }
            }
        }
        (g.edge_count() as u64, sink.failures)
    }

    fn check_table(
        &self,
        report: &mut VerificationReport,
        rows: Vec<(FamilySpec, Option<Rational>, Option<Rational>)>,
    ) -> Result<()> {
        let results = rows
            .par_iter()
            .map(|(spec, k, z)| {
                let g = spec.build()?;
                Ok(self.check_values(&spec.to_string(), &g, k.as_ref(), z.as_ref()))
            })
            .collect::<Result<Vec<_>>>()?;
        for (n, f) in results {
            report.absorb(n, f);
        }
        Ok(())
    }

    fn all_edges_zero(&self, g: &Graph, zero_ord: bool) -> Result<bool> {
        for (x, y) in g.edges() {
            let k = if zero_ord {
                self.engine.kappa_zero(g, x, y)?
            } else {
                self.engine.kappa_lly(g, x, y)?
            };
            if !k.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// First edge that is not bone-idle, with its two curvatures.
    fn non_idle_witness(&self, g: &Graph) -> Result<Option<Witness>> {
        for (x, y) in g.edges() {
            let k0 = self.engine.kappa_zero(g, x, y)?;
            let k = self.engine.kappa_lly(g, x, y)?;
            if !(k0.is_zero() && k.is_zero()) {
                return Ok(Some(((x, y), k0, k)));
            }
        }
        Ok(None)
    }

    /// For every connected labeled graph on at most `n_max` vertices, every
    /// edge has curvature at least 1 iff the minimum degree is at least
    /// `n - 2`. Disconnected graphs are counted in the notes only.
    pub fn check_main_theorem(&self, n_max: usize) -> Result<VerificationReport> {
        if !(2..=MAX_ENUMERATION_ORDER).contains(&n_max) {
            return Err(Error::InvalidParameter(format!(
                "n_max must be in 2..={MAX_ENUMERATION_ORDER}, got {n_max}"
            )));
        }
        const CHUNK: u64 = 4096;
        timed("main-theorem", |report| {
            for n in 1..=n_max {
                let all = enumerate_graphs(n)?;
                let chunks = all.total().div_ceil(CHUNK);
                let parts = (0..chunks)
                    .into_par_iter()
                    .map(|c| -> Result<(u64, u64, u64, Vec<Failure>)> {
                        let (mut connected, mut disconnected, mut odd) = (0, 0, 0);
                        let mut failures = Vec::new();
                        for g in all.clone().range(c * CHUNK, (c + 1) * CHUNK) {
                            let mut lhs = true;
                            for (x, y) in g.edges() {
                                if self.engine.kappa_lly(&g, x, y)? < Rational::one() {
                                    lhs = false;
                                    break;
                                }
                            }
                            let rhs = g.min_degree()? + 2 >= n;
                            if g.is_connected() {
                                connected += 1;
                                if lhs != rhs {
                                    failures.push(Failure {
                                        graph: write_graph6(&g)?,
                                        edge: None,
                                        expected: format!("min curvature >= 1 is {rhs}"),
                                        actual: lhs.to_string(),
                                    });
                                }
                            } else {
                                disconnected += 1;
                                odd += u64::from(lhs != rhs);
                            }
                        }
                        Ok((connected, disconnected, odd, failures))
                    })
                    .collect::<Result<Vec<_>>>()?;
                let (mut connected, mut disconnected, mut odd) = (0, 0, 0);
                for (c, d, o, f) in parts {
                    connected += c;
                    disconnected += d;
                    odd += o;
                    report.absorb(c, f);
                }
                report.notes.push(format!(
                    "n={n}: {connected} connected graphs checked; {disconnected} disconnected \
                     graphs not asserted, {odd} of them violate the equivalence"
                ));
            }
            Ok(())
        })
        .map(|mut r| {
            r.notes.push(format!("total connected labeled graphs: {}", r.instances));
            r
        })
    }

    /// Graphs whose every edge has curvature exactly 1, and complete graphs
    /// above it.
    pub fn check_ric_one_classification(&self) -> VerificationReport {
        use FamilySpec::*;
        let mut rows = Vec::new();
        for n in 4..=10usize {
            if n % 2 == 0 {
                rows.push((CocktailParty(n / 2), Some(Rational::one()), None));
            } else {
                rows.push((NearCocktail(n), Some(Rational::one()), None));
            }
            rows.push((Complete(n), Some(r(n as i64, n as i64 - 1)), None));
        }
        timed("ric-one", |report| self.check_table(report, rows)).unwrap_or_else(build_error("ric-one"))
    }

    /// Closed-form curvature values of named families.
    pub fn check_family_values(&self) -> VerificationReport {
        use FamilySpec::*;
        let zero = Some(Rational::zero());
        let mut rows = Vec::new();
        for n in 3..=10 {
            rows.push((Complete(n), Some(r(n as i64, n as i64 - 1)), None));
        }
        for k in 2..=6 {
            rows.push((CocktailParty(k), Some(Rational::one()), None));
        }
        for n in [5, 7, 9] {
            rows.push((NearCocktail(n), Some(Rational::one()), None));
        }
        for k in 2..=6 {
            rows.push((Hypercube(k), Some(r(2, k as i64)), zero.clone()));
            rows.push((CompleteBipartite(k, k), Some(r(2, k as i64)), zero.clone()));
        }
        for m in 6..=12 {
            rows.push((Cycle(m), zero.clone(), zero.clone()));
        }
        rows.push((Cycle(5), Some(r(1, 2)), zero.clone()));
        rows.push((Petersen, zero.clone(), None));
        rows.push((Dodecahedral, zero.clone(), None));
        for n in 3..=6 {
            rows.push((Star(n), None, zero.clone()));
        }
        for n in 2..=8 {
            rows.push((Path(n), None, zero.clone()));
        }
        timed("family-values", |report| self.check_table(report, rows))
            .unwrap_or_else(build_error("family-values"))
    }

    /// Families that are bone-idle on every edge, and hypercubes and
    /// complete bipartite graphs that are not.
    pub fn check_bone_idle_families(&self) -> VerificationReport {
        use FamilySpec::*;
        let mut positive = vec![Icosidodecahedron];
        positive.extend((6..=10).map(BiAntiprism));
        for n in 6..=8 {
            positive.extend((6..=8).map(|m| TorusGrid(n, m)));
        }
        positive.extend([TwistedTorus(7, 5, 2), TwistedTorus(8, 4, 2), TwistedTorus(6, 6, 3)]);
        positive.extend([KleinBottle(6, 6), KleinBottle(7, 6)]);
        let mut rows: Vec<_> = positive
            .into_iter()
            .map(|s| (s, Some(Rational::zero()), Some(Rational::zero())))
            .collect();
        timed("bone-idle-families", |report| {
            self.check_table(report, std::mem::take(&mut rows))?;
            let negative: Vec<FamilySpec> = (2..=5)
                .flat_map(|n| [Hypercube(n), CompleteBipartite(n, n)])
                .collect();
            for spec in negative {
                let g = spec.build()?;
                let label = spec.to_string();
                let mut sink = Sink::new(&label);
                for (x, y) in g.edges() {
                    let k = sink.ok((x, y), "kappa", self.engine.kappa_lly(&g, x, y));
                    let k0 = sink.ok((x, y), "kappa0", self.engine.kappa_zero(&g, x, y));
                    if let (Some(k), Some(k0)) = (k, k0) {
                        if !(k.is_positive() && k0.is_zero()) {
                            sink.fail(Some((x, y)), "kappa > 0 = kappa0", format!("kappa {k}, kappa0 {k0}"));
                        }
                    }
                }
                report.absorb(g.edge_count() as u64, sink.failures);
            }
            Ok(())
        })
        .unwrap_or_else(build_error("bone-idle-families"))
    }

    /// Falsification attempt: every cubic graph in a fixed list plus
    /// `trials` random cubic graphs of each order 8, 10, 12, 14 must have an
    /// edge that is not bone-idle.
    pub fn check_no_cubic_bone_idle(&self, seed: u64, trials: usize) -> Result<VerificationReport> {
        use FamilySpec::*;
        if trials == 0 {
            return Err(Error::InvalidParameter("trials must be at least 1".into()));
        }
        let mut specs = vec![Complete(4), CompleteBipartite(3, 3), Hypercube(3), Petersen, Dodecahedral];
        specs.extend((3..=8).map(Prism));
        for n in [8, 10, 12, 14] {
            for t in 0..trials as u64 {
                specs.push(RandomRegular { n, d: 3, seed: seed.wrapping_add(t) });
            }
        }
        let corpus = Corpus::from_specs(&specs)?;
        timed("no-cubic-bone-idle", |report| {
            report.notes.push(format!(
                "falsification attempt over {} cubic graphs, not an exhaustive proof",
                corpus.len()
            ));
            let results = corpus
                .entries()
                .par_iter()
                .map(|(label, g)| (label, g.regular_degree(), self.non_idle_witness(g)))
                .collect::<Vec<_>>();
            for (label, degree, witness) in results {
                report.instances += 1;
                if degree != Some(3) {
                    report.fail(label, None, "3-regular", format!("{degree:?}"));
                    continue;
                }
                match witness {
                    Ok(Some(((x, y), k0, k))) => report.notes.push(format!(
                        "{label}: witness edge ({x},{y}) with kappa0 {k0}, kappa {k}"
                    )),
                    Ok(None) => report.fail(label, None, "an edge that is not bone-idle", "none"),
                    Err(e) => report.fail(label, None, "curvature", format!("error: {e}")),
                }
            }
            Ok(())
        })
    }

    /// Girth-5 graphs are flat but not flat without idleness; long cycles
    /// are bone-idle and the 5-cycle is not.
    pub fn check_girth5_bone_idle(&self) -> VerificationReport {
        timed("girth5", |report| {
            for (label, g) in [("petersen", petersen()), ("dodecahedral", dodecahedral())] {
                report.instances += 1;
                if g.girth() != Dist::Finite(5) {
                    report.fail(label, None, "girth 5", g.girth());
                }
                let flat = self.all_edges_zero(&g, false)?;
                let zero_flat = self.all_edges_zero(&g, true)?;
                if !flat || zero_flat {
                    report.fail(
                        label,
                        None,
                        "ricci-flat and not zero-ricci-flat",
                        format!("ricci-flat {flat}, zero-ricci-flat {zero_flat}"),
                    );
                }
            }
            for n in 5..=12 {
                let g = cycle(n)?;
                report.instances += 1;
                let idle = self.non_idle_witness(&g)?.is_none();
                if idle != (n >= 6) {
                    report.fail(&format!("C_{n}"), None, format!("bone-idle {}", n >= 6), format!("bone-idle {idle}"));
                }
            }
            Ok(())
        })
        .unwrap_or_else(build_error("girth5"))
    }

    /// Every edge of a product of regular connected graphs carries the
    /// curvature of its factor edge scaled by that factor's share of the
    /// degree, for both `kappa` and `kappa_0`.
    pub fn check_product_formula(&self, pairs: &[(FamilySpec, FamilySpec)]) -> Result<VerificationReport> {
        let built = pairs
            .iter()
            .map(|(a, b)| {
                let (g, h) = (a.build()?, b.build()?);
                for (spec, f) in [(a, &g), (b, &h)] {
                    if f.regular_degree().is_none() || !f.is_connected() {
                        return Err(Error::InvalidParameter(format!(
                            "product factor {spec} must be regular and connected"
                        )));
                    }
                }
                Ok((a.to_string(), g, b.to_string(), h))
            })
            .collect::<Result<Vec<_>>>()?;
        timed("product-formula", |report| {
            for (gl, g, hl, h) in &built {
                let label = format!("{gl} x {hl}");
                let product = g.cartesian_product(h)?;
                let (dg, dh) = (g.regular_degree().unwrap() as i64, h.regular_degree().unwrap() as i64);
                let mut cache: HashMap<(bool, usize, usize), (Rational, Rational)> = HashMap::new();
                let mut seen = BTreeSet::new();
                let mut sink = Sink::new(&label);
                for (p, q) in product.edges() {
                    let (a1, b1, a2, b2) = (p / h.n(), p % h.n(), q / h.n(), q % h.n());
                    let (along_g, factor, fl, u, v, share) = if b1 == b2 {
                        (true, g, gl, a1, a2, r(dg, dg + dh))
                    } else {
                        (false, h, hl, b1, b2, r(dh, dg + dh))
                    };
                    let key = (along_g, u.min(v), u.max(v));
                    if let Entry::Vacant(e) = cache.entry(key) {
                        let k = self.engine.kappa_lly(factor, u.min(v), u.max(v))?;
                        let k0 = self.engine.kappa_zero(factor, u.min(v), u.max(v))?;
                        e.insert((k, k0));
                    }
                    let (k, k0) = &cache[&key];
                    let (ek, ek0) = (&share * k, &share * k0);
                    sink.expect_eq((p, q), "kappa", &ek, self.engine.kappa_lly(&product, p, q));
                    sink.expect_eq((p, q), "kappa0", &ek0, self.engine.kappa_zero(&product, p, q));
                    seen.insert(format!("{label}: {fl}-direction edges kappa {ek}, kappa0 {ek0}"));
                }
                report.absorb(product.edge_count() as u64, sink.failures);
                report.notes.extend(seen);
            }
            Ok(())
        })
    }

    /// Edge-level identities and bounds over a corpus.
    pub fn check_edge_properties(&self, corpus: &Corpus) -> VerificationReport {
        let start = Instant::now();
        let mut report = VerificationReport::new("edge-properties");
        let results: Vec<_> = corpus
            .entries()
            .par_iter()
            .enumerate()
            .map(|(i, (label, g))| self.graph_properties(i as u64, label, g))
            .collect();
        for (n, f) in results {
            report.absorb(n, f);
        }
        report.notes.push(format!(
            "{} graphs, {} edges",
            corpus.len(),
            corpus.edge_count()
        ));
        report.elapsed = start.elapsed();
        report
    }

    fn graph_properties(&self, index: u64, label: &str, g: &Graph) -> (u64, Vec<Failure>) {
        let edges: Vec<_> = g.edges().collect();
        let per_edge: Vec<(Option<Rational>, Vec<Failure>)> = edges
            .par_iter()
            .map(|&(x, y)| {
                let mut sink = Sink::new(label);
                let k = self.edge_properties(index, g, x, y, &mut sink);
                (k, sink.failures)
            })
            .collect();
        let mut sink = Sink::new(label);
        let mut min_kappa: Option<Rational> = None;
        for (k, f) in per_edge {
            sink.failures.extend(f);
            if let Some(k) = k {
                min_kappa = Some(min_kappa.map_or(k.clone(), |m| m.min(k)));
            }
        }
        if let (Some(k), true) = (min_kappa, g.is_connected()) {
            if k.is_positive() {
                let diam = g.diameter().finite().expect("connected graph has finite diameter");
                if Rational::from(diam as usize) * &k > Rational::integer(2) {
                    sink.fail(None, format!("diameter <= 2/{k}"), format!("diameter {diam}"));
                }
            }
        }
        (edges.len() as u64, sink.failures)
    }

    /// Returns the edge's curvature when it could be computed.
    fn edge_properties(&self, index: u64, g: &Graph, x: usize, y: usize, sink: &mut Sink) -> Option<Rational> {
        let e = &self.engine;
        let edge = (x, y);
        let k = sink.ok(edge, "kappa", e.kappa_lly(g, x, y))?;
        let k0 = sink.ok(edge, "kappa0", e.kappa_zero(g, x, y))?;
        let (dx, dy) = (g.degree(x), g.degree(y));
        let common = g.common_neighbors(x, y).map(|c| c.len()).unwrap_or(0) as i64;

        // upper bound by triangles
        let bound = r(common + 2, dx.max(dy) as i64);
        if k > bound {
            sink.fail(Some(edge), format!("kappa <= {bound}"), &k);
        }

        // idleness function shape and probes
        if let Some(f) = sink.ok(edge, "idleness function", e.idleness_function(g, x, y)) {
            if f.segments() > 3 || !f.is_concave() {
                sink.fail(Some(edge), "concave with at most 3 pieces", format!("{:?}", f.breakpoints()));
            }
            if f.eval(&Rational::one()).ok() != Some(Rational::zero()) {
                sink.fail(Some(edge), "f(1) = 0", format!("{:?}", f.breakpoints()));
            }
            let a = linear_threshold(dx, dy);
            let inside = f.breakpoints().iter().any(|(b, _)| *b > a && *b < Rational::one());
            let at_a = f.eval(&a).ok();
            if inside || at_a != Some(&(Rational::one() - &a) * &k) {
                sink.fail(Some(edge), format!("slope {} on [{a}, 1]", -&k), format!("{:?}", f.breakpoints()));
            }
            let cap = ((dx + 1) * (dy + 1) * 6) as i64;
            let mut rng = ChaCha8Rng::seed_from_u64(index << 40 ^ (x as u64) << 20 ^ y as u64 ^ 0x5eed);
            for _ in 0..16 {
                let q = rng.gen_range(1..=cap);
                let alpha = r(rng.gen_range(0..=q), q);
                if let Some(direct) = sink.ok(edge, "kappa_alpha", e.kappa_alpha(g, x, y, &alpha)) {
                    if f.eval(&alpha).ok() != Some(direct.clone()) {
                        sink.fail(Some(edge), format!("f({alpha}) = {direct}"), format!("{:?}", f.eval(&alpha)));
                    }
                }
            }
        }

        if dx != dy {
            return Some(k);
        }
        let d = dx as i64;

        // both routes agree
        sink.expect_eq(edge, "kappa (assignment)", &k, e.kappa_lly_assignment(g, x, y));
        sink.expect_eq(edge, "kappa0 (assignment)", &k0, e.kappa_zero_assignment(g, x, y));

        // gap formula, gap range, equality condition, sufficient condition
        let diff = &k - &k0;
        if let Some(gap) = sink.ok(edge, "gap", e.curvature_gap(g, x, y)) {
            if gap.value != diff {
                sink.fail(Some(edge), format!("kappa - kappa0 = {}", gap.value), &diff);
            }
            if (gap.supsup == Some(3)) != (diff.is_zero()) {
                sink.fail(Some(edge), "kappa = kappa0 iff a distance-3 optimal pair", format!("{gap:?}"));
            }
        }
        let scaled = &diff * &Rational::integer(d);
        if !(scaled.is_integer() && (0..=2).contains(&scaled.to_i64().unwrap_or(-1))) {
            sink.fail(Some(edge), "d (kappa - kappa0) in {0, 1, 2}", scaled);
        }
        if k < r(-d + 2 * common + 3, d) && k != k0 {
            sink.fail(Some(edge), "kappa = kappa0 below the sufficient bound", format!("kappa {k}, kappa0 {k0}"));
        }

        // local structure
        if let Some(s) = sink.ok(edge, "local structure", e.local_structure(g, x, y)) {
            if s.bone_idle != (k.is_zero() && k0.is_zero()) {
                sink.fail(Some(edge), format!("local bone-idle test {}", s.bone_idle), format!("kappa {k}, kappa0 {k0}"));
            }
            if s.k <= 5 {
                let c = crate::curvature::lly_cost_matrix(g, x, y).expect("equal degrees");
                for a in optimal_assignments(&c) {
                    let counts = crate::curvature::pair_counts(&c, &a);
                    let weight = (2 * counts.at_one + counts.at_two) as i64;
                    if weight != s.short_pair_weight || a.cost != s.optimal_cost {
                        sink.fail(Some(edge), format!("2 N1 + N2 = {}", s.short_pair_weight), weight);
                    }
                    if s.case != FlatCase::NotApplicable {
                        let shape = (counts.at_one as i64, counts.at_two, counts.at_three);
                        if shape != (d - 2, 0, 1) && shape != (d - 3, 2, 0) {
                            sink.fail(Some(edge), "flat triangle-free assignment shape", format!("{shape:?}"));
                        }
                    }
                }
            }
        }
        Some(k)
    }

    /// A user-supplied 5-regular graph that should be flat with
    /// `kappa_0 = -1/5` on every edge.
    pub fn check_rf72(&self, g: &Graph) -> VerificationReport {
        timed("rf72", |report| {
            let label = "rf72";
            report.instances = g.edge_count() as u64;
            if g.regular_degree() != Some(5) {
                report.fail(label, None, "5-regular", format!("degrees {:?}", g.degree_sequence()));
                return Ok(());
            }
            let mut sink = Sink::new(label);
            for (x, y) in g.edges() {
                sink.expect_eq((x, y), "kappa", &Rational::zero(), self.engine.kappa_lly(g, x, y));
                sink.expect_eq((x, y), "kappa0", &r(-1, 5), self.engine.kappa_zero(g, x, y));
            }
            report.failures.extend(sink.failures);
            Ok(())
        })
        .unwrap_or_else(build_error("rf72"))
    }
}

fn build_error(suite: &'static str) -> impl FnOnce(Error) -> VerificationReport {
    move |e| {
        let mut report = VerificationReport::new(suite);
        report.fail(suite, None, "suite runs", format!("error: {e}"));
        report
    }
}
