//! Acceptance criteria, one pass/fail line each. Runs without the libtest
//! harness so the summary is always printed; exits non-zero on any failure.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use graph_ricci::curvature::{
    curvature_gap, idleness_function, is_bone_idle, kappa_alpha, kappa_lly, kappa_lly_assignment,
    kappa_zero, kappa_zero_assignment, lly_cost_matrix,
};
use graph_ricci::families::FamilySpec::{self, *};
use graph_ricci::transport::{
    min_cost_assignment, optimal_pair_support, wasserstein1, wasserstein1_oracle, CostMatrix,
    Measure,
};
use graph_ricci::verify::{
    check_bone_idle_families, check_edge_properties, check_family_values, check_main_theorem,
    check_no_cubic_bone_idle, check_product_formula, default_corpus, default_product_pairs,
};
use graph_ricci::{Graph, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn r(p: i64, q: i64) -> Rational {
    Rational::new(p, q)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond { Ok(()) } else { Err(msg()) }
}

/// All permutations of `0..k` in lexicographic order.
fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for j in 0..used.len() {
            if !used[j] {
                used[j] = true;
                prefix.push(j);
                go(prefix, used, out);
                prefix.pop();
                used[j] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

fn cost(c: &CostMatrix, p: &[usize]) -> i64 {
    p.iter().enumerate().map(|(i, &j)| c.get(i, j)).sum()
}

/// Optimal cost, lexicographically first optimum and the optimal pair
/// support by exhaustive search.
fn brute_assignment(c: &CostMatrix) -> (i64, Vec<usize>, BTreeSet<(usize, usize)>) {
    let perms = permutations(c.size());
    let best = perms.iter().map(|p| cost(c, p)).min().unwrap();
    let optimal: Vec<_> = perms.into_iter().filter(|p| cost(c, p) == best).collect();
    let support = optimal
        .iter()
        .flat_map(|p| p.iter().enumerate().map(|(i, &j)| (i, j)).collect::<Vec<_>>())
        .collect();
    (best, optimal[0].clone(), support)
}

fn family_values() -> Outcome {
    let zero = Some(Rational::zero());
    let mut table: Vec<(FamilySpec, Option<Rational>, Option<Rational>)> = Vec::new();
    for n in 3..=10i64 {
        table.push((Complete(n as usize), Some(r(n, n - 1)), None));
    }
    for k in 2..=6 {
        table.push((CocktailParty(k), Some(Rational::one()), None));
    }
    for n in [5, 7, 9] {
        table.push((NearCocktail(n), Some(Rational::one()), None));
    }
    for k in 2..=6usize {
        table.push((Hypercube(k), Some(r(2, k as i64)), zero.clone()));
        table.push((CompleteBipartite(k, k), Some(r(2, k as i64)), zero.clone()));
    }
    for n in 6..=12 {
        table.push((Cycle(n), zero.clone(), zero.clone()));
    }
    table.push((Cycle(5), Some(r(1, 2)), zero.clone()));
    table.push((Petersen, zero.clone(), None));
    table.push((Dodecahedral, zero.clone(), None));

    let mut edges = 0;
    for (spec, kappa, kappa0) in &table {
        let g = spec.build().map_err(|e| e.to_string())?;
        for (x, y) in g.edges() {
            edges += 1;
            let equal = g.degree(x) == g.degree(y);
            if let Some(k) = kappa {
                let got = kappa_lly(&g, x, y).unwrap();
                ensure(got == *k, || format!("{spec} ({x},{y}): kappa {got} != {k}"))?;
                if equal {
                    let got = kappa_lly_assignment(&g, x, y).unwrap();
                    ensure(got == *k, || format!("{spec} ({x},{y}): assignment kappa {got} != {k}"))?;
                }
            }
            if let Some(k) = kappa0 {
                let got = kappa_zero(&g, x, y).unwrap();
                ensure(got == *k, || format!("{spec} ({x},{y}): kappa0 {got} != {k}"))?;
                if equal {
                    let got = kappa_zero_assignment(&g, x, y).unwrap();
                    ensure(got == *k, || format!("{spec} ({x},{y}): assignment kappa0 {got} != {k}"))?;
                }
            }
        }
    }
    let suite = check_family_values();
    ensure(suite.passed(), || format!("family-values suite: {suite}"))?;
    Ok(format!("{} graphs, {edges} edges", table.len()))
}

/// Connected labeled graphs on `n` vertices, from the standard recurrence
/// over the component containing vertex 1.
fn connected_labeled(n: usize) -> u64 {
    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }
    let all = |m: usize| 1u64 << (m * m.saturating_sub(1) / 2);
    let mut c = vec![0u64; n + 1];
    for m in 1..=n {
        let disconnected: u64 = (1..m)
            .map(|k| binom(m as u64 - 1, k as u64 - 1) * c[k] * all(m - k))
            .sum();
        c[m] = all(m) - disconnected;
    }
    c[n]
}

fn main_theorem() -> Outcome {
    let report = check_main_theorem(6).map_err(|e| e.to_string())?;
    ensure(report.passed(), || format!("{report}"))?;
    let expected: u64 = (1..=6).map(connected_labeled).sum();
    ensure(report.instances == expected, || {
        format!("checked {} connected graphs, expected {expected}", report.instances)
    })?;
    Ok(format!("{} connected labeled graphs on at most 6 vertices", report.instances))
}

fn gap_formula() -> Outcome {
    let corpus = default_corpus().map_err(|e| e.to_string())?;
    let mut checked = 0;
    for (label, g) in corpus.entries() {
        for (x, y) in g.edges() {
            let d = g.degree(x);
            if d != g.degree(y) {
                continue;
            }
            checked += 1;
            let transport = kappa_lly(g, x, y).unwrap() - kappa_zero(g, x, y).unwrap();
            let assignment =
                kappa_lly_assignment(g, x, y).unwrap() - kappa_zero_assignment(g, x, y).unwrap();
            let gap = curvature_gap(g, x, y).unwrap();
            ensure(transport == assignment && assignment == gap.value, || {
                format!("{label} ({x},{y}): transport {transport}, assignment {assignment}, formula {}", gap.value)
            })?;
            let c = lly_cost_matrix(g, x, y).unwrap();
            let expected = if c.size() == 0 {
                r(2, d as i64)
            } else {
                let (_, _, support) = brute_assignment(&c);
                let sup = support.iter().map(|&(i, j)| c.get(i, j)).max().unwrap();
                r(3 - sup, d as i64)
            };
            ensure(gap.value == expected, || format!("{label} ({x},{y}): gap {} != {expected}", gap.value))?;
            let scaled = &gap.value * &Rational::from(d);
            ensure(
                [0, 1, 2].iter().any(|&c| scaled == Rational::integer(c)),
                || format!("{label} ({x},{y}): d * gap = {scaled}"),
            )?;
        }
    }
    Ok(format!("{checked} equal-degree edges of {}", corpus.edge_count()))
}

fn bone_idle_families() -> Outcome {
    let mut positive = vec![Icosidodecahedron];
    positive.extend((6..=10).map(BiAntiprism));
    for n in 6..=8 {
        positive.extend((6..=8).map(|m| TorusGrid(n, m)));
    }
    positive.extend([TwistedTorus(7, 5, 2), TwistedTorus(8, 4, 2), TwistedTorus(6, 6, 3)]);
    positive.extend([KleinBottle(6, 6), KleinBottle(7, 6)]);
    for spec in &positive {
        let g = spec.build().map_err(|e| e.to_string())?;
        ensure(is_bone_idle(&g).unwrap(), || format!("{spec} is not bone-idle"))?;
    }
    let negative: Vec<_> = (2..=6).flat_map(|n| [Hypercube(n), CompleteBipartite(n, n)]).collect();
    for spec in &negative {
        let g = spec.build().map_err(|e| e.to_string())?;
        for (x, y) in g.edges() {
            let (k, k0) = (kappa_lly(&g, x, y).unwrap(), kappa_zero(&g, x, y).unwrap());
            ensure(k.is_positive() && k0.is_zero(), || format!("{spec} ({x},{y}): kappa {k}, kappa0 {k0}"))?;
        }
    }
    let suite = check_bone_idle_families();
    ensure(suite.passed(), || format!("{suite}"))?;
    Ok(format!("{} bone-idle families, {} negatives", positive.len(), negative.len()))
}

fn no_cubic_bone_idle() -> Outcome {
    let report = check_no_cubic_bone_idle(1, 13).map_err(|e| e.to_string())?;
    ensure(report.passed(), || format!("{report}"))?;
    ensure(report.instances >= 60, || format!("only {} cubic graphs", report.instances))?;
    let witnesses = report.notes.iter().filter(|n| n.contains("witness edge")).count() as u64;
    ensure(witnesses == report.instances, || {
        format!("{witnesses} witnesses for {} graphs", report.instances)
    })?;
    Ok(format!("{} cubic graphs, each with a witness edge", report.instances))
}

fn product_formula() -> Outcome {
    let report = check_product_formula(&default_product_pairs()).map_err(|e| e.to_string())?;
    ensure(report.passed(), || format!("{report}"))?;
    let (g, h) = (Petersen.build().unwrap(), Cycle(6).build().unwrap());
    let p = g.cartesian_product(&h).unwrap();
    let mut along = 0;
    for (u, v) in p.edges() {
        if u % h.n() == v % h.n() {
            along += 1;
            let k0 = kappa_zero(&p, u, v).unwrap();
            ensure(k0 == r(-1, 5), || format!("petersen x C_6 ({u},{v}): kappa0 {k0}"))?;
        }
    }
    ensure(along == 6 * 15, || format!("{along} petersen-direction edges"))?;
    Ok(format!(
        "{} product edges; kappa0 = -1/5 on all {along} petersen-direction edges",
        report.instances
    ))
}

fn random_connected(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.3) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

fn random_measure(rng: &mut ChaCha8Rng, n: usize, tokens: i64) -> Measure {
    let mut counts = vec![0i64; n];
    for _ in 0..tokens {
        counts[rng.gen_range(0..n)] += 1;
    }
    Measure::new(
        counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(v, &c)| (v, r(c, tokens))),
    )
    .unwrap()
}

fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..200 {
        let n = rng.gen_range(1..=8);
        let g = random_connected(&mut rng, n);
        let tokens = rng.gen_range(1..=8);
        let mu = random_measure(&mut rng, n, tokens);
        let nu = random_measure(&mut rng, n, tokens);
        let fast = wasserstein1(&g, &mu, &nu).unwrap();
        let slow = wasserstein1_oracle(&g, &mu, &nu).unwrap();
        ensure(fast == slow, || format!("instance {i}: flow {fast}, oracle {slow} on {g:?}"))?;
    }
    for i in 0..500 {
        let k = rng.gen_range(0..=5);
        let hi = if i % 2 == 0 { 3 } else { 9 };
        let c = CostMatrix::from_fn(k, |_, _| rng.gen_range(0..=hi)).unwrap();
        let (best, first, support) = brute_assignment(&c);
        let a = min_cost_assignment(&c);
        ensure(a.cost == best && a.permutation == first, || {
            format!("matrix {c:?}: got {a:?}, expected cost {best} via {first:?}")
        })?;
        ensure(optimal_pair_support(&c) == support, || format!("matrix {c:?}: support differs"))?;
    }
    Ok("200 transport instances, 500 assignment instances".into())
}

fn idleness_structure() -> Outcome {
    let corpus = default_corpus().map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let (mut edges, mut three_piece) = (0, 0);
    for (label, g) in corpus.entries() {
        for (x, y) in g.edges() {
            edges += 1;
            let f = idleness_function(g, x, y).map_err(|e| format!("{label} ({x},{y}): {e}"))?;
            let slopes = f.slopes();
            ensure(f.segments() <= 3, || format!("{label} ({x},{y}): {} pieces", f.segments()))?;
            ensure(slopes.windows(2).all(|s| s[0] >= s[1]), || format!("{label} ({x},{y}): not concave"))?;
            ensure(f.eval(&Rational::one()).unwrap().is_zero(), || format!("{label} ({x},{y}): f(1) != 0"))?;
            three_piece += usize::from(f.segments() == 3);

            let k = kappa_lly(g, x, y).unwrap();
            let threshold = r(1, g.degree(x).max(g.degree(y)) as i64 + 1);
            for t in [threshold.clone(), (&threshold + &Rational::one()) / Rational::integer(2)] {
                // slope -kappa on [threshold, 1]: f(t) = (1 - t) kappa
                let expected = (Rational::one() - &t) * &k;
                ensure(f.eval(&t).unwrap() == expected, || format!("{label} ({x},{y}): f({t}) != {expected}"))?;
            }
            let cap = ((g.degree(x) + 1) * (g.degree(y) + 1) * 6) as i64;
            for _ in 0..16 {
                let q = rng.gen_range(1..=cap);
                let a = r(rng.gen_range(0..=q), q);
                let direct = kappa_alpha(g, x, y, &a).unwrap();
                let rebuilt = f.eval(&a).unwrap();
                ensure(direct == rebuilt, || format!("{label} ({x},{y}): f({a}) = {rebuilt}, direct {direct}"))?;
            }
        }
    }
    Ok(format!("{edges} edges, 16 probes each; {three_piece} functions with three pieces"))
}

fn property_suite() -> Outcome {
    let corpus = default_corpus().map_err(|e| e.to_string())?;
    let report = check_edge_properties(&corpus);
    ensure(report.passed(), || format!("{report}"))?;
    Ok(format!("{} edges", report.instances))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("family value table", family_values),
        ("minimum degree classification, n <= 6", main_theorem),
        ("gap formula on the default corpus", gap_formula),
        ("bone-idle families", bone_idle_families),
        ("no bone-idle cubic graph", no_cubic_bone_idle),
        ("product formula", product_formula),
        ("oracle equivalence", oracle_equivalence),
        ("idleness function structure", idleness_structure),
        ("property suite", property_suite),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|p| Err(format!("panicked: {:?}", p.downcast_ref::<String>())));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} PASS: {name} ({detail}) [{secs:.1}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} FAIL: {name}: {why} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
