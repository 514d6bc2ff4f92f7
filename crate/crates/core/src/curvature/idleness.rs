use std::collections::BTreeMap;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{kappa_alpha, linear_threshold};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;

/// Random probes checked after reconstruction.
const PROBES: usize = 16;
/// Extra evaluations allowed while refining a mismatched interval.
const REFINE_BUDGET: usize = 64;

/// A continuous piecewise linear function on `[0, 1]`, stored as its
/// breakpoints with consecutive collinear points merged.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PiecewiseLinearFn {
    points: Vec<(Rational, Rational)>,
}

impl PiecewiseLinearFn {
    /// Builds from `(alpha, value)` pairs with strictly increasing `alpha`
    /// starting at 0 and ending at 1.
    pub fn new(points: Vec<(Rational, Rational)>) -> Result<Self> {
        let ok = points.len() >= 2
            && points[0].0.is_zero()
            && points[points.len() - 1].0 == Rational::one()
            && points.windows(2).all(|w| w[0].0 < w[1].0);
        if !ok {
            return Err(Error::InvalidParameter(
                "breakpoints must increase strictly from 0 to 1".into(),
            ));
        }
        let mut f = PiecewiseLinearFn { points };
        f.merge_collinear();
        Ok(f)
    }

    fn merge_collinear(&mut self) {
        let mut out: Vec<(Rational, Rational)> = Vec::with_capacity(self.points.len());
        for p in self.points.drain(..) {
            while out.len() >= 2 {
                let (a, b) = (&out[out.len() - 2], &out[out.len() - 1]);
                if slope(a, b) == slope(b, &p) {
                    out.pop();
                } else {
                    break;
                }
            }
            out.push(p);
        }
        self.points = out;
    }

    pub fn breakpoints(&self) -> &[(Rational, Rational)] {
        &self.points
    }

    pub fn segments(&self) -> usize {
        self.points.len() - 1
    }

    pub fn slopes(&self) -> Vec<Rational> {
        self.points.windows(2).map(|w| slope(&w[0], &w[1])).collect()
    }

    pub fn is_concave(&self) -> bool {
        self.slopes().windows(2).all(|s| s[0] > s[1])
    }

    pub fn eval(&self, alpha: &Rational) -> Result<Rational> {
        if alpha.is_negative() || *alpha > Rational::one() {
            return Err(Error::IdlenessOutOfRange(alpha.to_string()));
        }
        let i = self
            .points
            .windows(2)
            .position(|w| *alpha <= w[1].0)
            .expect("alpha within [0, 1]");
        let (a, b) = (&self.points[i], &self.points[i + 1]);
        Ok(&a.1 + &(slope(a, b) * (alpha - &a.0)))
    }
}

fn slope(a: &(Rational, Rational), b: &(Rational, Rational)) -> Rational {
    (&b.1 - &a.1) / (&b.0 - &a.0)
}

fn intersect(p: &(Rational, Rational), s: &Rational, q: &(Rational, Rational), t: &Rational) -> Option<Rational> {
    if s == t {
        return None;
    }
    // p.1 + s (a - p.0) = q.1 + t (a - q.0)
    Some((&q.1 - &p.1 + s * &p.0 - t * &q.0) / (s - t))
}

/// Reconstructs `alpha -> kappa_alpha(x, y)` exactly.
///
/// Candidate breakpoints are `1 / (lcm(d_x, d_y) + 1)` and
/// `1 / (max(d_x, d_y) + 1)`. The result is checked against the exact
/// curvature at every interval midpoint and at 16 seeded random probes;
/// a mismatch inserts the intersection of the tangent lines at the ends of
/// the offending interval. If no concave function with at most three pieces
/// fits within the probe budget, [`Error::Unstable`] is returned.
pub fn idleness_function(g: &Graph, x: usize, y: usize) -> Result<PiecewiseLinearFn> {
    g.check_edge(x, y)?;
    let (dx, dy) = (g.degree(x), g.degree(y));
    let eval = |a: &Rational| kappa_alpha(g, x, y, a);

    let mut known: BTreeMap<Rational, Rational> = BTreeMap::new();
    for a in [
        Rational::zero(),
        Rational::new(1, dx.lcm(&dy) as i64 + 1),
        linear_threshold(dx, dy),
        Rational::one(),
    ] {
        if let std::collections::btree_map::Entry::Vacant(e) = known.entry(a) {
            let v = eval(e.key())?;
            e.insert(v);
        }
    }

    let denominator_cap = ((dx + 1) * (dy + 1) * 6) as i64;
    let mut rng = ChaCha8Rng::seed_from_u64(((x as u64) << 32) ^ y as u64);
    let probes: Vec<Rational> = (0..PROBES)
        .map(|_| {
            let q = rng.gen_range(1..=denominator_cap);
            Rational::new(rng.gen_range(0..=q), q)
        })
        .collect();

    let mut budget = REFINE_BUDGET;
    'refine: loop {
        let f = PiecewiseLinearFn::new(known.clone().into_iter().collect())?;
        let pts: Vec<_> = known.iter().map(|(a, v)| (a.clone(), v.clone())).collect();
        let mids = pts.windows(2).map(|w| (&w[0].0 + &w[1].0) / Rational::integer(2));
        for a in mids.chain(probes.iter().cloned()) {
            if known.contains_key(&a) {
                continue;
            }
            let v = eval(&a)?;
            if f.eval(&a)? == v {
                continue;
            }
            if budget < 3 {
                return Err(Error::Unstable(x, y));
            }
            budget -= 3;
            // tangent lines just inside the interval containing `a`
            let hi = known.range(&a..).next().map(|(k, _)| k.clone()).unwrap();
            let lo = known.range(..&a).next_back().map(|(k, _)| k.clone()).unwrap();
            let h = (&hi - &lo) / Rational::integer(1024);
            let (lo_in, hi_in) = (&lo + &h, &hi - &h);
            let left = (lo.clone(), known[&lo].clone());
            let left_in = (lo_in.clone(), eval(&lo_in)?);
            let right = (hi.clone(), known[&hi].clone());
            let right_in = (hi_in.clone(), eval(&hi_in)?);
            known.insert(a, v);
            if let Some(c) = intersect(&left, &slope(&left, &left_in), &right, &slope(&right_in, &right)) {
                if lo < c && c < hi && !known.contains_key(&c) {
                    let vc = eval(&c)?;
                    known.insert(c, vc);
                }
            }
            known.insert(left_in.0, left_in.1);
            known.insert(right_in.0, right_in.1);
            continue 'refine;
        }
        if f.segments() > 3 || !f.is_concave() || !f.points.last().unwrap().1.is_zero() {
            return Err(Error::Unstable(x, y));
        }
        return Ok(f);
    }
}
