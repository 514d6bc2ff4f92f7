use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;

/// A probability measure with finite support on the vertices of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Measure {
    masses: BTreeMap<usize, Rational>,
}

impl Measure {
    /// Builds a measure from `(vertex, mass)` pairs. Masses must be positive,
    /// vertices distinct, and the total exactly one.
    pub fn new<I>(masses: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, Rational)>,
    {
        let mut map = BTreeMap::new();
        for (v, m) in masses {
            if !m.is_positive() {
                return Err(Error::InvalidMeasure(format!("mass {m} at vertex {v}")));
            }
            if map.insert(v, m).is_some() {
                return Err(Error::InvalidMeasure(format!("vertex {v} listed twice")));
            }
        }
        let total: Rational = map.values().sum();
        if total != Rational::one() {
            return Err(Error::InvalidMeasure(format!("total mass {total}")));
        }
        Ok(Measure { masses: map })
    }

    /// The Dirac measure at `v`.
    pub fn point(v: usize) -> Self {
        Measure {
            masses: BTreeMap::from([(v, Rational::one())]),
        }
    }

    pub fn mass(&self, v: usize) -> Rational {
        self.masses.get(&v).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.masses.keys().copied()
    }

    pub fn support_len(&self) -> usize {
        self.masses.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.masses.iter().map(|(&v, m)| (v, m))
    }

    pub(crate) fn check_on(&self, g: &Graph) -> Result<()> {
        self.support().try_for_each(|v| g.check_vertex(v))
    }
}

/// The lazy random-walk measure at `x`: mass `alpha` stays at `x` and
/// `(1 - alpha) / d_x` goes to each neighbor.
pub fn mu_alpha(g: &Graph, x: usize, alpha: &Rational) -> Result<Measure> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    g.check_vertex(x)?;
    if alpha.is_negative() || *alpha > Rational::one() {
        return Err(Error::IdlenessOutOfRange(alpha.to_string()));
    }
    let rest = Rational::one() - alpha;
    if rest.is_zero() {
        return Ok(Measure::point(x));
    }
    let d = g.degree(x);
    if d == 0 {
        return Err(Error::IsolatedVertex(x));
    }
    let share = &rest / Rational::from(d);
    let mut masses: BTreeMap<usize, Rational> =
        g.neighbors(x).iter().map(|&v| (v, share.clone())).collect();
    if alpha.is_positive() {
        masses.insert(x, alpha.clone());
    }
    Ok(Measure { masses })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle};

    #[test]
    fn idleness_one_is_a_point_mass() {
        let g = cycle(5).unwrap();
        assert_eq!(mu_alpha(&g, 2, &Rational::one()).unwrap(), Measure::point(2));
    }

    #[test]
    fn triangle_without_idleness() {
        let mu = mu_alpha(&complete(3).unwrap(), 0, &Rational::zero()).unwrap();
        assert_eq!(mu.support().collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(mu.mass(1), Rational::new(1, 2));
        assert_eq!(mu.mass(0), Rational::zero());
    }

    #[test]
    fn square_with_idleness_one_third() {
        let mu = mu_alpha(&cycle(4).unwrap(), 0, &Rational::new(1, 3)).unwrap();
        let masses: Vec<_> = mu.iter().map(|(v, m)| (v, m.clone())).collect();
        let third = Rational::new(1, 3);
        assert_eq!(masses, vec![(0, third.clone()), (1, third.clone()), (3, third)]);
    }

    #[test]
    fn rejects_bad_input() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(mu_alpha(&g, 2, &Rational::zero()), Err(Error::IsolatedVertex(2)));
        assert_eq!(mu_alpha(&g, 2, &Rational::one()).unwrap(), Measure::point(2));
        assert!(mu_alpha(&g, 0, &Rational::new(3, 2)).is_err());
        assert!(mu_alpha(&g, 0, &Rational::new(-1, 2)).is_err());
        assert!(mu_alpha(&g, 7, &Rational::zero()).is_err());
        assert_eq!(mu_alpha(&Graph::empty(0), 0, &Rational::zero()), Err(Error::EmptyGraph));
    }

    #[test]
    fn measure_validation() {
        assert!(Measure::new([(0, Rational::new(1, 2))]).is_err());
        assert!(Measure::new([(0, Rational::new(1, 2)), (0, Rational::new(1, 2))]).is_err());
        assert!(Measure::new([(0, Rational::new(3, 2)), (1, Rational::new(-1, 2))]).is_err());
        assert!(Measure::new([(0, Rational::new(1, 2)), (1, Rational::new(1, 2))]).is_ok());
    }
}
