use rayon::prelude::*;
use serde::Serialize;

use super::{
    curvature_gap, kappa_lly, kappa_lly_assignment, kappa_zero, kappa_zero_assignment,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;

/// Curvature summary of one edge `u < v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeCurvatureRecord {
    pub u: usize,
    pub v: usize,
    pub du: usize,
    pub dv: usize,
    pub nxy: usize,
    pub kappa0: Rational,
    #[serde(rename = "kappaLLY")]
    pub kappa_lly: Rational,
    /// `d * (kappa - kappa_0)` on equal-degree edges.
    pub gap_c: Option<i64>,
    pub supsup: Option<u8>,
    pub bone_idle: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurvatureProfile {
    pub records: Vec<EdgeCurvatureRecord>,
    /// Set when the graph has no edges.
    pub edgeless: bool,
}

impl CurvatureProfile {
    pub fn all_bone_idle(&self) -> bool {
        self.records.iter().all(|r| r.bone_idle)
    }
}

/// Computes the record of one edge. On equal-degree edges the transport
/// and assignment routes are both evaluated and must agree.
pub fn edge_record(g: &Graph, u: usize, v: usize) -> Result<EdgeCurvatureRecord> {
    let kappa = kappa_lly(g, u, v)?;
    let kappa0 = kappa_zero(g, u, v)?;
    let (du, dv) = (g.degree(u), g.degree(v));
    let (gap_c, supsup) = if du == dv {
        let agree = kappa_lly_assignment(g, u, v)? == kappa
            && kappa_zero_assignment(g, u, v)? == kappa0;
        let gap = curvature_gap(g, u, v)?;
        if !agree || gap.value != &kappa - &kappa0 {
            return Err(Error::RouteMismatch(u, v));
        }
        (Some(gap.scaled(du)), gap.supsup)
    } else {
        (None, None)
    };
    Ok(EdgeCurvatureRecord {
        u,
        v,
        du,
        dv,
        nxy: g.common_neighbors(u, v)?.len(),
        bone_idle: kappa.is_zero() && kappa0.is_zero(),
        kappa0,
        kappa_lly: kappa,
        gap_c,
        supsup,
    })
}

/// One record per edge in sorted edge order, computed in parallel.
pub fn curvature_profile(g: &Graph) -> Result<CurvatureProfile> {
    let edges: Vec<_> = g.edges().collect();
    let records = edges
        .par_iter()
        .map(|&(u, v)| edge_record(g, u, v))
        .collect::<Result<Vec<_>>>()?;
    Ok(CurvatureProfile { edgeless: records.is_empty(), records })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    #[test]
    fn six_cycle_profile() {
        let p = curvature_profile(&cycle(6).unwrap()).unwrap();
        assert_eq!(p.records.len(), 6);
        assert!(p.all_bone_idle() && !p.edgeless);
    }

    #[test]
    fn petersen_profile() {
        let p = curvature_profile(&petersen()).unwrap();
        assert_eq!(p.records.len(), 15);
        for r in &p.records {
            assert_eq!(r.kappa_lly, Rational::zero());
            assert_eq!(r.kappa0, Rational::new(-1, 3));
            assert_eq!((r.gap_c, r.supsup), (Some(1), Some(2)));
        }
    }

    #[test]
    fn complete_profile() {
        let p = curvature_profile(&complete(4).unwrap()).unwrap();
        assert_eq!(p.records.len(), 6);
        assert!(p.records.iter().all(|r| r.kappa_lly == Rational::new(4, 3)));
        assert!(p.records.iter().all(|r| r.supsup.is_none() && r.gap_c == Some(2)));
    }

    #[test]
    fn edgeless_profile() {
        let p = curvature_profile(&Graph::empty(4)).unwrap();
        assert!(p.edgeless && p.records.is_empty());
    }

    #[test]
    fn serialized_keys() {
        let p = curvature_profile(&complete(2).unwrap()).unwrap();
        let json = serde_json::to_string(&p.records[0]).unwrap();
        assert_eq!(
            json,
            r#"{"u":0,"v":1,"du":1,"dv":1,"nxy":0,"kappa0":"0/1","kappaLLY":"2/1","gap_c":2,"supsup":null,"bone_idle":false}"#
        );
    }
}
