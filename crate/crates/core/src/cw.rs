//! Combinatorial skeletons of Cameron-Walker graphs and explicit realizations
//! of achievable `(depth, dim)` points.
//!
//! A skeleton is a bipartite core with `m` vertices on one side, each carrying
//! `s_i >= 1` leaves, and `p` vertices on the other side, each carrying
//! `t_j >= 0` pendant triangles. Built graphs always use the complete
//! bipartite core `K_{m,p}`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lattice::LatticePoint2;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CwStructure {
    /// Leaf counts, one per vertex on the leafed side of the core.
    #[serde(rename = "s")]
    pub leaves: Vec<usize>,
    /// Pendant-triangle counts, one per vertex on the other side.
    #[serde(rename = "t")]
    pub triangles: Vec<usize>,
}

impl CwStructure {
    pub fn new(leaves: Vec<usize>, triangles: Vec<usize>) -> Result<Self> {
        let cw = Self { leaves, triangles };
        cw.validate()?;
        Ok(cw)
    }

    pub fn validate(&self) -> Result<()> {
        if self.leaves.is_empty() {
            return Err(Error::InvalidStructure("m must be at least 1".into()));
        }
        if self.triangles.is_empty() {
            return Err(Error::InvalidStructure("p must be at least 1".into()));
        }
        if let Some(i) = self.leaves.iter().position(|&s| s == 0) {
            return Err(Error::InvalidStructure(format!(
                "core vertex u{i} has no leaf"
            )));
        }
        Ok(())
    }

    /// `m`
    pub fn leafed_side(&self) -> usize {
        self.leaves.len()
    }

    /// `p`
    pub fn triangle_side(&self) -> usize {
        self.triangles.len()
    }

    /// `m + p + Σ s_i + 2 Σ t_j`
    pub fn vertex_count(&self) -> usize {
        self.leafed_side()
            + self.triangle_side()
            + self.leaves.iter().sum::<usize>()
            + 2 * self.triangles.iter().sum::<usize>()
    }

    /// Vertices `0..m` are the leafed core side, `m..m+p` the other side, then
    /// leaves grouped by core vertex, then triangle pairs grouped by core vertex.
    pub fn build_graph(&self) -> Result<Graph> {
        self.validate()?;
        let (m, p) = (self.leafed_side(), self.triangle_side());
        let mut g = Graph::new(self.vertex_count());
        for u in 0..m {
            for v in m..m + p {
                g.add_edge(u, v)?;
            }
        }
        let mut next = m + p;
        for (u, &s) in self.leaves.iter().enumerate() {
            for _ in 0..s {
                g.add_edge(u, next)?;
                next += 1;
            }
        }
        for (j, &t) in self.triangles.iter().enumerate() {
            let v = m + j;
            for _ in 0..t {
                let (w0, w1) = (next, next + 1);
                g.add_edge(v, w0)?;
                g.add_edge(v, w1)?;
                g.add_edge(w0, w1)?;
                next += 2;
            }
        }
        Ok(g)
    }
}

fn join(v: &[usize]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for CwStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "m={} p={} s={} t={}",
            self.leafed_side(),
            self.triangle_side(),
            join(&self.leaves),
            join(&self.triangles)
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RealizationKind {
    /// `(b, b)`: Cohen-Macaulay, every `s_i = t_j = 1`.
    CmDiagonal,
    Depth2DimNMinus2,
    Depth2DimNMinus3,
    Depth2DimHalf,
    Unsupported,
}

impl fmt::Display for RealizationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RealizationKind::CmDiagonal => "CM_diagonal",
            RealizationKind::Depth2DimNMinus2 => "depth2_dim_n_minus_2",
            RealizationKind::Depth2DimNMinus3 => "depth2_dim_n_minus_3",
            RealizationKind::Depth2DimHalf => "depth2_dim_half",
            RealizationKind::Unsupported => "unsupported",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Realization {
    pub kind: RealizationKind,
    pub structure: Option<CwStructure>,
}

impl Realization {
    fn found(kind: RealizationKind, leaves: Vec<usize>, triangles: Vec<usize>) -> Self {
        Self {
            kind,
            structure: Some(CwStructure { leaves, triangles }),
        }
    }

    fn unsupported() -> Self {
        Self {
            kind: RealizationKind::Unsupported,
            structure: None,
        }
    }

    pub fn is_supported(&self) -> bool {
        self.structure.is_some()
    }
}

/// Builds a CW skeleton on `n` vertices with the given `(depth, dim)`, for the
/// points whose realizing graphs are characterized: the Cohen-Macaulay
/// diagonal and the three depth-2 families. Everything else (notably the
/// `3 <= depth < dim` region) is [`RealizationKind::Unsupported`].
pub fn realize(n: i64, point: LatticePoint2) -> Result<Realization> {
    if n < 5 {
        return Err(Error::Domain {
            what: "realization",
            n,
            requirement: ">= 5",
        });
    }
    let LatticePoint2 { depth, dim } = point;
    let count = |x: i64| usize::try_from(x).expect("checked positive");

    // Checked first so that (2, 2) at n = 5 resolves here.
    if depth == dim && 3 * dim > n && 2 * dim < n {
        // b = m + p and n = 2m + 3p when every s_i = t_j = 1
        let m = count(3 * dim - n);
        let p = count(n - 2 * dim);
        return Ok(Realization::found(
            RealizationKind::CmDiagonal,
            vec![1; m],
            vec![1; p],
        ));
    }
    if depth != 2 {
        return Ok(Realization::unsupported());
    }
    if dim == n - 2 {
        let rest = count(n - 3);
        return Ok(Realization::found(
            RealizationKind::Depth2DimNMinus2,
            vec![rest.div_ceil(2), rest / 2],
            vec![0],
        ));
    }
    if dim == n - 3 {
        return Ok(Realization::found(
            RealizationKind::Depth2DimNMinus3,
            vec![count(n - 4)],
            vec![1],
        ));
    }
    if n % 2 == 1 && n >= 7 && 2 * dim == n - 1 {
        return Ok(Realization::found(
            RealizationKind::Depth2DimHalf,
            vec![1],
            vec![count((n - 3) / 2)],
        ));
    }
    Ok(Realization::unsupported())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{induced_matching_number, is_cameron_walker, matching_number};

    fn pt(depth: i64, dim: i64) -> LatticePoint2 {
        LatticePoint2 { depth, dim }
    }

    #[test]
    fn build_examples() {
        let cw = CwStructure::new(vec![1], vec![1]).unwrap();
        let g = cw.build_graph().unwrap();
        assert_eq!(g.vertex_count(), 5);
        let edges: Vec<_> = g.edges().collect();
        // u0=0 v0=1 leaf=2 triangle=3,4
        assert_eq!(edges, vec![(0, 1), (0, 2), (1, 3), (1, 4), (3, 4)]);

        let cw = CwStructure::new(vec![1, 1], vec![0]).unwrap();
        let g = cw.build_graph().unwrap();
        assert_eq!(g.vertex_count(), 5);
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, vec![(0, 2), (0, 3), (1, 2), (1, 4)]);

        assert!(CwStructure::new(vec![0], vec![0]).is_err());
        assert!(CwStructure::new(vec![], vec![0]).is_err());
        assert!(CwStructure::new(vec![1], vec![]).is_err());
        let raw = CwStructure {
            leaves: vec![0],
            triangles: vec![0],
        };
        assert!(raw.build_graph().is_err());
    }

    #[test]
    fn built_graphs_have_equal_matchings() {
        let cw = CwStructure::new(vec![2, 1], vec![1, 0, 2]).unwrap();
        let g = cw.build_graph().unwrap();
        assert_eq!(g.vertex_count(), 2 + 3 + 3 + 6);
        assert!(g.is_connected());
        assert_eq!(
            matching_number(&g).unwrap(),
            induced_matching_number(&g).unwrap()
        );
        assert!(is_cameron_walker(&g).unwrap());
    }

    #[test]
    fn realize_examples() {
        let r = realize(10, pt(4, 4)).unwrap();
        assert_eq!(r.kind, RealizationKind::CmDiagonal);
        assert_eq!(
            r.structure.as_ref().unwrap().to_string(),
            "m=2 p=2 s=1,1 t=1,1"
        );

        let r = realize(10, pt(2, 8)).unwrap();
        assert_eq!(r.kind, RealizationKind::Depth2DimNMinus2);
        assert_eq!(
            r.structure.unwrap(),
            CwStructure {
                leaves: vec![4, 3],
                triangles: vec![0]
            }
        );

        let r = realize(11, pt(2, 5)).unwrap();
        assert_eq!(r.kind, RealizationKind::Depth2DimHalf);
        assert_eq!(
            r.structure.unwrap(),
            CwStructure {
                leaves: vec![1],
                triangles: vec![4]
            }
        );

        let r = realize(9, pt(2, 6)).unwrap();
        assert_eq!(r.kind, RealizationKind::Depth2DimNMinus3);
        assert_eq!(r.structure.unwrap().vertex_count(), 9);
    }

    #[test]
    fn realize_prefers_diagonal_at_five() {
        let r = realize(5, pt(2, 2)).unwrap();
        assert_eq!(r.kind, RealizationKind::CmDiagonal);
        assert_eq!(
            r.structure.unwrap(),
            CwStructure {
                leaves: vec![1],
                triangles: vec![1]
            }
        );
    }

    #[test]
    fn realize_rejects_the_rest() {
        assert!(!realize(12, pt(3, 5)).unwrap().is_supported());
        assert!(!realize(12, pt(4, 4)).unwrap().is_supported());
        assert!(!realize(10, pt(2, 4)).unwrap().is_supported());
        assert!(matches!(realize(4, pt(2, 2)), Err(Error::Domain { .. })));
    }
}
