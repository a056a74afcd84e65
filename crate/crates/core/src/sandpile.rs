//! The cone multigraph whose reduced Laplacian is the transmission-adjacency
//! matrix, and the sandpile group it carries.
//!
//! For a connected, non-complete `G`, add an apex `q` joined to each vertex
//! `v` by `tr(v) - deg(v)` parallel edges. The Laplacian of the result with
//! the apex row and column removed equals `tr(G) - A(G)`, so the Smith form
//! of that matrix presents the sandpile group of the cone, and the product
//! of its invariant factors counts the cone's spanning trees.

use num_bigint::BigInt;

use crate::distance::distance_profile;
use crate::error::GraphError;
use crate::graph::Graph;
use crate::linalg::{determinant, snf, AbelianGroup, SnfResult};
use crate::matrix::{build_with_profile, IntMatrix, MatrixKind};

/// Loopless multigraph stored as a symmetric multiplicity matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    mult: Vec<u64>,
}

impl Multigraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u64 {
        self.mult[u * self.n + v]
    }

    pub fn degree(&self, u: usize) -> u64 {
        self.mult[u * self.n..(u + 1) * self.n].iter().sum()
    }

    /// Degree diagonal minus multiplicities.
    pub fn laplacian(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, |i, j| {
            if i == j {
                BigInt::from(self.degree(i))
            } else {
                -BigInt::from(self.multiplicity(i, j))
            }
        })
    }
}

/// Cone over `g`; the apex is the last vertex, index `g.n()`.
pub fn cone_graph(g: &Graph) -> Result<Multigraph, GraphError> {
    let p = distance_profile(g)?;
    if g.is_complete() {
        return Err(GraphError::CompleteGraph);
    }
    let n = g.n() + 1;
    let apex = g.n();
    let mut mult = vec![0u64; n * n];
    for (u, v) in g.edges() {
        mult[u * n + v] = 1;
        mult[v * n + u] = 1;
    }
    for (v, e) in p.excess().into_iter().enumerate() {
        mult[v * n + apex] = e;
        mult[apex * n + v] = e;
    }
    Ok(Multigraph { n, mult })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sandpile {
    pub group: AbelianGroup,
    /// Spanning trees of the cone (not of `g`).
    pub spanning_trees: BigInt,
    pub snf: SnfResult,
}

/// Sandpile group of the cone over `g`, read from `snf(Atr(g))`.
pub fn sandpile_group(g: &Graph) -> Result<Sandpile, GraphError> {
    let p = distance_profile(g)?;
    if g.is_complete() {
        return Err(GraphError::CompleteGraph);
    }
    let s = snf(&build_with_profile(g, &p, MatrixKind::Atr));
    Ok(Sandpile {
        group: s.cokernel(),
        spanning_trees: s.product(),
        snf: s,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheck {
    pub ok: bool,
    pub diagnostics: Vec<String>,
}

/// Rebuilds the cone Laplacian independently and compares it with `Atr(g)`:
/// the apex reduction must equal `Atr(g)` entrywise, and `snf(L(H))` must be
/// `snf(Atr(g))` followed by a single zero.
pub fn cross_check(g: &Graph) -> CrossCheck {
    let mut diagnostics = Vec::new();
    let (cone, atr) = match (cone_graph(g), distance_profile(g)) {
        (Ok(c), Ok(p)) => (c, build_with_profile(g, &p, MatrixKind::Atr)),
        (Err(e), _) | (_, Err(e)) => {
            return CrossCheck {
                ok: false,
                diagnostics: vec![e.to_string()],
            };
        }
    };
    let lap = cone.laplacian();
    let reduced = lap.minor_matrix(cone.n() - 1);
    if reduced != atr {
        for i in 0..atr.n() {
            for j in 0..atr.n() {
                if reduced[(i, j)] != atr[(i, j)] {
                    diagnostics.push(format!(
                        "entry ({i}, {j}): reduced Laplacian {} vs Atr {}",
                        reduced[(i, j)],
                        atr[(i, j)]
                    ));
                }
            }
        }
    }
    let s_atr = snf(&atr);
    let s_lap = snf(&lap);
    let mut expected = s_atr.clone();
    expected.zeros += 1;
    if s_lap != expected {
        diagnostics.push(format!("snf(L(H)) = {s_lap}, expected {expected}"));
    }
    CrossCheck {
        ok: diagnostics.is_empty(),
        diagnostics,
    }
}

/// Determinant of `L(H)` with row and column `k` removed. Equal to the
/// spanning-tree count for every `k`.
pub fn reduced_determinant(cone: &Multigraph, k: usize) -> BigInt {
    determinant(&cone.laplacian().minor_matrix(k))
}
