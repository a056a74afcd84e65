//! Dense square integer matrices and the graph matrix builders.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::distance::{distance_profile, DistanceProfile};
use crate::error::{Error, GraphError};
use crate::graph::Graph;

/// Dense `n x n` matrix of arbitrary-precision integers, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix {
            n,
            data: vec![BigInt::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n);
        for i in 0..n {
            m[(i, i)] = BigInt::from(1);
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let data = (0..n * n).map(|k| f(k / n, k % n)).collect();
        IntMatrix { n, data }
    }

    /// Panics if the rows are ragged or not square.
    pub fn from_rows<T: Into<BigInt> + Copy>(rows: &[Vec<T>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        IntMatrix::from_fn(n, |i, j| rows[i][j].into())
    }

    pub fn diagonal<T: Into<BigInt> + Copy>(diag: &[T]) -> Self {
        let mut m = IntMatrix::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = d.into();
        }
        m
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.data
    }

    pub fn is_symmetric(&self) -> bool {
        self.first_asymmetry().is_none()
    }

    pub(crate) fn first_asymmetry(&self) -> Option<(usize, usize)> {
        (0..self.n)
            .flat_map(|i| (i + 1..self.n).map(move |j| (i, j)))
            .find(|&(i, j)| self[(i, j)] != self[(j, i)])
    }

    pub fn transpose(&self) -> Self {
        IntMatrix::from_fn(self.n, |i, j| self[(j, i)].clone())
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| &self[(i, i)]).sum()
    }

    pub fn row_sums(&self) -> Vec<BigInt> {
        (0..self.n).map(|i| self.row(i).iter().sum()).collect()
    }

    /// `P M P^T` where vertex `i` moves to position `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let mut out = IntMatrix::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out[(perm[i], perm[j])] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Drops row and column `k`.
    pub fn minor_matrix(&self, k: usize) -> Self {
        let keep: Vec<usize> = (0..self.n).filter(|&i| i != k).collect();
        IntMatrix::from_fn(self.n - 1, |i, j| self[(keep[i], keep[j])].clone())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = IntMatrix::identity(self.n);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn max_abs(&self) -> BigInt {
        self.data.iter().map(|x| x.abs()).max().unwrap_or_default()
    }

    /// Lossy conversion for the numeric eigensolver.
    pub fn to_f64(&self) -> Vec<f64> {
        self.data
            .iter()
            .map(|x| x.to_f64().unwrap_or(f64::NAN))
            .collect()
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.n + j]
    }
}

impl<'a> Add for &'a IntMatrix {
    type Output = IntMatrix;
    fn add(self, rhs: &'a IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n);
        IntMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<'a> Sub for &'a IntMatrix {
    type Output = IntMatrix;
    fn sub(self, rhs: &'a IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n);
        IntMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl<'a> Mul for &'a IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &'a IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        IntMatrix::from_fn(n, |i, j| (0..n).map(|k| &self[(i, k)] * &rhs[(k, j)]).sum())
    }
}

impl Neg for &IntMatrix {
    type Output = IntMatrix;
    fn neg(self) -> IntMatrix {
        IntMatrix {
            n: self.n,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{}", self.n, self.n)?;
        for i in 0..self.n {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// The graph matrices. Declaration order is the report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MatrixKind {
    /// Adjacency.
    A,
    /// Laplacian `deg - A`.
    L,
    /// Signless Laplacian `deg + A`.
    Q,
    /// Distance.
    D,
    /// Distance Laplacian `tr - D`.
    DL,
    /// Distance signless Laplacian `tr + D`.
    DQ,
    /// Transmission-adjacency `tr - A`.
    Atr,
    /// Signless transmission-adjacency `tr + A`.
    AtrPlus,
    /// Degree-distance `deg - D`.
    Ddeg,
    /// Signless degree-distance `deg + D`.
    DdegPlus,
    /// Diagonal `tr - deg`.
    R,
}

impl MatrixKind {
    pub const ALL: [MatrixKind; 11] = [
        MatrixKind::A,
        MatrixKind::L,
        MatrixKind::Q,
        MatrixKind::D,
        MatrixKind::DL,
        MatrixKind::DQ,
        MatrixKind::Atr,
        MatrixKind::AtrPlus,
        MatrixKind::Ddeg,
        MatrixKind::DdegPlus,
        MatrixKind::R,
    ];

    /// Kinds compared in the classical census table.
    pub const CLASSICAL: [MatrixKind; 6] = [
        MatrixKind::A,
        MatrixKind::L,
        MatrixKind::Q,
        MatrixKind::D,
        MatrixKind::DL,
        MatrixKind::DQ,
    ];

    /// Transmission and degree-distance kinds.
    pub const TRANSMISSION: [MatrixKind; 4] = [
        MatrixKind::Ddeg,
        MatrixKind::DdegPlus,
        MatrixKind::Atr,
        MatrixKind::AtrPlus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MatrixKind::A => "A",
            MatrixKind::L => "L",
            MatrixKind::Q => "Q",
            MatrixKind::D => "D",
            MatrixKind::DL => "DL",
            MatrixKind::DQ => "DQ",
            MatrixKind::Atr => "Atr",
            MatrixKind::AtrPlus => "AtrPlus",
            MatrixKind::Ddeg => "Ddeg",
            MatrixKind::DdegPlus => "DdegPlus",
            MatrixKind::R => "R",
        }
    }

    /// Whether the matrix needs shortest-path distances.
    pub fn needs_distances(self) -> bool {
        !matches!(self, MatrixKind::A | MatrixKind::L | MatrixKind::Q)
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MatrixKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        MatrixKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown matrix kind {s:?}")))
    }
}

/// Builds `kind` for `g`, computing distances when needed.
pub fn build(g: &Graph, kind: MatrixKind) -> Result<IntMatrix, GraphError> {
    if kind.needs_distances() {
        let profile = distance_profile(g)?;
        Ok(build_with_profile(g, &profile, kind))
    } else {
        Ok(build_local(g, kind))
    }
}

fn build_local(g: &Graph, kind: MatrixKind) -> IntMatrix {
    let n = g.n();
    let adj = |i: usize, j: usize| i64::from(g.has_edge(i, j));
    let deg = |i: usize| i64::from(g.degree(i));
    IntMatrix::from_fn(n, |i, j| {
        let v = match kind {
            MatrixKind::A => adj(i, j),
            MatrixKind::L if i == j => deg(i),
            MatrixKind::L => -adj(i, j),
            MatrixKind::Q if i == j => deg(i),
            MatrixKind::Q => adj(i, j),
            _ => unreachable!("distance-based kind routed to local builder"),
        };
        BigInt::from(v)
    })
}

/// Builds `kind` from a precomputed profile of `g`.
pub fn build_with_profile(g: &Graph, p: &DistanceProfile, kind: MatrixKind) -> IntMatrix {
    if !kind.needs_distances() {
        return build_local(g, kind);
    }
    let n = g.n();
    debug_assert_eq!(p.n(), n);
    let adj = |i: usize, j: usize| i64::from(g.has_edge(i, j));
    let dist = |i: usize, j: usize| i64::from(p.dist(i, j));
    let tr = |i: usize| p.tr[i] as i64;
    let deg = |i: usize| i64::from(p.deg[i]);
    IntMatrix::from_fn(n, |i, j| {
        let diag = i == j;
        let v = match kind {
            MatrixKind::D => dist(i, j),
            MatrixKind::DL if diag => tr(i),
            MatrixKind::DL => -dist(i, j),
            MatrixKind::DQ if diag => tr(i),
            MatrixKind::DQ => dist(i, j),
            MatrixKind::Atr if diag => tr(i),
            MatrixKind::Atr => -adj(i, j),
            MatrixKind::AtrPlus if diag => tr(i),
            MatrixKind::AtrPlus => adj(i, j),
            MatrixKind::Ddeg if diag => deg(i),
            MatrixKind::Ddeg => -dist(i, j),
            MatrixKind::DdegPlus if diag => deg(i),
            MatrixKind::DdegPlus => dist(i, j),
            MatrixKind::R if diag => tr(i) - deg(i),
            MatrixKind::R => 0,
            MatrixKind::A | MatrixKind::L | MatrixKind::Q => unreachable!(),
        };
        BigInt::from(v)
    })
}

pub fn row_sums(m: &IntMatrix) -> Vec<BigInt> {
    m.row_sums()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn cricket_transmission_adjacency() {
        let m = build(&Graph::cricket(), MatrixKind::Atr).unwrap();
        let expected = IntMatrix::from_rows(&[
            vec![6, 0, 0, -1, -1],
            vec![0, 7, 0, 0, -1],
            vec![0, 0, 7, 0, -1],
            vec![-1, 0, 0, 6, -1],
            vec![-1, -1, -1, -1, 4],
        ]);
        assert_eq!(m, expected);
    }

    #[test]
    fn complete_graph_coincidences() {
        for n in 1..=7 {
            let k = Graph::complete(n).unwrap();
            let l = build(&k, MatrixKind::L).unwrap();
            assert_eq!(build(&k, MatrixKind::Atr).unwrap(), l);
            assert_eq!(build(&k, MatrixKind::Ddeg).unwrap(), l);
            let q = build(&k, MatrixKind::Q).unwrap();
            assert_eq!(build(&k, MatrixKind::AtrPlus).unwrap(), q);
            assert_eq!(build(&k, MatrixKind::DdegPlus).unwrap(), q);
        }
    }

    #[test]
    fn trivial_sizes() {
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(build(&k1, MatrixKind::D).unwrap(), IntMatrix::zeros(1));
    }

    #[test]
    fn row_sum_examples() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(
            row_sums(&build(&c5, MatrixKind::Atr).unwrap()),
            ints(&[4; 5])
        );
        assert_eq!(row_sums(&build(&c5, MatrixKind::L).unwrap()), ints(&[0; 5]));
        assert_eq!(
            row_sums(&build(&Graph::complete(4).unwrap(), MatrixKind::Atr).unwrap()),
            ints(&[0; 4])
        );
        assert_eq!(
            row_sums(&build(&c5, MatrixKind::DL).unwrap()),
            ints(&[0; 5])
        );
    }

    #[test]
    fn disconnected_distance_kinds_fail() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(build(&g, MatrixKind::Atr), Err(GraphError::NotConnected));
        assert_eq!(build(&g, MatrixKind::R), Err(GraphError::NotConnected));
        assert!(build(&g, MatrixKind::L).is_ok());
    }

    #[test]
    fn kind_names_round_trip() {
        for k in MatrixKind::ALL {
            assert_eq!(k.name().parse::<MatrixKind>().unwrap(), k);
        }
        assert!("atr".parse::<MatrixKind>().is_err());
    }

    #[test]
    fn matrix_algebra() {
        let m = IntMatrix::from_rows(&[vec![1, 2], vec![3, 4]]);
        assert_eq!(&m * &IntMatrix::identity(2), m);
        assert_eq!(m.trace(), BigInt::from(5));
        assert_eq!(m.pow(2), IntMatrix::from_rows(&[vec![7, 10], vec![15, 22]]));
        assert_eq!(m.transpose()[(0, 1)], BigInt::from(3));
        assert_eq!((&m - &m), IntMatrix::zeros(2));
        assert_eq!(m.minor_matrix(0), IntMatrix::from_rows(&[vec![4]]));
    }
}
