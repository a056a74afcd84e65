//! Simple undirected graphs stored as adjacency bitrows.

use std::fmt;

use crate::error::GraphError;

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

/// A simple undirected graph on vertices `0..n`.
///
/// Row `u` of the adjacency has bit `v` set iff `u ~ v`. The rows are kept
/// symmetric with clear diagonal bits.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::VertexCount(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw bitrows, checking symmetry and the diagonal.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self, GraphError> {
        let n = rows.len();
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::VertexCount(n));
        }
        let mask = row_mask(n);
        for (u, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(GraphError::Malformed(format!(
                    "row {u} has bits beyond vertex {n}"
                )));
            }
            if row >> u & 1 == 1 {
                return Err(GraphError::Malformed(format!("self-loop at vertex {u}")));
            }
            let mut rest = row;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if rows[v] >> u & 1 == 0 {
                    return Err(GraphError::Malformed(format!("asymmetric edge {u}-{v}")));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n || v >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: u.max(v),
                n: self.n,
            });
        }
        if u == v {
            return Err(GraphError::Malformed(format!("self-loop at vertex {u}")));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn row(&self, u: usize) -> u64 {
        self.adj[u]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, u: usize) -> u32 {
        self.adj[u].count_ones()
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.adj.iter().map(|r| r.count_ones()).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            let mut rest = self.adj[u] & !((2u64 << u).wrapping_sub(1)) & row_mask(self.n);
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some((u, v))
            })
        })
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> {
        let mut rest = self.adj[u];
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(v)
        })
    }

    pub fn is_connected(&self) -> bool {
        let full = row_mask(self.n);
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen & full == full
    }

    /// Returns `Ok(())` if connected, otherwise [`GraphError::NotConnected`].
    pub fn require_connected(&self) -> Result<(), GraphError> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(GraphError::NotConnected)
        }
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|u| self.degree(u) as usize == self.n - 1)
    }

    /// Relabels vertices: vertex `v` of `self` becomes vertex `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        let mut adj = vec![0u64; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        Graph { n: self.n, adj }
    }

    /// Number of unordered triples inducing a triangle.
    pub fn triangle_count(&self) -> u64 {
        let mut count = 0u64;
        for (u, v) in self.edges() {
            // w > v keeps each triangle once
            let above = !((2u64 << v).wrapping_sub(1));
            count += u64::from((self.adj[u] & self.adj[v] & above).count_ones());
        }
        count
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        let mask = row_mask(n);
        for u in 0..n {
            g.adj[u] = mask & !(1 << u);
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::Malformed(format!(
                "cycle needs at least 3 vertices, got {n}"
            )));
        }
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges)
    }

    /// Star `K_{m,1}`: center is vertex `m`, leaves `0..m`.
    pub fn star(leaves: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (0..leaves).map(|v| (v, leaves)).collect();
        Graph::from_edges(leaves + 1, &edges)
    }

    /// The cricket: a triangle with two pendant vertices on one corner.
    ///
    /// Labels follow the usual figure: vertex `4` (the shared corner) is
    /// adjacent to all others, `0`-`3` closes the triangle, `1` and `2` are
    /// pendants.
    pub fn cricket() -> Self {
        Graph::from_edges(5, &[(0, 3), (0, 4), (1, 4), (2, 4), (3, 4)]).expect("static graph")
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).expect("static graph")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[inline]
pub(crate) fn row_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangles() {
        assert_eq!(Graph::complete(4).unwrap().triangle_count(), 4);
        assert_eq!(Graph::cycle(5).unwrap().triangle_count(), 0);
        assert_eq!(Graph::cricket().triangle_count(), 1);
        assert_eq!(Graph::complete(6).unwrap().triangle_count(), 20);
    }

    #[test]
    fn connectivity() {
        assert!(Graph::path(7).unwrap().is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
        assert!(!Graph::empty(2).unwrap().is_connected());
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        assert_eq!(g.require_connected(), Err(GraphError::NotConnected));
    }

    #[test]
    fn rejects_bad_rows() {
        assert!(Graph::from_rows(vec![0b10, 0b00]).is_err());
        assert!(Graph::from_rows(vec![0b01]).is_err());
        assert!(Graph::from_rows(vec![]).is_err());
        assert!(Graph::from_rows(vec![0b10, 0b01]).is_ok());
    }

    #[test]
    fn sixty_four_vertices() {
        let g = Graph::complete(64).unwrap();
        assert_eq!(g.edge_count(), 64 * 63 / 2);
        assert!(Graph::empty(65).is_err());
        let p = Graph::path(64).unwrap();
        assert!(p.is_connected());
        assert_eq!(p.edges().count(), 63);
    }

    #[test]
    fn permute_preserves_edges() {
        let g = Graph::cricket();
        let h = g.permute(&[4, 3, 2, 1, 0]);
        assert_eq!(h.edge_count(), g.edge_count());
        assert!(h.has_edge(0, 1));
        assert_eq!(h.degree(0), 4);
    }

    #[test]
    fn petersen_is_cubic() {
        let p = Graph::petersen();
        assert!(p.degrees().iter().all(|&d| d == 3));
        assert_eq!(p.edge_count(), 15);
        assert_eq!(p.triangle_count(), 0);
    }
}
