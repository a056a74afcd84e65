//! All-pairs BFS distances with transmission and degree vectors.

use crate::error::GraphError;
use crate::graph::Graph;

/// Shortest-path data for a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceProfile {
    n: usize,
    dist: Vec<u32>,
    /// `tr[u]`: sum of distances from `u`.
    pub tr: Vec<u64>,
    pub deg: Vec<u32>,
}

impl DistanceProfile {
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn dist(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn dist_row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    /// Smallest transmission.
    pub fn min_transmission(&self) -> u64 {
        *self.tr.iter().min().expect("n >= 1")
    }

    pub fn max_transmission(&self) -> u64 {
        *self.tr.iter().max().expect("n >= 1")
    }

    pub fn min_degree(&self) -> u32 {
        *self.deg.iter().min().expect("n >= 1")
    }

    pub fn max_degree(&self) -> u32 {
        *self.deg.iter().max().expect("n >= 1")
    }

    /// `tr(u) - deg(u)` per vertex; never negative.
    pub fn excess(&self) -> Vec<u64> {
        self.tr
            .iter()
            .zip(&self.deg)
            .map(|(&t, &d)| t - u64::from(d))
            .collect()
    }

    pub fn wiener(&self) -> u64 {
        self.tr.iter().sum()
    }

    /// Transmissions weighted by degree.
    pub fn wiener_deg(&self) -> u64 {
        self.tr
            .iter()
            .zip(&self.deg)
            .map(|(&t, &d)| t * u64::from(d))
            .sum()
    }

    pub fn is_transmission_regular(&self) -> Option<u64> {
        let t = self.tr[0];
        self.tr.iter().all(|&x| x == t).then_some(t)
    }
}

/// BFS from every vertex. Fails on disconnected input.
pub fn distance_profile(g: &Graph) -> Result<DistanceProfile, GraphError> {
    let n = g.n();
    let mut dist = vec![0u32; n * n];
    let mut tr = vec![0u64; n];
    let full = crate::graph::row_mask(n);
    for s in 0..n {
        let row = &mut dist[s * n..(s + 1) * n];
        let mut seen = 1u64 << s;
        let mut frontier = seen;
        let mut level = 0u32;
        while frontier != 0 {
            level += 1;
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= g.row(v);
            }
            next &= !seen;
            seen |= next;
            frontier = next;
            let mut f = next;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                row[v] = level;
                tr[s] += u64::from(level);
            }
        }
        if seen != full {
            return Err(GraphError::NotConnected);
        }
    }
    Ok(DistanceProfile {
        n,
        dist,
        tr,
        deg: g.degrees(),
    })
}

/// `(W, W_deg)`: Wiener index and degree-weighted Wiener index.
pub fn wiener_indices(g: &Graph) -> Result<(u64, u64), GraphError> {
    let p = distance_profile(g)?;
    Ok((p.wiener(), p.wiener_deg()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_three() {
        let p = distance_profile(&Graph::path(3).unwrap()).unwrap();
        assert_eq!(p.tr, vec![3, 2, 3]);
        assert_eq!(p.deg, vec![1, 2, 1]);
        assert_eq!(p.dist(0, 2), 2);
        assert_eq!(wiener_indices(&Graph::path(3).unwrap()).unwrap(), (8, 10));
    }

    #[test]
    fn cycle_five() {
        let g = Graph::cycle(5).unwrap();
        let p = distance_profile(&g).unwrap();
        assert_eq!(p.tr, vec![6; 5]);
        assert_eq!(p.is_transmission_regular(), Some(6));
        assert_eq!(wiener_indices(&g).unwrap(), (30, 60));
    }

    #[test]
    fn complete() {
        for n in 1..=9u64 {
            let g = Graph::complete(n as usize).unwrap();
            let p = distance_profile(&g).unwrap();
            for u in 0..g.n() {
                for v in 0..g.n() {
                    assert_eq!(p.dist(u, v), u32::from(u != v));
                }
            }
            assert_eq!(p.tr, vec![n - 1; n as usize]);
            assert_eq!(
                wiener_indices(&g).unwrap(),
                (n * (n - 1), n * (n - 1) * (n - 1))
            );
        }
    }

    #[test]
    fn cricket_transmissions() {
        let p = distance_profile(&Graph::cricket()).unwrap();
        assert_eq!(p.tr, vec![6, 7, 7, 6, 4]);
        assert_eq!(p.excess(), vec![4, 6, 6, 4, 0]);
    }

    #[test]
    fn petersen_is_transmission_regular() {
        let p = distance_profile(&Graph::petersen()).unwrap();
        assert_eq!(p.is_transmission_regular(), Some(15));
    }

    #[test]
    fn disconnected() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(distance_profile(&g), Err(GraphError::NotConnected));
        assert_eq!(wiener_indices(&g), Err(GraphError::NotConnected));
    }
}
