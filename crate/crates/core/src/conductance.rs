//! Edge-boundary conductance by exhaustive subset search.

use num_rational::Ratio;

use crate::error::GraphError;
use crate::graph::Graph;

pub const MAX_CONDUCTANCE_ORDER: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conductance {
    /// `min |∂S| / |S|` over nonempty `S` with `|S| <= n/2`.
    pub value: Ratio<u64>,
    /// A minimizing set, ascending. The first minimizer in subset-mask order.
    pub witness: Vec<usize>,
}

pub fn conductance(g: &Graph) -> Result<Conductance, GraphError> {
    let n = g.n();
    if n > MAX_CONDUCTANCE_ORDER {
        return Err(GraphError::ConductanceTooLarge {
            n,
            max: MAX_CONDUCTANCE_ORDER,
        });
    }
    if n < 2 {
        return Err(GraphError::ConductanceTooSmall);
    }
    g.require_connected()?;
    let half = n / 2;
    // (boundary, size, mask)
    let mut best: Option<(u64, u64, u64)> = None;
    for mask in 1u64..1 << n {
        let size = u64::from(mask.count_ones());
        if size as usize > half {
            continue;
        }
        let mut boundary = 0u64;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            boundary += u64::from((g.row(v) & !mask).count_ones());
        }
        let better = match best {
            None => true,
            Some((b, s, _)) => boundary * s < b * size,
        };
        if better {
            best = Some((boundary, size, mask));
        }
    }
    let (boundary, size, mask) = best.expect("n >= 2 admits a singleton");
    let witness = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
    Ok(Conductance {
        value: Ratio::new(boundary, size),
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let k2 = conductance(&Graph::complete(2).unwrap()).unwrap();
        assert_eq!(k2.value, Ratio::from_integer(1));
        assert_eq!(k2.witness.len(), 1);

        let c4 = conductance(&Graph::cycle(4).unwrap()).unwrap();
        assert_eq!(c4.value, Ratio::from_integer(1));
        assert_eq!(c4.witness, vec![0, 1]);
    }

    #[test]
    fn complete_graphs() {
        // brute-force oracle: min over k <= n/2 of k(n-k)/k = n - k, so ceil(n/2)
        for n in 2..=8u64 {
            let c = conductance(&Graph::complete(n as usize).unwrap()).unwrap();
            let brute = (1..=n / 2)
                .map(|k| Ratio::new(k * (n - k), k))
                .min()
                .unwrap();
            assert_eq!(c.value, brute);
            assert_eq!(c.value, Ratio::from_integer(n.div_ceil(2)));
        }
    }

    #[test]
    fn limits() {
        assert_eq!(
            conductance(&Graph::path(21).unwrap()),
            Err(GraphError::ConductanceTooLarge { n: 21, max: 20 })
        );
        assert_eq!(
            conductance(&Graph::empty(1).unwrap()),
            Err(GraphError::ConductanceTooSmall)
        );
        let disconnected = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(conductance(&disconnected), Err(GraphError::NotConnected));
    }

    #[test]
    fn path_is_cut_in_the_middle() {
        let c = conductance(&Graph::path(6).unwrap()).unwrap();
        assert_eq!(c.value, Ratio::new(1, 3));
        assert_eq!(c.witness, vec![0, 1, 2]);
    }
}
