//! Exact algebra against independent oracles: determinantal divisors for
//! the Smith form, cofactor expansion for characteristic polynomials.

use graphinv::linalg::{charpoly, determinant, snf, SnfResult};
use graphinv::matrix::{build, IntMatrix, MatrixKind};
use graphinv::Graph;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

mod common;
use common::{charpoly_at, laplace_det, minor_gcd_snf};

fn to_matrix(rows: &[Vec<i64>]) -> IntMatrix {
    IntMatrix::from_rows(rows)
}

fn square(max_n: usize, range: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_n)
        .prop_flat_map(move |n| prop::collection::vec(prop::collection::vec(-range..=range, n), n))
}

/// Random unimodular matrix as a product of elementary row operations.
fn unimodular(n: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec((0..n, 0..n, -3i64..=3, any::<bool>()), 0..12).prop_map(move |ops| {
        let mut u = IntMatrix::identity(n);
        for (i, j, c, swap) in ops {
            if swap {
                let p: Vec<usize> = (0..n)
                    .map(|k| {
                        if k == i {
                            j
                        } else if k == j {
                            i
                        } else {
                            k
                        }
                    })
                    .collect();
                u = IntMatrix::from_fn(n, |r, col| u[(p[r], col)].clone());
            } else if i != j {
                for col in 0..n {
                    let add = &u[(j, col)] * c;
                    u[(i, col)] += add;
                }
            }
        }
        u
    })
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n).unwrap();
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn connected_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    graph_strategy(max_n).prop_filter("connected", Graph::is_connected)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn snf_matches_minor_gcds(rows in square(5, 6)) {
        prop_assert_eq!(snf(&to_matrix(&rows)), minor_gcd_snf(&rows));
    }

    #[test]
    fn snf_is_divisibility_chain(rows in square(6, 20)) {
        let s = snf(&to_matrix(&rows));
        prop_assert!(s.is_chain());
        prop_assert!(s.factors.iter().all(|f| f.is_positive()));
        prop_assert_eq!(s.factors.len() + s.zeros, rows.len());
    }

    #[test]
    fn snf_ignores_sign(rows in square(6, 20)) {
        let m = to_matrix(&rows);
        prop_assert_eq!(snf(&-&m), snf(&m));
    }

    #[test]
    fn snf_unimodular_invariance((rows, u, v) in square(5, 9).prop_flat_map(|r| {
        let n = r.len();
        (Just(r), unimodular(n), unimodular(n))
    })) {
        let m = to_matrix(&rows);
        prop_assert_eq!(determinant(&u).abs(), BigInt::from(1));
        prop_assert_eq!(snf(&(&(&u * &m) * &v)), snf(&m));
    }

    #[test]
    fn determinant_matches_cofactor(rows in square(6, 9)) {
        let wide: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| i128::from(x)).collect()).collect();
        prop_assert_eq!(determinant(&to_matrix(&rows)), BigInt::from(laplace_det(&wide)));
    }

    #[test]
    fn determinant_is_snf_product_up_to_sign(rows in square(6, 9)) {
        let m = to_matrix(&rows);
        let s = snf(&m);
        let det = determinant(&m);
        if s.zeros > 0 {
            prop_assert!(det.is_zero());
        } else {
            prop_assert_eq!(det.abs(), s.product());
        }
    }

    #[test]
    fn charpoly_matches_cofactor(rows in square(5, 9)) {
        let n = rows.len();
        let p = charpoly(&to_matrix(&rows));
        prop_assert_eq!(p.degree(), n);
        prop_assert!(p.is_monic());
        // n + 1 points pin a degree-n polynomial
        for x in -(n as i64)..=1 {
            prop_assert_eq!(p.eval(&BigInt::from(x)), BigInt::from(charpoly_at(&rows, x)));
        }
    }

    #[test]
    fn newton_traces(rows in square(6, 7)) {
        let m = to_matrix(&rows);
        let sums = charpoly(&m).power_sums(4);
        let mut power = m.clone();
        for (k, s) in sums.iter().enumerate() {
            prop_assert_eq!(s, &power.trace(), "k = {}", k + 1);
            power = &power * &m;
        }
    }

    #[test]
    fn graph_matrices_permutation_invariant(
        (g, perm) in connected_strategy(7).prop_flat_map(|g| {
            let n = g.n();
            (Just(g), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
        })
    ) {
        let h = g.permute(&perm);
        for kind in MatrixKind::ALL {
            let a = build(&g, kind).unwrap();
            let b = build(&h, kind).unwrap();
            prop_assert_eq!(snf(&a), snf(&b), "{}", kind);
            prop_assert_eq!(charpoly(&a), charpoly(&b), "{}", kind);
        }
    }

    #[test]
    fn graph_matrices_symmetric(g in connected_strategy(8)) {
        for kind in MatrixKind::ALL {
            prop_assert!(build(&g, kind).unwrap().is_symmetric());
        }
    }
}

#[test]
fn oracle_sanity() {
    assert_eq!(
        minor_gcd_snf(&[vec![2, 4], vec![6, 8]]),
        SnfResult::from_diagonal(&[2, 4])
    );
    assert_eq!(
        minor_gcd_snf(&[vec![0, 0], vec![0, 0]]),
        SnfResult::from_diagonal(&[0, 0])
    );
    assert_eq!(
        laplace_det(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]),
        -3
    );
}

#[test]
fn laplacian_charpoly_of_complete() {
    // spectrum of L(K_n) is {0, n^(n-1)}, so the polynomial is x (x - n)^(n-1)
    for n in 1..=6usize {
        let p = charpoly(&build(&Graph::complete(n).unwrap(), MatrixKind::L).unwrap());
        for x in -3i64..=8 {
            let expected = BigInt::from(x) * BigInt::from(x - n as i64).pow(n as u32 - 1);
            assert_eq!(p.eval(&BigInt::from(x)), expected, "n = {n}, x = {x}");
        }
    }
}
