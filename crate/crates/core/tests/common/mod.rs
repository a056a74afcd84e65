//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use graphinv::linalg::SnfResult;
use num_bigint::BigInt;
use num_integer::Integer;

pub fn laplace_det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut total = 0;
    for j in 0..n {
        if m[0][j] == 0 {
            continue;
        }
        let sub: Vec<Vec<i128>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect();
        let sign = if j % 2 == 0 { 1 } else { -1 };
        total += sign * m[0][j] * laplace_det(&sub);
    }
    total
}

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|s| s.count_ones() as usize == k)
        .map(|s| (0..n).filter(|&i| s >> i & 1 == 1).collect())
        .collect()
}

/// Smith form from `f_k = d_k / d_{k-1}`, with `d_k` the gcd of all
/// `k x k` minors.
pub fn minor_gcd_snf(m: &[Vec<i64>]) -> SnfResult {
    let n = m.len();
    let mut divisors = vec![1i128];
    for k in 1..=n {
        let mut g = 0i128;
        for rows in subsets(n, k) {
            for cols in subsets(n, k) {
                let sub: Vec<Vec<i128>> = rows
                    .iter()
                    .map(|&r| cols.iter().map(|&c| i128::from(m[r][c])).collect())
                    .collect();
                g = g.gcd(&laplace_det(&sub));
            }
        }
        if g == 0 {
            break;
        }
        divisors.push(g);
    }
    let factors: Vec<BigInt> = divisors
        .windows(2)
        .map(|w| BigInt::from(w[1] / w[0]))
        .collect();
    SnfResult {
        zeros: n - factors.len(),
        factors,
    }
}

/// `det(xI - M)` by cofactor expansion at an integer point.
pub fn charpoly_at(m: &[Vec<i64>], x: i64) -> i128 {
    let n = m.len();
    let shifted: Vec<Vec<i128>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| i128::from(if i == j { x - m[i][j] } else { -m[i][j] }))
                .collect()
        })
        .collect();
    laplace_det(&shifted)
}
