//! Formula-only Smith normal forms for complete graphs, stars and tree
//! distance matrices. Nothing here builds a matrix.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::linalg::SnfResult;
use crate::matrix::MatrixKind;

fn diag(entries: impl IntoIterator<Item = u64>) -> SnfResult {
    let d: Vec<BigInt> = entries.into_iter().map(BigInt::from).collect();
    SnfResult::from_diagonal(&d)
}

fn copies(value: u64, count: usize) -> impl Iterator<Item = u64> {
    std::iter::repeat_n(value, count)
}

/// Smith form of a matrix of `K_n`.
///
/// `L`, `Atr`, `Ddeg` coincide on `K_n`: `(1, n, ..., n, 0)` with `n - 2`
/// copies of `n`. `Q`, `AtrPlus`, `DdegPlus` coincide too:
/// `(1, n-2, ..., n-2, 2(n-1)(n-2))`. At `n = 2` the formulas give
/// `(1, 0)` for both families, which matches the 2x2 matrices directly.
pub fn snf_complete(kind: MatrixKind, n: usize) -> Result<SnfResult> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "complete-graph formula needs n >= 2, got {n}"
        )));
    }
    let m = n as u64;
    match kind {
        MatrixKind::L | MatrixKind::Atr | MatrixKind::Ddeg => Ok(diag(
            std::iter::once(1)
                .chain(copies(m, n - 2))
                .chain(std::iter::once(0)),
        )),
        MatrixKind::Q | MatrixKind::AtrPlus | MatrixKind::DdegPlus => Ok(diag(
            std::iter::once(1)
                .chain(copies(m - 2, n - 2))
                .chain(std::iter::once(2 * (m - 1) * (m - 2))),
        )),
        other => Err(Error::UnsupportedKind {
            kind: other.name(),
            what: "snf_complete",
        }),
    }
}

/// Smith form of the degree-distance matrices of the star `K_{m,1}`.
///
/// `DdegPlus`: `(1, ..., 1, 2m(m-1))`. `Ddeg`: `(1, 3, ..., 3, 2m(m-1))`
/// with `m - 1` threes when `3 | 2m + 1`, else `(1, 1, 3, ..., 3, 6m(m-1))`
/// with `m - 2` threes.
pub fn snf_star(kind: MatrixKind, leaves: usize) -> Result<SnfResult> {
    if leaves < 1 {
        return Err(Error::InvalidParameter(
            "star needs at least one leaf".into(),
        ));
    }
    let m = leaves as u64;
    match kind {
        MatrixKind::DdegPlus => Ok(diag(
            copies(1, leaves).chain(std::iter::once(2 * m * (m - 1))),
        )),
        MatrixKind::Ddeg if (2 * m + 1).is_multiple_of(3) => Ok(diag(
            std::iter::once(1)
                .chain(copies(3, leaves - 1))
                .chain(std::iter::once(2 * m * (m - 1))),
        )),
        MatrixKind::Ddeg => {
            // 2m + 1 not divisible by 3 forces m >= 2
            Ok(diag(
                copies(1, 2)
                    .chain(copies(3, leaves - 2))
                    .chain(std::iter::once(6 * m * (m - 1))),
            ))
        }
        other => Err(Error::UnsupportedKind {
            kind: other.name(),
            what: "snf_star",
        }),
    }
}

/// Smith form of the distance matrix of any tree on `order` vertices.
///
/// With `order = n + 1` and `n >= 2`: `I_2 + 2 I_{n-2} + (2n)`. For the
/// single edge the block form is not defined and the result is read from
/// `[[0, 1], [1, 0]]`: `(1, 1)`.
pub fn snf_tree_distance(order: usize) -> Result<SnfResult> {
    match order {
        0 | 1 => Err(Error::InvalidParameter(format!(
            "tree distance formula needs at least 2 vertices, got {order}"
        ))),
        2 => Ok(diag([1, 1])),
        _ => {
            let n = order - 1;
            Ok(diag(
                copies(1, 2)
                    .chain(copies(2, n - 2))
                    .chain(std::iter::once(2 * n as u64)),
            ))
        }
    }
}

/// `det D(T) = (-1)^n n 2^(n-1)` for a tree on `n + 1` vertices.
pub fn tree_distance_determinant(order: usize) -> Result<BigInt> {
    if order < 2 {
        return Err(Error::InvalidParameter(format!(
            "tree determinant needs at least 2 vertices, got {order}"
        )));
    }
    let n = order - 1;
    let magnitude = BigInt::from(n) * BigInt::from(2).pow(n as u32 - 1);
    Ok(if n.is_multiple_of(2) {
        magnitude
    } else {
        -magnitude
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn expect(d: &[u64]) -> SnfResult {
        SnfResult::from_diagonal(&d.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>())
    }

    #[test]
    fn complete_examples() {
        assert_eq!(
            snf_complete(MatrixKind::L, 4).unwrap(),
            expect(&[1, 4, 4, 0])
        );
        assert_eq!(
            snf_complete(MatrixKind::Q, 4).unwrap(),
            expect(&[1, 2, 2, 12])
        );
        assert_eq!(snf_complete(MatrixKind::Q, 2).unwrap(), expect(&[1, 0]));
        assert_eq!(snf_complete(MatrixKind::Atr, 2).unwrap(), expect(&[1, 0]));
        assert!(snf_complete(MatrixKind::D, 4).is_err());
        assert!(snf_complete(MatrixKind::L, 1).is_err());
    }

    #[test]
    fn star_examples() {
        assert_eq!(
            snf_star(MatrixKind::DdegPlus, 3).unwrap(),
            expect(&[1, 1, 1, 12])
        );
        assert_eq!(
            snf_star(MatrixKind::Ddeg, 4).unwrap(),
            expect(&[1, 3, 3, 3, 24])
        );
        assert_eq!(
            snf_star(MatrixKind::Ddeg, 3).unwrap(),
            expect(&[1, 1, 3, 36])
        );
        assert_eq!(snf_star(MatrixKind::Ddeg, 1).unwrap(), expect(&[1, 0]));
        assert!(snf_star(MatrixKind::Atr, 3).is_err());
    }

    #[test]
    fn tree_examples() {
        assert_eq!(snf_tree_distance(3).unwrap(), expect(&[1, 1, 4]));
        assert_eq!(snf_tree_distance(2).unwrap(), expect(&[1, 1]));
        assert_eq!(
            snf_tree_distance(8).unwrap(),
            expect(&[1, 1, 2, 2, 2, 2, 2, 14])
        );
        assert!(snf_tree_distance(1).is_err());
        assert_eq!(tree_distance_determinant(2).unwrap(), BigInt::from(-1));
        assert_eq!(tree_distance_determinant(3).unwrap(), BigInt::from(4));
    }
}
