//! Exact integer linear algebra: Smith normal form, characteristic
//! polynomial, determinant and cokernel.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::matrix::IntMatrix;

/// Invariant factors `f_1 | f_2 | ... | f_r` followed by `zeros` zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SnfResult {
    pub factors: Vec<BigInt>,
    pub zeros: usize,
}

impl SnfResult {
    /// Normalizes a diagonal (any order, any sign) into Smith form.
    ///
    /// Entries are reduced pairwise to `(gcd, lcm)`, which restores the
    /// divisibility chain without changing the group they present.
    pub fn from_diagonal<T: Into<BigInt> + Clone>(diag: &[T]) -> Self {
        let mut factors: Vec<BigInt> = diag
            .iter()
            .map(|d| d.clone().into().abs())
            .filter(|d| !d.is_zero())
            .collect();
        let zeros = diag.len() - factors.len();
        for i in 0..factors.len() {
            for j in i + 1..factors.len() {
                if (&factors[j] % &factors[i]).is_zero() {
                    continue;
                }
                let g = factors[i].gcd(&factors[j]);
                let l = &factors[i] / &g * &factors[j];
                factors[i] = g;
                factors[j] = l;
            }
        }
        SnfResult { factors, zeros }
    }

    pub fn n(&self) -> usize {
        self.factors.len() + self.zeros
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// Full diagonal including trailing zeros.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let mut d = self.factors.clone();
        d.extend(std::iter::repeat_n(BigInt::zero(), self.zeros));
        d
    }

    /// Product of the nonzero invariant factors.
    pub fn product(&self) -> BigInt {
        self.factors.iter().product()
    }

    pub fn is_chain(&self) -> bool {
        self.factors.iter().all(|f| f.is_positive())
            && self.factors.windows(2).all(|w| (&w[1] % &w[0]).is_zero())
    }

    pub fn cokernel(&self) -> AbelianGroup {
        AbelianGroup {
            torsion: self
                .factors
                .iter()
                .filter(|f| !f.is_one())
                .cloned()
                .collect(),
            free_rank: self.zeros,
        }
    }
}

impl fmt::Display for SnfResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.diagonal().iter().map(|x| x.to_string()).collect();
        write!(f, "diag({})", parts.join(", "))
    }
}

/// `Z_{d_1} + ... + Z_{d_k} + Z^free_rank` with `d_1 | d_2 | ...`, each `>= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    pub torsion: Vec<BigInt>,
    pub free_rank: usize,
}

impl AbelianGroup {
    pub fn is_trivial(&self) -> bool {
        self.torsion.is_empty() && self.free_rank == 0
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("Z_{d}")).collect();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

fn to_rows(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    (0..m.n()).map(|i| m.row(i).to_vec()).collect()
}

fn min_abs_nonzero(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let n = a.len();
    let mut best: Option<(usize, usize)> = None;
    for i in t..n {
        for j in t..n {
            if a[i][j].is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| a[i][j].magnitude() < a[bi][bj].magnitude()) {
                best = Some((i, j));
                if a[i][j].magnitude().is_one() {
                    return best;
                }
            }
        }
    }
    best
}

/// Smith normal form by minimal-pivot Euclidean elimination.
///
/// Each stage moves the nonzero entry of least magnitude to the pivot and
/// clears its row and column with floor-division steps, re-pivoting on any
/// remainder. The diagonal is then normalized into a divisibility chain.
pub fn snf(m: &IntMatrix) -> SnfResult {
    let n = m.n();
    let mut a = to_rows(m);
    let mut diag: Vec<BigInt> = Vec::with_capacity(n);
    for t in 0..n {
        let Some((pi, pj)) = min_abs_nonzero(&a, t) else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..n {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                let (head, tail) = a.split_at_mut(i);
                let pivot_row = &head[t];
                for (x, p) in tail[0][t..].iter_mut().zip(&pivot_row[t..]) {
                    *x -= &q * p;
                }
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a[t..].iter_mut() {
                    let p = row[t].clone();
                    row[j] -= &q * p;
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
            // a remainder is now smaller than the pivot: move it in
            let mut best: Option<(usize, usize)> = None;
            for i in t + 1..n {
                if !a[i][t].is_zero()
                    && best.is_none_or(|(bi, bj)| a[i][t].magnitude() < a[bi][bj].magnitude())
                {
                    best = Some((i, t));
                }
            }
            for j in t + 1..n {
                if !a[t][j].is_zero()
                    && best.is_none_or(|(bi, bj)| a[t][j].magnitude() < a[bi][bj].magnitude())
                {
                    best = Some((t, j));
                }
            }
            let (bi, bj) = best.expect("unclean stage has a nonzero remainder");
            a.swap(t, bi);
            for row in a.iter_mut() {
                row.swap(t, bj);
            }
        }
        diag.push(a[t][t].clone());
    }
    diag.resize(n, BigInt::zero());
    SnfResult::from_diagonal(&diag)
}

pub fn rank(m: &IntMatrix) -> usize {
    snf(m).rank()
}

/// `coker(m)` read off the Smith normal form.
pub fn cokernel(m: &IntMatrix) -> AbelianGroup {
    snf(m).cokernel()
}

/// Exact integer polynomial, `coeffs[k]` is the coefficient of `x^k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPolynomial {
    pub coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// `sum_k |c_k| |x|^k`, the natural scale for a residual at `x`.
    pub fn abs_scale_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| {
            acc * x.abs() + c.abs().to_f64().unwrap_or(f64::INFINITY)
        })
    }

    /// Power sums `p_1..=p_count` of the roots (Newton's identities).
    ///
    /// Requires a monic polynomial, so every step stays in the integers.
    pub fn power_sums(&self, count: usize) -> Vec<BigInt> {
        assert!(self.is_monic(), "power sums need a monic polynomial");
        let n = self.degree();
        // a[i]: coefficient of x^(n-i)
        let a: Vec<&BigInt> = self.coeffs.iter().rev().collect();
        let mut p: Vec<BigInt> = Vec::with_capacity(count + 1);
        p.push(BigInt::from(n));
        for k in 1..=count {
            let mut s = BigInt::zero();
            for i in 1..k.min(n + 1) {
                s += a[i] * &p[k - i];
            }
            if k <= n {
                s += BigInt::from(k) * a[k];
            }
            p.push(-s);
        }
        p.split_off(1)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let coef = if mag.is_one() && k > 0 {
                String::new()
            } else {
                mag.to_string()
            };
            match k {
                0 => write!(f, "{coef}")?,
                1 => write!(f, "{coef}x")?,
                _ => write!(f, "{coef}x^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `det(xI - m)` by the division-free Berkowitz recurrence.
///
/// Growing the leading principal block one row at a time, the new
/// polynomial is a lower-triangular Toeplitz matrix applied to the previous
/// one; its first column is `1, -a, -R C, -R A C, -R A^2 C, ...` where `A`
/// is the current block, `C`/`R` the new column/row and `a` the new
/// diagonal entry.
pub fn charpoly(m: &IntMatrix) -> IntPolynomial {
    let n = m.n();
    // descending coefficients of the current block's polynomial
    let mut poly: Vec<BigInt> = vec![BigInt::one()];
    for r in 0..n {
        let mut col: Vec<BigInt> = Vec::with_capacity(r + 2);
        col.push(BigInt::one());
        col.push(-&m[(r, r)]);
        let mut v: Vec<BigInt> = (0..r).map(|i| m[(i, r)].clone()).collect();
        for k in 0..r {
            let dot: BigInt = (0..r).map(|j| &m[(r, j)] * &v[j]).sum();
            col.push(-dot);
            if k + 1 < r {
                v = (0..r)
                    .map(|i| (0..r).map(|j| &m[(i, j)] * &v[j]).sum())
                    .collect();
            }
        }
        let next: Vec<BigInt> = (0..r + 2)
            .map(|i| (0..=i.min(r)).map(|j| &col[i - j] * &poly[j]).sum())
            .collect();
        poly = next;
    }
    poly.reverse();
    IntPolynomial { coeffs: poly }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &IntMatrix) -> BigInt {
    let n = m.n();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = to_rows(m);
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn snf_of(rows: &[Vec<i64>]) -> SnfResult {
        snf(&IntMatrix::from_rows(rows))
    }

    fn expect(diag: &[i64]) -> SnfResult {
        SnfResult::from_diagonal(diag)
    }

    #[test]
    fn diag_two_three() {
        let s = snf_of(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(s, expect(&[1, 6]));
        assert!(s.is_chain());
    }

    #[test]
    fn zero_matrix() {
        let s = snf(&IntMatrix::zeros(3));
        assert_eq!((s.rank(), s.zeros), (0, 3));
        assert_eq!(cokernel(&IntMatrix::zeros(3)).free_rank, 3);
    }

    #[test]
    fn identity_cokernel_trivial() {
        assert!(cokernel(&IntMatrix::identity(4)).is_trivial());
        assert_eq!(cokernel(&IntMatrix::identity(4)).to_string(), "0");
    }

    #[test]
    fn from_diagonal_normalizes() {
        let s = SnfResult::from_diagonal(&[4i64, -6, 0, 1]);
        assert_eq!(
            s.factors,
            vec![BigInt::from(1), BigInt::from(2), BigInt::from(12)]
        );
        assert_eq!(s.zeros, 1);
        assert_eq!(s.to_string(), "diag(1, 2, 12, 0)");
    }

    #[test]
    fn charpoly_small() {
        assert_eq!(charpoly(&IntMatrix::zeros(1)).to_string(), "x");
        let k3 = IntMatrix::from_rows(&[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
        assert_eq!(charpoly(&k3).to_string(), "x^3 - 3x - 2");
        assert_eq!(charpoly(&IntMatrix::zeros(0)).to_string(), "1");
    }

    #[test]
    fn determinants() {
        let m = IntMatrix::from_rows(&[vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 9]]);
        assert_eq!(determinant(&m), BigInt::from(-3));
        let p = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(determinant(&p), BigInt::from(-1));
        assert_eq!(determinant(&IntMatrix::zeros(2)), BigInt::zero());
    }

    #[test]
    fn power_sums_of_k3() {
        let k3 = IntMatrix::from_rows(&[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
        // roots 2, -1, -1
        let p = charpoly(&k3).power_sums(4);
        let expected: Vec<BigInt> = [0, 6, 6, 18].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(p, expected);
    }

    #[test]
    fn group_display() {
        let g = SnfResult::from_diagonal(&[1i64, 1, 1, 7, 812, 0]).cokernel();
        assert_eq!(g.to_string(), "Z_7 + Z_812 + Z^1");
    }
}
