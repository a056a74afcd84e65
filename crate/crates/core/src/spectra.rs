//! Floating-point spectra and the eigenvalue inequalities for the
//! transmission-adjacency and degree-distance matrices.
//!
//! Every check returns a [`BoundReport`]; a check holds when
//! `left <= right + tol`. Equality identities are reported as the maximum
//! absolute deviation (left) against zero (right).

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::conductance::conductance;
use crate::distance::distance_profile;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::{build_with_profile, IntMatrix, MatrixKind};

/// Ascending eigenvalues of a symmetric matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    pub tol: f64,
}

impl Spectrum {
    /// `λ_i`, 1-based.
    pub fn lambda(&self, i: usize) -> f64 {
        self.eigenvalues[i - 1]
    }

    pub fn min(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn max(&self) -> f64 {
        *self.eigenvalues.last().expect("non-empty spectrum")
    }
}

/// Cyclic Jacobi rotations until the off-diagonal Frobenius mass drops
/// below `tol^2`.
pub fn eigenvalues_symmetric(m: &IntMatrix, tol: f64) -> Result<Spectrum> {
    if let Some((row, col)) = m.first_asymmetry() {
        return Err(Error::NotSymmetric { row, col });
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let n = m.n();
    let mut a = m.to_f64();
    let off = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i * n + j] * a[i * n + j];
                }
            }
        }
        s
    };
    let target = tol * tol;
    for _sweep in 0..100 {
        if off(&a) < target {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
    }
    let mut eigenvalues: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eigenvalues.sort_by(f64::total_cmp);
    Ok(Spectrum { eigenvalues, tol })
}

/// Default absolute tolerance: `1e-9 * (1 + max |entry|)`.
pub fn default_tol(m: &IntMatrix) -> f64 {
    1e-9 * (1.0 + m.max_abs().to_f64().unwrap_or(f64::MAX))
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundCheck {
    pub name: String,
    pub left: f64,
    pub right: f64,
    /// `right - left`.
    pub slack: f64,
    pub holds: bool,
}

impl BoundCheck {
    pub fn new(name: impl Into<String>, left: f64, right: f64, tol: f64) -> Self {
        BoundCheck {
            name: name.into(),
            left,
            right,
            slack: right - left,
            holds: left <= right + tol,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct BoundReport {
    pub checks: Vec<BoundCheck>,
    /// Identities that did not apply to this graph, with the reason.
    pub not_applicable: Vec<String>,
}

impl BoundReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &BoundCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }

    fn push(&mut self, check: BoundCheck) {
        self.checks.push(check);
    }
}

struct Spectra {
    a: Spectrum,
    d: Spectrum,
    atr: Spectrum,
    ddeg: Spectrum,
}

fn spectra_of(g: &Graph, tol: f64) -> Result<(crate::distance::DistanceProfile, Spectra)> {
    let p = distance_profile(g)?;
    let eig = |k| eigenvalues_symmetric(&build_with_profile(g, &p, k), tol);
    let s = Spectra {
        a: eig(MatrixKind::A)?,
        d: eig(MatrixKind::D)?,
        atr: eig(MatrixKind::Atr)?,
        ddeg: eig(MatrixKind::Ddeg)?,
    };
    Ok((p, s))
}

/// The four extreme-eigenvalue inequalities obtained from
/// `λ_1(M - N) >= λ_1(M) - λ_n(N)` and `λ_n(M - N) <= λ_n(M) - λ_1(N)`.
pub fn check_extreme_bounds(g: &Graph, tol: f64) -> Result<BoundReport> {
    let (p, s) = spectra_of(g, tol)?;
    let theta = p.min_transmission() as f64;
    let big_theta = p.max_transmission() as f64;
    let delta = f64::from(p.min_degree());
    let big_delta = f64::from(p.max_degree());
    let mut r = BoundReport::default();
    r.push(BoundCheck::new(
        "lambda_1(Atr) >= theta - lambda_n(A)",
        theta - s.a.max(),
        s.atr.min(),
        tol,
    ));
    r.push(BoundCheck::new(
        "lambda_1(Ddeg) >= delta - lambda_n(D)",
        delta - s.d.max(),
        s.ddeg.min(),
        tol,
    ));
    r.push(BoundCheck::new(
        "lambda_n(Atr) <= Theta - lambda_1(A)",
        s.atr.max(),
        big_theta - s.a.min(),
        tol,
    ));
    r.push(BoundCheck::new(
        "lambda_n(Ddeg) <= Delta - lambda_1(D)",
        s.ddeg.max(),
        big_delta - s.d.min(),
        tol,
    ));
    Ok(r)
}

/// Weyl bounds from `Atr = L + R`:
/// `λ_i(L) + min(tr - deg) <= λ_i(Atr) <= λ_i(L) + max(tr - deg)`.
pub fn check_weyl_sandwich(g: &Graph, i: usize, tol: f64) -> Result<BoundReport> {
    let n = g.n();
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    let p = distance_profile(g)?;
    let l = eigenvalues_symmetric(&build_with_profile(g, &p, MatrixKind::L), tol)?;
    let atr = eigenvalues_symmetric(&build_with_profile(g, &p, MatrixKind::Atr), tol)?;
    Ok(weyl_report(&l, &atr, &p.excess(), i, tol))
}

fn weyl_report(l: &Spectrum, atr: &Spectrum, excess: &[u64], i: usize, tol: f64) -> BoundReport {
    let r_min = *excess.iter().min().expect("n >= 1") as f64;
    let r_max = *excess.iter().max().expect("n >= 1") as f64;
    let mut r = BoundReport::default();
    r.push(BoundCheck::new(
        format!("lambda_{i}(L) + lambda_1(R) <= lambda_{i}(Atr)"),
        l.lambda(i) + r_min,
        atr.lambda(i),
        tol,
    ));
    r.push(BoundCheck::new(
        format!("lambda_{i}(Atr) <= lambda_{i}(L) + lambda_n(R)"),
        atr.lambda(i),
        l.lambda(i) + r_max,
        tol,
    ));
    r
}

/// Weyl sandwiches at every index at once (one eigensolve per matrix).
pub fn check_weyl_all(g: &Graph, tol: f64) -> Result<BoundReport> {
    let p = distance_profile(g)?;
    let l = eigenvalues_symmetric(&build_with_profile(g, &p, MatrixKind::L), tol)?;
    let atr = eigenvalues_symmetric(&build_with_profile(g, &p, MatrixKind::Atr), tol)?;
    let excess = p.excess();
    let mut r = BoundReport::default();
    for i in 1..=g.n() {
        r.checks
            .extend(weyl_report(&l, &atr, &excess, i, tol).checks);
    }
    Ok(r)
}

/// `min(tr - deg) <= λ_1(Atr) <= mean(tr - deg)`.
pub fn check_lambda1_bracket(g: &Graph, tol: f64) -> Result<BoundReport> {
    let p = distance_profile(g)?;
    let atr = eigenvalues_symmetric(&build_with_profile(g, &p, MatrixKind::Atr), tol)?;
    let excess = p.excess();
    let lo = *excess.iter().min().expect("n >= 1") as f64;
    let mean = excess.iter().sum::<u64>() as f64 / g.n() as f64;
    let mut r = BoundReport::default();
    r.push(BoundCheck::new(
        "min(tr - deg) <= lambda_1(Atr)",
        lo,
        atr.min(),
        tol,
    ));
    r.push(BoundCheck::new(
        "lambda_1(Atr) <= mean(tr - deg)",
        atr.min(),
        mean,
        tol,
    ));
    Ok(r)
}

/// `Φ²/(2Δ) + min(tr - deg) < λ_2(Atr) <= 2Φ + max(tr - deg)`.
///
/// The strict lower inequality is reported with the same `left <= right +
/// tol` test as the others.
pub fn check_conductance_bracket(g: &Graph, tol: f64) -> Result<BoundReport> {
    let phi = conductance(g)?;
    let phi = *phi.value.numer() as f64 / *phi.value.denom() as f64;
    let p = distance_profile(g)?;
    let atr = eigenvalues_symmetric(&build_with_profile(g, &p, MatrixKind::Atr), tol)?;
    let excess = p.excess();
    let r_min = *excess.iter().min().expect("n >= 1") as f64;
    let r_max = *excess.iter().max().expect("n >= 1") as f64;
    let big_delta = f64::from(p.max_degree());
    let lambda2 = atr.lambda(2);
    let mut r = BoundReport::default();
    r.push(BoundCheck::new(
        "Phi^2/(2 Delta) + min(tr - deg) < lambda_2(Atr)",
        phi * phi / (2.0 * big_delta) + r_min,
        lambda2,
        tol,
    ));
    r.push(BoundCheck::new(
        "lambda_2(Atr) <= 2 Phi + max(tr - deg)",
        lambda2,
        2.0 * phi + r_max,
        tol,
    ));
    Ok(r)
}

fn reflected_deviation(target: &Spectrum, source: &Spectrum, shift: f64) -> f64 {
    let mut reflected: Vec<f64> = source.eigenvalues.iter().map(|l| shift - l).collect();
    reflected.sort_by(f64::total_cmp);
    target
        .eigenvalues
        .iter()
        .zip(&reflected)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max)
}

/// Shift identities for regular graphs: with common degree `k`,
/// `spec(Ddeg) = k - spec(D)`; with common transmission `r`,
/// `spec(Atr) = r - spec(A)`. Compared as sorted multisets, so
/// `λ_i(Ddeg) = k - λ_{n+1-i}(D)`.
pub fn check_shift_lemmas(g: &Graph, tol: f64) -> Result<BoundReport> {
    let (p, s) = spectra_of(g, tol)?;
    let mut r = BoundReport::default();
    let deg0 = p.deg[0];
    if p.deg.iter().all(|&d| d == deg0) {
        let dev = reflected_deviation(&s.ddeg, &s.d, f64::from(deg0));
        r.push(BoundCheck::new(
            format!("spec(Ddeg) = {deg0} - spec(D)"),
            dev,
            0.0,
            tol,
        ));
    } else {
        r.not_applicable
            .push("degree shift: graph is not regular".into());
    }
    match p.is_transmission_regular() {
        Some(t) => {
            let dev = reflected_deviation(&s.atr, &s.a, t as f64);
            r.push(BoundCheck::new(
                format!("spec(Atr) = {t} - spec(A)"),
                dev,
                0.0,
                tol,
            ));
        }
        None => r
            .not_applicable
            .push("transmission shift: graph is not transmission-regular".into()),
    }
    Ok(r)
}

/// Which closed form the third power-sum of `spec(Atr)` satisfies.
///
/// Expanding `(T - A)^3` with `T = diag(tr)` gives
/// `Σtr³ + 3 W_deg - 6|T(G)|`: the `T²A` terms have zero trace,
/// `tr(T A²) = Σ deg·tr`, and `tr(A³) = 6|T(G)|` enters with a minus sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentReport {
    pub trace1: BigInt,
    pub trace2: BigInt,
    pub trace3: BigInt,
    pub wiener: u64,
    pub wiener_deg: u64,
    pub edges: u64,
    pub triangles: u64,
    pub sum_tr2: BigInt,
    pub sum_tr3: BigInt,
}

impl MomentReport {
    pub fn first_holds(&self) -> bool {
        self.trace1 == BigInt::from(self.wiener)
    }

    pub fn second_holds(&self) -> bool {
        self.trace2 == BigInt::from(2 * self.edges) + &self.sum_tr2
    }

    /// `6|T| + W_deg + Σtr³`.
    pub fn third_as_published(&self) -> BigInt {
        BigInt::from(6 * self.triangles) + BigInt::from(self.wiener_deg) + &self.sum_tr3
    }

    /// `6|T| + 3 W_deg + Σtr³`.
    pub fn third_with_coefficient_three(&self) -> BigInt {
        BigInt::from(6 * self.triangles) + BigInt::from(3 * self.wiener_deg) + &self.sum_tr3
    }

    /// `Σtr³ + 3 W_deg - 6|T|`.
    pub fn third_expanded(&self) -> BigInt {
        &self.sum_tr3 + BigInt::from(3 * self.wiener_deg) - BigInt::from(6 * self.triangles)
    }

    /// Third moment minus the published right-hand side.
    pub fn third_published_residual(&self) -> BigInt {
        &self.trace3 - self.third_as_published()
    }

    pub fn third_residual_coefficient_three(&self) -> BigInt {
        &self.trace3 - self.third_with_coefficient_three()
    }

    pub fn third_expanded_holds(&self) -> bool {
        self.trace3 == self.third_expanded()
    }

    pub fn third_published_holds(&self) -> bool {
        self.third_published_residual().is_zero()
    }

    /// Names of the third-moment forms the data satisfies.
    pub fn satisfied_third_forms(&self) -> Vec<&'static str> {
        let mut forms = Vec::new();
        if self.third_published_holds() {
            forms.push("published: 6T + Wdeg + sum tr^3");
        }
        if self.third_residual_coefficient_three().is_zero() {
            forms.push("coefficient 3: 6T + 3 Wdeg + sum tr^3");
        }
        if self.third_expanded_holds() {
            forms.push("expansion: sum tr^3 + 3 Wdeg - 6T");
        }
        forms
    }
}

/// Exact traces of `Atr`, `Atr²`, `Atr³` against the graph statistics.
pub fn check_moments(g: &Graph) -> Result<MomentReport> {
    let p = distance_profile(g)?;
    let atr = build_with_profile(g, &p, MatrixKind::Atr);
    let sq = &atr * &atr;
    let cube = &sq * &atr;
    let sum_pow = |e: u32| -> BigInt {
        p.tr.iter()
            .map(|&t| BigInt::from(t).pow(e))
            .fold(BigInt::zero(), |a, b| a + b)
    };
    Ok(MomentReport {
        trace1: atr.trace(),
        trace2: sq.trace(),
        trace3: cube.trace(),
        wiener: p.wiener(),
        wiener_deg: p.wiener_deg(),
        edges: g.edge_count() as u64,
        triangles: g.triangle_count(),
        sum_tr2: sum_pow(2),
        sum_tr3: sum_pow(3),
    })
}
