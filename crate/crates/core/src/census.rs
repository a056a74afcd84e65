//! Cospectral and coinvariant mate counting.
//!
//! Graphs are bucketed by exact fingerprints: the characteristic polynomial
//! for the spectral mode and the Smith form for the invariant mode. A graph
//! has a mate when its bucket holds at least two graphs. The input must be
//! pairwise non-isomorphic; no isomorphism testing happens here.

use std::collections::HashMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::Ratio;
use rayon::prelude::*;

use crate::distance::distance_profile;
use crate::error::{Error, Result};
use crate::generate::{generate_connected_graphs, generate_trees};
use crate::graph::Graph;
use crate::linalg::{charpoly, snf, IntPolynomial, SnfResult};
use crate::matrix::{build_with_profile, MatrixKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    Spectral,
    Invariant,
}

impl Mode {
    pub const ALL: [Mode; 2] = [Mode::Spectral, Mode::Invariant];

    pub fn name(self) -> &'static str {
        match self {
            Mode::Spectral => "spectral",
            Mode::Invariant => "invariant",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "spectral" => Ok(Mode::Spectral),
            "invariant" => Ok(Mode::Invariant),
            _ => Err(Error::InvalidParameter(format!("unknown mode {s:?}"))),
        }
    }
}

/// Exact certificate of a graph's `kind`-spectrum or `kind`-Smith form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub kind: MatrixKind,
    pub mode: Mode,
    pub payload: Vec<u8>,
}

fn push_len(out: &mut Vec<u8>, len: usize) {
    out.extend_from_slice(&(len as u32).to_be_bytes());
}

fn push_int(out: &mut Vec<u8>, x: &BigInt) {
    let bytes = x.to_signed_bytes_be();
    push_len(out, bytes.len());
    out.extend_from_slice(&bytes);
}

/// Coefficient count, then each coefficient length-prefixed.
pub fn encode_charpoly(p: &IntPolynomial) -> Vec<u8> {
    let mut out = Vec::with_capacity(4 + p.coeffs.len() * 6);
    push_len(&mut out, p.coeffs.len());
    for c in &p.coeffs {
        push_int(&mut out, c);
    }
    out
}

/// Zero count, factor count, then each factor length-prefixed.
pub fn encode_snf(s: &SnfResult) -> Vec<u8> {
    let mut out = Vec::with_capacity(8 + s.factors.len() * 5);
    push_len(&mut out, s.zeros);
    push_len(&mut out, s.factors.len());
    for f in &s.factors {
        push_int(&mut out, f);
    }
    out
}

pub fn fingerprint(g: &Graph, kind: MatrixKind, mode: Mode) -> Result<Fingerprint> {
    let p = distance_profile(g)?;
    let m = build_with_profile(g, &p, kind);
    let payload = match mode {
        Mode::Spectral => encode_charpoly(&charpoly(&m)),
        Mode::Invariant => encode_snf(&snf(&m)),
    };
    Ok(Fingerprint {
        kind,
        mode,
        payload,
    })
}

/// Counts for one `(kind, mode)` pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub kind: MatrixKind,
    pub mode: Mode,
    /// Graphs whose bucket has size at least two.
    pub mate_count: u64,
    pub total: u64,
    /// Distinct fingerprints seen.
    pub classes: u64,
}

impl CensusRow {
    pub fn uncertainty(&self) -> Ratio<u64> {
        Ratio::new(self.mate_count, self.total)
    }

    /// Ratio rounded half-up to six decimals, computed in integers.
    pub fn uncertainty_decimal(&self) -> String {
        let scaled = (2 * self.mate_count * 1_000_000 + self.total) / (2 * self.total);
        format!("{}.{:06}", scaled / 1_000_000, scaled % 1_000_000)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub n: usize,
    pub total: u64,
    pub rows: Vec<CensusRow>,
}

impl CensusReport {
    pub fn row(&self, kind: MatrixKind, mode: Mode) -> Option<&CensusRow> {
        self.rows.iter().find(|r| r.kind == kind && r.mode == mode)
    }

    pub fn mate_count(&self, kind: MatrixKind, mode: Mode) -> Option<u64> {
        self.row(kind, mode).map(|r| r.mate_count)
    }

    pub const TSV_HEADER: &'static str =
        "n\tmatrix\tmode\tmate_count\ttotal\tuncertainty_decimal\tuncertainty_rational";

    /// Header line plus one row per `(kind, mode)`.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}", Self::TSV_HEADER).unwrap();
        for r in &self.rows {
            let u = r.uncertainty();
            writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}/{}",
                self.n,
                r.kind,
                r.mode,
                r.mate_count,
                r.total,
                r.uncertainty_decimal(),
                u.numer(),
                u.denom()
            )
            .unwrap();
        }
        out
    }
}

fn normalize<T: Ord + Copy>(items: &[T]) -> Vec<T> {
    let mut v = items.to_vec();
    v.sort();
    v.dedup();
    v
}

type Buckets = Vec<HashMap<Vec<u8>, u64>>;

/// Buckets every graph by every requested fingerprint.
///
/// Fingerprinting fans out over the rayon pool; each worker fills its own
/// bucket maps and the maps are merged pairwise.
pub fn run_census<I>(graphs: I, kinds: &[MatrixKind], modes: &[Mode]) -> Result<CensusReport>
where
    I: IntoIterator<Item = Graph>,
{
    let graphs: Vec<Graph> = graphs.into_iter().collect();
    let Some(first) = graphs.first() else {
        return Err(Error::InvalidParameter("census input is empty".into()));
    };
    let n = first.n();
    if let Some(g) = graphs.iter().find(|g| g.n() != n) {
        return Err(Error::MixedOrder {
            expected: n,
            found: g.n(),
        });
    }
    let kinds = normalize(kinds);
    let modes = normalize(modes);
    if kinds.is_empty() || modes.is_empty() {
        return Err(Error::InvalidParameter(
            "census needs at least one matrix kind and one mode".into(),
        ));
    }
    let slots: Vec<(MatrixKind, Mode)> = kinds
        .iter()
        .flat_map(|&k| modes.iter().map(move |&m| (k, m)))
        .collect();

    let buckets: Buckets = graphs
        .par_iter()
        .try_fold(
            || vec![HashMap::new(); slots.len()],
            |mut acc: Buckets, g| -> Result<Buckets> {
                let p = distance_profile(g)?;
                for &kind in &kinds {
                    let m = build_with_profile(g, &p, kind);
                    for &mode in &modes {
                        let payload = match mode {
                            Mode::Spectral => encode_charpoly(&charpoly(&m)),
                            Mode::Invariant => encode_snf(&snf(&m)),
                        };
                        let slot = slots
                            .iter()
                            .position(|&s| s == (kind, mode))
                            .expect("slot exists");
                        *acc[slot].entry(payload).or_insert(0) += 1;
                    }
                }
                Ok(acc)
            },
        )
        .try_reduce(
            || vec![HashMap::new(); slots.len()],
            |mut a, b| {
                for (into, from) in a.iter_mut().zip(b) {
                    for (k, v) in from {
                        *into.entry(k).or_insert(0) += v;
                    }
                }
                Ok(a)
            },
        )?;

    let total = graphs.len() as u64;
    let rows = slots
        .iter()
        .zip(&buckets)
        .map(|(&(kind, mode), b)| CensusRow {
            kind,
            mode,
            mate_count: b.values().filter(|&&c| c >= 2).sum(),
            total,
            classes: b.len() as u64,
        })
        .collect();
    Ok(CensusReport { n, total, rows })
}

/// Census over every free tree on `n` vertices.
pub fn tree_census(n: usize, kinds: &[MatrixKind], modes: &[Mode]) -> Result<CensusReport> {
    if !(2..=crate::generate::MAX_TREE_ORDER).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "tree census supports 2 <= n <= 16, got {n}"
        )));
    }
    run_census(generate_trees(n)?, kinds, modes)
}

/// Census over the built-in connected-graph corpus on `n` vertices.
pub fn connected_census(n: usize, kinds: &[MatrixKind], modes: &[Mode]) -> Result<CensusReport> {
    run_census(generate_connected_graphs(n)?, kinds, modes)
}

/// Whether `K_n` is the only connected graph on `n` vertices with its
/// `kind` Smith form.
pub fn completeness_check(n: usize, kind: MatrixKind) -> Result<bool> {
    completeness_check_in(&generate_connected_graphs(n)?, kind)
}

/// As [`completeness_check`], against a caller-supplied corpus that contains
/// `K_n` exactly once.
pub fn completeness_check_in(corpus: &[Graph], kind: MatrixKind) -> Result<bool> {
    if !MatrixKind::TRANSMISSION.contains(&kind) {
        return Err(Error::UnsupportedKind {
            kind: kind.name(),
            what: "completeness_check",
        });
    }
    let Some(first) = corpus.first() else {
        return Err(Error::InvalidParameter("empty corpus".into()));
    };
    let target = fingerprint(&Graph::complete(first.n())?, kind, Mode::Invariant)?;
    let hits = corpus
        .par_iter()
        .map(|g| fingerprint(g, kind, Mode::Invariant).map(|f| u64::from(f == target)))
        .try_reduce(|| 0, |a, b| Ok(a + b))?;
    Ok(hits == 1)
}
