//! k-Kostka matrices and their inverses.
//!
//! `K^(k)_{λμ}` counts semi-standard k-tableaux of shape `c(λ)` and
//! evaluation `μ`. Rows and columns are indexed by the k-bounded partitions
//! of `n` in reverse lexicographic order, which refines dominance, so the
//! matrix is upper unitriangular.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ktableau::enumerate_semistandard;
use crate::lattice::{count_admissible_chains, count_saturated_chains};
use crate::partition::{is_horizontal_strip, Composition, Partition};

/// A square integer matrix indexed by partitions of `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionMatrix {
    pub n: usize,
    pub k: usize,
    pub index: Vec<Partition>,
    #[serde(serialize_with = "ser_entries", deserialize_with = "de_entries")]
    pub entries: Vec<Vec<BigInt>>,
}

pub type KostkaMatrix = PartitionMatrix;

fn ser_entries<S: Serializer>(entries: &[Vec<BigInt>], s: S) -> std::result::Result<S::Ok, S::Error> {
    let rows: Vec<Vec<serde_json::Value>> = entries
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| match i64::try_from(x) {
                    Ok(v) => serde_json::Value::from(v),
                    Err(_) => serde_json::Value::from(x.to_string()),
                })
                .collect()
        })
        .collect();
    rows.serialize(s)
}

fn de_entries<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Vec<BigInt>>, D::Error> {
    use serde::de::Error as _;
    let rows: Vec<Vec<serde_json::Value>> = Vec::deserialize(d)?;
    rows.into_iter()
        .map(|row| {
            row.into_iter()
                .map(|v| match v {
                    serde_json::Value::Number(n) => n
                        .as_i64()
                        .map(BigInt::from)
                        .ok_or_else(|| D::Error::custom("matrix entries must be integers")),
                    serde_json::Value::String(s) => s.parse().map_err(D::Error::custom),
                    _ => Err(D::Error::custom("matrix entries must be integers")),
                })
                .collect()
        })
        .collect()
}

impl PartitionMatrix {
    pub fn size(&self) -> usize {
        self.index.len()
    }

    pub fn position(&self, p: &Partition) -> Option<usize> {
        self.index.iter().position(|q| q == p)
    }

    pub fn entry(&self, lambda: &Partition, mu: &Partition) -> Option<&BigInt> {
        Some(&self.entries[self.position(lambda)?][self.position(mu)?])
    }

    pub fn identity(n: usize, k: usize, index: Vec<Partition>) -> Self {
        let m = index.len();
        let entries = (0..m)
            .map(|i| (0..m).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
            .collect();
        PartitionMatrix { n, k, index, entries }
    }

    pub fn is_upper_unitriangular(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, x)| match i.cmp(&j) {
                std::cmp::Ordering::Equal => x.is_one(),
                std::cmp::Ordering::Greater => x.is_zero(),
                std::cmp::Ordering::Less => true,
            })
        })
    }

    /// Nonzero entries only where the row partition dominates the column.
    pub fn respects_dominance(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, x)| {
                x.is_zero() || self.index[i].dominates(&self.index[j]).unwrap_or(false)
            })
        })
    }

    pub fn multiply(&self, other: &PartitionMatrix) -> Result<PartitionMatrix> {
        if self.index != other.index {
            return Err(Error::DegreeMismatch { left: self.size(), right: other.size() });
        }
        let m = self.size();
        let entries = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| (0..m).map(|l| &self.entries[i][l] * &other.entries[l][j]).sum())
                    .collect()
            })
            .collect();
        Ok(PartitionMatrix { n: self.n, k: self.k, index: self.index.clone(), entries })
    }

    /// Exact inverse of an upper unitriangular matrix by back-substitution.
    pub fn invert_unitriangular(&self) -> Result<PartitionMatrix> {
        if !self.is_upper_unitriangular() {
            return Err(Error::NotUnitriangular);
        }
        let m = self.size();
        let mut inv = vec![vec![BigInt::zero(); m]; m];
        for i in (0..m).rev() {
            inv[i][i] = BigInt::one();
            for j in (i + 1)..m {
                let s: BigInt = ((i + 1)..=j).map(|l| &self.entries[i][l] * &inv[l][j]).sum();
                inv[i][j] = -s;
            }
        }
        Ok(PartitionMatrix { n: self.n, k: self.k, index: self.index.clone(), entries: inv })
    }

    /// CSV with partition strings labelling rows and columns.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let header: Vec<String> = self.index.iter().map(|p| format!("\"{p}\"")).collect();
        writeln!(out, "\"\",{}", header.join(",")).unwrap();
        for (p, row) in self.index.iter().zip(&self.entries) {
            let cells: Vec<String> = row.iter().map(BigInt::to_string).collect();
            writeln!(out, "\"{p}\",{}", cells.join(",")).unwrap();
        }
        out
    }

    /// Aligned plain-text table.
    pub fn to_text(&self) -> String {
        let labels: Vec<String> = self.index.iter().map(|p| p.to_string()).collect();
        let cells: Vec<Vec<String>> =
            self.entries.iter().map(|r| r.iter().map(BigInt::to_string).collect()).collect();
        let lw = labels.iter().map(String::len).max().unwrap_or(0);
        let cw: Vec<usize> = (0..labels.len())
            .map(|j| cells.iter().map(|r| r[j].len()).chain([labels[j].len()]).max().unwrap_or(1))
            .collect();
        let mut out = String::new();
        let head: Vec<String> = labels.iter().zip(&cw).map(|(l, w)| format!("{l:>w$}")).collect();
        writeln!(out, "{:lw$}  {}", "", head.join("  ")).unwrap();
        for (l, row) in labels.iter().zip(&cells) {
            let r: Vec<String> = row.iter().zip(&cw).map(|(x, w)| format!("{x:>w$}")).collect();
            writeln!(out, "{l:>lw$}  {}", r.join("  ")).unwrap();
        }
        out
    }
}

/// `K^(k)_{λμ}` over k-bounded `λ, μ ⊢ n`, by counting tableaux.
pub fn kostka_matrix(n: usize, k: usize) -> Result<KostkaMatrix> {
    if k == 0 {
        return Err(Error::InvalidK);
    }
    let index = Partition::bounded(n, k);
    let entries = index
        .par_iter()
        .map(|lambda| {
            index
                .iter()
                .map(|mu| {
                    let alpha = Composition::from(mu);
                    Ok(BigInt::from(enumerate_semistandard(lambda, &alpha, k)?.len()))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PartitionMatrix { n, k, index, entries })
}

/// Number of semistandard Young tableaux of shape `λ` and content `α`.
pub fn classical_kostka_number(lambda: &Partition, alpha: &Composition) -> u64 {
    fn rec(shape: &Partition, content: &[usize]) -> u64 {
        let Some((&last, rest)) = content.split_last() else {
            return u64::from(shape.is_empty());
        };
        strip_removals(shape, last).iter().map(|inner| rec(inner, rest)).sum()
    }
    if lambda.degree() != alpha.degree() {
        return 0;
    }
    rec(lambda, alpha.parts())
}

fn strip_removals(outer: &Partition, r: usize) -> Vec<Partition> {
    fn rec(outer: &Partition, row: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if row > outer.len() {
            if left == 0 {
                let p = Partition::new(cur.clone()).expect("strip removal keeps a partition");
                debug_assert!(is_horizontal_strip(outer, &p));
                out.push(p);
            }
            return;
        }
        let (top, floor) = (outer.part(row), outer.part(row + 1));
        for take in 0..=(top - floor).min(left) {
            cur.push(top - take);
            rec(outer, row + 1, left - take, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(outer, 1, r, &mut Vec::new(), &mut out);
    out
}

/// The classical Kostka matrix on all partitions of `n`.
pub fn classical_kostka(n: usize) -> KostkaMatrix {
    let index = Partition::all(n);
    let entries = index
        .par_iter()
        .map(|lambda| {
            index
                .iter()
                .map(|mu| BigInt::from(classical_kostka_number(lambda, &Composition::from(mu))))
                .collect()
        })
        .collect();
    PartitionMatrix { n, k: n.max(1), index, entries }
}

/// Row `λ` holds the coefficients of `s^(k)_λ` in the basis `h_μ`.
pub fn k_schur_in_h(n: usize, k: usize) -> Result<PartitionMatrix> {
    kostka_matrix(n, k)?.invert_unitriangular()
}

/// `K^(k)_{λ,1^n}`: standard k-tableaux of shape `c(λ)`.
pub fn standard_count(lambda: &Partition, k: usize) -> Result<u64> {
    count_saturated_chains(lambda, k)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RearrangementCase {
    pub lambda: Partition,
    pub mu: Partition,
    pub alpha: Composition,
    pub expected: u64,
    pub actual: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RearrangementReport {
    pub n: usize,
    pub k: usize,
    pub cases: usize,
    pub failures: Vec<RearrangementCase>,
}

impl RearrangementReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Compares `|T^k_α(μ)|` with `|T^k_λ(μ)|` for every partition `λ ⊢ n`,
/// every rearrangement `α` of `λ`, and every k-bounded `μ ⊢ n`.
pub fn rearrangement_check(n: usize, k: usize) -> Result<RearrangementReport> {
    if k == 0 {
        return Err(Error::InvalidK);
    }
    let mus = Partition::bounded(n, k);
    let per_lambda = Partition::all(n)
        .par_iter()
        .map(|lambda| {
            let mut cases = 0;
            let mut failures = Vec::new();
            let sorted = Composition::from(lambda);
            for mu in &mus {
                let expected = count_admissible_chains(mu, &sorted, k)?;
                for alpha in Composition::rearrangements(lambda) {
                    cases += 1;
                    let actual = count_admissible_chains(mu, &alpha, k)?;
                    if actual != expected {
                        failures.push(RearrangementCase {
                            lambda: lambda.clone(),
                            mu: mu.clone(),
                            alpha,
                            expected,
                            actual,
                        });
                    }
                }
            }
            Ok((cases, failures))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut report = RearrangementReport { n, k, cases: 0, failures: Vec::new() };
    for (c, f) in per_lambda {
        report.cases += c;
        report.failures.extend(f);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn small_matrices() {
        let m = kostka_matrix(1, 3).unwrap();
        assert_eq!(m.entries, vec![vec![BigInt::one()]]);
        let m = kostka_matrix(2, 1).unwrap();
        assert_eq!(m.index, vec![p(&[1, 1])]);
        assert_eq!(k_schur_in_h(2, 1).unwrap().entries, vec![vec![BigInt::one()]]);
        let m = kostka_matrix(0, 2).unwrap();
        assert_eq!(m.index, vec![Partition::empty()]);
    }

    #[test]
    fn classical_values() {
        let c = classical_kostka(3);
        assert_eq!(c.entry(&p(&[2, 1]), &p(&[1, 1, 1])), Some(&BigInt::from(2)));
        for mu in Partition::all(5) {
            assert_eq!(classical_kostka_number(&p(&[5]), &Composition::from(&mu)), 1);
        }
        assert!(classical_kostka(5).is_upper_unitriangular());
    }

    #[test]
    fn large_k_is_classical() {
        for n in 1..=5 {
            assert_eq!(kostka_matrix(n, n).unwrap().entries, classical_kostka(n).entries, "n={n}");
        }
    }

    #[test]
    fn inverse_is_exact() {
        let m = kostka_matrix(6, 3).unwrap();
        assert!(m.is_upper_unitriangular());
        let inv = m.invert_unitriangular().unwrap();
        assert_eq!(m.multiply(&inv).unwrap(), PartitionMatrix::identity(6, 3, m.index.clone()));
    }

    #[test]
    fn standard_counts() {
        assert_eq!(standard_count(&p(&[3, 2, 1, 1]), 3).unwrap(), 4);
        assert_eq!(standard_count(&p(&[1]), 1).unwrap(), 1);
        assert_eq!(standard_count(&p(&[2, 1]), 3).unwrap(), 2);
    }

    #[test]
    fn rearrangements_small() {
        let r = rearrangement_check(5, 2).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert!(r.cases > 0);
    }

    #[test]
    fn serialization() {
        let m = kostka_matrix(3, 2).unwrap();
        let csv = m.to_csv();
        assert_eq!(csv.lines().next().unwrap(), r#""","2,1","1,1,1""#);
        let json = serde_json::to_string(&m).unwrap();
        assert_eq!(json, r#"{"n":3,"k":2,"index":[[2,1],[1,1,1]],"entries":[[1,1],[0,1]]}"#);
        assert_eq!(serde_json::from_str::<PartitionMatrix>(&json).unwrap(), m);
    }
}
