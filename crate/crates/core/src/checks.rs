//! Exhaustive invariant suites over small parameters.
//!
//! Each suite returns how many cases it examined and a description of every
//! failing case. Nothing here panics on a failed invariant.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::affine::{bruhat_leq, bruhat_leq_subword, phi, quotient_elements, AffinePermutation, Side, DEFAULT_WORD_BOUND};
use crate::cores::{c_map, core_from_word, cores_up_to, k_conjugate, p_map};
use crate::error::Result;
use crate::ktableau::{enumerate_semistandard, enumerate_standard, gamma, KTableau};
use crate::kostka::{classical_kostka, kostka_matrix, rearrangement_check, standard_count, PartitionMatrix};
use crate::lattice::{
    count_admissible_chains, count_saturated_chains, down_covers, down_covers_by_conjugates,
    down_covers_by_operators, saturated_chains, up_covers, up_covers_by_conjugates, up_covers_by_operators,
};
use crate::partition::{Composition, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    fn new(name: &'static str) -> Self {
        SuiteResult { name, cases: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// All compositions of `n`, lexicographically.
pub fn compositions(n: usize) -> Vec<Composition> {
    fn rec(left: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if left == 0 {
            out.push(Composition::new(cur.clone()).expect("positive parts"));
            return;
        }
        for first in 1..=left {
            cur.push(first);
            rec(left - first, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

/// `p ∘ c = id` on k-bounded partitions and `c ∘ p = id` on cores.
pub fn core_bijection(n: usize, k_max: usize) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("core_bijection");
    for k in 1..=k_max {
        for lambda in Partition::bounded_up_to(n, k) {
            let core = c_map(&lambda, k)?;
            s.check(p_map(&core) == lambda, || format!("p(c({lambda:?})) != λ, k={k}"));
            s.check(core.bounded_hook_count() == lambda.degree(), || {
                format!("c({lambda:?}) has the wrong number of k-bounded hooks, k={k}")
            });
        }
        for core in cores_up_to(n, k) {
            let back = c_map(&p_map(&core), k)?;
            s.check(back == core, || format!("c(p({core})) != γ, k={k}"));
        }
    }
    Ok(s)
}

/// k-conjugation is an involution and matches conjugation of cores.
pub fn k_conjugation(n: usize, k_max: usize) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("k_conjugation");
    for k in 1..=k_max {
        for lambda in Partition::bounded_up_to(n, k) {
            let w = k_conjugate(&lambda, k)?;
            s.check(k_conjugate(&w, k)? == lambda, || format!("k-conjugation not an involution at {lambda:?}, k={k}"));
            s.check(c_map(&w, k)? == c_map(&lambda, k)?.conjugate(), || {
                format!("c(λ^ω) != c(λ)' at {lambda:?}, k={k}")
            });
        }
    }
    Ok(s)
}

/// The three descriptions of covers coincide.
pub fn cover_characterizations(n: usize, k_max: usize) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("cover_characterizations");
    for k in 1..=k_max {
        for lambda in Partition::bounded_up_to(n, k) {
            let up = up_covers(&lambda, k)?;
            let down = down_covers(&lambda, k)?;
            s.check(up == up_covers_by_conjugates(&lambda, k)?, || format!("up covers differ (conjugates) at {lambda:?}, k={k}"));
            s.check(up == up_covers_by_operators(&lambda, k)?, || format!("up covers differ (operators) at {lambda:?}, k={k}"));
            s.check(down == down_covers_by_conjugates(&lambda, k)?, || {
                format!("down covers differ (conjugates) at {lambda:?}, k={k}")
            });
            s.check(down == down_covers_by_operators(&lambda, k)?, || {
                format!("down covers differ (operators) at {lambda:?}, k={k}")
            });
        }
    }
    Ok(s)
}

/// `s_i² = 1`, commutation of distant generators and the braid relation,
/// on every core of degree at most `max_degree`.
pub fn coxeter_relations(max_degree: usize, k_max: usize) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("coxeter_relations");
    for k in 1..=k_max {
        let n = k + 1;
        for core in cores_up_to(max_degree, k) {
            for i in 0..n {
                let si = core.apply_si(i)?;
                s.check(si.apply_si(i)? == core, || format!("s_{i}² != 1 on {core}, k={k}"));
                let j = (i + 1) % n;
                if n >= 3 {
                    let lhs = core.apply_word(&[i, j, i])?;
                    let rhs = core.apply_word(&[j, i, j])?;
                    s.check(lhs == rhs, || format!("braid relation fails for ({i},{j}) on {core}, k={k}"));
                }
                for j in 0..n {
                    let d = (i + n - j) % n;
                    if d > 1 && d < n - 1 {
                        let lhs = core.apply_word(&[i, j])?;
                        let rhs = core.apply_word(&[j, i])?;
                        s.check(lhs == rhs, || format!("s_{i}, s_{j} do not commute on {core}, k={k}"));
                    }
                }
            }
        }
    }
    Ok(s)
}

/// Standard tableaux and saturated chains correspond under Γ and Γ̄.
pub fn chain_tableau_bijection(n: usize, k_max: usize) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("chain_tableau_bijection");
    for k in 1..=k_max {
        for lambda in Partition::bounded_up_to(n, k) {
            let chains = saturated_chains(&lambda, k)?;
            let tableaux = enumerate_standard(&lambda, k)?;
            s.check(chains.len() == tableaux.len(), || format!("chain and tableau counts differ at {lambda:?}, k={k}"));
            for c in &chains {
                let t = gamma(c)?;
                s.check(t.validate().is_ok() && t.gamma_inv()? == *c, || format!("Γ̄(Γ(P)) != P for {:?}, k={k}", c.steps));
            }
            for t in &tableaux {
                let back = gamma(&t.gamma_inv()?)?;
                s.check(&back == t, || format!("Γ(Γ̄(T)) != T for {:?}, k={k}", t.rows()));
            }
        }
    }
    Ok(s)
}

/// Tableau words are exactly the reduced words of `φ(λ)`, and the word map
/// inverts.
pub fn word_bijection(n: usize, k_max: usize) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("word_bijection");
    for k in 1..=k_max {
        for lambda in Partition::bounded_up_to(n.min(DEFAULT_WORD_BOUND), k) {
            let tableaux = enumerate_standard(&lambda, k)?;
            let mut words = BTreeSet::new();
            for t in &tableaux {
                let w = t.to_reduced_word()?;
                s.check(KTableau::from_reduced_word(&w, k)? == *t, || format!("word map does not invert on {:?}, k={k}", t.rows()));
                s.check(core_from_word(&w, k)? == *t.shape(), || format!("word {w:?} does not build the shape, k={k}"));
                words.insert(w);
            }
            let reduced: BTreeSet<Vec<usize>> = phi(&lambda, k)?.reduced_words(DEFAULT_WORD_BOUND)?.into_iter().collect();
            s.check(words.len() == tableaux.len() && words == reduced, || {
                format!("tableau words differ from reduced words of φ({lambda:?}), k={k}")
            });
        }
    }
    Ok(s)
}

/// `φ` lands in the quotient, has length `|λ|`, and `p ∘ s` inverts it.
pub fn phi_bijection(n: usize, k_max: usize) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("phi_bijection");
    for k in 1..=k_max {
        let mut seen = BTreeSet::new();
        for lambda in Partition::bounded_up_to(n, k) {
            let sigma = phi(&lambda, k)?;
            s.check(sigma.is_min_coset_rep(), || format!("φ({lambda:?}) is not Grassmannian, k={k}"));
            s.check(sigma.length() == lambda.degree(), || format!("ℓ(φ({lambda:?})) != |λ|, k={k}"));
            if sigma.is_min_coset_rep() {
                s.check(sigma.s_map()? == c_map(&lambda, k)?, || format!("s(φ({lambda:?})) != c(λ), k={k}"));
                s.check(sigma.to_partition()? == lambda, || format!("p(s(φ({lambda:?}))) != λ, k={k}"));
            }
            s.check(seen.insert(sigma), || format!("φ is not injective at {lambda:?}, k={k}"));
        }
        let quotient = quotient_elements(k, n)?;
        s.check(quotient.len() == seen.len(), || format!("{} quotient elements vs {} partitions, k={k}", quotient.len(), seen.len()));
    }
    Ok(s)
}

/// Window arithmetic and the action on cores agree on every word of length
/// at most `max_len`.
pub fn group_action(max_len: usize, k_max: usize) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("group_action");
    for k in 1..=k_max {
        let mut layer: Vec<(Vec<usize>, AffinePermutation)> = vec![(Vec::new(), AffinePermutation::identity(k))];
        for _ in 0..max_len {
            let mut next = Vec::with_capacity(layer.len() * (k + 1));
            for (word, sigma) in &layer {
                for i in 0..=k {
                    let mut w = word.clone();
                    w.push(i);
                    // right multiplication acts first on the core
                    let core_w = core_from_word(&w, k)?;
                    let sigma_w = sigma.apply_generator(i, Side::Right)?;
                    let via_window = sigma_w.min_coset_rep().s_map()?;
                    s.check(core_w == via_window, || format!("word {w:?} acts differently on cores and windows, k={k}"));
                    next.push((w, sigma_w));
                }
            }
            layer = next;
        }
    }
    Ok(s)
}

/// `φ` carries lattice covers onto weak-order covers in the quotient.
pub fn weak_order_isomorphism(n: usize, k_max: usize) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("weak_order_isomorphism");
    for k in 1..=k_max {
        for lambda in Partition::bounded_up_to(n.saturating_sub(1), k) {
            let via_lattice: BTreeSet<AffinePermutation> =
                up_covers(&lambda, k)?.iter().map(|mu| phi(mu, k)).collect::<Result<_>>()?;
            let via_group: BTreeSet<AffinePermutation> =
                phi(&lambda, k)?.weak_covers_in_quotient().into_iter().collect();
            s.check(via_lattice == via_group, || format!("covers of {lambda:?} differ from weak covers of φ(λ), k={k}"));
        }
    }
    Ok(s)
}

/// Bruhat order by core containment against the subword property.
pub fn bruhat_subword(max_len: usize, k: usize) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("bruhat_subword");
    let elems = quotient_elements(k, max_len)?;
    for a in &elems {
        for b in &elems {
            let by_cores = bruhat_leq(a, b)?;
            let by_words = bruhat_leq_subword(a, b)?;
            s.check(by_cores == by_words, || format!("Bruhat comparison of {a} and {b} differs, k={k}"));
        }
    }
    Ok(s)
}

/// Semi-standard tableaux, admissible chains and standardization.
pub fn semistandard_tableaux(n: usize, k_max: usize) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("semistandard_tableaux");
    for k in 1..=k_max {
        for lambda in Partition::bounded_up_to(n, k) {
            for alpha in compositions(lambda.degree()) {
                let ts = enumerate_semistandard(&lambda, &alpha, k)?;
                let count = count_admissible_chains(&lambda, &alpha, k)?;
                s.check(ts.len() as u64 == count, || format!("tableau and chain counts differ at {lambda:?}, α={alpha}, k={k}"));
                for t in &ts {
                    s.check(t.validate().is_ok() && t.evaluation() == &alpha, || format!("invalid tableau {:?}, k={k}", t.rows()));
                    let st = t.standardize();
                    s.check(st.validate().is_ok() && st.is_standard() && st.shape() == t.shape(), || {
                        format!("standardization of {:?} is not standard, k={k}", t.rows())
                    });
                    s.check(gamma(&t.gamma_inv()?)? == *t, || format!("Γ(Γ̄(T)) != T for {:?}, k={k}", t.rows()));
                    if t.letter_count() > 0 {
                        let d = t.delete_max_letter()?;
                        s.check(d.bounded_shape().degree() + alpha.parts()[alpha.len() - 1] == lambda.degree(), || {
                            format!("deleting the largest letter of {:?} removes the wrong number of hooks, k={k}", t.rows())
                        });
                    }
                }
            }
        }
    }
    Ok(s)
}

/// No tableaux unless `λ ⊵ μ`, exactly one when `λ = μ`.
pub fn triangularity(n: usize, k_max: usize) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("triangularity");
    for k in 1..=k_max {
        for m in 0..=n {
            let parts = Partition::bounded(m, k);
            for lambda in &parts {
                for mu in &parts {
                    let c = count_admissible_chains(lambda, &Composition::from(mu), k)?;
                    if lambda == mu {
                        s.check(c == 1, || format!("{c} tableaux of shape c({lambda:?}) and evaluation λ, k={k}"));
                    } else if !lambda.dominates(mu)? || mu.len() < lambda.len() {
                        s.check(c == 0, || format!("{c} tableaux for {lambda:?} ⋭ {mu:?}, k={k}"));
                    }
                }
            }
        }
    }
    Ok(s)
}

fn identity_like(m: &PartitionMatrix) -> PartitionMatrix {
    PartitionMatrix::identity(m.n, m.k, m.index.clone())
}

/// Unitriangularity, exact inversion, the standard column, and agreement
/// with classical Kostka numbers when `k ≥ n`.
pub fn kostka(n: usize, k_max: usize, classical_up_to: usize) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("kostka");
    for k in 1..=k_max {
        for m in 1..=n {
            let km = kostka_matrix(m, k)?;
            s.check(km.is_upper_unitriangular() && km.respects_dominance(), || format!("K^({k}) for n={m} is not unitriangular"));
            let inv = km.invert_unitriangular()?;
            s.check(km.multiply(&inv)? == identity_like(&km), || format!("K^({k}) · inverse != 1 for n={m}"));
            s.check(inv.multiply(&km)? == identity_like(&km), || format!("inverse · K^({k}) != 1 for n={m}"));
            let ones = Partition::new(vec![1; m])?;
            let col = km.position(&ones).expect("(1^n) is k-bounded");
            for (i, lambda) in km.index.iter().enumerate() {
                let want = standard_count(lambda, k)?;
                s.check(km.entries[i][col] == want.into(), || format!("standard column differs at {lambda:?}, k={k}"));
            }
            if k >= m && m <= classical_up_to {
                let classical = classical_kostka(m);
                s.check(classical.index == km.index && classical.entries == km.entries, || {
                    format!("K^({k}) differs from the classical Kostka matrix for n={m}")
                });
            }
        }
    }
    Ok(s)
}

pub fn rearrangements(n: usize, k_max: usize) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("rearrangements");
    for k in 1..=k_max {
        for m in 1..=n {
            let report = rearrangement_check(m, k)?;
            s.cases += report.cases;
            for f in report.failures {
                s.failures.push(format!(
                    "|T_α(μ)| = {} but |T_λ(μ)| = {} for λ={:?}, α={}, μ={:?}, k={k}",
                    f.actual, f.expected, f.lambda, f.alpha, f.mu
                ));
            }
        }
    }
    Ok(s)
}

/// Saturated chains counted by memoized descent agree with enumeration.
pub fn chain_counts(n: usize, k_max: usize) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("chain_counts");
    for k in 1..=k_max {
        for lambda in Partition::bounded_up_to(n, k) {
            let listed = saturated_chains(&lambda, k)?;
            let counted = count_saturated_chains(&lambda, k)?;
            s.check(listed.len() as u64 == counted && listed.iter().all(|c| c.is_saturated()), || {
                format!("saturated chain count mismatch at {lambda:?}, k={k}")
            });
        }
    }
    Ok(s)
}

/// Every suite, sized from a single degree bound `n` and bound `k`.
pub fn run_all(n: usize, k: usize) -> Result<Vec<SuiteResult>> {
    Ok(vec![
        core_bijection(n, k)?,
        k_conjugation(n, k)?,
        cover_characterizations(n, k)?,
        coxeter_relations(n + 4, k)?,
        chain_counts(n, k)?,
        chain_tableau_bijection(n, k)?,
        word_bijection(n, k)?,
        phi_bijection(n, k)?,
        group_action(n.min(8), k.min(3))?,
        weak_order_isomorphism(n, k)?,
        bruhat_subword(n.min(6), k.min(2))?,
        semistandard_tableaux(n.min(7), k)?,
        triangularity(n, k)?,
        kostka(n, k, n.min(7))?,
        rearrangements(n, k)?,
    ])
}
