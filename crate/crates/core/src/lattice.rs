//! The k-Young lattice on k-bounded partitions.
//!
//! Covers are computed from the residue rule on cores: a cell may be added to
//! row `r` of `λ` exactly when the addable corner of `c(λ)` in row `r` is the
//! highest addable corner of its residue. Two further characterizations (by
//! k-conjugate containment, and by the `s_i` operators) are exposed so they
//! can be checked against each other.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::cores::{c_map, k_conjugate, p_map};
use crate::error::{Error, Result};
use crate::partition::{is_horizontal_strip, is_vertical_strip, residue, Cell, Composition, Partition};

/// A sequence of partitions starting at ∅ with strictly increasing degrees.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Chain {
    pub k: usize,
    pub steps: Vec<Partition>,
}

impl Chain {
    pub fn new(k: usize, steps: Vec<Partition>) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidK);
        }
        match steps.first() {
            Some(p) if p.is_empty() => {}
            _ => return Err(Error::InvalidChain("chain must start at the empty partition".into())),
        }
        if steps.windows(2).any(|w| w[0].degree() >= w[1].degree()) {
            return Err(Error::InvalidChain("degrees must strictly increase".into()));
        }
        if let Some(p) = steps.iter().find(|p| !p.is_k_bounded(k)) {
            return Err(Error::NotKBounded { partition: p.to_string(), k });
        }
        Ok(Chain { k, steps })
    }

    pub fn top(&self) -> &Partition {
        self.steps.last().expect("chains are nonempty")
    }

    /// Degree increments between consecutive steps.
    pub fn increments(&self) -> Composition {
        let parts = self.steps.windows(2).map(|w| w[1].degree() - w[0].degree()).collect();
        Composition::new(parts).expect("degrees strictly increase")
    }

    /// Every step is a cover.
    pub fn is_saturated(&self) -> bool {
        self.steps.windows(2).all(|w| is_cover(&w[0], &w[1], self.k))
    }

    /// Every step is an admissible pair.
    pub fn is_admissible(&self) -> bool {
        self.steps
            .windows(2)
            .all(|w| r_admissible(&w[1], &w[0], w[1].degree() - w[0].degree(), self.k))
    }
}

/// Addable corners of `λ` whose addition gives a cover, with the residue of
/// the matching addable corner of `c(λ)`. Sorted bottom row first.
pub fn k_addable_corners(lambda: &Partition, k: usize) -> Result<Vec<(Cell, usize)>> {
    let core = c_map(lambda, k)?;
    let mut highest: BTreeMap<usize, Cell> = BTreeMap::new();
    for c in core.shape().addable_corners() {
        // bottom-up order, so the last one seen per residue is the highest
        highest.insert(residue(c, k), c);
    }
    let mut out: Vec<(Cell, usize)> = highest
        .into_iter()
        .map(|(i, c)| (Cell::new(c.row, lambda.part(c.row) + 1), i))
        .collect();
    out.sort_by_key(|(c, _)| c.row);
    Ok(out)
}

/// Orders neighbours of `λ` by the row where they differ from it, bottom
/// row first.
fn by_changed_row(lambda: &Partition, v: &mut [Partition]) {
    v.sort_by_key(|mu| (1..).find(|&r| mu.part(r) != lambda.part(r)).unwrap_or(0));
}

/// Partitions covering `λ`, ordered by the row of the added cell.
pub fn up_covers(lambda: &Partition, k: usize) -> Result<Vec<Partition>> {
    let mut out: Vec<Partition> = k_addable_corners(lambda, k)?
        .into_iter()
        .map(|(c, _)| lambda.add_to_row(c.row).expect("k-addable corners are addable"))
        .collect();
    by_changed_row(lambda, &mut out);
    Ok(out)
}

/// Partitions covered by `λ`, ordered by the row of the removed cell:
/// remove the cell in row `r` when the removable
/// corner of `c(λ)` in row `r` is the highest removable corner of its residue.
pub fn down_covers(lambda: &Partition, k: usize) -> Result<Vec<Partition>> {
    let core = c_map(lambda, k)?;
    let mut highest: BTreeMap<usize, Cell> = BTreeMap::new();
    for c in core.shape().removable_corners() {
        highest.insert(residue(c, k), c);
    }
    let mut out: Vec<Partition> = highest
        .values()
        .map(|c| lambda.remove_from_row(c.row).expect("row of a highest corner is removable"))
        .collect();
    by_changed_row(lambda, &mut out);
    Ok(out)
}

/// Covers by definition: add any corner, keep the result if it stays
/// k-bounded and its k-conjugate contains that of `λ`.
pub fn up_covers_by_conjugates(lambda: &Partition, k: usize) -> Result<Vec<Partition>> {
    let lc = k_conjugate(lambda, k)?;
    let mut out = Vec::new();
    for c in lambda.addable_corners() {
        let mu = lambda.add_to_row(c.row).expect("addable");
        if mu.is_k_bounded(k) && lc.is_subset_of(&k_conjugate(&mu, k)?) {
            out.push(mu);
        }
    }
    by_changed_row(lambda, &mut out);
    Ok(out)
}

pub fn down_covers_by_conjugates(lambda: &Partition, k: usize) -> Result<Vec<Partition>> {
    let lc = k_conjugate(lambda, k)?;
    let mut out = Vec::new();
    for c in lambda.removable_corners() {
        let mu = lambda.remove_from_row(c.row).expect("removable");
        if k_conjugate(&mu, k)?.is_subset_of(&lc) {
            out.push(mu);
        }
    }
    by_changed_row(lambda, &mut out);
    Ok(out)
}

/// Covers via the operators: `p(s_i c(λ))` for each `s_i` that grows `c(λ)`.
pub fn up_covers_by_operators(lambda: &Partition, k: usize) -> Result<Vec<Partition>> {
    let core = c_map(lambda, k)?;
    let mut out = BTreeSet::new();
    for i in 0..=k {
        let next = core.apply_si(i)?;
        if next.shape().degree() > core.shape().degree() {
            out.insert(p_map(&next));
        }
    }
    let mut out: Vec<Partition> = out.into_iter().collect();
    by_changed_row(lambda, &mut out);
    Ok(out)
}

pub fn down_covers_by_operators(lambda: &Partition, k: usize) -> Result<Vec<Partition>> {
    let core = c_map(lambda, k)?;
    let mut out = BTreeSet::new();
    for i in 0..=k {
        let next = core.apply_si(i)?;
        if next.shape().degree() < core.shape().degree() {
            out.insert(p_map(&next));
        }
    }
    let mut out: Vec<Partition> = out.into_iter().collect();
    by_changed_row(lambda, &mut out);
    Ok(out)
}

/// `λ →_k μ`.
pub fn is_cover(lambda: &Partition, mu: &Partition, k: usize) -> bool {
    mu.degree() == lambda.degree() + 1
        && mu.is_k_bounded(k)
        && lambda.is_k_bounded(k)
        && up_covers(lambda, k).map(|v| v.contains(mu)).unwrap_or(false)
}

/// `λ ⪯ μ` in the k-Young lattice, by upward search from `λ` restricted to
/// partitions `ν ⊆ μ` with `ν^{ω_k} ⊆ μ^{ω_k}`.
pub fn leq(lambda: &Partition, mu: &Partition, k: usize) -> Result<bool> {
    lambda.require_k_bounded(k)?;
    mu.require_k_bounded(k)?;
    let mu_conj = k_conjugate(mu, k)?;
    let admissible = |nu: &Partition| -> Result<bool> {
        Ok(nu.is_subset_of(mu) && k_conjugate(nu, k)?.is_subset_of(&mu_conj))
    };
    if !admissible(lambda)? {
        return Ok(false);
    }
    let mut seen: HashSet<Partition> = HashSet::from([lambda.clone()]);
    let mut queue = VecDeque::from([lambda.clone()]);
    while let Some(nu) = queue.pop_front() {
        if &nu == mu {
            return Ok(true);
        }
        if nu.degree() >= mu.degree() {
            continue;
        }
        for next in up_covers(&nu, k)? {
            if !seen.contains(&next) && admissible(&next)? {
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(false)
}

/// All saturated chains from ∅ to `λ`, in lexicographic order of their steps.
pub fn saturated_chains(lambda: &Partition, k: usize) -> Result<Vec<Chain>> {
    lambda.require_k_bounded(k)?;
    let mut memo: HashMap<Partition, Vec<Vec<Partition>>> = HashMap::new();
    let paths = chains_below(lambda, k, &mut memo)?;
    let mut chains: Vec<Chain> = paths.into_iter().map(|steps| Chain { k, steps }).collect();
    chains.sort();
    Ok(chains)
}

fn chains_below(
    lambda: &Partition,
    k: usize,
    memo: &mut HashMap<Partition, Vec<Vec<Partition>>>,
) -> Result<Vec<Vec<Partition>>> {
    if lambda.is_empty() {
        return Ok(vec![vec![Partition::empty()]]);
    }
    if let Some(v) = memo.get(lambda) {
        return Ok(v.clone());
    }
    let mut out = Vec::new();
    for below in down_covers(lambda, k)? {
        for mut path in chains_below(&below, k, memo)? {
            path.push(lambda.clone());
            out.push(path);
        }
    }
    memo.insert(lambda.clone(), out.clone());
    Ok(out)
}

/// Number of saturated chains from ∅ to `λ`, without enumerating them.
pub fn count_saturated_chains(lambda: &Partition, k: usize) -> Result<u64> {
    fn rec(l: &Partition, k: usize, memo: &mut HashMap<Partition, u64>) -> Result<u64> {
        if l.is_empty() {
            return Ok(1);
        }
        if let Some(&c) = memo.get(l) {
            return Ok(c);
        }
        let mut total = 0;
        for b in down_covers(l, k)? {
            total += rec(&b, k, memo)?;
        }
        memo.insert(l.clone(), total);
        Ok(total)
    }
    lambda.require_k_bounded(k)?;
    rec(lambda, k, &mut HashMap::new())
}

/// `larger/smaller` is a horizontal `r`-strip and the k-conjugates differ by
/// a vertical `r`-strip.
pub fn r_admissible(larger: &Partition, smaller: &Partition, r: usize, k: usize) -> bool {
    if !larger.is_k_bounded(k) || !smaller.is_k_bounded(k) || k == 0 {
        return false;
    }
    if larger.degree() != smaller.degree() + r || !is_horizontal_strip(larger, smaller) {
        return false;
    }
    match (k_conjugate(larger, k), k_conjugate(smaller, k)) {
        (Ok(lc), Ok(sc)) => is_vertical_strip(&lc, &sc),
        _ => false,
    }
}

/// Partitions `ν` such that `μ/ν` is a horizontal strip of size `r`.
fn horizontal_strip_removals(mu: &Partition, r: usize) -> Vec<Partition> {
    fn rec(mu: &Partition, row: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if row > mu.len() {
            if left == 0 {
                out.push(Partition::from_parts_unchecked(cur.clone()));
            }
            return;
        }
        let top = mu.part(row);
        let floor = mu.part(row + 1);
        let capacity: usize = (row..=mu.len()).map(|r| mu.part(r) - mu.part(r + 1)).sum();
        if capacity < left {
            return;
        }
        for take in 0..=(top - floor).min(left) {
            cur.push(top - take);
            rec(mu, row + 1, left - take, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(mu, 1, r, &mut Vec::new(), &mut out);
    out
}

/// All α-admissible chains from ∅ to `λ`, in lexicographic order of steps.
pub fn admissible_chains(lambda: &Partition, alpha: &Composition, k: usize) -> Result<Vec<Chain>> {
    lambda.require_k_bounded(k)?;
    if alpha.degree() != lambda.degree() {
        return Err(Error::DegreeMismatch { left: lambda.degree(), right: alpha.degree() });
    }
    let mut memo = HashMap::new();
    let paths = admissible_below(lambda, alpha.parts(), k, &mut memo)?;
    let mut chains: Vec<Chain> = paths.into_iter().map(|steps| Chain { k, steps }).collect();
    chains.sort();
    Ok(chains)
}

type AdmissibleMemo = HashMap<(Partition, usize), Vec<Vec<Partition>>>;

fn admissible_below(
    lambda: &Partition,
    alpha: &[usize],
    k: usize,
    memo: &mut AdmissibleMemo,
) -> Result<Vec<Vec<Partition>>> {
    let Some((&last, rest)) = alpha.split_last() else {
        return Ok(if lambda.is_empty() { vec![vec![Partition::empty()]] } else { vec![] });
    };
    let key = (lambda.clone(), alpha.len());
    if let Some(v) = memo.get(&key) {
        return Ok(v.clone());
    }
    let lc = k_conjugate(lambda, k)?;
    let mut out = Vec::new();
    for nu in horizontal_strip_removals(lambda, last) {
        if !is_vertical_strip(&lc, &k_conjugate(&nu, k)?) {
            continue;
        }
        for mut path in admissible_below(&nu, rest, k, memo)? {
            path.push(lambda.clone());
            out.push(path);
        }
    }
    memo.insert(key, out.clone());
    Ok(out)
}

/// Number of α-admissible chains, counted without materializing them.
pub fn count_admissible_chains(lambda: &Partition, alpha: &Composition, k: usize) -> Result<u64> {
    fn rec(
        l: &Partition,
        alpha: &[usize],
        k: usize,
        memo: &mut HashMap<(Partition, usize), u64>,
    ) -> Result<u64> {
        let Some((&last, rest)) = alpha.split_last() else {
            return Ok(u64::from(l.is_empty()));
        };
        let key = (l.clone(), alpha.len());
        if let Some(&c) = memo.get(&key) {
            return Ok(c);
        }
        let lc = k_conjugate(l, k)?;
        let mut total = 0;
        for nu in horizontal_strip_removals(l, last) {
            if is_vertical_strip(&lc, &k_conjugate(&nu, k)?) {
                total += rec(&nu, rest, k, memo)?;
            }
        }
        memo.insert(key, total);
        Ok(total)
    }
    lambda.require_k_bounded(k)?;
    if alpha.degree() != lambda.degree() {
        return Err(Error::DegreeMismatch { left: lambda.degree(), right: alpha.degree() });
    }
    rec(lambda, alpha.parts(), k, &mut HashMap::new())
}

fn node_id(p: &Partition) -> String {
    if p.is_empty() {
        return "p".to_string();
    }
    let parts: Vec<String> = p.parts().iter().map(|x| x.to_string()).collect();
    format!("p{}", parts.join("_"))
}

fn node_label(p: &Partition) -> String {
    if p.is_empty() {
        "∅".to_string()
    } else {
        format!("({})", p)
    }
}

/// DOT rendering of the Hasse diagram on k-bounded partitions of degree at
/// most `n_max`. Edges point from a partition to its covers; `rankdir=BT`
/// draws ∅ at the bottom.
pub fn hasse_dot(n_max: usize, k: usize) -> Result<String> {
    if k == 0 {
        return Err(Error::InvalidK);
    }
    let mut out = String::new();
    writeln!(out, "digraph k_young_lattice {{").unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  label=\"k = {k}\";").unwrap();
    let nodes = Partition::bounded_up_to(n_max, k);
    for p in &nodes {
        writeln!(out, "  {} [label=\"{}\"];", node_id(p), node_label(p)).unwrap();
    }
    for p in &nodes {
        if p.degree() == n_max {
            continue;
        }
        for q in up_covers(p, k)? {
            writeln!(out, "  {} -> {};", node_id(p), node_id(&q)).unwrap();
        }
    }
    writeln!(out, "}}").unwrap();
    Ok(out)
}

/// Every cover edge `(λ, μ)` among k-bounded partitions of degree ≤ `n`.
pub fn hasse_edges(n: usize, k: usize) -> Result<Vec<(Partition, Partition)>> {
    let mut edges = Vec::new();
    for p in Partition::bounded_up_to(n.saturating_sub(1), k) {
        for q in up_covers(&p, k)? {
            edges.push((p.clone(), q));
        }
    }
    edges.sort();
    Ok(edges)
}
