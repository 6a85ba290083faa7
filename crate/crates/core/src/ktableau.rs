//! Standard and semi-standard k-tableaux.
//!
//! A k-tableau is a filling of a (k+1)-core whose rows weakly increase and
//! whose columns strictly increase (French convention, rows listed bottom-up),
//! such that the cells holding letter `a` carry exactly `α_a` distinct
//! residues. Standard tableaux are those of evaluation `(1, …, 1)`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cores::{c_map, p_map, Core};
use crate::error::{Error, Result};
use crate::lattice::{admissible_chains, Chain};
use crate::partition::{residue, Cell, Composition, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TableauRepr", into = "TableauRepr")]
pub struct KTableau {
    shape: Core,
    rows: Vec<Vec<usize>>,
    evaluation: Composition,
}

#[derive(Serialize, Deserialize)]
struct TableauRepr {
    k: usize,
    shape: Partition,
    rows: Vec<Vec<usize>>,
    evaluation: Vec<usize>,
}

impl From<KTableau> for TableauRepr {
    fn from(t: KTableau) -> Self {
        TableauRepr {
            k: t.k(),
            evaluation: t.evaluation.parts().to_vec(),
            shape: t.shape.into_shape(),
            rows: t.rows,
        }
    }
}

impl TryFrom<TableauRepr> for KTableau {
    type Error = Error;

    fn try_from(r: TableauRepr) -> Result<Self> {
        let shape = Core::new(r.shape, r.k)?;
        KTableau::new(shape, r.rows, Composition::new(r.evaluation)?)
    }
}

/// One relabeling step of standardization: every remaining cell holding
/// `letter` with residue `residue` becomes `new_letter`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StandardizeStep {
    pub letter: usize,
    pub residue: usize,
    pub new_letter: usize,
}

impl KTableau {
    /// Checks every defining condition; the error names the first failure.
    pub fn new(shape: Core, rows: Vec<Vec<usize>>, evaluation: Composition) -> Result<Self> {
        let t = KTableau { shape, rows, evaluation };
        t.validate()?;
        Ok(t)
    }

    /// Builds a tableau from its rows alone, reading the evaluation off the
    /// residues of each letter.
    pub fn from_rows(rows: Vec<Vec<usize>>, k: usize) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|_| Error::InvalidTableau("row lengths do not form a partition".into()))?;
        if rows.iter().any(|r| r.is_empty()) {
            return Err(Error::InvalidTableau("empty row".into()));
        }
        let shape = Core::new(shape, k)?;
        let max = rows.iter().flatten().copied().max().unwrap_or(0);
        let mut residues = vec![BTreeSet::new(); max + 1];
        for (r, row) in rows.iter().enumerate() {
            for (c, &a) in row.iter().enumerate() {
                residues[a].insert(residue(Cell::new(r + 1, c + 1), k));
            }
        }
        let eval: Vec<usize> = residues[1.min(max + 1)..].iter().map(BTreeSet::len).collect();
        if let Some(a) = eval.iter().position(|&n| n == 0) {
            return Err(Error::InvalidTableau(format!("letter {} does not occur", a + 1)));
        }
        KTableau::new(shape, rows, Composition::new(eval)?)
    }

    pub fn empty(k: usize) -> Self {
        KTableau {
            shape: Core::empty(k),
            rows: Vec::new(),
            evaluation: Composition::new(Vec::new()).expect("empty composition"),
        }
    }

    pub fn k(&self) -> usize {
        self.shape.k()
    }

    pub fn shape(&self) -> &Core {
        &self.shape
    }

    /// Rows bottom-up.
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn evaluation(&self) -> &Composition {
        &self.evaluation
    }

    /// The k-bounded partition `p(shape)`.
    pub fn bounded_shape(&self) -> Partition {
        p_map(&self.shape)
    }

    pub fn letter_count(&self) -> usize {
        self.evaluation.len()
    }

    pub fn get(&self, cell: Cell) -> Option<usize> {
        self.rows.get(cell.row.checked_sub(1)?)?.get(cell.col.checked_sub(1)?).copied()
    }

    pub fn cells_of_letter(&self, a: usize) -> Vec<Cell> {
        self.entries().filter(|&(_, b)| b == a).map(|(c, _)| c).collect()
    }

    /// `(cell, letter)` pairs, bottom row first, left to right.
    pub fn entries(&self) -> impl Iterator<Item = (Cell, usize)> + '_ {
        self.rows.iter().enumerate().flat_map(|(r, row)| {
            row.iter().enumerate().map(move |(c, &a)| (Cell::new(r + 1, c + 1), a))
        })
    }

    /// Letters read bottom row first, each row left to right.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    pub fn is_standard(&self) -> bool {
        self.evaluation.parts().iter().all(|&a| a == 1)
    }

    pub fn validate(&self) -> Result<()> {
        let k = self.k();
        let shape = self.shape.shape();
        let bad = |msg: String| Err(Error::InvalidTableau(msg));
        if self.rows.len() != shape.len() {
            return bad(format!("{} rows for a shape with {} rows", self.rows.len(), shape.len()));
        }
        for (r, row) in self.rows.iter().enumerate() {
            if row.len() != shape.part(r + 1) {
                return bad(format!("row {} has length {}, expected {}", r + 1, row.len(), shape.part(r + 1)));
            }
        }
        let m = self.evaluation.len();
        for (cell, a) in self.entries() {
            if a == 0 || a > m {
                return bad(format!("letter {a} at {cell} is outside 1..={m}"));
            }
            if cell.col > 1 && self.get(Cell::new(cell.row, cell.col - 1)).unwrap() > a {
                return bad(format!("row decreases at {cell}"));
            }
            if cell.row > 1 && self.get(Cell::new(cell.row - 1, cell.col)).unwrap() >= a {
                return bad(format!("column does not strictly increase at {cell}"));
            }
        }
        let mut residues = vec![BTreeSet::new(); m];
        for (cell, a) in self.entries() {
            residues[a - 1].insert(residue(cell, k));
        }
        for (a, (set, &want)) in residues.iter().zip(self.evaluation.parts()).enumerate() {
            if set.len() != want {
                return bad(format!("letter {} occupies {} residues, evaluation requires {}", a + 1, set.len(), want));
            }
        }
        let hooks = self.shape.bounded_hook_count();
        if self.evaluation.degree() != hooks {
            return bad(format!("evaluation has degree {}, shape has {} k-bounded hooks", self.evaluation.degree(), hooks));
        }
        Ok(())
    }

    /// Removes every occurrence of the largest letter.
    pub fn delete_max_letter(&self) -> Result<KTableau> {
        let m = self.letter_count();
        if m == 0 {
            return Err(Error::EmptyTableau);
        }
        let rows: Vec<Vec<usize>> = self
            .rows
            .iter()
            .map(|row| row.iter().copied().filter(|&a| a != m).collect::<Vec<_>>())
            .filter(|row| !row.is_empty())
            .collect();
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        let shape = Core::new(shape, self.k())?;
        let evaluation = Composition::new(self.evaluation.parts()[..m - 1].to_vec())?;
        KTableau::new(shape, rows, evaluation)
    }

    pub fn standardize(&self) -> KTableau {
        self.standardize_with_trace().0
    }

    /// Standardization, with the `(letter, residue, new letter)` triple of
    /// every relabeling step in the order performed.
    pub fn standardize_with_trace(&self) -> (KTableau, Vec<StandardizeStep>) {
        let k = self.k();
        let total = self.evaluation.degree();
        let mut rows = self.rows.clone();
        let mut done: Vec<Vec<bool>> = rows.iter().map(|r| vec![false; r.len()]).collect();
        let mut trace = Vec::with_capacity(total);
        for t in (1..=total).rev() {
            let mut best: Option<(usize, Cell)> = None;
            for (r, row) in self.rows.iter().enumerate() {
                for (c, &a) in row.iter().enumerate() {
                    if done[r][c] {
                        continue;
                    }
                    let cell = Cell::new(r + 1, c + 1);
                    // largest letter, then rightmost cell
                    let better = match best {
                        None => true,
                        Some((b, bc)) => a > b || (a == b && cell.col > bc.col),
                    };
                    if better {
                        best = Some((a, cell));
                    }
                }
            }
            let (a, cell) = best.expect("one unprocessed cell per remaining step");
            let i = residue(cell, k);
            for (r, row) in self.rows.iter().enumerate() {
                for (c, &b) in row.iter().enumerate() {
                    if !done[r][c] && b == a && residue(Cell::new(r + 1, c + 1), k) == i {
                        rows[r][c] = t;
                        done[r][c] = true;
                    }
                }
            }
            trace.push(StandardizeStep { letter: a, residue: i, new_letter: t });
        }
        let t = KTableau { shape: self.shape.clone(), rows, evaluation: Composition::ones(total) };
        debug_assert!(t.validate().is_ok());
        (t, trace)
    }

    /// Residues of letters `m, m-1, …, 1`.
    pub fn to_reduced_word(&self) -> Result<Vec<usize>> {
        if !self.is_standard() {
            return Err(Error::NotStandard);
        }
        let k = self.k();
        let mut word = vec![0; self.letter_count()];
        for (cell, a) in self.entries() {
            word[a - 1] = residue(cell, k);
        }
        word.reverse();
        Ok(word)
    }

    /// Inverse of [`KTableau::to_reduced_word`]: letter `ℓ` fills the cells
    /// added by the `ℓ`-th operator, applying the word from the right.
    pub fn from_reduced_word(word: &[usize], k: usize) -> Result<KTableau> {
        if k == 0 {
            return Err(Error::InvalidK);
        }
        let m = word.len();
        let mut core = Core::empty(k);
        let mut rows: Vec<Vec<usize>> = Vec::new();
        for (idx, &i) in word.iter().enumerate().rev() {
            let letter = m - idx;
            let next = core.apply_si(i)?;
            if next.shape().degree() <= core.shape().degree() {
                return Err(Error::NotReducedWord { position: idx + 1 });
            }
            for (r, &len) in next.shape().parts().iter().enumerate() {
                if r == rows.len() {
                    rows.push(Vec::new());
                }
                rows[r].resize(len, letter);
            }
            core = next;
        }
        Ok(KTableau { shape: core, rows, evaluation: Composition::ones(m) })
    }

    /// The chain of k-bounded partitions `p(shape of letters ≤ j)`.
    pub fn gamma_inv(&self) -> Result<Chain> {
        let k = self.k();
        let mut steps = vec![Partition::empty()];
        for j in 1..=self.letter_count() {
            let parts: Vec<usize> = self
                .rows
                .iter()
                .map(|row| row.iter().filter(|&&a| a <= j).count())
                .take_while(|&n| n > 0)
                .collect();
            let core = Core::new(Partition::new(parts)?, k)?;
            steps.push(p_map(&core));
        }
        Chain::new(k, steps)
    }

    /// Plain-text layout, top row first.
    pub fn to_text(&self) -> String {
        if self.rows.is_empty() {
            return "∅".to_string();
        }
        let width = self.reading_word().iter().max().map_or(1, |m| m.to_string().len());
        self.rows
            .iter()
            .rev()
            .map(|row| row.iter().map(|a| format!("{a:>width$}")).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl fmt::Display for KTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Fills `c(λ^{(j)}) / c(λ^{(j-1)})` with letter `j`. The chain must be
/// admissible; its degree increments become the evaluation.
pub fn gamma(chain: &Chain) -> Result<KTableau> {
    let k = chain.k;
    if !chain.is_admissible() {
        return Err(Error::InvalidChain("chain is not admissible".into()));
    }
    let top = c_map(chain.top(), k)?;
    let mut rows: Vec<Vec<usize>> = top.shape().parts().iter().map(|&n| vec![0; n]).collect();
    let mut prev = Core::empty(k);
    for (j, step) in chain.steps.iter().enumerate().skip(1) {
        let core = c_map(step, k)?;
        if !prev.shape().is_subset_of(core.shape()) {
            return Err(Error::InvalidChain(format!("cores of steps {} and {} are not nested", j - 1, j)));
        }
        for cell in core.shape().cells().filter(|&c| !prev.shape().contains_cell(c)) {
            rows[cell.row - 1][cell.col - 1] = j;
        }
        prev = core;
    }
    KTableau::new(top, rows, chain.increments())
}

/// Standard k-tableaux of shape `c(λ)`, ordered by reading word.
pub fn enumerate_standard(lambda: &Partition, k: usize) -> Result<Vec<KTableau>> {
    enumerate_semistandard(lambda, &Composition::ones(lambda.degree()), k)
}

/// Semi-standard k-tableaux of shape `c(λ)` and evaluation `α`, ordered by
/// reading word.
pub fn enumerate_semistandard(lambda: &Partition, alpha: &Composition, k: usize) -> Result<Vec<KTableau>> {
    let mut out = admissible_chains(lambda, alpha, k)?
        .iter()
        .map(gamma)
        .collect::<Result<Vec<_>>>()?;
    out.sort_by_cached_key(KTableau::reading_word);
    Ok(out)
}

/// The least number of k-bounded hooks of a (k+1)-core containing `ν`.
pub fn min_fill_count(nu: &Partition, k: usize) -> Result<usize> {
    if k == 0 {
        return Err(Error::InvalidK);
    }
    // c(λ) runs over all cores with |λ| k-bounded hooks
    for m in 0.. {
        for lambda in Partition::bounded(m, k) {
            if nu.is_subset_of(c_map(&lambda, k)?.shape()) {
                return Ok(m);
            }
        }
    }
    unreachable!()
}
