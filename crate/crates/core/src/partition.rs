//! Partitions, cells, skew shapes and compositions.
//!
//! Diagrams use the French convention: row 1 is the bottom (longest) row and
//! cells are addressed 1-based as `(row, col)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A lattice square `(row, col)`, both 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[usize; 2]", into = "[usize; 2]")]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// The diagonal index `col - row`.
    pub fn content(self) -> i64 {
        self.col as i64 - self.row as i64
    }

    /// `(col - row) mod (k+1)`.
    pub fn residue(self, k: usize) -> usize {
        residue(self, k)
    }
}

impl From<[usize; 2]> for Cell {
    fn from([row, col]: [usize; 2]) -> Self {
        Cell { row, col }
    }
}

impl From<Cell> for [usize; 2] {
    fn from(c: Cell) -> Self {
        [c.row, c.col]
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// The (k+1)-residue of a cell.
pub fn residue(cell: Cell, k: usize) -> usize {
    cell.content().rem_euclid(k as i64 + 1) as usize
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates weak decrease; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub(crate) fn from_parts_unchecked(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of row `row` (1-based); zero past the last row.
    pub fn part(&self, row: usize) -> usize {
        if row == 0 {
            return usize::MAX;
        }
        self.0.get(row - 1).copied().unwrap_or(0)
    }

    pub fn largest_part(&self) -> usize {
        self.part(1)
    }

    pub fn is_k_bounded(&self, k: usize) -> bool {
        self.largest_part() <= k
    }

    pub(crate) fn require_k_bounded(&self, k: usize) -> Result<()> {
        if k == 0 {
            return Err(Error::InvalidK);
        }
        if !self.is_k_bounded(k) {
            return Err(Error::NotKBounded { partition: self.to_string(), k });
        }
        Ok(())
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.part(cell.row)
    }

    /// All cells, bottom row first, left to right.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| Cell::new(i + 1, j)))
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.largest_part();
        let parts = (1..=cols)
            .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition(parts)
    }

    /// Length of column `col` (1-based).
    pub fn column_length(&self, col: usize) -> usize {
        self.0.iter().take_while(|&&p| p >= col).count()
    }

    /// Classical hook length of a cell of the diagram.
    pub fn hook_length(&self, cell: Cell) -> Result<usize> {
        if !self.contains_cell(cell) {
            return Err(Error::CellOutside { cell });
        }
        let arm = self.part(cell.row) - cell.col;
        let leg = self.column_length(cell.col) - cell.row;
        Ok(arm + leg + 1)
    }

    /// Hook lengths of every cell, indexed `[row-1][col-1]`.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.0
            .iter()
            .enumerate()
            .map(|(i, &len)| {
                (0..len)
                    .map(|j| (len - j - 1) + (conj.0[j] - i - 1) + 1)
                    .collect()
            })
            .collect()
    }

    /// `self ⊆ other` componentwise.
    pub fn is_subset_of(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Dominance `self ⊵ other`. Errors unless the degrees agree.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        let (a, b) = (self.degree(), other.degree());
        if a != b {
            return Err(Error::DegreeMismatch { left: a, right: b });
        }
        let mut sa = 0;
        let mut sb = 0;
        for i in 0..self.len().max(other.len()) {
            sa += self.0.get(i).copied().unwrap_or(0);
            sb += other.0.get(i).copied().unwrap_or(0);
            if sa < sb {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Addable corners, bottom row first. For the empty partition this is `[(1,1)]`.
    pub fn addable_corners(&self) -> Vec<Cell> {
        (1..=self.len() + 1)
            .filter(|&r| r == 1 || self.part(r - 1) > self.part(r))
            .map(|r| Cell::new(r, self.part(r) + 1))
            .collect()
    }

    /// Removable corners, bottom row first.
    pub fn removable_corners(&self) -> Vec<Cell> {
        (1..=self.len())
            .filter(|&r| self.part(r) > self.part(r + 1))
            .map(|r| Cell::new(r, self.part(r)))
            .collect()
    }

    /// Adds one cell at the end of `row`; `None` if the result is not a partition.
    pub fn add_to_row(&self, row: usize) -> Option<Partition> {
        if row == 0 || row > self.len() + 1 || (row > 1 && self.part(row - 1) <= self.part(row)) {
            return None;
        }
        let mut parts = self.0.clone();
        if row == parts.len() + 1 {
            parts.push(1);
        } else {
            parts[row - 1] += 1;
        }
        Some(Partition(parts))
    }

    /// Removes the last cell of `row`; `None` if the result is not a partition.
    pub fn remove_from_row(&self, row: usize) -> Option<Partition> {
        if row == 0 || row > self.len() || self.part(row) <= self.part(row + 1) {
            return None;
        }
        let mut parts = self.0.clone();
        parts[row - 1] -= 1;
        Some(Partition::from_parts_unchecked(parts))
    }

    /// Adds the given cells (which must form addable positions in some order).
    pub(crate) fn with_cells_added(&self, cells: &[Cell]) -> Partition {
        let rows = cells.iter().map(|c| c.row).max().unwrap_or(0).max(self.len());
        let mut parts = self.0.clone();
        parts.resize(rows, 0);
        for c in cells {
            parts[c.row - 1] += 1;
        }
        Partition::from_parts_unchecked(parts)
    }

    pub(crate) fn with_cells_removed(&self, cells: &[Cell]) -> Partition {
        let mut parts = self.0.clone();
        for c in cells {
            parts[c.row - 1] -= 1;
        }
        Partition::from_parts_unchecked(parts)
    }

    /// All partitions of `n` in reverse lexicographic order, `(n)` first.
    pub fn all(n: usize) -> Vec<Partition> {
        Self::bounded(n, n)
    }

    /// All partitions of `n` with parts at most `k`, reverse lexicographic order.
    pub fn bounded(n: usize, k: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=max.min(rest)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, k, &mut Vec::new(), &mut out);
        out
    }

    /// All k-bounded partitions with degree at most `n`, by degree then reverse lex.
    pub fn bounded_up_to(n: usize, k: usize) -> Vec<Partition> {
        (0..=n).flat_map(|m| Self::bounded(m, k)).collect()
    }
}

/// `inner ⊆ outer`.
pub fn contains(inner: &Partition, outer: &Partition) -> bool {
    inner.is_subset_of(outer)
}

/// `outer/inner` is a horizontal strip: containment and `inner_r ≥ outer_{r+1}`.
pub fn is_horizontal_strip(outer: &Partition, inner: &Partition) -> bool {
    inner.is_subset_of(outer) && (1..=outer.len()).all(|r| inner.part(r) >= outer.part(r + 1))
}

/// `outer/inner` is a vertical strip: containment and `outer_r - inner_r ∈ {0,1}`.
pub fn is_vertical_strip(outer: &Partition, inner: &Partition) -> bool {
    inner.is_subset_of(outer) && (1..=outer.len()).all(|r| outer.part(r) - inner.part(r) <= 1)
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    /// Comma-separated parts; `-` for the empty partition.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","))
    }
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let t = s.trim();
    let t = t.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(t).trim();
    if t.is_empty() || t == "-" || t == "∅" {
        return Ok(Vec::new());
    }
    t.split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|_| Error::Parse(s.to_string())))
        .collect()
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `4,2,1,1`, `(4,2,1,1)`, and `-` or the empty string for ∅.
    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_parts(s)?;
        if parts.contains(&0) {
            return Err(Error::Parse(s.to_string()));
        }
        Partition::new(parts)
    }
}

/// A skew shape `outer/inner` with `inner ⊆ outer`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !inner.is_subset_of(&outer) {
            return Err(Error::NotContained);
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        self.outer.contains_cell(cell) && !self.inner.contains_cell(cell)
    }

    /// Cells of the skew, bottom row first.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (1..=self.outer.len()).flat_map(move |r| {
            (self.inner.part(r) + 1..=self.outer.part(r)).map(move |c| Cell::new(r, c))
        })
    }

    pub fn row_lengths(&self) -> Vec<usize> {
        (1..=self.outer.len()).map(|r| self.outer.part(r) - self.inner.part(r)).collect()
    }

    pub fn column_lengths(&self) -> Vec<usize> {
        let oc = self.outer.conjugate();
        let ic = self.inner.conjugate();
        (1..=oc.len()).map(|c| oc.part(c) - ic.part(c)).collect()
    }

    /// Number of skew cells in the hook with corner `cell`; `cell` may lie in
    /// the inner shape.
    pub fn hook_length(&self, cell: Cell) -> Result<usize> {
        if !self.outer.contains_cell(cell) {
            return Err(Error::CellOutside { cell });
        }
        let Cell { row, col } = cell;
        let arm = self.outer.part(row) - col.max(self.inner.part(row));
        let leg = (row + 1..=self.outer.len())
            .filter(|&r| self.inner.part(r) < col && col <= self.outer.part(r))
            .count();
        Ok(arm + leg + usize::from(self.contains_cell(cell)))
    }
}

/// A sequence of positive integers whose order matters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::NotAComposition(parts));
        }
        Ok(Composition(parts))
    }

    /// `(1,1,…,1)` with `n` parts.
    pub fn ones(n: usize) -> Self {
        Composition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Parts sorted into a partition.
    pub fn sorted(&self) -> Partition {
        let mut parts = self.0.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Distinct rearrangements of the parts of `p`, lexicographically increasing.
    pub fn rearrangements(p: &Partition) -> Vec<Composition> {
        let mut cur: Vec<usize> = p.parts().to_vec();
        cur.sort_unstable();
        let mut out = vec![Composition(cur.clone())];
        // next lexicographic permutation
        loop {
            let n = cur.len();
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
            out.push(Composition(cur.clone()));
        }
        out
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition(p.parts().to_vec())
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_parts(s)?;
        Composition::new(parts).map_err(|_| Error::Parse(s.to_string()))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[4, 2]).conjugate(), p(&[2, 2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[9, 5, 3, 2, 1, 1]).conjugate(), p(&[6, 4, 3, 2, 2, 1, 1, 1, 1]));
    }

    #[test]
    fn conjugate_is_involution() {
        for n in 0..=15 {
            for l in Partition::all(n) {
                assert_eq!(l.conjugate().conjugate(), l);
            }
        }
    }

    #[test]
    fn skew_hooks_match_worked_example() {
        let s = SkewShape::new(p(&[5, 5, 4, 1]), p(&[4, 2])).unwrap();
        assert_eq!(s.hook_length(Cell::new(1, 3)).unwrap(), 3);
        assert_eq!(s.hook_length(Cell::new(3, 2)).unwrap(), 3);
        assert!(s.hook_length(Cell::new(4, 2)).is_err());
        let single = SkewShape::new(p(&[1]), Partition::empty()).unwrap();
        assert_eq!(single.hook_length(Cell::new(1, 1)).unwrap(), 1);
    }

    #[test]
    fn skew_hook_with_empty_inner_is_classical() {
        for n in 0..=10 {
            for l in Partition::all(n) {
                let s = SkewShape::new(l.clone(), Partition::empty()).unwrap();
                let hooks = l.hook_lengths();
                for c in l.cells() {
                    let arm = l.part(c.row) - c.col;
                    let leg = l.column_length(c.col) - c.row;
                    assert_eq!(s.hook_length(c).unwrap(), arm + leg + 1);
                    assert_eq!(hooks[c.row - 1][c.col - 1], arm + leg + 1);
                }
            }
        }
    }

    #[test]
    fn residues() {
        assert_eq!(residue(Cell::new(1, 1), 4), 0);
        assert_eq!(residue(Cell::new(2, 1), 4), 4);
        assert_eq!(residue(Cell::new(1, 6), 4), 0);
    }

    #[test]
    fn containment_and_dominance() {
        assert!(contains(&p(&[2, 2]), &p(&[3, 2, 1, 1, 1, 1])));
        assert!(!contains(&p(&[3, 2, 1, 1, 1, 1]), &p(&[2, 2])));
        assert!(p(&[2, 2]).dominates(&p(&[2, 2])).unwrap());
        assert!(p(&[3, 1]).dominates(&p(&[2, 2])).unwrap());
        assert!(!p(&[2, 2]).dominates(&p(&[3, 1])).unwrap());
        assert_eq!(
            p(&[2, 2]).dominates(&p(&[2, 1])),
            Err(Error::DegreeMismatch { left: 4, right: 3 })
        );
    }

    #[test]
    fn strips() {
        let outer = p(&[3, 2, 1, 1, 1, 1]);
        let inner = p(&[2, 2]);
        assert!(!is_horizontal_strip(&outer, &inner));
        assert!(is_horizontal_strip(&outer, &outer) && is_vertical_strip(&outer, &outer));
        assert!(is_horizontal_strip(&p(&[3, 1]), &p(&[2, 1])));
        assert!(is_vertical_strip(&p(&[3, 1]), &p(&[2, 1])));
        assert!(!is_horizontal_strip(&p(&[2]), &p(&[1, 1])));
    }

    #[test]
    fn corners() {
        assert_eq!(
            p(&[6, 2, 1, 1]).removable_corners(),
            vec![Cell::new(1, 6), Cell::new(2, 2), Cell::new(4, 1)]
        );
        assert_eq!(Partition::empty().addable_corners(), vec![Cell::new(1, 1)]);
        assert!(Partition::empty().removable_corners().is_empty());
        assert_eq!(p(&[1]).removable_corners(), vec![Cell::new(1, 1)]);
        assert_eq!(p(&[1]).addable_corners(), vec![Cell::new(1, 2), Cell::new(2, 1)]);
    }

    #[test]
    fn addable_exceeds_removable_by_one() {
        for n in 0..=12 {
            for l in Partition::all(n) {
                assert_eq!(l.addable_corners().len(), l.removable_corners().len() + 1);
            }
        }
    }

    #[test]
    fn skew_hooks_decrease_northeast() {
        // weakly decreasing rows (bottom to top) and columns (left to right)
        for n in 0..=10 {
            for outer in Partition::all(n) {
                for m in 0..=n {
                    for inner in Partition::all(m) {
                        let Ok(s) = SkewShape::new(outer.clone(), inner) else { continue };
                        let rows = s.row_lengths();
                        let cols = s.column_lengths();
                        if rows.windows(2).any(|w| w[0] < w[1]) || cols.windows(2).any(|w| w[0] < w[1]) {
                            continue;
                        }
                        let cells: Vec<Cell> = outer.cells().collect();
                        for &a in &cells {
                            for &b in &cells {
                                if a == b || a.row > b.row || a.col > b.col {
                                    continue;
                                }
                                let (ha, hb) = (s.hook_length(a).unwrap(), s.hook_length(b).unwrap());
                                assert!(ha >= hb, "{outer:?}/{:?} {a} {b}", s.inner());
                                let strict = (s.contains_cell(a) && s.contains_cell(b))
                                    || (!s.contains_cell(a) && s.contains_cell(b));
                                if strict {
                                    assert!(ha > hb);
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("4,2,1,1".parse::<Partition>().unwrap(), p(&[4, 2, 1, 1]));
        assert_eq!("-".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("(3, 1)".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert!("1,2".parse::<Partition>().is_err());
        assert!("4,x".parse::<Partition>().is_err());
        assert_eq!(p(&[4, 2]).to_string(), "4,2");
        assert_eq!(Partition::empty().to_string(), "-");
    }

    #[test]
    fn json_encodings() {
        assert_eq!(serde_json::to_string(&p(&[4, 2])).unwrap(), "[4,2]");
        assert_eq!(serde_json::to_string(&Cell::new(3, 2)).unwrap(), "[3,2]");
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(Partition::all(4)[0], p(&[4]));
        assert_eq!(Partition::bounded(4, 2), vec![p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]);
    }

    #[test]
    fn rearrangements_are_distinct() {
        let r = Composition::rearrangements(&p(&[2, 1, 1]));
        let v: Vec<Vec<usize>> = r.into_iter().map(Vec::from).collect();
        assert_eq!(v, vec![vec![1, 1, 2], vec![1, 2, 1], vec![2, 1, 1]]);
    }
}
