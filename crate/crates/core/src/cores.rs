//! (k+1)-cores and their correspondence with k-bounded partitions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{residue, Cell, Partition, SkewShape};

/// A partition with no hook of length exactly `k+1`, tagged with its `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "CoreRepr", into = "CoreRepr")]
pub struct Core {
    k: usize,
    shape: Partition,
}

#[derive(Serialize, Deserialize)]
struct CoreRepr {
    k: usize,
    shape: Partition,
}

impl TryFrom<CoreRepr> for Core {
    type Error = Error;

    fn try_from(r: CoreRepr) -> Result<Self> {
        Core::new(r.shape, r.k)
    }
}

impl From<Core> for CoreRepr {
    fn from(c: Core) -> Self {
        CoreRepr { k: c.k, shape: c.shape }
    }
}

impl Core {
    /// Validates that `shape` has no `(k+1)`-hook. The error names the first
    /// offending cell, bottom row first and left to right within a row.
    pub fn new(shape: Partition, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidK);
        }
        for (i, row) in shape.hook_lengths().iter().enumerate() {
            if let Some(j) = row.iter().position(|&h| h == k + 1) {
                return Err(Error::NotACore { cell: Cell::new(i + 1, j + 1), k });
            }
        }
        Ok(Core { k, shape })
    }

    pub(crate) fn new_unchecked(shape: Partition, k: usize) -> Self {
        debug_assert!(Core::new(shape.clone(), k).is_ok(), "{shape:?} k={k}");
        Core { k, shape }
    }

    pub fn empty(k: usize) -> Self {
        Core { k, shape: Partition::empty() }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn into_shape(self) -> Partition {
        self.shape
    }

    fn check_residue(&self, i: usize) -> Result<()> {
        if i > self.k {
            return Err(Error::InvalidResidue { residue: i, k: self.k });
        }
        Ok(())
    }

    /// Cells whose hook exceeds `k`, as a partition.
    pub fn rho(&self) -> Partition {
        let k = self.k;
        let parts = self
            .shape
            .hook_lengths()
            .iter()
            .map(|row| row.iter().take_while(|&&h| h > k).count())
            .collect();
        Partition::from_parts_unchecked(parts)
    }

    /// Row-by-row count of cells with hook length at most `k`.
    pub fn k_bounded_partition(&self) -> Partition {
        let k = self.k;
        let parts: Vec<usize> = self
            .shape
            .hook_lengths()
            .iter()
            .map(|row| row.iter().filter(|&&h| h <= k).count())
            .collect();
        Partition::new(parts).expect("bounded-hook row counts of a core form a partition")
    }

    /// Total number of cells with hook length at most `k`.
    pub fn bounded_hook_count(&self) -> usize {
        let k = self.k;
        self.shape.hook_lengths().iter().flatten().filter(|&&h| h <= k).count()
    }

    pub fn conjugate(&self) -> Core {
        Core { k: self.k, shape: self.shape.conjugate() }
    }

    /// Addable corners of residue `i`, top-left to bottom-right.
    pub fn addable_corners_of_residue(&self, i: usize) -> Result<Vec<Cell>> {
        self.check_residue(i)?;
        let mut v: Vec<Cell> =
            self.shape.addable_corners().into_iter().filter(|&c| residue(c, self.k) == i).collect();
        v.reverse();
        Ok(v)
    }

    /// Removable corners of residue `i`, top-left to bottom-right.
    pub fn removable_corners_of_residue(&self, i: usize) -> Result<Vec<Cell>> {
        self.check_residue(i)?;
        let mut v: Vec<Cell> =
            self.shape.removable_corners().into_iter().filter(|&c| residue(c, self.k) == i).collect();
        v.reverse();
        Ok(v)
    }

    /// Toggles every corner of residue `i`: removes all removable ones if any
    /// exist, else adds all addable ones, else returns the core unchanged.
    pub fn apply_si(&self, i: usize) -> Result<Core> {
        let removable = self.removable_corners_of_residue(i)?;
        if !removable.is_empty() {
            return Ok(Core::new_unchecked(self.shape.with_cells_removed(&removable), self.k));
        }
        let addable = self.addable_corners_of_residue(i)?;
        if !addable.is_empty() {
            return Ok(Core::new_unchecked(self.shape.with_cells_added(&addable), self.k));
        }
        Ok(self.clone())
    }

    /// Acts by `s_{w_1} ⋯ s_{w_ℓ}` on this core, the last letter acting first.
    pub fn apply_word(&self, word: &[usize]) -> Result<Core> {
        word.iter().rev().try_fold(self.clone(), |c, &i| c.apply_si(i))
    }
}

impl fmt::Display for Core {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.shape.fmt(f)
    }
}

/// Validated construction of a core.
pub fn validate_core(p: Partition, k: usize) -> Result<Core> {
    Core::new(p, k)
}

/// The k-bounded partition counting bounded hooks row by row.
pub fn p_map(core: &Core) -> Partition {
    core.k_bounded_partition()
}

/// The core whose bounded hooks are counted by `lambda`.
pub fn c_map(lambda: &Partition, k: usize) -> Result<Core> {
    Ok(k_skew(lambda, k)?.into_outer_core())
}

/// Skew diagram `γ/ρ(γ)` of a core, tagged with `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "KSkewRepr", try_from = "KSkewRepr")]
pub struct KSkew {
    k: usize,
    skew: SkewShape,
}

#[derive(Serialize, Deserialize)]
struct KSkewRepr {
    k: usize,
    outer: Partition,
    inner: Partition,
}

impl From<KSkew> for KSkewRepr {
    fn from(s: KSkew) -> Self {
        KSkewRepr { k: s.k, outer: s.skew.outer().clone(), inner: s.skew.inner().clone() }
    }
}

impl TryFrom<KSkewRepr> for KSkew {
    type Error = Error;

    fn try_from(r: KSkewRepr) -> Result<Self> {
        let core = Core::new(r.outer, r.k)?;
        if core.rho() != r.inner {
            return Err(Error::NotContained);
        }
        let inner = core.rho();
        Ok(KSkew { k: r.k, skew: SkewShape::new(core.into_shape(), inner)? })
    }
}

impl KSkew {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn skew(&self) -> &SkewShape {
        &self.skew
    }

    pub fn outer(&self) -> &Partition {
        self.skew.outer()
    }

    pub fn inner(&self) -> &Partition {
        self.skew.inner()
    }

    pub fn into_outer_core(self) -> Core {
        Core::new_unchecked(self.skew.outer().clone(), self.k)
    }
}

/// Builds the k-skew diagram of `lambda` from the top row down, placing each
/// new bottom row as far left as possible without creating a hook above `k`.
pub fn k_skew(lambda: &Partition, k: usize) -> Result<KSkew> {
    lambda.require_k_bounded(k)?;
    let rows = lambda.parts();
    // skew rows from top down, stored as (offset, length); column counts of the skew so far
    let mut offsets = vec![0usize; rows.len()];
    let mut col_count: Vec<usize> = Vec::new();
    let mut prev_offset = 0usize;
    for (idx, &len) in rows.iter().enumerate().rev() {
        let column = |c: usize| col_count.get(c).copied().unwrap_or(0);
        let mut a = prev_offset;
        // hook of the new row's cell in column s (0-based): arm + leg + 1
        while (a..a + len).any(|s| (a + len - s - 1) + column(s) + 1 > k) {
            a += 1;
        }
        offsets[idx] = a;
        if col_count.len() < a + len {
            col_count.resize(a + len, 0);
        }
        for c in &mut col_count[a..a + len] {
            *c += 1;
        }
        prev_offset = a;
    }
    let outer: Vec<usize> = offsets.iter().zip(rows).map(|(a, l)| a + l).collect();
    let outer = Partition::new(outer).expect("leftmost placement yields a partition");
    let inner = Partition::new(offsets).expect("offsets are weakly decreasing");
    Ok(KSkew { k, skew: SkewShape::new(outer, inner)? })
}

/// Column lengths of the k-skew diagram; equal to `p_map(c_map(λ)')`.
pub fn k_conjugate(lambda: &Partition, k: usize) -> Result<Partition> {
    let skew = k_skew(lambda, k)?;
    let cols: Vec<usize> = skew.skew().column_lengths().into_iter().filter(|&c| c > 0).collect();
    Ok(Partition::new(cols).expect("k-skew column lengths weakly decrease"))
}

/// `s_{w_1} ⋯ s_{w_ℓ} · ∅`, the last letter acting first.
pub fn core_from_word(word: &[usize], k: usize) -> Result<Core> {
    if k == 0 {
        return Err(Error::InvalidK);
    }
    Core::empty(k).apply_word(word)
}

/// All (k+1)-cores with exactly `n` cells.
pub fn cores_of_size(n: usize, k: usize) -> Vec<Core> {
    Partition::all(n).into_iter().filter_map(|p| Core::new(p, k).ok()).collect()
}

/// All (k+1)-cores with at most `n` cells.
pub fn cores_up_to(n: usize, k: usize) -> Vec<Core> {
    (0..=n).flat_map(|m| cores_of_size(m, k)).collect()
}
