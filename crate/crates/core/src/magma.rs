//! Finite sets with binary operations and the axiom checks used throughout
//! the crate.
//!
//! Elements are the indices `0..size`. An [`OperationTable`] stores one binary
//! operation `x ⋆ y` in row-major order (`row = x`, `column = y`), and a
//! [`MultiMagma`] bundles an ordered list of such tables over one carrier
//! together with a [`StructureReport`] computed once at construction.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest carrier supported by the compact table storage.
pub const MAX_SIZE: usize = 256;

/// One binary operation on `{0, …, size-1}`.
///
/// Serialises as its list of rows.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<Vec<usize>>", try_from = "Vec<Vec<usize>>")]
pub struct OperationTable {
    size: usize,
    table: Vec<u8>,
}

impl fmt::Debug for OperationTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

impl From<OperationTable> for Vec<Vec<usize>> {
    fn from(op: OperationTable) -> Self {
        op.rows()
    }
}

impl TryFrom<Vec<Vec<usize>>> for OperationTable {
    type Error = Error;
    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        OperationTable::new(&rows)
    }
}

impl OperationTable {
    /// Builds a table from rows, `rows[x][y] = x ⋆ y`.
    pub fn new(rows: &[Vec<usize>]) -> Result<Self> {
        let size = rows.len();
        check_size(size)?;
        let mut table = Vec::with_capacity(size * size);
        for (x, row) in rows.iter().enumerate() {
            if row.len() != size {
                return Err(Error::Parse(format!(
                    "row {x} has {} entries, expected {size}",
                    row.len()
                )));
            }
            for (y, &v) in row.iter().enumerate() {
                if v >= size {
                    return Err(Error::Parse(format!(
                        "entry [{x}][{y}] = {v} is not an element index below {size}"
                    )));
                }
                table.push(v as u8);
            }
        }
        Ok(OperationTable { size, table })
    }

    /// Builds a table by evaluating `f` on every pair.
    pub fn from_fn(size: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let rows: Vec<Vec<usize>> = (0..size)
            .map(|x| (0..size).map(|y| f(x, y)).collect())
            .collect();
        Self::new(&rows)
    }

    pub(crate) fn from_raw(size: usize, table: Vec<u8>) -> Self {
        debug_assert_eq!(table.len(), size * size);
        OperationTable { size, table }
    }

    /// The left trivial operation `x ◁ y = x`.
    pub fn left_trivial(size: usize) -> Result<Self> {
        Self::from_fn(size, |x, _| x)
    }

    /// The right trivial operation `x ▷ y = y`.
    pub fn right_trivial(size: usize) -> Result<Self> {
        Self::from_fn(size, |_, y| y)
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    /// `x ⋆ y`.
    #[inline]
    pub fn apply(&self, x: usize, y: usize) -> usize {
        self.table[x * self.size + y] as usize
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.size)
            .map(|x| (0..self.size).map(|y| self.apply(x, y)).collect())
            .collect()
    }

    pub fn is_left_trivial(&self) -> bool {
        self.pairs().all(|(x, y)| self.apply(x, y) == x)
    }

    pub fn is_right_trivial(&self) -> bool {
        self.pairs().all(|(x, y)| self.apply(x, y) == y)
    }

    fn pairs(&self) -> impl Iterator<Item = (usize, usize)> {
        let n = self.size;
        (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)))
    }

    fn triples(&self) -> impl Iterator<Item = (usize, usize, usize)> {
        let n = self.size;
        (0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))))
    }

    /// First `(x, y, z)` with `(x ∘ y) ⋆ z ≠ (x ⋆ z) ∘ (y ⋆ z)`, where `⋆` is
    /// `self` and `∘` is `other`.
    pub fn distributivity_witness(&self, other: &OperationTable) -> Option<(usize, usize, usize)> {
        assert_eq!(self.size, other.size);
        self.triples().find(|&(x, y, z)| {
            self.apply(other.apply(x, y), z) != other.apply(self.apply(x, z), self.apply(y, z))
        })
    }

    /// Whether `self` is right distributive with respect to `other`.
    pub fn distributes_over(&self, other: &OperationTable) -> bool {
        self.distributivity_witness(other).is_none()
    }

    pub fn is_self_distributive(&self) -> bool {
        self.distributes_over(self)
    }

    /// `x ⋆ x = x` for every element.
    pub fn is_idempotent(&self) -> bool {
        (0..self.size).all(|x| self.apply(x, x) == x)
    }

    /// `(x ⋆ y) ⋆ y = x ⋆ y`, i.e. the operation is idempotent in `Bin(X)`.
    pub fn is_bin_idempotent(&self) -> bool {
        self.pairs()
            .all(|(x, y)| self.apply(self.apply(x, y), y) == self.apply(x, y))
    }

    pub fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        self.triples().find(|&(x, y, z)| {
            self.apply(self.apply(x, y), z) != self.apply(x, self.apply(y, z))
        })
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_witness().is_none()
    }

    pub fn is_commutative(&self) -> bool {
        self.pairs().all(|(x, y)| self.apply(x, y) == self.apply(y, x))
    }

    /// Elements `u` with `x ⋆ u = x` for all `x`.
    pub fn right_units(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&u| (0..self.size).all(|x| self.apply(x, u) == x))
            .collect()
    }

    /// Elements `p` with `x ⋆ p = p` for all `x`.
    pub fn right_projectors(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&p| (0..self.size).all(|x| self.apply(x, p) == p))
            .collect()
    }

    /// Whether every right translation `x ↦ x ⋆ b` is a bijection.
    pub fn has_invertible_translations(&self) -> bool {
        (0..self.size).all(|b| {
            let image: BTreeSet<usize> = (0..self.size).map(|x| self.apply(x, b)).collect();
            image.len() == self.size
        })
    }

    /// The table transported along `perm`, so that
    /// `perm[x] ⋆' perm[y] = perm[x ⋆ y]`.
    pub fn relabel(&self, perm: &[usize]) -> OperationTable {
        let n = self.size;
        let mut table = vec![0u8; n * n];
        for (x, y) in self.pairs() {
            table[perm[x] * n + perm[y]] = perm[self.apply(x, y)] as u8;
        }
        OperationTable { size: n, table }
    }
}

/// Composition in the monoid `Bin(X)`: `x (s1·s2) y = (x s1 y) s2 y`.
pub fn compose_ops(s1: &OperationTable, s2: &OperationTable) -> Result<OperationTable> {
    if s1.size != s2.size {
        return Err(Error::SizeMismatch {
            expected: s1.size,
            found: s2.size,
        });
    }
    OperationTable::from_fn(s1.size, |x, y| s2.apply(s1.apply(x, y), y))
}

fn check_size(size: usize) -> Result<()> {
    if size == 0 {
        return Err(Error::Parse("carrier must be non-empty".into()));
    }
    if size > MAX_SIZE {
        return Err(Error::Parse(format!(
            "carrier size {size} exceeds the supported maximum {MAX_SIZE}"
        )));
    }
    Ok(())
}

/// Structural role an operation plays, recognised from its table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OpKind {
    LeftTrivial,
    RightTrivial,
    Essential,
}

/// Per-operation axiom flags.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperationFlags {
    pub kind: OpKind,
    pub self_distributive: bool,
    pub idempotent: bool,
    pub bin_idempotent: bool,
    pub associative: bool,
    pub commutative: bool,
    pub invertible_translations: bool,
    pub right_units: Vec<usize>,
    pub right_projectors: Vec<usize>,
}

/// Everything [`classify`] finds out about a [`MultiMagma`].
///
/// `distributes[i][j]` says that operation `i` is right distributive with
/// respect to operation `j`; `absorbs[i][j]` (for `i ≠ j`) that
/// `(x ⋆ᵢ y) ⋆ⱼ y = y`. The aggregate absorption, unitality and
/// irreducibility flags range over the essential operations only, i.e. the
/// ones that are neither `◁` nor `▷`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    pub ops: Vec<OperationFlags>,
    pub distributes: Vec<Vec<bool>>,
    pub absorbs: Vec<Vec<bool>>,
    pub is_multishelf: bool,
    pub is_multispindle: bool,
    pub satisfies_absorption: bool,
    pub is_unital: bool,
    pub is_irreducible: bool,
}

impl StructureReport {
    pub fn essential_ops(&self) -> Vec<usize> {
        (0..self.ops.len())
            .filter(|&i| self.ops[i].kind == OpKind::Essential)
            .collect()
    }
}

/// Computes every structure flag by exhaustive checks, `O(k²·n³)`.
pub fn classify(ops: &[OperationTable]) -> StructureReport {
    let k = ops.len();
    let kinds: Vec<OpKind> = ops.iter().map(op_kind).collect();
    let flags: Vec<OperationFlags> = ops
        .iter()
        .zip(&kinds)
        .map(|(op, &kind)| OperationFlags {
            kind,
            self_distributive: op.is_self_distributive(),
            idempotent: op.is_idempotent(),
            bin_idempotent: op.is_bin_idempotent(),
            associative: op.is_associative(),
            commutative: op.is_commutative(),
            invertible_translations: op.has_invertible_translations(),
            right_units: op.right_units(),
            right_projectors: op.right_projectors(),
        })
        .collect();
    let distributes: Vec<Vec<bool>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    if i == j {
                        flags[i].self_distributive
                    } else {
                        ops[i].distributes_over(&ops[j])
                    }
                })
                .collect()
        })
        .collect();
    let absorbs: Vec<Vec<bool>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| i != j && absorbs(&ops[i], &ops[j]))
                .collect()
        })
        .collect();
    let is_multishelf = distributes.iter().all(|row| row.iter().all(|&b| b));
    let is_multispindle = is_multishelf && flags.iter().all(|f| f.idempotent);
    let essential: Vec<usize> = (0..k).filter(|&i| kinds[i] == OpKind::Essential).collect();
    let satisfies_absorption = essential
        .iter()
        .all(|&i| essential.iter().all(|&j| i == j || absorbs[i][j]));
    let is_unital = essential.iter().all(|&i| !flags[i].right_units.is_empty());
    let size = ops.first().map_or(0, |op| op.size());
    let is_irreducible = !essential.is_empty()
        && (0..size).all(|x| essential.iter().any(|&i| orbit_of(&ops[i], x).len() == size));
    StructureReport {
        ops: flags,
        distributes,
        absorbs,
        is_multishelf,
        is_multispindle,
        satisfies_absorption,
        is_unital,
        is_irreducible,
    }
}

fn op_kind(op: &OperationTable) -> OpKind {
    if op.is_left_trivial() {
        OpKind::LeftTrivial
    } else if op.is_right_trivial() {
        OpKind::RightTrivial
    } else {
        OpKind::Essential
    }
}

fn absorbs(first: &OperationTable, second: &OperationTable) -> bool {
    first
        .pairs()
        .all(|(x, y)| second.apply(first.apply(x, y), y) == y)
}

fn orbit_of(op: &OperationTable, x: usize) -> Vec<usize> {
    let set: BTreeSet<usize> = (0..op.size()).map(|y| op.apply(y, x)).collect();
    set.into_iter().collect()
}

/// A carrier with an ordered, non-empty list of operations.
///
/// Immutable after construction; the [`StructureReport`] is computed eagerly.
#[derive(Clone, Debug)]
pub struct MultiMagma {
    size: usize,
    ops: Vec<OperationTable>,
    labels: Option<Vec<String>>,
    report: StructureReport,
}

impl PartialEq for MultiMagma {
    fn eq(&self, other: &Self) -> bool {
        self.ops == other.ops
    }
}

impl Eq for MultiMagma {}

impl MultiMagma {
    pub fn new(ops: Vec<OperationTable>) -> Result<Self> {
        Self::with_labels(ops, None)
    }

    pub fn with_labels(ops: Vec<OperationTable>, labels: Option<Vec<String>>) -> Result<Self> {
        let Some(first) = ops.first() else {
            return Err(Error::Parse("at least one operation is required".into()));
        };
        let size = first.size();
        for op in &ops {
            if op.size() != size {
                return Err(Error::SizeMismatch {
                    expected: size,
                    found: op.size(),
                });
            }
        }
        if let Some(labels) = &labels {
            if labels.len() != ops.len() {
                return Err(Error::Parse(format!(
                    "{} labels given for {} operations",
                    labels.len(),
                    ops.len()
                )));
            }
        }
        let report = classify(&ops);
        Ok(MultiMagma {
            size,
            ops,
            labels,
            report,
        })
    }

    /// Convenience constructor from nested row vectors.
    pub fn from_rows(tables: &[Vec<Vec<usize>>]) -> Result<Self> {
        let ops = tables
            .iter()
            .map(|rows| OperationTable::new(rows))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ops)
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn ops(&self) -> &[OperationTable] {
        &self.ops
    }

    pub fn op(&self, i: usize) -> Result<&OperationTable> {
        self.ops.get(i).ok_or(Error::OutOfRange {
            what: "operation index",
            index: i,
            limit: self.ops.len(),
        })
    }

    pub fn num_ops(&self) -> usize {
        self.ops.len()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn report(&self) -> &StructureReport {
        &self.report
    }

    pub fn is_multishelf(&self) -> bool {
        self.report.is_multishelf
    }

    pub fn is_multispindle(&self) -> bool {
        self.report.is_multispindle
    }

    /// Indices of the operations that are neither `◁` nor `▷`.
    pub fn essential_ops(&self) -> Vec<usize> {
        self.report.essential_ops()
    }

    fn check_element(&self, x: usize) -> Result<()> {
        if x >= self.size {
            return Err(Error::OutOfRange {
                what: "element",
                index: x,
                limit: self.size,
            });
        }
        Ok(())
    }

    /// The right orbit `X ⋆ᵢ x`, sorted.
    pub fn orbit(&self, op_index: usize, x: usize) -> Result<Vec<usize>> {
        let op = self.op(op_index)?;
        self.check_element(x)?;
        Ok(orbit_of(op, x))
    }

    /// Restricts every operation to `subset`, which must be closed under all
    /// of them. Returns the re-indexed magma and the map from new to old
    /// element indices (the sorted subset).
    pub fn restrict(&self, subset: &[usize]) -> Result<(MultiMagma, Vec<usize>)> {
        let elements: Vec<usize> = subset.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        if elements.is_empty() {
            return Err(Error::Precondition("cannot restrict to the empty set".into()));
        }
        for &x in &elements {
            self.check_element(x)?;
        }
        let mut position = vec![usize::MAX; self.size];
        for (i, &x) in elements.iter().enumerate() {
            position[x] = i;
        }
        let m = elements.len();
        let mut ops = Vec::with_capacity(self.ops.len());
        for (k, op) in self.ops.iter().enumerate() {
            let mut table = Vec::with_capacity(m * m);
            for &x in &elements {
                for &y in &elements {
                    let v = op.apply(x, y);
                    if position[v] == usize::MAX {
                        return Err(Error::NotClosed {
                            op: k,
                            x,
                            y,
                            result: v,
                        });
                    }
                    table.push(position[v] as u8);
                }
            }
            ops.push(OperationTable::from_raw(m, table));
        }
        Ok((MultiMagma::with_labels(ops, self.labels.clone())?, elements))
    }

    /// Adjoins `◁` in front and/or `▷` at the back of the operation list.
    ///
    /// `◁` may be added to any multishelf; `▷` requires a multispindle.
    pub fn augment_with_trivial(&self, add_left: bool, add_right: bool) -> Result<MultiMagma> {
        if add_left && !self.is_multishelf() {
            return Err(Error::axiom(
                "multishelf",
                "adjoining ◁ requires a distributive set of operations",
            ));
        }
        if add_right && !self.is_multispindle() {
            let witness = self
                .ops
                .iter()
                .enumerate()
                .find_map(|(i, op)| {
                    (0..self.size)
                        .find(|&x| op.apply(x, x) != x)
                        .map(|x| format!("op{i}: {x} ⋆ {x} = {}", op.apply(x, x)))
                })
                .unwrap_or_else(|| "operations are not mutually distributive".into());
            return Err(Error::axiom("multispindle (needed for ▷)", witness));
        }
        let mut ops = Vec::with_capacity(self.ops.len() + 2);
        let mut labels = self.labels.clone();
        if add_left {
            ops.push(OperationTable::left_trivial(self.size)?);
            if let Some(l) = labels.as_mut() {
                l.insert(0, "◁".into());
            }
        }
        ops.extend(self.ops.iter().cloned());
        if add_right {
            ops.push(OperationTable::right_trivial(self.size)?);
            if let Some(l) = labels.as_mut() {
                l.push("▷".into());
            }
        }
        MultiMagma::with_labels(ops, labels)
    }

    /// Swaps two operations; the duality `∨ ↔ ∧` of a lattice system.
    pub fn swap_ops(&self, i: usize, j: usize) -> Result<MultiMagma> {
        self.op(i)?;
        self.op(j)?;
        let mut ops = self.ops.clone();
        ops.swap(i, j);
        let mut labels = self.labels.clone();
        if let Some(l) = labels.as_mut() {
            l.swap(i, j);
        }
        MultiMagma::with_labels(ops, labels)
    }

    /// The dual system: the order of the essential operations is reversed,
    /// trivial operations stay where they are.
    pub fn dual(&self) -> MultiMagma {
        let ess = self.essential_ops();
        let mut ops = self.ops.clone();
        for (a, b) in ess.iter().zip(ess.iter().rev()) {
            ops[*a] = self.ops[*b].clone();
        }
        MultiMagma::with_labels(ops, self.labels.clone()).expect("same shape as self")
    }

    /// Relabels the carrier along `perm` (`perm[old] = new`).
    pub fn relabel(&self, perm: &[usize]) -> Result<MultiMagma> {
        let mut seen = vec![false; self.size];
        if perm.len() != self.size {
            return Err(Error::SizeMismatch {
                expected: self.size,
                found: perm.len(),
            });
        }
        for &p in perm {
            if p >= self.size || seen[p] {
                return Err(Error::Parse("relabelling is not a permutation".into()));
            }
            seen[p] = true;
        }
        let ops = self.ops.iter().map(|op| op.relabel(perm)).collect();
        MultiMagma::with_labels(ops, self.labels.clone())
    }

    /// Stable 64-bit FNV-1a fingerprint of the size and tables, as hex.
    pub fn fingerprint(&self) -> String {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        let mut feed = |b: u8| {
            h ^= b as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        };
        for b in (self.size as u32).to_le_bytes() {
            feed(b);
        }
        for op in &self.ops {
            feed(0xff);
            for &v in op.raw() {
                feed(v);
            }
        }
        format!("{h:016x}")
    }

    pub fn to_file(&self) -> MagmaFile {
        MagmaFile {
            size: self.size,
            ops: self.ops.iter().map(|op| op.rows()).collect(),
            labels: self.labels.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("serialisable")
    }

    pub fn from_json(text: &str) -> Result<MultiMagma> {
        let raw: RawMagmaFile = serde_json::from_str(text)?;
        raw.validate()
    }
}

/// The on-disk magma format: `ops[i][x][y] = x ⋆ᵢ y`, 0-indexed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MagmaFile {
    pub size: usize,
    pub ops: Vec<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Deserialize)]
struct RawMagmaFile {
    size: i64,
    ops: Vec<Vec<Vec<i64>>>,
    #[serde(default)]
    labels: Option<Vec<String>>,
}

impl RawMagmaFile {
    fn validate(self) -> Result<MultiMagma> {
        if self.size <= 0 {
            return Err(Error::Parse(format!("size must be positive, got {}", self.size)));
        }
        let size = self.size as usize;
        check_size(size)?;
        if self.ops.is_empty() {
            return Err(Error::Parse("ops: at least one operation is required".into()));
        }
        let mut ops = Vec::with_capacity(self.ops.len());
        for (i, op) in self.ops.iter().enumerate() {
            if op.len() != size {
                return Err(Error::Parse(format!(
                    "ops[{i}] has {} rows, expected {size}",
                    op.len()
                )));
            }
            let mut table = Vec::with_capacity(size * size);
            for (x, row) in op.iter().enumerate() {
                if row.len() != size {
                    return Err(Error::Parse(format!(
                        "ops[{i}][{x}] has {} entries, expected {size}",
                        row.len()
                    )));
                }
                for (y, &v) in row.iter().enumerate() {
                    if v < 0 || v as usize >= size {
                        return Err(Error::Parse(format!(
                            "ops[{i}][{x}][{y}] = {v} is out of range 0..{size}"
                        )));
                    }
                    table.push(v as u8);
                }
            }
            ops.push(OperationTable::from_raw(size, table));
        }
        MultiMagma::with_labels(ops, self.labels)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> (OperationTable, OperationTable) {
        (
            OperationTable::from_fn(n, |x, y| x.max(y)).unwrap(),
            OperationTable::from_fn(n, |x, y| x.min(y)).unwrap(),
        )
    }

    #[test]
    fn left_trivial_is_a_two_sided_unit() {
        let (join, _) = chain(3);
        let left = OperationTable::left_trivial(3).unwrap();
        assert_eq!(compose_ops(&join, &left).unwrap(), join);
        assert_eq!(compose_ops(&left, &join).unwrap(), join);
    }

    #[test]
    fn join_then_meet_is_right_projection() {
        let (join, meet) = chain(2);
        let right = OperationTable::right_trivial(2).unwrap();
        assert_eq!(compose_ops(&join, &meet).unwrap(), right);
        assert_eq!(compose_ops(&meet, &join).unwrap(), right);
    }

    #[test]
    fn join_is_bin_idempotent_on_chain() {
        let (join, _) = chain(3);
        assert_eq!(compose_ops(&join, &join).unwrap(), join);
    }

    #[test]
    fn compose_rejects_size_mismatch() {
        let (a, _) = chain(2);
        let (b, _) = chain(3);
        assert!(matches!(compose_ops(&a, &b), Err(Error::SizeMismatch { .. })));
    }

    #[test]
    fn boolean_algebra_b1_with_trivials() {
        let (join, meet) = chain(2);
        let m = MultiMagma::new(vec![join, meet])
            .unwrap()
            .augment_with_trivial(true, true)
            .unwrap();
        let r = m.report();
        assert!(r.is_multispindle);
        assert!(r.satisfies_absorption);
        assert!(r.absorbs[1][2] && r.absorbs[2][1]);
        assert_eq!(r.ops[1].right_units, vec![0]);
        assert_eq!(r.ops[1].right_projectors, vec![1]);
        assert_eq!(r.ops[0].kind, OpKind::LeftTrivial);
        assert_eq!(r.ops[3].kind, OpKind::RightTrivial);
    }

    #[test]
    fn left_trivial_alone() {
        let m = MultiMagma::new(vec![OperationTable::left_trivial(3).unwrap()]).unwrap();
        let f = &m.report().ops[0];
        assert!(m.is_multispindle());
        assert_eq!(f.right_units, vec![0, 1, 2]);
        assert!(f.right_projectors.is_empty());
        let one = MultiMagma::new(vec![OperationTable::left_trivial(1).unwrap()]).unwrap();
        assert_eq!(one.report().ops[0].right_projectors, vec![0]);
    }

    #[test]
    fn dihedral_quandle_r3() {
        let op = OperationTable::from_fn(3, |x, y| (2 * y + 3 - x) % 3).unwrap();
        let m = MultiMagma::new(vec![op]).unwrap();
        let f = &m.report().ops[0];
        assert!(m.is_multispindle());
        assert!(f.commutative);
        assert!(!f.associative);
        assert!(f.invertible_translations);
    }

    #[test]
    fn orbits_in_b1_and_chain() {
        let (join, meet) = chain(2);
        let b1 = MultiMagma::new(vec![join, meet]).unwrap();
        assert_eq!(b1.orbit(0, 1).unwrap(), vec![1]);
        assert_eq!(b1.orbit(0, 0).unwrap(), vec![0, 1]);
        let (join, meet) = chain(3);
        let l3 = MultiMagma::new(vec![join, meet]).unwrap();
        assert_eq!(l3.orbit(1, 1).unwrap(), vec![0, 1]);
        assert!(l3.orbit(2, 0).is_err());
        assert!(l3.orbit(0, 3).is_err());
    }

    #[test]
    fn restrict_reports_violations_and_identity() {
        let (join, meet) = chain(3);
        let l3 = MultiMagma::new(vec![join, meet]).unwrap();
        let (same, map) = l3.restrict(&[0, 1, 2]).unwrap();
        assert_eq!(same, l3);
        assert_eq!(map, vec![0, 1, 2]);
        let (point, _) = l3.restrict(&[0]).unwrap();
        assert_eq!(point.size(), 1);
        assert!(point.is_multispindle());
        // {0, 2} is closed in a chain, but in the diamond {1, 2} is not.
        let diamond = MultiMagma::from_rows(&[
            vec![vec![0, 1, 2, 3], vec![1, 1, 3, 3], vec![2, 3, 2, 3], vec![3, 3, 3, 3]],
            vec![vec![0, 0, 0, 0], vec![0, 1, 0, 1], vec![0, 0, 2, 2], vec![0, 1, 2, 3]],
        ])
        .unwrap();
        match diamond.restrict(&[1, 2]) {
            Err(Error::NotClosed { op: 0, x: 1, y: 2, result: 3 }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn right_trivial_needs_a_spindle() {
        // x ⋆ y = 0 is self-distributive but 1 ⋆ 1 = 0.
        let op = OperationTable::from_fn(2, |_, _| 0).unwrap();
        let m = MultiMagma::new(vec![op]).unwrap();
        assert!(m.is_multishelf());
        assert!(!m.is_multispindle());
        assert!(m.augment_with_trivial(true, false).is_ok());
        assert!(matches!(m.augment_with_trivial(false, true), Err(Error::Axiom { .. })));
    }

    #[test]
    fn json_diagnostics_are_positional() {
        let ragged = r#"{"size": 2, "ops": [[[0, 1], [1]]]}"#;
        let err = MultiMagma::from_json(ragged).unwrap_err().to_string();
        assert!(err.contains("ops[0][1]"), "{err}");
        let bad = r#"{"size": 2, "ops": [[[0, 1], [1, 2]]]}"#;
        let err = MultiMagma::from_json(bad).unwrap_err().to_string();
        assert!(err.contains("ops[0][1][1] = 2"), "{err}");
        let good = r#"{"size": 2, "ops": [[[0, 1], [1, 1]]], "labels": ["join"]}"#;
        let m = MultiMagma::from_json(good).unwrap();
        assert_eq!(MultiMagma::from_json(&m.to_json()).unwrap(), m);
        assert_eq!(m.labels().unwrap(), ["join".to_string()]);
    }

    #[test]
    fn fingerprint_is_stable() {
        let (join, meet) = chain(2);
        let a = MultiMagma::new(vec![join.clone(), meet.clone()]).unwrap();
        let b = MultiMagma::new(vec![join, meet]).unwrap();
        assert_eq!(a.fingerprint(), b.fingerprint());
        assert_ne!(a.fingerprint(), a.dual().fingerprint());
    }
}
