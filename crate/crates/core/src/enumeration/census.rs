//! Cell counts for the spindle table and the absorption-multishelf table.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{canonical_form, enumerate_classes, Dedup, EnumeratedClass, Predicate};
use crate::algorithms::{orbit_invariance, reduce_by_orbits_with, ReductionMode};
use crate::complex::{ComplexPart, ScalarVector};
use crate::error::Result;
use crate::homology::homology_profile;
use crate::lattice::analyze_skew;
use crate::magma::{MultiMagma, OperationTable};

/// Which table to fill.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CensusTable {
    /// Spindles by unit/projector row and idempotent/associative/commutative
    /// column; brackets count failures of orbit invariance.
    Spindles,
    /// Generalized lattices by unit/projector counts and lattice/skew/general
    /// column; brackets count wrong predictions of the orbit reduction.
    Multishelves,
}

impl CensusTable {
    pub fn number(self) -> u8 {
        match self {
            CensusTable::Spindles => 1,
            CensusTable::Multishelves => 2,
        }
    }

    pub fn from_number(n: u8) -> Option<Self> {
        match n {
            1 => Some(CensusTable::Spindles),
            2 => Some(CensusTable::Multishelves),
            _ => None,
        }
    }

    pub fn rows(self) -> &'static [&'static str] {
        match self {
            CensusTable::Spindles => &["all spindles", "with a unit", "with a projector", "with both", "with none"],
            CensusTable::Multishelves => &[
                "All monoids",
                "2U + 2P",
                "1U + 2P",
                "1U + 1P",
                "0U + 2P",
                "0U + 1P",
                "0U + 0P",
            ],
        }
    }

    pub fn columns(self) -> &'static [&'static str] {
        match self {
            CensusTable::Spindles => &["any", "idempotent", "associative", "commutative"],
            CensusTable::Multishelves => &["lattice", "skew lattice", "gen. lattice"],
        }
    }
}

/// Scalars and degree bound for the bracketed counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketConfig {
    /// `(a, b)` on `(◁, ⋆)` for spindles, `(a₀, a₁, a₂, d)` on
    /// `(◁, ⋆₁, ⋆₂, ▷)` for multishelves. A structure counts once if any
    /// grid point fails.
    pub grid: Vec<Vec<i64>>,
    pub n_max: usize,
}

impl BracketConfig {
    pub fn default_for(table: CensusTable) -> Self {
        match table {
            CensusTable::Spindles => BracketConfig {
                grid: vec![vec![1, 1], vec![2, 1], vec![1, 2], vec![1, -2], vec![2, -1]],
                n_max: 2,
            },
            // Both orders of the two middle scalars, so that the count does
            // not depend on which operation a class lists first.
            CensusTable::Multishelves => BracketConfig {
                grid: vec![vec![4, 5, 2, 0], vec![4, 2, 5, 0]],
                n_max: 2,
            },
        }
    }
}

/// One cell under every deduplication convention.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub table: u8,
    pub row: String,
    pub column: String,
    pub raw: usize,
    pub iso: usize,
    pub iso_duality: usize,
    /// Classes in the cell for which the bracket test fails.
    pub bracket_iso: usize,
    pub bracket_iso_duality: usize,
    /// Fingerprints of up to three iso+duality classes in the cell.
    pub witnesses: Vec<String>,
}

impl fmt::Display for CensusRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<18} {:<13} raw {:>5}  iso {:>4} ({:>3})  iso+dual {:>4} ({:>3})",
            self.row, self.column, self.raw, self.iso, self.bracket_iso, self.iso_duality, self.bracket_iso_duality
        )
    }
}

/// Per-class flags, computed once per class.
struct Tagged {
    raw: usize,
    fingerprint: String,
    rows: Vec<bool>,
    columns: Vec<bool>,
    bracket: bool,
}

/// [`census_with`] using [`BracketConfig::default_for`].
pub fn census(sizes: RangeInclusive<usize>, table: CensusTable) -> Result<Vec<CensusRow>> {
    census_with(sizes, table, &BracketConfig::default_for(table))
}

/// Every cell of `table` over the carrier sizes in `sizes`, in row-major order.
pub fn census_with(sizes: RangeInclusive<usize>, table: CensusTable, cfg: &BracketConfig) -> Result<Vec<CensusRow>> {
    let predicate = match table {
        CensusTable::Spindles => Predicate::Spindle,
        CensusTable::Multishelves => Predicate::GeneralizedLattice,
    };
    let mut iso = Vec::new();
    let mut dual = Vec::new();
    for n in sizes {
        let skew = match table {
            CensusTable::Spindles => BTreeSet::new(),
            CensusTable::Multishelves => conjugated_images(n)?,
        };
        iso.extend(tag_all(enumerate_classes(n, predicate, Dedup::Iso)?, table, &skew, cfg)?);
        dual.extend(tag_all(enumerate_classes(n, predicate, Dedup::IsoDuality)?, table, &skew, cfg)?);
    }
    let mut out = Vec::new();
    for (r, row) in table.rows().iter().enumerate() {
        for (c, column) in table.columns().iter().enumerate() {
            let cell = |t: &&Tagged| t.rows[r] && t.columns[c];
            let in_dual: Vec<&Tagged> = dual.iter().filter(cell).collect();
            out.push(CensusRow {
                table: table.number(),
                row: row.to_string(),
                column: column.to_string(),
                raw: iso.iter().filter(cell).map(|t| t.raw).sum(),
                iso: iso.iter().filter(cell).count(),
                iso_duality: in_dual.len(),
                bracket_iso: iso.iter().filter(cell).filter(|t| t.bracket).count(),
                bracket_iso_duality: in_dual.iter().filter(|t| t.bracket).count(),
                witnesses: in_dual.iter().take(3).map(|t| t.fingerprint.clone()).collect(),
            });
        }
    }
    Ok(out)
}

fn tag_all(
    classes: Vec<EnumeratedClass>,
    table: CensusTable,
    skew: &BTreeSet<Vec<Vec<u8>>>,
    cfg: &BracketConfig,
) -> Result<Vec<Tagged>> {
    classes
        .par_iter()
        .map(|c| {
            let m = &c.magma;
            let (rows, columns, bracket) = match table {
                CensusTable::Spindles => spindle_flags(m, cfg)?,
                CensusTable::Multishelves => multishelf_flags(m, skew, cfg)?,
            };
            Ok(Tagged {
                raw: c.raw_count,
                fingerprint: m.fingerprint(),
                rows,
                columns,
                bracket,
            })
        })
        .collect()
}

fn spindle_flags(m: &MultiMagma, cfg: &BracketConfig) -> Result<(Vec<bool>, Vec<bool>, bool)> {
    let op = &m.ops()[0];
    let unit = !op.right_units().is_empty();
    let proj = !op.right_projectors().is_empty();
    let rows = vec![true, unit, proj, unit && proj, !unit && !proj];
    let columns = vec![true, op.is_bin_idempotent(), op.is_associative(), op.is_commutative()];
    let mut bracket = false;
    for s in &cfg.grid {
        if crate::complex::gcd(s[0], s[1]) == 1 && !orbit_invariance(m, s, cfg.n_max)?.1.is_empty() {
            bracket = true;
            break;
        }
    }
    Ok((rows, columns, bracket))
}

fn multishelf_flags(
    m: &MultiMagma,
    skew: &BTreeSet<Vec<Vec<u8>>>,
    cfg: &BracketConfig,
) -> Result<(Vec<bool>, Vec<bool>, bool)> {
    let units = m.ops().iter().filter(|op| !op.right_units().is_empty()).count();
    let projs = m.ops().iter().filter(|op| !op.right_projectors().is_empty()).count();
    let rows = vec![
        true,
        (units, projs) == (2, 2),
        (units, projs) == (1, 2),
        (units, projs) == (1, 1),
        (units, projs) == (0, 2),
        (units, projs) == (0, 1),
        (units, projs) == (0, 0),
    ];
    let lattice = m.ops().iter().all(OperationTable::is_commutative);
    let columns = vec![lattice, skew.contains(&raw_of(&canonical_form(m, false))), true];
    let n = m.size();
    let system = MultiMagma::new(vec![
        OperationTable::left_trivial(n)?,
        m.ops()[0].clone(),
        m.ops()[1].clone(),
        OperationTable::right_trivial(n)?,
    ])?;
    let mut bracket = false;
    for s in &cfg.grid {
        let s = ScalarVector::new(s.clone());
        let predicted = reduce_by_orbits_with(&system, &s, cfg.n_max, ReductionMode::Lenient)?;
        let actual = homology_profile(&system, &s, ComplexPart::cf(0), cfg.n_max)?;
        if predicted.homology.cf != actual.groups {
            bracket = true;
            break;
        }
    }
    Ok((rows, columns, bracket))
}

fn raw_of(m: &MultiMagma) -> Vec<Vec<u8>> {
    m.ops().iter().map(|op| op.raw().to_vec()).collect()
}

/// Canonical `(▽, △)` pairs, `x ▽ y = y ∨ x ∨ y` and `x △ y = y ∧ x ∧ y`,
/// over all skew lattices on `n` points; membership is tested on iso
/// canonical forms, which also covers the dual pairs.
fn conjugated_images(n: usize) -> Result<BTreeSet<Vec<Vec<u8>>>> {
    let mut out = BTreeSet::new();
    for c in enumerate_classes(n, Predicate::SkewLattice, Dedup::None)? {
        let ops = c.magma.ops();
        let info = analyze_skew(&ops[0], &ops[1])?;
        let (tri, delta) = info.conjugated_ops;
        for pair in [vec![tri.clone(), delta.clone()], vec![delta, tri]] {
            out.insert(raw_of(&canonical_form(&MultiMagma::new(pair)?, false)));
        }
    }
    Ok(out)
}

/// CSV with one line per cell.
pub fn to_csv(rows: &[CensusRow]) -> String {
    let mut out = String::from("table,row,column,raw,iso,iso_duality,bracket_iso,bracket_iso_duality,witnesses\n");
    for r in rows {
        out.push_str(&format!(
            "{},\"{}\",\"{}\",{},{},{},{},{},{}\n",
            r.table,
            r.row,
            r.column,
            r.raw,
            r.iso,
            r.iso_duality,
            r.bracket_iso,
            r.bracket_iso_duality,
            r.witnesses.join(";")
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_point_cells() {
        let rows = census(2..=2, CensusTable::Spindles).unwrap();
        let all = &rows[0];
        assert_eq!((all.raw, all.iso, all.iso_duality), (4, 3, 3));
        for r in &rows {
            assert!(r.iso <= r.raw && r.iso_duality <= r.iso, "{r}");
        }
    }

    #[test]
    fn csv_has_one_line_per_cell() {
        let rows = census(2..=2, CensusTable::Multishelves).unwrap();
        assert_eq!(rows.len(), 21);
        assert_eq!(to_csv(&rows).lines().count(), 22);
    }

    #[test]
    fn table_numbers_round_trip() {
        for t in [CensusTable::Spindles, CensusTable::Multishelves] {
            assert_eq!(CensusTable::from_number(t.number()), Some(t));
        }
    }
}
