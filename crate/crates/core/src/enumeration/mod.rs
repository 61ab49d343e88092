//! Exhaustive generation of small magmas up to relabeling.
//!
//! Single operations are filled cell by cell with every fully determined
//! axiom instance re-checked after each assignment; pairs are assembled from
//! the single-operation lists. Canonical forms are minimal concatenated
//! tables over all `size!` relabelings, so the deduplicated output is sorted
//! and independent of thread count.

mod census;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::magma::{MultiMagma, OperationTable};

pub use census::{census, census_with, to_csv, BracketConfig, CensusRow, CensusTable};

/// Largest carrier for single operations.
pub const MAX_SINGLE: usize = 5;
/// Largest carrier for pairs of operations.
pub const MAX_PAIR: usize = 4;

const UNSET: u8 = u8::MAX;

/// Which structures to generate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Predicate {
    /// One idempotent right self-distributive operation.
    Spindle,
    /// A spindle with `(x⋆y)⋆y = x⋆y`.
    BinIdempotentSpindle,
    /// An idempotent semigroup.
    Band,
    /// Idempotent, commutative, associative.
    Semilattice,
    /// `(∨, ∧)` of a distributive lattice.
    DistributiveLattice,
    /// `(∨, ∧)` of any lattice.
    Lattice,
    /// `(∧, ∨)`: bands with all four absorption identities.
    SkewLattice,
    /// Two mutually distributive spindles with absorption both ways.
    AbsorptionMultishelf,
    /// An absorption multishelf of Bin-idempotent operations.
    GeneralizedLattice,
}

impl Predicate {
    pub fn arity(self) -> usize {
        match self {
            Predicate::Spindle | Predicate::BinIdempotentSpindle | Predicate::Band | Predicate::Semilattice => 1,
            _ => 2,
        }
    }

    pub fn all() -> [Predicate; 9] {
        [
            Predicate::Spindle,
            Predicate::BinIdempotentSpindle,
            Predicate::Band,
            Predicate::Semilattice,
            Predicate::DistributiveLattice,
            Predicate::Lattice,
            Predicate::SkewLattice,
            Predicate::AbsorptionMultishelf,
            Predicate::GeneralizedLattice,
        ]
    }
}

/// Deduplication convention.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Dedup {
    None,
    Iso,
    /// Relabelings plus reversal of the operation order.
    IsoDuality,
}

#[derive(Clone, Copy, Default)]
struct Axioms {
    self_distributive: bool,
    bin_idempotent: bool,
    associative: bool,
    commutative: bool,
}

/// Whether every fully determined instance of the axioms holds.
fn consistent(t: &[u8], n: usize, ax: Axioms) -> bool {
    let at = |x: u8, y: u8| -> u8 {
        if x == UNSET || y == UNSET {
            UNSET
        } else {
            t[x as usize * n + y as usize]
        }
    };
    for x in 0..n as u8 {
        for y in 0..n as u8 {
            let xy = at(x, y);
            if xy == UNSET {
                continue;
            }
            if ax.commutative {
                let yx = at(y, x);
                if yx != UNSET && yx != xy {
                    return false;
                }
            }
            if ax.bin_idempotent {
                let v = at(xy, y);
                if v != UNSET && v != xy {
                    return false;
                }
            }
            for z in 0..n as u8 {
                if ax.self_distributive {
                    let l = at(xy, z);
                    let r = at(at(x, z), at(y, z));
                    if l != UNSET && r != UNSET && l != r {
                        return false;
                    }
                }
                if ax.associative {
                    let l = at(xy, z);
                    let r = at(x, at(y, z));
                    if l != UNSET && r != UNSET && l != r {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn fill(t: &mut Vec<u8>, n: usize, cells: &[usize], k: usize, ax: Axioms, out: &mut Vec<Vec<u8>>) {
    if k == cells.len() {
        out.push(t.clone());
        return;
    }
    for v in 0..n as u8 {
        t[cells[k]] = v;
        if consistent(t, n, ax) {
            fill(t, n, cells, k + 1, ax, out);
        }
    }
    t[cells[k]] = UNSET;
}

/// All idempotent tables on `n` points satisfying `ax`, in lexicographic order.
fn single_tables(n: usize, ax: Axioms) -> Vec<Vec<u8>> {
    let mut start = vec![UNSET; n * n];
    for x in 0..n {
        start[x * n + x] = x as u8;
    }
    let cells: Vec<usize> = (0..n * n).filter(|c| c / n != c % n).collect();
    if cells.is_empty() {
        return vec![start];
    }
    // Split on the first free cell; each branch is independent.
    let mut branches: Vec<(u8, Vec<Vec<u8>>)> = (0..n as u8)
        .into_par_iter()
        .map(|v| {
            let mut t = start.clone();
            t[cells[0]] = v;
            let mut out = Vec::new();
            if consistent(&t, n, ax) {
                fill(&mut t, n, &cells, 1, ax, &mut out);
            }
            (v, out)
        })
        .collect();
    branches.sort_by_key(|b| b.0);
    branches.into_iter().flat_map(|b| b.1).collect()
}

fn axioms_for(p: Predicate) -> Axioms {
    let spindle = Axioms {
        self_distributive: true,
        ..Axioms::default()
    };
    match p {
        Predicate::Spindle | Predicate::AbsorptionMultishelf => spindle,
        Predicate::BinIdempotentSpindle | Predicate::GeneralizedLattice => Axioms {
            bin_idempotent: true,
            ..spindle
        },
        Predicate::Band | Predicate::SkewLattice => Axioms {
            associative: true,
            ..Axioms::default()
        },
        Predicate::Semilattice | Predicate::Lattice | Predicate::DistributiveLattice => Axioms {
            associative: true,
            commutative: true,
            ..Axioms::default()
        },
    }
}

fn apply(t: &[u8], n: usize, x: usize, y: usize) -> usize {
    t[x * n + y] as usize
}

fn right_distributes(s: &[u8], o: &[u8], n: usize) -> bool {
    // (x ∘ y) ⋆ z = (x ⋆ z) ∘ (y ⋆ z)
    (0..n).all(|x| {
        (0..n).all(|y| {
            (0..n).all(|z| apply(s, n, apply(o, n, x, y), z) == apply(o, n, apply(s, n, x, z), apply(s, n, y, z)))
        })
    })
}

fn absorbs(first: &[u8], second: &[u8], n: usize) -> bool {
    (0..n).all(|x| (0..n).all(|y| apply(second, n, apply(first, n, x, y), y) == y))
}

/// `x∧(x∨y) = x = (y∨x)∧x` and `x∨(x∧y) = x = (y∧x)∨x`.
fn skew_absorption(land: &[u8], lor: &[u8], n: usize) -> bool {
    (0..n).all(|x| {
        (0..n).all(|y| {
            apply(land, n, x, apply(lor, n, x, y)) == x
                && apply(land, n, apply(lor, n, y, x), x) == x
                && apply(lor, n, x, apply(land, n, x, y)) == x
                && apply(lor, n, apply(land, n, y, x), x) == x
        })
    })
}

fn lattice_distributive(join: &[u8], meet: &[u8], n: usize) -> bool {
    (0..n).all(|x| {
        (0..n).all(|y| {
            (0..n).all(|z| apply(meet, n, x, apply(join, n, y, z)) == apply(join, n, apply(meet, n, x, y), apply(meet, n, x, z)))
        })
    })
}

fn pair_ok(p: Predicate, a: &[u8], b: &[u8], n: usize) -> bool {
    match p {
        Predicate::Lattice => absorbs(a, b, n) && absorbs(b, a, n),
        Predicate::DistributiveLattice => absorbs(a, b, n) && absorbs(b, a, n) && lattice_distributive(a, b, n),
        Predicate::SkewLattice => skew_absorption(a, b, n),
        Predicate::AbsorptionMultishelf | Predicate::GeneralizedLattice => {
            absorbs(a, b, n) && absorbs(b, a, n) && right_distributes(a, b, n) && right_distributes(b, a, n)
        }
        _ => unreachable!("single-operation predicate"),
    }
}

/// Raw tables (one `Vec<u8>` per operation) in deterministic order.
fn raw_structures(n: usize, p: Predicate) -> Vec<Vec<Vec<u8>>> {
    let singles = single_tables(n, axioms_for(p));
    if p.arity() == 1 {
        return singles.into_iter().map(|t| vec![t]).collect();
    }
    singles
        .par_iter()
        .map(|a| {
            singles
                .iter()
                .filter(|b| pair_ok(p, a, b, n))
                .map(|b| vec![a.clone(), b.clone()])
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// The table of `op` under the relabeling `x ↦ perm[x]`.
fn relabel_raw(t: &[u8], n: usize, perm: &[usize]) -> Vec<u8> {
    let mut out = vec![0u8; n * n];
    for x in 0..n {
        for y in 0..n {
            out[perm[x] * n + perm[y]] = perm[t[x * n + y] as usize] as u8;
        }
    }
    out
}

/// Lexicographically minimal relabeling; with `duality`, the reversed
/// operation order competes too.
fn canonical_raw(ops: &[Vec<u8>], n: usize, perms: &[Vec<usize>], duality: bool) -> Vec<Vec<u8>> {
    let mut best: Option<Vec<Vec<u8>>> = None;
    let mut orders = vec![ops.to_vec()];
    if duality && ops.len() > 1 {
        orders.push(ops.iter().rev().cloned().collect());
    }
    for order in &orders {
        for perm in perms {
            let cand: Vec<Vec<u8>> = order.iter().map(|t| relabel_raw(t, n, perm)).collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.expect("at least one permutation")
}

fn to_magma(ops: &[Vec<u8>], n: usize) -> Result<MultiMagma> {
    let tables = ops
        .iter()
        .map(|t| OperationTable::from_fn(n, |x, y| t[x * n + y] as usize))
        .collect::<Result<Vec<_>>>()?;
    MultiMagma::new(tables)
}

/// One deduplicated class with the number of raw structures it stands for.
#[derive(Clone, Debug)]
pub struct EnumeratedClass {
    pub magma: MultiMagma,
    /// Raw structures in the class.
    pub raw_count: usize,
}

fn check_size(size: usize, p: Predicate) -> Result<()> {
    let limit = if p.arity() == 1 { MAX_SINGLE } else { MAX_PAIR };
    if size == 0 || size > limit {
        return Err(Error::Precondition(format!(
            "enumeration of {p:?} is limited to carriers of size 1..={limit}, got {size}"
        )));
    }
    Ok(())
}

/// Classes under `dedup`, sorted by canonical table, with raw multiplicities.
pub fn enumerate_classes(size: usize, predicate: Predicate, dedup: Dedup) -> Result<Vec<EnumeratedClass>> {
    check_size(size, predicate)?;
    let raw = raw_structures(size, predicate);
    if dedup == Dedup::None {
        return raw
            .iter()
            .map(|ops| {
                Ok(EnumeratedClass {
                    magma: to_magma(ops, size)?,
                    raw_count: 1,
                })
            })
            .collect();
    }
    let perms = permutations(size);
    let duality = dedup == Dedup::IsoDuality;
    let keys: Vec<Vec<Vec<u8>>> = raw.par_iter().map(|ops| canonical_raw(ops, size, &perms, duality)).collect();
    let mut classes: BTreeMap<Vec<Vec<u8>>, usize> = BTreeMap::new();
    for k in keys {
        *classes.entry(k).or_default() += 1;
    }
    classes
        .into_iter()
        .map(|(ops, raw_count)| {
            Ok(EnumeratedClass {
                magma: to_magma(&ops, size)?,
                raw_count,
            })
        })
        .collect()
}

/// Every structure of the given size satisfying `predicate`, one per class.
pub fn enumerate(size: usize, predicate: Predicate, dedup: Dedup) -> Result<Vec<MultiMagma>> {
    Ok(enumerate_classes(size, predicate, dedup)?
        .into_iter()
        .map(|c| c.magma)
        .collect())
}

/// Canonical form of a magma under relabeling (and optionally op reversal).
pub fn canonical_form(m: &MultiMagma, duality: bool) -> MultiMagma {
    let n = m.size();
    let raw: Vec<Vec<u8>> = m.ops().iter().map(|op| op.raw().to_vec()).collect();
    let canon = canonical_raw(&raw, n, &permutations(n), duality);
    to_magma(&canon, n).expect("relabeling preserves validity")
}

/// Whether some relabeling maps `a` onto `b`, by direct search.
pub fn isomorphic(a: &MultiMagma, b: &MultiMagma) -> bool {
    if a.size() != b.size() || a.num_ops() != b.num_ops() {
        return false;
    }
    permutations(a.size())
        .iter()
        .any(|p| a.relabel(p).is_ok_and(|r| r == *b))
}
