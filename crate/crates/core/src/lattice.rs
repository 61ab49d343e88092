//! Orders induced by semilattices, lattice invariants, the standard lattice
//! families and skew-lattice analysis.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::magma::{MultiMagma, OpKind, OperationTable};

/// A finite partial order; `leq(x, y)` reads `x ≤ y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Poset {
    size: usize,
    leq: Vec<bool>,
}

impl Poset {
    /// Builds a poset from a relation, verifying the three order axioms.
    pub fn from_relation(size: usize, rel: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let leq: Vec<bool> = (0..size * size).map(|i| rel(i / size, i % size)).collect();
        let p = Poset { size, leq };
        for x in 0..size {
            if !p.leq(x, x) {
                return Err(Error::axiom("reflexivity", format!("{x} ≰ {x}")));
            }
            for y in 0..size {
                if x != y && p.leq(x, y) && p.leq(y, x) {
                    return Err(Error::axiom("antisymmetry", format!("{x} ≤ {y} ≤ {x}")));
                }
                for z in 0..size {
                    if p.leq(x, y) && p.leq(y, z) && !p.leq(x, z) {
                        return Err(Error::axiom(
                            "transitivity",
                            format!("{x} ≤ {y} ≤ {z} but {x} ≰ {z}"),
                        ));
                    }
                }
            }
        }
        Ok(p)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.size + y]
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    /// `x ⋖ y`: `x < y` with nothing strictly in between.
    pub fn covers(&self, x: usize, y: usize) -> bool {
        self.lt(x, y) && !(0..self.size).any(|z| self.lt(x, z) && self.lt(z, y))
    }

    /// Cover relations `(lower, upper)` in lexicographic order.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let n = self.size;
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .filter(|&(x, y)| self.covers(x, y))
            .collect()
    }

    /// Edge-list rendering of the Hasse diagram, one `lower -> upper` per line.
    pub fn hasse_text(&self, names: Option<&[String]>) -> String {
        let name = |x: usize| names.map_or_else(|| x.to_string(), |n| n[x].clone());
        let mut out = String::new();
        for (x, y) in self.hasse_edges() {
            let _ = writeln!(out, "{} -> {}", name(x), name(y));
        }
        out
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&x| !(0..self.size).any(|y| self.lt(y, x)))
            .collect()
    }

    pub fn minimum(&self) -> Option<usize> {
        (0..self.size).find(|&x| (0..self.size).all(|y| self.leq(x, y)))
    }

    pub fn maximum(&self) -> Option<usize> {
        (0..self.size).find(|&x| (0..self.size).all(|y| self.leq(y, x)))
    }

    /// Number of cover steps in a longest chain.
    pub fn height(&self) -> usize {
        // Elements sorted by the size of their down-set form a linear extension.
        let mut order: Vec<usize> = (0..self.size).collect();
        order.sort_by_key(|&x| (0..self.size).filter(|&y| self.leq(y, x)).count());
        let mut depth = vec![0usize; self.size];
        for (i, &x) in order.iter().enumerate() {
            for &y in &order[..i] {
                if self.lt(y, x) {
                    depth[x] = depth[x].max(depth[y] + 1);
                }
            }
        }
        depth.into_iter().max().unwrap_or(0)
    }

    pub fn is_chain(&self) -> bool {
        (0..self.size).all(|x| (0..self.size).all(|y| self.leq(x, y) || self.leq(y, x)))
    }
}

/// The order `x ≤ y ⟺ x ⋆ y = y` of a semilattice `⋆`.
///
/// Every pair then has `x ⋆ y` as its least upper bound.
pub fn analyze_semilattice(op: &OperationTable) -> Result<Poset> {
    let n = op.size();
    if let Some(x) = (0..n).find(|&x| op.apply(x, x) != x) {
        return Err(Error::axiom("idempotency", format!("{x} ⋆ {x} = {}", op.apply(x, x))));
    }
    for x in 0..n {
        for y in 0..n {
            if op.apply(x, y) != op.apply(y, x) {
                return Err(Error::axiom(
                    "commutativity",
                    format!("{x} ⋆ {y} = {} but {y} ⋆ {x} = {}", op.apply(x, y), op.apply(y, x)),
                ));
            }
        }
    }
    if let Some((x, y, z)) = op.associativity_witness() {
        return Err(Error::axiom("associativity", format!("at ({x}, {y}, {z})")));
    }
    let poset = Poset::from_relation(n, |x, y| op.apply(x, y) == y)?;
    for x in 0..n {
        for y in 0..n {
            let j = op.apply(x, y);
            let least = (0..n)
                .filter(|&u| poset.leq(x, u) && poset.leq(y, u))
                .all(|u| poset.leq(j, u));
            if !least {
                return Err(Error::Invariant(format!("{x} ⋆ {y} is not a least upper bound")));
            }
        }
    }
    Ok(poset)
}

/// Invariants of a finite lattice `(L, ∨, ∧)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeInfo {
    pub poset: Poset,
    /// Non-minimal join-irreducible elements.
    pub join_irreducibles: Vec<usize>,
    #[serde(rename = "J")]
    pub j: usize,
    pub max_chain_length: usize,
    pub bottom: Option<usize>,
    pub top: Option<usize>,
    pub is_distributive: bool,
    pub is_chain: bool,
    join: OperationTable,
    meet: OperationTable,
}

impl LatticeInfo {
    pub fn size(&self) -> usize {
        self.poset.size()
    }

    pub fn join(&self) -> &OperationTable {
        &self.join
    }

    pub fn meet(&self) -> &OperationTable {
        &self.meet
    }

    /// The principal ideal `↓x = L ∧ x`.
    pub fn ideal(&self, x: usize) -> Vec<usize> {
        (0..self.size()).filter(|&y| self.poset.leq(y, x)).collect()
    }

    /// The principal filter `↑x = L ∨ x`.
    pub fn filter(&self, x: usize) -> Vec<usize> {
        (0..self.size()).filter(|&y| self.poset.leq(x, y)).collect()
    }
}

/// Verifies the lattice axioms for `(join, meet)` and computes its invariants.
pub fn analyze_lattice(join: &OperationTable, meet: &OperationTable) -> Result<LatticeInfo> {
    if join.size() != meet.size() {
        return Err(Error::SizeMismatch {
            expected: join.size(),
            found: meet.size(),
        });
    }
    let n = join.size();
    let poset = analyze_semilattice(join)?;
    analyze_semilattice(meet)?;
    for x in 0..n {
        for y in 0..n {
            if meet.apply(x, join.apply(x, y)) != x {
                return Err(Error::axiom("absorption", format!("{x} ∧ ({x} ∨ {y}) ≠ {x}")));
            }
            if join.apply(x, meet.apply(x, y)) != x {
                return Err(Error::axiom("absorption", format!("{x} ∨ ({x} ∧ {y}) ≠ {x}")));
            }
        }
    }
    let is_distributive = (0..n).all(|x| {
        (0..n).all(|y| {
            (0..n).all(|z| {
                meet.apply(x, join.apply(y, z)) == join.apply(meet.apply(x, y), meet.apply(x, z))
            })
        })
    });
    let bottom = poset.minimum();
    let join_irreducibles: Vec<usize> = (0..n)
        .filter(|&x| Some(x) != bottom)
        .filter(|&x| {
            (0..n).all(|a| (0..n).all(|b| join.apply(a, b) != x || a == x || b == x))
        })
        .collect();
    Ok(LatticeInfo {
        j: join_irreducibles.len(),
        join_irreducibles,
        max_chain_length: poset.height(),
        bottom,
        top: poset.maximum(),
        is_distributive,
        is_chain: poset.is_chain(),
        poset,
        join: join.clone(),
        meet: meet.clone(),
    })
}

/// Reads `(∨, ∧)` off a magma whose essential operations are exactly two.
pub fn lattice_info(m: &MultiMagma) -> Result<LatticeInfo> {
    let ess = m.essential_ops();
    match ess.as_slice() {
        [j, mt] => analyze_lattice(m.op(*j)?, m.op(*mt)?),
        _ if m.size() == 1 => {
            let t = OperationTable::left_trivial(1)?;
            analyze_lattice(&t, &t)
        }
        _ => Err(Error::Precondition(format!(
            "expected two essential operations (∨, ∧), found {}",
            ess.len()
        ))),
    }
}

/// The standard families built by [`build_standard`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StandardKind {
    /// The power set of an `n`-element set.
    Boolean(usize),
    /// The chain with `n` elements.
    Chain(usize),
    Product(Box<StandardKind>, Box<StandardKind>),
    N5,
    /// `k` operations on `k` points, `uᵢ ⋆ₛ uₛ = uᵢ` and `uᵢ ⋆ₛ uⱼ = uⱼ` for `j ≠ s`.
    B1k(usize),
}

/// Builds a standard structure.
///
/// Lattices come with the four operations `(◁, ∨, ∧, ▷)`; `B1k` carries only
/// its `k` absorbing operations.
pub fn build_standard(kind: &StandardKind) -> Result<MultiMagma> {
    match kind {
        StandardKind::B1k(k) => {
            if *k < 2 {
                return Err(Error::Precondition("B1k needs k ≥ 2".into()));
            }
            let ops = (0..*k)
                .map(|s| OperationTable::from_fn(*k, |x, y| if y == s { x } else { y }))
                .collect::<Result<Vec<_>>>()?;
            MultiMagma::new(ops)
        }
        _ => {
            let (join, meet) = lattice_tables(kind)?;
            MultiMagma::with_labels(
                vec![join, meet],
                Some(vec!["∨".to_string(), "∧".to_string()]),
            )?
            .augment_with_trivial(true, true)
        }
    }
}

/// The bare `(∨, ∧)` tables of a standard lattice.
pub fn lattice_tables(kind: &StandardKind) -> Result<(OperationTable, OperationTable)> {
    match kind {
        StandardKind::Chain(n) => {
            if *n == 0 {
                return Err(Error::Precondition("a chain needs at least one element".into()));
            }
            Ok((
                OperationTable::from_fn(*n, |x, y| x.max(y))?,
                OperationTable::from_fn(*n, |x, y| x.min(y))?,
            ))
        }
        StandardKind::Boolean(n) => {
            if *n > 8 {
                return Err(Error::Precondition(format!("B_{n} exceeds the carrier limit")));
            }
            let size = 1usize << n;
            Ok((
                OperationTable::from_fn(size, |x, y| x | y)?,
                OperationTable::from_fn(size, |x, y| x & y)?,
            ))
        }
        StandardKind::Product(a, b) => {
            let (ja, ma) = lattice_tables(a)?;
            let (jb, mb) = lattice_tables(b)?;
            let nb = jb.size();
            let size = ja.size() * nb;
            let pair = |op1: &OperationTable, op2: &OperationTable, x: usize, y: usize| {
                op1.apply(x / nb, y / nb) * nb + op2.apply(x % nb, y % nb)
            };
            Ok((
                OperationTable::from_fn(size, |x, y| pair(&ja, &jb, x, y))?,
                OperationTable::from_fn(size, |x, y| pair(&ma, &mb, x, y))?,
            ))
        }
        StandardKind::N5 => {
            // 0 < 1 < 2 < 4 and 0 < 3 < 4.
            let leq = |x: usize, y: usize| {
                x == y || x == 0 || y == 4 || (x == 1 && y == 2)
            };
            let join = |x: usize, y: usize| {
                (0..5).filter(|&u| leq(x, u) && leq(y, u)).find(|&u| {
                    (0..5).all(|v| !(leq(x, v) && leq(y, v)) || leq(u, v))
                })
                .expect("N5 has joins")
            };
            let meet = |x: usize, y: usize| {
                (0..5).filter(|&u| leq(u, x) && leq(u, y)).find(|&u| {
                    (0..5).all(|v| !(leq(v, x) && leq(v, y)) || leq(v, u))
                })
                .expect("N5 has meets")
            };
            Ok((OperationTable::from_fn(5, join)?, OperationTable::from_fn(5, meet)?))
        }
        StandardKind::B1k(_) => Err(Error::Precondition("B1k is not a lattice".into())),
    }
}

/// Analysis of a skew lattice `(L, ∧, ∨)`.
#[derive(Clone, Debug, Serialize)]
pub struct SkewLatticeInfo {
    /// Classes of `x ≼ y ≼ x`, each sorted, ordered by least element.
    pub d_classes: Vec<Vec<usize>>,
    /// `L/∼` with operations `(∨, ∧)`.
    #[serde(skip)]
    pub quotient: MultiMagma,
    pub quotient_map: Vec<usize>,
    /// `(▽, △)` with `x ▽ y = y ∨ x ∨ y` and `x △ y = y ∧ x ∧ y`.
    #[serde(skip)]
    pub conjugated_ops: (OperationTable, OperationTable),
    /// The natural partial order `x ∧ y = x = y ∧ x`.
    pub natural_order: Poset,
    pub is_symmetric: bool,
    pub is_rectangular: bool,
    pub is_distributive_skew: bool,
    pub has_unique_min: bool,
    pub has_unique_max: bool,
    /// Whether `(▽, △)` is a multispindle in which the two operations absorb
    /// each other.
    pub conjugates_form_multispindle: bool,
}

impl SkewLatticeInfo {
    /// The multispindle `(◁, ▽, △, ▷)` built from the conjugated operations.
    pub fn conjugated_system(&self) -> Result<MultiMagma> {
        let (v, t) = self.conjugated_ops.clone();
        let n = v.size();
        MultiMagma::new(vec![
            OperationTable::left_trivial(n)?,
            v,
            t,
            OperationTable::right_trivial(n)?,
        ])
    }
}

/// Verifies the skew-lattice axioms and computes D-classes, the quotient
/// lattice and the conjugated operations.
pub fn analyze_skew(land: &OperationTable, lor: &OperationTable) -> Result<SkewLatticeInfo> {
    if land.size() != lor.size() {
        return Err(Error::SizeMismatch {
            expected: land.size(),
            found: lor.size(),
        });
    }
    let n = land.size();
    for (name, op) in [("∧", land), ("∨", lor)] {
        if let Some(x) = (0..n).find(|&x| op.apply(x, x) != x) {
            return Err(Error::axiom("idempotency", format!("{x} {name} {x} ≠ {x}")));
        }
        if let Some((x, y, z)) = op.associativity_witness() {
            return Err(Error::axiom("associativity", format!("{name} at ({x}, {y}, {z})")));
        }
    }
    for x in 0..n {
        for y in 0..n {
            let ok = land.apply(x, lor.apply(x, y)) == x
                && land.apply(lor.apply(y, x), x) == x
                && lor.apply(x, land.apply(x, y)) == x
                && lor.apply(land.apply(y, x), x) == x;
            if !ok {
                return Err(Error::axiom("skew absorption", format!("at ({x}, {y})")));
            }
        }
    }
    let m3 = |op: &OperationTable, x: usize, y: usize, z: usize| op.apply(op.apply(x, y), z);
    // x ≼ y ⟺ x ∧ y ∧ x = x
    let pre = |x: usize, y: usize| m3(land, x, y, x) == x;
    let mut quotient_map = vec![usize::MAX; n];
    let mut d_classes: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        if quotient_map[x] != usize::MAX {
            continue;
        }
        let class: Vec<usize> = (x..n).filter(|&y| pre(x, y) && pre(y, x)).collect();
        for &y in &class {
            quotient_map[y] = d_classes.len();
        }
        d_classes.push(class);
    }
    let q = d_classes.len();
    let rep: Vec<usize> = d_classes.iter().map(|c| c[0]).collect();
    let qjoin = OperationTable::from_fn(q, |i, j| quotient_map[lor.apply(rep[i], rep[j])])?;
    let qmeet = OperationTable::from_fn(q, |i, j| quotient_map[land.apply(rep[i], rep[j])])?;
    // The quotient tables must not depend on representatives.
    for x in 0..n {
        for y in 0..n {
            let (i, j) = (quotient_map[x], quotient_map[y]);
            if quotient_map[lor.apply(x, y)] != qjoin.apply(i, j)
                || quotient_map[land.apply(x, y)] != qmeet.apply(i, j)
            {
                return Err(Error::Invariant(format!(
                    "D-relation is not a congruence at ({x}, {y})"
                )));
            }
        }
    }
    analyze_lattice(&qjoin, &qmeet)?;
    let quotient = MultiMagma::with_labels(
        vec![qjoin, qmeet],
        Some(vec!["∨".to_string(), "∧".to_string()]),
    )?;
    let natural_order = Poset::from_relation(n, |x, y| land.apply(x, y) == x && land.apply(y, x) == x)?;
    let is_symmetric = (0..n).all(|x| {
        (0..n).all(|y| {
            (land.apply(x, y) == land.apply(y, x)) == (lor.apply(x, y) == lor.apply(y, x))
        })
    });
    let is_distributive_skew = (0..n).all(|x| {
        (0..n).all(|y| {
            (0..n).all(|z| {
                let lhs = m3(land, x, lor.apply(y, z), x);
                let rhs = lor.apply(m3(land, x, y, x), m3(land, x, z, x));
                let lhs2 = m3(lor, x, land.apply(y, z), x);
                let rhs2 = land.apply(m3(lor, x, y, x), m3(lor, x, z, x));
                lhs == rhs && lhs2 == rhs2
            })
        })
    });
    let tri = OperationTable::from_fn(n, |x, y| m3(lor, y, x, y))?;
    let delta = OperationTable::from_fn(n, |x, y| m3(land, y, x, y))?;
    let conj = MultiMagma::new(vec![tri.clone(), delta.clone()])?;
    let r = conj.report();
    let conjugates_form_multispindle = r.is_multispindle && r.absorbs[0][1] && r.absorbs[1][0];
    Ok(SkewLatticeInfo {
        is_rectangular: q == 1,
        has_unique_min: natural_order.minimum().is_some(),
        has_unique_max: natural_order.maximum().is_some(),
        d_classes,
        quotient,
        quotient_map,
        conjugated_ops: (tri, delta),
        natural_order,
        is_symmetric,
        is_distributive_skew,
        conjugates_form_multispindle,
    })
}

/// Searches for a choice of one element per D-class that is closed under both
/// operations, i.e. a homomorphic section of the quotient map.
pub fn homomorphic_section(
    land: &OperationTable,
    lor: &OperationTable,
    info: &SkewLatticeInfo,
) -> Option<Vec<usize>> {
    fn go(
        k: usize,
        chosen: &mut Vec<usize>,
        info: &SkewLatticeInfo,
        land: &OperationTable,
        lor: &OperationTable,
    ) -> bool {
        if k == info.d_classes.len() {
            return true;
        }
        for &c in &info.d_classes[k] {
            chosen.push(c);
            let closed = chosen.iter().all(|&x| {
                chosen.iter().all(|&y| {
                    [land.apply(x, y), lor.apply(x, y)].iter().all(|&v| {
                        let cls = info.quotient_map[v];
                        cls >= chosen.len() || chosen[cls] == v
                    })
                })
            });
            if closed && go(k + 1, chosen, info, land, lor) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::new();
    go(0, &mut chosen, info, land, lor).then_some(chosen)
}

/// Counts how often each [`OpKind`] occurs; handy in reports.
pub fn kind_histogram(m: &MultiMagma) -> BTreeMap<String, usize> {
    let mut h = BTreeMap::new();
    for f in &m.report().ops {
        let key = match f.kind {
            OpKind::LeftTrivial => "left-trivial",
            OpKind::RightTrivial => "right-trivial",
            OpKind::Essential => "essential",
        };
        *h.entry(key.to_string()).or_insert(0) += 1;
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> StandardKind {
        StandardKind::Chain(n)
    }

    #[test]
    fn b2_is_the_diamond() {
        let (join, meet) = lattice_tables(&StandardKind::Boolean(2)).unwrap();
        let p = analyze_semilattice(&join).unwrap();
        assert_eq!(p.hasse_edges(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
        let info = analyze_lattice(&join, &meet).unwrap();
        assert_eq!(info.join_irreducibles, vec![1, 2]);
        assert_eq!(info.max_chain_length, 2);
        assert!(info.is_distributive);
        assert!(!info.is_chain);
        assert_eq!(info.ideal(1), vec![0, 1]);
        assert_eq!(info.filter(1), vec![1, 3]);
    }

    #[test]
    fn chain_l4() {
        let (join, meet) = lattice_tables(&chain(4)).unwrap();
        let info = analyze_lattice(&join, &meet).unwrap();
        assert_eq!(info.j, 3);
        assert!(info.is_chain);
        assert_eq!((info.bottom, info.top), (Some(0), Some(3)));
    }

    #[test]
    fn n5_is_not_distributive() {
        let (join, meet) = lattice_tables(&StandardKind::N5).unwrap();
        let info = analyze_lattice(&join, &meet).unwrap();
        assert!(!info.is_distributive);
        assert_eq!(info.max_chain_length, 3);
    }

    #[test]
    fn y_tree_semilattice() {
        // Leaves 0, 1, 2 under a common root 3; first common ancestor.
        let op = OperationTable::from_fn(4, |x, y| if x == y { x } else { 3 }).unwrap();
        let p = analyze_semilattice(&op).unwrap();
        assert_eq!(p.hasse_edges(), vec![(0, 3), (1, 3), (2, 3)]);
        assert_eq!(p.minimal_elements(), vec![0, 1, 2]);
    }

    #[test]
    fn left_trivial_is_not_a_semilattice() {
        let op = OperationTable::left_trivial(2).unwrap();
        match analyze_semilattice(&op) {
            Err(Error::Axiom { axiom, .. }) => assert_eq!(axiom, "commutativity"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn l3_squared_has_four_irreducibles() {
        let kind = StandardKind::Product(Box::new(chain(3)), Box::new(chain(3)));
        let m = build_standard(&kind).unwrap();
        assert_eq!(m.size(), 9);
        let info = lattice_info(&m).unwrap();
        assert_eq!(info.j, 4);
        assert_eq!(info.max_chain_length, 4);
        assert!(info.is_distributive);
    }

    #[test]
    fn b1k_two_is_b1() {
        let m = build_standard(&StandardKind::B1k(2)).unwrap();
        let (join, meet) = lattice_tables(&StandardKind::Boolean(1)).unwrap();
        assert_eq!(m.ops(), &[join, meet]);
        let b13 = build_standard(&StandardKind::B1k(3)).unwrap();
        assert!(b13.is_multispindle());
        assert!(b13.report().satisfies_absorption);
    }

    #[test]
    fn lattice_is_a_trivial_skew_lattice() {
        let (join, meet) = lattice_tables(&StandardKind::Boolean(2)).unwrap();
        let s = analyze_skew(&meet, &join).unwrap();
        assert!(s.d_classes.iter().all(|c| c.len() == 1));
        assert_eq!(s.conjugated_ops, (join.clone(), meet.clone()));
        assert_eq!(s.quotient.ops(), &[join, meet]);
        assert!(s.conjugates_form_multispindle);
    }

    #[test]
    fn rectangular_conjugates_are_right_trivial() {
        let land = OperationTable::left_trivial(2).unwrap();
        let lor = OperationTable::right_trivial(2).unwrap();
        let s = analyze_skew(&land, &lor).unwrap();
        assert!(s.is_rectangular);
        assert_eq!(s.d_classes, vec![vec![0, 1]]);
        let right = OperationTable::right_trivial(2).unwrap();
        assert_eq!(s.conjugated_ops, (right.clone(), right));
        assert!(!s.has_unique_min && !s.has_unique_max);
    }

    #[test]
    fn three_element_skew_lattice() {
        // Bottom 0 under the rectangular class {1, 2}.
        let land = OperationTable::from_fn(3, |x, y| if x == 0 || y == 0 { 0 } else { x }).unwrap();
        let lor = OperationTable::from_fn(3, |x, y| match (x, y) {
            (0, y) => y,
            (x, 0) => x,
            (_, y) => y,
        })
        .unwrap();
        let s = analyze_skew(&land, &lor).unwrap();
        assert_eq!(s.d_classes, vec![vec![0], vec![1, 2]]);
        assert_eq!(s.quotient_map, vec![0, 1, 1]);
        let (bj, bm) = lattice_tables(&StandardKind::Boolean(1)).unwrap();
        assert_eq!(s.quotient.ops(), &[bj, bm]);
        assert!(s.has_unique_min && !s.has_unique_max);
        assert!(s.is_symmetric);
        assert!(homomorphic_section(&land, &lor, &s).is_some());
    }
}
