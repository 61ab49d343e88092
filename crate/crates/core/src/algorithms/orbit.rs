//! Orbit reduction for unital multishelves with absorption.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::closed_form::seq_r;
use crate::complex::{gcd_all, ScalarVector};
use crate::error::{Error, Result};
use crate::group::FinAbGroup;
use crate::homology::{f_part_recursion, qdiff_transform};
use crate::magma::{MultiMagma, OpKind};

/// Homology of the two summands `CF(X, t)` and `F(X, t)` of the reduced complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitHomology {
    pub cf: Vec<FinAbGroup>,
    pub f: Vec<FinAbGroup>,
}

impl SplitHomology {
    /// `H(X, t) = H(CF) ⊕ H(F)` degree by degree.
    pub fn reduced(&self) -> Result<Vec<FinAbGroup>> {
        self.cf.iter().zip(&self.f).map(|(c, f)| c.sum(f)).collect()
    }

    fn from_cf(cf: Vec<FinAbGroup>, sigma: i64) -> Result<Self> {
        let f = f_part_recursion(&cf, sigma)?;
        Ok(SplitHomology { cf, f })
    }
}

/// Result of [`is_irreducible`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrreducibleCheck {
    pub irreducible: bool,
    /// Essential operation indices, aligned with `multiplicities`.
    pub ops: Vec<usize>,
    /// Right-unit count per essential operation.
    pub multiplicities: Vec<usize>,
}

impl IrreducibleCheck {
    /// `I^(r₁,…,r_k)`.
    pub fn label(&self) -> String {
        leaf_label(&self.multiplicities)
    }
}

fn leaf_label(r: &[usize]) -> String {
    let parts: Vec<String> = r.iter().map(usize::to_string).collect();
    format!("I^({})", parts.join(","))
}

/// Under absorption, irreducible iff every element is a right unit of some
/// essential operation.
pub fn is_irreducible(m: &MultiMagma) -> Result<IrreducibleCheck> {
    if !m.report().satisfies_absorption {
        return Err(Error::Precondition("irreducibility test needs the absorption law".into()));
    }
    let ops = m.essential_ops();
    let all: Vec<usize> = (0..m.size()).collect();
    let multiplicities = unit_counts(m, &ops, &all);
    let irreducible = !ops.is_empty() && all.iter().all(|&x| is_unit_somewhere(m, &ops, &all, x));
    Ok(IrreducibleCheck {
        irreducible,
        ops,
        multiplicities,
    })
}

fn is_unit_in(m: &MultiMagma, op: usize, carrier: &[usize], u: usize) -> bool {
    let table = &m.ops()[op];
    carrier.iter().all(|&x| table.apply(x, u) == x)
}

fn is_unit_somewhere(m: &MultiMagma, ops: &[usize], carrier: &[usize], u: usize) -> bool {
    ops.iter().any(|&i| is_unit_in(m, i, carrier, u))
}

fn unit_counts(m: &MultiMagma, ops: &[usize], carrier: &[usize]) -> Vec<usize> {
    ops.iter()
        .map(|&i| carrier.iter().filter(|&&u| is_unit_in(m, i, carrier, u)).count())
        .collect()
}

/// `H(CF)` of a single leaf of size `k` under a differential divisible by `g`.
fn leaf_cf(k: usize, g: i64, n_max: usize) -> Result<Vec<FinAbGroup>> {
    (0..=n_max as u32)
        .map(|n| {
            if k <= 1 {
                return Ok(FinAbGroup::trivial());
            }
            let count = if g == 0 {
                (k as i128).pow(n) * (k as i128 - 1)
            } else {
                (k as i128 - 1) * seq_r(n, k as u64)
            };
            let count = usize::try_from(count).map_err(|_| Error::Overflow("leaf rank".into()))?;
            Ok(FinAbGroup::cyclic_power(g.unsigned_abs(), count))
        })
        .collect()
}

/// Homology of the irreducible `I^(r₁,…,r_k)`.
///
/// `a0` is the `◁` coefficient, `a[i]` the coefficient of the operation with
/// `r[i]` units and `sigma` the full scalar sum. `H(CF)` is a sum of copies
/// of `Z_g`, `g = gcd{a0 + aᵢ : rᵢ > 0}`; `H(F)` follows by recursion.
pub fn irreducible_homology(
    r: &[usize],
    a0: i64,
    a: &[i64],
    sigma: i64,
    n_max: usize,
) -> Result<SplitHomology> {
    if r.len() != a.len() {
        return Err(Error::SizeMismatch {
            expected: r.len(),
            found: a.len(),
        });
    }
    let k: usize = r.iter().sum();
    if k < 2 {
        return Err(Error::Precondition("an irreducible needs at least two units".into()));
    }
    let g = gcd_all(r.iter().zip(a).filter(|(&ri, _)| ri > 0).map(|(_, &ai)| a0 + ai));
    SplitHomology::from_cf(leaf_cf(k, g, n_max)?, sigma)
}

/// How strictly [`reduce_by_orbits_with`] enforces the hypotheses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReductionMode {
    /// Unital with absorption; every leaf must be irreducible.
    Strict,
    /// Runs on any multishelf and yields the algorithm's prediction.
    Lenient,
}

/// One node of a reduction: either split at a pivot or a leaf.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionNode {
    /// Elements of the root carrier, sorted.
    pub carrier: Vec<usize>,
    pub pivot: Option<usize>,
    /// One branch per essential operation, in operation order.
    pub children: Vec<ReductionBranch>,
    /// Set on leaves: unit counts per essential operation.
    pub leaf: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionBranch {
    pub op: usize,
    pub node: ReductionNode,
}

impl ReductionNode {
    pub fn leaves(&self) -> Vec<&ReductionNode> {
        if self.leaf.is_some() {
            return vec![self];
        }
        self.children.iter().flat_map(|b| b.node.leaves()).collect()
    }

    pub fn depth(&self) -> usize {
        1 + self.children.iter().map(|b| b.node.depth()).max().unwrap_or(0)
    }

    fn render(&self, indent: usize, out: &mut String) {
        let pad = "  ".repeat(indent);
        match (&self.leaf, self.pivot) {
            (Some(r), _) => out.push_str(&format!("{pad}{:?} leaf {}\n", self.carrier, leaf_label(r))),
            (None, Some(t)) => {
                out.push_str(&format!("{pad}{:?} pivot {t}\n", self.carrier));
                for b in &self.children {
                    b.node.render(indent + 1, out);
                }
            }
            (None, None) => out.push_str(&format!("{pad}{:?}\n", self.carrier)),
        }
    }
}

/// Audit record of a reduction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTree {
    pub fingerprint: String,
    pub mode: ReductionMode,
    /// Essential operations of the root, the ones orbits are taken for.
    pub ops: Vec<usize>,
    pub root: ReductionNode,
}

impl ReductionTree {
    /// Indented text, one node per line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.root.render(0, &mut out);
        out
    }
}

/// Output of [`reduce_by_orbits`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReduction {
    pub homology: SplitHomology,
    pub tree: ReductionTree,
}

/// How the scalars act on `CF`: `▷` drops out, every `◁` adds to `a₀`.
struct Roles {
    a0: i64,
    essential: Vec<(usize, i64)>,
    sigma: i64,
}

fn roles(m: &MultiMagma, s: &ScalarVector) -> Result<Roles> {
    if s.len() != m.num_ops() {
        return Err(Error::SizeMismatch {
            expected: m.num_ops(),
            found: s.len(),
        });
    }
    let mut a0 = 0;
    let mut essential = Vec::new();
    for (i, flags) in m.report().ops.iter().enumerate() {
        let v = s.as_slice()[i];
        match flags.kind {
            OpKind::LeftTrivial => a0 += v,
            OpKind::RightTrivial => {}
            OpKind::Essential => essential.push((i, v)),
        }
    }
    Ok(Roles {
        a0,
        essential,
        sigma: s.sum(),
    })
}

/// Strict [`reduce_by_orbits_with`].
pub fn reduce_by_orbits(m: &MultiMagma, s: &ScalarVector, n_max: usize) -> Result<OrbitReduction> {
    reduce_by_orbits_with(m, s, n_max, ReductionMode::Strict)
}

/// Predicts `H(CF(X, t))` and `H(F(X, t))` by splitting along orbits.
///
/// At each node the pivot is the smallest `t` whose orbits `X ⋆ᵢ t` under
/// all essential operations are proper; nodes without one are leaves,
/// contributing `Z_g^{(k−1)·r_{n,k}}` with `g = gcd{a₀ + aᵢ}`. Scalars are
/// first divided by their gcd `g₃` on `CF` and the factor restored by the
/// `q∂` rule on the root's chain ranks `|X|ⁿ(|X|−1)`.
pub fn reduce_by_orbits_with(
    m: &MultiMagma,
    s: &ScalarVector,
    n_max: usize,
    mode: ReductionMode,
) -> Result<OrbitReduction> {
    let roles = roles(m, s)?;
    let report = m.report();
    if !report.is_multishelf {
        return Err(Error::Precondition("orbit reduction needs a multishelf".into()));
    }
    if mode == ReductionMode::Strict {
        if !report.satisfies_absorption {
            return Err(Error::Precondition("orbit reduction needs the absorption law".into()));
        }
        if !report.is_unital {
            return Err(Error::Precondition(
                "orbit reduction needs a right unit for every essential operation".into(),
            ));
        }
    }
    let ops: Vec<usize> = roles.essential.iter().map(|&(i, _)| i).collect();
    let all: Vec<usize> = (0..m.size()).collect();
    let root = build_node(m, &ops, all, mode)?;
    let tree = ReductionTree {
        fingerprint: m.fingerprint(),
        mode,
        ops,
        root,
    };

    let size = m.size() as i128;
    let g3 = gcd_all(std::iter::once(roles.a0).chain(roles.essential.iter().map(|&(_, v)| v)));
    let cf = if g3 == 0 {
        (0..=n_max as u32)
            .map(|n| {
                let rank = size.pow(n) * (size - 1);
                usize::try_from(rank)
                    .map(FinAbGroup::free)
                    .map_err(|_| Error::Overflow("chain rank".into()))
            })
            .collect::<Result<Vec<_>>>()?
    } else {
        // Without essential operations ∂ on CF is a₀ times a unimodular map.
        let g = if roles.essential.is_empty() {
            1
        } else {
            gcd_all(roles.essential.iter().map(|&(_, v)| (roles.a0 + v) / g3))
        };
        let mut total = vec![FinAbGroup::trivial(); n_max + 1];
        for leaf in tree.root.leaves() {
            for (slot, h) in total.iter_mut().zip(leaf_cf(leaf.carrier.len(), g, n_max)?) {
                *slot = slot.sum(&h)?;
            }
        }
        if g3.abs() == 1 {
            total
        } else {
            let ranks: Vec<usize> = (0..=n_max as u32)
                .map(|n| (size.pow(n) * (size - 1)) as usize)
                .collect();
            qdiff_transform(&total, &ranks, g3.unsigned_abs())?
        }
    };
    Ok(OrbitReduction {
        homology: SplitHomology::from_cf(cf, roles.sigma)?,
        tree,
    })
}

fn orbit_in(m: &MultiMagma, op: usize, carrier: &[usize], t: usize) -> Vec<usize> {
    let table = &m.ops()[op];
    let set: BTreeSet<usize> = carrier.iter().map(|&x| table.apply(x, t)).collect();
    set.into_iter().collect()
}

fn build_node(m: &MultiMagma, ops: &[usize], carrier: Vec<usize>, mode: ReductionMode) -> Result<ReductionNode> {
    let pivot = if ops.is_empty() {
        None
    } else {
        carrier
            .iter()
            .copied()
            .find(|&t| ops.iter().all(|&i| orbit_in(m, i, &carrier, t).len() < carrier.len()))
    };
    match pivot {
        Some(t) => {
            let children = ops
                .iter()
                .map(|&op| {
                    let orbit = orbit_in(m, op, &carrier, t);
                    Ok(ReductionBranch {
                        op,
                        node: build_node(m, ops, orbit, mode)?,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(ReductionNode {
                carrier,
                pivot: Some(t),
                children,
                leaf: None,
            })
        }
        None => {
            let counts = unit_counts(m, ops, &carrier);
            if mode == ReductionMode::Strict && carrier.len() > 1 {
                if let Some(&x) = carrier.iter().find(|&&x| !is_unit_somewhere(m, ops, &carrier, x)) {
                    return Err(Error::Invariant(format!(
                        "no pivot in {carrier:?} but {x} is not a unit of any operation"
                    )));
                }
            }
            Ok(ReductionNode {
                carrier,
                pivot: None,
                children: Vec::new(),
                leaf: Some(counts),
            })
        }
    }
}
