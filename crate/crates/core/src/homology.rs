//! Homology groups from boundary matrices.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{ChainComplex, ComplexPart, ScalarVector, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::group::FinAbGroup;
use crate::magma::MultiMagma;
use crate::matrix::IntMatrix;
use crate::snf::{smith_normal_form, SmithForm};

/// `H₀, …, H_{n_max}` of one complex, with provenance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyProfile {
    pub groups: Vec<FinAbGroup>,
    /// `rk C₀, …, rk C_{n_max}`.
    pub chain_ranks: Vec<usize>,
    pub part: ComplexPart,
    pub scalars: ScalarVector,
    pub augmented: bool,
    pub fingerprint: String,
}

/// One line of the homology JSON output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeRow {
    pub degree: usize,
    pub free: usize,
    pub torsion: Vec<u64>,
}

impl HomologyProfile {
    pub fn n_max(&self) -> usize {
        self.groups.len() - 1
    }

    pub fn rows(&self) -> Vec<DegreeRow> {
        self.groups
            .iter()
            .enumerate()
            .map(|(degree, g)| DegreeRow {
                degree,
                free: g.free,
                torsion: g.torsion.clone(),
            })
            .collect()
    }

    /// `Σ (−1)ⁿ (rk C_n − rk H_n)`; vanishes when the top boundary is zero.
    pub fn euler_defect(&self) -> i64 {
        self.groups
            .iter()
            .zip(&self.chain_ranks)
            .enumerate()
            .map(|(n, (g, &c))| {
                let v = c as i64 - g.free as i64;
                if n % 2 == 0 {
                    v
                } else {
                    -v
                }
            })
            .sum()
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, g) in self.groups.iter().enumerate() {
            writeln!(f, "H_{n} = {g}")?;
        }
        Ok(())
    }
}

/// Homology of a complex given all its boundary maps.
///
/// `boundaries[n]` is `∂ₙ : C_n → C_{n−1}` for `n = 0, …, N + 1`, where
/// `∂₀` maps into `C₋₁` (zero rows when not augmented). Returns
/// `H₀, …, H_N`.
pub fn homology_from_boundaries(boundaries: &[IntMatrix]) -> Result<Vec<FinAbGroup>> {
    let forms: Vec<SmithForm> = boundaries.par_iter().map(smith_normal_form).collect();
    homology_from_forms(boundaries, &forms)
}

fn homology_from_forms(boundaries: &[IntMatrix], forms: &[SmithForm]) -> Result<Vec<FinAbGroup>> {
    if boundaries.len() < 2 {
        return Err(Error::Precondition("need at least ∂₀ and ∂₁".into()));
    }
    (0..boundaries.len() - 1)
        .map(|n| {
            let dim = boundaries[n].cols();
            if boundaries[n + 1].rows() != dim {
                return Err(Error::SizeMismatch {
                    expected: dim,
                    found: boundaries[n + 1].rows(),
                });
            }
            let free = dim
                .checked_sub(forms[n].rank() + forms[n + 1].rank())
                .ok_or_else(|| Error::Invariant(format!("∂∂ ≠ 0 around degree {n}")))?;
            FinAbGroup::from_cyclic(free, forms[n + 1].nonunit_factors()?)
        })
        .collect()
}

/// `H_n` of the chosen part for `n = 0, …, n_max`, by exact Smith normal form.
pub fn homology_profile(
    m: &MultiMagma,
    s: &ScalarVector,
    part: ComplexPart,
    n_max: usize,
) -> Result<HomologyProfile> {
    homology_profile_with_budget(m, s, part, n_max, DEFAULT_BUDGET)
}

pub fn homology_profile_with_budget(
    m: &MultiMagma,
    s: &ScalarVector,
    part: ComplexPart,
    n_max: usize,
    budget: usize,
) -> Result<HomologyProfile> {
    let complex = ChainComplex::with_budget(m, s, part, budget)?;
    let top = n_max as i64 + 1;
    // Fail fast on the budget before doing any work.
    complex.basis(top)?;
    let boundaries = complex.boundaries(0, top)?;
    let groups = homology_from_boundaries(&boundaries)?;
    Ok(HomologyProfile {
        chain_ranks: boundaries[..=n_max].iter().map(IntMatrix::cols).collect(),
        groups,
        part,
        scalars: s.clone(),
        augmented: part.augmented,
        fingerprint: m.fingerprint(),
    })
}

/// Homology of `(C, q∂)` from the homology of `(C, ∂)` and the chain ranks.
///
/// With `t₀ = rk C₀` and `t_{n+1} = rk C_{n+1} + rk H_n − t_n`, a group
/// `Z^k ⊕ ⊕ Z_{mᵢ}` (`r` torsion factors) becomes
/// `Z^k ⊕ ⊕ Z_{q·mᵢ} ⊕ Z_q^{t_n − k − r}`.
pub fn qdiff_transform(h: &[FinAbGroup], chain_ranks: &[usize], q: u64) -> Result<Vec<FinAbGroup>> {
    if q == 0 {
        return Err(Error::Precondition("q must be positive".into()));
    }
    if chain_ranks.len() < h.len() {
        return Err(Error::SizeMismatch {
            expected: h.len(),
            found: chain_ranks.len(),
        });
    }
    let mut out = Vec::with_capacity(h.len());
    let mut t = chain_ranks[0] as i64;
    for (n, g) in h.iter().enumerate() {
        if n > 0 {
            t = chain_ranks[n] as i64 + h[n - 1].free as i64 - t;
        }
        let extra = t - g.free as i64 - g.torsion.len() as i64;
        if extra < 0 {
            return Err(Error::Invariant(format!(
                "ranks inconsistent with the homology in degree {n}"
            )));
        }
        let mut orders = Vec::with_capacity(g.torsion.len() + extra as usize);
        for &d in &g.torsion {
            orders.push(
                d.checked_mul(q)
                    .ok_or_else(|| Error::Overflow("scaled torsion exceeds u64".into()))?,
            );
        }
        orders.extend(std::iter::repeat_n(q, extra as usize));
        out.push(FinAbGroup::from_cyclic(g.free, orders)?);
    }
    Ok(out)
}

/// `H(F(X, t))` from `H(CF(X, t))` and the scalar sum `Σ`.
///
/// `H₀(F) = 0`. For `Σ = 0`, `H_{n+1}(F) = H_n(CF) ⊕ H_n(F)`; otherwise
/// `H_{n+1}(F) = H_{n−1}(F) ⊕ Tor(H_{n−1}(CF), Z_Σ) ⊕ H_n(CF) ⊗ Z_Σ`.
/// The second form holds without freeness assumptions because `Σ`
/// annihilates `H(F)`.
pub fn f_part_recursion(cf: &[FinAbGroup], sigma: i64) -> Result<Vec<FinAbGroup>> {
    let q = sigma.unsigned_abs();
    let mut f = Vec::with_capacity(cf.len());
    for n in 0..cf.len() {
        let next = if n == 0 {
            FinAbGroup::trivial()
        } else if q == 0 {
            cf[n - 1].sum(&f[n - 1])?
        } else {
            let older = if n >= 2 {
                f[n - 2].sum(&cf[n - 2].tor_zq(q))?
            } else {
                FinAbGroup::trivial()
            };
            older.sum(&cf[n - 1].tensor_zq(q))?
        };
        f.push(next);
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{build_standard, StandardKind};
    use crate::magma::OperationTable;

    fn g(s: &str) -> FinAbGroup {
        s.parse().unwrap()
    }

    #[test]
    fn one_point_sigma_three() {
        let p = MultiMagma::new(vec![OperationTable::left_trivial(1).unwrap(); 3]).unwrap();
        let h = homology_profile(&p, &ScalarVector::new(vec![1, 1, 1]), ComplexPart::FULL, 3).unwrap();
        assert_eq!(h.groups, vec![g("Z"), g("Z_3"), g("0"), g("Z_3")]);
        let aug = homology_profile(&p, &ScalarVector::new(vec![1, 1, 1]), ComplexPart::FULL.augmented(), 1)
            .unwrap();
        assert_eq!(aug.groups, vec![g("0"), g("Z_3")]);
    }

    #[test]
    fn zero_scalars_on_b1() {
        let m = build_standard(&StandardKind::Boolean(1)).unwrap();
        let h = homology_profile(&m, &ScalarVector::lattice(0, 0, 0, 0), ComplexPart::FULL, 3).unwrap();
        for (n, grp) in h.groups.iter().enumerate() {
            assert_eq!(*grp, FinAbGroup::free(1 << (n + 1)));
        }
    }

    #[test]
    fn q_transform_of_a_unit() {
        // Z --1--> Z in degrees 1 → 0.
        let d0 = IntMatrix::zeros(0, 1);
        let d1 = IntMatrix::from_dense(&[vec![1]]).unwrap();
        let d2 = IntMatrix::zeros(1, 0);
        let h = homology_from_boundaries(&[d0, d1, d2]).unwrap();
        assert_eq!(h, vec![g("0"), g("0")]);
        assert_eq!(qdiff_transform(&h, &[1, 1], 3).unwrap(), vec![g("Z_3"), g("0")]);
        assert_eq!(qdiff_transform(&h, &[1, 1], 1).unwrap(), h);
    }

    #[test]
    fn budget_error_names_the_degree() {
        let m = build_standard(&StandardKind::Boolean(2)).unwrap();
        let r = homology_profile_with_budget(&m, &ScalarVector::lattice(1, 1, 1, 1), ComplexPart::FULL, 3, 1000);
        match r {
            Err(Error::Budget { degree: 4, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn f_recursion_matches_oracle_on_b1() {
        let m = build_standard(&StandardKind::Boolean(1)).unwrap();
        for s in [(1, 1, 1, 1), (0, 0, 0, 0), (1, -1, -1, 2), (2, 0, 0, 4), (1, 2, 3, -6)] {
            let s = ScalarVector::lattice(s.0, s.1, s.2, s.3);
            let cf = homology_profile(&m, &s, ComplexPart::cf(0), 4).unwrap();
            let f = homology_profile(&m, &s, ComplexPart::f(0), 4).unwrap();
            assert_eq!(f_part_recursion(&cf.groups, s.sum()).unwrap(), f.groups, "{s}");
        }
    }
}
