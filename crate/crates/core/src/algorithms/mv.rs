//! Mayer–Vietoris checks for two-operation multispindles.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::complex::{ComplexPart, ScalarVector};
use crate::error::{Error, Result};
use crate::group::FinAbGroup;
use crate::homology::homology_profile;
use crate::magma::{MultiMagma, OpKind};

/// Outcome of [`mv_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MvReport {
    pub pivot: usize,
    /// `X ⋆₁ x` and `X ⋆₂ x`.
    pub orbits: [Vec<usize>; 2],
    pub intersection: Vec<usize>,
    /// Multispindle and either `|a| = 1` or unital with absorption.
    pub hypotheses_hold: bool,
    pub notes: Vec<String>,
    /// `H(O₁∩O₂)`, `H(O₁)`, `H(O₂)`, `H(X)`.
    pub groups: [Vec<FinAbGroup>; 4],
    /// Rank accounting over `Q`.
    pub rational_consistent: bool,
    /// Rank accounting over `Z_p` for each prime in any torsion.
    pub prime_consistent: Vec<(u64, bool)>,
    /// `H(X, x) = H(O₁, x) ⊕ H(O₂, x)`, checked when the intersection is
    /// `{x}` and units with absorption are present.
    pub splitting: Option<bool>,
}

impl MvReport {
    /// No accounting failure and no failed splitting.
    pub fn passed(&self) -> bool {
        self.rational_consistent
            && self.prime_consistent.iter().all(|&(_, ok)| ok)
            && self.splitting != Some(false)
    }
}

/// `dim H_n(C; k)` for `k = Q` (`p = 0`) or `Z_p`, by universal coefficients.
fn field_dims(h: &[FinAbGroup], p: u64) -> Vec<usize> {
    let tors = |g: &FinAbGroup| {
        if p == 0 {
            0
        } else {
            g.torsion.iter().filter(|&&d| d % p == 0).count()
        }
    };
    (0..h.len())
        .map(|n| h[n].free + tors(&h[n]) + if n > 0 { tors(&h[n - 1]) } else { 0 })
        .collect()
}

/// Whether some exact sequence of vector spaces
/// `V_N(A) → V_N(B) → V_N(C) → V_{N−1}(A) → … → V_0(C) → 0` fits the dimensions.
///
/// Walking from the right end, each map rank is forced by exactness; all of
/// them must lie in `[0, min(dim source, dim target)]`. The top degree is
/// left open because `H_{N+1}` is not computed.
fn sequence_consistent(a: &[usize], b: &[usize], c: &[usize]) -> bool {
    let mut dims = Vec::with_capacity(3 * a.len());
    for n in 0..a.len() {
        dims.push(c[n]);
        dims.push(b[n]);
        dims.push(a[n]);
    }
    // dims runs right to left: C_0, B_0, A_0, C_1, …; rank out of dims[0] is 0.
    let mut out_rank: i64 = 0;
    for (i, &d) in dims.iter().enumerate() {
        let in_rank = d as i64 - out_rank;
        if in_rank < 0 {
            return false;
        }
        if let Some(&next) = dims.get(i + 1) {
            if in_rank > next as i64 {
                return false;
            }
        }
        out_rank = in_rank;
    }
    true
}

/// Builds the four complexes for the pivot `x` and checks the long exact
/// sequence `… → H_n(O₁∩O₂) → H_n(O₁) ⊕ H_n(O₂) → H_n(X) → …` by rank
/// accounting.
pub fn mv_check(m: &MultiMagma, x: usize, s: &ScalarVector, n_max: usize) -> Result<MvReport> {
    let ess = m.essential_ops();
    if ess.len() != 2 {
        return Err(Error::Precondition(format!(
            "Mayer–Vietoris needs exactly two essential operations, found {}",
            ess.len()
        )));
    }
    let o1 = m.orbit(ess[0], x)?;
    let o2 = m.orbit(ess[1], x)?;
    let inter: Vec<usize> = o1
        .iter()
        .copied()
        .collect::<BTreeSet<_>>()
        .intersection(&o2.iter().copied().collect())
        .copied()
        .collect();

    let report = m.report();
    let a: i64 = report
        .ops
        .iter()
        .zip(s.as_slice())
        .filter(|(f, _)| f.kind == OpKind::LeftTrivial)
        .map(|(_, &v)| v)
        .sum();
    let unital_abs = report.satisfies_absorption && report.is_unital;
    let mut notes = Vec::new();
    if !m.is_multispindle() {
        notes.push("not a multispindle".to_string());
    }
    if a.abs() != 1 && !unital_abs {
        notes.push(format!("a = {a} is not invertible and units with absorption are missing"));
    }
    let hypotheses_hold = notes.is_empty();

    let full = |carrier: &[usize]| -> Result<Vec<FinAbGroup>> {
        let (sub, _) = m.restrict(carrier)?;
        Ok(homology_profile(&sub, s, ComplexPart::FULL, n_max)?.groups)
    };
    let h_int = full(&inter)?;
    let h1 = full(&o1)?;
    let h2 = full(&o2)?;
    let hx = homology_profile(m, s, ComplexPart::FULL, n_max)?.groups;

    let mut primes = BTreeSet::new();
    for g in h_int.iter().chain(&h1).chain(&h2).chain(&hx) {
        primes.extend(g.torsion_primes());
    }
    let check = |p: u64| {
        let da = field_dims(&h_int, p);
        let d1 = field_dims(&h1, p);
        let d2 = field_dims(&h2, p);
        let db: Vec<usize> = d1.iter().zip(&d2).map(|(u, v)| u + v).collect();
        sequence_consistent(&da, &db, &field_dims(&hx, p))
    };
    let rational_consistent = check(0);
    let prime_consistent = primes.into_iter().map(|p| (p, check(p))).collect();

    let splitting = if inter == [x] && unital_abs {
        let reduced = |carrier: &[usize]| -> Result<Vec<FinAbGroup>> {
            let (sub, map) = m.restrict(carrier)?;
            let t = map.iter().position(|&e| e == x).expect("x lies in its orbits");
            Ok(homology_profile(&sub, s, ComplexPart::reduced(t), n_max)?.groups)
        };
        let lhs = homology_profile(m, s, ComplexPart::reduced(x), n_max)?.groups;
        let r1 = reduced(&o1)?;
        let r2 = reduced(&o2)?;
        let mut ok = true;
        for n in 0..=n_max {
            ok &= lhs[n] == r1[n].sum(&r2[n])?;
        }
        Some(ok)
    } else {
        if inter != [x] {
            notes.push(format!("orbit intersection {inter:?} is not the single point {x}"));
        } else {
            notes.push("splitting not claimed without units and absorption".to_string());
        }
        None
    };

    Ok(MvReport {
        pivot: x,
        orbits: [o1, o2],
        intersection: inter,
        hypotheses_hold,
        notes,
        groups: [h_int, h1, h2, hx],
        rational_consistent,
        prime_consistent,
        splitting,
    })
}
