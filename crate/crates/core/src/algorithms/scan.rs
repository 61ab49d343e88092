//! Exhaustive scans of the homology conjectures over small structures.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{gcd, gcd_all, ComplexPart, ScalarVector};
use crate::enumeration::{enumerate, Dedup, Predicate};
use crate::error::{Error, Result};
use crate::group::FinAbGroup;
use crate::homology::homology_profile;
use crate::lattice::analyze_skew;
use crate::magma::{MultiMagma, OperationTable};

/// Which statement to test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Conjecture {
    /// Semilattice with a projector, `gcd(a, b) = 1` ⇒ `H(L, t) = 0`.
    SemilatticeProjector,
    /// Commutative spindle, `gcd(a, b) = 1` ⇒ `H(X, t) = H(X⋆x, t⋆x)`.
    CommutativeOrbit,
    /// Skew lattice with a unique minimum or maximum ⇒
    /// `H(L) = H(L/∼) ⊕ Z_{gcd(a,b,c)}^p ⊕ Z_{gcd(a,b,c,d)}^q`.
    SkewUniqueExtremum,
    /// Unital spindle, `gcd(a, b) = 1` ⇒ `H(X, t) = H(X⋆x, t⋆x)`. Proven; a
    /// sanity baseline.
    SpindleOrbit,
}

impl Conjecture {
    pub fn all() -> [Conjecture; 4] {
        [
            Conjecture::SemilatticeProjector,
            Conjecture::CommutativeOrbit,
            Conjecture::SkewUniqueExtremum,
            Conjecture::SpindleOrbit,
        ]
    }

    pub fn name(self) -> &'static str {
        match self {
            Conjecture::SemilatticeProjector => "semilattice-projector",
            Conjecture::CommutativeOrbit => "commutative-orbit",
            Conjecture::SkewUniqueExtremum => "skew-unique-extremum",
            Conjecture::SpindleOrbit => "spindle-orbit",
        }
    }

    /// Number of scalars per grid point: `(a, b)` on `(◁, ⋆)` or
    /// `(a, b, c, d)` on `(◁, ∨, ∧, ▷)`.
    pub fn scalar_len(self) -> usize {
        match self {
            Conjecture::SkewUniqueExtremum => 4,
            _ => 2,
        }
    }

    /// Scalar points used when the caller gives none.
    pub fn default_grid(self) -> Vec<Vec<i64>> {
        match self {
            Conjecture::SkewUniqueExtremum => vec![
                vec![1, 1, 1, 1],
                vec![1, 2, 3, 0],
                vec![2, 2, 2, 2],
                vec![2, 4, 6, 3],
                vec![4, 5, 2, 0],
                vec![1, -1, 0, 0],
                vec![0, 0, 0, 0],
            ],
            _ => vec![
                vec![1, 1],
                vec![2, 1],
                vec![1, 2],
                vec![1, -2],
                vec![2, -1],
                vec![3, 2],
            ],
        }
    }
}

impl fmt::Display for Conjecture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Conjecture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Conjecture::all()
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown conjecture {s:?}")))
    }
}

/// One counterexample with everything needed to reproduce it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanCase {
    pub fingerprint: String,
    /// Operation tables as rows, in the enumerated operation order.
    pub tables: Vec<Vec<Vec<usize>>>,
    pub scalars: Vec<i64>,
    /// Basepoint and pivot, or other context.
    pub detail: String,
    pub lhs: Vec<FinAbGroup>,
    pub rhs: Vec<FinAbGroup>,
}

/// Outcome of [`conjecture_scan`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub conjecture: Conjecture,
    pub sizes: (usize, usize),
    pub n_max: usize,
    pub scalar_grid: Vec<Vec<i64>>,
    /// Isomorphism classes satisfying the hypotheses.
    pub structures: usize,
    /// Grid points dropped by the scalar hypothesis.
    pub skipped_scalars: usize,
    /// Individual homology comparisons made.
    pub checks: usize,
    pub counterexamples: Vec<ScanCase>,
}

impl ScanReport {
    pub fn confirmed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

impl fmt::Display for ScanReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: sizes {}..={}, n ≤ {}, {} structures, {} checks, {} counterexamples",
            self.conjecture,
            self.sizes.0,
            self.sizes.1,
            self.n_max,
            self.structures,
            self.checks,
            self.counterexamples.len()
        )?;
        for c in &self.counterexamples {
            writeln!(f, "  {} scalars {:?} {}", c.fingerprint, c.scalars, c.detail)?;
            for (n, (l, r)) in c.lhs.iter().zip(&c.rhs).enumerate() {
                if l != r {
                    writeln!(f, "    H_{n}: {l} vs {r}")?;
                }
            }
        }
        Ok(())
    }
}

/// Runs one conjecture over every qualifying structure of the given sizes
/// and every admissible grid point, comparing both sides by Smith normal form.
pub fn conjecture_scan(
    which: Conjecture,
    sizes: RangeInclusive<usize>,
    grid: &[Vec<i64>],
    n_max: usize,
) -> Result<ScanReport> {
    if let Some(bad) = grid.iter().find(|p| p.len() != which.scalar_len()) {
        return Err(Error::SizeMismatch {
            expected: which.scalar_len(),
            found: bad.len(),
        });
    }
    // The orbit statements only speak about gcd(a, b) = 1.
    let admissible: Vec<Vec<i64>> = grid
        .iter()
        .filter(|p| which == Conjecture::SkewUniqueExtremum || gcd(p[0], p[1]) == 1)
        .cloned()
        .collect();
    let skipped_scalars = grid.len() - admissible.len();

    let mut structures = Vec::new();
    for n in sizes.clone() {
        let found = match which {
            Conjecture::SemilatticeProjector => enumerate(n, Predicate::Semilattice, Dedup::Iso)?,
            Conjecture::CommutativeOrbit => enumerate(n, Predicate::Spindle, Dedup::Iso)?
                .into_iter()
                .filter(|m| m.ops()[0].is_commutative())
                .collect(),
            Conjecture::SpindleOrbit => enumerate(n, Predicate::Spindle, Dedup::Iso)?
                .into_iter()
                .filter(|m| !m.ops()[0].right_units().is_empty())
                .collect(),
            Conjecture::SkewUniqueExtremum => enumerate(n, Predicate::SkewLattice, Dedup::Iso)?
                .into_iter()
                .filter(|m| {
                    analyze_skew(&m.ops()[0], &m.ops()[1]).is_ok_and(|info| {
                        info.conjugates_form_multispindle
                            && info.conjugated_system().is_ok_and(|c| c.is_multishelf())
                            && (info.has_unique_min || info.has_unique_max)
                    })
                })
                .collect(),
        };
        structures.extend(found.into_iter().filter(|m| {
            which != Conjecture::SemilatticeProjector || !m.ops()[0].right_projectors().is_empty()
        }));
    }
    structures.sort_by_key(MultiMagma::fingerprint);

    let outcomes: Vec<(usize, Vec<ScanCase>)> = structures
        .par_iter()
        .map(|m| {
            let mut checks = 0;
            let mut cases = Vec::new();
            for s in &admissible {
                let (c, found) = match which {
                    Conjecture::SemilatticeProjector => vanishing(m, s, n_max)?,
                    Conjecture::CommutativeOrbit | Conjecture::SpindleOrbit => orbit_invariance(m, s, n_max)?,
                    Conjecture::SkewUniqueExtremum => skew_quotient(m, s, n_max)?,
                };
                checks += c;
                cases.extend(found);
            }
            Ok((checks, cases))
        })
        .collect::<Result<_>>()?;

    let mut checks = 0;
    let mut counterexamples = Vec::new();
    for (c, cases) in outcomes {
        checks += c;
        counterexamples.extend(cases);
    }
    Ok(ScanReport {
        conjecture: which,
        sizes: (*sizes.start(), *sizes.end()),
        n_max,
        scalar_grid: grid.to_vec(),
        structures: structures.len(),
        skipped_scalars,
        checks,
        counterexamples,
    })
}

fn case(m: &MultiMagma, s: &[i64], detail: String, lhs: Vec<FinAbGroup>, rhs: Vec<FinAbGroup>) -> ScanCase {
    ScanCase {
        fingerprint: m.fingerprint(),
        tables: m.ops().iter().map(OperationTable::rows).collect(),
        scalars: s.to_vec(),
        detail,
        lhs,
        rhs,
    }
}

/// `(◁, ⋆)` on the carrier of a one-operation structure.
fn with_left_trivial(op: &OperationTable) -> Result<MultiMagma> {
    MultiMagma::new(vec![OperationTable::left_trivial(op.size())?, op.clone()])
}

fn reduced(m: &MultiMagma, s: &ScalarVector, t: usize, n_max: usize) -> Result<Vec<FinAbGroup>> {
    Ok(homology_profile(m, s, ComplexPart::reduced(t), n_max)?.groups)
}

fn vanishing(m: &MultiMagma, s: &[i64], n_max: usize) -> Result<(usize, Vec<ScanCase>)> {
    let sys = with_left_trivial(&m.ops()[0])?;
    let sv = ScalarVector::new(s.to_vec());
    let zero = vec![FinAbGroup::trivial(); n_max + 1];
    let mut cases = Vec::new();
    for t in 0..m.size() {
        let h = reduced(&sys, &sv, t, n_max)?;
        if h != zero {
            cases.push(case(m, s, format!("t = {t}"), h, zero.clone()));
        }
    }
    Ok((m.size(), cases))
}

pub(crate) fn orbit_invariance(m: &MultiMagma, s: &[i64], n_max: usize) -> Result<(usize, Vec<ScanCase>)> {
    let op = &m.ops()[0];
    let sys = with_left_trivial(op)?;
    let sv = ScalarVector::new(s.to_vec());
    let n = m.size();
    let whole: Vec<Vec<FinAbGroup>> = (0..n).map(|t| reduced(&sys, &sv, t, n_max)).collect::<Result<_>>()?;
    let mut checks = 0;
    let mut cases = Vec::new();
    for x in 0..n {
        let orbit = sys.orbit(1, x)?;
        if orbit.len() == n {
            continue;
        }
        let (sub, map) = sys.restrict(&orbit)?;
        for (t, lhs) in whole.iter().enumerate() {
            let tx = op.apply(t, x);
            let local = map
                .iter()
                .position(|&e| e == tx)
                .ok_or_else(|| Error::Invariant(format!("{tx} missing from the orbit of {x}")))?;
            let rhs = reduced(&sub, &sv, local, n_max)?;
            checks += 1;
            if *lhs != rhs {
                cases.push(case(m, s, format!("t = {t}, x = {x}"), lhs.clone(), rhs));
            }
        }
    }
    Ok((checks, cases))
}

/// Whether `k ≅ Z_{g3}^p ⊕ Z_{g4}^q` for some `p, q` (with `Z_0 = Z`).
fn only_gcd_summands(k: &FinAbGroup, g3: u64, g4: u64) -> bool {
    (k.free == 0 || g3 == 0 || g4 == 0) && k.torsion.iter().all(|&d| d == g3 || d == g4)
}

fn skew_quotient(m: &MultiMagma, s: &[i64], n_max: usize) -> Result<(usize, Vec<ScanCase>)> {
    let info = analyze_skew(&m.ops()[0], &m.ops()[1])?;
    let sv = ScalarVector::new(s.to_vec());
    let q = &info.quotient;
    let lattice = MultiMagma::new(vec![
        OperationTable::left_trivial(q.size())?,
        q.ops()[0].clone(),
        q.ops()[1].clone(),
        OperationTable::right_trivial(q.size())?,
    ])?;
    let lhs = homology_profile(&info.conjugated_system()?, &sv, ComplexPart::FULL, n_max)?.groups;
    let rhs = homology_profile(&lattice, &sv, ComplexPart::FULL, n_max)?.groups;
    let g3 = gcd_all(s[..3].iter().copied()).unsigned_abs();
    let g4 = gcd_all(s.iter().copied()).unsigned_abs();
    let ok = lhs
        .iter()
        .zip(&rhs)
        .all(|(l, r)| l.difference(r).is_some_and(|k| only_gcd_summands(&k, g3, g4)));
    let cases = if ok {
        Vec::new()
    } else {
        vec![case(m, s, "H(L) vs H(L/∼)".into(), lhs, rhs)]
    };
    Ok((1, cases))
}
