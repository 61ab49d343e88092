//! Chain complexes of a multishelf and their subquotients.
//!
//! `C_n = Z X^{n+1}` with faces
//! `d₀(x₀,…,xₙ) = (x₁,…,xₙ)` and
//! `dᵢ^⋆(x₀,…,xₙ) = (x₀⋆xᵢ,…,xᵢ₋₁⋆xᵢ,xᵢ₊₁,…,xₙ)`;
//! the multi-term differential is `∂ = Σᵢ (−1)ⁱ Σ_r a_r dᵢ^{⋆r}`, so the
//! `d₀` term carries the weight `Σ = Σ_r a_r`.
//!
//! Tuples are encoded as base-`|X|` integers with `x₀` most significant, so
//! numeric order is lexicographic order.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::magma::MultiMagma;
use crate::matrix::IntMatrix;

/// Default cap on the number of tuples enumerated for one degree.
pub const DEFAULT_BUDGET: usize = 1 << 24;

/// Non-negative gcd; `gcd(0, 0) = 0`.
pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a as i64
}

pub fn gcd_all(values: impl IntoIterator<Item = i64>) -> i64 {
    values.into_iter().fold(0, gcd)
}

/// Scalars `a₁,…,a_k` aligned with the operations of a magma.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ScalarVector(Vec<i64>);

impl ScalarVector {
    pub fn new(coeffs: Vec<i64>) -> Self {
        ScalarVector(coeffs)
    }

    /// `(a, b, c, d)` for `(◁, ∨, ∧, ▷)`.
    pub fn lattice(a: i64, b: i64, c: i64, d: i64) -> Self {
        ScalarVector(vec![a, b, c, d])
    }

    /// The unit vector selecting one operation.
    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = vec![0; len];
        v[index] = 1;
        ScalarVector(v)
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `Σ`.
    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    fn abcd(&self) -> [i64; 4] {
        assert_eq!(self.0.len(), 4, "lattice invariants need four scalars");
        [self.0[0], self.0[1], self.0[2], self.0[3]]
    }

    /// `gcd(a+b, a+c)`; panics unless there are four scalars.
    pub fn g(&self) -> i64 {
        let [a, b, c, _] = self.abcd();
        gcd(a + b, a + c)
    }

    /// `gcd(a, b, c)`.
    pub fn g3(&self) -> i64 {
        let [a, b, c, _] = self.abcd();
        gcd_all([a, b, c])
    }

    /// `gcd(a, b, c, d)`.
    pub fn g4(&self) -> i64 {
        gcd_all(self.abcd())
    }

    pub fn scaled_down(&self, q: i64) -> ScalarVector {
        ScalarVector(self.0.iter().map(|v| v / q).collect())
    }
}

impl fmt::Display for ScalarVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for ScalarVector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        body.split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::Parse(format!("scalar `{}`: {e}", t.trim())))
            })
            .collect::<Result<Vec<_>>>()
            .map(ScalarVector)
    }
}

/// Which subquotient of `C(X)` to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "at")]
pub enum PartKind {
    Full,
    /// `C(X, t) = C(X) / C({t})`.
    Reduced(usize),
    /// `F(X, t)`: tuples with `x₀ = x₁`, inside the reduced complex.
    InitDeg(usize),
    /// `CF(X, t)`: the quotient of the reduced complex by `F`.
    InitNorm(usize),
    /// `F^p`: tuples with `xᵢ = xᵢ₊₁` for some `i ≤ p`.
    Filtration(usize),
    /// `C^D`: tuples with some adjacent equal pair.
    Degenerate,
    /// `C^N = C / C^D`.
    Normalized,
}

/// A [`PartKind`] plus the augmentation flag (`C₋₁ = Z`, `∂₀(x) = 1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ComplexPart {
    pub kind: PartKind,
    pub augmented: bool,
}

impl ComplexPart {
    pub const FULL: ComplexPart = ComplexPart::new(PartKind::Full);
    pub const DEGENERATE: ComplexPart = ComplexPart::new(PartKind::Degenerate);
    pub const NORMALIZED: ComplexPart = ComplexPart::new(PartKind::Normalized);

    pub const fn new(kind: PartKind) -> Self {
        ComplexPart {
            kind,
            augmented: false,
        }
    }

    pub const fn reduced(t: usize) -> Self {
        Self::new(PartKind::Reduced(t))
    }

    /// `F(X, t)`.
    pub const fn f(t: usize) -> Self {
        Self::new(PartKind::InitDeg(t))
    }

    /// `CF(X, t)`.
    pub const fn cf(t: usize) -> Self {
        Self::new(PartKind::InitNorm(t))
    }

    pub const fn augmented(self) -> Self {
        ComplexPart {
            kind: self.kind,
            augmented: true,
        }
    }

    pub fn basepoint(&self) -> Option<usize> {
        match self.kind {
            PartKind::Reduced(t) | PartKind::InitDeg(t) | PartKind::InitNorm(t) => Some(t),
            _ => None,
        }
    }

    /// Lowest degree with a non-zero chain group.
    pub fn min_degree(&self) -> i64 {
        if self.augmented {
            -1
        } else {
            0
        }
    }

    fn validate(&self, m: &MultiMagma) -> Result<()> {
        if self.augmented && !matches!(self.kind, PartKind::Full | PartKind::Normalized) {
            return Err(Error::Precondition(format!(
                "augmentation applies only to the full and normalized complexes, not {self}"
            )));
        }
        if let Some(t) = self.basepoint() {
            if t >= m.size() {
                return Err(Error::OutOfRange {
                    what: "basepoint",
                    index: t,
                    limit: m.size(),
                });
            }
            if let Some((i, op)) = m.ops().iter().enumerate().find(|(_, op)| op.apply(t, t) != t) {
                return Err(Error::axiom(
                    "idempotent basepoint",
                    format!("{t} op{i} {t} = {}", op.apply(t, t)),
                ));
            }
        }
        Ok(())
    }

    /// Where the tuple `x` (of length `n + 1`) sits relative to this part.
    fn classify(&self, x: &[usize]) -> Slot {
        if x.is_empty() {
            return Slot::Basis;
        }
        let all_equal_to = |t: usize| x.iter().all(|&v| v == t);
        let adjacent = |limit: usize| (0..x.len() - 1).take(limit).any(|i| x[i] == x[i + 1]);
        match self.kind {
            PartKind::Full => Slot::Basis,
            PartKind::Reduced(t) => {
                if all_equal_to(t) {
                    Slot::Drop
                } else {
                    Slot::Basis
                }
            }
            PartKind::InitDeg(t) => {
                if all_equal_to(t) {
                    Slot::Drop
                } else if x.len() >= 2 && x[0] == x[1] {
                    Slot::Basis
                } else {
                    Slot::Outside
                }
            }
            PartKind::InitNorm(t) => {
                if all_equal_to(t) || (x.len() >= 2 && x[0] == x[1]) {
                    Slot::Drop
                } else {
                    Slot::Basis
                }
            }
            PartKind::Filtration(p) => {
                if adjacent(p + 1) {
                    Slot::Basis
                } else {
                    Slot::Outside
                }
            }
            PartKind::Degenerate => {
                if adjacent(usize::MAX) {
                    Slot::Basis
                } else {
                    Slot::Outside
                }
            }
            PartKind::Normalized => {
                if adjacent(usize::MAX) {
                    Slot::Drop
                } else {
                    Slot::Basis
                }
            }
        }
    }
}

impl fmt::Display for ComplexPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            PartKind::Full => write!(f, "full")?,
            PartKind::Reduced(t) => write!(f, "reduced(t={t})")?,
            PartKind::InitDeg(t) => write!(f, "F(t={t})")?,
            PartKind::InitNorm(t) => write!(f, "CF(t={t})")?,
            PartKind::Filtration(p) => write!(f, "filtration(p={p})")?,
            PartKind::Degenerate => write!(f, "degenerate")?,
            PartKind::Normalized => write!(f, "normalized")?,
        }
        if self.augmented {
            write!(f, "+augmented")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Slot {
    Basis,
    /// Quotiented away.
    Drop,
    /// Not in a subcomplex; must never receive a non-zero coefficient.
    Outside,
}

/// The ordered basis of one chain group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainBasis {
    degree: i64,
    base: usize,
    /// `None` means every tuple, indexed by its own code.
    codes: Option<Vec<u64>>,
    total: u64,
}

impl ChainBasis {
    /// Enumerates the basis of `part` in degree `n` for a carrier of `size`.
    pub fn new(size: usize, part: &ComplexPart, n: i64, budget: usize) -> Result<Self> {
        if n < part.min_degree() {
            return Ok(ChainBasis {
                degree: n,
                base: size,
                codes: Some(Vec::new()),
                total: 0,
            });
        }
        let len = (n + 1) as u32;
        let needed = (size as u128).checked_pow(len).unwrap_or(u128::MAX);
        if needed > budget as u128 || needed > u64::MAX as u128 {
            return Err(Error::Budget {
                degree: n,
                needed,
                budget,
            });
        }
        let total = needed as u64;
        if part.kind == PartKind::Full {
            return Ok(ChainBasis {
                degree: n,
                base: size,
                codes: None,
                total,
            });
        }
        let mut buf = vec![0usize; len as usize];
        let codes: Vec<u64> = (0..total)
            .filter(|&c| {
                decode(c, size, &mut buf);
                part.classify(&buf) == Slot::Basis
            })
            .collect();
        Ok(ChainBasis {
            degree: n,
            base: size,
            codes: Some(codes),
            total,
        })
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn len(&self) -> usize {
        match &self.codes {
            None => self.total as usize,
            Some(c) => c.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn code(&self, i: usize) -> u64 {
        match &self.codes {
            None => i as u64,
            Some(c) => c[i],
        }
    }

    fn index_of(&self, code: u64) -> Option<usize> {
        match &self.codes {
            None => (code < self.total).then_some(code as usize),
            Some(c) => c.binary_search(&code).ok(),
        }
    }

    /// The `i`-th basis tuple.
    pub fn tuple(&self, i: usize) -> Vec<usize> {
        let mut buf = vec![0; (self.degree + 1).max(0) as usize];
        decode(self.code(i), self.base, &mut buf);
        buf
    }

    pub fn tuples(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.len()).map(|i| self.tuple(i))
    }

    /// Position of `tuple` in this basis, if present.
    pub fn position(&self, tuple: &[usize]) -> Option<usize> {
        if tuple.len() as i64 != self.degree + 1 || tuple.iter().any(|&x| x >= self.base) {
            return None;
        }
        self.index_of(encode(tuple, self.base))
    }
}

#[inline]
fn encode(x: &[usize], base: usize) -> u64 {
    x.iter().fold(0u64, |acc, &v| acc * base as u64 + v as u64)
}

#[inline]
fn decode(mut code: u64, base: usize, out: &mut [usize]) {
    for slot in out.iter_mut().rev() {
        *slot = (code % base as u64) as usize;
        code /= base as u64;
    }
}

/// A linear map on tuples, `x ↦ Σ cᵢ yᵢ`, written into `out` as `(yᵢ, cᵢ)`.
type TupleFn<'a> = dyn Fn(&[usize], &mut Vec<(Vec<usize>, i64)>) + Sync + 'a;

/// Matrix of `f` from the basis `src` to the basis `dst` of `dst_part`.
fn assemble(
    src: &ChainBasis,
    dst: &ChainBasis,
    dst_part: &ComplexPart,
    f: &TupleFn<'_>,
) -> Result<IntMatrix> {
    let mut columns = Vec::with_capacity(src.len());
    let mut terms = Vec::new();
    let mut acc: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
    for j in 0..src.len() {
        let x = src.tuple(j);
        terms.clear();
        acc.clear();
        f(&x, &mut terms);
        for (y, c) in terms.drain(..) {
            let e = acc.entry(y).or_insert(0);
            *e = e
                .checked_add(c)
                .ok_or_else(|| Error::Overflow("map assembly".into()))?;
        }
        let mut col = Vec::new();
        for (y, &c) in &acc {
            if c == 0 {
                continue;
            }
            match dst_part.classify(y) {
                Slot::Basis => {
                    let i = dst.position(y).ok_or_else(|| {
                        Error::Invariant(format!("tuple {y:?} missing from the target basis"))
                    })?;
                    col.push((i as u32, c));
                }
                Slot::Drop => {}
                Slot::Outside => {
                    return Err(Error::Invariant(format!(
                        "image of {x:?} leaves the subcomplex {dst_part} at {y:?}"
                    )))
                }
            }
        }
        columns.push(col);
    }
    IntMatrix::from_columns(dst.len(), columns)
}

/// A magma together with scalars and a part: everything needed to produce
/// bases and boundary matrices degree by degree.
#[derive(Clone, Debug)]
pub struct ChainComplex<'a> {
    magma: &'a MultiMagma,
    scalars: ScalarVector,
    part: ComplexPart,
    budget: usize,
}

impl<'a> ChainComplex<'a> {
    pub fn new(magma: &'a MultiMagma, scalars: &ScalarVector, part: ComplexPart) -> Result<Self> {
        Self::with_budget(magma, scalars, part, DEFAULT_BUDGET)
    }

    pub fn with_budget(
        magma: &'a MultiMagma,
        scalars: &ScalarVector,
        part: ComplexPart,
        budget: usize,
    ) -> Result<Self> {
        if scalars.len() != magma.num_ops() {
            return Err(Error::SizeMismatch {
                expected: magma.num_ops(),
                found: scalars.len(),
            });
        }
        if !magma.is_multishelf() {
            let r = magma.report();
            let k = magma.num_ops();
            let (i, j) = (0..k)
                .flat_map(|i| (0..k).map(move |j| (i, j)))
                .find(|&(i, j)| !r.distributes[i][j])
                .expect("some pair fails");
            let (x, y, z) = magma.ops()[i]
                .distributivity_witness(&magma.ops()[j])
                .expect("witness exists");
            return Err(Error::axiom(
                "distributive set",
                format!("op{i} does not distribute over op{j} at ({x}, {y}, {z})"),
            ));
        }
        part.validate(magma)?;
        Ok(ChainComplex {
            magma,
            scalars: scalars.clone(),
            part,
            budget,
        })
    }

    pub fn magma(&self) -> &MultiMagma {
        self.magma
    }

    pub fn scalars(&self) -> &ScalarVector {
        &self.scalars
    }

    pub fn part(&self) -> &ComplexPart {
        &self.part
    }

    pub fn basis(&self, n: i64) -> Result<ChainBasis> {
        ChainBasis::new(self.magma.size(), &self.part, n, self.budget)
    }

    /// `rk C_n` of this part.
    pub fn rank(&self, n: i64) -> Result<usize> {
        Ok(self.basis(n)?.len())
    }

    /// The matrix of `∂ₙ : C_n → C_{n−1}`.
    pub fn boundary(&self, n: i64) -> Result<IntMatrix> {
        let src = self.basis(n)?;
        let dst = self.basis(n - 1)?;
        self.boundary_between(&src, &dst)
    }

    /// `∂ₙ` given already enumerated bases for degrees `n` and `n − 1`.
    pub fn boundary_between(&self, src: &ChainBasis, dst: &ChainBasis) -> Result<IntMatrix> {
        let n = src.degree();
        if n < self.part.min_degree() || n == self.part.min_degree() && !self.part.augmented {
            return Ok(IntMatrix::zeros(dst.len(), src.len()));
        }
        if n == 0 {
            // ∂₀(x) = 1
            let f = |_: &[usize], out: &mut Vec<(Vec<usize>, i64)>| out.push((Vec::new(), 1));
            return assemble(src, dst, &self.part, &f);
        }
        let ops = self.magma.ops();
        let coeffs = self.scalars.as_slice();
        let sigma = self.scalars.sum();
        let f = |x: &[usize], out: &mut Vec<(Vec<usize>, i64)>| {
            let n = x.len() - 1;
            if sigma != 0 {
                out.push((x[1..].to_vec(), sigma));
            }
            for i in 1..=n {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                for (op, &a) in ops.iter().zip(coeffs) {
                    if a == 0 {
                        continue;
                    }
                    let mut y = Vec::with_capacity(n);
                    y.extend(x[..i].iter().map(|&v| op.apply(v, x[i])));
                    y.extend_from_slice(&x[i + 1..]);
                    out.push((y, sign * a));
                }
            }
        };
        assemble(src, dst, &self.part, &f)
    }

    /// Boundary matrices `∂_{lo}, …, ∂_{hi}`, assembled in parallel.
    pub fn boundaries(&self, lo: i64, hi: i64) -> Result<Vec<IntMatrix>> {
        use rayon::prelude::*;
        (lo..=hi).into_par_iter().map(|n| self.boundary(n)).collect()
    }
}

/// The matrix of `∂ₙ` for `part`; see [`ChainComplex`].
pub fn boundary_matrix(
    m: &MultiMagma,
    s: &ScalarVector,
    n: i64,
    part: ComplexPart,
) -> Result<IntMatrix> {
    ChainComplex::new(m, s, part)?.boundary(n)
}

/// Multiplies every differential by `q`.
pub fn q_scale(matrices: &[IntMatrix], q: i64) -> Result<Vec<IntMatrix>> {
    if q < 1 {
        return Err(Error::Precondition(format!("q must be positive, got {q}")));
    }
    matrices.iter().map(|m| m.scale(q)).collect()
}

/// One violated weak simplicial identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplicialViolation {
    pub axiom: &'static str,
    pub degree: usize,
    pub indices: (usize, usize),
    pub witness: Vec<usize>,
}

/// Outcome of [`verify_weak_simplicial`].
#[derive(Clone, Debug, Default, Serialize)]
pub struct SimplicialReport {
    pub identities_checked: usize,
    pub violations: Vec<SimplicialViolation>,
}

impl SimplicialReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

type Chain = BTreeMap<Vec<usize>, i64>;

fn face(m: &MultiMagma, s: &ScalarVector, i: usize, chain: &Chain) -> Chain {
    let mut out = Chain::new();
    let mut add = |y: Vec<usize>, c: i64| {
        *out.entry(y).or_insert(0) += c;
    };
    for (x, &c) in chain {
        if i == 0 {
            add(x[1..].to_vec(), c * s.sum());
            continue;
        }
        for (op, &a) in m.ops().iter().zip(s.as_slice()) {
            let mut y: Vec<usize> = x[..i].iter().map(|&v| op.apply(v, x[i])).collect();
            y.extend_from_slice(&x[i + 1..]);
            add(y, c * a);
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn degeneracy(j: usize, chain: &Chain) -> Chain {
    chain
        .iter()
        .map(|(x, &c)| {
            let mut y = x.clone();
            y.insert(j, x[j]);
            (y, c)
        })
        .collect()
}

/// Checks SM1–SM3 and W4 tuple by tuple up to degree `n_max`.
///
/// Faces use the scalar combination `s`; degeneracies duplicate an entry.
pub fn verify_weak_simplicial(m: &MultiMagma, s: &ScalarVector, n_max: usize) -> SimplicialReport {
    let mut report = SimplicialReport::default();
    let size = m.size();
    let mut check = |axiom: &'static str, n: usize, ij: (usize, usize), x: &[usize], l: Chain, r: Chain| {
        report.identities_checked += 1;
        if l != r && report.violations.len() < 32 {
            report.violations.push(SimplicialViolation {
                axiom,
                degree: n,
                indices: ij,
                witness: x.to_vec(),
            });
        }
    };
    for n in 0..=n_max {
        let total = (size as u64).pow(n as u32 + 1);
        let mut x = vec![0; n + 1];
        for code in 0..total {
            decode(code, size, &mut x);
            let unit: Chain = [(x.clone(), 1)].into_iter().collect();
            for j in 0..=n {
                for i in 0..j {
                    if n >= 1 {
                        let l = face(m, s, i, &face(m, s, j, &unit));
                        let r = face(m, s, j - 1, &face(m, s, i, &unit));
                        check("SM1", n, (i, j), &x, l, r);
                    }
                }
                for i in 0..=j {
                    let l = degeneracy(i, &degeneracy(j, &unit));
                    let r = degeneracy(j + 1, &degeneracy(i, &unit));
                    check("SM2", n, (i, j), &x, l, r);
                }
                let sj = degeneracy(j, &unit);
                for i in 0..=n + 1 {
                    if i < j {
                        let l = face(m, s, i, &sj);
                        let r = degeneracy(j - 1, &face(m, s, i, &unit));
                        check("SM3", n, (i, j), &x, l, r);
                    } else if i > j + 1 {
                        let l = face(m, s, i, &sj);
                        let r = degeneracy(j, &face(m, s, i - 1, &unit));
                        check("SM3", n, (i, j), &x, l, r);
                    }
                }
                let l = face(m, s, j, &sj);
                let r = face(m, s, j + 1, &sj);
                check("W4", n, (j, j + 1), &x, l, r);
            }
        }
    }
    report
}

/// Explicit matrices of the structural maps between chain groups.
///
/// Every map is assembled from the basis of `part` in the source degree to
/// the basis of `part` in the target degree.
pub struct StructuralMaps<'c, 'a> {
    complex: &'c ChainComplex<'a>,
}

impl<'c, 'a> StructuralMaps<'c, 'a> {
    pub fn new(complex: &'c ChainComplex<'a>) -> Self {
        StructuralMaps { complex }
    }

    fn map(&self, n_src: i64, n_dst: i64, f: &TupleFn<'_>) -> Result<IntMatrix> {
        let src = self.complex.basis(n_src)?;
        let dst = self.complex.basis(n_dst)?;
        assemble(&src, &dst, self.complex.part(), f)
    }

    /// `s_j : C_n → C_{n+1}`, duplicating `x_j`.
    pub fn degeneracy(&self, n: i64, j: usize) -> Result<IntMatrix> {
        self.map(n, n + 1, &move |x, out| {
            let mut y = x.to_vec();
            y.insert(j, x[j]);
            out.push((y, 1));
        })
    }

    /// `σ = (−1)^{n+1} s₀`.
    pub fn sigma(&self, n: i64) -> Result<IntMatrix> {
        self.degeneracy(n, 0)?.scale(if n % 2 == 0 { -1 } else { 1 })
    }

    /// `π = (−1)ⁿ d₀^◁`, i.e. `(−1)ⁿ (x₁,…,xₙ)`.
    pub fn pi(&self, n: i64) -> Result<IntMatrix> {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        self.map(n, n - 1, &move |x, out| out.push((x[1..].to_vec(), sign)))
    }

    /// `α(x₀,…,xₙ) = (x₀, x₁−x₀, …, xₙ−xₙ₋₁)`, expanded multilinearly.
    pub fn alpha(&self, n: i64) -> Result<IntMatrix> {
        self.map(n, n, &|x, out| {
            let k = x.len() - 1;
            for mask in 0u64..(1 << k) {
                let mut y = Vec::with_capacity(x.len());
                y.push(x[0]);
                let mut sign = 1;
                for i in 1..=k {
                    if mask >> (i - 1) & 1 == 1 {
                        y.push(x[i - 1]);
                        sign = -sign;
                    } else {
                        y.push(x[i]);
                    }
                }
                out.push((y, sign));
            }
        })
    }

    /// `h^y(x) = (−1)^{n+1} (x, y)`.
    pub fn homotopy(&self, n: i64, y: usize) -> Result<IntMatrix> {
        let sign = if n % 2 == 0 { -1 } else { 1 };
        self.map(n, n + 1, &move |x, out| {
            let mut z = x.to_vec();
            z.push(y);
            out.push((z, sign));
        })
    }

    /// `x ↦ Σ_r a_r (x₀ ⋆_r y, …, xₙ ⋆_r y)`.
    pub fn act(&self, n: i64, y: usize) -> Result<IntMatrix> {
        let ops = self.complex.magma().ops();
        let coeffs = self.complex.scalars().as_slice();
        self.map(n, n, &move |x, out| {
            for (op, &a) in ops.iter().zip(coeffs) {
                if a != 0 {
                    out.push((x.iter().map(|&v| op.apply(v, y)).collect(), a));
                }
            }
        })
    }

    /// `x ↦ (x₁, x₁, x₂, …, xₙ)`, i.e. `σπ`.
    pub fn sigma_pi(&self, n: i64) -> Result<IntMatrix> {
        self.map(n, n, &|x, out| {
            let mut y = x.to_vec();
            y[0] = x[1];
            out.push((y, 1));
        })
    }
}
