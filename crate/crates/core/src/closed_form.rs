//! Closed-form homology of distributive lattices, points and unital spindles.
//!
//! Every function here is pure arithmetic on `(|L|, J, scalars, n)`. Factors
//! `Z₁` vanish and `Z₀` means `Z`, so a formula like `Z_{g₃}^m` with `g₃ = 1`
//! is the trivial group. A negative exponent is a transcription bug and is
//! reported as [`Error::Invariant`] instead of being clamped.

use serde::{Deserialize, Serialize};

use crate::complex::{gcd, gcd_all, ScalarVector};
use crate::error::{Error, Result};
use crate::group::FinAbGroup;
use crate::lattice::LatticeInfo;

/// `p(n)`: 1 for odd `n`, 0 for even.
pub fn parity(n: u32) -> i128 {
    (n % 2) as i128
}

/// `r_{n,k} = (k^{n+1} + (−1)ⁿ)/(1 + k)`; always an integer.
///
/// Panics if `k^{n+1}` does not fit in `i128`.
pub fn seq_r(n: u32, k: u64) -> i128 {
    assert!(k >= 1, "r_(n,k) needs k ≥ 1");
    let k = k as i128;
    let top = k
        .checked_pow(n + 1)
        .unwrap_or_else(|| panic!("r_({n},{k}) overflows i128"));
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    (top + sign) / (1 + k)
}

/// `s_n = J·(r_{n,2} − p(n+1))`.
pub fn seq_s(n: u32, j: usize) -> i128 {
    j as i128 * (seq_r(n, 2) - parity(n + 1))
}

fn pow_i128(base: usize, exp: u32) -> Result<i128> {
    (base as i128)
        .checked_pow(exp)
        .ok_or_else(|| Error::Overflow(format!("{base}^{exp}")))
}

/// `Z_m^e` with the exponent checked.
fn power(m: i64, e: i128, what: &str) -> Result<FinAbGroup> {
    if e < 0 {
        return Err(Error::Invariant(format!("negative exponent {e} for {what}")));
    }
    let count = usize::try_from(e).map_err(|_| Error::Overflow(format!("exponent of {what}")))?;
    Ok(FinAbGroup::cyclic_power(m.unsigned_abs(), count))
}

fn sum2(x: FinAbGroup, y: FinAbGroup) -> Result<FinAbGroup> {
    x.sum(&y)
}

/// `H_n` of the one-point magma; `Σ` is the scalar sum.
pub fn hom_point(sigma: i64, n: u32, augmented: bool) -> FinAbGroup {
    if n == 0 {
        return if augmented {
            FinAbGroup::trivial()
        } else {
            FinAbGroup::free(1)
        };
    }
    if sigma == 0 {
        FinAbGroup::free(1)
    } else if n % 2 == 1 {
        FinAbGroup::cyclic_power(sigma.unsigned_abs(), 1)
    } else {
        FinAbGroup::trivial()
    }
}

/// Which piece of the lattice complex a closed form describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LatticePart {
    /// `CF(L, t)`.
    Cf,
    /// `F(L, t)`.
    F,
    /// `C(L, t) = CF ⊕ F`.
    Reduced,
    /// `C(L) = C(L, t) ⊕ C({t})`.
    Full,
}

/// Inputs to the lattice closed forms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeParams {
    pub size: usize,
    /// Non-minimal join-irreducibles.
    #[serde(rename = "J")]
    pub j: usize,
    pub scalars: ScalarVector,
}

impl LatticeParams {
    pub fn new(size: usize, j: usize, scalars: ScalarVector) -> Result<Self> {
        if scalars.len() != 4 {
            return Err(Error::SizeMismatch {
                expected: 4,
                found: scalars.len(),
            });
        }
        if size == 0 || (size > 1 && (j == 0 || j >= size)) || (size == 1 && j != 0) {
            return Err(Error::Precondition(format!(
                "J = {j} is impossible for a lattice of size {size}"
            )));
        }
        Ok(LatticeParams { size, j, scalars })
    }

    /// Takes `|L|` and `J` from an analysed lattice; it must be distributive.
    pub fn from_info(info: &LatticeInfo, scalars: ScalarVector) -> Result<Self> {
        if !info.is_distributive {
            return Err(Error::Precondition("closed forms need a distributive lattice".into()));
        }
        Self::new(info.size(), info.j, scalars)
    }

    /// Parameters of `B₁`.
    pub fn b1(scalars: ScalarVector) -> Result<Self> {
        Self::new(2, 1, scalars)
    }

    fn abcd(&self) -> [i64; 4] {
        let s = self.scalars.as_slice();
        [s[0], s[1], s[2], s[3]]
    }

    pub fn sigma(&self) -> i64 {
        self.scalars.sum()
    }

    pub fn g(&self) -> i64 {
        self.scalars.g()
    }

    pub fn g3(&self) -> i64 {
        self.scalars.g3()
    }

    pub fn g4(&self) -> i64 {
        self.scalars.g4()
    }
}

/// `H_n(CF(L, t))`.
pub fn hom_lattice_cf(p: &LatticeParams, n: u32) -> Result<FinAbGroup> {
    let [a, ..] = p.abcd();
    let (g, g3, size, j) = (p.g(), p.g3(), p.size, p.j as i128);
    let size_m1 = size as i128 - 1;
    if g == 0 && a == 0 {
        return power(0, pow_i128(size, n)? * size_m1, "free CF rank");
    }
    let rest = size_m1 * seq_r(n, size as u64) - j * seq_r(n, 2);
    let head = if g == 0 {
        power(0, j * pow_i128(2, n)?, "free CF rank")?
    } else {
        power(g, j * seq_r(n, 2), "Z_g in CF")?
    };
    sum2(head, power(g3, rest, "Z_g3 in CF")?)
}

/// `H_n(F(L, t))`; the cases are tried in the listed order.
pub fn hom_lattice_f(p: &LatticeParams, n: u32) -> Result<FinAbGroup> {
    let [a, ..] = p.abcd();
    let (sigma, g, g4, size) = (p.sigma(), p.g(), p.g4(), p.size);
    let r = seq_r(n, size as u64);
    let pn1 = parity(n + 1);
    let s = seq_s(n, p.j);
    if sigma == 0 && g == 0 && a == 0 {
        return power(0, pow_i128(size, n)? - 1, "free F rank");
    }
    if sigma != 0 && g == 0 && a == 0 {
        return power(g4, r - pn1, "Z_g4 in F");
    }
    let head = if sigma == 0 && g == 0 {
        power(0, p.j as i128 * (pow_i128(2, n)? - 1), "free F rank")?
    } else {
        power(gcd(g, sigma), s, "Z_gcd(g,Σ) in F")?
    };
    sum2(head, power(g4, r - s - pn1, "Z_g4 in F")?)
}

/// `H_n` of the chosen part of a finite distributive lattice.
pub fn hom_lattice(p: &LatticeParams, n: u32, part: LatticePart) -> Result<FinAbGroup> {
    match part {
        LatticePart::Cf => hom_lattice_cf(p, n),
        LatticePart::F => hom_lattice_f(p, n),
        LatticePart::Reduced => sum2(hom_lattice_cf(p, n)?, hom_lattice_f(p, n)?),
        LatticePart::Full => sum2(
            hom_lattice(p, n, LatticePart::Reduced)?,
            hom_point(p.sigma(), n, false),
        ),
    }
}

/// `H_n(B₁, ⊥)` by the four-case `(Σ, g)` formula.
pub fn hom_b1_reduced(a: i64, b: i64, c: i64, d: i64, n: u32) -> Result<FinAbGroup> {
    let sigma = a + b + c + d;
    let g = gcd(a + b, a + c);
    let r = seq_r(n, 2);
    let pn1 = parity(n + 1);
    match (sigma == 0, g == 0) {
        (true, true) => power(0, pow_i128(2, n + 1)? - 1, "free rank"),
        (true, false) => power(g, 2 * r - pn1, "Z_g"),
        (false, true) => sum2(power(0, pow_i128(2, n)?, "free rank")?, power(sigma, r - pn1, "Z_Σ")?),
        (false, false) => sum2(power(g, r, "Z_g")?, power(gcd(g, sigma), r - pn1, "Z_gcd(g,Σ)")?),
    }
}

/// `H_n(CF(B₁, ⊥))`: free of rank `2ⁿ` when `b = c = −a`, else `Z_g^{r_n}`.
pub fn hom_b1_cf(a: i64, b: i64, c: i64, _d: i64, n: u32) -> Result<FinAbGroup> {
    if b == -a && c == -a {
        power(0, pow_i128(2, n)?, "free rank")
    } else {
        power(gcd(a + b, a + c), seq_r(n, 2), "Z_g")
    }
}

/// `H_n(F(B₁, ⊥))`: zero in degree 0, then `Z^{2ⁿ−1}` when `Σ = g = 0`,
/// else `Z_{gcd(g,Σ)}^{r_n − p(n+1)}`.
pub fn hom_b1_f(a: i64, b: i64, c: i64, d: i64, n: u32) -> Result<FinAbGroup> {
    let sigma = a + b + c + d;
    let g = gcd(a + b, a + c);
    if sigma == 0 && g == 0 {
        power(0, pow_i128(2, n)? - 1, "free rank")
    } else {
        power(gcd(g, sigma), seq_r(n, 2) - parity(n + 1), "Z_gcd(g,Σ)")
    }
}

/// `H_n^N(B₁)`.
pub fn hom_b1_normalized(a: i64, b: i64, c: i64, n: u32) -> FinAbGroup {
    let g = gcd(a + b, a + c);
    if g == 0 {
        FinAbGroup::free(2)
    } else {
        let mut h = FinAbGroup::cyclic_power(g.unsigned_abs(), 1);
        if n == 0 {
            h.free += 1;
        }
        h
    }
}

/// `H_n^N(L)` of the normalized complex of a distributive lattice.
pub fn hom_normalized_lattice(p: &LatticeParams, n: u32) -> Result<FinAbGroup> {
    let [a, ..] = p.abcd();
    let (g, g3, size, j) = (p.g(), p.g3(), p.size, p.j as i128);
    let size_m1 = size as i128 - 1;
    if g == 0 && a == 0 {
        return power(0, size as i128 * pow_i128(size - 1, n)?, "free rank");
    }
    let rest = if n == 0 { size_m1 - j } else { pow_i128(size - 1, n + 1)? - j };
    if g == 0 {
        let free = if n == 0 { j + 1 } else { 2 * j };
        return sum2(power(0, free, "free rank")?, power(a, rest, "Z_a")?);
    }
    let mut h = sum2(power(g, j, "Z_g")?, power(g3, rest, "Z_g3")?)?;
    if n == 0 {
        h.free += 1;
    }
    Ok(h)
}

/// The tabulated `rk H_n(B_J)` for scalars `(a, b, c, 0)`.
///
/// The values agree with the unaugmented complex. For `a = 0`, `b = −c ≠ 0`
/// the table says `δ_{0,n}` while the complex has rank 1 in every degree.
pub fn rank_boolean_augmented(a: i64, b: i64, c: i64, j: u32, n: u32) -> u128 {
    let delta = u128::from(n == 0);
    if (a, b, c) == (0, 0, 0) {
        1u128 << (j * (n + 1))
    } else if b == -a && c == -a {
        u128::from(j) * (1u128 << n) + delta
    } else if a + b + c == 0 && a != 0 {
        1
    } else {
        delta
    }
}

/// `H_n(X, p)` for a spindle with a right projector `p` and a right unit,
/// scalars `(a, b, d)` on `(◁, ⋆, ▷)`.
pub fn hom_unital_spindle(x_size: usize, a: i64, b: i64, d: i64, n: u32) -> Result<FinAbGroup> {
    if x_size == 0 {
        return Err(Error::Precondition("empty spindle".into()));
    }
    let sigma = a + b + d;
    let g = gcd(a, b);
    let gabd = gcd_all([a, b, d]);
    let r = seq_r(n, x_size as u64);
    let pn1 = parity(n + 1);
    let s = seq_s(n, x_size - 1);
    let m1 = x_size as i128 - 1;
    match (sigma == 0, g == 0) {
        (true, true) => power(0, pow_i128(x_size, n + 1)? - 1, "free rank"),
        (false, true) => sum2(
            power(0, pow_i128(x_size, n)? * m1, "free rank")?,
            power(sigma, r - pn1, "Z_Σ")?,
        ),
        (true, false) => sum2(power(g, m1 * r + s, "Z_g")?, power(gabd, r - pn1 - s, "Z_gcd(a,b,d)")?),
        (false, false) => sum2(power(g, m1 * r, "Z_g")?, power(gabd, r - pn1, "Z_gcd(a,b,d)")?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(s: &str) -> FinAbGroup {
        s.parse().unwrap()
    }

    #[test]
    fn r_sequence_recursion() {
        assert_eq!((0..4).map(|n| seq_r(n, 2)).collect::<Vec<_>>(), vec![1, 1, 3, 5]);
        for n in 0..40 {
            assert_eq!(seq_r(n + 2, 2), seq_r(n + 1, 2) + 2 * seq_r(n, 2));
        }
        assert_eq!(seq_r(2, 3), 7);
        assert_eq!(seq_s(2, 2), 4);
    }

    #[test]
    fn point_cases() {
        assert_eq!(hom_point(0, 5, false), grp("Z"));
        assert_eq!(hom_point(4, 2, false), grp("0"));
        assert_eq!(hom_point(4, 3, false), grp("Z_4"));
        assert_eq!(hom_point(1, 0, true), grp("0"));
    }

    #[test]
    fn b1_examples() {
        for n in 0..6 {
            assert!(hom_b1_reduced(1, -1, 0, 0, n).unwrap().is_trivial());
        }
        assert_eq!(hom_b1_reduced(0, 0, 0, 0, 1).unwrap(), grp("Z^3"));
        assert_eq!(hom_b1_reduced(1, 1, 1, 1, 2).unwrap(), grp("Z_2^5"));
    }

    #[test]
    fn lattice_examples() {
        let l3 = LatticeParams::new(3, 2, ScalarVector::lattice(1, 1, 1, 1)).unwrap();
        assert_eq!(hom_lattice(&l3, 2, LatticePart::Cf).unwrap(), grp("Z_2^6"));
        let zero = LatticeParams::new(4, 2, ScalarVector::lattice(0, 0, 0, 0)).unwrap();
        assert_eq!(hom_lattice(&zero, 2, LatticePart::Cf).unwrap(), grp("Z^48"));
        assert_eq!(hom_lattice(&zero, 2, LatticePart::F).unwrap(), grp("Z^15"));
        assert_eq!(hom_lattice(&zero, 2, LatticePart::Full).unwrap(), grp("Z^64"));
    }

    #[test]
    fn b1_agrees_with_general_lattice() {
        let r = -2..=2i64;
        for a in r.clone() {
            for b in r.clone() {
                for c in r.clone() {
                    for d in r.clone() {
                        let p = LatticeParams::b1(ScalarVector::lattice(a, b, c, d)).unwrap();
                        for n in 0..6 {
                            let want = hom_b1_reduced(a, b, c, d, n).unwrap();
                            assert_eq!(hom_lattice(&p, n, LatticePart::Reduced).unwrap(), want);
                            assert_eq!(hom_lattice(&p, n, LatticePart::Cf).unwrap(), hom_b1_cf(a, b, c, d, n).unwrap());
                            assert_eq!(hom_lattice(&p, n, LatticePart::F).unwrap(), hom_b1_f(a, b, c, d, n).unwrap());
                            assert_eq!(hom_normalized_lattice(&p, n).unwrap(), hom_b1_normalized(a, b, c, n));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn boolean_rank_cases() {
        assert_eq!(rank_boolean_augmented(0, 0, 0, 2, 1), 16);
        assert_eq!(rank_boolean_augmented(2, -2, -2, 3, 2), 12);
        assert_eq!(rank_boolean_augmented(1, 2, -3, 2, 4), 1);
        assert_eq!(rank_boolean_augmented(1, 1, 1, 2, 0), 1);
        assert_eq!(rank_boolean_augmented(1, 1, 1, 2, 3), 0);
    }

    #[test]
    fn unital_spindle_cases() {
        assert_eq!(hom_unital_spindle(3, 0, 0, 0, 1).unwrap(), grp("Z^8"));
        for n in 0..5 {
            assert!(hom_unital_spindle(3, 1, 1, 1, n).unwrap().is_trivial());
            assert!(hom_unital_spindle(4, 2, -1, 5, n).unwrap().is_trivial());
        }
    }

    #[test]
    fn bad_params_are_rejected() {
        assert!(LatticeParams::new(4, 0, ScalarVector::lattice(1, 1, 1, 1)).is_err());
        assert!(LatticeParams::new(4, 2, ScalarVector::new(vec![1, 1])).is_err());
    }
}
