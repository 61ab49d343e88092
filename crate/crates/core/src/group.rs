//! Finitely generated abelian groups in invariant-factor form.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `Z^free ⊕ Z_{d₁} ⊕ … ⊕ Z_{d_r}` with `2 ≤ d₁ | d₂ | … | d_r`.
///
/// The representation is canonical, so `==` is group isomorphism.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FinAbGroup {
    pub free: usize,
    pub torsion: Vec<u64>,
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Prime-power decomposition by trial division.
fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Exponent multisets per prime: `prime → (exponent → count)`.
type PrimePowers = BTreeMap<u64, BTreeMap<u32, usize>>;

fn prime_powers(orders: &BTreeMap<u64, usize>) -> PrimePowers {
    let mut pp: PrimePowers = BTreeMap::new();
    for (&d, &count) in orders {
        for (p, e) in factor(d) {
            *pp.entry(p).or_default().entry(e).or_default() += count;
        }
    }
    pp
}

fn from_prime_powers(pp: &PrimePowers) -> Result<Vec<u64>> {
    let len = pp.values().map(|m| m.values().sum::<usize>()).max().unwrap_or(0);
    let mut factors = vec![1u64; len];
    for (&p, exps) in pp {
        // Largest exponents go to the largest invariant factors.
        let mut slot = len;
        for (&e, &count) in exps.iter().rev() {
            let q = p
                .checked_pow(e)
                .ok_or_else(|| Error::Overflow(format!("{p}^{e} exceeds u64")))?;
            for _ in 0..count {
                slot -= 1;
                factors[slot] = factors[slot]
                    .checked_mul(q)
                    .ok_or_else(|| Error::Overflow("invariant factor exceeds u64".into()))?;
            }
        }
    }
    Ok(factors)
}

impl FinAbGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        FinAbGroup {
            free: rank,
            torsion: Vec::new(),
        }
    }

    /// `Z_m^count`; `m = 0` gives free summands and `m = 1` nothing.
    pub fn cyclic_power(m: u64, count: usize) -> Self {
        match m {
            0 => Self::free(count),
            1 => Self::trivial(),
            _ => FinAbGroup {
                free: 0,
                torsion: vec![m; count],
            },
        }
    }

    /// Canonicalises an arbitrary list of cyclic orders (`0` meaning `Z`).
    pub fn from_cyclic(free: usize, orders: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut free = free;
        let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
        for d in orders {
            match d {
                0 => free += 1,
                1 => {}
                _ => *counts.entry(d).or_default() += 1,
            }
        }
        Self::from_counts(free, &counts)
    }

    fn from_counts(free: usize, counts: &BTreeMap<u64, usize>) -> Result<Self> {
        // Already a divisibility chain: no factoring needed.
        let keys: Vec<u64> = counts.keys().copied().collect();
        let torsion = if keys.windows(2).all(|w| w[1] % w[0] == 0) {
            counts
                .iter()
                .flat_map(|(&d, &c)| std::iter::repeat_n(d, c))
                .collect()
        } else {
            from_prime_powers(&prime_powers(counts))?
        };
        Ok(FinAbGroup { free, torsion })
    }

    fn counts(&self) -> BTreeMap<u64, usize> {
        let mut counts = BTreeMap::new();
        for &d in &self.torsion {
            *counts.entry(d).or_default() += 1;
        }
        counts
    }

    pub fn is_trivial(&self) -> bool {
        self.free == 0 && self.torsion.is_empty()
    }

    pub fn torsion_count(&self) -> usize {
        self.torsion.len()
    }

    /// Direct sum.
    pub fn sum(&self, other: &FinAbGroup) -> Result<FinAbGroup> {
        let mut counts = self.counts();
        for (d, c) in other.counts() {
            *counts.entry(d).or_default() += c;
        }
        Self::from_counts(self.free + other.free, &counts)
    }

    pub fn sum_all<'a>(groups: impl IntoIterator<Item = &'a FinAbGroup>) -> Result<FinAbGroup> {
        let mut free = 0;
        let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
        for g in groups {
            free += g.free;
            for (d, c) in g.counts() {
                *counts.entry(d).or_default() += c;
            }
        }
        Self::from_counts(free, &counts)
    }

    /// `G ⊗ Z_q`; `q = 0` means `⊗ Z`.
    pub fn tensor_zq(&self, q: u64) -> FinAbGroup {
        if q == 0 {
            return self.clone();
        }
        let orders = std::iter::repeat_n(q, self.free)
            .chain(self.torsion.iter().map(|&d| gcd_u64(d, q)));
        Self::from_cyclic(0, orders).expect("factors divide q")
    }

    /// `Tor(G, Z_q)`; `q = 0` gives the trivial group.
    pub fn tor_zq(&self, q: u64) -> FinAbGroup {
        if q == 0 {
            return Self::trivial();
        }
        Self::from_cyclic(0, self.torsion.iter().map(|&d| gcd_u64(d, q))).expect("factors divide q")
    }

    /// Whether `q·G = 0`.
    pub fn annihilated_by(&self, q: u64) -> bool {
        q == 0 || (self.free == 0 && self.torsion.iter().all(|&d| q.is_multiple_of(d)))
    }

    /// The `K` with `other ⊕ K ≅ self`, if one exists.
    pub fn difference(&self, other: &FinAbGroup) -> Option<FinAbGroup> {
        if other.free > self.free {
            return None;
        }
        let mut mine = prime_powers(&self.counts());
        for (p, exps) in prime_powers(&other.counts()) {
            let have = mine.get_mut(&p)?;
            for (e, c) in exps {
                let slot = have.get_mut(&e)?;
                if *slot < c {
                    return None;
                }
                *slot -= c;
            }
            have.retain(|_, c| *c > 0);
        }
        mine.retain(|_, m| !m.is_empty());
        Some(FinAbGroup {
            free: self.free - other.free,
            torsion: from_prime_powers(&mine).ok()?,
        })
    }

    /// `dim_{F_p} (G ⊗ F_p)`.
    pub fn mod_p_dim(&self, p: u64) -> usize {
        self.free + self.torsion.iter().filter(|&&d| d % p == 0).count()
    }

    /// Primes dividing some torsion coefficient.
    pub fn torsion_primes(&self) -> Vec<u64> {
        let mut ps: Vec<u64> = self
            .counts()
            .keys()
            .flat_map(|&d| factor(d).into_iter().map(|(p, _)| p))
            .collect();
        ps.sort_unstable();
        ps.dedup();
        ps
    }

    /// Rendering that groups equal factors: `Z^2⊕Z2^3⊕Z4`.
    pub fn compact(&self) -> String {
        if self.is_trivial() {
            return "0".into();
        }
        let mut parts = Vec::new();
        match self.free {
            0 => {}
            1 => parts.push("Z".to_string()),
            k => parts.push(format!("Z^{k}")),
        }
        for (d, c) in self.counts() {
            parts.push(if c == 1 { format!("Z{d}") } else { format!("Z{d}^{c}") });
        }
        parts.join("⊕")
    }

    /// Primary decomposition, e.g. `Z_12` becomes `Z_3 ⊕ Z_4`.
    pub fn primary(&self) -> String {
        let pp = prime_powers(&self.counts());
        let mut parts = Vec::new();
        match self.free {
            0 => {}
            1 => parts.push("Z".to_string()),
            k => parts.push(format!("Z^{k}")),
        }
        let mut powers: Vec<(u64, usize)> = pp
            .into_iter()
            .flat_map(|(p, exps)| exps.into_iter().map(move |(e, c)| (p.pow(e), c)))
            .collect();
        powers.sort_unstable();
        for (q, c) in powers {
            parts.push(if c == 1 { format!("Z_{q}") } else { format!("Z_{q}^{c}") });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" ⊕ ")
        }
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free {
            0 => {}
            1 => parts.push("Z".to_string()),
            k => parts.push(format!("Z^{k}")),
        }
        for (d, c) in self.counts() {
            parts.push(if c == 1 { format!("Z_{d}") } else { format!("Z_{d}^{c}") });
        }
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

impl FromStr for FinAbGroup {
    type Err = Error;

    /// Accepts `0`, and sums like `Z^2 ⊕ Z_2^3`, `Z2^10+Z4^3` or `Z_{9}^{5}`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" || s.is_empty() {
            return Ok(Self::trivial());
        }
        let mut free = 0usize;
        let mut orders = Vec::new();
        for term in s.split(['⊕', '+']) {
            let t: String = term.chars().filter(|c| !c.is_whitespace() && *c != '{' && *c != '}').collect();
            let bad = || Error::Parse(format!("cannot read group term `{}`", term.trim()));
            let rest = t.strip_prefix('Z').ok_or_else(bad)?;
            let (base, exp) = match rest.split_once('^') {
                Some((b, e)) => (b, e.parse::<usize>().map_err(|_| bad())?),
                None => (rest, 1),
            };
            let base = base.trim_start_matches('_');
            if base.is_empty() {
                free += exp;
            } else {
                let d = base.parse::<u64>().map_err(|_| bad())?;
                orders.extend(std::iter::repeat_n(d, exp));
            }
        }
        Self::from_cyclic(free, orders)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> FinAbGroup {
        s.parse().unwrap()
    }

    #[test]
    fn sum_normalises() {
        assert_eq!(g("Z_2^2").sum(&g("Z_4")).unwrap().torsion, vec![2, 2, 4]);
        assert_eq!(g("Z_2 ⊕ Z_3").torsion, vec![6]);
        assert_eq!(g("Z_4 ⊕ Z_6").torsion, vec![2, 12]);
    }

    #[test]
    fn tensor_and_tor() {
        assert_eq!(g("Z ⊕ Z_4").tensor_zq(2), g("Z_2^2"));
        assert_eq!(g("Z ⊕ Z_4").tor_zq(2), g("Z_2"));
        assert_eq!(g("Z^3").tor_zq(5), FinAbGroup::trivial());
        assert_eq!(g("Z_6").tensor_zq(0), g("Z_6"));
    }

    #[test]
    fn annihilation() {
        assert!(g("Z_2^5").annihilated_by(4));
        assert!(!g("Z ⊕ Z_2").annihilated_by(2));
        assert!(!g("Z_3").annihilated_by(2));
    }

    #[test]
    fn parse_and_render() {
        let x = g("Z2^10+Z4^3");
        assert_eq!(x.compact(), "Z2^10⊕Z4^3");
        assert_eq!(x.to_string(), "Z_2^10 ⊕ Z_4^3");
        assert_eq!(g("Z_{9}^{5}").torsion, vec![9; 5]);
        assert_eq!(g("Z^2 ⊕ Z_1 ⊕ Z_0"), g("Z^3"));
        assert_eq!(g("Z_12").primary(), "Z_3 ⊕ Z_4");
        assert!("Q_2".parse::<FinAbGroup>().is_err());
    }

    #[test]
    fn difference() {
        let big = g("Z^2 ⊕ Z_2^3 ⊕ Z_12");
        assert_eq!(big.difference(&g("Z ⊕ Z_4")), Some(g("Z ⊕ Z_2^3 ⊕ Z_3")));
        assert_eq!(big.difference(&g("Z_8")), None);
        assert_eq!(big.difference(&big), Some(FinAbGroup::trivial()));
    }

    #[test]
    fn mod_p_dimensions() {
        let x = g("Z ⊕ Z_6 ⊕ Z_4");
        assert_eq!(x.mod_p_dim(2), 3);
        assert_eq!(x.mod_p_dim(3), 2);
        assert_eq!(x.torsion_primes(), vec![2, 3]);
    }
}
