//! Exact Smith normal form.
//!
//! Sparse elimination in two stages. Unit pivots are cleared first; they
//! divide their lines and leave no remainders. The columns that remain are
//! inserted into a reduced Hermite basis, where every entry in a pivot row is
//! reduced modulo that pivot, which keeps coefficients from exploding when
//! the matrix has few units. The unit pivots of that basis then leave without
//! fill-in, and Euclidean pivoting finishes the small non-unit core.
//!
//! Arithmetic is `i64`, then `i128`, with overflow checks; on overflow the
//! computation restarts at the next width and finally over arbitrary
//! precision.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Invariant factors and rank of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// Non-zero diagonal `d₁ | d₂ | …`, all positive (units included).
    pub factors: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// Factors other than `1`, as `u64`.
    pub fn nonunit_factors(&self) -> Result<Vec<u64>> {
        self.factors
            .iter()
            .filter(|d| !d.is_one())
            .map(|d| {
                d.to_u64()
                    .ok_or_else(|| Error::Overflow(format!("invariant factor {d} exceeds u64")))
            })
            .collect()
    }
}

/// Arithmetic needed by the elimination, with overflow reported as `None`.
trait Entry: Clone + PartialEq + Debug {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    /// Ordering key for pivot selection.
    fn magnitude(&self) -> u128;
    fn add(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    /// Truncated quotient and remainder.
    fn div_rem(&self, o: &Self) -> (Self, Self);
    /// Quotient rounded towards −∞; with `o > 0` the remainder is in `[0, o)`.
    fn div_floor(&self, o: &Self) -> Self;
    /// `(g, x, y)` with `g = gcd > 0` and `x·self + y·o = g`.
    fn ext_gcd(&self, o: &Self) -> Result<(Self, Self, Self), Overflow>;
    fn is_negative(&self) -> bool;
    fn to_big(&self) -> BigInt;
}

impl Entry for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn magnitude(&self) -> u128 {
        self.unsigned_abs() as u128
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn div_rem(&self, o: &Self) -> (Self, Self) {
        (self / o, self % o)
    }
    fn div_floor(&self, o: &Self) -> Self {
        Integer::div_floor(self, o)
    }
    fn ext_gcd(&self, o: &Self) -> Result<(Self, Self, Self), Overflow> {
        if *self == Self::MIN || *o == Self::MIN {
            return Err(Overflow);
        }
        let e = self.extended_gcd(o);
        Ok(if e.gcd < 0 { (-e.gcd, -e.x, -e.y) } else { (e.gcd, e.x, e.y) })
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Entry for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn magnitude(&self) -> u128 {
        self.unsigned_abs()
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn div_rem(&self, o: &Self) -> (Self, Self) {
        (self / o, self % o)
    }
    fn div_floor(&self, o: &Self) -> Self {
        Integer::div_floor(self, o)
    }
    fn ext_gcd(&self, o: &Self) -> Result<(Self, Self, Self), Overflow> {
        if *self == Self::MIN || *o == Self::MIN {
            return Err(Overflow);
        }
        let e = self.extended_gcd(o);
        Ok(if e.gcd < 0 { (-e.gcd, -e.x, -e.y) } else { (e.gcd, e.x, e.y) })
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Entry for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn magnitude(&self) -> u128 {
        self.abs().to_u128().unwrap_or(u128::MAX)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn div_rem(&self, o: &Self) -> (Self, Self) {
        Integer::div_rem(self, o)
    }
    fn div_floor(&self, o: &Self) -> Self {
        Integer::div_floor(self, o)
    }
    fn ext_gcd(&self, o: &Self) -> Result<(Self, Self, Self), Overflow> {
        let e = self.extended_gcd(o);
        Ok(if Signed::is_negative(&e.gcd) { (-e.gcd, -e.x, -e.y) } else { (e.gcd, e.x, e.y) })
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

struct Overflow;

/// Smith normal form of `m`.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    // SNF(c·A) = c·SNF(A); dividing out the content exposes unit pivots.
    let content = m
        .columns()
        .iter()
        .flatten()
        .fold(0i64, |g, &(_, v)| g.gcd(&v));
    if content > 1 {
        let scaled: Vec<Vec<(u32, i64)>> = m
            .columns()
            .iter()
            .map(|c| c.iter().map(|&(i, v)| (i, v / content)).collect())
            .collect();
        let inner = IntMatrix::from_columns(m.rows(), scaled).expect("same shape");
        let mut f = smith_normal_form(&inner);
        for d in &mut f.factors {
            *d *= content;
        }
        return f;
    }
    if let Ok(diag) = eliminate::<i64>(m) {
        return normalize(diag);
    }
    if let Ok(diag) = eliminate::<i128>(m) {
        return normalize(diag);
    }
    match eliminate::<BigInt>(m) {
        Ok(diag) => normalize(diag),
        Err(Overflow) => unreachable!("arbitrary precision does not overflow"),
    }
}

/// Rank only; cheaper to call when torsion is irrelevant.
pub fn rank(m: &IntMatrix) -> usize {
    smith_normal_form(m).rank()
}

/// Sparse working copy: columns with row-sorted entries plus a row index that
/// may hold stale column ids.
struct Sparse<T> {
    cols: Vec<Vec<(u32, T)>>,
    row_cols: Vec<Vec<u32>>,
    row_alive: Vec<bool>,
    col_alive: Vec<bool>,
}

impl<T: Entry> Sparse<T> {
    fn new(rows: usize, cols: Vec<Vec<(u32, T)>>) -> Self {
        let mut row_cols = vec![Vec::new(); rows];
        for (j, col) in cols.iter().enumerate() {
            for (i, _) in col {
                row_cols[*i as usize].push(j as u32);
            }
        }
        Sparse {
            col_alive: vec![true; cols.len()],
            row_alive: vec![true; rows],
            cols,
            row_cols,
        }
    }

    fn entry(&self, i: u32, j: u32) -> Option<&T> {
        let col = &self.cols[j as usize];
        col.binary_search_by_key(&i, |e| e.0).ok().map(|k| &col[k].1)
    }

    /// Live columns with a non-zero entry in row `i`, deduplicated.
    fn row(&mut self, i: u32) -> Vec<(u32, T)> {
        let mut ids = std::mem::take(&mut self.row_cols[i as usize]);
        ids.sort_unstable();
        ids.dedup();
        let mut live_ids = Vec::with_capacity(ids.len());
        let mut out = Vec::with_capacity(ids.len());
        for j in ids {
            if !self.col_alive[j as usize] {
                continue;
            }
            if let Some(v) = self.entry(i, j) {
                out.push((j, v.clone()));
                live_ids.push(j);
            }
        }
        self.row_cols[i as usize] = live_ids;
        out
    }

    /// `col_j ← col_j + f · col_c`.
    fn axpy(&mut self, j: u32, f: &T, c: u32) -> Result<(), Overflow> {
        let out = self.merge(j, c, [&T::from_i64(1), f])?;
        self.cols[j as usize] = out;
        Ok(())
    }

    /// `a·col_j + b·col_c` as a new column; registers fill-in in row index.
    fn merge(&mut self, j: u32, c: u32, [a, b]: [&T; 2]) -> Result<Vec<(u32, T)>, Overflow> {
        let (x, y) = (&self.cols[j as usize], &self.cols[c as usize]);
        let mut out = Vec::with_capacity(x.len() + y.len());
        let (mut p, mut q) = (0, 0);
        while p < x.len() || q < y.len() {
            let (i, v) = if q == y.len() || (p < x.len() && x[p].0 < y[q].0) {
                p += 1;
                (x[p - 1].0, a.mul(&x[p - 1].1).ok_or(Overflow)?)
            } else if p == x.len() || y[q].0 < x[p].0 {
                q += 1;
                (y[q - 1].0, b.mul(&y[q - 1].1).ok_or(Overflow)?)
            } else {
                p += 1;
                q += 1;
                let v = a.mul(&x[p - 1].1).ok_or(Overflow)?;
                (x[p - 1].0, v.add(&b.mul(&y[q - 1].1).ok_or(Overflow)?).ok_or(Overflow)?)
            };
            if !v.is_zero() {
                out.push((i, v));
            }
        }
        for (i, _) in &out {
            if x.binary_search_by_key(i, |e| e.0).is_err() {
                self.row_cols[*i as usize].push(j);
            }
        }
        Ok(out)
    }
}

/// Reduces `m` to a diagonal (as a list of non-zero diagonal entries).
///
/// Unit pivots go first: they divide their lines, so clearing them creates no
/// remainders. Once none is left the remaining columns are put into reduced
/// Hermite form, which keeps entries bounded; its unit pivots then leave
/// without fill-in and only the non-unit core goes through [`euclid_pivot`].
fn eliminate<T: Entry>(m: &IntMatrix) -> Result<Vec<T>, Overflow> {
    let cols = m
        .columns()
        .iter()
        .map(|c| c.iter().map(|&(i, v)| (i, T::from_i64(v))).collect())
        .collect();
    let mut s = Sparse::<T>::new(m.rows(), cols);
    let mut diag = Vec::new();
    let rest = unit_pass(&mut s, &mut diag)?;
    if rest.is_empty() {
        return Ok(diag);
    }
    let mut hnf = Hermite::default();
    let mut rest: Vec<Vec<(u32, T)>> = rest.into_iter().map(|j| std::mem::take(&mut s.cols[j as usize])).collect();
    rest.sort_by_key(Vec::len);
    for v in rest {
        hnf.insert(v)?;
    }
    let mut s = Sparse::new(m.rows(), hnf.basis.into_values().collect());
    loop {
        let rest = unit_pass(&mut s, &mut diag)?;
        let Some(&j) = rest.iter().min_by_key(|&&j| {
            let col = &s.cols[j as usize];
            (col.iter().map(|(_, v)| v.magnitude()).min(), col.len())
        }) else {
            break;
        };
        euclid_pivot(&mut s, j, &mut diag)?;
    }
    Ok(diag)
}

/// Clears every unit pivot, shortest column first; returns the live
/// non-empty columns left without a unit.
fn unit_pass<T: Entry>(s: &mut Sparse<T>, diag: &mut Vec<T>) -> Result<Vec<u32>, Overflow> {
    let mut heap: BinaryHeap<Reverse<(usize, u32)>> = (0..s.cols.len() as u32)
        .filter(|&j| s.col_alive[j as usize])
        .map(|j| Reverse((s.cols[j as usize].len(), j)))
        .collect();
    let mut rest = Vec::new();
    while let Some(Reverse((len, j))) = heap.pop() {
        if !s.col_alive[j as usize] {
            continue;
        }
        let now = s.cols[j as usize].len();
        if now != len {
            heap.push(Reverse((now, j)));
            continue;
        }
        if now == 0 {
            s.col_alive[j as usize] = false;
            continue;
        }
        let unit = s.cols[j as usize]
            .iter()
            .filter(|(_, v)| v.is_unit())
            .min_by_key(|(i, _)| s.row_cols[*i as usize].len())
            .map(|(i, _)| *i);
        let Some(i) = unit else {
            rest.push(j);
            continue;
        };
        let p = s.entry(i, j).expect("pivot present").clone();
        for (k, b) in s.row(i) {
            if k != j {
                s.axpy(k, &b.div_rem(&p).0.neg().ok_or(Overflow)?, j)?;
                heap.push(Reverse((s.cols[k as usize].len(), k)));
            }
        }
        // Row i is now p·e_j: clearing column j by row operations touches
        // column j only.
        s.cols[j as usize].clear();
        s.col_alive[j as usize] = false;
        s.row_alive[i as usize] = false;
        diag.push(p);
    }
    rest.retain(|&j| s.col_alive[j as usize] && !s.cols[j as usize].is_empty());
    Ok(rest)
}

/// Produces one diagonal entry starting from column `j`.
///
/// The smallest entry `p` of the column clears its row by column operations;
/// a non-zero remainder becomes the new, strictly smaller pivot. Once the row
/// holds `p` alone, row operations only touch the pivot column, so its entries
/// are reduced modulo `p` in place; a non-zero remainder again restarts with a
/// smaller pivot.
fn euclid_pivot<T: Entry>(s: &mut Sparse<T>, mut j: u32, diag: &mut Vec<T>) -> Result<(), Overflow> {
    loop {
        let (i, p) = s.cols[j as usize]
            .iter()
            .min_by_key(|(_, v)| v.magnitude())
            .cloned()
            .expect("pivot column is non-empty");
        let mut smaller: Option<(u128, u32)> = None;
        for (k, v) in s.row(i) {
            if k == j {
                continue;
            }
            let q = v.div_rem(&p).0;
            if !q.is_zero() {
                s.axpy(k, &q.neg().ok_or(Overflow)?, j)?;
            }
            if let Some(r) = s.entry(i, k) {
                let mag = r.magnitude();
                if smaller.is_none_or(|b| mag < b.0) {
                    smaller = Some((mag, k));
                }
            }
        }
        if let Some((_, k)) = smaller {
            j = k;
            continue;
        }
        let col = std::mem::take(&mut s.cols[j as usize]);
        let mut reduced = Vec::with_capacity(col.len());
        for (k, v) in col {
            let r = if k == i { v } else { v.div_rem(&p).1 };
            if !r.is_zero() {
                reduced.push((k, r));
            }
        }
        if reduced.len() == 1 {
            s.col_alive[j as usize] = false;
            s.row_alive[i as usize] = false;
            diag.push(p);
            return Ok(());
        }
        s.cols[j as usize] = reduced;
    }
}

/// Column-style Hermite basis of a lattice, keyed by pivot row.
///
/// Each vector's first non-zero entry is its positive pivot, and every
/// vector's entry in another vector's pivot row lies in `[0, pivot)`.
struct Hermite<T> {
    basis: std::collections::BTreeMap<u32, Vec<(u32, T)>>,
}

impl<T> Default for Hermite<T> {
    fn default() -> Self {
        Hermite { basis: Default::default() }
    }
}

fn lookup<T>(v: &[(u32, T)], i: u32) -> Option<&T> {
    v.binary_search_by_key(&i, |e| e.0).ok().map(|k| &v[k].1)
}

/// `a·x + b·y` over sparse vectors.
fn lin<T: Entry>(a: &T, x: &[(u32, T)], b: &T, y: &[(u32, T)]) -> Result<Vec<(u32, T)>, Overflow> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut p, mut q) = (0, 0);
    while p < x.len() || q < y.len() {
        let (i, v) = if q == y.len() || (p < x.len() && x[p].0 < y[q].0) {
            p += 1;
            (x[p - 1].0, a.mul(&x[p - 1].1).ok_or(Overflow)?)
        } else if p == x.len() || y[q].0 < x[p].0 {
            q += 1;
            (y[q - 1].0, b.mul(&y[q - 1].1).ok_or(Overflow)?)
        } else {
            p += 1;
            q += 1;
            let u = a.mul(&x[p - 1].1).ok_or(Overflow)?;
            (x[p - 1].0, u.add(&b.mul(&y[q - 1].1).ok_or(Overflow)?).ok_or(Overflow)?)
        };
        if !v.is_zero() {
            out.push((i, v));
        }
    }
    Ok(out)
}

impl<T: Entry> Hermite<T> {
    fn insert(&mut self, mut v: Vec<(u32, T)>) -> Result<(), Overflow> {
        let one = T::from_i64(1);
        loop {
            let Some((p, a)) = v.first().cloned() else {
                return Ok(());
            };
            let Some(b) = self.basis.get(&p) else {
                if a.is_negative() {
                    v = lin(&T::from_i64(0), &[], &T::from_i64(-1), &v)?;
                }
                let v = self.reduce_tail(v, p)?;
                self.basis.insert(p, v);
                self.reduce_column(p)?;
                return Ok(());
            };
            let c = lookup(b, p).expect("pivot present").clone();
            let (q, r) = a.div_rem(&c);
            if r.is_zero() {
                v = lin(&one, &v, &q.neg().ok_or(Overflow)?, b)?;
                continue;
            }
            // Replace (b, v) by (x·b + y·v, (c/g)·v − (a/g)·b): the pivot
            // becomes gcd(c, a) and v loses its leading entry.
            let (g, x, y) = c.ext_gcd(&a)?;
            let new_b = lin(&x, b, &y, &v)?;
            v = lin(&c.div_rem(&g).0, &v, &a.div_rem(&g).0.neg().ok_or(Overflow)?, b)?;
            let new_b = self.reduce_tail(new_b, p)?;
            self.basis.insert(p, new_b);
            self.reduce_column(p)?;
        }
    }

    /// Reduces the entries of `v` below row `p` modulo the later pivots.
    fn reduce_tail(&self, mut v: Vec<(u32, T)>, p: u32) -> Result<Vec<(u32, T)>, Overflow> {
        let one = T::from_i64(1);
        for (&q, b) in self.basis.range(p + 1..) {
            if let Some(e) = lookup(&v, q) {
                let c = lookup(b, q).expect("pivot present");
                let k = e.div_floor(c);
                if !k.is_zero() {
                    v = lin(&one, &v, &k.neg().ok_or(Overflow)?, b)?;
                }
            }
        }
        Ok(v)
    }

    /// Reduces row `p` of every earlier vector modulo the pivot at `p`.
    fn reduce_column(&mut self, p: u32) -> Result<(), Overflow> {
        let one = T::from_i64(1);
        let b = self.basis[&p].clone();
        let c = b[0].1.clone();
        for (_, w) in self.basis.range_mut(..p) {
            if let Some(e) = lookup(w, p) {
                let k = e.div_floor(&c);
                if !k.is_zero() {
                    *w = lin(&one, w, &k.neg().ok_or(Overflow)?, &b)?;
                }
            }
        }
        Ok(())
    }
}

/// Turns an arbitrary diagonal into invariant factors `d₁ | d₂ | …`.
fn normalize<T: Entry>(diag: Vec<T>) -> SmithForm {
    let mut units = 0usize;
    let mut rest: Vec<BigInt> = Vec::new();
    for d in diag {
        if d.is_unit() {
            units += 1;
        } else if !d.is_zero() {
            rest.push(d.to_big().abs());
        }
    }
    rest.sort();
    for i in 0..rest.len() {
        for j in i + 1..rest.len() {
            if Zero::is_zero(&(&rest[j] % &rest[i])) {
                continue;
            }
            let g = rest[i].gcd(&rest[j]);
            let l = &rest[i] / &g * &rest[j];
            rest[i] = g;
            rest[j] = l;
        }
    }
    let mut factors = vec![BigInt::one(); units];
    for d in rest {
        if d.is_one() {
            factors.insert(0, d);
        } else {
            factors.push(d);
        }
    }
    SmithForm { factors }
}
