//! Sparse integer matrices.
//!
//! Entries are `i64` with checked arithmetic; anything that could overflow
//! reports [`Error::Overflow`] instead of wrapping. Boundary matrices of the
//! complexes in this crate have entries bounded by the scalar sums times the
//! degree, so this never triggers for realistic inputs. The Smith normal form
//! promotes to arbitrary precision on its own.

use std::fmt::Write as _;

use crate::error::{Error, Result};

/// A `rows × cols` integer matrix stored column by column; each column is a
/// row-sorted list of non-zero entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: Vec<Vec<(u32, i64)>>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols: vec![Vec::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        IntMatrix {
            rows: n,
            cols: (0..n).map(|i| vec![(i as u32, 1)]).collect(),
        }
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|row| row.len() != c) {
            return Err(Error::Parse(format!("row {bad} has the wrong length")));
        }
        let cols = (0..c)
            .map(|j| {
                (0..r)
                    .filter(|&i| rows[i][j] != 0)
                    .map(|i| (i as u32, rows[i][j]))
                    .collect()
            })
            .collect();
        Ok(IntMatrix { rows: r, cols })
    }

    /// Builds from unsorted column entry lists; duplicates are summed.
    pub fn from_columns(rows: usize, columns: Vec<Vec<(u32, i64)>>) -> Result<Self> {
        let mut cols = Vec::with_capacity(columns.len());
        for mut col in columns {
            col.sort_unstable_by_key(|e| e.0);
            let mut merged: Vec<(u32, i64)> = Vec::with_capacity(col.len());
            for (r, v) in col {
                if r as usize >= rows {
                    return Err(Error::Invariant(format!("row {r} outside {rows} rows")));
                }
                match merged.last_mut() {
                    Some(last) if last.0 == r => {
                        last.1 = last
                            .1
                            .checked_add(v)
                            .ok_or_else(|| Error::Overflow("matrix assembly".into()))?;
                    }
                    _ => merged.push((r, v)),
                }
            }
            merged.retain(|e| e.1 != 0);
            cols.push(merged);
        }
        Ok(IntMatrix { rows, cols })
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &[(u32, i64)] {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[Vec<(u32, i64)>] {
        &self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.cols[j]
            .binary_search_by_key(&(i as u32), |e| e.0)
            .map_or(0, |k| self.cols[j][k].1)
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut d = vec![vec![0; self.cols()]; self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, v) in col {
                d[i as usize][j] = v;
            }
        }
        d
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut cols = vec![Vec::new(); self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, v) in col {
                cols[i as usize].push((j as u32, v));
            }
        }
        IntMatrix {
            rows: self.cols(),
            cols,
        }
    }

    pub fn scale(&self, q: i64) -> Result<IntMatrix> {
        let mut cols = Vec::with_capacity(self.cols());
        for col in &self.cols {
            let mut c = Vec::with_capacity(col.len());
            for &(i, v) in col {
                let w = v
                    .checked_mul(q)
                    .ok_or_else(|| Error::Overflow("matrix scaling".into()))?;
                if w != 0 {
                    c.push((i, w));
                }
            }
            cols.push(c);
        }
        Ok(IntMatrix {
            rows: self.rows,
            cols,
        })
    }

    pub fn add(&self, other: &IntMatrix) -> Result<IntMatrix> {
        self.check_same_shape(other)?;
        let columns = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| a.iter().chain(b).copied().collect())
            .collect();
        IntMatrix::from_columns(self.rows, columns)
    }

    pub fn sub(&self, other: &IntMatrix) -> Result<IntMatrix> {
        self.add(&other.scale(-1)?)
    }

    /// `self · other`.
    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols() != other.rows {
            return Err(Error::SizeMismatch {
                expected: self.cols(),
                found: other.rows,
            });
        }
        let mut columns = Vec::with_capacity(other.cols());
        for col in &other.cols {
            let mut acc: Vec<(u32, i64)> = Vec::new();
            for &(k, b) in col {
                for &(i, a) in &self.cols[k as usize] {
                    let v = a
                        .checked_mul(b)
                        .ok_or_else(|| Error::Overflow("matrix product".into()))?;
                    acc.push((i, v));
                }
            }
            columns.push(acc);
        }
        IntMatrix::from_columns(self.rows, columns)
    }

    fn check_same_shape(&self, other: &IntMatrix) -> Result<()> {
        if self.rows != other.rows || self.cols() != other.cols() {
            return Err(Error::SizeMismatch {
                expected: self.rows * self.cols(),
                found: other.rows * other.cols(),
            });
        }
        Ok(())
    }

    /// Plain-text dump: a `rows cols` header, then one line per row.
    pub fn dump(&self) -> String {
        let mut out = format!("{} {}\n", self.rows, self.cols());
        for row in self.to_dense() {
            let line: Vec<String> = row.iter().map(i64::to_string).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }

    /// Parses the [`dump`](Self::dump) format; whitespace is free-form.
    pub fn parse_dump(text: &str) -> Result<IntMatrix> {
        let mut it = text.split_whitespace();
        let mut next = |what: &str| -> Result<i64> {
            it.next()
                .ok_or_else(|| Error::Parse(format!("missing {what}")))?
                .parse::<i64>()
                .map_err(|e| Error::Parse(format!("{what}: {e}")))
        };
        let r = next("row count")?;
        let c = next("column count")?;
        if r < 0 || c < 0 {
            return Err(Error::Parse("negative dimension".into()));
        }
        let (r, c) = (r as usize, c as usize);
        let mut dense = vec![vec![0i64; c]; r];
        for (i, row) in dense.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = next(&format!("entry ({i}, {j})"))?;
            }
        }
        let mut m = IntMatrix::from_dense(&dense)?;
        m.rows = r;
        if m.cols.len() != c {
            m.cols = vec![Vec::new(); c];
        }
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dense_round_trip_and_product() {
        let a = IntMatrix::from_dense(&[vec![1, 2], vec![0, -1], vec![3, 0]]).unwrap();
        let b = IntMatrix::from_dense(&[vec![2, 0, 1], vec![1, 1, 0]]).unwrap();
        assert_eq!(
            a.mul(&b).unwrap().to_dense(),
            vec![vec![4, 2, 1], vec![-1, -1, 0], vec![6, 0, 3]]
        );
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!(a.get(2, 0), 3);
        assert_eq!(a.get(2, 1), 0);
    }

    #[test]
    fn dump_round_trip() {
        let a = IntMatrix::from_dense(&[vec![1, 0, -7], vec![0, 0, 0]]).unwrap();
        let text = a.dump();
        assert!(text.starts_with("2 3\n"));
        assert_eq!(IntMatrix::parse_dump(&text).unwrap(), a);
        let empty = IntMatrix::zeros(0, 3);
        assert_eq!(IntMatrix::parse_dump(&empty.dump()).unwrap(), empty);
    }

    #[test]
    fn overflow_is_reported() {
        let a = IntMatrix::from_dense(&[vec![i64::MAX]]).unwrap();
        assert!(matches!(a.scale(2), Err(Error::Overflow(_))));
    }
}
