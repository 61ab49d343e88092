//! Smith normal form against determinantal divisors, and the `q∂` transform
//! against a direct computation.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use proptest::prelude::*;

use disthom::homology::{homology_from_boundaries, qdiff_transform};
use disthom::matrix::IntMatrix;
use disthom::snf::smith_normal_form;
use disthom::complex::q_scale;

fn det(m: &[Vec<i128>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|c| {
                let minor: Vec<Vec<i128>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(k, _)| k != c).map(|(_, &v)| v).collect())
                    .collect();
                let sign = if c % 2 == 0 { 1 } else { -1 };
                sign * m[0][c] * det(&minor)
            })
            .sum(),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// `d_k = D_k / D_{k−1}` with `D_k` the gcd of all `k × k` minors.
fn determinantal(m: &[Vec<i64>]) -> Vec<i128> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = 1i128;
    let mut out = Vec::new();
    for k in 1..=rows.min(cols) {
        let mut g = 0i128;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let sub: Vec<Vec<i128>> = rs.iter().map(|&r| cs.iter().map(|&c| m[r][c] as i128).collect()).collect();
                g = gcd(g, det(&sub));
            }
        }
        if g == 0 {
            break;
        }
        out.push(g / prev);
        prev = g;
    }
    out
}

fn matrix(max: i64, unit_free: bool) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=4, 1usize..=5).prop_flat_map(move |(r, c)| {
        let entry = if unit_free {
            prop_oneof![Just(0i64), 2..=max, -max..=-2].boxed()
        } else {
            (-max..=max).boxed()
        };
        prop::collection::vec(prop::collection::vec(entry, c), r)
    })
}

fn snf(m: &[Vec<i64>]) -> Vec<i128> {
    smith_normal_form(&IntMatrix::from_dense(m).unwrap())
        .factors
        .iter()
        .map(|d| d.to_i128().unwrap())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn factors_match_determinantal_divisors(m in matrix(6, false)) {
        prop_assert_eq!(snf(&m), determinantal(&m));
    }

    #[test]
    fn unit_free_matrices_take_the_hermite_path(m in matrix(9, true)) {
        prop_assert_eq!(snf(&m), determinantal(&m));
    }

    #[test]
    fn factors_divide_in_sequence(m in matrix(20, false)) {
        let f = smith_normal_form(&IntMatrix::from_dense(&m).unwrap()).factors;
        for w in f.windows(2) {
            prop_assert!((&w[1] % &w[0]) == BigInt::from(0));
        }
        prop_assert!(f.iter().all(|d| *d >= BigInt::one()));
    }

    #[test]
    fn invariant_under_transpose(m in matrix(7, false)) {
        let a = IntMatrix::from_dense(&m).unwrap();
        prop_assert_eq!(smith_normal_form(&a), smith_normal_form(&a.transpose()));
    }

    /// Two-term complexes `0 → Z^c --A--> Z^r → 0`.
    #[test]
    fn qdiff_matches_scaled_complex(m in matrix(5, false), q in prop::sample::select(vec![2u64, 3, 6])) {
        let a = IntMatrix::from_dense(&m).unwrap();
        let ds = vec![IntMatrix::zeros(0, a.rows()), a.clone(), IntMatrix::zeros(a.cols(), 0)];
        let ranks = [a.rows(), a.cols()];
        let h = homology_from_boundaries(&ds).unwrap();
        let direct = homology_from_boundaries(&q_scale(&ds, q as i64).unwrap()).unwrap();
        prop_assert_eq!(qdiff_transform(&h, &ranks, q).unwrap(), direct);
    }
}

#[test]
fn entries_past_i64_are_exact() {
    let big = i64::MAX;
    let f = smith_normal_form(&IntMatrix::from_dense(&[vec![big, 3], vec![6, big]]).unwrap()).factors;
    let det = BigInt::from(big) * BigInt::from(big) - BigInt::from(18);
    assert_eq!(f.len(), 2);
    assert_eq!(&f[0] * &f[1], det);
}
