//! Shared oracles and property checks for the integration tests.
#![allow(dead_code)]

use disthom::complex::{ChainComplex, ComplexPart, ScalarVector, StructuralMaps};
use disthom::group::FinAbGroup;
use disthom::homology::homology_profile;
use disthom::lattice::lattice_info;
use disthom::matrix::IntMatrix;
use disthom::{MultiMagma, OperationTable};

pub fn group(s: &str) -> FinAbGroup {
    s.parse().unwrap()
}

pub fn groups(v: &[&str]) -> Vec<FinAbGroup> {
    v.iter().map(|s| group(s)).collect()
}

/// `(◁, ⋆₁, ⋆₂, ▷)` over two 0-based tables.
pub fn four_op(t1: &[Vec<usize>], t2: &[Vec<usize>]) -> MultiMagma {
    MultiMagma::new(vec![OperationTable::new(t1).unwrap(), OperationTable::new(t2).unwrap()])
        .unwrap()
        .augment_with_trivial(true, true)
        .unwrap()
}

pub fn rows(t: [[usize; 4]; 4]) -> Vec<Vec<usize>> {
    t.iter().map(|r| r.to_vec()).collect()
}

/// The second worked example with two absorbing operations on four points.
pub fn orbit_example_2() -> MultiMagma {
    four_op(
        &rows([[0, 1, 0, 1], [0, 1, 0, 1], [2, 3, 2, 3], [2, 3, 2, 3]]),
        &rows([[0, 0, 2, 2], [1, 1, 3, 3], [0, 0, 2, 2], [1, 1, 3, 3]]),
    )
}

/// The first worked example as printed; its second table is not right
/// self-distributive.
pub fn orbit_example_1_printed() -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    (
        rows([[0, 1, 0, 1], [0, 1, 0, 1], [0, 1, 2, 3], [0, 1, 2, 3]]),
        rows([[0, 1, 2, 3], [1, 1, 2, 3], [0, 1, 2, 3], [1, 1, 2, 3]]),
    )
}

/// The nearest multishelf: two entries of the second table changed.
pub fn orbit_example_1() -> MultiMagma {
    let (t1, mut t2) = orbit_example_1_printed();
    t2[1][2] = 3;
    t2[3][2] = 3;
    four_op(&t1, &t2)
}

/// `∂ₙ ∂ₙ₊₁ = 0` for `n = 1..=n_max`.
pub fn boundary_squares_vanish(m: &MultiMagma, s: &ScalarVector, part: ComplexPart, n_max: usize) -> bool {
    let c = ChainComplex::new(m, s, part).unwrap();
    (1..=n_max as i64).all(|n| {
        let prod = c.boundary(n).unwrap().mul(&c.boundary(n + 1).unwrap()).unwrap();
        prod.is_zero()
    })
}

fn commutator_vanishes(a: IntMatrix, b: IntMatrix) -> bool {
    a.sub(&b).unwrap().is_zero()
}

/// `α∂ = ∂α` on the full complex.
pub fn alpha_is_chain_map(m: &MultiMagma, s: &ScalarVector, n_max: usize) -> bool {
    let c = ChainComplex::new(m, s, ComplexPart::FULL).unwrap();
    let maps = StructuralMaps::new(&c);
    (1..=n_max as i64).all(|n| {
        let d = c.boundary(n).unwrap();
        commutator_vanishes(
            d.mul(&maps.alpha(n).unwrap()).unwrap(),
            maps.alpha(n - 1).unwrap().mul(&d).unwrap(),
        )
    })
}

/// `∂s₀ + s₀∂ = Σ·σπ` on the given part.
pub fn s0_homotopy(m: &MultiMagma, s: &ScalarVector, part: ComplexPart, n_max: usize) -> bool {
    let c = ChainComplex::new(m, s, part).unwrap();
    let maps = StructuralMaps::new(&c);
    (1..=n_max as i64).all(|n| {
        let lhs = c
            .boundary(n + 1)
            .unwrap()
            .mul(&maps.degeneracy(n, 0).unwrap())
            .unwrap()
            .add(&maps.degeneracy(n - 1, 0).unwrap().mul(&c.boundary(n).unwrap()).unwrap())
            .unwrap();
        commutator_vanishes(lhs, maps.sigma_pi(n).unwrap().scale(s.sum()).unwrap())
    })
}

pub fn h(m: &MultiMagma, s: &ScalarVector, part: ComplexPart, n_max: usize) -> Vec<FinAbGroup> {
    homology_profile(m, s, part, n_max).unwrap().groups
}

fn sum(a: &[FinAbGroup], b: &[FinAbGroup]) -> Vec<FinAbGroup> {
    a.iter().zip(b).map(|(x, y)| x.sum(y).unwrap()).collect()
}

/// `H(C) = H(point) ⊕ H(F(X, t)) ⊕ H(CF(X, t))` at an idempotent `t`.
pub fn full_splits(m: &MultiMagma, s: &ScalarVector, t: usize, n_max: usize) -> bool {
    let point = {
        let ops = vec![OperationTable::left_trivial(1).unwrap(); m.num_ops()];
        h(&MultiMagma::new(ops).unwrap(), s, ComplexPart::FULL, n_max)
    };
    let parts = sum(&sum(&point, &h(m, s, ComplexPart::f(t), n_max)), &h(m, s, ComplexPart::cf(t), n_max));
    parts == h(m, s, ComplexPart::FULL, n_max)
}

/// `H(C) = H(C^D) ⊕ H(C^N)`.
pub fn normalized_splits(m: &MultiMagma, s: &ScalarVector, n_max: usize) -> bool {
    let parts = sum(&h(m, s, ComplexPart::DEGENERATE, n_max), &h(m, s, ComplexPart::NORMALIZED, n_max));
    parts == h(m, s, ComplexPart::FULL, n_max)
}

/// `Σ · H(F(X, t)) = 0`.
pub fn sigma_kills_f(m: &MultiMagma, s: &ScalarVector, t: usize, n_max: usize) -> bool {
    let sigma = s.sum().unsigned_abs();
    sigma == 0 || h(m, s, ComplexPart::f(t), n_max).iter().all(|g| g.annihilated_by(sigma))
}

/// `gcd(a+b, a+c) · H(L, t) = 0` on `(◁, ∨, ∧, ▷)` over a distributive lattice.
pub fn lattice_annihilator(m: &MultiMagma, s: &ScalarVector, t: usize, n_max: usize) -> bool {
    let g = s.g().unsigned_abs();
    g == 0 || h(m, s, ComplexPart::reduced(t), n_max).iter().all(|x| x.annihilated_by(g))
}

/// `H(L)` with `(a, b, c, d)` equals `H(L^op)` with the same scalars, i.e.
/// `H(L)` with `(a, c, b, d)`.
pub fn duality_invariant(m: &MultiMagma, s: &ScalarVector, n_max: usize) -> bool {
    let v = s.as_slice();
    let swapped = ScalarVector::new(vec![v[0], v[2], v[1], v[3]]);
    h(m, s, ComplexPart::FULL, n_max) == h(&m.dual(), s, ComplexPart::FULL, n_max)
        && h(m, s, ComplexPart::FULL, n_max) == h(m, &swapped, ComplexPart::FULL, n_max)
}

pub fn is_distributive_lattice_system(m: &MultiMagma) -> bool {
    m.num_ops() == 4 && lattice_info(m).is_ok_and(|i| i.is_distributive)
}

/// Scalars covering every branch of the lattice closed forms:
/// `g = 0 / ≠ 0`, `a = 0 / ≠ 0`, `Σ = 0 / ≠ 0`.
pub fn branch_sample() -> Vec<ScalarVector> {
    [
        (0, 0, 0, 0),
        (0, 0, 0, 3),
        (1, -1, -1, 1),
        (1, -1, -1, 0),
        (2, -2, -2, 1),
        (0, 1, -1, 0),
        (0, 2, 4, 1),
        (0, 1, 1, 0),
        (1, 1, 1, -3),
        (1, 1, 1, 1),
        (4, 5, 2, 0),
        (2, 2, 2, 2),
        (2, 0, 0, -2),
        (1, -1, 0, 0),
        (2, 4, 0, 0),
        (3, 3, 3, -9),
        (6, 0, 3, -3),
        (1, 2, 3, 4),
        (-1, 3, 1, 2),
        (2, 2, 0, 1),
    ]
    .into_iter()
    .map(|(a, b, c, d)| ScalarVector::lattice(a, b, c, d))
    .collect()
}
