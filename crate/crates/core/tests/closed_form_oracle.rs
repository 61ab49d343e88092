//! Closed forms against exact Smith-normal-form homology.

use disthom::closed_form::*;
use disthom::complex::{ComplexPart, ScalarVector};
use disthom::group::FinAbGroup;
use disthom::homology::homology_profile;
use disthom::lattice::{build_standard, lattice_info, StandardKind};

fn sample() -> Vec<ScalarVector> {
    [
        (0, 0, 0, 0),
        (0, 0, 0, 3),
        (1, -1, -1, 1),
        (2, -2, -2, 2),
        (1, -1, -1, 0),
        (2, -2, -2, 1),
        (3, -3, -3, 2),
        (1, 1, 1, 1),
        (1, -1, 0, 0),
        (4, 5, 2, 0),
        (2, 2, 2, 2),
        (2, 0, 0, -2),
        (1, 1, 0, 0),
        (2, 4, 0, 0),
        (3, 3, 3, -9),
        (0, 2, 4, 1),
        (0, 1, 1, 0),
        (2, 2, 0, 1),
        (6, 0, 3, -3),
        (1, 2, 3, 4),
        (-1, 3, 1, 2),
    ]
    .into_iter()
    .map(|(a, b, c, d)| ScalarVector::lattice(a, b, c, d))
    .collect()
}

fn snf(kind: &StandardKind, s: &ScalarVector, part: ComplexPart, n_max: usize) -> Vec<FinAbGroup> {
    let m = build_standard(kind).unwrap();
    homology_profile(&m, s, part, n_max).unwrap().groups
}

#[test]
fn b1_parts_match_oracle_on_a_small_grid() {
    for a in -1..=1 {
        for b in -2..=2 {
            for c in -1..=2 {
                for d in [-1, 0, 2] {
                    let s = ScalarVector::lattice(a, b, c, d);
                    let k = StandardKind::Boolean(1);
                    let red = snf(&k, &s, ComplexPart::reduced(0), 3);
                    let cf = snf(&k, &s, ComplexPart::cf(0), 3);
                    let f = snf(&k, &s, ComplexPart::f(0), 3);
                    let nor = snf(&k, &s, ComplexPart::NORMALIZED, 3);
                    for n in 0..=3u32 {
                        let i = n as usize;
                        assert_eq!(red[i], hom_b1_reduced(a, b, c, d, n).unwrap(), "{s} reduced n={n}");
                        assert_eq!(cf[i], hom_b1_cf(a, b, c, d, n).unwrap(), "{s} CF n={n}");
                        assert_eq!(f[i], hom_b1_f(a, b, c, d, n).unwrap(), "{s} F n={n}");
                        assert_eq!(nor[i], hom_b1_normalized(a, b, c, n), "{s} N n={n}");
                    }
                }
            }
        }
    }
}

#[test]
fn lattices_match_oracle() {
    for kind in [StandardKind::Chain(3), StandardKind::Chain(4), StandardKind::Boolean(2)] {
        let m = build_standard(&kind).unwrap();
        let info = lattice_info(&m).unwrap();
        let bottom = info.bottom.unwrap();
        for s in sample() {
            let p = LatticeParams::from_info(&info, s.clone()).unwrap();
            let cf = snf(&kind, &s, ComplexPart::cf(bottom), 2);
            let f = snf(&kind, &s, ComplexPart::f(bottom), 2);
            let full = snf(&kind, &s, ComplexPart::FULL, 2);
            let nor = snf(&kind, &s, ComplexPart::NORMALIZED, 2);
            for n in 0..=2u32 {
                let i = n as usize;
                assert_eq!(cf[i], hom_lattice(&p, n, LatticePart::Cf).unwrap(), "{kind:?} {s} CF n={n}");
                assert_eq!(f[i], hom_lattice(&p, n, LatticePart::F).unwrap(), "{kind:?} {s} F n={n}");
                assert_eq!(full[i], hom_lattice(&p, n, LatticePart::Full).unwrap(), "{kind:?} {s} full n={n}");
                assert_eq!(nor[i], hom_normalized_lattice(&p, n).unwrap(), "{kind:?} {s} N n={n}");
            }
        }
    }
}

#[test]
fn reduced_is_cf_plus_f() {
    for s in sample() {
        for (size, j) in [(2, 1), (3, 2), (4, 2), (4, 3), (9, 4)] {
            let p = LatticeParams::new(size, j, s.clone()).unwrap();
            for n in 0..6 {
                let sum = hom_lattice(&p, n, LatticePart::Cf)
                    .unwrap()
                    .sum(&hom_lattice(&p, n, LatticePart::F).unwrap())
                    .unwrap();
                assert_eq!(hom_lattice(&p, n, LatticePart::Reduced).unwrap(), sum);
            }
        }
    }
}

#[test]
fn boolean_rank_table_against_unaugmented_oracle() {
    // The table disagrees with the complex only on a = 0, b = −c ≠ 0.
    for j in 1..=2u32 {
        let kind = StandardKind::Boolean(j as usize);
        for a in -2..=2 {
            for b in -2..=2 {
                for c in -2..=2 {
                    let s = ScalarVector::lattice(a, b, c, 0);
                    let h = snf(&kind, &s, ComplexPart::FULL, if j == 1 { 3 } else { 2 });
                    for (n, g) in h.iter().enumerate() {
                        let table = rank_boolean_augmented(a, b, c, j, n as u32);
                        if a == 0 && b == -c && b != 0 {
                            assert_eq!(g.free, 1);
                        } else {
                            assert_eq!(g.free as u128, table, "B_{j} {s} n={n}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn unital_spindle_formula_on_chain_semilattices() {
    // (◁, ∨, ▷) on a chain: ⊤ is the projector, ⊥ the unit.
    for size in 2..=4usize {
        let join = disthom::OperationTable::from_fn(size, |x, y| x.max(y)).unwrap();
        let m = disthom::MultiMagma::new(vec![join]).unwrap().augment_with_trivial(true, true).unwrap();
        for (a, b, d) in [(0, 0, 0), (1, 1, 1), (2, -2, 0), (2, 2, 1), (0, 0, 3), (2, 4, -6), (3, 6, 1)] {
            let s = ScalarVector::new(vec![a, b, d]);
            let h = homology_profile(&m, &s, ComplexPart::reduced(size - 1), 3).unwrap().groups;
            for n in 0..=3u32 {
                assert_eq!(
                    h[n as usize],
                    hom_unital_spindle(size, a, b, d, n).unwrap(),
                    "size {size} {s} n={n}"
                );
            }
        }
    }
}
