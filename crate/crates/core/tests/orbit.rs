mod common;

use common::*;
use disthom::algorithms::{is_irreducible, reduce_by_orbits, reduce_by_orbits_with, ReductionMode};
use disthom::closed_form::{hom_lattice_cf, hom_lattice_f, LatticeParams};
use disthom::complex::{ComplexPart, ScalarVector};
use disthom::homology::f_part_recursion;
use disthom::lattice::{build_standard, lattice_info, StandardKind};
use disthom::MultiMagma;

fn scalars() -> ScalarVector {
    ScalarVector::new(vec![4, 5, 2, 0])
}

/// Outside the hypotheses the lenient prediction and the true homology part ways.
#[test]
fn second_example_prediction_and_snf() {
    let m = orbit_example_2();
    let predicted = reduce_by_orbits_with(&m, &scalars(), 3, ReductionMode::Lenient).unwrap().homology.cf;
    let actual = h(&m, &scalars(), ComplexPart::cf(0), 3);
    assert_eq!(predicted, groups(&["Z_3^2", "Z_3^2", "Z_3^6", "Z_3^10"]));
    assert_eq!(
        actual,
        groups(&[
            "Z_2 ⊕ Z_3 ⊕ Z_9",
            "Z_2^2 ⊕ Z_3 ⊕ Z_4 ⊕ Z_9",
            "Z_2^10 ⊕ Z_3^3 ⊕ Z_4^3 ⊕ Z_9^3",
            "Z_2^38 ⊕ Z_3^5 ⊕ Z_4^13 ⊕ Z_9^5",
        ])
    );
    assert!(reduce_by_orbits(&m, &scalars(), 3).is_err());
}

#[test]
fn first_example_as_printed_is_rejected() {
    let (t1, t2) = orbit_example_1_printed();
    let m = MultiMagma::from_rows(&[t1, t2]).unwrap();
    assert!(!m.is_multishelf());
    assert!(orbit_example_1().is_multishelf());
}

#[test]
fn first_example_after_correction() {
    let m = orbit_example_1();
    let got = h(&m, &scalars(), ComplexPart::cf(0), 3);
    assert_eq!(got[1], group("Z2^2 + Z4"));
}

fn lattices() -> Vec<StandardKind> {
    vec![
        StandardKind::Chain(2),
        StandardKind::Chain(3),
        StandardKind::Chain(4),
        StandardKind::Boolean(2),
    ]
}

/// On a distributive lattice the strict reduction reproduces both closed forms.
#[test]
fn strict_reduction_on_lattices_matches_closed_forms() {
    for kind in lattices() {
        let m = build_standard(&kind).unwrap();
        let info = lattice_info(&m).unwrap();
        for s in branch_sample() {
            let r = reduce_by_orbits(&m, &s, 3).unwrap();
            let p = LatticeParams::from_info(&info, s.clone()).unwrap();
            for n in 0..=3 {
                assert_eq!(r.homology.cf[n], hom_lattice_cf(&p, n as u32).unwrap(), "{kind:?} {s} CF H_{n}");
                assert_eq!(r.homology.f[n], hom_lattice_f(&p, n as u32).unwrap(), "{kind:?} {s} F H_{n}");
            }
        }
    }
}

#[test]
fn chain3_with_equal_scalars() {
    let m = build_standard(&StandardKind::Chain(3)).unwrap();
    let s = ScalarVector::lattice(2, 2, 2, 2);
    let r = reduce_by_orbits(&m, &s, 3).unwrap();
    assert_eq!(r.homology.cf, h(&m, &s, ComplexPart::cf(0), 3));
    assert_eq!(r.homology.f, h(&m, &s, ComplexPart::f(0), 3));
}

#[test]
fn f_recursion_matches_snf() {
    let m = build_standard(&StandardKind::Boolean(2)).unwrap();
    for s in branch_sample() {
        let cf = h(&m, &s, ComplexPart::cf(0), 3);
        assert_eq!(f_part_recursion(&cf, s.sum()).unwrap(), h(&m, &s, ComplexPart::f(0), 3), "{s}");
    }
}

#[test]
fn leaves_are_irreducible() {
    let m = build_standard(&StandardKind::Boolean(2)).unwrap();
    let r = reduce_by_orbits(&m, &ScalarVector::lattice(1, 2, 3, 4), 2).unwrap();
    assert_eq!(r.tree.mode, ReductionMode::Strict);
    assert!(r.tree.root.depth() >= 2);
    for leaf in r.tree.root.leaves() {
        assert!(leaf.leaf.is_some() && leaf.pivot.is_none());
    }
    assert!(!is_irreducible(&m).unwrap().irreducible);
    assert!(!r.tree.render().is_empty());
}

#[test]
fn scalar_length_is_checked() {
    let m = build_standard(&StandardKind::Chain(2)).unwrap();
    assert!(reduce_by_orbits(&m, &ScalarVector::new(vec![1, 2]), 2).is_err());
}
