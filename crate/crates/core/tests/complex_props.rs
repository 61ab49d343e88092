mod common;

use std::sync::OnceLock;

use common::*;
use disthom::complex::{verify_weak_simplicial, ComplexPart, ScalarVector};
use disthom::enumeration::{enumerate, Dedup, Predicate};
use disthom::MultiMagma;
use proptest::prelude::*;

/// `(◁, ⋆, ▷)` for every spindle on three points, up to relabeling.
fn systems() -> &'static [MultiMagma] {
    static S: OnceLock<Vec<MultiMagma>> = OnceLock::new();
    S.get_or_init(|| {
        enumerate(3, Predicate::Spindle, Dedup::Iso)
            .unwrap()
            .into_iter()
            .map(|m| m.augment_with_trivial(true, true).unwrap())
            .collect()
    })
}

fn case() -> impl Strategy<Value = (MultiMagma, ScalarVector, usize)> {
    (0..systems().len(), prop::collection::vec(-3i64..=3, 3), 0usize..3)
        .prop_map(|(i, s, t)| (systems()[i].clone(), ScalarVector::new(s), t))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn boundary_squares_to_zero((m, s, t) in case()) {
        for part in [ComplexPart::FULL, ComplexPart::reduced(t), ComplexPart::f(t), ComplexPart::cf(t), ComplexPart::DEGENERATE, ComplexPart::NORMALIZED] {
            prop_assert!(boundary_squares_vanish(&m, &s, part, 2), "{part:?}");
        }
    }

    #[test]
    fn weak_simplicial((m, s, _t) in case()) {
        prop_assert!(verify_weak_simplicial(&m, &s, 2).passed());
    }

    #[test]
    fn alpha_commutes_with_boundary((m, s, _t) in case()) {
        prop_assert!(alpha_is_chain_map(&m, &s, 2));
    }

    #[test]
    fn s0_is_a_homotopy_to_sigma_sigma_pi((m, s, t) in case()) {
        prop_assert!(s0_homotopy(&m, &s, ComplexPart::reduced(t), 2));
    }

    #[test]
    fn full_complex_splits((m, s, t) in case()) {
        prop_assert!(full_splits(&m, &s, t, 2));
        prop_assert!(normalized_splits(&m, &s, 2));
    }

    #[test]
    fn sigma_annihilates_f((m, s, t) in case()) {
        prop_assert!(sigma_kills_f(&m, &s, t, 2));
    }
}
