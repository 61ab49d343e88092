use disthom::enumeration::{canonical_form, enumerate, enumerate_classes, isomorphic, permutations, Dedup, Predicate};

fn counts(p: Predicate, dedup: Dedup, sizes: std::ops::RangeInclusive<usize>) -> Vec<usize> {
    sizes.map(|n| enumerate(n, p, dedup).unwrap().len()).collect()
}

// Unlabeled counts from the standard integer sequences.
#[test]
fn lattices_up_to_isomorphism() {
    assert_eq!(counts(Predicate::Lattice, Dedup::Iso, 1..=4), [1, 1, 1, 2]);
}

#[test]
fn distributive_lattices_up_to_isomorphism() {
    assert_eq!(counts(Predicate::DistributiveLattice, Dedup::Iso, 1..=4), [1, 1, 1, 2]);
}

#[test]
fn semilattices_up_to_isomorphism() {
    assert_eq!(counts(Predicate::Semilattice, Dedup::Iso, 1..=5), [1, 1, 2, 5, 15]);
}

#[test]
fn labeled_semilattices() {
    assert_eq!(counts(Predicate::Semilattice, Dedup::None, 1..=4), [1, 2, 9, 76]);
}

#[test]
fn dedup_only_merges() {
    for p in Predicate::all() {
        for n in 1..=3 {
            let raw = enumerate(n, p, Dedup::None).unwrap().len();
            let iso = enumerate_classes(n, p, Dedup::Iso).unwrap();
            let dual = enumerate(n, p, Dedup::IsoDuality).unwrap().len();
            assert!(dual <= iso.len() && iso.len() <= raw, "{p:?} {n}");
            assert_eq!(iso.iter().map(|c| c.raw_count).sum::<usize>(), raw, "{p:?} {n}");
        }
    }
}

#[test]
fn classes_are_canonical_and_distinct() {
    let classes = enumerate(4, Predicate::Band, Dedup::Iso).unwrap();
    for (i, a) in classes.iter().enumerate() {
        assert_eq!(&canonical_form(a, false), a);
        for b in &classes[i + 1..] {
            assert!(!isomorphic(a, b));
        }
    }
}

#[test]
fn output_is_deterministic() {
    let a = enumerate(4, Predicate::Spindle, Dedup::IsoDuality).unwrap();
    let b = enumerate(4, Predicate::Spindle, Dedup::IsoDuality).unwrap();
    assert_eq!(a, b);
}

#[test]
fn permutation_count() {
    assert_eq!(permutations(5).len(), 120);
    assert_eq!(permutations(0).len(), 1);
}

#[test]
fn oversized_requests_fail() {
    assert!(enumerate(0, Predicate::Band, Dedup::Iso).is_err());
    assert!(enumerate(40, Predicate::Lattice, Dedup::Iso).is_err());
}

// The smallest non-distributive lattices, M3 and N5, have five elements.
#[test]
fn small_lattices_are_distributive() {
    assert_eq!(enumerate(4, Predicate::Lattice, Dedup::Iso).unwrap(), enumerate(4, Predicate::DistributiveLattice, Dedup::Iso).unwrap());
}
