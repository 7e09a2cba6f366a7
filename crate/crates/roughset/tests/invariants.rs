//! Structural laws of the whole stack, checked exhaustively at small
//! universe sizes and property-based at random ones: the refinement order,
//! approximation algebra, measure monotonicity, isomorphism detection
//! against a full bijection search, and literal round-trips.

use proptest::collection::vec;
use proptest::prelude::*;

use roughset::{
    accuracy_ratio, approximate, catalog, co_entropy, entropy, enumerate_partitions,
    exists_isomorphism, matching_bijection, named_measures, pawlak_accuracy, pawlak_roughness,
    roughness_ratio, strong_instance_by_name, verify_roughness_axioms,
    verify_weak_roughness_axioms, ElementMap, InformationTable, Partition, RoughnessMeasure,
    Subset, Universe, DEFAULT_EPSILON,
};

fn partitions_of(n: usize) -> Vec<Partition> {
    enumerate_partitions(&Universe::numbered(n).unwrap())
        .unwrap()
        .collect()
}

/// All permutations of 0..n, for brute-force bijection searches.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut result = Vec::new();
    for shorter in permutations(n - 1) {
        for slot in 0..n {
            let mut perm = shorter.clone();
            perm.insert(slot, n - 1);
            result.push(perm);
        }
    }
    result
}

#[test]
fn refinement_is_a_partial_order() {
    let all = partitions_of(4);
    for p in &all {
        assert!(p.refines(p).unwrap(), "reflexivity at {}", p.render());
        assert!(!p.strictly_refines(p).unwrap());
    }
    for p in &all {
        for s in &all {
            if p.refines(s).unwrap() && s.refines(p).unwrap() {
                assert_eq!(p, s, "antisymmetry: {} vs {}", p.render(), s.render());
            }
            for t in &all {
                if p.refines(s).unwrap() && s.refines(t).unwrap() {
                    assert!(
                        p.refines(t).unwrap(),
                        "transitivity: {} ≤ {} ≤ {}",
                        p.render(),
                        s.render(),
                        t.render()
                    );
                }
            }
        }
    }
}

#[test]
fn every_partition_sits_between_the_extremes() {
    for n in 1..=5usize {
        let u = Universe::numbered(n).unwrap();
        let discrete = Partition::discrete(&u);
        let trivial = Partition::trivial(&u);
        for p in enumerate_partitions(&u).unwrap() {
            assert!(discrete.refines(&p).unwrap());
            assert!(p.refines(&trivial).unwrap());
        }
    }
}

#[test]
fn lower_and_upper_are_complementary_duals() {
    let u = Universe::numbered(4).unwrap();
    for p in enumerate_partitions(&u).unwrap() {
        for a in u.all_subsets().unwrap() {
            let r = approximate(&p, &a).unwrap();
            let r_complement = approximate(&p, &a.complement()).unwrap();
            assert_eq!(r.lower.complement(), r_complement.upper);
            assert_eq!(r.upper.complement(), r_complement.lower);
        }
    }
}

#[test]
fn approximations_tighten_under_refinement() {
    let all = partitions_of(4);
    let u = all[0].universe().clone();
    let subsets = u.all_subsets().unwrap();
    for p in &all {
        for s in &all {
            if !p.refines(s).unwrap() {
                continue;
            }
            for a in &subsets {
                let fine = approximate(p, a).unwrap();
                let coarse = approximate(s, a).unwrap();
                assert!(coarse.lower.is_subset_of(&fine.lower).unwrap());
                assert!(fine.lower.is_subset_of(a).unwrap());
                assert!(a.is_subset_of(&fine.upper).unwrap());
                assert!(fine.upper.is_subset_of(&coarse.upper).unwrap());
            }
        }
    }
}

#[test]
fn upper_is_additive_and_lower_is_multiplicative() {
    let u = Universe::numbered(4).unwrap();
    let subsets = u.all_subsets().unwrap();
    for p in enumerate_partitions(&u).unwrap() {
        for a in &subsets {
            for b in &subsets {
                let union = approximate(&p, &a.union(b).unwrap()).unwrap();
                let intersection = approximate(&p, &a.intersection(b).unwrap()).unwrap();
                let ra = approximate(&p, a).unwrap();
                let rb = approximate(&p, b).unwrap();
                assert_eq!(union.upper, ra.upper.union(&rb.upper).unwrap());
                assert_eq!(
                    intersection.lower,
                    ra.lower.intersection(&rb.lower).unwrap()
                );
            }
        }
    }
}

#[test]
fn pawlak_roughness_never_decreases_under_coarsening() {
    let all = partitions_of(4);
    let u = all[0].universe().clone();
    let subsets = u.all_subsets().unwrap();
    for p in &all {
        for s in &all {
            if !p.refines(s).unwrap() {
                continue;
            }
            for a in &subsets {
                let fine = pawlak_roughness(p, a).unwrap();
                let coarse = pawlak_roughness(s, a).unwrap();
                assert!(fine <= coarse + DEFAULT_EPSILON);
            }
        }
    }
}

#[test]
fn entropy_strictly_decreases_under_strict_coarsening() {
    for n in 2..=5usize {
        let all = partitions_of(n);
        for p in &all {
            for s in &all {
                if p != s && p.strictly_refines(s).unwrap() {
                    assert!(
                        entropy(p) - entropy(s) > DEFAULT_EPSILON,
                        "H({}) vs H({})",
                        p.render(),
                        s.render()
                    );
                }
            }
        }
    }
}

#[test]
fn all_registered_roughness_measures_pass_both_axiom_systems_at_small_sizes() {
    // n = 2 included deliberately: even though graph connectivity is
    // degenerate as a partition measure there (constant across both
    // partitions), its composition still satisfies every roughness axiom,
    // because the lone strict pair keeps a strict witness through β_P.
    for n in 2..=4usize {
        let u = Universe::numbered(n).unwrap();
        for m in named_measures() {
            let strong = verify_roughness_axioms(m.as_ref(), &u, DEFAULT_EPSILON).unwrap();
            assert!(strong.pass(), "{} strong axioms at n={n}", m.name());
            let weak = verify_weak_roughness_axioms(m.as_ref(), &u, DEFAULT_EPSILON).unwrap();
            assert!(weak.pass(), "{} weak axioms at n={n}", m.name());
        }
    }
}

#[test]
fn measure_values_ignore_element_names_under_every_permutation() {
    let all = partitions_of(4);
    let u = all[0].universe().clone();
    let subsets = u.all_subsets().unwrap();
    let measures = named_measures();
    for perm in permutations(4) {
        let f = ElementMap::from_fn(&u, &u, |i| perm[i]).unwrap();
        for p in &all {
            let image = f.image_partition(p).unwrap();
            for a in &subsets {
                let fa = f.image_subset(a).unwrap();
                for m in &measures {
                    let original = m.eval(p, a).unwrap();
                    let renamed = m.eval(&image, &fa).unwrap();
                    assert!(
                        (original - renamed).abs() <= DEFAULT_EPSILON,
                        "{} not invariant under {perm:?} at ({}, {})",
                        m.name(),
                        p.render(),
                        a.render()
                    );
                }
            }
        }
    }
}

#[test]
fn normalizers_equal_the_one_block_value_bit_for_bit() {
    for n in 2..=10usize {
        let u = Universe::numbered(n).unwrap();
        let trivial = Partition::trivial(&u);
        for h in catalog() {
            assert_eq!(
                h.max_on(&u).unwrap(),
                h.eval(&trivial).unwrap(),
                "{} at n={n}",
                h.name()
            );
        }
    }
}

#[test]
fn signature_test_matches_exhaustive_bijection_search() {
    let all = partitions_of(4);
    let u = all[0].universe().clone();
    let maps: Vec<ElementMap> = permutations(4)
        .into_iter()
        .map(|perm| ElementMap::from_fn(&u, &u, |i| perm[i]).unwrap())
        .collect();
    for p in &all {
        for s in &all {
            let claimed = exists_isomorphism(p, s);
            let found = maps.iter().any(|f| f.is_isomorphism(p, s).unwrap());
            assert_eq!(
                claimed,
                found,
                "{} vs {}: signature test says {claimed}, search says {found}",
                p.render(),
                s.render()
            );
        }
    }
}

#[test]
fn matched_bijections_into_coarsenings_are_strict_monomorphisms() {
    let all = partitions_of(4);
    for p in &all {
        for r in &all {
            if !exists_isomorphism(p, r) {
                continue;
            }
            let f = matching_bijection(p, r).unwrap();
            assert!(f.is_isomorphism(p, r).unwrap());
            assert_eq!(&f.image_partition(p).unwrap(), r);
            for sigma in &all {
                if r != sigma && r.strictly_refines(sigma).unwrap() {
                    assert!(
                        f.is_strict_monomorphism(p, sigma).unwrap(),
                        "{} matched onto {} inside {}",
                        p.render(),
                        r.render(),
                        sigma.render()
                    );
                    assert!(f
                        .image_partition(p)
                        .unwrap()
                        .strictly_refines(sigma)
                        .unwrap());
                }
            }
        }
    }
}

#[test]
fn strong_measures_separate_what_classical_roughness_conflates() {
    let pi = Partition::parse("a1|a2,a3|a4,a5").unwrap();
    let sigma = Partition::parse_over(pi.universe(), "a1,a2,a3|a4,a5").unwrap();
    let a = Subset::parse(pi.universe(), "a1,a2,a3,a4").unwrap();

    // Classical roughness ties the two partitions at exactly 2/5 …
    assert_eq!(roughness_ratio(&pi, &a).unwrap(), (2, 5));
    assert_eq!(roughness_ratio(&sigma, &a).unwrap(), (2, 5));

    // … while every strong composition ranks the coarser partition as
    // strictly rougher.
    for name in ["beta_X", "beta_L", "beta_E", "beta_Eprime", "beta_CG"] {
        let m = strong_instance_by_name(name).unwrap();
        let on_pi = m.eval(&pi, &a).unwrap();
        let on_sigma = m.eval(&sigma, &a).unwrap();
        assert!(
            on_pi < on_sigma - DEFAULT_EPSILON,
            "{name}: {on_pi} vs {on_sigma}"
        );
    }
}

proptest! {
    #[test]
    fn partition_literals_round_trip(
        (n, labels) in (1..=8usize).prop_flat_map(|n| (Just(n), vec(0..n, n)))
    ) {
        let u = Universe::numbered(n).unwrap();
        let p = Partition::from_labeling(&u, |i| labels[i]);
        let literal = p.render();
        let reparsed = Partition::parse_over(&u, &literal).unwrap();
        prop_assert_eq!(&reparsed, &p);
        // The canonical literal lists elements in first-appearance order,
        // so parsing it standalone rebuilds the same universe.
        let standalone = Partition::parse(&literal).unwrap();
        prop_assert_eq!(standalone.render(), literal);
    }

    #[test]
    fn subset_literals_round_trip(n in 1..=10usize, mask in 0u32..1024) {
        let u = Universe::numbered(n).unwrap();
        let mask = mask & ((1u32 << n) - 1);
        let s = Subset::from_indices(&u, (0..n).filter(|i| mask >> i & 1 == 1));
        let reparsed = Subset::parse(&u, &s.render()).unwrap();
        prop_assert_eq!(reparsed, s);
    }

    #[test]
    fn joint_attributes_never_coarsen(
        rows in vec((0u8..3, 0u8..3), 1..=8)
    ) {
        let mut csv = String::from("id,c1,c2\n");
        for (i, (x, y)) in rows.iter().enumerate() {
            csv.push_str(&format!("r{},v{},v{}\n", i + 1, x, y));
        }
        let table = InformationTable::from_reader(csv.as_bytes()).unwrap();
        let by_first = table.indiscernibility_partition(&["c1"]).unwrap();
        let by_second = table.indiscernibility_partition(&["c2"]).unwrap();
        let joint = table.indiscernibility_partition(&["c1", "c2"]).unwrap();
        prop_assert!(joint.refines(&by_first).unwrap());
        prop_assert!(joint.refines(&by_second).unwrap());
    }

    #[test]
    fn approximations_bracket_the_subset(
        (n, labels, mask) in (1..=10usize)
            .prop_flat_map(|n| (Just(n), vec(0..n, n), 0u32..1024))
    ) {
        let u = Universe::numbered(n).unwrap();
        let p = Partition::from_labeling(&u, |i| labels[i]);
        let mask = mask & ((1u32 << n) - 1);
        let a = Subset::from_indices(&u, (0..n).filter(|i| mask >> i & 1 == 1));

        let r = approximate(&p, &a).unwrap();
        prop_assert!(r.lower.is_subset_of(&a).unwrap());
        prop_assert!(a.is_subset_of(&r.upper).unwrap());
        prop_assert_eq!(r.upper.difference(&r.lower).unwrap(), r.boundary.clone());
        prop_assert_eq!(r.exact, r.boundary.is_empty());

        let (alpha_num, alpha_den) = accuracy_ratio(&p, &a).unwrap();
        let (beta_num, beta_den) = roughness_ratio(&p, &a).unwrap();
        prop_assert_eq!(
            pawlak_accuracy(&p, &a).unwrap(),
            alpha_num as f64 / alpha_den as f64
        );
        prop_assert_eq!(
            pawlak_roughness(&p, &a).unwrap(),
            beta_num as f64 / beta_den as f64
        );
    }

    #[test]
    fn entropy_and_co_entropy_complement_each_other(
        (n, labels) in (1..=10usize).prop_flat_map(|n| (Just(n), vec(0..n, n)))
    ) {
        let u = Universe::numbered(n).unwrap();
        let p = Partition::from_labeling(&u, |i| labels[i]);
        let sum = entropy(&p) + co_entropy(&p);
        prop_assert!((sum - (n as f64).log2()).abs() <= DEFAULT_EPSILON);
    }
}
