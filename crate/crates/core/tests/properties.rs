use std::ops::ControlFlow;
use std::sync::OnceLock;

use proptest::prelude::*;

use difsets_core::automorphism::{automorphism_group, AutomorphismGroup};
use difsets_core::catalog::{catalog_group, catalog_ids, CatalogId};
use difsets_core::difference::{
    complement_set, difference_profile, is_difference_set, is_difference_sum,
    is_equivalent_difference_set, DifferenceSet, GroupRingVector,
};
use difsets_core::enumerate::{
    difference_sets, smallest_image, Enumerator, Progress, SearchOptions,
};
use difsets_core::group::{normal_subgroups, Group, QuotientMap};
use difsets_core::params::{brc_admissible, possible_sizes};

struct Case {
    group: Group,
    aut: AutomorphismGroup,
    sets: Vec<DifferenceSet>,
}

/// Catalog groups of order at most 16 that contain difference sets.
fn cases() -> &'static [Case] {
    static CASES: OnceLock<Vec<Case>> = OnceLock::new();
    CASES.get_or_init(|| {
        (2..=16)
            .flat_map(|n| catalog_ids(n).unwrap())
            .filter_map(|cid: CatalogId| {
                let group = catalog_group(cid).unwrap();
                let sets = difference_sets(&group).unwrap();
                (!sets.is_empty()).then(|| Case {
                    aut: automorphism_group(&group).unwrap(),
                    group,
                    sets,
                })
            })
            .collect()
    })
}

fn pick(i: usize, j: usize) -> (&'static Case, &'static DifferenceSet) {
    let case = &cases()[i % cases().len()];
    (case, &case.sets[j % case.sets.len()])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn translate_and_automorphism_preserve_parameters(i in 0usize..1000, j in 0usize..100, g in 0usize..1000, a in 0usize..100_000) {
        let (case, set) = pick(i, j);
        let params = is_difference_set(&case.group, set).unwrap();
        let phi = &case.aut.elements()[a % case.aut.size()];
        let image = set.apply_automorphism(phi).translate(&case.group, g % case.group.order());
        prop_assert_eq!(is_difference_set(&case.group, &image), Some(params));
        prop_assert!(is_equivalent_difference_set(&case.group, &case.aut, &image, set));
    }

    #[test]
    fn complements_have_complement_parameters(i in 0usize..1000, j in 0usize..100) {
        let (case, set) = pick(i, j);
        let params = is_difference_set(&case.group, set).unwrap();
        let comp = complement_set(&case.group, set).unwrap();
        let p = is_difference_set(&case.group, &comp).unwrap();
        prop_assert_eq!((p.v, p.k, p.lambda), (params.v, params.v - params.k, params.lambda + params.v - 2 * params.k));
        prop_assert_eq!(p, params.complement());
    }

    #[test]
    fn smallest_image_is_orbit_invariant(i in 0usize..1000, j in 0usize..100, g in 0usize..1000, a in 0usize..100_000) {
        let (case, set) = pick(i, j);
        let phi = &case.aut.elements()[a % case.aut.size()];
        let image = set.apply_automorphism(phi).translate(&case.group, g % case.group.order());
        let canon = smallest_image(&case.group, &case.aut, &image);
        prop_assert_eq!(&canon, set);
        prop_assert_eq!(smallest_image(&case.group, &case.aut, &canon), canon.clone());
    }

    #[test]
    fn profile_total_is_square(coeffs in prop::collection::vec(-3i64..4, 1..=16), n in 0usize..1000) {
        let ids = catalog_ids(coeffs.len()).unwrap();
        let group = catalog_group(ids[n % ids.len()]).unwrap();
        let total: i64 = coeffs.iter().sum();
        let profile = difference_profile(&group, &coeffs);
        prop_assert_eq!(profile.iter().sum::<i64>(), total * total);
        let v = GroupRingVector::new(coeffs.clone());
        let dense = v.profile(&group);
        prop_assert_eq!(dense.coeffs(), &profile[..]);
    }

    #[test]
    fn random_subsets_agree_with_direct_count(mask in 0u32..(1 << 15), n in 0usize..1000) {
        let ids = catalog_ids(15).unwrap();
        let group = catalog_group(ids[n % ids.len()]).unwrap();
        let members: Vec<usize> = (0..15).filter(|&x| mask >> x & 1 == 1).collect();
        prop_assume!(!members.is_empty());
        let set = DifferenceSet::from_elements(members.clone());
        let mut counts = [0usize; 15];
        for &a in &members {
            for &b in &members {
                counts[group.mul(a, group.inv(b))] += 1;
            }
        }
        let expected = counts[1..].iter().all(|&c| c == counts[1]);
        prop_assert_eq!(is_difference_set(&group, &set).is_some(), expected);
    }
}

#[test]
fn induced_sums_are_difference_sums() {
    for case in cases() {
        for n in normal_subgroups(&case.group) {
            let q = QuotientMap::new(&case.group, &n).unwrap();
            for set in &case.sets {
                let sum = q.pushforward(set.elements());
                assert!(
                    is_difference_sum(&q, &sum),
                    "{:?} {:?}",
                    case.group.label(),
                    set
                );
                let comp = complement_set(&case.group, set).unwrap();
                assert!(is_difference_sum(&q, &q.pushforward(comp.elements())));
            }
        }
    }
}

#[test]
fn kept_sums_meet_identity_target() {
    for case in cases() {
        let e =
            Enumerator::with_automorphisms(&case.group, case.aut.clone(), SearchOptions::default());
        let mut checked = 0;
        e.run_with(&mut |p| {
            if let Progress::Level {
                params,
                trace,
                sums,
            } = p
            {
                for s in sums {
                    let squares: usize = s.coeffs().iter().map(|&c| (c * c) as usize).sum();
                    assert_eq!(
                        squares,
                        params.k - params.lambda + params.lambda * trace.kernel_order
                    );
                    assert_eq!(s.k(), params.k);
                    checked += 1;
                }
            }
            ControlFlow::Continue(())
        })
        .unwrap();
        assert!(checked > 0 || e.chain().terms().len() == 2);
    }
}

#[test]
fn brc_never_excludes_found_parameters() {
    for case in cases() {
        let params = is_difference_set(&case.group, &case.sets[0]).unwrap();
        assert!(brc_admissible(&params));
        assert!(possible_sizes(case.group.order(), true).contains(&params));
    }
}
