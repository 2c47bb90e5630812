use difsets_core::automorphism::are_isomorphic;
use difsets_core::catalog::{
    catalog_entry, catalog_group, catalog_ids, catalog_order, fingerprint, groups_of_order,
    CatalogId, Numbering,
};
use difsets_core::group::{cyclic_group, Group};

const GROUP_COUNTS: [usize; 36] = [
    1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15, 2, 2, 5, 4, 1, 4, 1,
    51, 1, 2, 1, 14,
];

fn order_stats(g: &Group) -> Vec<usize> {
    let mut counts = vec![0; g.order() + 1];
    for o in g.element_orders() {
        counts[o] += 1;
    }
    counts
}

fn pairwise_distinct(groups: &[Group]) {
    for (i, a) in groups.iter().enumerate() {
        for b in &groups[i + 1..] {
            if fingerprint(a) == fingerprint(b) {
                assert!(
                    !are_isomorphic(a, b).unwrap(),
                    "{:?} and {:?}",
                    a.label(),
                    b.label()
                );
            }
        }
    }
}

#[test]
fn counts_up_to_31() {
    for n in 1..=31 {
        let entries = catalog_order(n).unwrap();
        assert_eq!(entries.len(), GROUP_COUNTS[n - 1], "order {n}");
        let groups: Vec<Group> = entries.iter().map(|e| e.group.clone()).collect();
        for g in &groups {
            assert_eq!(g.order(), n);
            Group::from_table(n, g.table()).unwrap();
        }
        pairwise_distinct(&groups);
        assert!(entries.iter().all(|e| e.numbering == Numbering::Standard));
    }
}

#[test]
fn counts_32_to_36() {
    for n in 32..=36 {
        let entries = catalog_order(n).unwrap();
        assert_eq!(entries.len(), GROUP_COUNTS[n - 1], "order {n}");
        let groups: Vec<Group> = entries.iter().map(|e| e.group.clone()).collect();
        for g in &groups {
            Group::from_table(n, g.table()).unwrap();
        }
        pairwise_distinct(&groups);
        if n == 32 || n == 36 {
            assert_eq!(groups[0].table(), cyclic_group(n).table());
        }
    }
}

#[test]
fn cyclic_first_up_to_100() {
    for n in 1..=100 {
        let ids = catalog_ids(n).unwrap();
        assert!(!ids.is_empty());
        if n >= 37 {
            let g = catalog_group(CatalogId::new(n, 1)).unwrap();
            assert_eq!(g.table(), cyclic_group(n).table());
        }
    }
    for n in [1, 2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
        assert_eq!(
            catalog_group(CatalogId::new(n, 1)).unwrap().table(),
            cyclic_group(n).table()
        );
    }
}

#[test]
fn standard_ids_by_structure() {
    let get = |n, i| catalog_group(CatalogId::new(n, i)).unwrap();
    assert_eq!(get(16, 5).abelian_invariants(), Some(vec![8, 2]));
    assert!(!get(6, 1).is_abelian());
    assert_eq!(get(6, 2).abelian_invariants(), Some(vec![6]));
    assert_eq!(get(8, 2).abelian_invariants(), Some(vec![4, 2]));
    assert_eq!(get(16, 2).abelian_invariants(), Some(vec![4, 4]));
    assert_eq!(get(16, 10).abelian_invariants(), Some(vec![4, 2, 2]));
    assert_eq!(get(16, 14).abelian_invariants(), Some(vec![2, 2, 2, 2]));
    assert_eq!(get(24, 15).abelian_invariants(), Some(vec![6, 2, 2]));
    assert_eq!(get(27, 5).abelian_invariants(), Some(vec![3, 3, 3]));
    // D8 has five involutions, Q8 one
    assert_eq!(order_stats(&get(8, 3))[2], 5);
    assert_eq!(order_stats(&get(8, 4))[2], 1);
    // 16,6 has an element of order 8 and center of order 4
    assert!(order_stats(&get(16, 6))[8] > 0);
    assert_eq!(get(16, 6).center().len(), 4);
    // QD16: 5 involutions; D16: 9; Q16: 1
    assert_eq!(order_stats(&get(16, 7))[2], 9);
    assert_eq!(order_stats(&get(16, 8))[2], 5);
    assert_eq!(order_stats(&get(16, 9))[2], 1);
    // 16,13 has center of order 4 and exponent 4
    assert_eq!(get(16, 13).center().len(), 4);
    assert_eq!(order_stats(&get(16, 13))[8], 0);
    // 16,3 and 16,4: exponent 4, centers C2 x C2
    assert_eq!(get(16, 3).center().len(), 4);
    assert_eq!(order_stats(&get(16, 3))[2], 7);
    assert_eq!(order_stats(&get(16, 4))[2], 3);
    // A4 has no subgroup of order 6, SL(2,3) a unique involution, S4 is centerless
    assert_eq!(order_stats(&get(12, 3))[3], 8);
    assert_eq!(order_stats(&get(24, 3))[2], 1);
    assert_eq!(get(24, 12).center().len(), 1);
    // Heisenberg group has exponent 3, C9 : C3 does not
    assert_eq!(order_stats(&get(27, 3))[9], 0);
    assert!(order_stats(&get(27, 4))[9] > 0);
    // Frobenius group of order 20 is centerless, the dicyclic one is not
    assert_eq!(get(20, 3).center().len(), 1);
    assert_eq!(get(20, 1).center().len(), 2);
}

#[test]
fn extra_entries() {
    let g = catalog_group(CatalogId::new(64, 2)).unwrap();
    assert_eq!(g.abelian_invariants(), Some(vec![8, 8]));
    assert_eq!(
        catalog_entry(CatalogId::new(64, 1)).unwrap().numbering,
        Numbering::Standard
    );
    assert_eq!(
        catalog_entry(CatalogId::new(38, 1)).unwrap().numbering,
        Numbering::Local
    );
    assert_eq!(
        catalog_entry(CatalogId::new(36, 1)).unwrap().numbering,
        Numbering::Local
    );
}

#[test]
fn extension_rebuild_is_identical() {
    let smaller = |m: usize| {
        catalog_order(m)
            .unwrap()
            .iter()
            .map(|e| e.group.clone())
            .collect()
    };
    let fresh = groups_of_order(36, &smaller).unwrap();
    let cached = catalog_order(36).unwrap();
    assert_eq!(fresh.len(), cached.len());
    for (a, b) in fresh.iter().zip(cached.iter()) {
        assert_eq!(a.table(), b.group.table());
    }
}
