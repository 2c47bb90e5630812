use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::automorphism::{induced_automorphisms, Automorphism, AutomorphismGroup};
use crate::difference::{DifferenceSet, DifferenceSum};
use crate::group::{Group, QuotientMap};

/// Representative of the orbit of `sum` under translations of `quotient` and
/// the automorphisms `induced`: largest identity coefficient first, then the
/// lexicographically smallest vector.
pub fn canonical_sum(
    quotient: &Group,
    induced: &[Automorphism],
    sum: &DifferenceSum,
) -> DifferenceSum {
    let top = *sum.coeffs().iter().max().expect("nonempty sum");
    let mut best: Option<DifferenceSum> = None;
    for psi in induced {
        let image = sum.apply_automorphism(psi);
        // translating by x^-1 moves the coefficient at x onto the identity
        for (x, &c) in image.coeffs().iter().enumerate() {
            if c != top {
                continue;
            }
            let cand = image.translate(quotient, quotient.inv(x));
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.expect("identity automorphism is always induced")
}

/// One canonical representative per equivalence class of sums over `q`.
pub fn equivalence_free_sums(
    q: &QuotientMap,
    aut: &AutomorphismGroup,
    sums: &[DifferenceSum],
) -> Vec<DifferenceSum> {
    dedupe_sums(q.quotient(), &induced_automorphisms(aut, q), sums)
}

pub(crate) fn dedupe_sums(
    quotient: &Group,
    induced: &[Automorphism],
    sums: &[DifferenceSum],
) -> Vec<DifferenceSum> {
    let reps: BTreeSet<DifferenceSum> = sums
        .par_iter()
        .map(|s| canonical_sum(quotient, induced, s))
        .collect();
    reps.into_iter().collect()
}

/// Lexicographically smallest sorted image of `set` under `x -> g * phi(x)`.
///
/// A smallest image always contains the identity (index 0), so for each
/// automorphism only the translates by inverses of image points are tried.
pub fn smallest_image(
    group: &Group,
    aut: &AutomorphismGroup,
    set: &DifferenceSet,
) -> DifferenceSet {
    if set.is_empty() {
        return set.clone();
    }
    let mut best: Option<Vec<usize>> = None;
    let mut buf = Vec::with_capacity(set.len());
    let mut image = Vec::with_capacity(set.len());
    for phi in aut.elements() {
        image.clear();
        image.extend(set.elements().iter().map(|&d| phi.apply(d)));
        for &x in &image {
            let g = group.inv(x);
            buf.clear();
            buf.extend(image.iter().map(|&d| group.mul(g, d)));
            buf.sort_unstable();
            if best.as_ref().is_none_or(|b| buf < *b) {
                best = Some(buf.clone());
            }
        }
    }
    DifferenceSet::from_elements(best.unwrap())
}

/// Maps each set to its smallest image and removes duplicates.
pub fn equivalence_free_sets(
    group: &Group,
    aut: &AutomorphismGroup,
    sets: &[DifferenceSet],
) -> Vec<DifferenceSet> {
    let reps: BTreeSet<DifferenceSet> = sets
        .par_iter()
        .map(|d| smallest_image(group, aut, d))
        .collect();
    reps.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automorphism::automorphism_group;
    use crate::group::{cyclic_group, refinement_chain};

    #[test]
    fn c15_sums_collapse() {
        let g = cyclic_group(15);
        let aut = automorphism_group(&g).unwrap();
        let q = QuotientMap::new(&g, &refinement_chain(&g).terms()[1]).unwrap();
        let sums: Vec<DifferenceSum> = (0..5)
            .map(|i| {
                let mut c = vec![1; 5];
                c[i] = 3;
                DifferenceSum::new(c)
            })
            .collect();
        let reps = equivalence_free_sums(&q, &aut, &sums);
        assert_eq!(reps, vec![DifferenceSum::new(vec![3, 1, 1, 1, 1])]);
        assert_eq!(equivalence_free_sums(&q, &aut, &sums[..1]), reps);
    }

    #[test]
    fn c7_smallest_images() {
        let g = cyclic_group(7);
        let aut = automorphism_group(&g).unwrap();
        let s = |idx: &[usize]| DifferenceSet::from_indices(7, idx).unwrap();
        assert_eq!(smallest_image(&g, &aut, &s(&[3, 4, 6])), s(&[1, 2, 4]));
        assert_eq!(smallest_image(&g, &aut, &s(&[2, 3, 5])), s(&[1, 2, 4]));
        assert_eq!(smallest_image(&g, &aut, &s(&[1, 2, 4])), s(&[1, 2, 4]));
        assert!(equivalence_free_sets(&g, &aut, &[]).is_empty());
    }
}
