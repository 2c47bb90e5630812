//! Exhaustive subset search, kept deliberately naive as a cross-check for the
//! refinement pipeline.

use std::collections::BTreeSet;

use itertools::Itertools;
use rayon::prelude::*;

use super::SizeResult;
use crate::automorphism::{automorphism_group, AutomorphismGroup};
use crate::difference::{is_difference_set, DifferenceSet};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::params::possible_sizes;

/// Largest number of `k`-subsets the oracle will test.
pub const ORACLE_SUBSET_CAP: u128 = 10_000_000;

pub fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k.min(n));
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Every difference set of size `k` in `group`, without any reduction.
pub fn all_difference_sets_of_size(group: &Group, k: usize) -> Result<Vec<DifferenceSet>> {
    let v = group.order();
    if k > v {
        return Ok(Vec::new());
    }
    let count = binomial(v, k);
    if count > ORACLE_SUBSET_CAP {
        return Err(Error::Capacity {
            what: format!("brute-force search of {k}-subsets"),
            detail: format!("{count} subsets exceeds the limit {ORACLE_SUBSET_CAP}"),
        });
    }
    let mut found: Vec<DifferenceSet> = (0..v)
        .combinations(k)
        .par_bridge()
        .map(DifferenceSet::from_elements)
        .filter(|d| is_difference_set(group, d).is_some())
        .collect();
    found.sort_unstable();
    Ok(found)
}

/// Full orbit of `set` under every translation and automorphism.
pub fn orbit(
    group: &Group,
    aut: &AutomorphismGroup,
    set: &DifferenceSet,
) -> BTreeSet<DifferenceSet> {
    let mut out = BTreeSet::new();
    for phi in aut.elements() {
        let image = set.apply_automorphism(phi);
        for g in 0..group.order() {
            out.insert(image.translate(group, g));
        }
    }
    out
}

/// Orbit minima of the difference sets found by exhaustive search, for every
/// size allowed by the counting relation alone.
pub fn brute_force_difference_sets(group: &Group) -> Result<Vec<SizeResult>> {
    let aut = automorphism_group(group)?;
    brute_force_with(group, &aut)
}

pub fn brute_force_with(group: &Group, aut: &AutomorphismGroup) -> Result<Vec<SizeResult>> {
    let mut out = Vec::new();
    for params in possible_sizes(group.order(), false) {
        let mut remaining: BTreeSet<DifferenceSet> = all_difference_sets_of_size(group, params.k)?
            .into_iter()
            .collect();
        let mut reps = Vec::new();
        while let Some(first) = remaining.pop_first() {
            let orb = orbit(group, aut, &first);
            for d in &orb {
                remaining.remove(d);
            }
            reps.push(orb.into_iter().next().unwrap());
        }
        reps.sort();
        out.push(SizeResult { params, sets: reps });
    }
    Ok(out)
}
