//! Isomorphism classes of groups of a given order, found as cyclic
//! extensions of smaller catalog groups.
//!
//! Every solvable group of order `n` has a normal subgroup of prime index `p`,
//! so it is an extension of a group `H` of order `n/p` by `C_p`, determined by
//! an automorphism `alpha` of `H` and an element `top` with `alpha(top) = top`
//! and `alpha^p` equal to conjugation by `top`. Groups of order below 60 are
//! all solvable.

use std::collections::HashMap;

use super::build::cyclic_extension;
use crate::automorphism::{are_isomorphic, automorphism_group, Automorphism};
use crate::error::Result;
use crate::group::{cyclic_group, normal_subgroups, Group};

/// Isomorphism invariants used to bucket candidates before exact testing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    order_counts: Vec<(usize, usize)>,
    center: usize,
    derived: usize,
    normal_subgroups: usize,
    square_classes: Vec<(usize, usize, usize)>,
}

pub fn fingerprint(g: &Group) -> Fingerprint {
    let orders = g.element_orders();
    let mut counts: HashMap<usize, usize> = HashMap::new();
    for &o in &orders {
        *counts.entry(o).or_default() += 1;
    }
    let mut order_counts: Vec<(usize, usize)> = counts.into_iter().collect();
    order_counts.sort_unstable();
    // (order of x, order of x^2, number of square roots of x)
    let mut roots = vec![0usize; g.order()];
    for x in 0..g.order() {
        roots[g.mul(x, x)] += 1;
    }
    let mut sq: HashMap<(usize, usize, usize), usize> = HashMap::new();
    for x in 0..g.order() {
        *sq.entry((orders[x], orders[g.mul(x, x)], roots[x]))
            .or_default() += 1;
    }
    let mut square_classes: Vec<(usize, usize, usize)> = sq.into_keys().collect();
    square_classes.sort_unstable();
    Fingerprint {
        order_counts,
        center: g.center().len(),
        derived: g.derived_subgroup().len(),
        normal_subgroups: normal_subgroups(g).len(),
        square_classes,
    }
}

fn primes_dividing(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while n > 1 {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    out
}

/// One representative per isomorphism class of groups of order `n`, built
/// from the given lists of groups of each order `n / p`. Classes are kept in
/// discovery order, except that the cyclic group comes first and uses the
/// standard `1, x, x^2, ...` element order.
pub fn groups_of_order(n: usize, smaller: &dyn Fn(usize) -> Vec<Group>) -> Result<Vec<Group>> {
    if n == 1 {
        return Ok(vec![cyclic_group(1)]);
    }
    let mut reps: Vec<Group> = Vec::new();
    let mut buckets: HashMap<Fingerprint, Vec<usize>> = HashMap::new();
    for p in primes_dividing(n) {
        for base in smaller(n / p) {
            let aut = automorphism_group(&base)?;
            let h = base.order();
            for alpha in aut.elements() {
                let mut power: Vec<usize> = (0..h).collect();
                for _ in 0..p {
                    power = power.iter().map(|&x| alpha.apply(x)).collect();
                }
                for top in 0..h {
                    if alpha.apply(top) != top || (0..h).any(|x| power[x] != base.conjugate(top, x))
                    {
                        continue;
                    }
                    let cand = cyclic_extension(&base, p, alpha, top);
                    let fp = fingerprint(&cand);
                    let bucket = buckets.entry(fp).or_default();
                    let mut known = false;
                    for &r in bucket.iter() {
                        if are_isomorphic(&reps[r], &cand)? {
                            known = true;
                            break;
                        }
                    }
                    if !known {
                        bucket.push(reps.len());
                        reps.push(cand);
                    }
                }
            }
        }
    }
    if let Some(pos) = reps.iter().position(|g| g.element_orders().contains(&n)) {
        reps.remove(pos);
        reps.insert(0, cyclic_group(n));
    }
    Ok(reps)
}

/// Checks the extension data before building, for callers outside this module.
pub fn valid_extension_data(base: &Group, p: usize, alpha: &Automorphism, top: usize) -> bool {
    let h = base.order();
    let mut power: Vec<usize> = (0..h).collect();
    for _ in 0..p {
        power = power.iter().map(|&x| alpha.apply(x)).collect();
    }
    alpha.apply(top) == top && (0..h).all(|x| power[x] == base.conjugate(top, x))
}
