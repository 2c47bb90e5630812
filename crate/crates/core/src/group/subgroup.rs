use std::collections::BTreeSet;

use super::Group;
use crate::error::{Error, Result};

/// A subgroup, stored as its sorted member indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    members: Vec<usize>,
}

impl Subgroup {
    /// Validates `members` as a subgroup of `group`.
    pub fn new(group: &Group, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if members.first() != Some(&0) || members.iter().any(|&x| x >= group.order()) {
            return Err(Error::invalid(
                "subgroup must contain the identity and valid indices",
            ));
        }
        let mut mask = vec![false; group.order()];
        for &x in &members {
            mask[x] = true;
        }
        for &a in &members {
            if !mask[group.inv(a)] || members.iter().any(|&b| !mask[group.mul(a, b)]) {
                return Err(Error::invalid(
                    "member list is not closed under the group law",
                ));
            }
        }
        Ok(Subgroup { members })
    }

    pub(crate) fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Subgroup { members }
    }

    pub fn trivial() -> Self {
        Subgroup { members: vec![0] }
    }

    pub fn whole(group: &Group) -> Self {
        Subgroup {
            members: (0..group.order()).collect(),
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn is_normal_in(&self, group: &Group) -> bool {
        (0..group.order()).all(|g| {
            self.members
                .iter()
                .all(|&x| self.contains(group.conjugate(g, x)))
        })
    }
}

/// A descending chain of normal subgroups from the whole group to `{1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalChain {
    terms: Vec<Subgroup>,
}

impl NormalChain {
    pub fn terms(&self) -> &[Subgroup] {
        &self.terms
    }

    pub fn orders(&self) -> Vec<usize> {
        self.terms.iter().map(Subgroup::order).collect()
    }
}

fn normal_closure(group: &Group, x: usize) -> Vec<usize> {
    let mut conj: Vec<usize> = (0..group.order()).map(|g| group.conjugate(g, x)).collect();
    conj.sort_unstable();
    conj.dedup();
    group.generated(&conj)
}

/// Product `AB` of two normal subgroups given as sorted member lists.
fn normal_join(group: &Group, a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut mask = vec![false; group.order()];
    for &x in a {
        for &y in b {
            mask[group.mul(x, y)] = true;
        }
    }
    (0..group.order()).filter(|&z| mask[z]).collect()
}

/// All normal subgroups, sorted by `(order, members)`.
///
/// Every normal subgroup is the join of the normal closures of its elements,
/// so closing the set of normal closures under joins finds them all.
pub fn normal_subgroups(group: &Group) -> Vec<Subgroup> {
    let mut closures: BTreeSet<Vec<usize>> = BTreeSet::new();
    for x in 0..group.order() {
        closures.insert(normal_closure(group, x));
    }
    let base: Vec<Vec<usize>> = closures.iter().cloned().collect();
    let mut found = closures;
    let mut frontier = base.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for n in &frontier {
            for c in &base {
                let j = normal_join(group, n, c);
                if !found.contains(&j) {
                    found.insert(j.clone());
                    next.push(j);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Subgroup> = found.into_iter().map(Subgroup::from_sorted).collect();
    out.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.members.cmp(&b.members))
    });
    out
}

/// Builds the chain used for refinement: the bottom nontrivial term is a
/// smallest nontrivial normal subgroup, and each further step upward takes the
/// smallest normal subgroup strictly containing the previous term. Ties go to
/// the lexicographically smallest member list.
pub fn refinement_chain(group: &Group) -> NormalChain {
    let normals = normal_subgroups(group);
    let mut up = vec![Subgroup::trivial()];
    while up.last().unwrap().order() < group.order() {
        let current = up.last().unwrap();
        let next = normals
            .iter()
            .find(|n| n.order() > current.order() && current.is_subset_of(n))
            .expect("the whole group always contains the current term")
            .clone();
        up.push(next);
    }
    up.reverse();
    NormalChain { terms: up }
}
