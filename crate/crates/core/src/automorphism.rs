//! Automorphism groups by backtracking over generator images.
//!
//! A generating sequence `g1, g2, ...` of the source group is fixed; each
//! generator is assigned a candidate image with the same element order and
//! conjugacy class size, and the partial map is propagated over the subgroup
//! generated so far by `phi(x * gj) = phi(x) * phi(gj)`. Any clash ends the
//! branch. The same search finds isomorphisms between two groups.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::group::{Group, QuotientMap, Subgroup};

/// Default bound on the number of candidate images explored.
pub const DEFAULT_AUTOMORPHISM_CAP: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism {
    images: Vec<u32>,
}

impl Automorphism {
    pub fn identity(order: usize) -> Self {
        Automorphism {
            images: (0..order as u32).collect(),
        }
    }

    /// Wraps an image array after checking it is an automorphism of `group`.
    pub fn new(group: &Group, images: Vec<usize>) -> Result<Self> {
        let a = Automorphism {
            images: images.into_iter().map(|x| x as u32).collect(),
        };
        if !a.is_automorphism_of(group) {
            return Err(Error::invalid("image array is not an automorphism"));
        }
        Ok(a)
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    /// `x -> other(self(x))`
    pub fn then(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut inv = vec![0u32; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y as usize] = x as u32;
        }
        Automorphism { images: inv }
    }

    pub fn is_automorphism_of(&self, group: &Group) -> bool {
        let n = group.order();
        if self.images.len() != n || self.images[0] != 0 {
            return false;
        }
        let mut seen = vec![false; n];
        for &y in &self.images {
            let y = y as usize;
            if y >= n || seen[y] {
                return false;
            }
            seen[y] = true;
        }
        (0..n).all(|a| {
            (0..n).all(|b| self.apply(group.mul(a, b)) == group.mul(self.apply(a), self.apply(b)))
        })
    }

    pub fn stabilizes(&self, subgroup: &Subgroup) -> bool {
        subgroup
            .members()
            .iter()
            .all(|&x| subgroup.contains(self.apply(x)))
    }
}

/// The full automorphism group as an explicit list, sorted by image array.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismGroup {
    group_order: usize,
    elements: Vec<Automorphism>,
}

impl AutomorphismGroup {
    pub fn elements(&self) -> &[Automorphism] {
        &self.elements
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }
}

pub fn automorphism_group(group: &Group) -> Result<AutomorphismGroup> {
    automorphism_group_with_cap(group, DEFAULT_AUTOMORPHISM_CAP)
}

pub fn automorphism_group_with_cap(group: &Group, cap: u64) -> Result<AutomorphismGroup> {
    let mut search = HomSearch::new(group, group, cap);
    let mut elements = Vec::new();
    search.run(&mut |images| {
        elements.push(Automorphism {
            images: images.iter().map(|&x| x as u32).collect(),
        });
        true
    })?;
    elements.sort();
    Ok(AutomorphismGroup {
        group_order: group.order(),
        elements,
    })
}

/// An isomorphism `a -> b` as an image array, if one exists.
pub fn find_isomorphism(a: &Group, b: &Group) -> Result<Option<Vec<usize>>> {
    if a.order() != b.order() {
        return Ok(None);
    }
    let mut search = HomSearch::new(a, b, DEFAULT_AUTOMORPHISM_CAP);
    let mut found = None;
    search.run(&mut |images| {
        found = Some(images.to_vec());
        false
    })?;
    Ok(found)
}

pub fn are_isomorphic(a: &Group, b: &Group) -> Result<bool> {
    Ok(find_isomorphism(a, b)?.is_some())
}

/// Automorphisms mapping `kernel` onto itself.
pub fn stabilizing_automorphisms(aut: &AutomorphismGroup, kernel: &Subgroup) -> Vec<Automorphism> {
    aut.elements
        .iter()
        .filter(|phi| phi.stabilizes(kernel))
        .cloned()
        .collect()
}

/// The automorphism of `G/N` induced by `phi`, which must stabilize `N`.
pub fn induce_on_quotient(phi: &Automorphism, q: &QuotientMap) -> Result<Automorphism> {
    if phi.images.len() != q.source_order() || !phi.stabilizes(q.kernel()) {
        return Err(Error::invalid("automorphism does not stabilize the kernel"));
    }
    let m = q.quotient().order();
    let images: Vec<u32> = (0..m)
        .map(|c| q.coset_of(phi.apply(q.coset(c)[0])) as u32)
        .collect();
    let psi = Automorphism { images };
    debug_assert!(
        (0..q.source_order()).all(|a| psi.apply(q.coset_of(a)) == q.coset_of(phi.apply(a)))
    );
    Ok(psi)
}

/// Distinct automorphisms of `G/N` induced by automorphisms of `G`, sorted.
pub fn induced_automorphisms(aut: &AutomorphismGroup, q: &QuotientMap) -> Vec<Automorphism> {
    let mut set = BTreeSet::new();
    for phi in aut.elements.iter().filter(|phi| phi.stabilizes(q.kernel())) {
        set.insert(induce_on_quotient(phi, q).expect("stabilizing automorphism"));
    }
    set.into_iter().collect()
}

/// Element invariants preserved by isomorphisms: (element order, class size).
fn element_invariants(g: &Group) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut out = Vec::with_capacity(n);
    let mut mark = vec![usize::MAX; n];
    for x in 0..n {
        let mut size = 0;
        for h in 0..n {
            let c = g.conjugate(h, x);
            if mark[c] != x {
                mark[c] = x;
                size += 1;
            }
        }
        out.push((g.element_order(x), size));
    }
    out
}

/// Greedy generating sequence: largest element order first, skipping
/// elements already in the span of those picked.
pub(crate) fn generating_sequence(g: &Group) -> Vec<usize> {
    let orders = g.element_orders();
    let mut by_order: Vec<usize> = (1..g.order()).collect();
    by_order.sort_by(|&a, &b| orders[b].cmp(&orders[a]).then(a.cmp(&b)));
    let mut member = vec![false; g.order()];
    member[0] = true;
    let mut gens = Vec::new();
    for x in by_order {
        if !member[x] {
            gens.push(x);
            g.close_into(&mut member, &[x]);
        }
    }
    gens
}

struct HomSearch<'a> {
    src: &'a Group,
    dst: &'a Group,
    gens: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    gen_images: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
    nodes: u64,
    cap: u64,
}

const UNMAPPED: usize = usize::MAX;

impl<'a> HomSearch<'a> {
    fn new(src: &'a Group, dst: &'a Group, cap: u64) -> Self {
        let gens = generating_sequence(src);
        let src_inv = element_invariants(src);
        let dst_inv = if std::ptr::eq(src, dst) {
            src_inv.clone()
        } else {
            element_invariants(dst)
        };
        let candidates = gens
            .iter()
            .map(|&g| {
                (0..dst.order())
                    .filter(|&y| dst_inv[y] == src_inv[g])
                    .collect()
            })
            .collect();
        let mut map = vec![UNMAPPED; src.order()];
        let mut used = vec![false; dst.order()];
        map[0] = 0;
        used[0] = true;
        HomSearch {
            src,
            dst,
            gen_images: Vec::with_capacity(gens.len()),
            gens,
            candidates,
            map,
            used,
            nodes: 0,
            cap,
        }
    }

    /// Calls `emit` with each full isomorphism until it returns `false`.
    fn run(&mut self, emit: &mut dyn FnMut(&[usize]) -> bool) -> Result<()> {
        if self.src.order() != self.dst.order() {
            return Ok(());
        }
        self.descend(0, emit).map(|_| ())
    }

    fn descend(&mut self, depth: usize, emit: &mut dyn FnMut(&[usize]) -> bool) -> Result<bool> {
        if depth == self.gens.len() {
            return Ok(emit(&self.map));
        }
        for ci in 0..self.candidates[depth].len() {
            let y = self.candidates[depth][ci];
            self.nodes += 1;
            if self.nodes > self.cap {
                return Err(Error::Capacity {
                    what: format!(
                        "automorphism search on {}",
                        self.src.label().unwrap_or("group")
                    ),
                    detail: format!("more than {} candidate images explored", self.cap),
                });
            }
            if self.used[y] {
                continue;
            }
            self.gen_images.push(y);
            let mut added = Vec::new();
            if self.propagate(&mut added) && !self.descend(depth + 1, emit)? {
                return Ok(false);
            }
            for x in added {
                self.used[self.map[x]] = false;
                self.map[x] = UNMAPPED;
            }
            self.gen_images.pop();
        }
        Ok(true)
    }

    /// Extends the map over the span of the assigned generators; records new
    /// entries in `added` so the caller can undo them.
    fn propagate(&mut self, added: &mut Vec<usize>) -> bool {
        let mut queue: Vec<usize> = (0..self.src.order())
            .filter(|&x| self.map[x] != UNMAPPED)
            .collect();
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for (j, &g) in self.gens[..self.gen_images.len()].iter().enumerate() {
                let z = self.src.mul(x, g);
                let w = self.dst.mul(self.map[x], self.gen_images[j]);
                if self.map[z] == UNMAPPED {
                    if self.used[w] {
                        return false;
                    }
                    self.map[z] = w;
                    self.used[w] = true;
                    added.push(z);
                    queue.push(z);
                } else if self.map[z] != w {
                    return false;
                }
            }
        }
        true
    }
}
