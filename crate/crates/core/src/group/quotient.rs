use super::{Group, Subgroup};
use crate::error::{Error, Result};

/// The natural projection `G -> G/N`.
///
/// Cosets are numbered by their smallest source element, so the kernel is
/// coset 0 and the quotient's identity sits at index 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMap {
    source_order: usize,
    kernel: Subgroup,
    quotient: Group,
    coset_of: Vec<usize>,
    cosets: Vec<Vec<usize>>,
}

impl QuotientMap {
    pub fn new(group: &Group, kernel: &Subgroup) -> Result<Self> {
        if !kernel.is_normal_in(group) {
            return Err(Error::invalid("quotient by a subgroup that is not normal"));
        }
        let n = group.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut cosets: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let c = cosets.len();
            let mut members: Vec<usize> =
                kernel.members().iter().map(|&k| group.mul(x, k)).collect();
            members.sort_unstable();
            for &y in &members {
                coset_of[y] = c;
            }
            cosets.push(members);
        }
        let m = cosets.len();
        let mut table = Vec::with_capacity(m * m);
        for a in &cosets {
            for b in &cosets {
                table.push(coset_of[group.mul(a[0], b[0])]);
            }
        }
        let mut quotient = Group::from_table_unchecked(m, table);
        if let Some(l) = group.label() {
            quotient = quotient.with_label(format!("{l} / N{}", kernel.order()));
        }
        Ok(QuotientMap {
            source_order: n,
            kernel: kernel.clone(),
            quotient,
            coset_of,
            cosets,
        })
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn kernel_order(&self) -> usize {
        self.kernel.order()
    }

    pub fn quotient(&self) -> &Group {
        &self.quotient
    }

    pub fn source_order(&self) -> usize {
        self.source_order
    }

    #[inline]
    pub fn coset_of(&self, x: usize) -> usize {
        self.coset_of[x]
    }

    pub fn coset_map(&self) -> &[usize] {
        &self.coset_of
    }

    /// Sorted source elements of coset `c`.
    pub fn coset(&self, c: usize) -> &[usize] {
        &self.cosets[c]
    }

    /// Image of a subset's indicator vector: coset-wise member counts.
    pub fn pushforward(&self, elements: &[usize]) -> Vec<u32> {
        let mut out = vec![0u32; self.quotient.order()];
        for &x in elements {
            out[self.coset_of[x]] += 1;
        }
        out
    }

    /// Natural projection from this quotient onto a coarser one
    /// (`coarser.kernel` must contain `self.kernel`).
    pub fn projection_onto(&self, coarser: &QuotientMap) -> Result<Vec<usize>> {
        if coarser.source_order != self.source_order || !self.kernel.is_subset_of(&coarser.kernel) {
            return Err(Error::invalid(
                "kernel containment violated between quotient levels",
            ));
        }
        Ok(self.cosets.iter().map(|c| coarser.coset_of[c[0]]).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic_group, group_from_generators, refinement_chain, Permutation};

    #[test]
    fn homomorphism_identity() {
        let g = cyclic_group(15);
        let chain = refinement_chain(&g);
        let q = QuotientMap::new(&g, &chain.terms()[1]).unwrap();
        assert_eq!(q.quotient().order(), 5);
        for a in 0..15 {
            for b in 0..15 {
                assert_eq!(
                    q.quotient().mul(q.coset_of(a), q.coset_of(b)),
                    q.coset_of(g.mul(a, b))
                );
            }
        }
        assert_eq!(q.pushforward(&[0, 1, 3, 5, 10]), vec![3, 1, 0, 1, 0]);
    }

    #[test]
    fn trivial_and_whole() {
        let g = cyclic_group(6);
        let full = QuotientMap::new(&g, &Subgroup::whole(&g)).unwrap();
        assert_eq!(full.quotient().order(), 1);
        let triv = QuotientMap::new(&g, &Subgroup::trivial()).unwrap();
        assert_eq!(triv.quotient().table(), g.table());
        assert_eq!(triv.projection_onto(&full).unwrap(), vec![0; 6]);
        assert!(full.projection_onto(&triv).is_err());
    }

    #[test]
    fn rejects_non_normal() {
        let s3 = group_from_generators(
            3,
            &[
                Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap(),
                Permutation::from_cycles(3, &[&[1, 2]]).unwrap(),
            ],
        )
        .unwrap();
        let t = (1..6).find(|&x| s3.element_order(x) == 2).unwrap();
        let h = Subgroup::new(&s3, vec![0, t]).unwrap();
        assert!(QuotientMap::new(&s3, &h).is_err());
    }
}
