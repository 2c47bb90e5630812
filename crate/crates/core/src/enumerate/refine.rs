//! Preimage search between chain levels.
//!
//! Both searches assign coefficients one slot at a time and keep the partial
//! difference profile of what has been assigned so far. All contributions are
//! nonnegative, so a partial profile entry above its target can never recover
//! and the branch is cut.

use rayon::prelude::*;

use crate::difference::{DifferenceSet, DifferenceSum, Parameters};
use crate::error::{Error, Result};
use crate::group::{Group, QuotientMap};

/// All difference sums over `fine` that project onto one of `sums` over
/// `coarse`, sorted lexicographically.
pub fn refine_sums(
    coarse: &QuotientMap,
    fine: &QuotientMap,
    sums: &[DifferenceSum],
    params: &Parameters,
) -> Result<Vec<DifferenceSum>> {
    let proj = fine.projection_onto(coarse)?;
    let m1 = coarse.quotient().order();
    if let Some(bad) = sums.iter().find(|s| s.coeffs().len() != m1) {
        return Err(Error::invalid(format!(
            "sum {bad} does not live on the coarse quotient"
        )));
    }
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); m1];
    for (c2, &c1) in proj.iter().enumerate() {
        children[c1].push(c2);
    }
    let ctx = SumSearch {
        quotient: fine.quotient(),
        children: &children,
        bound: fine.kernel_order() as u32,
        id_target: params.identity_target(fine.kernel_order()) as u32,
        off_target: (params.lambda * fine.kernel_order()) as u32,
    };
    let mut out: Vec<DifferenceSum> = sums
        .par_iter()
        .flat_map_iter(|s| ctx.preimages(s.coeffs()))
        .collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

struct SumSearch<'a> {
    quotient: &'a Group,
    children: &'a [Vec<usize>],
    bound: u32,
    id_target: u32,
    off_target: u32,
}

struct SumState {
    coeffs: Vec<u32>,
    assigned: Vec<usize>,
    profile: Vec<u32>,
    found: Vec<DifferenceSum>,
}

impl SumSearch<'_> {
    fn preimages(&self, parent: &[u32]) -> Vec<DifferenceSum> {
        let m = self.quotient.order();
        let mut st = SumState {
            coeffs: vec![0; m],
            assigned: Vec::with_capacity(m),
            profile: vec![0; m],
            found: Vec::new(),
        };
        self.fill(parent, 0, 0, parent.first().copied().unwrap_or(0), &mut st);
        st.found
    }

    fn target(&self, g: usize) -> u32 {
        if g == 0 {
            self.id_target
        } else {
            self.off_target
        }
    }

    /// Adds `sign * x` times the cross terms of slot `c`; returns false if an
    /// entry exceeds its target (only checked when adding).
    fn apply(&self, c: usize, x: u32, st: &mut SumState, add: bool) -> bool {
        let q = self.quotient;
        let mut ok = true;
        let mut bump = |g: usize, amount: u32, profile: &mut Vec<u32>| {
            if add {
                profile[g] += amount;
                if profile[g] > self.target(g) {
                    ok = false;
                }
            } else {
                profile[g] -= amount;
            }
        };
        bump(0, x * x, &mut st.profile);
        for &b in &st.assigned {
            let y = st.coeffs[b];
            if y == 0 {
                continue;
            }
            bump(q.mul(c, q.inv(b)), x * y, &mut st.profile);
            bump(q.mul(b, q.inv(c)), x * y, &mut st.profile);
        }
        ok
    }

    fn fill(&self, parent: &[u32], coset: usize, child: usize, remaining: u32, st: &mut SumState) {
        if coset == parent.len() {
            if (0..st.profile.len()).all(|g| st.profile[g] == self.target(g)) {
                st.found.push(DifferenceSum::new(st.coeffs.clone()));
            }
            return;
        }
        let kids = &self.children[coset];
        if child == kids.len() {
            if remaining == 0 {
                let next = parent.get(coset + 1).copied().unwrap_or(0);
                self.fill(parent, coset + 1, 0, next, st);
            }
            return;
        }
        let slots_after = (kids.len() - child - 1) as u32;
        let lo = remaining.saturating_sub(slots_after * self.bound);
        let hi = remaining.min(self.bound);
        let c = kids[child];
        for x in lo..=hi {
            st.coeffs[c] = x;
            if x == 0 {
                st.assigned.push(c);
                self.fill(parent, coset, child + 1, remaining, st);
                st.assigned.pop();
                continue;
            }
            let ok = self.apply(c, x, st, true);
            if ok {
                st.assigned.push(c);
                self.fill(parent, coset, child + 1, remaining - x, st);
                st.assigned.pop();
            }
            self.apply(c, x, st, false);
        }
        st.coeffs[c] = 0;
    }
}

/// All difference sets in `group` whose image in `q` is one of `sums`.
///
/// With `require_identity`, only sets containing the identity are produced;
/// every input sum must then have a nonzero identity coefficient.
pub fn refine_sets(
    group: &Group,
    q: &QuotientMap,
    sums: &[DifferenceSum],
    require_identity: bool,
    params: &Parameters,
) -> Result<Vec<DifferenceSet>> {
    let m = q.quotient().order();
    for s in sums {
        if s.coeffs().len() != m {
            return Err(Error::invalid(format!(
                "sum {s} does not live on the final quotient"
            )));
        }
        if require_identity && s.coeffs()[0] == 0 {
            return Err(Error::invalid(format!(
                "sum {s} has identity coefficient 0 but identity containment was requested"
            )));
        }
    }
    let ctx = SetSearch {
        group,
        q,
        require_identity,
        k: params.k as u32,
        lambda: params.lambda as u32,
    };
    let mut out: Vec<DifferenceSet> = sums
        .par_iter()
        .flat_map_iter(|s| ctx.preimages(s.coeffs()))
        .collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

struct SetSearch<'a> {
    group: &'a Group,
    q: &'a QuotientMap,
    require_identity: bool,
    k: u32,
    lambda: u32,
}

struct SetState {
    chosen: Vec<usize>,
    profile: Vec<u32>,
    found: Vec<DifferenceSet>,
}

impl SetSearch<'_> {
    fn preimages(&self, sum: &[u32]) -> Vec<DifferenceSet> {
        let mut st = SetState {
            chosen: Vec::with_capacity(self.k as usize),
            profile: vec![0; self.group.order()],
            found: Vec::new(),
        };
        self.choose(sum, 0, 0, sum.first().copied().unwrap_or(0), &mut st);
        st.found
    }

    fn try_add(&self, d: usize, st: &mut SetState) -> bool {
        let g = self.group;
        st.profile[0] += 1;
        let mut ok = st.profile[0] <= self.k;
        for &a in &st.chosen {
            for e in [g.mul(d, g.inv(a)), g.mul(a, g.inv(d))] {
                st.profile[e] += 1;
                ok &= st.profile[e] <= self.lambda;
            }
        }
        st.chosen.push(d);
        ok
    }

    fn remove_last(&self, st: &mut SetState) {
        let g = self.group;
        let d = st.chosen.pop().unwrap();
        st.profile[0] -= 1;
        for &a in &st.chosen {
            st.profile[g.mul(d, g.inv(a))] -= 1;
            st.profile[g.mul(a, g.inv(d))] -= 1;
        }
    }

    /// Picks `remaining` more elements of coset `coset`, from position `from`.
    fn choose(&self, sum: &[u32], coset: usize, from: usize, remaining: u32, st: &mut SetState) {
        if remaining == 0 {
            if coset + 1 == sum.len() {
                debug_assert!(st.profile[1..].iter().all(|&p| p == self.lambda));
                st.found
                    .push(DifferenceSet::from_elements(st.chosen.clone()));
            } else {
                self.choose(sum, coset + 1, 0, sum[coset + 1], st);
            }
            return;
        }
        let members = self.q.coset(coset);
        if remaining as usize > members.len() - from {
            return;
        }
        let last_start = members.len() - remaining as usize;
        // the identity is the first member of coset 0
        let last_start = if self.require_identity && coset == 0 && from == 0 {
            0
        } else {
            last_start
        };
        for (i, &x) in members.iter().enumerate().take(last_start + 1).skip(from) {
            if self.try_add(x, st) {
                self.choose(sum, coset, i + 1, remaining - 1, st);
            }
            self.remove_last(st);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::difference::{is_difference_set, is_difference_sum};
    use crate::group::{cyclic_group, refinement_chain, Subgroup};

    #[test]
    fn c15_trace() {
        let g = cyclic_group(15);
        let chain = refinement_chain(&g);
        let top = QuotientMap::new(&g, &chain.terms()[0]).unwrap();
        let mid = QuotientMap::new(&g, &chain.terms()[1]).unwrap();
        let params = Parameters::new(15, 7, 3).unwrap();
        let sums = refine_sums(&top, &mid, &[DifferenceSum::new(vec![7])], &params).unwrap();
        let got: Vec<Vec<u32>> = sums.iter().map(|s| s.coeffs().to_vec()).collect();
        assert_eq!(
            got,
            vec![
                vec![1, 1, 1, 1, 3],
                vec![1, 1, 1, 3, 1],
                vec![1, 1, 3, 1, 1],
                vec![1, 3, 1, 1, 1],
                vec![3, 1, 1, 1, 1],
            ]
        );
        assert!(sums.iter().all(|s| is_difference_sum(&mid, s.coeffs())));
        let sets = refine_sets(
            &g,
            &mid,
            &[DifferenceSum::new(vec![3, 1, 1, 1, 1])],
            true,
            &params,
        )
        .unwrap();
        assert_eq!(sets.len(), 6);
        assert!(sets
            .iter()
            .all(|d| d.elements()[0] == 0 && is_difference_set(&g, d).is_some()));
    }

    #[test]
    fn same_level_is_identity() {
        let g = cyclic_group(15);
        let chain = refinement_chain(&g);
        let mid = QuotientMap::new(&g, &chain.terms()[1]).unwrap();
        let params = Parameters::new(15, 7, 3).unwrap();
        let input = vec![DifferenceSum::new(vec![3, 1, 1, 1, 1])];
        assert_eq!(refine_sums(&mid, &mid, &input, &params).unwrap(), input);
    }

    #[test]
    fn c7_all_and_identity_sets() {
        let g = cyclic_group(7);
        let top = QuotientMap::new(&g, &Subgroup::whole(&g)).unwrap();
        let bottom = QuotientMap::new(&g, &Subgroup::trivial()).unwrap();
        let params = Parameters::new(7, 3, 1).unwrap();
        let start = [DifferenceSum::new(vec![3])];
        assert_eq!(
            refine_sums(&top, &bottom, &start, &params).unwrap().len(),
            14
        );
        assert_eq!(
            refine_sets(&g, &top, &start, true, &params).unwrap().len(),
            6
        );
        assert_eq!(
            refine_sets(&g, &top, &start, false, &params).unwrap().len(),
            14
        );
    }

    #[test]
    fn errors() {
        let g = cyclic_group(15);
        let chain = refinement_chain(&g);
        let top = QuotientMap::new(&g, &chain.terms()[0]).unwrap();
        let mid = QuotientMap::new(&g, &chain.terms()[1]).unwrap();
        let params = Parameters::new(15, 7, 3).unwrap();
        assert!(refine_sums(
            &mid,
            &top,
            &[DifferenceSum::new(vec![3, 1, 1, 1, 1])],
            &params
        )
        .is_err());
        let zero_id = DifferenceSum::new(vec![0, 3, 1, 2, 1]);
        assert!(refine_sets(&g, &mid, std::slice::from_ref(&zero_id), true, &params).is_err());
        assert!(refine_sets(&g, &mid, &[zero_id], false, &params).is_ok());
    }

    #[test]
    fn full_coset_is_forced() {
        // coefficient |N| selects every element of its coset
        let g = cyclic_group(15);
        let chain = refinement_chain(&g);
        let mid = QuotientMap::new(&g, &chain.terms()[1]).unwrap();
        let params = Parameters::new(15, 7, 3).unwrap();
        let sets = refine_sets(
            &g,
            &mid,
            &[DifferenceSum::new(vec![3, 1, 1, 1, 1])],
            false,
            &params,
        )
        .unwrap();
        assert!(sets
            .iter()
            .all(|d| mid.coset(0).iter().all(|x| d.elements().contains(x))));
    }
}
