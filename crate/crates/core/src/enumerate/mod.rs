//! Difference set enumeration by refinement of difference sums.
//!
//! For each admissible size `k` the search starts from the single sum `[k]`
//! over `G/G` and walks down the refinement chain `G = N1 > N2 > ... > {1}`.
//! At each step every sum over `G/N_i` is lifted to all difference sums over
//! `G/N_(i+1)` projecting onto it, and equivalent sums are collapsed to one
//! representative. At the last nontrivial term the surviving sums are lifted
//! to subsets of `G`, and the difference sets found are reduced to their
//! smallest images.

mod canon;
mod oracle;
mod refine;

pub use canon::{canonical_sum, equivalence_free_sets, equivalence_free_sums, smallest_image};
pub use oracle::{
    all_difference_sets_of_size, binomial, brute_force_difference_sets, brute_force_with, orbit,
    ORACLE_SUBSET_CAP,
};
pub use refine::{refine_sets, refine_sums};

use std::ops::ControlFlow;

use crate::automorphism::{
    automorphism_group, induced_automorphisms, Automorphism, AutomorphismGroup,
};
use crate::difference::{DifferenceSet, DifferenceSum, Parameters};
use crate::error::{Error, Result};
use crate::group::{refinement_chain, Group, NormalChain, QuotientMap};
use crate::params::possible_sizes;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Filter sizes with the Bruck-Ryser-Chowla conditions.
    pub use_brc: bool,
    /// Only lift to sets containing the identity at the last level.
    pub identity_opt: bool,
    /// Collapse equivalent sums at each level.
    pub sum_dedupe: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            use_brc: true,
            identity_opt: true,
            sum_dedupe: true,
        }
    }
}

/// Counts for one refinement step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelTrace {
    pub kernel_order: usize,
    pub quotient_order: usize,
    pub refined: usize,
    pub kept: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SizeTrace {
    pub params: Parameters,
    pub levels: Vec<LevelTrace>,
    pub candidate_sets: usize,
    pub classes: usize,
}

/// Canonical difference sets of one parameter triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SizeResult {
    pub params: Parameters,
    pub sets: Vec<DifferenceSet>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub results: Vec<SizeResult>,
    pub traces: Vec<SizeTrace>,
}

impl Enumeration {
    /// All sets, ordered by size and then lexicographically.
    pub fn all_sets(&self) -> Vec<DifferenceSet> {
        self.results
            .iter()
            .flat_map(|r| r.sets.iter().cloned())
            .collect()
    }
}

/// Events reported while a search runs.
#[derive(Debug)]
pub enum Progress<'a> {
    Level {
        params: &'a Parameters,
        trace: &'a LevelTrace,
        sums: &'a [DifferenceSum],
    },
    Sets {
        params: &'a Parameters,
        candidates: usize,
        classes: usize,
    },
}

struct Level {
    quotient: QuotientMap,
    induced: Vec<Automorphism>,
}

/// Precomputed group data for repeated searches.
pub struct Enumerator<'g> {
    group: &'g Group,
    aut: AutomorphismGroup,
    chain: NormalChain,
    levels: Vec<Level>,
    options: SearchOptions,
}

impl<'g> Enumerator<'g> {
    pub fn new(group: &'g Group, options: SearchOptions) -> Result<Self> {
        let aut = automorphism_group(group)?;
        Ok(Self::with_automorphisms(group, aut, options))
    }

    pub fn with_automorphisms(
        group: &'g Group,
        aut: AutomorphismGroup,
        options: SearchOptions,
    ) -> Self {
        let chain = refinement_chain(group);
        let terms = chain.terms();
        let levels = terms[..terms.len() - 1]
            .iter()
            .map(|n| {
                let quotient = QuotientMap::new(group, n).expect("chain terms are normal");
                let induced = induced_automorphisms(&aut, &quotient);
                Level { quotient, induced }
            })
            .collect();
        Enumerator {
            group,
            aut,
            chain,
            levels,
            options,
        }
    }

    pub fn automorphisms(&self) -> &AutomorphismGroup {
        &self.aut
    }

    pub fn chain(&self) -> &NormalChain {
        &self.chain
    }

    pub fn options(&self) -> SearchOptions {
        self.options
    }

    pub fn sizes(&self) -> Vec<Parameters> {
        possible_sizes(self.group.order(), self.options.use_brc)
    }

    pub fn run(&self) -> Result<Enumeration> {
        self.run_with(&mut |_| ControlFlow::Continue(()))
    }

    /// Runs the search, reporting each completed level to `observer`; a
    /// `Break` stops the search with [`Error::Interrupted`].
    pub fn run_with(
        &self,
        observer: &mut dyn FnMut(Progress<'_>) -> ControlFlow<()>,
    ) -> Result<Enumeration> {
        let mut results = Vec::new();
        let mut traces = Vec::new();
        for params in self.sizes() {
            let (sets, trace) = self.search_size(&params, observer)?;
            results.push(SizeResult { params, sets });
            traces.push(trace);
        }
        Ok(Enumeration { results, traces })
    }

    fn search_size(
        &self,
        params: &Parameters,
        observer: &mut dyn FnMut(Progress<'_>) -> ControlFlow<()>,
    ) -> Result<(Vec<DifferenceSet>, SizeTrace)> {
        let mut sums = vec![DifferenceSum::new(vec![params.k as u32])];
        let mut levels = Vec::new();
        for pair in self.levels.windows(2) {
            let (coarse, fine) = (&pair[0], &pair[1]);
            let refined = refine_sums(&coarse.quotient, &fine.quotient, &sums, params)?;
            let refined_count = refined.len();
            sums = if self.options.sum_dedupe {
                canon::dedupe_sums(fine.quotient.quotient(), &fine.induced, &refined)
            } else {
                refined
            };
            let trace = LevelTrace {
                kernel_order: fine.quotient.kernel_order(),
                quotient_order: fine.quotient.quotient().order(),
                refined: refined_count,
                kept: sums.len(),
            };
            if observer(Progress::Level {
                params,
                trace: &trace,
                sums: &sums,
            })
            .is_break()
            {
                return Err(Error::Interrupted);
            }
            levels.push(trace);
        }
        let last = self.levels.last().expect("chain has at least two terms");
        if self.options.identity_opt {
            // Without sum dedupe every translate of a sum is present, so sums
            // missing the identity coset are covered by one that has it.
            sums.retain(|s| s.coeffs()[0] > 0);
        }
        let candidates = refine_sets(
            self.group,
            &last.quotient,
            &sums,
            self.options.identity_opt,
            params,
        )?;
        let sets = equivalence_free_sets(self.group, &self.aut, &candidates);
        if observer(Progress::Sets {
            params,
            candidates: candidates.len(),
            classes: sets.len(),
        })
        .is_break()
        {
            return Err(Error::Interrupted);
        }
        let trace = SizeTrace {
            params: *params,
            levels,
            candidate_sets: candidates.len(),
            classes: sets.len(),
        };
        Ok((sets, trace))
    }
}

/// All difference sets of `group` up to equivalence, excluding one-element
/// sets and complements, with default options.
pub fn difference_sets(group: &Group) -> Result<Vec<DifferenceSet>> {
    Ok(Enumerator::new(group, SearchOptions::default())?
        .run()?
        .all_sets())
}
