//! Group-ring arithmetic over the integers and the difference set and
//! difference sum predicates built on it.
//!
//! For a subset or coefficient vector `A` of a group `G`, the difference
//! profile is the product `A * A^(-1)` in `Z[G]`: its coefficient at `g` counts
//! the weighted pairs `(a, b)` with `a * b^-1 = g`. A `(v, k, lambda)`
//! difference set has profile `k` at the identity and `lambda` elsewhere; a
//! difference sum over `G/N` has profile `k - lambda + lambda|N|` at the
//! identity and `lambda|N|` elsewhere.

use std::fmt;

use crate::automorphism::{induced_automorphisms, Automorphism, AutomorphismGroup};
use crate::error::{Error, Result};
use crate::group::{Group, QuotientMap};

/// A parameter triple satisfying `k(k-1) = lambda(v-1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Parameters {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
}

impl Parameters {
    pub fn new(v: usize, k: usize, lambda: usize) -> Result<Self> {
        if v == 0 || k == 0 || k > v || k * (k - 1) != lambda * (v - 1) {
            return Err(Error::invalid(format!(
                "({v}, {k}, {lambda}) violates k(k-1) = lambda(v-1)"
            )));
        }
        Ok(Parameters { v, k, lambda })
    }

    /// The triple for size `k` in a group of order `v`, if `lambda` is integral.
    pub fn for_size(v: usize, k: usize) -> Option<Self> {
        if v == 0 || k == 0 || k > v {
            return None;
        }
        if v == 1 {
            return Some(Parameters { v, k, lambda: 0 });
        }
        let num = k * (k - 1);
        num.is_multiple_of(v - 1).then(|| Parameters {
            v,
            k,
            lambda: num / (v - 1),
        })
    }

    /// Parameters of the complementary set: `(v, v-k, lambda+v-2k)`.
    pub fn complement(&self) -> Parameters {
        Parameters {
            v: self.v,
            k: self.v - self.k,
            lambda: self.lambda + self.v - 2 * self.k,
        }
    }

    /// Target profile value at the identity of a quotient with kernel order `w`.
    pub fn identity_target(&self, w: usize) -> usize {
        self.k - self.lambda + self.lambda * w
    }
}

impl fmt::Display for Parameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v={} k={} lambda={}", self.v, self.k, self.lambda)
    }
}

/// An integer coefficient vector indexed by group elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupRingVector {
    coeffs: Vec<i64>,
}

impl GroupRingVector {
    pub fn new(coeffs: Vec<i64>) -> Self {
        GroupRingVector { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        GroupRingVector {
            coeffs: vec![0; order],
        }
    }

    pub fn indicator(order: usize, elements: &[usize]) -> Self {
        let mut coeffs = vec![0; order];
        for &x in elements {
            coeffs[x] += 1;
        }
        GroupRingVector { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn total(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// `A * A^(-1)`.
    pub fn profile(&self, group: &Group) -> GroupRingVector {
        GroupRingVector {
            coeffs: difference_profile(group, &self.coeffs),
        }
    }

    /// `g * A`: coefficient of `g * d` is the old coefficient of `d`.
    pub fn translate(&self, group: &Group, g: usize) -> GroupRingVector {
        let mut out = vec![0; self.coeffs.len()];
        for (d, &c) in self.coeffs.iter().enumerate() {
            out[group.mul(g, d)] = c;
        }
        GroupRingVector { coeffs: out }
    }

    /// `A^phi`: coefficient of `phi(d)` is the old coefficient of `d`.
    pub fn apply_automorphism(&self, phi: &Automorphism) -> GroupRingVector {
        let mut out = vec![0; self.coeffs.len()];
        for (d, &c) in self.coeffs.iter().enumerate() {
            out[phi.apply(d)] = c;
        }
        GroupRingVector { coeffs: out }
    }

    /// Image under the projection onto `q.quotient()`.
    pub fn pushforward(&self, q: &QuotientMap) -> GroupRingVector {
        let mut out = vec![0; q.quotient().order()];
        for (d, &c) in self.coeffs.iter().enumerate() {
            out[q.coset_of(d)] += c;
        }
        GroupRingVector { coeffs: out }
    }

    /// Support elements, valid when every coefficient is 0 or 1.
    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len())
            .filter(|&i| self.coeffs[i] != 0)
            .collect()
    }
}

/// Dense `O(v^2)` profile of a coefficient vector.
pub fn difference_profile(group: &Group, coeffs: &[i64]) -> Vec<i64> {
    let n = group.order();
    let mut out = vec![0; n];
    for a in (0..n).filter(|&a| coeffs[a] != 0) {
        for b in (0..n).filter(|&b| coeffs[b] != 0) {
            out[group.mul(a, group.inv(b))] += coeffs[a] * coeffs[b];
        }
    }
    out
}

/// Sparse `O(k^2)` profile of a subset.
pub fn set_profile(group: &Group, elements: &[usize]) -> Vec<usize> {
    let mut out = vec![0; group.order()];
    for &a in elements {
        for &b in elements {
            out[group.mul(a, group.inv(b))] += 1;
        }
    }
    out
}

/// A subset of a group, stored as sorted 0-based element indices.
///
/// The textual form uses 1-based indices, so the identity prints as `1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DifferenceSet {
    elements: Vec<usize>,
}

impl DifferenceSet {
    /// From 1-based indices, which must be strictly increasing and at most
    /// `order`.
    pub fn from_indices(order: usize, indices: &[usize]) -> Result<Self> {
        if indices.iter().any(|&i| i == 0 || i > order) {
            return Err(Error::invalid(format!(
                "index out of range 1..{order} in {indices:?}"
            )));
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::invalid(format!(
                "indices {indices:?} are not strictly increasing"
            )));
        }
        Ok(DifferenceSet {
            elements: indices.iter().map(|&i| i - 1).collect(),
        })
    }

    /// From 0-based element indices in any order; duplicates are removed.
    pub fn from_elements(mut elements: Vec<usize>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        DifferenceSet { elements }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    /// 1-based indices.
    pub fn indices(&self) -> Vec<usize> {
        self.elements.iter().map(|&x| x + 1).collect()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn to_vector(&self, order: usize) -> GroupRingVector {
        GroupRingVector::indicator(order, &self.elements)
    }

    pub fn translate(&self, group: &Group, g: usize) -> DifferenceSet {
        DifferenceSet::from_elements(self.elements.iter().map(|&d| group.mul(g, d)).collect())
    }

    pub fn apply_automorphism(&self, phi: &Automorphism) -> DifferenceSet {
        DifferenceSet::from_elements(self.elements.iter().map(|&d| phi.apply(d)).collect())
    }
}

impl fmt::Display for DifferenceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", x + 1)?;
        }
        Ok(())
    }
}

/// A coefficient vector over a quotient group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DifferenceSum {
    coeffs: Vec<u32>,
}

impl DifferenceSum {
    pub fn new(coeffs: Vec<u32>) -> Self {
        DifferenceSum { coeffs }
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn k(&self) -> usize {
        self.coeffs.iter().map(|&c| c as usize).sum()
    }

    pub fn translate(&self, quotient: &Group, g: usize) -> DifferenceSum {
        let mut out = vec![0; self.coeffs.len()];
        for (x, &c) in self.coeffs.iter().enumerate() {
            out[quotient.mul(g, x)] = c;
        }
        DifferenceSum { coeffs: out }
    }

    pub fn apply_automorphism(&self, psi: &Automorphism) -> DifferenceSum {
        let mut out = vec![0; self.coeffs.len()];
        for (x, &c) in self.coeffs.iter().enumerate() {
            out[psi.apply(x)] = c;
        }
        DifferenceSum { coeffs: out }
    }
}

impl fmt::Display for DifferenceSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Returns the parameters if `set` is a difference set in `group`.
pub fn is_difference_set(group: &Group, set: &DifferenceSet) -> Option<Parameters> {
    let v = group.order();
    if set.is_empty() || set.elements().iter().any(|&x| x >= v) {
        return None;
    }
    let params = Parameters::for_size(v, set.len())?;
    let profile = set_profile(group, set.elements());
    let ok = profile[0] == params.k && profile[1..].iter().all(|&p| p == params.lambda);
    ok.then_some(params)
}

/// Whether `coeffs` is a difference sum over `q`: entries in `0..=|N|`,
/// admissible total `k`, and the quotient profile equation.
pub fn is_difference_sum(q: &QuotientMap, coeffs: &[u32]) -> bool {
    let w = q.kernel_order();
    if coeffs.len() != q.quotient().order() || coeffs.iter().any(|&c| c as usize > w) {
        return false;
    }
    let k: usize = coeffs.iter().map(|&c| c as usize).sum();
    let Some(params) = Parameters::for_size(q.source_order(), k) else {
        return false;
    };
    let as_i64: Vec<i64> = coeffs.iter().map(|&c| c as i64).collect();
    let profile = difference_profile(q.quotient(), &as_i64);
    profile[0] == params.identity_target(w) as i64
        && profile[1..]
            .iter()
            .all(|&p| p == (params.lambda * w) as i64)
}

/// The complement of a difference set, itself a difference set with
/// parameters `(v, v-k, lambda+v-2k)`.
pub fn complement_set(group: &Group, set: &DifferenceSet) -> Result<DifferenceSet> {
    if is_difference_set(group, set).is_none() {
        return Err(Error::invalid(format!("{{{set}}} is not a difference set")));
    }
    let mut member = vec![false; group.order()];
    for &x in set.elements() {
        member[x] = true;
    }
    Ok(DifferenceSet::from_elements(
        (0..group.order()).filter(|&x| !member[x]).collect(),
    ))
}

/// Whether `d1 = g * phi(d2)` for some `g` in `G` and automorphism `phi`.
pub fn is_equivalent_difference_set(
    group: &Group,
    aut: &AutomorphismGroup,
    d1: &DifferenceSet,
    d2: &DifferenceSet,
) -> bool {
    if d1.len() != d2.len() {
        return false;
    }
    if d1.is_empty() {
        return true;
    }
    let target = d1.elements();
    aut.elements().iter().any(|phi| {
        let image = d2.apply_automorphism(phi);
        // g must carry some image point onto the first point of d1
        image.elements().iter().any(|&x| {
            let g = group.mul(target[0], group.inv(x));
            image.translate(group, g).elements() == target
        })
    })
}

/// Whether `s1 = g * psi(s2)` for some `g` in `G/N` and `psi` induced by an
/// automorphism of `G` stabilizing `N`.
pub fn is_equivalent_difference_sum(
    q: &QuotientMap,
    aut: &AutomorphismGroup,
    s1: &DifferenceSum,
    s2: &DifferenceSum,
) -> bool {
    let quotient = q.quotient();
    induced_automorphisms(aut, q).iter().any(|psi| {
        let image = s2.apply_automorphism(psi);
        (0..quotient.order()).any(|g| image.translate(quotient, g) == *s1)
    })
}
