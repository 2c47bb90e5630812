//! Finite groups in dense multiplication-table form.
//!
//! Elements are addressed by `usize` indices `0..order` with the identity at
//! index 0. The 1-based labels used in result files and on the command line
//! are the internal index plus one.

mod perm;
mod quotient;
mod subgroup;

pub use perm::{group_from_generators, group_from_generators_with_limit, Permutation};
pub use quotient::QuotientMap;
pub use subgroup::{normal_subgroups, refinement_chain, NormalChain, Subgroup};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};

/// Default upper bound on the order of a generated group.
pub const DEFAULT_MAX_ORDER: usize = 200;

/// A finite group given by its Cayley table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    label: Option<String>,
}

impl Group {
    /// Builds a group from a row-major table where `table[a * order + b]` is
    /// the index of `a * b`. The table is checked for the group axioms.
    pub fn from_table(order: usize, table: Vec<usize>) -> Result<Self> {
        if order == 0 || table.len() != order * order {
            return Err(Error::invalid(format!(
                "table of length {} does not describe a group of order {order}",
                table.len()
            )));
        }
        if let Some(&bad) = table.iter().find(|&&x| x >= order) {
            return Err(Error::invalid(format!("table entry {bad} out of range")));
        }
        let group = Self::from_table_unchecked(order, table);
        group.check_axioms()?;
        Ok(group)
    }

    pub(crate) fn from_table_unchecked(order: usize, table: Vec<usize>) -> Self {
        let table: Vec<u32> = table.into_iter().map(|x| x as u32).collect();
        let mut inverse = vec![u32::MAX; order];
        for a in 0..order {
            for b in 0..order {
                if table[a * order + b] == 0 {
                    inverse[a] = b as u32;
                    break;
                }
            }
        }
        Group {
            order,
            table,
            inverse,
            label: None,
        }
    }

    fn check_axioms(&self) -> Result<()> {
        let n = self.order;
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return Err(Error::invalid("index 0 is not a two-sided identity"));
            }
        }
        let mut seen_row = vec![usize::MAX; n];
        let mut seen_col = vec![usize::MAX; n];
        for a in 0..n {
            for b in 0..n {
                let r = self.mul(a, b);
                let c = self.mul(b, a);
                if seen_row[r] == a || seen_col[c] == a {
                    return Err(Error::invalid(format!(
                        "row or column {} of the table is not a permutation",
                        a + 1
                    )));
                }
                seen_row[r] = a;
                seen_col[c] = a;
            }
        }
        let assoc = |a: usize, b: usize, c: usize| {
            self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
        };
        if n <= 32 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !assoc(a, b, c) {
                            return Err(Error::invalid("table is not associative"));
                        }
                    }
                }
            }
        } else {
            let mut rng = StdRng::seed_from_u64(0x5eed_0f9a_0b00);
            for _ in 0..100_000 {
                let (a, b, c) = (
                    rng.random_range(0..n),
                    rng.random_range(0..n),
                    rng.random_range(0..n),
                );
                if !assoc(a, b, c) {
                    return Err(Error::invalid("table is not associative"));
                }
            }
        }
        Ok(())
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// `g * x * g^-1`
    #[inline]
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn pow(&self, a: usize, mut e: usize) -> usize {
        let mut acc = 0;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Row-major copy of the table with `usize` entries.
    pub fn table(&self) -> Vec<usize> {
        self.table.iter().map(|&x| x as usize).collect()
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.order).map(|a| self.element_order(a)).collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Sorted members of the subgroup generated by `gens`.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.order];
        self.close_into(&mut member, gens);
        (0..self.order).filter(|&x| member[x]).collect()
    }

    /// Extends the membership mask `member` to the subgroup generated by its
    /// current contents together with `gens`.
    pub(crate) fn close_into(&self, member: &mut [bool], gens: &[usize]) {
        member[0] = true;
        let mut all_gens: Vec<usize> = (0..self.order).filter(|&x| member[x] && x != 0).collect();
        all_gens.extend(gens.iter().copied().filter(|&g| g != 0));
        all_gens.sort_unstable();
        all_gens.dedup();
        let mut queue: Vec<usize> = (0..self.order).filter(|&x| member[x]).collect();
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &g in &all_gens {
                let y = self.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    queue.push(y);
                }
            }
        }
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&z| (0..self.order).all(|g| self.mul(z, g) == self.mul(g, z)))
            .collect()
    }

    /// The commutator subgroup.
    pub fn derived_subgroup(&self) -> Vec<usize> {
        let mut comms = Vec::new();
        let mut seen = vec![false; self.order];
        for a in 0..self.order {
            for b in 0..self.order {
                let c = self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b));
                if !seen[c] {
                    seen[c] = true;
                    comms.push(c);
                }
            }
        }
        self.generated(&comms)
    }

    /// Invariant factors `[d1, d2, ...]` with `d1` a multiple of `d2` and so
    /// on, or `None` if the group is not abelian. The trivial group yields an
    /// empty list.
    pub fn abelian_invariants(&self) -> Option<Vec<usize>> {
        if !self.is_abelian() {
            return None;
        }
        let orders = self.element_orders();
        let mut primes = Vec::new();
        let mut m = self.order;
        let mut p = 2;
        while m > 1 {
            if m.is_multiple_of(p) {
                primes.push(p);
                while m.is_multiple_of(p) {
                    m /= p;
                }
            }
            p += 1;
        }
        // For each prime, recover the partition of the Sylow subgroup from the
        // sizes of the layers {x : x^(p^i) = 1}.
        let mut factors: Vec<usize> = Vec::new();
        for p in primes {
            let mut omega = vec![1usize];
            let mut pi = 1;
            loop {
                pi *= p;
                let count = orders.iter().filter(|&&o| pi % o == 0).count();
                if count == *omega.last().unwrap() {
                    break;
                }
                omega.push(count);
            }
            // number of cyclic factors of exponent >= i
            let parts_at_least: Vec<usize> =
                omega.windows(2).map(|w| ilog(w[1] / w[0], p)).collect();
            let mut exps = Vec::new();
            for (i, &cnt) in parts_at_least.iter().enumerate() {
                let next = parts_at_least.get(i + 1).copied().unwrap_or(0);
                for _ in 0..cnt - next {
                    exps.push(p.pow(i as u32 + 1));
                }
            }
            exps.sort_unstable_by(|a, b| b.cmp(a));
            for (slot, e) in exps.into_iter().enumerate() {
                if slot < factors.len() {
                    factors[slot] *= e;
                } else {
                    factors.push(e);
                }
            }
        }
        Some(factors)
    }
}

fn ilog(mut x: usize, p: usize) -> usize {
    let mut k = 0;
    while x > 1 {
        x /= p;
        k += 1;
    }
    k
}

/// Cyclic group of order `n` with elements ordered `1, x, x^2, ...`.
pub fn cyclic_group(n: usize) -> Group {
    assert!(n > 0);
    let table = (0..n * n).map(|i| (i / n + i % n) % n).collect();
    Group::from_table_unchecked(n, table).with_label(format!("C{n}"))
}

/// Direct product with elements `(g, h)` at index `g * |H| + h`.
pub fn direct_product(g: &Group, h: &Group) -> Group {
    let (m, n) = (g.order(), h.order());
    let order = m * n;
    let mut table = Vec::with_capacity(order * order);
    for a in 0..order {
        for b in 0..order {
            let (a1, a2) = (a / n, a % n);
            let (b1, b2) = (b / n, b % n);
            table.push(g.mul(a1, b1) * n + h.mul(a2, b2));
        }
    }
    let grp = Group::from_table_unchecked(order, table);
    match (g.label(), h.label()) {
        (Some(x), Some(y)) => grp.with_label(format!("{x} x {y}")),
        _ => grp,
    }
}
