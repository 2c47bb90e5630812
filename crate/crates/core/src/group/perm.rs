use std::collections::HashMap;
use std::fmt;

use super::{Group, DEFAULT_MAX_ORDER};
use crate::error::{Error, Result};

/// A permutation of `1..=degree`, stored as 0-based images.
///
/// Products compose left to right: `(p * q)(x) = q(p(x))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation((0..degree as u32).collect())
    }

    /// Builds a permutation from 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::invalid(format!("{images:?} is not a bijection")));
            }
            seen[x] = true;
        }
        Ok(Permutation(images.into_iter().map(|x| x as u32).collect()))
    }

    /// Builds a permutation of `1..=degree` from 1-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut moved = vec![false; degree];
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                if p == 0 || p > degree {
                    return Err(Error::invalid(format!("point {p} outside 1..{degree}")));
                }
                if moved[p - 1] {
                    return Err(Error::invalid(format!("point {p} appears twice")));
                }
                moved[p - 1] = true;
                images[p - 1] = cycle[(i + 1) % cycle.len()] - 1;
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn image(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut done = vec![false; n];
        let mut any = false;
        for start in 0..n {
            if done[start] || self.image(start) == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut x = start;
            let mut first = true;
            while !done[x] {
                done[x] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", x + 1)?;
                first = false;
                x = self.image(x);
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// Generates the permutation group spanned by `generators` and converts it to
/// table form, with the default order limit.
pub fn group_from_generators(degree: usize, generators: &[Permutation]) -> Result<Group> {
    group_from_generators_with_limit(degree, generators, DEFAULT_MAX_ORDER)
}

/// Element order: identity first, then breadth-first layers of right
/// multiplication by the generators, each layer sorted by image sequence.
pub fn group_from_generators_with_limit(
    degree: usize,
    generators: &[Permutation],
    max_order: usize,
) -> Result<Group> {
    if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
        return Err(Error::invalid(format!(
            "generator {g} has degree {} instead of {degree}",
            g.degree()
        )));
    }
    let id = Permutation::identity(degree);
    let mut index: HashMap<Permutation, usize> = HashMap::new();
    index.insert(id.clone(), 0);
    let mut elements = vec![id];
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let mut layer: Vec<Permutation> = Vec::new();
        for &x in &frontier {
            for g in generators {
                let y = elements[x].then(g);
                if !index.contains_key(&y) && !layer.contains(&y) {
                    layer.push(y);
                }
            }
        }
        layer.sort();
        frontier.clear();
        for p in layer {
            if elements.len() >= max_order {
                return Err(Error::SizeLimit { max: max_order });
            }
            index.insert(p.clone(), elements.len());
            frontier.push(elements.len());
            elements.push(p);
        }
    }
    let n = elements.len();
    let mut table = Vec::with_capacity(n * n);
    for a in &elements {
        for b in &elements {
            table.push(index[&a.then(b)]);
        }
    }
    Ok(Group::from_table_unchecked(n, table))
}
