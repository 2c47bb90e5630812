//! Group constructions used by the catalog.

use crate::automorphism::Automorphism;
use crate::error::{Error, Result};
use crate::group::{group_from_generators, Group, Permutation};

/// `<a, b | a^n = 1, b^m = a^s, b a b^-1 = a^r>` with elements `a^i b^j` at
/// index `j * n + i`.
pub fn metacyclic(n: usize, m: usize, r: usize, s: usize) -> Result<Group> {
    let rpow = |j: usize| (0..j).fold(1 % n, |acc, _| acc * r % n);
    if rpow(m) != 1 % n || (s * r) % n != s % n {
        return Err(Error::invalid(format!(
            "metacyclic({n}, {m}, {r}, {s}) is inconsistent"
        )));
    }
    let order = n * m;
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        let (i, j) = (x % n, x / n);
        let rj = rpow(j);
        for y in 0..order {
            let (k, l) = (y % n, y / n);
            let mut e = i + k * rj;
            let mut f = j + l;
            if f >= m {
                f -= m;
                e += s;
            }
            table.push(f * n + e % n);
        }
    }
    Ok(Group::from_table_unchecked(order, table))
}

/// `N : K` where `act(k)` is the automorphism of `N` by which `k` acts.
/// Element `(n, k)` sits at index `k * |N| + n`.
pub fn semidirect(normal: &Group, complement: &Group, act: impl Fn(usize) -> Vec<usize>) -> Group {
    let (a, b) = (normal.order(), complement.order());
    let actions: Vec<Vec<usize>> = (0..b).map(act).collect();
    let order = a * b;
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        let (n1, k1) = (x % a, x / a);
        for y in 0..order {
            let (n2, k2) = (y % a, y / a);
            table.push(complement.mul(k1, k2) * a + normal.mul(n1, actions[k1][n2]));
        }
    }
    Group::from_table_unchecked(order, table)
}

/// The extension of `base` by a cyclic group of order `p` generated by `t`
/// with `t x t^-1 = alpha(x)` and `t^p = top`. Requires `alpha(top) = top`
/// and `alpha^p` equal to conjugation by `top`. Element `x t^i` sits at
/// index `i * |base| + x`.
pub fn cyclic_extension(base: &Group, p: usize, alpha: &Automorphism, top: usize) -> Group {
    let h = base.order();
    // alpha^i for i < p
    let mut powers: Vec<Vec<usize>> = vec![(0..h).collect()];
    for i in 1..p {
        powers.push(powers[i - 1].iter().map(|&x| alpha.apply(x)).collect());
    }
    let order = h * p;
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        let (a, i) = (x % h, x / h);
        for y in 0..order {
            let (b, j) = (y % h, y / h);
            let mut e = base.mul(a, powers[i][b]);
            let mut f = i + j;
            if f >= p {
                f -= p;
                e = base.mul(e, top);
            }
            table.push(f * h + e);
        }
    }
    Group::from_table_unchecked(order, table)
}

pub(crate) fn perm_group(degree: usize, gens: &[&[&[usize]]]) -> Group {
    let gens: Vec<Permutation> = gens
        .iter()
        .map(|c| Permutation::from_cycles(degree, c).expect("valid catalog permutation"))
        .collect();
    group_from_generators(degree, &gens).expect("catalog group within limits")
}

pub(crate) fn alternating4() -> Group {
    perm_group(4, &[&[&[1, 2, 3]], &[&[1, 2], &[3, 4]]])
}

pub(crate) fn symmetric4() -> Group {
    perm_group(4, &[&[&[1, 2, 3, 4]], &[&[1, 2]]])
}

/// SL(2, 3) acting on the eight nonzero vectors of GF(3)^2.
pub(crate) fn sl23() -> Group {
    let vectors: Vec<(usize, usize)> = (0..9)
        .map(|i| (i / 3, i % 3))
        .filter(|&v| v != (0, 0))
        .collect();
    let as_perm = |m: [[usize; 2]; 2]| {
        let images = vectors
            .iter()
            .map(|&(x, y)| {
                let w = (
                    (m[0][0] * x + m[0][1] * y) % 3,
                    (m[1][0] * x + m[1][1] * y) % 3,
                );
                vectors.iter().position(|&u| u == w).unwrap()
            })
            .collect();
        Permutation::from_images(images).unwrap()
    };
    let gens = [as_perm([[1, 1], [0, 1]]), as_perm([[0, 2], [1, 0]])];
    group_from_generators(8, &gens).expect("SL(2,3) has order 24")
}
