//! Admissible parameter triples for a group order.
//!
//! The Bruck-Ryser-Chowla test is used purely as a search filter. For even
//! `v` it asks that `k - lambda` be a perfect square. For odd `v` it asks that
//! `z^2 = (k - lambda) x^2 + (-1)^((v-1)/2) lambda y^2` have a nontrivial
//! integer solution, which by the Hasse-Minkowski theorem holds exactly when
//! the Hilbert symbol of the two coefficients is 1 at every place.

use crate::difference::Parameters;

/// All `(v, k, lambda)` with `1 < k < v/2` and integral `lambda >= 1`,
/// optionally filtered by the Bruck-Ryser-Chowla conditions, sorted by `k`.
pub fn possible_sizes(v: usize, use_brc: bool) -> Vec<Parameters> {
    if v < 2 {
        return Vec::new();
    }
    (2..)
        .take_while(|&k| 2 * k < v)
        .filter_map(|k| Parameters::for_size(v, k))
        .filter(|p| p.lambda >= 1)
        .filter(|p| !use_brc || brc_admissible(p))
        .collect()
}

pub fn brc_admissible(p: &Parameters) -> bool {
    if p.k <= p.lambda || p.lambda == 0 {
        return true;
    }
    let n = (p.k - p.lambda) as i64;
    if p.v.is_multiple_of(2) {
        return is_square(n);
    }
    let sign = if ((p.v - 1) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    };
    ternary_form_solvable(n, sign * p.lambda as i64)
}

fn is_square(n: i64) -> bool {
    if n < 0 {
        return false;
    }
    let r = (n as f64).sqrt().round() as i64;
    (r - 1..=r + 1).any(|s| s >= 0 && s * s == n)
}

/// Whether `z^2 = a x^2 + b y^2` has a nontrivial integer solution.
pub(crate) fn ternary_form_solvable(a: i64, b: i64) -> bool {
    if a == 0 || b == 0 {
        return true;
    }
    if a < 0 && b < 0 {
        return false;
    }
    let mut primes = prime_factors(a.unsigned_abs());
    primes.extend(prime_factors(b.unsigned_abs()));
    primes.push(2);
    primes.sort_unstable();
    primes.dedup();
    primes
        .into_iter()
        .all(|p| hilbert_symbol(a, b, p as i64) == 1)
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn split_power(mut x: i64, p: i64) -> (u32, i64) {
    let mut e = 0;
    while x % p == 0 {
        x /= p;
        e += 1;
    }
    (e, x)
}

fn legendre(u: i64, p: i64) -> i64 {
    let mut base = u.rem_euclid(p);
    let mut e = (p - 1) / 2;
    let mut acc = 1i64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    if acc == 1 {
        1
    } else {
        -1
    }
}

/// Hilbert symbol `(a, b)_p` for nonzero `a`, `b` and a finite prime `p`.
pub(crate) fn hilbert_symbol(a: i64, b: i64, p: i64) -> i64 {
    let (alpha, u) = split_power(a, p);
    let (beta, w) = split_power(b, p);
    if p == 2 {
        let eps = |x: i64| ((x.rem_euclid(8) - 1) / 2) % 2;
        let omega = |x: i64| {
            let r = x.rem_euclid(8);
            ((r * r - 1) / 8) % 2
        };
        let e = eps(u) * eps(w) + alpha as i64 * omega(w) + beta as i64 * omega(u);
        if e % 2 == 0 {
            1
        } else {
            -1
        }
    } else {
        let mut s = if (alpha as i64 * beta as i64 * ((p - 1) / 2)) % 2 == 0 {
            1
        } else {
            -1
        };
        if beta % 2 == 1 {
            s *= legendre(u, p);
        }
        if alpha % 2 == 1 {
            s *= legendre(w, p);
        }
        s
    }
}
