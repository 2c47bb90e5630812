//! Built-in group catalog keyed by `(order, id)`.
//!
//! Orders up to 31 and 33 to 35 follow the standard small-groups numbering,
//! checked by order, abelianness, abelian invariants and element-order
//! statistics. Orders 32 and 36 are generated as cyclic extensions of smaller
//! catalog groups and use local numbering with the cyclic group first. Every
//! order up to 100 has its cyclic group at id 1; for orders above 36 that is
//! the only entry, plus `(64, 2) = C8 x C8`.

pub mod build;
mod extension;
mod parse;

pub use extension::{fingerprint, groups_of_order, valid_extension_data, Fingerprint};
pub use parse::parse_group_file;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::group::{cyclic_group, direct_product, Group};
use build::{alternating4, metacyclic, semidirect, sl23, symmetric4};

/// Largest order with a catalog entry.
pub const MAX_CATALOG_ORDER: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CatalogId {
    pub order: usize,
    pub id: usize,
}

impl CatalogId {
    pub fn new(order: usize, id: usize) -> Self {
        CatalogId { order, id }
    }
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.order, self.id)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Numbering {
    /// Matches the standard small-groups id.
    Standard,
    /// Id assigned here; no correspondence claimed.
    Local,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: CatalogId,
    pub name: String,
    pub numbering: Numbering,
    pub group: Group,
}

type Cache = Mutex<HashMap<usize, Arc<Vec<CatalogEntry>>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// All entries of one order, in id order. Empty outside the catalog range.
pub fn catalog_order(order: usize) -> Result<Arc<Vec<CatalogEntry>>> {
    if let Some(hit) = cache().lock().unwrap().get(&order) {
        return Ok(Arc::clone(hit));
    }
    let built = Arc::new(build_order(order)?);
    let mut guard = cache().lock().unwrap();
    Ok(Arc::clone(guard.entry(order).or_insert(built)))
}

pub fn catalog_ids(order: usize) -> Result<Vec<CatalogId>> {
    Ok(catalog_order(order)?.iter().map(|e| e.id).collect())
}

pub fn catalog_entry(cid: CatalogId) -> Result<CatalogEntry> {
    let entries = catalog_order(cid.order)?;
    match cid.id.checked_sub(1).and_then(|i| entries.get(i)) {
        Some(e) => Ok(e.clone()),
        None => Err(Error::NotFound {
            order: cid.order,
            id: cid.id,
            available: entries.iter().map(|e| e.id.id).collect(),
        }),
    }
}

pub fn catalog_group(cid: CatalogId) -> Result<Group> {
    Ok(catalog_entry(cid)?.group)
}

fn build_order(order: usize) -> Result<Vec<CatalogEntry>> {
    let (numbering, groups) = match order {
        0 => (Numbering::Standard, Vec::new()),
        1..=31 | 33..=35 => (Numbering::Standard, standard(order)),
        32 | 36 => {
            let smaller = |m: usize| {
                catalog_order(m)
                    .map(|es| es.iter().map(|e| e.group.clone()).collect())
                    .unwrap_or_default()
            };
            let groups = groups_of_order(order, &smaller)?
                .into_iter()
                .enumerate()
                .map(|(i, g)| {
                    let name = if i == 0 {
                        format!("C{order}")
                    } else {
                        format!("G{order}_{}", i + 1)
                    };
                    (name, g)
                })
                .collect();
            (Numbering::Local, groups)
        }
        37..=MAX_CATALOG_ORDER => {
            let mut groups = vec![(format!("C{order}"), cyclic_group(order))];
            if order == 64 {
                groups.push((
                    "C8 x C8".to_string(),
                    direct_product(&cyclic_group(8), &cyclic_group(8)),
                ));
            }
            let numbering = if is_prime_power(order) {
                Numbering::Standard
            } else {
                Numbering::Local
            };
            (numbering, groups)
        }
        _ => (Numbering::Standard, Vec::new()),
    };
    Ok(groups
        .into_iter()
        .enumerate()
        .map(|(i, (name, group))| CatalogEntry {
            id: CatalogId::new(order, i + 1),
            group: group.with_label(name.clone()),
            name,
            numbering,
        })
        .collect())
}

fn is_prime_power(n: usize) -> bool {
    let p = (2..=n).find(|p| n.is_multiple_of(*p)).unwrap_or(n);
    let mut m = n;
    while m.is_multiple_of(p) && m > 1 {
        m /= p;
    }
    m == 1
}

fn c(n: usize) -> Group {
    cyclic_group(n)
}

fn x(g: &Group, h: &Group) -> Group {
    direct_product(g, h)
}

fn dihedral(n: usize) -> Group {
    metacyclic(n, 2, n - 1, 0).expect("dihedral relations")
}

fn meta(n: usize, m: usize, r: usize, s: usize) -> Group {
    metacyclic(n, m, r, s).expect("catalog relations")
}

/// `normal : complement` where `k` acts by inversion when `inverts(k)`.
fn inversion_by(normal: &Group, complement: &Group, inverts: impl Fn(usize) -> bool) -> Group {
    semidirect(normal, complement, |k| {
        (0..normal.order())
            .map(|n| if inverts(k) { normal.inv(n) } else { n })
            .collect()
    })
}

fn standard(order: usize) -> Vec<(String, Group)> {
    let s3 = || dihedral(3);
    let d8 = || dihedral(4);
    let q8 = || meta(4, 2, 3, 2);
    let c2c2 = || x(&c(2), &c(2));
    let list: Vec<(&str, Group)> = match order {
        4 => vec![("C4", c(4)), ("C2 x C2", c2c2())],
        6 => vec![("S3", s3()), ("C6", c(6))],
        8 => vec![
            ("C8", c(8)),
            ("C4 x C2", x(&c(4), &c(2))),
            ("D8", d8()),
            ("Q8", q8()),
            ("C2 x C2 x C2", x(&c2c2(), &c(2))),
        ],
        9 => vec![("C9", c(9)), ("C3 x C3", x(&c(3), &c(3)))],
        10 | 14 | 22 | 26 | 34 => {
            return vec![
                (format!("D{order}"), dihedral(order / 2)),
                (format!("C{order}"), c(order)),
            ];
        }
        12 => vec![
            ("C3 : C4", meta(3, 4, 2, 0)),
            ("C12", c(12)),
            ("A4", alternating4()),
            ("D12", dihedral(6)),
            ("C6 x C2", x(&c(6), &c(2))),
        ],
        16 => {
            let c4c2 = x(&c(4), &c(2));
            // (i, j) in C4 x C2 sits at index 2i + j
            let twist = |f: fn(usize, usize) -> (usize, usize)| {
                let base = c4c2.clone();
                semidirect(&base, &c(2), move |k| {
                    (0..8)
                        .map(|n| {
                            let (i, j) = if k == 0 {
                                (n / 2, n % 2)
                            } else {
                                f(n / 2, n % 2)
                            };
                            2 * i + j
                        })
                        .collect()
                })
            };
            vec![
                ("C16", c(16)),
                ("C4 x C4", x(&c(4), &c(4))),
                ("(C4 x C2) : C2", twist(|i, j| (i, (j + i) % 2))),
                ("C4 : C4", meta(4, 4, 3, 0)),
                ("C8 x C2", x(&c(8), &c(2))),
                ("C8 : C2", meta(8, 2, 5, 0)),
                ("D16", dihedral(8)),
                ("QD16", meta(8, 2, 3, 0)),
                ("Q16", meta(8, 2, 7, 4)),
                ("C4 x C2 x C2", x(&c4c2, &c(2))),
                ("C2 x D8", x(&c(2), &d8())),
                ("C2 x Q8", x(&c(2), &q8())),
                ("C4 o D8", twist(|i, j| ((i + 2 * j) % 4, j))),
                ("C2 x C2 x C2 x C2", x(&c2c2(), &c2c2())),
            ]
        }
        18 => vec![
            ("D18", dihedral(9)),
            ("C18", c(18)),
            ("C3 x S3", x(&c(3), &s3())),
            (
                "(C3 x C3) : C2",
                inversion_by(&x(&c(3), &c(3)), &c(2), |k| k == 1),
            ),
            ("C6 x C3", x(&c(6), &c(3))),
        ],
        20 => vec![
            ("C5 : C4", meta(5, 4, 4, 0)),
            ("C20", c(20)),
            ("F20", meta(5, 4, 2, 0)),
            ("D20", dihedral(10)),
            ("C10 x C2", x(&c(10), &c(2))),
        ],
        21 => vec![("C7 : C3", meta(7, 3, 2, 0)), ("C21", c(21))],
        24 => vec![
            ("C3 : C8", meta(3, 8, 2, 0)),
            ("C24", c(24)),
            ("SL(2,3)", sl23()),
            ("C3 : Q8", meta(12, 2, 11, 6)),
            ("C4 x S3", x(&c(4), &s3())),
            ("D24", dihedral(12)),
            ("C2 x (C3 : C4)", x(&c(2), &meta(3, 4, 2, 0))),
            // D8 element a^i b^j sits at index 4j + i; inverts C3 when i is odd
            ("C3 : D8", inversion_by(&c(3), &d8(), |k| k % 2 == 1)),
            ("C12 x C2", x(&c(12), &c(2))),
            ("C3 x D8", x(&c(3), &d8())),
            ("C3 x Q8", x(&c(3), &q8())),
            ("S4", symmetric4()),
            ("C2 x A4", x(&c(2), &alternating4())),
            ("C2 x C2 x S3", x(&c2c2(), &s3())),
            ("C6 x C2 x C2", x(&c(6), &c2c2())),
        ],
        25 => vec![("C25", c(25)), ("C5 x C5", x(&c(5), &c(5)))],
        27 => {
            let c3c3 = x(&c(3), &c(3));
            // (i, j) in C3 x C3 sits at index 3i + j
            let heisenberg = semidirect(&c3c3, &c(3), |k| {
                (0..9)
                    .map(|n| 3 * (n / 3) + (n % 3 + k * (n / 3)) % 3)
                    .collect()
            });
            vec![
                ("C27", c(27)),
                ("C9 x C3", x(&c(9), &c(3))),
                ("(C3 x C3) : C3", heisenberg),
                ("C9 : C3", meta(9, 3, 4, 0)),
                ("C3 x C3 x C3", x(&c3c3, &c(3))),
            ]
        }
        28 => vec![
            ("C7 : C4", meta(7, 4, 6, 0)),
            ("C28", c(28)),
            ("D28", dihedral(14)),
            ("C14 x C2", x(&c(14), &c(2))),
        ],
        30 => vec![
            ("C5 x S3", x(&c(5), &s3())),
            ("C3 x D10", x(&c(3), &dihedral(5))),
            ("D30", dihedral(15)),
            ("C30", c(30)),
        ],
        _ => return vec![(format!("C{order}"), c(order))],
    };
    list.into_iter().map(|(n, g)| (n.to_string(), g)).collect()
}
