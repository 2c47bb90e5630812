//! Text results library.
//!
//! ```text
//! difsets-results 1
//! group <order> <id>
//! params v=<v> k=<k> lambda=<lambda>
//! set <i1> <i2> ... <ik>
//! end <count>
//! ```
//!
//! One `params` block per admissible triple, each followed by its sets in
//! sorted order. `count` is the total number of `set` lines. Indices are
//! 1-based.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use crate::catalog::{catalog_group, CatalogId};
use crate::difference::{is_difference_set, DifferenceSet, Parameters};
use crate::enumerate::{Enumeration, SizeResult};
use crate::error::{Error, Result};

pub const FORMAT_VERSION: u32 = 1;
const MAGIC: &str = "difsets-results";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResultsFile {
    pub group: CatalogId,
    pub blocks: Vec<SizeResult>,
}

impl ResultsFile {
    pub fn new(group: CatalogId, enumeration: &Enumeration) -> Self {
        ResultsFile {
            group,
            blocks: enumeration.results.clone(),
        }
    }

    pub fn set_count(&self) -> usize {
        self.blocks.iter().map(|b| b.sets.len()).sum()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{MAGIC} {FORMAT_VERSION}").unwrap();
        writeln!(out, "group {} {}", self.group.order, self.group.id).unwrap();
        for block in &self.blocks {
            let p = block.params;
            writeln!(out, "params v={} k={} lambda={}", p.v, p.k, p.lambda).unwrap();
            for set in &block.sets {
                writeln!(out, "set {set}").unwrap();
            }
        }
        writeln!(out, "end {}", self.set_count()).unwrap();
        out
    }

    /// Parses the text form without checking the sets against the group.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.split('\n').enumerate().map(|(i, l)| (i + 1, l));
        let (n, header) = lines.next().unwrap_or((1, ""));
        match header.split_once(' ') {
            Some((MAGIC, v)) if v == FORMAT_VERSION.to_string() => {}
            Some((MAGIC, v)) => {
                return Err(Error::Version {
                    found: v.to_string(),
                })
            }
            _ => return Err(Error::parse(n, "missing results header")),
        }
        let (n, line) = lines
            .next()
            .ok_or_else(|| Error::parse(2, "missing group line"))?;
        let group = match numbers(n, line, "group")?[..] {
            [order, id] => CatalogId::new(order, id),
            _ => return Err(Error::parse(n, "expected `group <order> <id>`")),
        };
        let mut blocks: Vec<SizeResult> = Vec::new();
        let mut footer = None;
        for (n, line) in lines.by_ref() {
            if let Some(rest) = line.strip_prefix("params ") {
                blocks.push(SizeResult {
                    params: parse_params(n, rest)?,
                    sets: Vec::new(),
                });
            } else if line.starts_with("set ") || line == "set" {
                let block = blocks
                    .last_mut()
                    .ok_or_else(|| Error::parse(n, "set before params"))?;
                let indices = numbers(n, line, "set")?;
                let set = DifferenceSet::from_indices(group.order, &indices)
                    .map_err(|e| Error::parse(n, e.to_string()))?;
                block.sets.push(set);
            } else if line.starts_with("end") {
                match numbers(n, line, "end")?[..] {
                    [count] => footer = Some((n, count)),
                    _ => return Err(Error::parse(n, "expected `end <count>`")),
                }
                break;
            } else {
                return Err(Error::parse(n, format!("unexpected line `{line}`")));
            }
        }
        let Some((_, expected)) = footer else {
            return Err(Error::parse(
                text.lines().count().max(1),
                "missing end line",
            ));
        };
        if let Some((n, _)) = lines.find(|(_, l)| !l.is_empty()) {
            return Err(Error::parse(n, "content after end line"));
        }
        let rf = ResultsFile { group, blocks };
        let found = rf.set_count();
        if found != expected {
            return Err(Error::Checksum { expected, found });
        }
        Ok(rf)
    }

    /// Checks every set against the catalog group, its block parameters and
    /// the sorted order.
    pub fn verify(&self) -> Result<()> {
        let g = catalog_group(self.group)?;
        // line numbers follow the layout written by `to_text`
        let mut line = 2;
        for block in &self.blocks {
            line += 1;
            let mut prev: Option<&DifferenceSet> = None;
            for set in &block.sets {
                line += 1;
                let fail = |message: String| Error::Verification { line, message };
                match is_difference_set(&g, set) {
                    Some(p) if p == block.params => {}
                    Some(p) => {
                        return Err(fail(format!(
                            "set has parameters {p}, block says {}",
                            block.params
                        )))
                    }
                    None => return Err(fail(format!("`{set}` is not a difference set"))),
                }
                if prev.is_some_and(|q| q >= set) {
                    return Err(fail("sets are not in sorted order".into()));
                }
                prev = Some(set);
            }
        }
        Ok(())
    }
}

fn numbers(n: usize, line: &str, keyword: &str) -> Result<Vec<usize>> {
    let mut words = line.split(' ');
    if words.next() != Some(keyword) {
        return Err(Error::parse(n, format!("expected `{keyword}`")));
    }
    words
        .map(|w| {
            w.parse()
                .map_err(|_| Error::parse(n, format!("bad number `{w}`")))
        })
        .collect()
}

fn parse_params(n: usize, rest: &str) -> Result<Parameters> {
    let mut vals = [0usize; 3];
    let fields: Vec<&str> = rest.split(' ').collect();
    if fields.len() != 3 {
        return Err(Error::parse(n, "expected `params v=.. k=.. lambda=..`"));
    }
    for ((field, key), slot) in fields
        .iter()
        .zip(["v=", "k=", "lambda="])
        .zip(vals.iter_mut())
    {
        *slot = field
            .strip_prefix(key)
            .and_then(|x| x.parse().ok())
            .ok_or_else(|| Error::parse(n, format!("bad field `{field}`")))?;
    }
    Parameters::new(vals[0], vals[1], vals[2]).map_err(|e| Error::parse(n, e.to_string()))
}

/// Default file name for a catalog group inside a results directory.
pub fn results_path(dir: &Path, cid: CatalogId) -> PathBuf {
    dir.join(format!("difsets-{}-{}.txt", cid.order, cid.id))
}

pub fn write_results(path: &Path, rf: &ResultsFile) -> Result<()> {
    fs::write(path, rf.to_text()).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Reads, parses and verifies a results file.
pub fn read_results(path: &Path) -> Result<ResultsFile> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let rf = ResultsFile::parse(&text)?;
    rf.verify()?;
    Ok(rf)
}
