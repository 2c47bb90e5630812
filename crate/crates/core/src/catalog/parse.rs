//! Permutation-group text files: `degree N` on the first line, then one
//! generator per line in cycle notation such as `(1 2 3)(4 5)`.

use crate::error::{Error, Result};
use crate::group::{group_from_generators, Group, Permutation};

pub fn parse_group_file(text: &str) -> Result<Group> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let degree = loop {
        match lines.next() {
            None => return Err(Error::parse(1, "missing `degree N` line")),
            Some((_, "")) => continue,
            Some((n, line)) => break parse_degree(n, line)?,
        }
    };
    let mut gens = Vec::new();
    for (n, line) in lines {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let cycles = parse_cycles(n, line)?;
        let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
        let perm = Permutation::from_cycles(degree, &refs).map_err(|e| match e {
            Error::InvalidArgument(m) => Error::parse(n, m),
            other => other,
        })?;
        gens.push(perm);
    }
    group_from_generators(degree, &gens)
}

fn parse_degree(n: usize, line: &str) -> Result<usize> {
    let mut words = line.split_whitespace();
    match (
        words.next(),
        words.next().map(str::parse::<usize>),
        words.next(),
    ) {
        (Some("degree"), Some(Ok(d)), None) if d > 0 => Ok(d),
        _ => Err(Error::parse(
            n,
            format!("expected `degree N`, found `{line}`"),
        )),
    }
}

fn parse_cycles(n: usize, line: &str) -> Result<Vec<Vec<usize>>> {
    let mut cycles = Vec::new();
    let mut rest = line;
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            return Err(Error::parse(n, format!("expected `(` at `{rest}`")));
        };
        let Some(close) = body.find(')') else {
            return Err(Error::parse(n, "unbalanced parenthesis"));
        };
        let inner = &body[..close];
        if inner.contains('(') {
            return Err(Error::parse(n, "unbalanced parenthesis"));
        }
        let points = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|w| !w.is_empty())
            .map(|w| {
                w.parse::<usize>()
                    .map_err(|_| Error::parse(n, format!("bad point `{w}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        cycles.push(points);
        rest = body[close + 1..].trim_start();
    }
    Ok(cycles)
}
