use std::collections::HashMap;

use super::FiniteGroup;
use crate::error::{Error, Result};

/// Largest permutation group materialized from generators.
pub const PERM_GROUP_BOUND: usize = 2048;

/// A permutation of `0..degree`, stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Permutation(pub Vec<usize>);

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation((0..degree).collect())
    }

    /// Parses cycle notation with 1-based points, e.g. `(1,2,3)(4,5)`.
    /// An empty string or `()` is the identity.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self> {
        let mut img: Vec<usize> = (0..degree).collect();
        let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut rest = text.as_str();
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in `{text}`")))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in `{text}`")))?;
            let body = &open[..close];
            rest = &open[close + 1..];
            if body.is_empty() {
                continue;
            }
            let points = body
                .split(',')
                .map(|p| {
                    let v: usize = p
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad point `{p}`")))?;
                    if v == 0 || v > degree {
                        return Err(Error::Parse(format!("point {v} outside 1..={degree}")));
                    }
                    Ok(v - 1)
                })
                .collect::<Result<Vec<_>>>()?;
            let mut seen = points.clone();
            seen.sort_unstable();
            seen.dedup();
            if seen.len() != points.len() {
                return Err(Error::Parse(format!("repeated point in cycle `({body})`")));
            }
            // points pass through the cycles left to right
            let mut cyc: Vec<usize> = (0..degree).collect();
            for (i, &p) in points.iter().enumerate() {
                cyc[p] = points[(i + 1) % points.len()];
            }
            img = img.iter().map(|&x| cyc[x]).collect();
        }
        Ok(Permutation(img))
    }

    /// `(self * other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&x| self.0[x]).collect())
    }
}

impl FiniteGroup {
    /// Closes a set of permutations under composition. Elements are indexed
    /// in breadth-first order from the identity over the generator list.
    pub fn from_permutations(name: &str, degree: usize, gens: &[Permutation]) -> Result<Self> {
        let id = Permutation::identity(degree);
        let mut elems = vec![id.clone()];
        let mut index: HashMap<Permutation, usize> = HashMap::from([(id, 0)]);
        let mut i = 0;
        while i < elems.len() {
            for g in gens {
                let y = elems[i].compose(g);
                if !index.contains_key(&y) {
                    if elems.len() >= PERM_GROUP_BOUND {
                        return Err(Error::OrderBound {
                            order: elems.len() + 1,
                            bound: PERM_GROUP_BOUND,
                        });
                    }
                    index.insert(y.clone(), elems.len());
                    elems.push(y);
                }
            }
            i += 1;
        }
        let n = elems.len();
        let mut table = Vec::with_capacity(n * n);
        for a in &elems {
            for b in &elems {
                table.push(index[&a.compose(b)] as u32);
            }
        }
        FiniteGroup::from_table(name, n, table)
    }
}

/// Reads the group input format: a header line `perm-group degree=N`
/// followed by one generator per line in cycle notation. Blank lines and
/// lines starting with `#` are ignored.
pub fn parse_perm_group(name: &str, text: &str) -> Result<FiniteGroup> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty group file".into()))?;
    let degree = header
        .strip_prefix("perm-group")
        .map(str::trim)
        .and_then(|r| r.strip_prefix("degree="))
        .and_then(|d| d.trim().parse::<usize>().ok())
        .ok_or_else(|| Error::Parse(format!("bad header `{header}`")))?;
    let gens = lines
        .map(|l| Permutation::parse_cycles(degree, l))
        .collect::<Result<Vec<_>>>()?;
    FiniteGroup::from_permutations(name, degree, &gens)
}
