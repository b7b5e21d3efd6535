use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::partition::{Composition, Partition};
use crate::error::{Error, Result};

/// An r-partition `(λ^(1), ..., λ^(r))`.
///
/// Serializes as an array of arrays; displays as `(3,2;2,1,1;-)` with `-`
/// marking an empty component.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Partition>", into = "Vec<Partition>")]
pub struct MultiPartition {
    components: Vec<Partition>,
}

impl MultiPartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::ZeroLevel);
        }
        Ok(MultiPartition { components })
    }

    /// Convenience constructor from raw parts; panics on malformed input.
    /// Intended for literals in tests and examples.
    pub fn from_parts(parts: &[&[usize]]) -> Self {
        let components = parts
            .iter()
            .map(|c| Partition::new(c.to_vec()).expect("weakly decreasing parts"))
            .collect();
        MultiPartition::new(components).expect("level >= 1")
    }

    /// The label with every component empty except `λ^(r) = ν`.
    pub fn last_slot(nu: Partition, r: usize) -> Self {
        let mut components = vec![Partition::empty(); r.max(1)];
        components[r.max(1) - 1] = nu;
        MultiPartition { components }
    }

    pub fn level(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    /// Component `i`, 1-based as in `λ^(i)`.
    pub fn component(&self, i: usize) -> &Partition {
        &self.components[i - 1]
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    /// The sizes `(|λ^(1)|, ..., |λ^(r)|)`.
    pub fn sizes(&self) -> Vec<usize> {
        self.components.iter().map(Partition::size).collect()
    }

    /// Largest number of rows over all components.
    pub fn depth(&self) -> usize {
        self.components.iter().map(Partition::len).max().unwrap_or(0)
    }

    /// `n(λ) = Σ_i n(λ^(i))`.
    pub fn n_invariant(&self) -> usize {
        self.components.iter().map(Partition::n_invariant).sum()
    }

    /// `λ^(1) + ... + λ^(r)`, the Jordan type of `x` on a stratum point.
    pub fn total(&self) -> Partition {
        self.partial_total(self.level())
    }

    /// `λ^(1) + ... + λ^(i)`.
    pub fn partial_total(&self, i: usize) -> Partition {
        self.components[..i]
            .iter()
            .fold(Partition::empty(), |acc, c| acc.add_pointwise(c))
    }

    /// Row `j` (0-based) summed over components `lo..=hi` (1-based, inclusive).
    /// Empty ranges give zero, matching the `λ^(0) = 0` convention.
    pub fn row_sum(&self, j: usize, lo: usize, hi: usize) -> usize {
        if lo > hi || hi == 0 {
            return 0;
        }
        (lo.max(1)..=hi).map(|i| self.component(i).get(j)).sum()
    }

    /// Interleaved reading `(λ^(1)_1, ..., λ^(r)_1, λ^(1)_2, ...)`.
    pub fn c_composition(&self) -> Composition {
        let depth = self.depth();
        let mut entries = Vec::with_capacity(depth * self.level());
        for j in 0..depth {
            for c in &self.components {
                entries.push(c.get(j));
            }
        }
        Composition::new(entries)
    }

    /// Dominance: `self ≤ other` iff `c(self) ≤ c(other)`.
    pub fn dominance_le(&self, other: &MultiPartition) -> Result<bool> {
        self.check_same_shape(other)?;
        Ok(self.c_composition().dominated_by(&other.c_composition()))
    }

    fn check_same_shape(&self, other: &MultiPartition) -> Result<()> {
        if self.size() != other.size() || self.level() != other.level() {
            return Err(Error::ShapeMismatch {
                n1: self.size(),
                r1: self.level(),
                n2: other.size(),
                r2: other.level(),
            });
        }
        Ok(())
    }

    /// All r-partitions of `n`, sorted lexicographically by c-composition.
    pub fn enumerate(n: usize, r: usize) -> Vec<MultiPartition> {
        assert!(r >= 1, "level must be at least 1");
        let mut out = Vec::new();
        let mut sizes = vec![0; r];
        for_each_sizes(n, 0, &mut sizes, &mut |s| {
            out.extend(MultiPartition::with_sizes(s));
        });
        sort_by_c(&mut out);
        out
    }

    /// All r-partitions with `|λ^(i)| = sizes[i]`, sorted by c-composition.
    pub fn with_sizes(sizes: &[usize]) -> Vec<MultiPartition> {
        let pools: Vec<Vec<Partition>> = sizes.iter().map(|&m| Partition::all(m)).collect();
        let mut out = vec![Vec::with_capacity(sizes.len())];
        for pool in &pools {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<Partition>| {
                    pool.iter().map(move |p| {
                        let mut next = prefix.clone();
                        next.push(p.clone());
                        next
                    })
                })
                .collect();
        }
        let mut out: Vec<MultiPartition> = out
            .into_iter()
            .map(|components| MultiPartition { components })
            .collect();
        sort_by_c(&mut out);
        out
    }
}

fn for_each_sizes(rest: usize, i: usize, sizes: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if i + 1 == sizes.len() {
        sizes[i] = rest;
        f(sizes);
        return;
    }
    for m in 0..=rest {
        sizes[i] = m;
        for_each_sizes(rest - m, i + 1, sizes, f);
    }
}

pub(crate) fn sort_by_c(labels: &mut [MultiPartition]) {
    labels.sort_by_cached_key(|l| (l.level(), l.c_composition()));
}

impl TryFrom<Vec<Partition>> for MultiPartition {
    type Error = Error;

    fn try_from(components: Vec<Partition>) -> Result<Self> {
        MultiPartition::new(components)
    }
}

impl From<MultiPartition> for Vec<Partition> {
    fn from(m: MultiPartition) -> Self {
        m.components
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Parses the display form, e.g. `(2,1;-;1)`.
impl FromStr for MultiPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .unwrap_or(t);
        let components = inner
            .split(';')
            .map(|c| {
                c.parse::<Partition>()
                    .map_err(|_| Error::Parse { what: "multipartition", input: s.to_string() })
            })
            .collect::<Result<Vec<_>>>()?;
        MultiPartition::new(components)
    }
}

/// A double partition `(ν', ν'')`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BiPartition {
    pub first: Partition,
    pub second: Partition,
}

impl BiPartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        BiPartition { first, second }
    }

    pub fn size(&self) -> usize {
        self.first.size() + self.second.size()
    }

    pub fn n_invariant(&self) -> usize {
        self.first.n_invariant() + self.second.n_invariant()
    }

    pub fn to_multi(&self) -> MultiPartition {
        MultiPartition { components: vec![self.first.clone(), self.second.clone()] }
    }
}

impl Add for &BiPartition {
    type Output = BiPartition;

    fn add(self, rhs: &BiPartition) -> BiPartition {
        BiPartition {
            first: self.first.add_pointwise(&rhs.first),
            second: self.second.add_pointwise(&rhs.second),
        }
    }
}

impl fmt::Display for BiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};{})", self.first, self.second)
    }
}
