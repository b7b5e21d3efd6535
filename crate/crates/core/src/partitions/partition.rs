use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition: a weakly decreasing sequence of positive integers.
///
/// Stored without trailing zeros, so two partitions are equal exactly when
/// their Young diagrams are. Serializes as a plain JSON array of parts.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from its parts. Trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing(parts));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary nonnegative integers into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts.retain(|&p| p > 0);
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The one-row partition `(m)`, or the empty partition when `m == 0`.
    pub fn row(m: usize) -> Self {
        if m == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![m] }
        }
    }

    /// The rectangle `(a^k)`: `k` rows of length `a`.
    pub fn rectangle(a: usize, k: usize) -> Self {
        if a == 0 {
            return Partition::empty();
        }
        Partition { parts: vec![a; k] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `j` (0-based); zero past the last row.
    pub fn get(&self, j: usize) -> usize {
        self.parts.get(j).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Column lengths of the Young diagram.
    pub fn dual(&self) -> Partition {
        let width = self.get(0);
        let parts = (1..=width)
            .map(|k| self.parts.iter().take_while(|&&p| p >= k).count())
            .collect();
        Partition { parts }
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n_invariant(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// Componentwise sum `(λ_1 + μ_1, λ_2 + μ_2, ...)`.
    pub fn add_pointwise(&self, other: &Partition) -> Partition {
        let len = self.len().max(other.len());
        let parts = (0..len).map(|j| self.get(j) + other.get(j)).collect();
        Partition { parts }
    }

    /// Multiplicity of each part size: entry `i` is the number of parts equal
    /// to `i + 1`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut mult = vec![0; self.get(0)];
        for &p in &self.parts {
            mult[p - 1] += 1;
        }
        mult
    }

    /// Sum of the `k` largest parts.
    pub fn head_sum(&self, k: usize) -> usize {
        self.parts.iter().take(k).sum()
    }

    /// All partitions of `n`, in reverse lexicographic order (`(n)` first).
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill(n, n, &mut cur, &mut out);
        out
    }
}

fn fill(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        cur.push(p);
        fill(rest - p, p, cur, out);
        cur.pop();
    }
}

impl Add for &Partition {
    type Output = Partition;

    fn add(self, rhs: &Partition) -> Partition {
        self.add_pointwise(rhs)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Renders as comma-separated parts, `-` for the empty partition.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Accepts `3,2,1`, `(3,2,1)`, `-`, `()` or the empty string.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse { what: "partition", input: s.to_string() };
        let t = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if t.is_empty() || t == "-" {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| err()))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|_| err())
    }
}

/// A composition: a finite sequence of nonnegative integers.
///
/// Trailing zeros carry no meaning and are stripped on construction, so
/// `(1,0,1)` and `(1,0,1,0,0,0)` compare equal.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition {
    entries: Vec<usize>,
}

impl Composition {
    pub fn new(mut entries: Vec<usize>) -> Self {
        while entries.last() == Some(&0) {
            entries.pop();
        }
        Composition { entries }
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn get(&self, k: usize) -> usize {
        self.entries.get(k).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.entries.iter().sum()
    }

    /// Running sums `λ_1, λ_1 + λ_2, ...` over the stored entries.
    pub fn partial_sums(&self) -> Vec<usize> {
        self.entries
            .iter()
            .scan(0, |acc, &e| {
                *acc += e;
                Some(*acc)
            })
            .collect()
    }

    /// `λ ≤ μ` iff every partial sum of `λ` is at most the matching one of `μ`.
    pub fn dominated_by(&self, other: &Composition) -> bool {
        let len = self.entries.len().max(other.entries.len());
        let (mut a, mut b) = (0usize, 0usize);
        for k in 0..len {
            a += self.get(k);
            b += other.get(k);
            if a > b {
                return false;
            }
        }
        true
    }
}

impl From<Vec<usize>> for Composition {
    fn from(v: Vec<usize>) -> Self {
        Composition::new(v)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.entries
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition::new(p.parts.clone())
    }
}
