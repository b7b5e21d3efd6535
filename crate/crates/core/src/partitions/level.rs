use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::multi::{sort_by_c, MultiPartition};
use super::partition::Partition;
use crate::error::{Error, Result};

/// A level composition `m = (m_1, ..., m_r)` of `n`, an element of `Q_{n,r}`.
///
/// Serializes as a plain array of integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct LevelComposition {
    m: Vec<usize>,
}

impl LevelComposition {
    pub fn new(m: Vec<usize>) -> Result<Self> {
        if m.is_empty() {
            return Err(Error::ZeroLevel);
        }
        Ok(LevelComposition { m })
    }

    pub fn entries(&self) -> &[usize] {
        &self.m
    }

    /// `m_i`, 1-based.
    pub fn get(&self, i: usize) -> usize {
        self.m[i - 1]
    }

    pub fn level(&self) -> usize {
        self.m.len()
    }

    pub fn size(&self) -> usize {
        self.m.iter().sum()
    }

    /// `p(m) = (p_1, ..., p_r)` with `p_i = m_1 + ... + m_i`.
    pub fn partial_sums(&self) -> Vec<usize> {
        self.m
            .iter()
            .scan(0, |acc, &e| {
                *acc += e;
                Some(*acc)
            })
            .collect()
    }

    /// Membership in `Q⁰_{n,r}`: the last entry vanishes.
    pub fn is_zero_last(&self) -> bool {
        self.m.last() == Some(&0)
    }

    pub(crate) fn require_zero_last(&self) -> Result<()> {
        if self.is_zero_last() {
            Ok(())
        } else {
            Err(Error::LastEntryNonZero(self.m.clone()))
        }
    }

    /// Every `m ∈ Q_{n,r}` (or `Q⁰_{n,r}` when `zero_last`), in decreasing
    /// lexicographic order.
    pub fn enumerate(n: usize, r: usize, zero_last: bool) -> Vec<LevelComposition> {
        assert!(r >= 1, "level must be at least 1");
        let mut out = Vec::new();
        let mut cur = vec![0; r];
        compositions(n, 0, &mut cur, &mut out);
        if zero_last {
            out.retain(LevelComposition::is_zero_last);
        }
        out
    }

    /// `m ≤ m'` iff `p_i ≤ p'_i` for every `i`.
    ///
    /// Only the levels must agree. When the sizes differ the same partial-sum
    /// test applies, and `m ≤ m'` then forces `|m| ≤ |m'|`.
    pub fn le(&self, other: &LevelComposition) -> Result<bool> {
        if self.level() != other.level() {
            return Err(Error::ShapeMismatch {
                n1: self.size(),
                r1: self.level(),
                n2: other.size(),
                r2: other.level(),
            });
        }
        Ok(self
            .partial_sums()
            .iter()
            .zip(other.partial_sums())
            .all(|(a, b)| *a <= b))
    }

    /// `m(k) = (m_1, ..., m_{r-2}, k, m_{r-1} - k)` for `m ∈ Q⁰`.
    pub fn m_k(&self, k: usize) -> Result<LevelComposition> {
        self.require_zero_last()?;
        let r = self.level();
        if r < 2 {
            return Err(Error::LevelTooSmall { min: 2, r });
        }
        self.m_jk(r - 1, k)
    }

    /// `m(j,k)`: set `m'_j = k` and move the remainder `m_j - k` into slot
    /// `j + 1`. Indices are 1-based, `1 ≤ j ≤ r-1`, `0 ≤ k ≤ m_j`.
    pub fn m_jk(&self, j: usize, k: usize) -> Result<LevelComposition> {
        let r = self.level();
        if r < 2 {
            return Err(Error::LevelTooSmall { min: 2, r });
        }
        if j == 0 || j > r - 1 {
            return Err(Error::OutOfRange { what: "j", index: j, lo: 1, hi: r - 1 });
        }
        let mj = self.get(j);
        if k > mj {
            return Err(Error::OutOfRange { what: "k", index: k, lo: 0, hi: mj });
        }
        let mut m = self.m.clone();
        m[j - 1] = k;
        m[j] += mj - k;
        Ok(LevelComposition { m })
    }

    /// `Q(m; j, k)`: all `m' ≤ m` in `Q_{n,r}` with `p'_i = p_i` for `i < j`
    /// and `p'_j = p_{j-1} + k`.
    pub fn q_of(&self, j: usize, k: usize) -> Result<Vec<LevelComposition>> {
        let r = self.level();
        if r < 2 || j == 0 || j > r - 1 {
            return Err(Error::OutOfRange { what: "j", index: j, lo: 1, hi: r.saturating_sub(1) });
        }
        if k > self.get(j) {
            return Err(Error::OutOfRange { what: "k", index: k, lo: 0, hi: self.get(j) });
        }
        let p = self.partial_sums();
        let p_prev = if j >= 2 { p[j - 2] } else { 0 };
        let mut out = Vec::new();
        for cand in LevelComposition::enumerate(self.size(), r, false) {
            let pc = cand.partial_sums();
            if pc[..j - 1] == p[..j - 1] && pc[j - 1] == p_prev + k && cand.le(self)? {
                out.push(cand);
            }
        }
        Ok(out)
    }

    /// `λ(m)`: the one-row label `((m_1), ..., (m_r))`.
    pub fn lambda(&self) -> MultiPartition {
        MultiPartition::new(self.m.iter().map(|&mi| Partition::row(mi)).collect())
            .expect("level >= 1")
    }

    /// `P(m)`: labels with `|λ^(i)| = m_i`.
    pub fn labels(&self) -> Vec<MultiPartition> {
        MultiPartition::with_sizes(&self.m)
    }

    /// `P̃(m) = ⊔_{0 ≤ k ≤ m_{r-1}} P(m(k))` for `m ∈ Q⁰`.
    pub fn tilde_labels(&self) -> Result<Vec<MultiPartition>> {
        self.require_zero_last()?;
        let r = self.level();
        if r < 2 {
            return Err(Error::LevelTooSmall { min: 2, r });
        }
        let mut out = Vec::new();
        for k in 0..=self.get(r - 1) {
            out.extend(self.m_k(k)?.labels());
        }
        sort_by_c(&mut out);
        Ok(out)
    }

    /// Whether `label ∈ P(m)`.
    pub fn contains(&self, label: &MultiPartition) -> bool {
        label.sizes() == self.m
    }

    /// For `m ∈ Q⁰`: the `k` with `label ∈ P(m(k))`, if any.
    pub fn tilde_index(&self, label: &MultiPartition) -> Option<usize> {
        let r = self.level();
        if !self.is_zero_last() || r < 2 || label.level() != r {
            return None;
        }
        let s = label.sizes();
        let head_ok = s[..r - 2] == self.m[..r - 2];
        (head_ok && s[r - 2] + s[r - 1] == self.m[r - 2]).then_some(s[r - 2])
    }
}

fn compositions(rest: usize, i: usize, cur: &mut Vec<usize>, out: &mut Vec<LevelComposition>) {
    if i + 1 == cur.len() {
        cur[i] = rest;
        out.push(LevelComposition { m: cur.clone() });
        return;
    }
    for mi in (0..=rest).rev() {
        cur[i] = mi;
        compositions(rest - mi, i + 1, cur, out);
    }
}

impl TryFrom<Vec<usize>> for LevelComposition {
    type Error = Error;

    fn try_from(m: Vec<usize>) -> Result<Self> {
        LevelComposition::new(m)
    }
}

impl From<LevelComposition> for Vec<usize> {
    fn from(m: LevelComposition) -> Self {
        m.m
    }
}

impl fmt::Display for LevelComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.m.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Accepts `2,1,0` or `(2,1,0)`.
impl FromStr for LevelComposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse { what: "level composition", input: s.to_string() };
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let m = t
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| err()))
            .collect::<Result<Vec<_>>>()?;
        LevelComposition::new(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lc(v: &[usize]) -> LevelComposition {
        LevelComposition::new(v.to_vec()).unwrap()
    }

    fn mp(parts: &[&[usize]]) -> MultiPartition {
        MultiPartition::from_parts(parts)
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(
            LevelComposition::enumerate(2, 2, false),
            vec![lc(&[2, 0]), lc(&[1, 1]), lc(&[0, 2])]
        );
        assert_eq!(LevelComposition::enumerate(2, 2, true), vec![lc(&[2, 0])]);
        assert_eq!(LevelComposition::enumerate(3, 3, true).len(), 4);
    }

    #[test]
    fn order_examples() {
        let m = lc(&[2, 1, 0]);
        assert!(m.le(&m).unwrap());
        assert!(lc(&[1, 1, 0]).le(&m).unwrap());
        assert!(!lc(&[2, 0, 1]).le(&lc(&[1, 2, 0])).unwrap());
        assert!(!lc(&[1, 2, 0]).le(&lc(&[2, 0, 1])).unwrap());
        assert!(lc(&[1, 1]).le(&lc(&[1, 1, 0])).is_err());
        assert!(!m.le(&lc(&[1, 1, 0])).unwrap());
    }

    #[test]
    fn m_k_examples() {
        assert_eq!(lc(&[2, 1, 0]).m_k(1).unwrap(), lc(&[2, 1, 0]));
        assert_eq!(lc(&[2, 1, 0]).m_k(0).unwrap(), lc(&[2, 0, 1]));
        assert_eq!(lc(&[0, 3, 0]).m_k(2).unwrap(), lc(&[0, 2, 1]));
        assert!(lc(&[0, 3, 0]).m_k(4).is_err());
        assert!(lc(&[0, 2, 1]).m_k(0).is_err());
    }

    #[test]
    fn m_jk_examples() {
        let m = lc(&[2, 1, 0]);
        assert_eq!(m.m_jk(2, 0).unwrap(), lc(&[2, 0, 1]));
        assert_eq!(m.m_jk(2, 0).unwrap(), m.m_k(0).unwrap());
        assert_eq!(m.m_jk(1, 2).unwrap(), m);
        assert_eq!(m.m_jk(1, 0).unwrap(), lc(&[0, 3, 0]));
        assert!(m.m_jk(3, 0).is_err());
        assert!(m.m_jk(0, 0).is_err());
        assert!(m.m_jk(1, 3).is_err());
    }

    #[test]
    fn q_of_example() {
        assert_eq!(lc(&[1, 1, 0]).q_of(2, 0).unwrap(), vec![lc(&[1, 0, 1])]);
        // k = m_j keeps p_j, so m itself is always a member
        let m = lc(&[2, 1, 1]);
        assert!(m.q_of(2, 1).unwrap().contains(&m));
    }

    #[test]
    fn lambda_of_m() {
        assert_eq!(lc(&[2, 1, 0]).lambda(), mp(&[&[2], &[1], &[]]));
        assert_eq!(lc(&[0, 0, 4]).lambda(), mp(&[&[], &[], &[4]]));
        assert_eq!(lc(&[1, 1, 1]).lambda(), mp(&[&[1], &[1], &[1]]));
    }

    #[test]
    fn label_sets() {
        let got = lc(&[2, 0, 1]).labels();
        assert_eq!(got.len(), 2);
        assert!(got.contains(&mp(&[&[2], &[], &[1]])));
        assert!(got.contains(&mp(&[&[1, 1], &[], &[1]])));
        assert_eq!(lc(&[2, 1, 0]).tilde_labels().unwrap().len(), 4);
        assert_eq!(lc(&[3, 0]).tilde_labels().unwrap(), MultiPartition::enumerate(3, 2));
        assert!(lc(&[2, 1]).tilde_labels().is_err());
    }

    #[test]
    fn tilde_index_finds_k() {
        let m = lc(&[1, 2, 0]);
        assert_eq!(m.tilde_index(&mp(&[&[1], &[1], &[1]])), Some(1));
        assert_eq!(m.tilde_index(&mp(&[&[1], &[], &[2]])), Some(0));
        assert_eq!(m.tilde_index(&mp(&[&[], &[2], &[1]])), None);
    }
}
