//! Closed-form dimensions of strata, their ambient unipotent varieties and
//! the resolutions above them.
//!
//! Everything is an exact signed integer. Conventions: `n = |λ|`, `r` is the
//! level, and sums over `i` run over the 1-based component index.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::level::LevelComposition;
use super::multi::MultiPartition;
use crate::error::{Error, Result};

/// Which of the two level-r spaces a formula refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Case {
    /// `GL(V) × V^{r-1}` with `dim V = n`.
    Enhanced,
    /// `G^{ιθ} × V^{r-1}` with `dim V = 2n`, acted on by `Sp(V)`.
    Exotic,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Case::Enhanced => "enhanced",
            Case::Exotic => "exotic",
        })
    }
}

impl FromStr for Case {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "enhanced" => Ok(Case::Enhanced),
            "exotic" => Ok(Case::Exotic),
            _ => Err(Error::Parse { what: "case", input: s.to_string() }),
        }
    }
}

fn weighted_sizes(label: &MultiPartition, shift: usize) -> i64 {
    let r = label.level();
    (1..r)
        .map(|i| ((r - i + shift) * label.component(i).size()) as i64)
        .sum()
}

fn weighted_m(m: &LevelComposition) -> i64 {
    let r = m.level();
    (1..=r).map(|i| ((r - i) * m.get(i)) as i64).sum()
}

/// Enhanced stratum: `n² - n - 2n(λ) + Σ_{i<r} (r-i)|λ^(i)|`.
pub fn dim_stratum_enhanced(label: &MultiPartition) -> i64 {
    let n = label.size() as i64;
    n * n - n - 2 * label.n_invariant() as i64 + weighted_sizes(label, 0)
}

/// Fibre of an enhanced stratum over a fixed `x`: `Σ_{i<r} (r-i)|λ^(i)|`.
pub fn dim_stratum_fibre(label: &MultiPartition) -> i64 {
    weighted_sizes(label, 0)
}

/// Exotic stratum:
/// `2n² - 2n - 2n(λ) - 2n(λ^(r-1) + λ^(r)) + Σ_{i<r} (r-i+1)|λ^(i)|`.
pub fn dim_stratum_exotic(label: &MultiPartition) -> Result<i64> {
    let r = label.level();
    if r < 2 {
        return Err(Error::LevelTooSmall { min: 2, r });
    }
    let n = label.size() as i64;
    let tail = label.component(r - 1).add_pointwise(label.component(r)).n_invariant() as i64;
    Ok(2 * n * n - 2 * n - 2 * label.n_invariant() as i64 - 2 * tail + weighted_sizes(label, 1))
}

pub fn dim_stratum(label: &MultiPartition, case: Case) -> Result<i64> {
    match case {
        Case::Enhanced => Ok(dim_stratum_enhanced(label)),
        Case::Exotic => dim_stratum_exotic(label),
    }
}

/// `dim X_{m,unip}`: `n² - n + Σ (r-i) m_i` (enhanced) or, for `m ∈ Q⁰`,
/// `2n² - n + Σ (r-i) m_i` (exotic).
pub fn dim_unipotent_variety(m: &LevelComposition, case: Case) -> Result<i64> {
    let n = m.size() as i64;
    match case {
        Case::Enhanced => Ok(n * n - n + weighted_m(m)),
        Case::Exotic => {
            m.require_zero_last()?;
            Ok(2 * n * n - n + weighted_m(m))
        }
    }
}

/// `dim X̃_m`: `2n² + Σ (r-i) m_i` (exotic) or `n² + Σ (r-i) m_i` (enhanced).
pub fn dim_resolution(m: &LevelComposition, case: Case) -> i64 {
    let n = m.size() as i64;
    let base = match case {
        Case::Enhanced => n * n,
        Case::Exotic => 2 * n * n,
    };
    base + weighted_m(m)
}

/// `dim X_m`: the resolution loses `m_r` dimensions in the exotic case and
/// none in the enhanced case.
pub fn dim_image(m: &LevelComposition, case: Case) -> i64 {
    match case {
        Case::Enhanced => dim_resolution(m, case),
        Case::Exotic => dim_resolution(m, case) - m.get(m.level()) as i64,
    }
}

/// Generic Springer-fibre dimension `d_λ`.
///
/// Exotic (`m ∈ Q⁰`, `λ ∈ P(m(k))`): `(m_{r-1} - k) + n(λ) + n(λ^(r-1) + λ^(r))`.
/// Enhanced (`λ ∈ P(m)`): `n(λ)`.
pub fn d_lambda(label: &MultiPartition, m: &LevelComposition, case: Case) -> Result<i64> {
    let incompatible = || Error::IncompatibleLabel { label: label.to_string(), m: m.entries().to_vec() };
    match case {
        Case::Enhanced => {
            if !m.contains(label) {
                return Err(incompatible());
            }
            Ok(label.n_invariant() as i64)
        }
        Case::Exotic => {
            m.require_zero_last()?;
            let k = m.tilde_index(label).ok_or_else(incompatible)?;
            let r = m.level();
            let tail = label.component(r - 1).add_pointwise(label.component(r)).n_invariant();
            Ok((m.get(r - 1) - k) as i64 + label.n_invariant() as i64 + tail as i64)
        }
    }
}

/// One row of a stratification table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumRecord {
    pub label: MultiPartition,
    pub case: Case,
    pub dim_x: i64,
    pub d_lambda: i64,
    pub ambient_dim: i64,
}

impl StratumRecord {
    pub fn new(label: &MultiPartition, m: &LevelComposition, case: Case) -> Result<Self> {
        Ok(StratumRecord {
            label: label.clone(),
            case,
            dim_x: dim_stratum(label, case)?,
            d_lambda: d_lambda(label, m, case)?,
            ambient_dim: dim_unipotent_variety(m, case)?,
        })
    }

    /// `ambient - dim X = 2 d_λ` and `d_λ ≥ 0`.
    pub fn is_consistent(&self) -> bool {
        self.d_lambda >= 0 && self.ambient_dim - self.dim_x == 2 * self.d_lambda
    }
}
