//! The map from partitions to double partitions that records which
//! symplectic orbit a `GL_m`-orbit induces to, and the centralizer-dimension
//! bookkeeping that goes with it.

use super::multi::{BiPartition, MultiPartition};
use super::partition::Partition;
use crate::error::{Error, Result};

/// Writes `ν` as a sum of rectangles `(a_1)^{k_1} + (a_2)^{k_2} + ...` with
/// `k_1 > k_2 > ... > 0`. Returns the `(a, k)` pairs in that order.
///
/// The `k_i` are the distinct column heights of `ν` and `a_i` their
/// multiplicities in the dual partition.
pub fn rectangular_decomposition(nu: &Partition) -> Vec<(usize, usize)> {
    let dual = nu.dual();
    let mut out: Vec<(usize, usize)> = Vec::new();
    for &k in dual.parts() {
        match out.last_mut() {
            Some((a, last_k)) if *last_k == k => *a += 1,
            _ => out.push((1, k)),
        }
    }
    out
}

/// `[ν]`: each rectangle `(a^k)` splits into `(a^{⌈k/2⌉}, a^{⌊k/2⌋})`, and the
/// pieces are added componentwise.
pub fn bracket_nu(nu: &Partition) -> BiPartition {
    rectangular_decomposition(nu)
        .into_iter()
        .map(|(a, k)| {
            let upper = k.div_ceil(2);
            BiPartition::new(Partition::rectangle(a, upper), Partition::rectangle(a, k - upper))
        })
        .fold(BiPartition::default(), |acc, b| &acc + &b)
}

/// `[λ] = [λ^(1)] + ... + [λ^(r-2)] + (λ^(r-1), λ^(r))`. Needs `r ≥ 2`.
pub fn bracket_label(label: &MultiPartition) -> Result<BiPartition> {
    let r = label.level();
    if r < 2 {
        return Err(Error::LevelTooSmall { min: 2, r });
    }
    let tail = BiPartition::new(label.component(r - 1).clone(), label.component(r).clone());
    Ok(label.components()[..r - 2]
        .iter()
        .map(bracket_nu)
        .fold(tail, |acc, b| &acc + &b))
}

/// Per-component centralizer identity: `n(λ) = |λ| + 2 n([λ]) - |ν'|` where
/// `[λ] = (ν', ν'')`.
pub fn check_centralizer_identity(lambda: &Partition) -> bool {
    let b = bracket_nu(lambda);
    let lhs = lambda.n_invariant() as i64;
    let rhs = lambda.size() as i64 + 2 * b.n_invariant() as i64 - b.first.size() as i64;
    lhs == rhs
}

/// Centralizer dimension in `Sp_{2n}` of a point of the exotic orbit labelled
/// by `(ν', ν'')`: `3n + 4 n(ν', ν'') - 2|ν'|`.
pub fn dim_centralizer_symplectic(bi: &BiPartition) -> i64 {
    3 * bi.size() as i64 + 4 * bi.n_invariant() as i64 - 2 * bi.first.size() as i64
}

/// Centralizer dimension in the Levi `L^θ` of a point of type `λ`:
/// `Σ_{i ≤ r-2} (m_i + 2n(λ^(i))) + 3m' + 4n(λ^(r-1) + λ^(r)) - 2|λ^(r-1)|`
/// with `m_i = |λ^(i)|` and `m' = |λ^(r-1)| + |λ^(r)|`. Needs `r ≥ 2`.
pub fn dim_centralizer_levi(label: &MultiPartition) -> Result<i64> {
    let r = label.level();
    if r < 2 {
        return Err(Error::LevelTooSmall { min: 2, r });
    }
    let head: i64 = label.components()[..r - 2]
        .iter()
        .map(|c| c.size() as i64 + 2 * c.n_invariant() as i64)
        .sum();
    let (a, b) = (label.component(r - 1), label.component(r));
    let m_tail = (a.size() + b.size()) as i64;
    let tail_n = a.add_pointwise(b).n_invariant() as i64;
    Ok(head + 3 * m_tail + 4 * tail_n - 2 * a.size() as i64)
}
