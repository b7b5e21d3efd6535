//! Module-span invariants that control closures of strata.

use super::point::EnhancedPoint;
use crate::error::{Error, Result};
use crate::field::{jordan_type, kx_span, quotient_action, Subspace};
use crate::partitions::{LevelComposition, MultiPartition, Partition};

/// Jordan type `ξ` of `x` on `V / k[x] v_i` for a semi-standard point of
/// type `label`:
/// `ξ_j = λ^(i+1)_j + ... + λ^(r)_j + λ^(1)_{j+1} + ... + λ^(i)_{j+1}`.
pub fn quotient_type_after_ui(label: &MultiPartition, i: usize) -> Result<Partition> {
    let r = label.level();
    if i == 0 || i >= r {
        return Err(Error::OutOfRange { what: "quotient level i", index: i, lo: 1, hi: r.saturating_sub(1) });
    }
    let rows = label.total().len();
    let xi = (0..rows)
        .map(|j| label.row_sum(j, i + 1, r) + label.row_sum(j + 1, 1, i))
        .collect();
    Partition::new(xi)
}

/// `dim k[x] v_i = λ^(1)_1 + ... + λ^(i)_1` on a semi-standard point.
pub fn cyclic_dim_formula(label: &MultiPartition, i: usize) -> usize {
    label.row_sum(0, 1, i)
}

fn check_k_a(label_rows: usize, r: usize, k: usize, a: usize) -> Result<()> {
    if a >= r {
        return Err(Error::OutOfRange { what: "generator index a", index: a, lo: 0, hi: r - 1 });
    }
    if k > label_rows {
        return Err(Error::OutOfRange { what: "extra generators k", index: k, lo: 0, hi: label_rows });
    }
    Ok(())
}

/// `Σ_{i ≤ k} ν_i + (λ^(1)_{k+1} + ... + λ^(a)_{k+1})`, the largest possible
/// dimension of `k[x] ⟨v_a, u_1, ..., u_k⟩` on a semi-standard point.
/// `a = 0` means no `v`. `k` ranges over `0..=ℓ(ν)`.
pub fn max_module_dim_formula(label: &MultiPartition, k: usize, a: usize) -> Result<usize> {
    let nu = label.total();
    check_k_a(nu.len(), label.level(), k, a)?;
    Ok(nu.head_sum(k) + label.row_sum(k, 1, a))
}

/// The same quantity measured on a concrete point: `dim U_a` plus the `k`
/// largest Jordan blocks of `x` on `V / U_a`, where `U_a = k[x] v_a`.
pub fn max_module_dim_oracle(p: &EnhancedPoint, k: usize, a: usize) -> Result<usize> {
    let nu = jordan_type(p.x())?;
    check_k_a(nu.len(), p.level(), k, a)?;
    let u = if a == 0 {
        Subspace::zero(p.field(), p.n())
    } else {
        kx_span(p.x(), &[p.v(a).clone()])?
    };
    let xi = jordan_type(&quotient_action(p.x(), &u)?)?;
    Ok(u.dim() + xi.head_sum(k))
}

/// `(dim k[x]⟨v_1, ..., v_i⟩)_{i = 1..r-1}`.
pub fn flag_dims(p: &EnhancedPoint) -> Result<Vec<usize>> {
    (1..p.level()).map(|i| kx_span(p.x(), &p.vs()[..i]).map(|s| s.dim())).collect()
}

fn check_shape(p: &EnhancedPoint, m: &LevelComposition) -> Result<()> {
    if m.level() != p.level() || m.size() != p.n() {
        return Err(Error::ShapeMismatch { n1: p.n(), r1: p.level(), n2: m.size(), r2: m.level() });
    }
    Ok(())
}

/// `flag_dims(p) = (p_1, ..., p_{r-1})` exactly.
pub fn in_stratum_open(p: &EnhancedPoint, m: &LevelComposition) -> Result<bool> {
    check_shape(p, m)?;
    let sums = m.partial_sums();
    Ok(flag_dims(p)? == sums[..p.level() - 1])
}

/// Membership in the closed set `X_{m,unip}`: some `x`-stable flag
/// `V_{p_1} ⊂ ... ⊂ V_{p_{r-1}}` has `v_i ∈ V_{p_i}`. This holds iff
/// `dim k[x]⟨v_1, ..., v_i⟩ ≤ p_i` for each `i`: choose the flag from the
/// top down, each time an `x`-stable subspace squeezed between the next
/// module span and the previous choice.
pub fn in_unipotent_variety(p: &EnhancedPoint, m: &LevelComposition) -> Result<bool> {
    check_shape(p, m)?;
    let sums = m.partial_sums();
    Ok(flag_dims(p)?.iter().zip(&sums).all(|(d, s)| d <= s))
}
