//! Dimension bookkeeping for `W(n,r) = S_n ⋉ (Z/rZ)^n` and its subgroups:
//!
//! - `W♮_m = S_{m_1} × ... × S_{m_{r-2}} × W_{m_{r-1}}` (exotic, `m ∈ Q⁰`),
//! - `W♮_m = S_{m_1} × ... × S_{m_r}` (enhanced),
//!
//! where `W_k` is the type-C Weyl group of order `2^k k!`. No characters are
//! computed, only dimensions and the label-level correspondence.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{Case, LevelComposition, MultiPartition, Partition, StratumRecord};

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

fn multinomial(parts: &[usize]) -> BigUint {
    let n: usize = parts.iter().sum();
    parts.iter().fold(factorial(n), |acc, &p| acc / factorial(p))
}

/// Product of the hook lengths of every cell of `lambda`.
pub fn hook_product(lambda: &Partition) -> BigUint {
    let dual = lambda.dual();
    let mut prod = BigUint::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = dual.get(j) - i - 1;
            prod *= arm + leg + 1;
        }
    }
    prod
}

/// Number of standard Young tableaux of shape `lambda`, `|λ|! / ∏ hooks`.
pub fn tableaux_count(lambda: &Partition) -> BigUint {
    factorial(lambda.size()) / hook_product(lambda)
}

/// `|W(n,r)| = r^n n!`.
pub fn order_wnr(n: usize, r: usize) -> BigUint {
    BigUint::from(r).pow(n as u32) * factorial(n)
}

fn require_exotic_m(m: &LevelComposition) -> Result<()> {
    if m.level() < 2 {
        return Err(Error::LevelTooSmall { min: 2, r: m.level() });
    }
    m.require_zero_last()
}

/// `|W♮_m|`.
pub fn order_wnat(m: &LevelComposition, case: Case) -> Result<BigUint> {
    match case {
        Case::Enhanced => Ok(m.entries().iter().map(|&k| factorial(k)).product()),
        Case::Exotic => {
            require_exotic_m(m)?;
            let r = m.level();
            let head: BigUint = m.entries()[..r - 2].iter().map(|&k| factorial(k)).product();
            let k = m.get(r - 1);
            Ok(head * BigUint::from(2u32).pow(k as u32) * factorial(k))
        }
    }
}

/// `dim` of the irreducible `W(n,r)`-module labelled by `label`:
/// `multinomial(n; |λ^(1)|, ..., |λ^(r)|) · ∏ f^{λ^(i)}`.
pub fn dim_irrep_wnr(label: &MultiPartition) -> BigUint {
    let prod: BigUint = label.components().iter().map(tableaux_count).product();
    multinomial(&label.sizes()) * prod
}

/// The same dimension as a single hook formula over all cells:
/// `n! / ∏_i ∏_{c ∈ λ^(i)} h(c)`.
pub fn dim_irrep_wnr_hooks(label: &MultiPartition) -> BigUint {
    let hooks: BigUint = label.components().iter().map(hook_product).product();
    factorial(label.size()) / hooks
}

/// `dim` of the irreducible `W♮_m`-module attached to `label`.
///
/// Exotic (`label ∈ P̃(m)`):
/// `∏_{i ≤ r-2} f^{λ^(i)} · C(m_{r-1}, |λ^(r-1)|) · f^{λ^(r-1)} · f^{λ^(r)}`.
/// Enhanced (`label ∈ P(m)`): `∏ f^{λ^(i)}`.
pub fn dim_irrep_wnat(label: &MultiPartition, m: &LevelComposition, case: Case) -> Result<BigUint> {
    let incompatible = || Error::IncompatibleLabel { label: label.to_string(), m: m.entries().to_vec() };
    let prod: BigUint = label.components().iter().map(tableaux_count).product();
    match case {
        Case::Enhanced => {
            if !m.contains(label) {
                return Err(incompatible());
            }
            Ok(prod)
        }
        Case::Exotic => {
            require_exotic_m(m)?;
            let k = m.tilde_index(label).ok_or_else(incompatible)?;
            let r = m.level();
            Ok(prod * multinomial(&[k, m.get(r - 1) - k]))
        }
    }
}

/// Second route to [`dim_irrep_wnr`] for an exotic label `label ∈ P̃(m)`:
/// `multinomial(n; m_1, ..., m_{r-1}) · dim_irrep_wnat(label, m)`.
pub fn dim_irrep_wnr_from_wnat(label: &MultiPartition, m: &LevelComposition) -> Result<BigUint> {
    let wnat = dim_irrep_wnat(label, m, Case::Exotic)?;
    Ok(multinomial(&m.entries()[..m.level() - 1]) * wnat)
}

/// `Σ_{λ ∈ P_{n,r}} (dim V_λ)² = r^n n!`.
pub fn regular_rep_check(n: usize, r: usize) -> bool {
    let sum: BigUint = MultiPartition::enumerate(n, r)
        .iter()
        .map(|l| {
            let d = dim_irrep_wnr(l);
            &d * &d
        })
        .sum();
    sum == order_wnr(n, r)
}

/// The labels indexing the irreducible `W♮_m`-modules: `P̃(m)` (exotic) or
/// `P(m)` (enhanced).
pub fn wnat_labels(m: &LevelComposition, case: Case) -> Result<Vec<MultiPartition>> {
    match case {
        Case::Enhanced => Ok(m.labels()),
        Case::Exotic => {
            require_exotic_m(m)?;
            m.tilde_labels()
        }
    }
}

/// `Σ (dim V♮)² = |W♮_m|` over the labels of `m`.
pub fn wnat_sum_of_squares(m: &LevelComposition, case: Case) -> Result<bool> {
    let mut sum = BigUint::zero();
    for l in wnat_labels(m, case)? {
        let d = dim_irrep_wnat(&l, m, case)?;
        sum += &d * &d;
    }
    Ok(sum == order_wnat(m, case)?)
}

/// Which group an [`IrrepRecord`] belongs to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "group", rename_all = "snake_case")]
pub enum GroupDescriptor {
    Wnr { n: usize, r: usize },
    Wnat { m: LevelComposition, case: Case },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IrrepRecord {
    pub label: MultiPartition,
    #[serde(serialize_with = "crate::bigser::serialize")]
    pub dim: BigUint,
    pub group: GroupDescriptor,
}

/// One row of the Springer table of `m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpringerRow {
    pub m: LevelComposition,
    pub wnat: IrrepRecord,
    /// The `W(n,r)` irreducible with the same label; exotic rows only.
    pub wnr: Option<IrrepRecord>,
    pub stratum: StratumRecord,
}

/// One row per label of `m`, in enumeration order.
pub fn springer_table(m: &LevelComposition, case: Case) -> Result<Vec<SpringerRow>> {
    let (n, r) = (m.size(), m.level());
    wnat_labels(m, case)?
        .into_iter()
        .map(|label| {
            let wnat = IrrepRecord {
                dim: dim_irrep_wnat(&label, m, case)?,
                label: label.clone(),
                group: GroupDescriptor::Wnat { m: m.clone(), case },
            };
            let wnr = (case == Case::Exotic).then(|| IrrepRecord {
                dim: dim_irrep_wnr(&label),
                label: label.clone(),
                group: GroupDescriptor::Wnr { n, r },
            });
            Ok(SpringerRow { m: m.clone(), wnat, wnr, stratum: StratumRecord::new(&label, m, case)? })
        })
        .collect()
}

/// Tables for every admissible `m` (`Q⁰_{n,r}` or `Q_{n,r}`), concatenated.
pub fn springer_tables(n: usize, r: usize, case: Case) -> Result<Vec<SpringerRow>> {
    if case == Case::Exotic && r < 2 {
        return Err(Error::LevelTooSmall { min: 2, r });
    }
    let zero_last = case == Case::Exotic;
    let mut rows = Vec::new();
    for m in LevelComposition::enumerate(n, r, zero_last) {
        rows.extend(springer_table(&m, case)?);
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn lc(v: &[usize]) -> LevelComposition {
        LevelComposition::new(v.to_vec()).unwrap()
    }

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn tableaux() {
        assert_eq!(tableaux_count(&p(&[4])), big(1));
        assert_eq!(tableaux_count(&p(&[1, 1, 1])), big(1));
        assert_eq!(tableaux_count(&p(&[2, 1])), big(2));
        assert_eq!(tableaux_count(&p(&[3, 2])), big(5));
        assert_eq!(tableaux_count(&Partition::empty()), big(1));
    }

    #[test]
    fn orders() {
        assert_eq!(order_wnr(2, 2), big(8));
        assert_eq!(order_wnat(&lc(&[1, 2, 0]), Case::Exotic).unwrap(), big(8));
        assert_eq!(order_wnat(&lc(&[1, 2]), Case::Enhanced).unwrap(), big(2));
        assert!(order_wnat(&lc(&[1, 2]), Case::Exotic).is_err());
    }

    #[test]
    fn wnr_dims() {
        let mp = MultiPartition::from_parts;
        assert_eq!(dim_irrep_wnr(&mp(&[&[3], &[]])), big(1));
        assert_eq!(dim_irrep_wnr(&mp(&[&[1], &[1]])), big(2));
        assert_eq!(dim_irrep_wnr(&mp(&[&[2], &[1]])), big(3));
    }

    #[test]
    fn wnat_dims() {
        let mp = MultiPartition::from_parts;
        assert_eq!(dim_irrep_wnat(&mp(&[&[], &[2], &[]]), &lc(&[0, 2, 0]), Case::Exotic).unwrap(), big(1));
        assert_eq!(dim_irrep_wnat(&mp(&[&[], &[1], &[1]]), &lc(&[0, 2, 0]), Case::Exotic).unwrap(), big(2));
        assert_eq!(dim_irrep_wnat(&mp(&[&[1], &[1]]), &lc(&[1, 1]), Case::Enhanced).unwrap(), big(1));
        assert!(dim_irrep_wnat(&mp(&[&[1], &[1]]), &lc(&[2, 0]), Case::Enhanced).is_err());
    }

    #[test]
    fn sums_of_squares() {
        assert!(regular_rep_check(2, 2));
        for r in 1..5 {
            assert!(regular_rep_check(1, r));
        }
        assert!(wnat_sum_of_squares(&lc(&[1, 2, 0]), Case::Exotic).unwrap());
        // S_1 × W_2 has 5 irreducibles: 1 + 1 + 4 + 1 + 1 = 8
        assert_eq!(wnat_labels(&lc(&[1, 2, 0]), Case::Exotic).unwrap().len(), 5);
    }

    #[test]
    fn tables() {
        assert_eq!(springer_tables(1, 3, Case::Exotic).unwrap().len(), 3);
        assert_eq!(springer_tables(2, 2, Case::Exotic).unwrap().len(), 5);
        let empty = springer_tables(0, 2, Case::Exotic).unwrap();
        assert_eq!(empty.len(), 1);
        assert_eq!(empty[0].stratum.label.size(), 0);
        let enhanced = springer_table(&lc(&[3, 0, 0]), Case::Enhanced).unwrap();
        assert_eq!(enhanced.len(), 3);
        for row in &enhanced {
            assert!(row.wnr.is_none());
            assert_eq!(row.stratum.d_lambda, row.stratum.label.component(1).n_invariant() as i64);
        }
    }
}
