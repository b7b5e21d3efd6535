use rand::Rng;
use serde::{Deserialize, Serialize};

use super::point::EnhancedPoint;
use crate::error::{Error, Result};
use crate::field::{jordan_index, jordan_matrix, PrimeField, Vector};
use crate::partitions::MultiPartition;

/// `λ^(1)_j + ... + λ^(i)_j` for row `j` (1-based).
fn prefix(label: &MultiPartition, i: usize, j: usize) -> usize {
    label.row_sum(j - 1, 1, i)
}

/// The standard element of type `label`.
///
/// `x` is the Jordan matrix of type `ν = λ^(1) + ... + λ^(r)` and
/// `v_i = Σ_j u_{j, λ^(1)_j + ... + λ^(i)_j}` with `u_{j,0} = 0`.
pub fn standard_element(label: &MultiPartition, field: PrimeField) -> EnhancedPoint {
    let coeffs = SemiStandardCoeffs::standard(label);
    semi_standard_element(label, field, &coeffs).expect("standard coefficients are admissible")
}

/// Coefficients `a_{j,k}` of a semi-standard element, one block per `v_i`.
///
/// `blocks[i-1][j-1]` lists `a_{j,1}, ..., a_{j,P}` with
/// `P = λ^(1)_j + ... + λ^(i)_j`; the last entry must be nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemiStandardCoeffs {
    pub blocks: Vec<Vec<Vec<u64>>>,
}

impl SemiStandardCoeffs {
    /// All `a_{j,k} = 0` except the leading ones, which are `1`.
    pub fn standard(label: &MultiPartition) -> Self {
        Self::build(label, |len, k| u64::from(k + 1 == len))
    }

    /// Uniform over admissible tuples: leading coefficients in `F_q^*`, the
    /// rest in `F_q`.
    pub fn sample<R: Rng + ?Sized>(label: &MultiPartition, field: PrimeField, rng: &mut R) -> Self {
        let q = field.q();
        Self::build(label, |len, k| if k + 1 == len { rng.gen_range(1..q) } else { rng.gen_range(0..q) })
    }

    fn build(label: &MultiPartition, mut entry: impl FnMut(usize, usize) -> u64) -> Self {
        let rows = label.total().len();
        let blocks = (1..label.level())
            .map(|i| {
                (1..=rows)
                    .map(|j| {
                        let len = prefix(label, i, j);
                        (0..len).map(|k| entry(len, k)).collect()
                    })
                    .collect()
            })
            .collect();
        SemiStandardCoeffs { blocks }
    }

    fn validate(&self, label: &MultiPartition, field: PrimeField) -> Result<()> {
        let rows = label.total().len();
        let r = label.level();
        if self.blocks.len() != r - 1 {
            return Err(Error::BadCoefficients(format!(
                "expected {} vectors, got {}",
                r - 1,
                self.blocks.len()
            )));
        }
        for (i0, block) in self.blocks.iter().enumerate() {
            if block.len() != rows {
                return Err(Error::BadCoefficients(format!(
                    "v_{} needs {} rows, got {}",
                    i0 + 1,
                    rows,
                    block.len()
                )));
            }
            for (j0, a) in block.iter().enumerate() {
                let len = prefix(label, i0 + 1, j0 + 1);
                if a.len() != len {
                    return Err(Error::BadCoefficients(format!(
                        "v_{} row {} needs {} coefficients, got {}",
                        i0 + 1,
                        j0 + 1,
                        len,
                        a.len()
                    )));
                }
                for &c in a {
                    field.check(c)?;
                }
                if len > 0 && a[len - 1] == 0 {
                    return Err(Error::BadCoefficients(format!(
                        "leading coefficient a_{{{},{}}} of v_{} is zero",
                        j0 + 1,
                        len,
                        i0 + 1
                    )));
                }
            }
        }
        Ok(())
    }
}

/// `w_i = Σ_j Σ_{k ≤ λ^(1)_j + ... + λ^(i)_j} a_{j,k} u_{j,k}` on the Jordan
/// matrix of type `ν`.
pub fn semi_standard_element(
    label: &MultiPartition,
    field: PrimeField,
    coeffs: &SemiStandardCoeffs,
) -> Result<EnhancedPoint> {
    coeffs.validate(label, field)?;
    let nu = label.total();
    let n = nu.size();
    let x = jordan_matrix(field, &nu);
    let vs = coeffs
        .blocks
        .iter()
        .map(|block| {
            let mut e = vec![0; n];
            for (j0, a) in block.iter().enumerate() {
                for (k0, &c) in a.iter().enumerate() {
                    e[jordan_index(&nu, j0 + 1, k0 + 1)] = c;
                }
            }
            Vector::new(field, e).expect("entries are reduced")
        })
        .collect();
    Ok(EnhancedPoint::from_parts_unchecked(x, vs))
}
