//! Exhaustive counts over `F_q` and exact interpolation of the results.
//!
//! For a fixed unipotent `x` of type `ν` the stratum `X_λ` meets
//! `{x} × V^{r-1}` in `N_{λ,x}(q)` points, and
//! `|X_λ(F_q)| = |O_ν(F_q)| · N_{λ,x}(q)`. Only one Jordan representative
//! per `ν` is enumerated.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{centralizer_algebra, jordan_matrix, PrimeField, Vector};
use crate::orbits::classify_vectors;
use crate::partitions::{MultiPartition, Partition};

/// Default refusal threshold for [`count_types_for_x`].
pub const DEFAULT_BUDGET: u128 = 100_000_000;

/// `|GL_n(F_q)| = ∏_{i<n} (q^n - q^i)`.
pub fn gl_order(n: usize, q: u64) -> BigUint {
    let q = BigUint::from(q);
    let qn = q.pow(n as u32);
    (0..n).map(|i| &qn - q.pow(i as u32)).product()
}

/// `|Z_{GL_n}(x)|` for `x` unipotent of type `ν`:
/// `q^{2n(ν) + n} ∏_i ∏_{j ≤ mult_i(ν)} (1 - q^{-j})`, evaluated over `Q`.
pub fn centralizer_order(nu: &Partition, q: u64) -> BigUint {
    let qr = BigRational::from_integer(BigInt::from(q));
    let exp = 2 * nu.n_invariant() + nu.size();
    let mut acc = BigRational::from_integer(BigInt::from(q).pow(exp as u32));
    for &mult in &nu.multiplicities() {
        for j in 1..=mult {
            acc *= BigRational::one() - qr.pow(-(j as i32));
        }
    }
    assert!(acc.is_integer(), "centralizer order must be integral");
    acc.to_integer().to_biguint().expect("centralizer order is positive")
}

/// `|O_ν(F_q)| = |GL_n(F_q)| / |Z(x)|`.
pub fn orbit_size(nu: &Partition, q: u64) -> BigUint {
    let g = gl_order(nu.size(), q);
    let z = centralizer_order(nu, q);
    debug_assert!((&g % &z).is_zero());
    g / z
}

/// `q^{n(r-1)}`, the number of vector tuples for one `x`.
pub fn point_count(n: usize, r: usize, q: u64) -> u128 {
    (q as u128).checked_pow((n * (r - 1)) as u32).unwrap_or(u128::MAX)
}

/// Tallies the types of `(x, v_1, ..., v_{r-1})` over all `v`, with `x`
/// the Jordan matrix of type `nu`. Refuses jobs above `budget` points.
///
/// The tuple space is split into ranges counted in parallel and merged by
/// addition, so the result does not depend on scheduling.
pub fn count_types_for_x(
    nu: &Partition,
    q: u64,
    r: usize,
    budget: u128,
) -> Result<BTreeMap<MultiPartition, u64>> {
    if r == 0 {
        return Err(Error::ZeroLevel);
    }
    let field = PrimeField::new(q)?;
    let n = nu.size();
    let total = point_count(n, r, q);
    if total > budget {
        return Err(Error::BudgetExceeded { points: total, budget });
    }
    let total = total as u64;
    let x = jordan_matrix(field, nu);
    let centralizer = centralizer_algebra(&x)?;

    const CHUNK: u64 = 4096;
    let chunks = total.div_ceil(CHUNK);
    (0..chunks)
        .into_par_iter()
        .map(|c| -> Result<BTreeMap<MultiPartition, u64>> {
            let mut tally = BTreeMap::new();
            let mut digits = vec![0u64; n * (r - 1)];
            for idx in c * CHUNK..((c + 1) * CHUNK).min(total) {
                let mut rest = idx;
                for d in digits.iter_mut() {
                    *d = rest % q;
                    rest /= q;
                }
                let vs = (0..r - 1)
                    .map(|i| Vector::new(field, digits[i * n..(i + 1) * n].to_vec()))
                    .collect::<Result<Vec<_>>>()?;
                let label = classify_vectors(&x, &centralizer, &vs)?;
                *tally.entry(label).or_insert(0) += 1;
            }
            Ok(tally)
        })
        .try_reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            Ok(a)
        })
}

/// One line of a count table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountRecord {
    pub nu: Partition,
    pub label: MultiPartition,
    pub q: u64,
    pub count_v: u64,
    #[serde(serialize_with = "crate::bigser::serialize")]
    pub orbit_size: BigUint,
    #[serde(serialize_with = "crate::bigser::serialize")]
    pub stratum_count: BigUint,
}

/// [`count_types_for_x`] expanded into records, labels in enumeration order.
pub fn count_records(nu: &Partition, q: u64, r: usize, budget: u128) -> Result<Vec<CountRecord>> {
    let tally = count_types_for_x(nu, q, r, budget)?;
    let orbit = orbit_size(nu, q);
    let mut labels: Vec<MultiPartition> = tally.keys().cloned().collect();
    crate::partitions::sort_labels(&mut labels);
    Ok(labels
        .into_iter()
        .map(|label| {
            let count_v = tally[&label];
            CountRecord {
                nu: nu.clone(),
                q,
                count_v,
                stratum_count: &orbit * BigUint::from(count_v),
                orbit_size: orbit.clone(),
                label,
            }
        })
        .collect())
}

/// A polynomial with rational coefficients (constant term first) that
/// passes through the given samples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FittedPolynomial {
    pub coefficients: Vec<BigRational>,
    pub samples: Vec<(BigInt, BigInt)>,
}

impl FittedPolynomial {
    /// Lagrange interpolation through `samples`; the abscissae must be
    /// distinct.
    pub fn interpolate(samples: &[(BigInt, BigInt)]) -> Result<Self> {
        for (i, a) in samples.iter().enumerate() {
            if samples[..i].iter().any(|b| b.0 == a.0) {
                return Err(Error::DuplicateSample(a.0.to_string()));
            }
        }
        let mut coeffs = vec![BigRational::zero(); samples.len().max(1)];
        for (i, (xi, yi)) in samples.iter().enumerate() {
            // basis polynomial ∏_{j≠i} (t - x_j) / (x_i - x_j)
            let mut basis = vec![BigRational::one()];
            let mut denom = BigRational::one();
            for (j, (xj, _)) in samples.iter().enumerate() {
                if i == j {
                    continue;
                }
                let xj = BigRational::from_integer(xj.clone());
                let mut next = vec![BigRational::zero(); basis.len() + 1];
                for (k, c) in basis.iter().enumerate() {
                    next[k + 1] += c;
                    next[k] -= c * &xj;
                }
                basis = next;
                denom *= BigRational::from_integer(xi.clone()) - xj;
            }
            let scale = BigRational::from_integer(yi.clone()) / denom;
            for (k, c) in basis.into_iter().enumerate() {
                coeffs[k] += c * &scale;
            }
        }
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Ok(FittedPolynomial { coefficients: coeffs, samples: samples.to_vec() })
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coefficients.iter().all(Zero::is_zero) {
            None
        } else {
            Some(self.coefficients.len() - 1)
        }
    }

    pub fn leading(&self) -> &BigRational {
        self.coefficients.last().expect("at least one coefficient")
    }

    pub fn eval(&self, t: &BigInt) -> BigRational {
        let t = BigRational::from_integer(t.clone());
        self.coefficients.iter().rev().fold(BigRational::zero(), |acc, c| acc * &t + c)
    }

    /// Coefficients as strings, `"p/q"` or `"p"`.
    pub fn coefficient_strings(&self) -> Vec<String> {
        self.coefficients.iter().map(ToString::to_string).collect()
    }
}

/// Outcome of [`check_degree`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeReport {
    pub fit: FittedPolynomial,
    pub degree: Option<usize>,
    pub leading_positive: bool,
    pub held_out_exact: bool,
    pub expected_degree: usize,
}

impl DegreeReport {
    pub fn passed(&self) -> bool {
        self.degree == Some(self.expected_degree) && self.leading_positive && self.held_out_exact
    }
}

/// Fits all samples, and separately fits all but the last and predicts the
/// last one. Needs `expected_degree + 2` samples at distinct points.
pub fn check_degree(samples: &[(u64, u64)], expected_degree: usize) -> Result<DegreeReport> {
    let needed = expected_degree + 2;
    if samples.len() < needed {
        return Err(Error::InsufficientSamples { needed, got: samples.len() });
    }
    let pts: Vec<(BigInt, BigInt)> =
        samples.iter().map(|&(q, c)| (BigInt::from(q), BigInt::from(c))).collect();
    let fit = FittedPolynomial::interpolate(&pts)?;
    let (last, head) = pts.split_last().expect("nonempty");
    let partial = FittedPolynomial::interpolate(head)?;
    let held_out_exact = partial.eval(&last.0) == BigRational::from_integer(last.1.clone());
    Ok(DegreeReport {
        degree: fit.degree(),
        leading_positive: fit.leading().is_positive(),
        held_out_exact,
        expected_degree,
        fit,
    })
}

pub fn fit_and_check_degree(samples: &[(u64, u64)], expected_degree: usize) -> Result<bool> {
    check_degree(samples, expected_degree).map(|r| r.passed())
}
