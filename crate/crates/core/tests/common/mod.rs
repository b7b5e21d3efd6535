//! Brute-force oracles shared by the integration tests and the acceptance
//! runner. Nothing here calls the closed formulas it is used to check.
#![allow(dead_code)]

use std::collections::BTreeMap;

use springer_levels::field::{jordan_type, kx_span, Matrix, PrimeField, Vector};
use springer_levels::orbits::EnhancedPoint;
use springer_levels::partitions::Partition;

pub fn field(q: u64) -> PrimeField {
    PrimeField::new(q).unwrap()
}

/// Standard Young tableaux counted by removing corners recursively.
pub fn syt_count(lambda: &[usize]) -> u64 {
    fn go(shape: &mut Vec<usize>, memo: &mut BTreeMap<Vec<usize>, u64>) -> u64 {
        if shape.iter().all(|&p| p == 0) {
            return 1;
        }
        if let Some(&v) = memo.get(shape) {
            return v;
        }
        let mut total = 0;
        for i in 0..shape.len() {
            let next = shape.get(i + 1).copied().unwrap_or(0);
            if shape[i] > next {
                shape[i] -= 1;
                total += go(shape, memo);
                shape[i] += 1;
            }
        }
        memo.insert(shape.clone(), total);
        total
    }
    go(&mut lambda.to_vec(), &mut BTreeMap::new())
}

/// `|P_{n,r}|` as the coefficient of `t^n` in `∏_k (1 - t^k)^{-r}`.
pub fn multipartition_count(n: usize, r: usize) -> u64 {
    let mut coeffs = vec![0u64; n + 1];
    coeffs[0] = 1;
    for _ in 0..r {
        for k in 1..=n {
            for i in k..=n {
                coeffs[i] += coeffs[i - k];
            }
        }
    }
    coeffs[n]
}

/// Every `n × n` matrix over `F_q`.
pub fn all_matrices(f: PrimeField, n: usize) -> Vec<Matrix> {
    if n == 0 {
        return vec![Matrix::identity(f, 0)];
    }
    all_vectors(f, n * n)
        .into_iter()
        .map(|v| {
            let e = v.entries();
            Matrix::from_rows(f, (0..n).map(|i| e[i * n..(i + 1) * n].to_vec()).collect()).unwrap()
        })
        .collect()
}

pub fn all_vectors(f: PrimeField, dim: usize) -> Vec<Vector> {
    let q = f.q();
    let total = q.pow(dim as u32);
    (0..total)
        .map(|mut idx| {
            let e = (0..dim)
                .map(|_| {
                    let d = idx % q;
                    idx /= q;
                    d
                })
                .collect();
            Vector::new(f, e).unwrap()
        })
        .collect()
}

/// Unipotent matrices found by testing `(x - 1)^n = 0` directly.
pub fn unipotent_matrices(f: PrimeField, n: usize) -> Vec<Matrix> {
    let id = Matrix::identity(f, n);
    all_matrices(f, n)
        .into_iter()
        .filter(|x| x.sub(&id).unwrap().pow(n).unwrap().is_zero())
        .collect()
}

pub fn gl_count(f: PrimeField, n: usize) -> u64 {
    all_matrices(f, n).iter().filter(|g| g.is_invertible()).count() as u64
}

pub fn centralizer_count(x: &Matrix) -> u64 {
    all_matrices(x.field(), x.rows())
        .iter()
        .filter(|g| g.is_invertible() && g.mul(x).unwrap() == x.mul(g).unwrap())
        .count() as u64
}

/// Largest `dim k[x]⟨v_a, u_1, ..., u_k⟩` over every choice of `u`.
pub fn max_module_dim_search(p: &EnhancedPoint, k: usize, a: usize) -> usize {
    let vectors = all_vectors(p.field(), p.n());
    let mut best = 0;
    let mut idx = vec![0usize; k];
    loop {
        let mut gens: Vec<Vector> = idx.iter().map(|&i| vectors[i].clone()).collect();
        if a > 0 {
            gens.push(p.v(a).clone());
        }
        best = best.max(kx_span(p.x(), &gens).unwrap().dim());
        // odometer over k-tuples of vectors
        let mut pos = 0;
        loop {
            if pos == k {
                return best;
            }
            idx[pos] += 1;
            if idx[pos] < vectors.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

pub fn partition(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

pub fn jordan(x: &Matrix) -> Partition {
    jordan_type(x).unwrap()
}
