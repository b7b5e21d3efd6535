use rand::Rng;

use super::matrix::{Matrix, Vector};
use super::prime::PrimeField;
use super::subspace::Subspace;
use crate::error::{Error, Result};
use crate::partitions::Partition;

/// `x - 1`.
pub fn nilpotent_part(x: &Matrix) -> Result<Matrix> {
    x.sub(&Matrix::identity(x.field(), x.rows()))
}

/// `1 + n` for a nilpotent `n`.
pub fn unipotent_from_nilpotent(n: &Matrix) -> Result<Matrix> {
    let x = n.add(&Matrix::identity(n.field(), n.rows()))?;
    jordan_type(&x)?;
    Ok(x)
}

/// Jordan type of a unipotent matrix, read off the rank sequence of
/// `(x - 1)^k`: the dual partition has parts `rank N^{k-1} - rank N^k`.
pub fn jordan_type(x: &Matrix) -> Result<Partition> {
    if !x.is_square() {
        return Err(Error::DimensionMismatch("Jordan type of a non-square matrix".into()));
    }
    let n = x.rows();
    let nil = nilpotent_part(x)?;
    let mut ranks = vec![n];
    let mut power = Matrix::identity(x.field(), n);
    while *ranks.last().unwrap() > 0 {
        if ranks.len() > n {
            return Err(Error::NotUnipotent);
        }
        power = power.mul(&nil)?;
        let r = power.rank();
        if r == *ranks.last().unwrap() {
            return Err(Error::NotUnipotent);
        }
        ranks.push(r);
    }
    let dual: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    Ok(Partition::new(dual)?.dual())
}

/// Block-diagonal unipotent matrix of type `nu`, blocks in decreasing size.
///
/// Basis vector `u_{j,k}` (block `j`, position `k`, both 1-based) sits at
/// index `offset_j + k - 1` and `(x - 1) u_{j,k} = u_{j,k-1}` with
/// `u_{j,0} = 0`.
pub fn jordan_matrix(field: PrimeField, nu: &Partition) -> Matrix {
    let n = nu.size();
    let mut x = Matrix::identity(field, n);
    let mut offset = 0;
    for &len in nu.parts() {
        for k in 1..len {
            x.set(offset + k - 1, offset + k, 1);
        }
        offset += len;
    }
    x
}

/// Index of `u_{j,k}` in the basis of [`jordan_matrix`] (1-based `j`, `k`).
pub fn jordan_index(nu: &Partition, j: usize, k: usize) -> usize {
    debug_assert!(j >= 1 && k >= 1 && k <= nu.get(j - 1));
    nu.parts()[..j - 1].iter().sum::<usize>() + k - 1
}

/// A basis of `E^x = { y : xy = yx }`.
///
/// Solves `N y - y N = 0` with `N = x - 1`, one unknown per entry of `y`.
pub fn centralizer_algebra(x: &Matrix) -> Result<Vec<Matrix>> {
    if !x.is_square() {
        return Err(Error::DimensionMismatch("centralizer of a non-square matrix".into()));
    }
    let f = x.field();
    let n = x.rows();
    let nil = nilpotent_part(x)?;
    let mut system = Matrix::zeros(f, n * n, n * n);
    for a in 0..n {
        for c in 0..n {
            let row = a * n + c;
            // (N y)_{ac} = Σ_b N_{ab} y_{bc}
            for b in 0..n {
                let coef = nil.get(a, b);
                if coef != 0 {
                    let col = b * n + c;
                    system.set(row, col, f.add(system.get(row, col), coef));
                }
            }
            // (y N)_{ac} = Σ_d y_{ad} N_{dc}
            for d in 0..n {
                let coef = nil.get(d, c);
                if coef != 0 {
                    let col = a * n + d;
                    system.set(row, col, f.sub(system.get(row, col), coef));
                }
            }
        }
    }
    Ok(system
        .nullspace()
        .basis_vectors()
        .into_iter()
        .map(|v| {
            let e = v.into_entries();
            Matrix::from_rows(f, e.chunks(n).map(<[u64]>::to_vec).collect())
                .expect("entries are reduced")
        })
        .collect())
}

/// `span { y v : y ∈ basis }`.
pub fn apply_algebra(basis: &[Matrix], v: &Vector) -> Result<Subspace> {
    let images = basis.iter().map(|y| y.mul_vec(v)).collect::<Result<Vec<_>>>()?;
    Ok(Subspace::span(v.field(), v.dim(), &images))
}

/// `k[x] ⟨vs⟩`, the smallest `x`-stable subspace containing every vector.
pub fn kx_span(x: &Matrix, vs: &[Vector]) -> Result<Subspace> {
    let nil = nilpotent_part(x)?;
    let mut gens = Vec::new();
    for v in vs {
        let mut w = v.clone();
        while !w.is_zero() {
            let next = nil.mul_vec(&w)?;
            gens.push(w);
            w = next;
            if gens.len() > x.rows() * (vs.len() + 1) {
                // a non-nilpotent N never reaches zero
                return Err(Error::NotUnipotent);
            }
        }
    }
    Ok(Subspace::span(x.field(), x.rows(), &gens))
}

/// Matrix of `x|_W` in the echelon basis of `W`.
pub fn restrict(x: &Matrix, w: &Subspace) -> Result<Matrix> {
    w.require_stable(x)?;
    let basis = w.basis_vectors();
    let d = basis.len();
    let mut out = Matrix::zeros(x.field(), d, d);
    for (i, b) in basis.iter().enumerate() {
        let image = x.mul_vec(b)?;
        let c = w.coords(&image).expect("W is x-stable");
        for (j, cj) in c.into_iter().enumerate() {
            out.set(j, i, cj);
        }
    }
    Ok(out)
}

/// Matrix of the action induced by `x` on `V / W`, in the basis given by the
/// unit vectors on [`Subspace::complement_coords`].
pub fn quotient_action(x: &Matrix, w: &Subspace) -> Result<Matrix> {
    w.require_stable(x)?;
    let comp = w.complement_coords();
    let d = comp.len();
    let mut out = Matrix::zeros(x.field(), d, d);
    for (i, &c) in comp.iter().enumerate() {
        let image = x.column(c);
        let y = w.quotient_coords(&image);
        for j in 0..d {
            out.set(j, i, y.get(j));
        }
    }
    Ok(out)
}

pub fn random_vector<R: Rng + ?Sized>(field: PrimeField, dim: usize, rng: &mut R) -> Vector {
    Vector::from_raw(field, (0..dim).map(|_| rng.gen_range(0..field.q())).collect())
}

/// Uniform element of `GL_n(F_q)` by rejection sampling.
pub fn random_invertible<R: Rng + ?Sized>(field: PrimeField, n: usize, rng: &mut R) -> Matrix {
    loop {
        let rows = (0..n).map(|_| random_vector(field, n, rng).into_entries()).collect();
        let m = Matrix::from_rows(field, rows).expect("entries are reduced");
        if m.is_invertible() {
            return m;
        }
    }
}
