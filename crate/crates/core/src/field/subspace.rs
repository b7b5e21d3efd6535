use serde::Serialize;

use super::matrix::{Matrix, Vector};
use super::prime::PrimeField;
use crate::error::{Error, Result};

/// A subspace of `F_q^d`, stored as the nonzero rows of a reduced row
/// echelon basis. Two subspaces are equal exactly when their bases are.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: PrimeField,
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

#[derive(Serialize)]
struct SubspaceJson {
    ambient: usize,
    dim: usize,
    pivots: Vec<usize>,
    basis: Vec<Vec<u64>>,
}

impl Serialize for Subspace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SubspaceJson {
            ambient: self.ambient,
            dim: self.dim(),
            pivots: self.pivots.clone(),
            basis: (0..self.dim()).map(|i| self.basis.row(i).to_vec()).collect(),
        }
        .serialize(s)
    }
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Subspace { field, ambient, basis: Matrix::zeros(field, 0, ambient), pivots: Vec::new() }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span(field: PrimeField, ambient: usize, vectors: &[Vector]) -> Self {
        let mut m = Matrix::zeros(field, vectors.len(), ambient);
        for (i, v) in vectors.iter().enumerate() {
            for j in 0..ambient {
                m.set(i, j, v.get(j));
            }
        }
        Self::from_rows_matrix(m)
    }

    fn from_rows_matrix(m: Matrix) -> Self {
        let field = m.field();
        let ambient = m.cols();
        let (r, pivots) = m.rref();
        let mut basis = Matrix::zeros(field, pivots.len(), ambient);
        for i in 0..pivots.len() {
            for j in 0..ambient {
                basis.set(i, j, r.get(i, j));
            }
        }
        Subspace { field, ambient, basis, pivots }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.dim()
    }

    /// Echelon basis as a `dim × ambient` matrix.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        (0..self.dim()).map(|i| self.basis.row_vector(i)).collect()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Standard coordinates not used as pivots; their unit vectors project to
    /// a basis of `V / W`.
    pub fn complement_coords(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    /// `v` minus the unique element of `W` that clears every pivot coordinate.
    pub fn reduce(&self, v: &Vector) -> Vector {
        let f = self.field;
        let mut out = v.entries().to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = out[p];
            if c == 0 {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = f.sub(*o, f.mul(c, self.basis.get(i, j)));
            }
        }
        Vector::from_raw(f, out)
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis_vectors().iter().all(|v| self.contains(v))
    }

    /// Coordinates of `v` in the echelon basis, if `v ∈ W`.
    pub fn coords(&self, v: &Vector) -> Option<Vec<u64>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v.get(p)).collect())
    }

    /// Coordinates of the class `v + W` in the complement basis of `V / W`.
    pub fn quotient_coords(&self, v: &Vector) -> Vector {
        let red = self.reduce(v);
        Vector::from_raw(self.field, self.complement_coords().iter().map(|&c| red.get(c)).collect())
    }

    /// Inverse of [`quotient_coords`](Self::quotient_coords) on representatives:
    /// places the entries of `y` on the complement coordinates.
    pub fn lift(&self, y: &Vector) -> Vector {
        let mut out = vec![0; self.ambient];
        for (i, c) in self.complement_coords().into_iter().enumerate() {
            out[c] = y.get(i);
        }
        Vector::from_raw(self.field, out)
    }

    pub fn join(&self, other: &Subspace) -> Subspace {
        let mut vs = self.basis_vectors();
        vs.extend(other.basis_vectors());
        Subspace::span(self.field, self.ambient, &vs)
    }

    /// `π⁻¹(S)` for a subspace `S` of `V / W`.
    pub fn preimage(&self, s: &Subspace) -> Subspace {
        let mut vs = self.basis_vectors();
        vs.extend(s.basis_vectors().iter().map(|y| self.lift(y)));
        Subspace::span(self.field, self.ambient, &vs)
    }

    pub fn is_stable_under(&self, x: &Matrix) -> Result<bool> {
        for v in self.basis_vectors() {
            if !self.contains(&x.mul_vec(&v)?) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub(crate) fn require_stable(&self, x: &Matrix) -> Result<()> {
        if x.rows() != self.ambient || !x.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix on a subspace of F_q^{}",
                x.rows(),
                x.cols(),
                self.ambient
            )));
        }
        if self.is_stable_under(x)? {
            Ok(())
        } else {
            Err(Error::NotStable)
        }
    }
}
