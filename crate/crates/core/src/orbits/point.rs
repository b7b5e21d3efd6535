use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{jordan_type, Matrix, MatrixJson, PrimeField, Vector};

/// A point `(x, v_1, ..., v_{r-1})` of `G_uni × V^{r-1}` over `F_q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EnhancedPoint {
    field: PrimeField,
    x: Matrix,
    vs: Vec<Vector>,
}

impl EnhancedPoint {
    /// Checks that `x` is unipotent and every `v_i` lives in `F_q^n`. The
    /// level is `vs.len() + 1`.
    pub fn new(x: Matrix, vs: Vec<Vector>) -> Result<Self> {
        let field = x.field();
        jordan_type(&x)?;
        for v in &vs {
            if v.field() != field {
                return Err(Error::FieldMismatch(field.q(), v.field().q()));
            }
            if v.dim() != x.rows() {
                return Err(Error::DimensionMismatch(format!(
                    "vector of length {} for n = {}",
                    v.dim(),
                    x.rows()
                )));
            }
        }
        Ok(EnhancedPoint { field, x, vs })
    }

    pub(crate) fn from_parts_unchecked(x: Matrix, vs: Vec<Vector>) -> Self {
        EnhancedPoint { field: x.field(), x, vs }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn n(&self) -> usize {
        self.x.rows()
    }

    pub fn level(&self) -> usize {
        self.vs.len() + 1
    }

    pub fn x(&self) -> &Matrix {
        &self.x
    }

    pub fn vs(&self) -> &[Vector] {
        &self.vs
    }

    /// `v_i`, 1-based.
    pub fn v(&self, i: usize) -> &Vector {
        &self.vs[i - 1]
    }

    /// `(g x g⁻¹, g v_1, ..., g v_{r-1})`.
    pub fn conjugate(&self, g: &Matrix) -> Result<EnhancedPoint> {
        let g_inv = g.inverse().ok_or(Error::Singular)?;
        let x = g.mul(&self.x)?.mul(&g_inv)?;
        let vs = self.vs.iter().map(|v| g.mul_vec(v)).collect::<Result<Vec<_>>>()?;
        Ok(EnhancedPoint { field: self.field, x, vs })
    }
}

/// Wire format `{ "q", "n", "r", "x": matrix, "vs": [[int]] }`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PointJson {
    pub q: u64,
    pub n: usize,
    pub r: usize,
    pub x: MatrixJson,
    pub vs: Vec<Vec<u64>>,
}

impl From<&EnhancedPoint> for PointJson {
    fn from(p: &EnhancedPoint) -> Self {
        PointJson {
            q: p.field.q(),
            n: p.n(),
            r: p.level(),
            x: MatrixJson::from(&p.x),
            vs: p.vs.iter().map(|v| v.entries().to_vec()).collect(),
        }
    }
}

impl TryFrom<PointJson> for EnhancedPoint {
    type Error = Error;

    fn try_from(raw: PointJson) -> Result<Self> {
        if raw.r == 0 {
            return Err(Error::ZeroLevel);
        }
        if raw.x.q != raw.q {
            return Err(Error::FieldMismatch(raw.q, raw.x.q));
        }
        let x = Matrix::try_from(raw.x)?;
        if x.rows() != raw.n || x.cols() != raw.n {
            return Err(Error::DimensionMismatch(format!("x is not {0}x{0}", raw.n)));
        }
        if raw.vs.len() + 1 != raw.r {
            return Err(Error::DimensionMismatch(format!(
                "level {} needs {} vectors, got {}",
                raw.r,
                raw.r - 1,
                raw.vs.len()
            )));
        }
        let field = x.field();
        let vs = raw.vs.into_iter().map(|v| Vector::new(field, v)).collect::<Result<Vec<_>>>()?;
        EnhancedPoint::new(x, vs)
    }
}

impl Serialize for EnhancedPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PointJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for EnhancedPoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        EnhancedPoint::try_from(PointJson::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}
