use serde::Serialize;

use super::point::EnhancedPoint;
use crate::error::Result;
use crate::field::{
    apply_algebra, centralizer_algebra, jordan_type, quotient_action, restrict, Matrix, Subspace,
    Vector,
};
use crate::partitions::{MultiPartition, Partition};

/// What the classifier saw at one level of the recursion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelTrace {
    /// 1-based level `i`.
    pub level: usize,
    /// Dimension of the space the level works in (`V` at level 1, then
    /// successive quotients).
    pub ambient_dim: usize,
    /// `W = E^x̄ v̄_i` inside that space. The last level takes all of it.
    pub w: Subspace,
    /// `dim W_1 + ... + dim W_i`, i.e. the dimension of the preimage in `V`.
    pub cumulative_dim: usize,
    pub lambda: Partition,
}

/// Per-level record of a classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TypeTrace {
    pub levels: Vec<LevelTrace>,
}

impl TypeTrace {
    pub fn cumulative_dims(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.cumulative_dim).collect()
    }
}

/// The type of `(x, v_1, ..., v_{r-1})`.
///
/// `W = E^x v_1` with `E^x` the full centralizer algebra; `λ^(1)` is the
/// Jordan type of `x|_W`. The procedure then recurses on `V / W` with the
/// induced `x̄` and the images of `v_2, ..., v_{r-1}`. Whatever is left at
/// the last level contributes its Jordan type as `λ^(r)`.
pub fn classify_type(p: &EnhancedPoint) -> Result<(MultiPartition, TypeTrace)> {
    let basis = centralizer_algebra(p.x())?;
    classify_with(p.x(), &basis, p.vs())
}

/// Type only, with the centralizer basis of `x` supplied by the caller.
/// Enumerations over many `v` for one `x` use this to avoid re-solving.
pub fn classify_vectors(x: &Matrix, centralizer: &[Matrix], vs: &[Vector]) -> Result<MultiPartition> {
    classify_with(x, centralizer, vs).map(|(label, _)| label)
}

fn classify_with(
    x: &Matrix,
    centralizer: &[Matrix],
    vs: &[Vector],
) -> Result<(MultiPartition, TypeTrace)> {
    let r = vs.len() + 1;
    let mut levels = Vec::with_capacity(r);
    let mut components = Vec::with_capacity(r);
    let mut cur_x = x.clone();
    let mut cur_vs: Vec<Vector> = vs.to_vec();
    let mut owned_basis: Option<Vec<Matrix>> = None;
    let mut cumulative = 0;

    for level in 1..r {
        let basis: &[Matrix] = match &owned_basis {
            Some(b) => b,
            None => centralizer,
        };
        let w = apply_algebra(basis, &cur_vs[0])?;
        let lambda = jordan_type(&restrict(&cur_x, &w)?)?;
        cumulative += w.dim();
        levels.push(LevelTrace {
            level,
            ambient_dim: cur_x.rows(),
            w: w.clone(),
            cumulative_dim: cumulative,
            lambda: lambda.clone(),
        });
        components.push(lambda);

        let next_x = quotient_action(&cur_x, &w)?;
        cur_vs = cur_vs[1..].iter().map(|v| w.quotient_coords(v)).collect();
        cur_x = next_x;
        if level + 1 < r {
            owned_basis = Some(centralizer_algebra(&cur_x)?);
        }
    }

    let last = jordan_type(&cur_x)?;
    let field = cur_x.field();
    levels.push(LevelTrace {
        level: r,
        ambient_dim: cur_x.rows(),
        w: Subspace::full(field, cur_x.rows()),
        cumulative_dim: cumulative + cur_x.rows(),
        lambda: last.clone(),
    });
    components.push(last);
    Ok((MultiPartition::new(components)?, TypeTrace { levels }))
}
