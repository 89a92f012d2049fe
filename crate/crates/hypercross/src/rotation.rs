//! Closed-form rotation operators generated by the cross-product matrices.
//!
//! For a unit axis a, the matrix `V = V_n(a)` satisfies `V^3 = -V`, so the
//! exponential of `theta V` collapses to the closed form
//!
//! ```text
//! R(theta) = I + sin(theta) V + (1 - cos(theta)) V^2
//! ```
//!
//! valid for n = 3 and n = 7. A single such rotation fixes the axis and acts
//! in the plane field determined by V; in seven dimensions these operators do
//! not generate all of SO(7).

use crate::cross::cross_matrix;
use crate::error::{Error, Result};
use crate::vec::{Matrix, VecN};

/// Axes with squared norm at or below this are rejected as zero.
pub const MIN_AXIS_NORM: f64 = 1e-300;

/// An orthogonal rotation matrix produced by [`rotation_matrix`].
#[derive(Debug, Clone, PartialEq)]
pub struct RotationMatrix {
    matrix: Matrix,
}

impl RotationMatrix {
    pub fn dim(&self) -> usize {
        self.matrix.size()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix {
        self.matrix
    }

    pub fn apply(&self, v: &VecN) -> VecN {
        self.matrix.apply(v)
    }
}

/// Rotation by `theta` radians about the given axis (n = 3 or 7). The axis
/// is normalized internally; callers may pass unnormalized axes.
pub fn rotation_matrix(axis: &VecN, theta: f64) -> Result<RotationMatrix> {
    let norm = axis.norm();
    // also rejects NaN and infinite axes
    if !norm.is_finite() || norm <= MIN_AXIS_NORM {
        return Err(Error::ZeroAxis);
    }
    let unit = axis.scale(1.0 / norm);
    let v = cross_matrix(&unit)?.into_matrix();
    let v2 = v.mul(&v);
    let n = v.size();
    let r = Matrix::identity(n)
        .add(&v.scale(theta.sin()))
        .add(&v2.scale(1.0 - theta.cos()));
    Ok(RotationMatrix { matrix: r })
}

/// Rotates `v` by `theta` about `axis`: `rotation_matrix(axis, theta) * v`.
pub fn rotate(v: &VecN, axis: &VecN, theta: f64) -> Result<VecN> {
    if v.dim() != axis.dim() {
        return Err(Error::DimensionMismatch {
            left: v.dim(),
            right: axis.dim(),
        });
    }
    Ok(rotation_matrix(axis, theta)?.apply(v))
}
