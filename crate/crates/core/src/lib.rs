//! Exact computation of algebraic modular forms for the Hurwitz order.
//!
//! Modules, bottom up: [`linalg`] (exact rational elimination), [`poly`]
//! (homogeneous polynomials in three variables), [`quaternion`] (Hurwitz
//! arithmetic and rotation matrices), [`harmonic`] (bases of invariant harmonic
//! polynomials), [`hecke`] (Hecke operators, dimension formulas, zonal kernels),
//! [`ecoord`] (the weighted e-coordinate algorithm) and [`arith`] (congruence
//! certificates, CM points, divisibility).

pub mod arith;
pub mod ecoord;
pub mod error;
pub mod harmonic;
pub mod hecke;
pub mod linalg;
pub mod poly;
pub mod quaternion;

pub use error::{Error, Result};
pub use harmonic::{BasisResult, Variant};
pub use linalg::{column_image_basis, kernel_basis, rref, Rational, RationalMatrix};
pub use poly::{Exponent, Frame, HomogeneousPoly};
pub use quaternion::{HurwitzQuaternion, RotationFrame, RotationMatrix};
