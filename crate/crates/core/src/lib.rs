//! Exact tensor algebra for codimension-2 foliations on four-dimensional Lie
//! algebras with a left-invariant metric.
//!
//! The orthonormal frame is `(X, Y, Z, W)`; the foliation is tangent to
//! `span{Z, W}`. From a structure-constant table the crate computes the
//! Levi-Civita connection, the second fundamental forms of both
//! distributions, the divergence and Nijenhuis tensor of the two adapted
//! almost Hermitian structures `J1`, `J2`, and decides the resulting
//! predicates exactly. [`verify`] checks the biconditionals relating these
//! predicates on seeded random samples.
//!
//! The crate is `no_std` and needs only `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

use core::fmt;

pub mod closed_form;
pub mod connection;
pub mod families;
pub mod foliation;
pub mod frame;
mod geometry;
pub mod hermitian;
pub mod lie_algebra;
pub mod report;
pub mod scalar;
pub mod verify;

pub use connection::{connection_table, koszul_coefficient, nabla, ConnectionTable};
pub use families::{build_family, family_report, FamilyName, FamilyParams, Gate};
pub use foliation::{Distribution, SecondFundamentalForm};
pub use frame::{inner, project_horizontal, project_vertical, Frame, FrameVector};
pub use geometry::Geometry;
pub use hermitian::{NijenhuisTable, ShapeForms, Structure};
pub use lie_algebra::{LieAlgebra4, Origin, SchemaParams};
pub use report::GeometryReport;
pub use scalar::{format_rational, parse_rational, Approx, Rational, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeometryError {
    /// `B^H` is not of the form `g ⊗ V`.
    NotConformal,
    /// A predicate that presupposes a minimal conformal foliation was asked
    /// of one that is not.
    HypothesisViolated { minimal: bool, conformal: bool },
    Inadmissible(Gate),
    UnknownFamily,
    NotAntisymmetric { i: Frame, j: Frame },
}

impl fmt::Display for GeometryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeometryError::NotConformal => write!(f, "not conformal"),
            GeometryError::HypothesisViolated { minimal, conformal } => {
                write!(f, "hypothesis violated (minimal: {minimal}, conformal: {conformal})")
            }
            GeometryError::Inadmissible(gate) => write!(f, "inadmissible parameters: {gate}"),
            GeometryError::UnknownFamily => write!(f, "unknown family (expected g5, g18 or g20)"),
            GeometryError::NotAntisymmetric { i, j } => {
                write!(f, "structure constants are not antisymmetric at [{i},{j}]")
            }
        }
    }
}

impl core::error::Error for GeometryError {}
