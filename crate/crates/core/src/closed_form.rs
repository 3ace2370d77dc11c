//! Closed-form expressions on the bracket normal form.
//!
//! These are the independent side of every cross-check: the tensor pipeline
//! never calls into this module.

use crate::frame::FrameVector;
use crate::hermitian::{ShapeForms, Structure};
use crate::lie_algebra::SchemaParams;
use crate::scalar::Scalar;

/// `z1 = z2 = z3 + w1 = z4 + w2 = 0`
pub fn totally_geodesic<S: Scalar>(p: &SchemaParams<S>) -> bool {
    p.z1.is_zero()
        && p.z2.is_zero()
        && (p.z3.clone() + p.w1.clone()).is_zero()
        && (p.z4.clone() + p.w2.clone()).is_zero()
}

/// `α = a = 0`
pub fn riemannian<S: Scalar>(p: &SchemaParams<S>) -> bool {
    p.alpha.is_zero() && p.a.is_zero()
}

/// `θ1 = θ2 = 0`
pub fn horizontally_integrable<S: Scalar>(p: &SchemaParams<S>) -> bool {
    p.theta1.is_zero() && p.theta2.is_zero()
}

/// `αZ + aW`
pub fn conformal_vector<S: Scalar>(p: &SchemaParams<S>) -> FrameVector<S> {
    FrameVector::new(S::zero(), S::zero(), p.alpha.clone(), p.a.clone())
}

/// `δJ1 = −(θ1 − 2a)Z − (θ2 + 2α)W`, `δJ2 = −(θ1 + 2a)Z + (2α − θ2)W`
pub fn divergence<S: Scalar>(p: &SchemaParams<S>, k: Structure) -> FrameVector<S> {
    let two_a = S::from_i64(2) * p.a.clone();
    let two_alpha = S::from_i64(2) * p.alpha.clone();
    let (z, w) = match k {
        Structure::J1 => (-(p.theta1.clone() - two_a), -(p.theta2.clone() + two_alpha)),
        Structure::J2 => (-(p.theta1.clone() + two_a), two_alpha - p.theta2.clone()),
    };
    FrameVector::new(S::zero(), S::zero(), z, w)
}

/// `θ1 − 2a = 0 ∧ θ2 + 2α = 0` for `J1`, `θ1 + 2a = 0 ∧ θ2 − 2α = 0` for `J2`
pub fn cosymplectic<S: Scalar>(p: &SchemaParams<S>, k: Structure) -> bool {
    let two_a = S::from_i64(2) * p.a.clone();
    let two_alpha = S::from_i64(2) * p.alpha.clone();
    match k {
        Structure::J1 => (p.theta1.clone() - two_a).is_zero() && (p.theta2.clone() + two_alpha).is_zero(),
        Structure::J2 => (p.theta1.clone() + two_a).is_zero() && (p.theta2.clone() - two_alpha).is_zero(),
    }
}

/// `alpha_form = (−4z1, −4z2)`, `beta_form = (−2(z3 + w1), −2(z4 + w2))`
pub fn shape_forms<S: Scalar>(p: &SchemaParams<S>) -> ShapeForms<S> {
    let four = S::from_i64(-4);
    let two = S::from_i64(-2);
    ShapeForms {
        alpha_x: four.clone() * p.z1.clone(),
        alpha_y: four * p.z2.clone(),
        beta_x: two.clone() * (p.z3.clone() + p.w1.clone()),
        beta_y: two * (p.z4.clone() + p.w2.clone()),
    }
}
