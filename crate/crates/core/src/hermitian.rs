//! The two almost Hermitian structures adapted to `span{X,Y} ⊕ span{Z,W}`.
//!
//! ```text
//! J1: X ↦ Y, Y ↦ −X, Z ↦ W,  W ↦ −Z
//! J2: X ↦ Y, Y ↦ −X, Z ↦ −W, W ↦ Z
//! ```
//!
//! For each structure we compute its divergence `δJ = Σ (∇_{e_i} J)(e_i)`
//! and its Nijenhuis tensor, which decide cosymplecticity and integrability.

use core::fmt;

use crate::foliation::Distribution;
use crate::frame::{Frame, FrameVector};
use crate::geometry::Geometry;
use crate::lie_algebra::LieAlgebra4;
use crate::scalar::Scalar;
use crate::GeometryError;

use Frame::{W, X, Y, Z};

/// Selects `J1` or `J2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Structure {
    J1,
    J2,
}

impl Structure {
    pub const BOTH: [Structure; 2] = [Structure::J1, Structure::J2];

    pub fn from_index(k: u8) -> Option<Self> {
        match k {
            1 => Some(Structure::J1),
            2 => Some(Structure::J2),
            _ => None,
        }
    }

    pub fn index(self) -> u8 {
        match self {
            Structure::J1 => 1,
            Structure::J2 => 2,
        }
    }

    /// Sign of the vertical rotation: `J Z = sign · W`.
    fn vertical_sign(self) -> i64 {
        match self {
            Structure::J1 => 1,
            Structure::J2 => -1,
        }
    }

    pub fn apply<S: Scalar>(self, v: &FrameVector<S>) -> FrameVector<S> {
        let [x, y, z, w] = v.coords().clone();
        let s = S::from_i64(self.vertical_sign());
        FrameVector::new(-y, x, -(s.clone() * w), s * z)
    }
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "J{}", self.index())
    }
}

pub fn apply_j<S: Scalar>(k: Structure, v: &FrameVector<S>) -> FrameVector<S> {
    k.apply(v)
}

/// `N_J(e_i, e_j)` on all frame pairs.
#[derive(Clone, Debug, PartialEq)]
pub struct NijenhuisTable<S> {
    values: [[FrameVector<S>; 4]; 4],
}

impl<S: Scalar> NijenhuisTable<S> {
    pub fn get(&self, i: Frame, j: Frame) -> &FrameVector<S> {
        &self.values[i.index()][j.index()]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().flatten().all(FrameVector::is_zero)
    }

    /// Frame pairs `i < j` with a nonzero value.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (Frame, Frame, &FrameVector<S>)> {
        crate::lie_algebra::UPPER_PAIRS
            .iter()
            .map(|&(i, j)| (i, j, self.get(i, j)))
            .filter(|(_, _, v)| !v.is_zero())
    }
}

/// The two horizontal 1-forms built from `B^V`:
///
/// ```text
/// alpha_form(E) = 2⟨B^V(Z,Z) − B^V(W,W), E⟩
/// beta_form(E)  = 2⟨B^V(Z,W) + B^V(W,Z), E⟩
/// ```
///
/// These are unrelated to the normal-form coefficients `alpha` and `beta`.
#[derive(Clone, Debug, PartialEq)]
pub struct ShapeForms<S> {
    pub alpha_x: S,
    pub alpha_y: S,
    pub beta_x: S,
    pub beta_y: S,
}

impl<S: Scalar> ShapeForms<S> {
    pub fn alpha_form(&self, e: &FrameVector<S>) -> S {
        self.alpha_x.clone() * e[X].clone() + self.alpha_y.clone() * e[Y].clone()
    }

    pub fn beta_form(&self, e: &FrameVector<S>) -> S {
        self.beta_x.clone() * e[X].clone() + self.beta_y.clone() * e[Y].clone()
    }

    pub fn is_zero(&self) -> bool {
        [&self.alpha_x, &self.alpha_y, &self.beta_x, &self.beta_y].iter().all(|s| s.is_zero())
    }
}

impl<S: Scalar> Geometry<'_, S> {
    /// `Σ_i ∇_{e_i}(J e_i) − J(∇_{e_i} e_i)`
    pub fn divergence_j(&self, k: Structure) -> FrameVector<S> {
        let conn = self.connection();
        Frame::ALL.iter().fold(FrameVector::zero(), |acc, &e| {
            let ei = FrameVector::basis(e);
            let term = &conn.apply(&ei, &k.apply(&ei)) - &k.apply(conn.get(e, e));
            acc + term
        })
    }

    pub fn is_cosymplectic(&self, k: Structure) -> bool {
        self.divergence_j(k).is_zero()
    }

    /// Whether the foliation produces harmonic morphisms, i.e. `H δJ = 0`.
    /// Requires a minimal conformal foliation.
    pub fn produces_harmonic_morphisms(&self, k: Structure) -> Result<bool, GeometryError> {
        let (minimal, conformal) = (self.is_minimal(), self.is_conformal());
        if !(minimal && conformal) {
            return Err(GeometryError::HypothesisViolated { minimal, conformal });
        }
        Ok(self.divergence_j(k).horizontal().is_zero())
    }

    /// `N(E,F) = [E,F] + J[JE,F] + J[E,JF] − [JE,JF]`
    pub fn nijenhuis_on(&self, k: Structure, u: &FrameVector<S>, v: &FrameVector<S>) -> FrameVector<S> {
        let alg = self.algebra();
        let (ju, jv) = (k.apply(u), k.apply(v));
        let sum = &(&alg.bracket(u, v) + &k.apply(&alg.bracket(&ju, v))) + &k.apply(&alg.bracket(u, &jv));
        &sum - &alg.bracket(&ju, &jv)
    }

    pub fn nijenhuis(&self, k: Structure) -> NijenhuisTable<S> {
        let values = Frame::ALL.map(|i| {
            Frame::ALL.map(|j| self.nijenhuis_on(k, &FrameVector::basis(i), &FrameVector::basis(j)))
        });
        NijenhuisTable { values }
    }

    pub fn is_integrable(&self, k: Structure) -> bool {
        self.nijenhuis(k).is_zero()
    }

    pub fn shape_forms(&self) -> ShapeForms<S> {
        let bv = self.second_fundamental(Distribution::Vertical);
        let two = S::from_i64(2);
        let get = |u, v| bv.get(u, v).expect("vertical generators").clone();
        let diff = (get(Z, Z) - get(W, W)).scale(&two);
        let sum = (get(Z, W) + get(W, Z)).scale(&two);
        ShapeForms {
            alpha_x: diff[X].clone(),
            alpha_y: diff[Y].clone(),
            beta_x: sum[X].clone(),
            beta_y: sum[Y].clone(),
        }
    }
}

pub fn divergence_j<S: Scalar>(alg: &LieAlgebra4<S>, k: Structure) -> FrameVector<S> {
    Geometry::new(alg).divergence_j(k)
}

pub fn is_cosymplectic<S: Scalar>(alg: &LieAlgebra4<S>, k: Structure) -> bool {
    Geometry::new(alg).is_cosymplectic(k)
}

pub fn produces_harmonic_morphisms<S: Scalar>(alg: &LieAlgebra4<S>, k: Structure) -> Result<bool, GeometryError> {
    Geometry::new(alg).produces_harmonic_morphisms(k)
}

pub fn nijenhuis<S: Scalar>(alg: &LieAlgebra4<S>, k: Structure) -> NijenhuisTable<S> {
    Geometry::new(alg).nijenhuis(k)
}

pub fn is_integrable<S: Scalar>(alg: &LieAlgebra4<S>, k: Structure) -> bool {
    Geometry::new(alg).is_integrable(k)
}

pub fn shape_forms<S: Scalar>(alg: &LieAlgebra4<S>) -> ShapeForms<S> {
    Geometry::new(alg).shape_forms()
}
