//! Second fundamental forms of the splitting `span{Z,W} ⊕ span{X,Y}` and the
//! foliation predicates derived from them.
//!
//! ```text
//! B^V(U,V) = ½ H(∇_U V + ∇_V U)    U, V ∈ span{Z,W}
//! B^H(E,F) = ½ V(∇_E F + ∇_F E)    E, F ∈ span{X,Y}
//! ```
//!
//! The foliation tangent to `span{Z,W}` is minimal when `tr B^V = 0`, totally
//! geodesic when `B^V = 0`, conformal when `B^H = g ⊗ V` for a vertical `V`,
//! and Riemannian when in addition `V = 0`.

use crate::frame::{Frame, FrameVector};
use crate::geometry::Geometry;
use crate::lie_algebra::LieAlgebra4;
use crate::scalar::Scalar;
use crate::GeometryError;

use Frame::{W, X, Y, Z};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Distribution {
    /// `span{Z, W}`
    Vertical,
    /// `span{X, Y}`
    Horizontal,
}

impl Distribution {
    pub fn generators(self) -> [Frame; 2] {
        match self {
            Distribution::Vertical => Frame::VERTICAL,
            Distribution::Horizontal => Frame::HORIZONTAL,
        }
    }
}

/// A second fundamental form, stored on its generating pair.
#[derive(Clone, Debug, PartialEq)]
pub struct SecondFundamentalForm<S> {
    pub which: Distribution,
    values: [[FrameVector<S>; 2]; 2],
}

impl<S: Scalar> SecondFundamentalForm<S> {
    /// Value on two generators of the distribution; `None` for frame vectors
    /// outside it.
    pub fn get(&self, u: Frame, v: Frame) -> Option<&FrameVector<S>> {
        let gens = self.which.generators();
        let i = gens.iter().position(|&g| g == u)?;
        let j = gens.iter().position(|&g| g == v)?;
        Some(&self.values[i][j])
    }

    pub fn values(&self) -> &[[FrameVector<S>; 2]; 2] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().flatten().all(FrameVector::is_zero)
    }
}

impl<S: Scalar> Geometry<'_, S> {
    pub fn second_fundamental(&self, which: Distribution) -> SecondFundamentalForm<S> {
        let conn = self.connection();
        let half = S::one() / S::from_i64(2);
        let gens = which.generators();
        let values = gens.map(|u| {
            gens.map(|v| {
                let sym = conn.get(u, v) + conn.get(v, u);
                let projected = match which {
                    Distribution::Vertical => sym.horizontal(),
                    Distribution::Horizontal => sym.vertical(),
                };
                projected.scale(&half)
            })
        });
        SecondFundamentalForm { which, values }
    }

    /// `B^V(Z,Z) + B^V(W,W) = 0`
    pub fn is_minimal(&self) -> bool {
        let bv = self.second_fundamental(Distribution::Vertical);
        (bv.values[0][0].clone() + bv.values[1][1].clone()).is_zero()
    }

    pub fn is_totally_geodesic(&self) -> bool {
        self.second_fundamental(Distribution::Vertical).is_zero()
    }

    /// `B^H(X,X) = B^H(Y,Y)` and `B^H(X,Y) = 0`
    pub fn is_conformal(&self) -> bool {
        let bh = self.second_fundamental(Distribution::Horizontal);
        bh.values[0][1].is_zero() && bh.values[0][0] == bh.values[1][1]
    }

    /// The vertical vector `V` with `B^H = g ⊗ V`.
    pub fn conformal_vector(&self) -> Result<FrameVector<S>, GeometryError> {
        if !self.is_conformal() {
            return Err(GeometryError::NotConformal);
        }
        let bh = self.second_fundamental(Distribution::Horizontal);
        let [[xx, _], _] = bh.values;
        Ok(xx)
    }

    pub fn is_riemannian(&self) -> Result<bool, GeometryError> {
        Ok(self.conformal_vector()?.is_zero())
    }

    /// `V[X,Y] = 0`
    pub fn is_horizontally_integrable(&self) -> bool {
        self.algebra().structure(X, Y).vertical().is_zero()
    }

    /// `H[Z,W] = 0`
    pub fn is_vertically_integrable(&self) -> bool {
        self.algebra().structure(Z, W).horizontal().is_zero()
    }
}

pub fn second_fundamental<S: Scalar>(alg: &LieAlgebra4<S>, which: Distribution) -> SecondFundamentalForm<S> {
    Geometry::new(alg).second_fundamental(which)
}

pub fn is_minimal<S: Scalar>(alg: &LieAlgebra4<S>) -> bool {
    Geometry::new(alg).is_minimal()
}

pub fn is_totally_geodesic<S: Scalar>(alg: &LieAlgebra4<S>) -> bool {
    Geometry::new(alg).is_totally_geodesic()
}

pub fn is_conformal<S: Scalar>(alg: &LieAlgebra4<S>) -> bool {
    Geometry::new(alg).is_conformal()
}

pub fn conformal_vector<S: Scalar>(alg: &LieAlgebra4<S>) -> Result<FrameVector<S>, GeometryError> {
    Geometry::new(alg).conformal_vector()
}

pub fn is_riemannian<S: Scalar>(alg: &LieAlgebra4<S>) -> Result<bool, GeometryError> {
    Geometry::new(alg).is_riemannian()
}

pub fn is_horizontally_integrable<S: Scalar>(alg: &LieAlgebra4<S>) -> bool {
    Geometry::new(alg).is_horizontally_integrable()
}

pub fn is_vertically_integrable<S: Scalar>(alg: &LieAlgebra4<S>) -> bool {
    Geometry::new(alg).is_vertically_integrable()
}
