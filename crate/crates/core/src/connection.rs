//! Levi-Civita connection of the left-invariant metric.
//!
//! For left-invariant fields the Koszul formula has no derivative terms:
//!
//! ```text
//! 2⟨∇_{e_i} e_j, e_k⟩ = ⟨[e_k,e_i],e_j⟩ + ⟨[e_k,e_j],e_i⟩ + ⟨e_k,[e_i,e_j]⟩
//! ```

use crate::frame::{Frame, FrameVector};
use crate::lie_algebra::LieAlgebra4;
use crate::scalar::Scalar;

/// `⟨∇_{e_i} e_j, e_k⟩`
pub fn koszul_coefficient<S: Scalar>(alg: &LieAlgebra4<S>, i: Frame, j: Frame, k: Frame) -> S {
    let twice = alg.structure(k, i)[j].clone() + alg.structure(k, j)[i].clone() + alg.structure(i, j)[k].clone();
    twice / S::from_i64(2)
}

/// `nabla[i][j] = ∇_{e_i} e_j`
#[derive(Clone, Debug, PartialEq)]
pub struct ConnectionTable<S> {
    nabla: [[FrameVector<S>; 4]; 4],
}

impl<S: Scalar> ConnectionTable<S> {
    pub fn new(alg: &LieAlgebra4<S>) -> Self {
        let nabla = core::array::from_fn(|i| {
            core::array::from_fn(|j| {
                let (ei, ej) = (Frame::ALL[i], Frame::ALL[j]);
                FrameVector::from_coords(Frame::ALL.map(|ek| koszul_coefficient(alg, ei, ej, ek)))
            })
        });
        Self { nabla }
    }

    /// `∇_{e_i} e_j`
    pub fn get(&self, i: Frame, j: Frame) -> &FrameVector<S> {
        &self.nabla[i.index()][j.index()]
    }

    pub fn table(&self) -> &[[FrameVector<S>; 4]; 4] {
        &self.nabla
    }

    /// `∇_u v` for left-invariant `u`, `v`.
    pub fn apply(&self, u: &FrameVector<S>, v: &FrameVector<S>) -> FrameVector<S> {
        u.expand(|i| v.expand(|j| self.get(i, j).clone()))
    }

    /// `∇_{e_i} e_j − ∇_{e_j} e_i − [e_i, e_j]`, zero for a torsion-free connection.
    pub fn torsion(&self, alg: &LieAlgebra4<S>, i: Frame, j: Frame) -> FrameVector<S> {
        &(self.get(i, j) - self.get(j, i)) - alg.structure(i, j)
    }

    /// `⟨∇_{e_i} e_j, e_k⟩ + ⟨e_j, ∇_{e_i} e_k⟩`, zero for a metric connection.
    pub fn metric_defect(&self, i: Frame, j: Frame, k: Frame) -> S {
        self.get(i, j)[k].clone() + self.get(i, k)[j].clone()
    }
}

pub fn connection_table<S: Scalar>(alg: &LieAlgebra4<S>) -> ConnectionTable<S> {
    ConnectionTable::new(alg)
}

pub fn nabla<S: Scalar>(alg: &LieAlgebra4<S>, u: &FrameVector<S>, v: &FrameVector<S>) -> FrameVector<S> {
    ConnectionTable::new(alg).apply(u, v)
}
