use crate::connection::ConnectionTable;
use crate::lie_algebra::LieAlgebra4;
use crate::scalar::Scalar;

/// An algebra together with its Levi-Civita connection, computed once.
///
/// The foliation and Hermitian quantities are methods on this type; the free
/// functions in those modules build one per call.
#[derive(Clone, Debug)]
pub struct Geometry<'a, S> {
    algebra: &'a LieAlgebra4<S>,
    connection: ConnectionTable<S>,
}

impl<'a, S: Scalar> Geometry<'a, S> {
    pub fn new(algebra: &'a LieAlgebra4<S>) -> Self {
        Self { algebra, connection: ConnectionTable::new(algebra) }
    }

    pub fn algebra(&self) -> &'a LieAlgebra4<S> {
        self.algebra
    }

    pub fn connection(&self) -> &ConnectionTable<S> {
        &self.connection
    }
}
